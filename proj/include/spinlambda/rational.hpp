#pragma once

// Exact rational scalar used throughout the library, backed by GMP.
// All norm comparisons happen on squared norms, which stay rational,
// so nothing in the library ever touches floating point for logic.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace spinlambda {

using Rat = mpq_class;

/// Parses "p", "-p", or "p/q" (base 10). Throws std::invalid_argument on
/// malformed input or a zero denominator.
inline Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t slashes = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '-') {
      if (i != 0 && text[i - 1] != '/')
        throw std::invalid_argument("bad rational literal: " + text);
    } else if (ch == '/') {
      ++slashes;
    } else if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  if (slashes > 1) throw std::invalid_argument("bad rational literal: " + text);
  Rat q(text);  // throws std::invalid_argument on anything GMP rejects
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace spinlambda
