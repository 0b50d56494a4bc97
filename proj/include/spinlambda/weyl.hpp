#pragma once

// Weyl groups as explicit rational matrix groups, generated by orbit
// closure from simple reflections. Elements carry a generating word as a
// witness; identity of an element is its matrix.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "pairdatum.hpp"

namespace spinlambda {

inline constexpr std::size_t kDefaultWeylCap = 10368;

/// Orthogonal (with respect to the Gram form) rational matrix together
/// with a word in simple reflections that produces it. The word indices
/// refer to the generator list of the group that produced the element;
/// composing the reflections left to right reproduces `mat`.
struct WeylElement {
  Mat mat;
  Mat inv;
  std::vector<int> word;

  Weight apply(const Weight& v) const { return mat.apply(v); }
  Weight apply_inv(const Weight& v) const { return inv.apply(v); }
  bool is_identity() const { return mat == Mat::identity(mat.rows); }
};

inline std::string word_string(const WeylElement& w) {
  if (w.word.empty()) return "e";
  std::string s;
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i) s += ' ';
    s += 's';
    s += std::to_string(w.word[i]);
  }
  return s;
}

/// Orders elements by word length, then lexicographically by word.
inline bool word_order_less(const WeylElement& a, const WeylElement& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  return a.word < b.word;
}

/// Matrix of the reflection across the hyperplane of alpha:
/// v -> v - <v, alpha^vee> alpha.
inline Mat reflection_matrix(const PairDatum& d, const Weight& alpha) {
  const Rat len = d.norm_sq(alpha);
  if (len == 0) throw std::invalid_argument("reflection across the zero vector");
  const std::size_t n = d.ambient_dim;
  const Mat& g = d.gram_or_identity();
  Weight galpha(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat sum = 0;
    for (std::size_t j = 0; j < n; ++j) sum += g.at(i, j) * alpha[j];
    galpha[i] = sum;
  }
  Mat m = Mat::identity(n);
  const Rat scale = Rat(2) / len;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) -= scale * alpha[i] * galpha[j];
  return m;
}

struct WeylGroup {
  std::vector<Weight> simple_roots;    // the generators
  std::vector<WeylElement> elements;   // breadth-first order; identity first

  std::size_t order() const { return elements.size(); }
  const WeylElement& identity() const { return elements.front(); }

  std::optional<std::size_t> find(const Mat& m) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i].mat == m) return i;
    return std::nullopt;
  }
};

namespace detail {

struct MatLess {
  bool operator()(const Mat& a, const Mat& b) const { return lex_less(a, b); }
};

}  // namespace detail

/// Generates the group of the given simple reflections by breadth-first
/// orbit closure. Throws CapError once more than `cap` elements appear.
inline WeylGroup generate(const PairDatum& d, const std::vector<Weight>& simple_roots,
                          std::size_t cap = kDefaultWeylCap) {
  if (!linearly_independent(simple_roots, d.ambient_dim))
    throw std::invalid_argument("generators must be linearly independent");
  WeylGroup g;
  g.simple_roots = simple_roots;
  std::vector<Mat> refl;
  refl.reserve(simple_roots.size());
  for (const Weight& a : simple_roots) refl.push_back(reflection_matrix(d, a));

  WeylElement id{Mat::identity(d.ambient_dim), Mat::identity(d.ambient_dim), {}};
  g.elements.push_back(id);
  std::map<Mat, std::size_t, detail::MatLess> seen;
  seen.emplace(id.mat, 0);

  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (int i = 0; i < static_cast<int>(refl.size()); ++i) {
      Mat m = g.elements[head].mat * refl[i];
      if (seen.count(m)) continue;
      if (g.elements.size() + 1 > cap)
        throw CapError("Weyl group enumeration exceeded cap " + std::to_string(cap));
      WeylElement e;
      e.inv = refl[i] * g.elements[head].inv;  // reflections are involutions
      e.word = g.elements[head].word;
      e.word.push_back(i);
      e.mat = std::move(m);
      seen.emplace(e.mat, g.elements.size());
      g.elements.push_back(std::move(e));
    }
  }
  return g;
}

struct DominantResult {
  Weight dominant;       // the unique dominant conjugate
  WeylElement witness;   // witness.apply(input) == dominant
};

/// Conjugates v into the closed dominant chamber of the positive system
/// whose simple roots are given. The dominant representative is unique;
/// the witness element need not be.
inline DominantResult make_dominant(const PairDatum& d, const Weight& v,
                                    const std::vector<Weight>& simple_roots) {
  const std::size_t n = d.ambient_dim;
  DominantResult r{v, WeylElement{Mat::identity(n), Mat::identity(n), {}}};
  if (simple_roots.empty()) return r;

  std::vector<Mat> refl;
  refl.reserve(simple_roots.size());
  for (const Weight& a : simple_roots) refl.push_back(reflection_matrix(d, a));

  std::vector<int> applied;
  constexpr std::size_t kMaxSteps = 1u << 22;
  for (std::size_t step = 0;; ++step) {
    if (step > kMaxSteps)
      throw ConsistencyError("dominant conjugation did not terminate (invalid root data?)");
    bool moved = false;
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
      if (d.inner(r.dominant, simple_roots[i]) < 0) {
        r.dominant = refl[i].apply(r.dominant);
        r.witness.mat = refl[i] * r.witness.mat;
        r.witness.inv = r.witness.inv * refl[i];
        applied.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  // Word convention: composing reflections left to right gives the matrix,
  // so the last reflection applied comes first.
  r.witness.word.assign(applied.rbegin(), applied.rend());
  return r;
}

/// The transversal {w : w C(g) lies inside C(k)}, computed as the elements
/// whose image of rho_g pairs nonnegatively with every positive k-root
/// (k-walls are g-walls under the equal-rank invariant, and w rho_g never
/// lands on a wall). Deterministic order: word length, then word.
inline std::vector<WeylElement> compute_w1(const PairDatum& d, const WeylGroup& weyl_g,
                                           const Weight& rho_g,
                                           const std::vector<Weight>& pos_roots_k) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : weyl_g.elements)
    if (is_dominant(d, w.apply(rho_g), pos_roots_k)) out.push_back(w);
  std::sort(out.begin(), out.end(), word_order_less);
  return out;
}

/// The elements w whose chamber w C(g) contains the given weight, i.e.
/// w^{-1} v is dominant for the g positive system. Same deterministic
/// order as compute_w1.
inline std::vector<WeylElement> chambers_containing(const PairDatum& d,
                                                    const WeylGroup& weyl_g,
                                                    const Weight& v,
                                                    const std::vector<Weight>& simple_g) {
  std::vector<WeylElement> out;
  for (const WeylElement& w : weyl_g.elements)
    if (is_dominant(d, w.apply_inv(v), simple_g)) out.push_back(w);
  std::sort(out.begin(), out.end(), word_order_less);
  return out;
}

}  // namespace spinlambda
