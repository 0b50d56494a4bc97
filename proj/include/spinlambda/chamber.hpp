#pragma once

// Exact orthogonal projection onto closed dominant Weyl chambers, plus
// regularity tests. The chamber is the cone {x : (x, alpha_i) >= 0} over
// the (possibly transformed) simple roots; components of the input
// orthogonal to the root span pass through the projection untouched.

#include <cstddef>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "pairdatum.hpp"
#include "weyl.hpp"

namespace spinlambda {

struct ChamberSpec {
  std::vector<Weight> simple_roots;

  static ChamberSpec of(std::vector<Weight> simple_roots) {
    return ChamberSpec{std::move(simple_roots)};
  }

  /// The translated chamber w C: constraints against the transformed roots.
  static ChamberSpec transformed(const std::vector<Weight>& simple_roots,
                                 const WeylElement& w) {
    ChamberSpec ch;
    ch.simple_roots.reserve(simple_roots.size());
    for (const Weight& a : simple_roots) ch.simple_roots.push_back(w.apply(a));
    return ch;
  }
};

struct ProjectionResult {
  Weight point;
  std::vector<std::size_t> active;   // indices of constraints active with positive multiplier
  std::vector<Rat> multipliers;      // aligned with `active`, all > 0
  std::size_t accepted_subsets = 0;  // always exactly 1
};

/// Nearest point of the chamber cone to v in the Gram metric, by
/// enumeration of active sets: for each subset S of the simple roots solve
/// x = v + sum_{i in S} c_i alpha_i with (x, alpha_i) = 0 on S, and accept
/// when every c_i > 0 and x satisfies the remaining constraints. The
/// Karush-Kuhn-Tucker conditions with strict multipliers are met by
/// exactly one subset, which makes the search deterministic and the
/// result exact.
inline ProjectionResult project(const PairDatum& d, const Weight& v,
                                const ChamberSpec& chamber) {
  const auto& roots = chamber.simple_roots;
  const std::size_t m = roots.size();
  if (m > 20) throw std::invalid_argument("projection limited to at most 20 constraints");
  if (!linearly_independent(roots, d.ambient_dim))
    throw std::invalid_argument("chamber simple roots must be linearly independent");

  Mat gram_rr(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gram_rr.at(i, j) = d.inner(roots[i], roots[j]);
  std::vector<Rat> gv(m);
  for (std::size_t i = 0; i < m; ++i) gv[i] = d.inner(v, roots[i]);

  ProjectionResult best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);

    std::vector<Rat> mult(subset.size());
    if (!subset.empty()) {
      Mat sys(subset.size(), subset.size());
      std::vector<Rat> rhs(subset.size());
      for (std::size_t a = 0; a < subset.size(); ++a) {
        rhs[a] = -gv[subset[a]];
        for (std::size_t b = 0; b < subset.size(); ++b)
          sys.at(a, b) = gram_rr.at(subset[a], subset[b]);
      }
      const auto sol = solve(sys, rhs);
      if (!sol) throw ConsistencyError("singular Gram submatrix in projection");
      mult = *sol;
    }

    bool ok = true;
    for (const Rat& c : mult)
      if (c <= 0) { ok = false; break; }
    if (!ok) continue;

    Weight x = v;
    for (std::size_t a = 0; a < subset.size(); ++a) x = x + (mult[a] * roots[subset[a]]);
    for (std::size_t j = 0; j < m && ok; ++j) {
      bool in_subset = (mask & (std::size_t{1} << j)) != 0;
      if (!in_subset && d.inner(x, roots[j]) < 0) ok = false;
    }
    if (!ok) continue;

    if (best.accepted_subsets == 0) {
      best.point = std::move(x);
      best.active = subset;
      best.multipliers = std::move(mult);
    }
    ++best.accepted_subsets;
  }
  if (best.accepted_subsets != 1)
    throw ConsistencyError("projection accepted " + std::to_string(best.accepted_subsets) +
                           " active sets; expected exactly one");
  return best;
}

inline Weight project_point(const PairDatum& d, const Weight& v, const ChamberSpec& ch) {
  return project(d, v, ch).point;
}

/// True iff (v, alpha) != 0 for every listed root.
inline bool is_regular(const PairDatum& d, const Weight& v,
                       const std::vector<Weight>& roots) {
  for (const Weight& a : roots)
    if (d.inner(v, a) == 0) return false;
  return true;
}

/// Dual generators of the chamber cone within the span of the simple
/// roots: f_i = sum_k c_k alpha_k with (f_i, alpha_j) = delta_ij.
/// Nonnegative combinations of these, plus anything from
/// root_span_complement, enumerate the cone.
inline std::vector<Weight> fundamental_directions(const PairDatum& d,
                                                  const std::vector<Weight>& simple_roots) {
  const std::size_t m = simple_roots.size();
  std::vector<Weight> out;
  if (m == 0) return out;
  Mat gram_rr(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      gram_rr.at(i, j) = d.inner(simple_roots[i], simple_roots[j]);
  const auto inv = inverse(gram_rr);
  if (!inv) throw std::invalid_argument("simple roots must be linearly independent");
  for (std::size_t i = 0; i < m; ++i) {
    Weight f(d.ambient_dim);
    for (std::size_t k = 0; k < m; ++k) f = f + (inv->at(k, i) * simple_roots[k]);
    out.push_back(std::move(f));
  }
  return out;
}

/// Basis of the subspace orthogonal (in the Gram form) to all given roots.
inline std::vector<Weight> root_span_complement(const PairDatum& d,
                                                const std::vector<Weight>& roots) {
  const std::size_t n = d.ambient_dim;
  if (roots.empty()) {
    std::vector<Weight> basis;
    for (std::size_t i = 0; i < n; ++i) {
      Weight e(n);
      e[i] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  Mat constraints(roots.size(), n);
  const Mat& g = d.gram_or_identity();
  for (std::size_t r = 0; r < roots.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      Rat sum = 0;
      for (std::size_t k = 0; k < n; ++k) sum += roots[r][k] * g.at(k, j);
      constraints.at(r, j) = sum;
    }
  return nullspace(constraints);
}

}  // namespace spinlambda
