#pragma once

// Root-system pair data: the positive roots of g and of k inside a common
// rational ambient space with an explicit Gram matrix, plus the lattice of
// admissible highest weights. Everything downstream computes over a
// validated PairDatum and never mutates it.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace spinlambda {

/// Describes which weights are admissible highest weights: integer
/// combinations of `basis` whose coordinate vector satisfies every
/// congruence sum(coeffs_i * c_i) = 0 (mod modulus).
struct LatticeSpec {
  struct Congruence {
    std::vector<long> coeffs;
    long modulus = 1;
  };
  std::vector<Weight> basis;
  std::vector<Congruence> congruences;

  std::size_t rank() const { return basis.size(); }
};

struct PairDatum {
  std::size_t ambient_dim = 0;
  Mat gram;  // inner product; identity when left empty
  std::vector<Weight> pos_roots_g;
  std::vector<Weight> pos_roots_k;
  LatticeSpec lattice;
  std::string name;

  const Mat& gram_or_identity() const {
    if (gram.rows == 0) {
      static thread_local Mat cache;
      if (cache.rows != ambient_dim) cache = Mat::identity(ambient_dim);
      return cache;
    }
    return gram;
  }

  Rat inner(const Weight& u, const Weight& v) const {
    const Mat& g = gram_or_identity();
    if (u.size() != ambient_dim || v.size() != ambient_dim)
      throw std::invalid_argument("weight dimension does not match ambient space");
    Rat sum = 0;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < ambient_dim; ++j) sum += u[i] * g.at(i, j) * v[j];
    }
    return sum;
  }

  Rat norm_sq(const Weight& v) const { return inner(v, v); }

  /// <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha). Throws on zero alpha.
  Rat coroot_pairing(const Weight& v, const Weight& alpha) const {
    const Rat len = norm_sq(alpha);
    if (len == 0) throw std::invalid_argument("coroot pairing against the zero vector");
    return Rat(2) * inner(v, alpha) / len;
  }
};

/// Both pairing flavors of a weight against a root.
struct Pairing {
  Rat bilinear;  // (v, alpha)
  Rat coroot;    // <v, alpha^vee>
};

inline Pairing pairing(const PairDatum& d, const Weight& v, const Weight& alpha) {
  const Rat len = d.norm_sq(alpha);
  if (len == 0) throw std::invalid_argument("pairing against the zero vector");
  const Rat b = d.inner(v, alpha);
  return Pairing{b, Rat(2) * b / len};
}

/// Half the sum of the given roots; the zero vector for an empty list.
inline Weight rho(const std::vector<Weight>& roots, std::size_t dim) {
  Weight sum(dim);
  for (const Weight& r : roots) sum = sum + r;
  return Rat(1, 2) * sum;
}

/// True iff (v, alpha) >= 0 for every listed root.
inline bool is_dominant(const PairDatum& d, const Weight& v,
                        const std::vector<Weight>& roots) {
  for (const Weight& a : roots)
    if (d.inner(v, a) < 0) return false;
  return true;
}

namespace detail {

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const { return lex_less(a, b); }
};

using WeightSet = std::set<Weight, WeightLess>;

inline WeightSet weight_set(const std::vector<Weight>& ws) {
  return WeightSet(ws.begin(), ws.end());
}

}  // namespace detail

/// Positive roots not expressible as a sum of two positive roots,
/// in their order of appearance.
inline std::vector<Weight> extract_simple_roots(const std::vector<Weight>& pos) {
  const auto set = detail::weight_set(pos);
  std::vector<Weight> simple;
  for (const Weight& a : pos) {
    bool decomposable = false;
    for (const Weight& b : pos) {
      if (set.count(a - b) && !(a - b).is_zero()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  return simple;
}

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> errors;
  // Derived data, filled only when ok.
  std::vector<Weight> simple_g, simple_k;
  Weight rho_g, rho_c;
};

namespace detail {

inline Weight reflect(const PairDatum& d, const Weight& alpha, const Weight& v) {
  return v - (d.coroot_pairing(v, alpha) * alpha);
}

/// Checks that `pos` is a positive system: indecomposables are linearly
/// independent and every member is a nonnegative integer combination of
/// them. Appends errors; returns the simple roots when clean.
inline std::optional<std::vector<Weight>> check_positive_system(
    const PairDatum& d, const std::vector<Weight>& pos, const std::string& side,
    std::vector<std::string>& errors) {
  if (pos.empty()) return std::vector<Weight>{};
  std::vector<Weight> simple = extract_simple_roots(pos);
  if (!linearly_independent(simple, d.ambient_dim)) {
    errors.push_back(side + ": simple roots are linearly dependent (not a positive system)");
    return std::nullopt;
  }
  const Mat cols = columns(simple, d.ambient_dim);
  for (const Weight& r : pos) {
    const auto sol = solve(cols, r.c);
    bool good = sol.has_value();
    if (good)
      for (const Rat& x : *sol)
        if (x < 0 || !is_integer(x)) good = false;
    if (!good) {
      errors.push_back(side + ": root " + to_string(r) +
                       " is not a nonnegative integer combination of simple roots");
      return std::nullopt;
    }
  }
  return simple;
}

}  // namespace detail

/// Checks every PairDatum invariant. On success the report carries the
/// derived data (simple roots of both systems, rho, rho_c).
inline ValidationReport validate(const PairDatum& d) {
  ValidationReport rep;
  auto& errors = rep.errors;

  if (d.ambient_dim == 0) {
    errors.push_back("ambient_dim must be positive");
    return rep;
  }

  // Gram: shape, symmetry, positive-definiteness via leading principal minors.
  const Mat& g = d.gram_or_identity();
  if (g.rows != d.ambient_dim || g.cols != d.ambient_dim) {
    errors.push_back("gram matrix shape does not match ambient_dim");
    return rep;
  }
  for (std::size_t i = 0; i < g.rows; ++i)
    for (std::size_t j = i + 1; j < g.cols; ++j)
      if (g.at(i, j) != g.at(j, i)) {
        errors.push_back("gram matrix is not symmetric");
        i = g.rows;
        break;
      }
  for (std::size_t k = 1; k <= g.rows && errors.empty(); ++k) {
    Mat minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = g.at(i, j);
    if (det(std::move(minor)) <= 0) {
      errors.push_back("gram matrix is not positive-definite (leading principal minor " +
                       std::to_string(k) + " is not positive)");
    }
  }
  if (!errors.empty()) return rep;

  // Root lists: arity, nonzero, no duplicates, pos and -pos disjoint.
  for (const Weight& r : d.pos_roots_g) {
    if (r.size() != d.ambient_dim) {
      errors.push_back("root " + to_string(r) + " has wrong dimension");
      return rep;
    }
    if (r.is_zero()) errors.push_back("zero vector listed as a positive root");
  }
  auto pos_set = detail::weight_set(d.pos_roots_g);
  if (pos_set.size() != d.pos_roots_g.size())
    errors.push_back("duplicate roots in pos_roots_g");
  for (const Weight& r : d.pos_roots_g)
    if (pos_set.count(-r))
      errors.push_back("pos_roots_g contains both " + to_string(r) + " and its negative");
  if (!errors.empty()) return rep;

  // Full system: reduced and closed under its own reflections. Iteration
  // follows the input order so diagnostics name the user's roots first.
  std::vector<Weight> all_roots = d.pos_roots_g;
  for (const Weight& r : d.pos_roots_g) all_roots.push_back(-r);
  detail::WeightSet all(all_roots.begin(), all_roots.end());
  for (const Weight& a : all_roots)
    for (const Weight& b : all_roots) {
      if (a == Rat(2) * b) {
        errors.push_back("system is not reduced: " + to_string(a) + " is twice " + to_string(b));
        break;
      }
    }
  if (!errors.empty()) return rep;
  for (const Weight& a : all_roots) {
    for (const Weight& b : all_roots) {
      if (!all.count(detail::reflect(d, a, b))) {
        errors.push_back("not closed under reflections: reflecting " + to_string(b) +
                         " across " + to_string(a) + " leaves the system");
        break;
      }
    }
    if (!errors.empty()) break;
  }
  if (!errors.empty()) return rep;

  // Positive system structure on the g side.
  auto simple_g = detail::check_positive_system(d, d.pos_roots_g, "pos_roots_g", errors);
  if (!simple_g) return rep;

  // k side: subset of the g side, and a root system in its own right so
  // that conjugation into the k-dominant chamber is well defined.
  for (const Weight& r : d.pos_roots_k) {
    if (r.size() != d.ambient_dim) {
      errors.push_back("k-root " + to_string(r) + " has wrong dimension");
      return rep;
    }
    if (!pos_set.count(r))
      errors.push_back("k-root " + to_string(r) + " is not a g-root");
  }
  if (detail::weight_set(d.pos_roots_k).size() != d.pos_roots_k.size())
    errors.push_back("duplicate roots in pos_roots_k");
  if (!errors.empty()) return rep;
  {
    std::vector<Weight> all_k_roots = d.pos_roots_k;
    for (const Weight& r : d.pos_roots_k) all_k_roots.push_back(-r);
    const detail::WeightSet all_k(all_k_roots.begin(), all_k_roots.end());
    for (const Weight& a : all_k_roots) {
      for (const Weight& b : all_k_roots)
        if (!all_k.count(detail::reflect(d, a, b))) {
          errors.push_back("k-system not closed under reflections: reflecting " +
                           to_string(b) + " across " + to_string(a) + " leaves it");
          break;
        }
      if (!errors.empty()) break;
    }
  }
  if (!errors.empty()) return rep;
  auto simple_k = detail::check_positive_system(d, d.pos_roots_k, "pos_roots_k", errors);
  if (!simple_k) return rep;

  // Lattice.
  for (const Weight& b : d.lattice.basis)
    if (b.size() != d.ambient_dim) {
      errors.push_back("lattice basis vector " + to_string(b) + " has wrong dimension");
      return rep;
    }
  if (!linearly_independent(d.lattice.basis, d.ambient_dim))
    errors.push_back("lattice basis vectors are linearly dependent");
  for (const auto& cg : d.lattice.congruences) {
    if (cg.modulus < 1) errors.push_back("congruence modulus must be >= 1");
    if (cg.coeffs.size() != d.lattice.rank())
      errors.push_back("congruence coefficient arity does not match lattice rank");
  }
  if (!errors.empty()) return rep;

  rep.ok = true;
  rep.simple_g = std::move(*simple_g);
  rep.simple_k = std::move(*simple_k);
  rep.rho_g = rho(d.pos_roots_g, d.ambient_dim);
  rep.rho_c = rho(d.pos_roots_k, d.ambient_dim);
  return rep;
}

namespace detail {

inline Weight wt(std::initializer_list<long> xs) {
  Weight w;
  for (long x : xs) w.c.emplace_back(x);
  return w;
}

}  // namespace detail

/// Built-in pair data. Names: sl2r, sp4r, g2s.
inline PairDatum build_preset(const std::string& name) {
  using detail::wt;
  PairDatum d;
  d.name = name;
  if (name == "sl2r") {
    d.ambient_dim = 1;
    d.pos_roots_g = {wt({2})};
    d.pos_roots_k = {};
    d.lattice.basis = {wt({1})};
    return d;
  }
  if (name == "sp4r") {
    d.ambient_dim = 2;
    d.pos_roots_g = {wt({1, -1}), wt({2, 0}), wt({0, 2}), wt({1, 1})};
    d.pos_roots_k = {wt({1, -1})};
    d.lattice.basis = {wt({1, 0}), wt({0, 1})};
    return d;
  }
  if (name == "g2s") {
    // Split G2 in the plane x+y+z = 0. Short simple root a1, long a2;
    // the compact system is the A1 x A1 pair {a1, 3a1+2a2}.
    d.ambient_dim = 3;
    const Weight a1 = wt({1, -1, 0});
    const Weight a2 = wt({-2, 1, 1});
    d.pos_roots_g = {a1, a2, a1 + a2, a1 + a1 + a2, a1 + a1 + a1 + a2,
                     a1 + a1 + a1 + a2 + a2};
    const Weight g1 = a1;
    const Weight g2 = d.pos_roots_g.back();  // 3a1 + 2a2 = (-1,-1,2)
    d.pos_roots_k = {g1, g2};
    d.lattice.basis = {Rat(1, 2) * g1, Rat(1, 2) * g2};
    d.lattice.congruences = {{{1, 1}, 2}};
    return d;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace spinlambda
