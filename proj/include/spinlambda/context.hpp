#pragma once

// A validated PairDatum together with everything derived from it: simple
// roots, rho and rho_c, both Weyl groups, and the chamber transversal.
// Immutable after build; safe to share across threads.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "pairdatum.hpp"
#include "weyl.hpp"

namespace spinlambda {

struct Context {
  PairDatum datum;
  std::vector<Weight> simple_g, simple_k;
  Weight rho_g, rho_c;
  WeylGroup weyl_g, weyl_k;
  std::vector<WeylElement> w1;

  static Context build(PairDatum d, std::size_t cap = kDefaultWeylCap) {
    ValidationReport rep = validate(d);
    if (!rep.ok) {
      std::string msg = "invalid pair datum";
      if (!d.name.empty()) msg += " '" + d.name + "'";
      for (const std::string& e : rep.errors) msg += "\n  - " + e;
      throw DatumError(msg);
    }
    Context ctx;
    ctx.datum = std::move(d);
    ctx.simple_g = std::move(rep.simple_g);
    ctx.simple_k = std::move(rep.simple_k);
    ctx.rho_g = std::move(rep.rho_g);
    ctx.rho_c = std::move(rep.rho_c);
    ctx.weyl_g = generate(ctx.datum, ctx.simple_g, cap);
    ctx.weyl_k = generate(ctx.datum, ctx.simple_k, cap);
    ctx.w1 = compute_w1(ctx.datum, ctx.weyl_g, ctx.rho_g, ctx.datum.pos_roots_k);
    return ctx;
  }

  bool is_g_dominant(const Weight& v) const { return is_dominant(datum, v, simple_g); }
  bool is_k_dominant(const Weight& v) const { return is_dominant(datum, v, simple_k); }

  /// Rational coordinates of mu in the lattice basis, or nullopt when mu
  /// lies outside the basis span.
  std::optional<std::vector<Rat>> lattice_coefficients(const Weight& mu) const {
    if (datum.lattice.rank() == 0)
      return mu.is_zero() ? std::optional<std::vector<Rat>>{std::vector<Rat>{}}
                          : std::nullopt;
    const Mat basis = columns(datum.lattice.basis, datum.ambient_dim);
    auto sol = solve(basis, mu.c);
    if (!sol) return std::nullopt;
    // `solve` returns some solution; with an independent basis it is the
    // unique one, but confirm exactly that it reproduces mu.
    Weight back(datum.ambient_dim);
    for (std::size_t j = 0; j < datum.lattice.rank(); ++j)
      back = back + ((*sol)[j] * datum.lattice.basis[j]);
    if (!(back == mu)) return std::nullopt;
    return sol;
  }

  bool satisfies_congruences(const std::vector<long>& coords) const {
    for (const auto& cg : datum.lattice.congruences) {
      long acc = 0;
      for (std::size_t i = 0; i < coords.size(); ++i)
        acc += cg.coeffs[i] * coords[i];
      long r = acc % cg.modulus;
      if (r < 0) r += cg.modulus;
      if (r != 0) return false;
    }
    return true;
  }

  bool in_lattice(const Weight& mu) const {
    const auto coeffs = lattice_coefficients(mu);
    if (!coeffs) return false;
    std::vector<long> ints;
    ints.reserve(coeffs->size());
    for (const Rat& x : *coeffs) {
      if (!is_integer(x)) return false;
      if (!x.get_num().fits_slong_p()) return false;
      ints.push_back(x.get_num().get_si());
    }
    return satisfies_congruences(ints);
  }

  Weight weight_from_lattice(const std::vector<long>& coords) const {
    if (coords.size() != datum.lattice.rank())
      throw std::invalid_argument("expected " + std::to_string(datum.lattice.rank()) +
                                  " lattice coordinates, got " + std::to_string(coords.size()));
    Weight mu(datum.ambient_dim);
    for (std::size_t i = 0; i < coords.size(); ++i)
      mu = mu + (Rat(coords[i]) * datum.lattice.basis[i]);
    return mu;
  }

  /// Throws std::invalid_argument unless mu is an admissible highest
  /// weight: dominant for the compact positive system and a lattice point.
  void require_admissible(const Weight& mu) const {
    if (!is_k_dominant(mu))
      throw std::invalid_argument("weight " + to_string(mu) +
                                  " is not dominant for the compact positive system");
    if (!in_lattice(mu))
      throw std::invalid_argument("weight " + to_string(mu) + " is not a lattice point");
  }

  /// The chambers w C(g) containing mu + 2 rho_c, for admissible mu.
  /// Always a nonempty subset of w1.
  std::vector<WeylElement> w1_mu(const Weight& mu) const {
    require_admissible(mu);
    const Weight shifted = mu + rho_c + rho_c;
    auto out = chambers_containing(datum, weyl_g, shifted, simple_g);
    if (out.empty())
      throw ConsistencyError("no chamber contains " + to_string(shifted));
    return out;
  }
};

}  // namespace spinlambda
