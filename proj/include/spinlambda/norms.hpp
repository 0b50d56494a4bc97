#pragma once

// Lambda norm, spin norm, the intermediate value between them, and the
// equality criterion. All values are squared norms (exact rationals).
// norm_report cross-checks the criterion against the directly computed
// norms on every call; a disagreement raises ConsistencyError because the
// two sides share no code: lambda/spin go through projection and the
// minimum formula, the criterion goes through regularity and dominance.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chamber.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "weyl.hpp"

namespace spinlambda {

struct LambdaResult {
  Rat value_sq;
  WeylElement chamber_witness;  // the chamber w C(g) used for the projection
  Weight projected;
};

struct SpinResult {
  Rat value_sq;
  WeylElement witness;  // first element of the transversal attaining the minimum
  Weight attaining;     // the vector {mu - w rho + rho_c} + rho_c at the witness
};

struct CriterionVerdict {
  bool cond_a = false;
  std::optional<Weight> annihilating_root;  // a g-root orthogonal to mu + 2 rho_c

  bool cond_b = false;
  struct ShiftCheck {
    WeylElement w;                          // element of W1(mu)
    std::optional<Weight> violated_k_root;  // simple k-root with negative pairing, if any
  };
  std::vector<ShiftCheck> shift_checks;     // one per element of W1(mu)
  std::optional<WeylElement> dominant_witness;  // w0 with mu - w0 rho + rho_c dominant

  bool strict = false;  // cond_a or cond_b
};

struct NormReport {
  Weight mu;
  Rat lambda_sq, intermediate_sq, spin_sq;
  LambdaResult lambda;
  SpinResult spin;
  CriterionVerdict verdict;
};

/// ||P_w(mu + 2 rho_c - w rho)||^2 where P_w projects onto the chamber
/// w C(g). Requires mu + 2 rho_c to lie in w C(g); the value is the same
/// for every such w.
inline LambdaResult lambda_norm_with(const Context& ctx, const Weight& mu,
                                     const WeylElement& w) {
  const Weight shifted = mu + ctx.rho_c + ctx.rho_c;
  if (!ctx.is_g_dominant(w.apply_inv(shifted)))
    throw std::invalid_argument("chamber of the given element does not contain mu + 2 rho_c");
  const ChamberSpec chamber = ChamberSpec::transformed(ctx.simple_g, w);
  const Weight v = shifted - w.apply(ctx.rho_g);
  ProjectionResult proj = project(ctx.datum, v, chamber);
  LambdaResult r;
  r.value_sq = ctx.datum.norm_sq(proj.point);
  r.chamber_witness = w;
  r.projected = std::move(proj.point);
  return r;
}

inline LambdaResult lambda_norm(const Context& ctx, const Weight& mu) {
  const auto w1mu = ctx.w1_mu(mu);
  return lambda_norm_with(ctx, mu, w1mu.front());
}

/// The value ||{mu - w rho + rho_c} + rho_c||^2 for each transversal
/// element, in transversal order.
inline std::vector<Rat> spin_terms(const Context& ctx, const Weight& mu) {
  ctx.require_admissible(mu);
  std::vector<Rat> out;
  out.reserve(ctx.w1.size());
  for (const WeylElement& w : ctx.w1) {
    const Weight shifted = mu - w.apply(ctx.rho_g) + ctx.rho_c;
    const Weight dom = make_dominant(ctx.datum, shifted, ctx.simple_k).dominant;
    out.push_back(ctx.datum.norm_sq(dom + ctx.rho_c));
  }
  return out;
}

inline SpinResult spin_norm(const Context& ctx, const Weight& mu) {
  ctx.require_admissible(mu);
  SpinResult best;
  bool first = true;
  for (const WeylElement& w : ctx.w1) {
    const Weight shifted = mu - w.apply(ctx.rho_g) + ctx.rho_c;
    const Weight candidate =
        make_dominant(ctx.datum, shifted, ctx.simple_k).dominant + ctx.rho_c;
    Rat value = ctx.datum.norm_sq(candidate);
    if (first || value < best.value_sq) {
      best.value_sq = std::move(value);
      best.witness = w;
      best.attaining = candidate;
      first = false;
    }
  }
  if (first) throw ConsistencyError("empty transversal");
  return best;
}

/// ||mu + 2 rho_c - w rho||^2 for w in W1(mu); the same for every such w,
/// which is asserted on every call.
inline Rat intermediate(const Context& ctx, const Weight& mu) {
  const auto w1mu = ctx.w1_mu(mu);
  const Weight shifted = mu + ctx.rho_c + ctx.rho_c;
  std::optional<Rat> value;
  for (const WeylElement& w : w1mu) {
    Rat v = ctx.datum.norm_sq(shifted - w.apply(ctx.rho_g));
    if (!value)
      value = std::move(v);
    else if (*value != v)
      throw ConsistencyError("intermediate value differs across chambers containing mu + 2 rho_c");
  }
  return *value;
}

/// Decides strictness of the spin-vs-lambda inequality without computing
/// either norm: (a) mu + 2 rho_c lies on a g-wall, or (b) mu - w rho +
/// rho_c fails compact dominance for every w whose chamber contains
/// mu + 2 rho_c.
inline CriterionVerdict criterion(const Context& ctx, const Weight& mu) {
  CriterionVerdict verdict;
  const Weight shifted = mu + ctx.rho_c + ctx.rho_c;

  for (const Weight& a : ctx.datum.pos_roots_g)
    if (ctx.datum.inner(shifted, a) == 0) {
      verdict.cond_a = true;
      verdict.annihilating_root = a;
      break;
    }

  verdict.cond_b = true;
  for (const WeylElement& w : ctx.w1_mu(mu)) {
    CriterionVerdict::ShiftCheck check;
    check.w = w;
    const Weight t = mu - w.apply(ctx.rho_g) + ctx.rho_c;
    for (const Weight& gamma : ctx.simple_k)
      if (ctx.datum.inner(t, gamma) < 0) {
        check.violated_k_root = gamma;
        break;
      }
    if (!check.violated_k_root) {
      verdict.cond_b = false;
      if (!verdict.dominant_witness) verdict.dominant_witness = w;
    }
    verdict.shift_checks.push_back(std::move(check));
  }

  verdict.strict = verdict.cond_a || verdict.cond_b;
  return verdict;
}

/// Full report: both norms, the intermediate value, and the verdict, with
/// the chain and the criterion cross-checked. A failed cross-check is an
/// internal-consistency error, never a silent result.
inline NormReport norm_report(const Context& ctx, const Weight& mu) {
  NormReport rep;
  rep.mu = mu;
  rep.lambda = lambda_norm(ctx, mu);
  rep.spin = spin_norm(ctx, mu);
  rep.lambda_sq = rep.lambda.value_sq;
  rep.intermediate_sq = intermediate(ctx, mu);
  rep.spin_sq = rep.spin.value_sq;
  rep.verdict = criterion(ctx, mu);

  if (!(rep.lambda_sq <= rep.intermediate_sq && rep.intermediate_sq <= rep.spin_sq))
    throw ConsistencyError("norm chain violated at mu = " + to_string(mu) + ": " +
                           to_string(rep.lambda_sq) + " / " + to_string(rep.intermediate_sq) +
                           " / " + to_string(rep.spin_sq));
  const bool computed_strict = rep.spin_sq > rep.lambda_sq;
  if (computed_strict != rep.verdict.strict)
    throw ConsistencyError("criterion disagrees with computed norms at mu = " + to_string(mu));
  return rep;
}

/// When mu + rho_c - w rho is compactly dominant for some w in W1(mu),
/// the spin norm must coincide with the intermediate value; asserts that
/// and returns true. Returns false (no assertion) when the hypothesis
/// never fires.
inline bool corollary_check(const Context& ctx, const Weight& mu) {
  const auto w1mu = ctx.w1_mu(mu);
  bool fired = false;
  for (const WeylElement& w : w1mu) {
    const Weight t = mu + ctx.rho_c - w.apply(ctx.rho_g);
    if (ctx.is_k_dominant(t)) {
      fired = true;
      break;
    }
  }
  if (!fired) return false;
  const Rat spin = spin_norm(ctx, mu).value_sq;
  const Rat inter = intermediate(ctx, mu);
  if (spin != inter)
    throw ConsistencyError("spin norm differs from the intermediate value at mu = " +
                           to_string(mu) + " despite a dominant shift");
  return true;
}

}  // namespace spinlambda
