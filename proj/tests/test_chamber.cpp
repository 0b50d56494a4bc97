#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace testsupport;

namespace {

// Random point of the cone: nonnegative combination of the dual
// generators plus an arbitrary combination of the orthogonal complement.
Weight random_cone_point(std::mt19937& rng, const Context& ctx,
                         const std::vector<Weight>& funds,
                         const std::vector<Weight>& complement) {
  Weight x(ctx.datum.ambient_dim);
  for (const Weight& f : funds) {
    Rat t = random_rat(rng);
    if (t < 0) t = -t;
    x = x + (t * f);
  }
  for (const Weight& z : complement) x = x + (random_rat(rng) * z);
  return x;
}

}  // namespace

TEST_CASE("projection fixes interior, clips walls, and collapses to the origin",
          "[chamber]") {
  const Context& ctx = preset_context("sp4r");
  const ChamberSpec cone = ChamberSpec::of(ctx.simple_g);

  const auto fixed = project(ctx.datum, wt({1, 0}), cone);
  CHECK(fixed.point == wt({1, 0}));
  CHECK(fixed.active.empty());

  const auto wall = project(ctx.datum, wt({2, -1}), cone);
  CHECK(wall.point == wt({2, 0}));
  REQUIRE(wall.active == std::vector<std::size_t>{1});  // the root (0, 2)
  CHECK(wall.multipliers == std::vector<Rat>{rat("1/2")});

  const auto origin = project(ctx.datum, wt({-1, -2}), cone);
  CHECK(origin.point == wt({0, 0}));
  REQUIRE(origin.active == std::vector<std::size_t>{0, 1});
  CHECK(origin.multipliers == std::vector<Rat>{rat("1"), rat("3/2")});
}

TEST_CASE("exactly one active set is accepted, boundary inputs included", "[chamber]") {
  const Context& ctx = preset_context("sp4r");
  const ChamberSpec cone = ChamberSpec::of(ctx.simple_g);
  for (const Weight& v : {wt({1, 1}), wt({0, 0}), wt({4, 0}), wt({-3, 3})}) {
    const auto r = project(ctx.datum, v, cone);
    CHECK(r.accepted_subsets == 1);
  }
}

TEST_CASE("projection is idempotent and never leaves the cone", "[chamber]") {
  std::mt19937 rng(7);
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    const ChamberSpec cone = ChamberSpec::of(ctx.simple_g);
    for (int trial = 0; trial < 60; ++trial) {
      const Weight v = random_weight(rng, ctx.datum.ambient_dim);
      const Weight p = project_point(ctx.datum, v, cone);
      CHECK(is_dominant(ctx.datum, p, ctx.simple_g));
      CHECK(project_point(ctx.datum, p, cone) == p);
    }
  }
}

TEST_CASE("projection beats random feasible points in exact distance", "[chamber]") {
  std::mt19937 rng(11);
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    const ChamberSpec cone = ChamberSpec::of(ctx.simple_g);
    const auto funds = fundamental_directions(ctx.datum, ctx.simple_g);
    const auto complement = root_span_complement(ctx.datum, ctx.simple_g);
    for (int trial = 0; trial < 40; ++trial) {
      const Weight v = random_weight(rng, ctx.datum.ambient_dim);
      const Weight p = project_point(ctx.datum, v, cone);
      const Rat best = ctx.datum.norm_sq(p - v);
      for (int ref = 0; ref < 40; ++ref) {
        const Weight x = random_cone_point(rng, ctx, funds, complement);
        REQUIRE(is_dominant(ctx.datum, x, ctx.simple_g));
        CHECK(best <= ctx.datum.norm_sq(x - v));
      }
    }
  }
}

TEST_CASE("projection shrinks norms exactly until the input is feasible", "[chamber]") {
  std::mt19937 rng(13);
  const Context& ctx = preset_context("sp4r");
  const ChamberSpec cone = ChamberSpec::of(ctx.simple_g);
  for (int trial = 0; trial < 80; ++trial) {
    const Weight v = random_weight(rng, ctx.datum.ambient_dim);
    const Weight p = project_point(ctx.datum, v, cone);
    const bool inside = is_dominant(ctx.datum, v, ctx.simple_g);
    CHECK(ctx.datum.norm_sq(p) <= ctx.datum.norm_sq(v));
    CHECK((ctx.datum.norm_sq(p) == ctx.datum.norm_sq(v)) == inside);
  }
}

TEST_CASE("components orthogonal to the root span pass through", "[chamber]") {
  const Context& ctx = preset_context("g2s");
  const ChamberSpec cone = ChamberSpec::of(ctx.simple_g);
  const Weight center{rat("1"), rat("1"), rat("1")};  // orthogonal to the x+y+z=0 plane
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Weight v = random_weight(rng, 3);
    const Rat t = random_rat(rng);
    const Weight shifted = project_point(ctx.datum, v + (t * center), cone);
    CHECK(shifted == project_point(ctx.datum, v, cone) + (t * center));
  }
}

TEST_CASE("regularity detects walls", "[chamber]") {
  const Context& ctx = preset_context("sp4r");
  const std::vector<Weight>& roots = ctx.datum.pos_roots_g;
  CHECK_FALSE(is_regular(ctx.datum, wt({4, 0}), roots));  // orthogonal to (0, 2)
  CHECK(is_regular(ctx.datum, wt({3, 1}), roots));
  CHECK_FALSE(is_regular(ctx.datum, wt({0, 0}), roots));
}
