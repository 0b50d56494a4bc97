#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace testsupport;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("presets build with the documented root data", "[pairdatum]") {
  const PairDatum sp4r = build_preset("sp4r");
  CHECK(sp4r.pos_roots_g.size() == 4);
  CHECK(sp4r.pos_roots_k.size() == 1);

  const PairDatum sl2r = build_preset("sl2r");
  CHECK(sl2r.pos_roots_g == std::vector<Weight>{wt({2})});
  CHECK(sl2r.pos_roots_k.empty());

  const PairDatum g2s = build_preset("g2s");
  CHECK(g2s.pos_roots_k.back() == wt({-1, -1, 2}));  // 3a1 + 2a2
  CHECK(g2s.lattice.basis.size() == 2);
  CHECK(g2s.lattice.congruences.size() == 1);

  CHECK_THROWS_AS(build_preset("so8"), std::invalid_argument);
}

TEST_CASE("validate reports derived data for presets", "[pairdatum]") {
  const auto rep = validate(build_preset("sp4r"));
  REQUIRE(rep.ok);
  CHECK(rep.simple_g == std::vector<Weight>{wt({1, -1}), wt({0, 2})});
  CHECK(rep.simple_k == std::vector<Weight>{wt({1, -1})});
  CHECK(rep.rho_g == wt({2, 1}));
  CHECK(rep.rho_c == Weight{rat("1/2"), rat("-1/2")});

  const auto sl2 = validate(build_preset("sl2r"));
  REQUIRE(sl2.ok);
  CHECK(sl2.rho_c == wt({0}));
  CHECK(sl2.simple_k.empty());

  const auto g2 = validate(build_preset("g2s"));
  REQUIRE(g2.ok);
  CHECK(g2.rho_g == wt({-1, -2, 3}));
  CHECK(g2.rho_c == wt({0, -1, 1}));
}

TEST_CASE("validate rejects a k-root outside the g system", "[pairdatum]") {
  PairDatum d = build_preset("sp4r");
  d.pos_roots_k = {wt({1, 0})};
  const auto rep = validate(d);
  REQUIRE_FALSE(rep.ok);
  REQUIRE_FALSE(rep.errors.empty());
  CHECK_THAT(rep.errors.front(), ContainsSubstring("not a g-root"));
}

TEST_CASE("validate rejects structurally broken root data", "[pairdatum]") {
  SECTION("not closed under reflections") {
    PairDatum d;
    d.ambient_dim = 2;
    d.pos_roots_g = {wt({1, -1}), wt({2, 0})};
    const auto rep = validate(d);
    REQUIRE_FALSE(rep.ok);
    CHECK_THAT(rep.errors.front(), ContainsSubstring("not closed under reflections"));
  }
  SECTION("not reduced") {
    PairDatum d;
    d.ambient_dim = 1;
    d.pos_roots_g = {wt({1}), wt({2})};
    d.lattice.basis = {wt({1})};
    const auto rep = validate(d);
    REQUIRE_FALSE(rep.ok);
    CHECK_THAT(rep.errors.front(), ContainsSubstring("not reduced"));
  }
  SECTION("gram not symmetric") {
    PairDatum d = build_preset("sp4r");
    d.gram = Mat::identity(2);
    d.gram.at(0, 1) = 1;
    const auto rep = validate(d);
    REQUIRE_FALSE(rep.ok);
    CHECK_THAT(rep.errors.front(), ContainsSubstring("not symmetric"));
  }
  SECTION("gram not positive-definite") {
    PairDatum d = build_preset("sl2r");
    d.gram = Mat(1, 1);
    d.gram.at(0, 0) = -1;
    const auto rep = validate(d);
    REQUIRE_FALSE(rep.ok);
    CHECK_THAT(rep.errors.front(), ContainsSubstring("positive-definite"));
  }
  SECTION("dependent lattice basis") {
    PairDatum d = build_preset("sp4r");
    d.lattice.basis = {wt({1, 0}), wt({2, 0})};
    const auto rep = validate(d);
    REQUIRE_FALSE(rep.ok);
    CHECK_THAT(rep.errors.front(), ContainsSubstring("linearly dependent"));
  }
  SECTION("zero modulus") {
    PairDatum d = build_preset("sp4r");
    d.lattice.congruences = {{{1, 1}, 0}};
    const auto rep = validate(d);
    REQUIRE_FALSE(rep.ok);
    CHECK_THAT(rep.errors.front(), ContainsSubstring("modulus"));
  }
}

TEST_CASE("rho halves the root sum", "[pairdatum]") {
  const PairDatum d = build_preset("sp4r");
  CHECK(rho(d.pos_roots_g, 2) == wt({2, 1}));
  CHECK(rho(d.pos_roots_k, 2) == Weight{rat("1/2"), rat("-1/2")});
  CHECK(rho({}, 2) == wt({0, 0}));
}

TEST_CASE("pairing returns both flavors and rejects zero roots", "[pairdatum]") {
  const PairDatum d = build_preset("sp4r");
  const auto p = pairing(d, wt({2, -1}), wt({0, 2}));
  CHECK(p.bilinear == -2);
  CHECK(p.coroot == -1);

  const Weight alpha = wt({1, 1});
  CHECK(pairing(d, alpha, alpha).coroot == 2);
  CHECK(pairing(d, wt({0, 0}), alpha).bilinear == 0);
  CHECK_THROWS_AS(pairing(d, alpha, wt({0, 0})), std::invalid_argument);
}

TEST_CASE("reflections permute the full root system", "[pairdatum]") {
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    std::vector<Weight> all = ctx.datum.pos_roots_g;
    for (const Weight& r : ctx.datum.pos_roots_g) all.push_back(-r);
    auto in_system = [&](const Weight& v) {
      return std::find(all.begin(), all.end(), v) != all.end();
    };
    for (const Weight& alpha : all)
      for (const Weight& beta : all) {
        const Weight image = beta - (ctx.datum.coroot_pairing(beta, alpha) * alpha);
        INFO(name << ": s_" << alpha << " applied to " << beta);
        REQUIRE(in_system(image));
      }
  }
}

TEST_CASE("rho pairs to one against every simple coroot", "[pairdatum]") {
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    for (const Weight& a : ctx.simple_g)
      CHECK(ctx.datum.coroot_pairing(ctx.rho_g, a) == 1);
    for (const Weight& g : ctx.simple_k)
      CHECK(ctx.datum.coroot_pairing(ctx.rho_c, g) == 1);
  }
}

TEST_CASE("positive roots decompose over simple roots with nonnegative integers",
          "[pairdatum]") {
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    const Mat cols = columns(ctx.simple_g, ctx.datum.ambient_dim);
    for (const Weight& r : ctx.datum.pos_roots_g) {
      const auto sol = solve(cols, r.c);
      REQUIRE(sol.has_value());
      for (const Rat& x : *sol) {
        CHECK(is_integer(x));
        CHECK(x >= 0);
      }
    }
  }
}
