#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace testsupport;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("group generation hits the classical orders", "[weyl]") {
  CHECK(preset_context("sl2r").weyl_g.order() == 2);
  CHECK(preset_context("sp4r").weyl_g.order() == 8);
  CHECK(preset_context("g2s").weyl_g.order() == 12);
  CHECK(preset_context("sp4r").weyl_k.order() == 2);
  CHECK(preset_context("g2s").weyl_k.order() == 4);

  const PairDatum d = build_preset("sp4r");
  const WeylGroup trivial = generate(d, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.identity().is_identity());
}

TEST_CASE("generation stops at the cap", "[weyl]") {
  const PairDatum d = build_preset("sp4r");
  const auto rep = validate(d);
  REQUIRE(rep.ok);
  CHECK_THROWS_AS(generate(d, rep.simple_g, 5), CapError);
  CHECK_THROWS_WITH(generate(d, rep.simple_g, 5), ContainsSubstring("5"));
}

TEST_CASE("elements preserve the form, permute the roots, and match their words",
          "[weyl]") {
  for (const char* name : {"sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    const Mat& gram = ctx.datum.gram_or_identity();
    std::vector<Weight> all = ctx.datum.pos_roots_g;
    for (const Weight& r : ctx.datum.pos_roots_g) all.push_back(-r);
    std::vector<Mat> refl;
    for (const Weight& a : ctx.simple_g) refl.push_back(reflection_matrix(ctx.datum, a));

    for (const WeylElement& w : ctx.weyl_g.elements) {
      CHECK(w.mat.transposed() * gram * w.mat == gram);
      CHECK(w.mat * w.inv == Mat::identity(ctx.datum.ambient_dim));

      Mat from_word = Mat::identity(ctx.datum.ambient_dim);
      for (int i : w.word) from_word = from_word * refl[static_cast<std::size_t>(i)];
      CHECK(from_word == w.mat);

      for (const Weight& r : all) {
        const Weight image = w.apply(r);
        CHECK(std::find(all.begin(), all.end(), image) != all.end());
      }
    }
  }
}

TEST_CASE("the group is closed and contains the identity", "[weyl]") {
  const Context& ctx = preset_context("sp4r");
  const WeylGroup& g = ctx.weyl_g;
  CHECK(g.identity().is_identity());
  for (const WeylElement& a : g.elements)
    for (const WeylElement& b : g.elements)
      CHECK(g.find(a.mat * b.mat).has_value());
}

TEST_CASE("make_dominant conjugates into the chamber with a valid witness", "[weyl]") {
  const Context& sp4r = preset_context("sp4r");

  SECTION("single swap on the compact side") {
    const Weight v{rat("-1/2"), rat("1/2")};
    const auto r = make_dominant(sp4r.datum, v, sp4r.simple_k);
    CHECK(r.dominant == Weight{rat("1/2"), rat("-1/2")});
    CHECK(r.witness.apply(v) == r.dominant);
    CHECK(r.witness.word == std::vector<int>{0});
  }
  SECTION("already dominant weights are fixed by the identity") {
    const Weight v = wt({3, 1});
    const auto r = make_dominant(sp4r.datum, v, sp4r.simple_g);
    CHECK(r.dominant == v);
    CHECK(r.witness.is_identity());
    CHECK(r.witness.word.empty());
  }
  SECTION("empty positive system fixes everything") {
    const Context& sl2r = preset_context("sl2r");
    const Weight v = wt({-7});
    const auto r = make_dominant(sl2r.datum, v, sl2r.simple_k);
    CHECK(r.dominant == v);
    CHECK(r.witness.is_identity());
  }
}

TEST_CASE("make_dominant agrees with brute force and is orbit-invariant", "[weyl]") {
  std::mt19937 rng(2024);
  for (const char* name : {"sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    for (int trial = 0; trial < 50; ++trial) {
      const Weight v = random_weight(rng, ctx.datum.ambient_dim);
      const auto r = make_dominant(ctx.datum, v, ctx.simple_g);
      CHECK(is_dominant(ctx.datum, r.dominant, ctx.datum.pos_roots_g));
      CHECK(r.witness.apply(v) == r.dominant);
      CHECK(r.dominant == oracle_dominant_image(ctx, ctx.weyl_g, v, ctx.datum.pos_roots_g));
      for (const WeylElement& u : ctx.weyl_g.elements)
        CHECK(make_dominant(ctx.datum, u.apply(v), ctx.simple_g).dominant == r.dominant);
    }
  }
}

TEST_CASE("the transversal has the documented size and images", "[weyl]") {
  CHECK(preset_context("sl2r").w1.size() == 2);
  CHECK(preset_context("g2s").w1.size() == 3);

  const Context& sp4r = preset_context("sp4r");
  REQUIRE(sp4r.w1.size() == 4);
  const std::vector<Weight> images = {wt({2, 1}), wt({2, -1}), wt({1, -2}), wt({-1, -2})};
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(sp4r.w1[i].apply(sp4r.rho_g) == images[i]);
}

TEST_CASE("transversal order times compact order gives the full order", "[weyl]") {
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    CHECK(ctx.w1.size() * ctx.weyl_k.order() == ctx.weyl_g.order());
  }
}

TEST_CASE("transversal elements carry the whole dominant chamber into the compact one",
          "[weyl]") {
  // Cross-check of the "w rho compactly dominant" membership test: every
  // g-dominant vector must land compactly dominant under every
  // transversal element.
  std::mt19937 rng(31);
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    for (int trial = 0; trial < 40; ++trial) {
      const Weight v =
          make_dominant(ctx.datum, random_weight(rng, ctx.datum.ambient_dim), ctx.simple_g)
              .dominant;
      for (const WeylElement& w : ctx.w1)
        CHECK(is_dominant(ctx.datum, w.apply(v), ctx.datum.pos_roots_k));
    }
  }
}

TEST_CASE("chambers containing a shifted weight", "[weyl]") {
  const Context& sp4r = preset_context("sp4r");

  SECTION("regular dominant shift sees only the identity") {
    const auto w1mu = sp4r.w1_mu(wt({2, 2}));
    REQUIRE(w1mu.size() == 1);
    CHECK(w1mu.front().is_identity());
  }
  SECTION("regular non-dominant shift sees exactly one reflection") {
    const auto w1mu = sp4r.w1_mu(wt({1, 0}));
    REQUIRE(w1mu.size() == 1);
    Mat flip = Mat::identity(2);
    flip.at(1, 1) = -1;
    CHECK(w1mu.front().mat == flip);
  }
  SECTION("the zero weight lies in every chamber") {
    const Context& sl2r = preset_context("sl2r");
    CHECK(sl2r.w1_mu(wt({0})).size() == 2);
  }
  SECTION("rejects weights outside the compact chamber") {
    CHECK_THROWS_AS(sp4r.w1_mu(wt({0, 1})), std::invalid_argument);
  }
}

TEST_CASE("w1_mu is a nonempty subset of the transversal on window scans", "[weyl]") {
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    WindowSpec win;
    for (std::size_t i = 0; i < ctx.datum.lattice.rank(); ++i) win.bounds.push_back({-3, 3});
    for (const LatticePoint& p : enumerate_window(ctx, win)) {
      const auto w1mu = ctx.w1_mu(p.mu);
      REQUIRE_FALSE(w1mu.empty());
      for (const WeylElement& w : w1mu) {
        const bool in_w1 = std::any_of(ctx.w1.begin(), ctx.w1.end(),
                                       [&](const WeylElement& u) { return u.mat == w.mat; });
        CHECK(in_w1);
      }
    }
  }
}

TEST_CASE("rho minus its image is the negated inversion-set sum", "[weyl]") {
  for (const char* name : {"sl2r", "sp4r", "g2s"}) {
    const Context& ctx = preset_context(name);
    const auto& pos = ctx.datum.pos_roots_g;
    for (const WeylElement& w : ctx.weyl_g.elements) {
      // D_w: negative roots that w maps from positives, i.e. -gamma in pos
      // and w^{-1}(gamma) positive.
      Weight sum(ctx.datum.ambient_dim);
      for (const Weight& p : pos) {
        const Weight gamma = -p;
        const Weight pre = w.apply_inv(gamma);
        if (std::find(pos.begin(), pos.end(), pre) != pos.end()) sum = sum + (-gamma);
      }
      CHECK(ctx.rho_g - w.apply(ctx.rho_g) == sum);
    }
  }
}
