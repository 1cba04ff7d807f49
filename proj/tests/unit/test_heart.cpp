#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "graphlab/error.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/heart.hpp"
#include "random_graphs.hpp"

using namespace graphlab;
using namespace graphlab::testing;

TEST_SUITE("heart_reduction") {
  TEST_CASE("two-vertex example") {
    HeartGraph hg = reduce(unit_edge({1.0, 0.0}));
    CHECK(hg.augmented.size() == 3);
    CHECK(hg.heart_index == 2);
    CHECK(hg.augmented.id(2) == kHeartId);
    CHECK_FALSE(hg.augmented.has_killing());
    CHECK(hg.augmented.weight(0, 1) == 1.0);
    CHECK(hg.augmented.weight(0, 2) == 1.0);
    CHECK(hg.augmented.weight(1, 2) == 0.0);
    CHECK(hg.augmented.edges().size() == 2);

    RealFunction f = vec({1, 0});
    CHECK(energy(hg.augmented, extend_by_zero(hg, f)).energy == 2.0);
    CHECK(energy(hg.base, f).energy == 2.0);

    HarmonicComponent h = harmonic_component(hg);
    CHECK(h.constant);
    CHECK(h.raw_energy < 1e-12);

    auto cmp = compare_metrics(hg, {{"0", "1"}});
    REQUIRE(cmp.size() == 1);
    CHECK(std::abs(cmp[0].rho - 1.0) <= 1e-12);
    CHECK(std::abs(cmp[0].rho_heart - 1.0) <= 1e-12);
    CHECK(cmp[0].gap == 0.0);
    CHECK(cmp[0].d_heart == doctest::Approx(1.0));
    CHECK(cmp[0].d == doctest::Approx(1.0));
    CHECK(cmp[0].all_hold);
  }

  TEST_CASE("nothing to reduce without killing") {
    try {
      reduce(path012());
      FAIL("expected NotApplicable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotApplicable);
    }
  }

  TEST_CASE("energy is preserved by extension by zero") {
    Rng rng(61);
    RandomGraphOptions opt;
    opt.killing_probability = 0.5;
    for (int trial = 0; trial < 20; ++trial) {
      WeightedGraph g = random_graph(rng, 10, opt);
      if (!g.has_killing()) continue;
      HeartGraph hg = reduce(g);
      RealFunction f = random_function(rng, 10);
      CHECK(energy(hg.augmented, extend_by_zero(hg, f)).energy ==
            doctest::Approx(energy(g, f).energy).epsilon(1e-12));
    }
  }

  TEST_CASE("finite graphs give the constant flag") {
    Rng rng(67);
    RandomGraphOptions opt;
    opt.killing_probability = 0.4;
    for (int trial = 0; trial < 10; ++trial) {
      WeightedGraph g = random_graph(rng, 12, opt);
      if (!g.has_killing()) continue;
      CHECK(harmonic_component(reduce(g)).constant);
    }
  }

  TEST_CASE("metric comparisons on random graphs") {
    Rng rng(71);
    RandomGraphOptions opt;
    opt.killing_probability = 0.5;
    opt.connected = false;
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
      WeightedGraph g = random_graph(rng, 12, opt);
      if (!g.has_killing()) continue;
      HeartGraph hg = reduce(g);
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t y = x + 1; y < g.size(); ++y) pairs.emplace_back(g.id(x), g.id(y));
      }
      for (const auto& r : compare_metrics(hg, pairs)) {
        CHECK(r.all_hold);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }

  TEST_CASE("exhaustion surrogate on a transient family") {
    GraphFamily ray = make_family({.name = "ray_power", .power = 3, .killing = 1.0, .killing_ratio = 0.5});
    HarmonicComponent h = harmonic_component_exhaustion(ray, {4, 8, 12, 16, 20, 24}, 1e-6);
    CHECK_FALSE(h.constant);
    REQUIRE(h.report);
    CHECK(h.level == 24);
    Truncation t = ray.build_ball(24);
    HeartGraph hg = reduce(t.graph);
    CHECK(h.f.size() == static_cast<Eigen::Index>(hg.augmented.size()));
    CHECK(energy(hg.augmented, h.f).energy == doctest::Approx(1.0).epsilon(1e-9));
  }
}
