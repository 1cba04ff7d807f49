#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "graphlab/error.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/metrics.hpp"
#include "random_graphs.hpp"

using namespace graphlab;
using namespace graphlab::testing;

namespace {
PseudometricTable two_point(double s) {
  return PseudometricTable({"0", "1"}, std::nullopt,
                           {Distance(0.0), Distance(s), Distance(s), Distance(0.0)});
}

double harmonic(int n) {
  double s = 0.0;
  for (int j = n; j >= 1; --j) s += 1.0 / j;
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) out.emplace_back(x, y);
  }
  return out;
}
}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("path metric on a path is the series sum") {
    PseudometricTable d = path_metric(path012(), LengthFunction::inverse_b());
    CHECK(d.at(0, 2).value() == 0.75);
    CHECK(d.at(2, 0).value() == 0.75);
    PseudometricTable from1 = path_metric(path012(), LengthFunction::inverse_b(), VertexId("1"));
    CHECK_FALSE(from1.all_pairs());
    CHECK(from1.from_source(0).value() == 0.5);
  }

  TEST_CASE("disconnected vertices are infinitely far apart") {
    WeightedGraph two({"a", "b", "c"}, {{0, 1, 1.0}}, {0, 0, 0});
    PseudometricTable d = path_metric(two, LengthFunction::inverse_b());
    CHECK(d.at(0, 2).is_infinite());
    CHECK(std::isinf(d.at(0, 2).as_double()));
  }

  TEST_CASE("triangle ladder spine distance is twice the harmonic number") {
    GraphFamily ladder = make_family({.name = "triangle_ladder"});
    for (int n : {1, 5, 30}) {
      Truncation t = ladder.build_ball(n);
      PseudometricTable d = path_metric(t.graph, LengthFunction::inverse_b(), VertexId("1"));
      CHECK(d.from_source(t.graph.index(std::to_string(n + 1))).value() ==
            doctest::Approx(2.0 * harmonic(n)).epsilon(1e-13));
    }
  }

  TEST_CASE("d^s <= d_s entrywise") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      WeightedGraph g = random_graph(rng, 9);
      PseudometricTable d = path_metric(g, LengthFunction::inverse_b());
      PseudometricTable dh = path_metric(g, LengthFunction::inverse_b_pow(0.5));
      for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t y = 0; y < g.size(); ++y) {
          CHECK(std::sqrt(d.at(x, y).value()) <= dh.at(x, y).value() * (1 + 1e-12));
        }
      }
    }
  }

  TEST_CASE("killing length needs killing on every edge") {
    CHECK_THROWS_AS(path_metric(path012({1.0, 0.0, 1.0}), LengthFunction::killing()), Error);
    PseudometricTable dc = path_metric(path012({1.0, 4.0, 1.0}), LengthFunction::killing());
    CHECK(dc.at(0, 1).value() > 0.0);
  }

  TEST_CASE("verify_intrinsic equality and failure") {
    WeightedGraph g = unit_edge({0, 0}, 2.0);
    IntrinsicCheck ok = verify_intrinsic(g, Measure::unit(2), two_point(1.0));
    CHECK(ok.ok);
    CHECK(ok.worst_ratio == doctest::Approx(1.0));
    IntrinsicCheck bad = verify_intrinsic(g, Measure({0.5, 0.5}), two_point(1.0));
    CHECK_FALSE(bad.ok);
    CHECK(bad.worst_ratio == doctest::Approx(2.0));
    CHECK(intrinsic_load(g, two_point(1.0))[0] == doctest::Approx(1.0));
  }

  TEST_CASE("d is intrinsic for the canonical measure on families with summable 1/b") {
    for (FamilySpec spec : {FamilySpec{.name = "ray_power", .measure = MeasureRule::parse("canonical_M")},
                            FamilySpec{.name = "comb", .measure = MeasureRule::parse("canonical_M")},
                            FamilySpec{.name = "twin_rays", .measure = MeasureRule::parse("canonical_M")},
                            FamilySpec{.name = "finite_tree", .measure = MeasureRule::parse("canonical_M")}}) {
      GraphFamily fam = make_family(spec);
      Truncation t = fam.build_ball(6);
      REQUIRE(t.measure);
      PseudometricTable d = path_metric(t.graph, LengthFunction::inverse_b());
      CHECK(verify_intrinsic(t.graph, *t.measure, d).ok);
    }
  }

  TEST_CASE("sigma_from_function examples") {
    SigmaFromFunction s = sigma_from_function(unit_edge(), vec({0, 1}));
    CHECK(s.sigma.at(0, 1).value() == 1.0);
    CHECK(s.mass[0] == 0.5);
    CHECK(s.mass[1] == 0.5);
    CHECK(s.mass.total() == 1.0);

    SigmaFromFunction flat = sigma_from_function(path012(), vec({2, 2, 2}));
    CHECK(flat.sigma.at(0, 2).value() == 0.0);
    CHECK(flat.mass.total() == 0.0);

    RealFunction f = vec({0, 2.0 / 3.0, 1});
    SigmaFromFunction p = sigma_from_function(path012(), f);
    CHECK(p.mass[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(p.mass.total() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(verify_intrinsic(path012(), p.mass, p.sigma).ok);
  }

  TEST_CASE("sigma_upper_bounds: tight single edge") {
    WeightedGraph g = unit_edge({0, 0}, 2.0);
    SigmaBoundsReport r = sigma_upper_bounds(g, Measure::unit(2), two_point(1.0), {{0, 1}});
    CHECK(r.all_hold);
    bool saw_tight = false;
    for (const auto& c : r.checks) {
      if (std::abs(c.lhs - c.rhs) < 1e-15 && c.lhs == doctest::Approx(1.0)) saw_tight = true;
    }
    CHECK(saw_tight);
    CHECK_THROWS_AS(sigma_upper_bounds(g, Measure({0.5, 0.5}), two_point(1.0), {{0, 1}}), Error);
  }

  TEST_CASE("sigma_upper_bounds on random sigma_f") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      WeightedGraph g = random_graph(rng, 7);
      RealFunction f = random_function(rng, 7);
      SigmaFromFunction s = sigma_from_function(g, f);
      // σ_f is intrinsic for M_f; add a little mass so the measure is strict.
      std::vector<double> m = s.mass.values();
      for (double& v : m) v += 1e-3;
      SigmaBoundsReport r = sigma_upper_bounds(g, Measure(m), s.sigma, all_pairs(g.size()));
      CHECK(r.all_hold);
    }
  }

  TEST_CASE("comb: d with canonical M satisfies sigma^2 <= 2 M(X) d") {
    GraphFamily comb = make_family({.name = "comb", .measure = MeasureRule::parse("canonical_M")});
    Truncation t = comb.build_ball(6);
    PseudometricTable d = path_metric(t.graph, LengthFunction::inverse_b());
    SigmaBoundsReport r = sigma_upper_bounds(t.graph, *t.measure, d, all_pairs(t.graph.size()));
    CHECK(r.all_hold);
    CHECK(r.intrinsic.ok);
  }

  TEST_CASE("scale multiplies finite entries") {
    PseudometricTable s = scale(two_point(2.0), 0.5);
    CHECK(s.at(0, 1).value() == 1.0);
  }
}
