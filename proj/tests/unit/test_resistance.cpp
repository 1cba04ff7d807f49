#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "graphlab/error.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/metrics.hpp"
#include "graphlab/resistance.hpp"
#include "random_graphs.hpp"

using namespace graphlab;
using namespace graphlab::testing;

namespace {
const ResistanceMethod kSolvers[] = {ResistanceMethod::ConstrainedSolve, ResistanceMethod::Pseudoinverse,
                                     ResistanceMethod::Lagrange};
}

TEST_SUITE("resistance") {
  TEST_CASE("unit triangle gives 2/3 with every solver") {
    for (ResistanceMethod m : kSolvers) {
      ResistanceResult r = resistance_finite(unit_triangle(), "a", "b", m);
      CHECK(std::abs(r.r - 2.0 / 3.0) <= 1e-12);
      // The minimizer has unit drop and energy 1/r.
      CHECK(r.minimizer[0] - r.minimizer[1] == doctest::Approx(1.0));
      CHECK(energy(unit_triangle(), r.minimizer).energy == doctest::Approx(1.0 / r.r));
    }
    CHECK_THROWS_AS(resistance_finite(unit_triangle(), "a", "b", ResistanceMethod::TreePath), Error);
    CHECK_THROWS_AS(resistance_finite(unit_triangle(), "a", "b", ResistanceMethod::Exhaustion), Error);
  }

  TEST_CASE("path: r = d and rho = sqrt(0.75)") {
    for (ResistanceMethod m : {ResistanceMethod::ConstrainedSolve, ResistanceMethod::Pseudoinverse,
                               ResistanceMethod::Lagrange, ResistanceMethod::TreePath}) {
      CHECK(resistance_finite(path012(), "0", "2", m).r == doctest::Approx(0.75).epsilon(1e-13));
    }
    CHECK(rho(path012(), "0", "2") == doctest::Approx(std::sqrt(0.75)).epsilon(1e-13));
    CHECK(rho(path012(), "1", "1") == 0.0);
  }

  TEST_CASE("two vertices with killing at one end") {
    WeightedGraph g = unit_edge({1.0, 0.0});
    for (ResistanceMethod m : kSolvers) {
      CHECK(resistance_finite(g, "0", "1", m).r == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(rho(g, "0", "1") == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("separated vertices") {
    WeightedGraph free_parts({"a", "b", "c", "d"}, {{0, 1, 1.0}, {2, 3, 1.0}}, {0, 0, 0, 0});
    try {
      resistance_finite(free_parts, "a", "c");
      FAIL("expected infinite resistance");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfiniteResistance);
    }
    CHECK(std::isinf(rho_table(free_parts).at(0, 2).as_double()));

    // Both parts leak through killing: r is the sum of the two grounded
    // resistances.
    WeightedGraph leaky({"a", "b", "c", "d"}, {{0, 1, 1.0}, {2, 3, 1.0}}, {0, 1.0, 0, 2.0});
    for (ResistanceMethod m : kSolvers) {
      ResistanceResult r = resistance_finite(leaky, "a", "c", m);
      CHECK(r.r == doctest::Approx(2.0 + 1.5).epsilon(1e-10));
    }
    CHECK(resistance_finite(leaky, "a", "c").coupled_through_killing);
    CHECK(resistance_table(leaky).at(0, 2).value() == doctest::Approx(3.5).epsilon(1e-10));
  }

  TEST_CASE("trees: rho^2 = d") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
      WeightedGraph t = random_tree(rng, 12);
      PseudometricTable d = path_metric(t, LengthFunction::inverse_b());
      PseudometricTable r = resistance_table(t);
      for (std::size_t x = 0; x < t.size(); ++x) {
        for (std::size_t y = 0; y < t.size(); ++y) {
          CHECK(std::abs(r.at(x, y).value() - d.at(x, y).value()) <= 1e-9 * (1 + d.at(x, y).value()));
        }
      }
    }
  }

  TEST_CASE("all-pairs table agrees with single solves") {
    Rng rng(29);
    RandomGraphOptions opt;
    opt.killing_probability = 0.3;
    for (int trial = 0; trial < 10; ++trial) {
      WeightedGraph g = random_graph(rng, 8, opt);
      PseudometricTable r = resistance_table(g);
      for (std::size_t x = 0; x < g.size(); ++x) {
        for (std::size_t y = x + 1; y < g.size(); ++y) {
          CHECK(r.at(x, y).value() ==
                doctest::Approx(resistance_finite(g, g.id(x), g.id(y)).r).epsilon(1e-9));
        }
      }
    }
  }

  TEST_CASE("rho_o relations") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      WeightedGraph g = random_graph(rng, 7);
      for (const char* o : {"v0", "v3"}) {
        CHECK(rho_o(g, "v1", "v5", o) == doctest::Approx(rho(g, "v1", "v5")).epsilon(1e-9));
      }
    }
    RandomGraphOptions opt;
    opt.killing_probability = 0.6;
    for (int trial = 0; trial < 10; ++trial) {
      WeightedGraph g = random_graph(rng, 7, opt);
      for (std::size_t o = 0; o < g.size(); ++o) {
        const double r = rho(g, "v1", "v5");
        const double ro = rho_o(g, "v1", "v5", g.id(o));
        CHECK(ro <= r * (1 + 1e-12));
        if (g.killing(o) > 0) CHECK(r <= std::sqrt(1 + 1 / g.killing(o)) * ro * (1 + 1e-12));
      }
    }
  }

  TEST_CASE("with_extra_killing only touches one vertex") {
    WeightedGraph h = with_extra_killing(path012({0.5, 0, 0}), 0, 1.0);
    CHECK(h.killing(0) == 1.5);
    CHECK(h.killing(1) == 0.0);
  }

  TEST_CASE("free resistance on families") {
    GraphFamily path = make_family({.name = "finite_path", .size = 5});
    ResistanceResult p = free_resistance(path, "0", "2", {2, 3, 4, 5, 6, 7}, 1e-12);
    CHECK(p.r == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(p.exhaustion->status == ConvergenceStatus::Converged);
    CHECK(p.method == ResistanceMethod::Exhaustion);

    GraphFamily ray = make_family({.name = "ray_power", .power = 3});
    ResistanceResult r = free_resistance(ray, "1", "20", {19, 25, 30, 35, 40}, 1e-12);
    double series = 0.0;
    for (int j = 19; j >= 1; --j) series += std::pow(j, -3.0);
    CHECK(r.r == doctest::Approx(series).epsilon(1e-12));
    CHECK_FALSE(r.limit_not_guaranteed);
  }

  TEST_CASE("triangle ladder rung resistance on its own subgraph") {
    GraphFamily ladder = make_family({.name = "triangle_ladder"});
    Truncation t = ladder.build_ball(12);
    for (int n : {1, 4, 11}) {
      std::vector<VertexId> sub{std::to_string(n), std::to_string(n + 1)};
      for (int k = 1; k <= n; ++k) sub.push_back(std::to_string(n) + ":" + std::to_string(k));
      WeightedGraph h = induced_subgraph(t.graph, sub);
      CHECK(resistance_finite(h, sub[0], sub[1]).r == doctest::Approx(2.0 / (n * (n + 1.0))).epsilon(1e-12));
    }
  }

  TEST_CASE("rho-diameter estimates") {
    DiameterEstimate comb = rho_diameter_estimate(make_family({.name = "comb"}), {2, 4, 6, 8, 10, 12, 14, 16}, 1e-2, 600);
    CHECK(comb.status == DiameterStatus::Finite);
    CHECK(comb.upper_bound);
    CHECK(comb.lower_bound <= std::sqrt(3.0));

    DiameterEstimate ladder =
        rho_diameter_estimate(make_family({.name = "triangle_ladder"}), {4, 8, 12, 16, 20}, 1e-1, 600);
    CHECK(ladder.status != DiameterStatus::Infinite);
    CHECK(ladder.lower_bound <= 2 * (std::sqrt(2.0) + 1));

    DiameterEstimate ray = rho_diameter_estimate(make_family({.name = "ray_power", .power = 0}), {4, 8, 16}, 1e-3);
    CHECK(ray.status == DiameterStatus::Infinite);
    CHECK(ray.lower_bound == doctest::Approx(4.0));
  }
}
