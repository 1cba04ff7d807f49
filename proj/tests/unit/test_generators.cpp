#include <doctest.h>

#include <cmath>

#include "graphlab/error.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/metrics.hpp"

using namespace graphlab;

namespace {
double w(const WeightedGraph& g, const char* a, const char* b) { return g.weight(g.index(a), g.index(b)); }
}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("comb weights") {
    Truncation t = make_family({.name = "comb"}).build_ball(8);
    for (int n = 0; n + 1 <= 8; ++n) {
      const std::string a = std::to_string(n) + ":0";
      const std::string b = std::to_string(n + 1) + ":0";
      CHECK(w(t.graph, a.c_str(), b.c_str()) == std::ldexp(1.0, n + 1));
    }
    for (int k = 1; k <= 5; ++k) {
      const std::string a = "2:" + std::to_string(k - 1);
      const std::string b = "2:" + std::to_string(k);
      CHECK(w(t.graph, a.c_str(), b.c_str()) == std::ldexp(1.0, k));
    }
    CHECK(t.graph.is_tree());
    CHECK(t.graph.size() == 45);
  }

  TEST_CASE("triangle ladder weights") {
    Truncation t = make_family({.name = "triangle_ladder"}).build_ball(6);
    for (int n = 1; n <= 6; ++n) {
      const std::string x = std::to_string(n);
      const std::string y = std::to_string(n + 1);
      CHECK(w(t.graph, x.c_str(), y.c_str()) == n / 2.0);
      for (int k = 1; k <= n; ++k) {
        const std::string tooth = x + ":" + std::to_string(k);
        CHECK(w(t.graph, x.c_str(), tooth.c_str()) == n);
        CHECK(w(t.graph, tooth.c_str(), y.c_str()) == n);
      }
    }
  }

  TEST_CASE("cubic ray d-diameter approaches zeta(3)") {
    GraphFamily ray = make_family({.name = "ray_power", .power = 3});
    Truncation t = ray.build_ball(400);
    PseudometricTable d = path_metric(t.graph, LengthFunction::inverse_b(), VertexId("1"));
    double partial = 0.0;
    for (int j = 400; j >= 1; --j) partial += std::pow(j, -3.0);
    CHECK(d.from_source(t.graph.index("401")).value() == doctest::Approx(partial).epsilon(1e-13));
    CHECK(zeta_tail(3.0, 1) == doctest::Approx(1.2020569031595942).epsilon(1e-12));
    CHECK(*ray.facts().d_diameter_bound == doctest::Approx(1.2020569).epsilon(1e-7));
    CHECK(ray.facts().d_tail(400) == doctest::Approx(zeta_tail(3.0, 1) - partial).epsilon(1e-6));
  }

  TEST_CASE("witness functions on the cubic ray") {
    GraphFamily ray = make_family({.name = "ray_power", .power = 3});
    for (int level : {10, 100, 1000}) {
      auto ws = witness_functions(ray, level);
      REQUIRE(ws.size() == 5);
      CHECK(ws[0].name == "f");
      CHECK_FALSE(ws[0].finite_energy);
      double expected = 0.0;
      for (int n = level; n >= 1; --n) expected += n / ((n + 1.0) * (n + 1.0));
      CHECK(ws[0].energy == doctest::Approx(expected).epsilon(1e-12));
      CHECK(ws[1].name == "f_1");
      CHECK(ws[1].finite_energy);
      CHECK(ws[4].name == "one");
      CHECK(ws[4].energy == 0.0);
    }
    // f diverges like log N; f_1 is Cauchy.
    const double f_100 = witness_functions(ray, 100)[0].energy;
    const double f_1000 = witness_functions(ray, 1000)[0].energy;
    CHECK(f_1000 - f_100 == doctest::Approx(std::log(10.0)).epsilon(0.05));
    const double g_100 = witness_functions(ray, 100)[1].energy;
    const double g_1000 = witness_functions(ray, 1000)[1].energy;
    CHECK(g_1000 - g_100 < 1e-3);
    CHECK_THROWS_AS(witness_functions(make_family({.name = "comb"}), 3), Error);
  }

  TEST_CASE("measure rules") {
    CHECK(MeasureRule::parse("none").kind == MeasureRule::Kind::None);
    CHECK(MeasureRule::parse("unit").kind == MeasureRule::Kind::Unit);
    CHECK(MeasureRule::parse("canonical_M").kind == MeasureRule::Kind::CanonicalM);
    MeasureRule g = MeasureRule::parse("geometric:0.25");
    CHECK(g.kind == MeasureRule::Kind::Geometric);
    CHECK(g.q == 0.25);
    CHECK(MeasureRule::parse(g.to_string()).q == 0.25);
    CHECK_THROWS_AS(MeasureRule::parse("weird"), Error);
    CHECK_THROWS_AS(make_family({.name = "ray_power", .measure = MeasureRule::parse("geometric:1.5")}), Error);

    Truncation t = make_family({.name = "ray_power", .power = 2, .measure = MeasureRule::parse("canonical_M")})
                       .build_ball(3);
    // M(x) = ½ Σ_y 1/b(x, y), including the edge that leaves B_3.
    CHECK((*t.measure)[0] == doctest::Approx(0.5));
    CHECK((*t.measure)[3] == doctest::Approx(0.5 * (1.0 / 9 + 1.0 / 16)));
  }

  TEST_CASE("parameters and errors") {
    CHECK_THROWS_AS(make_family({.name = "nope"}), Error);
    CHECK_THROWS_AS(make_family({.name = "finite_path", .size = 0}), Error);
    CHECK_THROWS_AS(make_family({.name = "ray_power", .power = -1}), Error);
    CHECK_THROWS_AS(make_family({.name = "star_augmented", .measure = MeasureRule::parse("canonical_M")}), Error);
    CHECK_THROWS_AS(make_family({.name = "comb"}).build_ball(1001), Error);
    CHECK(family_names().size() == 8);
  }

  TEST_CASE("random trees are reproducible from the seed") {
    Truncation a = make_family({.name = "random_tree", .size = 20, .seed = 9}).build_ball(100);
    Truncation b = make_family({.name = "random_tree", .size = 20, .seed = 9}).build_ball(100);
    Truncation c = make_family({.name = "random_tree", .size = 20, .seed = 10}).build_ball(100);
    REQUIRE(a.graph.edges().size() == b.graph.edges().size());
    bool differs = false;
    for (std::size_t i = 0; i < a.graph.edges().size(); ++i) {
      CHECK(a.graph.edges()[i].weight == b.graph.edges()[i].weight);
      differs = differs || a.graph.edges()[i].weight != c.graph.edges()[i].weight;
    }
    CHECK(differs);
    CHECK(a.graph.is_tree());
    CHECK(a.frontier.empty());
  }

  TEST_CASE("killing follows the level") {
    GraphFamily ray = make_family({.name = "ray_power", .killing = 2.0, .killing_ratio = 0.5});
    Truncation t = ray.build_ball(3);
    CHECK(t.graph.killing(0) == 1.0);
    CHECK(t.graph.killing(2) == 0.25);
    CHECK_FALSE(ray.facts().killing_free);
  }

  TEST_CASE("star augmented adds hub edges") {
    GraphFamily star = make_family({.name = "star_augmented"});
    Truncation t = star.build_ball(6);
    CHECK(w(t.graph, "1", "5") == std::ldexp(1.0, -5));
    CHECK(w(t.graph, "1", "2") == 1.0);
    CHECK_FALSE(star.facts().locally_finite);
    CHECK(star.root() == "1");
  }

  TEST_CASE("twin rays structure") {
    Truncation t = make_family({.name = "twin_rays"}).build_ball(3);
    CHECK(w(t.graph, "2:0", "3:0") == 4.0);
    CHECK(w(t.graph, "2:1", "3:1") == 4.0);
    CHECK(w(t.graph, "3:0", "3:4") == 1.0);
    CHECK(w(t.graph, "3:1", "3:4") == 1.0);
    CHECK(t.graph.is_connected());
  }
}
