#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "graphlab/error.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/spectral.hpp"
#include "random_graphs.hpp"

using namespace graphlab;
using namespace graphlab::testing;

TEST_SUITE("spectral") {
  TEST_CASE("assemble examples") {
    TruncatedOperator n = assemble(path012(), Measure::unit(3), BoundaryCondition::Neumann);
    Eigen::Matrix3d expected;
    expected << 2, -2, 0, -2, 6, -4, 0, -4, 4;
    CHECK((n.matrix - expected).cwiseAbs().maxCoeff() == 0.0);
    CHECK(n.free_components == 1);

    TruncatedOperator d = assemble(path012(), Measure::unit(3), BoundaryCondition::Dirichlet, {"0", "2"});
    REQUIRE(d.matrix.rows() == 1);
    CHECK(d.matrix(0, 0) == 6.0);
    CHECK(d.vertices == std::vector<VertexId>{"1"});
    CHECK(d.free_components == 0);

    WeightedGraph single({"x"}, {}, {3.0});
    TruncatedOperator s = assemble(single, Measure({2.0}), BoundaryCondition::Neumann);
    CHECK(s.matrix(0, 0) == 1.5);

    CHECK_THROWS_AS(assemble(path012(), Measure::unit(3), BoundaryCondition::Dirichlet, {"0", "1", "2"}), Error);
    CHECK_THROWS_AS(assemble(path012(), Measure::unit(3), BoundaryCondition::Dirichlet, {"q"}), Error);
  }

  TEST_CASE("path spectrum closed form") {
    SpectrumResult s = spectrum(assemble(path012(), Measure::unit(3), BoundaryCondition::Neumann));
    CHECK(std::abs(s.eigenvalues[0]) <= 1e-9);
    CHECK(std::abs(s.eigenvalues[1] - (6 - 2 * std::sqrt(3.0))) <= 1e-9);
    CHECK(std::abs(s.eigenvalues[2] - (6 + 2 * std::sqrt(3.0))) <= 1e-9);
    CHECK(s.e0_multiplicity == 1);
    SpectrumResult d = spectrum(assemble(path012(), Measure::unit(3), BoundaryCondition::Dirichlet, {"0", "2"}));
    CHECK(std::abs(d.eigenvalues[0] - 6.0) <= 1e-12);
  }

  TEST_CASE("eigenfunctions are m-orthonormal for non-uniform m") {
    Rng rng(41);
    WeightedGraph g = random_graph(rng, 9);
    std::vector<double> mv;
    for (int i = 0; i < 9; ++i) mv.push_back(log_uniform(rng, 0.1, 5.0));
    Measure m(mv);
    TruncatedOperator op = assemble(g, m, BoundaryCondition::Neumann);
    SpectrumResult s = spectrum(op);
    Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(mv.data(), 9);
    Eigen::MatrixXd gram = s.eigenfunctions.transpose() * w.asDiagonal() * s.eigenfunctions;
    CHECK((gram - Eigen::MatrixXd::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-10);
    // L φ = λ φ with L = M^{-1} A.
    for (Eigen::Index k = 0; k < 9; ++k) {
      Eigen::VectorXd r = op.matrix * s.eigenfunctions.col(k) - s.eigenvalues[k] * s.eigenfunctions.col(k);
      CHECK(r.cwiseAbs().maxCoeff() < 1e-8 * (1 + s.eigenvalues[k]));
    }
  }

  TEST_CASE("zero eigenvalue multiplicity counts killing-free components") {
    WeightedGraph two({"a", "b", "c", "d"}, {{0, 1, 1.0}, {2, 3, 1.0}}, {0, 0, 0, 0});
    CHECK(spectrum(assemble(two, Measure::unit(4), BoundaryCondition::Neumann)).e0_multiplicity == 2);
    WeightedGraph mixed({"a", "b", "c", "d", "e"}, {{0, 1, 1.0}, {2, 3, 1.0}}, {0, 0, 0, 0.5, 0});
    TruncatedOperator op = assemble(mixed, Measure::unit(5), BoundaryCondition::Neumann);
    CHECK(spectrum(op).e0_multiplicity == 2);
    CHECK(op.free_components == 2);
  }

  TEST_CASE("Dirichlet truncations of connected graphs are positive") {
    Rng rng(43);
    for (int trial = 0; trial < 10; ++trial) {
      WeightedGraph g = random_graph(rng, 8);
      SpectrumResult s = spectrum(assemble(g, Measure::unit(8), BoundaryCondition::Dirichlet, {"v0"}));
      CHECK(s.eigenvalues[0] > 0.0);
      CHECK(s.e0_multiplicity == 0);
    }
  }

  TEST_CASE("heat kernel closed forms") {
    TruncatedOperator edge = assemble(unit_edge(), Measure::unit(2), BoundaryCondition::Neumann);
    for (double t : {0.1, 1.0, 10.0}) {
      HeatResult h = heat(edge, t, {{"0", "1"}});
      CHECK(std::abs(h.probes[0].value - (1 - std::exp(-2 * t)) / 2) <= 1e-10);
    }
    HeatResult p = heat(assemble(path012(), Measure::unit(3), BoundaryCondition::Neumann), 10.0);
    CHECK((p.kernel.array() - 1.0 / 3.0).abs().maxCoeff() <= 1e-6);
    CHECK((p.mass.array() - 1.0).abs().maxCoeff() <= 1e-12);
    HeatResult zero = heat(edge, 0.0);
    CHECK(zero.kernel(0, 0) == doctest::Approx(1.0));
    CHECK(zero.partial_trace == doctest::Approx(2.0));
    CHECK_THROWS_AS(heat(edge, -1.0), Error);
  }

  TEST_CASE("heat kernel is symmetric and tends to 1/m(X)") {
    Measure m({1.0, 2.0, 0.5});
    TruncatedOperator op = assemble(path012(), m, BoundaryCondition::Neumann);
    HeatResult h = heat(op, 40.0);
    CHECK((h.kernel - h.kernel.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((h.kernel.array() - 1.0 / 3.5).abs().maxCoeff() < 1e-9);
  }

  TEST_CASE("Dirichlet mass is strictly below one") {
    Rng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
      WeightedGraph g = random_graph(rng, 7);
      HeatResult h = heat(assemble(g, Measure::unit(7), BoundaryCondition::Dirichlet, {"v6"}), 1.0);
      CHECK(h.mass.maxCoeff() < 1 - 1e-6);
      CHECK(h.mass.minCoeff() > 0.0);
    }
  }

  TEST_CASE("trace convergence on families") {
    GraphFamily ray = make_family({.name = "ray_power", .power = 3, .measure = MeasureRule::parse("geometric:0.5")});
    std::vector<int> levels;
    for (int n = 2; n <= 40; n += 2) levels.push_back(n);
    ConvergenceReport r = trace_convergence(ray, 1.0, levels, 1e-4);
    CHECK(r.status == ConvergenceStatus::Converged);

    GraphFamily finite = make_family({.name = "finite_path", .size = 4});
    ConvergenceReport f = trace_convergence(finite, 1.0, {3, 4, 5, 6, 7}, 1e-12);
    CHECK(f.status == ConvergenceStatus::Converged);

    // t = 0 counts interior vertices, which grow without bound.
    ConvergenceReport z = trace_convergence(ray, 0.0, {2, 4, 6, 8}, 1e-6);
    CHECK(z.values.back() > z.values.front());
    CHECK(z.status != ConvergenceStatus::Converged);
  }
}
