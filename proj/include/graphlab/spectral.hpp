#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graphlab/exhaustion.hpp"
#include "graphlab/graph.hpp"

namespace graphlab {

enum class BoundaryCondition { Neumann, Dirichlet };
const char* to_string(BoundaryCondition k);

/// Finite operator L = M^{-1} A on the retained vertices, where A is the
/// symmetric form matrix. For Dirichlet conditions the boundary vertices are
/// removed and their couplings stay on the interior diagonal.
struct TruncatedOperator {
  BoundaryCondition kind = BoundaryCondition::Neumann;
  std::vector<VertexId> vertices;
  Eigen::MatrixXd form;    // A, symmetric
  Eigen::MatrixXd matrix;  // M^{-1} A
  Measure measure;         // restricted to `vertices`
  // Number of edge components of the retained vertices with c ≡ 0 and no
  // boundary coupling.
  std::size_t free_components = 0;
};

// Throws Error(InvalidArgument) when the Dirichlet interior is empty and
// Error(UnknownVertex) for unknown boundary ids.
TruncatedOperator assemble(const WeightedGraph& g, const Measure& m, BoundaryCondition kind,
                           const std::vector<VertexId>& boundary = {});

struct SpectrumResult {
  Eigen::VectorXd eigenvalues;     // ascending
  Eigen::MatrixXd eigenfunctions;  // columns, orthonormal in ℓ²(m)
  std::size_t e0_multiplicity = 0;
};

inline constexpr double kZeroEigenvalue = 1e-10;

SpectrumResult spectrum(const TruncatedOperator& op);

struct HeatProbe {
  VertexId x;
  VertexId y;
  double value = 0.0;
};

struct HeatResult {
  double t = 0.0;
  Eigen::MatrixXd kernel;  // p_t(x, y) over the operator's vertices
  Eigen::VectorXd mass;    // e^{-tL} 1
  double partial_trace = 0.0;
  std::vector<HeatProbe> probes;
};

// Throws Error(InvalidArgument) for t < 0.
HeatResult heat(const TruncatedOperator& op, const SpectrumResult& spec, double t,
                const std::vector<std::pair<VertexId, VertexId>>& probes = {});
HeatResult heat(const TruncatedOperator& op, double t,
                const std::vector<std::pair<VertexId, VertexId>>& probes = {});

// Σ_k e^{-tλ_k} of the Dirichlet operator on B_n (boundary B_{n+1} ∖ B_n)
// across the listed levels. Uses the family's measure, or m ≡ 1 without one.
ConvergenceReport trace_convergence(const GraphFamily& family, double t,
                                    const std::vector<int>& levels, double tolerance);

}  // namespace graphlab
