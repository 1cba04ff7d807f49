#pragma once

#include <string>
#include <vector>

#include "graphlab/exhaustion.hpp"
#include "graphlab/graph.hpp"

namespace graphlab {

struct DirichletProblem {
  WeightedGraph graph;
  std::vector<VertexId> boundary;  // nonempty
  std::vector<double> values;      // parallel to boundary
};

// Solution of 𝓛u = 0 off the boundary with u = φ on it. Throws
// Error(SingularSystem) naming an interior component that has neither
// killing nor a boundary neighbour.
RealFunction solve_dirichlet(const DirichletProblem& p);

struct MaxPrincipleReport {
  bool holds = true;           // max |u| ≤ max |φ| + slack
  bool sandwich_holds = true;  // u within [min φ, max φ] (widened to 0 when c ≢ 0)
  double max_abs_solution = 0.0;
  double max_abs_boundary = 0.0;
  VertexId argmax_solution;
  VertexId argmax_boundary;
  double lower = 0.0;  // sandwich bounds that were checked
  double upper = 0.0;
};

MaxPrincipleReport check_max_principle(const DirichletProblem& p, const RealFunction& u,
                                       double slack = 1e-10);

enum class CapacityVerdict { Recurrent, Transient, Inconclusive };
const char* to_string(CapacityVerdict v);

struct CapacitySequence {
  VertexId base;
  std::vector<double> values;
  ConvergenceReport report;
  CapacityVerdict verdict = CapacityVerdict::Inconclusive;
};

// cap_n = min{Q̃(v) : v(o) = 1, v = 0 on the frontier of B_n}, the energy of
// the Dirichlet solution between o and the frontier. Levels where o lies on
// the frontier are skipped. With an empty frontier v is only pinned at o.
// The verdict needs convergence: recurrent when the limit is below
// `tolerance`, transient when above.
CapacitySequence capacity(const GraphFamily& family, const VertexId& o,
                          const std::vector<int>& levels, double tolerance);

struct DefectSequence {
  std::vector<double> values;
  std::vector<int> reference_levels;  // N used for each probe level n
  ConvergenceReport report;
  CapacityVerdict verdict = CapacityVerdict::Inconclusive;
  bool lower_bound = true;  // the ℓ² part is truncated to B_N
};

// defect_n = min over v supported in B_n of Q̃_N(1 - v) + Σ_{B_N} m (1 - v)²
// on the reference level N = reference_factor · n. Requires a family measure.
DefectSequence constant_approximation_defect(const GraphFamily& family,
                                             const std::vector<int>& levels, double tolerance,
                                             int reference_factor = 4);

}  // namespace graphlab
