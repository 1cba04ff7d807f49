#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphlab/exhaustion.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/metrics.hpp"

namespace graphlab {

enum class ResistanceMethod { ConstrainedSolve, Pseudoinverse, Lagrange, TreePath, Exhaustion };
const char* to_string(ResistanceMethod m);

/// r(x, y) = sup{1/Q̃(g) : g(x) - g(y) = 1} together with the minimizing
/// potential (energy 1/r, unit drop from x to y).
struct ResistanceResult {
  VertexId x;
  VertexId y;
  double r = 0.0;
  RealFunction minimizer;
  ResistanceMethod method = ResistanceMethod::ConstrainedSolve;
  // x and y lie in different edge components that both carry killing.
  bool coupled_through_killing = false;
  // Exhaustion with c ≢ 0 or without local finiteness, where the limit of
  // the truncated resistances need not be r.
  bool limit_not_guaranteed = false;
  std::optional<ConvergenceReport> exhaustion;
};

// Throws Error(InfiniteResistance) when x and y are separated and one side
// has no killing; Error(NotApplicable) for TreePath on a non-tree or with
// c ≢ 0; Error(InvalidArgument) for Exhaustion (use free_resistance).
ResistanceResult resistance_finite(const WeightedGraph& g, const VertexId& x, const VertexId& y,
                                   ResistanceMethod method = ResistanceMethod::ConstrainedSolve);

double rho(const WeightedGraph& g, const VertexId& x, const VertexId& y);

// sup |f(x) - f(y)| over ‖f‖_o ≤ 1: the resistance of the form Q̃ + |f(o)|².
double rho_o(const WeightedGraph& g, const VertexId& x, const VertexId& y, const VertexId& o);

// Copy of g with `amount` added to c(o).
WeightedGraph with_extra_killing(const WeightedGraph& g, std::size_t o, double amount);

// All-pairs ρ (dense; intended for graphs up to a few thousand vertices).
PseudometricTable rho_table(const WeightedGraph& g);
// All-pairs r = ρ².
PseudometricTable resistance_table(const WeightedGraph& g);

// Resistance on the level-n truncations for each listed level containing
// both vertices; the sequence must be nonincreasing (Error(Internal)
// otherwise).
ResistanceResult free_resistance(const GraphFamily& family, const VertexId& x, const VertexId& y,
                                 const std::vector<int>& levels, double tolerance);

enum class DiameterStatus { Finite, Infinite, Inconclusive };
const char* to_string(DiameterStatus s);

struct DiameterEstimate {
  double lower_bound = 0.0;
  std::optional<double> upper_bound;
  ConvergenceReport report;
  DiameterStatus status = DiameterStatus::Inconclusive;
  int reference_level = 0;
  std::vector<std::string> evidence;
};

// ρ-diameter of each listed level, measured with ρ of the largest level that
// fits in `vertex_budget`. Finite needs convergence plus a certified upper
// bound; Infinite needs a certified divergent lower bound.
DiameterEstimate rho_diameter_estimate(const GraphFamily& family, const std::vector<int>& levels,
                                       double tolerance, std::size_t vertex_budget = 1500);

}  // namespace graphlab
