#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphlab/exhaustion.hpp"
#include "graphlab/graph.hpp"

namespace graphlab {

/// (b, c) rewritten as a graph without killing: a virtual vertex ♥ joined to
/// every x with weight c(x). The augmented vertex order is the base order
/// followed by ♥.
struct HeartGraph {
  WeightedGraph base;
  WeightedGraph augmented;
  VertexId heart_id = kHeartId;
  std::size_t heart_index = 0;
};

// Throws Error(NotApplicable) "nothing to reduce" when c ≡ 0.
HeartGraph reduce(const WeightedGraph& g);

// Extension by f(♥) = 0.
RealFunction extend_by_zero(const HeartGraph& hg, const RealFunction& f);

struct HarmonicComponent {
  // The solution with f(♥) = 1 is constant: no normalized representative.
  bool constant = true;
  RealFunction f;        // on the augmented vertices; normalized when not constant
  double raw_energy = 0.0;  // Q̃_♥ of the unnormalized solution
  std::optional<ConvergenceReport> report;
  int level = -1;
};

// Finite solve of 𝓛_♥ f = 0 on X with f(♥) = 1. Throws Error(InvalidArgument)
// when the augmented graph is disconnected.
HarmonicComponent harmonic_component(const HeartGraph& hg);

// Exhaustion surrogate: on each B_n, ♥ = 1 and the frontier = 0; the energy
// sequence is monitored and the last level's solution is normalized to
// Q̃_♥ = 1.
HarmonicComponent harmonic_component_exhaustion(const GraphFamily& family,
                                                const std::vector<int>& levels, double tolerance);

struct HeartCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

struct HeartComparison {
  VertexId x;
  VertexId y;
  double rho = 0.0;        // on (b, c)
  double rho_heart = 0.0;  // on the augmented graph
  double gap = 0.0;        // |f_H(x) - f_H(y)|, 0 under the constant flag
  double d = 0.0;          // may be +inf across components
  std::optional<double> d_killing;
  double d_heart = 0.0;
  std::vector<HeartCheck> checks;
  std::vector<std::string> notes;
  bool all_hold = true;
};

// ρ ≤ ρ_♥ ≤ ρ + gap, ρ² ≤ d_♥, d_♥ ≤ d and, where both endpoints carry
// killing, d_♥ ≤ d_c. Relative slack `slack`.
std::vector<HeartComparison> compare_metrics(const HeartGraph& hg,
                                             const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                             double slack = 1e-9);

}  // namespace graphlab
