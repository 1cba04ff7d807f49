#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graphlab/graph.hpp"

namespace graphlab {

struct Ball {
  std::vector<VertexId> members;   // graph order
  std::vector<VertexId> frontier;  // members with a neighbor outside
};

// Vertices within n hops of o.
Ball ball(const WeightedGraph& g, const VertexId& o, int n);

// Keeps exactly the edges with both ends in `subset`, and c restricted to it.
// Vertex order follows g. Throws Error(UnknownVertex) if subset ⊄ vertices(g).
WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<VertexId>& subset);
Measure restrict_measure(const WeightedGraph& g, const Measure& m,
                         const std::vector<VertexId>& subset);

// ---------------------------------------------------------------------------
// Convergence monitoring

enum class ConvergenceStatus { Converged, Diverging, Inconclusive };
const char* to_string(ConvergenceStatus s);

struct MonitorOptions {
  double tolerance = 1e-6;
  int window = 3;
  std::optional<double> ceiling;
};

struct ConvergenceReport {
  std::vector<double> values;
  std::vector<int> levels;  // optional labels, parallel to values
  double last_increment = 0.0;
  ConvergenceStatus status = ConvergenceStatus::Inconclusive;
  double tolerance = 0.0;
  int window = 3;

  double last() const { return values.empty() ? 0.0 : values.back(); }
};

// Converged: the last `window` increments are all below tolerance (needs at
// least window+1 terms). Diverging: |last value| exceeds the ceiling while
// the last `window` increments are all at least tolerance.
ConvergenceReport monitor(const std::vector<double>& sequence, const MonitorOptions& options);
inline ConvergenceReport monitor(const std::vector<double>& sequence, double tolerance) {
  return monitor(sequence, MonitorOptions{tolerance, 3, std::nullopt});
}

// ---------------------------------------------------------------------------
// Graph families

/// Level-n truncation of a (possibly infinite) family. Vertices of level n
/// form a prefix of the vertex order of every later level.
struct Truncation {
  int level = 0;
  WeightedGraph graph;
  std::vector<VertexId> frontier;
  std::optional<Measure> measure;
};

/// Closed-form facts a generator certifies about the infinite graph.
/// Tail functions are indexed by level and vanish as the level grows.
struct AnalyticFacts {
  bool finite = false;
  bool tree = false;
  bool locally_finite = true;
  bool killing_free = true;

  // B = (1/2) Σ 1/b over all pairs, and its tail beyond level n.
  std::optional<double> inverse_weight_total;
  // Certified sup of d over the whole graph.
  std::optional<double> d_diameter_bound;
  // Lower bound of diam_d at level n, certified to diverge.
  std::function<double(int)> d_diameter_lower;
  // Every vertex outside level n lies within this d (resp. ρ) distance of
  // level n.
  std::function<double(int)> d_tail;
  std::function<double(int)> rho_tail;
  std::optional<double> rho_diameter_bound;
  // Infinitely many vertices pairwise d-separated by at least this much.
  std::optional<double> d_separation;
  // Infinitely many vertices x with Σ_y b(x,y) + c(x) ≤ this bound; the
  // indicator of x then forces ρ(x, y) ≥ bound^{-1/2} for all y ≠ x.
  std::optional<double> bounded_degree_infinite_set;
  // Total measure under the family's measure rule, when certified.
  std::optional<double> total_measure;
  std::vector<std::string> notes;
};

class GraphFamily {
 public:
  using Builder = std::function<Truncation(int level)>;

  GraphFamily(std::string name, VertexId root, Builder builder, AnalyticFacts facts)
      : name_(std::move(name)),
        root_(std::move(root)),
        builder_(std::move(builder)),
        facts_(std::move(facts)) {}

  const std::string& name() const { return name_; }
  const VertexId& root() const { return root_; }
  const AnalyticFacts& facts() const { return facts_; }
  Truncation build_ball(int level) const;

 private:
  std::string name_;
  VertexId root_;
  Builder builder_;
  AnalyticFacts facts_;
};

}  // namespace graphlab
