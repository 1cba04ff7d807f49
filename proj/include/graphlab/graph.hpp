#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace graphlab {

using VertexId = std::string;

// Identifier of the virtual vertex added by the heart reduction. Never
// accepted from serialized input.
inline const VertexId kHeartId = "\xE2\x99\xA5";

using RealFunction = Eigen::VectorXd;
using ComplexFunction = Eigen::VectorXcd;

/// Unvalidated graph description. Weights are stored per ordered pair so
/// that malformed input (asymmetry, self-loops) can be reported instead of
/// silently repaired.
class GraphDraft {
 public:
  std::size_t add_vertex(const VertexId& id, double killing = 0.0);
  void set_killing(const VertexId& id, double killing);
  void set_measure(const VertexId& id, double mass);
  // Directed entry b(from, to).
  void set_weight(const VertexId& from, const VertexId& to, double weight);
  // Both directions.
  void add_edge(const VertexId& u, const VertexId& v, double weight);

  const std::vector<VertexId>& ids() const { return ids_; }
  const std::vector<double>& killing() const { return killing_; }
  const std::vector<std::optional<double>>& measure() const { return measure_; }
  const std::map<std::pair<std::size_t, std::size_t>, double>& entries() const {
    return entries_;
  }
  std::vector<std::string> duplicate_ids() const { return duplicates_; }

 private:
  std::size_t ensure(const VertexId& id);

  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<double> killing_;
  std::vector<std::optional<double>> measure_;
  std::map<std::pair<std::size_t, std::size_t>, double> entries_;
  std::vector<std::string> duplicates_;
};

/// Every violated graph invariant, as human-readable messages. Empty means ok.
std::vector<std::string> validate_graph(const GraphDraft& draft);

struct Edge {
  std::size_t u;  // u < v
  std::size_t v;
  double weight;
};

struct Neighbor {
  std::size_t vertex;
  double weight;
};

/// Weighted graph (b, c) over a finite ordered vertex set. Immutable.
///
/// Edges are stored once, keyed by the ordered pair (u < v); the adjacency
/// lists expose each edge from both endpoints.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  // Throws Error(Validation) when an edge is malformed (u == v, b <= 0,
  // duplicate pair, index out of range) or a killing value is negative.
  WeightedGraph(std::vector<VertexId> ids, std::vector<Edge> edges,
                std::vector<double> killing);

  static WeightedGraph from_draft(const GraphDraft& draft);

  std::size_t size() const { return ids_.size(); }
  const std::vector<VertexId>& ids() const { return ids_; }
  const VertexId& id(std::size_t i) const { return ids_[i]; }
  std::optional<std::size_t> find(const VertexId& id) const;
  // Throws Error(UnknownVertex).
  std::size_t index(const VertexId& id) const;

  std::span<const Neighbor> neighbors(std::size_t i) const { return adjacency_[i]; }
  double weight(std::size_t i, std::size_t j) const;
  const std::vector<Edge>& edges() const { return edges_; }

  double killing(std::size_t i) const { return killing_[i]; }
  const std::vector<double>& killing() const { return killing_; }
  bool has_killing() const;

  // Σ_y b(x, y).
  double degree(std::size_t i) const;

  // Connected components of the edge relation (c is ignored).
  const std::vector<std::size_t>& component_of() const { return component_; }
  std::size_t component_count() const { return component_count_; }
  bool is_connected() const { return component_count_ <= 1; }
  bool is_forest() const { return edges_.size() + component_count_ == ids_.size(); }
  bool is_tree() const { return is_connected() && is_forest(); }

 private:
  void index_components();

  std::vector<VertexId> ids_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> killing_;
  std::vector<std::size_t> component_;
  std::size_t component_count_ = 0;
};

/// Vertex weights m. Strict measures are positive everywhere; pseudo
/// measures (such as M_f) may vanish at some vertices.
class Measure {
 public:
  Measure() = default;
  // Throws Error(Validation) unless every entry is finite and > 0.
  explicit Measure(std::vector<double> values);
  static Measure unit(std::size_t n);
  // Nonnegative entries allowed.
  static Measure pseudo(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  double total() const { return total_; }
  bool strict() const { return strict_; }

 private:
  std::vector<double> values_;
  double total_ = 0.0;
  bool strict_ = true;
};

struct EnergyReport {
  double energy = 0.0;
  double edge_part = 0.0;
  double potential_part = 0.0;
};

EnergyReport energy(const WeightedGraph& g, const RealFunction& f);
EnergyReport energy(const WeightedGraph& g, const ComplexFunction& f);

// Q̃(f, h) = Σ_edges b conj(f(x)-f(y)) (h(x)-h(y)) + Σ c conj(f) h.
double energy_inner(const WeightedGraph& g, const RealFunction& f, const RealFunction& h);
std::complex<double> energy_inner(const WeightedGraph& g, const ComplexFunction& f,
                                  const ComplexFunction& h);

// (𝓛f)(x) = Σ_y b(x,y)(f(x) - f(y)) + c(x) f(x); divided by m(x) when a
// measure is given.
RealFunction apply_laplacian(const WeightedGraph& g, const RealFunction& f,
                             const Measure* m = nullptr);
ComplexFunction apply_laplacian(const WeightedGraph& g, const ComplexFunction& f,
                                const Measure* m = nullptr);

// (Q̃(f) + |f(o)|²)^{1/2}
double norm_o(const WeightedGraph& g, const RealFunction& f, const VertexId& o);

// Matrix of Q̃: edge Laplacian plus diag(c).
Eigen::SparseMatrix<double> form_matrix(const WeightedGraph& g);
Eigen::MatrixXd dense_form_matrix(const WeightedGraph& g);

// Throws Error(DomainMismatch) when sizes disagree.
void require_domain(const WeightedGraph& g, Eigen::Index size);

}  // namespace graphlab
