#include "graphlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "graphlab/error.hpp"

namespace graphlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::DomainMismatch: return "domain_mismatch";
    case ErrorCode::UnknownVertex: return "unknown_vertex";
    case ErrorCode::InfiniteResistance: return "infinite_resistance";
    case ErrorCode::SingularSystem: return "singular_system";
    case ErrorCode::NotApplicable: return "not_applicable";
    case ErrorCode::Io: return "io";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// GraphDraft

std::size_t GraphDraft::add_vertex(const VertexId& id, double killing) {
  if (auto it = index_.find(id); it != index_.end()) {
    duplicates_.push_back(id);
    killing_[it->second] = killing;
    return it->second;
  }
  std::size_t i = ids_.size();
  ids_.push_back(id);
  index_.emplace(id, i);
  killing_.push_back(killing);
  measure_.emplace_back();
  return i;
}

std::size_t GraphDraft::ensure(const VertexId& id) {
  if (auto it = index_.find(id); it != index_.end()) return it->second;
  return add_vertex(id, 0.0);
}

void GraphDraft::set_killing(const VertexId& id, double killing) {
  killing_[ensure(id)] = killing;
}

void GraphDraft::set_measure(const VertexId& id, double mass) {
  measure_[ensure(id)] = mass;
}

void GraphDraft::set_weight(const VertexId& from, const VertexId& to, double weight) {
  std::size_t i = ensure(from);
  std::size_t j = ensure(to);
  entries_[{i, j}] = weight;
}

void GraphDraft::add_edge(const VertexId& u, const VertexId& v, double weight) {
  set_weight(u, v, weight);
  set_weight(v, u, weight);
}

std::vector<std::string> validate_graph(const GraphDraft& draft) {
  std::vector<std::string> out;
  const auto& ids = draft.ids();
  for (const auto& id : draft.duplicate_ids()) out.push_back("duplicate vertex id " + id);
  for (const auto& [key, w] : draft.entries()) {
    auto [i, j] = key;
    if (i == j) {
      out.push_back("self-loop at " + ids[i]);
      continue;
    }
    if (!std::isfinite(w) || w < 0.0) {
      out.push_back("negative weight (" + ids[i] + "," + ids[j] + ")");
    } else if (w == 0.0) {
      out.push_back("zero weight stored for (" + ids[i] + "," + ids[j] + ")");
    }
    auto back = draft.entries().find({j, i});
    double reverse = back == draft.entries().end() ? 0.0 : back->second;
    if (i < j && reverse != w) {
      out.push_back("asymmetric edge (" + ids[i] + "," + ids[j] + ")");
    } else if (i > j && back == draft.entries().end()) {
      out.push_back("asymmetric edge (" + ids[j] + "," + ids[i] + ")");
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    double c = draft.killing()[i];
    if (!std::isfinite(c) || c < 0.0) out.push_back("negative killing term at " + ids[i]);
    const auto& m = draft.measure()[i];
    if (m && !(std::isfinite(*m) && *m > 0.0)) out.push_back("nonpositive measure at " + ids[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph::WeightedGraph(std::vector<VertexId> ids, std::vector<Edge> edges,
                             std::vector<double> killing)
    : ids_(std::move(ids)), edges_(std::move(edges)), killing_(std::move(killing)) {
  const std::size_t n = ids_.size();
  if (killing_.empty()) killing_.assign(n, 0.0);
  if (killing_.size() != n) {
    throw Error(ErrorCode::Validation, "killing term size does not match vertex count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second) {
      throw Error(ErrorCode::Validation, "duplicate vertex id " + ids_[i]);
    }
    if (!std::isfinite(killing_[i]) || killing_[i] < 0.0) {
      throw Error(ErrorCode::Validation, "negative killing term at " + ids_[i]);
    }
  }
  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n) throw Error(ErrorCode::Validation, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::Validation, "self-loop at " + ids_[e.u]);
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!(std::isfinite(e.weight) && e.weight > 0.0)) {
      throw Error(ErrorCode::Validation,
                  "nonpositive weight (" + ids_[e.u] + "," + ids_[e.v] + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw Error(ErrorCode::Validation,
                  "duplicate edge (" + ids_[edges_[k].u] + "," + ids_[edges_[k].v] + ")");
    }
  }
  adjacency_.assign(n, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
  index_components();
}

WeightedGraph WeightedGraph::from_draft(const GraphDraft& draft) {
  auto violations = validate_graph(draft);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid graph: ";
    for (std::size_t k = 0; k < violations.size(); ++k) {
      if (k) msg << "; ";
      msg << violations[k];
    }
    throw Error(ErrorCode::Validation, msg.str());
  }
  std::vector<Edge> edges;
  for (const auto& [key, w] : draft.entries()) {
    if (key.first < key.second) edges.push_back({key.first, key.second, w});
  }
  return WeightedGraph(draft.ids(), std::move(edges), draft.killing());
}

void WeightedGraph::index_components() {
  const std::size_t n = ids_.size();
  component_.assign(n, n);
  component_count_ = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (component_[s] != n) continue;
    component_[s] = component_count_;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& nb : adjacency_[x]) {
        if (component_[nb.vertex] == n) {
          component_[nb.vertex] = component_count_;
          stack.push_back(nb.vertex);
        }
      }
    }
    ++component_count_;
  }
}

std::optional<std::size_t> WeightedGraph::find(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedGraph::index(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "unknown vertex " + id);
  return it->second;
}

double WeightedGraph::weight(std::size_t i, std::size_t j) const {
  const auto& row = adjacency_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Neighbor& a, std::size_t v) { return a.vertex < v; });
  return (it != row.end() && it->vertex == j) ? it->weight : 0.0;
}

bool WeightedGraph::has_killing() const {
  return std::any_of(killing_.begin(), killing_.end(), [](double c) { return c > 0.0; });
}

double WeightedGraph::degree(std::size_t i) const {
  double s = 0.0;
  for (const auto& nb : adjacency_[i]) s += nb.weight;
  return s;
}

// ---------------------------------------------------------------------------
// Measure

Measure::Measure(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw Error(ErrorCode::Validation, "measure must be strictly positive");
    }
  }
  total_ = std::accumulate(values_.begin(), values_.end(), 0.0);
}

Measure Measure::unit(std::size_t n) { return Measure(std::vector<double>(n, 1.0)); }

Measure Measure::pseudo(std::vector<double> values) {
  Measure m;
  for (double v : values) {
    if (!(std::isfinite(v) && v >= 0.0)) {
      throw Error(ErrorCode::Validation, "pseudo measure must be nonnegative");
    }
  }
  m.values_ = std::move(values);
  m.total_ = std::accumulate(m.values_.begin(), m.values_.end(), 0.0);
  m.strict_ = std::all_of(m.values_.begin(), m.values_.end(), [](double v) { return v > 0.0; });
  return m;
}

// ---------------------------------------------------------------------------
// Forms

void require_domain(const WeightedGraph& g, Eigen::Index size) {
  if (static_cast<std::size_t>(size) != g.size()) {
    throw Error(ErrorCode::DomainMismatch, "function/graph vertex set mismatch");
  }
}

namespace {

template <class Vec>
EnergyReport energy_impl(const WeightedGraph& g, const Vec& f) {
  require_domain(g, f.size());
  EnergyReport r;
  for (const auto& e : g.edges()) r.edge_part += e.weight * std::norm(f[e.u] - f[e.v]);
  for (std::size_t x = 0; x < g.size(); ++x) r.potential_part += g.killing(x) * std::norm(f[x]);
  r.energy = r.edge_part + r.potential_part;
  return r;
}

template <class Vec>
typename Vec::Scalar inner_impl(const WeightedGraph& g, const Vec& f, const Vec& h) {
  require_domain(g, f.size());
  require_domain(g, h.size());
  using Eigen::numext::conj;
  typename Vec::Scalar s{0};
  for (const auto& e : g.edges()) {
    s += e.weight * conj(f[e.u] - f[e.v]) * (h[e.u] - h[e.v]);
  }
  for (std::size_t x = 0; x < g.size(); ++x) s += g.killing(x) * conj(f[x]) * h[x];
  return s;
}

template <class Vec>
Vec laplacian_impl(const WeightedGraph& g, const Vec& f, const Measure* m) {
  require_domain(g, f.size());
  if (m && m->size() != g.size()) {
    throw Error(ErrorCode::DomainMismatch, "measure/graph vertex set mismatch");
  }
  Vec out(f.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    typename Vec::Scalar s = g.killing(x) * f[x];
    for (const auto& nb : g.neighbors(x)) s += nb.weight * (f[x] - f[nb.vertex]);
    out[x] = m ? s / (*m)[x] : s;
  }
  return out;
}

}  // namespace

EnergyReport energy(const WeightedGraph& g, const RealFunction& f) { return energy_impl(g, f); }
EnergyReport energy(const WeightedGraph& g, const ComplexFunction& f) { return energy_impl(g, f); }

double energy_inner(const WeightedGraph& g, const RealFunction& f, const RealFunction& h) {
  return inner_impl(g, f, h);
}

std::complex<double> energy_inner(const WeightedGraph& g, const ComplexFunction& f,
                                  const ComplexFunction& h) {
  return inner_impl(g, f, h);
}

RealFunction apply_laplacian(const WeightedGraph& g, const RealFunction& f, const Measure* m) {
  return laplacian_impl(g, f, m);
}

ComplexFunction apply_laplacian(const WeightedGraph& g, const ComplexFunction& f,
                                const Measure* m) {
  return laplacian_impl(g, f, m);
}

double norm_o(const WeightedGraph& g, const RealFunction& f, const VertexId& o) {
  std::size_t io = g.index(o);
  double e = energy(g, f).energy;
  return std::sqrt(e + f[io] * f[io]);
}

Eigen::SparseMatrix<double> form_matrix(const WeightedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(g.size() + 4 * g.edges().size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    auto i = static_cast<Eigen::Index>(x);
    t.emplace_back(i, i, g.killing(x));
  }
  for (const auto& e : g.edges()) {
    auto u = static_cast<Eigen::Index>(e.u);
    auto v = static_cast<Eigen::Index>(e.v);
    t.emplace_back(u, u, e.weight);
    t.emplace_back(v, v, e.weight);
    t.emplace_back(u, v, -e.weight);
    t.emplace_back(v, u, -e.weight);
  }
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

Eigen::MatrixXd dense_form_matrix(const WeightedGraph& g) {
  return Eigen::MatrixXd(form_matrix(g));
}

}  // namespace graphlab
