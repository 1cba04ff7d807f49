#pragma once

// Seeded random instances and an independent series-parallel resistance
// oracle shared by the unit and acceptance tests.

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphlab/graph.hpp"

namespace graphlab::testing {

using Rng = std::mt19937_64;

inline double log_uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

inline std::vector<VertexId> numbered_ids(std::size_t n) {
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  return ids;
}

// Uniform random recursive tree with log-uniform weights in [1/4, 4].
inline WeightedGraph random_tree(Rng& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges.push_back({parent(rng), v, log_uniform(rng, 0.25, 4.0)});
  }
  return WeightedGraph(numbered_ids(n), std::move(edges), std::vector<double>(n, 0.0));
}

struct RandomGraphOptions {
  double extra_edge_probability = 0.3;
  double killing_probability = 0.0;  // chance that a vertex gets c > 0
  bool connected = true;
};

// Random spanning tree plus independent extra edges; optional killing.
inline WeightedGraph random_graph(Rng& rng, std::size_t n, const RandomGraphOptions& opt = {}) {
  std::map<std::pair<std::size_t, std::size_t>, double> edges;
  std::bernoulli_distribution extra(opt.extra_edge_probability);
  std::bernoulli_distribution keep(0.7);
  for (std::size_t v = 1; v < n; ++v) {
    if (!opt.connected && !keep(rng)) continue;
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    edges[{parent(rng), v}] = log_uniform(rng, 0.25, 4.0);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!edges.count({u, v}) && extra(rng)) edges[{u, v}] = log_uniform(rng, 0.25, 4.0);
    }
  }
  std::vector<double> killing(n, 0.0);
  std::bernoulli_distribution kill(opt.killing_probability);
  for (auto& c : killing) {
    if (kill(rng)) c = log_uniform(rng, 0.1, 2.0);
  }
  std::vector<Edge> list;
  for (const auto& [key, w] : edges) list.push_back({key.first, key.second, w});
  return WeightedGraph(numbered_ids(n), std::move(list), std::move(killing));
}

inline RealFunction random_function(Rng& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  RealFunction f(static_cast<Eigen::Index>(n));
  for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = g(rng);
  return f;
}

/// Series-parallel network built from its composition tree, with the
/// terminal resistance computed by the series and parallel laws only.
struct SeriesParallel {
  WeightedGraph graph;
  VertexId s;
  VertexId t;
  double r = 0.0;
};

namespace detail {

struct SpNode {
  std::size_t vertices = 2;
  double r = 0.0;
  // Edge list over local vertex numbers; 0 = s, 1 = t.
  std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
};

inline SpNode sp_leaf(double conductance) { return {2, 1.0 / conductance, {{0, 1, conductance}}}; }

// Renumbers b's vertices so that its terminals map to (bs, bt) and its inner
// vertices follow a's.
inline void sp_append(SpNode& out, const SpNode& b, std::size_t bs, std::size_t bt, std::size_t first_inner) {
  auto map = [&](std::size_t v) { return v == 0 ? bs : v == 1 ? bt : first_inner + (v - 2); };
  for (const auto& [u, v, w] : b.edges) out.edges.emplace_back(map(u), map(v), w);
}

inline SpNode sp_series(const SpNode& a, const SpNode& b) {
  // a: s..t, b: s..t; the junction becomes an inner vertex.
  SpNode out;
  const std::size_t junction = a.vertices;  // new inner vertex after a's inner vertices
  out.vertices = a.vertices + b.vertices - 1;
  out.r = a.r + b.r;
  for (const auto& [u, v, w] : a.edges) {
    auto map = [&](std::size_t x) { return x == 1 ? junction : x; };
    out.edges.emplace_back(map(u), map(v), w);
  }
  sp_append(out, b, junction, 1, a.vertices + 1);
  return out;
}

inline SpNode sp_parallel(const SpNode& a, const SpNode& b) {
  SpNode out;
  out.vertices = a.vertices + b.vertices - 2;
  out.r = 1.0 / (1.0 / a.r + 1.0 / b.r);
  out.edges = a.edges;
  sp_append(out, b, 0, 1, a.vertices);
  return out;
}

inline SpNode sp_random(Rng& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<int> choice(0, 2);
  const double g = log_uniform(rng, 0.25, 4.0);
  if (max_vertices < 3) return sp_leaf(g);
  const int c = choice(rng);
  if (c == 0) return sp_leaf(g);
  if (c == 1) {
    // Series adds a vertex: split the budget.
    std::uniform_int_distribution<std::size_t> split(2, max_vertices - 1);
    const std::size_t left = split(rng);
    SpNode a = sp_random(rng, left);
    SpNode b = sp_random(rng, max_vertices + 1 - a.vertices);
    return sp_series(a, b);
  }
  SpNode a = sp_random(rng, max_vertices - 1);
  SpNode b = sp_random(rng, max_vertices + 2 - a.vertices);
  return sp_parallel(a, b);
}

}  // namespace detail

// Random series-parallel network with at most max_vertices vertices.
// Parallel edges are merged by adding conductances, which leaves the
// terminal resistance unchanged.
inline SeriesParallel random_series_parallel(Rng& rng, std::size_t max_vertices) {
  detail::SpNode node = detail::sp_random(rng, max_vertices);
  std::map<std::pair<std::size_t, std::size_t>, double> merged;
  for (const auto& [u, v, w] : node.edges) merged[{std::min(u, v), std::max(u, v)}] += w;
  std::vector<Edge> edges;
  for (const auto& [key, w] : merged) edges.push_back({key.first, key.second, w});
  auto ids = numbered_ids(node.vertices);
  return {WeightedGraph(ids, std::move(edges), std::vector<double>(node.vertices, 0.0)), ids[0], ids[1], node.r};
}

}  // namespace graphlab::testing
