#include "graphlab/exhaustion.hpp"

#include <cmath>
#include <deque>

#include "graphlab/error.hpp"

namespace graphlab {

Ball ball(const WeightedGraph& g, const VertexId& o, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "ball radius must be nonnegative");
  const std::size_t source = g.index(o);
  std::vector<int> hops(g.size(), -1);
  std::deque<std::size_t> queue{source};
  hops[source] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    if (hops[x] == n) continue;
    for (const auto& nb : g.neighbors(x)) {
      if (hops[nb.vertex] < 0) {
        hops[nb.vertex] = hops[x] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  Ball out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (hops[x] < 0) continue;
    out.members.push_back(g.id(x));
    for (const auto& nb : g.neighbors(x)) {
      if (hops[nb.vertex] < 0) {
        out.frontier.push_back(g.id(x));
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<std::ptrdiff_t> subset_map(const WeightedGraph& g, const std::vector<VertexId>& subset) {
  std::vector<char> keep(g.size(), 0);
  for (const auto& id : subset) keep[g.index(id)] = 1;
  std::vector<std::ptrdiff_t> map(g.size(), -1);
  std::ptrdiff_t next = 0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (keep[x]) map[x] = next++;
  }
  return map;
}

}  // namespace

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<VertexId>& subset) {
  auto map = subset_map(g, subset);
  std::vector<VertexId> ids;
  std::vector<double> killing;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (map[x] >= 0) {
      ids.push_back(g.id(x));
      killing.push_back(g.killing(x));
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (map[e.u] >= 0 && map[e.v] >= 0) {
      edges.push_back({static_cast<std::size_t>(map[e.u]), static_cast<std::size_t>(map[e.v]),
                       e.weight});
    }
  }
  return WeightedGraph(std::move(ids), std::move(edges), std::move(killing));
}

Measure restrict_measure(const WeightedGraph& g, const Measure& m,
                         const std::vector<VertexId>& subset) {
  auto map = subset_map(g, subset);
  std::vector<double> values;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (map[x] >= 0) values.push_back(m[x]);
  }
  return m.strict() ? Measure(std::move(values)) : Measure::pseudo(std::move(values));
}

const char* to_string(ConvergenceStatus s) {
  switch (s) {
    case ConvergenceStatus::Converged: return "converged";
    case ConvergenceStatus::Diverging: return "diverging";
    case ConvergenceStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ConvergenceReport monitor(const std::vector<double>& sequence, const MonitorOptions& options) {
  if (sequence.empty()) throw Error(ErrorCode::InvalidArgument, "monitor needs a nonempty sequence");
  if (!(options.tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (options.window < 1) throw Error(ErrorCode::InvalidArgument, "window must be at least 1");
  ConvergenceReport r;
  r.values = sequence;
  r.tolerance = options.tolerance;
  r.window = options.window;
  const std::size_t n = sequence.size();
  if (n >= 2) r.last_increment = std::abs(sequence[n - 1] - sequence[n - 2]);
  const auto k = static_cast<std::size_t>(options.window);
  if (n < k + 1) return r;

  bool all_small = true;
  bool all_large = true;
  for (std::size_t i = n - k; i < n; ++i) {
    double inc = std::abs(sequence[i] - sequence[i - 1]);
    if (!(inc < options.tolerance)) all_small = false;
    if (!(inc >= options.tolerance)) all_large = false;
  }
  if (all_small) {
    r.status = ConvergenceStatus::Converged;
  } else if (options.ceiling && std::abs(sequence.back()) > *options.ceiling && all_large) {
    r.status = ConvergenceStatus::Diverging;
  }
  return r;
}

Truncation GraphFamily::build_ball(int level) const {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "level must be nonnegative");
  Truncation t = builder_(level);
  t.level = level;
  return t;
}

}  // namespace graphlab
