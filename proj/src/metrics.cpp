#include "graphlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "graphlab/error.hpp"
#include "graphlab/parallel.hpp"

namespace graphlab {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double Distance::as_double() const { return infinite_ ? kInf : value_; }

PseudometricTable::PseudometricTable(std::vector<VertexId> ids, std::optional<std::size_t> source,
                                     std::vector<Distance> entries)
    : ids_(std::move(ids)), source_(source), entries_(std::move(entries)) {
  const std::size_t expect = source_ ? ids_.size() : ids_.size() * ids_.size();
  if (entries_.size() != expect) {
    throw Error(ErrorCode::InvalidArgument, "pseudometric table has the wrong number of entries");
  }
}

Distance PseudometricTable::at(std::size_t x, std::size_t y) const {
  if (source_) {
    if (x == *source_) return entries_[y];
    if (y == *source_) return entries_[x];
    throw Error(ErrorCode::InvalidArgument, "single-source table queried off its source");
  }
  return entries_[x * ids_.size() + y];
}

// ---------------------------------------------------------------------------
// LengthFunction

LengthFunction LengthFunction::inverse_b() { return inverse_b_pow(1.0); }

LengthFunction LengthFunction::inverse_b_pow(double s) {
  if (!(s > 0.0)) throw Error(ErrorCode::InvalidArgument, "length exponent must be positive");
  LengthFunction l;
  l.kind_ = Kind::InverseWeight;
  l.power_ = s;
  return l;
}

LengthFunction LengthFunction::sqrt_mm_over_b(const Measure& m, double power) {
  if (!(power > 0.0)) throw Error(ErrorCode::InvalidArgument, "length exponent must be positive");
  LengthFunction l;
  l.kind_ = Kind::SqrtMassOverWeight;
  l.power_ = power;
  l.mass_ = m.values();
  return l;
}

LengthFunction LengthFunction::killing() {
  LengthFunction l;
  l.kind_ = Kind::Killing;
  return l;
}

LengthFunction LengthFunction::custom(CustomFn fn, std::string label) {
  LengthFunction l;
  l.kind_ = Kind::Custom;
  l.custom_ = std::move(fn);
  l.label_ = std::move(label);
  return l;
}

std::string LengthFunction::label() const {
  std::ostringstream s;
  switch (kind_) {
    case Kind::InverseWeight: s << "inverse_b"; break;
    case Kind::SqrtMassOverWeight: s << "sqrt_mm_over_b"; break;
    case Kind::Killing: s << "killing"; break;
    case Kind::Custom: return label_;
  }
  if (power_ != 1.0) s << "^" << power_;
  return s.str();
}

double LengthFunction::evaluate(const WeightedGraph& g, std::size_t x, std::size_t y) const {
  double b = g.weight(x, y);
  if (b == 0.0) return 0.0;
  double base = 0.0;
  switch (kind_) {
    case Kind::InverseWeight: base = 1.0 / b; break;
    case Kind::SqrtMassOverWeight:
      if (mass_.size() != g.size()) {
        throw Error(ErrorCode::DomainMismatch, "measure/graph vertex set mismatch");
      }
      base = std::sqrt(mass_[x] * mass_[y]) / b;
      break;
    case Kind::Killing: {
      for (std::size_t v : {x, y}) {
        if (!(g.killing(v) > 0.0)) {
          throw Error(ErrorCode::NotApplicable,
                      "killing length needs c > 0 at vertex " + g.id(v));
        }
      }
      base = 1.0 / g.killing(x) + 1.0 / g.killing(y);
      break;
    }
    case Kind::Custom: {
      double v = custom_(x, y, b);
      if (!(v >= 0.0)) throw Error(ErrorCode::InvalidArgument, "length must be nonnegative");
      return v;
    }
  }
  return power_ == 1.0 ? base : std::pow(base, power_);
}

void LengthFunction::require_valid(const WeightedGraph& g) const {
  for (const auto& e : g.edges()) (void)evaluate(g, e.u, e.v);
}

// ---------------------------------------------------------------------------
// Shortest paths

namespace {

std::vector<Distance> dijkstra(const WeightedGraph& g, const std::vector<std::vector<double>>& len,
                               std::size_t source) {
  std::vector<double> dist(g.size(), kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    auto nbs = g.neighbors(x);
    for (std::size_t k = 0; k < nbs.size(); ++k) {
      double nd = d + len[x][k];
      if (nd < dist[nbs[k].vertex]) {
        dist[nbs[k].vertex] = nd;
        heap.push({nd, nbs[k].vertex});
      }
    }
  }
  std::vector<Distance> out(g.size());
  for (std::size_t y = 0; y < g.size(); ++y) {
    out[y] = std::isinf(dist[y]) ? Distance::infinite() : Distance(dist[y]);
  }
  return out;
}

}  // namespace

PseudometricTable path_metric(const WeightedGraph& g, const LengthFunction& length,
                              const std::optional<VertexId>& source) {
  std::vector<std::vector<double>> len(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (const auto& nb : g.neighbors(x)) len[x].push_back(length.evaluate(g, x, nb.vertex));
  }
  if (source) {
    std::size_t s = g.index(*source);
    return PseudometricTable(g.ids(), s, dijkstra(g, len, s));
  }
  const std::size_t n = g.size();
  std::vector<Distance> entries(n * n);
  parallel_for(n, [&](std::size_t s) {
    auto row = dijkstra(g, len, s);
    std::copy(row.begin(), row.end(), entries.begin() + static_cast<std::ptrdiff_t>(s * n));
  });
  // Symmetrize: floating sums along the same path may differ in the last bit
  // depending on traversal direction.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      Distance& a = entries[x * n + y];
      Distance& b = entries[y * n + x];
      if (a.is_finite() && b.is_finite() && a.value() != b.value()) {
        a = b = Distance(std::min(a.value(), b.value()));
      }
    }
  }
  return PseudometricTable(g.ids(), std::nullopt, std::move(entries));
}

std::vector<Distance> distance_to_set(const PseudometricTable& sigma,
                                      const std::vector<std::size_t>& set) {
  if (!sigma.all_pairs()) throw Error(ErrorCode::InvalidArgument, "distance_to_set needs all pairs");
  if (set.empty()) throw Error(ErrorCode::InvalidArgument, "distance_to_set needs a nonempty set");
  std::vector<Distance> out(sigma.size(), Distance::infinite());
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    for (std::size_t a : set) {
      Distance d = sigma.at(x, a);
      if (d.is_finite() && (out[x].is_infinite() || d.value() < out[x].value())) out[x] = d;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intrinsic metrics

std::vector<double> intrinsic_load(const WeightedGraph& g, const PseudometricTable& sigma) {
  if (!sigma.all_pairs() || sigma.size() != g.size()) {
    throw Error(ErrorCode::InvalidArgument, "intrinsic check needs an all-pairs table on g");
  }
  std::vector<double> load(g.size(), 0.0);
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (const auto& nb : g.neighbors(x)) {
      Distance s = sigma.at(x, nb.vertex);
      if (s.is_infinite()) {
        throw Error(ErrorCode::InvalidArgument,
                    "missing sigma entry on edge (" + g.id(x) + "," + g.id(nb.vertex) + ")");
      }
      load[x] += 0.5 * nb.weight * s.value() * s.value();
    }
  }
  return load;
}

IntrinsicCheck verify_intrinsic(const WeightedGraph& g, const Measure& m,
                                const PseudometricTable& sigma) {
  if (m.size() != g.size()) throw Error(ErrorCode::DomainMismatch, "measure/graph vertex set mismatch");
  auto load = intrinsic_load(g, sigma);
  IntrinsicCheck out;
  out.worst_ratio = -1.0;
  for (std::size_t x = 0; x < g.size(); ++x) {
    double ratio;
    if (m[x] > 0.0) {
      ratio = load[x] / m[x];
    } else {
      ratio = load[x] == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (ratio > out.worst_ratio) {
      out.worst_ratio = ratio;
      out.worst_vertex = x;
    }
  }
  if (g.size() == 0) out.worst_ratio = 0.0;
  out.ok = out.worst_ratio <= 1.0 + 1e-12;
  return out;
}

SigmaFromFunction sigma_from_function(const WeightedGraph& g, const RealFunction& f) {
  require_domain(g, f.size());
  const std::size_t n = g.size();
  std::vector<Distance> entries(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = Distance(std::abs(f[x] - f[y]));
  }
  std::vector<double> mass(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    double s = 0.0;
    for (const auto& nb : g.neighbors(x)) {
      double diff = f[x] - f[nb.vertex];
      s += nb.weight * diff * diff;
    }
    mass[x] = 0.5 * s + g.killing(x) * f[x] * f[x];
  }
  return {PseudometricTable(g.ids(), std::nullopt, std::move(entries)),
          Measure::pseudo(std::move(mass))};
}

PseudometricTable scale(const PseudometricTable& t, double factor) {
  if (!(factor >= 0.0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be nonnegative");
  const std::size_t n = t.size();
  std::vector<Distance> entries;
  if (t.all_pairs()) {
    entries.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Distance d = t.at(x, y);
        entries.push_back(d.is_finite() ? Distance(d.value() * factor) : d);
      }
    }
  } else {
    for (std::size_t y = 0; y < n; ++y) {
      Distance d = t.from_source(y);
      entries.push_back(d.is_finite() ? Distance(d.value() * factor) : d);
    }
  }
  return PseudometricTable(t.ids(), t.source(), std::move(entries));
}

SigmaBoundsReport sigma_upper_bounds(const WeightedGraph& g, const Measure& m,
                                     const PseudometricTable& sigma,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  SigmaBoundsReport report;
  report.intrinsic = verify_intrinsic(g, m, sigma);
  if (!report.intrinsic.ok) {
    std::ostringstream msg;
    msg << "sigma is not intrinsic: worst vertex " << g.id(report.intrinsic.worst_vertex)
        << " ratio " << report.intrinsic.worst_ratio;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  auto d = path_metric(g, LengthFunction::inverse_b());
  auto dm = path_metric(g, LengthFunction::sqrt_mm_over_b(m, 0.5));
  const double slack = 1e-12;
  auto add = [&](std::size_t x, std::size_t y, const char* name, double lhs, double rhs) {
    bool holds = lhs <= rhs * (1.0 + slack) + slack;
    report.checks.push_back({x, y, name, lhs, rhs, holds});
    report.all_hold = report.all_hold && holds;
  };
  for (auto [x, y] : pairs) {
    Distance s = sigma.at(x, y);
    if (s.is_infinite()) continue;
    double s2 = s.value() * s.value();
    Distance dxy = d.at(x, y);
    if (dxy.is_finite()) add(x, y, "sigma^2 <= 2 m(X) d", s2, 2.0 * m.total() * dxy.value());
    double b = g.weight(x, y);
    if (b > 0.0) {
      add(x, y, "sigma^2 <= 2 (m(x) min m(y)) / b", s2, 2.0 * std::min(m[x], m[y]) / b);
    }
    Distance dmxy = dm.at(x, y);
    if (dmxy.is_finite()) add(x, y, "sigma <= sqrt2 d_{m,1/2}", s.value(), std::sqrt(2.0) * dmxy.value());
  }
  return report;
}

}  // namespace graphlab
