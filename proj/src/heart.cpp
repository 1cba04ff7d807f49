#include "graphlab/heart.hpp"

#include <cmath>
#include <limits>

#include "graphlab/error.hpp"
#include "graphlab/harmonic.hpp"
#include "graphlab/metrics.hpp"
#include "graphlab/resistance.hpp"

namespace graphlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kConstantEnergy = 1e-12;

double rho_or_inf(const WeightedGraph& g, const VertexId& x, const VertexId& y) {
  try {
    return rho(g, x, y);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InfiniteResistance) return kInf;
    throw;
  }
}

double distance(const WeightedGraph& g, const LengthFunction& length, const VertexId& x,
                const VertexId& y) {
  PseudometricTable t = path_metric(g, length, x);
  return t.from_source(g.index(y)).as_double();
}

}  // namespace

HeartGraph reduce(const WeightedGraph& g) {
  if (!g.has_killing()) throw Error(ErrorCode::NotApplicable, "nothing to reduce");
  if (g.find(kHeartId)) throw Error(ErrorCode::Validation, "reserved vertex id in base graph");
  HeartGraph hg;
  hg.base = g;
  std::vector<VertexId> ids = g.ids();
  ids.push_back(kHeartId);
  hg.heart_index = g.size();
  std::vector<Edge> edges = g.edges();
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (g.killing(x) > 0.0) edges.push_back({x, hg.heart_index, g.killing(x)});
  }
  hg.augmented = WeightedGraph(std::move(ids), std::move(edges), std::vector<double>(g.size() + 1, 0.0));
  return hg;
}

RealFunction extend_by_zero(const HeartGraph& hg, const RealFunction& f) {
  require_domain(hg.base, f.size());
  RealFunction out = RealFunction::Zero(static_cast<Eigen::Index>(hg.augmented.size()));
  out.head(f.size()) = f;
  return out;
}

HarmonicComponent harmonic_component(const HeartGraph& hg) {
  if (!hg.augmented.is_connected()) {
    throw Error(ErrorCode::InvalidArgument, "augmented graph is disconnected");
  }
  DirichletProblem p{hg.augmented, {hg.heart_id}, {1.0}};
  HarmonicComponent out;
  out.f = solve_dirichlet(p);
  out.raw_energy = energy(hg.augmented, out.f).energy;
  out.constant = out.raw_energy < kConstantEnergy;
  if (!out.constant) out.f /= std::sqrt(out.raw_energy);
  return out;
}

HarmonicComponent harmonic_component_exhaustion(const GraphFamily& family,
                                                const std::vector<int>& levels, double tolerance) {
  HarmonicComponent out;
  std::vector<double> energies;
  std::vector<int> used;
  for (int level : levels) {
    Truncation t = family.build_ball(level);
    HeartGraph hg = reduce(t.graph);
    DirichletProblem p{hg.augmented, {hg.heart_id}, {1.0}};
    for (const auto& id : t.frontier) {
      p.boundary.push_back(id);
      p.values.push_back(0.0);
    }
    out.f = solve_dirichlet(p);
    out.raw_energy = energy(hg.augmented, out.f).energy;
    out.level = t.level;
    energies.push_back(out.raw_energy);
    used.push_back(level);
  }
  if (energies.empty()) throw Error(ErrorCode::InvalidArgument, "no levels given");
  out.report = monitor(energies, tolerance);
  out.report->levels = used;
  out.constant = out.raw_energy < kConstantEnergy;
  if (!out.constant) out.f /= std::sqrt(out.raw_energy);
  return out;
}

std::vector<HeartComparison> compare_metrics(const HeartGraph& hg,
                                             const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                             double slack) {
  std::optional<HarmonicComponent> harmonic;
  std::string harmonic_note;
  if (hg.augmented.is_connected()) {
    harmonic = harmonic_component(hg);
  } else {
    harmonic_note = "augmented graph disconnected: gap taken as 0";
  }

  // d_c lives on the vertices with positive killing.
  std::vector<VertexId> killed;
  for (std::size_t x = 0; x < hg.base.size(); ++x) {
    if (hg.base.killing(x) > 0.0) killed.push_back(hg.base.id(x));
  }
  WeightedGraph killed_graph = induced_subgraph(hg.base, killed);

  auto check = [&](HeartComparison& c, std::string name, double lhs, double rhs) {
    bool ok = std::isinf(rhs) || lhs <= rhs * (1.0 + slack) + slack;
    c.checks.push_back({std::move(name), lhs, rhs, ok});
    c.all_hold = c.all_hold && ok;
  };

  std::vector<HeartComparison> out;
  for (const auto& [x, y] : pairs) {
    HeartComparison c;
    c.x = x;
    c.y = y;
    c.rho = rho_or_inf(hg.base, x, y);
    c.rho_heart = rho_or_inf(hg.augmented, x, y);
    if (harmonic && !harmonic->constant) {
      c.gap = std::abs(harmonic->f[hg.augmented.index(x)] - harmonic->f[hg.augmented.index(y)]);
    }
    if (harmonic && harmonic->constant) c.notes.push_back("harmonic part is constant: gap 0");
    if (!harmonic_note.empty()) c.notes.push_back(harmonic_note);
    c.d = distance(hg.base, LengthFunction::inverse_b(), x, y);
    c.d_heart = distance(hg.augmented, LengthFunction::inverse_b(), x, y);
    const std::size_t ix = hg.base.index(x);
    const std::size_t iy = hg.base.index(y);
    if (hg.base.killing(ix) > 0.0 && hg.base.killing(iy) > 0.0) {
      c.d_killing = distance(killed_graph, LengthFunction::killing(), x, y);
    } else {
      c.notes.push_back("d_c skipped: c vanishes at " + (hg.base.killing(ix) > 0.0 ? y : x));
    }

    check(c, "rho <= rho_heart", c.rho, c.rho_heart);
    check(c, "rho_heart <= rho + gap", c.rho_heart, c.rho + c.gap);
    check(c, "rho^2 <= d_heart", c.rho * c.rho, c.d_heart);
    check(c, "d_heart <= d", c.d_heart, c.d);
    if (c.d_killing) check(c, "d_heart <= d_c", c.d_heart, *c.d_killing);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace graphlab
