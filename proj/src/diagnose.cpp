#include "graphlab/diagnose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "graphlab/error.hpp"
#include "graphlab/generators.hpp"

namespace graphlab {

const char* to_string(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::HoldsCertified: return "holds(certified)";
    case ConditionStatus::FailsCertified: return "fails(certified)";
    case ConditionStatus::HoldsEmpirical: return "holds(empirical)";
    case ConditionStatus::FailsEmpirical: return "fails(empirical)";
    case ConditionStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

bool holds(ConditionStatus s) {
  return s == ConditionStatus::HoldsCertified || s == ConditionStatus::HoldsEmpirical;
}
bool fails(ConditionStatus s) {
  return s == ConditionStatus::FailsCertified || s == ConditionStatus::FailsEmpirical;
}
bool certified(ConditionStatus s) {
  return s == ConditionStatus::HoldsCertified || s == ConditionStatus::FailsCertified;
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::A: return "A";
    case Condition::B: return "B";
    case Condition::C: return "C";
    case Condition::D: return "D";
  }
  return "?";
}

const char* condition_meaning(Condition c) {
  switch (c) {
    case Condition::A: return "totally bounded in d";
    case Condition::B: return "totally bounded in rho";
    case Condition::C: return "totally bounded in every intrinsic metric of a finite measure";
    case Condition::D: return "canonically compactifiable";
  }
  return "";
}

const char* to_string(NetSeries::Trend t) {
  switch (t) {
    case NetSeries::Trend::Stable: return "stable";
    case NetSeries::Trend::Growing: return "growing";
    case NetSeries::Trend::Unclear: return "unclear";
  }
  return "unclear";
}

bool ClassificationReport::all_certified() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionEntry& e) { return certified(e.status); });
}

std::size_t greedy_net_size(const PseudometricTable& table, std::size_t count, double eps) {
  if (count == 0) return 0;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> gap(count, inf);
  std::size_t center = 0;
  std::size_t size = 0;
  while (true) {
    ++size;
    for (std::size_t y = 0; y < count; ++y) gap[y] = std::min(gap[y], table.at(center, y).as_double());
    auto far = std::max_element(gap.begin(), gap.end());
    if (*far <= eps) break;
    center = static_cast<std::size_t>(far - gap.begin());
  }
  return size;
}

namespace {

using Implication = std::pair<Condition, Condition>;

// Transitively closed, so a gap in the middle of a chain cannot hide a
// violation at its ends.
std::vector<Implication> implications(bool killing_free) {
  std::vector<Implication> out{{Condition::A, Condition::B}, {Condition::B, Condition::D}, {Condition::A, Condition::D}};
  if (killing_free) {
    out.push_back({Condition::B, Condition::C});
    out.push_back({Condition::C, Condition::D});
    out.push_back({Condition::A, Condition::C});
  }
  return out;
}

void certify(ClassificationReport& r, Condition c, bool hold, const std::string& why) {
  ConditionEntry& e = r.at(c);
  const ConditionStatus want = hold ? ConditionStatus::HoldsCertified : ConditionStatus::FailsCertified;
  if (certified(e.status) && e.status != want) {
    throw Error(ErrorCode::Internal, std::string("contradictory certificates for (") + condition_name(c) +
                                         "): " + why);
  }
  e.status = want;
  e.evidence.push_back(why);
}

// Closes certified statuses under the implication lattice.
void propagate_certified(ClassificationReport& r) {
  const auto rules = implications(r.killing_free);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [p, q] : rules) {
      const std::string tag = std::string("(") + condition_name(p) + ") => (" + condition_name(q) + ")";
      if (r.at(p).status == ConditionStatus::HoldsCertified && r.at(q).status != ConditionStatus::HoldsCertified) {
        certify(r, q, true, "implied by " + tag);
        changed = true;
      }
      if (r.at(q).status == ConditionStatus::FailsCertified && r.at(p).status != ConditionStatus::FailsCertified) {
        certify(r, p, false, "contrapositive of " + tag);
        changed = true;
      }
    }
  }
}

// Empirical statuses never override certificates; disagreements with the
// lattice demote the empirical side to inconclusive.
void reconcile_empirical(ClassificationReport& r) {
  const auto rules = implications(r.killing_free);
  for (int round = 0; round < 8; ++round) {
    bool changed = false;
    for (const auto& [p, q] : rules) {
      ConditionEntry& ep = r.at(p);
      ConditionEntry& eq = r.at(q);
      if (!(holds(ep.status) && fails(eq.status))) continue;
      const std::string note = std::string("empirical result conflicts with (") + condition_name(p) +
                               ") => (" + condition_name(q) + ")";
      if (!certified(ep.status)) {
        ep.status = ConditionStatus::Inconclusive;
        ep.evidence.push_back(note);
      }
      if (!certified(eq.status)) {
        eq.status = ConditionStatus::Inconclusive;
        eq.evidence.push_back(note);
      }
      changed = true;
    }
    // Fill remaining gaps from empirical neighbours.
    for (const auto& [p, q] : rules) {
      const std::string tag = std::string("(") + condition_name(p) + ") => (" + condition_name(q) + ")";
      if (holds(r.at(p).status) && r.at(q).status == ConditionStatus::Inconclusive) {
        r.at(q).status = ConditionStatus::HoldsEmpirical;
        r.at(q).evidence.push_back("suggested by " + tag);
        changed = true;
      }
      if (fails(r.at(q).status) && r.at(p).status == ConditionStatus::Inconclusive) {
        r.at(p).status = ConditionStatus::FailsEmpirical;
        r.at(p).evidence.push_back("suggested by the contrapositive of " + tag);
        changed = true;
      }
    }
    if (!changed) break;
  }
}

NetSeries::Trend trend_of(const std::vector<std::size_t>& sizes) {
  const std::size_t n = sizes.size();
  if (n < 3) return NetSeries::Trend::Unclear;
  if (sizes[n - 1] == sizes[n - 2] && sizes[n - 2] == sizes[n - 3]) return NetSeries::Trend::Stable;
  if (sizes[n - 1] > sizes[n - 2] && sizes[n - 2] > sizes[n - 3]) return NetSeries::Trend::Growing;
  return NetSeries::Trend::Unclear;
}

NetSeries net_series(std::string metric, const PseudometricTable& table, const std::vector<int>& levels,
                     const std::vector<std::size_t>& counts, const std::vector<double>& eps) {
  NetSeries s;
  s.metric = std::move(metric);
  s.levels = levels;
  s.eps = eps;
  bool any_growing = false;
  bool all_stable = true;
  for (double e : eps) {
    std::vector<std::size_t> row;
    for (std::size_t count : counts) row.push_back(greedy_net_size(table, count, e));
    auto t = trend_of(row);
    any_growing = any_growing || t == NetSeries::Trend::Growing;
    all_stable = all_stable && t == NetSeries::Trend::Stable;
    s.sizes.push_back(std::move(row));
  }
  s.trend = any_growing ? NetSeries::Trend::Growing
                        : (all_stable ? NetSeries::Trend::Stable : NetSeries::Trend::Unclear);
  return s;
}

ConditionStatus empirical_status(NetSeries::Trend t) {
  switch (t) {
    case NetSeries::Trend::Stable: return ConditionStatus::HoldsEmpirical;
    case NetSeries::Trend::Growing: return ConditionStatus::FailsEmpirical;
    case NetSeries::Trend::Unclear: return ConditionStatus::Inconclusive;
  }
  return ConditionStatus::Inconclusive;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

void apply_empirical(ClassificationReport& r, Condition c, ConditionStatus s, const std::string& why) {
  ConditionEntry& e = r.at(c);
  if (certified(e.status)) {
    e.evidence.push_back("empirical: " + why);
    return;
  }
  e.status = s;
  e.evidence.push_back(why);
}

PseudometricTable sigma_table(const RealFunction& f) {
  const auto n = static_cast<std::size_t>(f.size());
  std::vector<Distance> entries(n * n);
  std::vector<VertexId> ids(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) entries[x * n + y] = Distance(std::abs(f[x] - f[y]));
  }
  return PseudometricTable(std::move(ids), std::nullopt, std::move(entries));
}

}  // namespace

void check_implications(const ClassificationReport& report) {
  for (const auto& [p, q] : implications(report.killing_free)) {
    if (holds(report.at(p).status) && fails(report.at(q).status)) {
      throw Error(ErrorCode::Internal, std::string("classification violates (") + condition_name(p) +
                                           ") => (" + condition_name(q) + ")");
    }
  }
}

ClassificationReport diagnose(const WeightedGraph& g, const DiagnoseOptions& options) {
  ClassificationReport r;
  r.subject = "graph with " + std::to_string(g.size()) + " vertices";
  r.finite = true;
  r.killing_free = !g.has_killing();
  for (auto c : {Condition::A, Condition::B, Condition::C, Condition::D}) {
    certify(r, c, true, "finite vertex set: every pseudometric is totally bounded and every function is bounded");
  }
  if (g.size() > 0 && g.size() <= options.vertex_budget) {
    PseudometricTable d = path_metric(g, LengthFunction::inverse_b());
    double diam = 0.0;
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (std::size_t y = 0; y < g.size(); ++y) diam = std::max(diam, d.at(x, y).as_double());
    }
    r.d_diameter_bound = diam;
  }
  check_implications(r);
  return r;
}

ClassificationReport diagnose(const GraphFamily& family, const DiagnoseOptions& options) {
  if (options.max_level < 0) throw Error(ErrorCode::InvalidArgument, "max level must be nonnegative");
  const AnalyticFacts& facts = family.facts();
  ClassificationReport r;
  r.subject = family.name();
  r.max_level = options.max_level;
  r.finite = facts.finite;
  r.killing_free = facts.killing_free;
  r.notes = facts.notes;
  r.d_diameter_bound = facts.d_diameter_bound;
  const int n = options.max_level;

  // Certificates from the generator's analytic facts.
  if (facts.finite) {
    for (auto c : {Condition::A, Condition::B, Condition::C, Condition::D}) {
      certify(r, c, true, "finite vertex set");
    }
  }
  if (facts.d_tail) {
    certify(r, Condition::A, true,
            "vertices beyond level n lie within the vanishing d-tail of B_n; tail at level " +
                std::to_string(n) + " is " + fmt(facts.d_tail(n)));
  }
  if (facts.d_diameter_lower) {
    r.d_diameter_lower = facts.d_diameter_lower(n);
    certify(r, Condition::A, false,
            "certified divergent d-diameter lower bound, " + fmt(*r.d_diameter_lower) + " at level " +
                std::to_string(n));
  }
  if (facts.d_separation) {
    certify(r, Condition::A, false,
            "infinitely many vertices pairwise d-separated by " + fmt(*facts.d_separation));
  }
  if (facts.rho_tail) {
    certify(r, Condition::B, true,
            "vertices beyond level n lie within the vanishing rho-tail of B_n; tail at level " +
                std::to_string(n) + " is " + fmt(facts.rho_tail(n)));
  }
  if (facts.bounded_degree_infinite_set) {
    certify(r, Condition::B, false,
            "infinitely many vertices with degree + c <= " + fmt(*facts.bounded_degree_infinite_set) +
                ", so indicators keep them rho-separated by at least " +
                fmt(1.0 / std::sqrt(*facts.bounded_degree_infinite_set)));
  }
  if (facts.d_diameter_bound) {
    certify(r, Condition::D, true,
            "rho^2 <= d and the d-diameter is at most " + fmt(*facts.d_diameter_bound));
    if (facts.locally_finite) {
      certify(r, Condition::C, true, "locally finite with finite d-diameter");
    }
  }
  if (facts.rho_diameter_bound) {
    certify(r, Condition::D, true, "rho-diameter at most " + fmt(*facts.rho_diameter_bound));
  }
  if (facts.tree && facts.killing_free && facts.d_diameter_lower) {
    certify(r, Condition::D, false, "tree with c = 0: rho^2 = d and the d-diameter diverges");
  }
  if (facts.tree && facts.killing_free && facts.d_diameter_bound) {
    certify(r, Condition::C, true, "tree with c = 0 and finite rho-diameter: (C) and (D) coincide");
  }
  propagate_certified(r);

  // Root eccentricity in d at the requested level.
  {
    Truncation top = family.build_ball(n);
    PseudometricTable d = path_metric(top.graph, LengthFunction::inverse_b(), family.root());
    double ecc = 0.0;
    for (std::size_t y = 0; y < top.graph.size(); ++y) ecc = std::max(ecc, d.from_source(y).as_double());
    r.d_root_eccentricity = ecc;
  }

  // Empirical evidence on the truncations that fit the vertex budget.
  std::vector<int> levels;
  std::vector<std::size_t> counts;
  Truncation reference;
  for (int level = 0; level <= n; ++level) {
    Truncation t = family.build_ball(level);
    if (t.graph.size() > options.vertex_budget && !levels.empty()) break;
    if (!counts.empty() && t.graph.size() == counts.back() && level < n) {
      continue;  // no new vertices at this level
    }
    levels.push_back(level);
    counts.push_back(t.graph.size());
    reference = std::move(t);
    if (reference.graph.size() > options.vertex_budget) break;
  }
  // Keep at most eight evenly spread levels, always including the last.
  if (levels.size() > 8) {
    std::vector<int> picked_levels;
    std::vector<std::size_t> picked_counts;
    for (std::size_t k = 0; k < 8; ++k) {
      std::size_t i = (levels.size() - 1) * (k + 1) / 8;
      if (!picked_levels.empty() && picked_levels.back() == levels[i]) continue;
      picked_levels.push_back(levels[i]);
      picked_counts.push_back(counts[i]);
    }
    levels = std::move(picked_levels);
    counts = std::move(picked_counts);
  }
  r.notes.push_back("empirical evidence uses levels up to " + std::to_string(levels.back()) + " (" +
                    std::to_string(counts.back()) + " vertices)");

  PseudometricTable d = path_metric(reference.graph, LengthFunction::inverse_b());
  NetSeries d_nets = net_series("d", d, levels, counts, options.eps);
  apply_empirical(r, Condition::A, empirical_status(d_nets.trend),
                  std::string("greedy d-nets are ") + to_string(d_nets.trend));
  r.nets.push_back(d_nets);

  PseudometricTable rho = rho_table(reference.graph);
  NetSeries rho_nets = net_series("rho", rho, levels, counts, options.eps);
  apply_empirical(r, Condition::B, empirical_status(rho_nets.trend),
                  std::string("greedy rho-nets are ") + to_string(rho_nets.trend));
  r.nets.push_back(rho_nets);

  // Intrinsic battery for (C): d w.r.t. the canonical measure when it is
  // finite, and σ_f for finite-energy witness functions.
  std::vector<NetSeries::Trend> battery;
  if (facts.inverse_weight_total) {
    NetSeries s = d_nets;
    s.metric = "d (intrinsic for canonical M)";
    battery.push_back(s.trend);
    r.nets.push_back(std::move(s));
  }
  try {
    for (const auto& w : witness_functions(family, reference.level)) {
      if (!w.finite_energy || w.name == "one") continue;
      NetSeries s = net_series("sigma_" + w.name, sigma_table(w.values), levels, counts, options.eps);
      battery.push_back(s.trend);
      r.nets.push_back(std::move(s));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
  }
  if (battery.empty()) {
    apply_empirical(r, Condition::C, ConditionStatus::Inconclusive, "no intrinsic metric in the battery");
  } else {
    bool growing = std::count(battery.begin(), battery.end(), NetSeries::Trend::Growing) > 0;
    bool stable = std::count(battery.begin(), battery.end(), NetSeries::Trend::Stable) ==
                  static_cast<std::ptrdiff_t>(battery.size());
    ConditionStatus s = growing ? ConditionStatus::FailsEmpirical
                                : (stable ? ConditionStatus::HoldsEmpirical : ConditionStatus::Inconclusive);
    apply_empirical(r, Condition::C, s,
                    "battery of " + std::to_string(battery.size()) + " intrinsic metrics: " + to_string(s));
  }

  DiameterEstimate est = rho_diameter_estimate(family, levels, options.tolerance, options.vertex_budget);
  switch (est.status) {
    case DiameterStatus::Finite:
      apply_empirical(r, Condition::D, ConditionStatus::HoldsEmpirical,
                      "rho-diameter sequence converged below a certified bound");
      break;
    case DiameterStatus::Infinite:
      apply_empirical(r, Condition::D, ConditionStatus::FailsEmpirical, "rho-diameter lower bound diverges");
      break;
    case DiameterStatus::Inconclusive:
      apply_empirical(r, Condition::D,
                      est.report.status == ConvergenceStatus::Converged ? ConditionStatus::HoldsEmpirical
                                                                         : ConditionStatus::Inconclusive,
                      std::string("rho-diameter sequence ") + to_string(est.report.status));
      break;
  }
  r.rho_diameter = std::move(est);

  reconcile_empirical(r);
  check_implications(r);
  return r;
}

}  // namespace graphlab
