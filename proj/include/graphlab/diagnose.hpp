#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graphlab/exhaustion.hpp"
#include "graphlab/graph.hpp"
#include "graphlab/metrics.hpp"
#include "graphlab/resistance.hpp"

namespace graphlab {

enum class ConditionStatus { HoldsCertified, FailsCertified, HoldsEmpirical, FailsEmpirical, Inconclusive };
const char* to_string(ConditionStatus s);

bool holds(ConditionStatus s);
bool fails(ConditionStatus s);
bool certified(ConditionStatus s);

// (A) totally bounded in d, (B) in ρ, (C) in every intrinsic metric of a
// finite measure, (D) canonically compactifiable.
enum class Condition { A = 0, B = 1, C = 2, D = 3 };
const char* condition_name(Condition c);
const char* condition_meaning(Condition c);

struct ConditionEntry {
  ConditionStatus status = ConditionStatus::Inconclusive;
  std::vector<std::string> evidence;
};

/// Greedy ε-net sizes of one metric over nested levels.
struct NetSeries {
  std::string metric;
  std::vector<int> levels;
  std::vector<double> eps;
  std::vector<std::vector<std::size_t>> sizes;  // [eps index][level index]
  enum class Trend { Stable, Growing, Unclear } trend = Trend::Unclear;
};
const char* to_string(NetSeries::Trend t);

struct ClassificationReport {
  std::string subject;
  int max_level = 0;
  bool finite = false;
  bool killing_free = true;
  std::array<ConditionEntry, 4> conditions;
  std::vector<NetSeries> nets;
  std::optional<DiameterEstimate> rho_diameter;
  std::optional<double> d_root_eccentricity;  // d from the root at max_level
  std::optional<double> d_diameter_lower;     // certified, at max_level
  std::optional<double> d_diameter_bound;     // certified
  std::vector<std::string> notes;

  ConditionEntry& at(Condition c) { return conditions[static_cast<std::size_t>(c)]; }
  const ConditionEntry& at(Condition c) const { return conditions[static_cast<std::size_t>(c)]; }
  bool all_certified() const;
};

struct DiagnoseOptions {
  int max_level = 20;
  double tolerance = 1e-3;
  std::size_t vertex_budget = 600;  // largest truncation used for all-pairs metrics
  std::vector<double> eps{1.0, 0.5, 0.25, 0.125};
};

ClassificationReport diagnose(const GraphFamily& family, const DiagnoseOptions& options);
ClassificationReport diagnose(const WeightedGraph& g, const DiagnoseOptions& options);

// Throws Error(Internal) when some implication P ⇒ Q has P holding and Q
// failing. (A)⇒(B)⇒(D) always; (B)⇒(C)⇒(D) when c ≡ 0.
void check_implications(const ClassificationReport& report);

// Greedy farthest-point net: starts at vertex 0 of the prefix and adds the
// farthest point until every point of the first `count` vertices lies within
// eps. Infinite distances always force a new net point.
std::size_t greedy_net_size(const PseudometricTable& table, std::size_t count, double eps);

}  // namespace graphlab
