#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphlab/graph.hpp"

namespace graphlab {

/// A value in [0, ∞]. Infinity is an explicit state, not a float sentinel.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(double v) : value_(v) {}
  static constexpr Distance infinite() {
    Distance d;
    d.infinite_ = true;
    return d;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  // Precondition: finite.
  double value() const { return value_; }
  // +inf as a double, for arithmetic comparisons only.
  double as_double() const;

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Distances from one source (rows == 1) or between all pairs.
class PseudometricTable {
 public:
  PseudometricTable() = default;
  PseudometricTable(std::vector<VertexId> ids, std::optional<std::size_t> source,
                    std::vector<Distance> entries);

  bool all_pairs() const { return !source_.has_value(); }
  std::optional<std::size_t> source() const { return source_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<VertexId>& ids() const { return ids_; }

  // All-pairs: any (x, y). Single-source: x must be the source.
  Distance at(std::size_t x, std::size_t y) const;
  Distance from_source(std::size_t y) const { return entries_[y]; }

 private:
  std::vector<VertexId> ids_;
  std::optional<std::size_t> source_;
  std::vector<Distance> entries_;
};

/// Edge length ℓ(x, y), zero off edges. The base kind is raised to `power`
/// (so inverse_b with power s is 1/b^s, and sqrt_mm_over_b with power 1/2
/// gives the length behind d_{m,1/2}).
class LengthFunction {
 public:
  enum class Kind { InverseWeight, SqrtMassOverWeight, Killing, Custom };
  using CustomFn = std::function<double(std::size_t x, std::size_t y, double b)>;

  static LengthFunction inverse_b();
  static LengthFunction inverse_b_pow(double s);
  static LengthFunction sqrt_mm_over_b(const Measure& m, double power = 1.0);
  static LengthFunction killing();
  static LengthFunction custom(CustomFn fn, std::string label = "custom");

  Kind kind() const { return kind_; }
  double power() const { return power_; }
  std::string label() const;

  // Throws Error(NotApplicable) for the killing kind when c vanishes at an
  // endpoint.
  double evaluate(const WeightedGraph& g, std::size_t x, std::size_t y) const;
  // Checks applicability to every edge of g.
  void require_valid(const WeightedGraph& g) const;

 private:
  Kind kind_ = Kind::InverseWeight;
  double power_ = 1.0;
  std::vector<double> mass_;
  CustomFn custom_;
  std::string label_;
};

// Shortest paths under ℓ. `source` = nullopt computes all pairs.
PseudometricTable path_metric(const WeightedGraph& g, const LengthFunction& length,
                              const std::optional<VertexId>& source = std::nullopt);

// Distance from every vertex to a finite vertex set U (σ_U of the intrinsic
// metric theory, restricted to U ⊆ X).
std::vector<Distance> distance_to_set(const PseudometricTable& sigma,
                                      const std::vector<std::size_t>& set);

struct IntrinsicCheck {
  bool ok = true;
  std::size_t worst_vertex = 0;
  double worst_ratio = 0.0;
};

// (1/2) Σ_y b(x,y) σ(x,y)² ≤ m(x) at every vertex, with 1e-12 slack.
// Throws Error(InvalidArgument) when σ is infinite on an edge or the table is
// not all-pairs.
IntrinsicCheck verify_intrinsic(const WeightedGraph& g, const Measure& m,
                                const PseudometricTable& sigma);

// Left-hand side of the intrinsic inequality at every vertex.
std::vector<double> intrinsic_load(const WeightedGraph& g, const PseudometricTable& sigma);

struct SigmaFromFunction {
  PseudometricTable sigma;
  Measure mass;  // M_f, possibly vanishing
};

SigmaFromFunction sigma_from_function(const WeightedGraph& g, const RealFunction& f);

// Multiplies every finite entry.
PseudometricTable scale(const PseudometricTable& t, double factor);

struct BoundCheck {
  std::size_t x = 0;
  std::size_t y = 0;
  std::string name;  // which inequality
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
};

struct SigmaBoundsReport {
  IntrinsicCheck intrinsic;
  std::vector<BoundCheck> checks;
  bool all_hold = true;
};

// For intrinsic σ w.r.t. finite m: σ² ≤ 2 m(X) d, σ² ≤ 2 (m(x)∧m(y))/b on
// neighbours, and σ ≤ √2 d_{m,1/2}. Throws Error(InvalidArgument) carrying
// the intrinsic check in its message when σ is not intrinsic.
SigmaBoundsReport sigma_upper_bounds(const WeightedGraph& g, const Measure& m,
                                     const PseudometricTable& sigma,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

}  // namespace graphlab
