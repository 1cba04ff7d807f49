#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphlab/exhaustion.hpp"
#include "graphlab/graph.hpp"

namespace graphlab {

struct MeasureRule {
  enum class Kind { None, Unit, CanonicalM, Geometric };
  Kind kind = Kind::None;
  double q = 0.5;  // geometric ratio: m(x) = q^{depth(x)+1}

  // "none", "unit", "canonical_M", "geometric:<q>"
  static MeasureRule parse(const std::string& text);
  std::string to_string() const;
};

/// Named example family with its parameters. Vertex ids encode coordinates:
///   finite_path, finite_tree, random_tree, ray_power: "<n>"
///   comb: "<n>:<k>" (tooth n, position k; the spine is k = 0)
///   triangle_ladder: spine "<n>", teeth "<n>:<k>"
///   twin_rays: "<n>:<k>" (rails k = 0, 1; extra vertices k = 2..n+1)
///   star_augmented: the base ids, hub "1"
struct FamilySpec {
  std::string name;
  double power = 3.0;        // ray_power exponent
  double weight = 1.0;       // finite_path / finite_tree edge weight
  int size = 16;             // finite families: vertex count
  std::uint64_t seed = 1;    // random_tree
  MeasureRule measure;
  double killing = 0.0;       // c(x) = killing · killing_ratio^{depth(x)+1}
  double killing_ratio = 1.0;
  std::shared_ptr<FamilySpec> base;  // star_augmented; defaults to ray_power(3)
};

// Throws Error(InvalidArgument) for unknown names or out-of-range parameters
// (size < 1, power < 0, q outside (0, 1), negative killing, canonical_M on
// star_augmented).
GraphFamily make_family(const FamilySpec& spec);

const std::vector<std::string>& family_names();

struct Witness {
  std::string name;  // "f", "f_k" with k, or "one"
  RealFunction values;
  double energy = 0.0;
  bool finite_energy = false;  // certified behaviour on the infinite graph
};

// Witness functions restricted to B_level: f(n) = 1/n (infinite energy),
// f_k(n) = n^{-(1+1/k)} for k = 1..3 (finite energy) and the constant 1.
// Only ray_power families support them; Error(NotApplicable) otherwise.
std::vector<Witness> witness_functions(const GraphFamily& family, int level);

// Σ_{j=from}^{∞} j^{-p} with a certified upper bound on the neglected tail.
double zeta_tail(double p, long from);

}  // namespace graphlab
