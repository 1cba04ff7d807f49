#pragma once

#include <cmath>

#include "graphlab/graph.hpp"

namespace graphlab::testing {

// Path 0-1-2 with b(0,1) = 2, b(1,2) = 4.
inline WeightedGraph path012(std::vector<double> killing = {0.0, 0.0, 0.0}) {
  return WeightedGraph({"0", "1", "2"}, {{0, 1, 2.0}, {1, 2, 4.0}}, std::move(killing));
}

inline WeightedGraph unit_edge(std::vector<double> killing = {0.0, 0.0}, double b = 1.0) {
  return WeightedGraph({"0", "1"}, {{0, 1, b}}, std::move(killing));
}

inline WeightedGraph unit_triangle() {
  return WeightedGraph({"a", "b", "c"}, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}, {0.0, 0.0, 0.0});
}

inline RealFunction vec(std::initializer_list<double> v) {
  RealFunction f(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) f[i++] = x;
  return f;
}

}  // namespace graphlab::testing
