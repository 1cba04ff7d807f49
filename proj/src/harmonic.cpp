#include "graphlab/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SparseCholesky>

#include "graphlab/error.hpp"

namespace graphlab {

const char* to_string(CapacityVerdict v) {
  switch (v) {
    case CapacityVerdict::Recurrent: return "recurrent";
    case CapacityVerdict::Transient: return "transient";
    case CapacityVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Minimizer of uᵀ(A + diag(extra))u with u pinned on `fixed`. One sparse
// SPD solve on the free block.
RealFunction solve_pinned(const WeightedGraph& g, const std::vector<double>& extra,
                          const std::vector<std::size_t>& fixed, const std::vector<double>& values) {
  const std::size_t n = g.size();
  std::vector<char> pinned(n, 0);
  RealFunction u = RealFunction::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < fixed.size(); ++k) {
    pinned[fixed[k]] = 1;
    u[fixed[k]] = values[k];
  }
  std::vector<std::ptrdiff_t> local(n, -1);
  std::vector<std::size_t> free;
  for (std::size_t x = 0; x < n; ++x) {
    if (!pinned[x]) {
      local[x] = static_cast<std::ptrdiff_t>(free.size());
      free.push_back(x);
    }
  }
  if (free.empty()) return u;

  // Free components that see neither a pinned vertex nor a positive diagonal
  // make the block singular.
  std::vector<char> seen(n, 0);
  for (std::size_t s : free) {
    if (seen[s]) continue;
    std::vector<std::size_t> members;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    bool anchored = false;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      members.push_back(x);
      if (g.killing(x) > 0.0 || extra[x] > 0.0) anchored = true;
      for (const auto& nb : g.neighbors(x)) {
        if (pinned[nb.vertex]) {
          anchored = true;
        } else if (!seen[nb.vertex]) {
          seen[nb.vertex] = 1;
          stack.push_back(nb.vertex);
        }
      }
    }
    if (!anchored) {
      std::sort(members.begin(), members.end());
      std::ostringstream msg;
      msg << "singular system: interior component {";
      for (std::size_t k = 0; k < members.size() && k < 8; ++k) msg << (k ? ", " : "") << g.id(members[k]);
      if (members.size() > 8) msg << ", ...";
      msg << "} has no boundary neighbour and no killing";
      throw Error(ErrorCode::SingularSystem, msg.str());
    }
  }

  const auto m = static_cast<Eigen::Index>(free.size());
  std::vector<Eigen::Triplet<double>> t;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  for (std::size_t k = 0; k < free.size(); ++k) {
    const std::size_t x = free[k];
    const auto i = static_cast<Eigen::Index>(k);
    t.emplace_back(i, i, g.degree(x) + g.killing(x) + extra[x]);
    for (const auto& nb : g.neighbors(x)) {
      if (pinned[nb.vertex]) {
        rhs[i] += nb.weight * u[nb.vertex];
      } else {
        t.emplace_back(i, local[nb.vertex], -nb.weight);
      }
    }
  }
  Eigen::SparseMatrix<double> a(m, m);
  a.setFromTriplets(t.begin(), t.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularSystem, "Dirichlet system could not be factorized");
  }
  Eigen::VectorXd sol = solver.solve(rhs);
  for (std::size_t k = 0; k < free.size(); ++k) u[free[k]] = sol[static_cast<Eigen::Index>(k)];
  return u;
}

CapacityVerdict verdict_of(const ConvergenceReport& report, double tolerance) {
  if (report.status != ConvergenceStatus::Converged) return CapacityVerdict::Inconclusive;
  return report.last() < tolerance ? CapacityVerdict::Recurrent : CapacityVerdict::Transient;
}

}  // namespace

RealFunction solve_dirichlet(const DirichletProblem& p) {
  if (p.boundary.empty()) throw Error(ErrorCode::InvalidArgument, "boundary must be nonempty");
  if (p.boundary.size() != p.values.size()) {
    throw Error(ErrorCode::InvalidArgument, "boundary values do not match the boundary");
  }
  std::vector<std::size_t> fixed;
  for (const auto& id : p.boundary) fixed.push_back(p.graph.index(id));
  std::vector<std::size_t> sorted = fixed;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "boundary lists a vertex twice");
  }
  return solve_pinned(p.graph, std::vector<double>(p.graph.size(), 0.0), fixed, p.values);
}

MaxPrincipleReport check_max_principle(const DirichletProblem& p, const RealFunction& u,
                                       double slack) {
  require_domain(p.graph, u.size());
  MaxPrincipleReport r;
  double phi_min = p.values.empty() ? 0.0 : p.values.front();
  double phi_max = phi_min;
  for (std::size_t k = 0; k < p.boundary.size(); ++k) {
    double v = p.values[k];
    phi_min = std::min(phi_min, v);
    phi_max = std::max(phi_max, v);
    if (k == 0 || std::abs(v) > r.max_abs_boundary) {
      r.max_abs_boundary = std::abs(v);
      r.argmax_boundary = p.boundary[k];
    }
  }
  for (std::size_t x = 0; x < p.graph.size(); ++x) {
    if (x == 0 || std::abs(u[x]) > r.max_abs_solution) {
      r.max_abs_solution = std::abs(u[x]);
      r.argmax_solution = p.graph.id(x);
    }
  }
  // Killing pulls the solution towards 0, so 0 joins the admissible range.
  r.lower = p.graph.has_killing() ? std::min(phi_min, 0.0) : phi_min;
  r.upper = p.graph.has_killing() ? std::max(phi_max, 0.0) : phi_max;
  r.holds = r.max_abs_solution <= r.max_abs_boundary + slack;
  r.sandwich_holds = u.minCoeff() >= r.lower - slack && u.maxCoeff() <= r.upper + slack;
  return r;
}

CapacitySequence capacity(const GraphFamily& family, const VertexId& o,
                          const std::vector<int>& levels, double tolerance) {
  CapacitySequence out;
  out.base = o;
  std::vector<int> used;
  for (int level : levels) {
    Truncation t = family.build_ball(level);
    const std::size_t io = t.graph.index(o);
    std::vector<std::size_t> fixed{io};
    std::vector<double> values{1.0};
    bool base_on_frontier = false;
    for (const auto& id : t.frontier) {
      std::size_t x = t.graph.index(id);
      if (x == io) {
        base_on_frontier = true;
        break;
      }
      fixed.push_back(x);
      values.push_back(0.0);
    }
    if (base_on_frontier) continue;
    RealFunction v = solve_pinned(t.graph, std::vector<double>(t.graph.size(), 0.0), fixed, values);
    double cap = energy(t.graph, v).energy;
    if (!out.values.empty() && cap > out.values.back() * (1.0 + 1e-10) + 1e-14) {
      std::ostringstream msg;
      msg << "capacity increased from " << out.values.back() << " to " << cap << " at level " << level;
      throw Error(ErrorCode::Internal, msg.str());
    }
    out.values.push_back(cap);
    used.push_back(level);
  }
  if (out.values.empty()) {
    throw Error(ErrorCode::InvalidArgument, "base vertex lies on the frontier at every listed level");
  }
  out.report = monitor(out.values, tolerance);
  out.report.levels = used;
  out.verdict = verdict_of(out.report, tolerance);
  return out;
}

DefectSequence constant_approximation_defect(const GraphFamily& family,
                                             const std::vector<int>& levels, double tolerance,
                                             int reference_factor) {
  if (reference_factor < 1) throw Error(ErrorCode::InvalidArgument, "reference factor must be >= 1");
  DefectSequence out;
  std::vector<int> used;
  for (int n : levels) {
    const int reference = std::max(n, reference_factor * n);
    Truncation inner = family.build_ball(n);
    Truncation outer = family.build_ball(reference);
    if (!outer.measure) {
      throw Error(ErrorCode::InvalidArgument, "the defect needs a family with a measure rule");
    }
    // w = 1 - v is pinned to 1 outside B_n and free on B_n.
    std::vector<std::size_t> fixed;
    for (std::size_t x = inner.graph.size(); x < outer.graph.size(); ++x) fixed.push_back(x);
    std::vector<double> values(fixed.size(), 1.0);
    const auto& mass = outer.measure->values();
    RealFunction w = solve_pinned(outer.graph, mass, fixed, values);
    double defect = energy(outer.graph, w).energy;
    for (std::size_t x = 0; x < outer.graph.size(); ++x) defect += mass[x] * w[x] * w[x];
    out.values.push_back(defect);
    out.reference_levels.push_back(reference);
    used.push_back(n);
  }
  if (out.values.empty()) throw Error(ErrorCode::InvalidArgument, "no levels given");
  out.report = monitor(out.values, tolerance);
  out.report.levels = used;
  out.verdict = verdict_of(out.report, tolerance);
  return out;
}

}  // namespace graphlab
