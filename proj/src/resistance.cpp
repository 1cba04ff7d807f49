#include "graphlab/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <sstream>

#include <Eigen/SparseCholesky>

#include "graphlab/error.hpp"

namespace graphlab {

const char* to_string(ResistanceMethod m) {
  switch (m) {
    case ResistanceMethod::ConstrainedSolve: return "constrained_solve";
    case ResistanceMethod::Pseudoinverse: return "pseudoinverse";
    case ResistanceMethod::Lagrange: return "lagrange";
    case ResistanceMethod::TreePath: return "tree_path";
    case ResistanceMethod::Exhaustion: return "exhaustion";
  }
  return "unknown";
}

const char* to_string(DiameterStatus s) {
  switch (s) {
    case DiameterStatus::Finite: return "finite";
    case DiameterStatus::Infinite: return "infinite";
    case DiameterStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Per edge component: does it carry killing?
std::vector<char> killing_per_component(const WeightedGraph& g) {
  std::vector<char> out(g.component_count(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.killing(v) > 0.0) out[g.component_of()[v]] = 1;
  }
  return out;
}

[[noreturn]] void throw_infinite(const WeightedGraph& g, std::size_t x, std::size_t y) {
  throw Error(ErrorCode::InfiniteResistance,
              "infinite resistance between " + g.id(x) + " and " + g.id(y));
}

// Sparse SPD solve restricted to the components of x and y.
ResistanceResult solve_constrained(const WeightedGraph& g, std::size_t x, std::size_t y) {
  const auto& comp = g.component_of();
  auto killed = killing_per_component(g);
  const bool same = comp[x] == comp[y];
  const bool grounded = same && !killed[comp[x]];
  if (!same && (!killed[comp[x]] || !killed[comp[y]])) throw_infinite(g, x, y);

  // Local indexing of the involved vertices, with y dropped when grounded.
  std::vector<std::ptrdiff_t> local(g.size(), -1);
  std::vector<std::size_t> global;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (comp[v] != comp[x] && comp[v] != comp[y]) continue;
    if (grounded && v == y) continue;
    local[v] = static_cast<std::ptrdiff_t>(global.size());
    global.push_back(v);
  }
  const auto n = static_cast<Eigen::Index>(global.size());
  std::vector<Eigen::Triplet<double>> t;
  for (std::size_t k = 0; k < global.size(); ++k) {
    std::size_t v = global[k];
    auto i = static_cast<Eigen::Index>(k);
    t.emplace_back(i, i, g.killing(v) + g.degree(v));
    for (const auto& nb : g.neighbors(v)) {
      if (local[nb.vertex] >= 0) t.emplace_back(i, local[nb.vertex], -nb.weight);
    }
  }
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(t.begin(), t.end());
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs[local[x]] += 1.0;
  if (!grounded) rhs[local[y]] -= 1.0;

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularSystem, "resistance system could not be factorized");
  }
  Eigen::VectorXd pot = solver.solve(rhs);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularSystem, "resistance solve failed");
  }
  RealFunction full = RealFunction::Zero(static_cast<Eigen::Index>(g.size()));
  for (std::size_t k = 0; k < global.size(); ++k) full[global[k]] = pot[static_cast<Eigen::Index>(k)];
  ResistanceResult out;
  out.r = full[x] - full[y];
  out.minimizer = full / out.r;
  out.coupled_through_killing = !same;
  return out;
}

// r = δᵀ A⁺ δ with the pseudoinverse from a symmetric eigendecomposition.
ResistanceResult solve_pseudoinverse(const WeightedGraph& g, std::size_t x, std::size_t y) {
  Eigen::MatrixXd a = dense_form_matrix(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const Eigen::MatrixXd& q = eig.eigenvectors();
  const double cutoff = 1e-10 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(a.rows());
  delta[x] = 1.0;
  delta[y] = -1.0;
  Eigen::VectorXd coeff = q.transpose() * delta;
  Eigen::VectorXd pot = Eigen::VectorXd::Zero(a.rows());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    if (lambda[k] <= cutoff) {
      if (std::abs(coeff[k]) > 1e-8) throw_infinite(g, x, y);
      continue;
    }
    pot += (coeff[k] / lambda[k]) * q.col(k);
  }
  ResistanceResult out;
  out.r = delta.dot(pot);
  out.minimizer = pot / (pot[x] - pot[y]);
  out.coupled_through_killing = g.component_of()[x] != g.component_of()[y];
  return out;
}

// Minimize gᵀAg subject to g(x) - g(y) = 1 and zero mean on every
// killing-free component, via the KKT system.
ResistanceResult solve_lagrange(const WeightedGraph& g, std::size_t x, std::size_t y) {
  const auto& comp = g.component_of();
  auto killed = killing_per_component(g);
  if (comp[x] != comp[y] && (!killed[comp[x]] || !killed[comp[y]])) throw_infinite(g, x, y);
  std::vector<std::size_t> gauge;
  for (std::size_t c = 0; c < g.component_count(); ++c) {
    if (!killed[c]) gauge.push_back(c);
  }
  const auto n = static_cast<Eigen::Index>(g.size());
  const auto k = static_cast<Eigen::Index>(1 + gauge.size());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + k, n + k);
  kkt.topLeftCorner(n, n) = 2.0 * dense_form_matrix(g);
  kkt(n, x) = kkt(x, n) = 1.0;
  kkt(n, y) = kkt(y, n) = -1.0;
  for (std::size_t j = 0; j < gauge.size(); ++j) {
    auto row = n + 1 + static_cast<Eigen::Index>(j);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (comp[v] == gauge[j]) kkt(row, v) = kkt(v, row) = 1.0;
    }
  }
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + k);
  rhs[n] = 1.0;
  Eigen::VectorXd sol = kkt.fullPivLu().solve(rhs);
  RealFunction pot = sol.head(n);
  double e = energy(g, pot).energy;
  ResistanceResult out;
  out.r = 1.0 / e;
  out.minimizer = pot;
  out.coupled_through_killing = comp[x] != comp[y];
  return out;
}

// On a tree with c ≡ 0 the potential is linear in d along the x–y path and
// constant on the branches hanging off it.
ResistanceResult solve_tree_path(const WeightedGraph& g, std::size_t x, std::size_t y) {
  if (!g.is_forest() || g.has_killing()) {
    throw Error(ErrorCode::NotApplicable, "tree_path needs a forest with c = 0");
  }
  if (g.component_of()[x] != g.component_of()[y]) throw_infinite(g, x, y);
  const std::size_t none = g.size();
  std::vector<std::size_t> parent(g.size(), none);
  std::vector<double> dist(g.size(), 0.0);
  std::deque<std::size_t> queue{y};
  parent[y] = y;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(v)) {
      if (parent[nb.vertex] == none) {
        parent[nb.vertex] = v;
        dist[nb.vertex] = dist[v] + 1.0 / nb.weight;
        queue.push_back(nb.vertex);
      }
    }
  }
  const double r = dist[x];
  RealFunction pot = RealFunction::Zero(static_cast<Eigen::Index>(g.size()));
  std::vector<char> on_path(g.size(), 0);
  for (std::size_t v = x;; v = parent[v]) {
    on_path[v] = 1;
    pot[v] = dist[v] / r;
    if (v == y) break;
  }
  // Off-path vertices take the value of their attachment point; parents are
  // reached first in BFS order from y.
  std::deque<std::size_t> order{y};
  std::vector<char> seen(g.size(), 0);
  seen[y] = 1;
  while (!order.empty()) {
    std::size_t v = order.front();
    order.pop_front();
    if (!on_path[v]) pot[v] = pot[parent[v]];
    for (const auto& nb : g.neighbors(v)) {
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        order.push_back(nb.vertex);
      }
    }
  }
  ResistanceResult out;
  out.r = r;
  out.minimizer = pot;
  return out;
}

}  // namespace

ResistanceResult resistance_finite(const WeightedGraph& g, const VertexId& xid, const VertexId& yid,
                                   ResistanceMethod method) {
  const std::size_t x = g.index(xid);
  const std::size_t y = g.index(yid);
  ResistanceResult out;
  if (x == y) {
    out.minimizer = RealFunction::Zero(static_cast<Eigen::Index>(g.size()));
  } else {
    switch (method) {
      case ResistanceMethod::ConstrainedSolve: out = solve_constrained(g, x, y); break;
      case ResistanceMethod::Pseudoinverse: out = solve_pseudoinverse(g, x, y); break;
      case ResistanceMethod::Lagrange: out = solve_lagrange(g, x, y); break;
      case ResistanceMethod::TreePath: out = solve_tree_path(g, x, y); break;
      case ResistanceMethod::Exhaustion:
        throw Error(ErrorCode::InvalidArgument, "exhaustion resistance needs a graph family");
    }
  }
  out.x = xid;
  out.y = yid;
  out.method = method;
  return out;
}

double rho(const WeightedGraph& g, const VertexId& x, const VertexId& y) {
  return std::sqrt(resistance_finite(g, x, y).r);
}

WeightedGraph with_extra_killing(const WeightedGraph& g, std::size_t o, double amount) {
  auto killing = g.killing();
  killing.at(o) += amount;
  return WeightedGraph(g.ids(), g.edges(), std::move(killing));
}

double rho_o(const WeightedGraph& g, const VertexId& x, const VertexId& y, const VertexId& o) {
  auto shifted = with_extra_killing(g, g.index(o), 1.0);
  return std::sqrt(resistance_finite(shifted, x, y).r);
}

namespace {

// Green's function per component: grounded inverse for killing-free
// components (first vertex grounded), plain inverse otherwise.
PseudometricTable all_pairs(const WeightedGraph& g, bool take_root) {
  const std::size_t n = g.size();
  const auto& comp = g.component_of();
  auto killed = killing_per_component(g);
  std::vector<std::vector<std::size_t>> members(g.component_count());
  for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);

  std::vector<double> diag(n, 0.0);
  std::vector<Distance> entries(n * n, Distance::infinite());
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto& mem = members[c];
    const std::size_t skip = killed[c] ? 0 : 1;
    const auto k = static_cast<Eigen::Index>(mem.size() - skip);
    Eigen::MatrixXd green = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(mem.size()),
                                                  static_cast<Eigen::Index>(mem.size()));
    if (k > 0) {
      Eigen::MatrixXd a(k, k);
      for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
          std::size_t vi = mem[static_cast<std::size_t>(i) + skip];
          std::size_t vj = mem[static_cast<std::size_t>(j) + skip];
          a(i, j) = vi == vj ? g.degree(vi) + g.killing(vi) : -g.weight(vi, vj);
        }
      }
      Eigen::LLT<Eigen::MatrixXd> llt(a);
      if (llt.info() != Eigen::Success) {
        throw Error(ErrorCode::SingularSystem, "resistance matrix is not positive definite");
      }
      green.bottomRightCorner(k, k) = llt.solve(Eigen::MatrixXd::Identity(k, k));
    }
    for (std::size_t i = 0; i < mem.size(); ++i) {
      auto ii = static_cast<Eigen::Index>(i);
      diag[mem[i]] = green(ii, ii);
      for (std::size_t j = 0; j < mem.size(); ++j) {
        auto jj = static_cast<Eigen::Index>(j);
        double r = std::max(0.0, green(ii, ii) + green(jj, jj) - green(ii, jj) - green(jj, ii));
        if (i == j) r = 0.0;
        entries[mem[i] * n + mem[j]] = Distance(take_root ? std::sqrt(r) : r);
      }
    }
  }
  // Components coupled only through their killing terms.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (comp[x] == comp[y] || !killed[comp[x]] || !killed[comp[y]]) continue;
      double r = diag[x] + diag[y];
      entries[x * n + y] = Distance(take_root ? std::sqrt(r) : r);
    }
  }
  return PseudometricTable(g.ids(), std::nullopt, std::move(entries));
}

}  // namespace

PseudometricTable rho_table(const WeightedGraph& g) { return all_pairs(g, true); }
PseudometricTable resistance_table(const WeightedGraph& g) { return all_pairs(g, false); }

ResistanceResult free_resistance(const GraphFamily& family, const VertexId& x, const VertexId& y,
                                 const std::vector<int>& levels, double tolerance) {
  std::vector<int> sorted = levels;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> values;
  std::vector<int> used;
  ResistanceResult last;
  bool have = false;
  for (int level : sorted) {
    Truncation t = family.build_ball(level);
    if (!t.graph.find(x) || !t.graph.find(y)) continue;
    ResistanceResult r = resistance_finite(t.graph, x, y);
    if (!values.empty() && r.r > values.back() + 1e-10 * std::max(1.0, values.back())) {
      std::ostringstream msg;
      msg << "free resistance increased from " << values.back() << " to " << r.r << " at level "
          << level;
      throw Error(ErrorCode::Internal, msg.str());
    }
    values.push_back(r.r);
    used.push_back(level);
    last = std::move(r);
    have = true;
  }
  if (!have) {
    throw Error(ErrorCode::InvalidArgument, "no listed level contains both " + x + " and " + y);
  }
  ConvergenceReport report = monitor(values, tolerance);
  report.levels = used;
  last.method = ResistanceMethod::Exhaustion;
  last.exhaustion = std::move(report);
  last.limit_not_guaranteed = !family.facts().killing_free || !family.facts().locally_finite;
  return last;
}

DiameterEstimate rho_diameter_estimate(const GraphFamily& family, const std::vector<int>& levels,
                                       double tolerance, std::size_t vertex_budget) {
  std::vector<int> sorted = levels;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw Error(ErrorCode::InvalidArgument, "no levels given");

  // Largest level within the vertex budget serves as the reference.
  std::vector<std::pair<int, std::size_t>> sizes;
  Truncation reference = family.build_ball(sorted.front());
  for (int level : sorted) {
    Truncation t = family.build_ball(level);
    if (t.graph.size() > vertex_budget && !sizes.empty()) break;
    sizes.emplace_back(level, t.graph.size());
    reference = std::move(t);
  }
  PseudometricTable table = rho_table(reference.graph);

  DiameterEstimate out;
  out.reference_level = reference.level;
  std::vector<double> values;
  std::vector<int> used;
  for (auto [level, size] : sizes) {
    double diam = 0.0;
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a + 1; b < size; ++b) {
        Distance d = table.at(a, b);
        diam = std::max(diam, d.as_double());
      }
    }
    values.push_back(diam);
    used.push_back(level);
  }
  out.report = monitor(values, tolerance);
  out.report.levels = used;
  out.lower_bound = values.back();

  const AnalyticFacts& facts = family.facts();
  if (facts.rho_diameter_bound) {
    out.upper_bound = *facts.rho_diameter_bound;
    out.evidence.push_back("generator-certified rho-diameter bound");
  }
  if (facts.d_diameter_bound) {
    double via_d = std::sqrt(*facts.d_diameter_bound);
    if (!out.upper_bound || via_d < *out.upper_bound) out.upper_bound = via_d;
    out.evidence.push_back("rho^2 <= d with certified d-diameter bound");
  }
  if (facts.finite) {
    out.upper_bound = out.upper_bound ? std::min(*out.upper_bound, out.lower_bound) : out.lower_bound;
    out.evidence.push_back("finite graph");
  }
  const bool tree_divergent = facts.tree && facts.killing_free && facts.d_diameter_lower;
  if (std::isinf(out.lower_bound)) {
    out.status = DiameterStatus::Infinite;
    out.evidence.push_back("infinite resistance between truncation vertices");
  } else if (tree_divergent) {
    out.status = DiameterStatus::Infinite;
    out.lower_bound = std::max(out.lower_bound, std::sqrt(facts.d_diameter_lower(reference.level)));
    out.evidence.push_back("tree with divergent d-diameter: rho^2 = d diverges");
  } else if (out.upper_bound &&
             (out.report.status == ConvergenceStatus::Converged || facts.finite)) {
    out.status = DiameterStatus::Finite;
  }
  return out;
}

}  // namespace graphlab
