#include "graphlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "graphlab/error.hpp"

namespace graphlab {

const char* to_string(BoundaryCondition k) {
  return k == BoundaryCondition::Neumann ? "neumann" : "dirichlet";
}

TruncatedOperator assemble(const WeightedGraph& g, const Measure& m, BoundaryCondition kind,
                           const std::vector<VertexId>& boundary) {
  if (m.size() != g.size()) {
    throw Error(ErrorCode::DomainMismatch, "measure/graph vertex set mismatch");
  }
  if (!m.strict()) throw Error(ErrorCode::InvalidArgument, "operator needs a strictly positive measure");
  std::vector<char> removed(g.size(), 0);
  if (kind == BoundaryCondition::Dirichlet) {
    for (const auto& id : boundary) removed[g.index(id)] = 1;
  }
  std::vector<std::ptrdiff_t> local(g.size(), -1);
  TruncatedOperator op;
  op.kind = kind;
  std::vector<double> mass;
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (removed[x]) continue;
    local[x] = static_cast<std::ptrdiff_t>(op.vertices.size());
    op.vertices.push_back(g.id(x));
    mass.push_back(m[x]);
  }
  if (op.vertices.empty()) {
    throw Error(ErrorCode::InvalidArgument, "Dirichlet interior is empty");
  }
  op.measure = Measure(std::move(mass));

  const auto n = static_cast<Eigen::Index>(op.vertices.size());
  op.form = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (local[x] < 0) continue;
    const auto i = local[x];
    op.form(i, i) += g.killing(x);
    for (const auto& nb : g.neighbors(x)) {
      op.form(i, i) += nb.weight;
      if (local[nb.vertex] >= 0) op.form(i, local[nb.vertex]) -= nb.weight;
    }
  }
  op.matrix = op.form;
  for (Eigen::Index i = 0; i < n; ++i) op.matrix.row(i) /= op.measure[static_cast<std::size_t>(i)];

  // Pieces of the retained vertex set that keep the constants: no killing and
  // no coupling to removed vertices.
  std::vector<std::size_t> piece(g.size(), g.size());
  std::size_t pieces = 0;
  std::vector<char> piece_leaky;
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (local[s] < 0 || piece[s] != g.size()) continue;
    char leak = 0;
    std::vector<std::size_t> stack{s};
    piece[s] = pieces;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      if (g.killing(x) > 0.0) leak = 1;
      for (const auto& nb : g.neighbors(x)) {
        if (local[nb.vertex] < 0) {
          leak = 1;
        } else if (piece[nb.vertex] == g.size()) {
          piece[nb.vertex] = pieces;
          stack.push_back(nb.vertex);
        }
      }
    }
    piece_leaky.push_back(leak);
    ++pieces;
  }
  op.free_components =
      static_cast<std::size_t>(std::count(piece_leaky.begin(), piece_leaky.end(), 0));
  return op;
}

SpectrumResult spectrum(const TruncatedOperator& op) {
  const Eigen::Index n = op.form.rows();
  Eigen::VectorXd inv_sqrt(n);
  for (Eigen::Index i = 0; i < n; ++i) inv_sqrt[i] = 1.0 / std::sqrt(op.measure[static_cast<std::size_t>(i)]);
  // M^{-1/2} A M^{-1/2} is similar to M^{-1} A and symmetric.
  Eigen::MatrixXd sym = inv_sqrt.asDiagonal() * op.form * inv_sqrt.asDiagonal();
  sym = 0.5 * (sym + sym.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::Internal, "symmetric eigensolver did not converge");
  }
  SpectrumResult out;
  out.eigenvalues = eig.eigenvalues();
  out.eigenfunctions = inv_sqrt.asDiagonal() * eig.eigenvectors();
  for (Eigen::Index k = 0; k < n; ++k) {
    if (out.eigenvalues[k] < kZeroEigenvalue) ++out.e0_multiplicity;
  }
  return out;
}

HeatResult heat(const TruncatedOperator& op, const SpectrumResult& spec, double t,
                const std::vector<std::pair<VertexId, VertexId>>& probes) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidArgument, "heat time must be nonnegative");
  HeatResult out;
  out.t = t;
  Eigen::VectorXd decay = (-t * spec.eigenvalues.array()).exp();
  out.partial_trace = decay.sum();
  out.kernel = spec.eigenfunctions * decay.asDiagonal() * spec.eigenfunctions.transpose();
  out.kernel = 0.5 * (out.kernel + out.kernel.transpose());
  Eigen::VectorXd m = Eigen::Map<const Eigen::VectorXd>(op.measure.values().data(),
                                                        static_cast<Eigen::Index>(op.measure.size()));
  out.mass = out.kernel * m;

  auto position = [&](const VertexId& id) {
    auto it = std::find(op.vertices.begin(), op.vertices.end(), id);
    if (it == op.vertices.end()) {
      throw Error(ErrorCode::UnknownVertex, "vertex " + id + " is not in the operator's domain");
    }
    return static_cast<Eigen::Index>(it - op.vertices.begin());
  };
  for (const auto& [x, y] : probes) {
    out.probes.push_back({x, y, out.kernel(position(x), position(y))});
  }
  return out;
}

HeatResult heat(const TruncatedOperator& op, double t,
                const std::vector<std::pair<VertexId, VertexId>>& probes) {
  return heat(op, spectrum(op), t, probes);
}

ConvergenceReport trace_convergence(const GraphFamily& family, double t,
                                    const std::vector<int>& levels, double tolerance) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidArgument, "heat time must be nonnegative");
  std::vector<double> values;
  for (int level : levels) {
    Truncation outer = family.build_ball(level + 1);
    Truncation inner = family.build_ball(level);
    std::vector<VertexId> boundary(outer.graph.ids().begin() + static_cast<std::ptrdiff_t>(inner.graph.size()),
                                   outer.graph.ids().end());
    Measure m = outer.measure ? *outer.measure : Measure::unit(outer.graph.size());
    auto kind = boundary.empty() ? BoundaryCondition::Neumann : BoundaryCondition::Dirichlet;
    TruncatedOperator op = assemble(outer.graph, m, kind, boundary);
    SpectrumResult spec = spectrum(op);
    values.push_back((-t * spec.eigenvalues.array()).exp().sum());
  }
  ConvergenceReport report = monitor(values, tolerance);
  report.levels = levels;
  return report;
}

}  // namespace graphlab
