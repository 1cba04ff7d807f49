#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "graphlab/diagnose.hpp"
#include "graphlab/error.hpp"
#include "graphlab/harmonic.hpp"
#include "graphlab/heart.hpp"
#include "graphlab/metrics.hpp"
#include "graphlab/resistance.hpp"
#include "graphlab/spectral.hpp"

namespace graphlab {

using nlohmann::json;

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

// JSON has no infinity; infinite values are emitted as the string "inf".
json num(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

json num(const Distance& d) { return d.is_infinite() ? json("inf") : json(d.value()); }

json function_json(const std::vector<VertexId>& ids, const RealFunction& f) {
  json out = json::object();
  for (std::size_t i = 0; i < ids.size(); ++i) out[ids[i]] = num(f[static_cast<Eigen::Index>(i)]);
  return out;
}

json report_json(const ConvergenceReport& r) {
  json values = json::array();
  for (double v : r.values) values.push_back(num(v));
  return {{"levels", r.levels},
          {"values", std::move(values)},
          {"status", to_string(r.status)},
          {"tolerance", r.tolerance},
          {"window", r.window},
          {"last_increment", num(r.last_increment)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

class Csv {
 public:
  explicit Csv(std::initializer_list<const char*> header) {
    bool first = true;
    for (const char* h : header) {
      if (!first) out_ << ',';
      out_ << h;
      first = false;
    }
    out_ << '\n';
  }
  Csv& cell(const std::string& s) {
    sep();
    // Ids may contain separators; quote them per RFC 4180 when needed.
    if (s.find_first_of(",\"\n") != std::string::npos) {
      out_ << '"';
      for (char ch : s) out_ << (ch == '"' ? "\"\"" : std::string(1, ch));
      out_ << '"';
    } else {
      out_ << s;
    }
    return *this;
  }
  Csv& cell(double v) { return cell(format_number(v)); }
  Csv& cell(long v) { return cell(std::to_string(v)); }
  Csv& cell(int v) { return cell(std::to_string(v)); }
  Csv& cell(std::size_t v) { return cell(std::to_string(v)); }
  Csv& cell(bool v) { return cell(std::string(v ? "true" : "false")); }
  Csv& cell(const Distance& d) { return cell(d.as_double()); }
  void end() {
    out_ << '\n';
    fresh_ = true;
  }
  std::string str() const { return out_.str(); }

 private:
  void sep() {
    if (!fresh_) out_ << ',';
    fresh_ = false;
  }
  std::ostringstream out_;
  bool fresh_ = true;
};

// Typed option access with InvalidArgument on type errors.
template <class T>
T opt(const json& o, const char* key, T fallback) {
  auto it = o.find(key);
  if (it == o.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string("option \"") + key + "\" has the wrong type");
  }
}

template <class T>
std::optional<T> opt(const json& o, const char* key) {
  auto it = o.find(key);
  if (it == o.end() || it->is_null()) return std::nullopt;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::InvalidArgument, std::string("option \"") + key + "\" has the wrong type");
  }
}

template <class T>
T need(const json& o, const char* key) {
  auto v = opt<T>(o, key);
  if (!v) throw Error(ErrorCode::InvalidArgument, std::string("missing option \"") + key + "\"");
  return *v;
}

bool csv_format(const json& o, bool csv_default) {
  const std::string f = opt<std::string>(o, "format", csv_default ? "csv" : "json");
  if (f == "csv") return true;
  if (f == "json") return false;
  throw Error(ErrorCode::InvalidArgument, "unknown format \"" + f + "\" (json or csv)");
}

// "levels" is either a maximum level N (meaning 0..N) or an explicit list.
std::vector<int> levels_option(const json& o, int fallback_max) {
  auto it = o.find("levels");
  std::vector<int> levels;
  if (it == o.end() || it->is_null()) {
    for (int n = 0; n <= fallback_max; ++n) levels.push_back(n);
  } else if (it->is_number_integer()) {
    const int max = it->get<int>();
    if (max < 0) throw Error(ErrorCode::InvalidArgument, "levels must be nonnegative");
    for (int n = 0; n <= max; ++n) levels.push_back(n);
  } else if (it->is_array()) {
    for (const auto& v : *it) {
      if (!v.is_number_integer() || v.get<int>() < 0) {
        throw Error(ErrorCode::InvalidArgument, "levels must be nonnegative integers");
      }
      levels.push_back(v.get<int>());
    }
    if (levels.empty()) throw Error(ErrorCode::InvalidArgument, "empty level list");
  } else {
    throw Error(ErrorCode::InvalidArgument, "option \"levels\" must be an integer or a list");
  }
  return levels;
}

int max_level_option(const json& o, int fallback) {
  auto levels = levels_option(o, fallback);
  return *std::max_element(levels.begin(), levels.end());
}

const GraphFamily& need_family(const CommandInput& in, const std::string& cmd) {
  if (!in.family) throw Error(ErrorCode::InvalidArgument, cmd + " needs a family");
  return *in.family;
}

// The document graph, or the family truncation at options["level"].
struct ResolvedGraph {
  WeightedGraph graph;
  std::optional<Measure> measure;
};

ResolvedGraph resolve_graph(const CommandInput& in, const json& o, const std::string& cmd) {
  if (in.document) return {in.document->graph, in.document->measure};
  if (in.family) {
    Truncation t = in.family->build_ball(opt<int>(o, "level", 10));
    return {std::move(t.graph), std::move(t.measure)};
  }
  throw Error(ErrorCode::InvalidArgument, cmd + " needs a graph document or a family");
}

Measure measure_for(const ResolvedGraph& rg, const json& o) {
  const std::string rule = opt<std::string>(o, "measure", "document");
  if (rule == "unit" || (rule == "document" && !rg.measure)) return Measure::unit(rg.graph.size());
  if (rule == "document") return *rg.measure;
  throw Error(ErrorCode::InvalidArgument, "unknown measure option \"" + rule + "\" (document or unit)");
}

BoundaryCondition boundary_kind(const json& o) {
  const std::string k = opt<std::string>(o, "kind", "neumann");
  if (k == "neumann") return BoundaryCondition::Neumann;
  if (k == "dirichlet") return BoundaryCondition::Dirichlet;
  throw Error(ErrorCode::InvalidArgument, "unknown kind \"" + k + "\" (neumann or dirichlet)");
}

std::vector<std::pair<VertexId, VertexId>> pairs_option(const json& o, const char* key) {
  std::vector<std::pair<VertexId, VertexId>> out;
  auto it = o.find(key);
  if (it == o.end() || it->is_null()) return out;
  if (!it->is_array()) throw Error(ErrorCode::InvalidArgument, std::string("option \"") + key + "\" must be a list");
  for (const auto& p : *it) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      throw Error(ErrorCode::InvalidArgument, std::string("option \"") + key + "\" needs [x, y] id pairs");
    }
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

json graph_json(const WeightedGraph& g) {
  json vertices = json::array();
  for (std::size_t x = 0; x < g.size(); ++x) vertices.push_back({{"id", g.id(x)}, {"c", g.killing(x)}});
  json edges = json::array();
  for (const auto& e : g.edges()) {
    const VertexId& a = g.id(e.u);
    const VertexId& b = g.id(e.v);
    edges.push_back({{"u", std::min(a, b)}, {"v", std::max(a, b)}, {"b", e.weight}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

// ---------------------------------------------------------------------------

CommandOutput cmd_gen(const CommandInput& in, const json& o) {
  const GraphFamily& fam = need_family(in, "gen");
  const int level = opt<int>(o, "level", max_level_option(o, 10));
  return {serialize_document(document_from_truncation(fam.build_ball(level), *in.spec))};
}

CommandOutput cmd_metric(const CommandInput& in, const json& o) {
  ResolvedGraph rg = resolve_graph(in, o, "metric");
  const WeightedGraph& g = rg.graph;
  const std::string kind = opt<std::string>(o, "metric", "d");
  const auto source = opt<std::string>(o, "source");
  PseudometricTable table;
  std::string label = kind;
  if (kind == "d" || kind == "d_s" || kind == "d_m" || kind == "d_c") {
    LengthFunction len = LengthFunction::inverse_b();
    if (kind == "d_s") len = LengthFunction::inverse_b_pow(need<double>(o, "s"));
    if (kind == "d_m") len = LengthFunction::sqrt_mm_over_b(measure_for(rg, o), opt<double>(o, "power", 1.0));
    if (kind == "d_c") len = LengthFunction::killing();
    label = len.label();
    table = path_metric(g, len, source);
  } else if (kind == "rho" || kind == "r" || kind == "rho_o") {
    WeightedGraph h = g;
    if (kind == "rho_o") {
      const VertexId o_id = need<std::string>(o, "o");
      h = with_extra_killing(g, g.index(o_id), 1.0);
      label = "rho_" + o_id;
    }
    table = kind == "r" ? resistance_table(h) : rho_table(h);
    if (source) {
      const std::size_t s = g.index(*source);
      std::vector<Distance> row;
      for (std::size_t y = 0; y < g.size(); ++y) row.push_back(table.at(s, y));
      table = PseudometricTable(g.ids(), s, std::move(row));
    }
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown metric \"" + kind + "\" (d, d_s, d_m, d_c, r, rho, rho_o)");
  }

  std::vector<std::size_t> rows;
  if (table.all_pairs()) {
    for (std::size_t x = 0; x < g.size(); ++x) rows.push_back(x);
  } else {
    rows.push_back(*table.source());
  }
  auto value = [&](std::size_t x, std::size_t y) {
    return table.all_pairs() ? table.at(x, y) : table.from_source(y);
  };
  if (csv_format(o, true)) {
    Csv csv{"x", "y", "value"};
    for (std::size_t x : rows) {
      for (std::size_t y = 0; y < g.size(); ++y) {
        csv.cell(g.id(x)).cell(g.id(y)).cell(value(x, y));
        csv.end();
      }
    }
    return {csv.str()};
  }
  json entries = json::array();
  for (std::size_t x : rows) {
    for (std::size_t y = 0; y < g.size(); ++y) {
      entries.push_back({{"x", g.id(x)}, {"y", g.id(y)}, {"value", num(value(x, y))}});
    }
  }
  json out{{"metric", label}, {"vertices", g.ids()}, {"entries", std::move(entries)}};
  if (source) out["source"] = *source;
  return {dump(out)};
}

ResistanceMethod method_option(const json& o) {
  static const std::map<std::string, ResistanceMethod> names{
      {"constrained", ResistanceMethod::ConstrainedSolve},
      {"pseudoinverse", ResistanceMethod::Pseudoinverse},
      {"lagrange", ResistanceMethod::Lagrange},
      {"tree", ResistanceMethod::TreePath}};
  const std::string m = opt<std::string>(o, "method", "constrained");
  auto it = names.find(m);
  if (it == names.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "unknown method \"" + m + "\" (constrained, pseudoinverse, lagrange, tree)");
  }
  return it->second;
}

CommandOutput cmd_resistance(const CommandInput& in, const json& o) {
  const VertexId x = need<std::string>(o, "x");
  const VertexId y = need<std::string>(o, "y");
  const bool csv = csv_format(o, false);

  if (!in.document && in.family && o.contains("levels")) {
    ResistanceResult res = free_resistance(*in.family, x, y, levels_option(o, 0), opt<double>(o, "tolerance", 1e-6));
    const ConvergenceReport& rep = *res.exhaustion;
    if (csv) {
      Csv c{"level", "r"};
      for (std::size_t i = 0; i < rep.values.size(); ++i) {
        c.cell(rep.levels[i]).cell(rep.values[i]);
        c.end();
      }
      return {c.str()};
    }
    json out{{"x", x},
             {"y", y},
             {"r", num(res.r)},
             {"rho", num(std::sqrt(res.r))},
             {"method", to_string(res.method)},
             {"limit_not_guaranteed", res.limit_not_guaranteed},
             {"exhaustion", report_json(rep)}};
    CommandOutput result{dump(out)};
    result.inconclusive = opt<bool>(o, "require_certain", false) && rep.status != ConvergenceStatus::Converged;
    return result;
  }

  ResolvedGraph rg = resolve_graph(in, o, "resistance");
  const ResistanceMethod method = method_option(o);
  json out{{"x", x}, {"y", y}, {"method", to_string(method)}};
  double r = std::numeric_limits<double>::infinity();
  try {
    ResistanceResult res = resistance_finite(rg.graph, x, y, method);
    r = res.r;
    out["coupled_through_killing"] = res.coupled_through_killing;
    out["minimizer"] = function_json(rg.graph.ids(), res.minimizer);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InfiniteResistance) throw;
    out["note"] = e.what();
  }
  out["r"] = num(r);
  out["rho"] = num(std::sqrt(r));
  if (csv) {
    Csv c{"x", "y", "r", "rho"};
    c.cell(x).cell(y).cell(r).cell(std::sqrt(r));
    c.end();
    return {c.str()};
  }
  return {dump(out)};
}

CommandOutput cmd_spectrum(const CommandInput& in, const json& o) {
  ResolvedGraph rg = resolve_graph(in, o, "spectrum");
  const auto boundary = opt<std::vector<std::string>>(o, "boundary", {});
  TruncatedOperator op = assemble(rg.graph, measure_for(rg, o), boundary_kind(o), boundary);
  SpectrumResult spec = spectrum(op);
  if (csv_format(o, false)) {
    Csv c{"index", "eigenvalue"};
    for (Eigen::Index k = 0; k < spec.eigenvalues.size(); ++k) {
      c.cell(static_cast<long>(k)).cell(spec.eigenvalues[k]);
      c.end();
    }
    return {c.str()};
  }
  json out{{"kind", to_string(op.kind)},
           {"vertices", op.vertices},
           {"eigenvalues", std::vector<double>(spec.eigenvalues.data(),
                                               spec.eigenvalues.data() + spec.eigenvalues.size())},
           {"e0_multiplicity", spec.e0_multiplicity},
           {"free_components", op.free_components}};
  if (opt<bool>(o, "vectors", false)) {
    json vecs = json::array();
    for (Eigen::Index k = 0; k < spec.eigenfunctions.cols(); ++k) {
      vecs.push_back(function_json(op.vertices, spec.eigenfunctions.col(k)));
    }
    out["eigenfunctions"] = std::move(vecs);
  }
  return {dump(out)};
}

CommandOutput cmd_heat(const CommandInput& in, const json& o) {
  const double t = need<double>(o, "t");
  const bool csv = csv_format(o, true);
  if (!in.document && in.family && o.contains("levels")) {
    ConvergenceReport rep = trace_convergence(*in.family, t, levels_option(o, 0), opt<double>(o, "tolerance", 1e-6));
    if (csv) {
      Csv c{"level", "trace"};
      for (std::size_t i = 0; i < rep.values.size(); ++i) {
        c.cell(rep.levels[i]).cell(rep.values[i]);
        c.end();
      }
      return {c.str()};
    }
    return {dump({{"t", t}, {"trace", report_json(rep)}})};
  }

  ResolvedGraph rg = resolve_graph(in, o, "heat");
  const auto boundary = opt<std::vector<std::string>>(o, "boundary", {});
  TruncatedOperator op = assemble(rg.graph, measure_for(rg, o), boundary_kind(o), boundary);
  HeatResult h = heat(op, t, pairs_option(o, "probes"));
  if (csv) {
    Csv c{"quantity", "x", "y", "value"};
    for (const auto& p : h.probes) {
      c.cell(std::string("p_t")).cell(p.x).cell(p.y).cell(p.value);
      c.end();
    }
    for (std::size_t i = 0; i < op.vertices.size(); ++i) {
      c.cell(std::string("mass")).cell(op.vertices[i]).cell(std::string()).cell(h.mass[static_cast<Eigen::Index>(i)]);
      c.end();
    }
    c.cell(std::string("trace")).cell(std::string()).cell(std::string()).cell(h.partial_trace);
    c.end();
    return {c.str()};
  }
  json probes = json::array();
  for (const auto& p : h.probes) probes.push_back({{"x", p.x}, {"y", p.y}, {"value", p.value}});
  json out{{"t", t},
           {"kind", to_string(op.kind)},
           {"probes", std::move(probes)},
           {"mass", function_json(op.vertices, h.mass)},
           {"partial_trace", h.partial_trace}};
  if (opt<bool>(o, "kernel", false)) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < h.kernel.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < h.kernel.cols(); ++j) row.push_back(h.kernel(i, j));
      rows.push_back(std::move(row));
    }
    out["kernel"] = std::move(rows);
  }
  return {dump(out)};
}

CommandOutput cmd_dirichlet(const CommandInput& in, const json& o) {
  ResolvedGraph rg = resolve_graph(in, o, "dirichlet");
  auto it = o.find("boundary");
  if (it == o.end() || !it->is_object() || it->empty()) {
    throw Error(ErrorCode::InvalidArgument, "dirichlet needs a nonempty \"boundary\" map of id to value");
  }
  DirichletProblem p{rg.graph, {}, {}};
  // Keep the graph's vertex order for the boundary, not the map's key order.
  for (const auto& id : rg.graph.ids()) {
    if (auto v = it->find(id); v != it->end()) {
      if (!v->is_number()) throw Error(ErrorCode::InvalidArgument, "boundary value at " + id + " must be a number");
      p.boundary.push_back(id);
      p.values.push_back(v->get<double>());
    }
  }
  for (const auto& item : it->items()) rg.graph.index(item.key());
  RealFunction u = solve_dirichlet(p);
  MaxPrincipleReport mp = check_max_principle(p, u);
  if (csv_format(o, false)) {
    Csv c{"vertex", "u", "boundary"};
    for (std::size_t i = 0; i < rg.graph.size(); ++i) {
      const bool on = it->contains(rg.graph.id(i));
      c.cell(rg.graph.id(i)).cell(u[static_cast<Eigen::Index>(i)]).cell(on);
      c.end();
    }
    return {c.str()};
  }
  json out{{"solution", function_json(rg.graph.ids(), u)},
           {"energy", energy(rg.graph, u).energy},
           {"max_principle",
            {{"holds", mp.holds},
             {"sandwich_holds", mp.sandwich_holds},
             {"max_abs_solution", mp.max_abs_solution},
             {"max_abs_boundary", mp.max_abs_boundary},
             {"argmax_solution", mp.argmax_solution},
             {"argmax_boundary", mp.argmax_boundary},
             {"lower", mp.lower},
             {"upper", mp.upper}}}};
  return {dump(out)};
}

CommandOutput cmd_capacity(const CommandInput& in, const json& o) {
  const GraphFamily& fam = need_family(in, "capacity");
  const VertexId base = opt<std::string>(o, "o", fam.root());
  const std::vector<int> levels = levels_option(o, 20);
  const double tol = opt<double>(o, "tolerance", 1e-3);
  CapacitySequence cap = capacity(fam, base, levels, tol);
  std::optional<DefectSequence> defect;
  if (opt<bool>(o, "defect", false)) {
    std::vector<int> probe;
    for (int n : levels) {
      if (n > 0) probe.push_back(n);
    }
    defect = constant_approximation_defect(fam, probe, tol, opt<int>(o, "reference_factor", 4));
  }
  CommandOutput result;
  bool uncertain = cap.verdict == CapacityVerdict::Inconclusive;
  if (defect) uncertain = uncertain || defect->verdict == CapacityVerdict::Inconclusive;
  result.inconclusive = opt<bool>(o, "require_certain", false) && uncertain;

  if (csv_format(o, false)) {
    Csv c{"sequence", "level", "value"};
    for (std::size_t i = 0; i < cap.values.size(); ++i) {
      c.cell(std::string("capacity")).cell(cap.report.levels[i]).cell(cap.values[i]);
      c.end();
    }
    if (defect) {
      for (std::size_t i = 0; i < defect->values.size(); ++i) {
        c.cell(std::string("defect")).cell(defect->report.levels[i]).cell(defect->values[i]);
        c.end();
      }
    }
    result.text = c.str();
    return result;
  }
  json out{{"family", fam.name()},
           {"base", cap.base},
           {"capacity", report_json(cap.report)},
           {"verdict", to_string(cap.verdict)}};
  if (defect) {
    out["defect"] = {{"sequence", report_json(defect->report)},
                     {"reference_levels", defect->reference_levels},
                     {"verdict", to_string(defect->verdict)},
                     {"lower_bound", defect->lower_bound}};
  }
  result.text = dump(out);
  return result;
}

json heart_json(const HarmonicComponent& h, const std::vector<VertexId>& ids) {
  json out{{"constant", h.constant}, {"raw_energy", num(h.raw_energy)}};
  if (h.f.size() == static_cast<Eigen::Index>(ids.size())) out["f"] = function_json(ids, h.f);
  if (h.report) out["exhaustion"] = report_json(*h.report);
  if (h.level >= 0) out["level"] = h.level;
  return out;
}

CommandOutput cmd_reduce_heart(const CommandInput& in, const json& o) {
  if (!in.document && in.family && o.contains("levels")) {
    HarmonicComponent h =
        harmonic_component_exhaustion(*in.family, levels_option(o, 0), opt<double>(o, "tolerance", 1e-6));
    Truncation top = in.family->build_ball(h.level);
    std::vector<VertexId> ids = top.graph.ids();
    ids.push_back(kHeartId);
    return {dump({{"family", in.family->name()}, {"harmonic", heart_json(h, ids)}})};
  }
  ResolvedGraph rg = resolve_graph(in, o, "reduce-heart");
  HeartGraph hg = reduce(rg.graph);
  auto pairs = pairs_option(o, "pairs");
  if (pairs.empty()) {
    // Default: every unordered pair on small graphs, otherwise pairs with
    // the first vertex.
    const std::size_t n = rg.graph.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (n <= 16 || x == 0) pairs.emplace_back(rg.graph.id(x), rg.graph.id(y));
      }
    }
  }
  std::optional<HarmonicComponent> h;
  std::string harmonic_note;
  try {
    h = harmonic_component(hg);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    harmonic_note = e.what();
  }
  std::vector<HeartComparison> cmp = compare_metrics(hg, pairs);
  if (csv_format(o, false)) {
    Csv c{"x", "y", "rho", "rho_heart", "gap", "d", "d_killing", "d_heart", "all_hold"};
    for (const auto& r : cmp) {
      c.cell(r.x).cell(r.y).cell(r.rho).cell(r.rho_heart).cell(r.gap).cell(r.d);
      if (r.d_killing) {
        c.cell(*r.d_killing);
      } else {
        c.cell(std::string());
      }
      c.cell(r.d_heart).cell(r.all_hold);
      c.end();
    }
    return {c.str()};
  }
  json comparisons = json::array();
  for (const auto& r : cmp) {
    json checks = json::array();
    for (const auto& k : r.checks) {
      checks.push_back({{"name", k.name}, {"lhs", num(k.lhs)}, {"rhs", num(k.rhs)}, {"holds", k.holds}});
    }
    json e{{"x", r.x},
           {"y", r.y},
           {"rho", num(r.rho)},
           {"rho_heart", num(r.rho_heart)},
           {"gap", num(r.gap)},
           {"d", num(r.d)},
           {"d_heart", num(r.d_heart)},
           {"checks", std::move(checks)},
           {"notes", r.notes},
           {"all_hold", r.all_hold}};
    if (r.d_killing) e["d_killing"] = num(*r.d_killing);
    comparisons.push_back(std::move(e));
  }
  json out{{"augmented", graph_json(hg.augmented)}, {"heart_id", hg.heart_id}, {"comparisons", std::move(comparisons)}};
  if (h) {
    out["harmonic"] = heart_json(*h, hg.augmented.ids());
  } else {
    out["harmonic_note"] = harmonic_note;
  }
  return {dump(out)};
}

json nets_json(const NetSeries& s) {
  return {{"metric", s.metric}, {"levels", s.levels}, {"eps", s.eps}, {"sizes", s.sizes}, {"trend", to_string(s.trend)}};
}

CommandOutput cmd_diagnose(const CommandInput& in, const json& o) {
  DiagnoseOptions opts;
  opts.max_level = max_level_option(o, opts.max_level);
  opts.tolerance = opt<double>(o, "tolerance", opts.tolerance);
  opts.vertex_budget = opt<std::size_t>(o, "vertex_budget", opts.vertex_budget);
  if (auto eps = opt<std::vector<double>>(o, "eps")) opts.eps = *eps;

  ClassificationReport r;
  if (in.document) {
    r = diagnose(in.document->graph, opts);
  } else {
    r = diagnose(need_family(in, "diagnose"), opts);
  }
  json conditions = json::object();
  bool uncertain = false;
  for (auto c : {Condition::A, Condition::B, Condition::C, Condition::D}) {
    const ConditionEntry& e = r.at(c);
    uncertain = uncertain || e.status == ConditionStatus::Inconclusive;
    conditions[condition_name(c)] = {
        {"meaning", condition_meaning(c)}, {"status", to_string(e.status)}, {"evidence", e.evidence}};
  }
  json out{{"subject", r.subject},
           {"max_level", r.max_level},
           {"finite", r.finite},
           {"killing_free", r.killing_free},
           {"conditions", std::move(conditions)},
           {"notes", r.notes}};
  json nets = json::array();
  for (const auto& s : r.nets) nets.push_back(nets_json(s));
  out["nets"] = std::move(nets);
  if (r.rho_diameter) {
    const DiameterEstimate& d = *r.rho_diameter;
    out["rho_diameter"] = {{"lower_bound", num(d.lower_bound)},
                           {"upper_bound", d.upper_bound ? num(*d.upper_bound) : json(nullptr)},
                           {"status", to_string(d.status)},
                           {"reference_level", d.reference_level},
                           {"sequence", report_json(d.report)},
                           {"evidence", d.evidence}};
  }
  if (r.d_root_eccentricity) out["d_root_eccentricity"] = num(*r.d_root_eccentricity);
  if (r.d_diameter_lower) out["d_diameter_lower"] = num(*r.d_diameter_lower);
  if (r.d_diameter_bound) out["d_diameter_bound"] = num(*r.d_diameter_bound);

  if (csv_format(o, false)) {
    Csv c{"condition", "status"};
    for (auto cond : {Condition::A, Condition::B, Condition::C, Condition::D}) {
      c.cell(std::string(condition_name(cond))).cell(std::string(to_string(r.at(cond).status)));
      c.end();
    }
    return {c.str(), opt<bool>(o, "require_certain", false) && uncertain};
  }
  return {dump(out), opt<bool>(o, "require_certain", false) && uncertain};
}

using Handler = CommandOutput (*)(const CommandInput&, const json&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"gen", cmd_gen},           {"metric", cmd_metric},     {"resistance", cmd_resistance},
      {"spectrum", cmd_spectrum}, {"heat", cmd_heat},         {"dirichlet", cmd_dirichlet},
      {"capacity", cmd_capacity}, {"reduce-heart", cmd_reduce_heart}, {"diagnose", cmd_diagnose}};
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gen",      "metric",   "resistance",   "spectrum", "heat",
                                              "dirichlet", "capacity", "reduce-heart", "diagnose"};
  return names;
}

CommandOutput run_command(const std::string& name, const CommandInput& input, const json& options) {
  if (!options.is_object() && !options.is_null()) {
    throw Error(ErrorCode::InvalidArgument, "options must be a JSON object");
  }
  auto it = handlers().find(name);
  if (it == handlers().end()) throw Error(ErrorCode::InvalidArgument, "unknown command \"" + name + "\"");
  return it->second(input, options.is_null() ? json::object() : options);
}

}  // namespace graphlab
