// Command-line front end. Every command is forwarded to the C API; this file
// only turns flags into an options object and handles files and exit codes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphlab/graphlab.h"

namespace {

using nlohmann::json;

constexpr int kExitError = 1;
constexpr int kExitValidation = 2;

struct Flags {
  std::string graph_file;
  std::string output;
  std::string format;
  bool require_certain = false;

  // Family selection.
  std::string family;
  std::string family_spec;
  std::optional<double> power;
  std::optional<double> weight;
  std::optional<int> size;
  std::optional<std::uint64_t> seed;
  std::string measure_rule;
  std::optional<double> killing;
  std::optional<double> killing_ratio;

  std::optional<int> level;
  std::string levels;
  std::optional<double> tolerance;

  // Command specific.
  std::string metric;
  std::optional<double> s;
  std::optional<double> length_power;
  std::string source;
  std::string base;
  std::string x;
  std::string y;
  std::string method;
  std::string kind;
  std::vector<std::string> boundary;
  bool unit_measure = false;
  bool vectors = false;
  bool kernel = false;
  std::optional<double> t;
  std::vector<std::string> probes;
  std::vector<std::string> sets;
  bool defect = false;
  std::optional<int> reference_factor;
  std::vector<std::string> pairs;
  std::optional<std::size_t> vertex_budget;
  std::vector<double> eps;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::string, std::string> split_pair(const std::string& text, char sep, const char* what) {
  const auto at = text.find(sep);
  if (at == std::string::npos || text.find(sep, at + 1) != std::string::npos) {
    throw UsageError(std::string(what) + " expects A" + sep + "B, got \"" + text + "\"");
  }
  return {text.substr(0, at), text.substr(at + 1)};
}

json levels_json(const std::string& text) {
  if (text.find(',') == std::string::npos) return std::stoi(text);
  json list = json::array();
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find(',', start);
    list.push_back(std::stoi(text.substr(start, end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return list;
}

json family_json(const Flags& f) {
  json spec = f.family_spec.empty() ? json::object() : json::parse(f.family_spec);
  if (!f.family.empty()) spec["name"] = f.family;
  if (f.power) spec["power"] = *f.power;
  if (f.weight) spec["weight"] = *f.weight;
  if (f.size) spec["size"] = *f.size;
  if (f.seed) spec["seed"] = *f.seed;
  if (!f.measure_rule.empty()) spec["measure"] = f.measure_rule;
  if (f.killing) spec["killing"] = *f.killing;
  if (f.killing_ratio) spec["killing_ratio"] = *f.killing_ratio;
  return spec;
}

json options_json(const Flags& f) {
  json o = json::object();
  if (!f.format.empty()) o["format"] = f.format;
  if (f.require_certain) o["require_certain"] = true;
  if (f.level) o["level"] = *f.level;
  if (!f.levels.empty()) o["levels"] = levels_json(f.levels);
  if (f.tolerance) o["tolerance"] = *f.tolerance;
  if (!f.metric.empty()) o["metric"] = f.metric;
  if (f.s) o["s"] = *f.s;
  if (f.length_power) o["power"] = *f.length_power;
  if (!f.source.empty()) o["source"] = f.source;
  if (!f.base.empty()) o["o"] = f.base;
  if (!f.x.empty()) o["x"] = f.x;
  if (!f.y.empty()) o["y"] = f.y;
  if (!f.method.empty()) o["method"] = f.method;
  if (!f.kind.empty()) o["kind"] = f.kind;
  if (!f.boundary.empty()) o["boundary"] = f.boundary;
  if (f.unit_measure) o["measure"] = "unit";
  if (f.vectors) o["vectors"] = true;
  if (f.kernel) o["kernel"] = true;
  if (f.t) o["t"] = *f.t;
  if (!f.probes.empty()) {
    json list = json::array();
    for (const auto& p : f.probes) {
      auto [a, b] = split_pair(p, ',', "--probe");
      list.push_back({a, b});
    }
    o["probes"] = std::move(list);
  }
  if (!f.pairs.empty()) {
    json list = json::array();
    for (const auto& p : f.pairs) {
      auto [a, b] = split_pair(p, ',', "--pair");
      list.push_back({a, b});
    }
    o["pairs"] = std::move(list);
  }
  if (!f.sets.empty()) {
    json values = json::object();
    for (const auto& s : f.sets) {
      auto [id, v] = split_pair(s, '=', "--set");
      values[id] = std::stod(v);
    }
    o["boundary"] = std::move(values);
  }
  if (f.defect) o["defect"] = true;
  if (f.reference_factor) o["reference_factor"] = *f.reference_factor;
  if (f.vertex_budget) o["vertex_budget"] = *f.vertex_budget;
  if (!f.eps.empty()) o["eps"] = f.eps;
  return o;
}

int report_failure(gl_status status) {
  std::cerr << "error[" << gl_last_error_kind() << "]: " << gl_last_error() << "\n";
  return static_cast<int>(status);
}

int write_output(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error[io]: cannot write " << path << "\n";
    return kExitError;
  }
  return 0;
}

int run(const std::string& command, const Flags& f) {
  using GraphPtr = std::unique_ptr<gl_graph, decltype(&gl_graph_free)>;
  using FamilyPtr = std::unique_ptr<gl_family, decltype(&gl_family_free)>;
  GraphPtr graph(nullptr, gl_graph_free);
  FamilyPtr family(nullptr, gl_family_free);

  json options;
  std::string spec_text;
  try {
    options = options_json(f);
    if (!f.family.empty() || !f.family_spec.empty()) spec_text = family_json(f).dump();
  } catch (const std::exception& e) {
    std::cerr << "error[invalid_argument]: " << e.what() << "\n";
    return kExitValidation;
  }

  if (!f.graph_file.empty()) {
    gl_graph* g = nullptr;
    if (gl_status s = gl_graph_load(f.graph_file.c_str(), &g); s != GL_OK) return report_failure(s);
    graph.reset(g);
  }
  if (!spec_text.empty()) {
    gl_family* fam = nullptr;
    if (gl_status s = gl_family_make(spec_text.c_str(), &fam); s != GL_OK) return report_failure(s);
    family.reset(fam);
  }

  char* text = nullptr;
  const std::string opts = options.dump();
  gl_status status = gl_run(command.c_str(), graph.get(), family.get(), opts.c_str(), &text);
  if (status != GL_OK && status != GL_INCONCLUSIVE) return report_failure(status);
  int rc = write_output(f.output, text);
  gl_string_free(text);
  if (rc != 0) return rc;
  if (status == GL_INCONCLUSIVE) {
    std::cerr << "inconclusive: " << gl_last_error() << "\n";
    return GL_INCONCLUSIVE;
  }
  return 0;
}

void add_common(CLI::App* cmd, Flags& f, bool graph_input) {
  if (graph_input) cmd->add_option("graph", f.graph_file, "Graph document (JSON)");
  cmd->add_option("-o,--output", f.output, "Output path (default: stdout)");
  cmd->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--require-certain", f.require_certain, "Exit with 3 when the result is inconclusive");

  cmd->add_option("--family", f.family, "Family name");
  cmd->add_option("--family-spec", f.family_spec, "Family spec as a JSON object");
  cmd->add_option("--power", f.power, "ray_power exponent");
  cmd->add_option("--weight", f.weight, "Edge weight of finite_path / finite_tree");
  cmd->add_option("--size", f.size, "Vertex count of finite families");
  cmd->add_option("--seed", f.seed, "Seed of random_tree");
  cmd->add_option("--measure", f.measure_rule, "none, unit, canonical_M or geometric:<q>");
  cmd->add_option("--killing", f.killing, "Killing amplitude");
  cmd->add_option("--killing-ratio", f.killing_ratio, "Killing ratio per level");
  cmd->add_option("--level", f.level, "Truncation level used for graph commands on a family");
  cmd->add_option("--levels", f.levels, "Maximum level N (meaning 0..N) or a comma-separated list");
  cmd->add_option("--tolerance", f.tolerance, "Convergence tolerance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted graph analysis: resistance, spectra, capacity and compactness diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", gl_version());
  Flags f;

  CLI::App* gen = app.add_subcommand("gen", "Write the level truncation of a family as a graph document");
  add_common(gen, f, false);

  CLI::App* metric = app.add_subcommand("metric", "Path or resistance metric table");
  add_common(metric, f, true);
  metric->add_option("--metric", f.metric, "d, d_s, d_m, d_c, r, rho or rho_o");
  metric->add_option("--s", f.s, "Exponent of d_s");
  metric->add_option("--length-power", f.length_power, "Exponent applied to the d_m length");
  metric->add_option("--source", f.source, "Single source vertex");
  metric->add_option("--base", f.base, "Base vertex o of rho_o");

  CLI::App* resistance = app.add_subcommand("resistance", "Effective resistance between two vertices");
  add_common(resistance, f, true);
  resistance->add_option("--x", f.x, "First vertex")->required();
  resistance->add_option("--y", f.y, "Second vertex")->required();
  resistance->add_option("--method", f.method, "constrained, pseudoinverse, lagrange or tree");

  CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the truncated operator");
  add_common(spectrum, f, true);
  spectrum->add_option("--kind", f.kind, "neumann or dirichlet");
  spectrum->add_option("--boundary", f.boundary, "Boundary vertex (repeatable)")->allow_extra_args(false);
  spectrum->add_flag("--unit-measure", f.unit_measure, "Ignore the document measure and use m = 1");
  spectrum->add_flag("--vectors", f.vectors, "Include eigenfunctions");

  CLI::App* heat = app.add_subcommand("heat", "Heat kernel values and mass");
  add_common(heat, f, true);
  heat->add_option("--t", f.t, "Time")->required();
  heat->add_option("--kind", f.kind, "neumann or dirichlet");
  heat->add_option("--boundary", f.boundary, "Boundary vertex (repeatable)")->allow_extra_args(false);
  heat->add_option("--probe", f.probes, "Kernel entry X,Y (repeatable)")->allow_extra_args(false);
  heat->add_flag("--unit-measure", f.unit_measure, "Ignore the document measure and use m = 1");
  heat->add_flag("--kernel", f.kernel, "Include the full kernel (JSON)");

  CLI::App* dirichlet = app.add_subcommand("dirichlet", "Solve a Dirichlet problem");
  add_common(dirichlet, f, true);
  dirichlet->add_option("--set", f.sets, "Boundary value ID=VALUE (repeatable)")->allow_extra_args(false)->required();

  CLI::App* capacity = app.add_subcommand("capacity", "Capacity sequence of a family");
  add_common(capacity, f, false);
  capacity->add_option("--base", f.base, "Base vertex (default: family root)");
  capacity->add_flag("--defect", f.defect, "Also compute the constant-approximation defect");
  capacity->add_option("--reference-factor", f.reference_factor, "Reference level factor of the defect");

  CLI::App* heart = app.add_subcommand("reduce-heart", "Replace killing by edges to a virtual vertex");
  add_common(heart, f, true);
  heart->add_option("--pair", f.pairs, "Vertex pair X,Y to compare (repeatable)")->allow_extra_args(false);

  CLI::App* diag = app.add_subcommand("diagnose", "Classify conditions (A)-(D)");
  add_common(diag, f, true);
  diag->add_option("--vertex-budget", f.vertex_budget, "Largest truncation used for all-pairs metrics");
  diag->add_option("--eps", f.eps, "Net radii (repeatable)")->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }
  for (CLI::App* sub : app.get_subcommands()) return run(sub->get_name(), f);
  return kExitError;
}
