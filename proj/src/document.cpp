#include "graphlab/document.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "graphlab/error.hpp"

namespace graphlab {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::Validation, message); }

double number_field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where + ": missing field \"" + key + "\"");
  if (!it->is_number()) invalid(where + ": field \"" + key + "\" must be a number");
  double v = it->get<double>();
  if (!std::isfinite(v)) invalid(where + ": field \"" + key + "\" must be finite");
  return v;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where + ": missing field \"" + key + "\"");
  if (!it->is_string()) invalid(where + ": field \"" + key + "\" must be a string");
  return it->get<std::string>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& item : obj.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; });
    if (!ok) invalid(where + ": unknown field \"" + item.key() + "\"");
  }
}

}  // namespace

GraphDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) invalid("document must be a JSON object");

  GraphDocument doc;
  const auto version = root.find("format_version");
  if (version == root.end() || !version->is_number_integer()) {
    invalid("missing integer field \"format_version\"");
  }
  doc.format_version = version->get<int>();
  if (doc.format_version != kFormatVersion) {
    invalid("unsupported format_version " + std::to_string(doc.format_version));
  }
  if (auto it = root.find("metadata"); it != root.end()) {
    if (!it->is_object()) invalid("\"metadata\" must be an object");
    doc.metadata = *it;
  }
  for (const auto& item : root.items()) {
    const std::string& key = item.key();
    if (key == "format_version" || key == "vertices" || key == "edges" || key == "metadata") continue;
    if (doc.metadata.contains(key)) invalid("unknown field \"" + key + "\" collides with metadata");
    doc.metadata[key] = item.value();
  }

  const auto vertices = root.find("vertices");
  if (vertices == root.end() || !vertices->is_array()) invalid("missing array field \"vertices\"");
  std::vector<VertexId> ids;
  std::vector<double> killing;
  std::vector<double> mass;
  std::map<VertexId, std::size_t> index;
  std::size_t with_mass = 0;
  for (std::size_t i = 0; i < vertices->size(); ++i) {
    const json& v = (*vertices)[i];
    const std::string where = "vertex #" + std::to_string(i);
    if (!v.is_object()) invalid(where + " must be an object");
    reject_unknown(v, {"id", "c", "m"}, where);
    VertexId id = string_field(v, "id", where);
    if (id.empty()) invalid(where + ": empty id");
    if (id == kHeartId) invalid("reserved vertex id " + id);
    if (!index.emplace(id, ids.size()).second) invalid("duplicate vertex id " + id);
    double c = v.contains("c") ? number_field(v, "c", where) : 0.0;
    if (c < 0.0) invalid("negative killing term at " + id);
    if (v.contains("m")) {
      double m = number_field(v, "m", where);
      if (!(m > 0.0)) invalid("nonpositive measure at " + id);
      mass.push_back(m);
      ++with_mass;
    } else {
      mass.push_back(0.0);
    }
    ids.push_back(std::move(id));
    killing.push_back(c);
  }
  if (with_mass != 0 && with_mass != ids.size()) invalid("measure given for some vertices only");

  const auto edges = root.find("edges");
  if (edges == root.end() || !edges->is_array()) invalid("missing array field \"edges\"");
  std::map<std::pair<std::size_t, std::size_t>, double> seen;
  std::vector<Edge> list;
  for (std::size_t i = 0; i < edges->size(); ++i) {
    const json& e = (*edges)[i];
    const std::string where = "edge #" + std::to_string(i);
    if (!e.is_object()) invalid(where + " must be an object");
    reject_unknown(e, {"u", "v", "b"}, where);
    const std::string u = string_field(e, "u", where);
    const std::string v = string_field(e, "v", where);
    const double b = number_field(e, "b", where);
    auto iu = index.find(u);
    auto iv = index.find(v);
    if (iu == index.end()) invalid(where + ": unknown vertex " + u);
    if (iv == index.end()) invalid(where + ": unknown vertex " + v);
    if (u == v) invalid("self-loop at " + u);
    if (!(u < v)) invalid("edge endpoints not ordered (" + u + "," + v + ")");
    if (!(b > 0.0)) invalid("nonpositive weight (" + u + "," + v + ")");
    auto key = std::make_pair(iu->second, iv->second);
    if (auto prior = seen.find(key); prior != seen.end()) {
      if (prior->second != b) invalid("asymmetric duplicate edge (" + u + "," + v + ")");
      invalid("duplicate edge (" + u + "," + v + ")");
    }
    seen.emplace(key, b);
    list.push_back({std::min(key.first, key.second), std::max(key.first, key.second), b});
  }
  doc.graph = WeightedGraph(std::move(ids), std::move(list), std::move(killing));
  if (with_mass != 0) doc.measure = Measure(std::move(mass));
  return doc;
}

GraphDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string serialize_document(const GraphDocument& doc) {
  const WeightedGraph& g = doc.graph;
  json vertices = json::array();
  for (std::size_t x = 0; x < g.size(); ++x) {
    json v{{"id", g.id(x)}, {"c", g.killing(x)}};
    if (doc.measure) v["m"] = (*doc.measure)[x];
    vertices.push_back(std::move(v));
  }
  std::vector<std::pair<std::pair<VertexId, VertexId>, double>> sorted;
  for (const auto& e : g.edges()) {
    const VertexId& a = g.id(e.u);
    const VertexId& b = g.id(e.v);
    sorted.push_back({a < b ? std::make_pair(a, b) : std::make_pair(b, a), e.weight});
  }
  std::sort(sorted.begin(), sorted.end());
  json edges = json::array();
  for (const auto& [key, b] : sorted) edges.push_back({{"u", key.first}, {"v", key.second}, {"b", b}});
  json root{{"format_version", doc.format_version},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)},
            {"metadata", doc.metadata}};
  return root.dump(2) + "\n";
}

FamilySpec family_spec_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "family spec must be a JSON object");
  FamilySpec spec;
  try {
    for (const auto& item : j.items()) {
      const std::string& key = item.key();
      const json& v = item.value();
      if (key == "name") {
        spec.name = v.get<std::string>();
      } else if (key == "power") {
        spec.power = v.get<double>();
      } else if (key == "weight") {
        spec.weight = v.get<double>();
      } else if (key == "size") {
        spec.size = v.get<int>();
      } else if (key == "seed") {
        spec.seed = v.get<std::uint64_t>();
      } else if (key == "measure") {
        spec.measure = MeasureRule::parse(v.get<std::string>());
      } else if (key == "killing") {
        spec.killing = v.get<double>();
      } else if (key == "killing_ratio") {
        spec.killing_ratio = v.get<double>();
      } else if (key == "base") {
        spec.base = std::make_shared<FamilySpec>(family_spec_from_json(v));
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown family parameter \"" + key + "\"");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed family spec: ") + e.what());
  }
  if (spec.name.empty()) throw Error(ErrorCode::InvalidArgument, "family spec needs a name");
  return spec;
}

json family_spec_to_json(const FamilySpec& spec) {
  json j{{"name", spec.name}, {"measure", spec.measure.to_string()}};
  if (spec.name == "ray_power") j["power"] = spec.power;
  if (spec.name == "finite_path" || spec.name == "finite_tree") j["weight"] = spec.weight;
  if (spec.name == "finite_path" || spec.name == "finite_tree" || spec.name == "random_tree") {
    j["size"] = spec.size;
  }
  if (spec.name == "random_tree") j["seed"] = spec.seed;
  if (spec.killing > 0.0) {
    j["killing"] = spec.killing;
    j["killing_ratio"] = spec.killing_ratio;
  }
  if (spec.base) j["base"] = family_spec_to_json(*spec.base);
  return j;
}

GraphDocument document_from_truncation(const Truncation& t, const FamilySpec& spec) {
  GraphDocument doc;
  doc.graph = t.graph;
  doc.measure = t.measure;
  doc.metadata = {{"family", family_spec_to_json(spec)}, {"level", t.level}, {"frontier", t.frontier}};
  return doc;
}

}  // namespace graphlab
