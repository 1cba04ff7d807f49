#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "graphlab/exhaustion.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/graph.hpp"

namespace graphlab {

inline constexpr int kFormatVersion = 1;

/// On-disk graph: vertices with killing and optional measure, edges keyed by
/// lexicographically ordered endpoints, and free-form metadata.
struct GraphDocument {
  int format_version = kFormatVersion;
  WeightedGraph graph;
  std::optional<Measure> measure;
  nlohmann::json metadata = nlohmann::json::object();
};

// Throws Error(Validation) describing the first problem found: malformed
// JSON, missing fields, duplicate ids or edges, unordered endpoints,
// nonpositive b or m, negative c, or the reserved id.
GraphDocument parse_document(const std::string& text);
// Throws Error(Io) when the file cannot be read.
GraphDocument load_document(const std::string& path);

// Canonical form: sorted keys, vertices in graph order, edges sorted by
// (u, v), shortest round-trip numbers, two-space indentation.
std::string serialize_document(const GraphDocument& doc);

FamilySpec family_spec_from_json(const nlohmann::json& j);
nlohmann::json family_spec_to_json(const FamilySpec& spec);

// Level truncation as a document, with the family spec, level and frontier
// recorded in the metadata.
GraphDocument document_from_truncation(const Truncation& t, const FamilySpec& spec);

}  // namespace graphlab
