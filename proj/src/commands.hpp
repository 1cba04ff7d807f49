#pragma once

#include <string>

#include <json.hpp>

#include "graphlab/document.hpp"
#include "graphlab/exhaustion.hpp"
#include "graphlab/generators.hpp"

namespace graphlab {

struct CommandInput {
  const GraphDocument* document = nullptr;
  const GraphFamily* family = nullptr;
  const FamilySpec* spec = nullptr;  // set together with family
};

struct CommandOutput {
  std::string text;
  bool inconclusive = false;  // only set when options["require_certain"] is true
};

const std::vector<std::string>& command_names();

// Runs one CLI command. Options are the command's flags as JSON, with
// "format" selecting "json" or "csv". Graph commands without a document use
// the family truncation at options["level"].
CommandOutput run_command(const std::string& name, const CommandInput& input,
                          const nlohmann::json& options);

// Shortest round-trip decimal, "inf" for +∞.
std::string format_number(double v);

}  // namespace graphlab
