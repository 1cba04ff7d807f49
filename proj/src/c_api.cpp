#include "graphlab/graphlab.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "commands.hpp"
#include "graphlab/document.hpp"
#include "graphlab/error.hpp"
#include "graphlab/generators.hpp"
#include "graphlab/resistance.hpp"

struct gl_graph {
  graphlab::GraphDocument doc;
};

struct gl_family {
  graphlab::FamilySpec spec;
  graphlab::GraphFamily family;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_kind;

void clear_error() {
  last_error.clear();
  last_kind.clear();
}

gl_status fail(gl_status s, const char* kind, const std::string& message) {
  last_kind = kind;
  last_error = message;
  return s;
}

gl_status status_of(graphlab::ErrorCode code) {
  using graphlab::ErrorCode;
  switch (code) {
    case ErrorCode::Validation:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownVertex:
    case ErrorCode::DomainMismatch:
      return GL_VALIDATION;
    default:
      return GL_ERROR;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
gl_status guarded(F&& body) {
  clear_error();
  try {
    return body();
  } catch (const graphlab::Error& e) {
    return fail(status_of(e.code()), graphlab::to_string(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GL_ERROR, "internal", "out of memory");
  } catch (const std::exception& e) {
    return fail(GL_ERROR, "internal", e.what());
  }
}

gl_status null_argument(const char* name) {
  return fail(GL_VALIDATION, "invalid_argument", std::string("null argument: ") + name);
}

}  // namespace

extern "C" {

const char* gl_version(void) { return "1.0.0"; }
const char* gl_last_error(void) { return last_error.c_str(); }
const char* gl_last_error_kind(void) { return last_kind.c_str(); }
void gl_string_free(char* s) { std::free(s); }

gl_status gl_graph_parse(const char* json_text, gl_graph** out) {
  if (!json_text) return null_argument("json_text");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new gl_graph{graphlab::parse_document(json_text)};
    return GL_OK;
  });
}

gl_status gl_graph_load(const char* path, gl_graph** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new gl_graph{graphlab::load_document(path)};
    return GL_OK;
  });
}

gl_status gl_graph_serialize(const gl_graph* g, char** out) {
  if (!g) return null_argument("graph");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(graphlab::serialize_document(g->doc));
    return GL_OK;
  });
}

size_t gl_graph_vertex_count(const gl_graph* g) { return g ? g->doc.graph.size() : 0; }

void gl_graph_free(gl_graph* g) { delete g; }

gl_status gl_family_make(const char* spec_json, gl_family** out) {
  if (!spec_json) return null_argument("spec_json");
  if (!out) return null_argument("out");
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw graphlab::Error(graphlab::ErrorCode::Validation, std::string("malformed JSON: ") + e.what());
    }
    graphlab::FamilySpec spec = graphlab::family_spec_from_json(j);
    graphlab::GraphFamily family = graphlab::make_family(spec);
    *out = new gl_family{std::move(spec), std::move(family)};
    return GL_OK;
  });
}

gl_status gl_family_ball(const gl_family* f, int level, gl_graph** out) {
  if (!f) return null_argument("family");
  if (!out) return null_argument("out");
  return guarded([&] {
    graphlab::Truncation t = f->family.build_ball(level);
    *out = new gl_graph{graphlab::document_from_truncation(t, f->spec)};
    return GL_OK;
  });
}

void gl_family_free(gl_family* f) { delete f; }

gl_status gl_resistance(const gl_graph* g, const char* x, const char* y, double* r) {
  if (!g) return null_argument("graph");
  if (!x || !y) return null_argument("vertex id");
  if (!r) return null_argument("r");
  return guarded([&] {
    try {
      *r = graphlab::resistance_finite(g->doc.graph, x, y).r;
    } catch (const graphlab::Error& e) {
      if (e.code() != graphlab::ErrorCode::InfiniteResistance) throw;
      *r = std::numeric_limits<double>::infinity();
    }
    return GL_OK;
  });
}

gl_status gl_run(const char* command, const gl_graph* g, const gl_family* f, const char* options_json,
                 char** out) {
  if (!command) return null_argument("command");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    nlohmann::json options = nlohmann::json::object();
    if (options_json) {
      try {
        options = nlohmann::json::parse(options_json);
      } catch (const nlohmann::json::parse_error& e) {
        throw graphlab::Error(graphlab::ErrorCode::InvalidArgument, std::string("malformed options: ") + e.what());
      }
    }
    graphlab::CommandInput input;
    if (g) input.document = &g->doc;
    if (f) {
      input.family = &f->family;
      input.spec = &f->spec;
    }
    graphlab::CommandOutput result = graphlab::run_command(command, input, options);
    *out = copy_string(result.text);
    if (result.inconclusive) {
      return fail(GL_INCONCLUSIVE, "inconclusive", "result is inconclusive and certainty was required");
    }
    return GL_OK;
  });
}

}  // extern "C"
