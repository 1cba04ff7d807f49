// Exercises the shared library through its C header only.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "graphlab/graphlab.h"

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    std::printf("FAIL: %s (last error: %s)\n", what, gl_last_error());
    ++failures;
  }
}

const char* kTriangle = R"({"format_version": 1,
  "vertices": [{"id": "a"}, {"id": "b"}, {"id": "c"}],
  "edges": [{"u": "a", "v": "b", "b": 1}, {"u": "b", "v": "c", "b": 1}, {"u": "a", "v": "c", "b": 1}]})";

}  // namespace

int main() {
  expect(std::strlen(gl_version()) > 0, "version string");

  gl_graph* g = nullptr;
  expect(gl_graph_parse(kTriangle, &g) == GL_OK, "parse triangle");
  expect(gl_graph_vertex_count(g) == 3, "vertex count");

  double r = 0.0;
  expect(gl_resistance(g, "a", "b", &r) == GL_OK, "resistance call");
  expect(std::abs(r - 2.0 / 3.0) <= 1e-12, "triangle resistance 2/3");
  expect(gl_resistance(g, "a", "zz", &r) == GL_VALIDATION, "unknown vertex is a validation error");
  expect(std::string(gl_last_error_kind()) == "unknown_vertex", "error kind");

  char* text = nullptr;
  expect(gl_graph_serialize(g, &text) == GL_OK, "serialize");
  gl_graph* again = nullptr;
  expect(gl_graph_parse(text, &again) == GL_OK, "reparse");
  char* text2 = nullptr;
  expect(gl_graph_serialize(again, &text2) == GL_OK && std::strcmp(text, text2) == 0, "round trip");
  gl_string_free(text);
  gl_string_free(text2);
  gl_graph_free(again);

  gl_graph* bad = nullptr;
  expect(gl_graph_parse(R"({"format_version": 1, "vertices": [{"id": "a"}, {"id": "b"}],
                            "edges": [{"u": "b", "v": "a", "b": 1}]})",
                        &bad) == GL_VALIDATION,
         "unordered endpoints rejected");
  expect(bad == nullptr, "no handle on failure");
  expect(std::string(gl_last_error()).find("edge endpoints not ordered") != std::string::npos, "message");
  expect(gl_graph_load("/nonexistent.json", &bad) == GL_ERROR, "missing file is an I/O error");
  expect(std::string(gl_last_error_kind()) == "io", "io kind");

  gl_family* fam = nullptr;
  expect(gl_family_make(R"({"name": "comb"})", &fam) == GL_OK, "make comb");
  gl_graph* ball = nullptr;
  expect(gl_family_ball(fam, 3, &ball) == GL_OK, "comb ball");
  expect(gl_graph_vertex_count(ball) == 10, "comb level 3 has 10 vertices");
  gl_graph_free(ball);
  expect(gl_family_make(R"({"name": "nope"})", &fam) == GL_VALIDATION, "unknown family");

  gl_family* comb = nullptr;
  gl_family_make(R"({"name": "comb"})", &comb);
  char* out = nullptr;
  expect(gl_run("diagnose", nullptr, comb, R"({"levels": 12})", &out) == GL_OK, "diagnose comb");
  expect(out && std::string(out).find("\"fails(certified)\"") != std::string::npos, "diagnose output");
  gl_string_free(out);
  expect(gl_run("heat", g, nullptr, R"({"t": 1, "probes": [["a", "b"]]})", &out) == GL_OK, "heat");
  expect(out && std::string(out).rfind("quantity,x,y,value\n", 0) == 0, "heat csv");
  gl_string_free(out);
  expect(gl_run("fly", g, nullptr, nullptr, &out) == GL_VALIDATION, "unknown command");
  expect(gl_run("heat", g, nullptr, "{oops", &out) == GL_VALIDATION, "malformed options");

  gl_family* ray = nullptr;
  gl_family_make(R"({"name": "ray_power", "power": 1})", &ray);
  expect(gl_run("capacity", nullptr, ray, R"({"levels": 6, "require_certain": true})", &out) == GL_INCONCLUSIVE,
         "inconclusive capacity");
  expect(out != nullptr, "inconclusive still returns output");
  gl_string_free(out);

  expect(gl_graph_parse(nullptr, &bad) == GL_VALIDATION, "null argument");

  gl_family_free(ray);
  gl_family_free(comb);
  gl_family_free(fam);
  gl_graph_free(g);
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
