#ifndef GRAPHLAB_GRAPHLAB_H
#define GRAPHLAB_GRAPHLAB_H

/* C interface to the graphlab library. All handles are opaque; every call
 * that can fail returns a gl_status and records a message retrievable with
 * gl_last_error() on the calling thread. Strings returned through char**
 * out-parameters are owned by the caller and released with gl_string_free. */

#include <stddef.h>

#if defined(_WIN32)
#define GL_API __declspec(dllexport)
#else
#define GL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gl_status {
  GL_OK = 0,
  GL_ERROR = 1,         /* I/O, numerical or internal failure */
  GL_VALIDATION = 2,    /* malformed input, bad arguments, unknown vertex */
  GL_INCONCLUSIVE = 3   /* certainty was demanded but the result is inconclusive */
} gl_status;

typedef struct gl_graph gl_graph;
typedef struct gl_family gl_family;

GL_API const char* gl_version(void);

/* Message of the last failed call on this thread, "" if none. */
GL_API const char* gl_last_error(void);
/* Machine-readable kind of the last failure ("validation", "io", ...). */
GL_API const char* gl_last_error_kind(void);

GL_API void gl_string_free(char* s);

/* Graph documents (JSON). */
GL_API gl_status gl_graph_parse(const char* json_text, gl_graph** out);
GL_API gl_status gl_graph_load(const char* path, gl_graph** out);
GL_API gl_status gl_graph_serialize(const gl_graph* g, char** out);
GL_API size_t gl_graph_vertex_count(const gl_graph* g);
GL_API void gl_graph_free(gl_graph* g);

/* Families from a JSON spec such as {"name": "ray_power", "power": 3}. */
GL_API gl_status gl_family_make(const char* spec_json, gl_family** out);
GL_API gl_status gl_family_ball(const gl_family* f, int level, gl_graph** out);
GL_API void gl_family_free(gl_family* f);

/* r(x, y) on a finite graph; *r is +inf when x and y are separated by an
 * infinite resistance. */
GL_API gl_status gl_resistance(const gl_graph* g, const char* x, const char* y, double* r);

/* Runs a CLI command ("gen", "metric", "resistance", "spectrum", "heat",
 * "dirichlet", "capacity", "reduce-heart", "diagnose") on a graph and/or a
 * family with options given as a JSON object (may be NULL). On GL_OK and
 * GL_INCONCLUSIVE *out holds the rendered output. */
GL_API gl_status gl_run(const char* command, const gl_graph* g, const gl_family* f,
                        const char* options_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
