#ifndef TOPOIDX_TOPOIDX_H
#define TOPOIDX_TOPOIDX_H

#include <stddef.h>
#include <stdint.h>

#if defined(TOPOIDX_BUILDING)
#define TOPOIDX_API __attribute__((visibility("default")))
#else
#define TOPOIDX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum topoidx_status {
  TOPOIDX_OK = 0,
  TOPOIDX_E_DIVISION_BY_ZERO,
  TOPOIDX_E_UNSUPPORTED_EVALUATION,
  TOPOIDX_E_PARSE,
  TOPOIDX_E_SELF_LOOP,
  TOPOIDX_E_VERTEX_OUT_OF_RANGE,
  TOPOIDX_E_INVALID_FAMILY_PARAMS,
  TOPOIDX_E_DISCONNECTED_GRAPH,
  TOPOIDX_E_GRAPH_TOO_LARGE,
  TOPOIDX_E_TEMPERATURE_UNDEFINED,
  TOPOIDX_E_BANHATTI_UNDEFINED,
  TOPOIDX_E_INVERSE_UNDEFINED,
  TOPOIDX_E_UNKNOWN_INDEX_NAME,
  TOPOIDX_E_PARAMS_OUT_OF_STATED_RANGE,
  TOPOIDX_E_UNKNOWN_ORACLE,
  TOPOIDX_E_IO,
  TOPOIDX_E_INVALID_ARGUMENT,
  TOPOIDX_E_INTERNAL
} topoidx_status;

typedef enum topoidx_result_kind {
  TOPOIDX_RESULT_EXACT = 0,
  TOPOIDX_RESULT_POLY,
  TOPOIDX_RESULT_APPROX
} topoidx_result_kind;

typedef struct topoidx_graph topoidx_graph;
typedef struct topoidx_session topoidx_session;
typedef struct topoidx_result topoidx_result;
typedef struct topoidx_report topoidx_report;

/* Message of the last failure on the calling thread; never NULL. */
TOPOIDX_API const char* topoidx_last_error(void);
TOPOIDX_API const char* topoidx_status_name(topoidx_status s);
/* Frees strings returned through char** out-parameters. */
TOPOIDX_API void topoidx_string_free(char* s);

/* edges holds edge_count (u, v) pairs, flattened. */
TOPOIDX_API topoidx_status topoidx_graph_from_edges(uint32_t vertex_count, const uint32_t* edges,
                                                    size_t edge_count, topoidx_graph** out);
TOPOIDX_API topoidx_status topoidx_graph_parse(const char* text, topoidx_graph** out);
TOPOIDX_API topoidx_status topoidx_graph_load(const char* path, topoidx_graph** out);
TOPOIDX_API topoidx_status topoidx_graph_generate(const char* family, const long* params, size_t param_count,
                                                  topoidx_graph** out);
/* comment may be NULL. */
TOPOIDX_API topoidx_status topoidx_graph_format(const topoidx_graph* g, const char* comment, char** out);
TOPOIDX_API topoidx_status topoidx_graph_write(const topoidx_graph* g, const char* path, const char* comment);
TOPOIDX_API uint32_t topoidx_graph_vertex_count(const topoidx_graph* g);
TOPOIDX_API size_t topoidx_graph_edge_count(const topoidx_graph* g);
TOPOIDX_API uint64_t topoidx_graph_fingerprint(const topoidx_graph* g);
TOPOIDX_API void topoidx_graph_free(topoidx_graph* g);

/* A session caches functional tables for one graph. The graph must outlive it.
   domination_max = 0 selects the default bound. */
TOPOIDX_API topoidx_status topoidx_session_new(const topoidx_graph* g, size_t domination_max,
                                               topoidx_session** out);
TOPOIDX_API void topoidx_session_free(topoidx_session* s);

/* degree may be NULL; otherwise it replaces the degree source of a catalog index
   ("plain", "revan", "banhatti", "temperature", "domination", "kv", "nbdsum"). */
TOPOIDX_API topoidx_status topoidx_compute(topoidx_session* s, const char* index, const char* degree,
                                           topoidx_result** out);
TOPOIDX_API topoidx_result_kind topoidx_result_get_kind(const topoidx_result* r);
/* Canonical index name, or "" when r is NULL. */
TOPOIDX_API const char* topoidx_result_name(const topoidx_result* r);
/* Exact text: "num/den", a polynomial, or a 17-digit float. */
TOPOIDX_API const char* topoidx_result_text(const topoidx_result* r);
/* Fails with UNSUPPORTED_EVALUATION for polynomials. */
TOPOIDX_API topoidx_status topoidx_result_double(const topoidx_result* r, double* out);
/* Exact radicand total for approximate square-root indices, otherwise NULL. */
TOPOIDX_API const char* topoidx_result_radicand(const topoidx_result* r);
TOPOIDX_API void topoidx_result_free(topoidx_result* r);

/* "vertex,value" lines for one functional: a degree source, "closeness" or "cl". */
TOPOIDX_API topoidx_status topoidx_functional_csv(topoidx_session* s, const char* functional, char** out);

TOPOIDX_API size_t topoidx_index_count(void);
/* Canonical name and "name,source,variant,transform,aggregation,form"; valid for the process lifetime. */
TOPOIDX_API topoidx_status topoidx_index_info(size_t i, const char** name, const char** description);

/* family and oracle may be NULL to select everything. */
TOPOIDX_API topoidx_status topoidx_verify(const char* family, long lo, long hi, const char* oracle,
                                          size_t domination_max, topoidx_report** out);
TOPOIDX_API size_t topoidx_report_size(const topoidx_report* r);
/* verdict receives "CONFIRMED", "DISCREPANT" or "ERROR". Any out pointer may be NULL. */
TOPOIDX_API topoidx_status topoidx_report_row(const topoidx_report* r, size_t i, const char** id, const char** params,
                                              const char** oracle_value, const char** direct_value,
                                              const char** verdict);
/* format: "csv", "table" or "baseline". */
TOPOIDX_API topoidx_status topoidx_report_format(const topoidx_report* r, const char* format, char** out);
/* Compares against baseline CSV text, or the embedded baseline when NULL.
   unlisted counts points absent from the baseline; description lists every mismatch. */
TOPOIDX_API topoidx_status topoidx_report_compare(const topoidx_report* r, const char* baseline, size_t* deviations,
                                                  size_t* unlisted, char** description);
TOPOIDX_API void topoidx_report_free(topoidx_report* r);

#ifdef __cplusplus
}
#endif

#endif
