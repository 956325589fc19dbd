#ifndef TOKENSPECTRA_H
#define TOKENSPECTRA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum {
  /**
   * Success.
   */
  TS_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TS_STATUS_NULL_POINTER = 1,
  /**
   * Arguments were rejected (bad family spec, out-of-range index, ...).
   */
  TS_STATUS_INVALID_ARGUMENT = 2,
  /**
   * An eigensolve failed to converge or a numeric contract broke.
   */
  TS_STATUS_NUMERICAL_FAILURE = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  TS_STATUS_INVALID_UTF8 = 4,
} TsStatus;

/**
 * Opaque undirected simple graph.
 */
typedef struct TsGraph TsGraph;

/**
 * Opaque ascending eigenvalue multiset.
 */
typedef struct TsSpectrum TsSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Short static description of a status code.
 */
const char *ts_status_name(TsStatus status);

/**
 * Build a named graph family (e.g. "cycle:9", "petersen", "odd:4").
 *
 * # Safety
 * `spec` must point to a NUL-terminated string; `out` must be a valid
 * pointer. On `Ok`, `*out` owns a graph to be freed with [`ts_graph_free`].
 */
TsStatus ts_graph_family(const char *spec, TsGraph **out);

/**
 * The k-token graph of `g`.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
TsStatus ts_graph_token(const TsGraph *g, uint32_t k, TsGraph **out);

/**
 * The graph with vertex `i` removed (indices compacted).
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
TsStatus ts_graph_delete_vertex(const TsGraph *g, uint32_t i, TsGraph **out);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
uint64_t ts_graph_vertex_count(const TsGraph *g);

/**
 * Number of edges; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live graph handle.
 */
uint64_t ts_graph_edge_count(const TsGraph *g);

/**
 * Algebraic connectivity (second-smallest Laplacian eigenvalue).
 *
 * # Safety
 * `g` must be a live graph handle and `out` a valid pointer.
 */
TsStatus ts_graph_alpha(const TsGraph *g, double *out);

/**
 * Full Laplacian spectrum of `g` via the dense symmetric eigensolver.
 *
 * # Safety
 * `g` must be a live graph handle; on `Ok`, `*out` owns a spectrum to be
 * freed with [`ts_spectrum_free`].
 */
TsStatus ts_graph_spectrum(const TsGraph *g, TsSpectrum **out);

/**
 * Spectrum of the 2-token graph of the n-cycle assembled from the n small
 * tridiagonal matrices (lift route for odd n, over-lift for even n).
 *
 * # Safety
 * `out` must be a valid pointer; on `Ok` it owns a spectrum handle.
 */
TsStatus ts_f2_cycle_spectrum(uint32_t n, TsSpectrum **out);

/**
 * Number of eigenvalues; 0 for a null handle.
 *
 * # Safety
 * `s` must be null or a live spectrum handle.
 */
uint64_t ts_spectrum_len(const TsSpectrum *s);

/**
 * Copy up to `len` ascending eigenvalues into `buf`.
 *
 * # Safety
 * `s` must be a live spectrum handle and `buf` must point to at least `len`
 * writable doubles.
 */
TsStatus ts_spectrum_values(const TsSpectrum *s, double *buf, uint64_t len);

/**
 * Second-smallest eigenvalue.
 *
 * # Safety
 * `s` must be a live spectrum handle holding at least two values and `out`
 * a valid pointer.
 */
TsStatus ts_spectrum_fiedler(const TsSpectrum *s, double *out);

/**
 * Release a graph handle; null is a no-op.
 *
 * # Safety
 * `g` must be null or a pointer returned by a `ts_graph_*` constructor,
 * not yet freed.
 */
void ts_graph_free(TsGraph *g);

/**
 * Release a spectrum handle; null is a no-op.
 *
 * # Safety
 * `s` must be null or a pointer returned by a spectrum constructor, not
 * yet freed.
 */
void ts_spectrum_free(TsSpectrum *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TOKENSPECTRA_H */
