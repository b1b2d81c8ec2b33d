/* symcurve: exact combinatorial invariants of symmetric spatial curves.
 *
 * C interface over the C++ core: opaque handles, status codes, and reports
 * rendered as canonical JSON or plain text. All computation is exact integer
 * arithmetic; identical inputs produce byte-identical reports.
 */
#ifndef SYMCURVE_H
#define SYMCURVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SYMCURVE_API __declspec(dllexport)
#else
#define SYMCURVE_API __attribute__((visibility("default")))
#endif

typedef enum sc_status {
    SC_OK = 0,
    SC_ERROR_PARSE = 1,        /* malformed input document */
    SC_ERROR_PRECONDITION = 2, /* operation not applicable to this input */
    SC_ERROR_INTERNAL = 3,     /* violated internal assertion (balancing, divisibility) */
    SC_ERROR_ARGUMENT = 4      /* null or out-of-range argument */
} sc_status;

/* A parsed support set (dimension 1, 2 or 3) with optional metadata. */
typedef struct sc_set sc_set;

/* A finished report; owns its rendered strings. */
typedef struct sc_report sc_report;

/* Parse a JSON document: {"points": [[...], ...]} with uniform coordinate
 * arity 1..3, or {"coefficients": {"<x-exponent>": [t-exponents...]}} for
 * one-parameter families; optional "name". */
SYMCURVE_API sc_status sc_set_parse_json(const char* text, sc_set** out);

/* Build a set from a flat coordinate array: npoints * dim entries, row major. */
SYMCURVE_API sc_status sc_set_create(int dim, const int64_t* coords, size_t npoints, sc_set** out);

SYMCURVE_API void sc_set_free(sc_set* s);
SYMCURVE_API int sc_set_dim(const sc_set* s);
SYMCURVE_API size_t sc_set_size(const sc_set* s);

/* Non-NULL when the input carried duplicate points (they are deduplicated). */
SYMCURVE_API const char* sc_set_warning(const sc_set* s);

/* Classification of a 3D support set under the coordinate-swap involution. */
SYMCURVE_API sc_status sc_classify(const sc_set* s, sc_report** out);

/* Full curve report: classification, singularity count, Euler characteristics,
 * tropical fans, genus, component counts. */
SYMCURVE_API sc_status sc_invariants(const sc_set* s, sc_report** out);

/* Tropical fan; which is "total", "proper" or "diagonal". */
SYMCURVE_API sc_status sc_fan(const sc_set* s, const char* which, sc_report** out);

/* Galois verdict for a one-parameter family supported at a 2D set. */
SYMCURVE_API sc_status sc_galois(const sc_set* s, sc_report** out);

/* Lattice mixed volume of `count` sets of dimension `count` (1, 2 or 3). */
SYMCURVE_API sc_status sc_mixed_volume(const sc_set* const* sets, size_t count, int64_t* out);

/* Rendered report; the pointer stays valid until sc_report_free. */
SYMCURVE_API const char* sc_report_json(sc_report* r, int pretty);
SYMCURVE_API const char* sc_report_text(sc_report* r);
SYMCURVE_API void sc_report_free(sc_report* r);

/* Message for the most recent failure on this thread ("" if none). */
SYMCURVE_API const char* sc_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* SYMCURVE_H */
