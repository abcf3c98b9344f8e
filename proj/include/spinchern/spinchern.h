/*
 * spinchern C API.
 *
 * Every function returns an sc_status. On failure a message describing the
 * error is available from sc_last_error() on the calling thread until the
 * next API call on that thread. Objects returned through out-parameters are
 * owned by the caller and released with the matching *_free function.
 *
 * Text output uses a two-call pattern: pass buf = NULL (or a too-small
 * buffer) to learn the length through *len; the call then returns
 * SC_ERR_BUFFER_TOO_SMALL. *len never counts the terminating NUL.
 */
#ifndef SPINCHERN_H
#define SPINCHERN_H

#include <stddef.h>

#if defined(SC_BUILDING_LIBRARY)
#define SC_API __attribute__((visibility("default")))
#else
#define SC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_INVALID_ARGUMENT = 1,
  SC_ERR_PARSE = 2,
  SC_ERR_DOMAIN = 3,
  SC_ERR_VIRTUAL_CHARACTER = 4,
  SC_ERR_MISMATCH = 5,
  SC_ERR_NOT_UNIT = 6,
  SC_ERR_BUFFER_TOO_SMALL = 7,
  SC_ERR_INTERNAL = 99
} sc_status;

typedef enum sc_convention {
  SC_CONVENTION_PAPER_LITERAL = 0, /* lambda_i from the m torus weights only */
  SC_CONVENTION_VECTOR_REP = 1     /* odd n: lambda_i includes the zero weight */
} sc_convention;

typedef enum sc_group {
  SC_GROUP_ALL = 0,
  SC_GROUP_F4 = 1,
  SC_GROUP_E6 = 2,
  SC_GROUP_E7 = 3,
  SC_GROUP_E8 = 4
} sc_group;

typedef enum sc_format { SC_FORMAT_JSON = 0, SC_FORMAT_MARKDOWN = 1, SC_FORMAT_PLAIN = 2 } sc_format;

typedef enum sc_image_verdict {
  SC_NOT_IN_IMAGE = 0,
  SC_INDECOMPOSABLE = 1,
  SC_DECOMPOSABLE = 2
} sc_image_verdict;

/* Opaque handles. */
typedef struct sc_character sc_character; /* Laurent polynomial character */
typedef struct sc_series sc_series;       /* truncated series in u */
typedef struct sc_report sc_report;       /* command report */

SC_API const char* sc_version(void);
SC_API const char* sc_last_error(void);
SC_API const char* sc_status_string(sc_status status);

/* Characters. `expr` uses the symbol grammar: lambda<i>, delta+, delta-,
 * delta, triv:<k>, integers, `k*symbol`, joined by + and -. */
SC_API sc_status sc_character_on_torus(int n, const char* expr, sc_convention convention, sc_character** out);
SC_API sc_status sc_character_on_circle(int n, const char* expr, sc_convention convention, sc_character** out);
/* Keeps variable `keep_index` (0-based) and sets the others to 1. */
SC_API sc_status sc_character_substitute_ones(const sc_character* ch, int keep_index, sc_character** out);
SC_API sc_status sc_character_variable_count(const sc_character* ch, int* out);
/* Decimal string of the virtual dimension. */
SC_API sc_status sc_character_dimension(const sc_character* ch, char* buf, size_t cap, size_t* len);
SC_API sc_status sc_character_is_palindromic(const sc_character* ch, int* out);
SC_API sc_status sc_character_to_string(const sc_character* ch, char* buf, size_t cap, size_t* len);
SC_API void sc_character_free(sc_character* ch);

/* Characteristic classes of a one-variable character. total_chern accepts
 * virtual characters; total_stiefel_whitney needs a genuine palindromic one. */
SC_API sc_status sc_total_chern(const sc_character* ch, int cutoff, sc_series** out);
SC_API sc_status sc_total_stiefel_whitney(const sc_character* ch, int cutoff, sc_series** out);
SC_API sc_status sc_series_mod2(const sc_series* s, sc_series** out);
SC_API sc_status sc_series_cutoff(const sc_series* s, int* out);
SC_API sc_status sc_series_is_mod2(const sc_series* s, int* out);
/* Decimal string of the u^k coefficient. */
SC_API sc_status sc_series_coefficient(const sc_series* s, int k, char* buf, size_t cap, size_t* len);
SC_API sc_status sc_series_to_string(const sc_series* s, char* buf, size_t cap, size_t* len);
SC_API void sc_series_free(sc_series* s);

SC_API sc_status sc_quillen_h(int n, int* h);
SC_API sc_status sc_indecomposable_in_image(long long u_power, int h, sc_image_verdict* out);

/* Commands. A cutoff of 0 selects the default. */
SC_API sc_status sc_run_prop2(int m_lo, int m_hi, sc_report** out);
SC_API sc_status sc_run_theorem1(sc_group group, sc_convention convention, int cutoff, sc_report** out);
SC_API sc_status sc_run_quillen(int n_lo, int n_hi, sc_report** out);
SC_API sc_status sc_run_restrict(int n, const char* expr, sc_convention convention, int cutoff, sc_report** out);
/* 1 if every check in the report passed, 0 otherwise. */
SC_API sc_status sc_report_passed(const sc_report* r, int* out);
SC_API sc_status sc_report_render(const sc_report* r, sc_format format, char* buf, size_t cap, size_t* len);
SC_API void sc_report_free(sc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* SPINCHERN_H */
