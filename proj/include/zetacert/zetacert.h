/* C interface to libzetacert. Every function returns a zc_status; on failure
 * zc_last_error() describes the problem for the calling thread. Objects are
 * opaque and released with the matching *_free function. */
#ifndef ZETACERT_ZETACERT_H
#define ZETACERT_ZETACERT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ZC_API __declspec(dllexport)
#else
#define ZC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zc_status {
  ZC_OK = 0,
  ZC_ERR_PARSE = 1,
  ZC_ERR_DOMAIN = 2,
  ZC_ERR_HEIGHT = 3,
  ZC_ERR_AMBIGUOUS = 4,
  ZC_ERR_IO = 5,
  ZC_ERR_ARG = 6,
  ZC_ERR_INTERNAL = 7
} zc_status;

typedef struct zc_interval {
  double lo;
  double hi;
} zc_interval;

typedef struct zc_run_options {
  unsigned workers;  /* 0 means 1 */
  int snap_to_gap;   /* move heights that hit an enclosure to the nearest gap midpoint */
} zc_run_options;

typedef struct zc_table zc_table;
typedef struct zc_certificate zc_certificate;

typedef struct zc_validation_summary {
  size_t checkpoints;
  size_t failures;
  double worst_T;
  zc_interval worst_margin;
  double worst_slack;
  double ceiling;
  int passed;
} zc_validation_summary;

typedef struct zc_tail_row {
  double T;
  /* upper endpoints; NaN where T is below the bound's threshold */
  double moment0;
  double moment1;
  double moment2;
  double recip_partial;
  double b_tail;
} zc_tail_row;

typedef struct zc_jump {
  zc_interval total;
  zc_interval diagonal;
  zc_interval antidiagonal;
  zc_interval sum_a;
  zc_interval sum_b;
  zc_interval sum_c;
} zc_jump;

/* Return nonzero to continue, zero to stop the stream (reported as ZC_ERR_IO). */
typedef int (*zc_record_sink)(void* user, uint64_t X, double I, double I_over_X2);

ZC_API const char* zc_version(void);
ZC_API const char* zc_last_error(void);
ZC_API const char* zc_status_name(zc_status s);

ZC_API zc_status zc_interval_from_decimal(const char* text, double radius, zc_interval* out);

ZC_API zc_status zc_table_load(const char* path, double radius, zc_table** out);
ZC_API void zc_table_free(zc_table* t);
ZC_API size_t zc_table_size(const zc_table* t);
ZC_API double zc_table_max_height(const zc_table* t);
ZC_API zc_status zc_table_ordinate(const zc_table* t, size_t index, zc_interval* out);
ZC_API zc_status zc_count_zeros(const zc_table* t, double T, size_t* out);
ZC_API zc_status zc_validate_counting(const zc_table* t, double A, zc_validation_summary* out);

ZC_API zc_status zc_tail_bounds(double T, zc_tail_row* out);
ZC_API zc_status zc_delta_tail(double T, double lambda, zc_interval gamma1, zc_interval* out);

/* which: "B", "c1", "c2", "c3", "S" (numerator-free B sum). */
ZC_API zc_status zc_certify_constant(const zc_table* t, const char* which, double height,
                                     const zc_run_options* opts, zc_certificate** out);
ZC_API zc_status zc_certify_delta(const zc_table* t, double T, double lambda, const zc_run_options* opts,
                                  zc_certificate** out);
ZC_API const char* zc_certificate_text(const zc_certificate* c);
/* 1 when the certificate establishes its claim (for delta: delta > 0). */
ZC_API int zc_certificate_valid(const zc_certificate* c);
ZC_API zc_status zc_certificate_number(const zc_certificate* c, const char* key, double* out);
ZC_API void zc_certificate_free(zc_certificate* c);

ZC_API zc_status zc_jump_at(const zc_table* t, size_t k, zc_jump* out);

ZC_API zc_status zc_psi(uint64_t n, double* hi, double* lo);
ZC_API zc_status zc_mean_square_I(uint64_t X, double* out);
ZC_API zc_status zc_j_prefix(uint64_t X, double* out);
ZC_API zc_status zc_stream_mean_square(uint64_t from, uint64_t to, uint64_t stride, unsigned workers,
                                       zc_record_sink sink, void* user);
ZC_API zc_status zc_explicit_residual(const zc_table* t, double x, double T, double* out);

#ifdef __cplusplus
}
#endif

#endif
