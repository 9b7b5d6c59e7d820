#ifndef EMN_EMN_H
#define EMN_EMN_H

/*
 * C interface to the E_(M,N) library: the curve y^2 - Mxy - Ny = x^3 attached
 * to triple partitions of M with product N.
 *
 * Objects are opaque handles created and released through this header.
 * Integers and rationals cross the boundary as decimal strings ("-126",
 * "1120/9"); reports are returned as JSON or plain text in strings the caller
 * releases with emn_string_free. Every function returns an emn_status; on
 * failure emn_last_error() describes the problem for the calling thread.
 */

#include <stddef.h>

#if defined(_WIN32)
#  define EMN_API __declspec(dllexport)
#else
#  define EMN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum emn_status {
  EMN_OK = 0,
  EMN_ERR_INVALID_ARGUMENT = 1,
  EMN_ERR_SINGULAR_CURVE = 2,
  EMN_ERR_DOMAIN = 3,
  EMN_ERR_EXCEPTIONAL_POINT = 4,
  EMN_ERR_BAD_REDUCTION = 5,
  EMN_ERR_DEGENERATE = 6,
  EMN_ERR_INCONSISTENT_TORSION = 7,
  EMN_ERR_PRECISION_EXHAUSTED = 8,
  EMN_ERR_FACTORIZATION_FAILED = 9,
  EMN_ERR_INTERNAL = 10
} emn_status;

typedef enum emn_domain { EMN_DOMAIN_POSITIVE = 0, EMN_DOMAIN_NONZERO = 1 } emn_domain;

typedef enum emn_format { EMN_FORMAT_JSON = 0, EMN_FORMAT_TEXT = 1 } emn_format;

typedef struct emn_options {
  int precision_digits; /* decimal digits for heights, default 30 */
  double tolerance;     /* regulator threshold, default 1e-6 */
  emn_domain domain;    /* partition domain, default positive */
  int allow_degenerate; /* families: keep degenerate instances */
} emn_options;

typedef struct emn_curve emn_curve;
typedef struct emn_point emn_point;

/* Called once per search hit with its JSON; return nonzero to stop. */
typedef int (*emn_search_callback)(const char* hit_json, void* user);

EMN_API const char* emn_version(void);
EMN_API const char* emn_status_name(emn_status status);
EMN_API const char* emn_last_error(void);
EMN_API void emn_string_free(char* s);
EMN_API void emn_options_init(emn_options* opts);

/* Curves */
EMN_API emn_status emn_curve_create(const char* M, const char* N, emn_curve** out);
EMN_API void emn_curve_free(emn_curve* curve);
EMN_API emn_status emn_curve_discriminant(const emn_curve* curve, char** out);

/* Points. emn_point_create fails with EMN_ERR_DOMAIN if (x, y) is off the curve. */
EMN_API emn_status emn_point_create(const emn_curve* curve, const char* x, const char* y,
                                    emn_point** out);
EMN_API emn_status emn_point_infinity(emn_point** out);
EMN_API void emn_point_free(emn_point* point);
EMN_API emn_status emn_point_string(const emn_point* point, char** out);
EMN_API emn_status emn_point_is_infinity(const emn_point* point, int* out);
EMN_API emn_status emn_point_add(const emn_curve* curve, const emn_point* p,
                                 const emn_point* q, emn_point** out);
EMN_API emn_status emn_point_negate(const emn_curve* curve, const emn_point* p,
                                    emn_point** out);
EMN_API emn_status emn_point_mul(const emn_curve* curve, const char* k, const emn_point* p,
                                 emn_point** out);
/* Order in 1..12, or 0 for a point of infinite order. */
EMN_API emn_status emn_point_order(const emn_curve* curve, const emn_point* p, int* order);
/* Canonical height as a decimal string with precision_digits significant digits. */
EMN_API emn_status emn_point_height(const emn_curve* curve, const emn_point* p,
                                    int precision_digits, char** out);
/* Local decomposition of the height: JSON or text. */
EMN_API emn_status emn_point_height_report(const emn_curve* curve, const emn_point* p,
                                           int precision_digits, emn_format format,
                                           char** out);
/* Ordered partition (-N/x, y/x, -x^2/y); EMN_ERR_EXCEPTIONAL_POINT for O, (0,0), (0,N). */
EMN_API emn_status emn_point_to_partition(const emn_curve* curve, const emn_point* p,
                                          char** json_out);
EMN_API emn_status emn_partition_to_point(const emn_curve* curve, const char* d1,
                                          const char* d2, const char* d3, emn_point** out);

/* Reports */
EMN_API emn_status emn_analyze(const emn_curve* curve, const emn_options* opts,
                               emn_format format, char** out);
EMN_API emn_status emn_partitions(const char* M, const char* N, emn_domain domain,
                                  emn_format format, char** out);
EMN_API emn_status emn_torsion(const emn_curve* curve, emn_format format, char** out);
/* kind is "two" (p q r s), "three" (p q r) or "powers" (q k). The report
 * holds the family instance under "family" and its analysis under "analysis". */
EMN_API emn_status emn_family(const char* kind, const char* const* params, size_t n_params,
                              const emn_options* opts, emn_format format, char** out);
EMN_API emn_status emn_search(unsigned long max_m, unsigned min_count,
                              emn_search_callback callback, void* user);

#ifdef __cplusplus
}
#endif

#endif /* EMN_EMN_H */
