/* isotone — C API for metric projections onto convex cones, order
 * monotonicity checks, and monotone fixed-point / best-approximation
 * solvers.
 *
 * All functions return iso_status; ISO_OK means the out-parameters are
 * valid. On failure, iso_last_error() returns a thread-local description of
 * what went wrong. Handles are opaque and freed with the matching *_free.
 * Result documents carry their payload as JSON text plus a verdict flag.
 */
#ifndef ISOTONE_H
#define ISOTONE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ISOTONE_BUILD)
#define ISO_API __declspec(dllexport)
#else
#define ISO_API __declspec(dllimport)
#endif
#else
#define ISO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iso_status {
  ISO_OK = 0,
  ISO_ERROR_INVALID_ARGUMENT = 1,
  ISO_ERROR_DIMENSION_MISMATCH = 2,
  ISO_ERROR_PARSE = 3,
  ISO_ERROR_UNSUPPORTED = 4,
  ISO_ERROR_NO_CONVERGENCE = 5,
  ISO_ERROR_ASSERTION = 6,
  ISO_ERROR_INTERNAL = 7
} iso_status;

typedef enum iso_representative {
  ISO_REP_CANONICAL = 0, /* positive part / closed form */
  ISO_REP_SMALLEST = 1,
  ISO_REP_LARGEST = 2
} iso_representative;

typedef enum iso_direction { ISO_DIRECTION_DOWN = 0, ISO_DIRECTION_UP = 1 } iso_direction;

typedef struct iso_cone iso_cone;
typedef struct iso_result iso_result;

ISO_API const char* iso_version(void);
ISO_API const char* iso_status_name(iso_status status);

/* Thread-local message describing the last failure in this thread. */
ISO_API const char* iso_last_error(void);

/* ---- cones ------------------------------------------------------------ */

ISO_API iso_status iso_cone_new_circular(const double* axis, size_t dim, double half_angle,
                                         iso_cone** out);
ISO_API iso_status iso_cone_new_orthant_sup(size_t dim, iso_cone** out);
ISO_API iso_status iso_cone_new_orthant_lp(size_t dim, double p, iso_cone** out);
/* {"type":"circular","axis":[...],"half_angle":r} or
 * {"type":"orthant","dim":n,"norm":"sup"|{"p":2.0}} */
ISO_API iso_status iso_cone_parse_json(const char* json_text, iso_cone** out);
ISO_API void iso_cone_free(iso_cone* cone);
ISO_API size_t iso_cone_dim(const iso_cone* cone);

/* ---- order and membership --------------------------------------------- */

ISO_API iso_status iso_contains(const iso_cone* cone, const double* x, size_t dim, int* out);
/* x <= y in the cone order, i.e. y - x lies in the cone. */
ISO_API iso_status iso_leq(const iso_cone* cone, const double* x, const double* y, size_t dim,
                           int* out);
/* Componentwise maximum; ISO_ERROR_UNSUPPORTED for circular cones. */
ISO_API iso_status iso_lattice_join(const iso_cone* cone, const double* x, const double* y,
                                    size_t dim, double* out);

/* ---- projections ------------------------------------------------------ */

/* Writes the requested representative of the projection set to out[dim].
 * Single-valued projections (lp orthant, circular) ignore rep. */
ISO_API iso_status iso_project(const iso_cone* cone, const double* x, size_t dim,
                               iso_representative rep, double* out);
ISO_API iso_status iso_distance_to_cone(const iso_cone* cone, const double* x, size_t dim,
                                        double* out);
/* Membership of z in the set of nearest cone points of x. */
ISO_API iso_status iso_in_projection_set(const iso_cone* cone, const double* x, const double* z,
                                         size_t dim, int* out);

/* ---- result documents -------------------------------------------------- */

/* Projection report: region/profile/representatives plus a sampled
 * variational-inequality self-check for circular cones. */
ISO_API iso_status iso_project_report(const iso_cone* cone, const double* x, size_t dim,
                                      int vi_samples, uint64_t seed, iso_result** out);

/* The fixed R^3 witness pair showing the pi/4 circular cone's projection is
 * not order-increasing; the verdict is whether it reproduces. */
ISO_API iso_status iso_counterexample(iso_result** out);

ISO_API iso_status iso_isotone_check(const iso_cone* cone, iso_direction direction,
                                     int pair_count, uint64_t seed, iso_result** out);

/* Finite-poset fixed-point scan; with start labels it verifies the downward
 * fixed-point theorem on the instance. */
ISO_API iso_status iso_fixpoint(const char* poset_json, const char* map_json,
                                const char* y_star_label, const char* v_star_label,
                                iso_result** out);

ISO_API iso_status iso_fixpoint_corpus(int instance_count, uint64_t seed, iso_result** out);

/* config: {"space":"lp"|"sup", "p":2.0, "dim":n, "map":{...},
 *          "y_star":[...]|"auto", "direction":"down"|"up", "tol":1e-10,
 *          "max_iter":100000, "selection":"smallest"|"plus",
 *          "vi_samples":2000, "seed":0} */
ISO_API iso_status iso_best_approx(const char* config_json, iso_result** out);

ISO_API iso_status iso_vi_check(const iso_cone* cone, const double* x_star,
                                const double* f_value, size_t dim, int sample_count,
                                uint64_t seed, iso_result** out);

/* Positive-part optimality through the duality pairing on the lp orthant. */
ISO_API iso_status iso_plus_part_optimality(double p, const double* x, size_t dim,
                                            int sample_count, uint64_t seed, iso_result** out);

ISO_API const char* iso_result_json(const iso_result* result);
/* 1 when the document's verdict holds (counterexample reproduced, theorem
 * conclusions verified, solve certified, ...). */
ISO_API int iso_result_ok(const iso_result* result);
ISO_API void iso_result_free(iso_result* result);

#ifdef __cplusplus
}
#endif

#endif /* ISOTONE_H */
