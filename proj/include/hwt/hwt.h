/* Copyright (c) 2026 hwt developers
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the hwt library: exact weight sets, characters and convex
 * hulls of highest weight modules over complex semisimple Lie algebras.
 *
 * Conventions:
 *   - Root systems are named "A2", "B3", "A1xA1", ... (case-insensitive).
 *   - Weights are comma-separated exact rationals in the fundamental-weight
 *     basis, e.g. "1,-3/2".
 *   - Module classes: "verma" | "simple" | "pverma:1,3" (1-based indices,
 *     must lie in J_lambda).
 *   - Every report function fills *out_json with a malloc'd UTF-8 JSON
 *     document (free with hwt_string_free). Reports embed the tool version,
 *     schema version, the canonical job spec, and the truncation depth.
 *   - On any status other than HWT_OK, hwt_last_error() describes the
 *     problem. Some functions (see below) still fill *out_json for
 *     diagnostic statuses.
 */
#ifndef HWT_H
#define HWT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hwt_status {
  HWT_OK = 0,
  HWT_ERR_PARSE = 1,          /* bad spec, weight, class, or argument */
  HWT_ERR_DISAGREE = 2,       /* formula disagreement / verification failure */
  HWT_ERR_CAP = 3,            /* enumeration, dimension or depth cap exceeded */
  HWT_ERR_WCF_HYPOTHESIS = 4, /* S_lambda != W_{J_lambda} */
  HWT_ERR_MINMAX_HYPOTHESIS = 5,
  HWT_ERR_INTERNAL = 6 /* an internal invariant failed; report a bug */
} hwt_status;

typedef struct hwt_rootsys hwt_rootsys;
typedef struct hwt_module hwt_module;

const char* hwt_version(void);
/* Thread-local message for the most recent failing call on this thread. */
const char* hwt_last_error(void);
void hwt_string_free(char* s);

/* ---- root systems ---- */
hwt_status hwt_rootsys_create(const char* type_spec, hwt_rootsys** out);
void hwt_rootsys_free(hwt_rootsys* rs);
int hwt_rootsys_rank(const hwt_rootsys* rs);
hwt_status hwt_rootsys_json(const hwt_rootsys* rs, char** out_json);
/* Cap overrides (apply to subsequent calls using this handle). */
void hwt_rootsys_set_enum_cap(hwt_rootsys* rs, long cap);
void hwt_rootsys_set_oracle_depth(hwt_rootsys* rs, int depth_cap);

/* ---- module descriptors ---- */
hwt_status hwt_module_create(const hwt_rootsys* rs, const char* lambda_csv,
                             const char* class_spec, hwt_module** out);
void hwt_module_free(hwt_module* m);

/* ---- reports ----
 * hwt_weights_json: formulas = "A" | "B" | "C" | "all". With "all" the
 * report carries the agreement verdict; disagreement returns
 * HWT_ERR_DISAGREE and still fills *out_json.
 */
hwt_status hwt_weights_json(const hwt_module* m, int depth, const char* formulas,
                            char** out_json);
hwt_status hwt_hull_json(const hwt_module* m, char** out_json);
/* OFF dump of the hull clipped to |x_i - lambda_i| <= box_radius (rank 2,3). */
hwt_status hwt_hull_off(const hwt_module* m, const char* box_radius, char** out_off);
hwt_status hwt_faces_json(const hwt_module* m, char** out_json);
/* Simple-module character via the extended Weyl character formula.
 * check_oracle != 0 compares every coefficient against Shapovalov-Gram
 * ranks (within the oracle depth cap). Hypothesis failure returns
 * HWT_ERR_WCF_HYPOTHESIS with the S_lambda diagnostic in hwt_last_error(). */
hwt_status hwt_character_json(const hwt_rootsys* rs, const char* lambda_csv, int depth,
                              int check_oracle, char** out_json);
hwt_status hwt_oracle_support_json(const hwt_rootsys* rs, const char* lambda_csv, int depth,
                                   char** out_json);
/* Gram matrix audit dump for one offset ("k1,k2,..." root coordinates). */
hwt_status hwt_gram_json(const hwt_rootsys* rs, const char* lambda_csv,
                         const char* offset_csv, char** out_json);
/* Seeded property sweep. A failing property returns HWT_ERR_DISAGREE and
 * still fills *out_json (reproducers included). */
hwt_status hwt_verify_json(const hwt_rootsys* rs, int samples, unsigned long long seed,
                           int depth, char** out_json);
/* Hull min/max equivalences. jprime_csv: "1,3", "" for the empty set, or
 * NULL to sweep all admissible J'. */
hwt_status hwt_minmax_json(const hwt_rootsys* rs, const char* lambda_csv,
                           const char* jprime_csv, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* HWT_H */
