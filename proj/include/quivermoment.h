/*
 * quivermoment - moment maps for complex representations of finite quivers.
 *
 * C interface of the shared library. Handles are opaque; every function
 * returns a qmm_status, with QMM_OK == 0 on success. On failure,
 * qmm_last_error() returns a message for the calling thread. Strings handed
 * out through char** are malloc'd; release them with qmm_string_free().
 */
#ifndef QUIVERMOMENT_H
#define QUIVERMOMENT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmm_status {
  QMM_OK = 0,
  QMM_ERR_IO = 1,       /* file not readable */
  QMM_ERR_PARSE = 2,    /* malformed input text (message carries line:col) */
  QMM_ERR_INVALID = 3,  /* semantic validation failed */
  QMM_ERR_SHAPE = 4,    /* matrix shape disagrees with the dimension vector */
  QMM_ERR_DOMAIN = 5,   /* precondition breach (cyclic quiver, singular g, ...) */
  QMM_ERR_ARG = 6,      /* null pointer / out-of-range argument */
  QMM_ERR_INTERNAL = 7
} qmm_status;

/* A parsed problem file: quiver, dimension vector, weights, options. */
typedef struct qmm_problem qmm_problem;

/* Result of a properness analysis. */
typedef struct qmm_report qmm_report;

const char* qmm_version(void);

/* Message for the most recent failure on this thread. Never NULL. */
const char* qmm_last_error(void);

void qmm_string_free(char* s);

/* ---- problems ---------------------------------------------------------- */

qmm_status qmm_problem_from_file(const char* path, qmm_problem** out);
qmm_status qmm_problem_from_string(const char* text, qmm_problem** out);
void qmm_problem_free(qmm_problem* p);

/* Canonical serialization of the problem (parse -> serialize is stable). */
qmm_status qmm_problem_canonical_text(const qmm_problem* p, char** out);

/* Returns 1 and fills *out when the file carried the option, else 0. */
int qmm_problem_seed(const qmm_problem* p, unsigned long long* out);
int qmm_problem_tolerance(const qmm_problem* p, double* out);

/* One violation per line in *out_text (empty string when valid). */
qmm_status qmm_problem_violations(const qmm_problem* p, char** out_text,
                                  int* out_count);

/* ---- properness analysis ----------------------------------------------- */

qmm_status qmm_analyze(const qmm_problem* p, qmm_report** out);
void qmm_report_free(qmm_report* r);

/* 1 = proper, 0 = not proper. */
int qmm_report_is_proper(const qmm_report* r);

qmm_status qmm_report_text(const qmm_report* r, char** out);
qmm_status qmm_report_json(const qmm_report* r, char** out);

/* Optional sampling probe appended to the rendering. */
typedef struct qmm_probe_options {
  const double* radii;
  int radii_count;
  int samples_per_radius;
  unsigned long long seed;
} qmm_probe_options;

qmm_status qmm_report_text_with_probe(const qmm_report* r,
                                      const qmm_probe_options* probe,
                                      char** out);
qmm_status qmm_report_json_with_probe(const qmm_report* r,
                                      const qmm_probe_options* probe,
                                      char** out);

/* Certificate access (proper verdicts). peel_count is -1 when there is no
 * certificate. Arrows come back space-separated. */
int qmm_report_peel_count(const qmm_report* r);
qmm_status qmm_report_peel_step(const qmm_report* r, int index,
                                char** out_vertex, char** out_arrows,
                                double* out_c0, double* out_c1);

/* R(M) such that ||Phi(rho)|| <= M implies ||rho|| <= R(M). */
qmm_status qmm_report_radius(const qmm_report* r, double m, double* out);

/* Returns 1 and fills *out when the level sets are empty below a threshold. */
int qmm_report_infeasible_below(const qmm_report* r, double* out);

/* Witness access (not-proper verdicts). cycle_length is 0 when proper. */
int qmm_report_cycle_length(const qmm_report* r);
qmm_status qmm_report_cycle(const qmm_report* r, char** out_arrows);

/* ||rho(n)||^2 of the witness family member. */
qmm_status qmm_report_witness_norm_sq(const qmm_report* r, double n,
                                      double* out);

/* || L(rho(n)) - L(rho(0)) || (Frobenius over all vertices). */
qmm_status qmm_report_witness_moment_gap(const qmm_report* r, double n,
                                         double* out);

/* ---- randomized identity checks ---------------------------------------- */

/* Runs the seeded moment-map identity checks; *out_all_pass is 1 when every
 * residual is within tolerance. tol_scale <= 0 means "use the problem's
 * tolerance option, default 1". */
qmm_status qmm_verify(const qmm_problem* p, int trials, unsigned long long seed,
                      double tol_scale, char** out_text, int* out_all_pass);

/* ---- moment values ------------------------------------------------------ */

/* Evaluates L_theta(rho) for the rep-matrix file at rep_path and renders it
 * (text or JSON). */
qmm_status qmm_moment_from_file(const qmm_problem* p, const char* rep_path,
                                int as_json, char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QUIVERMOMENT_H */
