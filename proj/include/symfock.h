#ifndef SYMFOCK_H
#define SYMFOCK_H

/*
 * C interface to libsymfock.
 *
 * Every function returns an sfk_status. On any status other than SFK_OK and
 * SFK_COUNTEREXAMPLE, sfk_last_error() describes the failure; the message is
 * thread-local and valid until the next call on the same thread.
 *
 * Strings returned through char** are owned by the caller and must be
 * released with sfk_string_free. Handles are released with their _free
 * function. Unless noted otherwise, out-parameters are written only on
 * success.
 */

#include <stddef.h>

#if defined(_WIN32)
#define SFK_API __declspec(dllexport)
#else
#define SFK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sfk_status {
  SFK_OK = 0,
  SFK_COUNTEREXAMPLE = 1, /* a checked identity failed; a witness was produced */
  SFK_INVALID_ARGUMENT = 2,
  SFK_PARSE_ERROR = 3,
  SFK_ARITHMETIC_ERROR = 4, /* division by zero or evaluation at a pole */
  SFK_INTERNAL_ERROR = 5
} sfk_status;

typedef enum sfk_basis {
  SFK_BASIS_H = 0,      /* h_lambda = prod h_{lambda_i} */
  SFK_BASIS_E = 1,      /* e_lambda = prod e_{lambda_i} */
  SFK_BASIS_Q = 2,      /* q_lambda = prod q_{lambda_i} */
  SFK_BASIS_SCHUR = 3,  /* s_lambda */
  SFK_BASIS_HL = 4,     /* Hall-Littlewood P_lambda */
  SFK_BASIS_DUAL_SCHUR = 5 /* S_lambda */
} sfk_basis;

typedef enum sfk_route {
  SFK_ROUTE_DET = 0,        /* recurrences and Jacobi-Trudi type determinants */
  SFK_ROUTE_VERTEX = 1,     /* vertex operator modes on the vacuum */
  SFK_ROUTE_GENERATING = 2  /* direct expansion of the generating function */
} sfk_route;

/* Element of Lambda[t] in the power-sum basis. */
typedef struct sfk_symfunc sfk_symfunc;

SFK_API const char* sfk_last_error(void);
SFK_API void sfk_string_free(char* s);

SFK_API const char* sfk_basis_name(sfk_basis basis);
SFK_API const char* sfk_route_name(sfk_route route);
/* Accepts the names printed by sfk_basis_name / sfk_route_name. */
SFK_API sfk_status sfk_basis_from_name(const char* name, sfk_basis* out);
SFK_API sfk_status sfk_route_from_name(const char* name, sfk_route* out);

/*
 * Parses "3,1", "[3,1]", "" or "0". Writes at most capacity parts. *length
 * receives the number of parts whenever the text parses, including the
 * SFK_INVALID_ARGUMENT returned when capacity is too small.
 */
SFK_API sfk_status sfk_partition_parse(const char* text, int* parts, size_t capacity, size_t* length);

/* SymFunc JSON: {"terms": [{"p": [2,1], "coeff": {"num": [...], "den": [...]}}]} */
SFK_API sfk_status sfk_symfunc_from_json(const char* json, sfk_symfunc** out);
SFK_API sfk_status sfk_symfunc_to_json(const sfk_symfunc* f, char** out);
SFK_API sfk_status sfk_symfunc_equal(const sfk_symfunc* a, const sfk_symfunc* b, int* out);
SFK_API void sfk_symfunc_free(sfk_symfunc* f);

/*
 * Builds a basis element. Not every route exists for every basis:
 *   h, e, q:          det
 *   schur:            det, vertex, generating
 *   hl:               vertex, generating
 *   dualschur:        det, vertex, generating
 * Other combinations give SFK_INVALID_ARGUMENT.
 */
SFK_API sfk_status sfk_basis_element(sfk_basis basis, const int* parts, size_t length, sfk_route route,
                                     sfk_symfunc** out);

/*
 * Finite-variable oracle in x_1..x_n as JSON
 * {"variables": n, "terms": [{"x": [...], "coeff": ...}]}. Available for h, e,
 * q, schur and hl; requires n >= length.
 */
SFK_API sfk_status sfk_oracle_json(sfk_basis basis, const int* parts, size_t length, size_t n, char** out);

/*
 * Checks Omega(tau (x) tau) = 0, with the Phi_t kernels when deformed != 0.
 * Returns SFK_OK for a tau-function, otherwise SFK_COUNTEREXAMPLE with the
 * nonzero Omega(tau (x) tau) as TensorState JSON in *witness (when witness is
 * not NULL): {"left_charge": 1, "right_charge": -1, "terms": [...]}.
 */
SFK_API sfk_status sfk_kp_check(const sfk_symfunc* tau, int deformed, char** witness);

/*
 * First non-tau combination of Schur functions of degree <= degree_bound.
 * SFK_COUNTEREXAMPLE is not used; *out is NULL when none exists.
 */
SFK_API sfk_status sfk_search_negative_control(int degree_bound, sfk_symfunc** out);

typedef struct sfk_verify_options {
  int max_degree;
  int max_mode;
  const int* charges; /* NULL or n_charges = 0: {-1, 0, 1} */
  size_t n_charges;
  const char* const* betas; /* rationals such as "1/2"; NULL or n_betas = 0: {0, 1, 1/2, 2} */
  size_t n_betas;
  int corrupt; /* replace Phi+ by a wrong kernel; the suite must then fail */
} sfk_verify_options;

SFK_API void sfk_verify_options_init(sfk_verify_options* options);

/* Called once per identity family with a JSON line and a readable summary. */
typedef void (*sfk_report_fn)(const char* json_line, const char* summary, void* user);

/* NULL-terminated list of suite names; static storage. */
SFK_API const char* const* sfk_suite_names(void);

/*
 * Runs a verification suite. SFK_OK if every identity holds, otherwise
 * SFK_COUNTEREXAMPLE with the first failure as JSON in *witness.
 */
SFK_API sfk_status sfk_verify(const char* suite, const sfk_verify_options* options, sfk_report_fn report, void* user,
                              char** witness);

#ifdef __cplusplus
}
#endif

#endif
