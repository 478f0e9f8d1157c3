/*
 * motrace — Grothendieck-Witt-valued Euler characteristics, double-coset
 * transfer formulas, and the stable-splitting certificate, behind a C API.
 *
 * Conventions:
 *   - every function returns an mtr_status; MTR_OK (0) means success
 *   - output objects are returned through out-parameters and must be
 *     released with the matching *_free function
 *   - strings returned through char** are NUL-terminated, owned by the
 *     caller, and released with mtr_string_free
 *   - on failure, mtr_last_error() describes the problem (thread-local)
 */

#ifndef MOTRACE_H
#define MOTRACE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mtr_status {
  MTR_OK = 0,
  MTR_ERR_PARSE = 1,
  MTR_ERR_FIELD_MISMATCH = 2,
  MTR_ERR_ZERO_REPRESENTATIVE = 3,
  MTR_ERR_INPUT_TOO_LARGE = 4,
  MTR_ERR_NOT_PRIME = 5,
  MTR_ERR_SQRT_MINUS_ONE_REQUIRED = 6,
  MTR_ERR_INVALID_EXPR = 7,
  MTR_ERR_ENUMERATION_CAP = 8,
  MTR_ERR_DEGREE_CAP = 9,
  MTR_ERR_CAP_EXCEEDED = 10,
  MTR_ERR_DIMENSION_MISMATCH = 11,
  MTR_ERR_ILL_TYPED_TERM = 12,
  MTR_ERR_INVALID_ARGUMENT = 13,
  MTR_ERR_INTERNAL = 14
} mtr_status;

typedef struct mtr_field mtr_field;
typedef struct mtr_gw mtr_gw;
typedef struct mtr_space mtr_space;

const char* mtr_status_name(mtr_status st);
/* Message for the most recent failure on this thread ("" if none). */
const char* mtr_last_error(void);

void mtr_string_free(char* s);

/* ---- base fields: "Qbar", "R", "Q", "F<q>" ---- */
mtr_status mtr_field_create(const char* name, mtr_field** out);
void mtr_field_free(mtr_field* f);
const char* mtr_field_name(const mtr_field* f);
int mtr_field_has_sqrt_minus_one(const mtr_field* f);
long long mtr_field_characteristic(const mtr_field* f);

/* ---- GW(k) elements ---- */
mtr_status mtr_gw_parse(const mtr_field* f, const char* text, mtr_gw** out);
mtr_status mtr_gw_unit_form(const mtr_field* f, long long num, long long den, mtr_gw** out);
mtr_status mtr_gw_render(const mtr_gw* x, char** out);
mtr_status mtr_gw_add(const mtr_gw* x, const mtr_gw* y, mtr_gw** out);
mtr_status mtr_gw_sub(const mtr_gw* x, const mtr_gw* y, mtr_gw** out);
mtr_status mtr_gw_mul(const mtr_gw* x, const mtr_gw* y, mtr_gw** out);
mtr_status mtr_gw_neg(const mtr_gw* x, mtr_gw** out);
mtr_status mtr_gw_scale(long long n, const mtr_gw* x, mtr_gw** out);
mtr_status mtr_gw_is_equal(const mtr_gw* x, const mtr_gw* y, int* out);
/* {"rank":..,"discriminant":..,"signature":..|null,"hasse":{"2":1,...}|null} */
mtr_status mtr_gw_invariants_json(const mtr_gw* x, char** out);
void mtr_gw_free(mtr_gw* x);

/* place: "real" or the decimal digits of a prime; out is +1 or -1 */
mtr_status mtr_hilbert_symbol(long long a_num, long long a_den, long long b_num, long long b_den,
                              const char* place, int* out);

/* ---- space expressions ---- */
mtr_status mtr_space_parse(const char* text, mtr_space** out);
mtr_status mtr_space_render(const mtr_space* s, char** out);
mtr_status mtr_space_expand(const mtr_space* s, mtr_space** out);
/* p_inverted is set to 1 when the field has positive characteristic */
mtr_status mtr_euler_char(const mtr_space* s, const mtr_field* f, mtr_gw** out, int* p_inverted);
void mtr_space_free(mtr_space* s);

/* ---- Weyl group data (types like "A2", "B3", "A1xA1") ---- */
mtr_status mtr_weyl_order(const char* cartan, unsigned long long* out);
/* "{0:1, 1:2, 2:2, 3:1}" */
mtr_status mtr_weyl_length_spectrum(const char* cartan, char** out);
/* parabolic: comma-separated 1-based indices, "" or NULL for the empty set;
 * lines of "<word> : <length>" */
mtr_status mtr_weyl_coset_reps(const char* cartan, const char* parabolic, char** out,
                               unsigned long long* count);

/* ---- double-coset transfer formulas ---- */
/* kind: "torus" or "maxrank"; parabolic as above (ignored for "torus") */
mtr_status mtr_dcoset_formula(const char* kind, const char* cartan, const char* parabolic,
                              char** out, unsigned long long* term_count);

/* ---- W-invariants via the averaging projector ---- */
mtr_status mtr_invariants_check(const char* cartan, int degree, char** out_text, char** out_json);

/* ---- stable splitting combinatorics ---- */
/* "[(a,b), ...]" */
mtr_status mtr_gl_double_cosets(int i, int j, int r, int s, char** out);
mtr_status mtr_smp_verify(int n, char** out_certificate, int* triangular, int* diagonal);

#ifdef __cplusplus
}
#endif

#endif /* MOTRACE_H */
