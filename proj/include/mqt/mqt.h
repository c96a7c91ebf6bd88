/* Public C interface to the modal quantum theory engine.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions returning mqt_status put their output behind the trailing out
 * parameters, which are written only on MQT_OK; on failure a thread-local
 * message is available from mqt_last_error(). Strings returned through
 * char** out parameters are owned by the caller and released with
 * mqt_string_free(); strings returned as const char* are owned by the
 * handle they came from.
 *
 * Field elements cross this boundary as canonical indices in [0, order):
 * index i is the element with base-p digit tuple (c_0, ..., c_{n-1}),
 * constant term first, so 0 and 1 are the additive and multiplicative
 * identities and ascending index is the canonical element order.
 */
#ifndef MQT_H
#define MQT_H

#include <stddef.h>
#include <stdint.h>

#ifndef MQT_API
#if defined(_WIN32)
#define MQT_API
#else
#define MQT_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mqt_status {
    MQT_OK = 0,
    MQT_ERR_ARGUMENT = 1, /* invalid argument or precondition violated */
    MQT_ERR_PARSE = 2,    /* unparseable text */
    MQT_ERR_MISMATCH = 3, /* mixed fields or incompatible shapes */
    MQT_ERR_SINGULAR = 4, /* operator or basis not invertible */
    MQT_ERR_BOUND = 5,    /* enumeration bound exceeded */
    MQT_ERR_INTERNAL = 6
} mqt_status;

typedef struct mqt_field mqt_field;
typedef struct mqt_state mqt_state;
typedef struct mqt_matrix mqt_matrix;
typedef struct mqt_basis mqt_basis;
typedef struct mqt_report mqt_report;

MQT_API const char* mqt_version(void);
MQT_API const char* mqt_status_name(mqt_status status);

/* Message for the most recent failure on this thread; never NULL. */
MQT_API const char* mqt_last_error(void);

MQT_API void mqt_string_free(char* s);

/* ---- fields ---------------------------------------------------------- */

/* Accepts "GF(q)", "GF(p^n)", optionally ";poly=[c0,...,cn]". */
MQT_API mqt_status mqt_field_parse(const char* text, mqt_field** out);
/* poly may be NULL (built-in reduction polynomial) or have poly_len == n+1
 * ascending coefficients. */
MQT_API mqt_status mqt_field_create(uint32_t p, uint32_t n, const uint32_t* poly,
                                    size_t poly_len, mqt_field** out);
MQT_API void mqt_field_free(mqt_field* f);

MQT_API uint32_t mqt_field_order(const mqt_field* f);
MQT_API uint32_t mqt_field_characteristic(const mqt_field* f);
MQT_API uint32_t mqt_field_degree(const mqt_field* f);
MQT_API mqt_status mqt_field_to_string(const mqt_field* f, char** out);

MQT_API mqt_status mqt_field_add(const mqt_field* f, uint32_t a, uint32_t b, uint32_t* out);
MQT_API mqt_status mqt_field_sub(const mqt_field* f, uint32_t a, uint32_t b, uint32_t* out);
MQT_API mqt_status mqt_field_mul(const mqt_field* f, uint32_t a, uint32_t b, uint32_t* out);
MQT_API mqt_status mqt_field_neg(const mqt_field* f, uint32_t a, uint32_t* out);
MQT_API mqt_status mqt_field_inv(const mqt_field* f, uint32_t a, uint32_t* out);
MQT_API mqt_status mqt_field_pow(const mqt_field* f, uint32_t a, uint64_t e, uint32_t* out);

MQT_API mqt_status mqt_field_element_to_string(const mqt_field* f, uint32_t a, char** out);
MQT_API mqt_status mqt_field_element_parse(const mqt_field* f, const char* text, uint32_t* out);

/* ---- states, operators, measurements --------------------------------- */

/* References are registry names ("mobit:sigma", "bell:S", "mobit:Z",
 * "bell:basis", "mobit:G", ...) or inline JSON objects. */
MQT_API mqt_status mqt_state_parse(const char* ref, mqt_state** out);
MQT_API mqt_status mqt_state_create(const mqt_field* f, uint32_t dim, const uint32_t* coeffs,
                                    mqt_state** out);
MQT_API void mqt_state_free(mqt_state* s);
MQT_API uint32_t mqt_state_dim(const mqt_state* s);
MQT_API mqt_status mqt_state_coeff(const mqt_state* s, uint32_t i, uint32_t* out);
MQT_API mqt_status mqt_state_to_json(const mqt_state* s, char** out);

MQT_API mqt_status mqt_matrix_parse(const char* ref, mqt_matrix** out);
MQT_API mqt_status mqt_matrix_create(const mqt_field* f, uint32_t rows, uint32_t cols,
                                     const uint32_t* entries, mqt_matrix** out);
MQT_API void mqt_matrix_free(mqt_matrix* m);
MQT_API uint32_t mqt_matrix_rows(const mqt_matrix* m);
MQT_API uint32_t mqt_matrix_cols(const mqt_matrix* m);
MQT_API mqt_status mqt_matrix_entry(const mqt_matrix* m, uint32_t r, uint32_t c, uint32_t* out);
MQT_API mqt_status mqt_matrix_to_json(const mqt_matrix* m, char** out);

MQT_API mqt_status mqt_basis_parse(const char* ref, mqt_basis** out);
MQT_API void mqt_basis_free(mqt_basis* b);
MQT_API uint32_t mqt_basis_outcomes(const mqt_basis* b);
MQT_API const char* mqt_basis_label(const mqt_basis* b, uint32_t i);

/* Applies an invertible operator to a state (MQT_ERR_SINGULAR otherwise). */
MQT_API mqt_status mqt_evolve(const mqt_state* s, const mqt_matrix* op, mqt_state** out);

/* ---- experiments ------------------------------------------------------ */
/* Each runner yields a report: a JSON record and a text rendering of the
 * same facts, plus a verdict flag (1 = the expected result holds). */

MQT_API mqt_status mqt_run_field_info(const mqt_field* f, mqt_report** out);
MQT_API mqt_status mqt_run_census(const mqt_field* f, uint32_t d1, uint32_t d2, int projective,
                                  uint64_t bound, mqt_report** out);
MQT_API mqt_status mqt_run_enumerate(const mqt_field* f, uint32_t dim, int projective,
                                     int operators, uint64_t bound, mqt_report** out);
MQT_API mqt_status mqt_run_possible(const mqt_state* s, const mqt_basis* b, mqt_report** out);
MQT_API mqt_status mqt_run_evolve(const mqt_state* s, const mqt_matrix* op, mqt_report** out);
/* basis may be NULL for the standard basis of the discarded factor. */
MQT_API mqt_status mqt_run_reduce(const mqt_state* joint, uint32_t d1, uint32_t d2, int keep,
                                  const mqt_basis* basis, mqt_report** out);
MQT_API mqt_status mqt_run_bell(mqt_report** out);
MQT_API mqt_status mqt_run_noclone(mqt_report** out);
MQT_API mqt_status mqt_run_superdense(const char* message, mqt_report** out);
MQT_API mqt_status mqt_run_teleport(const mqt_state* s, mqt_report** out);

MQT_API void mqt_report_free(mqt_report* r);
MQT_API const char* mqt_report_json(const mqt_report* r);
MQT_API const char* mqt_report_text(const mqt_report* r);
MQT_API int mqt_report_verdict(const mqt_report* r);
/* Looks up an integer fact by JSON pointer, e.g. "/lhv/consistent". */
MQT_API mqt_status mqt_report_get_int(const mqt_report* r, const char* pointer, int64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* MQT_H */
