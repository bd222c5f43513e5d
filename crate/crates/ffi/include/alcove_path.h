/* C interface to the alcove-path library.
 *
 * Handles from alc_root_system_new are opaque, immutable, and safe to share
 * across threads; release them with alc_root_system_free. Calls that produce
 * data return it as a NUL-terminated JSON string owned by the library —
 * release with alc_string_free. Every fallible call returns an AlcStatus;
 * on failure alc_last_error_message() describes the most recent error on
 * the calling thread.
 *
 * Maintained by hand; the crate's test suite checks that every exported
 * symbol is declared here.
 */

#ifndef ALCOVE_PATH_H
#define ALCOVE_PATH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum AlcStatus {
  ALC_OK = 0,
  ALC_NULL_ARGUMENT = 1,
  ALC_INVALID_ARGUMENT = 2,
  ALC_INTERNAL = 3,
} AlcStatus;

typedef struct AlcRootSystem AlcRootSystem;

/* family is one of 'A', 'B', 'C', 'D', 'G' (G needs rank 2). */
AlcStatus alc_root_system_new(char family, uint32_t rank, AlcRootSystem **out);
void alc_root_system_free(AlcRootSystem *handle);

uint32_t alc_root_system_rank(const AlcRootSystem *handle);
uint32_t alc_root_system_num_positive_roots(const AlcRootSystem *handle);
uint64_t alc_root_system_coxeter_number(const AlcRootSystem *handle);
uint32_t alc_longest_element_length(const AlcRootSystem *handle);

/* {family, rank, cartan, positive_roots} */
AlcStatus alc_root_system_json(const AlcRootSystem *handle, char **out_json);

/* weight: weight_len (= rank) fundamental coordinates.
 * {lambda, roots: [{coords, sign}], reflections: [{root, level}], reduced} */
AlcStatus alc_chain_json(const AlcRootSystem *handle, const int64_t *weight,
                         size_t weight_len, char **out_json);

/* u_word: u_len 1-based letters of a reduced word (u_len = 0: identity).
 * {lambda, u, entries: [{w, mu, coeff}]} */
AlcStatus alc_chevalley_json(const AlcRootSystem *handle, const int64_t *weight,
                             size_t weight_len, const uint32_t *u_word,
                             size_t u_len, char **out_json);

/* Demazure character of (weight, u_word); irreducible character when u_word
 * is NULL and u_len is 0. Weight must be dominant. */
AlcStatus alc_character_json(const AlcRootSystem *handle, const int64_t *weight,
                             size_t weight_len, const uint32_t *u_word,
                             size_t u_len, char **out_json);

/* dim V_lambda for dominant lambda. */
AlcStatus alc_weyl_dimension(const AlcRootSystem *handle, const int64_t *weight,
                             size_t weight_len, uint64_t *out_dim);

void alc_string_free(char *s);

/* Thread-local; valid until the next failing call on the same thread. */
const char *alc_last_error_message(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ALCOVE_PATH_H */
