/* C ABI for the lastsym library (crates/ffi).
 *
 * Conventions:
 *  - Handles are opaque; release them with the matching *_free function.
 *  - Fallible functions return an LsStatus and write results through out
 *    pointers. After a non-OK status, ls_last_error_message() returns the
 *    detail (caller frees it with ls_string_free).
 *  - Every char* returned by the library is UTF-8 and owned by the
 *    caller; release it with ls_string_free.
 *  - Words are strings of alphabet characters, e.g. "abba".
 */

#ifndef LASTSYM_H
#define LASTSYM_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum LsStatus {
  LS_OK = 0,
  LS_NULL_ARGUMENT = 1,
  LS_INPUT_ERROR = 2,
  LS_BUDGET_EXCEEDED = 3,
  LS_INTERNAL_ERROR = 4,
} LsStatus;

typedef struct LsRegex LsRegex;
typedef struct LsNfa LsNfa;
typedef struct LsDfa LsDfa;
typedef struct LsWitness LsWitness;

/* Errors and strings */
char *ls_last_error_message(void);
void ls_string_free(char *s);

/* Regular expressions.
 * Syntax: symbols from the alphabet, '|', '*', parentheses, 'ε' (alias
 * "()"), '∅' (alias '0' when 0 is not a declared symbol), and the
 * repetition sugar e{m}. */
LsStatus ls_regex_parse(const char *pattern, const char *alphabet, LsRegex **out);
void ls_regex_free(LsRegex *regex);
uint64_t ls_regex_width(const LsRegex *regex);
bool ls_regex_nullable(const LsRegex *regex);
char *ls_regex_canonical(const LsRegex *regex);
LsStatus ls_regex_matches(const LsRegex *regex, const char *word, bool *out);
LsStatus ls_regex_to_nfa(const LsRegex *regex, LsNfa **out);

/* NFAs */
void ls_nfa_free(LsNfa *nfa);
LsStatus ls_nfa_from_text(const char *text, LsNfa **out);
uint64_t ls_nfa_state_count(const LsNfa *nfa);
bool ls_nfa_remembers_last_symbol(const LsNfa *nfa);
uint64_t ls_nfa_n1(const LsNfa *nfa);
LsStatus ls_nfa_accepts(const LsNfa *nfa, const char *word, bool *out);
char *ls_nfa_to_text(const LsNfa *nfa);
char *ls_nfa_to_dot(const LsNfa *nfa);
LsStatus ls_nfa_determinize(const LsNfa *nfa, uint64_t max_subsets, LsDfa **out);

/* DFAs */
void ls_dfa_free(LsDfa *dfa);
LsStatus ls_dfa_from_text(const char *text, LsDfa **out);
uint64_t ls_dfa_state_count(const LsDfa *dfa);
LsStatus ls_dfa_accepts(const LsDfa *dfa, const char *word, bool *out);
LsStatus ls_dfa_minimize(const LsDfa *dfa, LsDfa **out);
LsStatus ls_dfa_equivalent(const LsDfa *d1, const LsDfa *d2, bool *out);
char *ls_dfa_counterexample(const LsDfa *d1, const LsDfa *d2);
char *ls_dfa_to_text(const LsDfa *dfa);
char *ls_dfa_to_dot(const LsDfa *dfa);

/* Landau's function (desk-scale cap: n <= 200) */
LsStatus ls_landau(uint64_t n, uint64_t *out);
char *ls_landau_witness(uint64_t n);

/* Lower-bound witness family */
LsStatus ls_witness_from_cycles(const uint64_t *cycles, size_t len, LsWitness **out);
LsStatus ls_witness_from_budget(uint64_t budget, LsWitness **out);
void ls_witness_free(LsWitness *witness);
uint64_t ls_witness_cycle_count(const LsWitness *witness);
uint64_t ls_witness_regex_width(const LsWitness *witness);
uint64_t ls_witness_nfa_state_count(const LsWitness *witness);
char *ls_witness_lower_bound(const LsWitness *witness);
LsStatus ls_witness_regex(const LsWitness *witness, LsRegex **out);
LsStatus ls_witness_nfa(const LsWitness *witness, LsNfa **out);
LsStatus ls_witness_shift_length(const LsWitness *witness, const uint64_t *residues,
                                 size_t len, uint64_t *out);

#ifdef __cplusplus
}
#endif

#endif /* LASTSYM_H */
