/* Minimal C caller for liblastsym_ffi.
 *
 * Build (from the workspace root, after `cargo build -p lastsym-ffi`):
 *   gcc -std=c11 -I crates/ffi/include crates/ffi/examples/demo.c \
 *       -L target/debug -llastsym_ffi -lpthread -ldl -lm -o demo
 *   LD_LIBRARY_PATH=target/debug ./demo
 */

#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "lastsym.h"

int main(void) {
    /* β₅ = (a((b|ε)a){3}a)*, width 2·5−2 = 8 */
    LsRegex *regex = NULL;
    assert(ls_regex_parse("(a((b|\xce\xb5)a){3}a)*", "ab", &regex) == LS_OK);
    printf("width: %llu\n", (unsigned long long)ls_regex_width(regex));

    LsNfa *nfa = NULL;
    assert(ls_regex_to_nfa(regex, &nfa) == LS_OK);
    printf("nfa states: %llu remembers last symbol: %d\n",
           (unsigned long long)ls_nfa_state_count(nfa),
           ls_nfa_remembers_last_symbol(nfa));

    LsDfa *dfa = NULL;
    assert(ls_nfa_determinize(nfa, 1 << 20, &dfa) == LS_OK);
    LsDfa *minimal = NULL;
    assert(ls_dfa_minimize(dfa, &minimal) == LS_OK);
    printf("reachable subsets: %llu, minimal dfa: %llu\n",
           (unsigned long long)ls_dfa_state_count(dfa),
           (unsigned long long)ls_dfa_state_count(minimal));

    bool ok = false;
    assert(ls_regex_matches(regex, "aaaaa", &ok) == LS_OK && ok);
    assert(ls_regex_matches(regex, "", &ok) == LS_OK && ok);
    assert(ls_regex_matches(regex, "aaa", &ok) == LS_OK && !ok);

    uint64_t cycles[2] = {3, 5};
    LsWitness *witness = NULL;
    assert(ls_witness_from_cycles(cycles, 2, &witness) == LS_OK);
    char *bound = ls_witness_lower_bound(witness);
    printf("witness (3,5) lower bound: %s\n", bound);
    assert(strcmp(bound, "180") == 0);
    ls_string_free(bound);

    uint64_t g = 0;
    assert(ls_landau(7, &g) == LS_OK && g == 12);
    printf("g(7) = %llu\n", (unsigned long long)g);

    ls_witness_free(witness);
    ls_dfa_free(minimal);
    ls_dfa_free(dfa);
    ls_nfa_free(nfa);
    ls_regex_free(regex);
    puts("demo: OK");
    return 0;
}
