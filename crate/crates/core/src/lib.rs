//! From regular expressions to DFAs, with the books kept open.
//!
//! The pipeline: parse a regular expression and measure its alphabetic
//! width n; build an NFA with n+1 states in which every state is entered
//! by only one symbol ("remembers the last symbol"); determinize it by
//! breadth-first subset construction with exact accounting of the
//! reachable subsets; minimize. Two closed-form bounds on the reachable
//! subsets — one from the per-symbol partition, one routed through
//! Landau's function for a dominating symbol — are evaluated in exact
//! integer arithmetic and checked against the measured counts. A family
//! of witness regexes with coprime cycle lengths realizes the matching
//! lower bound, certified at desk scale by exact minimization.
//!
//! Everything is deterministic: state numbering is fixed by traversal and
//! discovery order, and seeded sweeps reproduce byte-identical CSV.

pub mod alphabet;
pub mod corpus;
pub mod dfa;
pub mod dot;
pub mod format;
pub mod nfa;
pub mod regex;
pub mod report;
pub mod unary;
pub mod witness;
pub mod words;

pub use alphabet::{Alphabet, AlphabetError, SymbolId, Word};
pub use dfa::{
    determinize, determinize_with_cap, equivalent, first_method_bound, minimize,
    second_method_bound, BoundError, DeterminizeError, Dfa, Equivalence, SubsetStats,
    DEFAULT_SUBSET_CAP,
};
pub use nfa::{build_nfa, languages_equal_up_to, symbol_partition, Nfa, StateId, SymbolPartition};
pub use regex::{matches, parse, ParseError, RegexAst, RegexNode};
pub use report::{analyze, Analysis, BoundReport};
pub use unary::{landau, unary_orbit, verify_unary_lemma, LandauTable, UnaryError, UnaryProfile};
pub use witness::{
    certify, select_primes, shift_word, witness_nfa, witness_regex, witness_regex_text,
    CertificationRecord, CertifyOptions, WitnessError, WitnessSpec,
};
pub use words::enumerate_words;
