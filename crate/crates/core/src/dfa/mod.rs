//! Deterministic automata over canonical subsets of an NFA's states.

mod bounds;
mod determinize;
mod minimize;

pub use bounds::{first_method_bound, second_method_bound, BoundError};
pub use determinize::{determinize, determinize_with_cap, DeterminizeError, SubsetStats, DEFAULT_SUBSET_CAP};
pub use minimize::{equivalent, minimize, Equivalence};

use crate::alphabet::{Alphabet, SymbolId};
use crate::nfa::StateId;

/// A complete DFA: the transition function is total. When produced by the
/// subset construction, each state carries the originating NFA subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: StateId,
    // transitions[state][symbol] -> state
    transitions: Vec<Vec<StateId>>,
    accepting: Vec<bool>,
    subsets: Option<Vec<Vec<StateId>>>,
    // names of the source NFA's states, for back-map and DOT output
    source_names: Option<Vec<String>>,
}

impl Dfa {
    /// Assemble a DFA from parts, checking totality and id ranges.
    pub fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<StateId>>,
        initial: StateId,
        accepting: Vec<bool>,
    ) -> Dfa {
        let state_count = transitions.len();
        assert!(state_count > 0, "a DFA needs at least one state");
        assert!(initial < state_count);
        assert_eq!(accepting.len(), state_count);
        for row in &transitions {
            assert_eq!(row.len(), alphabet.len(), "transition function must be total");
            for &to in row {
                assert!(to < state_count);
            }
        }
        Dfa { alphabet, state_count, initial, transitions, accepting, subsets: None, source_names: None }
    }

    pub(crate) fn with_subsets(mut self, subsets: Vec<Vec<StateId>>) -> Dfa {
        assert_eq!(subsets.len(), self.state_count);
        self.subsets = Some(subsets);
        self
    }

    pub(crate) fn with_source_names(mut self, names: Option<Vec<String>>) -> Dfa {
        self.source_names = names;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn next_state(&self, from: StateId, symbol: SymbolId) -> StateId {
        self.transitions[from][symbol]
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting[q]
    }

    pub fn accepting_states(&self) -> Vec<StateId> {
        (0..self.state_count).filter(|&q| self.accepting[q]).collect()
    }

    /// Back-map from DFA state to the originating NFA subset, if this DFA
    /// came out of the subset construction.
    pub fn subset_of(&self, q: StateId) -> Option<&[StateId]> {
        self.subsets.as_ref().map(|s| s[q].as_slice())
    }

    pub fn has_backmap(&self) -> bool {
        self.subsets.is_some()
    }

    /// Name of a *source NFA* state, when the NFA carried names.
    pub fn source_name(&self, nfa_state: StateId) -> Option<&str> {
        self.source_names.as_ref().map(|names| names[nfa_state].as_str())
    }

    /// Render a source-NFA subset using state names when available.
    pub fn format_subset(&self, subset: &[StateId]) -> String {
        let inner: Vec<String> = subset
            .iter()
            .map(|&q| match self.source_name(q) {
                Some(name) => name.to_string(),
                None => q.to_string(),
            })
            .collect();
        format!("{{{}}}", inner.join(","))
    }

    pub fn accepts(&self, word: &[SymbolId]) -> bool {
        let mut state = self.initial;
        for &symbol in word {
            state = self.transitions[state][symbol];
        }
        self.accepting[state]
    }
}
