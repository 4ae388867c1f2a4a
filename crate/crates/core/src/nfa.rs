//! NFAs and the width+1 construction from regular expressions.
//!
//! The construction produces, for a regular expression of width n, an NFA
//! with exactly n+1 states that *remembers the last symbol*: its states
//! split into disjoint sets Q_a such that every state in Q_a is entered
//! only by transitions labelled a. The built automaton additionally has a
//! unique initial state (id 0) with no incoming transitions.

use crate::alphabet::{Alphabet, SymbolId};
use crate::regex::{RegexAst, RegexNode};

pub type StateId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    initial: Vec<StateId>,
    accepting: Vec<StateId>,
    // transitions[state][symbol]: sorted, duplicate-free target lists
    transitions: Vec<Vec<Vec<StateId>>>,
    state_names: Option<Vec<String>>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, state_count: usize) -> Nfa {
        let k = alphabet.len();
        Nfa {
            alphabet,
            state_count,
            initial: Vec::new(),
            accepting: Vec::new(),
            transitions: vec![vec![Vec::new(); k]; state_count],
            state_names: None,
        }
    }

    pub fn add_transition(&mut self, from: StateId, symbol: SymbolId, to: StateId) {
        assert!(from < self.state_count && to < self.state_count, "state id out of range");
        let list = &mut self.transitions[from][symbol];
        if let Err(pos) = list.binary_search(&to) {
            list.insert(pos, to);
        }
    }

    pub fn add_initial(&mut self, q: StateId) {
        assert!(q < self.state_count, "state id out of range");
        if let Err(pos) = self.initial.binary_search(&q) {
            self.initial.insert(pos, q);
        }
    }

    pub fn add_accepting(&mut self, q: StateId) {
        assert!(q < self.state_count, "state id out of range");
        if let Err(pos) = self.accepting.binary_search(&q) {
            self.accepting.insert(pos, q);
        }
    }

    pub fn set_state_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.state_count);
        self.state_names = Some(names);
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> &[StateId] {
        &self.initial
    }

    pub fn accepting(&self) -> &[StateId] {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.binary_search(&q).is_ok()
    }

    pub fn transitions(&self, from: StateId, symbol: SymbolId) -> &[StateId] {
        &self.transitions[from][symbol]
    }

    pub fn transition_count(&self) -> usize {
        self.transitions.iter().flatten().map(Vec::len).sum()
    }

    pub fn state_name(&self, q: StateId) -> Option<&str> {
        self.state_names.as_ref().map(|names| names[q].as_str())
    }

    pub fn state_names(&self) -> Option<&[String]> {
        self.state_names.as_deref()
    }

    /// Image of a sorted subset under one symbol; result is sorted and
    /// duplicate-free.
    pub fn step_subset(&self, subset: &[StateId], symbol: SymbolId) -> Vec<StateId> {
        let mut out: Vec<StateId> = subset
            .iter()
            .flat_map(|&q| self.transitions[q][symbol].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn subset_accepting(&self, subset: &[StateId]) -> bool {
        subset.iter().any(|&q| self.is_accepting(q))
    }

    /// Subset simulation from the initial set.
    pub fn accepts(&self, word: &[SymbolId]) -> bool {
        let mut subset = self.initial.clone();
        for &symbol in word {
            if subset.is_empty() {
                return false;
            }
            subset = self.step_subset(&subset, symbol);
        }
        self.subset_accepting(&subset)
    }

    /// Whether any transition leads into an initial state.
    pub fn has_incoming_to_initial(&self) -> bool {
        self.transitions
            .iter()
            .flatten()
            .flatten()
            .any(|to| self.initial.binary_search(to).is_ok())
    }
}

/// The per-symbol enterable-state sets Q_a of an NFA, with the statistic
/// n₁ = max_a |Q_a| and the sizes sorted in decreasing order.
#[derive(Debug, Clone)]
pub struct SymbolPartition {
    sets: Vec<Vec<StateId>>,
    remembers: bool,
    n1: usize,
    sorted_sizes: Vec<usize>,
}

impl SymbolPartition {
    /// Q_a for one symbol, sorted.
    pub fn set(&self, symbol: SymbolId) -> &[StateId] {
        &self.sets[symbol]
    }

    /// True iff the Q_a are pairwise disjoint, i.e. the NFA remembers the
    /// last symbol it has read.
    pub fn remembers_last_symbol(&self) -> bool {
        self.remembers
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    /// |Q_a| per symbol, sorted decreasing: n₁ ≥ n₂ ≥ … ≥ n_k.
    pub fn sorted_sizes(&self) -> &[usize] {
        &self.sorted_sizes
    }
}

/// Compute the sets Q_a = ⋃_q δ(q, a) and their disjointness.
pub fn symbol_partition(nfa: &Nfa) -> SymbolPartition {
    let k = nfa.alphabet().len();
    let mut sets = Vec::with_capacity(k);
    for symbol in 0..k {
        let mut set: Vec<StateId> = (0..nfa.state_count())
            .flat_map(|q| nfa.transitions(q, symbol).iter().copied())
            .collect();
        set.sort_unstable();
        set.dedup();
        sets.push(set);
    }
    let mut entered_by = vec![0usize; nfa.state_count()];
    for set in &sets {
        for &q in set {
            entered_by[q] += 1;
        }
    }
    let remembers = entered_by.iter().all(|&count| count <= 1);
    let mut sorted_sizes: Vec<usize> = sets.iter().map(Vec::len).collect();
    sorted_sizes.sort_unstable_by(|a, b| b.cmp(a));
    let n1 = sorted_sizes.first().copied().unwrap_or(0);
    SymbolPartition { sets, remembers, n1, sorted_sizes }
}

/// Build the width+1-state NFA for a regular expression.
///
/// State ids are assigned by deterministic traversal: within every
/// subexpression the initial state is 0 and the left child is fully
/// numbered before the right child, so builds are reproducible.
pub fn build_nfa(ast: &RegexAst, alphabet: &Alphabet) -> Nfa {
    let frag = build_fragment(ast, alphabet.len());
    let mut nfa = Nfa::new(alphabet.clone(), frag.state_count);
    nfa.add_initial(0);
    for (from, row) in frag.transitions.into_iter().enumerate() {
        for (symbol, targets) in row.into_iter().enumerate() {
            for to in targets {
                nfa.add_transition(from, symbol, to);
            }
        }
    }
    for q in frag.accepting {
        nfa.add_accepting(q);
    }
    nfa
}

struct Fragment {
    state_count: usize,
    transitions: Vec<Vec<Vec<StateId>>>, // [state][symbol] -> sorted targets
    accepting: Vec<StateId>,             // sorted; initial state is always 0
}

impl Fragment {
    fn empty(states: usize, k: usize) -> Fragment {
        Fragment {
            state_count: states,
            transitions: vec![vec![Vec::new(); k]; states],
            accepting: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: StateId, symbol: SymbolId, to: StateId) {
        let list = &mut self.transitions[from][symbol];
        if let Err(pos) = list.binary_search(&to) {
            list.insert(pos, to);
        }
    }

    fn add_accepting(&mut self, q: StateId) {
        if let Err(pos) = self.accepting.binary_search(&q) {
            self.accepting.insert(pos, q);
        }
    }
}

fn build_fragment(ast: &RegexAst, k: usize) -> Fragment {
    match ast.node() {
        RegexNode::Symbol(a) => {
            let mut f = Fragment::empty(2, k);
            f.add_edge(0, *a, 1);
            f.add_accepting(1);
            f
        }
        RegexNode::EmptySet => Fragment::empty(1, k),
        RegexNode::Epsilon => {
            // Not part of the five construction cases; forced by the
            // width-0 budget: one accepting state, no transitions.
            let mut f = Fragment::empty(1, k);
            f.add_accepting(0);
            f
        }
        RegexNode::Union(l, r) => {
            let fl = build_fragment(l, k);
            let fr = build_fragment(r, k);
            // Merge the two initial states; r's state j>0 becomes
            // fl.state_count − 1 + j.
            let map = |j: StateId| if j == 0 { 0 } else { fl.state_count - 1 + j };
            let mut f = Fragment::empty(fl.state_count + fr.state_count - 1, k);
            copy_edges(&mut f, &fl.transitions, |j| j);
            copy_edges(&mut f, &fr.transitions, map);
            for &q in &fl.accepting {
                f.add_accepting(q);
            }
            for &q in &fr.accepting {
                f.add_accepting(map(q));
            }
            f
        }
        RegexNode::Concat(l, r) => {
            let fl = build_fragment(l, k);
            let fr = build_fragment(r, k);
            // r's initial state is deleted; its outgoing transitions are
            // re-issued from every accepting state of l.
            let map = |j: StateId| fl.state_count - 1 + j;
            let mut f = Fragment::empty(fl.state_count + fr.state_count - 1, k);
            copy_edges(&mut f, &fl.transitions, |j| j);
            for (from, row) in fr.transitions.iter().enumerate() {
                for (symbol, targets) in row.iter().enumerate() {
                    for &to in targets {
                        debug_assert_ne!(to, 0, "initial state must have no incoming transitions");
                        if from == 0 {
                            for &acc in &fl.accepting {
                                f.add_edge(acc, symbol, map(to));
                            }
                        } else {
                            f.add_edge(map(from), symbol, map(to));
                        }
                    }
                }
            }
            let r_nullable = fr.accepting.binary_search(&0).is_ok();
            for &q in &fr.accepting {
                if q != 0 {
                    f.add_accepting(map(q));
                }
            }
            if r_nullable {
                for &q in &fl.accepting {
                    f.add_accepting(q);
                }
            }
            f
        }
        RegexNode::Star(inner) => {
            let mut f = build_fragment(inner, k);
            // Loop back: every transition leaving the initial state is
            // replicated from every accepting state.
            let initial_row = f.transitions[0].clone();
            let accepting = f.accepting.clone();
            for (symbol, targets) in initial_row.iter().enumerate() {
                for &to in targets {
                    for &acc in &accepting {
                        f.add_edge(acc, symbol, to);
                    }
                }
            }
            f.add_accepting(0);
            f
        }
    }
}

fn copy_edges(dst: &mut Fragment, src: &[Vec<Vec<StateId>>], map: impl Fn(StateId) -> StateId) {
    for (from, row) in src.iter().enumerate() {
        for (symbol, targets) in row.iter().enumerate() {
            for &to in targets {
                dst.add_edge(map(from), symbol, map(to));
            }
        }
    }
}

/// Bounded language equality by parallel breadth-first subset simulation:
/// true iff both NFAs accept exactly the same words of length ≤ max_len.
pub fn languages_equal_up_to(a: &Nfa, b: &Nfa, max_len: usize) -> bool {
    assert_eq!(a.alphabet(), b.alphabet(), "bounded equality needs a shared alphabet");
    let k = a.alphabet().len();
    let mut visited = std::collections::HashSet::new();
    let mut frontier = vec![(a.initial().to_vec(), b.initial().to_vec())];
    visited.insert(frontier[0].clone());
    for depth in 0..=max_len {
        let mut next = Vec::new();
        for (sa, sb) in &frontier {
            if a.subset_accepting(sa) != b.subset_accepting(sb) {
                return false;
            }
            if depth == max_len {
                continue;
            }
            for symbol in 0..k {
                let pair = (a.step_subset(sa, symbol), b.step_subset(sb, symbol));
                if visited.insert(pair.clone()) {
                    next.push(pair);
                }
            }
        }
        frontier = next;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::{matches, parse};
    use crate::words::enumerate_words;

    fn ab() -> Alphabet {
        "ab".parse().unwrap()
    }

    #[test]
    fn symbol_case() {
        let alphabet: Alphabet = "a".parse().unwrap();
        let nfa = build_nfa(&RegexAst::symbol(0), &alphabet);
        assert_eq!(nfa.state_count(), 2);
        assert_eq!(nfa.transitions(0, 0), &[1]);
        assert_eq!(nfa.accepting(), &[1]);
        assert_eq!(nfa.initial(), &[0]);
        let part = symbol_partition(&nfa);
        assert_eq!(part.set(0), &[1]);
        assert_eq!(part.n1(), 1);
        assert!(part.remembers_last_symbol());
    }

    #[test]
    fn empty_set_case() {
        let nfa = build_nfa(&RegexAst::empty_set(), &ab());
        assert_eq!(nfa.state_count(), 1);
        assert_eq!(nfa.transition_count(), 0);
        assert!(nfa.accepting().is_empty());
        assert!(!nfa.accepts(&[]));
    }

    #[test]
    fn epsilon_case() {
        let nfa = build_nfa(&RegexAst::epsilon(), &ab());
        assert_eq!(nfa.state_count(), 1);
        assert_eq!(nfa.transition_count(), 0);
        assert_eq!(nfa.accepting(), &[0]);
        assert!(nfa.accepts(&[]));
        assert!(!nfa.accepts(&[0]));
    }

    #[test]
    fn state_count_is_width_plus_one() {
        let alphabet = ab();
        for text in ["a(b|ε)*", "ab|b*a", "(a((b|ε)a){3}a)*", "∅*", "a{4}b", "(ab)*(ba)*"] {
            let ast = parse(text, &alphabet).unwrap();
            let nfa = build_nfa(&ast, &alphabet);
            assert_eq!(nfa.state_count(), ast.width() + 1, "{text}");
            assert!(!nfa.has_incoming_to_initial(), "{text}");
            assert!(symbol_partition(&nfa).remembers_last_symbol(), "{text}");
        }
    }

    #[test]
    fn agrees_with_matcher_on_short_words() {
        let alphabet = ab();
        for text in ["a(b|ε)*", "(ab|ba)*", "a*b*", "(a|ε)(b|ε)", "((a|b)(a|b))*", "∅b|a"] {
            let ast = parse(text, &alphabet).unwrap();
            let nfa = build_nfa(&ast, &alphabet);
            for word in enumerate_words(&alphabet, 7) {
                assert_eq!(
                    nfa.accepts(&word),
                    matches(&ast, &word),
                    "{text} on {:?}",
                    alphabet.word_to_string(&word)
                );
            }
        }
    }

    #[test]
    fn non_remembering_nfa_detected() {
        let mut nfa = Nfa::new(ab(), 2);
        nfa.add_initial(0);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(0, 1, 1);
        let part = symbol_partition(&nfa);
        assert!(!part.remembers_last_symbol());
        assert_eq!(part.n1(), 1);
    }

    #[test]
    fn bounded_equality() {
        let alphabet = ab();
        let m = build_nfa(&parse("(ab)*", &alphabet).unwrap(), &alphabet);
        assert!(languages_equal_up_to(&m, &m, 6));
        let a = build_nfa(&parse("a", &alphabet).unwrap(), &alphabet);
        let b = build_nfa(&parse("b", &alphabet).unwrap(), &alphabet);
        assert!(!languages_equal_up_to(&a, &b, 1));
        // equal up to length 1, different at length 2
        let one = build_nfa(&parse("a|b", &alphabet).unwrap(), &alphabet);
        let two = build_nfa(&parse("a|b|aa", &alphabet).unwrap(), &alphabet);
        assert!(languages_equal_up_to(&one, &two, 1));
        assert!(!languages_equal_up_to(&one, &two, 2));
    }

    #[test]
    fn concat_with_empty_left_keeps_budget() {
        // ∅a: the a-part is unreachable but still emitted.
        let alphabet = ab();
        let ast = parse("∅a", &alphabet).unwrap();
        let nfa = build_nfa(&ast, &alphabet);
        assert_eq!(nfa.state_count(), 2);
        for word in enumerate_words(&alphabet, 4) {
            assert!(!nfa.accepts(&word));
        }
    }

    #[test]
    fn star_of_nullable_union() {
        let alphabet = ab();
        let ast = parse("(a|ε)*", &alphabet).unwrap();
        let nfa = build_nfa(&ast, &alphabet);
        assert_eq!(nfa.state_count(), 2);
        for word in enumerate_words(&alphabet, 6) {
            assert_eq!(nfa.accepts(&word), word.iter().all(|&s| s == 0));
        }
    }
}
