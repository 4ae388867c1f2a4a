//! DFA minimization and exact language equivalence.

use std::collections::{HashMap, VecDeque};

use super::Dfa;
use crate::alphabet::Word;
use crate::nfa::StateId;

/// Minimal complete DFA for the same language: unreachable states are
/// dropped and the rest is collapsed to its coarsest forward-stable
/// partition, then renumbered by breadth-first discovery order so the
/// output is canonical.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let k = dfa.alphabet().len();

    // Restrict to reachable states.
    let reach_order = bfs_order(dfa);
    let mut reach_index = vec![usize::MAX; dfa.state_count()];
    for (new, &old) in reach_order.iter().enumerate() {
        reach_index[old] = new;
    }
    let n = reach_order.len();
    let trans: Vec<Vec<usize>> = reach_order
        .iter()
        .map(|&old| (0..k).map(|a| reach_index[dfa.next_state(old, a)]).collect())
        .collect();
    let accepting: Vec<bool> = reach_order.iter().map(|&old| dfa.is_accepting(old)).collect();

    // Iterated signature refinement to the coarsest stable partition.
    let mut class: Vec<usize> = accepting.iter().map(|&acc| usize::from(acc)).collect();
    let mut class_count = renumber_by_first_occurrence(&mut class);
    loop {
        let mut fresh: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let mut next_class = vec![0usize; n];
        for q in 0..n {
            let signature = (class[q], (0..k).map(|a| class[trans[q][a]]).collect::<Vec<_>>());
            let next = fresh.len();
            let id = *fresh.entry(signature).or_insert(next);
            next_class[q] = id;
        }
        let next_count = fresh.len();
        if next_count == class_count {
            break;
        }
        class = next_class;
        class_count = next_count;
    }

    // Quotient automaton with canonical BFS numbering of the classes.
    let mut repr: Vec<usize> = vec![usize::MAX; class_count];
    for q in 0..n {
        if repr[class[q]] == usize::MAX {
            repr[class[q]] = q;
        }
    }
    let mut order: Vec<usize> = Vec::with_capacity(class_count);
    let mut new_id = vec![usize::MAX; class_count];
    let mut queue = VecDeque::new();
    let start = class[0]; // state 0 is the (reindexed) initial state
    new_id[start] = 0;
    order.push(start);
    queue.push_back(start);
    while let Some(c) = queue.pop_front() {
        for a in 0..k {
            let target = class[trans[repr[c]][a]];
            if new_id[target] == usize::MAX {
                new_id[target] = order.len();
                order.push(target);
                queue.push_back(target);
            }
        }
    }

    let transitions: Vec<Vec<usize>> = order
        .iter()
        .map(|&c| (0..k).map(|a| new_id[class[trans[repr[c]][a]]]).collect())
        .collect();
    let acc: Vec<bool> = order.iter().map(|&c| accepting[repr[c]]).collect();
    Dfa::new(dfa.alphabet().clone(), transitions, 0, acc)
}

fn bfs_order(dfa: &Dfa) -> Vec<StateId> {
    let k = dfa.alphabet().len();
    let mut seen = vec![false; dfa.state_count()];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen[dfa.initial()] = true;
    order.push(dfa.initial());
    queue.push_back(dfa.initial());
    while let Some(q) = queue.pop_front() {
        for a in 0..k {
            let to = dfa.next_state(q, a);
            if !seen[to] {
                seen[to] = true;
                order.push(to);
                queue.push_back(to);
            }
        }
    }
    order
}

fn renumber_by_first_occurrence(class: &mut [usize]) -> usize {
    let mut map: HashMap<usize, usize> = HashMap::new();
    for c in class.iter_mut() {
        let next = map.len();
        *c = *map.entry(*c).or_insert(next);
    }
    map.len()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// A shortest word accepted by exactly one of the two automata.
    Counterexample(Word),
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent)
    }
}

/// Exact equivalence via breadth-first search of the product automaton;
/// inequivalence comes with a shortest separating word.
pub fn equivalent(d1: &Dfa, d2: &Dfa) -> Equivalence {
    assert_eq!(d1.alphabet(), d2.alphabet(), "equivalence needs a shared alphabet");
    let k = d1.alphabet().len();
    let start = (d1.initial(), d2.initial());
    // parent pair and the symbol that led here, for counterexample recovery
    type Parent = Option<((usize, usize), usize)>;
    let mut visited: HashMap<(usize, usize), Parent> = HashMap::new();
    visited.insert(start, None);
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(pair) = queue.pop_front() {
        let (s1, s2) = pair;
        if d1.is_accepting(s1) != d2.is_accepting(s2) {
            let mut word = Vec::new();
            let mut cursor = pair;
            while let Some(Some((prev, symbol))) = visited.get(&cursor) {
                word.push(*symbol);
                cursor = *prev;
            }
            word.reverse();
            return Equivalence::Counterexample(word);
        }
        for a in 0..k {
            let next = (d1.next_state(s1, a), d2.next_state(s2, a));
            if let std::collections::hash_map::Entry::Vacant(e) = visited.entry(next) {
                e.insert(Some((pair, a)));
                queue.push_back(next);
            }
        }
    }
    Equivalence::Equivalent
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::dfa::determinize;
    use crate::nfa::build_nfa;
    use crate::regex::parse;
    use crate::words::enumerate_words;

    fn ab() -> Alphabet {
        "ab".parse().unwrap()
    }

    fn dfa_for(text: &str) -> Dfa {
        let alphabet = ab();
        let ast = parse(text, &alphabet).unwrap();
        determinize(&build_nfa(&ast, &alphabet)).unwrap().0
    }

    #[test]
    fn identical_rows_collapse() {
        let alphabet: Alphabet = "a".parse().unwrap();
        // two states, both accepting, identical transitions
        let dfa = Dfa::new(alphabet, vec![vec![1], vec![1]], 0, vec![true, true]);
        assert_eq!(minimize(&dfa).state_count(), 1);
    }

    #[test]
    fn minimize_is_idempotent() {
        for text in ["a(b|ε)*", "(ab|ba)*", "a*b*a", "(a|b)*aa"] {
            let min1 = minimize(&dfa_for(text));
            let min2 = minimize(&min1);
            assert_eq!(min1, min2, "{text}");
        }
    }

    #[test]
    fn minimize_preserves_language() {
        let alphabet = ab();
        for text in ["a(b|ε)*", "(ab|ba)*", "(a|b)*ab(a|b)*", "∅*", "∅"] {
            let dfa = dfa_for(text);
            let min = minimize(&dfa);
            assert!(min.state_count() <= dfa.state_count());
            assert!(equivalent(&dfa, &min).is_equivalent(), "{text}");
            for word in enumerate_words(&alphabet, 7) {
                assert_eq!(dfa.accepts(&word), min.accepts(&word), "{text}");
            }
        }
    }

    #[test]
    fn single_letter_language_needs_three_states() {
        let alphabet: Alphabet = "a".parse().unwrap();
        let ast = parse("a", &alphabet).unwrap();
        let (dfa, _) = determinize(&build_nfa(&ast, &alphabet)).unwrap();
        // ε-class, accept-class, sink: all distinguishable
        assert_eq!(minimize(&dfa).state_count(), 3);
    }

    #[test]
    fn counterexample_is_shortest() {
        let d1 = dfa_for("a");
        let d2 = dfa_for("b");
        match equivalent(&d1, &d2) {
            Equivalence::Counterexample(w) => assert_eq!(w.len(), 1),
            Equivalence::Equivalent => panic!("distinct languages reported equivalent"),
        }
        let d3 = dfa_for("a|b|aa");
        let d4 = dfa_for("a|b");
        match equivalent(&d3, &d4) {
            Equivalence::Counterexample(w) => assert_eq!(w, vec![0, 0]),
            Equivalence::Equivalent => panic!("distinct languages reported equivalent"),
        }
    }

    #[test]
    fn equivalent_after_minimize() {
        for text in ["(ab|ba)*", "a*", "(a|b)(a|b)"] {
            let d = dfa_for(text);
            assert!(equivalent(&d, &minimize(&d)).is_equivalent());
        }
    }
}
