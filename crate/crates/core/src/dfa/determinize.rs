//! Subset construction with exact reachable-subset accounting.

use std::collections::HashMap;
use std::fmt;

use super::Dfa;
use crate::nfa::{symbol_partition, Nfa, StateId};

/// Default cap on explored subsets; exceeding it means the instance is
/// beyond desk scale.
pub const DEFAULT_SUBSET_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeterminizeError {
    SubsetCapExceeded { cap: usize },
}

impl fmt::Display for DeterminizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeterminizeError::SubsetCapExceeded { cap } => {
                write!(f, "reachable subsets exceed the cap of {cap}")
            }
        }
    }
}

impl std::error::Error for DeterminizeError {}

/// Exact accounting of the reachable subsets, split the way the counting
/// arguments split them: the initial subset, the non-initial nonempty
/// subsets lying inside each Q_a, and the empty subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetStats {
    /// Total reachable subsets = DFA states.
    pub total: usize,
    /// Per symbol a: count of reachable nonempty, non-initial subsets S
    /// with S ⊆ Q_a. For an NFA that remembers the last symbol these
    /// counts are disjoint.
    pub per_symbol: Vec<usize>,
    pub empty_reachable: bool,
    /// Whether some transition of the DFA leads back to the initial subset.
    pub initial_reentered: bool,
    /// |Q_0|, to disambiguate the empty-subset accounting.
    pub initial_size: usize,
}

impl SubsetStats {
    /// 1 (initial) + Σ per-symbol counts + 1 if the empty subset is
    /// reachable and is not itself the initial subset. Equals `total`
    /// whenever the source NFA remembers the last symbol.
    pub fn accounting_total(&self) -> usize {
        let empty_extra = usize::from(self.empty_reachable && self.initial_size > 0);
        1 + self.per_symbol.iter().sum::<usize>() + empty_extra
    }
}

/// Subset construction with the default cap.
pub fn determinize(nfa: &Nfa) -> Result<(Dfa, SubsetStats), DeterminizeError> {
    determinize_with_cap(nfa, DEFAULT_SUBSET_CAP)
}

/// Breadth-first subset construction from Q_0. DFA state ids are assigned
/// in discovery order (symbols taken in alphabet order), so the output is
/// fully deterministic. The empty subset, when reachable, is materialized
/// as an explicit sink state.
pub fn determinize_with_cap(nfa: &Nfa, cap: usize) -> Result<(Dfa, SubsetStats), DeterminizeError> {
    let k = nfa.alphabet().len();
    let initial: Vec<StateId> = nfa.initial().to_vec();

    let mut ids: HashMap<Vec<StateId>, usize> = HashMap::new();
    let mut subsets: Vec<Vec<StateId>> = Vec::new();
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut initial_reentered = false;

    ids.insert(initial.clone(), 0);
    subsets.push(initial.clone());

    let mut next_unprocessed = 0;
    while next_unprocessed < subsets.len() {
        let current = subsets[next_unprocessed].clone();
        let mut row = Vec::with_capacity(k);
        for symbol in 0..k {
            let image = nfa.step_subset(&current, symbol);
            let id = match ids.get(&image) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= cap {
                        return Err(DeterminizeError::SubsetCapExceeded { cap });
                    }
                    let id = subsets.len();
                    ids.insert(image.clone(), id);
                    subsets.push(image);
                    id
                }
            };
            if id == 0 {
                initial_reentered = true;
            }
            row.push(id);
        }
        transitions.push(row);
        next_unprocessed += 1;
    }

    let accepting: Vec<bool> = subsets
        .iter()
        .map(|s| s.iter().any(|&q| nfa.is_accepting(q)))
        .collect();

    let partition = symbol_partition(nfa);
    let mut member = vec![vec![false; nfa.state_count()]; k];
    for (symbol, row) in member.iter_mut().enumerate() {
        for &q in partition.set(symbol) {
            row[q] = true;
        }
    }
    let mut per_symbol = vec![0usize; k];
    let mut empty_reachable = false;
    for (id, subset) in subsets.iter().enumerate() {
        if subset.is_empty() {
            empty_reachable = true;
            continue;
        }
        if id == 0 {
            continue;
        }
        for symbol in 0..k {
            if subset.iter().all(|&q| member[symbol][q]) {
                per_symbol[symbol] += 1;
            }
        }
    }

    let stats = SubsetStats {
        total: subsets.len(),
        per_symbol,
        empty_reachable,
        initial_reentered,
        initial_size: initial.len(),
    };
    let dfa = Dfa::new(nfa.alphabet().clone(), transitions, 0, accepting)
        .with_subsets(subsets)
        .with_source_names(nfa.state_names().map(<[String]>::to_vec));
    Ok((dfa, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::nfa::build_nfa;
    use crate::regex::{parse, RegexAst};
    use crate::words::enumerate_words;

    #[test]
    fn single_symbol_over_unary_alphabet() {
        let alphabet: Alphabet = "a".parse().unwrap();
        let nfa = build_nfa(&RegexAst::symbol(0), &alphabet);
        let (dfa, stats) = determinize(&nfa).unwrap();
        // subsets {0} -> {1} -> ∅
        assert_eq!(dfa.state_count(), 3);
        assert_eq!(stats.total, 3);
        assert!(stats.empty_reachable);
        assert!(!stats.initial_reentered);
        assert_eq!(stats.per_symbol, vec![1]);
        assert_eq!(stats.accounting_total(), 3);
        assert_eq!(dfa.subset_of(0), Some(&[0][..]));
        assert_eq!(dfa.subset_of(1), Some(&[1][..]));
        assert_eq!(dfa.subset_of(2), Some(&[][..]));
        assert!(dfa.accepts(&[0]));
        assert!(!dfa.accepts(&[]));
        assert!(!dfa.accepts(&[0, 0]));
    }

    #[test]
    fn backmap_commutes_with_subset_image() {
        let alphabet: Alphabet = "ab".parse().unwrap();
        let ast = parse("(a(b|ε))*a", &alphabet).unwrap();
        let nfa = build_nfa(&ast, &alphabet);
        let (dfa, _) = determinize(&nfa).unwrap();
        for q in 0..dfa.state_count() {
            let subset = dfa.subset_of(q).unwrap().to_vec();
            for symbol in 0..alphabet.len() {
                let image = nfa.step_subset(&subset, symbol);
                let target = dfa.next_state(q, symbol);
                assert_eq!(dfa.subset_of(target).unwrap(), image.as_slice());
            }
        }
    }

    #[test]
    fn dfa_agrees_with_nfa() {
        let alphabet: Alphabet = "ab".parse().unwrap();
        for text in ["a(b|ε)*", "(ab|ba)*", "a*b*", "∅", "ε"] {
            let ast = parse(text, &alphabet).unwrap();
            let nfa = build_nfa(&ast, &alphabet);
            let (dfa, _) = determinize(&nfa).unwrap();
            for word in enumerate_words(&alphabet, 6) {
                assert_eq!(dfa.accepts(&word), nfa.accepts(&word), "{text}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let alphabet: Alphabet = "ab".parse().unwrap();
        let ast = parse("(a|b)*a(a|b)(a|b)(a|b)", &alphabet).unwrap();
        let nfa = build_nfa(&ast, &alphabet);
        let err = determinize_with_cap(&nfa, 4).unwrap_err();
        assert_eq!(err, DeterminizeError::SubsetCapExceeded { cap: 4 });
    }

    #[test]
    fn empty_initial_set() {
        let alphabet: Alphabet = "a".parse().unwrap();
        let nfa = Nfa::new(alphabet, 2); // no initial states at all
        let (dfa, stats) = determinize(&nfa).unwrap();
        assert_eq!(dfa.state_count(), 1);
        assert!(stats.empty_reachable);
        assert_eq!(stats.initial_size, 0);
        assert_eq!(stats.accounting_total(), 1);
    }
}
