//! Graphviz DOT export for visual inspection of automata.

use crate::dfa::Dfa;
use crate::nfa::Nfa;

pub fn nfa_to_dot(nfa: &Nfa) -> String {
    let mut out = String::from("digraph nfa {\n  rankdir=LR;\n  node [shape=circle];\n");
    for &q in nfa.accepting() {
        out.push_str(&format!("  \"{}\" [shape=doublecircle];\n", label(nfa.state_name(q), q)));
    }
    for (i, &q) in nfa.initial().iter().enumerate() {
        out.push_str(&format!("  __start{i} [shape=point];\n"));
        out.push_str(&format!("  __start{i} -> \"{}\";\n", label(nfa.state_name(q), q)));
    }
    for q in 0..nfa.state_count() {
        for symbol in 0..nfa.alphabet().len() {
            for &to in nfa.transitions(q, symbol) {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    label(nfa.state_name(q), q),
                    label(nfa.state_name(to), to),
                    nfa.alphabet().symbol(symbol)
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn dfa_to_dot(dfa: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  node [shape=circle];\n");
    for q in 0..dfa.state_count() {
        if dfa.is_accepting(q) {
            out.push_str(&format!("  \"{}\" [shape=doublecircle];\n", dfa_label(dfa, q)));
        }
    }
    out.push_str("  __start [shape=point];\n");
    out.push_str(&format!("  __start -> \"{}\";\n", dfa_label(dfa, dfa.initial())));
    for q in 0..dfa.state_count() {
        for symbol in 0..dfa.alphabet().len() {
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                dfa_label(dfa, q),
                dfa_label(dfa, dfa.next_state(q, symbol)),
                dfa.alphabet().symbol(symbol)
            ));
        }
    }
    out.push_str("}\n");
    out
}

fn label(name: Option<&str>, q: usize) -> String {
    match name {
        Some(n) => n.to_string(),
        None => format!("q{q}"),
    }
}

// DFA states are labelled by their originating subsets when known.
fn dfa_label(dfa: &Dfa, q: usize) -> String {
    match dfa.subset_of(q) {
        Some(subset) => format!("{q}:{}", dfa.format_subset(subset)),
        None => format!("q{q}"),
    }
}
