//! Automaton text format, shared by the CLI and the file interfaces.
//!
//! ```text
//! nfa <states> <symbol> <symbol> …
//! <q> <symbol> <q'>      one line per transition
//! initial <q> …
//! accepting <q> …
//! ```
//!
//! DFAs use the header word `dfa`, carry exactly one initial state and a
//! total transition function, and may be preceded by back-map comment
//! lines of the form `# <id> : {q,…}`. Lines starting with `#` are
//! ignored on input.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::nfa::{Nfa, StateId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for FormatError {}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { line, message: message.into() }
}

pub fn nfa_to_text(nfa: &Nfa) -> String {
    let mut out = String::new();
    out.push_str("nfa ");
    out.push_str(&nfa.state_count().to_string());
    for &c in nfa.alphabet().symbols() {
        out.push(' ');
        out.push(c);
    }
    out.push('\n');
    for q in 0..nfa.state_count() {
        for symbol in 0..nfa.alphabet().len() {
            for &to in nfa.transitions(q, symbol) {
                out.push_str(&format!("{q} {} {to}\n", nfa.alphabet().symbol(symbol)));
            }
        }
    }
    push_state_line(&mut out, "initial", nfa.initial());
    push_state_line(&mut out, "accepting", nfa.accepting());
    out
}

pub fn dfa_to_text(dfa: &Dfa) -> String {
    let mut out = String::new();
    out.push_str("dfa ");
    out.push_str(&dfa.state_count().to_string());
    for &c in dfa.alphabet().symbols() {
        out.push(' ');
        out.push(c);
    }
    out.push('\n');
    if dfa.has_backmap() {
        for q in 0..dfa.state_count() {
            let subset = dfa.subset_of(q).unwrap();
            out.push_str(&format!("# {q} : {}\n", dfa.format_subset(subset)));
        }
    }
    for q in 0..dfa.state_count() {
        for symbol in 0..dfa.alphabet().len() {
            let to = dfa.next_state(q, symbol);
            out.push_str(&format!("{q} {} {to}\n", dfa.alphabet().symbol(symbol)));
        }
    }
    push_state_line(&mut out, "initial", &[dfa.initial()]);
    push_state_line(&mut out, "accepting", &dfa.accepting_states());
    out
}

fn push_state_line(out: &mut String, keyword: &str, states: &[StateId]) {
    out.push_str(keyword);
    for q in states {
        out.push(' ');
        out.push_str(&q.to_string());
    }
    out.push('\n');
}

struct RawAutomaton {
    kind: String,
    state_count: usize,
    alphabet: Alphabet,
    transitions: Vec<(usize, usize, usize)>, // (from, symbol, to)
    initial: Vec<usize>,
    accepting: Vec<usize>,
}

fn parse_raw(text: &str) -> Result<RawAutomaton, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "empty automaton file"))?;
    let mut fields = header.split_whitespace();
    let kind = fields.next().unwrap_or_default().to_string();
    if kind != "nfa" && kind != "dfa" {
        return Err(err(header_line, format!("expected 'nfa' or 'dfa' header, found '{kind}'")));
    }
    let state_count: usize = fields
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| err(header_line, "missing or invalid state count"))?;
    let symbols: Vec<char> = fields
        .map(|s| {
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Ok(c),
                _ => Err(err(header_line, format!("alphabet symbol '{s}' must be one character"))),
            }
        })
        .collect::<Result<_, _>>()?;
    let alphabet = Alphabet::new(&symbols).map_err(|e| err(header_line, e.to_string()))?;

    let mut transitions = Vec::new();
    let mut initial = Vec::new();
    let mut accepting = Vec::new();
    let mut seen_initial = false;
    let mut seen_accepting = false;
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "initial" => {
                seen_initial = true;
                initial = parse_states(&fields[1..], state_count, line_no)?;
            }
            "accepting" => {
                seen_accepting = true;
                accepting = parse_states(&fields[1..], state_count, line_no)?;
            }
            _ => {
                if fields.len() != 3 {
                    return Err(err(line_no, "transition lines have the form 'q a q''"));
                }
                let from = parse_state(fields[0], state_count, line_no)?;
                let to = parse_state(fields[2], state_count, line_no)?;
                let mut chars = fields[1].chars();
                let symbol_char = match (chars.next(), chars.next()) {
                    (Some(c), None) => c,
                    _ => return Err(err(line_no, "transition symbol must be one character")),
                };
                let symbol = alphabet
                    .index_of(symbol_char)
                    .ok_or_else(|| err(line_no, format!("symbol '{symbol_char}' not in the alphabet")))?;
                transitions.push((from, symbol, to));
            }
        }
    }
    if !seen_initial {
        return Err(err(1, "missing 'initial' line"));
    }
    if !seen_accepting {
        return Err(err(1, "missing 'accepting' line"));
    }
    Ok(RawAutomaton { kind, state_count, alphabet, transitions, initial, accepting })
}

fn parse_state(field: &str, state_count: usize, line: usize) -> Result<usize, FormatError> {
    let q: usize = field
        .parse()
        .map_err(|_| err(line, format!("invalid state id '{field}'")))?;
    if q >= state_count {
        return Err(err(line, format!("state id {q} out of range (states: {state_count})")));
    }
    Ok(q)
}

fn parse_states(fields: &[&str], state_count: usize, line: usize) -> Result<Vec<usize>, FormatError> {
    fields.iter().map(|f| parse_state(f, state_count, line)).collect()
}

pub fn nfa_from_text(text: &str) -> Result<Nfa, FormatError> {
    let raw = parse_raw(text)?;
    if raw.kind != "nfa" {
        return Err(err(1, "expected an 'nfa' header"));
    }
    if raw.state_count == 0 {
        return Err(err(1, "an NFA needs at least one state"));
    }
    let mut nfa = Nfa::new(raw.alphabet, raw.state_count);
    for (from, symbol, to) in raw.transitions {
        nfa.add_transition(from, symbol, to);
    }
    for q in raw.initial {
        nfa.add_initial(q);
    }
    for q in raw.accepting {
        nfa.add_accepting(q);
    }
    Ok(nfa)
}

pub fn dfa_from_text(text: &str) -> Result<Dfa, FormatError> {
    let raw = parse_raw(text)?;
    if raw.kind != "dfa" {
        return Err(err(1, "expected a 'dfa' header"));
    }
    if raw.state_count == 0 {
        return Err(err(1, "a DFA needs at least one state"));
    }
    if raw.initial.len() != 1 {
        return Err(err(1, "a DFA needs exactly one initial state"));
    }
    let k = raw.alphabet.len();
    let mut transitions: Vec<Vec<Option<usize>>> = vec![vec![None; k]; raw.state_count];
    for (from, symbol, to) in raw.transitions {
        if transitions[from][symbol].is_some() {
            return Err(err(1, format!("duplicate transition from state {from}")));
        }
        transitions[from][symbol] = Some(to);
    }
    let mut rows = Vec::with_capacity(raw.state_count);
    for (q, row) in transitions.into_iter().enumerate() {
        let mut complete = Vec::with_capacity(k);
        for (symbol, target) in row.into_iter().enumerate() {
            match target {
                Some(t) => complete.push(t),
                None => {
                    let c = raw.alphabet.symbol(symbol);
                    return Err(err(1, format!("missing transition from state {q} on '{c}'")));
                }
            }
        }
        rows.push(complete);
    }
    let mut accepting = vec![false; raw.state_count];
    for q in raw.accepting {
        accepting[q] = true;
    }
    Ok(Dfa::new(raw.alphabet, rows, raw.initial[0], accepting))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::dfa::determinize;
    use crate::nfa::build_nfa;
    use crate::regex::parse;

    #[test]
    fn nfa_round_trip() {
        let alphabet: Alphabet = "ab".parse().unwrap();
        let nfa = build_nfa(&parse("a(b|ε)*", &alphabet).unwrap(), &alphabet);
        let text = nfa_to_text(&nfa);
        let back = nfa_from_text(&text).unwrap();
        assert_eq!(back.state_count(), nfa.state_count());
        assert_eq!(back.initial(), nfa.initial());
        assert_eq!(back.accepting(), nfa.accepting());
        for q in 0..nfa.state_count() {
            for s in 0..2 {
                assert_eq!(back.transitions(q, s), nfa.transitions(q, s));
            }
        }
    }

    #[test]
    fn dfa_round_trip_drops_backmap_comments() {
        let alphabet: Alphabet = "ab".parse().unwrap();
        let (dfa, _) = determinize(&build_nfa(&parse("(ab)*", &alphabet).unwrap(), &alphabet)).unwrap();
        let text = dfa_to_text(&dfa);
        assert!(text.contains("# 0 : {0}"));
        let back = dfa_from_text(&text).unwrap();
        assert_eq!(back.state_count(), dfa.state_count());
        assert_eq!(back.initial(), dfa.initial());
        for q in 0..dfa.state_count() {
            for s in 0..2 {
                assert_eq!(back.next_state(q, s), dfa.next_state(q, s));
            }
            assert_eq!(back.is_accepting(q), dfa.is_accepting(q));
        }
    }

    #[test]
    fn format_errors() {
        assert!(nfa_from_text("").is_err());
        assert!(nfa_from_text("dfa 1 a\ninitial 0\naccepting\n").is_err());
        assert!(nfa_from_text("nfa 1 a\n0 a 3\ninitial 0\naccepting\n").is_err());
        assert!(nfa_from_text("nfa 1 a\n0 b 0\ninitial 0\naccepting\n").is_err());
        // DFAs must be total and single-initial
        assert!(dfa_from_text("dfa 2 a\n0 a 1\ninitial 0\naccepting 1\n").is_err());
        assert!(dfa_from_text("dfa 1 a\n0 a 0\ninitial 0 0\naccepting\n").is_err());
        let ok = dfa_from_text("dfa 2 a\n0 a 1\n1 a 1\ninitial 0\naccepting 1\n").unwrap();
        assert!(ok.accepts(&[0]));
    }

    #[test]
    fn example_nfa_text_shape() {
        let alphabet: Alphabet = "a".parse().unwrap();
        let nfa = build_nfa(&parse("a", &alphabet).unwrap(), &alphabet);
        assert_eq!(nfa_to_text(&nfa), "nfa 2 a\n0 a 1\ninitial 0\naccepting 1\n");
    }
}
