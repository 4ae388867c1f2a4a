//! Seeded random corpora for tests and sweeps.

use rand::Rng;

use crate::alphabet::Alphabet;
use crate::nfa::{Nfa, StateId};
use crate::regex::{parse, RegexAst};
use crate::witness::{witness_alphabet, witness_regex, WitnessSpec};

/// A random regex of exactly the requested width. The same RNG stream
/// always produces the same tree.
pub fn random_regex<R: Rng>(rng: &mut R, width: usize, alphabet: &Alphabet) -> RegexAst {
    gen_regex(rng, width, alphabet, 12)
}

fn gen_regex<R: Rng>(rng: &mut R, width: usize, alphabet: &Alphabet, depth: usize) -> RegexAst {
    if depth == 0 {
        // Out of fuel: a plain spine of symbols.
        return RegexAst::concat_all((0..width).map(|_| random_symbol(rng, alphabet)));
    }
    if width == 0 {
        return match rng.gen_range(0..8) {
            0 => RegexAst::empty_set(),
            1 => RegexAst::star(gen_regex(rng, 0, alphabet, depth - 1)),
            _ => RegexAst::epsilon(),
        };
    }
    if width == 1 {
        return match rng.gen_range(0..5) {
            0 => RegexAst::star(gen_regex(rng, 1, alphabet, depth - 1)),
            1 => {
                let (l, r) = random_split(rng, width);
                RegexAst::union(gen_regex(rng, l, alphabet, depth - 1), gen_regex(rng, r, alphabet, depth - 1))
            }
            _ => random_symbol(rng, alphabet),
        };
    }
    match rng.gen_range(0..10) {
        0 | 1 => RegexAst::star(gen_regex(rng, width, alphabet, depth - 1)),
        2..=5 => {
            let (l, r) = random_split(rng, width);
            RegexAst::concat(gen_regex(rng, l, alphabet, depth - 1), gen_regex(rng, r, alphabet, depth - 1))
        }
        _ => {
            let (l, r) = random_split(rng, width);
            RegexAst::union(gen_regex(rng, l, alphabet, depth - 1), gen_regex(rng, r, alphabet, depth - 1))
        }
    }
}

fn random_symbol<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> RegexAst {
    RegexAst::symbol(rng.gen_range(0..alphabet.len()))
}

/// Split a width into two parts; width-0 arms (ε next to content) are
/// allowed but rare so the trees keep most of their symbols spread out.
fn random_split<R: Rng>(rng: &mut R, width: usize) -> (usize, usize) {
    if width >= 2 && rng.gen_range(0..5) > 0 {
        let l = rng.gen_range(1..width);
        (l, width - l)
    } else {
        let l = rng.gen_range(0..=width);
        (l, width - l)
    }
}

/// A random one-symbol NFA with up to `max_states` states plus a start
/// subset for orbit experiments.
pub fn random_unary_nfa<R: Rng>(rng: &mut R, max_states: usize) -> (Nfa, Vec<StateId>) {
    let alphabet: Alphabet = "a".parse().expect("static alphabet");
    let m = rng.gen_range(1..=max_states);
    let mut nfa = Nfa::new(alphabet, m);
    let density = rng.gen_range(1..=3) as f64 / m as f64;
    for from in 0..m {
        for to in 0..m {
            if rng.gen_bool(density.min(1.0)) {
                nfa.add_transition(from, 0, to);
            }
        }
    }
    let mut start: Vec<StateId> = (0..m).filter(|_| rng.gen_bool(0.3)).collect();
    if start.is_empty() && rng.gen_bool(0.9) {
        start.push(rng.gen_range(0..m));
    }
    for &q in &start {
        nfa.add_initial(q);
    }
    (nfa, start)
}

/// The worked examples used across the test suites: small patterns over
/// one-, two- and three-symbol alphabets plus the witness regexes for the
/// first few cycle sets.
pub fn example_regexes() -> Vec<(String, Alphabet, RegexAst)> {
    let mut out = Vec::new();
    let cases: &[(&str, &str)] = &[
        ("a(b|ε)*", "ab"),
        ("ab|c*", "abc"),
        ("a((b|ε)a)a", "ab"),
        ("a*", "a"),
        ("a", "a"),
        ("∅", "ab"),
        ("ε", "ab"),
        ("∅*", "ab"),
        ("(a((b|ε)a){1}a)*", "ab"),
    ];
    for (text, letters) in cases {
        let alphabet: Alphabet = letters.parse().expect("static alphabet");
        let ast = parse(text, &alphabet).expect("static example");
        out.push((text.to_string(), alphabet, ast));
    }
    for cycles in [&[3u64][..], &[3, 5][..], &[3, 5, 7][..]] {
        let spec = WitnessSpec::new(cycles.to_vec()).expect("static spec");
        out.push((spec.label(), witness_alphabet(), witness_regex(&spec)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_regex_hits_requested_width() {
        let alphabet: Alphabet = "ab".parse().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let width = rng.gen_range(0..=12);
            let ast = random_regex(&mut rng, width, &alphabet);
            assert_eq!(ast.width(), width);
        }
    }

    #[test]
    fn generation_is_reproducible() {
        let alphabet: Alphabet = "ab".parse().unwrap();
        let one: Vec<RegexAst> = {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            (0..50).map(|i| random_regex(&mut rng, i % 13, &alphabet)).collect()
        };
        let two: Vec<RegexAst> = {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            (0..50).map(|i| random_regex(&mut rng, i % 13, &alphabet)).collect()
        };
        assert_eq!(one, two);
    }

    #[test]
    fn unary_nfa_respects_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let (nfa, start) = random_unary_nfa(&mut rng, 12);
            assert!(nfa.state_count() >= 1 && nfa.state_count() <= 12);
            assert!(start.iter().all(|&q| q < nfa.state_count()));
        }
    }

    #[test]
    fn examples_parse() {
        let examples = example_regexes();
        assert!(examples.len() >= 12);
        for (label, _, ast) in &examples {
            if label == "witness(3,5)" {
                assert_eq!(ast.width(), 14);
            }
        }
    }
}
