//! The lower-bound witness family.
//!
//! For pairwise coprime cycle lengths π₁,…,π_k (each ≥ 3, π₁ = 3) the
//! regex α = (a(β_{π₁}|…|β_{π_k})b)* with β_π = (a((b|ε)a)^{π−2}a)* has
//! width 2Σπᵢ − 2k + 2, and the matching NFA — one nondeterministic fan-out
//! into k disjoint a-cycles — has one state less. Every DFA for the same
//! language needs at least Π(2^{πᵢ}−2) states, which `certify` checks by
//! exact determinization and minimization.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::alphabet::{Alphabet, Word};
use crate::dfa::{
    determinize_with_cap, equivalent, minimize, DeterminizeError, SubsetStats, DEFAULT_SUBSET_CAP,
};
use crate::nfa::Nfa;
use crate::regex::{matches, RegexAst};
use crate::words::enumerate_words;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessError {
    EmptyCycles,
    CycleTooSmall(u64),
    FirstCycleNotThree(u64),
    NotCoprime(u64, u64),
    BudgetTooSmall { budget: usize, minimum: usize },
    ResidueOutOfRange { residue: u64, modulus: u64 },
    ResidueCountMismatch { expected: usize, got: usize },
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::EmptyCycles => write!(f, "at least one cycle length is required"),
            WitnessError::CycleTooSmall(p) => write!(f, "cycle length {p} is below the minimum of 3"),
            WitnessError::FirstCycleNotThree(p) => {
                write!(f, "the first cycle length must be 3, got {p}")
            }
            WitnessError::NotCoprime(a, b) => {
                write!(f, "cycle lengths {a} and {b} are not coprime")
            }
            WitnessError::BudgetTooSmall { budget, minimum } => {
                write!(f, "size budget {budget} is below the minimum witness size {minimum}")
            }
            WitnessError::ResidueOutOfRange { residue, modulus } => {
                write!(f, "residue {residue} is not below its modulus {modulus}")
            }
            WitnessError::ResidueCountMismatch { expected, got } => {
                write!(f, "expected {expected} residues, got {got}")
            }
        }
    }
}

impl std::error::Error for WitnessError {}

/// The two-symbol alphabet {a, b} every witness lives over.
pub fn witness_alphabet() -> Alphabet {
    "ab".parse().expect("static alphabet")
}

/// Validated cycle lengths with the derived size data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSpec {
    cycles: Vec<u64>,
}

impl WitnessSpec {
    pub fn new(cycles: Vec<u64>) -> Result<WitnessSpec, WitnessError> {
        if cycles.is_empty() {
            return Err(WitnessError::EmptyCycles);
        }
        if cycles[0] != 3 {
            return Err(WitnessError::FirstCycleNotThree(cycles[0]));
        }
        for &p in &cycles {
            if p < 3 {
                return Err(WitnessError::CycleTooSmall(p));
            }
        }
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                if cycles[i].gcd(&cycles[j]) != 1 {
                    return Err(WitnessError::NotCoprime(cycles[i], cycles[j]));
                }
            }
        }
        Ok(WitnessSpec { cycles })
    }

    pub fn cycles(&self) -> &[u64] {
        &self.cycles
    }

    pub fn k(&self) -> usize {
        self.cycles.len()
    }

    /// Regex width S = 2Σπᵢ − 2k + 2.
    pub fn regex_width(&self) -> usize {
        let sum: u64 = self.cycles.iter().sum();
        (2 * sum) as usize - 2 * self.k() + 2
    }

    /// NFA state count 2Σπᵢ − 2k + 1 = S − 1.
    pub fn nfa_state_count(&self) -> usize {
        self.regex_width() - 1
    }

    /// Π(2^{πᵢ}−2) with its ½·2^{Σπᵢ} comparison value.
    pub fn lower_bound(&self) -> LowerBound {
        half_product_check(&self.cycles)
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self.cycles.iter().map(u64::to_string).collect();
        format!("witness({})", parts.join(","))
    }
}

/// Exact product Π(2^{πᵢ}−2) next to ½·2^{Σπᵢ}. For distinct πᵢ ≥ 3 the
/// product is never below the half-product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBound {
    pub product: BigUint,
    pub half_product: BigUint,
}

impl LowerBound {
    pub fn satisfies_half_product(&self) -> bool {
        self.product >= self.half_product
    }
}

pub fn half_product_check(cycles: &[u64]) -> LowerBound {
    let mut product = BigUint::from(1u32);
    let mut exponent_sum = 0u64;
    for &p in cycles {
        product *= (BigUint::from(1u32) << p) - 2u32;
        exponent_sum += p;
    }
    // ½·2^{Σπᵢ} = 2^{Σπᵢ − 1}
    let half_product = BigUint::from(1u32) << (exponent_sum - 1);
    LowerBound { product, half_product }
}

/// The witness regular expression. Width is exactly `spec.regex_width()`,
/// and the tree equals what `parse` produces for `witness_regex_text`.
pub fn witness_regex(spec: &WitnessSpec) -> RegexAst {
    let a = RegexAst::symbol(0);
    let b = RegexAst::symbol(1);
    let betas = spec.cycles.iter().map(|&p| beta(p));
    let chain = RegexAst::union_all(betas);
    RegexAst::star(RegexAst::concat(RegexAst::concat(a, chain), b))
}

fn beta(p: u64) -> RegexAst {
    let a = RegexAst::symbol(0);
    let b = RegexAst::symbol(1);
    let hop = RegexAst::concat(RegexAst::union(b, RegexAst::epsilon()), a.clone());
    let body = RegexAst::concat(RegexAst::concat(a.clone(), hop.repeat(p as usize - 2)), a);
    RegexAst::star(body)
}

/// Text form of the witness regex, with the inner repetition written via
/// the `{m}` sugar.
pub fn witness_regex_text(spec: &WitnessSpec) -> String {
    let betas: Vec<String> = spec
        .cycles
        .iter()
        .map(|&p| format!("(a((b|ε)a){{{}}}a)*", p - 2))
        .collect();
    format!("(a({})b)*", betas.join("|"))
}

/// The witness NFA: a single initial/accepting hub q̂ fanning out by `a`
/// into k disjoint a-cycles Q_i of length πᵢ, with detour states R_i for
/// the optional b inside a cycle and a b-edge from each q_{i,0} back to
/// the hub. This is the only nondeterminism (the fan-out), the automaton
/// remembers the last symbol, and it has `spec.nfa_state_count()` states.
pub fn witness_nfa(spec: &WitnessSpec) -> Nfa {
    let alphabet = witness_alphabet();
    let (a, b) = (0, 1);
    let mut nfa = Nfa::new(alphabet, spec.nfa_state_count());
    let mut names = vec![String::from("qhat")];

    // Per-cycle layout: the πᵢ cycle states, then the πᵢ−2 detour states.
    let mut q_base = Vec::with_capacity(spec.k());
    let mut r_base = Vec::with_capacity(spec.k());
    let mut next = 1;
    for (i, &p) in spec.cycles.iter().enumerate() {
        q_base.push(next);
        next += p as usize;
        r_base.push(next);
        next += p as usize - 2;
        for j in 0..p {
            names.push(format!("q{}_{j}", i + 1));
        }
        for j in 1..=(p - 2) {
            names.push(format!("r{}_{j}", i + 1));
        }
    }
    debug_assert_eq!(next, spec.nfa_state_count());

    for (i, &p) in spec.cycles.iter().enumerate() {
        let p = p as usize;
        let q = |j: usize| q_base[i] + j;
        let r = |j: usize| r_base[i] + (j - 1);
        nfa.add_transition(0, a, q(0));
        for j in 0..p {
            nfa.add_transition(q(j), a, q((j + 1) % p));
        }
        for j in 1..=(p - 2) {
            nfa.add_transition(q(j), b, r(j));
            nfa.add_transition(r(j), a, q(j + 1));
        }
        nfa.add_transition(q(0), b, 0);
    }
    nfa.add_initial(0);
    nfa.add_accepting(0);
    nfa.set_state_names(names);
    nfa
}

/// Pick cycle lengths for a size budget n: the first k−1 odd primes plus
/// the largest prime that keeps the regex width within n, with k maximal.
/// The last prime is found by exhaustive downward search.
pub fn select_primes(budget: usize) -> Result<WitnessSpec, WitnessError> {
    let minimum = 6; // witness (3)
    if budget < minimum {
        return Err(WitnessError::BudgetTooSmall { budget, minimum });
    }
    // Greatest k with 2·Σ_{i≤k} pᵢ − 2k + 2 ≤ budget over the odd primes.
    let mut odd_primes: Vec<u64> = vec![3];
    let mut k = 1;
    loop {
        let next_prime = next_prime_after(*odd_primes.last().unwrap());
        let with_next: u64 = odd_primes.iter().sum::<u64>() + next_prime;
        let size = 2 * with_next as usize - 2 * (k + 1) + 2;
        if size > budget {
            break;
        }
        odd_primes.push(next_prime);
        k += 1;
    }
    while k >= 1 {
        if k == 1 {
            // π₁ is pinned to 3, so there is nothing to maximize.
            return WitnessSpec::new(vec![3]);
        }
        let prefix_sum: u64 = odd_primes[..k - 1].iter().sum();
        // 2(prefix + p) − 2k + 2 ≤ budget
        let numerator = budget as i64 - 2 * prefix_sum as i64 + 2 * k as i64 - 2;
        if numerator >= 2 * odd_primes[k - 1] as i64 {
            let ceiling = (numerator / 2) as u64;
            let mut p = ceiling;
            while p >= odd_primes[k - 1] {
                if is_prime(p) {
                    let mut cycles = odd_primes[..k - 1].to_vec();
                    cycles.push(p);
                    return WitnessSpec::new(cycles);
                }
                p -= 1;
            }
        }
        // No prime fits at this k (tiny budgets); degrade and retry.
        k -= 1;
    }
    Err(WitnessError::BudgetTooSmall { budget, minimum })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn next_prime_after(n: u64) -> u64 {
    let mut candidate = n + 1;
    while !is_prime(candidate) {
        candidate += 1;
    }
    candidate
}

/// Minimal ℓ ≥ 0 with ℓ ≡ residues[i] (mod moduli[i]) for all i.
/// Moduli must be pairwise coprime.
pub fn crt(residues: &[u64], moduli: &[u64]) -> Result<u64, WitnessError> {
    if residues.len() != moduli.len() {
        return Err(WitnessError::ResidueCountMismatch { expected: moduli.len(), got: residues.len() });
    }
    for i in 0..moduli.len() {
        for j in i + 1..moduli.len() {
            if moduli[i].gcd(&moduli[j]) != 1 {
                return Err(WitnessError::NotCoprime(moduli[i], moduli[j]));
            }
        }
        if residues[i] >= moduli[i] {
            return Err(WitnessError::ResidueOutOfRange { residue: residues[i], modulus: moduli[i] });
        }
    }
    let mut value: u128 = 0;
    let mut modulus: u128 = 1;
    for (&d, &m) in residues.iter().zip(moduli) {
        let m = m as u128;
        let d = d as u128;
        // value + modulus·t ≡ d (mod m)
        let gap = (d + m - value % m) % m;
        let inv = mod_inverse(modulus % m, m).expect("coprime by the checks above");
        let t = gap * inv % m;
        value += modulus * t;
        modulus *= m;
    }
    Ok(value as u64)
}

fn mod_inverse(a: u128, m: u128) -> Option<u128> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u128)
}

/// The shift-by-residues word a^ℓ: reading it rotates cycle i forward by
/// residues[i] positions simultaneously for all i.
pub fn shift_word(spec: &WitnessSpec, residues: &[u64]) -> Result<Word, WitnessError> {
    let length = crt(residues, &spec.cycles)?;
    Ok(vec![0; length as usize])
}

#[derive(Debug, Clone)]
pub struct CertifyOptions {
    pub subset_cap: usize,
    /// Length bound for the three-way language agreement check.
    pub agreement_max_len: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { subset_cap: DEFAULT_SUBSET_CAP, agreement_max_len: 8 }
    }
}

/// One fully certified witness instance.
#[derive(Debug, Clone)]
pub struct CertificationRecord {
    pub spec: WitnessSpec,
    pub regex_width: usize,
    /// States of the hand-built witness NFA.
    pub nfa_states: usize,
    /// States of the NFA built from the witness regex (width+1).
    pub built_nfa_states: usize,
    /// Reachable subsets when determinizing the witness NFA.
    pub reachable_subsets: usize,
    pub subset_stats: SubsetStats,
    /// Reachable subsets when determinizing the regex-built NFA.
    pub reachable_subsets_regex: usize,
    /// States of the minimal DFA.
    pub minimal_states: usize,
    pub lower_bound: BigUint,
    pub lower_bound_met: bool,
    /// Regex- and NFA-derived DFAs recognize the same language.
    pub dfas_equivalent: bool,
    /// matches(α,w) = NFA(w) = DFA(w) for all |w| ≤ agreement_max_len.
    pub agreement_ok: bool,
    pub agreement_max_len: usize,
}

/// Build both routes to the witness language, check that they agree, and
/// certify the lower bound by exact minimization.
pub fn certify(spec: &WitnessSpec, options: &CertifyOptions) -> Result<CertificationRecord, DeterminizeError> {
    let alphabet = witness_alphabet();
    let nfa = witness_nfa(spec);
    let ast = witness_regex(spec);
    let built = crate::nfa::build_nfa(&ast, &alphabet);

    let (dfa, stats) = determinize_with_cap(&nfa, options.subset_cap)?;
    let (dfa_regex, _) = determinize_with_cap(&built, options.subset_cap)?;

    let mut agreement_ok = true;
    for word in enumerate_words(&alphabet, options.agreement_max_len) {
        let by_regex = matches(&ast, &word);
        if by_regex != nfa.accepts(&word) || by_regex != built.accepts(&word) || by_regex != dfa.accepts(&word) {
            agreement_ok = false;
            break;
        }
    }

    let dfas_equivalent = equivalent(&dfa, &dfa_regex).is_equivalent();
    let minimal = minimize(&dfa);
    let lower = spec.lower_bound();
    let lower_bound_met = BigUint::from(minimal.state_count()) >= lower.product;

    Ok(CertificationRecord {
        spec: spec.clone(),
        regex_width: ast.width(),
        nfa_states: nfa.state_count(),
        built_nfa_states: built.state_count(),
        reachable_subsets: dfa.state_count(),
        subset_stats: stats,
        reachable_subsets_regex: dfa_regex.state_count(),
        minimal_states: minimal.state_count(),
        lower_bound: lower.product,
        lower_bound_met,
        dfas_equivalent,
        agreement_ok,
        agreement_max_len: options.agreement_max_len,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nfa::{build_nfa, languages_equal_up_to, symbol_partition};
    use crate::regex::parse;

    fn spec(cycles: &[u64]) -> WitnessSpec {
        WitnessSpec::new(cycles.to_vec()).unwrap()
    }

    #[test]
    fn spec_validation() {
        assert!(WitnessSpec::new(vec![]).is_err());
        assert_eq!(WitnessSpec::new(vec![5]), Err(WitnessError::FirstCycleNotThree(5)));
        assert_eq!(WitnessSpec::new(vec![3, 2]), Err(WitnessError::CycleTooSmall(2)));
        assert_eq!(WitnessSpec::new(vec![3, 6]), Err(WitnessError::NotCoprime(3, 6)));
        assert!(WitnessSpec::new(vec![3, 4]).is_ok()); // coprime non-primes are fine
        assert!(WitnessSpec::new(vec![3, 5, 7]).is_ok());
    }

    #[test]
    fn widths_and_state_counts() {
        assert_eq!(spec(&[3, 5]).regex_width(), 14);
        assert_eq!(spec(&[3, 5]).nfa_state_count(), 13);
        assert_eq!(spec(&[3]).regex_width(), 6);
        assert_eq!(spec(&[3]).nfa_state_count(), 5);
        assert_eq!(spec(&[3, 5, 7]).regex_width(), 26);
        assert_eq!(witness_regex(&spec(&[3, 5])).width(), 14);
        assert_eq!(witness_regex(&spec(&[3])).width(), 6);
        assert_eq!(witness_regex(&spec(&[3, 5, 7])).width(), 26);
        // β₃ alone has width 4
        assert_eq!(beta(3).width(), 4);
    }

    #[test]
    fn regex_text_parses_to_the_same_tree() {
        let alphabet = witness_alphabet();
        for cycles in [&[3][..], &[3, 5][..], &[3, 5, 7][..]] {
            let sp = spec(cycles);
            let text = witness_regex_text(&sp);
            let parsed = parse(&text, &alphabet).unwrap();
            assert_eq!(parsed, witness_regex(&sp), "{text}");
        }
    }

    #[test]
    fn nfa_shape_3_5() {
        let nfa = witness_nfa(&spec(&[3, 5]));
        assert_eq!(nfa.state_count(), 13);
        assert_eq!(nfa.initial(), &[0]);
        assert_eq!(nfa.accepting(), &[0]);
        let part = symbol_partition(&nfa);
        assert!(part.remembers_last_symbol());
        assert_eq!(part.set(0).len(), 8); // all cycle states
        assert_eq!(part.set(1).len(), 5); // r_{1,1}, r_{2,1..3}, q̂
        assert_eq!(part.n1(), 8);
        assert_eq!(nfa.state_name(0), Some("qhat"));
    }

    #[test]
    fn nfa_shape_3() {
        let nfa = witness_nfa(&spec(&[3]));
        assert_eq!(nfa.state_count(), 5);
        // accepts ab (empty β-segment) and a·aaa·b
        assert!(nfa.accepts(&[0, 1]));
        assert!(nfa.accepts(&[0, 0, 0, 0, 1]));
        assert!(!nfa.accepts(&[0]));
        assert!(nfa.accepts(&[]));
    }

    #[test]
    fn every_valid_spec_yields_a_last_symbol_nfa_of_the_right_size() {
        for cycles in [&[3u64][..], &[3, 4], &[3, 5], &[3, 7], &[3, 4, 5], &[3, 5, 7], &[3, 4, 7, 11]] {
            let sp = spec(cycles);
            let nfa = witness_nfa(&sp);
            assert_eq!(nfa.state_count(), sp.nfa_state_count(), "{cycles:?}");
            assert!(symbol_partition(&nfa).remembers_last_symbol(), "{cycles:?}");
            assert_eq!(witness_regex(&sp).width(), sp.regex_width(), "{cycles:?}");
            assert!(sp.lower_bound().satisfies_half_product(), "{cycles:?}");
        }
    }

    #[test]
    fn built_and_hand_nfa_define_the_same_language() {
        let sp = spec(&[3, 5]);
        let alphabet = witness_alphabet();
        let hand = witness_nfa(&sp);
        let built = build_nfa(&witness_regex(&sp), &alphabet);
        assert_eq!(built.state_count(), 15); // width 14 + 1
        assert!(languages_equal_up_to(&built, &hand, 10));
    }

    #[test]
    fn lower_bound_values() {
        let lb = spec(&[3, 5]).lower_bound();
        assert_eq!(lb.product, BigUint::from(180u32));
        assert_eq!(lb.half_product, BigUint::from(128u32));
        assert!(lb.satisfies_half_product());

        let lb = spec(&[3, 5, 7]).lower_bound();
        assert_eq!(lb.product, BigUint::from(22680u32));
        assert_eq!(lb.half_product, BigUint::from(16384u32));
        assert!(lb.satisfies_half_product());

        assert_eq!(spec(&[3]).lower_bound().product, BigUint::from(6u32));
    }

    #[test]
    fn prime_selection() {
        assert_eq!(select_primes(14).unwrap().cycles(), &[3, 5]);
        assert_eq!(select_primes(26).unwrap().cycles(), &[3, 5, 7]);
        assert_eq!(select_primes(30).unwrap().cycles(), &[3, 5, 7]);
        assert_eq!(select_primes(6).unwrap().cycles(), &[3]);
        assert_eq!(select_primes(13).unwrap().cycles(), &[3]);
        // room to push the last prime past the next odd prime
        assert_eq!(select_primes(34).unwrap().cycles(), &[3, 5, 11]);
        assert_eq!(select_primes(36).unwrap().cycles(), &[3, 5, 11]);
        assert_eq!(select_primes(38).unwrap().cycles(), &[3, 5, 13]);
        assert!(select_primes(5).is_err());
        // every selected spec fills the budget as far as primality allows
        for budget in 6..=60 {
            let sp = select_primes(budget).unwrap();
            assert!(sp.regex_width() <= budget, "budget {budget}");
        }
    }

    #[test]
    fn crt_and_shift_words() {
        let sp = spec(&[3, 5]);
        assert_eq!(shift_word(&sp, &[0, 0]).unwrap().len(), 0);
        assert_eq!(shift_word(&sp, &[1, 2]).unwrap().len(), 7);
        assert_eq!(shift_word(&sp, &[2, 4]).unwrap().len(), 14);
        assert_eq!(crt(&[2, 3, 2], &[3, 5, 7]).unwrap(), 23);
        assert_eq!(crt(&[0], &[1]).unwrap(), 0);
        assert!(crt(&[1, 1], &[4, 6]).is_err());
        assert!(shift_word(&sp, &[3, 0]).is_err());
        assert!(shift_word(&sp, &[0]).is_err());
    }

    #[test]
    fn shift_rotates_every_cycle() {
        let sp = spec(&[3, 5]);
        let nfa = witness_nfa(&sp);
        // layout: q̂=0, q_{1,0..2}=1..3, r_{1,1}=4, q_{2,0..4}=5..9, r_{2,*}=10..12
        let entry = nfa.step_subset(&[0], 0);
        assert_eq!(entry, vec![1, 5]); // q_{1,0}, q_{2,0}
        let word = shift_word(&sp, &[1, 2]).unwrap();
        let mut subset = entry;
        for &s in &word {
            subset = nfa.step_subset(&subset, s);
        }
        assert_eq!(subset, vec![2, 7]); // q_{1,1}, q_{2,2}
    }

    #[test]
    fn certify_3() {
        let record = certify(&spec(&[3]), &CertifyOptions::default()).unwrap();
        assert!(record.lower_bound_met);
        assert!(record.dfas_equivalent);
        assert!(record.agreement_ok);
        assert!(record.minimal_states >= 6);
        assert_eq!(record.nfa_states, 5);
        assert_eq!(record.regex_width, 6);
    }
}
