//! Landau's function and tail/period analysis of unary subset orbits.
//!
//! g(n) is the maximum lcm of positive integers summing to at most n. The
//! subset-image map of a one-symbol transition relation is eventually
//! periodic; its tail length and period are what the determinization
//! bounds for a dominating symbol are made of.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;

use crate::alphabet::SymbolId;
use crate::nfa::{Nfa, StateId};

/// Desk-scale cap for Landau's function arguments.
pub const LANDAU_CAP: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnaryError {
    CapExceeded { n: usize, cap: usize },
}

impl fmt::Display for UnaryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnaryError::CapExceeded { n, cap } => {
                write!(f, "Landau argument {n} exceeds the cap of {cap}")
            }
        }
    }
}

impl std::error::Error for UnaryError {}

/// g(0..=N) with one maximizing multiset per argument.
///
/// Computed by dynamic programming over prime powers: for each prime p ≤ N
/// either skip it or spend p^e of the budget, maximizing the product. This
/// is exact because an optimal multiset can always be replaced by distinct
/// prime powers with the same lcm and no larger sum.
#[derive(Debug, Clone)]
pub struct LandauTable {
    values: Vec<u128>,
    witnesses: Vec<Vec<u64>>,
}

impl LandauTable {
    pub fn up_to(n: usize) -> Result<LandauTable, UnaryError> {
        if n > LANDAU_CAP {
            return Err(UnaryError::CapExceeded { n, cap: LANDAU_CAP });
        }
        let primes = primes_up_to(n);
        let mut best: Vec<u128> = vec![1; n + 1];
        // choice[i][j]: exponent of primes[i] used at budget j (0 = skip)
        let mut choice: Vec<Vec<u8>> = Vec::with_capacity(primes.len());
        for &p in &primes {
            let mut row = vec![0u8; n + 1];
            let mut next = best.clone();
            for budget in 0..=n {
                let mut power = p as usize;
                let mut exp = 1u8;
                while power <= budget {
                    let candidate = best[budget - power] * power as u128;
                    if candidate > next[budget] {
                        next[budget] = candidate;
                        row[budget] = exp;
                    }
                    power *= p as usize;
                    exp += 1;
                }
            }
            best = next;
            choice.push(row);
        }
        let mut witnesses = Vec::with_capacity(n + 1);
        for target in 0..=n {
            let mut parts = Vec::new();
            let mut budget = target;
            for (i, &p) in primes.iter().enumerate().rev() {
                let exp = choice[i][budget];
                if exp > 0 {
                    let power = p.pow(exp as u32);
                    parts.push(power);
                    budget -= power as usize;
                }
            }
            parts.sort_unstable();
            if parts.is_empty() && target >= 1 {
                parts.push(1);
            }
            witnesses.push(parts);
        }
        Ok(LandauTable { values: best, witnesses })
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    /// g(n). Panics if n is beyond the table.
    pub fn value(&self, n: usize) -> u128 {
        self.values[n]
    }

    /// One multiset with sum ≤ n realizing g(n).
    pub fn witness(&self, n: usize) -> &[u64] {
        &self.witnesses[n]
    }
}

/// g(n) with a maximizing multiset.
pub fn landau(n: usize) -> Result<(u128, Vec<u64>), UnaryError> {
    let table = LandauTable::up_to(n)?;
    Ok((table.value(n), table.witness(n).to_vec()))
}

fn primes_up_to(n: usize) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut multiple = p * p;
            while multiple <= n {
                composite[multiple] = true;
                multiple += p;
            }
        }
    }
    primes
}

/// Tail/period decomposition of a unary subset orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnaryProfile {
    /// States of the automaton the orbit runs in.
    pub state_count: usize,
    /// Minimal ℓ with S_{ℓ+period} = S_ℓ.
    pub tail: usize,
    /// Minimal period of the eventual cycle.
    pub period: usize,
    /// Distinct subsets visited: tail + period.
    pub subset_count: usize,
}

/// Iterate the subset-image map of one symbol from `start` until the first
/// repetition. Only transitions labelled `symbol` are consulted; accepting
/// states are irrelevant to the orbit and ignored.
pub fn unary_orbit(nfa: &Nfa, symbol: SymbolId, start: &[StateId]) -> UnaryProfile {
    let mut normalized: Vec<StateId> = start.to_vec();
    normalized.sort_unstable();
    normalized.dedup();

    let mut seen: HashMap<Vec<StateId>, usize> = HashMap::new();
    let mut current = normalized;
    loop {
        match seen.get(&current) {
            Some(&first) => {
                let total = seen.len();
                return UnaryProfile {
                    state_count: nfa.state_count(),
                    tail: first,
                    period: total - first,
                    subset_count: total,
                };
            }
            None => {
                let index = seen.len();
                seen.insert(current.clone(), index);
                current = nfa.step_subset(&current, symbol);
            }
        }
    }
}

/// Empirical check of the reachability bound for one unary instance:
/// the orbit's period must not exceed g(m), where m is the number of
/// states reachable from `start` in the one-symbol state graph. A tail
/// longer than m² is flagged but is not a failure.
#[derive(Debug, Clone)]
pub struct UnaryLemmaReport {
    pub profile: UnaryProfile,
    /// States reachable from the start subset.
    pub reachable_states: usize,
    pub landau_value: u128,
    pub period_within_bound: bool,
    pub tail_exceeds_square: bool,
}

pub fn verify_unary_lemma(
    nfa: &Nfa,
    symbol: SymbolId,
    start: &[StateId],
) -> Result<UnaryLemmaReport, UnaryError> {
    let profile = unary_orbit(nfa, symbol, start);
    let m = reachable_states(nfa, symbol, start).len();
    let landau_value = LandauTable::up_to(m)?.value(m);
    let period_within_bound = profile.period as u128 <= landau_value;
    let tail_exceeds_square = profile.tail > m * m;
    Ok(UnaryLemmaReport { profile, reachable_states: m, landau_value, period_within_bound, tail_exceeds_square })
}

fn reachable_states(nfa: &Nfa, symbol: SymbolId, start: &[StateId]) -> Vec<StateId> {
    let mut seen = vec![false; nfa.state_count()];
    let mut stack: Vec<StateId> = Vec::new();
    for &q in start {
        if !seen[q] {
            seen[q] = true;
            stack.push(q);
        }
    }
    let mut out = Vec::new();
    while let Some(q) = stack.pop() {
        out.push(q);
        for &to in nfa.transitions(q, symbol) {
            if !seen[to] {
                seen[to] = true;
                stack.push(to);
            }
        }
    }
    out.sort_unstable();
    out
}

/// lcm over the strongly connected components (of the part of the
/// one-symbol state graph reachable from `start`) of the gcd of their
/// cycle lengths. The orbit's eventual period divides this value; it is
/// the checkable core of the tail-and-cycles normal form.
pub fn cycle_period_divisor(nfa: &Nfa, symbol: SymbolId, start: &[StateId]) -> u128 {
    let nodes = reachable_states(nfa, symbol, start);
    let components = strongly_connected_components(nfa, symbol, &nodes);
    let mut result: u128 = 1;
    for component in components {
        if let Some(g) = component_cycle_gcd(nfa, symbol, &component) {
            result = result.lcm(&(g as u128));
        }
    }
    result
}

fn strongly_connected_components(nfa: &Nfa, symbol: SymbolId, nodes: &[StateId]) -> Vec<Vec<StateId>> {
    // Tarjan, recursive; fine at desk scale.
    struct Ctx<'a> {
        nfa: &'a Nfa,
        symbol: SymbolId,
        in_scope: Vec<bool>,
        index: Vec<usize>,
        lowlink: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<StateId>,
        counter: usize,
        components: Vec<Vec<StateId>>,
    }
    fn visit(ctx: &mut Ctx, v: StateId) {
        ctx.index[v] = ctx.counter;
        ctx.lowlink[v] = ctx.counter;
        ctx.counter += 1;
        ctx.stack.push(v);
        ctx.on_stack[v] = true;
        for &w in ctx.nfa.transitions(v, ctx.symbol) {
            if !ctx.in_scope[w] {
                continue;
            }
            if ctx.index[w] == usize::MAX {
                visit(ctx, w);
                ctx.lowlink[v] = ctx.lowlink[v].min(ctx.lowlink[w]);
            } else if ctx.on_stack[w] {
                ctx.lowlink[v] = ctx.lowlink[v].min(ctx.index[w]);
            }
        }
        if ctx.lowlink[v] == ctx.index[v] {
            let mut component = Vec::new();
            loop {
                let w = ctx.stack.pop().unwrap();
                ctx.on_stack[w] = false;
                component.push(w);
                if w == v {
                    break;
                }
            }
            component.sort_unstable();
            ctx.components.push(component);
        }
    }
    let n = nfa.state_count();
    let mut ctx = Ctx {
        nfa,
        symbol,
        in_scope: vec![false; n],
        index: vec![usize::MAX; n],
        lowlink: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        counter: 0,
        components: Vec::new(),
    };
    for &v in nodes {
        ctx.in_scope[v] = true;
    }
    for &v in nodes {
        if ctx.index[v] == usize::MAX {
            visit(&mut ctx, v);
        }
    }
    ctx.components
}

/// gcd of all cycle lengths within one SCC, computed from depth differences
/// over a DFS tree; None when the component has no cycle.
fn component_cycle_gcd(nfa: &Nfa, symbol: SymbolId, component: &[StateId]) -> Option<u64> {
    let member: std::collections::HashSet<StateId> = component.iter().copied().collect();
    let mut depth: HashMap<StateId, i64> = HashMap::new();
    let root = component[0];
    depth.insert(root, 0);
    let mut stack = vec![root];
    let mut g: u64 = 0;
    while let Some(v) = stack.pop() {
        let dv = depth[&v];
        for &w in nfa.transitions(v, symbol) {
            if !member.contains(&w) {
                continue;
            }
            match depth.get(&w) {
                None => {
                    depth.insert(w, dv + 1);
                    stack.push(w);
                }
                Some(&dw) => {
                    let diff = (dv + 1 - dw).unsigned_abs();
                    g = g.gcd(&diff);
                }
            }
        }
    }
    if g == 0 {
        None
    } else {
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn unary() -> Alphabet {
        "a".parse().unwrap()
    }

    /// Brute-force g(n): maximum lcm over all partitions of n (parts of
    /// sum < n never beat them, since 1-parts are free).
    fn landau_brute(n: usize) -> u128 {
        fn go(remaining: usize, max_part: usize, current: u128, best: &mut u128) {
            if remaining == 0 {
                *best = (*best).max(current);
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                go(remaining - part, part, current.lcm(&(part as u128)), best);
            }
        }
        if n == 0 {
            return 1;
        }
        let mut best = 1;
        go(n, n, 1, &mut best);
        best
    }

    #[test]
    fn landau_matches_brute_force_up_to_20() {
        let table = LandauTable::up_to(20).unwrap();
        for n in 0..=20 {
            assert_eq!(table.value(n), landau_brute(n), "g({n})");
        }
    }

    #[test]
    fn landau_known_values_and_witnesses() {
        let (g5, w5) = landau(5).unwrap();
        assert_eq!(g5, 6);
        assert_eq!(w5, vec![2, 3]);
        let (g7, w7) = landau(7).unwrap();
        assert_eq!(g7, 12);
        assert_eq!(w7, vec![3, 4]);
        assert_eq!(landau(1).unwrap(), (1, vec![1]));
        assert_eq!(landau(0).unwrap(), (1, vec![]));
        assert_eq!(landau(8).unwrap().0, 15);
    }

    #[test]
    fn landau_witness_is_consistent() {
        let table = LandauTable::up_to(40).unwrap();
        for n in 0..=40 {
            let parts = table.witness(n);
            let sum: u64 = parts.iter().sum();
            assert!(sum as usize <= n.max(usize::from(n >= 1)), "sum for g({n})");
            let lcm = parts.iter().fold(1u128, |acc, &p| acc.lcm(&(p as u128)));
            assert_eq!(lcm, table.value(n), "witness lcm for g({n})");
        }
    }

    #[test]
    fn landau_monotone_and_small_equalities() {
        let table = LandauTable::up_to(60).unwrap();
        for n in 1..=60 {
            assert!(table.value(n) >= table.value(n - 1));
        }
        for n in 1..=4 {
            assert_eq!(table.value(n), n as u128);
        }
        assert!(table.value(5) > 5);
    }

    #[test]
    fn landau_cap() {
        assert!(matches!(landau(201), Err(UnaryError::CapExceeded { .. })));
    }

    fn cycle_nfa(len: usize) -> Nfa {
        let mut nfa = Nfa::new(unary(), len);
        for q in 0..len {
            nfa.add_transition(q, 0, (q + 1) % len);
        }
        nfa
    }

    #[test]
    fn pure_cycle_orbit() {
        let nfa = cycle_nfa(5);
        let profile = unary_orbit(&nfa, 0, &[0]);
        assert_eq!(profile.tail, 0);
        assert_eq!(profile.period, 5);
        assert_eq!(profile.subset_count, 5);
    }

    #[test]
    fn tail_and_two_cycles() {
        // tail q0 -> q1, then a choice into a 2-cycle and a 3-cycle
        let mut nfa = Nfa::new(unary(), 7);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(1, 0, 2); // 2-cycle: 2 <-> 3
        nfa.add_transition(2, 0, 3);
        nfa.add_transition(3, 0, 2);
        nfa.add_transition(1, 0, 4); // 3-cycle: 4 -> 5 -> 6 -> 4
        nfa.add_transition(4, 0, 5);
        nfa.add_transition(5, 0, 6);
        nfa.add_transition(6, 0, 4);
        let profile = unary_orbit(&nfa, 0, &[0]);
        assert_eq!(profile.tail, 2);
        assert_eq!(profile.period, 6);
        assert_eq!(profile.subset_count, 8);
        assert_eq!(cycle_period_divisor(&nfa, 0, &[0]), 6);
    }

    #[test]
    fn empty_start_is_a_fixed_point() {
        let nfa = cycle_nfa(4);
        let profile = unary_orbit(&nfa, 0, &[]);
        assert_eq!(profile.tail, 0);
        assert_eq!(profile.period, 1);
        assert_eq!(profile.subset_count, 1);
    }

    #[test]
    fn lemma_report_on_self_loop() {
        let mut nfa = Nfa::new(unary(), 1);
        nfa.add_transition(0, 0, 0);
        let report = verify_unary_lemma(&nfa, 0, &[0]).unwrap();
        assert_eq!(report.profile.period, 1);
        assert_eq!(report.reachable_states, 1);
        assert_eq!(report.landau_value, 1);
        assert!(report.period_within_bound);
        assert!(!report.tail_exceeds_square);
    }

    #[test]
    fn lemma_report_two_cycles() {
        let mut nfa = Nfa::new(unary(), 7);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(1, 0, 2);
        nfa.add_transition(2, 0, 3);
        nfa.add_transition(3, 0, 2);
        nfa.add_transition(1, 0, 4);
        nfa.add_transition(4, 0, 5);
        nfa.add_transition(5, 0, 6);
        nfa.add_transition(6, 0, 4);
        let report = verify_unary_lemma(&nfa, 0, &[0]).unwrap();
        assert_eq!(report.reachable_states, 7);
        // period 6 = g(5) ≤ g(7)
        assert_eq!(report.profile.period, 6);
        assert!(report.period_within_bound);
    }

    #[test]
    fn dag_has_divisor_one() {
        let mut nfa = Nfa::new(unary(), 3);
        nfa.add_transition(0, 0, 1);
        nfa.add_transition(1, 0, 2);
        assert_eq!(cycle_period_divisor(&nfa, 0, &[0]), 1);
        let profile = unary_orbit(&nfa, 0, &[0]);
        assert_eq!(profile.period, 1); // ends in the empty fixed point
        assert_eq!(profile.tail, 3);
    }
}
