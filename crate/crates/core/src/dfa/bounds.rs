//! The two closed-form bounds on reachable subsets, in exact integer
//! arithmetic. No floating point: the values serve as test assertions.

use std::fmt;

use num_bigint::BigUint;

use crate::nfa::SymbolPartition;
use crate::unary::LandauTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundError {
    /// The first-method bound only applies to NFAs that remember the last
    /// symbol.
    NotLastSymbol,
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::NotLastSymbol => {
                write!(f, "the NFA does not remember the last symbol")
            }
        }
    }
}

impl std::error::Error for BoundError {}

/// ⌈max(2^{n/2+1}, 2^{n₁+1})⌉ for an n-state NFA that remembers the last
/// symbol. For odd n the half-power is irrational; its ceiling is computed
/// exactly as ⌊√(2^{n+2})⌋ + 1 (an odd power of two is never a square).
pub fn first_method_bound(partition: &SymbolPartition, n: usize) -> Result<BigUint, BoundError> {
    if !partition.remembers_last_symbol() {
        return Err(BoundError::NotLastSymbol);
    }
    let half = ceil_pow2_half(n + 2);
    let by_n1 = pow2(partition.n1() + 1);
    Ok(half.max(by_n1))
}

/// ⌈2^{e/2}⌉ in exact integer arithmetic.
fn ceil_pow2_half(e: usize) -> BigUint {
    if e.is_multiple_of(2) {
        pow2(e / 2)
    } else {
        pow2(e).sqrt() + 1u32
    }
}

pub(crate) fn pow2(e: usize) -> BigUint {
    BigUint::from(1u32) << e
}

/// (2^{n−n₁}+1)·(g(n₁)+ℓ_max(n₁)) with the explicit tail bound
/// ℓ_max(m) = m². The quadratic stand-in dominates every measured tail:
/// the pre-period of an m-state one-symbol subset orbit is at most
/// (m−1)²+1.
pub fn second_method_bound(n: usize, n1: usize, landau: &LandauTable) -> BigUint {
    assert!(n1 <= n, "n1 must not exceed the state count");
    let starts = pow2(n - n1) + 1u32;
    let per_start = BigUint::from(landau.value(n1)) + BigUint::from((n1 * n1) as u64);
    starts * per_start
}
