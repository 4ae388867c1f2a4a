//! C ABI for the lastsym library.
//!
//! Conventions:
//! - Handles (`LsRegex`, `LsNfa`, `LsDfa`, `LsWitness`) are opaque; free
//!   them with their `*_free` function.
//! - Functions that can fail return an `LsStatus`; results go to `out`
//!   pointers. On any non-OK status the failure detail is available via
//!   `ls_last_error_message`.
//! - Returned `char*` values are UTF-8, owned by the caller, and must be
//!   released with `ls_string_free`.
//! - Words are passed as strings of alphabet characters (e.g. "abba").
//!
//! The matching declarations live in include/lastsym.h.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lastsym::alphabet::Alphabet;
use lastsym::dfa::{determinize_with_cap, equivalent, minimize, DeterminizeError, Dfa, Equivalence};
use lastsym::dot::{dfa_to_dot, nfa_to_dot};
use lastsym::format::{dfa_from_text, dfa_to_text, nfa_from_text, nfa_to_text};
use lastsym::nfa::{build_nfa, symbol_partition, Nfa};
use lastsym::regex::{matches, parse, RegexAst};
use lastsym::unary::landau;
use lastsym::witness::{
    crt, select_primes, witness_nfa, witness_regex, WitnessSpec,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsStatus {
    LsOk = 0,
    LsNullArgument = 1,
    LsInputError = 2,
    LsBudgetExceeded = 3,
    LsInternalError = 4,
}

pub struct LsRegex {
    ast: RegexAst,
    alphabet: Alphabet,
}

pub struct LsNfa {
    nfa: Nfa,
}

pub struct LsDfa {
    dfa: Dfa,
}

pub struct LsWitness {
    spec: WitnessSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: impl Into<String>) {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message.into());
}

fn clear_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().clear());
}

fn input_error(e: impl std::fmt::Display) -> LsStatus {
    set_error(e.to_string());
    LsStatus::LsInputError
}

fn guard(body: impl FnOnce() -> LsStatus) -> LsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic in lastsym".to_string());
            set_error(message);
            LsStatus::LsInternalError
        }
    }
}

/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, LsStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(LsStatus::LsNullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        LsStatus::LsInputError
    })
}

fn owned_c_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(c) => c.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

unsafe fn require<'a, T>(p: *const T) -> Result<&'a T, LsStatus> {
    if p.is_null() {
        set_error("null handle argument");
        Err(LsStatus::LsNullArgument)
    } else {
        Ok(&*p)
    }
}

unsafe fn require_out<'a, T>(p: *mut T) -> Result<&'a mut T, LsStatus> {
    if p.is_null() {
        set_error("null out-pointer");
        Err(LsStatus::LsNullArgument)
    } else {
        Ok(&mut *p)
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Most recent error detail for this thread; empty string when none.
/// The caller owns the returned string.
#[no_mangle]
pub extern "C" fn ls_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| owned_c_string(slot.borrow().clone()))
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned by a lastsym
/// function and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ls_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `pattern` and `alphabet` are NUL-terminated strings; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ls_regex_parse(
    pattern: *const c_char,
    alphabet: *const c_char,
    out: *mut *mut LsRegex,
) -> LsStatus {
    guard(|| {
        let out = try_status!(require_out(out));
        let pattern = try_status!(read_str(pattern));
        let alphabet_str = try_status!(read_str(alphabet));
        let alphabet: Alphabet = match alphabet_str.parse() {
            Ok(a) => a,
            Err(e) => return input_error(e),
        };
        match parse(pattern, &alphabet) {
            Ok(ast) => {
                clear_error();
                *out = Box::into_raw(Box::new(LsRegex { ast, alphabet }));
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// # Safety
/// `regex` must come from `ls_regex_parse`/`ls_witness_regex` and not be
/// freed twice.
#[no_mangle]
pub unsafe extern "C" fn ls_regex_free(regex: *mut LsRegex) {
    if !regex.is_null() {
        drop(Box::from_raw(regex));
    }
}

/// Alphabetic width; 0 for a null handle.
///
/// # Safety
/// `regex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_regex_width(regex: *const LsRegex) -> u64 {
    regex.as_ref().map(|r| r.ast.width() as u64).unwrap_or(0)
}

/// # Safety
/// `regex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_regex_nullable(regex: *const LsRegex) -> bool {
    regex.as_ref().map(|r| r.ast.nullable()).unwrap_or(false)
}

/// Fully parenthesized canonical form; null for a null handle.
///
/// # Safety
/// `regex` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_regex_canonical(regex: *const LsRegex) -> *mut c_char {
    match regex.as_ref() {
        Some(r) => owned_c_string(r.ast.to_canonical_string(&r.alphabet)),
        None => ptr::null_mut(),
    }
}

/// Membership test via the automaton-independent matcher.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_regex_matches(
    regex: *const LsRegex,
    word: *const c_char,
    out: *mut bool,
) -> LsStatus {
    guard(|| {
        let regex = try_status!(require(regex));
        let out = try_status!(require_out(out));
        let word = try_status!(read_str(word));
        match regex.alphabet.word_from_str(word) {
            Ok(word) => {
                clear_error();
                *out = matches(&regex.ast, &word);
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// Build the width+1 NFA that remembers the last symbol.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_regex_to_nfa(regex: *const LsRegex, out: *mut *mut LsNfa) -> LsStatus {
    guard(|| {
        let regex = try_status!(require(regex));
        let out = try_status!(require_out(out));
        clear_error();
        let nfa = build_nfa(&regex.ast, &regex.alphabet);
        *out = Box::into_raw(Box::new(LsNfa { nfa }));
        LsStatus::LsOk
    })
}

/// # Safety
/// `nfa` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_free(nfa: *mut LsNfa) {
    if !nfa.is_null() {
        drop(Box::from_raw(nfa));
    }
}

/// Parse the `nfa …` text format.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_from_text(text: *const c_char, out: *mut *mut LsNfa) -> LsStatus {
    guard(|| {
        let out = try_status!(require_out(out));
        let text = try_status!(read_str(text));
        match nfa_from_text(text) {
            Ok(nfa) => {
                clear_error();
                *out = Box::into_raw(Box::new(LsNfa { nfa }));
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// # Safety
/// `nfa` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_state_count(nfa: *const LsNfa) -> u64 {
    nfa.as_ref().map(|n| n.nfa.state_count() as u64).unwrap_or(0)
}

/// # Safety
/// `nfa` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_remembers_last_symbol(nfa: *const LsNfa) -> bool {
    nfa.as_ref()
        .map(|n| symbol_partition(&n.nfa).remembers_last_symbol())
        .unwrap_or(false)
}

/// n₁ = max_a |Q_a|.
///
/// # Safety
/// `nfa` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_n1(nfa: *const LsNfa) -> u64 {
    nfa.as_ref().map(|n| symbol_partition(&n.nfa).n1() as u64).unwrap_or(0)
}

/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_accepts(
    nfa: *const LsNfa,
    word: *const c_char,
    out: *mut bool,
) -> LsStatus {
    guard(|| {
        let nfa = try_status!(require(nfa));
        let out = try_status!(require_out(out));
        let word = try_status!(read_str(word));
        match nfa.nfa.alphabet().word_from_str(word) {
            Ok(word) => {
                clear_error();
                *out = nfa.nfa.accepts(&word);
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// # Safety
/// `nfa` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_to_text(nfa: *const LsNfa) -> *mut c_char {
    match nfa.as_ref() {
        Some(n) => owned_c_string(nfa_to_text(&n.nfa)),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `nfa` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_to_dot(nfa: *const LsNfa) -> *mut c_char {
    match nfa.as_ref() {
        Some(n) => owned_c_string(nfa_to_dot(&n.nfa)),
        None => ptr::null_mut(),
    }
}

/// Subset construction; `LS_BUDGET_EXCEEDED` when more than `max_subsets`
/// subsets are reachable.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_nfa_determinize(
    nfa: *const LsNfa,
    max_subsets: u64,
    out: *mut *mut LsDfa,
) -> LsStatus {
    guard(|| {
        let nfa = try_status!(require(nfa));
        let out = try_status!(require_out(out));
        match determinize_with_cap(&nfa.nfa, max_subsets as usize) {
            Ok((dfa, _)) => {
                clear_error();
                *out = Box::into_raw(Box::new(LsDfa { dfa }));
                LsStatus::LsOk
            }
            Err(e @ DeterminizeError::SubsetCapExceeded { .. }) => {
                set_error(e.to_string());
                LsStatus::LsBudgetExceeded
            }
        }
    })
}

/// # Safety
/// `dfa` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_free(dfa: *mut LsDfa) {
    if !dfa.is_null() {
        drop(Box::from_raw(dfa));
    }
}

/// Parse the `dfa …` text format.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_from_text(text: *const c_char, out: *mut *mut LsDfa) -> LsStatus {
    guard(|| {
        let out = try_status!(require_out(out));
        let text = try_status!(read_str(text));
        match dfa_from_text(text) {
            Ok(dfa) => {
                clear_error();
                *out = Box::into_raw(Box::new(LsDfa { dfa }));
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// # Safety
/// `dfa` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_state_count(dfa: *const LsDfa) -> u64 {
    dfa.as_ref().map(|d| d.dfa.state_count() as u64).unwrap_or(0)
}

/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_accepts(
    dfa: *const LsDfa,
    word: *const c_char,
    out: *mut bool,
) -> LsStatus {
    guard(|| {
        let dfa = try_status!(require(dfa));
        let out = try_status!(require_out(out));
        let word = try_status!(read_str(word));
        match dfa.dfa.alphabet().word_from_str(word) {
            Ok(word) => {
                clear_error();
                *out = dfa.dfa.accepts(&word);
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// Minimal complete DFA for the same language, canonically numbered.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_minimize(dfa: *const LsDfa, out: *mut *mut LsDfa) -> LsStatus {
    guard(|| {
        let dfa = try_status!(require(dfa));
        let out = try_status!(require_out(out));
        clear_error();
        let minimal = minimize(&dfa.dfa);
        *out = Box::into_raw(Box::new(LsDfa { dfa: minimal }));
        LsStatus::LsOk
    })
}

/// Exact language equivalence. Alphabets must agree.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_equivalent(
    d1: *const LsDfa,
    d2: *const LsDfa,
    out: *mut bool,
) -> LsStatus {
    guard(|| {
        let d1 = try_status!(require(d1));
        let d2 = try_status!(require(d2));
        let out = try_status!(require_out(out));
        if d1.dfa.alphabet() != d2.dfa.alphabet() {
            return input_error("the two DFAs use different alphabets");
        }
        clear_error();
        *out = equivalent(&d1.dfa, &d2.dfa).is_equivalent();
        LsStatus::LsOk
    })
}

/// A shortest word accepted by exactly one of the two DFAs, or null when
/// they are equivalent (or on error).
///
/// # Safety
/// `d1` and `d2` must be live handles over the same alphabet.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_counterexample(d1: *const LsDfa, d2: *const LsDfa) -> *mut c_char {
    let (d1, d2) = match (d1.as_ref(), d2.as_ref()) {
        (Some(a), Some(b)) if a.dfa.alphabet() == b.dfa.alphabet() => (a, b),
        _ => return ptr::null_mut(),
    };
    match equivalent(&d1.dfa, &d2.dfa) {
        Equivalence::Equivalent => ptr::null_mut(),
        Equivalence::Counterexample(word) => {
            owned_c_string(d1.dfa.alphabet().word_to_string(&word))
        }
    }
}

/// # Safety
/// `dfa` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_to_text(dfa: *const LsDfa) -> *mut c_char {
    match dfa.as_ref() {
        Some(d) => owned_c_string(dfa_to_text(&d.dfa)),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `dfa` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_dfa_to_dot(dfa: *const LsDfa) -> *mut c_char {
    match dfa.as_ref() {
        Some(d) => owned_c_string(dfa_to_dot(&d.dfa)),
        None => ptr::null_mut(),
    }
}

/// g(n). Fails with `LS_INPUT_ERROR` beyond the desk-scale cap of 200.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_landau(n: u64, out: *mut u64) -> LsStatus {
    guard(|| {
        let out = try_status!(require_out(out));
        match landau(n as usize) {
            Ok((value, _)) => {
                clear_error();
                *out = value as u64;
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// A maximizing multiset for g(n), comma-separated (e.g. "2,3"); null on
/// error.
#[no_mangle]
pub extern "C" fn ls_landau_witness(n: u64) -> *mut c_char {
    match landau(n as usize) {
        Ok((_, parts)) => {
            let joined: Vec<String> = parts.iter().map(u64::to_string).collect();
            owned_c_string(joined.join(","))
        }
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Validate cycle lengths (pairwise coprime, each ≥ 3, first = 3).
///
/// # Safety
/// `cycles` must point to `len` readable u64 values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_from_cycles(
    cycles: *const u64,
    len: usize,
    out: *mut *mut LsWitness,
) -> LsStatus {
    guard(|| {
        let out = try_status!(require_out(out));
        if cycles.is_null() {
            set_error("null cycles argument");
            return LsStatus::LsNullArgument;
        }
        let cycles = std::slice::from_raw_parts(cycles, len).to_vec();
        match WitnessSpec::new(cycles) {
            Ok(spec) => {
                clear_error();
                *out = Box::into_raw(Box::new(LsWitness { spec }));
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// Prime selection for a size budget.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_from_budget(budget: u64, out: *mut *mut LsWitness) -> LsStatus {
    guard(|| {
        let out = try_status!(require_out(out));
        match select_primes(budget as usize) {
            Ok(spec) => {
                clear_error();
                *out = Box::into_raw(Box::new(LsWitness { spec }));
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}

/// # Safety
/// `witness` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_free(witness: *mut LsWitness) {
    if !witness.is_null() {
        drop(Box::from_raw(witness));
    }
}

/// # Safety
/// `witness` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_cycle_count(witness: *const LsWitness) -> u64 {
    witness.as_ref().map(|w| w.spec.k() as u64).unwrap_or(0)
}

/// # Safety
/// `witness` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_regex_width(witness: *const LsWitness) -> u64 {
    witness.as_ref().map(|w| w.spec.regex_width() as u64).unwrap_or(0)
}

/// # Safety
/// `witness` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_nfa_state_count(witness: *const LsWitness) -> u64 {
    witness.as_ref().map(|w| w.spec.nfa_state_count() as u64).unwrap_or(0)
}

/// Π(2^{πᵢ}−2) as a decimal string (arbitrary precision); null on a null
/// handle.
///
/// # Safety
/// `witness` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_lower_bound(witness: *const LsWitness) -> *mut c_char {
    match witness.as_ref() {
        Some(w) => owned_c_string(w.spec.lower_bound().product.to_string()),
        None => ptr::null_mut(),
    }
}

/// The witness regular expression.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_regex(
    witness: *const LsWitness,
    out: *mut *mut LsRegex,
) -> LsStatus {
    guard(|| {
        let witness = try_status!(require(witness));
        let out = try_status!(require_out(out));
        clear_error();
        let ast = witness_regex(&witness.spec);
        let alphabet = lastsym::witness::witness_alphabet();
        *out = Box::into_raw(Box::new(LsRegex { ast, alphabet }));
        LsStatus::LsOk
    })
}

/// The witness NFA.
///
/// # Safety
/// Pointer arguments as documented above.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_nfa(
    witness: *const LsWitness,
    out: *mut *mut LsNfa,
) -> LsStatus {
    guard(|| {
        let witness = try_status!(require(witness));
        let out = try_status!(require_out(out));
        clear_error();
        let nfa = witness_nfa(&witness.spec);
        *out = Box::into_raw(Box::new(LsNfa { nfa }));
        LsStatus::LsOk
    })
}

/// Minimal ℓ with ℓ ≡ residues[i] (mod πᵢ) for all i: the length of the
/// shift word a^ℓ.
///
/// # Safety
/// `residues` must point to `len` readable u64 values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ls_witness_shift_length(
    witness: *const LsWitness,
    residues: *const u64,
    len: usize,
    out: *mut u64,
) -> LsStatus {
    guard(|| {
        let witness = try_status!(require(witness));
        let out = try_status!(require_out(out));
        if residues.is_null() {
            set_error("null residues argument");
            return LsStatus::LsNullArgument;
        }
        let residues = std::slice::from_raw_parts(residues, len);
        match crt(residues, witness.spec.cycles()) {
            Ok(length) => {
                clear_error();
                *out = length;
                LsStatus::LsOk
            }
            Err(e) => input_error(e),
        }
    })
}
