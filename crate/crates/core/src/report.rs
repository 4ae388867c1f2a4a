//! Bound-comparison reports and the CSV layout shared by the CLI.
//!
//! The asymptotic columns evaluate the closed-form growth estimates with
//! every o(1) term set to 0; they are context for eyeballing sweeps, never
//! test assertions. All measured columns are exact integers.

use num_bigint::BigUint;

use crate::dfa::{
    determinize_with_cap, first_method_bound, minimize, DeterminizeError, Dfa, SubsetStats,
    second_method_bound,
};
use crate::nfa::{symbol_partition, Nfa};
use crate::unary::{LandauTable, LANDAU_CAP};

/// One row of the report: widths, measured counts and the closed-form
/// bounds for a single instance.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub label: String,
    pub regex_width: Option<usize>,
    pub nfa_states: usize,
    pub n1: usize,
    pub remembers: bool,
    pub reachable: Option<usize>,
    pub minimal: Option<usize>,
    /// Π(2^{πᵢ}−2) for witness rows.
    pub witness_lower_bound: Option<BigUint>,
    pub first_bound: Option<BigUint>,
    pub second_bound: Option<BigUint>,
    pub upper_asymptotic: Option<f64>,
    pub lower_asymptotic: Option<f64>,
    pub landau_asymptotic: Option<f64>,
    pub note: String,
}

/// 2^{n/2 + (log₂e / (2√2))·√(n ln n)}, o(1) → 0. Defined for n ≥ 1.
pub fn upper_asymptotic(n: usize) -> Option<f64> {
    if n < 1 {
        return None;
    }
    let n = n as f64;
    let exponent = n / 2.0 + std::f64::consts::LOG2_E / (2.0 * std::f64::consts::SQRT_2) * (n * n.ln()).sqrt();
    Some(exponent.exp2())
}

/// 2^{n/2 + √2·√(n / ln n)}, o(1) → 0. Defined for n ≥ 2.
pub fn lower_asymptotic(n: usize) -> Option<f64> {
    if n < 2 {
        return None;
    }
    let n = n as f64;
    let exponent = n / 2.0 + std::f64::consts::SQRT_2 * (n / n.ln()).sqrt();
    Some(exponent.exp2())
}

/// e^{√(n ln n)}, the growth order of Landau's function. Defined for n ≥ 1.
pub fn landau_asymptotic(n: usize) -> Option<f64> {
    if n < 1 {
        return None;
    }
    let n = n as f64;
    Some((n * n.ln()).sqrt().exp())
}

pub const CSV_HEADER: &str = "label,regex_width,nfa_states,n1,remembers,reachable_subsets,minimal_dfa,witness_lower_bound,first_method_bound,second_method_bound,upper_asymptotic(o1=0),lower_asymptotic(o1=0),landau_asymptotic(o1=0),note";

impl BoundReport {
    pub fn to_csv_row(&self) -> String {
        let fields = [
            self.label.clone(),
            opt(self.regex_width.as_ref()),
            self.nfa_states.to_string(),
            self.n1.to_string(),
            self.remembers.to_string(),
            opt(self.reachable.as_ref()),
            opt(self.minimal.as_ref()),
            opt(self.witness_lower_bound.as_ref()),
            opt(self.first_bound.as_ref()),
            opt(self.second_bound.as_ref()),
            float(self.upper_asymptotic),
            float(self.lower_asymptotic),
            float(self.landau_asymptotic),
            self.note.clone(),
        ];
        fields.join(",")
    }

    /// The chain every last-symbol instance must satisfy:
    /// minimal ≤ reachable ≤ min(first, second). A violation means a
    /// measured count exceeded a proved bound and aborts the run.
    pub fn chain_violation(&self) -> Option<String> {
        if !self.remembers {
            return None;
        }
        let reachable = self.reachable?;
        if let Some(minimal) = self.minimal {
            if minimal > reachable {
                return Some(format!(
                    "{}: minimal DFA ({minimal}) exceeds reachable subsets ({reachable})",
                    self.label
                ));
            }
        }
        let measured = BigUint::from(reachable);
        if let Some(first) = &self.first_bound {
            if &measured > first {
                return Some(format!(
                    "{}: reachable subsets ({reachable}) exceed the first-method bound ({first})",
                    self.label
                ));
            }
        }
        if let Some(second) = &self.second_bound {
            if &measured > second {
                return Some(format!(
                    "{}: reachable subsets ({reachable}) exceed the second-method bound ({second})",
                    self.label
                ));
            }
        }
        None
    }
}

fn opt<T: ToString>(value: Option<&T>) -> String {
    value.map(T::to_string).unwrap_or_default()
}

fn float(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{v:.6e}"),
        None => String::new(),
    }
}

/// Everything the pipeline produced for one instance. `dfa`/`minimal` are
/// absent when the subset cap was exceeded (the row is marked instead).
#[derive(Debug)]
pub struct Analysis {
    pub report: BoundReport,
    pub dfa: Option<Dfa>,
    pub minimal: Option<Dfa>,
    pub stats: Option<SubsetStats>,
}

/// The measurement-free part of a report: sizes, partition statistics and
/// both closed-form bounds. Asymptotic columns use the regex width when
/// one is known, otherwise the NFA state count.
pub fn bound_skeleton(label: &str, regex_width: Option<usize>, nfa: &Nfa) -> BoundReport {
    let partition = symbol_partition(nfa);
    let n = nfa.state_count();
    let n1 = partition.n1();
    let first = first_method_bound(&partition, n).ok();
    let (second, note) = if n1 <= LANDAU_CAP {
        let table = LandauTable::up_to(n1).expect("within cap");
        (Some(second_method_bound(n, n1, &table)), String::new())
    } else {
        (None, format!("n1 {n1} beyond the Landau cap"))
    };
    let asym_n = regex_width.unwrap_or(n);
    BoundReport {
        label: label.to_string(),
        regex_width,
        nfa_states: n,
        n1,
        remembers: partition.remembers_last_symbol(),
        reachable: None,
        minimal: None,
        witness_lower_bound: None,
        first_bound: first,
        second_bound: second,
        upper_asymptotic: upper_asymptotic(asym_n),
        lower_asymptotic: lower_asymptotic(asym_n),
        landau_asymptotic: landau_asymptotic(asym_n),
        note,
    }
}

pub(crate) fn mark_infeasible(report: &mut BoundReport, cap: usize) {
    if !report.note.is_empty() {
        report.note.push_str("; ");
    }
    report.note.push_str(&format!("infeasible: subset cap {cap} exceeded"));
}

/// Determinize, minimize and evaluate both bounds for one NFA.
pub fn analyze(label: &str, regex_width: Option<usize>, nfa: &Nfa, subset_cap: usize) -> Analysis {
    let mut report = bound_skeleton(label, regex_width, nfa);
    match determinize_with_cap(nfa, subset_cap) {
        Ok((dfa, stats)) => {
            let minimal = minimize(&dfa);
            report.reachable = Some(dfa.state_count());
            report.minimal = Some(minimal.state_count());
            Analysis { report, dfa: Some(dfa), minimal: Some(minimal), stats: Some(stats) }
        }
        Err(DeterminizeError::SubsetCapExceeded { cap }) => {
            mark_infeasible(&mut report, cap);
            Analysis { report, dfa: None, minimal: None, stats: None }
        }
    }
}

/// One sweep/certification row for a witness spec: the skeleton plus the
/// certification numbers when the instance fits the cap.
pub fn witness_row(
    spec: &crate::witness::WitnessSpec,
    subset_cap: usize,
    agreement_max_len: usize,
) -> (BoundReport, Option<crate::witness::CertificationRecord>) {
    let nfa = crate::witness::witness_nfa(spec);
    let mut report = bound_skeleton(&spec.label(), Some(spec.regex_width()), &nfa);
    report.witness_lower_bound = Some(spec.lower_bound().product);
    let options = crate::witness::CertifyOptions { subset_cap, agreement_max_len };
    match crate::witness::certify(spec, &options) {
        Ok(record) => {
            report.reachable = Some(record.reachable_subsets);
            report.minimal = Some(record.minimal_states);
            if report.note.is_empty() {
                report.note = "certified".into();
            }
            (report, Some(record))
        }
        Err(DeterminizeError::SubsetCapExceeded { cap }) => {
            mark_infeasible(&mut report, cap);
            (report, None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::nfa::build_nfa;
    use crate::regex::parse;

    #[test]
    fn asymptotic_edge_cases() {
        assert!(upper_asymptotic(0).is_none());
        assert!(lower_asymptotic(1).is_none());
        assert!(landau_asymptotic(1).is_some());
        // n = 14: exponent 7 + (log₂e/(2√2))·√(14 ln 14) ≈ 10.10
        let v = upper_asymptotic(14).unwrap();
        assert!(v > 2f64.powi(10) && v < 2f64.powi(11), "{v}");
        // the two formulas only separate for larger n (o(1) → 0)
        let n = 500;
        assert!(upper_asymptotic(n).unwrap() > lower_asymptotic(n).unwrap());
        assert!(lower_asymptotic(n).unwrap() > 2f64.powi(250));
    }

    #[test]
    fn analyze_small_pipeline() {
        let alphabet: Alphabet = "a".parse().unwrap();
        let ast = parse("a*", &alphabet).unwrap();
        let nfa = build_nfa(&ast, &alphabet);
        let analysis = analyze("a*", Some(ast.width()), &nfa, 1 << 10);
        let report = &analysis.report;
        assert_eq!(report.nfa_states, 2);
        assert_eq!(report.minimal, Some(1));
        assert!(report.remembers);
        assert!(report.chain_violation().is_none());
        assert_eq!(report.to_csv_row().split(',').count(), CSV_HEADER.split(',').count());
    }

    #[test]
    fn infeasible_rows_are_marked() {
        let alphabet: Alphabet = "ab".parse().unwrap();
        let ast = parse("(a|b)*a(a|b)(a|b)(a|b)(a|b)", &alphabet).unwrap();
        let nfa = build_nfa(&ast, &alphabet);
        let analysis = analyze("big", Some(ast.width()), &nfa, 8);
        assert!(analysis.dfa.is_none());
        assert!(analysis.report.note.contains("infeasible"));
        assert!(analysis.report.chain_violation().is_none());
    }

    #[test]
    fn chain_violation_detects_bad_rows() {
        let report = BoundReport {
            label: "bad".into(),
            regex_width: None,
            nfa_states: 4,
            n1: 2,
            remembers: true,
            reachable: Some(100),
            minimal: Some(5),
            witness_lower_bound: None,
            first_bound: Some(BigUint::from(8u32)),
            second_bound: None,
            upper_asymptotic: None,
            lower_asymptotic: None,
            landau_asymptotic: None,
            note: String::new(),
        };
        assert!(report.chain_violation().unwrap().contains("first-method"));
    }
}
