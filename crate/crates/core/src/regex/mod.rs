//! Regular expressions with cached alphabetic width.
//!
//! The size measure throughout this crate is the *alphabetic width*: the
//! number of alphabet-symbol occurrences, counted with multiplicity, ignoring
//! operators and brackets. ε and ∅ are primitives of width 0.

mod matcher;
mod parser;

pub use matcher::matches;
pub use parser::{parse, ParseError, ParseErrorKind};

use crate::alphabet::{Alphabet, SymbolId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegexNode {
    Symbol(SymbolId),
    EmptySet,
    Epsilon,
    Concat(Box<RegexAst>, Box<RegexAst>),
    Union(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

/// A regular expression tree. Width and nullability are computed on
/// construction and never change; all values are immutable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegexAst {
    node: RegexNode,
    width: usize,
    nullable: bool,
}

impl RegexAst {
    pub fn symbol(id: SymbolId) -> Self {
        RegexAst { node: RegexNode::Symbol(id), width: 1, nullable: false }
    }

    pub fn empty_set() -> Self {
        RegexAst { node: RegexNode::EmptySet, width: 0, nullable: false }
    }

    pub fn epsilon() -> Self {
        RegexAst { node: RegexNode::Epsilon, width: 0, nullable: true }
    }

    pub fn concat(left: Self, right: Self) -> Self {
        let width = left.width + right.width;
        let nullable = left.nullable && right.nullable;
        RegexAst { node: RegexNode::Concat(Box::new(left), Box::new(right)), width, nullable }
    }

    pub fn union(left: Self, right: Self) -> Self {
        let width = left.width + right.width;
        let nullable = left.nullable || right.nullable;
        RegexAst { node: RegexNode::Union(Box::new(left), Box::new(right)), width, nullable }
    }

    pub fn star(inner: Self) -> Self {
        let width = inner.width;
        RegexAst { node: RegexNode::Star(Box::new(inner)), width, nullable: true }
    }

    /// m-fold concatenation (left-associative); `repeat(0)` is ε.
    /// This is what the `{m}` repetition sugar expands to.
    pub fn repeat(self, times: usize) -> Self {
        match times {
            0 => RegexAst::epsilon(),
            _ => {
                let mut result = self.clone();
                for _ in 1..times {
                    result = RegexAst::concat(result, self.clone());
                }
                result
            }
        }
    }

    /// Left-associative concatenation of a sequence; empty input is ε.
    pub fn concat_all<I: IntoIterator<Item = Self>>(items: I) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => RegexAst::epsilon(),
            Some(first) => it.fold(first, RegexAst::concat),
        }
    }

    /// Left-associative union of a sequence; empty input is ∅.
    pub fn union_all<I: IntoIterator<Item = Self>>(items: I) -> Self {
        let mut it = items.into_iter();
        match it.next() {
            None => RegexAst::empty_set(),
            Some(first) => it.fold(first, RegexAst::union),
        }
    }

    pub fn node(&self) -> &RegexNode {
        &self.node
    }

    /// Alphabetic width: symbol occurrences counted with multiplicity.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Whether ε belongs to the language.
    pub fn nullable(&self) -> bool {
        self.nullable
    }

    /// Number of AST nodes (used to size matcher memo tables).
    pub fn node_count(&self) -> usize {
        match &self.node {
            RegexNode::Symbol(_) | RegexNode::EmptySet | RegexNode::Epsilon => 1,
            RegexNode::Concat(l, r) | RegexNode::Union(l, r) => 1 + l.node_count() + r.node_count(),
            RegexNode::Star(inner) => 1 + inner.node_count(),
        }
    }

    /// Fully parenthesized canonical form: `(αβ)`, `(α|β)`, `(α)*`.
    /// Re-parsing the output yields a structurally identical AST.
    pub fn to_canonical_string(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        self.print_into(alphabet, &mut out);
        out
    }

    fn print_into(&self, alphabet: &Alphabet, out: &mut String) {
        match &self.node {
            RegexNode::Symbol(id) => out.push(alphabet.symbol(*id)),
            RegexNode::EmptySet => out.push('∅'),
            RegexNode::Epsilon => out.push('ε'),
            RegexNode::Concat(l, r) => {
                out.push('(');
                l.print_into(alphabet, out);
                r.print_into(alphabet, out);
                out.push(')');
            }
            RegexNode::Union(l, r) => {
                out.push('(');
                l.print_into(alphabet, out);
                out.push('|');
                r.print_into(alphabet, out);
                out.push(')');
            }
            RegexNode::Star(inner) => {
                out.push('(');
                inner.print_into(alphabet, out);
                out.push(')');
                out.push('*');
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn ab() -> Alphabet {
        "ab".parse().unwrap()
    }

    #[test]
    fn width_rules() {
        assert_eq!(RegexAst::symbol(0).width(), 1);
        assert_eq!(RegexAst::empty_set().width(), 0);
        assert_eq!(RegexAst::epsilon().width(), 0);
        let cc = RegexAst::concat(RegexAst::symbol(0), RegexAst::symbol(1));
        assert_eq!(cc.width(), 2);
        let un = RegexAst::union(cc.clone(), RegexAst::epsilon());
        assert_eq!(un.width(), 2);
        assert_eq!(RegexAst::star(un).width(), 2);
    }

    #[test]
    fn nullable_rules() {
        assert!(!RegexAst::symbol(0).nullable());
        assert!(!RegexAst::empty_set().nullable());
        assert!(RegexAst::epsilon().nullable());
        assert!(RegexAst::star(RegexAst::empty_set()).nullable());
        assert!(!RegexAst::concat(RegexAst::symbol(0), RegexAst::epsilon().repeat(3)).nullable());
        assert!(RegexAst::union(RegexAst::symbol(0), RegexAst::epsilon()).nullable());
    }

    #[test]
    fn repeat_expansion() {
        let a = RegexAst::symbol(0);
        assert_eq!(a.clone().repeat(0), RegexAst::epsilon());
        assert_eq!(a.clone().repeat(1), a.clone());
        let twice = a.clone().repeat(2);
        assert_eq!(twice, RegexAst::concat(a.clone(), a.clone()));
        assert_eq!(a.repeat(4).width(), 4);
    }

    #[test]
    fn canonical_printing() {
        let alphabet = ab();
        let e = RegexAst::concat(
            RegexAst::symbol(0),
            RegexAst::star(RegexAst::union(RegexAst::symbol(1), RegexAst::epsilon())),
        );
        assert_eq!(e.to_canonical_string(&alphabet), "(a((b|ε))*)");
    }
}
