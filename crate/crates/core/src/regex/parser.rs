//! Recursive-descent regex parser.
//!
//! Precedence, tightest first: Kleene star (and `{m}` repetition), then
//! concatenation, then disjunction. Concatenation and union associate to
//! the left. `ε` and `∅` have ASCII aliases `()` and `0` (the latter only
//! when `0` is not itself a declared alphabet symbol). Whitespace between
//! tokens is ignored.

use std::fmt;

use super::RegexAst;
use crate::alphabet::Alphabet;

/// Repetition counts above this are rejected; expansion is literal copies.
const MAX_REPETITION: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Character (not byte) position in the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnknownSymbol(char),
    UnexpectedEnd,
    MalformedRepetition,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected '{c}' at position {}", self.position)
            }
            ParseErrorKind::UnknownSymbol(c) => {
                write!(f, "unknown symbol '{c}' at position {}", self.position)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "unexpected end of expression at position {}", self.position)
            }
            ParseErrorKind::MalformedRepetition => {
                write!(f, "malformed repetition count at position {}", self.position)
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// Parse a regular expression over the given alphabet.
pub fn parse(text: &str, alphabet: &Alphabet) -> Result<RegexAst, ParseError> {
    let tokens: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser { tokens, pos: 0, end: text.chars().count(), alphabet };
    let ast = parser.union()?;
    match parser.peek() {
        None => Ok(ast),
        Some((p, c)) => Err(ParseError { position: p, kind: ParseErrorKind::UnexpectedChar(c) }),
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    alphabet: &'a Alphabet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.tokens.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<(usize, char)> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        let position = self.peek().map(|(p, _)| p).unwrap_or(self.end);
        ParseError { position, kind }
    }

    fn union(&mut self) -> Result<RegexAst, ParseError> {
        let mut node = self.concat()?;
        while let Some((_, '|')) = self.peek() {
            self.bump();
            let rhs = self.concat()?;
            node = RegexAst::union(node, rhs);
        }
        Ok(node)
    }

    fn concat(&mut self) -> Result<RegexAst, ParseError> {
        let mut node = self.postfix()?;
        while let Some((_, c)) = self.peek() {
            if c == '|' || c == ')' {
                break;
            }
            let rhs = self.postfix()?;
            node = RegexAst::concat(node, rhs);
        }
        Ok(node)
    }

    fn postfix(&mut self) -> Result<RegexAst, ParseError> {
        let mut node = self.atom()?;
        loop {
            match self.peek() {
                Some((_, '*')) => {
                    self.bump();
                    node = RegexAst::star(node);
                }
                Some((_, '{')) => {
                    self.bump();
                    let count = self.repetition_count()?;
                    node = node.repeat(count);
                }
                _ => break,
            }
        }
        Ok(node)
    }

    fn repetition_count(&mut self) -> Result<usize, ParseError> {
        let mut digits = String::new();
        loop {
            match self.peek() {
                Some((_, '}')) => {
                    self.bump();
                    break;
                }
                Some((_, c)) if c.is_ascii_digit() => {
                    self.bump();
                    digits.push(c);
                }
                _ => return Err(self.error_here(ParseErrorKind::MalformedRepetition)),
            }
        }
        if digits.is_empty() {
            return Err(self.error_here(ParseErrorKind::MalformedRepetition));
        }
        match digits.parse::<usize>() {
            Ok(m) if m <= MAX_REPETITION => Ok(m),
            _ => Err(self.error_here(ParseErrorKind::MalformedRepetition)),
        }
    }

    fn atom(&mut self) -> Result<RegexAst, ParseError> {
        let (position, c) = match self.bump() {
            Some(t) => t,
            None => return Err(self.error_here(ParseErrorKind::UnexpectedEnd)),
        };
        match c {
            '(' => {
                if let Some((_, ')')) = self.peek() {
                    self.bump();
                    return Ok(RegexAst::epsilon()); // `()` is the ASCII alias for ε
                }
                let inner = self.union()?;
                match self.bump() {
                    Some((_, ')')) => Ok(inner),
                    Some((p, other)) => {
                        Err(ParseError { position: p, kind: ParseErrorKind::UnexpectedChar(other) })
                    }
                    None => Err(self.error_here(ParseErrorKind::UnexpectedEnd)),
                }
            }
            'ε' => Ok(RegexAst::epsilon()),
            '∅' => Ok(RegexAst::empty_set()),
            _ => {
                if let Some(id) = self.alphabet.index_of(c) {
                    Ok(RegexAst::symbol(id))
                } else if c == '0' {
                    Ok(RegexAst::empty_set())
                } else if c == '|' || c == ')' || c == '*' || c == '{' || c == '}' {
                    Err(ParseError { position, kind: ParseErrorKind::UnexpectedChar(c) })
                } else {
                    Err(ParseError { position, kind: ParseErrorKind::UnknownSymbol(c) })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::regex::RegexAst;

    fn ab() -> Alphabet {
        "ab".parse().unwrap()
    }

    fn abc() -> Alphabet {
        "abc".parse().unwrap()
    }

    #[test]
    fn precedence_and_structure() {
        let e = parse("a(b|ε)*", &ab()).unwrap();
        let expected = RegexAst::concat(
            RegexAst::symbol(0),
            RegexAst::star(RegexAst::union(RegexAst::symbol(1), RegexAst::epsilon())),
        );
        assert_eq!(e, expected);
        assert_eq!(e.width(), 2);
    }

    #[test]
    fn union_binds_loosest() {
        let e = parse("ab|c*", &abc()).unwrap();
        let expected = RegexAst::union(
            RegexAst::concat(RegexAst::symbol(0), RegexAst::symbol(1)),
            RegexAst::star(RegexAst::symbol(2)),
        );
        assert_eq!(e, expected);
        assert_eq!(e.width(), 3);
    }

    #[test]
    fn left_associativity() {
        let e = parse("abc", &abc()).unwrap();
        let expected = RegexAst::concat(
            RegexAst::concat(RegexAst::symbol(0), RegexAst::symbol(1)),
            RegexAst::symbol(2),
        );
        assert_eq!(e, expected);

        let u = parse("a|b|c", &abc()).unwrap();
        let expected_u = RegexAst::union(
            RegexAst::union(RegexAst::symbol(0), RegexAst::symbol(1)),
            RegexAst::symbol(2),
        );
        assert_eq!(u, expected_u);
    }

    #[test]
    fn aliases() {
        assert_eq!(parse("()", &ab()).unwrap(), RegexAst::epsilon());
        assert_eq!(parse("0", &ab()).unwrap(), RegexAst::empty_set());
        assert_eq!(parse("∅", &ab()).unwrap(), RegexAst::empty_set());
        assert_eq!(parse("∅*", &ab()).unwrap(), RegexAst::star(RegexAst::empty_set()));
        // '0' as a declared symbol wins over the ∅ alias
        let a0: Alphabet = "a0".parse().unwrap();
        assert_eq!(parse("0", &a0).unwrap(), RegexAst::symbol(1));
    }

    #[test]
    fn repetition_sugar() {
        let e = parse("a{3}", &ab()).unwrap();
        assert_eq!(e, RegexAst::symbol(0).repeat(3));
        assert_eq!(e.width(), 3);
        assert_eq!(parse("a{0}", &ab()).unwrap(), RegexAst::epsilon());
        // `{m}` binds like `*`: a{2}* is ((aa))*
        let starred = parse("a{2}*", &ab()).unwrap();
        assert_eq!(starred, RegexAst::star(RegexAst::symbol(0).repeat(2)));
        // composite bodies expand as a unit
        let grouped = parse("(ab){2}", &ab()).unwrap();
        let body = RegexAst::concat(RegexAst::symbol(0), RegexAst::symbol(1));
        assert_eq!(grouped, body.repeat(2));
    }

    #[test]
    fn witness_regex_text_width() {
        // α_{3,5} with π−2 written via the {m} sugar; width 2·(3+5)−2·2+2 = 14
        let text = "(a((a((b|ε)a){1}a)*|(a((b|ε)a){3}a)*)b)*";
        let e = parse(text, &ab()).unwrap();
        assert_eq!(e.width(), 14);
        assert!(e.nullable());
        // the cycle body alone: 2·3−2 = 4
        assert_eq!(parse("a((b|ε)a)a", &ab()).unwrap().width(), 4);
    }

    #[test]
    fn error_positions() {
        let err = parse("a(b", &ab()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
        assert_eq!(err.position, 3);

        let err = parse("a)b", &ab()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar(')'));
        assert_eq!(err.position, 1);

        let err = parse("ax", &ab()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnknownSymbol('x'));
        assert_eq!(err.position, 1);

        let err = parse("a{}", &ab()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MalformedRepetition);

        let err = parse("a{2", &ab()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MalformedRepetition);

        let err = parse("*a", &ab()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedChar('*'));

        let err = parse("", &ab()).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UnexpectedEnd);
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(parse("a b", &ab()).unwrap(), parse("ab", &ab()).unwrap());
    }

    #[test]
    fn canonical_form_reparses_identically() {
        let inputs = ["a(b|ε)*", "ab|b*a", "(a((b|ε)a){2}a)*", "∅*", "ε", "a{4}b"];
        for text in inputs {
            let e = parse(text, &ab()).unwrap();
            let printed = e.to_canonical_string(&ab());
            let reparsed = parse(&printed, &ab()).unwrap();
            assert_eq!(e, reparsed, "round-trip failed for {text} -> {printed}");
        }
    }
}
