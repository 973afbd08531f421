//! Textual syntax for terms and formulas, using the constructor names
//! directly:
//!
//! ```text
//! term     := "Var" NAT | "Fun" STRING termlist | "(" term ")"
//! termlist := "[" (term ("," term)*)? "]"
//! formula  := atom | ("Imp" | "Dis" | "Con") arg arg | ("Exi" | "Uni") arg | "(" formula ")"
//! arg      := atom | "(" formula ")"
//! atom     := "Falsity" | "Pre" STRING termlist
//! ```
//!
//! Strings are double-quoted without escapes. Whitespace between tokens is
//! ignored.

use std::fmt;

use thiserror::Error;

use crate::syntax::{Formula, Identifier, Term};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token<'s> {
    Word(&'s str),
    Str(&'s str),
    Nat(u64),
    Punct(char),
    End,
}

impl fmt::Display for Token<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Word(w) => write!(f, "`{w}`"),
            Token::Str(s) => write!(f, "\"{s}\""),
            Token::Nat(n) => write!(f, "{n}"),
            Token::Punct(c) => write!(f, "`{c}`"),
            Token::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn new(src: &'s str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn error(&self, offset: usize, expected: &[&'static str], found: impl fmt::Display) -> SyntaxError {
        SyntaxError {
            offset,
            expected: expected.to_vec(),
            found: found.to_string(),
        }
    }

    /// Reads the next token, returning it with its starting offset.
    fn next(&mut self, expected: &[&'static str]) -> Result<(usize, Token<'s>), SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(ch) = rest.chars().next() else {
            return Ok((start, Token::End));
        };
        let tok = if ch.is_ascii_alphabetic() {
            let len = rest.find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(rest.len());
            self.pos += len;
            Token::Word(&rest[..len])
        } else if ch.is_ascii_digit() {
            let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            self.pos += len;
            let n = rest[..len]
                .parse()
                .map_err(|_| self.error(start, &["index below 2^64"], &rest[..len]))?;
            Token::Nat(n)
        } else if ch == '"' {
            let body = &rest[1..];
            let Some(close) = body.find('"') else {
                return Err(self.error(start, &["closing `\"`"], "end of input"));
            };
            self.pos += close + 2;
            Token::Str(&body[..close])
        } else if "()[],".contains(ch) {
            self.pos += 1;
            Token::Punct(ch)
        } else {
            return Err(self.error(start, expected, format!("`{ch}`")));
        };
        Ok((start, tok))
    }

    fn peek(&mut self) -> Result<Token<'s>, SyntaxError> {
        let saved = self.pos;
        let tok = self.next(&[]).map(|(_, t)| t);
        self.pos = saved;
        tok
    }

    fn expect_punct(&mut self, c: char, name: &'static str) -> Result<(), SyntaxError> {
        match self.next(&[name])? {
            (_, Token::Punct(d)) if d == c => Ok(()),
            (at, tok) => Err(self.error(at, &[name], tok)),
        }
    }

    fn identifier(&mut self) -> Result<Identifier, SyntaxError> {
        match self.next(&["string"])? {
            (at, Token::Str(s)) => Identifier::new(s).map_err(|e| self.error(at, &["identifier"], e)),
            (at, tok) => Err(self.error(at, &["string"], tok)),
        }
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        const EXPECTED: &[&str] = &["`Var`", "`Fun`", "`(`"];
        match self.next(EXPECTED)? {
            (_, Token::Word("Var")) => match self.next(&["index"])? {
                (_, Token::Nat(n)) => Ok(Term::Var(n)),
                (at, tok) => Err(self.error(at, &["index"], tok)),
            },
            (_, Token::Word("Fun")) => {
                let name = self.identifier()?;
                Ok(Term::Fun(name, self.term_list()?))
            }
            (_, Token::Punct('(')) => {
                let t = self.term()?;
                self.expect_punct(')', "`)`")?;
                Ok(t)
            }
            (at, tok) => Err(self.error(at, EXPECTED, tok)),
        }
    }

    fn term_list(&mut self) -> Result<Vec<Term>, SyntaxError> {
        self.expect_punct('[', "`[`")?;
        let mut terms = Vec::new();
        if self.peek()? == Token::Punct(']') {
            self.next(&[])?;
            return Ok(terms);
        }
        loop {
            terms.push(self.term()?);
            match self.next(&["`,`", "`]`"])? {
                (_, Token::Punct(',')) => continue,
                (_, Token::Punct(']')) => return Ok(terms),
                (at, tok) => return Err(self.error(at, &["`,`", "`]`"], tok)),
            }
        }
    }

    /// A formula in argument position: an atom or a parenthesized formula.
    fn argument(&mut self) -> Result<Formula, SyntaxError> {
        const EXPECTED: &[&str] = &["`Falsity`", "`Pre`", "`(`"];
        match self.next(EXPECTED)? {
            (_, Token::Word("Falsity")) => Ok(Formula::Falsity),
            (_, Token::Word("Pre")) => {
                let name = self.identifier()?;
                Ok(Formula::Pre(name, self.term_list()?))
            }
            (_, Token::Punct('(')) => {
                let p = self.formula()?;
                self.expect_punct(')', "`)`")?;
                Ok(p)
            }
            (at, tok) => Err(self.error(at, EXPECTED, tok)),
        }
    }

    fn formula(&mut self) -> Result<Formula, SyntaxError> {
        const EXPECTED: &[&str] = &["`Falsity`", "`Pre`", "`Imp`", "`Dis`", "`Con`", "`Exi`", "`Uni`", "`(`"];
        let saved = self.pos;
        match self.next(EXPECTED)? {
            (_, Token::Word("Imp")) => Ok(Formula::imp(self.argument()?, self.argument()?)),
            (_, Token::Word("Dis")) => Ok(Formula::dis(self.argument()?, self.argument()?)),
            (_, Token::Word("Con")) => Ok(Formula::con(self.argument()?, self.argument()?)),
            (_, Token::Word("Exi")) => Ok(Formula::exi(self.argument()?)),
            (_, Token::Word("Uni")) => Ok(Formula::uni(self.argument()?)),
            (_, Token::Word("Falsity" | "Pre") | Token::Punct('(')) => {
                self.pos = saved;
                self.argument()
            }
            (at, tok) => Err(self.error(at, EXPECTED, tok)),
        }
    }

    fn finish<T>(mut self, value: T) -> Result<T, SyntaxError> {
        match self.next(&["end of input"])? {
            (_, Token::End) => Ok(value),
            (at, tok) => Err(self.error(at, &["end of input"], tok)),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, SyntaxError> {
    let mut parser = Parser::new(text);
    let p = parser.formula()?;
    parser.finish(p)
}

pub fn parse_term(text: &str) -> Result<Term, SyntaxError> {
    let mut parser = Parser::new(text);
    let t = parser.term()?;
    parser.finish(t)
}

fn write_term(out: &mut String, t: &Term) {
    match t {
        Term::Var(v) => {
            out.push_str("Var ");
            out.push_str(&v.to_string());
        }
        Term::Fun(name, args) => {
            out.push_str("Fun \"");
            out.push_str(name.as_str());
            out.push_str("\" ");
            write_term_list(out, args);
        }
    }
}

fn write_term_list(out: &mut String, l: &[Term]) {
    out.push('[');
    for (i, t) in l.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write_term(out, t);
    }
    out.push(']');
}

fn write_formula(out: &mut String, p: &Formula) {
    let (tag, args): (&str, [Option<&Formula>; 2]) = match p {
        Formula::Falsity => {
            out.push_str("Falsity");
            return;
        }
        Formula::Pre(name, terms) => {
            out.push_str("Pre \"");
            out.push_str(name.as_str());
            out.push_str("\" ");
            write_term_list(out, terms);
            return;
        }
        Formula::Imp(p, q) => ("Imp", [Some(p), Some(q)]),
        Formula::Dis(p, q) => ("Dis", [Some(p), Some(q)]),
        Formula::Con(p, q) => ("Con", [Some(p), Some(q)]),
        Formula::Exi(p) => ("Exi", [Some(p), None]),
        Formula::Uni(p) => ("Uni", [Some(p), None]),
    };
    out.push_str(tag);
    for arg in args.into_iter().flatten() {
        out.push(' ');
        write_argument(out, arg);
    }
}

/// Argument position: every formula except `Falsity` is parenthesized.
fn write_argument(out: &mut String, p: &Formula) {
    if *p == Formula::Falsity {
        out.push_str("Falsity");
    } else {
        out.push('(');
        write_formula(out, p);
        out.push(')');
    }
}

pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(&mut out, t);
    out
}

/// Canonical text of `p`. `parse_formula` inverts it.
pub fn print_formula(p: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, p);
    out
}

/// `p` as it appears as an argument: parenthesized unless it is `Falsity`.
pub fn print_argument(p: &Formula) -> String {
    let mut out = String::new();
    write_argument(&mut out, p);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> Identifier {
        Identifier::new(s).unwrap()
    }

    fn atom(name: &str) -> Formula {
        Formula::Pre(id(name), vec![])
    }

    const LISTING_GOAL: &str = r#"Imp (Con (Pre "P" []) (Imp (Pre "P" []) (Pre "Q" []))) (Pre "Q" [])"#;

    #[test]
    fn listing_goal_round_trips() {
        let (p, q) = (atom("P"), atom("Q"));
        let goal = Formula::imp(Formula::con(p.clone(), Formula::imp(p, q.clone())), q);
        assert_eq!(parse_formula(LISTING_GOAL).unwrap(), goal);
        assert_eq!(print_formula(&goal), LISTING_GOAL);
    }

    #[test]
    fn atoms_and_mixed_term_lists() {
        assert_eq!(parse_formula("Falsity").unwrap(), Formula::Falsity);
        assert_eq!(print_formula(&Formula::Falsity), "Falsity");
        let text = r#"Uni (Pre "P" [Var 0, Fun "f" [Var 1]])"#;
        let p = parse_formula(text).unwrap();
        assert_eq!(
            p,
            Formula::uni(Formula::Pre(
                id("P"),
                vec![Term::Var(0), Term::Fun(id("f"), vec![Term::Var(1)])]
            ))
        );
        assert_eq!(print_formula(&p), text);
    }

    #[test]
    fn whitespace_and_optional_parens() {
        let p = parse_formula("  Imp\tFalsity\n Pre \"P\"[ ]  ").unwrap();
        assert_eq!(p, Formula::imp(Formula::Falsity, atom("P")));
        assert_eq!(parse_formula("Imp (Falsity) (Pre \"P\" [])").unwrap(), p);
        assert_eq!(parse_formula("(Pre \"Q\" [])").unwrap(), atom("Q"));
        assert_eq!(
            parse_term("Fun \"f\" [(Var 2), Fun \"a\" []]").unwrap(),
            Term::Fun(id("f"), vec![Term::Var(2), Term::constant(id("a"))])
        );
        assert_eq!(parse_term("Var 2147483647").unwrap(), Term::Var(2_147_483_647));
    }

    #[test]
    fn errors_report_offset_and_expectations() {
        let err = parse_formula("Imp Imp Falsity Falsity Falsity").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.expected.contains(&"`(`"));
        assert_eq!(err.found, "`Imp`");

        let err = parse_formula("Pre \"P\" [Var 0,]").unwrap_err();
        assert_eq!(err.offset, 15);

        let err = parse_formula("Falsity Falsity").unwrap_err();
        assert_eq!(err.expected, vec!["end of input"]);

        assert!(parse_formula("Pre \"\" []").is_err());
        assert!(parse_formula("Pre \"P []").is_err());
        assert!(parse_formula("Not (Pre \"P\" [])").is_err());
        assert!(parse_formula("Pre \"P\" [Var -1]").is_err());
        assert!(parse_formula("").is_err());
        assert!(parse_term("Var 99999999999999999999999").is_err());
    }

    #[test]
    fn argument_printing() {
        assert_eq!(print_argument(&Formula::Falsity), "Falsity");
        assert_eq!(print_argument(&atom("Q")), "(Pre \"Q\" [])");
    }
}
