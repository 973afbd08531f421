//! Terms and formulas of first-order logic with de Bruijn indices.
//!
//! Variables carry no names: `Var 0` refers to the nearest enclosing
//! quantifier, `Var 1` to the one outside it, and so on. Indices that reach
//! past every enclosing quantifier are free. Truth, negation and
//! biimplication are not constructors; [`truth`], [`neg`] and [`iff`] expand
//! into the seven primitive forms.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Name of a function or predicate symbol.
///
/// Any nonempty string without double quotes or control characters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Identifier(Arc<str>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentifierError {
    #[error("identifier is empty")]
    Empty,
    #[error("identifier {0:?} contains a double quote or control character")]
    BadCharacter(String),
}

impl Identifier {
    pub fn new(name: &str) -> Result<Self, IdentifierError> {
        if name.is_empty() {
            return Err(IdentifierError::Empty);
        }
        if name.chars().any(|ch| ch == '"' || ch.is_control()) {
            return Err(IdentifierError::BadCharacter(name.to_string()));
        }
        Ok(Identifier(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::str::FromStr for Identifier {
    type Err = IdentifierError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identifier::new(s)
    }
}

impl std::borrow::Borrow<str> for Identifier {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Identifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Identifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(u64),
    Fun(Identifier, Vec<Term>),
}

impl Term {
    /// A constant, i.e. `Fun c []`.
    pub fn constant(c: Identifier) -> Term {
        Term::Fun(c, Vec::new())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Falsity,
    Pre(Identifier, Vec<Term>),
    Imp(Box<Formula>, Box<Formula>),
    Dis(Box<Formula>, Box<Formula>),
    Con(Box<Formula>, Box<Formula>),
    Exi(Box<Formula>),
    Uni(Box<Formula>),
}

impl Formula {
    pub fn imp(p: Formula, q: Formula) -> Formula {
        Formula::Imp(Box::new(p), Box::new(q))
    }

    pub fn dis(p: Formula, q: Formula) -> Formula {
        Formula::Dis(Box::new(p), Box::new(q))
    }

    pub fn con(p: Formula, q: Formula) -> Formula {
        Formula::Con(Box::new(p), Box::new(q))
    }

    pub fn exi(p: Formula) -> Formula {
        Formula::Exi(Box::new(p))
    }

    pub fn uni(p: Formula) -> Formula {
        Formula::Uni(Box::new(p))
    }

    /// `Falsity` and `Pre` are atoms; everything else is compound.
    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Falsity | Formula::Pre(..))
    }

    /// Number of constructor nodes, terms excluded.
    pub fn size(&self) -> usize {
        match self {
            Formula::Falsity | Formula::Pre(..) => 1,
            Formula::Imp(p, q) | Formula::Dis(p, q) | Formula::Con(p, q) => 1 + p.size() + q.size(),
            Formula::Exi(p) | Formula::Uni(p) => 1 + p.size(),
        }
    }
}

/// `⊤`, defined as `Imp Falsity Falsity`.
pub fn truth() -> Formula {
    Formula::imp(Formula::Falsity, Formula::Falsity)
}

/// `¬p`, defined as `Imp p Falsity`.
pub fn neg(p: Formula) -> Formula {
    Formula::imp(p, Formula::Falsity)
}

/// `p ↔ q`, defined as `Con (Imp p q) (Imp q p)`.
pub fn iff(p: Formula, q: Formula) -> Formula {
    Formula::con(Formula::imp(p.clone(), q.clone()), Formula::imp(q, p))
}

/// Largest free de Bruijn index of `p`, measured from outside `p`.
///
/// Under `k` binders an occurrence of `Var v` is free when `v >= k` and
/// denotes the outer index `v - k`.
pub fn max_var_index(p: &Formula) -> Option<u64> {
    fn term(t: &Term, depth: u64, acc: &mut Option<u64>) {
        match t {
            Term::Var(v) if *v >= depth => {
                let free = v - depth;
                *acc = Some(acc.map_or(free, |m| m.max(free)));
            }
            Term::Var(_) => {}
            Term::Fun(_, args) => args.iter().for_each(|a| term(a, depth, acc)),
        }
    }

    fn formula(p: &Formula, depth: u64, acc: &mut Option<u64>) {
        match p {
            Formula::Falsity => {}
            Formula::Pre(_, args) => args.iter().for_each(|a| term(a, depth, acc)),
            Formula::Imp(p, q) | Formula::Dis(p, q) | Formula::Con(p, q) => {
                formula(p, depth, acc);
                formula(q, depth, acc);
            }
            Formula::Exi(p) | Formula::Uni(p) => formula(p, depth + 1, acc),
        }
    }

    let mut acc = None;
    formula(p, 0, &mut acc);
    acc
}

/// Function symbols `(name, arity)` of a term, appended in first-occurrence order.
pub(crate) fn collect_term_symbols(t: &Term, funcs: &mut Vec<(Identifier, usize)>) {
    if let Term::Fun(id, args) = t {
        let key = (id.clone(), args.len());
        if !funcs.contains(&key) {
            funcs.push(key);
        }
        for a in args {
            collect_term_symbols(a, funcs);
        }
    }
}

/// Function and predicate symbols of a formula, each keyed by name and arity.
pub(crate) fn collect_symbols(
    p: &Formula,
    funcs: &mut Vec<(Identifier, usize)>,
    preds: &mut Vec<(Identifier, usize)>,
) {
    match p {
        Formula::Falsity => {}
        Formula::Pre(id, args) => {
            let key = (id.clone(), args.len());
            if !preds.contains(&key) {
                preds.push(key);
            }
            for a in args {
                collect_term_symbols(a, funcs);
            }
        }
        Formula::Imp(p, q) | Formula::Dis(p, q) | Formula::Con(p, q) => {
            collect_symbols(p, funcs, preds);
            collect_symbols(q, funcs, preds);
        }
        Formula::Exi(p) | Formula::Uni(p) => collect_symbols(p, funcs, preds),
    }
}
