//! Auxiliary functions used by the side conditions of the rules:
//! assumption membership, freshness of identifiers, index shifting and
//! substitution.
//!
//! All of them are total primitive recursions. There is no capture check
//! because with de Bruijn indices capture cannot happen.

use crate::syntax::{Formula, Identifier, Term};

/// Whether `p` occurs (structurally) in the assumption list `a`.
pub fn member(p: &Formula, a: &[Formula]) -> bool {
    a.iter().any(|q| q == p)
}

/// Whether the identifier `c` does not occur as a function symbol in `t`.
pub fn new_term(c: &Identifier, t: &Term) -> bool {
    match t {
        Term::Var(_) => true,
        Term::Fun(i, l) => i != c && new_list(c, l),
    }
}

pub fn new_list(c: &Identifier, l: &[Term]) -> bool {
    l.iter().all(|t| new_term(c, t))
}

/// Whether `c` occurs in no term of `p`.
///
/// Predicate names are not checked: only terms can mention `c`.
pub fn new(c: &Identifier, p: &Formula) -> bool {
    match p {
        Formula::Falsity => true,
        Formula::Pre(_, l) => new_list(c, l),
        Formula::Imp(p, q) | Formula::Dis(p, q) | Formula::Con(p, q) => new(c, p) && new(c, q),
        Formula::Exi(p) | Formula::Uni(p) => new(c, p),
    }
}

pub fn news(c: &Identifier, a: &[Formula]) -> bool {
    a.iter().all(|p| new(c, p))
}

/// Increments every variable index in `t` by one.
pub fn inc_term(t: &Term) -> Term {
    match t {
        Term::Var(v) => Term::Var(v + 1),
        Term::Fun(i, l) => Term::Fun(i.clone(), inc_list(l)),
    }
}

pub fn inc_list(l: &[Term]) -> Vec<Term> {
    l.iter().map(inc_term).collect()
}

/// Replaces `Var n` by `s` and lowers every index above `n` by one.
pub fn sub_term(n: u64, s: &Term, t: &Term) -> Term {
    match t {
        Term::Var(v) if *v == n => s.clone(),
        Term::Var(v) if *v > n => Term::Var(v - 1),
        Term::Var(v) => Term::Var(*v),
        Term::Fun(i, l) => Term::Fun(i.clone(), sub_list(n, s, l)),
    }
}

pub fn sub_list(n: u64, s: &Term, l: &[Term]) -> Vec<Term> {
    l.iter().map(|t| sub_term(n, s, t)).collect()
}

/// Substitutes `s` for index `n` in `p`, removing that index.
///
/// This is substitute-and-unbind, not plain replacement: indices above `n`
/// move down by one. It is meant for instantiating the body of the
/// outermost quantifier, e.g. `sub 0 t p` turns the body of `Uni p` into
/// its instance at `t`. Under each quantifier the target index and `s` are
/// shifted up by one.
pub fn sub(n: u64, s: &Term, p: &Formula) -> Formula {
    match p {
        Formula::Falsity => Formula::Falsity,
        Formula::Pre(i, l) => Formula::Pre(i.clone(), sub_list(n, s, l)),
        Formula::Imp(p, q) => Formula::imp(sub(n, s, p), sub(n, s, q)),
        Formula::Dis(p, q) => Formula::dis(sub(n, s, p), sub(n, s, q)),
        Formula::Con(p, q) => Formula::con(sub(n, s, p), sub(n, s, q)),
        Formula::Exi(p) => Formula::exi(sub(n + 1, &inc_term(s), p)),
        Formula::Uni(p) => Formula::uni(sub(n + 1, &inc_term(s), p)),
    }
}
