//! Conversions from core values to oracle values.

use std::collections::HashMap;
use std::rc::Rc;

use natded_core::semantics::Interpretation;
use natded_core::{Formula, Term};

use crate::eq::{self, Fm, List, Tm};

pub fn term(t: &Term) -> Tm {
    match t {
        Term::Var(v) => Tm::Var(*v),
        Term::Fun(i, l) => Tm::Fun(i.as_str().to_owned(), Rc::new(terms(l))),
    }
}

pub fn terms(l: &[Term]) -> List<Tm> {
    List::from_vec(l.iter().map(term).collect())
}

pub fn formula(p: &Formula) -> Fm {
    match p {
        Formula::Falsity => Fm::Falsity,
        Formula::Pre(i, l) => Fm::Pre(i.as_str().to_owned(), terms(l)),
        Formula::Imp(p, q) => Fm::Imp(Rc::new(formula(p)), Rc::new(formula(q))),
        Formula::Dis(p, q) => Fm::Dis(Rc::new(formula(p)), Rc::new(formula(q))),
        Formula::Con(p, q) => Fm::Con(Rc::new(formula(p)), Rc::new(formula(q))),
        Formula::Exi(p) => Fm::Exi(Rc::new(formula(p))),
        Formula::Uni(p) => Fm::Uni(Rc::new(formula(p))),
    }
}

pub fn formulas(a: &[Formula]) -> List<Fm> {
    List::from_vec(a.iter().map(formula).collect())
}

/// An interpretation read out through its public accessors into plain
/// lookup tables.
pub struct Model {
    size: usize,
    env: Vec<usize>,
    default: usize,
    funcs: HashMap<(String, usize), Vec<usize>>,
    preds: HashMap<(String, usize), Vec<bool>>,
}

impl Model {
    pub fn of(m: &Interpretation) -> Model {
        let (env, default) = m.env();
        Model {
            size: m.universe_size(),
            env: env.to_vec(),
            default,
            funcs: m
                .functions()
                .map(|(i, a, t)| ((i.as_str().to_owned(), a), t.to_vec()))
                .collect(),
            preds: m
                .predicates()
                .map(|(i, a, t)| ((i.as_str().to_owned(), a), t.to_vec()))
                .collect(),
        }
    }

    fn slot(&self, args: &List<usize>) -> (usize, usize) {
        let args = args.to_vec();
        let mut index = 0;
        for x in &args {
            index = index * self.size + x;
        }
        (args.len(), index)
    }

    /// Evaluates `p` with the oracle semantics. Panics on a symbol with no
    /// table.
    pub fn eval(&self, p: &Fm) -> bool {
        let e = |n: u64| usize::try_from(n).ok().and_then(|n| self.env.get(n)).copied().unwrap_or(self.default);
        let f = |i: &str, l: &List<usize>| {
            let (arity, k) = self.slot(l);
            self.funcs[&(i.to_owned(), arity)][k]
        };
        let g = |i: &str, l: &List<usize>| {
            let (arity, k) = self.slot(l);
            self.preds[&(i.to_owned(), arity)][k]
        };
        eq::semantics(self.size, &e, &f, &g, p)
    }
}
