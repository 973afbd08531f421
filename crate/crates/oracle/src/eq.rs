//! The equations, one clause per match arm, in the order they are written.
//!
//! Lists are cons lists so that each `[]` / `t # l` clause maps to one arm.
//! `v -- 1` is truncated subtraction on naturals.

use std::rc::Rc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum List<T> {
    Nil,
    Cons(T, Rc<List<T>>),
}

impl<T: Clone> List<T> {
    pub fn from_vec(items: Vec<T>) -> List<T> {
        items
            .into_iter()
            .rev()
            .fold(List::Nil, |tail, x| List::Cons(x, Rc::new(tail)))
    }

    pub fn to_vec(&self) -> Vec<T> {
        let mut out = Vec::new();
        let mut cur = self;
        while let List::Cons(x, rest) = cur {
            out.push(x.clone());
            cur = rest;
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tm {
    Var(u64),
    Fun(String, Rc<List<Tm>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fm {
    Falsity,
    Pre(String, List<Tm>),
    Imp(Rc<Fm>, Rc<Fm>),
    Dis(Rc<Fm>, Rc<Fm>),
    Con(Rc<Fm>, Rc<Fm>),
    Exi(Rc<Fm>),
    Uni(Rc<Fm>),
}

fn cons<T>(x: T, l: List<T>) -> List<T> {
    List::Cons(x, Rc::new(l))
}

fn minus(v: u64, k: u64) -> u64 {
    v.saturating_sub(k)
}

pub fn member(p: &Fm, a: &List<Fm>) -> bool {
    match a {
        List::Nil => false,
        List::Cons(q, a) => {
            if p == q {
                true
            } else {
                member(p, a)
            }
        }
    }
}

pub fn new_term(c: &str, t: &Tm) -> bool {
    match t {
        Tm::Var(_) => true,
        Tm::Fun(i, l) => {
            if i == c {
                false
            } else {
                new_list(c, l)
            }
        }
    }
}

pub fn new_list(c: &str, l: &List<Tm>) -> bool {
    match l {
        List::Nil => true,
        List::Cons(t, l) => {
            if new_term(c, t) {
                new_list(c, l)
            } else {
                false
            }
        }
    }
}

pub fn new(c: &str, p: &Fm) -> bool {
    match p {
        Fm::Falsity => true,
        Fm::Pre(_, l) => new_list(c, l),
        Fm::Imp(p, q) => {
            if new(c, p) {
                new(c, q)
            } else {
                false
            }
        }
        Fm::Dis(p, q) => {
            if new(c, p) {
                new(c, q)
            } else {
                false
            }
        }
        Fm::Con(p, q) => {
            if new(c, p) {
                new(c, q)
            } else {
                false
            }
        }
        Fm::Exi(p) => new(c, p),
        Fm::Uni(p) => new(c, p),
    }
}

pub fn news(c: &str, a: &List<Fm>) -> bool {
    match a {
        List::Nil => true,
        List::Cons(p, a) => {
            if new(c, p) {
                news(c, a)
            } else {
                false
            }
        }
    }
}

pub fn inc_term(t: &Tm) -> Tm {
    match t {
        Tm::Var(v) => Tm::Var(v + 1),
        Tm::Fun(i, l) => Tm::Fun(i.clone(), Rc::new(inc_list(l))),
    }
}

pub fn inc_list(l: &List<Tm>) -> List<Tm> {
    match l {
        List::Nil => List::Nil,
        List::Cons(t, l) => cons(inc_term(t), inc_list(l)),
    }
}

pub fn sub_term(n: u64, s: &Tm, t: &Tm) -> Tm {
    match t {
        Tm::Var(v) => {
            if *v == n {
                s.clone()
            } else if *v > n {
                Tm::Var(minus(*v, 1))
            } else {
                Tm::Var(*v)
            }
        }
        Tm::Fun(i, l) => Tm::Fun(i.clone(), Rc::new(sub_list(n, s, l))),
    }
}

pub fn sub_list(n: u64, s: &Tm, l: &List<Tm>) -> List<Tm> {
    match l {
        List::Nil => List::Nil,
        List::Cons(t, l) => cons(sub_term(n, s, t), sub_list(n, s, l)),
    }
}

pub fn sub(n: u64, s: &Tm, p: &Fm) -> Fm {
    match p {
        Fm::Falsity => Fm::Falsity,
        Fm::Pre(i, l) => Fm::Pre(i.clone(), sub_list(n, s, l)),
        Fm::Imp(p, q) => Fm::Imp(Rc::new(sub(n, s, p)), Rc::new(sub(n, s, q))),
        Fm::Dis(p, q) => Fm::Dis(Rc::new(sub(n, s, p)), Rc::new(sub(n, s, q))),
        Fm::Con(p, q) => Fm::Con(Rc::new(sub(n, s, p)), Rc::new(sub(n, s, q))),
        Fm::Exi(p) => Fm::Exi(Rc::new(sub(n + 1, &inc_term(s), p))),
        Fm::Uni(p) => Fm::Uni(Rc::new(sub(n + 1, &inc_term(s), p))),
    }
}

/// The environment `e`.
pub type Env<'a> = &'a dyn Fn(u64) -> usize;
/// The function map `f`.
pub type Funs<'a> = &'a dyn Fn(&str, &List<usize>) -> usize;
/// The predicate map `g`.
pub type Preds<'a> = &'a dyn Fn(&str, &List<usize>) -> bool;

pub fn semantics_term(e: Env, f: Funs, t: &Tm) -> usize {
    match t {
        Tm::Var(v) => e(*v),
        Tm::Fun(i, l) => f(i, &semantics_list(e, f, l)),
    }
}

pub fn semantics_list(e: Env, f: Funs, l: &List<Tm>) -> List<usize> {
    match l {
        List::Nil => List::Nil,
        List::Cons(t, l) => cons(semantics_term(e, f, t), semantics_list(e, f, l)),
    }
}

/// The semantics over the universe `0..size`; the quantifiers range over
/// that universe.
pub fn semantics(size: usize, e: Env, f: Funs, g: Preds, p: &Fm) -> bool {
    match p {
        Fm::Falsity => false,
        Fm::Pre(i, l) => g(i, &semantics_list(e, f, l)),
        Fm::Imp(p, q) => {
            if semantics(size, e, f, g, p) {
                semantics(size, e, f, g, q)
            } else {
                true
            }
        }
        Fm::Dis(p, q) => {
            if semantics(size, e, f, g, p) {
                true
            } else {
                semantics(size, e, f, g, q)
            }
        }
        Fm::Con(p, q) => {
            if semantics(size, e, f, g, p) {
                semantics(size, e, f, g, q)
            } else {
                false
            }
        }
        Fm::Exi(p) => (0..size).any(|x| {
            let e2 = |n: u64| if n == 0 { x } else { e(minus(n, 1)) };
            semantics(size, &e2, f, g, p)
        }),
        Fm::Uni(p) => (0..size).all(|x| {
            let e2 = |n: u64| if n == 0 { x } else { e(minus(n, 1)) };
            semantics(size, &e2, f, g, p)
        }),
    }
}
