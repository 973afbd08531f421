#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use natded_core::fuzz::FormulaGen;
use natded_core::kernel::ArgSlot;
use natded_core::{Formula, Goal, Identifier, Rule, RuleArgs, Term};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ident(name: &str) -> Identifier {
    Identifier::new(name).unwrap()
}

pub fn gen(formula_depth: usize, term_depth: usize) -> FormulaGen {
    FormulaGen {
        formula_depth,
        term_depth,
        ..FormulaGen::default()
    }
}

/// Identifiers worth testing freshness against: the generator's pool, a
/// predicate name and one that never occurs.
pub fn candidate_identifier<R: Rng>(rng: &mut R) -> Identifier {
    ident(["a", "b", "d", "f", "P", "k"].choose(rng).unwrap())
}

pub fn term_list<R: Rng>(rng: &mut R, g: &FormulaGen) -> Vec<Term> {
    (0..rng.gen_range(0..4)).map(|_| g.term(rng)).collect()
}

pub fn formula_list<R: Rng>(rng: &mut R, g: &FormulaGen) -> Vec<Formula> {
    (0..rng.gen_range(0..4)).map(|_| g.formula(rng)).collect()
}

pub fn subformulas(p: &Formula, out: &mut Vec<Formula>) {
    out.push(p.clone());
    match p {
        Formula::Falsity | Formula::Pre(..) => {}
        Formula::Imp(p, q) | Formula::Dis(p, q) | Formula::Con(p, q) => {
            subformulas(p, out);
            subformulas(q, out);
        }
        Formula::Exi(p) | Formula::Uni(p) => subformulas(p, out),
    }
}

/// Random witnesses for `rule`, drawn mostly from subformulas of the goal so
/// that a useful fraction of applications succeed.
pub fn random_args<R: Rng>(rng: &mut R, g: &FormulaGen, rule: Rule, goal: &Goal, fresh: &mut usize) -> RuleArgs {
    let mut pool = Vec::new();
    subformulas(&goal.formula, &mut pool);
    for a in &goal.assumptions {
        subformulas(a, &mut pool);
    }
    let mut args = RuleArgs::none();
    for spec in rule.arg_specs() {
        if !spec.required && rng.gen_bool(0.5) {
            continue;
        }
        match spec.slot {
            ArgSlot::P | ArgSlot::Q => {
                let f = if rng.gen_bool(0.8) {
                    pool.choose(rng).unwrap().clone()
                } else {
                    g.formula(rng)
                };
                if spec.slot == ArgSlot::P {
                    args.p = Some(f);
                } else {
                    args.q = Some(f);
                }
            }
            ArgSlot::T => args.t = Some(g.pool_term(rng)),
            ArgSlot::C => {
                args.c = Some(if rng.gen_bool(0.8) {
                    *fresh += 1;
                    ident(&format!("k{fresh}"))
                } else {
                    candidate_identifier(rng)
                })
            }
        }
    }
    args
}
