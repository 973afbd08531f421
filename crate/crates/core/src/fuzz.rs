//! Random terms, formulas and accepted proofs.
//!
//! Proofs are grown backwards through a [`Session`]: starting from a random
//! goal, random applicable rules with random witnesses are applied to open
//! goals up to a depth cap. Goals left open are then closed by appending
//! their formulas to the root assumption list, which every rule passes down
//! unchanged at the tail, and replaying the same steps over the extended
//! list. Candidates whose replay fails (a freshness condition broken by the
//! extra assumptions) are discarded.
//!
//! Fixed generation parameters: depth cap 6, witness terms from the
//! constants "a", "b", "d" and the unary function "f", eigen-constants named
//! `k0`, `k1`, ... so they never clash with the pool.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::kernel::{applicable_rules, check, expand, Goal, ProofNode, Rule, RuleArgs};
use crate::prover::{OpenProofNode, Session, Status};
use crate::subst::member;
use crate::syntax::{Formula, Identifier, Term};

pub const DEPTH_CAP: usize = 6;

fn ident(name: &str) -> Identifier {
    Identifier::new(name).expect("static identifier")
}

/// Shape limits for random terms and formulas.
#[derive(Clone, Debug)]
pub struct FormulaGen {
    /// Predicate names with arities.
    pub preds: Vec<(Identifier, usize)>,
    pub constants: Vec<Identifier>,
    pub unary: Vec<Identifier>,
    /// Variable indices are drawn from `0..max_var`.
    pub max_var: u64,
    pub formula_depth: usize,
    pub term_depth: usize,
}

impl Default for FormulaGen {
    fn default() -> Self {
        FormulaGen {
            preds: vec![(ident("P"), 0), (ident("Q"), 0), (ident("R"), 1), (ident("S"), 2)],
            constants: ["a", "b", "d"].map(ident).to_vec(),
            unary: vec![ident("f")],
            max_var: 3,
            formula_depth: 3,
            term_depth: 2,
        }
    }
}

impl FormulaGen {
    pub fn term<R: Rng>(&self, rng: &mut R) -> Term {
        self.term_at(rng, self.term_depth)
    }

    fn term_at<R: Rng>(&self, rng: &mut R, depth: usize) -> Term {
        match rng.gen_range(0..if depth == 0 { 2 } else { 3 }) {
            0 if self.max_var > 0 => Term::Var(rng.gen_range(0..self.max_var)),
            0 | 1 => Term::constant(self.constants.choose(rng).expect("constant pool").clone()),
            _ => {
                let f = self.unary.choose(rng).expect("function pool").clone();
                Term::Fun(f, vec![self.term_at(rng, depth - 1)])
            }
        }
    }

    /// A closed term from the witness pool.
    pub fn pool_term<R: Rng>(&self, rng: &mut R) -> Term {
        let c = Term::constant(self.constants.choose(rng).expect("constant pool").clone());
        if rng.gen_bool(0.25) {
            Term::Fun(self.unary.choose(rng).expect("function pool").clone(), vec![c])
        } else {
            c
        }
    }

    pub fn formula<R: Rng>(&self, rng: &mut R) -> Formula {
        self.formula_at(rng, self.formula_depth)
    }

    fn atom<R: Rng>(&self, rng: &mut R) -> Formula {
        if rng.gen_bool(0.1) {
            return Formula::Falsity;
        }
        let (name, arity) = self.preds.choose(rng).expect("predicate pool").clone();
        Formula::Pre(name, (0..arity).map(|_| self.term(rng)).collect())
    }

    fn formula_at<R: Rng>(&self, rng: &mut R, depth: usize) -> Formula {
        if depth == 0 || rng.gen_bool(0.25) {
            return self.atom(rng);
        }
        let sub = |rng: &mut R| self.formula_at(rng, depth - 1);
        match rng.gen_range(0..5) {
            0 => Formula::imp(sub(rng), sub(rng)),
            1 => Formula::dis(sub(rng), sub(rng)),
            2 => Formula::con(sub(rng), sub(rng)),
            3 => Formula::exi(sub(rng)),
            _ => Formula::uni(sub(rng)),
        }
    }
}

/// Rebuilds `p` as a body whose instance at the closed term `t` is `p`:
/// some occurrences of `t` become the bound variable, every free index
/// moves up by one.
fn abstract_term<R: Rng>(rng: &mut R, p: &Formula, t: &Term) -> Formula {
    fn term<R: Rng>(rng: &mut R, s: &Term, t: &Term, depth: u64) -> Term {
        if s == t && rng.gen_bool(0.7) {
            return Term::Var(depth);
        }
        match s {
            Term::Var(v) if *v >= depth => Term::Var(v + 1),
            Term::Var(v) => Term::Var(*v),
            Term::Fun(f, args) => Term::Fun(f.clone(), args.iter().map(|a| term(rng, a, t, depth)).collect()),
        }
    }
    fn go<R: Rng>(rng: &mut R, p: &Formula, t: &Term, depth: u64) -> Formula {
        match p {
            Formula::Falsity => Formula::Falsity,
            Formula::Pre(i, l) => Formula::Pre(i.clone(), l.iter().map(|s| term(rng, s, t, depth)).collect()),
            Formula::Imp(p, q) => Formula::imp(go(rng, p, t, depth), go(rng, q, t, depth)),
            Formula::Dis(p, q) => Formula::dis(go(rng, p, t, depth), go(rng, q, t, depth)),
            Formula::Con(p, q) => Formula::con(go(rng, p, t, depth), go(rng, q, t, depth)),
            Formula::Exi(p) => Formula::exi(go(rng, p, t, depth + 1)),
            Formula::Uni(p) => Formula::uni(go(rng, p, t, depth + 1)),
        }
    }
    go(rng, p, t, 0)
}

/// Closed terms occurring in a formula.
fn closed_terms(p: &Formula, out: &mut Vec<Term>) {
    fn term(t: &Term, out: &mut Vec<Term>) -> bool {
        match t {
            Term::Var(_) => false,
            Term::Fun(_, args) => {
                let mut closed = true;
                for a in args {
                    closed &= term(a, out);
                }
                if closed && !out.contains(t) {
                    out.push(t.clone());
                }
                closed
            }
        }
    }
    match p {
        Formula::Falsity => {}
        Formula::Pre(_, l) => l.iter().for_each(|t| {
            term(t, out);
        }),
        Formula::Imp(p, q) | Formula::Dis(p, q) | Formula::Con(p, q) => {
            closed_terms(p, out);
            closed_terms(q, out);
        }
        Formula::Exi(p) | Formula::Uni(p) => closed_terms(p, out),
    }
}

/// Counters for one fuzzing run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenStats {
    pub attempts: u64,
    pub discarded: u64,
    pub rule_uses: [u64; 14],
}

impl GenStats {
    pub fn count(&self, rule: Rule) -> u64 {
        self.rule_uses[rule as usize]
    }
}

pub struct ProofGen {
    pub formulas: FormulaGen,
    pub depth_cap: usize,
    fresh: usize,
}

impl Default for ProofGen {
    fn default() -> Self {
        ProofGen {
            formulas: FormulaGen::default(),
            depth_cap: DEPTH_CAP,
            fresh: 0,
        }
    }
}

impl ProofGen {
    fn fresh_constant(&mut self) -> Identifier {
        self.fresh += 1;
        ident(&format!("k{}", self.fresh - 1))
    }

    /// A formula for a witness slot: usually something already in sight.
    fn witness_formula<R: Rng>(&self, rng: &mut R, goal: &Goal) -> Formula {
        if !goal.assumptions.is_empty() && rng.gen_bool(0.5) {
            let a = goal.assumptions.choose(rng).expect("nonempty").clone();
            // the pieces of an assumption make useful cut formulas
            return match a {
                Formula::Imp(p, _) | Formula::Dis(p, _) | Formula::Con(p, _) if rng.gen_bool(0.5) => *p,
                Formula::Imp(_, q) | Formula::Dis(_, q) | Formula::Con(_, q) if rng.gen_bool(0.5) => *q,
                other => other,
            };
        }
        let mut small = self.formulas.clone();
        small.formula_depth = 1;
        small.formula(rng)
    }

    fn witness_term<R: Rng>(&self, rng: &mut R, goal: &Goal) -> Term {
        let mut seen = Vec::new();
        closed_terms(&goal.formula, &mut seen);
        if !seen.is_empty() && rng.gen_bool(0.6) {
            return seen.choose(rng).expect("nonempty").clone();
        }
        self.formulas.pool_term(rng)
    }

    /// Picks a rule for `goal` and witnesses that fit it.
    fn random_step<R: Rng>(&mut self, rng: &mut R, goal: &Goal) -> (Rule, RuleArgs) {
        let rules = applicable_rules(goal);
        let weight = |r: &Rule| match r {
            Rule::Assume => 0,
            Rule::ImpI | Rule::DisI1 | Rule::DisI2 | Rule::ConI | Rule::ExiI | Rule::UniI => 6,
            Rule::Boole => 1,
            _ => 2,
        };
        let rule = *rules
            .choose_weighted(rng, weight)
            .unwrap_or(&Rule::Boole);
        let args = match rule {
            Rule::ImpE | Rule::ConE2 => RuleArgs::none().with_p(self.witness_formula(rng, goal)),
            Rule::ConE1 => RuleArgs::none().with_q(self.witness_formula(rng, goal)),
            Rule::DisE => RuleArgs::none()
                .with_p(self.witness_formula(rng, goal))
                .with_q(self.witness_formula(rng, goal)),
            Rule::ExiE => {
                let t = self.formulas.pool_term(rng);
                let instance = self.witness_formula(rng, goal);
                let body = abstract_term(rng, &instance, &t);
                RuleArgs::none().with_p(body).with_c(self.fresh_constant())
            }
            Rule::ExiI => RuleArgs::none().with_t(self.witness_term(rng, goal)),
            Rule::UniE => {
                let t = self.witness_term(rng, goal);
                RuleArgs::none().with_p(abstract_term(rng, &goal.formula, &t)).with_t(t)
            }
            Rule::UniI => RuleArgs::none().with_c(self.fresh_constant()),
            _ => RuleArgs::none(),
        };
        (rule, args)
    }

    /// Tries once to produce an accepted proof; `None` when the candidate is
    /// discarded.
    pub fn attempt<R: Rng>(&mut self, rng: &mut R, stats: &mut GenStats) -> Option<ProofNode> {
        stats.attempts += 1;
        let root_goal = Goal::new(
            self.formulas.formula(rng),
            (0..rng.gen_range(0..=2)).map(|_| self.formulas.formula(rng)).collect(),
        );
        let mut session = Session::from_goal(root_goal.clone());
        // grow: at most a few steps per open goal, never past the depth cap
        for _ in 0..4 * self.depth_cap {
            let frontier: Vec<Vec<usize>> = session
                .open_paths()
                .into_iter()
                .filter(|p| p.len() < self.depth_cap)
                .collect();
            let Some(path) = frontier.choose(rng).cloned() else {
                break;
            };
            let goal = session.current().at(&path).expect("open path").goal.clone();
            let (rule, args) = self.random_step(rng, &goal);
            // a rejected witness just leaves the goal open for another try
            let _ = session.apply(&path, rule, args);
        }

        let tree = session.current();
        let mut extra: Vec<Formula> = Vec::new();
        for path in tree.open_paths() {
            let f = &tree.at(&path).expect("open path").goal.formula;
            if !extra.contains(f) {
                extra.push(f.clone());
            }
        }
        let mut assumptions = root_goal.assumptions;
        assumptions.extend(extra);
        let proof = rebase(tree, Goal::new(root_goal.formula, assumptions));
        match proof {
            Some(proof) if check(&proof).is_accepted() => {
                for (_, node) in proof.walk() {
                    stats.rule_uses[node.rule as usize] += 1;
                }
                Some(proof)
            }
            _ => {
                stats.discarded += 1;
                None
            }
        }
    }

    /// Generates proofs until `count` are accepted.
    pub fn generate<R: Rng>(&mut self, rng: &mut R, count: usize, stats: &mut GenStats) -> Vec<ProofNode> {
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            if let Some(p) = self.attempt(rng, stats) {
                out.push(p);
            }
        }
        out
    }
}

/// Replays the steps of `node` starting from `goal`. Any goal found among its
/// assumptions is closed by `Assume` on the spot, as a session would do, so
/// the result is reachable by replaying it in a [`Session`].
fn rebase(node: &OpenProofNode, goal: Goal) -> Option<ProofNode> {
    if member(&goal.formula, &goal.assumptions) {
        return Some(ProofNode::new(goal, Rule::Assume, RuleArgs::none(), Vec::new()));
    }
    match &node.status {
        Status::Open => None,
        Status::Closed { rule, args, children } => {
            let premises = expand(&goal, *rule, args).ok()?;
            let kids = premises
                .into_iter()
                .zip(children)
                .map(|(g, child)| rebase(child, g))
                .collect::<Option<Vec<_>>>()?;
            Some(ProofNode::new(goal, *rule, args.clone(), kids))
        }
    }
}
