//! The `OK p a` judgment: fourteen rule schemas and a checker for complete
//! proof trees.
//!
//! Rules are read backwards. [`expand`] takes a goal, a rule and the
//! witnesses the conclusion cannot determine, and returns the premises in
//! the order the rule lists them. [`check`] runs the same expansion at every
//! node of a tree and compares the result with the node's children, so the
//! kernel has exactly one place where the calculus is defined.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::subst::{member, new, news, sub};
use crate::syntax::{Formula, Identifier, Term};

/// A judgment `OK formula assumptions`.
///
/// Assumptions form an ordered list: order and repetition matter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Goal {
    pub formula: Formula,
    pub assumptions: Vec<Formula>,
}

impl Goal {
    pub fn new(formula: Formula, assumptions: Vec<Formula>) -> Goal {
        Goal { formula, assumptions }
    }

    /// A goal with no assumptions.
    pub fn closed(formula: Formula) -> Goal {
        Goal::new(formula, Vec::new())
    }

    /// The list `p # a`.
    fn assume(&self, p: Formula) -> Vec<Formula> {
        let mut list = Vec::with_capacity(self.assumptions.len() + 1);
        list.push(p);
        list.extend(self.assumptions.iter().cloned());
        list
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Assume,
    Boole,
    ImpE,
    ImpI,
    DisE,
    DisI1,
    DisI2,
    ConE1,
    ConE2,
    ConI,
    ExiE,
    ExiI,
    UniE,
    UniI,
}

/// The slots a rule may take a witness in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgSlot {
    P,
    Q,
    T,
    C,
}

impl ArgSlot {
    pub fn name(self) -> &'static str {
        match self {
            ArgSlot::P => "p",
            ArgSlot::Q => "q",
            ArgSlot::T => "t",
            ArgSlot::C => "c",
        }
    }

    /// What kind of value the slot holds: `formula`, `term` or `identifier`.
    pub fn kind(self) -> &'static str {
        match self {
            ArgSlot::P | ArgSlot::Q => "formula",
            ArgSlot::T => "term",
            ArgSlot::C => "identifier",
        }
    }
}

/// A witness slot together with whether the rule requires it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArgSpec {
    pub slot: ArgSlot,
    pub required: bool,
}

const REQ_P: ArgSpec = ArgSpec { slot: ArgSlot::P, required: true };
const REQ_Q: ArgSpec = ArgSpec { slot: ArgSlot::Q, required: true };
const REQ_T: ArgSpec = ArgSpec { slot: ArgSlot::T, required: true };
const REQ_C: ArgSpec = ArgSpec { slot: ArgSlot::C, required: true };
const OPT_P: ArgSpec = ArgSpec { slot: ArgSlot::P, required: false };

impl Rule {
    pub const ALL: [Rule; 14] = [
        Rule::Assume,
        Rule::Boole,
        Rule::ImpE,
        Rule::ImpI,
        Rule::DisE,
        Rule::DisI1,
        Rule::DisI2,
        Rule::ConE1,
        Rule::ConE2,
        Rule::ConI,
        Rule::ExiE,
        Rule::ExiI,
        Rule::UniE,
        Rule::UniI,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Assume => "Assume",
            Rule::Boole => "Boole",
            Rule::ImpE => "Imp_E",
            Rule::ImpI => "Imp_I",
            Rule::DisE => "Dis_E",
            Rule::DisI1 => "Dis_I1",
            Rule::DisI2 => "Dis_I2",
            Rule::ConE1 => "Con_E1",
            Rule::ConE2 => "Con_E2",
            Rule::ConI => "Con_I",
            Rule::ExiE => "Exi_E",
            Rule::ExiI => "Exi_I",
            Rule::UniE => "Uni_E",
            Rule::UniI => "Uni_I",
        }
    }

    /// Number of child judgments. Freshness side conditions are not counted.
    pub fn premise_count(self) -> usize {
        match self {
            Rule::Assume => 0,
            Rule::ImpE | Rule::ConI | Rule::ExiE => 2,
            Rule::DisE => 3,
            _ => 1,
        }
    }

    /// Witnesses the rule takes, in slot order.
    ///
    /// `Exi_I` may omit `p`, which is then read off the goal.
    pub fn arg_specs(self) -> &'static [ArgSpec] {
        match self {
            Rule::Assume | Rule::Boole | Rule::ImpI | Rule::DisI1 | Rule::DisI2 | Rule::ConI => &[],
            Rule::ImpE | Rule::ConE2 => &[REQ_P],
            Rule::ConE1 => &[REQ_Q],
            Rule::DisE => &[REQ_P, REQ_Q],
            Rule::ExiE => &[REQ_P, REQ_C],
            Rule::ExiI => &[OPT_P, REQ_T],
            Rule::UniE => &[REQ_P, REQ_T],
            Rule::UniI => &[REQ_C],
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown rule {0:?}")]
pub struct UnknownRule(pub String);

impl FromStr for Rule {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

/// Witnesses for the schematic symbols that occur in a rule's premises but
/// not in its conclusion.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RuleArgs {
    pub p: Option<Formula>,
    pub q: Option<Formula>,
    pub t: Option<Term>,
    pub c: Option<Identifier>,
}

impl RuleArgs {
    pub fn none() -> RuleArgs {
        RuleArgs::default()
    }

    pub fn with_p(mut self, p: Formula) -> RuleArgs {
        self.p = Some(p);
        self
    }

    pub fn with_q(mut self, q: Formula) -> RuleArgs {
        self.q = Some(q);
        self
    }

    pub fn with_t(mut self, t: Term) -> RuleArgs {
        self.t = Some(t);
        self
    }

    pub fn with_c(mut self, c: Identifier) -> RuleArgs {
        self.c = Some(c);
        self
    }

    pub fn has(&self, slot: ArgSlot) -> bool {
        match slot {
            ArgSlot::P => self.p.is_some(),
            ArgSlot::Q => self.q.is_some(),
            ArgSlot::T => self.t.is_some(),
            ArgSlot::C => self.c.is_some(),
        }
    }

    /// Checks that exactly the slots `rule` accepts are filled.
    pub fn validate(&self, rule: Rule) -> Result<(), KernelError> {
        let specs = rule.arg_specs();
        for slot in [ArgSlot::P, ArgSlot::Q, ArgSlot::T, ArgSlot::C] {
            match specs.iter().find(|s| s.slot == slot) {
                Some(spec) if spec.required && !self.has(slot) => {
                    return Err(KernelError::MissingArgument { rule, slot: slot.name() })
                }
                None if self.has(slot) => {
                    return Err(KernelError::UnexpectedArgument { rule, slot: slot.name() })
                }
                _ => {}
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("{rule} needs a goal of the form {expected}, found {found:?}")]
    ShapeMismatch {
        rule: Rule,
        expected: &'static str,
        found: Formula,
    },
    #[error("{rule} witnesses produce {produced:?}, but the goal is {goal:?}")]
    WitnessMismatch {
        rule: Rule,
        goal: Formula,
        produced: Formula,
    },
    #[error("{rule} needs {ident} to be new, but it occurs in the formulas or assumptions")]
    FreshnessViolation { rule: Rule, ident: Identifier },
    #[error("the goal formula is not among the assumptions")]
    NotAnAssumption,
    #[error("{rule} requires argument {slot}")]
    MissingArgument { rule: Rule, slot: &'static str },
    #[error("{rule} takes no argument {slot}")]
    UnexpectedArgument { rule: Rule, slot: &'static str },
}

impl KernelError {
    /// Stable machine-readable name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            KernelError::ShapeMismatch { .. } => "ShapeMismatch",
            KernelError::WitnessMismatch { .. } => "WitnessMismatch",
            KernelError::FreshnessViolation { .. } => "FreshnessViolation",
            KernelError::NotAnAssumption => "NotAnAssumption",
            KernelError::MissingArgument { .. } => "MissingArgument",
            KernelError::UnexpectedArgument { .. } => "UnexpectedArgument",
        }
    }
}

fn shape(rule: Rule, expected: &'static str, goal: &Goal) -> KernelError {
    KernelError::ShapeMismatch {
        rule,
        expected,
        found: goal.formula.clone(),
    }
}

// `validate` has already run, so required slots are filled.
fn slot<T: Clone>(value: &Option<T>) -> T {
    value.clone().expect("argument presence checked by RuleArgs::validate")
}

/// Reads `rule` backwards at `goal`, returning its premises.
pub fn expand(goal: &Goal, rule: Rule, args: &RuleArgs) -> Result<Vec<Goal>, KernelError> {
    args.validate(rule)?;
    let a = &goal.assumptions;
    let same = |formula: Formula| Goal::new(formula, a.clone());
    match rule {
        Rule::Assume => {
            if member(&goal.formula, a) {
                Ok(Vec::new())
            } else {
                Err(KernelError::NotAnAssumption)
            }
        }
        Rule::Boole => {
            let refuted = Formula::imp(goal.formula.clone(), Formula::Falsity);
            Ok(vec![Goal::new(Formula::Falsity, goal.assume(refuted))])
        }
        Rule::ImpE => {
            let p = slot(&args.p);
            Ok(vec![same(Formula::imp(p.clone(), goal.formula.clone())), same(p)])
        }
        Rule::ImpI => match &goal.formula {
            Formula::Imp(p, q) => Ok(vec![Goal::new((**q).clone(), goal.assume((**p).clone()))]),
            _ => Err(shape(rule, "Imp p q", goal)),
        },
        Rule::DisE => {
            let (p, q) = (slot(&args.p), slot(&args.q));
            let r = &goal.formula;
            Ok(vec![
                same(Formula::dis(p.clone(), q.clone())),
                Goal::new(r.clone(), goal.assume(p)),
                Goal::new(r.clone(), goal.assume(q)),
            ])
        }
        Rule::DisI1 | Rule::DisI2 => match &goal.formula {
            Formula::Dis(p, q) => {
                let chosen = if rule == Rule::DisI1 { p } else { q };
                Ok(vec![same((**chosen).clone())])
            }
            _ => Err(shape(rule, "Dis p q", goal)),
        },
        Rule::ConE1 => Ok(vec![same(Formula::con(goal.formula.clone(), slot(&args.q)))]),
        Rule::ConE2 => Ok(vec![same(Formula::con(slot(&args.p), goal.formula.clone()))]),
        Rule::ConI => match &goal.formula {
            Formula::Con(p, q) => Ok(vec![same((**p).clone()), same((**q).clone())]),
            _ => Err(shape(rule, "Con p q", goal)),
        },
        Rule::ExiE => {
            let (p, c) = (slot(&args.p), slot(&args.c));
            let q = &goal.formula;
            if !(new(&c, &p) && new(&c, q) && news(&c, a)) {
                return Err(KernelError::FreshnessViolation { rule, ident: c });
            }
            let instance = sub(0, &Term::constant(c), &p);
            Ok(vec![same(Formula::exi(p)), Goal::new(q.clone(), goal.assume(instance))])
        }
        Rule::ExiI => match &goal.formula {
            Formula::Exi(body) => {
                if let Some(p) = &args.p {
                    if **body != *p {
                        return Err(KernelError::WitnessMismatch {
                            rule,
                            goal: goal.formula.clone(),
                            produced: Formula::exi(p.clone()),
                        });
                    }
                }
                Ok(vec![same(sub(0, &slot(&args.t), body))])
            }
            _ => Err(shape(rule, "Exi p", goal)),
        },
        Rule::UniE => {
            let (p, t) = (slot(&args.p), slot(&args.t));
            let produced = sub(0, &t, &p);
            if produced != goal.formula {
                return Err(KernelError::WitnessMismatch {
                    rule,
                    goal: goal.formula.clone(),
                    produced,
                });
            }
            Ok(vec![same(Formula::uni(p))])
        }
        Rule::UniI => match &goal.formula {
            Formula::Uni(p) => {
                let c = slot(&args.c);
                if !(new(&c, p) && news(&c, a)) {
                    return Err(KernelError::FreshnessViolation { rule, ident: c });
                }
                Ok(vec![same(sub(0, &Term::constant(c), p))])
            }
            _ => Err(shape(rule, "Uni p", goal)),
        },
    }
}

/// Rules whose conclusion can match `goal` for some choice of witnesses,
/// in [`Rule::ALL`] order.
pub fn applicable_rules(goal: &Goal) -> Vec<Rule> {
    Rule::ALL
        .into_iter()
        .filter(|rule| match rule {
            Rule::Assume => member(&goal.formula, &goal.assumptions),
            Rule::ImpI => matches!(goal.formula, Formula::Imp(..)),
            Rule::DisI1 | Rule::DisI2 => matches!(goal.formula, Formula::Dis(..)),
            Rule::ConI => matches!(goal.formula, Formula::Con(..)),
            Rule::ExiI => matches!(goal.formula, Formula::Exi(..)),
            Rule::UniI => matches!(goal.formula, Formula::Uni(..)),
            Rule::Boole | Rule::ImpE | Rule::DisE | Rule::ConE1 | Rule::ConE2 | Rule::ExiE | Rule::UniE => true,
        })
        .collect()
}

/// A complete proof tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofNode {
    pub goal: Goal,
    pub rule: Rule,
    pub args: RuleArgs,
    pub children: Vec<ProofNode>,
}

impl ProofNode {
    pub fn new(goal: Goal, rule: Rule, args: RuleArgs, children: Vec<ProofNode>) -> ProofNode {
        ProofNode { goal, rule, args, children }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(ProofNode::size).sum::<usize>()
    }

    /// The node at a child-index path, if any.
    pub fn at(&self, path: &[usize]) -> Option<&ProofNode> {
        path.iter().try_fold(self, |node, &i| node.children.get(i))
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut ProofNode> {
        path.iter().try_fold(self, |node, &i| node.children.get_mut(i))
    }

    /// Depth-first, premise-order traversal with paths.
    pub fn walk(&self) -> Vec<(Vec<usize>, &ProofNode)> {
        fn go<'a>(node: &'a ProofNode, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, &'a ProofNode)>) {
            out.push((path.clone(), node));
            for (i, child) in node.children.iter().enumerate() {
                path.push(i);
                go(child, path, out);
                path.pop();
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }
}

/// Why a node was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Rejection {
    #[error(transparent)]
    Rule(#[from] KernelError),
    #[error("{rule} has {expected} premises, the node has {found} children")]
    PremiseCount { rule: Rule, expected: usize, found: usize },
    #[error("premise {index} should be {expected:?}, the child proves {found:?}")]
    PremiseMismatch {
        index: usize,
        expected: Box<Goal>,
        found: Box<Goal>,
    },
}

impl Rejection {
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::Rule(e) => e.code(),
            Rejection::PremiseCount { .. } => "PremiseCount",
            Rejection::PremiseMismatch { .. } => "PremiseMismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckReport {
    Accepted,
    Rejected { path: Vec<usize>, reason: Rejection },
}

impl CheckReport {
    pub fn is_accepted(&self) -> bool {
        matches!(self, CheckReport::Accepted)
    }
}

fn check_node(node: &ProofNode) -> Result<(), Rejection> {
    let premises = expand(&node.goal, node.rule, &node.args)?;
    if premises.len() != node.children.len() {
        return Err(Rejection::PremiseCount {
            rule: node.rule,
            expected: premises.len(),
            found: node.children.len(),
        });
    }
    for (index, (expected, child)) in premises.into_iter().zip(&node.children).enumerate() {
        if expected != child.goal {
            return Err(Rejection::PremiseMismatch {
                index,
                expected: Box::new(expected),
                found: Box::new(child.goal.clone()),
            });
        }
    }
    Ok(())
}

/// Checks every node of the tree.
///
/// Nodes are visited children-first, in premise order, and the first failing
/// node is reported. A broken leaf is therefore blamed on the leaf itself
/// rather than on the link to its parent.
pub fn check(root: &ProofNode) -> CheckReport {
    fn go(node: &ProofNode, path: &mut Vec<usize>) -> Result<(), (Vec<usize>, Rejection)> {
        for (i, child) in node.children.iter().enumerate() {
            path.push(i);
            go(child, path)?;
            path.pop();
        }
        check_node(node).map_err(|reason| (path.clone(), reason))
    }
    match go(root, &mut Vec::new()) {
        Ok(()) => CheckReport::Accepted,
        Err((path, reason)) => CheckReport::Rejected { path, reason },
    }
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

    fn rules_for(formula: Formula) -> Vec<Rule> {
        applicable_rules(&Goal::closed(formula))
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in Rule::ALL {
            assert_eq!(rule.name().parse::<Rule>(), Ok(rule));
        }
        assert!("Copy".parse::<Rule>().is_err());
        assert!("Neg_I".parse::<Rule>().is_err());
    }

    #[test]
    fn imp_intro_discharges_antecedent() {
        let (p, q) = (atom("P"), atom("Q"));
        let hyp = Formula::con(p.clone(), Formula::imp(p.clone(), q.clone()));
        let goal = Goal::closed(Formula::imp(hyp.clone(), q.clone()));
        let premises = expand(&goal, Rule::ImpI, &RuleArgs::none()).unwrap();
        assert_eq!(premises, vec![Goal::new(q, vec![hyp])]);
    }

    #[test]
    fn imp_elim_orders_premises() {
        let (p, q) = (atom("P"), atom("Q"));
        let hyp = Formula::con(p.clone(), Formula::imp(p.clone(), q.clone()));
        let goal = Goal::new(q.clone(), vec![hyp.clone()]);
        let premises = expand(&goal, Rule::ImpE, &RuleArgs::none().with_p(p.clone())).unwrap();
        assert_eq!(
            premises,
            vec![
                Goal::new(Formula::imp(p.clone(), q), vec![hyp.clone()]),
                Goal::new(p, vec![hyp]),
            ]
        );
    }

    #[test]
    fn boole_assumes_negated_goal() {
        let goal = Goal::new(atom("P"), vec![atom("Q")]);
        let premises = expand(&goal, Rule::Boole, &RuleArgs::none()).unwrap();
        assert_eq!(
            premises,
            vec![Goal::new(
                Formula::Falsity,
                vec![Formula::imp(atom("P"), Formula::Falsity), atom("Q")]
            )]
        );
    }

    #[test]
    fn uni_intro_rejects_non_fresh_constant() {
        let body = Formula::Pre(id("P"), vec![Term::Var(0)]);
        let goal = Goal::new(
            Formula::uni(body),
            vec![Formula::Pre(id("P"), vec![Term::constant(id("c"))])],
        );
        let err = expand(&goal, Rule::UniI, &RuleArgs::none().with_c(id("c"))).unwrap_err();
        assert_eq!(err, KernelError::FreshnessViolation { rule: Rule::UniI, ident: id("c") });
        let ok = expand(&goal, Rule::UniI, &RuleArgs::none().with_c(id("d"))).unwrap();
        assert_eq!(ok[0].formula, Formula::Pre(id("P"), vec![Term::constant(id("d"))]));
    }

    #[test]
    fn exi_elim_checks_conclusion_freshness() {
        let body = Formula::Pre(id("P"), vec![Term::Var(0)]);
        let concl = Formula::Pre(id("Q"), vec![Term::constant(id("c"))]);
        let goal = Goal::closed(concl);
        let args = RuleArgs::none().with_p(body).with_c(id("c"));
        assert_eq!(expand(&goal, Rule::ExiE, &args).unwrap_err().code(), "FreshnessViolation");
    }

    #[test]
    fn uni_elim_witness_must_reproduce_goal() {
        let a = Term::constant(id("a"));
        let goal = Goal::closed(Formula::Pre(id("P"), vec![a.clone()]));
        let body = Formula::Pre(id("P"), vec![Term::Var(0)]);
        // both readings of the same goal are accepted
        assert!(expand(&goal, Rule::UniE, &RuleArgs::none().with_p(body.clone()).with_t(a.clone())).is_ok());
        assert!(expand(&goal, Rule::UniE, &RuleArgs::none().with_p(goal.formula.clone()).with_t(a.clone())).is_ok());
        let b = Term::constant(id("b"));
        let err = expand(&goal, Rule::UniE, &RuleArgs::none().with_p(body).with_t(b)).unwrap_err();
        assert_eq!(err.code(), "WitnessMismatch");
    }

    #[test]
    fn exi_intro_optional_body() {
        let body = Formula::Pre(id("P"), vec![Term::Var(0)]);
        let goal = Goal::closed(Formula::exi(body.clone()));
        let a = Term::constant(id("a"));
        let expected = vec![Goal::closed(Formula::Pre(id("P"), vec![a.clone()]))];
        assert_eq!(expand(&goal, Rule::ExiI, &RuleArgs::none().with_t(a.clone())).unwrap(), expected);
        assert_eq!(
            expand(&goal, Rule::ExiI, &RuleArgs::none().with_p(body).with_t(a.clone())).unwrap(),
            expected
        );
        let wrong = RuleArgs::none().with_p(atom("P")).with_t(a);
        assert_eq!(expand(&goal, Rule::ExiI, &wrong).unwrap_err().code(), "WitnessMismatch");
    }

    #[test]
    fn shape_and_argument_errors() {
        let goal = Goal::closed(Formula::Falsity);
        assert_eq!(expand(&goal, Rule::ImpI, &RuleArgs::none()).unwrap_err().code(), "ShapeMismatch");
        assert_eq!(expand(&goal, Rule::Assume, &RuleArgs::none()).unwrap_err(), KernelError::NotAnAssumption);
        assert_eq!(
            expand(&goal, Rule::ImpE, &RuleArgs::none()).unwrap_err(),
            KernelError::MissingArgument { rule: Rule::ImpE, slot: "p" }
        );
        assert_eq!(
            expand(&goal, Rule::Boole, &RuleArgs::none().with_t(Term::Var(0))).unwrap_err(),
            KernelError::UnexpectedArgument { rule: Rule::Boole, slot: "t" }
        );
    }

    #[test]
    fn applicable_rules_by_shape() {
        let falsity = rules_for(Formula::Falsity);
        for r in [Rule::ImpI, Rule::ConI, Rule::DisI1, Rule::DisI2, Rule::ExiI, Rule::UniI, Rule::Assume] {
            assert!(!falsity.contains(&r), "{r}");
        }
        for r in [Rule::Boole, Rule::ImpE, Rule::DisE, Rule::ConE1, Rule::ConE2, Rule::ExiE, Rule::UniE] {
            assert!(falsity.contains(&r), "{r}");
        }
        assert!(applicable_rules(&Goal::new(atom("P"), vec![atom("P")])).contains(&Rule::Assume));
        assert!(rules_for(Formula::con(atom("P"), atom("Q"))).contains(&Rule::ConI));
    }

    #[test]
    fn single_assume_node() {
        let node = ProofNode::new(Goal::new(atom("P"), vec![atom("P")]), Rule::Assume, RuleArgs::none(), vec![]);
        assert_eq!(check(&node), CheckReport::Accepted);
    }

    #[test]
    fn check_reports_child_count() {
        let goal = Goal::new(atom("P"), vec![atom("P")]);
        let leaf = ProofNode::new(goal.clone(), Rule::Assume, RuleArgs::none(), vec![]);
        let node = ProofNode::new(goal, Rule::Assume, RuleArgs::none(), vec![leaf]);
        match check(&node) {
            CheckReport::Rejected { path, reason } => {
                assert!(path.is_empty());
                assert_eq!(reason.code(), "PremiseCount");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn assumption_order_matters() {
        // Con_I splits with the same list; a child with a permuted list is rejected.
        let (p, q) = (atom("P"), atom("Q"));
        let a = vec![p.clone(), q.clone()];
        let permuted = vec![q.clone(), p.clone()];
        let leaf = |f: Formula, a: Vec<Formula>| ProofNode::new(Goal::new(f, a), Rule::Assume, RuleArgs::none(), vec![]);
        let good = ProofNode::new(
            Goal::new(Formula::con(p.clone(), q.clone()), a.clone()),
            Rule::ConI,
            RuleArgs::none(),
            vec![leaf(p.clone(), a.clone()), leaf(q.clone(), a.clone())],
        );
        assert!(check(&good).is_accepted());
        let mut bad = good.clone();
        bad.children[1].goal.assumptions = permuted;
        match check(&bad) {
            CheckReport::Rejected { path, reason } => {
                assert_eq!(path, Vec::<usize>::new());
                assert_eq!(reason.code(), "PremiseMismatch");
            }
            other => panic!("{other:?}"),
        }
    }
}
