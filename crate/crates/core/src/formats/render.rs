//! Display renderings of proofs and partial proofs.
//!
//! The OK listing prints one numbered line per node, depth first, with each
//! premise indented two spaces below its conclusion and the rule name in a
//! right-hand column. The tree rendering shows each judgment as
//! `assumptions ⊢ formula` together with the rule and its witnesses.

use super::text::{print_argument, print_formula, print_term};
use crate::kernel::{Goal, ProofNode, Rule, RuleArgs};
use crate::prover::{OpenProofNode, Status};

/// Marker shown in place of a rule on open goals.
pub const OPEN_MARK: &str = "¤";

/// The parts of a node the renderers need, shared by finished and
/// unfinished trees.
trait View {
    fn goal(&self) -> &Goal;
    fn step(&self) -> Option<(Rule, &RuleArgs)>;
    fn kids(&self) -> Vec<&Self>;
}

impl View for ProofNode {
    fn goal(&self) -> &Goal {
        &self.goal
    }

    fn step(&self) -> Option<(Rule, &RuleArgs)> {
        Some((self.rule, &self.args))
    }

    fn kids(&self) -> Vec<&Self> {
        self.children.iter().collect()
    }
}

impl View for OpenProofNode {
    fn goal(&self) -> &Goal {
        &self.goal
    }

    fn step(&self) -> Option<(Rule, &RuleArgs)> {
        match &self.status {
            Status::Open => None,
            Status::Closed { rule, args, .. } => Some((*rule, args)),
        }
    }

    fn kids(&self) -> Vec<&Self> {
        self.children().iter().collect()
    }
}

fn preorder<'a, N: View>(node: &'a N, depth: usize, out: &mut Vec<(usize, &'a N)>) {
    out.push((depth, node));
    for kid in node.kids() {
        preorder(kid, depth + 1, out);
    }
}

/// `OK (formula) [(a1), (a2)]`, as in the listing.
pub fn ok_judgment(goal: &Goal) -> String {
    let assumptions: Vec<String> = goal.assumptions.iter().map(print_argument).collect();
    format!("OK {} [{}]", print_argument(&goal.formula), assumptions.join(", "))
}

fn listing<N: View>(root: &N) -> String {
    let mut nodes = Vec::new();
    preorder(root, 0, &mut nodes);
    let rows: Vec<(String, &str)> = nodes
        .iter()
        .map(|(depth, node)| {
            let text = format!("{}{}", "  ".repeat(*depth), ok_judgment(node.goal()));
            (text, node.step().map_or(OPEN_MARK, |(rule, _)| rule.name()))
        })
        .collect();
    let number_width = rows.len().to_string().len();
    let text_width = rows.iter().map(|(t, _)| t.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (i, (text, rule)) in rows.iter().enumerate() {
        let pad = text_width - text.chars().count();
        out.push_str(&format!(
            "{:>number_width$}  {text}{}  {rule}\n",
            i + 1,
            " ".repeat(pad)
        ));
    }
    out
}

pub fn render_ok_listing(root: &ProofNode) -> String {
    listing(root)
}

pub fn render_open_ok_listing(root: &OpenProofNode) -> String {
    listing(root)
}

/// Witnesses written as `p := …, t := …`.
pub fn describe_args(args: &RuleArgs) -> String {
    let mut parts = Vec::new();
    if let Some(p) = &args.p {
        parts.push(format!("p := {}", print_formula(p)));
    }
    if let Some(q) = &args.q {
        parts.push(format!("q := {}", print_formula(q)));
    }
    if let Some(t) = &args.t {
        parts.push(format!("t := {}", print_term(t)));
    }
    if let Some(c) = &args.c {
        parts.push(format!("c := \"{c}\""));
    }
    parts.join(", ")
}

fn tree<N: View>(root: &N) -> String {
    let mut nodes = Vec::new();
    preorder(root, 0, &mut nodes);
    let mut out = String::new();
    for (depth, node) in nodes {
        let goal = node.goal();
        let assumptions: Vec<String> = goal.assumptions.iter().map(print_formula).collect();
        let step = match node.step() {
            None => OPEN_MARK.to_string(),
            Some((rule, args)) if args == &RuleArgs::none() => rule.name().to_string(),
            Some((rule, args)) => format!("{rule}: {}", describe_args(args)),
        };
        out.push_str(&format!(
            "{}{}{}⊢ {}   [{step}]\n",
            "  ".repeat(depth),
            assumptions.join(", "),
            if assumptions.is_empty() { "" } else { " " },
            print_formula(&goal.formula),
        ));
    }
    out
}

pub fn render_tree(root: &ProofNode) -> String {
    tree(root)
}

pub fn render_open_tree(root: &OpenProofNode) -> String {
    tree(root)
}
