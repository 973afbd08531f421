//! Interactive backward proof construction.
//!
//! A [`Session`] holds a linear history of immutable proof-tree snapshots.
//! Applying a rule appends a snapshot (dropping any redo tail), undo and redo
//! move a cursor. Whenever a rule creates a subgoal whose formula is already
//! among its assumptions, that subgoal is closed with `Assume` on the spot.

use std::sync::Arc;

use thiserror::Error;

use crate::kernel::{expand, Goal, KernelError, ProofNode, Rule, RuleArgs};
use crate::subst::member;
use crate::syntax::Formula;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Open,
    Closed {
        rule: Rule,
        args: RuleArgs,
        children: Vec<OpenProofNode>,
    },
}

/// A node of a possibly unfinished proof.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpenProofNode {
    pub goal: Goal,
    pub status: Status,
}

impl OpenProofNode {
    pub fn open(goal: Goal) -> OpenProofNode {
        OpenProofNode { goal, status: Status::Open }
    }

    /// A fresh subgoal: closed by `Assume` if possible, open otherwise.
    fn subgoal(goal: Goal) -> OpenProofNode {
        if member(&goal.formula, &goal.assumptions) {
            OpenProofNode {
                goal,
                status: Status::Closed {
                    rule: Rule::Assume,
                    args: RuleArgs::none(),
                    children: Vec::new(),
                },
            }
        } else {
            OpenProofNode::open(goal)
        }
    }

    pub fn is_open(&self) -> bool {
        matches!(self.status, Status::Open)
    }

    pub fn children(&self) -> &[OpenProofNode] {
        match &self.status {
            Status::Open => &[],
            Status::Closed { children, .. } => children,
        }
    }

    pub fn at(&self, path: &[usize]) -> Option<&OpenProofNode> {
        path.iter().try_fold(self, |node, &i| node.children().get(i))
    }

    /// Paths of all open nodes, depth-first in premise order.
    pub fn open_paths(&self) -> Vec<Vec<usize>> {
        fn go(node: &OpenProofNode, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            match &node.status {
                Status::Open => out.push(path.clone()),
                Status::Closed { children, .. } => {
                    for (i, child) in children.iter().enumerate() {
                        path.push(i);
                        go(child, path, out);
                        path.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_finished(&self) -> bool {
        match &self.status {
            Status::Open => false,
            Status::Closed { children, .. } => children.iter().all(OpenProofNode::is_finished),
        }
    }

    /// Converts a finished tree into a kernel proof.
    pub fn to_proof(&self) -> Option<ProofNode> {
        match &self.status {
            Status::Open => None,
            Status::Closed { rule, args, children } => Some(ProofNode {
                goal: self.goal.clone(),
                rule: *rule,
                args: args.clone(),
                children: children.iter().map(OpenProofNode::to_proof).collect::<Option<_>>()?,
            }),
        }
    }

    /// Copy of this tree with the node at `path` replaced by `f(node)`.
    fn replace_at(
        &self,
        path: &[usize],
        f: impl FnOnce(&OpenProofNode) -> Result<OpenProofNode, ProverError>,
    ) -> Result<OpenProofNode, ProverError> {
        let Some((&first, rest)) = path.split_first() else {
            return f(self);
        };
        let Status::Closed { rule, args, children } = &self.status else {
            return Err(ProverError::NotOpen { path: path.to_vec() });
        };
        let child = children.get(first).ok_or_else(|| ProverError::NotOpen { path: path.to_vec() })?;
        let mut children = children.clone();
        children[first] = child.replace_at(rest, f)?;
        Ok(OpenProofNode {
            goal: self.goal.clone(),
            status: Status::Closed {
                rule: *rule,
                args: args.clone(),
                children,
            },
        })
    }
}

impl From<&ProofNode> for OpenProofNode {
    fn from(proof: &ProofNode) -> Self {
        OpenProofNode {
            goal: proof.goal.clone(),
            status: Status::Closed {
                rule: proof.rule,
                args: proof.args.clone(),
                children: proof.children.iter().map(OpenProofNode::from).collect(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProverError {
    #[error("no open goal at path {path:?}")]
    NotOpen { path: Vec<usize> },
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("nothing to undo")]
    NothingToUndo,
    #[error("nothing to redo")]
    NothingToRedo,
    #[error("proof has open goals at {open_paths:?}")]
    ProofIncomplete { open_paths: Vec<Vec<usize>> },
    #[error("invalid session history: {0}")]
    BadHistory(String),
}

impl ProverError {
    pub fn code(&self) -> &'static str {
        match self {
            ProverError::NotOpen { .. } => "NotOpen",
            ProverError::Kernel(e) => e.code(),
            ProverError::NothingToUndo => "NothingToUndo",
            ProverError::NothingToRedo => "NothingToRedo",
            ProverError::ProofIncomplete { .. } => "ProofIncomplete",
            ProverError::BadHistory(_) => "BadHistory",
        }
    }
}

/// One proof under construction.
///
/// Not internally synchronized: callers serialize access to a session.
#[derive(Clone, Debug)]
pub struct Session {
    history: Vec<Arc<OpenProofNode>>,
    cursor: usize,
}

impl Session {
    /// Starts a proof of `formula` from no assumptions.
    pub fn new(formula: Formula) -> Session {
        Session::from_goal(Goal::closed(formula))
    }

    /// Starts a proof of an arbitrary goal. The root closes by `Assume`
    /// immediately when its formula is one of the assumptions.
    pub fn from_goal(goal: Goal) -> Session {
        Session {
            history: vec![Arc::new(OpenProofNode::subgoal(goal))],
            cursor: 0,
        }
    }

    /// Rebuilds a session from stored snapshots, replaying nothing.
    ///
    /// Every snapshot must be expand-coherent and share the first one's root
    /// goal.
    pub fn from_history(history: Vec<OpenProofNode>, cursor: usize) -> Result<Session, ProverError> {
        let Some(first) = history.first() else {
            return Err(ProverError::BadHistory("history is empty".into()));
        };
        if cursor >= history.len() {
            return Err(ProverError::BadHistory(format!(
                "cursor {cursor} outside history of length {}",
                history.len()
            )));
        }
        for (i, snapshot) in history.iter().enumerate() {
            if snapshot.goal != first.goal {
                return Err(ProverError::BadHistory(format!("snapshot {i} has a different root goal")));
            }
            if let Some(path) = incoherent_node(snapshot) {
                return Err(ProverError::BadHistory(format!("snapshot {i} is invalid at {path:?}")));
            }
        }
        Ok(Session {
            history: history.into_iter().map(Arc::new).collect(),
            cursor,
        })
    }

    pub fn current(&self) -> &OpenProofNode {
        &self.history[self.cursor]
    }

    pub fn snapshot(&self) -> Arc<OpenProofNode> {
        Arc::clone(&self.history[self.cursor])
    }

    pub fn history(&self) -> impl Iterator<Item = &OpenProofNode> {
        self.history.iter().map(|s| &**s)
    }

    pub fn history_len(&self) -> usize {
        self.history.len()
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn can_undo(&self) -> bool {
        self.cursor > 0
    }

    pub fn can_redo(&self) -> bool {
        self.cursor + 1 < self.history.len()
    }

    pub fn open_paths(&self) -> Vec<Vec<usize>> {
        self.current().open_paths()
    }

    /// Applies `rule` backwards at the open goal addressed by `path`.
    ///
    /// On error the session is left untouched.
    pub fn apply(&mut self, path: &[usize], rule: Rule, args: RuleArgs) -> Result<(), ProverError> {
        let next = self.current().replace_at(path, |node| {
            if !node.is_open() {
                return Err(ProverError::NotOpen { path: path.to_vec() });
            }
            let premises = expand(&node.goal, rule, &args)?;
            Ok(OpenProofNode {
                goal: node.goal.clone(),
                status: Status::Closed {
                    rule,
                    args,
                    children: premises.into_iter().map(OpenProofNode::subgoal).collect(),
                },
            })
        })?;
        self.history.truncate(self.cursor + 1);
        self.history.push(Arc::new(next));
        self.cursor += 1;
        Ok(())
    }

    pub fn undo(&mut self) -> Result<(), ProverError> {
        if !self.can_undo() {
            return Err(ProverError::NothingToUndo);
        }
        self.cursor -= 1;
        Ok(())
    }

    pub fn redo(&mut self) -> Result<(), ProverError> {
        if !self.can_redo() {
            return Err(ProverError::NothingToRedo);
        }
        self.cursor += 1;
        Ok(())
    }

    /// The finished proof, or the paths of the goals still open.
    pub fn export(&self) -> Result<ProofNode, ProverError> {
        self.current().to_proof().ok_or_else(|| ProverError::ProofIncomplete {
            open_paths: self.open_paths(),
        })
    }
}

/// Path of the first closed node whose children disagree with `expand`.
fn incoherent_node(root: &OpenProofNode) -> Option<Vec<usize>> {
    fn go(node: &OpenProofNode, path: &mut Vec<usize>) -> bool {
        let Status::Closed { rule, args, children } = &node.status else {
            return true;
        };
        match expand(&node.goal, *rule, args) {
            Ok(premises)
                if premises.len() == children.len()
                    && premises.iter().zip(children).all(|(g, c)| *g == c.goal) => {}
            _ => return false,
        }
        for (i, child) in children.iter().enumerate() {
            path.push(i);
            if !go(child, path) {
                return false;
            }
            path.pop();
        }
        true
    }
    let mut path = Vec::new();
    if go(root, &mut path) {
        None
    } else {
        Some(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::check;
    use crate::syntax::{truth, Identifier};

    fn atom(name: &str) -> Formula {
        Formula::Pre(Identifier::new(name).unwrap(), vec![])
    }

    fn example_goal() -> Formula {
        let (p, q) = (atom("P"), atom("Q"));
        Formula::imp(Formula::con(p.clone(), Formula::imp(p, q.clone())), q)
    }

    #[test]
    fn fresh_sessions_have_one_open_root() {
        for f in [Formula::Falsity, example_goal(), truth()] {
            let s = Session::new(f.clone());
            assert_eq!(s.current(), &OpenProofNode::open(Goal::closed(f)));
            assert_eq!(s.open_paths(), vec![Vec::<usize>::new()]);
            assert!(!s.can_undo() && !s.can_redo());
        }
        assert_eq!(Session::new(truth()).current().goal.formula, Formula::imp(Formula::Falsity, Formula::Falsity));
    }

    #[test]
    fn worked_example_with_auto_assume() {
        let (p, q) = (atom("P"), atom("Q"));
        let hyp = Formula::con(p.clone(), Formula::imp(p.clone(), q.clone()));
        let mut s = Session::new(example_goal());
        s.apply(&[], Rule::ImpI, RuleArgs::none()).unwrap();
        assert_eq!(s.open_paths(), vec![vec![0]]);
        assert_eq!(s.current().at(&[0]).unwrap().goal, Goal::new(q.clone(), vec![hyp.clone()]));
        s.apply(&[0], Rule::ImpE, RuleArgs::none().with_p(p.clone())).unwrap();
        assert_eq!(s.open_paths(), vec![vec![0, 0], vec![0, 1]]);
        s.apply(&[0, 0], Rule::ConE2, RuleArgs::none().with_p(p.clone())).unwrap();
        let auto = s.current().at(&[0, 0, 0]).unwrap();
        assert!(matches!(auto.status, Status::Closed { rule: Rule::Assume, .. }));
        assert_eq!(s.open_paths(), vec![vec![0, 1]]);
        s.apply(&[0, 1], Rule::ConE1, RuleArgs::none().with_q(Formula::imp(p, q))).unwrap();
        assert!(s.open_paths().is_empty());
        let proof = s.export().unwrap();
        assert_eq!(proof.size(), 6);
        assert!(check(&proof).is_accepted());
    }

    #[test]
    fn failed_apply_leaves_session_unchanged() {
        let mut s = Session::new(Formula::Falsity);
        let err = s.apply(&[], Rule::ImpI, RuleArgs::none()).unwrap_err();
        assert_eq!(err.code(), "ShapeMismatch");
        assert_eq!(s.history_len(), 1);
        let err = s.apply(&[0], Rule::Boole, RuleArgs::none()).unwrap_err();
        assert_eq!(err, ProverError::NotOpen { path: vec![0] });
        s.apply(&[], Rule::Boole, RuleArgs::none()).unwrap();
        let err = s.apply(&[], Rule::Boole, RuleArgs::none()).unwrap_err();
        assert_eq!(err.code(), "NotOpen");
        assert_eq!(s.history_len(), 2);
    }

    #[test]
    fn undo_redo_and_truncation() {
        let mut s = Session::new(example_goal());
        let initial = s.current().clone();
        assert_eq!(s.undo(), Err(ProverError::NothingToUndo));
        s.apply(&[], Rule::ImpI, RuleArgs::none()).unwrap();
        let after = s.current().clone();
        s.undo().unwrap();
        assert_eq!(s.current(), &initial);
        s.redo().unwrap();
        assert_eq!(s.current(), &after);
        assert_eq!(s.redo(), Err(ProverError::NothingToRedo));
        s.undo().unwrap();
        s.apply(&[], Rule::Boole, RuleArgs::none()).unwrap();
        assert_eq!(s.history_len(), 2);
        assert!(!s.can_redo());
    }

    #[test]
    fn export_of_fresh_session_reports_root() {
        let s = Session::new(Formula::Falsity);
        assert_eq!(s.export(), Err(ProverError::ProofIncomplete { open_paths: vec![vec![]] }));
    }

    #[test]
    fn goal_already_assumed_closes_at_creation() {
        let s = Session::from_goal(Goal::new(atom("P"), vec![atom("P")]));
        let proof = s.export().unwrap();
        assert_eq!(proof.rule, Rule::Assume);
        assert!(proof.children.is_empty());
    }

    #[test]
    fn history_restore_validates() {
        let mut s = Session::new(example_goal());
        s.apply(&[], Rule::ImpI, RuleArgs::none()).unwrap();
        let snaps: Vec<_> = s.history().cloned().collect();
        let restored = Session::from_history(snaps.clone(), 1).unwrap();
        assert_eq!(restored.current(), s.current());
        assert!(Session::from_history(snaps.clone(), 2).is_err());
        assert!(Session::from_history(Vec::new(), 0).is_err());
        let mut broken = snaps;
        if let Status::Closed { children, .. } = &mut broken[1].status {
            children[0].goal.assumptions.clear();
        }
        assert!(Session::from_history(broken, 0).is_err());
    }
}
