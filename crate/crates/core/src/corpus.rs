//! Bundled exercises.
//!
//! Each entry is a goal and, for most, a transcript of backward steps that
//! proves it. Replaying a transcript through a [`Session`] produces the
//! proof, so the stored data is exactly what a user would click.

use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::formats::{decode_proof, parse_formula, parse_term, DecodeError, SyntaxError};
use crate::kernel::{ProofNode, Rule, RuleArgs};
use crate::prover::{ProverError, Session};
use crate::syntax::{Formula, Identifier};

/// One backward step: apply `rule` with `args` at the open goal `path`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub path: Vec<usize>,
    pub rule: Rule,
    pub args: RuleArgs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub description: String,
    pub goal: Formula,
    pub transcript: Option<Vec<Step>>,
    pub proof: Option<ProofNode>,
}

#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("step {index} uses {rule}, which is not available")]
    RuleUnavailable { index: usize, rule: Rule },
    #[error("step {index} failed: {source}")]
    Step { index: usize, source: ProverError },
    #[error("entry has no transcript")]
    NoTranscript,
}

impl CorpusEntry {
    /// Replays the transcript, allowing only rules accepted by `allowed`.
    pub fn replay_with(&self, allowed: impl Fn(Rule) -> bool) -> Result<Session, ReplayError> {
        let steps = self.transcript.as_ref().ok_or(ReplayError::NoTranscript)?;
        let mut session = Session::new(self.goal.clone());
        for (index, step) in steps.iter().enumerate() {
            if !allowed(step.rule) {
                return Err(ReplayError::RuleUnavailable { index, rule: step.rule });
            }
            session
                .apply(&step.path, step.rule, step.args.clone())
                .map_err(|source| ReplayError::Step { index, source })?;
        }
        Ok(session)
    }

    pub fn replay(&self) -> Result<Session, ReplayError> {
        self.replay_with(|_| true)
    }
}

fn formula(text: &str) -> Formula {
    parse_formula(text).unwrap_or_else(|e| panic!("bundled formula {text:?}: {e}"))
}

fn args(p: Option<&str>, q: Option<&str>, t: Option<&str>, c: Option<&str>) -> RuleArgs {
    RuleArgs {
        p: p.map(formula),
        q: q.map(formula),
        t: t.map(|t| parse_term(t).unwrap_or_else(|e| panic!("bundled term {t:?}: {e}"))),
        c: c.map(|c| Identifier::new(c).expect("bundled identifier")),
    }
}

fn step(path: &[usize], rule: Rule, args: RuleArgs) -> Step {
    Step { path: path.to_vec(), rule, args }
}

fn plain(path: &[usize], rule: Rule) -> Step {
    step(path, rule, RuleArgs::none())
}

fn with_p(path: &[usize], rule: Rule, p: &str) -> Step {
    step(path, rule, args(Some(p), None, None, None))
}

fn with_q(path: &[usize], rule: Rule, q: &str) -> Step {
    step(path, rule, args(None, Some(q), None, None))
}

fn entry(name: &str, description: &str, goal: &str, transcript: Option<Vec<Step>>) -> CorpusEntry {
    let mut entry = CorpusEntry {
        name: name.to_string(),
        description: description.to_string(),
        goal: formula(goal),
        transcript,
        proof: None,
    };
    if entry.transcript.is_some() {
        let session = entry.replay().unwrap_or_else(|e| panic!("bundled transcript {name}: {e}"));
        entry.proof = Some(session.export().unwrap_or_else(|e| panic!("bundled transcript {name}: {e}")));
    }
    entry
}

const P: &str = r#"Pre "P" []"#;
const Q: &str = r#"Pre "Q" []"#;

/// All bundled entries, in menu order.
pub fn corpus() -> Vec<CorpusEntry> {
    use Rule::*;
    vec![
        entry("blank", "An empty proof of Falsity, for starting over.", "Falsity", None),
        entry(
            "huth_ryan_example",
            "From P and P -> Q conclude Q.",
            r#"Imp (Con (Pre "P" []) (Imp (Pre "P" []) (Pre "Q" []))) (Pre "Q" [])"#,
            Some(vec![
                plain(&[], ImpI),
                with_p(&[0], ImpE, P),
                with_p(&[0, 0], ConE2, P),
                with_q(&[0, 1], ConE1, r#"Imp (Pre "P" []) (Pre "Q" [])"#),
            ]),
        ),
        entry(
            "pierce",
            "Pierce's law ((P -> Q) -> P) -> P; needs Boole.",
            r#"Imp (Imp (Imp (Pre "P" []) (Pre "Q" [])) (Pre "P" [])) (Pre "P" [])"#,
            Some(vec![
                plain(&[], ImpI),
                plain(&[0], Boole),
                with_p(&[0, 0], ImpE, P),
                with_p(&[0, 0, 1], ImpE, r#"Imp (Pre "P" []) (Pre "Q" [])"#),
                plain(&[0, 0, 1, 1], ImpI),
                plain(&[0, 0, 1, 1, 0], Boole),
                with_p(&[0, 0, 1, 1, 0, 0], ImpE, P),
            ]),
        ),
        entry(
            "excluded_middle",
            "P or not P.",
            r#"Dis (Pre "P" []) (Imp (Pre "P" []) Falsity)"#,
            Some(vec![
                plain(&[], Boole),
                with_p(&[0], ImpE, r#"Dis (Pre "P" []) (Imp (Pre "P" []) Falsity)"#),
                plain(&[0, 1], DisI2),
                plain(&[0, 1, 0], ImpI),
                with_p(&[0, 1, 0, 0], ImpE, r#"Dis (Pre "P" []) (Imp (Pre "P" []) Falsity)"#),
                plain(&[0, 1, 0, 0, 1], DisI1),
            ]),
        ),
        entry(
            "double_negation",
            "Double negation elimination.",
            r#"Imp (Imp (Imp (Pre "P" []) Falsity) Falsity) (Pre "P" [])"#,
            Some(vec![
                plain(&[], ImpI),
                plain(&[0], Boole),
                with_p(&[0, 0], ImpE, r#"Imp (Pre "P" []) Falsity"#),
            ]),
        ),
        entry(
            "con_commutative",
            "Conjunction commutes.",
            r#"Imp (Con (Pre "P" []) (Pre "Q" [])) (Con (Pre "Q" []) (Pre "P" []))"#,
            Some(vec![
                plain(&[], ImpI),
                plain(&[0], ConI),
                with_p(&[0, 0], ConE2, P),
                with_q(&[0, 1], ConE1, Q),
            ]),
        ),
        entry(
            "dis_commutative",
            "Disjunction commutes, by cases.",
            r#"Imp (Dis (Pre "P" []) (Pre "Q" [])) (Dis (Pre "Q" []) (Pre "P" []))"#,
            Some(vec![
                plain(&[], ImpI),
                step(&[0], DisE, args(Some(P), Some(Q), None, None)),
                plain(&[0, 1], DisI2),
                plain(&[0, 2], DisI1),
            ]),
        ),
        entry(
            "curry",
            "Currying a conjunctive premise.",
            r#"Imp (Imp (Con (Pre "P" []) (Pre "Q" [])) (Pre "R" [])) (Imp (Pre "P" []) (Imp (Pre "Q" []) (Pre "R" [])))"#,
            Some(vec![
                plain(&[], ImpI),
                plain(&[0], ImpI),
                plain(&[0, 0], ImpI),
                with_p(&[0, 0, 0], ImpE, r#"Con (Pre "P" []) (Pre "Q" [])"#),
                plain(&[0, 0, 0, 1], ConI),
            ]),
        ),
        entry(
            "uni_exi",
            "What holds for all holds for some (universes are nonempty).",
            r#"Imp (Uni (Pre "P" [Var 0])) (Exi (Pre "P" [Var 0]))"#,
            Some(vec![
                plain(&[], ImpI),
                step(&[0], ExiI, args(None, None, Some(r#"Fun "a" []"#), None)),
                step(&[0, 0], UniE, args(Some(r#"Pre "P" [Var 0]"#), None, Some(r#"Fun "a" []"#), None)),
            ]),
        ),
        entry(
            "exi_elim",
            "A witness for P and Q is a witness for P.",
            r#"Imp (Exi (Con (Pre "P" [Var 0]) (Pre "Q" [Var 0]))) (Exi (Pre "P" [Var 0]))"#,
            Some(vec![
                plain(&[], ImpI),
                step(&[0], ExiE, args(Some(r#"Con (Pre "P" [Var 0]) (Pre "Q" [Var 0])"#), None, None, Some("c"))),
                step(&[0, 1], ExiI, args(None, None, Some(r#"Fun "c" []"#), None)),
                with_q(&[0, 1, 0], ConE1, r#"Pre "Q" [Fun "c" []]"#),
            ]),
        ),
        entry(
            "uni_intro",
            "Universal introduction with a fresh constant; \"a\" is not fresh here.",
            r#"Imp (Uni (Con (Pre "P" [Var 0]) (Pre "R" [Fun "a" []]))) (Uni (Pre "P" [Var 0]))"#,
            Some(vec![
                plain(&[], ImpI),
                step(&[0], UniI, args(None, None, None, Some("c"))),
                with_q(&[0, 0], ConE1, r#"Pre "R" [Fun "a" []]"#),
                step(
                    &[0, 0, 0],
                    UniE,
                    args(Some(r#"Con (Pre "P" [Var 0]) (Pre "R" [Fun "a" []])"#), None, Some(r#"Fun "c" []"#), None),
                ),
            ]),
        ),
        entry(
            "quantifier_swap",
            "Exists-forall implies forall-exists.",
            r#"Imp (Exi (Uni (Pre "R" [Var 1, Var 0]))) (Uni (Exi (Pre "R" [Var 0, Var 1])))"#,
            Some(vec![
                plain(&[], ImpI),
                step(&[0], UniI, args(None, None, None, Some("b"))),
                step(&[0, 0], ExiE, args(Some(r#"Uni (Pre "R" [Var 1, Var 0])"#), None, None, Some("a"))),
                step(&[0, 0, 1], ExiI, args(None, None, Some(r#"Fun "a" []"#), None)),
                step(
                    &[0, 0, 1, 0],
                    UniE,
                    args(Some(r#"Pre "R" [Fun "a" [], Var 0]"#), None, Some(r#"Fun "b" []"#), None),
                ),
            ]),
        ),
    ]
}

pub fn lookup(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Syntax { path: String, source: SyntaxError },
    #[error("{path}: invalid JSON: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{path}: {source}")]
    Decode { path: String, source: DecodeError },
}

/// Reads a directory of `<name>.ndproof` proof documents and `<name>.fol`
/// goal formulas. A name with both uses the proof; entries are sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<CorpusEntry>, LoadError> {
    let io_err = |path: &Path| {
        let path = path.display().to_string();
        move |source| LoadError::Io { path, source }
    };
    let mut entries: Vec<CorpusEntry> = Vec::new();
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(io_err(dir))?
        .collect::<Result<Vec<_>, _>>()
        .map_err(io_err(dir))?
        .into_iter()
        .map(|e| e.path())
        .collect();
    files.sort();
    for path in files {
        let (Some(stem), Some(ext)) = (path.file_stem().and_then(|s| s.to_str()), path.extension()) else {
            continue;
        };
        let shown = path.display().to_string();
        let (goal, proof) = if ext == "ndproof" {
            let text = fs::read_to_string(&path).map_err(io_err(&path))?;
            let doc: serde_json::Value =
                serde_json::from_str(&text).map_err(|source| LoadError::Json { path: shown.clone(), source })?;
            let proof = decode_proof(&doc).map_err(|source| LoadError::Decode { path: shown, source })?;
            (proof.goal.formula.clone(), Some(proof))
        } else if ext == "fol" {
            let text = fs::read_to_string(&path).map_err(io_err(&path))?;
            let goal = parse_formula(&text).map_err(|source| LoadError::Syntax { path: shown, source })?;
            (goal, None)
        } else {
            continue;
        };
        match entries.iter_mut().find(|e| e.name == stem) {
            Some(existing) => {
                if proof.is_some() {
                    existing.goal = goal;
                    existing.proof = proof;
                }
            }
            None => entries.push(CorpusEntry {
                name: stem.to_string(),
                description: String::new(),
                goal,
                transcript: None,
                proof,
            }),
        }
    }
    Ok(entries)
}
