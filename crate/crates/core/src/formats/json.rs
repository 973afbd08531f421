//! JSON documents for terms, formulas, goals, proofs, session trees and
//! interpretations.
//!
//! ```text
//! term    {"var": n} | {"fun": [name, [term...]]}
//! formula {"falsity": null} | {"pre": [name, [term...]]}
//!         | {"imp" | "dis" | "con": [formula, formula]} | {"exi" | "uni": formula}
//! goal    {"formula": formula, "assumptions": [formula...]}
//! node    {"goal": goal, "rule": name, "args": {"p"?, "q"?, "t"?, "c"?}, "children": [node...]}
//! proof document  {"format_version": 1, "proof": node}
//! ```
//!
//! Decoding rejects unknown fields and re-validates every structural
//! invariant the checker relies on (rule names, argument slots, child
//! counts), so anything that decodes can be checked without panicking.

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::kernel::{Goal, ProofNode, Rule, RuleArgs};
use crate::prover::{OpenProofNode, Session, Status};
use crate::semantics::{Element, Interpretation};
use crate::syntax::{Formula, Identifier, Term};

pub const FORMAT_VERSION: u64 = 1;

/// A decoding failure, located by a JSON pointer into the document.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message} at {}", if path.is_empty() { "/" } else { path.as_str() })]
pub struct DecodeError {
    pub path: String,
    pub message: String,
}

pub fn encode_term(t: &Term) -> Value {
    match t {
        Term::Var(v) => json!({ "var": v }),
        Term::Fun(name, args) => json!({ "fun": [name.as_str(), args.iter().map(encode_term).collect::<Vec<_>>()] }),
    }
}

pub fn encode_formula(p: &Formula) -> Value {
    match p {
        Formula::Falsity => json!({ "falsity": null }),
        Formula::Pre(name, args) => json!({ "pre": [name.as_str(), args.iter().map(encode_term).collect::<Vec<_>>()] }),
        Formula::Imp(p, q) => json!({ "imp": [encode_formula(p), encode_formula(q)] }),
        Formula::Dis(p, q) => json!({ "dis": [encode_formula(p), encode_formula(q)] }),
        Formula::Con(p, q) => json!({ "con": [encode_formula(p), encode_formula(q)] }),
        Formula::Exi(p) => json!({ "exi": encode_formula(p) }),
        Formula::Uni(p) => json!({ "uni": encode_formula(p) }),
    }
}

pub fn encode_goal(g: &Goal) -> Value {
    json!({
        "formula": encode_formula(&g.formula),
        "assumptions": g.assumptions.iter().map(encode_formula).collect::<Vec<_>>(),
    })
}

pub fn encode_args(args: &RuleArgs) -> Value {
    let mut map = Map::new();
    if let Some(p) = &args.p {
        map.insert("p".into(), encode_formula(p));
    }
    if let Some(q) = &args.q {
        map.insert("q".into(), encode_formula(q));
    }
    if let Some(t) = &args.t {
        map.insert("t".into(), encode_term(t));
    }
    if let Some(c) = &args.c {
        map.insert("c".into(), Value::String(c.as_str().into()));
    }
    Value::Object(map)
}

pub fn encode_node(node: &ProofNode) -> Value {
    json!({
        "goal": encode_goal(&node.goal),
        "rule": node.rule.name(),
        "args": encode_args(&node.args),
        "children": node.children.iter().map(encode_node).collect::<Vec<_>>(),
    })
}

/// A complete proof document, versioned.
pub fn encode_proof(root: &ProofNode) -> Value {
    json!({ "format_version": FORMAT_VERSION, "proof": encode_node(root) })
}

/// A possibly unfinished tree: open nodes are `{"goal": goal, "open": true}`,
/// closed nodes use the proof-node layout with open-tree children.
pub fn encode_open_tree(node: &OpenProofNode) -> Value {
    match &node.status {
        Status::Open => json!({ "goal": encode_goal(&node.goal), "open": true }),
        Status::Closed { rule, args, children } => json!({
            "goal": encode_goal(&node.goal),
            "rule": rule.name(),
            "args": encode_args(args),
            "children": children.iter().map(encode_open_tree).collect::<Vec<_>>(),
        }),
    }
}

/// A whole session history, for persistence.
pub fn encode_session(s: &Session) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "cursor": s.cursor(),
        "history": s.history().map(encode_open_tree).collect::<Vec<_>>(),
    })
}

pub fn encode_interpretation(m: &Interpretation) -> Value {
    let (env, default) = m.env();
    json!({
        "universe_size": m.universe_size(),
        "env": env,
        "env_default": default,
        "functions": m.functions().map(|(name, arity, table)| json!({
            "name": name.as_str(), "arity": arity, "table": table,
        })).collect::<Vec<_>>(),
        "predicates": m.predicates().map(|(name, arity, table)| json!({
            "name": name.as_str(), "arity": arity, "table": table,
        })).collect::<Vec<_>>(),
    })
}

/// Walks a document, tracking the JSON pointer of the current value.
struct Cursor<'v> {
    value: &'v Value,
    path: String,
}

impl<'v> Cursor<'v> {
    fn root(value: &'v Value) -> Self {
        Cursor { value, path: String::new() }
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, DecodeError> {
        Err(DecodeError {
            path: self.path.clone(),
            message: message.into(),
        })
    }

    fn child(&self, value: &'v Value, segment: impl std::fmt::Display) -> Cursor<'v> {
        Cursor {
            value,
            path: self.pointer(segment),
        }
    }

    /// The pointer to member `segment`, escaped as JSON pointers require.
    fn pointer(&self, segment: impl std::fmt::Display) -> String {
        let segment = segment.to_string().replace('~', "~0").replace('/', "~1");
        format!("{}/{}", self.path, segment)
    }

    fn fail_at<T>(&self, segment: &str, message: impl Into<String>) -> Result<T, DecodeError> {
        Err(DecodeError {
            path: self.pointer(segment),
            message: message.into(),
        })
    }

    fn object(&self, allowed: &[&str]) -> Result<&'v Map<String, Value>, DecodeError> {
        let Value::Object(map) = self.value else {
            return self.fail("expected an object");
        };
        if let Some(key) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
            return self.fail_at(key, "unknown field");
        }
        Ok(map)
    }

    fn field(&self, name: &str) -> Result<Cursor<'v>, DecodeError> {
        let Value::Object(map) = self.value else {
            return self.fail("expected an object");
        };
        match map.get(name) {
            Some(v) => Ok(self.child(v, name)),
            None => self.fail_at(name, "missing field"),
        }
    }

    fn optional(&self, name: &str) -> Option<Cursor<'v>> {
        self.value.get(name).map(|v| self.child(v, name))
    }

    /// The single `{"tag": payload}` entry of a tagged value.
    fn tagged(&self) -> Result<(&'v str, Cursor<'v>), DecodeError> {
        let Value::Object(map) = self.value else {
            return self.fail("expected a single-key object");
        };
        let mut entries = map.iter();
        match (entries.next(), entries.next()) {
            (Some((tag, payload)), None) => Ok((tag.as_str(), self.child(payload, tag))),
            _ => self.fail("expected a single-key object"),
        }
    }

    fn array(&self) -> Result<Vec<Cursor<'v>>, DecodeError> {
        match self.value {
            Value::Array(items) => Ok(items.iter().enumerate().map(|(i, v)| self.child(v, i)).collect()),
            _ => self.fail("expected an array"),
        }
    }

    fn pair(&self) -> Result<(Cursor<'v>, Cursor<'v>), DecodeError> {
        match self.array()?.as_slice() {
            [a, b] => Ok((a.clone(), b.clone())),
            _ => self.fail("expected an array of two elements"),
        }
    }

    fn string(&self) -> Result<&'v str, DecodeError> {
        match self.value {
            Value::String(s) => Ok(s),
            _ => self.fail("expected a string"),
        }
    }

    fn u64(&self) -> Result<u64, DecodeError> {
        match self.value.as_u64() {
            Some(n) => Ok(n),
            None => self.fail("expected a non-negative integer"),
        }
    }

    fn usize(&self) -> Result<usize, DecodeError> {
        let n = self.u64()?;
        usize::try_from(n).or_else(|_| self.fail("integer too large"))
    }

    fn bool(&self) -> Result<bool, DecodeError> {
        match self.value {
            Value::Bool(b) => Ok(*b),
            _ => self.fail("expected a boolean"),
        }
    }

    fn identifier(&self) -> Result<Identifier, DecodeError> {
        Identifier::new(self.string()?).or_else(|e| self.fail(e.to_string()))
    }
}

impl Clone for Cursor<'_> {
    fn clone(&self) -> Self {
        Cursor {
            value: self.value,
            path: self.path.clone(),
        }
    }
}

fn term(c: &Cursor) -> Result<Term, DecodeError> {
    match c.tagged()? {
        ("var", n) => Ok(Term::Var(n.u64()?)),
        ("fun", payload) => {
            let (name, args) = payload.pair()?;
            Ok(Term::Fun(name.identifier()?, term_list(&args)?))
        }
        (tag, _) => c.fail(format!("unknown term constructor {tag:?}")),
    }
}

fn term_list(c: &Cursor) -> Result<Vec<Term>, DecodeError> {
    c.array()?.iter().map(term).collect()
}

fn formula(c: &Cursor) -> Result<Formula, DecodeError> {
    let (tag, payload) = c.tagged()?;
    let binary = |payload: &Cursor| -> Result<(Formula, Formula), DecodeError> {
        let (p, q) = payload.pair()?;
        Ok((formula(&p)?, formula(&q)?))
    };
    match tag {
        "falsity" if payload.value.is_null() => Ok(Formula::Falsity),
        "falsity" => payload.fail("expected null"),
        "pre" => {
            let (name, args) = payload.pair()?;
            Ok(Formula::Pre(name.identifier()?, term_list(&args)?))
        }
        "imp" => binary(&payload).map(|(p, q)| Formula::imp(p, q)),
        "dis" => binary(&payload).map(|(p, q)| Formula::dis(p, q)),
        "con" => binary(&payload).map(|(p, q)| Formula::con(p, q)),
        "exi" => formula(&payload).map(Formula::exi),
        "uni" => formula(&payload).map(Formula::uni),
        _ => c.fail(format!("unknown formula constructor {tag:?}")),
    }
}

fn goal(c: &Cursor) -> Result<Goal, DecodeError> {
    c.object(&["formula", "assumptions"])?;
    let f = formula(&c.field("formula")?)?;
    let a = c.field("assumptions")?.array()?.iter().map(formula).collect::<Result<_, _>>()?;
    Ok(Goal::new(f, a))
}

fn rule_args(c: &Cursor, rule: Rule) -> Result<RuleArgs, DecodeError> {
    c.object(&["p", "q", "t", "c"])?;
    let args = RuleArgs {
        p: c.optional("p").map(|p| formula(&p)).transpose()?,
        q: c.optional("q").map(|q| formula(&q)).transpose()?,
        t: c.optional("t").map(|t| term(&t)).transpose()?,
        c: c.optional("c").map(|c| c.identifier()).transpose()?,
    };
    args.validate(rule).or_else(|e| c.fail(e.to_string()))?;
    Ok(args)
}

fn rule(c: &Cursor) -> Result<Rule, DecodeError> {
    c.string()?.parse().or_else(|e: crate::kernel::UnknownRule| c.fail(e.to_string()))
}

fn node(c: &Cursor) -> Result<ProofNode, DecodeError> {
    c.object(&["goal", "rule", "args", "children"])?;
    let g = goal(&c.field("goal")?)?;
    let r = rule(&c.field("rule")?)?;
    let args = rule_args(&c.field("args")?, r)?;
    let children_cursor = c.field("children")?;
    let children = children_cursor.array()?.iter().map(node).collect::<Result<Vec<_>, _>>()?;
    if children.len() != r.premise_count() {
        return children_cursor.fail(format!("{r} takes {} premises, found {}", r.premise_count(), children.len()));
    }
    Ok(ProofNode::new(g, r, args, children))
}

fn open_tree(c: &Cursor) -> Result<OpenProofNode, DecodeError> {
    if let Some(open) = c.optional("open") {
        c.object(&["goal", "open"])?;
        if !open.bool()? {
            return open.fail("expected true");
        }
        return Ok(OpenProofNode::open(goal(&c.field("goal")?)?));
    }
    c.object(&["goal", "rule", "args", "children"])?;
    let g = goal(&c.field("goal")?)?;
    let r = rule(&c.field("rule")?)?;
    let args = rule_args(&c.field("args")?, r)?;
    let children_cursor = c.field("children")?;
    let children = children_cursor.array()?.iter().map(open_tree).collect::<Result<Vec<_>, _>>()?;
    if children.len() != r.premise_count() {
        return children_cursor.fail(format!("{r} takes {} premises, found {}", r.premise_count(), children.len()));
    }
    Ok(OpenProofNode {
        goal: g,
        status: Status::Closed { rule: r, args, children },
    })
}

fn version(c: &Cursor) -> Result<(), DecodeError> {
    let v = c.field("format_version")?;
    if v.u64()? != FORMAT_VERSION {
        return v.fail(format!("unsupported format version, expected {FORMAT_VERSION}"));
    }
    Ok(())
}

pub fn decode_term(doc: &Value) -> Result<Term, DecodeError> {
    term(&Cursor::root(doc))
}

pub fn decode_formula(doc: &Value) -> Result<Formula, DecodeError> {
    formula(&Cursor::root(doc))
}

pub fn decode_goal(doc: &Value) -> Result<Goal, DecodeError> {
    goal(&Cursor::root(doc))
}

pub fn decode_rule(doc: &Value) -> Result<Rule, DecodeError> {
    rule(&Cursor::root(doc))
}

/// Decodes an argument record and checks it fits `rule`.
pub fn decode_args(doc: &Value, r: Rule) -> Result<RuleArgs, DecodeError> {
    rule_args(&Cursor::root(doc), r)
}

pub fn decode_node(doc: &Value) -> Result<ProofNode, DecodeError> {
    node(&Cursor::root(doc))
}

pub fn decode_proof(doc: &Value) -> Result<ProofNode, DecodeError> {
    let c = Cursor::root(doc);
    c.object(&["format_version", "proof"])?;
    version(&c)?;
    node(&c.field("proof")?)
}

pub fn decode_open_tree(doc: &Value) -> Result<OpenProofNode, DecodeError> {
    open_tree(&Cursor::root(doc))
}

pub fn decode_session(doc: &Value) -> Result<Session, DecodeError> {
    let c = Cursor::root(doc);
    c.object(&["format_version", "cursor", "history"])?;
    version(&c)?;
    let cursor = c.field("cursor")?.usize()?;
    let history = c.field("history")?;
    let snapshots = history.array()?.iter().map(open_tree).collect::<Result<Vec<_>, _>>()?;
    Session::from_history(snapshots, cursor).or_else(|e| history.fail(e.to_string()))
}

pub fn decode_interpretation(doc: &Value) -> Result<Interpretation, DecodeError> {
    let c = Cursor::root(doc);
    c.object(&["universe_size", "env", "env_default", "functions", "predicates"])?;
    let size = c.field("universe_size")?;
    let mut m = Interpretation::new(size.usize()?).or_else(|e| size.fail(e.to_string()))?;
    let env = c.field("env")?.array()?.iter().map(Cursor::usize).collect::<Result<Vec<Element>, _>>()?;
    m.set_env(env, c.field("env_default")?.usize()?).or_else(|e| c.fail(e.to_string()))?;
    for entry in c.field("functions")?.array()? {
        entry.object(&["name", "arity", "table"])?;
        let table = entry.field("table")?.array()?.iter().map(Cursor::usize).collect::<Result<_, _>>()?;
        m.set_function(entry.field("name")?.identifier()?, entry.field("arity")?.usize()?, table)
            .or_else(|e| entry.fail(e.to_string()))?;
    }
    for entry in c.field("predicates")?.array()? {
        entry.object(&["name", "arity", "table"])?;
        let table = entry.field("table")?.array()?.iter().map(Cursor::bool).collect::<Result<_, _>>()?;
        m.set_predicate(entry.field("name")?.identifier()?, entry.field("arity")?.usize()?, table)
            .or_else(|e| entry.fail(e.to_string()))?;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> Identifier {
        Identifier::new(s).unwrap()
    }

    #[test]
    fn formula_layout() {
        let p = Formula::imp(
            Formula::Pre(id("P"), vec![Term::Var(0), Term::Fun(id("f"), vec![])]),
            Formula::uni(Formula::Falsity),
        );
        assert_eq!(
            encode_formula(&p),
            json!({"imp": [{"pre": ["P", [{"var": 0}, {"fun": ["f", []]}]]}, {"uni": {"falsity": null}}]})
        );
        assert_eq!(decode_formula(&encode_formula(&p)).unwrap(), p);
    }

    #[test]
    fn decode_errors_carry_paths() {
        let doc = json!({"imp": [{"falsity": null}, {"not": {"falsity": null}}]});
        let err = decode_formula(&doc).unwrap_err();
        assert_eq!(err.path, "/imp/1");
        let doc = json!({"pre": ["P", [{"var": -1}]]});
        assert_eq!(decode_formula(&doc).unwrap_err().path, "/pre/1/0/var");
        let doc = json!({"pre": ["", []]});
        assert_eq!(decode_formula(&doc).unwrap_err().path, "/pre/0");
        assert!(decode_formula(&json!({"falsity": 1})).is_err());
        assert!(decode_formula(&json!({"falsity": null, "pre": null})).is_err());
    }

    #[test]
    fn node_validation() {
        let goal = json!({"formula": {"pre": ["P", []]}, "assumptions": [{"pre": ["P", []]}]});
        let ok = json!({"goal": goal, "rule": "Assume", "args": {}, "children": []});
        assert!(decode_node(&ok).is_ok());

        let copy = json!({"goal": goal, "rule": "Copy", "args": {}, "children": []});
        assert_eq!(decode_node(&copy).unwrap_err().path, "/rule");

        let extra = json!({"goal": goal, "rule": "Assume", "args": {}, "children": [], "note": 1});
        assert_eq!(decode_node(&extra).unwrap_err().path, "/note");

        let bad_args = json!({"goal": goal, "rule": "Assume", "args": {"c": "a"}, "children": []});
        assert_eq!(decode_node(&bad_args).unwrap_err().path, "/args");

        let missing = json!({"goal": goal, "rule": "Uni_I", "args": {}, "children": []});
        assert_eq!(decode_node(&missing).unwrap_err().path, "/args");

        let count = json!({"goal": goal, "rule": "Boole", "args": {}, "children": []});
        assert_eq!(decode_node(&count).unwrap_err().path, "/children");
    }

    #[test]
    fn proof_documents_are_versioned() {
        let goal = json!({"formula": {"pre": ["P", []]}, "assumptions": [{"pre": ["P", []]}]});
        let node = json!({"goal": goal, "rule": "Assume", "args": {}, "children": []});
        assert!(decode_proof(&json!({"format_version": 1, "proof": node})).is_ok());
        let err = decode_proof(&json!({"format_version": 2, "proof": node})).unwrap_err();
        assert_eq!(err.path, "/format_version");
        assert!(decode_proof(&json!({"proof": node})).is_err());
    }

    #[test]
    fn interpretation_round_trip() {
        let mut m = Interpretation::new(2).unwrap();
        m.set_env(vec![1, 0], 1).unwrap();
        m.set_function(id("f"), 1, vec![1, 0]).unwrap();
        m.set_predicate(id("P"), 0, vec![true]).unwrap();
        m.set_predicate(id("P"), 2, vec![true, false, false, true]).unwrap();
        let doc = encode_interpretation(&m);
        assert_eq!(decode_interpretation(&doc).unwrap(), m);
        let mut bad = doc.clone();
        bad["functions"][0]["table"] = json!([0, 5]);
        assert_eq!(decode_interpretation(&bad).unwrap_err().path, "/functions/0");
    }
}
