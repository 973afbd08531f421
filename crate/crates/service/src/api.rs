//! Request handlers. Bodies use the document encoding of
//! `natded_core::formats`; unknown request fields are rejected.

use std::collections::HashMap;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::StatusCode;
use axum::response::IntoResponse;
use axum::Json;
use natded_core::corpus::CorpusEntry;
use natded_core::formats::{
    decode_args, decode_formula, decode_proof, decode_rule, encode_args, encode_formula, encode_interpretation,
    encode_open_tree, encode_proof, print_formula, render_open_ok_listing, render_open_tree,
};
use natded_core::kernel::applicable_rules;
use natded_core::semantics::{entails_with, SearchConfig, Verdict, DEFAULT_SEED};
use natded_core::{check, CheckReport, Formula, Goal, Session};
use serde_json::{json, Map, Value};

use crate::error::ApiError;
use crate::App;

type Shared = State<Arc<App>>;
type ApiResult<T = Json<Value>> = Result<T, ApiError>;

fn parse_body(body: &Bytes) -> ApiResult<Value> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request("", format!("invalid JSON: {e}")))
}

/// Checks that `doc` is an object with every `required` key and no key
/// outside `required` and `optional`.
fn fields<'v>(doc: &'v Value, required: &[&str], optional: &[&str]) -> ApiResult<&'v Map<String, Value>> {
    let map = doc.as_object().ok_or_else(|| ApiError::bad_request("", "expected an object"))?;
    if let Some(key) = map.keys().find(|k| !required.contains(&k.as_str()) && !optional.contains(&k.as_str())) {
        return Err(ApiError::bad_request(format!("/{key}"), "unknown field"));
    }
    if let Some(key) = required.iter().find(|k| !map.contains_key(**k)) {
        return Err(ApiError::bad_request(format!("/{key}"), "missing field"));
    }
    Ok(map)
}

fn nat(map: &Map<String, Value>, key: &str) -> ApiResult<Option<u64>> {
    match map.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v
            .as_u64()
            .map(Some)
            .ok_or_else(|| ApiError::bad_request(format!("/{key}"), "expected a natural number")),
    }
}

fn formula_field(map: &Map<String, Value>, key: &str) -> ApiResult<Formula> {
    decode_formula(&map[key]).map_err(|e| ApiError::decode(&format!("/{key}"), e))
}

fn formula_list(value: &Value, prefix: &str) -> ApiResult<Vec<Formula>> {
    let items = value
        .as_array()
        .ok_or_else(|| ApiError::bad_request(prefix, "expected an array"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, f)| decode_formula(f).map_err(|e| ApiError::decode(&format!("{prefix}/{i}"), e)))
        .collect()
}

fn goal_path(value: &Value) -> ApiResult<Vec<usize>> {
    let items = value
        .as_array()
        .ok_or_else(|| ApiError::bad_request("/path", "expected an array of child indices"))?;
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_u64()
                .and_then(|n| usize::try_from(n).ok())
                .ok_or_else(|| ApiError::bad_request(format!("/path/{i}"), "expected a child index"))
        })
        .collect()
}

/// The state document of a session.
pub fn state(id: &str, s: &Session) -> Value {
    let tree = s.current();
    json!({
        "session_id": id,
        "tree": encode_open_tree(tree),
        "open_goal_paths": s.open_paths(),
        "finished": tree.is_finished(),
        "can_undo": s.can_undo(),
        "can_redo": s.can_redo(),
        "cursor": s.cursor(),
        "history_length": s.history_len(),
        "renderings": {
            "ok_listing": render_open_ok_listing(tree),
            "tree_text": render_open_tree(tree),
        },
    })
}

pub async fn create_session(State(app): Shared, body: Bytes) -> ApiResult<impl IntoResponse> {
    let doc = parse_body(&body)?;
    let map = fields(&doc, &["goal"], &["assumptions"])?;
    let formula = formula_field(map, "goal")?;
    let assumptions = match map.get("assumptions") {
        Some(a) => formula_list(a, "/assumptions")?,
        None => Vec::new(),
    };
    let session = Session::from_goal(Goal::new(formula, assumptions));
    let id = app.store.create(session.clone())?;
    Ok((StatusCode::CREATED, Json(state(&id, &session))))
}

pub async fn get_session(State(app): Shared, Path(id): Path<String>) -> ApiResult {
    let cell = app.store.get(&id)?;
    let session = cell.lock().expect("session lock");
    Ok(Json(state(&id, &session)))
}

pub async fn delete_session(State(app): Shared, Path(id): Path<String>) -> ApiResult<StatusCode> {
    app.store.remove(&id)?;
    Ok(StatusCode::NO_CONTENT)
}

pub async fn apply(State(app): Shared, Path(id): Path<String>, body: Bytes) -> ApiResult {
    let doc = parse_body(&body)?;
    let map = fields(&doc, &["path", "rule"], &["args"])?;
    let path = goal_path(&map["path"])?;
    let rule = decode_rule(&map["rule"]).map_err(|e| ApiError::decode("/rule", e))?;
    let empty = json!({});
    let args = decode_args(map.get("args").unwrap_or(&empty), rule).map_err(|e| ApiError::decode("/args", e))?;
    let ((), session) = app.store.update(&id, |s| Ok(s.apply(&path, rule, args)?))?;
    Ok(Json(state(&id, &session)))
}

pub async fn undo(State(app): Shared, Path(id): Path<String>) -> ApiResult {
    let ((), session) = app.store.update(&id, |s| Ok(s.undo()?))?;
    Ok(Json(state(&id, &session)))
}

pub async fn redo(State(app): Shared, Path(id): Path<String>) -> ApiResult {
    let ((), session) = app.store.update(&id, |s| Ok(s.redo()?))?;
    Ok(Json(state(&id, &session)))
}

pub async fn export(State(app): Shared, Path(id): Path<String>) -> ApiResult {
    let cell = app.store.get(&id)?;
    let proof = cell.lock().expect("session lock").export()?;
    Ok(Json(encode_proof(&proof)))
}

/// The `/api/check` response for a report.
pub fn check_response(report: &CheckReport) -> Value {
    match report {
        CheckReport::Accepted => json!({ "accepted": true }),
        CheckReport::Rejected { path, reason } => json!({
            "accepted": false,
            "failure_path": path,
            "failure_code": reason.code(),
            "failure_reason": reason.to_string(),
        }),
    }
}

pub async fn check_proof(body: Bytes) -> ApiResult {
    let doc = parse_body(&body)?;
    let proof = decode_proof(&doc).map_err(|e| ApiError::decode("", e))?;
    Ok(Json(check_response(&check(&proof))))
}

pub async fn validate(State(app): Shared, body: Bytes) -> ApiResult {
    let doc = parse_body(&body)?;
    let map = fields(&doc, &["formula", "max_size", "budget"], &["seed", "assumptions"])?;
    let formula = formula_field(map, "formula")?;
    let assumptions = match map.get("assumptions") {
        Some(a) => formula_list(a, "/assumptions")?,
        None => Vec::new(),
    };
    let max_size = nat(map, "max_size")?.unwrap_or(0);
    let budget = nat(map, "budget")?.unwrap_or(0);
    let seed = nat(map, "seed")?.unwrap_or(DEFAULT_SEED);
    if max_size == 0 || max_size > app.max_size_cap as u64 {
        return Err(ApiError::unprocessable(
            "LimitExceeded",
            format!("max_size must be between 1 and {}", app.max_size_cap),
        ));
    }
    if budget > app.budget_cap {
        return Err(ApiError::unprocessable(
            "LimitExceeded",
            format!("budget must be at most {}", app.budget_cap),
        ));
    }
    let config = SearchConfig::new(max_size as usize, budget).with_seed(seed);
    let verdict = tokio::task::spawn_blocking(move || entails_with(&assumptions, &formula, &config))
        .await
        .map_err(|e| ApiError::internal("Internal", e.to_string()))?
        .map_err(|e| ApiError::unprocessable(e.code(), e.to_string()))?;
    Ok(Json(verdict_document(&verdict, max_size)))
}

pub fn verdict_document(verdict: &Verdict, max_size: u64) -> Value {
    match verdict {
        Verdict::Valid {
            bound,
            exhaustive,
            checked,
            seed,
        } => json!({
            "verdict": "valid",
            "bound": bound,
            "exhaustive": exhaustive,
            "checked": checked,
            "seed": seed,
        }),
        Verdict::Countermodel { model, seed } => json!({
            "verdict": "countermodel",
            "bound": max_size,
            "exhaustive": seed.is_none(),
            "seed": seed,
            "countermodel": encode_interpretation(model),
            "countermodel_text": model.to_string(),
        }),
    }
}

fn corpus_summary(e: &CorpusEntry) -> Value {
    json!({
        "name": e.name,
        "description": e.description,
        "goal": encode_formula(&e.goal),
        "goal_text": print_formula(&e.goal),
        "has_proof": e.proof.is_some(),
    })
}

pub async fn corpus_list(State(app): Shared) -> Json<Value> {
    Json(Value::Array(app.corpus.iter().map(corpus_summary).collect()))
}

pub async fn corpus_entry(State(app): Shared, Path(name): Path<String>) -> ApiResult {
    let e = app
        .corpus
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| ApiError::not_found("UnknownEntry", format!("no corpus entry {name:?}")))?;
    let mut doc = corpus_summary(e);
    doc["proof"] = e.proof.as_ref().map_or(Value::Null, encode_proof);
    doc["transcript"] = e.transcript.as_ref().map_or(Value::Null, |steps| {
        steps
            .iter()
            .map(|s| json!({ "path": s.path, "rule": s.rule.name(), "args": encode_args(&s.args) }))
            .collect()
    });
    Ok(Json(doc))
}

/// `GET /api/rules?goal=<formula document>&assumptions=<array of formula documents>`
pub async fn rules(Query(query): Query<HashMap<String, String>>) -> ApiResult {
    if let Some(key) = query.keys().find(|k| *k != "goal" && *k != "assumptions") {
        return Err(ApiError::bad_request(format!("/{key}"), "unknown query parameter"));
    }
    let param = |key: &str| -> ApiResult<Option<Value>> {
        query
            .get(key)
            .map(|text| serde_json::from_str(text).map_err(|e| ApiError::bad_request(format!("/{key}"), e.to_string())))
            .transpose()
    };
    let goal = param("goal")?.ok_or_else(|| ApiError::bad_request("/goal", "missing query parameter"))?;
    let formula = decode_formula(&goal).map_err(|e| ApiError::decode("/goal", e))?;
    let assumptions = match param("assumptions")? {
        Some(a) => formula_list(&a, "/assumptions")?,
        None => Vec::new(),
    };
    let rules: Vec<Value> = applicable_rules(&Goal::new(formula, assumptions))
        .into_iter()
        .map(|r| {
            json!({
                "name": r.name(),
                "premises": r.premise_count(),
                "args": r.arg_specs().iter().map(|s| json!({
                    "name": s.slot.name(),
                    "kind": s.slot.kind(),
                    "required": s.required,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Json(json!({ "rules": rules })))
}
