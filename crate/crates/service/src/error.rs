use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::Json;
use natded_core::formats::DecodeError;
use natded_core::ProverError;
use serde_json::{json, Map, Value};

/// An error response: `{code, message, path?}` plus any extra fields.
#[derive(Debug)]
pub struct ApiError {
    pub status: StatusCode,
    pub code: &'static str,
    pub message: String,
    /// JSON pointer into the request document, for malformed input.
    pub path: Option<String>,
    pub extra: Map<String, Value>,
}

impl ApiError {
    pub fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> ApiError {
        ApiError {
            status,
            code,
            message: message.into(),
            path: None,
            extra: Map::new(),
        }
    }

    pub fn bad_request(path: impl Into<String>, message: impl Into<String>) -> ApiError {
        ApiError {
            path: Some(path.into()),
            ..ApiError::new(StatusCode::BAD_REQUEST, "MalformedDocument", message)
        }
    }

    /// A decoding failure inside the request field at `prefix`.
    pub fn decode(prefix: &str, e: DecodeError) -> ApiError {
        ApiError::bad_request(format!("{prefix}{}", e.path), e.message)
    }

    pub fn unprocessable(code: &'static str, message: impl Into<String>) -> ApiError {
        ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, code, message)
    }

    pub fn not_found(code: &'static str, message: impl Into<String>) -> ApiError {
        ApiError::new(StatusCode::NOT_FOUND, code, message)
    }

    pub fn internal(code: &'static str, message: impl Into<String>) -> ApiError {
        ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, code, message)
    }

    pub fn with(mut self, key: &str, value: Value) -> ApiError {
        self.extra.insert(key.to_string(), value);
        self
    }
}

impl From<ProverError> for ApiError {
    fn from(e: ProverError) -> ApiError {
        let (code, message) = (e.code(), e.to_string());
        match e {
            ProverError::NothingToUndo | ProverError::NothingToRedo => {
                ApiError::new(StatusCode::CONFLICT, code, message)
            }
            ProverError::ProofIncomplete { open_paths } => {
                ApiError::new(StatusCode::CONFLICT, "ProofIncomplete", message).with("open_paths", json!(open_paths))
            }
            ProverError::NotOpen { path } => ApiError::unprocessable("NotOpen", message).with("goal_path", json!(path)),
            ProverError::Kernel(_) => ApiError::unprocessable(code, message),
            ProverError::BadHistory(_) => ApiError::internal(code, message),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let mut body = self.extra;
        body.insert("code".into(), json!(self.code));
        body.insert("message".into(), json!(self.message));
        if let Some(path) = self.path {
            body.insert("path".into(), json!(path));
        }
        (self.status, Json(Value::Object(body))).into_response()
    }
}
