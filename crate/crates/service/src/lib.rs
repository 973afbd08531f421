//! HTTP interface to proof sessions, proof checking and bounded model
//! checking. JSON in and out; binds to localhost unless told otherwise.
//!
//! | method | path | |
//! |---|---|---|
//! | POST | `/api/sessions` | `{goal, assumptions?}` → session state |
//! | GET, DELETE | `/api/sessions/{id}` | |
//! | POST | `/api/sessions/{id}/apply` | `{path, rule, args?}` |
//! | POST | `/api/sessions/{id}/undo`, `/redo` | |
//! | GET | `/api/sessions/{id}/export` | proof document |
//! | POST | `/api/check` | proof document → report |
//! | POST | `/api/models/validate` | `{formula, max_size, budget, seed?, assumptions?}` |
//! | GET | `/api/corpus`, `/api/corpus/{name}` | |
//! | GET | `/api/rules?goal=…&assumptions=…` | |
//!
//! Everything else falls through to the static assets.

mod api;
mod error;
mod store;

use std::env;
use std::io;
use std::net::{Ipv4Addr, SocketAddr};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use axum::response::Html;
use axum::routing::{get, post};
use axum::Router;
use natded_core::corpus::{self, CorpusEntry, LoadError};
use thiserror::Error;
use tower_http::services::ServeDir;

pub use api::{check_response, state, verdict_document};
pub use error::ApiError;
pub use store::Store;

pub const DEFAULT_PORT: u16 = 8606;

const INDEX: &str = include_str!("../static/index.html");

#[derive(Clone, Debug)]
pub struct Config {
    pub addr: SocketAddr,
    /// Replaces the bundled corpus with the `.ndproof` / `.fol` files here.
    pub corpus_dir: Option<PathBuf>,
    /// Sessions are saved here after every change and reloaded at startup.
    pub persist_dir: Option<PathBuf>,
    /// Static assets served at `/`; a short built-in page otherwise.
    pub static_dir: Option<PathBuf>,
    /// Largest `budget` accepted by `/api/models/validate`.
    pub budget_cap: u64,
    /// Largest `max_size` accepted by `/api/models/validate`.
    pub max_size_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            addr: SocketAddr::from((Ipv4Addr::LOCALHOST, DEFAULT_PORT)),
            corpus_dir: None,
            persist_dir: None,
            static_dir: None,
            budget_cap: 100_000,
            max_size_cap: 6,
        }
    }
}

impl Config {
    /// Defaults overridden by `NATDED_PORT`, `NATDED_CORPUS_DIR`,
    /// `NATDED_PERSIST_DIR`, `NATDED_STATIC_DIR` and `NATDED_BUDGET_CAP`.
    pub fn from_env() -> Result<Config, StartupError> {
        let mut config = Config::default();
        let var = |key: &str| env::var(key).ok().filter(|v| !v.is_empty());
        if let Some(port) = var("NATDED_PORT") {
            config.addr.set_port(port.parse().map_err(|_| StartupError::Config(format!("NATDED_PORT={port}")))?);
        }
        if let Some(cap) = var("NATDED_BUDGET_CAP") {
            config.budget_cap = cap.parse().map_err(|_| StartupError::Config(format!("NATDED_BUDGET_CAP={cap}")))?;
        }
        config.corpus_dir = var("NATDED_CORPUS_DIR").map(PathBuf::from);
        config.persist_dir = var("NATDED_PERSIST_DIR").map(PathBuf::from);
        config.static_dir = var("NATDED_STATIC_DIR").map(PathBuf::from);
        Ok(config)
    }
}

#[derive(Debug, Error)]
pub enum StartupError {
    #[error("bad configuration: {0}")]
    Config(String),
    #[error("loading corpus: {0}")]
    Corpus(#[from] LoadError),
    #[error("{path}: {source}")]
    Persist { path: String, source: io::Error },
    #[error("restoring session {path}: {message}")]
    Restore { path: String, message: String },
    #[error("static directory {0} does not exist")]
    Static(String),
    #[error("binding {addr}: {source}")]
    Bind { addr: SocketAddr, source: io::Error },
}

/// Shared state of a running service.
pub struct App {
    pub store: Store,
    pub corpus: Vec<CorpusEntry>,
    pub budget_cap: u64,
    pub max_size_cap: usize,
}

impl App {
    pub fn new(config: &Config) -> Result<App, StartupError> {
        let corpus = match &config.corpus_dir {
            Some(dir) => corpus::load_dir(dir)?,
            None => corpus::corpus(),
        };
        Ok(App {
            store: Store::open(config.persist_dir.as_deref())?,
            corpus,
            budget_cap: config.budget_cap,
            max_size_cap: config.max_size_cap,
        })
    }
}

pub fn router(app: Arc<App>, static_dir: Option<&Path>) -> Router {
    let api = Router::new()
        .route("/sessions", post(api::create_session))
        .route("/sessions/{id}", get(api::get_session).delete(api::delete_session))
        .route("/sessions/{id}/apply", post(api::apply))
        .route("/sessions/{id}/undo", post(api::undo))
        .route("/sessions/{id}/redo", post(api::redo))
        .route("/sessions/{id}/export", get(api::export))
        .route("/check", post(api::check_proof))
        .route("/models/validate", post(api::validate))
        .route("/corpus", get(api::corpus_list))
        .route("/corpus/{name}", get(api::corpus_entry))
        .route("/rules", get(api::rules))
        .fallback(|| async { ApiError::not_found("UnknownRoute", "no such endpoint") })
        .with_state(app);
    let root = Router::new().nest("/api", api);
    match static_dir {
        Some(dir) => root.fallback_service(ServeDir::new(dir)),
        None => root.route("/", get(|| async { Html(INDEX) })),
    }
}

/// Builds the app from `config` and serves until interrupted.
pub async fn serve(config: Config) -> Result<(), StartupError> {
    if let Some(dir) = &config.static_dir {
        if !dir.is_dir() {
            return Err(StartupError::Static(dir.display().to_string()));
        }
    }
    let app = Arc::new(App::new(&config)?);
    let routes = router(app, config.static_dir.as_deref());
    let listener = tokio::net::TcpListener::bind(config.addr)
        .await
        .map_err(|source| StartupError::Bind { addr: config.addr, source })?;
    let addr = listener.local_addr().unwrap_or(config.addr);
    eprintln!("natded service listening on http://{addr}");
    axum::serve(listener, routes)
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
        .map_err(|source| StartupError::Bind { addr, source })
}
