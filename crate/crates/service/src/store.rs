//! Live sessions, keyed by random tokens, with optional write-through
//! persistence to `<dir>/<id>.ndsession`.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use natded_core::formats::{decode_session, encode_session};
use natded_core::Session;

use crate::error::ApiError;
use crate::StartupError;

const EXTENSION: &str = "ndsession";

pub struct Store {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    dir: Option<PathBuf>,
}

fn new_id() -> String {
    uuid::Uuid::new_v4().simple().to_string()
}

fn valid_id(id: &str) -> bool {
    !id.is_empty() && id.len() <= 64 && id.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_')
}

impl Store {
    /// An in-memory store, or one backed by `dir`, reloading the sessions
    /// already saved there.
    pub fn open(dir: Option<&Path>) -> Result<Store, StartupError> {
        let mut sessions = HashMap::new();
        if let Some(dir) = dir {
            let io_err = |source| StartupError::Persist {
                path: dir.display().to_string(),
                source,
            };
            fs::create_dir_all(dir).map_err(io_err)?;
            for entry in fs::read_dir(dir).map_err(io_err)? {
                let path = entry.map_err(io_err)?.path();
                if path.extension().is_none_or(|e| e != EXTENSION) {
                    continue;
                }
                let Some(id) = path.file_stem().and_then(|s| s.to_str()).filter(|s| valid_id(s)) else {
                    continue;
                };
                let shown = path.display().to_string();
                let text = fs::read_to_string(&path).map_err(|source| StartupError::Persist {
                    path: shown.clone(),
                    source,
                })?;
                let session = serde_json::from_str(&text)
                    .map_err(|e| e.to_string())
                    .and_then(|doc| decode_session(&doc).map_err(|e| e.to_string()))
                    .map_err(|message| StartupError::Restore { path: shown, message })?;
                sessions.insert(id.to_string(), Arc::new(Mutex::new(session)));
            }
        }
        Ok(Store {
            sessions: RwLock::new(sessions),
            dir: dir.map(Path::to_path_buf),
        })
    }

    pub fn len(&self) -> usize {
        self.sessions.read().expect("session map").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn create(&self, session: Session) -> Result<String, ApiError> {
        let id = new_id();
        self.save(&id, &session)?;
        self.sessions
            .write()
            .expect("session map")
            .insert(id.clone(), Arc::new(Mutex::new(session)));
        Ok(id)
    }

    pub fn get(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.sessions
            .read()
            .expect("session map")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::not_found("UnknownSession", format!("no session {id:?}")))
    }

    pub fn remove(&self, id: &str) -> Result<(), ApiError> {
        self.sessions
            .write()
            .expect("session map")
            .remove(id)
            .ok_or_else(|| ApiError::not_found("UnknownSession", format!("no session {id:?}")))?;
        if let Some(path) = self.path(id) {
            match fs::remove_file(&path) {
                Ok(()) => {}
                Err(e) if e.kind() == io::ErrorKind::NotFound => {}
                Err(e) => return Err(ApiError::internal("PersistFailed", format!("{}: {e}", path.display()))),
            }
        }
        Ok(())
    }

    /// Runs `edit` on a copy of the session, saves the copy and only then
    /// makes it current, all under the session's lock.
    pub fn update<T>(
        &self,
        id: &str,
        edit: impl FnOnce(&mut Session) -> Result<T, ApiError>,
    ) -> Result<(T, Session), ApiError> {
        let cell = self.get(id)?;
        let mut guard = cell.lock().expect("session lock");
        let mut next = guard.clone();
        let out = edit(&mut next)?;
        self.save(id, &next)?;
        *guard = next;
        Ok((out, guard.clone()))
    }

    fn path(&self, id: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{id}.{EXTENSION}")))
    }

    fn save(&self, id: &str, session: &Session) -> Result<(), ApiError> {
        let Some(path) = self.path(id) else {
            return Ok(());
        };
        let text = serde_json::to_string(&encode_session(session)).expect("documents serialize");
        let tmp = path.with_extension(format!("{EXTENSION}.tmp"));
        fs::write(&tmp, text)
            .and_then(|()| fs::rename(&tmp, &path))
            .map_err(|e| ApiError::internal("PersistFailed", format!("{}: {e}", path.display())))
    }
}
