//! Local HTTP/JSON service over sessions and the factbase.
//!
//! | method | path | body | response |
//! |---|---|---|---|
//! | GET | `/health` | | [`Health`] |
//! | GET | `/methods?path=` | | [`MethodView`] list, filtered by file prefix |
//! | GET | `/methods/{id}/features` | | [`Features`] |
//! | POST | `/sessions` | [`StartRequest`] | 201, [`SessionView`] |
//! | GET | `/sessions/{id}` | | [`SessionView`] |
//! | POST | `/sessions/{id}/labels` | [`LabelRequest`] | [`SessionView`] with `outcome` |
//! | GET | `/sessions/{id}/export` | | session file |
//!
//! Errors are [`ErrorBody`]: 400 for invalid input, 404 for unknown ids, 409
//! for label conflicts (with the inconsistency reports) and closed sessions.

mod views;

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path as UrlPath, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use facet_core::{FactBase, Label, LearnError, NodeKind, Outcome, SeedSelection, Session, SessionError, TieBreak};
use serde::Deserialize;
use thiserror::Error;
use tokio::sync::{Mutex, RwLock};
use tower_http::services::ServeDir;

use views::Sources;
pub use views::{
    ErrorBody, FeatureView, Features, Health, IterationView, LabelRequest, LabelView, MethodView, ResultView, SeedView,
    SessionView, StartRequest,
};

const INDEX: &str = include_str!("../static/index.html");

#[derive(Debug, Clone, Default)]
pub struct Config {
    /// Repository the factbase was extracted from, for result snippets.
    pub source_root: Option<PathBuf>,
    /// Each session is written here as `<id>.json` after every change, and
    /// sessions found here at startup are served again.
    pub session_dir: Option<PathBuf>,
    /// Static UI assets; an embedded page is served when absent.
    pub assets: Option<PathBuf>,
}

type Shared = Arc<Mutex<Session>>;

pub struct AppState {
    fb: Arc<FactBase>,
    config: Config,
    sessions: RwLock<HashMap<String, Shared>>,
    next_id: AtomicU64,
}

#[derive(Debug, Error)]
pub enum StateError {
    #[error("cannot read session directory {0}: {1}")]
    Io(PathBuf, std::io::Error),
}

impl AppState {
    pub fn new(fb: FactBase, config: Config) -> Result<Arc<AppState>, StateError> {
        let mut sessions = HashMap::new();
        if let Some(dir) = &config.session_dir {
            std::fs::create_dir_all(dir).map_err(|e| StateError::Io(dir.clone(), e))?;
            for entry in std::fs::read_dir(dir).map_err(|e| StateError::Io(dir.clone(), e))? {
                let path = entry.map_err(|e| StateError::Io(dir.clone(), e))?.path();
                if path.extension().and_then(|e| e.to_str()) != Some("json") {
                    continue;
                }
                match load_session(&path, &fb) {
                    Ok(s) => {
                        sessions.insert(s.id.clone(), Arc::new(Mutex::new(s)));
                    }
                    Err(e) => log::warn!("skipping {}: {e}", path.display()),
                }
            }
        }
        let next = sessions
            .keys()
            .filter_map(|k| k.strip_prefix('s').and_then(|n| n.parse::<u64>().ok()))
            .max()
            .unwrap_or(0);
        Ok(Arc::new(AppState {
            fb: Arc::new(fb),
            config,
            sessions: RwLock::new(sessions),
            next_id: AtomicU64::new(next + 1),
        }))
    }

    pub fn factbase(&self) -> &FactBase {
        &self.fb
    }

    async fn session(&self, id: &str) -> Result<Shared, ApiError> {
        self.sessions
            .read()
            .await
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::NotFound("unknown-session", format!("no session `{id}`")))
    }

    fn persist(&self, s: &Session) -> Result<(), ApiError> {
        if let Some(dir) = &self.config.session_dir {
            std::fs::write(dir.join(format!("{}.json", s.id)), s.to_json())
                .map_err(|e| ApiError::Internal(format!("cannot save session {}: {e}", s.id)))?;
        }
        Ok(())
    }

    fn view(&self, s: &Session, outcome: Option<&str>) -> SessionView {
        let mut sources = Sources::new(self.config.source_root.as_deref());
        SessionView::new(s, &self.fb, &mut sources, outcome)
    }
}

fn load_session(path: &Path, fb: &FactBase) -> Result<Session, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let s = Session::from_json(&text).map_err(|e| e.to_string())?;
    s.check_fingerprint(fb).map_err(|e| e.to_string())?;
    Ok(s)
}

#[derive(Debug, Error)]
pub enum ApiError {
    #[error("{1}")]
    BadRequest(&'static str, String),
    #[error("{1}")]
    NotFound(&'static str, String),
    #[error("{1}")]
    Conflict(&'static str, String, Vec<facet_core::InconsistencyReport>),
    #[error("{0}")]
    Internal(String),
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> ApiError {
        let msg = e.to_string();
        match e {
            SessionError::EmptyBatch => ApiError::BadRequest("empty-batch", msg),
            SessionError::NotInResults(_) => ApiError::BadRequest("not-in-results", msg),
            SessionError::Closed(_) => ApiError::Conflict("session-closed", msg, Vec::new()),
            SessionError::Inconsistent(reports) => ApiError::Conflict("inconsistent-labels", msg, reports),
            SessionError::Fingerprint { .. } => ApiError::Conflict("stale-factbase", msg, Vec::new()),
            SessionError::Learn(LearnError::UnknownMethod(_)) => ApiError::NotFound("unknown-method", msg),
            SessionError::Learn(
                LearnError::EmptySelection(..) | LearnError::NoAnnotations | LearnError::AnnotationOutsideSelection(_),
            ) => ApiError::BadRequest("invalid-seed", msg),
            _ => ApiError::Internal(msg),
        }
    }
}

impl From<JsonRejection> for ApiError {
    fn from(e: JsonRejection) -> ApiError {
        ApiError::BadRequest("invalid-body", e.body_text())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let message = self.to_string();
        let (status, error, reports) = match self {
            ApiError::BadRequest(r, _) => (StatusCode::BAD_REQUEST, r, Vec::new()),
            ApiError::NotFound(r, _) => (StatusCode::NOT_FOUND, r, Vec::new()),
            ApiError::Conflict(r, _, reports) => (StatusCode::CONFLICT, r, reports),
            ApiError::Internal(_) => (StatusCode::INTERNAL_SERVER_ERROR, "internal", Vec::new()),
        };
        let body = ErrorBody {
            error: error.to_string(),
            message,
            reports,
        };
        (status, Json(body)).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

async fn health(State(st): State<Arc<AppState>>) -> Json<Health> {
    Json(Health {
        status: "ok".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        fingerprint: st.fb.fingerprint().into(),
        methods: st.fb.method_nodes().count(),
        facts: st.fb.fact_count(),
    })
}

#[derive(Debug, Deserialize)]
struct MethodsQuery {
    path: Option<String>,
}

async fn methods(State(st): State<Arc<AppState>>, Query(q): Query<MethodsQuery>) -> Json<Vec<MethodView>> {
    let prefix = q.path.unwrap_or_default();
    Json(
        st.fb
            .method_nodes()
            .filter(|&m| st.fb.file_of(m).starts_with(&prefix))
            .map(|m| MethodView::new(&st.fb, m))
            .collect(),
    )
}

async fn features(State(st): State<Arc<AppState>>, UrlPath(id): UrlPath<String>) -> ApiResult<Json<Features>> {
    let fb = &st.fb;
    let m = fb
        .lookup(&id)
        .filter(|&m| fb.node(m).kind == NodeKind::Method)
        .ok_or_else(|| ApiError::NotFound("unknown-method", format!("method `{id}` is not in the factbase")))?;
    Ok(Json(Features {
        method: MethodView::new(fb, m),
        features: fb.method_range(m).skip(1).map(|n| FeatureView::new(fb, n)).collect(),
    }))
}

async fn start(
    State(st): State<Arc<AppState>>,
    body: Result<Json<StartRequest>, JsonRejection>,
) -> ApiResult<(StatusCode, Json<SessionView>)> {
    let Json(req) = body?;
    let fb = &st.fb;
    let m = fb
        .lookup(&req.method_id)
        .filter(|&m| fb.node(m).kind == NodeKind::Method)
        .ok_or_else(|| {
            ApiError::NotFound(
                "unknown-method",
                format!("method `{}` is not in the factbase", req.method_id),
            )
        })?;
    if let Some(bad) = req.annotated_node_ids.iter().find(|n| fb.lookup(n).is_none()) {
        return Err(ApiError::NotFound(
            "unknown-node",
            format!("node `{bad}` is not in the factbase"),
        ));
    }
    let span = fb.node(m).span;
    let lines = req.line_range.unwrap_or((span.start_line, span.end_line));
    if lines.0 > lines.1 {
        return Err(ApiError::BadRequest(
            "invalid-seed",
            format!("empty line range {}-{}", lines.0, lines.1),
        ));
    }
    let id = format!("s{}", st.next_id.fetch_add(1, Ordering::Relaxed));
    let seed = SeedSelection {
        method: req.method_id,
        lines,
        annotated: req.annotated_node_ids,
    };
    let fb2 = st.fb.clone();
    let sid = id.clone();
    let session =
        tokio::task::spawn_blocking(move || Session::start(sid, &fb2, seed, req.bias, TieBreak::Deterministic))
            .await
            .map_err(|e| ApiError::Internal(e.to_string()))??;
    st.persist(&session)?;
    let view = st.view(&session, None);
    st.sessions.write().await.insert(id, Arc::new(Mutex::new(session)));
    Ok((StatusCode::CREATED, Json(view)))
}

async fn show(State(st): State<Arc<AppState>>, UrlPath(id): UrlPath<String>) -> ApiResult<Json<SessionView>> {
    let shared = st.session(&id).await?;
    let s = shared.lock().await;
    Ok(Json(st.view(&s, None)))
}

async fn label(
    State(st): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    body: Result<Json<LabelRequest>, JsonRejection>,
) -> ApiResult<Json<SessionView>> {
    let Json(req) = body?;
    let shared = st.session(&id).await?;
    let batch: Vec<Label> = req
        .positives
        .iter()
        .map(|m| (m, true))
        .chain(req.negatives.iter().map(|m| (m, false)))
        .map(|(m, positive)| Label {
            inspect_ms: req.inspect_ms.get(m).copied(),
            ..Label::new(m.clone(), positive)
        })
        .collect();
    // requests on one session queue here; the lock is held across the
    // specialization so the second of two racing requests sees the first
    let mut guard = shared.lock_owned().await;
    let fb = st.fb.clone();
    let (guard, outcome) = tokio::task::spawn_blocking(move || {
        let mut work = (*guard).clone();
        let outcome = work.apply_labels(&fb, &batch);
        if outcome.is_ok() {
            *guard = work;
        }
        (guard, outcome)
    })
    .await
    .map_err(|e| ApiError::Internal(e.to_string()))?;
    let outcome = match outcome? {
        Outcome::Unchanged => "unchanged",
        Outcome::Refined => "refined",
        Outcome::Infeasible(_) => "infeasible",
    };
    if outcome != "unchanged" {
        st.persist(&guard)?;
    }
    Ok(Json(st.view(&guard, Some(outcome))))
}

async fn export(State(st): State<Arc<AppState>>, UrlPath(id): UrlPath<String>) -> ApiResult<Response> {
    let shared = st.session(&id).await?;
    let s = shared.lock().await;
    Ok((
        [
            (header::CONTENT_TYPE, "application/json".to_string()),
            (
                header::CONTENT_DISPOSITION,
                format!("attachment; filename=\"{}.json\"", s.id),
            ),
        ],
        s.to_json(),
    )
        .into_response())
}

pub fn router(state: Arc<AppState>) -> Router {
    let assets = state.config.assets.clone();
    let api = Router::new()
        .route("/health", get(health))
        .route("/methods", get(methods))
        .route("/methods/{id}/features", get(features))
        .route("/sessions", post(start))
        .route("/sessions/{id}", get(show))
        .route("/sessions/{id}/labels", post(label))
        .route("/sessions/{id}/export", get(export))
        .with_state(state);
    match assets {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.route("/", get(|| async { Html(INDEX) })),
    }
}

/// Serves until the listener fails.
pub async fn serve(listener: tokio::net::TcpListener, state: Arc<AppState>) -> std::io::Result<()> {
    axum::serve(listener, router(state)).await
}
