//! HTTP front end: drafting, merging and scoring as JSON endpoints.
//!
//! The service keeps no per-client state. A UI accumulates drafts itself and
//! posts them back to `/api/merge`.

use std::future::Future;
use std::io;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, HeaderValue, Method, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::Router;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tokio::net::TcpListener;
use tower_http::cors::{AllowOrigin, CorsLayer};

use frodo_core::draft::{draft_cq, merge_drafts, DraftSettings, MergeConflict, OntologyDraft};
use frodo_core::metrics::compute_metrics;
use frodo_core::owl::{emit_manchester, emit_turtle};
use frodo_core::rdf::parse_turtle;
use frodo_core::source::{CompetencyQuestion, MachineReader, SourceError, SourceMode};

/// A draft with both serializations, as returned by `/api/draft` and
/// `/api/merge` and written by the CLI's `--json` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DraftPayload {
    pub draft: OntologyDraft,
    pub manchester: String,
    pub turtle: String,
    pub warnings: Vec<String>,
}

impl DraftPayload {
    pub fn new(draft: OntologyDraft, warnings: Vec<String>) -> Self {
        DraftPayload {
            manchester: emit_manchester(&draft),
            turtle: emit_turtle(&draft),
            draft,
            warnings,
        }
    }

    /// Canonical JSON text, pretty-printed with a trailing newline. The CLI
    /// and the service both emit exactly this.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("payload serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Deserialize)]
pub struct DraftRequest {
    pub cq: String,
    #[serde(default)]
    pub id: Option<String>,
}

#[derive(Debug, Deserialize)]
pub struct MergeRequest {
    pub drafts: Vec<OntologyDraft>,
}

#[derive(Debug, Deserialize)]
pub struct MetricsRequest {
    pub turtle: String,
}

#[derive(Debug, Serialize)]
pub struct Health {
    pub status: &'static str,
    pub mode: SourceMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub endpoint: Option<String>,
}

/// Which browser origins may call the API. `Any` suits local use.
#[derive(Debug, Clone, Default)]
pub enum CorsOrigins {
    #[default]
    Any,
    List(Vec<String>),
}

pub struct AppState {
    pub reader: MachineReader,
    pub settings: DraftSettings,
}

pub fn router(state: AppState, cors: &CorsOrigins) -> Router {
    let origin = match cors {
        CorsOrigins::Any => AllowOrigin::any(),
        CorsOrigins::List(list) => AllowOrigin::list(
            list.iter()
                .filter_map(|o| HeaderValue::from_str(o).ok())
                .collect::<Vec<_>>(),
        ),
    };
    let cors = CorsLayer::new()
        .allow_origin(origin)
        .allow_methods([Method::GET, Method::POST])
        .allow_headers([header::CONTENT_TYPE]);
    Router::new()
        .route("/api/health", get(health))
        .route("/api/draft", post(draft))
        .route("/api/merge", post(merge))
        .route("/api/metrics", post(metrics))
        .layer(cors)
        .with_state(Arc::new(state))
}

type Shared = State<Arc<AppState>>;

fn json_response(status: StatusCode, body: String) -> Response {
    (status, [(header::CONTENT_TYPE, "application/json")], body).into_response()
}

fn error(status: StatusCode, body: serde_json::Value) -> Response {
    json_response(status, body.to_string())
}

fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, Box<Response>> {
    serde_json::from_slice(body).map_err(|e| {
        Box::new(error(
            StatusCode::BAD_REQUEST,
            serde_json::json!({ "error": format!("malformed request body: {e}") }),
        ))
    })
}

async fn health(State(state): Shared) -> Response {
    let config = state.reader.config();
    let h = Health {
        status: "ok",
        mode: config.mode,
        endpoint: config.endpoint_host(),
    };
    json_response(
        StatusCode::OK,
        serde_json::to_string(&h).expect("health serializes"),
    )
}

fn source_kind(e: &SourceError) -> &'static str {
    match e {
        SourceError::EmptyQuestion => "empty_question",
        SourceError::InvalidConfig(_) => "config",
        SourceError::Network { .. } => "network",
        SourceError::Upstream { .. } => "upstream",
        SourceError::Parse { .. } => "parse",
        SourceError::MissingFixture { .. } => "missing_fixture",
        SourceError::FixtureIo { .. } => "fixture_io",
    }
}

/// Runs the whole pipeline for one question.
pub fn draft_payload(
    reader: &MachineReader,
    settings: &DraftSettings,
    cq: &CompetencyQuestion,
) -> Result<DraftPayload, SourceError> {
    let g = reader.fetch_graph(cq)?;
    let outcome = draft_cq(cq, &g, settings);
    let warnings = outcome.warnings.iter().map(|w| w.to_string()).collect();
    Ok(DraftPayload::new(outcome.draft, warnings))
}

async fn draft(State(state): Shared, body: Bytes) -> Response {
    let req: DraftRequest = match parse_body(&body) {
        Ok(r) => r,
        Err(resp) => return *resp,
    };
    let mut cq = match CompetencyQuestion::new(req.cq) {
        Ok(cq) => cq,
        Err(e) => {
            return error(
                StatusCode::BAD_REQUEST,
                serde_json::json!({ "error": e.to_string() }),
            )
        }
    };
    if let Some(id) = req.id.filter(|s| !s.trim().is_empty()) {
        cq = cq.with_id(id);
    }
    // Fetching may block on the network or the file system.
    let task = {
        let state = state.clone();
        tokio::task::spawn_blocking(move || draft_payload(&state.reader, &state.settings, &cq))
    };
    match task.await {
        Ok(Ok(payload)) => {
            let status = if payload.draft.is_empty() {
                StatusCode::UNPROCESSABLE_ENTITY
            } else {
                StatusCode::OK
            };
            json_response(status, payload.to_json())
        }
        Ok(Err(e)) => {
            log::warn!("{e}");
            let status = match e {
                SourceError::EmptyQuestion => StatusCode::BAD_REQUEST,
                SourceError::InvalidConfig(_) => StatusCode::INTERNAL_SERVER_ERROR,
                _ => StatusCode::BAD_GATEWAY,
            };
            error(
                status,
                serde_json::json!({ "error": e.to_string(), "kind": source_kind(&e), "cq": e.cq() }),
            )
        }
        Err(e) => error(
            StatusCode::INTERNAL_SERVER_ERROR,
            serde_json::json!({ "error": format!("drafting task failed: {e}") }),
        ),
    }
}

async fn merge(body: Bytes) -> Response {
    let req: MergeRequest = match parse_body(&body) {
        Ok(r) => r,
        Err(resp) => return *resp,
    };
    if req.drafts.is_empty() {
        return error(
            StatusCode::BAD_REQUEST,
            serde_json::json!({ "error": "at least one draft is required" }),
        );
    }
    match merge_drafts(&req.drafts) {
        Ok(d) => json_response(StatusCode::OK, DraftPayload::new(d, Vec::new()).to_json()),
        Err(e) => {
            let entities: Vec<&str> = e
                .conflicts
                .iter()
                .map(|c: &MergeConflict| c.entity.as_str())
                .collect();
            error(
                StatusCode::CONFLICT,
                serde_json::json!({ "error": e.to_string(), "entities": entities, "conflicts": e.conflicts }),
            )
        }
    }
}

async fn metrics(body: Bytes) -> Response {
    let req: MetricsRequest = match parse_body(&body) {
        Ok(r) => r,
        Err(resp) => return *resp,
    };
    match parse_turtle(&req.turtle) {
        Ok(g) => json_response(
            StatusCode::OK,
            serde_json::to_string(&compute_metrics(&g)).expect("report serializes"),
        ),
        Err(e) => error(
            StatusCode::BAD_REQUEST,
            serde_json::json!({
                "error": format!("unparsable Turtle: {e}"),
                "line": e.line,
                "column": e.column,
                "message": e.message,
            }),
        ),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ServeError {
    #[error("address {0} is already in use")]
    PortInUse(SocketAddr),
    #[error("cannot bind {addr}: {source}")]
    Bind { addr: SocketAddr, source: io::Error },
    #[error("server failed: {0}")]
    Io(#[from] io::Error),
}

pub async fn bind(addr: SocketAddr) -> Result<TcpListener, ServeError> {
    TcpListener::bind(addr).await.map_err(|source| {
        if source.kind() == io::ErrorKind::AddrInUse {
            ServeError::PortInUse(addr)
        } else {
            ServeError::Bind { addr, source }
        }
    })
}

/// Serves until `shutdown` resolves, then drains in-flight requests.
pub async fn serve<F>(listener: TcpListener, app: Router, shutdown: F) -> Result<(), ServeError>
where
    F: Future<Output = ()> + Send + 'static,
{
    axum::serve(listener, app)
        .with_graceful_shutdown(shutdown)
        .await?;
    Ok(())
}

/// Resolves on Ctrl-C.
pub async fn interrupted() {
    if let Err(e) = tokio::signal::ctrl_c().await {
        log::error!("cannot listen for interrupts: {e}");
        std::future::pending::<()>().await;
    }
}
