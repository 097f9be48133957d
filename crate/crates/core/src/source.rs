//! Obtaining a machine-reader graph for a competency question, either from
//! a live HTTP endpoint or from Turtle fixtures on disk.

use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::SyntaxError;
use crate::rdf::{parse_ntriples, parse_turtle, Graph};

/// Environment variable holding the machine reader's API key.
pub const API_KEY_ENV: &str = "FRED_API_KEY";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CqPattern {
    /// "When is [object] [relation]?"
    P1,
    /// "What is [object] [relation] [object]?"
    P2,
    /// "Who [relation] [object]?"
    P3,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CompetencyQuestion {
    text: String,
    id: Option<String>,
    pattern: Option<CqPattern>,
}

impl CompetencyQuestion {
    /// Fails when `text` is blank.
    pub fn new(text: impl Into<String>) -> Result<Self, SourceError> {
        let text = text.into();
        if text.trim().is_empty() {
            return Err(SourceError::EmptyQuestion);
        }
        Ok(CompetencyQuestion {
            text: text.trim().to_owned(),
            id: None,
            pattern: None,
        })
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        let id = id.into();
        self.id = (!id.trim().is_empty()).then(|| id.trim().to_owned());
        self
    }

    pub fn with_pattern(mut self, pattern: CqPattern) -> Self {
        self.pattern = Some(pattern);
        self
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn id(&self) -> Option<&str> {
        self.id.as_deref()
    }

    pub fn pattern(&self) -> Option<CqPattern> {
        self.pattern
    }

    /// The id when present, otherwise the slug of the text. Used in
    /// provenance and error reports.
    pub fn label(&self) -> String {
        self.id.clone().unwrap_or_else(|| slug(&self.text))
    }

    pub fn slug(&self) -> String {
        slug(&self.text)
    }
}

/// Lowercases, collapses every run of non-alphanumerics to a single `-`,
/// and strips leading and trailing dashes.
pub fn slug(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut pending_dash = false;
    for c in text.chars() {
        if c.is_alphanumeric() {
            if pending_dash && !out.is_empty() {
                out.push('-');
            }
            pending_dash = false;
            out.extend(c.to_lowercase());
        } else {
            pending_dash = true;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceMode {
    Live,
    Offline,
}

impl fmt::Display for SourceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SourceMode::Live => "live",
            SourceMode::Offline => "offline",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RdfFormat {
    #[default]
    Turtle,
    Ntriples,
}

impl RdfFormat {
    pub fn media_type(self) -> &'static str {
        match self {
            RdfFormat::Turtle => "text/turtle",
            RdfFormat::Ntriples => "application/n-triples",
        }
    }

    pub fn parse(self, body: &str) -> Result<Graph, SyntaxError> {
        match self {
            RdfFormat::Turtle => parse_turtle(body),
            RdfFormat::Ntriples => parse_ntriples(body),
        }
    }
}

/// A secret that never shows up in `Debug` output or logs.
#[derive(Clone, PartialEq, Eq)]
pub struct ApiKey(String);

impl ApiKey {
    pub fn new(key: impl Into<String>) -> Self {
        ApiKey(key.into())
    }

    pub fn expose(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for ApiKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ApiKey(***)")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SourceConfig {
    pub mode: SourceMode,
    pub endpoint_url: Option<String>,
    pub api_key: Option<ApiKey>,
    pub fixture_dir: Option<PathBuf>,
    pub request_timeout: Duration,
    pub output_format: RdfFormat,
    /// Query parameter carrying the sentence.
    pub text_param: String,
    /// Extra query parameters sent with every live request.
    pub extra_params: Vec<(String, String)>,
}

impl SourceConfig {
    pub fn offline(fixture_dir: impl Into<PathBuf>) -> Self {
        SourceConfig {
            mode: SourceMode::Offline,
            endpoint_url: None,
            api_key: None,
            fixture_dir: Some(fixture_dir.into()),
            request_timeout: Duration::from_secs(30),
            output_format: RdfFormat::Turtle,
            text_param: "text".into(),
            extra_params: Vec::new(),
        }
    }

    pub fn live(endpoint_url: impl Into<String>) -> Self {
        SourceConfig {
            mode: SourceMode::Live,
            endpoint_url: Some(endpoint_url.into()),
            fixture_dir: None,
            ..SourceConfig::offline(PathBuf::new())
        }
    }

    pub fn with_api_key(mut self, key: Option<ApiKey>) -> Self {
        self.api_key = key;
        self
    }

    /// Picks up `FRED_API_KEY` unless a key is already set.
    pub fn with_api_key_from_env(mut self) -> Self {
        if self.api_key.is_none() {
            self.api_key = std::env::var(API_KEY_ENV)
                .ok()
                .filter(|k| !k.is_empty())
                .map(ApiKey::new);
        }
        self
    }

    pub fn validate(&self) -> Result<(), SourceError> {
        let invalid = |reason: &str| Err(SourceError::InvalidConfig(reason.to_owned()));
        if self.request_timeout.is_zero() {
            return invalid("request timeout must be positive");
        }
        match self.mode {
            SourceMode::Live => match &self.endpoint_url {
                None => invalid("live mode requires an endpoint URL"),
                Some(u) if !(u.starts_with("http://") || u.starts_with("https://")) => {
                    invalid("endpoint URL must be http(s)")
                }
                Some(_) if self.text_param.is_empty() => invalid("text parameter name is empty"),
                Some(_) => Ok(()),
            },
            SourceMode::Offline => match &self.fixture_dir {
                None => invalid("offline mode requires a fixture directory"),
                Some(_) => Ok(()),
            },
        }
    }

    /// Host (and port) of the live endpoint, for display.
    pub fn endpoint_host(&self) -> Option<String> {
        let url = self.endpoint_url.as_deref()?;
        let rest = url.split_once("://").map(|(_, r)| r).unwrap_or(url);
        let authority = rest.split(['/', '?', '#']).next().unwrap_or(rest);
        let host = authority
            .rsplit_once('@')
            .map(|(_, h)| h)
            .unwrap_or(authority);
        Some(host.to_owned())
    }

    pub fn fixture_path(&self, cq: &CompetencyQuestion) -> Option<PathBuf> {
        self.fixture_dir.as_deref().map(|dir| fixture_path(dir, cq))
    }
}

/// `dir/<slug(text)>.ttl`
pub fn fixture_path(dir: &Path, cq: &CompetencyQuestion) -> PathBuf {
    dir.join(format!("{}.ttl", cq.slug()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HttpRequest {
    pub url: String,
    pub query: Vec<(String, String)>,
    pub headers: Vec<(String, String)>,
    pub timeout: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HttpResponse {
    pub status: u16,
    pub body: String,
}

/// Blocking HTTP transport for live mode. Non-success statuses are
/// returned as responses, not errors.
pub trait Transport: Send + Sync {
    fn get(&self, request: &HttpRequest) -> Result<HttpResponse, String>;
}

#[derive(Debug, Error)]
pub enum SourceError {
    #[error("competency question text is empty")]
    EmptyQuestion,
    #[error("invalid source configuration: {0}")]
    InvalidConfig(String),
    #[error("[{cq}] network failure contacting the machine reader ({mode} mode): {message}")]
    Network {
        cq: String,
        mode: SourceMode,
        message: String,
    },
    #[error("[{cq}] machine reader answered HTTP {status}")]
    Upstream {
        cq: String,
        mode: SourceMode,
        status: u16,
        body: String,
    },
    #[error("[{cq}] unparsable machine-reader graph ({mode} mode, {origin}): {error}")]
    Parse {
        cq: String,
        mode: SourceMode,
        origin: String,
        error: SyntaxError,
    },
    #[error("[{cq}] missing fixture {}", path.display())]
    MissingFixture { cq: String, path: PathBuf },
    #[error("[{cq}] cannot read fixture {}: {message}", path.display())]
    FixtureIo {
        cq: String,
        path: PathBuf,
        message: String,
    },
}

impl SourceError {
    /// Label of the question the failing call was made for.
    pub fn cq(&self) -> Option<&str> {
        match self {
            SourceError::Network { cq, .. }
            | SourceError::Upstream { cq, .. }
            | SourceError::Parse { cq, .. }
            | SourceError::MissingFixture { cq, .. }
            | SourceError::FixtureIo { cq, .. } => Some(cq),
            SourceError::EmptyQuestion | SourceError::InvalidConfig(_) => None,
        }
    }
}

/// Fetches graphs according to a [`SourceConfig`]. Stateless apart from
/// the configuration; safe to share between threads.
pub struct MachineReader {
    config: SourceConfig,
    transport: Option<Box<dyn Transport>>,
}

impl fmt::Debug for MachineReader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MachineReader")
            .field("config", &self.config)
            .field(
                "transport",
                &self.transport.as_ref().map(|_| "dyn Transport"),
            )
            .finish()
    }
}

impl MachineReader {
    /// A reader with the default HTTP transport (when the `live` feature is on).
    pub fn new(config: SourceConfig) -> Result<Self, SourceError> {
        config.validate()?;
        #[cfg(feature = "live")]
        let transport: Option<Box<dyn Transport>> = Some(Box::new(crate::http::UreqTransport));
        #[cfg(not(feature = "live"))]
        let transport: Option<Box<dyn Transport>> = None;
        Ok(MachineReader { config, transport })
    }

    pub fn with_transport(
        config: SourceConfig,
        transport: Box<dyn Transport>,
    ) -> Result<Self, SourceError> {
        config.validate()?;
        Ok(MachineReader {
            config,
            transport: Some(transport),
        })
    }

    pub fn config(&self) -> &SourceConfig {
        &self.config
    }

    pub fn fetch_graph(&self, cq: &CompetencyQuestion) -> Result<Graph, SourceError> {
        match self.config.mode {
            SourceMode::Offline => self.fetch_fixture(cq),
            SourceMode::Live => self.fetch_live(cq),
        }
    }

    fn fetch_fixture(&self, cq: &CompetencyQuestion) -> Result<Graph, SourceError> {
        let Some(path) = self.config.fixture_path(cq) else {
            return Err(SourceError::InvalidConfig(
                "offline mode requires a fixture directory".into(),
            ));
        };
        let text = match std::fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                return Err(SourceError::MissingFixture {
                    cq: cq.label(),
                    path,
                });
            }
            Err(e) => {
                return Err(SourceError::FixtureIo {
                    cq: cq.label(),
                    path,
                    message: e.to_string(),
                })
            }
        };
        parse_turtle(&text).map_err(|error| SourceError::Parse {
            cq: cq.label(),
            mode: SourceMode::Offline,
            origin: path.display().to_string(),
            error,
        })
    }

    fn fetch_live(&self, cq: &CompetencyQuestion) -> Result<Graph, SourceError> {
        let network = |message: String| SourceError::Network {
            cq: cq.label(),
            mode: SourceMode::Live,
            message,
        };
        let transport = self
            .transport
            .as_deref()
            .ok_or_else(|| network("no HTTP transport compiled in".into()))?;
        let request = self.request_for(cq);
        log::debug!(
            "querying machine reader at {} for {}",
            request.url,
            cq.label()
        );
        let response = transport.get(&request).map_err(network)?;
        if !(200..300).contains(&response.status) {
            return Err(SourceError::Upstream {
                cq: cq.label(),
                mode: SourceMode::Live,
                status: response.status,
                body: response.body,
            });
        }
        self.config
            .output_format
            .parse(&response.body)
            .map_err(|error| SourceError::Parse {
                cq: cq.label(),
                mode: SourceMode::Live,
                origin: request.url.clone(),
                error,
            })
    }

    /// The single GET request a live fetch issues.
    pub fn request_for(&self, cq: &CompetencyQuestion) -> HttpRequest {
        let mut query = vec![(self.config.text_param.clone(), cq.text().to_owned())];
        query.extend(self.config.extra_params.iter().cloned());
        let mut headers = vec![(
            "Accept".to_owned(),
            self.config.output_format.media_type().to_owned(),
        )];
        if let Some(key) = &self.config.api_key {
            headers.push((
                "Authorization".to_owned(),
                format!("Bearer {}", key.expose()),
            ));
        }
        HttpRequest {
            url: self.config.endpoint_url.clone().unwrap_or_default(),
            query,
            headers,
            timeout: self.config.request_timeout,
        }
    }
}
