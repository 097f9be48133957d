//! Machine-reader settings from flags, environment and `frodo.toml`,
//! in that order of precedence.

use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::Args;
use serde::Deserialize;

use frodo_core::source::{ApiKey, SourceConfig, API_KEY_ENV};

use crate::Failure;

pub const ENDPOINT_ENV: &str = "FRODO_ENDPOINT";
pub const DEFAULT_CONFIG: &str = "frodo.toml";

#[derive(Debug, Clone, Default, Args)]
pub struct SourceFlags {
    /// Read graphs from fixture files instead of a live machine reader.
    #[arg(long)]
    pub offline: bool,
    /// Fixture directory holding `<slug>.ttl` graphs.
    #[arg(long, value_name = "DIR")]
    pub fixtures: Option<PathBuf>,
    /// Machine-reader endpoint URL.
    #[arg(long, value_name = "URL")]
    pub endpoint: Option<String>,
    /// Request timeout in seconds.
    #[arg(long, value_name = "SECS")]
    pub timeout: Option<u64>,
    /// Configuration file (default: ./frodo.toml when present).
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub endpoint: Option<String>,
    pub api_key: Option<String>,
    pub offline: Option<bool>,
    pub fixtures: Option<PathBuf>,
    pub timeout: Option<u64>,
    pub jobs: Option<usize>,
    pub out_dir: Option<PathBuf>,
    pub namespace: Option<String>,
    pub cors_origins: Option<Vec<String>>,
}

impl FileConfig {
    /// Reads `path`, or `./frodo.toml` if no path is given and it exists.
    /// Relative paths inside the file are taken relative to the file.
    pub fn load(path: Option<&Path>) -> Result<FileConfig, Failure> {
        let (path, required) = match path {
            Some(p) => (p.to_path_buf(), true),
            None => (PathBuf::from(DEFAULT_CONFIG), false),
        };
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if !required && e.kind() == std::io::ErrorKind::NotFound => {
                return Ok(FileConfig::default())
            }
            Err(e) => return Err(Failure::Io(format!("cannot read {}: {e}", path.display()))),
        };
        let mut cfg: FileConfig = toml::from_str(&text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let base = path.parent().unwrap_or(Path::new(""));
        for p in [&mut cfg.fixtures, &mut cfg.out_dir].into_iter().flatten() {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(cfg)
    }
}

/// The environment variables the CLI consults.
#[derive(Debug, Clone, Default)]
pub struct Env {
    pub api_key: Option<String>,
    pub endpoint: Option<String>,
}

impl Env {
    pub fn from_process() -> Env {
        let var = |k| {
            std::env::var(k)
                .ok()
                .filter(|v: &String| !v.trim().is_empty())
        };
        Env {
            api_key: var(API_KEY_ENV),
            endpoint: var(ENDPOINT_ENV),
        }
    }
}

pub fn resolve_source(
    flags: &SourceFlags,
    env: &Env,
    file: &FileConfig,
) -> Result<SourceConfig, Failure> {
    let fixtures = flags.fixtures.clone().or_else(|| file.fixtures.clone());
    let endpoint = flags
        .endpoint
        .clone()
        .or_else(|| env.endpoint.clone())
        .or_else(|| file.endpoint.clone());
    // An explicit flag decides the mode; otherwise an endpoint from the
    // environment beats an offline setting in the file.
    let offline = if flags.offline {
        true
    } else if flags.endpoint.is_some() || env.endpoint.is_some() {
        false
    } else {
        file.offline.unwrap_or(false) || (file.endpoint.is_none() && fixtures.is_some())
    };
    let mut config = if offline {
        let dir =
            fixtures.ok_or_else(|| Failure::Usage("offline mode needs --fixtures <DIR>".into()))?;
        SourceConfig::offline(dir)
    } else {
        let url = endpoint.ok_or_else(|| {
            Failure::Usage(format!(
                "no machine reader configured: pass --endpoint <URL>, set {ENDPOINT_ENV}, or use --offline --fixtures <DIR>"
            ))
        })?;
        let key = env
            .api_key
            .clone()
            .or_else(|| file.api_key.clone())
            .map(ApiKey::new);
        SourceConfig::live(url).with_api_key(key)
    };
    if let Some(secs) = flags.timeout.or(file.timeout) {
        config.request_timeout = Duration::from_secs(secs);
    }
    config
        .validate()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use frodo_core::source::SourceMode;

    fn flags() -> SourceFlags {
        SourceFlags::default()
    }

    #[test]
    fn flag_beats_env_beats_file() {
        let file = FileConfig {
            endpoint: Some("http://file/".into()),
            ..Default::default()
        };
        let env = Env {
            endpoint: Some("http://env/".into()),
            ..Default::default()
        };
        let f = SourceFlags {
            endpoint: Some("http://flag/".into()),
            ..flags()
        };
        let url =
            |f: &SourceFlags, e: &Env| resolve_source(f, e, &file).unwrap().endpoint_url.unwrap();
        assert_eq!(url(&f, &env), "http://flag/");
        assert_eq!(url(&flags(), &env), "http://env/");
        assert_eq!(url(&flags(), &Env::default()), "http://file/");
    }

    #[test]
    fn key_from_env_then_file() {
        let file = FileConfig {
            endpoint: Some("http://file/".into()),
            api_key: Some("from-file".into()),
            ..Default::default()
        };
        let env = Env {
            api_key: Some("from-env".into()),
            ..Default::default()
        };
        let key = |e: &Env| resolve_source(&flags(), e, &file).unwrap().api_key.unwrap();
        assert_eq!(key(&env).expose(), "from-env");
        assert_eq!(key(&Env::default()).expose(), "from-file");
    }

    #[test]
    fn offline_flag_overrides_endpoint_env() {
        let f = SourceFlags {
            offline: true,
            fixtures: Some("fx".into()),
            ..flags()
        };
        let env = Env {
            endpoint: Some("http://env/".into()),
            ..Default::default()
        };
        let c = resolve_source(&f, &env, &FileConfig::default()).unwrap();
        assert_eq!(c.mode, SourceMode::Offline);
        assert_eq!(c.fixture_dir.unwrap(), PathBuf::from("fx"));
    }

    #[test]
    fn file_fixtures_alone_mean_offline() {
        let file = FileConfig {
            fixtures: Some("fx".into()),
            timeout: Some(5),
            ..Default::default()
        };
        let c = resolve_source(&flags(), &Env::default(), &file).unwrap();
        assert_eq!(c.mode, SourceMode::Offline);
        assert_eq!(c.request_timeout, Duration::from_secs(5));
    }

    #[test]
    fn nothing_configured_is_usage_error() {
        let e = resolve_source(&flags(), &Env::default(), &FileConfig::default()).unwrap_err();
        assert!(matches!(e, Failure::Usage(_)));
        let f = SourceFlags {
            offline: true,
            ..flags()
        };
        assert!(matches!(
            resolve_source(&f, &Env::default(), &FileConfig::default()),
            Err(Failure::Usage(_))
        ));
        let f = SourceFlags {
            endpoint: Some("ftp://x".into()),
            ..flags()
        };
        assert!(matches!(
            resolve_source(&f, &Env::default(), &FileConfig::default()),
            Err(Failure::Usage(_))
        ));
    }

    #[test]
    fn file_paths_are_relative_to_the_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("frodo.toml");
        std::fs::write(&path, "offline = true\nfixtures = \"fx\"\njobs = 3\n").unwrap();
        let cfg = FileConfig::load(Some(&path)).unwrap();
        assert_eq!(cfg.fixtures.unwrap(), dir.path().join("fx"));
        assert_eq!(cfg.jobs, Some(3));
    }

    #[test]
    fn bad_files() {
        let dir = tempfile::tempdir().unwrap();
        let missing = dir.path().join("nope.toml");
        assert!(matches!(
            FileConfig::load(Some(&missing)),
            Err(Failure::Io(_))
        ));
        let path = dir.path().join("frodo.toml");
        std::fs::write(&path, "colour = \"blue\"\n").unwrap();
        assert!(matches!(
            FileConfig::load(Some(&path)),
            Err(Failure::Usage(_))
        ));
    }
}
