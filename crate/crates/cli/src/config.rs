//! Optional TOML configuration. Keys mirror the command-line flags; flags
//! win over the environment, which wins over the file.
//!
//! ```toml
//! workers = 4
//!
//! [eigen]
//! tol = 1e-9
//! exact = false
//! spectrum = false
//!
//! [search]
//! max_vertices = 20
//! tol = 1e-9
//! phase = "both"
//! node_budget = 100000
//! ```

use serde::Deserialize;

pub const WORKERS_ENV: &str = "HOFFGRAPH_WORKERS";

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub workers: Option<usize>,
    #[serde(default)]
    pub eigen: EigenConfig,
    #[serde(default)]
    pub search: SearchSection,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenConfig {
    pub tol: Option<f64>,
    pub exact: Option<bool>,
    pub spectrum: Option<bool>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchSection {
    pub max_vertices: Option<usize>,
    pub tol: Option<f64>,
    pub phase: Option<String>,
    pub node_budget: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }
}

/// Worker count: flag, then environment, then config file.
pub fn workers(flag: Option<usize>, config: &Config) -> Result<Option<usize>, String> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(WORKERS_ENV) {
        Ok(v) if !v.trim().is_empty() => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{WORKERS_ENV} must be a positive integer, got `{v}`")),
        _ => Ok(config.workers),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_keys() {
        let c = Config::parse("workers = 2\n[search]\nmax_vertices = 16\nphase = \"2\"\n[eigen]\nexact = true\n").unwrap();
        assert_eq!(c.workers, Some(2));
        assert_eq!(c.search.max_vertices, Some(16));
        assert_eq!(c.search.phase.as_deref(), Some("2"));
        assert_eq!(c.eigen.exact, Some(true));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Config::parse("[search]\nmax_vertex = 3\n").is_err());
        assert!(Config::parse("threads = 3\n").is_err());
    }
}
