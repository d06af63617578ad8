//! Command-line support for the biased Maker-Breaker domination game: graph
//! and transcript formats, named graph families, strategy lookup and the
//! regression battery.

pub mod battery;
pub mod families;
pub mod formats;
pub mod strategies;

use std::path::Path;

use mbd_core::graph::Graph;
use thiserror::Error;

use families::{parse_family_spec, FamilyError};
use formats::{parse_graph6, parse_graph_auto, FormatError};

/// Process exit codes. Usage errors exit with clap's code 2.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const MALFORMED_GRAPH: i32 = 3;
    pub const INAPPLICABLE_STRATEGY: i32 = 4;
    pub const BUDGET: i32 = 5;
    pub const OTHER: i32 = 6;
}

/// Environment variable holding the default solver node budget.
pub const BUDGET_ENV: &str = "MBD_BUDGET";

#[derive(Debug, Error)]
pub enum GraphArgError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{origin}: {source}")]
    Format { origin: String, source: FormatError },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Resolves a graph argument: an existing file (any supported format), a
/// family spec such as `grid:3:2`, or an inline graph6 string.
pub fn resolve_graph(arg: &str) -> Result<Graph, GraphArgError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| GraphArgError::Io { path: arg.into(), source })?;
        return parse_graph_auto(&text).map_err(|source| GraphArgError::Format { origin: arg.into(), source });
    }
    let name = arg.split(':').next().unwrap_or_default();
    if arg.contains(':') || is_family_name(name) {
        return Ok(parse_family_spec(arg)?);
    }
    parse_graph6(arg).map_err(|source| GraphArgError::Format { origin: format!("graph6 `{arg}`"), source })
}

fn is_family_name(name: &str) -> bool {
    matches!(
        name,
        "path"
            | "cycle"
            | "complete"
            | "star"
            | "kbip"
            | "grid"
            | "gnk"
            | "fan"
            | "pplus"
            | "local-example"
            | "digraph-example"
    )
}
