//! Named graph families, addressable as `name:p1:p2` or as a name plus a
//! parameter list.

use mbd_core::graph::{self, Graph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`; known families: {FAMILIES}")]
    Unknown(String),
    #[error("family `{name}` takes {expected} parameter(s), got {got}")]
    Arity { name: String, expected: usize, got: usize },
    #[error("parameter `{0}` is not a nonnegative integer")]
    BadNumber(String),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
}

pub const FAMILIES: &str = "path n, cycle n, complete n, star r, kbip s t, grid m n, gnk n k, fan a n, pplus k, \
local-example, digraph-example";

pub fn generate(name: &str, params: &[&str]) -> Result<Graph, FamilyError> {
    let nums: Vec<usize> = params
        .iter()
        .map(|p| p.parse().map_err(|_| FamilyError::BadNumber(p.to_string())))
        .collect::<Result<_, _>>()?;
    let arity = |expected: usize| {
        if nums.len() == expected {
            Ok(())
        } else {
            Err(FamilyError::Arity { name: name.to_string(), expected, got: nums.len() })
        }
    };
    let g = match name {
        "path" => arity(1).and_then(|_| Ok(graph::path(nums[0])?)),
        "cycle" => arity(1).and_then(|_| Ok(graph::cycle(nums[0])?)),
        "complete" => arity(1).and_then(|_| Ok(graph::complete(nums[0])?)),
        "star" => arity(1).and_then(|_| Ok(graph::star(nums[0])?)),
        "kbip" => arity(2).and_then(|_| Ok(graph::complete_bipartite(nums[0], nums[1])?)),
        "grid" => arity(2).and_then(|_| Ok(graph::grid(nums[0], nums[1])?)),
        "gnk" => arity(2).and_then(|_| Ok(graph::gnk(nums[0], nums[1])?)),
        "fan" => arity(2).and_then(|_| Ok(graph::fan(nums[0], nums[1])?)),
        "pplus" => arity(1).and_then(|_| Ok(graph::path_plus(nums[0])?)),
        "local-example" => arity(0).map(|_| graph::local_domination_example()),
        "digraph-example" => arity(0).map(|_| graph::star_digraph_example()),
        other => Err(FamilyError::Unknown(other.to_string())),
    }?;
    Ok(g)
}

/// Parses `name:p1:p2`.
pub fn parse_family_spec(spec: &str) -> Result<Graph, FamilyError> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let params: Vec<&str> = parts.collect();
    generate(name, &params)
}
