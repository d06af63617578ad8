//! The `ℓ`-local domination number and induced star freeness.

use core::fmt;

use crate::graph::Graph;
use crate::invariants::min_dominating_subset;
use crate::vset::{for_each_subset_of_size, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalDominationError {
    ZeroIndex,
    MinDegreeTooSmall { ell: usize, min_degree: usize },
}

impl fmt::Display for LocalDominationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalDominationError::ZeroIndex => f.write_str("the index must be at least 1"),
            LocalDominationError::MinDegreeTooSmall { ell, min_degree } => write!(
                f,
                "local domination with index {ell} needs minimum degree at least {ell}, graph has {min_degree}"
            ),
        }
    }
}

impl core::error::Error for LocalDominationError {}

/// The set that must be dominated from outside `S`: `N(S)` together with the
/// members of `S` whose degree equals `|S|`.
pub fn local_target(g: &Graph, s: VertexSet) -> VertexSet {
    let ell = s.len();
    let low: VertexSet = s.iter().filter(|&v| g.degree(v) == ell).collect();
    g.neighbors_of_set(s).union(low)
}

/// A minimum `R ⊆ V \ S` dominating [`local_target`]`(S)`; its size is
/// `γ̃_ℓ(G, S)`. Requires every vertex of `S` to have degree at least `|S|`.
pub fn local_domination_at(g: &Graph, s: VertexSet) -> Result<VertexSet, LocalDominationError> {
    let ell = s.len();
    if ell == 0 {
        return Err(LocalDominationError::ZeroIndex);
    }
    if let Some(v) = s.iter().find(|&v| g.degree(v) < ell) {
        return Err(LocalDominationError::MinDegreeTooSmall { ell, min_degree: g.degree(v) });
    }
    let allowed = g.vertices().difference(s);
    Ok(min_dominating_subset(g, local_target(g, s), allowed).expect("each target vertex has a neighbour outside S"))
}

/// `γ̃_ℓ(G)` with a maximising `S` and a minimum dominating set for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDomination {
    pub value: usize,
    pub set: VertexSet,
    pub witness: VertexSet,
}

/// `γ̃_ℓ(G)`: the maximum of `γ̃_ℓ(G, S)` over all `ℓ`-sets `S`. The reported
/// `S` is the lexicographically first maximiser.
pub fn local_domination_number(g: &Graph, ell: usize) -> Result<LocalDomination, LocalDominationError> {
    if ell == 0 {
        return Err(LocalDominationError::ZeroIndex);
    }
    if g.n() == 0 || g.min_degree() < ell {
        return Err(LocalDominationError::MinDegreeTooSmall { ell, min_degree: g.min_degree() });
    }
    let mut best: Option<LocalDomination> = None;
    for_each_subset_of_size(g.vertices(), ell, |s| {
        let r = local_domination_at(g, s).expect("degree checked");
        if best.as_ref().is_none_or(|b| r.len() > b.value) {
            best = Some(LocalDomination { value: r.len(), set: s, witness: r });
        }
        false
    });
    Ok(best.expect("at least one ell-set"))
}

/// `γ̃_1(G)` by the leaf-free formulation: the maximum over `v` of the
/// domination number of `N(v)` inside `G - v`.
pub fn local_domination_simplified(g: &Graph) -> Result<usize, LocalDominationError> {
    if g.n() == 0 || g.min_degree() == 0 {
        return Err(LocalDominationError::MinDegreeTooSmall { ell: 1, min_degree: g.min_degree() });
    }
    let mut best = 0;
    for v in 0..g.n() {
        let (h, old) = g.induced(g.vertices().difference(VertexSet::singleton(v)));
        let target: VertexSet = (0..h.n()).filter(|&i| g.has_edge(old[i], v)).collect();
        let r = min_dominating_subset(&h, target, h.vertices()).expect("H dominates itself");
        best = best.max(r.len());
    }
    Ok(best)
}

/// True iff `G` has no induced `K_{1,k}`.
pub fn is_induced_star_free(g: &Graph, k: usize) -> bool {
    find_induced_star(g, k).is_none()
}

/// Centre and leaves of some induced `K_{1,k}`, if any.
pub fn find_induced_star(g: &Graph, k: usize) -> Option<(usize, VertexSet)> {
    for c in 0..g.n() {
        let mut found = None;
        for_each_subset_of_size(g.neighbors(c), k, |leaves| {
            if leaves.iter().all(|x| g.neighbors(x).is_disjoint(leaves)) {
                found = Some(leaves);
                true
            } else {
                false
            }
        });
        if let Some(leaves) = found {
            return Some((c, leaves));
        }
    }
    None
}
