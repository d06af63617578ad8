//! Star partitions: `k`-star partitions, the star partition width `σ(G)`,
//! lexicographically optimal partitions and the star digraph.
//!
//! A star partition splits `V(G)` into blocks of at least two vertices, each
//! spanned by a star with a designated centre. An `i`-star has `i` leaves.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Graph;
use crate::invariants::maximum_matching;
use crate::thresholds::ThresholdValue;
use crate::vset::{for_each_subset_of_size, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Star {
    pub center: usize,
    pub leaves: VertexSet,
}

impl Star {
    pub fn vertices(&self) -> VertexSet {
        let mut s = self.leaves;
        s.insert(self.center);
        s
    }

    /// Number of vertices, `|S_i|`.
    pub fn order(&self) -> usize {
        self.leaves.len() + 1
    }

    fn key(&self) -> (usize, Vec<usize>) {
        (self.center, self.leaves.iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarPartitionError {
    IsolatedVertex(usize),
    TooFewVertices,
    NotAPartition,
    BadStar { center: usize, reason: &'static str },
}

impl fmt::Display for StarPartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarPartitionError::IsolatedVertex(v) => write!(f, "vertex {v} is isolated"),
            StarPartitionError::TooFewVertices => f.write_str("graph has fewer than two vertices"),
            StarPartitionError::NotAPartition => f.write_str("blocks do not partition the vertex set"),
            StarPartitionError::BadStar { center, reason } => write!(f, "star centred at {center}: {reason}"),
        }
    }
}

impl core::error::Error for StarPartitionError {}

/// A star partition. Stars are kept in increasing order of their smallest
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarPartition {
    pub stars: Vec<Star>,
}

impl StarPartition {
    pub fn new(mut stars: Vec<Star>) -> Self {
        stars.sort_by_key(|s| s.vertices().first());
        StarPartition { stars }
    }

    /// Largest number of leaves in a star.
    pub fn width(&self) -> usize {
        self.stars.iter().map(|s| s.leaves.len()).max().unwrap_or(0)
    }

    /// `counts[i]` is the number of `i`-stars, for `i` in `0..=max_leaves`.
    pub fn counts(&self, max_leaves: usize) -> Vec<usize> {
        let mut c = vec![0; max_leaves + 1];
        for s in &self.stars {
            c[s.leaves.len()] += 1;
        }
        c
    }

    /// The profile `(s_Δ, s_{Δ-1}, …, s_1)` for `Δ = max_leaves`.
    pub fn profile(&self, max_leaves: usize) -> Vec<usize> {
        let c = self.counts(max_leaves.max(self.width()));
        c[1..].iter().rev().copied().collect()
    }

    /// Index of the star containing `v`.
    pub fn star_of(&self, v: usize) -> Option<usize> {
        self.stars.iter().position(|s| s.vertices().contains(v))
    }

    pub fn validate(&self, g: &Graph) -> Result<(), StarPartitionError> {
        let mut seen = VertexSet::EMPTY;
        for s in &self.stars {
            if s.leaves.is_empty() {
                return Err(StarPartitionError::BadStar { center: s.center, reason: "no leaves" });
            }
            if !s.leaves.is_subset(g.neighbors(s.center)) {
                return Err(StarPartitionError::BadStar { center: s.center, reason: "leaf not adjacent to centre" });
            }
            if !seen.is_disjoint(s.vertices()) {
                return Err(StarPartitionError::NotAPartition);
            }
            seen = seen.union(s.vertices());
        }
        if seen != g.vertices() {
            return Err(StarPartitionError::NotAPartition);
        }
        Ok(())
    }
}

fn require_partitionable(g: &Graph) -> Result<(), StarPartitionError> {
    if g.n() < 2 {
        return Err(StarPartitionError::TooFewVertices);
    }
    match (0..g.n()).find(|&v| g.degree(v) == 0) {
        Some(v) => Err(StarPartitionError::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Candidate blocks containing `v`, the smallest unassigned vertex, using
/// only unassigned vertices, at most `k` leaves, ordered by
/// `(centre, leaves)`. Two-vertex blocks are listed once, centred at `v`.
fn blocks_at(g: &Graph, v: usize, free: VertexSet, k: usize) -> Vec<Star> {
    let mut out = Vec::new();
    let own = g.neighbors(v).intersection(free);
    for size in 1..=k.min(own.len()) {
        for_each_subset_of_size(own, size, |leaves| {
            out.push(Star { center: v, leaves });
            false
        });
    }
    for c in own {
        let mut others = g.neighbors(c).intersection(free);
        others.remove(v);
        for extra in 1..k.min(others.len() + 1) {
            for_each_subset_of_size(others, extra, |rest| {
                let mut leaves = rest;
                leaves.insert(v);
                out.push(Star { center: c, leaves });
                false
            });
        }
    }
    out.sort_by_cached_key(Star::key);
    out
}

fn stranded(g: &Graph, free: VertexSet) -> bool {
    free.iter().any(|u| g.neighbors(u).is_disjoint(free))
}

/// A `k`-star partition if one exists (`k >= 1`).
pub fn k_star_partition(g: &Graph, k: usize) -> Option<StarPartition> {
    if k == 0 || require_partitionable(g).is_err() {
        return None;
    }
    fn rec(g: &Graph, k: usize, free: VertexSet, acc: &mut Vec<Star>) -> bool {
        let Some(v) = free.first() else {
            return true;
        };
        if stranded(g, free) {
            return false;
        }
        for s in blocks_at(g, v, free, k) {
            acc.push(s);
            if rec(g, k, free.difference(s.vertices()), acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    rec(g, k, g.vertices(), &mut acc).then(|| StarPartition::new(acc))
}

pub fn has_k_star_partition(g: &Graph, k: usize) -> bool {
    k_star_partition(g, k).is_some()
}

/// `σ(G)`; infinite when `G` has an isolated vertex or fewer than two
/// vertices.
pub fn star_partition_width(g: &Graph) -> ThresholdValue {
    if require_partitionable(g).is_err() {
        return ThresholdValue::Infinite;
    }
    let k = (1..=g.max_degree())
        .find(|&k| has_k_star_partition(g, k))
        .expect("the spanning forest argument gives a Δ-star partition");
    ThresholdValue::Finite(k)
}

/// A star partition with lexicographically smallest profile
/// `(s_Δ, …, s_1)`. Among those, the result is the first one in the order
/// that compares blocks by smallest vertex and then `(centre, leaves)`.
pub fn lex_optimal_star_partition(g: &Graph) -> Result<StarPartition, StarPartitionError> {
    require_partitionable(g)?;
    let delta = g.max_degree();
    struct Search<'a> {
        g: &'a Graph,
        delta: usize,
        best: Option<(Vec<usize>, Vec<Star>)>,
    }
    impl Search<'_> {
        fn profile(&self, acc: &[Star]) -> Vec<usize> {
            let mut p = vec![0; self.delta];
            for s in acc {
                p[self.delta - s.leaves.len()] += 1;
            }
            p
        }

        fn rec(&mut self, free: VertexSet, acc: &mut Vec<Star>) {
            let p = self.profile(acc);
            let Some(v) = free.first() else {
                if self.best.as_ref().is_none_or(|(bp, _)| p < *bp) {
                    self.best = Some((p, acc.clone()));
                }
                return;
            };
            if let Some((bp, _)) = &self.best {
                // Completing can only raise the profile further.
                if p >= *bp {
                    return;
                }
            }
            if stranded(self.g, free) {
                return;
            }
            for s in blocks_at(self.g, v, free, self.delta) {
                acc.push(s);
                self.rec(free.difference(s.vertices()), acc);
                acc.pop();
            }
        }
    }
    let mut search = Search { g, delta, best: None };
    search.rec(g.vertices(), &mut Vec::new());
    let (_, stars) = search.best.expect("graphs without isolated vertices have star partitions");
    Ok(StarPartition::new(stars))
}

/// A star partition with exactly `ν(G)` stars, built from a maximum
/// matching: each matching edge contributes a star whose centre is the
/// endpoint adjacent to unmatched vertices, and every unmatched vertex joins
/// an adjacent centre.
pub fn star_partition_from_matching(g: &Graph) -> Result<StarPartition, StarPartitionError> {
    require_partitionable(g)?;
    let m = maximum_matching(g);
    let saturated: VertexSet = m.iter().flat_map(|&(x, y)| [x, y]).collect();
    let unsaturated = g.vertices().difference(saturated);
    let mut stars: Vec<Star> = m
        .iter()
        .map(|&(x, y)| {
            let x_open = !g.neighbors(x).is_disjoint(unsaturated);
            let y_open = !g.neighbors(y).is_disjoint(unsaturated);
            let (center, leaf) = if y_open && !x_open { (y, x) } else { (x, y) };
            Star { center, leaves: VertexSet::singleton(leaf) }
        })
        .collect();
    let centers: VertexSet = stars.iter().map(|s| s.center).collect();
    for u in unsaturated {
        let c = g
            .neighbors(u)
            .intersection(centers)
            .first()
            .ok_or(StarPartitionError::BadStar { center: u, reason: "no adjacent centre" })?;
        let s = stars.iter_mut().find(|s| s.center == c).expect("centre has a star");
        s.leaves.insert(u);
    }
    let p = StarPartition::new(stars);
    p.validate(g)?;
    Ok(p)
}

/// `i(G - X) <= k|X|` for every `X ⊆ V(G)`. For `k >= 2` this holds exactly
/// when `G` has a `k`-star partition. Exponential in `n`.
pub fn isolated_vertex_condition(g: &Graph, k: usize) -> Result<(), VertexSet> {
    for bits in 0u64..(1u64 << g.n()) {
        let x = VertexSet::from_bits(bits);
        if g.isolated_after_removing(x) > k * x.len() {
            return Err(x);
        }
    }
    Ok(())
}

/// The star digraph: one node per star, an arc `i -> j` when a leaf of star
/// `i` is adjacent to the centre of star `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarDigraph {
    pub nodes: usize,
    /// Sorted arc list.
    pub arcs: Vec<(usize, usize)>,
}

impl StarDigraph {
    pub fn out_neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs.iter().filter(move |a| a.0 == i).map(|a| a.1)
    }

    /// Nodes reachable from `start` by directed paths, including `start`.
    pub fn reachable(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for j in self.out_neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen
    }

    /// Follows the first unvisited out-neighbour from `start` until stuck.
    pub fn maximal_path_from(&self, start: usize) -> Vec<usize> {
        let mut path = vec![start];
        let mut on = vec![false; self.nodes];
        on[start] = true;
        loop {
            let cur = *path.last().expect("nonempty");
            match self.out_neighbors(cur).find(|&j| !on[j]) {
                Some(j) => {
                    on[j] = true;
                    path.push(j);
                }
                None => return path,
            }
        }
    }
}

pub fn star_digraph(g: &Graph, p: &StarPartition) -> Result<StarDigraph, StarPartitionError> {
    p.validate(g)?;
    let mut arcs = Vec::new();
    for (i, si) in p.stars.iter().enumerate() {
        let reach = g.neighbors_of_set(si.leaves);
        for (j, sj) in p.stars.iter().enumerate() {
            if i != j && reach.contains(sj.center) {
                arcs.push((i, j));
            }
        }
    }
    Ok(StarDigraph { nodes: p.stars.len(), arcs })
}

/// Outcome of checking the three structural properties of lexicographically
/// optimal partitions. `None` means the property holds; otherwise the
/// string describes a counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub leaf_leaf: Option<String>,
    pub leaf_center: Option<String>,
    pub paths: Option<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.leaf_leaf.is_none() && self.leaf_center.is_none() && self.paths.is_none()
    }
}

/// Checks on `p`:
/// (i) adjacent leaves occur only inside a star with exactly those two
///     leaves, or across two stars of total order at most 5;
/// (ii) a leaf of `S_i` adjacent to the centre of `S_j` forces
///     `|S_i| <= |S_j| + 1`;
/// (iii) every star reachable in the star digraph from a `σ`-star has order
///     at least `σ`, with `σ` computed independently.
pub fn check_lex_optimal_lemma(g: &Graph, p: &StarPartition) -> Result<LemmaReport, StarPartitionError> {
    let digraph = star_digraph(g, p)?;
    let mut report = LemmaReport { leaf_leaf: None, leaf_center: None, paths: None };
    let leaves: VertexSet = p.stars.iter().fold(VertexSet::EMPTY, |a, s| a.union(s.leaves));
    let star = |v: usize| p.star_of(v).expect("validated");
    'outer: for x in leaves {
        for y in g.neighbors(x).intersection(leaves) {
            if y < x {
                continue;
            }
            let (i, j) = (star(x), star(y));
            let allowed =
                if i == j { p.stars[i].leaves.len() == 2 } else { p.stars[i].order() + p.stars[j].order() <= 5 };
            if !allowed {
                report.leaf_leaf = Some(format!("leaves {x} and {y} are adjacent"));
                break 'outer;
            }
        }
    }
    for &(i, j) in &digraph.arcs {
        if p.stars[i].order() > p.stars[j].order() + 1 {
            report.leaf_center = Some(format!(
                "leaf of the star at {} meets centre {} with orders {} and {}",
                p.stars[i].center,
                p.stars[j].center,
                p.stars[i].order(),
                p.stars[j].order()
            ));
            break;
        }
    }
    let sigma = star_partition_width(g).finite().expect("partition exists");
    'paths: for (i, s) in p.stars.iter().enumerate() {
        if s.leaves.len() != sigma {
            continue;
        }
        for (j, r) in digraph.reachable(i).into_iter().enumerate() {
            if r && p.stars[j].order() < sigma {
                report.paths = Some(format!(
                    "star at {} reachable from sigma-star at {} has order {} < {sigma}",
                    p.stars[j].center,
                    s.center,
                    p.stars[j].order()
                ));
                break 'paths;
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaFormula {
    /// `G` has an isolated vertex, fewer than two vertices, or a 2-star
    /// partition.
    NotApplicable(&'static str),
    Checked {
        sigma: usize,
        formula: usize,
    },
}

impl SigmaFormula {
    pub fn agrees(&self) -> Option<bool> {
        match self {
            SigmaFormula::NotApplicable(_) => None,
            SigmaFormula::Checked { sigma, formula } => Some(sigma == formula),
        }
    }
}

/// For graphs without isolated vertices and without a 2-star partition,
/// compares `σ(G)` against `max ⌈i(G-S)/|S|⌉` over nonempty proper `S`.
pub fn sigma_formula_check(g: &Graph) -> SigmaFormula {
    if require_partitionable(g).is_err() {
        return SigmaFormula::NotApplicable("isolated vertex or fewer than two vertices");
    }
    if has_k_star_partition(g, 2) {
        return SigmaFormula::NotApplicable("graph has a 2-star partition");
    }
    let full = g.vertices().bits();
    let formula =
        (1..full).map(VertexSet::from_bits).map(|s| g.isolated_after_removing(s).div_ceil(s.len())).max().unwrap_or(0);
    let sigma = star_partition_width(g).finite().expect("partition exists");
    SigmaFormula::Checked { sigma, formula }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{all_graphs, enumerate_trees};
    use crate::graph::*;
    use crate::invariants::matching_number;
    use ThresholdValue::*;

    /// Every star partition, by brute force over set partitions.
    fn all_partitions(g: &Graph) -> Vec<StarPartition> {
        fn rec(g: &Graph, free: VertexSet, acc: &mut Vec<Star>, out: &mut Vec<StarPartition>) {
            let Some(v) = free.first() else {
                out.push(StarPartition::new(acc.clone()));
                return;
            };
            let rest = free.difference(VertexSet::singleton(v));
            for bits in 1..=rest.bits() {
                let others = VertexSet::from_bits(bits);
                if !others.is_subset(rest) {
                    continue;
                }
                let mut block = others;
                block.insert(v);
                // The block needs a spanning star; take its first centre.
                if let Some(c) =
                    block.iter().find(|&c| block.difference(VertexSet::singleton(c)).is_subset(g.neighbors(c)))
                {
                    acc.push(Star { center: c, leaves: block.difference(VertexSet::singleton(c)) });
                    rec(g, free.difference(block), acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(g, g.vertices(), &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn widths_of_named_graphs() {
        for n in 2..=8 {
            let want = if n % 2 == 0 { 1 } else { 2 };
            assert_eq!(star_partition_width(&complete(n).unwrap()), Finite(want));
        }
        for r in 1..=5 {
            assert_eq!(star_partition_width(&star(r).unwrap()), Finite(r));
        }
        for m in 1..=3 {
            assert_eq!(star_partition_width(&complete_bipartite(2, 2 * m).unwrap()), Finite(m));
        }
        assert_eq!(star_partition_width(&path(1).unwrap()), Infinite);
        assert_eq!(star_partition_width(&Graph::empty(3).unwrap()), Infinite);
        assert!(has_k_star_partition(&complete(4).unwrap(), 1));
        assert!(!has_k_star_partition(&star(3).unwrap(), 2));
    }

    #[test]
    fn factor_condition_agrees() {
        for n in 1..=6 {
            for g in all_graphs(n) {
                for k in 2..=3 {
                    assert_eq!(has_k_star_partition(&g, k), isolated_vertex_condition(&g, k).is_ok(), "{g:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn lex_optimal_matches_brute_force() {
        for n in 2..=6 {
            for g in all_graphs(n) {
                if g.min_degree() == 0 {
                    continue;
                }
                let d = g.max_degree();
                let best = all_partitions(&g).iter().map(|p| p.profile(d)).min().unwrap();
                let p = lex_optimal_star_partition(&g).unwrap();
                p.validate(&g).unwrap();
                assert_eq!(p.profile(d), best);
                assert_eq!(Finite(p.width()), star_partition_width(&g));
            }
        }
    }

    #[test]
    fn small_partitions() {
        let p4 = path(4).unwrap();
        let p = lex_optimal_star_partition(&p4).unwrap();
        assert_eq!(p.profile(2), [0, 2]);
        let p = lex_optimal_star_partition(&star(3).unwrap()).unwrap();
        assert_eq!(p.stars.len(), 1);
        assert_eq!(p.stars[0].center, 0);
        assert_eq!(star_partition_from_matching(&p4).unwrap().stars.len(), 2);
        assert_eq!(star_partition_from_matching(&star(3).unwrap()).unwrap().stars.len(), 1);
        assert!(lex_optimal_star_partition(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn matching_partition_has_nu_stars() {
        for n in 2..=7 {
            for g in all_graphs(n) {
                if g.min_degree() == 0 {
                    continue;
                }
                let p = star_partition_from_matching(&g).unwrap();
                assert_eq!(p.stars.len(), matching_number(&g));
            }
        }
    }

    #[test]
    fn figure_digraph() {
        let g = star_digraph_example();
        let p = StarPartition::new(vec![
            Star { center: 0, leaves: VertexSet::from([1, 2]) },
            Star { center: 3, leaves: VertexSet::from([4, 5, 6]) },
            Star { center: 7, leaves: VertexSet::from([8, 9, 10]) },
        ]);
        let d = star_digraph(&g, &p).unwrap();
        assert_eq!(d.arcs, [(2, 1)]);
        let single = StarPartition::new(vec![Star { center: 0, leaves: VertexSet::from([1, 2, 3]) }]);
        assert!(star_digraph(&star(3).unwrap(), &single).unwrap().arcs.is_empty());
    }

    #[test]
    fn lemma_on_trees_and_negative_control() {
        for n in 2..=8 {
            for t in enumerate_trees(n) {
                let p = lex_optimal_star_partition(&t).unwrap();
                assert!(check_lex_optimal_lemma(&t, &p).unwrap().passed(), "{t:?}");
                assert_eq!(p.stars.len(), matching_number(&t));
            }
        }
        let p6 = path(6).unwrap();
        let bad = StarPartition::new(vec![
            Star { center: 1, leaves: VertexSet::from([0, 2]) },
            Star { center: 4, leaves: VertexSet::from([3, 5]) },
        ]);
        let r = check_lex_optimal_lemma(&p6, &bad).unwrap();
        assert!(r.leaf_leaf.is_some());
    }

    #[test]
    fn sigma_formula() {
        assert_eq!(sigma_formula_check(&star(4).unwrap()), SigmaFormula::Checked { sigma: 4, formula: 4 });
        assert!(matches!(sigma_formula_check(&path(4).unwrap()), SigmaFormula::NotApplicable(_)));
        for g in all_graphs(6) {
            assert_ne!(sigma_formula_check(&g).agrees(), Some(false), "{g:?}");
        }
    }
}
