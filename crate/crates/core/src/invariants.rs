//! Classical graph invariants by exhaustive search with simple pruning.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Smallest `R ⊆ allowed` with `target ⊆ N[R]`, or `None` if `allowed`
/// cannot dominate `target`. Among minimum sets, returns the first one met by
/// a search that always branches on the smallest undominated target vertex
/// and tries its dominators in increasing order, so the result is
/// deterministic.
pub fn min_dominating_subset(g: &Graph, target: VertexSet, allowed: VertexSet) -> Option<VertexSet> {
    min_dominating_subset_bounded(g, target, allowed, g.n())
}

/// Like [`min_dominating_subset`] but gives up above `max_size` vertices.
pub fn min_dominating_subset_bounded(
    g: &Graph,
    target: VertexSet,
    allowed: VertexSet,
    max_size: usize,
) -> Option<VertexSet> {
    if !target.is_subset(g.dominated_by(allowed)) {
        return None;
    }
    let reach = g.max_degree() + 1;
    for size in 0..=max_size.min(g.n()) {
        if let Some(r) = dominate_within(g, target, allowed, VertexSet::EMPTY, size, reach) {
            return Some(r);
        }
    }
    None
}

fn dominate_within(
    g: &Graph,
    target: VertexSet,
    allowed: VertexSet,
    chosen: VertexSet,
    left: usize,
    reach: usize,
) -> Option<VertexSet> {
    let open = target.difference(g.dominated_by(chosen));
    let Some(u) = open.first() else {
        return Some(chosen);
    };
    if left == 0 || open.len() > left * reach {
        return None;
    }
    for x in g.closed(u).intersection(allowed).difference(chosen) {
        let mut next = chosen;
        next.insert(x);
        if let Some(r) = dominate_within(g, target, allowed, next, left - 1, reach) {
            return Some(r);
        }
    }
    None
}

/// A minimum dominating set of `G`.
pub fn min_dominating_set(g: &Graph) -> VertexSet {
    min_dominating_subset(g, g.vertices(), g.vertices()).expect("V dominates itself")
}

/// `γ(G)`.
pub fn domination_number(g: &Graph) -> usize {
    min_dominating_set(g).len()
}

/// A maximum matching, as edges `(u, v)` with `u < v`.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mut best = Vec::new();
    let mut cur = Vec::new();
    match_rec(g, g.vertices(), &mut cur, &mut best);
    best
}

fn match_rec(g: &Graph, free: VertexSet, cur: &mut Vec<(usize, usize)>, best: &mut Vec<(usize, usize)>) {
    // Only vertices with a free neighbour can still be matched.
    let live: VertexSet = free.iter().filter(|&v| !g.neighbors(v).intersection(free).is_empty()).collect();
    if cur.len() + live.len() / 2 <= best.len() {
        return;
    }
    let Some(v) = live.first() else {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    };
    for u in g.neighbors(v).intersection(free) {
        let mut rest = free;
        rest.remove(v);
        rest.remove(u);
        cur.push((v.min(u), v.max(u)));
        match_rec(g, rest, cur, best);
        cur.pop();
    }
    let mut rest = free;
    rest.remove(v);
    match_rec(g, rest, cur, best);
}

/// `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// `α(G)`.
pub fn independence_number(g: &Graph) -> usize {
    fn rec(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
        if size + cand.len() <= *best {
            return;
        }
        let Some(v) = cand.first() else {
            *best = size;
            return;
        };
        let mut without = cand;
        without.remove(v);
        rec(g, without.difference(g.neighbors(v)), size + 1, best);
        rec(g, without, size, best);
    }
    let mut best = 0;
    rec(g, g.vertices(), 0, &mut best);
    best
}

/// `τ(G)`, searched directly by branching on an uncovered edge.
pub fn vertex_cover_number(g: &Graph) -> usize {
    fn rec(g: &Graph, cover: VertexSet, best: &mut usize) {
        if cover.len() >= *best {
            return;
        }
        let uncovered = (0..g.n())
            .filter(|&u| !cover.contains(u))
            .find_map(|u| g.neighbors(u).difference(cover).first().map(|v| (u, v)));
        match uncovered {
            None => *best = cover.len(),
            Some((u, v)) => {
                for x in [u, v] {
                    let mut next = cover;
                    next.insert(x);
                    rec(g, next, best);
                }
            }
        }
    }
    let mut best = g.n();
    rec(g, VertexSet::EMPTY, &mut best);
    best
}

/// A perfect matching if one exists.
pub fn perfect_matching(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let m = maximum_matching(g);
    (2 * m.len() == g.n()).then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn brute_gamma(g: &Graph) -> usize {
        (0u64..1 << g.n()).map(VertexSet::from_bits).filter(|&s| g.dominates(s)).map(|s| s.len()).min().unwrap()
    }

    fn brute_alpha(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| s.iter().all(|v| g.neighbors(v).is_disjoint(s)))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(domination_number(&path(3).unwrap()), 1);
        let p5 = path(5).unwrap();
        assert_eq!(domination_number(&p5), 2);
        assert_eq!(matching_number(&p5), 2);
        assert_eq!(vertex_cover_number(&p5), 2);
        assert_eq!(independence_number(&p5), 3);
        for r in 1..6 {
            assert_eq!(matching_number(&star(r).unwrap()), 1);
        }
        assert_eq!(domination_number(&fan(2, 3).unwrap()), 3);
    }

    #[test]
    fn against_brute_force() {
        let gs = [
            cycle(7).unwrap(),
            gnk(2, 4).unwrap(),
            complete_bipartite(2, 5).unwrap(),
            local_domination_example(),
            grid(3, 3).unwrap(),
        ];
        for g in &gs {
            assert_eq!(domination_number(g), brute_gamma(g));
            assert_eq!(independence_number(g), brute_alpha(g));
            assert_eq!(vertex_cover_number(g), g.n() - brute_alpha(g));
        }
    }

    #[test]
    fn matching_is_valid() {
        let g = grid(3, 3).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 4);
        let mut used = VertexSet::EMPTY;
        for &(u, v) in &m {
            assert!(g.has_edge(u, v));
            assert!(!used.contains(u) && !used.contains(v));
            used.insert(u);
            used.insert(v);
        }
        assert!(perfect_matching(&path(6).unwrap()).is_some());
        assert!(perfect_matching(&path(5).unwrap()).is_none());
    }

    #[test]
    fn restricted_domination() {
        let g = cycle(7).unwrap();
        // N(0) = {1, 6} from outside {0}: vertex 0 excluded, needs two.
        let target = g.neighbors(0);
        let allowed = g.vertices().difference(VertexSet::singleton(0));
        assert_eq!(min_dominating_subset(&g, target, allowed).unwrap().len(), 2);
        assert_eq!(min_dominating_subset(&g, target, VertexSet::from([3])), None);
    }
}
