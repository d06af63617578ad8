//! Small-graph censuses: all graphs (or all connected graphs) on `n` vertices
//! up to isomorphism, and all free trees on `n` vertices.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Largest `n` the census canonical form supports (the adjacency code must
/// fit in 64 bits).
pub const MAX_CENSUS_N: usize = 11;

/// Adjacency code of `g` under the vertex order `order` (position -> vertex):
/// one bit per pair `i < j` of positions, in lexicographic pair order.
fn code_for(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        let ni = g.neighbors(order[i]);
        for &vj in &order[i + 1..n] {
            if ni.contains(vj) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Equitable colour refinement starting from degrees. Colours are ranks of
/// isomorphism-invariant signatures, so the resulting ordered partition is
/// itself invariant.
pub(crate) fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(&s).expect("present")).collect();
        let count = distinct.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

/// Canonical adjacency code: the minimum code over all vertex orders that
/// respect the refined colour classes. Two graphs on `n <= MAX_CENSUS_N`
/// vertices are isomorphic iff their codes are equal.
pub fn canonical_code(g: &Graph) -> u64 {
    canonical_order(g).0
}

fn canonical_order(g: &Graph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= MAX_CENSUS_N, "canonical form limited to {MAX_CENSUS_N} vertices");
    let colour = refine(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut order = Vec::with_capacity(n);
    let mut best = (u64::MAX, Vec::new());
    permute_cells(g, &cells, 0, VertexSet::EMPTY, &mut order, &mut best);
    best
}

fn permute_cells(
    g: &Graph,
    cells: &[Vec<usize>],
    cell: usize,
    used: VertexSet,
    order: &mut Vec<usize>,
    best: &mut (u64, Vec<usize>),
) {
    if cell == cells.len() {
        let code = code_for(g, order);
        if code < best.0 {
            *best = (code, order.clone());
        }
        return;
    }
    let pending: Vec<usize> = cells[cell].iter().copied().filter(|&v| !used.contains(v)).collect();
    if pending.is_empty() {
        permute_cells(g, cells, cell + 1, used, order, best);
        return;
    }
    for v in pending {
        let mut next = used;
        next.insert(v);
        order.push(v);
        permute_cells(g, cells, cell, next, order, best);
        order.pop();
    }
}

/// `g` relabelled into its canonical form.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, order) = canonical_order(g);
    let mut perm = alloc::vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

/// All graphs on `n` vertices up to isomorphism, canonical forms sorted by
/// code. `n` must be at most [`MAX_CENSUS_N`]; practical up to 8.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<u64, Graph> = BTreeMap::new();
    let k0 = Graph::empty(0).expect("empty graph");
    level.insert(0, k0);
    for m in 1..=n {
        let mut next: BTreeMap<u64, Graph> = BTreeMap::new();
        for g in level.values() {
            let edges = g.edges();
            for mask in 0u64..(1 << (m - 1)) {
                let extra = VertexSet::from_bits(mask).iter().map(|u| (u, m - 1));
                let h = Graph::from_edges(m, edges.iter().copied().chain(extra)).expect("within limits");
                let code = canonical_code(&h);
                next.entry(code).or_insert_with(|| canonical_form(&h));
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// All connected graphs on `n >= 1` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Centre(s) of a tree: one or two vertices.
fn tree_centers(t: &Graph) -> Vec<usize> {
    let mut alive = t.vertices();
    while alive.len() > 2 {
        let leaves: VertexSet = alive.iter().filter(|&v| t.neighbors(v).intersection(alive).len() <= 1).collect();
        alive = alive.difference(leaves);
    }
    alive.iter().collect()
}

fn ahu(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> =
        t.neighbors(v).iter().filter(|&u| Some(u) != parent).map(|u| ahu(t, u, Some(v))).collect();
    kids.sort();
    let mut s = String::from("(");
    for k in kids {
        s.push_str(&k);
    }
    s.push(')');
    s
}

/// Canonical string of a free tree: the smaller AHU encoding over its
/// centres.
pub fn tree_code(t: &Graph) -> String {
    tree_centers(t).into_iter().map(|c| ahu(t, c, None)).min().expect("trees are nonempty")
}

/// Builds the tree whose rooted encoding is `code`, numbering vertices in
/// preorder.
fn tree_from_code(code: &str) -> Graph {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        if ch == '(' {
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    Graph::from_edges(next, edges).expect("valid encoding")
}

/// All non-isomorphic trees on `n` vertices (`1 <= n`), each exactly once,
/// built by leaf augmentation with canonical deduplication. Output order is
/// the order of the canonical codes; vertices are numbered in preorder from
/// a centre.
pub fn enumerate_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert(String::from("()"), tree_from_code("()"));
    for m in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            let edges = t.edges();
            for v in 0..m - 1 {
                let grown = Graph::from_edges(m, edges.iter().copied().chain([(v, m - 1)])).expect("within limits");
                let code = tree_code(&grown);
                next.entry(code).or_insert_with_key(|c| tree_from_code(c));
            }
        }
        level = next;
    }
    level.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn graph_counts() {
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, [1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(conn, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let g = local_domination_example();
        let perm = [3, 6, 0, 5, 1, 4, 2];
        assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
        assert_ne!(canonical_code(&path(5).unwrap()), canonical_code(&star(4).unwrap()));
        let c = canonical_form(&g);
        assert_eq!(canonical_code(&c), canonical_code(&g));
        assert_eq!(c.edge_count(), g.edge_count());
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| enumerate_trees(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        for t in enumerate_trees(8) {
            assert!(t.is_tree());
            assert_eq!(t.n(), 8);
        }
    }

    #[test]
    fn four_vertex_trees() {
        let ts = enumerate_trees(4);
        let mut degs: Vec<usize> = ts.iter().map(Graph::max_degree).collect();
        degs.sort();
        assert_eq!(degs, [2, 3]);
    }
}
