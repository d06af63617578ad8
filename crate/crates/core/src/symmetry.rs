//! Automorphisms of small graphs.

use alloc::vec::Vec;

use crate::census::refine;
use crate::graph::Graph;
use crate::vset::VertexSet;

/// All automorphisms of `g` as permutations `p` (vertex `v` maps to `p[v]`),
/// or `None` if there are more than `limit`.
pub fn automorphisms(g: &Graph, limit: usize) -> Option<Vec<Vec<usize>>> {
    let colour = refine(g);
    let mut out = Vec::new();
    let mut perm = alloc::vec![usize::MAX; g.n()];
    if extend(g, &colour, 0, VertexSet::EMPTY, &mut perm, &mut out, limit) {
        Some(out)
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    colour: &[usize],
    v: usize,
    used: VertexSet,
    perm: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> bool {
    if v == g.n() {
        out.push(perm.clone());
        return out.len() <= limit;
    }
    for img in g.vertices().difference(used) {
        if colour[img] != colour[v] {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == g.has_edge(perm[u], img));
        if !consistent {
            continue;
        }
        perm[v] = img;
        let mut next = used;
        next.insert(img);
        if !extend(g, colour, v + 1, next, perm, out, limit) {
            return false;
        }
    }
    perm[v] = usize::MAX;
    true
}
