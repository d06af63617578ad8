//! Simple undirected graphs on vertices `0..n` and the standard constructions
//! on them.

use alloc::vec::Vec;
use core::fmt;

use crate::vset::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices { n: usize },
    VertexOutOfRange { v: usize, n: usize },
    SelfLoop { v: usize },
    InvalidParameter(&'static str),
    NoEdges,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices { n } => {
                write!(f, "graph has {n} vertices, limit is {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} out of range for graph on {n} vertices")
            }
            GraphError::SelfLoop { v } => write!(f, "self-loop at vertex {v}"),
            GraphError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            GraphError::NoEdges => f.write_str("graph has no edges"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Immutable simple graph. Vertex ids are exactly `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph { n, adj: alloc::vec![VertexSet::EMPTY; n] })
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { v: u });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood `N(v)`. Panics if `v >= n`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`. Panics if `v >= n`.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    /// Checked version of [`Graph::closed`].
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        Ok(self.closed(v))
    }

    /// `N(S)`: union of open neighborhoods of the members of `s`.
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// Vertices dominated by `s`, i.e. `N[S]`.
    pub fn dominated_by(&self, s: VertexSet) -> VertexSet {
        self.neighbors_of_set(s).union(s)
    }

    pub fn dominates(&self, s: VertexSet) -> bool {
        self.dominated_by(s) == self.vertices()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// `δ(G)`; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `Δ(G)`; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0, self.vertices()) == self.vertices()
    }

    /// The vertex set of the component of `G[within]` that contains `v`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighbors_of_set(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Induced subgraph on `keep`, relabelled in increasing order. Returns the
    /// subgraph and, for each new id, the original vertex.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map.iter().map(|&v| self.adj[v].intersection(keep).iter().map(|u| index[u]).collect()).collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// `G - X` as an induced subgraph keeping original ids; vertices of `X`
    /// remain but become isolated. Used for counting `i(G - X)`.
    pub fn isolated_after_removing(&self, x: VertexSet) -> usize {
        let rest = self.vertices().difference(x);
        rest.iter().filter(|&v| self.adj[v].intersection(rest).is_empty()).count()
    }

    /// Relabels vertices: new vertex `perm[v]` takes the role of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = alloc::vec![VertexSet::EMPTY; self.n];
        for u in 0..self.n {
            for v in self.adj[u] {
                adj[perm[u]].insert(perm[v]);
            }
        }
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Path `P_n` with vertices in traversal order.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("path needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter("cycle needs n >= 3"));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter("complete graph needs n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star `K_{1,r}` with center 0.
pub fn star(r: usize) -> Result<Graph, GraphError> {
    if r == 0 {
        return Err(GraphError::InvalidParameter("star needs r >= 1"));
    }
    Graph::from_edges(r + 1, (1..=r).map(|v| (0, v)))
}

/// Complete bipartite `K_{s,t}`: part one is `0..s`, part two `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph, GraphError> {
    if s == 0 || t == 0 {
        return Err(GraphError::InvalidParameter("complete bipartite graph needs both parts nonempty"));
    }
    Graph::from_edges(s + t, (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))))
}

/// Cartesian product `G □ F`; vertex `(x, y)` gets id `x * n(F) + y`.
pub fn cartesian_product(g: &Graph, f: &Graph) -> Result<Graph, GraphError> {
    let (ng, nf) = (g.n(), f.n());
    if ng == 0 || nf == 0 {
        return Err(GraphError::InvalidParameter("product factors must be nonempty"));
    }
    let n = ng * nf;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n });
    }
    let mut edges = Vec::new();
    for x in 0..ng {
        for (y, y2) in f.edges() {
            edges.push((x * nf + y, x * nf + y2));
        }
    }
    for (x, x2) in g.edges() {
        for y in 0..nf {
            edges.push((x * nf + y, x2 * nf + y));
        }
    }
    Graph::from_edges(n, edges)
}

/// Grid `P_m □ P_n`. Coordinates `(i, j)` with `1 <= i <= m`, `1 <= j <= n`
/// map to id `(i-1) * n + (j-1)`.
pub fn grid(m: usize, n: usize) -> Result<Graph, GraphError> {
    cartesian_product(&path(m)?, &path(n)?)
}

/// Line graph `L(H)`. Vertex `i` of the result is `H.edges()[i]`, which is
/// also returned.
pub fn line_graph(h: &Graph) -> Result<(Graph, Vec<(usize, usize)>), GraphError> {
    let edges = h.edges();
    if edges.is_empty() {
        return Err(GraphError::NoEdges);
    }
    let m = edges.len();
    if m > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n: m });
    }
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    Ok((Graph::from_edges(m, out)?, edges))
}

/// `G_{n,k}`: `n` copies of `K_k` strung along a path. Copy `i` occupies
/// `i*k .. i*k+k-1`; its vertex `i*k+1` is joined to vertex `(i+1)*k` of the
/// next copy, so every vertex gains at most one extra edge.
pub fn gnk(n: usize, k: usize) -> Result<Graph, GraphError> {
    if n < 2 || k < 3 {
        return Err(GraphError::InvalidParameter("G_{n,k} needs n >= 2 and k >= 3"));
    }
    let total = n * k;
    if total > MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n: total });
    }
    let mut edges = Vec::new();
    for c in 0..n {
        let base = c * k;
        for u in 0..k {
            for v in u + 1..k {
                edges.push((base + u, base + v));
            }
        }
        if c + 1 < n {
            edges.push((base + 1, base + k));
        }
    }
    Graph::from_edges(total, edges)
}

/// `F_{a,n} = C_{a+1} □ K_n`. Small parameters are accepted; the sharpness
/// argument that motivates this family needs `a >= n >= 5`, which callers can
/// test with [`fan_is_in_sharp_range`].
pub fn fan(a: usize, n: usize) -> Result<Graph, GraphError> {
    if a < 2 || n < 1 {
        return Err(GraphError::InvalidParameter("F_{a,n} needs a >= 2 and n >= 1"));
    }
    cartesian_product(&cycle(a + 1)?, &complete(n)?)
}

pub fn fan_is_in_sharp_range(a: usize, n: usize) -> bool {
    a >= n && n >= 5
}

/// `P⁺_{2k+1}`: the path on `2k+1` vertices plus chords `{2i-1, 2i+1}` (0-based)
/// for `i` in `1..k`.
pub fn path_plus(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter("P+ needs k >= 1"));
    }
    let n = 2 * k + 1;
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    for i in 1..k {
        edges.push((2 * i - 1, 2 * i + 1));
    }
    Graph::from_edges(n, edges)
}

/// The seven-vertex graph `z, x1..x4, y1, y2` (ids 0..6) where `z` is joined
/// to every `x_i`, `y1` to `x1, x2`, `y2` to `x3, x4`, and `y1 y2` is an edge.
pub fn local_domination_example() -> Graph {
    let (z, x1, x2, x3, x4, y1, y2) = (0, 1, 2, 3, 4, 5, 6);
    Graph::from_edges(7, [(z, x1), (z, x2), (z, x3), (z, x4), (y1, x1), (y1, x2), (y2, x3), (y2, x4), (y1, y2)])
        .expect("static graph")
}

/// An 11-vertex graph with a fixed star partition into a 2-star (center 0),
/// a 3-star (center 3) and a 3-star (center 7). The leaf 8 of the last star
/// is adjacent to center 3, and centers 0 and 3 are adjacent.
pub fn star_digraph_example() -> Graph {
    Graph::from_edges(11, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (3, 6), (3, 8), (7, 8), (7, 9), (7, 10)])
        .expect("static graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simple_and_symmetric(g: &Graph) -> bool {
        (0..g.n()).all(|v| !g.neighbors(v).contains(v) && g.neighbors(v).iter().all(|u| u < g.n() && g.has_edge(u, v)))
    }

    #[test]
    fn closed_neighborhoods() {
        let p3 = path(3).unwrap();
        assert_eq!(p3.closed_neighborhood(1).unwrap(), VertexSet::from([0, 1, 2]));
        assert_eq!(p3.closed_neighborhood(0).unwrap(), VertexSet::from([0, 1]));
        assert_eq!(cycle(5).unwrap().closed(2), VertexSet::from([1, 2, 3]));
        assert_eq!(p3.closed_neighborhood(3), Err(GraphError::VertexOutOfRange { v: 3, n: 3 }));
    }

    #[test]
    fn basic_generators() {
        assert_eq!(path(2).unwrap().edges(), [(0, 1)]);
        assert_eq!(star(3).unwrap().edges(), [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(star(0).is_err());
        assert!(Graph::empty(65).is_err());
        for g in [path(7), cycle(6), complete(5), star(4), gnk(3, 4), path_plus(3)] {
            assert!(simple_and_symmetric(&g.unwrap()));
        }
    }

    #[test]
    fn products() {
        let p2 = path(2).unwrap();
        let c4 = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.min_degree(), 2);
        assert_eq!(c4.max_degree(), 2);
        let ladder = cartesian_product(&path(3).unwrap(), &p2).unwrap();
        assert_eq!((ladder.n(), ladder.edge_count()), (6, 7));
        let k1 = path(1).unwrap();
        let f = cycle(5).unwrap();
        assert_eq!(cartesian_product(&k1, &f).unwrap(), f);
        assert!(cartesian_product(&complete(8).unwrap(), &complete(9).unwrap()).is_err());
    }

    #[test]
    fn product_degree_law() {
        let gs = [path(3), cycle(4), star(3), complete(2), path(1)].map(Result::unwrap);
        for g in &gs {
            for f in &gs {
                let p = cartesian_product(g, f).unwrap();
                for x in 0..g.n() {
                    for y in 0..f.n() {
                        assert_eq!(p.degree(x * f.n() + y), g.degree(x) + f.degree(y));
                    }
                }
            }
        }
    }

    #[test]
    fn line_graphs() {
        let k3 = complete(3).unwrap();
        assert_eq!(line_graph(&k3).unwrap().0, k3);
        assert_eq!(line_graph(&path(4).unwrap()).unwrap().0, path(3).unwrap());
        assert_eq!(line_graph(&star(3).unwrap()).unwrap().0, k3);
        assert_eq!(line_graph(&Graph::empty(3).unwrap()), Err(GraphError::NoEdges));
        let (_, map) = line_graph(&cycle(4).unwrap()).unwrap();
        assert_eq!(map, [(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn gnk_shape() {
        let g = gnk(2, 3).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.max_degree(), g.min_degree()), (6, 7, 3, 2));
        let g = gnk(4, 3).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.max_degree()), (12, 15, 3));
        let g = gnk(2, 4).unwrap();
        assert_eq!((g.max_degree(), g.min_degree()), (4, 3));
        assert!(gnk(1, 3).is_err());
        assert!(gnk(2, 2).is_err());
    }

    #[test]
    fn gnk_audit() {
        for n in 2..=6 {
            for k in 3..=6 {
                let g = gnk(n, k).unwrap();
                assert!(g.is_connected());
                assert_eq!(g.max_degree(), k);
                assert_eq!(g.min_degree(), k - 1);
                for c in 0..n {
                    let copy: VertexSet = (c * k..c * k + k).collect();
                    let outside = copy.iter().map(|v| g.neighbors(v).difference(copy).len()).sum::<usize>();
                    assert!(outside <= 2);
                }
            }
        }
    }

    #[test]
    fn fan_shape() {
        let g = fan(5, 5).unwrap();
        assert_eq!((g.n(), g.max_degree()), (30, 6));
        let g = fan(2, 3).unwrap();
        assert_eq!((g.n(), g.min_degree(), g.max_degree()), (9, 4, 4));
        assert!(fan_is_in_sharp_range(5, 5));
        assert!(!fan_is_in_sharp_range(2, 3));
    }

    #[test]
    fn path_plus_shape() {
        assert_eq!(path_plus(1).unwrap(), path(3).unwrap());
        let g = path_plus(2).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(1, 3));
    }

    #[test]
    fn induced_and_components() {
        let g = path(5).unwrap();
        let rest = g.vertices().difference(VertexSet::from([2]));
        assert_eq!(g.component_of(4, rest), VertexSet::from([3, 4]));
        let (h, map) = g.induced(VertexSet::from([1, 2, 4]));
        assert_eq!(map, [1, 2, 4]);
        assert_eq!(h.edges(), [(0, 1)]);
        assert!(path(6).unwrap().is_tree());
        assert!(!cycle(6).unwrap().is_tree());
        assert_eq!(star(4).unwrap().isolated_after_removing(VertexSet::from([0])), 4);
    }
}
