//! Simple undirected graphs on dense vertex indices `0..n`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// An unordered vertex pair stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(usize, usize);

impl Edge {
    /// Canonicalizes `{u, v}`. Fails on a self-loop.
    pub fn new(u: usize, v: usize) -> Result<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(u)),
        }
    }

    pub fn lo(self) -> usize {
        self.0
    }

    pub fn hi(self) -> usize {
        self.1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`, if `v` is an endpoint.
    pub fn other(self, v: usize) -> Option<usize> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }

    pub fn shares_vertex(self, other: Edge) -> bool {
        self.contains(other.0) || self.contains(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<Edge> for (usize, usize) {
    fn from(e: Edge) -> Self {
        (e.0, e.1)
    }
}

/// A finite simple graph. Edges are kept sorted, adjacency lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from unordered pairs, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            let e = Edge::new(u, v)?;
            if !set.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_sorted_unique(n, set.into_iter().collect()))
    }

    /// Caller guarantees `edges` is sorted, duplicate-free and in range.
    pub(crate) fn from_sorted_unique(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Subgraph of `self` keeping the edges whose index bit is set in `mask`.
    /// Only the first 64 edges are addressable.
    pub fn edge_subgraph_mask(&self, mask: u64) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i < 64 && mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Self::from_sorted_unique(self.n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = Edge::new(u, v).ok()?;
        self.edges.binary_search(&e).ok()
    }

    /// Connected components, each a sorted vertex list, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Self::from_edges(self.n, self.edges.iter().map(|e| (perm[e.0], perm[e.1])))
    }
}

/// `K_m`.
pub fn complete_graph(m: usize) -> Graph {
    let edges = (0..m)
        .flat_map(|u| (u + 1..m).map(move |v| Edge(u, v)))
        .collect();
    Graph::from_sorted_unique(m, edges)
}

/// Graph on `n` vertices with a cycle through `0..len` (`len >= 3`).
pub fn cycle_on(n: usize, len: usize) -> Result<Graph> {
    if len < 3 || len > n {
        return Err(Error::InvalidParameter(format!(
            "cycle of length {len} in {n} vertices"
        )));
    }
    Graph::from_edges(n, (0..len).map(|i| (i, (i + 1) % len)))
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| Edge(u, v)))
        .filter(|e| !g.has_edge(e.0, e.1))
        .collect();
    Graph::from_sorted_unique(n, edges)
}

/// `g ⊔ h` with `h`'s vertices shifted by `|V(g)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.vertex_count();
    let mut edges = g.edges.clone();
    edges.extend(h.edges.iter().map(|e| Edge(e.0 + off, e.1 + off)));
    Graph::from_sorted_unique(off + h.vertex_count(), edges)
}

pub fn degree(g: &Graph, v: usize) -> Result<usize> {
    g.degree(v)
}

pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

pub fn neighborhood(g: &Graph, v: usize) -> Result<BTreeSet<usize>> {
    Ok(g.neighbors(v)?.iter().copied().collect())
}

/// Exact isomorphism test by degree-filtered backtracking. Intended for
/// graphs of at most a dozen or so vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

/// A vertex map `g -> h` that is an isomorphism, if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n != h.n || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    // Map high-degree vertices first; they constrain the most.
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.adj[v].len()), v));
    let mut map = vec![usize::MAX; g.n];
    let mut used = vec![false; g.n];
    if extend_iso(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend_iso(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for cand in 0..h.n {
        if used[cand] || h.adj[cand].len() != g.adj[v].len() {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| g.has_edge(v, p) == h.has_edge(cand, map[p]));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend_iso(g, h, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()
    }

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(complete_graph(0).edge_count(), 0);
        assert_eq!(complete_graph(0).vertex_count(), 0);
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(complete_graph(7).edge_count(), 21);
        assert_eq!(max_degree(&complete_graph(5)), 4);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let c = complement(&complete_graph(4));
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(c.edge_count(), 0);
    }

    #[test]
    fn complement_of_triangle_plus_isolated() {
        let g = cycle_on(7, 3).unwrap();
        let h = complement(&g);
        assert_eq!(h.edge_count(), 18);
        for v in 0..7 {
            let d = h.degree(v).unwrap();
            assert!(d == 4 || d == 6, "vertex {v} has degree {d}");
        }
    }

    #[test]
    fn disjoint_union_offsets() {
        let e = Graph::empty(0);
        let k4 = complete_graph(4);
        assert_eq!(disjoint_union(&e, &k4), k4);
        let two = disjoint_union(&k4, &k4);
        assert_eq!(two.vertex_count(), 8);
        assert_eq!(two.edge_count(), 12);
        assert!(two.has_edge(4, 7));
        assert!(!two.has_edge(3, 4));

        let k = 3;
        let n = 8;
        let mut g = Graph::empty(0);
        for _ in 0..n / (k + 1) {
            g = disjoint_union(&g, &complete_graph(k + 1));
        }
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
    }

    #[test]
    fn degrees_and_neighborhoods() {
        let s = star(5);
        assert_eq!(degree(&s, 0).unwrap(), 5);
        assert_eq!(neighborhood(&s, 3).unwrap(), BTreeSet::from([0]));
        assert_eq!(max_degree(&Graph::empty(3)), 0);
        assert_eq!(max_degree(&Graph::empty(0)), 0);
        assert_eq!(s.degree(6), Err(Error::InvalidVertex { vertex: 6, n: 6 }));
        assert!(neighborhood(&s, 9).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::InvalidVertex { vertex: 3, .. })
        ));
    }

    #[test]
    fn isomorphism_basics() {
        let p = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let q = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let s = star(3);
        assert!(is_isomorphic(&p, &q));
        assert!(!is_isomorphic(&p, &s));
        let map = isomorphism(&p, &q).unwrap();
        for e in p.edges() {
            assert!(q.has_edge(map[e.lo()], map[e.hi()]));
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..=8).prop_flat_map(|n| {
            let m = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
                complete_graph(n).edge_subgraph_mask(
                    bits.iter()
                        .enumerate()
                        .fold(0u64, |acc, (i, &b)| acc | (b as u64) << i),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph()) {
            prop_assert_eq!(complement(&complement(&g)), g);
        }

        #[test]
        fn handshake(g in arb_graph()) {
            prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        }

        #[test]
        fn permuted_is_isomorphic(g in arb_graph(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm).unwrap();
            prop_assert!(is_isomorphic(&g, &h));
        }
    }
}
