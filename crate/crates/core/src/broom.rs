//! Brooms `B_{k,l}` and rainbow copy detection.
//!
//! A broom is a path of length `l` (the handle) with `k - l` pendant edges
//! (bristles) hung on its last vertex, the center. For `l = 2` a rainbow copy
//! with handle `w-x-u` exists iff `u` has at least `k - 2` neighbors outside
//! `{w, x}` whose edge color differs from `c(wx)`; properness takes care of
//! every other collision. [`find_rainbow_broom2`] scans exactly that.
//! [`find_rainbow_tree`] is a plain embedding search for any tree and serves
//! as the independent cross-check.

use serde::{Deserialize, Serialize};

use crate::colored::{Color, ColoredGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Identifies `B_{k,l}`: `k` total edges, handle of length `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BroomSpec {
    k: usize,
    handle: usize,
}

impl BroomSpec {
    pub fn new(k: usize, handle: usize) -> Result<Self> {
        if handle == 0 || k < handle {
            return Err(Error::InvalidBroom { k, handle });
        }
        Ok(BroomSpec { k, handle })
    }

    /// `B_{k,2}`.
    pub fn handle2(k: usize) -> Result<Self> {
        Self::new(k, 2)
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn handle_len(self) -> usize {
        self.handle
    }

    pub fn bristles(self) -> usize {
        self.k - self.handle
    }

    pub fn vertex_count(self) -> usize {
        self.k + 1
    }
}

impl std::fmt::Display for BroomSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "B_{{{},{}}}", self.k, self.handle)
    }
}

/// The broom as a tree: handle `0-1-...-l`, center `l`, bristle leaves `l+1..=k`.
pub fn build_broom(spec: BroomSpec) -> Graph {
    let l = spec.handle;
    let handle = (0..l).map(|i| (i, i + 1));
    let bristles = (l + 1..=spec.k).map(|b| (l, b));
    Graph::from_edges(spec.k + 1, handle.chain(bristles)).expect("broom edges are simple")
}

/// An explicit rainbow broom: handle vertices ending at the center, the
/// far ends of the bristles, and the colors of handle edges followed by
/// bristle edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RainbowCertificate {
    pub handle: Vec<usize>,
    pub bristles: Vec<usize>,
    pub colors: Vec<Color>,
}

impl RainbowCertificate {
    pub fn center(&self) -> Option<usize> {
        self.handle.last().copied()
    }

    pub fn spec(&self) -> Result<BroomSpec> {
        let l = self.handle.len().saturating_sub(1);
        BroomSpec::new(l + self.bristles.len(), l)
    }

    /// Edges in the order their colors are listed.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self.handle.windows(2).map(|w| (w[0], w[1])).collect();
        if let Some(c) = self.center() {
            out.extend(self.bristles.iter().map(|&b| (c, b)));
        }
        out
    }
}

/// First rainbow `B_{k,2}` in scan order: center `u` ascending, then `x`,
/// then `w`. Bristles are the smallest eligible neighbors of `u`.
pub fn find_rainbow_broom2(cg: &ColoredGraph, k: usize) -> Option<RainbowCertificate> {
    if k < 2 {
        return None;
    }
    let need = k - 2;
    for u in 0..cg.vertex_count() {
        let at_u = cg.incident(u);
        if at_u.len() < k - 1 {
            continue;
        }
        for &(x, c_xu) in at_u {
            for &(w, c_wx) in cg.incident(x) {
                if w == u {
                    continue;
                }
                let eligible = at_u
                    .iter()
                    .filter(|&&(v, c)| v != w && v != x && c != c_wx)
                    .take(need);
                let (bristles, bristle_colors): (Vec<usize>, Vec<Color>) = eligible.copied().unzip();
                if bristles.len() == need {
                    let mut colors = vec![c_wx, c_xu];
                    colors.extend(bristle_colors);
                    return Some(RainbowCertificate {
                        handle: vec![w, x, u],
                        bristles,
                        colors,
                    });
                }
            }
        }
    }
    None
}

/// Any broom: the `l = 2` fast path or the tree embedding search.
pub fn find_rainbow_broom(cg: &ColoredGraph, spec: BroomSpec) -> Option<RainbowCertificate> {
    if spec.handle == 2 {
        return find_rainbow_broom2(cg, spec.k);
    }
    let tree = build_broom(spec);
    let emb = find_rainbow_tree(cg, &tree).expect("brooms are trees")?;
    let map = &emb.vertex_map;
    let l = spec.handle;
    Some(RainbowCertificate {
        handle: map[..=l].to_vec(),
        bristles: map[l + 1..].to_vec(),
        colors: (0..l)
            .map(|i| (map[i], map[i + 1]))
            .chain((l + 1..=spec.k).map(|b| (map[l], map[b])))
            .map(|(a, b)| cg.color_of(a, b).expect("embedded edge exists"))
            .collect(),
    })
}

/// Re-checks a certificate against `cg` from scratch.
pub fn verify_certificate(cg: &ColoredGraph, cert: &RainbowCertificate, k: usize) -> bool {
    if cert.handle.len() < 2 || cert.handle.len() - 1 + cert.bristles.len() != k {
        return false;
    }
    let mut vertices: Vec<usize> = cert.handle.iter().chain(&cert.bristles).copied().collect();
    vertices.sort_unstable();
    if vertices.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let edges = cert.edges();
    if cert.colors.len() != edges.len() {
        return false;
    }
    for (&(a, b), &claimed) in edges.iter().zip(&cert.colors) {
        if cg.color_of(a, b) != Some(claimed) {
            return false;
        }
    }
    let mut colors = cert.colors.clone();
    colors.sort_unstable();
    colors.windows(2).all(|w| w[0] != w[1])
}

/// Rainbow copy of a pattern tree: `vertex_map[t]` is the host vertex of
/// pattern vertex `t`, `colors[i]` the color on the image of pattern edge `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEmbedding {
    pub vertex_map: Vec<usize>,
    pub colors: Vec<Color>,
}

impl TreeEmbedding {
    pub fn is_valid(&self, cg: &ColoredGraph, tree: &Graph) -> bool {
        if self.vertex_map.len() != tree.vertex_count() || self.colors.len() != tree.edge_count() {
            return false;
        }
        let mut seen = self.vertex_map.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        for (e, &col) in tree.edges().iter().zip(&self.colors) {
            if cg.color_of(self.vertex_map[e.lo()], self.vertex_map[e.hi()]) != Some(col) {
                return false;
            }
        }
        let mut colors = self.colors.clone();
        colors.sort_unstable();
        colors.windows(2).all(|w| w[0] != w[1])
    }
}

struct TreeSearch<'a> {
    cg: &'a ColoredGraph,
    order: Vec<usize>,
    parent: Vec<usize>,
    tree_degree: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    colors: Vec<Color>,
}

impl TreeSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&t) = self.order.get(depth) else {
            return true;
        };
        let host_parent = self.map[self.parent[t]];
        for &(h, c) in self.cg.incident(host_parent) {
            if self.used[h] || self.colors.contains(&c) || self.cg.degree(h) < self.tree_degree[t] {
                continue;
            }
            self.map[t] = h;
            self.used[h] = true;
            self.colors.push(c);
            if self.extend(depth + 1) {
                return true;
            }
            self.colors.pop();
            self.used[h] = false;
        }
        false
    }
}

/// Brute-force search for a rainbow copy of `tree` in `cg`.
pub fn find_rainbow_tree(cg: &ColoredGraph, tree: &Graph) -> Result<Option<TreeEmbedding>> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    let m = tree.vertex_count();
    if m > cg.vertex_count() {
        return Ok(None);
    }
    let tree_degree = tree.degrees();
    let root = (0..m)
        .max_by_key(|&v| (tree_degree[v], std::cmp::Reverse(v)))
        .expect("tree has a vertex");

    let mut order = Vec::with_capacity(m);
    let mut parent = vec![usize::MAX; m];
    let mut seen = vec![false; m];
    let mut queue = std::collections::VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in tree.neighbors(v)? {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    let mut search = TreeSearch {
        cg,
        order,
        parent,
        tree_degree,
        map: vec![usize::MAX; m],
        used: vec![false; cg.vertex_count()],
        colors: Vec::with_capacity(m),
    };
    for host in 0..cg.vertex_count() {
        if cg.degree(host) < search.tree_degree[root] {
            continue;
        }
        search.map[root] = host;
        search.used[host] = true;
        if search.extend(1) {
            let map = search.map;
            let colors = tree
                .edges()
                .iter()
                .map(|e| cg.color_of(map[e.lo()], map[e.hi()]).expect("embedded edge exists"))
                .collect();
            return Ok(Some(TreeEmbedding {
                vertex_map: map,
                colors,
            }));
        }
        search.used[host] = false;
    }
    Ok(None)
}
