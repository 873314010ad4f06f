//! Proper edge-colorings: circle-method factorizations of complete graphs and
//! a backtracking `k`-edge-colorer.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::colored::{Color, ColoredGraph, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{complete_graph, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorizationKind {
    /// Even order; every class is a perfect matching.
    Perfect,
    /// Odd order; every class misses exactly one vertex.
    NearPerfect,
}

impl FactorizationKind {
    pub fn for_order(m: usize) -> Self {
        if m.is_multiple_of(2) {
            FactorizationKind::Perfect
        } else {
            FactorizationKind::NearPerfect
        }
    }
}

fn color_complete(m: usize, color: impl Fn(usize, usize) -> Color) -> ColoredGraph {
    let g = complete_graph(m);
    let colors = g.edges().iter().map(|e| color(e.lo(), e.hi())).collect();
    ColoredGraph::new(g, EdgeColoring::new(colors)).expect("circle method is proper")
}

/// `K_m`, `m` even, with `m - 1` perfect-matching classes. Vertex `m - 1` is
/// the hub; class `i` holds `{m-1, i}` and `{i+j, i-j} mod (m-1)`.
pub fn one_factorization(m: usize) -> Result<ColoredGraph> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "one-factorization needs an even order >= 2, got {m}"
        )));
    }
    let r = m - 1;
    Ok(color_complete(m, |a, b| {
        if b == r {
            a as Color
        } else {
            // a + b = 2i (mod r); r is odd so 2 is invertible.
            ((a + b) * (r + 1) / 2 % r) as Color
        }
    }))
}

/// `K_m`, `m` odd, with `m` near-perfect classes; class `i` is
/// `{i+j, i-j} mod m` and misses vertex `i`.
pub fn near_one_factorization(m: usize) -> Result<ColoredGraph> {
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "near-one-factorization needs an odd order >= 3, got {m}"
        )));
    }
    Ok(color_complete(m, |a, b| ((a + b) * (m + 1) / 2 % m) as Color))
}

/// Proper coloring of `K_m` for any `m`: the circle method for `m >= 2`,
/// nothing to color otherwise.
pub fn factorize_complete(m: usize) -> ColoredGraph {
    match m {
        0 | 1 => ColoredGraph::new(Graph::empty(m), EdgeColoring::new(Vec::new()))
            .expect("edgeless"),
        _ if m.is_multiple_of(2) => one_factorization(m).expect("even order"),
        _ => near_one_factorization(m).expect("odd order"),
    }
}

/// Budgets beyond this are clamped; graphs needing more colors are out of scope.
const MAX_BUDGET: usize = 128;

struct EdgeColorer<'a, R> {
    g: &'a Graph,
    budget: usize,
    /// Colors present at each vertex.
    at: Vec<u128>,
    /// Uncolored incident edges per vertex.
    open: Vec<usize>,
    color: Vec<Option<Color>>,
    used: usize,
    rng: Option<&'a mut R>,
}

impl<R: Rng> EdgeColorer<'_, R> {
    /// Most constrained uncolored edge: most distinct colors around it, then
    /// most uncolored neighbors, then lowest index.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, e) in self.g.edges().iter().enumerate() {
            if self.color[i].is_some() {
                continue;
            }
            let sat = (self.at[e.lo()] | self.at[e.hi()]).count_ones();
            let open = self.open[e.lo()] + self.open[e.hi()];
            let key = (sat, open, i);
            let better = match best {
                None => true,
                Some((bs, bo, _)) => (sat, open) > (bs, bo),
            };
            if better {
                best = Some(key);
            }
        }
        best.map(|(_, _, i)| i)
    }

    fn solve(&mut self) -> bool {
        let Some(i) = self.pick() else {
            return true;
        };
        let e = self.g.edges()[i];
        let (a, b) = (e.lo(), e.hi());
        let forbidden = self.at[a] | self.at[b];
        // Unused colors are interchangeable, so only the next fresh one is tried.
        let limit = (self.used + 1).min(self.budget);
        let mut candidates: Vec<usize> = (0..limit).filter(|&c| forbidden >> c & 1 == 0).collect();
        if let Some(rng) = self.rng.as_deref_mut() {
            candidates.shuffle(rng);
        }
        for c in candidates {
            let fresh = c == self.used;
            self.color[i] = Some(c as Color);
            self.at[a] |= 1 << c;
            self.at[b] |= 1 << c;
            self.open[a] -= 1;
            self.open[b] -= 1;
            if fresh {
                self.used += 1;
            }
            if self.solve() {
                return true;
            }
            if fresh {
                self.used -= 1;
            }
            self.open[a] += 1;
            self.open[b] += 1;
            self.at[a] &= !(1 << c);
            self.at[b] &= !(1 << c);
            self.color[i] = None;
        }
        false
    }
}

fn run_colorer<R: Rng>(g: &Graph, k: usize, rng: Option<&mut R>) -> Option<ColoredGraph> {
    let budget = k.min(MAX_BUDGET);
    if g.max_degree() > budget {
        return None;
    }
    let mut solver = EdgeColorer {
        g,
        budget,
        at: vec![0; g.vertex_count()],
        open: g.degrees(),
        color: vec![None; g.edge_count()],
        used: 0,
        rng,
    };
    if !solver.solve() {
        return None;
    }
    let colors = solver.color.into_iter().map(|c| c.expect("all colored")).collect();
    Some(ColoredGraph::new(g.clone(), EdgeColoring::new(colors)).expect("solver keeps colors proper"))
}

/// Proper coloring with at most `k` colors, or `None` once the search is
/// exhausted. Colors are numbered in order of first use.
pub fn k_edge_color(g: &Graph, k: usize) -> Option<ColoredGraph> {
    run_colorer::<rand_chacha::ChaCha8Rng>(g, k, None)
}

/// Like [`k_edge_color`] but tries colors in random order, which yields a
/// random-ish witness rather than the canonical first one.
pub fn k_edge_color_randomized<R: Rng>(g: &Graph, k: usize, rng: &mut R) -> Option<ColoredGraph> {
    run_colorer(g, k, Some(rng))
}
