//! Canonical enumeration of proper edge-colorings with rainbow pruning.
//!
//! Edges are colored in a fixed order and colors are introduced in order of
//! first use, so every partition of the edges into color classes (with at
//! most `budget` classes) is visited exactly once.

use std::ops::ControlFlow;

use crate::broom::find_rainbow_tree;
use crate::colored::{Color, ColoredGraph, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

const NONE: u8 = u8::MAX;

/// What to prune on while coloring.
#[derive(Debug, Clone)]
pub(crate) enum Probe {
    /// Enumerate every proper coloring.
    Off,
    /// Cut a branch once a rainbow `B_{k,2}` appears.
    Broom2(usize),
    /// Cut a branch once a rainbow copy of this tree appears.
    Tree(Graph),
}

/// Mutable coloring state over a host with at most 64 vertices and 64 colors.
pub(crate) struct PartialColoring<'g> {
    g: &'g Graph,
    n: usize,
    /// Host edge indices in coloring order.
    order: Vec<usize>,
    /// `col[u * n + v]`, `NONE` when uncolored or absent.
    col: Vec<u8>,
    /// Colored neighbors.
    nb: Vec<u64>,
    /// Colors present at each vertex.
    at: Vec<u64>,
    /// Uncolored incident edges.
    open: Vec<usize>,
    budget: usize,
    used: usize,
    pub(crate) nodes: u64,
    pub(crate) leaves: u64,
}

impl<'g> PartialColoring<'g> {
    pub(crate) fn new(g: &'g Graph, budget: usize) -> Result<Self> {
        let n = g.vertex_count();
        if n > 64 || budget > 64 {
            return Err(Error::TooLarge(format!(
                "coloring search supports at most 64 vertices and colors (n={n}, budget={budget})"
            )));
        }
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        // Grow the graph vertex by vertex so dense pieces get colored early.
        order.sort_by_key(|&i| {
            let e = g.edges()[i];
            (e.hi(), e.lo())
        });
        Ok(PartialColoring {
            g,
            n,
            order,
            col: vec![NONE; n * n],
            nb: vec![0; n],
            at: vec![0; n],
            open: g.degrees(),
            budget,
            used: 0,
            nodes: 0,
            leaves: 0,
        })
    }

    fn color(&self, u: usize, v: usize) -> u8 {
        self.col[u * self.n + v]
    }

    fn set(&mut self, a: usize, b: usize, c: usize) {
        self.col[a * self.n + b] = c as u8;
        self.col[b * self.n + a] = c as u8;
        self.nb[a] |= 1 << b;
        self.nb[b] |= 1 << a;
        self.at[a] |= 1 << c;
        self.at[b] |= 1 << c;
        self.open[a] -= 1;
        self.open[b] -= 1;
    }

    fn unset(&mut self, a: usize, b: usize, c: usize) {
        self.col[a * self.n + b] = NONE;
        self.col[b * self.n + a] = NONE;
        self.nb[a] &= !(1 << b);
        self.nb[b] &= !(1 << a);
        self.at[a] &= !(1 << c);
        self.at[b] &= !(1 << c);
        self.open[a] += 1;
        self.open[b] += 1;
    }

    /// Rainbow `B_{k,2}` centered at `u` among colored edges.
    fn broom2_at(&self, u: usize, k: usize) -> bool {
        let d = self.nb[u].count_ones() as usize;
        if d + 1 < k {
            return false;
        }
        let mut xs = self.nb[u];
        while xs != 0 {
            let x = xs.trailing_zeros() as usize;
            xs &= xs - 1;
            let mut ws = self.nb[x] & !(1 << u);
            while ws != 0 {
                let w = ws.trailing_zeros() as usize;
                ws &= ws - 1;
                let c = self.color(w, x);
                // Neighbors of u other than x, w and the one reached by color c(wx).
                let lost = 1 + (self.nb[u] >> w & 1) as usize + (self.at[u] >> c & 1) as usize;
                if d >= lost && d - lost + 2 >= k {
                    return true;
                }
            }
        }
        false
    }

    /// Whether some rainbow `B_{k,2}` uses colored edge `{a, b}`.
    fn broom2_through(&self, a: usize, b: usize, k: usize) -> bool {
        let mut centers = self.nb[a] | self.nb[b] | 1 << a | 1 << b;
        while centers != 0 {
            let u = centers.trailing_zeros() as usize;
            centers &= centers - 1;
            if self.broom2_at(u, k) {
                return true;
            }
        }
        false
    }

    pub(crate) fn has_rainbow_broom2(&self, k: usize) -> bool {
        (0..self.n).any(|u| self.broom2_at(u, k))
    }

    /// Colors aligned with the host's edge order; uncolored edges are skipped.
    fn colored_pairs(&self) -> (Vec<(usize, usize)>, Vec<Color>) {
        self.g
            .edges()
            .iter()
            .filter_map(|e| {
                let c = self.color(e.lo(), e.hi());
                (c != NONE).then_some(((e.lo(), e.hi()), c as Color))
            })
            .unzip()
    }

    /// The current (complete) coloring as a [`ColoredGraph`] on the host.
    pub(crate) fn to_colored(&self) -> ColoredGraph {
        let colors = self
            .g
            .edges()
            .iter()
            .map(|e| self.color(e.lo(), e.hi()) as Color)
            .collect();
        ColoredGraph::new(self.g.clone(), EdgeColoring::new(colors)).expect("search keeps properness")
    }

    fn partial_colored(&self) -> ColoredGraph {
        let (pairs, colors) = self.colored_pairs();
        let g = Graph::from_edges(self.n, pairs).expect("subgraph of a simple graph");
        ColoredGraph::new(g, EdgeColoring::new(colors)).expect("search keeps properness")
    }

    /// Class sizes indexed by color.
    pub(crate) fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.used];
        for e in self.g.edges() {
            let c = self.color(e.lo(), e.hi());
            if c != NONE {
                sizes[c as usize] += 1;
            }
        }
        sizes
    }

    pub(crate) fn colors_used(&self) -> usize {
        self.used
    }

    fn rainbow_after(&self, probe: &Probe, a: usize, b: usize) -> bool {
        match probe {
            Probe::Off => false,
            Probe::Broom2(k) => self.broom2_through(a, b, *k),
            Probe::Tree(t) => find_rainbow_tree(&self.partial_colored(), t)
                .expect("probe pattern is a tree")
                .is_some(),
        }
    }

    /// Runs `visit` on every canonical proper coloring that survives `probe`.
    pub(crate) fn enumerate<F>(&mut self, probe: &Probe, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&PartialColoring<'_>) -> ControlFlow<()>,
    {
        self.extend(0, probe, visit)
    }

    fn extend<F>(&mut self, depth: usize, probe: &Probe, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&PartialColoring<'_>) -> ControlFlow<()>,
    {
        let Some(&idx) = self.order.get(depth) else {
            self.leaves += 1;
            return visit(self);
        };
        let e = self.g.edges()[idx];
        let (a, b) = (e.lo(), e.hi());
        let forbidden = self.at[a] | self.at[b];
        let limit = (self.used + 1).min(self.budget);
        for c in 0..limit {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            let fresh = c == self.used;
            self.set(a, b, c);
            if fresh {
                self.used += 1;
            }
            let feasible = [a, b]
                .iter()
                .all(|&v| self.open[v] + self.at[v].count_ones() as usize <= self.budget);
            if feasible && !self.rainbow_after(probe, a, b) {
                self.extend(depth + 1, probe, visit)?;
            }
            if fresh {
                self.used -= 1;
            }
            self.unset(a, b, c);
        }
        ControlFlow::Continue(())
    }
}
