//! JSON and DOT renderings.
//!
//! Plain graphs are `{"n": 5, "edges": [[0,1], ...]}`; colored graphs add a
//! `"colors"` array aligned with `"edges"`. Edges may appear in any order on
//! input and are written in canonical `(min, max)` sorted order.

use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::colored::{Color, ColoredGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ColoredRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
    colors: Vec<Color>,
}

fn edge_pairs(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().iter().map(|e| [e.lo(), e.hi()]).collect()
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.vertex_count(),
            edges: edge_pairs(self),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, repr.edges.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}

impl Serialize for ColoredGraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ColoredRepr {
            n: self.vertex_count(),
            edges: edge_pairs(self.graph()),
            colors: self.coloring().colors().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ColoredGraph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ColoredRepr::deserialize(d)?;
        colored_from_parts(repr.n, &repr.edges, &repr.colors).map_err(serde::de::Error::custom)
    }
}

fn colored_from_parts(n: usize, edges: &[[usize; 2]], colors: &[Color]) -> Result<ColoredGraph> {
    if edges.len() != colors.len() {
        return Err(Error::ColoringLength {
            colors: colors.len(),
            edges: edges.len(),
        });
    }
    ColoredGraph::from_colored_edges(
        n,
        edges.iter().zip(colors).map(|(&[u, v], &c)| (u, v, c)),
    )
}

/// Either shape of graph file, as accepted by tools that color or check input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphInput {
    Plain(Graph),
    Colored(ColoredGraph),
}

impl GraphInput {
    pub fn graph(&self) -> &Graph {
        match self {
            GraphInput::Plain(g) => g,
            GraphInput::Colored(cg) => cg.graph(),
        }
    }
}

/// Parses a graph document. A top-level `"graph"` member is unwrapped first,
/// so construction reports can be fed back in directly.
pub fn parse_graph_json(text: &str) -> Result<GraphInput> {
    let mut value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidParameter(format!("bad JSON: {e}")))?;
    if let Some(inner) = value.get_mut("graph") {
        value = inner.take();
    }
    let parse_err = |e: serde_json::Error| Error::InvalidParameter(format!("bad graph JSON: {e}"));
    if value.get("colors").is_some() {
        let repr: ColoredRepr = serde_json::from_value(value).map_err(parse_err)?;
        Ok(GraphInput::Colored(colored_from_parts(
            repr.n,
            &repr.edges,
            &repr.colors,
        )?))
    } else {
        let repr: GraphRepr = serde_json::from_value(value).map_err(parse_err)?;
        Ok(GraphInput::Plain(Graph::from_edges(
            repr.n,
            repr.edges.into_iter().map(|[u, v]| (u, v)),
        )?))
    }
}

const PALETTE: [&str; 12] = [
    "red", "darkorange", "forestgreen", "blue", "purple", "brown", "deeppink", "cyan4",
    "gold3", "gray40", "olivedrab", "navy",
];

/// DOT rendering; colors map onto a fixed palette cyclically.
pub fn to_dot(cg: &ColoredGraph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..cg.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, c) in cg.colored_edges() {
        let _ = writeln!(
            out,
            "  {} -- {} [color={}, label=\"{c}\"];",
            e.lo(),
            e.hi(),
            PALETTE[c as usize % PALETTE.len()]
        );
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::EdgeColoring;
    use crate::testutil::k5_minus_class;
    use proptest::prelude::*;

    #[test]
    fn plain_format() {
        let g = Graph::from_edges(3, [(2, 1), (0, 1)]).unwrap();
        assert_eq!(
            serde_json::to_string(&g).unwrap(),
            r#"{"n":3,"edges":[[0,1],[1,2]]}"#
        );
    }

    #[test]
    fn colored_input_in_any_order() {
        let text = r#"{"n":3,"edges":[[2,1],[1,0]],"colors":[4,9]}"#;
        let cg: ColoredGraph = serde_json::from_str(text).unwrap();
        assert_eq!(cg.color_of(0, 1), Some(9));
        assert_eq!(cg.color_of(1, 2), Some(4));
        assert_eq!(
            serde_json::to_string(&cg).unwrap(),
            r#"{"n":3,"edges":[[0,1],[1,2]],"colors":[9,4]}"#
        );
    }

    #[test]
    fn rejects_improper_or_misaligned() {
        let bad = r#"{"n":3,"edges":[[0,1],[1,2]],"colors":[1,1]}"#;
        assert!(serde_json::from_str::<ColoredGraph>(bad).is_err());
        assert!(parse_graph_json(bad).is_err());
        let short = r#"{"n":3,"edges":[[0,1],[1,2]],"colors":[1]}"#;
        assert!(parse_graph_json(short).is_err());
        assert!(parse_graph_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
    }

    #[test]
    fn unwraps_report_envelope() {
        let text = r#"{"summary":{"edges":1},"graph":{"n":2,"edges":[[0,1]],"colors":[0]}}"#;
        assert!(matches!(parse_graph_json(text).unwrap(), GraphInput::Colored(_)));
        let plain = parse_graph_json(r#"{"n":4,"edges":[]}"#).unwrap();
        assert_eq!(plain.graph().vertex_count(), 4);
    }

    #[test]
    fn dot_lists_every_edge() {
        let dot = to_dot(&k5_minus_class());
        assert_eq!(dot.matches(" -- ").count(), 8);
        assert!(dot.contains("0 -- 1 [color=blue"));
    }

    proptest! {
        #[test]
        fn colored_round_trip(n in 1usize..8, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = crate::graph::complete_graph(n).edge_subgraph_mask(rng.gen());
            let colors = EdgeColoring::rainbow(g.edge_count());
            let cg = ColoredGraph::new(g, colors).unwrap();
            let text = serde_json::to_string(&cg).unwrap();
            let back: ColoredGraph = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(back, cg);
        }
    }
}
