//! Edge colorings and properly colored graphs.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Colors are labels; only equality matters.
pub type Color = u32;

/// A color per edge, aligned with [`Graph::edges`] of the graph it colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Self {
        EdgeColoring { colors }
    }

    /// Gives every edge its own color.
    pub fn rainbow(edges: usize) -> Self {
        EdgeColoring {
            colors: (0..edges as Color).collect(),
        }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn distinct_colors(&self) -> BTreeSet<Color> {
        self.colors.iter().copied().collect()
    }
}

fn check_total(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if c.len() == g.edge_count() {
        Ok(())
    } else {
        Err(Error::ColoringLength {
            colors: c.len(),
            edges: g.edge_count(),
        })
    }
}

/// Finds two incident edges with the same color.
fn first_conflict(g: &Graph, c: &EdgeColoring) -> Option<Error> {
    let mut seen: Vec<BTreeMap<Color, Edge>> = vec![BTreeMap::new(); g.vertex_count()];
    for (&e, &col) in g.edges().iter().zip(c.colors()) {
        for v in [e.lo(), e.hi()] {
            if let Some(&prev) = seen[v].get(&col) {
                return Some(Error::ImproperColoring {
                    vertex: v,
                    first: prev.into(),
                    second: e.into(),
                    color: col,
                });
            }
            seen[v].insert(col, e);
        }
    }
    None
}

/// True iff no two edges sharing a vertex have the same color.
pub fn is_proper(g: &Graph, c: &EdgeColoring) -> Result<bool> {
    check_total(g, c)?;
    Ok(first_conflict(g, c).is_none())
}

/// Edges grouped by color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClassPartition {
    classes: BTreeMap<Color, Vec<Edge>>,
}

impl ColorClassPartition {
    pub fn classes(&self) -> &BTreeMap<Color, Vec<Edge>> {
        &self.classes
    }

    pub fn get(&self, color: Color) -> Option<&[Edge]> {
        self.classes.get(&color).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.values().map(Vec::len).collect()
    }

    /// Whether every class is a matching.
    pub fn all_matchings(&self) -> bool {
        self.classes.values().all(|class| {
            let mut seen = BTreeSet::new();
            class.iter().all(|e| seen.insert(e.lo()) && seen.insert(e.hi()))
        })
    }
}

pub fn color_classes(g: &Graph, c: &EdgeColoring) -> Result<ColorClassPartition> {
    check_total(g, c)?;
    let mut classes: BTreeMap<Color, Vec<Edge>> = BTreeMap::new();
    for (&e, &col) in g.edges().iter().zip(c.colors()) {
        classes.entry(col).or_default().push(e);
    }
    Ok(ColorClassPartition { classes })
}

/// A graph with a proper edge-coloring. Properness is checked on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    graph: Graph,
    coloring: EdgeColoring,
    /// Per vertex: `(neighbor, color)` sorted by neighbor.
    incident: Vec<Vec<(usize, Color)>>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, coloring: EdgeColoring) -> Result<Self> {
        check_total(&graph, &coloring)?;
        if let Some(err) = first_conflict(&graph, &coloring) {
            return Err(err);
        }
        let mut incident = vec![Vec::new(); graph.vertex_count()];
        for (&e, &col) in graph.edges().iter().zip(coloring.colors()) {
            incident[e.lo()].push((e.hi(), col));
            incident[e.hi()].push((e.lo(), col));
        }
        for list in &mut incident {
            list.sort_unstable();
        }
        Ok(ColoredGraph {
            graph,
            coloring,
            incident,
        })
    }

    /// Colors edges given as `(u, v, color)` triples in any order.
    pub fn from_colored_edges<I>(n: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Color)>,
    {
        let triples: Vec<_> = triples.into_iter().collect();
        let graph = Graph::from_edges(n, triples.iter().map(|&(u, v, _)| (u, v)))?;
        let mut colors = vec![0; graph.edge_count()];
        for &(u, v, c) in &triples {
            let idx = graph.edge_index(u, v).expect("edge was just inserted");
            colors[idx] = c;
        }
        Self::new(graph, EdgeColoring::new(colors))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &EdgeColoring {
        &self.coloring
    }

    pub fn into_parts(self) -> (Graph, EdgeColoring) {
        (self.graph, self.coloring)
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Edges with their colors, in canonical edge order.
    pub fn colored_edges(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.graph
            .edges()
            .iter()
            .copied()
            .zip(self.coloring.colors().iter().copied())
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        let list = self.incident.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    /// `(neighbor, color)` pairs at `v`, sorted by neighbor. Empty when out of range.
    pub fn incident(&self, v: usize) -> &[(usize, Color)] {
        self.incident.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident(v).len()
    }

    pub fn color_classes(&self) -> ColorClassPartition {
        color_classes(&self.graph, &self.coloring).expect("coloring is total")
    }

    pub fn color_count(&self) -> usize {
        self.coloring.distinct_colors().len()
    }
}

/// Drops every edge of color `color`; the vertex set is unchanged.
pub fn delete_color_class(cg: &ColoredGraph, color: Color) -> Result<ColoredGraph> {
    if !cg.coloring.colors.contains(&color) {
        return Err(Error::ColorAbsent(color));
    }
    let (edges, colors): (Vec<Edge>, Vec<Color>) =
        cg.colored_edges().filter(|&(_, c)| c != color).unzip();
    ColoredGraph::new(
        Graph::from_sorted_unique(cg.vertex_count(), edges),
        EdgeColoring::new(colors),
    )
}

/// `g ⊔ h` keeping both colorings; `h`'s vertices are shifted by `|V(g)|`.
pub fn disjoint_union_colored(g: &ColoredGraph, h: &ColoredGraph) -> ColoredGraph {
    let graph = crate::graph::disjoint_union(&g.graph, &h.graph);
    let mut colors = g.coloring.colors.clone();
    colors.extend_from_slice(&h.coloring.colors);
    ColoredGraph::new(graph, EdgeColoring::new(colors)).expect("union of proper colorings is proper")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;
    use crate::testutil::k5_minus_class;

    #[test]
    fn matching_with_one_color_is_proper() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert!(is_proper(&g, &EdgeColoring::new(vec![7, 7, 7])).unwrap());
    }

    #[test]
    fn triangle_with_repeated_color_is_improper() {
        let g = complete_graph(3);
        assert!(!is_proper(&g, &EdgeColoring::new(vec![0, 0, 1])).unwrap());
        assert!(matches!(
            ColoredGraph::new(g, EdgeColoring::new(vec![0, 1, 0])),
            Err(Error::ImproperColoring { .. })
        ));
    }

    #[test]
    fn partial_coloring_is_an_error() {
        let g = complete_graph(3);
        assert_eq!(
            is_proper(&g, &EdgeColoring::new(vec![0, 1])),
            Err(Error::ColoringLength { colors: 2, edges: 3 })
        );
    }

    #[test]
    fn k5_minus_class_is_proper_with_four_pairs() {
        let cg = k5_minus_class();
        assert!(is_proper(cg.graph(), cg.coloring()).unwrap());
        let classes = cg.color_classes();
        assert_eq!(classes.len(), 4);
        assert_eq!(classes.sizes(), vec![2, 2, 2, 2]);
        assert!(classes.all_matchings());
    }

    #[test]
    fn rainbow_classes_are_singletons() {
        let g = complete_graph(4);
        let classes = color_classes(&g, &EdgeColoring::rainbow(6)).unwrap();
        assert_eq!(classes.len(), 6);
        assert!(classes.sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn delete_only_color_of_matching() {
        let cg = ColoredGraph::from_colored_edges(4, [(0, 1, 5), (2, 3, 5)]).unwrap();
        let out = delete_color_class(&cg, 5).unwrap();
        assert_eq!(out.edge_count(), 0);
        assert_eq!(out.vertex_count(), 4);
        assert_eq!(delete_color_class(&cg, 1), Err(Error::ColorAbsent(1)));
    }

    #[test]
    fn delete_class_from_k5_gives_fixture() {
        // Add class {xu, yz} as color 4 and delete it again.
        let fig = k5_minus_class();
        let mut triples: Vec<_> = fig.colored_edges().map(|(e, c)| (e.lo(), e.hi(), c)).collect();
        triples.extend([(0, 3, 4), (1, 2, 4)]);
        let k5 = ColoredGraph::from_colored_edges(5, triples).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(delete_color_class(&k5, 4).unwrap(), fig);
    }

    #[test]
    fn color_lookup() {
        let cg = k5_minus_class();
        assert_eq!(cg.color_of(0, 1), Some(3));
        assert_eq!(cg.color_of(1, 0), Some(3));
        assert_eq!(cg.color_of(0, 3), None);
        assert_eq!(cg.color_of(9, 0), None);
    }
}
