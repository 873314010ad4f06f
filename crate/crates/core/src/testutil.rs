use crate::colored::ColoredGraph;

/// `K_5` minus the class `{xu, yz}` of a proper 5-coloring, with
/// x=0, y=1, z=2, u=3, v=4 and classes {yv,zu}=0, {xz,uv}=1, {xv,yu}=2,
/// {zv,xy}=3.
pub(crate) fn k5_minus_class() -> ColoredGraph {
    ColoredGraph::from_colored_edges(
        5,
        [
            (1, 4, 0),
            (2, 3, 0),
            (0, 2, 1),
            (3, 4, 1),
            (0, 4, 2),
            (1, 3, 2),
            (2, 4, 3),
            (0, 1, 3),
        ],
    )
    .unwrap()
}
