//! Graph-to-graph constructions: line graphs, subdivisions, generalized line
//! graphs and vertex deletion.

use crate::error::Result;
use crate::graph::{b_graph, Graph, MultiGraph};

/// Line graph of a multigraph. Vertex `i` of the result is the `i`-th edge
/// instance in lexicographic `(min endpoint, max endpoint, copy)` order; two
/// instances are adjacent iff they share exactly one endpoint, so parallel
/// edges are never adjacent to each other.
pub fn line_graph(g: &MultiGraph) -> Graph {
    let edges = g.edge_instances();
    let mut l = Graph::empty(edges.len());
    for (i, &(a, b, _)) in edges.iter().enumerate() {
        for (j, &(c, d, _)) in edges.iter().enumerate().skip(i + 1) {
            let shared = (a == c || a == d) as u8 + (b == c || b == d) as u8;
            if shared == 1 {
                l.set_edge(i, j);
            }
        }
    }
    l
}

/// Line graph of a simple graph; vertices follow [`Graph::edges`] order.
pub fn line_graph_simple(g: &Graph) -> Graph {
    line_graph(&MultiGraph::from(g))
}

/// Subdivision graph: vertices `0..n` are the original vertices and
/// `n + i` subdivides the `i`-th edge in [`Graph::edges`] order.
pub fn subdivision(g: &Graph) -> Graph {
    let n = g.order();
    let edges: Vec<_> = g.edges().collect();
    let mut s = Graph::empty(n + edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        s.set_edge(u, n + i);
        s.set_edge(v, n + i);
    }
    s
}

/// GL(h; a_1, ..., a_n), the line graph of the B-graph with `petals[i]`
/// petals at vertex `i`.
pub fn generalized_line_graph(h: &Graph, petals: &[usize]) -> Result<Graph> {
    Ok(line_graph(&b_graph(h, petals)?))
}

/// Removes `v`; remaining vertices keep their relative order.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let keep: Vec<usize> = (0..g.order()).filter(|&u| u != v).collect();
    g.induced_subgraph(&keep)
}
