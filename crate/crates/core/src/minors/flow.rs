//! Vertex-disjoint path systems as a unit-capacity max-flow.
//!
//! Every graph vertex `v` becomes an arc `v_in -> v_out` of capacity 1 (row
//! and column vertices included, so paths also start and end at distinct
//! vertices), every graph edge `u -> w` becomes `u_out -> w_in`, a super
//! source feeds the chosen `r_i` and the chosen `c_j` drain into a super
//! sink. The integral max-flow value is the largest number of pairwise
//! vertex-disjoint paths from the chosen rows to the chosen columns.

use std::collections::VecDeque;

use super::{MinorIndex, PathSystem};
use crate::cgraph::{CauchonGraph, DirectedPath, EdgeId, VertexId};

struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    // graph edge carried by a forward arc
    edge: Vec<Option<EdgeId>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            edge: Vec::new(),
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, edge: Option<EdgeId>) {
        for (from, to, cap, edge) in [(u, v, 1, edge), (v, u, 0, None)] {
            self.head[from].push(self.to.len());
            self.to.push(to);
            self.cap.push(cap);
            self.edge.push(edge);
        }
    }

    /// Edmonds-Karp, stopping once `limit` units flow.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.head.len()];
        while flow < limit {
            via.iter_mut().for_each(|x| *x = usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.head[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && v != s && via[v] == usize::MAX {
                        via[v] = a;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.to[a ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

struct Split {
    net: Network,
    source: usize,
    sink: usize,
}

fn node_in(v: VertexId) -> usize {
    2 * v
}

fn node_out(v: VertexId) -> usize {
    2 * v + 1
}

fn split_network(g: &CauchonGraph, rows: &[usize], cols: &[usize]) -> Split {
    let nv = g.num_vertices();
    let (source, sink) = (2 * nv, 2 * nv + 1);
    let mut net = Network::new(2 * nv + 2);
    for v in 0..nv {
        net.add_arc(node_in(v), node_out(v), None);
    }
    for (id, e) in g.edges().iter().enumerate() {
        net.add_arc(node_out(e.from), node_in(e.to), Some(id));
    }
    for &i in rows {
        net.add_arc(source, node_in(g.row_vertex(i)), None);
    }
    for &j in cols {
        net.add_arc(node_out(g.col_vertex(j)), sink, None);
    }
    Split { net, source, sink }
}

/// Largest number of pairwise vertex-disjoint paths from `{r_i : i in rows}`
/// to `{c_j : j in cols}`.
pub fn max_disjoint_paths(g: &CauchonGraph, rows: &[usize], cols: &[usize]) -> usize {
    let mut s = split_network(g, rows, cols);
    s.net.max_flow(s.source, s.sink, rows.len().min(cols.len()))
}

/// Whether some vertex-disjoint path system joins the rows of `index` to its
/// columns.
pub fn disjoint_system_exists(g: &CauchonGraph, index: &MinorIndex) -> bool {
    max_disjoint_paths(g, index.rows(), index.cols()) == index.k()
}

/// A vertex-disjoint path system for `index`, read off a maximum flow.
pub fn disjoint_system_witness(g: &CauchonGraph, index: &MinorIndex) -> Option<PathSystem> {
    let mut s = split_network(g, index.rows(), index.cols());
    if s.net.max_flow(s.source, s.sink, index.k()) < index.k() {
        return None;
    }
    let net = &s.net;
    let paths = index
        .rows()
        .iter()
        .map(|&i| {
            let mut edges = Vec::new();
            let mut v = g.row_vertex(i);
            // Saturated edge arcs leave each used vertex exactly once.
            while let Some(a) = net.head[node_out(v)]
                .iter()
                .copied()
                .find(|&a| a % 2 == 0 && net.edge[a].is_some() && net.cap[a] == 0)
            {
                let e = net.edge[a].unwrap();
                edges.push(e);
                v = g.edge(e).to;
            }
            DirectedPath::from_edges(g, edges).expect("flow path")
        })
        .collect();
    Some(PathSystem::new(g, index, paths).expect("flow decomposition is a path system"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::CauchonDiagram;

    fn idx(rows: &[usize], cols: &[usize]) -> MinorIndex {
        MinorIndex::new(rows.to_vec(), cols.to_vec()).unwrap()
    }

    #[test]
    fn all_black_has_no_systems() {
        let g = CauchonGraph::build(&CauchonDiagram::all_black(2, 3));
        assert!(!disjoint_system_exists(&g, &idx(&[1], &[1])));
        assert!(!disjoint_system_exists(&g, &idx(&[1, 2], &[2, 3])));
    }

    #[test]
    fn corner_black_blocks_full_minor() {
        let g = CauchonGraph::build(&CauchonDiagram::parse("X.\n..").unwrap());
        assert!(!disjoint_system_exists(&g, &idx(&[1, 2], &[1, 2])));
        assert!(disjoint_system_witness(&g, &idx(&[1, 2], &[1, 2])).is_none());
        assert_eq!(max_disjoint_paths(&g, &[1, 2], &[1, 2]), 1);
    }

    #[test]
    fn example_full_minor_has_witness() {
        let g = CauchonGraph::build(&CauchonDiagram::parse("..X\n...\nX..").unwrap());
        let w = disjoint_system_witness(&g, &idx(&[1, 2, 3], &[1, 2, 3])).unwrap();
        assert!(w.is_vertex_disjoint());
        assert_eq!(w.sigma(), &[0, 1, 2]);
        assert!(!disjoint_system_exists(&g, &idx(&[1], &[3])));
        assert!(!disjoint_system_exists(&g, &idx(&[3], &[1])));
    }

    #[test]
    fn all_white_always_routes() {
        let g = CauchonGraph::build(&CauchonDiagram::all_white(3, 4));
        for index in super::super::all_minor_indices(3, 4) {
            let w = disjoint_system_witness(&g, &index).unwrap();
            assert!(w.is_vertex_disjoint());
        }
    }
}
