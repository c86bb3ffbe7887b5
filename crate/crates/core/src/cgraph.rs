//! The Cauchon graph of a diagram.
//!
//! Vertices are the white squares plus a source `r_i` to the right of each
//! row and a sink `c_j` below each column. Edges:
//!
//! - `r_i` to the rightmost white square `(i,k)` of row `i`, weight `t[i,k]`;
//! - each white `(i,j)` to the next white square to its left `(i,j')`,
//!   weight `t[i,j]^-1 t[i,j']`;
//! - each white `(i,j)` to the next white square below it, weight 1;
//! - the bottom-most white square of column `j` to `c_j`, weight 1.
//!
//! Every edge points left or down, so the graph is acyclic, and the
//! Cauchon condition keeps the natural drawing planar.

use std::fmt::{self, Write as _};

use crate::diagram::CauchonDiagram;
use crate::qtorus::{Element, GenIndex};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Row(usize),
    Col(usize),
    White(GenIndex),
}

impl fmt::Display for Vertex {
    /// DOT-safe names: `r1`, `c2`, `w1_2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Row(i) => write!(f, "r{i}"),
            Vertex::Col(j) => write!(f, "c{j}"),
            Vertex::White(g) => write!(f, "w{}_{}", g.row, g.col),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedEdge {
    pub from: VertexId,
    pub to: VertexId,
    pub orientation: Orientation,
    /// Normal-ordered weight.
    pub weight: Element,
    // Defining factors in their written order, for display.
    word: Vec<(GenIndex, i64)>,
}

impl WeightedEdge {
    /// The weight as written in the definition, e.g. `t[1,2]^-1 t[1,1]`.
    pub fn label(&self) -> String {
        if self.word.is_empty() {
            return "1".to_string();
        }
        self.word
            .iter()
            .map(|(g, e)| match e {
                1 => format!("t[{},{}]", g.row, g.col),
                e => format!("t[{},{}]^{e}", g.row, g.col),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Clone, Debug)]
pub struct CauchonGraph {
    diagram: CauchonDiagram,
    vertices: Vec<Vertex>,
    // row-major grid of vertex ids for white squares
    white_ids: Vec<Option<VertexId>>,
    edges: Vec<WeightedEdge>,
    succ: Vec<Vec<EdgeId>>,
    pred: Vec<Vec<EdgeId>>,
}

impl CauchonGraph {
    /// Vertex ids: `r_1..r_m` are `0..m`, `c_1..c_n` are `m..m+n`, and white
    /// squares follow in row-major order. Successor lists put the horizontal
    /// edge before the vertical one.
    pub fn build(d: &CauchonDiagram) -> Self {
        let (m, n) = (d.m(), d.n());
        let mut vertices: Vec<Vertex> = (1..=m).map(Vertex::Row).collect();
        vertices.extend((1..=n).map(Vertex::Col));
        let mut white_ids = vec![None; m * n];
        for g in d.white_squares() {
            white_ids[(g.row - 1) * n + g.col - 1] = Some(vertices.len());
            vertices.push(Vertex::White(g));
        }

        let mut graph = Self {
            diagram: d.clone(),
            succ: vec![Vec::new(); vertices.len()],
            pred: vec![Vec::new(); vertices.len()],
            vertices,
            white_ids,
            edges: Vec::new(),
        };

        for i in 1..=m {
            if let Some(k) = (1..=n).rev().find(|&k| d.is_white(i, k)) {
                let target = graph.white_id(GenIndex::new(i, k)).unwrap();
                graph.push_edge(
                    i - 1,
                    target,
                    Orientation::Horizontal,
                    vec![(GenIndex::new(i, k), 1)],
                );
            }
        }
        for g in d.white_squares() {
            let here = graph.white_id(g).unwrap();
            if let Some(left) = (1..g.col).rev().find(|&j| d.is_white(g.row, j)) {
                let to = graph.white_id(GenIndex::new(g.row, left)).unwrap();
                graph.push_edge(
                    here,
                    to,
                    Orientation::Horizontal,
                    vec![(g, -1), (GenIndex::new(g.row, left), 1)],
                );
            }
            let to = match (g.row + 1..=m).find(|&i| d.is_white(i, g.col)) {
                Some(below) => graph.white_id(GenIndex::new(below, g.col)).unwrap(),
                None => m + g.col - 1,
            };
            graph.push_edge(here, to, Orientation::Vertical, Vec::new());
        }
        graph
    }

    fn push_edge(
        &mut self,
        from: VertexId,
        to: VertexId,
        orientation: Orientation,
        word: Vec<(GenIndex, i64)>,
    ) {
        let id = self.edges.len();
        self.edges.push(WeightedEdge {
            from,
            to,
            orientation,
            weight: Element::word(word.iter().copied()),
            word,
        });
        self.succ[from].push(id);
        self.pred[to].push(id);
    }

    pub fn diagram(&self) -> &CauchonDiagram {
        &self.diagram
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: VertexId) -> Vertex {
        self.vertices[v]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[WeightedEdge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &WeightedEdge {
        &self.edges[e]
    }

    pub fn successors(&self, v: VertexId) -> &[EdgeId] {
        &self.succ[v]
    }

    pub fn predecessors(&self, v: VertexId) -> &[EdgeId] {
        &self.pred[v]
    }

    /// Source vertex `r_i` (1-based).
    pub fn row_vertex(&self, i: usize) -> VertexId {
        assert!((1..=self.diagram.m()).contains(&i), "row {i} out of range");
        i - 1
    }

    /// Sink vertex `c_j` (1-based).
    pub fn col_vertex(&self, j: usize) -> VertexId {
        assert!(
            (1..=self.diagram.n()).contains(&j),
            "column {j} out of range"
        );
        self.diagram.m() + j - 1
    }

    pub fn white_id(&self, g: GenIndex) -> Option<VertexId> {
        let (m, n) = (self.diagram.m(), self.diagram.n());
        if g.row == 0 || g.col == 0 || g.row > m || g.col > n {
            return None;
        }
        self.white_ids[(g.row - 1) * n + g.col - 1]
    }

    pub fn id_of(&self, v: Vertex) -> Option<VertexId> {
        match v {
            Vertex::Row(i) => (1..=self.diagram.m()).contains(&i).then(|| i - 1),
            Vertex::Col(j) => (1..=self.diagram.n())
                .contains(&j)
                .then(|| self.diagram.m() + j - 1),
            Vertex::White(g) => self.white_id(g),
        }
    }

    /// Kahn's algorithm; `None` if there is a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<VertexId>> {
        let mut indeg: Vec<usize> = self.pred.iter().map(Vec::len).collect();
        let mut ready: Vec<VertexId> = (0..self.vertices.len())
            .filter(|&v| indeg[v] == 0)
            .collect();
        let mut order = Vec::with_capacity(self.vertices.len());
        while let Some(v) = ready.pop() {
            order.push(v);
            for &e in &self.succ[v] {
                let w = self.edges[e].to;
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        (order.len() == self.vertices.len()).then_some(order)
    }

    /// Ordered product of the edge weights along `p`.
    pub fn path_weight(&self, p: &DirectedPath) -> Element {
        p.edges.iter().map(|&e| &self.edges[e].weight).product()
    }

    /// Every directed path from `from` to `to`, each exactly once, in DFS
    /// order over the successor lists.
    pub fn paths(&self, from: VertexId, to: VertexId) -> Paths<'_> {
        Paths::new(self, from, to, None)
    }

    /// Like [`CauchonGraph::paths`] but never entering a vertex marked in
    /// `blocked`. A blocked `from` yields nothing.
    pub fn paths_avoiding(&self, from: VertexId, to: VertexId, blocked: &[bool]) -> Paths<'_> {
        Paths::new(self, from, to, Some(blocked))
    }

    /// Vertices that can reach `to` without entering a blocked vertex.
    fn reaching(&self, to: VertexId, blocked: Option<&[bool]>) -> Vec<bool> {
        let is_blocked = |v: VertexId| blocked.is_some_and(|b| b[v]);
        let mut seen = vec![false; self.vertices.len()];
        if is_blocked(to) {
            return seen;
        }
        let mut stack = vec![to];
        seen[to] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.pred[v] {
                let u = self.edges[e].from;
                if !seen[u] && !is_blocked(u) {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// Graphviz rendering with vertices pinned to the planar drawing: white
    /// square `(i,j)` at `(j, -i)`, `r_i` right of row `i`, `c_j` below
    /// column `j`.
    pub fn to_dot(&self) -> String {
        let (m, n) = (self.diagram.m(), self.diagram.n());
        let mut out = String::from("digraph cauchon {\n  node [shape=circle];\n");
        for v in &self.vertices {
            let (x, y) = match *v {
                Vertex::Row(i) => (n + 1, i),
                Vertex::Col(j) => (j, m + 1),
                Vertex::White(g) => (g.col, g.row),
            };
            let _ = writeln!(out, "  {v} [pos=\"{x},-{y}!\"];");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  {} -> {} [label=\"{}\"];",
                self.vertices[e.from],
                self.vertices[e.to],
                e.label()
            );
        }
        out.push_str("}\n");
        out
    }

    /// One line per edge: `from -> to  weight`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let _ = writeln!(
                out,
                "{} -> {}\t{}",
                self.vertices[e.from],
                self.vertices[e.to],
                e.label()
            );
        }
        out
    }
}

/// A directed path, stored as its vertex sequence and the edges between them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedPath {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl DirectedPath {
    /// The zero-length path sitting at `v`.
    pub fn trivial(v: VertexId) -> Self {
        Self {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds a path from consecutive edges of `g`; `None` if they do not
    /// chain or the list is empty.
    pub fn from_edges(g: &CauchonGraph, edges: Vec<EdgeId>) -> Option<Self> {
        let first = *edges.first()?;
        let mut vertices = vec![g.edges[first].from];
        for &e in &edges {
            let edge = g.edges.get(e)?;
            if edge.from != *vertices.last().unwrap() {
                return None;
            }
            vertices.push(edge.to);
        }
        Some(Self { vertices, edges })
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn shares_vertex_with(&self, other: &DirectedPath) -> bool {
        self.vertices.iter().any(|v| other.contains(*v))
    }

    pub fn has_horizontal(&self, g: &CauchonGraph) -> bool {
        self.edges
            .iter()
            .any(|&e| g.edges[e].orientation == Orientation::Horizontal)
    }

    /// Splits at the `pos`-th vertex: `(v_0..v_pos, v_pos..v_end)`.
    pub fn split_at(&self, pos: usize) -> (DirectedPath, DirectedPath) {
        assert!(pos < self.vertices.len(), "split position out of range");
        (
            DirectedPath {
                vertices: self.vertices[..=pos].to_vec(),
                edges: self.edges[..pos].to_vec(),
            },
            DirectedPath {
                vertices: self.vertices[pos..].to_vec(),
                edges: self.edges[pos..].to_vec(),
            },
        )
    }

    /// The sub-path between vertex positions `a <= b`.
    pub fn slice(&self, a: usize, b: usize) -> DirectedPath {
        assert!(a <= b && b < self.vertices.len(), "slice out of range");
        DirectedPath {
            vertices: self.vertices[a..=b].to_vec(),
            edges: self.edges[a..b].to_vec(),
        }
    }

    /// `self` followed by `other`; `None` unless `self` ends where `other`
    /// starts.
    pub fn concat(&self, other: &DirectedPath) -> Option<DirectedPath> {
        (self.end() == other.start()).then(|| {
            let mut vertices = self.vertices.clone();
            vertices.extend_from_slice(&other.vertices[1..]);
            let mut edges = self.edges.clone();
            edges.extend_from_slice(&other.edges);
            DirectedPath { vertices, edges }
        })
    }

    /// Position of `v` along the path.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }
}

/// Lazy depth-first stream of directed paths between two vertices.
///
/// Branches that cannot reach the target are pruned up front, so every
/// descent ends in a yielded path.
pub struct Paths<'g> {
    graph: &'g CauchonGraph,
    target: VertexId,
    viable: Vec<bool>,
    stack: Vec<(VertexId, usize)>,
    edges: Vec<EdgeId>,
    trivial: bool,
}

impl<'g> Paths<'g> {
    fn new(
        graph: &'g CauchonGraph,
        from: VertexId,
        to: VertexId,
        blocked: Option<&[bool]>,
    ) -> Self {
        let viable = graph.reaching(to, blocked);
        let start_ok = viable[from];
        Self {
            graph,
            target: to,
            stack: if start_ok && from != to {
                vec![(from, 0)]
            } else {
                Vec::new()
            },
            trivial: start_ok && from == to,
            viable,
            edges: Vec::new(),
        }
    }
}

impl Iterator for Paths<'_> {
    type Item = DirectedPath;

    fn next(&mut self) -> Option<DirectedPath> {
        if self.trivial {
            self.trivial = false;
            return Some(DirectedPath::trivial(self.target));
        }
        while let Some(top) = self.stack.last_mut() {
            let (v, idx) = *top;
            let succ = &self.graph.succ[v];
            if idx == succ.len() {
                self.stack.pop();
                self.edges.pop();
                continue;
            }
            top.1 += 1;
            let e = succ[idx];
            let w = self.graph.edges[e].to;
            if !self.viable[w] {
                continue;
            }
            if w == self.target {
                let mut vertices: Vec<VertexId> = self.stack.iter().map(|(u, _)| *u).collect();
                vertices.push(w);
                let mut edges = self.edges.clone();
                edges.push(e);
                return Some(DirectedPath { vertices, edges });
            }
            self.edges.push(e);
            self.stack.push((w, 0));
        }
        None
    }
}
