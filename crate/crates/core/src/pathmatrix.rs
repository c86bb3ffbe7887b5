//! The path matrix of a Cauchon graph, computed two independent ways.
//!
//! [`path_matrix`] sums path weights: entry `(i,j)` is the sum of `w(P)` over
//! all directed paths `P: r_i => c_j`. [`restore`] runs the restoration
//! recursion directly on the diagram. The two always agree, which is what
//! [`check_equivalence`] asserts.

use std::fmt;
use std::ops::Index;

use serde_json::Value;

use crate::cgraph::{CauchonGraph, DirectedPath};
use crate::diagram::CauchonDiagram;
use crate::parallel::{self, Exec};
use crate::qtorus::json::{element_from_json, element_to_json, JsonError};
use crate::qtorus::{Element, GenIndex};
use crate::CapExceeded;

/// An `m x n` matrix over the McConnell-Pettit algebra, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMatrix {
    m: usize,
    n: usize,
    entries: Vec<Element>,
}

impl BMatrix {
    pub fn zeros(m: usize, n: usize) -> Self {
        Self {
            m,
            n,
            entries: vec![Element::zero(); m * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Self {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n), "ragged rows");
        Self {
            m,
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        assert!(
            (1..=self.m).contains(&i) && (1..=self.n).contains(&j),
            "({i},{j}) outside {}x{}",
            self.m,
            self.n
        );
        &self.entries[(i - 1) * self.n + j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Element) {
        assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j));
        self.entries[(i - 1) * self.n + j - 1] = x;
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    /// The top `rows` rows.
    pub fn top_rows(&self, rows: usize) -> BMatrix {
        assert!(rows <= self.m);
        Self {
            m: rows,
            n: self.n,
            entries: self.entries[..rows * self.n].to_vec(),
        }
    }

    pub fn total_terms(&self) -> usize {
        self.entries.iter().map(Element::num_terms).sum()
    }

    pub fn max_terms(&self) -> usize {
        self.entries
            .iter()
            .map(Element::num_terms)
            .max()
            .unwrap_or(0)
    }

    /// `m x n` array of canonical element serializations.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (1..=self.m)
                .map(|i| Value::Array(self.row(i).iter().map(element_to_json).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self, JsonError> {
        let bad = || JsonError::Shape {
            expected: "non-empty rectangular array of rows",
            path: "matrix".to_string(),
        };
        let rows = v.as_array().filter(|r| !r.is_empty()).ok_or_else(bad)?;
        let mut out = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_array().filter(|r| !r.is_empty()).ok_or_else(bad)?;
            out.push(
                row.iter()
                    .map(element_from_json)
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        if out.iter().any(|r| r.len() != out[0].len()) {
            return Err(bad());
        }
        Ok(Self::from_rows(out))
    }
}

impl Index<(usize, usize)> for BMatrix {
    type Output = Element;
    fn index(&self, (i, j): (usize, usize)) -> &Element {
        self.get(i, j)
    }
}

impl fmt::Display for BMatrix {
    /// One line per entry: `M[i,j] = <element>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.m {
            for j in 1..=self.n {
                writeln!(f, "M[{i},{j}] = {}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

/// Path matrix by path enumeration, without a cap.
pub fn path_matrix(g: &CauchonGraph) -> BMatrix {
    path_matrix_with(g, usize::MAX, Exec::default()).expect("uncapped")
}

/// Path matrix by path enumeration. Fails if any single entry would sum more
/// than `max_paths` paths.
pub fn path_matrix_with(
    g: &CauchonGraph,
    max_paths: usize,
    exec: Exec,
) -> Result<BMatrix, CapExceeded> {
    path_matrix_filtered(g, max_paths, exec, |_| true)
}

/// Path matrix restricted to paths accepted by `keep`.
pub fn path_matrix_filtered<F>(
    g: &CauchonGraph,
    max_paths: usize,
    exec: Exec,
    keep: F,
) -> Result<BMatrix, CapExceeded>
where
    F: Fn(&DirectedPath) -> bool + Sync + Send,
{
    let (m, n) = (g.diagram().m(), g.diagram().n());
    let cells: Vec<(usize, usize)> = (1..=m).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let entries = parallel::try_map(exec, &cells, |&(i, j)| {
        let mut sum = Element::zero();
        for (count, p) in g.paths(g.row_vertex(i), g.col_vertex(j)).enumerate() {
            if count >= max_paths {
                return Err(CapExceeded {
                    what: "paths in one matrix entry",
                    cap: max_paths,
                });
            }
            if keep(&p) {
                sum += &g.path_weight(&p);
            }
        }
        Ok(sum)
    })?;
    Ok(BMatrix { m, n, entries })
}

/// Size of the matrix after one restoration step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepStats {
    pub step: GenIndex,
    pub total_terms: usize,
    pub max_terms: usize,
}

/// Step-by-step restoration.
///
/// Starts from the matrix holding `t[i,j]` on white squares and 0 on black
/// ones, then visits `(s,t)` in lexicographic order from the successor of
/// `(1,1)` through `(m,n)`. At a white `(s,t)` every entry `(i,j)` with
/// `i < s` and `j < t` gains `T[i,t] t[s,t]^-1 T[s,j]`. Row `s` has not been
/// touched at that point, so `T[s,t]` is the bare generator and its inverse
/// is a monomial.
#[derive(Clone, Debug)]
pub struct Restoration<'d> {
    diagram: &'d CauchonDiagram,
    matrix: BMatrix,
    next: Option<GenIndex>,
    stats: Vec<StepStats>,
}

impl<'d> Restoration<'d> {
    pub fn new(diagram: &'d CauchonDiagram) -> Self {
        let (m, n) = (diagram.m(), diagram.n());
        let mut matrix = BMatrix::zeros(m, n);
        for g in diagram.white_squares() {
            matrix.set(g.row, g.col, Element::generator(g));
        }
        let mut out = Self {
            diagram,
            matrix,
            next: None,
            stats: Vec::new(),
        };
        out.next = out.successor(GenIndex::new(1, 1));
        out
    }

    /// Lexicographic successor within the grid; `None` past `(m,n)`.
    fn successor(&self, g: GenIndex) -> Option<GenIndex> {
        let (m, n) = (self.diagram.m(), self.diagram.n());
        if g.col < n {
            Some(GenIndex::new(g.row, g.col + 1))
        } else if g.row < m {
            Some(GenIndex::new(g.row + 1, 1))
        } else {
            None
        }
    }

    /// The step that will run next, if any.
    pub fn next_step(&self) -> Option<GenIndex> {
        self.next
    }

    /// Runs one step and returns its index, or `None` once finished.
    pub fn step(&mut self) -> Option<GenIndex> {
        let st = self.next?;
        let (s, t) = (st.row, st.col);
        if self.diagram.is_white(s, t) {
            let pivot_inv = Element::generator_inv(st);
            for j in 1..t {
                if self.matrix.get(s, j).is_zero() {
                    continue;
                }
                let tail = &pivot_inv * self.matrix.get(s, j);
                for i in 1..s {
                    let left = self.matrix.get(i, t);
                    if left.is_zero() {
                        continue;
                    }
                    let update = left * &tail;
                    self.matrix.entries[(i - 1) * self.matrix.n + j - 1] += &update;
                }
            }
        }
        self.stats.push(StepStats {
            step: st,
            total_terms: self.matrix.total_terms(),
            max_terms: self.matrix.max_terms(),
        });
        self.next = self.successor(st);
        Some(st)
    }

    /// Runs every step up to and including `last` (lexicographically).
    pub fn run_through(&mut self, last: GenIndex) {
        while self.next.is_some_and(|st| st <= last) {
            self.step();
        }
    }

    pub fn run(mut self) -> BMatrix {
        while self.step().is_some() {}
        self.matrix
    }

    pub fn matrix(&self) -> &BMatrix {
        &self.matrix
    }

    pub fn stats(&self) -> &[StepStats] {
        &self.stats
    }
}

/// Final matrix of the restoration recursion.
pub fn restore(d: &CauchonDiagram) -> BMatrix {
    Restoration::new(d).run()
}

/// Whether restoration and path summation give the same matrix.
pub fn check_equivalence(d: &CauchonDiagram) -> bool {
    restore(d) == path_matrix(&CauchonGraph::build(d))
}
