use std::ops::ControlFlow;

use super::qdet::inversions;
use super::MinorIndex;
use crate::cgraph::{CauchonGraph, DirectedPath};
use crate::qtorus::{Element, QLaurent};
use crate::CapExceeded;

/// `k` directed paths, the `l`-th running from the `l`-th chosen row to
/// column number `sigma[l]` (0-based position in the column list), with
/// distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSystem {
    paths: Vec<DirectedPath>,
    sigma: Vec<usize>,
}

impl PathSystem {
    /// Checks that `paths[l]` starts at the `l`-th row of `index` and that the
    /// paths end at distinct columns of `index`.
    pub fn new(g: &CauchonGraph, index: &MinorIndex, paths: Vec<DirectedPath>) -> Option<Self> {
        if paths.len() != index.k() {
            return None;
        }
        let mut sigma = Vec::with_capacity(paths.len());
        for (p, &i) in paths.iter().zip(index.rows()) {
            if p.start() != g.row_vertex(i) {
                return None;
            }
            let pos = index
                .cols()
                .iter()
                .position(|&j| g.col_vertex(j) == p.end())?;
            if sigma.contains(&pos) {
                return None;
            }
            sigma.push(pos);
        }
        Some(Self { paths, sigma })
    }

    pub fn paths(&self) -> &[DirectedPath] {
        &self.paths
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn is_vertex_disjoint(&self) -> bool {
        self.paths
            .iter()
            .enumerate()
            .all(|(a, p)| self.paths[a + 1..].iter().all(|r| !p.shares_vertex_with(r)))
    }

    /// `(-q)^inv(sigma)`.
    pub fn q_sign(&self) -> QLaurent {
        QLaurent::neg_q_pow(inversions(&self.sigma))
    }

    /// `w(P_1) w(P_2) ... w(P_k)`.
    pub fn weight(&self, g: &CauchonGraph) -> Element {
        self.paths.iter().map(|p| g.path_weight(p)).product()
    }
}

struct Search<'a, F> {
    g: &'a CauchonGraph,
    index: &'a MinorIndex,
    disjoint: bool,
    used_cols: Vec<bool>,
    blocked: Vec<bool>,
    paths: Vec<DirectedPath>,
    sigma: Vec<usize>,
    visit: F,
}

impl<F> Search<'_, F>
where
    F: FnMut(&PathSystem) -> ControlFlow<()>,
{
    fn extend(&mut self) -> ControlFlow<()> {
        let level = self.paths.len();
        if level == self.index.k() {
            let sys = PathSystem {
                paths: self.paths.clone(),
                sigma: self.sigma.clone(),
            };
            return (self.visit)(&sys);
        }
        let from = self.g.row_vertex(self.index.rows()[level]);
        for pos in 0..self.index.k() {
            if self.used_cols[pos] {
                continue;
            }
            let to = self.g.col_vertex(self.index.cols()[pos]);
            let candidates: Vec<DirectedPath> = if self.disjoint {
                self.g.paths_avoiding(from, to, &self.blocked).collect()
            } else {
                self.g.paths(from, to).collect()
            };
            self.used_cols[pos] = true;
            for p in candidates {
                if self.disjoint {
                    p.vertices().iter().for_each(|&v| self.blocked[v] = true);
                }
                self.paths.push(p);
                self.sigma.push(pos);
                let flow = self.extend();
                let p = self.paths.pop().unwrap();
                self.sigma.pop();
                if self.disjoint {
                    p.vertices().iter().for_each(|&v| self.blocked[v] = false);
                }
                if flow.is_break() {
                    return flow;
                }
            }
            self.used_cols[pos] = false;
        }
        ControlFlow::Continue(())
    }
}

fn search<F>(g: &CauchonGraph, index: &MinorIndex, disjoint: bool, visit: F)
where
    F: FnMut(&PathSystem) -> ControlFlow<()>,
{
    let mut s = Search {
        g,
        index,
        disjoint,
        used_cols: vec![false; index.k()],
        blocked: vec![false; g.num_vertices()],
        paths: Vec::new(),
        sigma: Vec::new(),
        visit,
    };
    let _ = s.extend();
}

/// Visits every `(R_I, C_J)` path system, disjoint or not, for any matching
/// of rows to columns. Stops early when `visit` breaks.
pub fn for_each_path_system<F>(g: &CauchonGraph, index: &MinorIndex, visit: F)
where
    F: FnMut(&PathSystem) -> ControlFlow<()>,
{
    search(g, index, false, visit)
}

/// Visits every vertex-disjoint path system exactly once, by backtracking
/// over paths that avoid the vertices already used.
pub fn for_each_disjoint_system<F>(g: &CauchonGraph, index: &MinorIndex, visit: F)
where
    F: FnMut(&PathSystem) -> ControlFlow<()>,
{
    search(g, index, true, visit)
}

/// All vertex-disjoint path systems, failing once more than `cap` exist.
pub fn enumerate_disjoint_systems(
    g: &CauchonGraph,
    index: &MinorIndex,
    cap: usize,
) -> Result<Vec<PathSystem>, CapExceeded> {
    let mut out = Vec::new();
    let mut over = false;
    for_each_disjoint_system(g, index, |sys| {
        if out.len() == cap {
            over = true;
            return ControlFlow::Break(());
        }
        out.push(sys.clone());
        ControlFlow::Continue(())
    });
    if over {
        Err(CapExceeded {
            what: "vertex-disjoint path systems",
            cap,
        })
    } else {
        Ok(out)
    }
}
