//! Checkers for the commutation relations between edge and path weights.
//! Each returns how many instances it checked, or a description of the first
//! failure.

use cauchon_core::cgraph::{EdgeId, Orientation, VertexId};
use cauchon_core::{CauchonGraph, DirectedPath, Element, Vertex};

/// Grid position of a vertex; row vertices sit right of the grid and column
/// vertices below it.
pub fn position(g: &CauchonGraph, v: VertexId) -> (usize, usize) {
    let (m, n) = (g.diagram().m(), g.diagram().n());
    match g.vertex(v) {
        Vertex::Row(i) => (i, n + 1),
        Vertex::Col(j) => (m + 1, j),
        Vertex::White(x) => (x.row, x.col),
    }
}

/// The `k` in a small window with `x = q^k y`.
pub fn q_ratio(x: &Element, y: &Element) -> Option<i64> {
    (-4..=4).find(|&k| *x == y.shift_q(k))
}

pub fn all_paths(g: &CauchonGraph) -> Vec<DirectedPath> {
    let (m, n) = (g.diagram().m(), g.diagram().n());
    let mut out = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            out.extend(g.paths(g.row_vertex(i), g.col_vertex(j)));
        }
    }
    out
}

fn horizontal_edges(g: &CauchonGraph) -> Vec<EdgeId> {
    (0..g.edges().len())
        .filter(|&e| g.edge(e).orientation == Orientation::Horizontal)
        .collect()
}

fn from_row(g: &CauchonGraph, e: EdgeId) -> bool {
    matches!(g.vertex(g.edge(e).from), Vertex::Row(_))
}

/// `(row, col_1, col_2)` with `col_1` the right end and `col_2` the left end.
/// Row vertices count as column `n + 1`.
fn span(g: &CauchonGraph, e: EdgeId) -> (usize, usize, usize) {
    let edge = g.edge(e);
    let (row, c1) = position(g, edge.from);
    let (_, c2) = position(g, edge.to);
    (row, c1, c2)
}

/// `f` comes before `e`: in a higher row, or further right in the same row.
/// Within one row the relation is antisymmetric, so only this order is
/// checked.
fn precedes(g: &CauchonGraph, f: EdgeId, e: EdgeId) -> bool {
    let (fr, f1, _) = span(g, f);
    let (er, e1, _) = span(g, e);
    fr < er || (fr == er && f1 > e1)
}

/// Exponent predicted for `w(f) w(e) = q^k w(e) w(f)` from how the column
/// sets of the two edges overlap.
fn predicted_kappa(g: &CauchonGraph, e: EdgeId, f: EdgeId) -> i64 {
    let (_, e1, e2) = span(g, e);
    let (_, f1, f2) = span(g, f);
    let shared = [e1, e2].iter().filter(|c| **c == f1 || **c == f2).count();
    match shared {
        0 => 0,
        1 if e1 == f1 || e2 == f2 => 1,
        1 => -1,
        _ => 2,
    }
}

/// Per-case counts, indexed as `[disjoint, one shared (same end),
/// one shared (opposite ends), both shared]`.
pub fn edge_commutation(g: &CauchonGraph) -> Result<[usize; 4], String> {
    let mut seen = [0; 4];
    let edges = horizontal_edges(g);
    for &e in &edges {
        for &f in &edges {
            if !precedes(g, f, e) {
                continue;
            }
            let row_edges = usize::from(from_row(g, e)) + usize::from(from_row(g, f));
            let kappa = predicted_kappa(g, e, f);
            // with one edge out of a row vertex only the first two cases are claimed
            if row_edges == 2 || (row_edges == 1 && kappa == 2) {
                continue;
            }
            let (we, wf) = (&g.edge(e).weight, &g.edge(f).weight);
            let got = q_ratio(&(wf * we), &(we * wf));
            if got != Some(kappa) {
                return Err(format!(
                    "edges {} and {} of\n{}expected q^{kappa}, got {got:?}",
                    g.edge(e).label(),
                    g.edge(f).label(),
                    g.diagram()
                ));
            }
            if row_edges == 0 {
                seen[match kappa {
                    0 => 0,
                    1 => 1,
                    -1 => 2,
                    _ => 3,
                }] += 1;
            }
        }
    }
    Ok(seen)
}

/// Splits of sub-paths `K: a => v`, `L: v => b`. Returns the number of
/// splits where both parts have a horizontal edge.
pub fn split_paths(g: &CauchonGraph, max_paths: usize) -> Result<usize, String> {
    let mut nontrivial = 0;
    for p in all_paths(g).into_iter().take(max_paths) {
        for a in 0..=p.len() {
            for b in a..=p.len() {
                for mid in a..=b {
                    let k = p.slice(a, mid);
                    let l = p.slice(mid, b);
                    let (wk, wl) = (g.path_weight(&k), g.path_weight(&l));
                    let expected = if k.has_horizontal(g) && l.has_horizontal(g) {
                        nontrivial += 1;
                        -1
                    } else {
                        0
                    };
                    let got = q_ratio(&(&wk * &wl), &(&wl * &wk));
                    if got != Some(expected) {
                        return Err(format!(
                            "split {a}..{mid}..{b} of a path in\n{}expected q^{expected}, got {got:?}",
                            g.diagram()
                        ));
                    }
                }
            }
        }
    }
    Ok(nontrivial)
}

/// Pairs `K`, `L` out of one white vertex that meet only there, `K` leaving
/// horizontally and `L` vertically. Returns the number of pairs where `L`
/// has a horizontal edge.
pub fn shared_start(g: &CauchonGraph) -> Result<usize, String> {
    let d = g.diagram();
    let mut nontrivial = 0;
    for x in d.white_squares() {
        let v = g.white_id(x).unwrap();
        let out: Vec<DirectedPath> = (1..=d.n())
            .flat_map(|j| g.paths(v, g.col_vertex(j)))
            .collect();
        let starts = |p: &DirectedPath, o| g.edge(p.edges()[0]).orientation == o;
        for k in out.iter().filter(|p| starts(p, Orientation::Horizontal)) {
            for l in out.iter().filter(|p| starts(p, Orientation::Vertical)) {
                if k.vertices()[1..].iter().any(|&u| l.contains(u)) {
                    continue;
                }
                let (wk, wl) = (g.path_weight(k), g.path_weight(l));
                let expected = if l.has_horizontal(g) {
                    nontrivial += 1;
                    1
                } else {
                    0
                };
                let got = q_ratio(&(&wk * &wl), &(&wl * &wk));
                if got != Some(expected) {
                    return Err(format!(
                        "paths from {x} in\n{d}expected q^{expected}, got {got:?}"
                    ));
                }
            }
        }
    }
    Ok(nontrivial)
}
