mod common;

use cauchon_core::cgraph::Orientation;
use cauchon_core::{CauchonDiagram, CauchonGraph, Element, GenIndex, Vertex};
use common::lemmas::{self, all_paths, position};

/// Sample population: every diagram up to 3x3 plus seeded random ones up to 4x5.
fn population() -> Vec<CauchonDiagram> {
    let mut out = common::all_small_diagrams(3);
    let mut rng = common::rng(33);
    for k in 0..60 {
        let (m, n) = [(4, 4), (4, 5), (3, 5), (5, 4)][k % 4];
        out.push(common::random_diagram(&mut rng, m, n));
    }
    out
}

#[test]
fn graphs_are_acyclic() {
    for d in population() {
        let g = CauchonGraph::build(&d);
        let order = g.topological_order().expect("acyclic");
        let mut rank = vec![0; g.num_vertices()];
        for (k, &v) in order.iter().enumerate() {
            rank[v] = k;
        }
        for e in g.edges() {
            assert!(rank[e.from] < rank[e.to]);
        }
    }
}

#[test]
fn horizontal_and_vertical_edges_never_cross() {
    for d in population() {
        let g = CauchonGraph::build(&d);
        for h in g
            .edges()
            .iter()
            .filter(|e| e.orientation == Orientation::Horizontal)
        {
            let (row, right) = position(&g, h.from);
            let (_, left) = position(&g, h.to);
            for v in g
                .edges()
                .iter()
                .filter(|e| e.orientation == Orientation::Vertical)
            {
                let (top, col) = position(&g, v.from);
                let (bottom, _) = position(&g, v.to);
                let crosses = left < col && col < right && top < row && row < bottom;
                assert!(!crosses, "{d}");
            }
        }
    }
}

#[test]
fn horizontal_runs_telescope() {
    for d in population() {
        let g = CauchonGraph::build(&d);
        for p in all_paths(&g) {
            // maximal horizontal runs inside each path
            let mut k = 0;
            while k < p.len() {
                if g.edge(p.edges()[k]).orientation != Orientation::Horizontal {
                    k += 1;
                    continue;
                }
                let start = k;
                while k < p.len() && g.edge(p.edges()[k]).orientation == Orientation::Horizontal {
                    k += 1;
                }
                let run = p.slice(start, k);
                let end = match g.vertex(run.end()) {
                    Vertex::White(x) => x,
                    other => panic!("horizontal run ends at {other}"),
                };
                let expected = match g.vertex(run.start()) {
                    Vertex::Row(_) => Element::generator(end),
                    Vertex::White(s) => Element::word([(s, -1), (end, 1)]),
                    Vertex::Col(_) => unreachable!(),
                };
                assert_eq!(g.path_weight(&run), expected);
            }
        }
    }
}

#[test]
fn edge_commutation_cases() {
    let mut seen = [0; 4];
    for d in population() {
        let counts = lemmas::edge_commutation(&CauchonGraph::build(&d)).unwrap();
        for (total, c) in seen.iter_mut().zip(counts) {
            *total += c;
        }
    }
    assert!(
        seen.iter().all(|&c| c > 0),
        "every case should occur: {seen:?}"
    );
}

#[test]
fn split_paths_commute_up_to_q_inverse() {
    let mut nontrivial = 0;
    for d in population() {
        nontrivial += lemmas::split_paths(&CauchonGraph::build(&d), 400).unwrap();
    }
    assert!(nontrivial > 0);
}

#[test]
fn paths_sharing_only_their_start() {
    let mut nontrivial = 0;
    for d in population() {
        nontrivial += lemmas::shared_start(&CauchonGraph::build(&d)).unwrap();
    }
    assert!(nontrivial > 0);
}

#[test]
fn vertex_ids_are_stable() {
    let d = CauchonDiagram::parse("..X\n...\nX..").unwrap();
    let g = CauchonGraph::build(&d);
    assert_eq!(g.vertex(g.row_vertex(1)), Vertex::Row(1));
    assert_eq!(g.vertex(g.col_vertex(3)), Vertex::Col(3));
    let whites: Vec<GenIndex> = d.white_squares().collect();
    for (k, x) in whites.iter().enumerate() {
        assert_eq!(g.white_id(*x), Some(6 + k));
    }
    assert_eq!(CauchonGraph::build(&d).to_dot(), g.to_dot());
}
