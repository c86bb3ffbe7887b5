use std::collections::BTreeMap;
use std::ops::ControlFlow;

use super::{
    all_minor_indices, disjoint_system_exists, for_each_disjoint_system, qdet, MinorError,
    MinorIndex,
};
use crate::cgraph::CauchonGraph;
use crate::diagram::CauchonDiagram;
use crate::parallel::{self, Exec};
use crate::pathmatrix::{path_matrix_with, BMatrix};
use crate::qtorus::Element;
use crate::CapExceeded;

const DEFAULT_MAX_PATHS: usize = 1 << 20;
const DEFAULT_MAX_SYSTEMS: usize = 1 << 20;

/// Both sides of the quantum Lindström identity for one minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LgvSides {
    pub determinant: Element,
    /// Sum of `w(P_1) ... w(P_k)` over vertex-disjoint path systems.
    pub system_sum: Element,
    pub systems: usize,
}

impl LgvSides {
    pub fn agree(&self) -> bool {
        self.determinant == self.system_sum
    }
}

pub fn lgv_sides(
    g: &CauchonGraph,
    matrix: &BMatrix,
    index: &MinorIndex,
    max_systems: usize,
) -> Result<LgvSides, MinorError> {
    let determinant = qdet(matrix, index)?;
    let mut system_sum = Element::zero();
    let mut systems = 0;
    let mut over = false;
    for_each_disjoint_system(g, index, |sys| {
        if systems == max_systems {
            over = true;
            return ControlFlow::Break(());
        }
        systems += 1;
        system_sum += &sys.weight(g);
        ControlFlow::Continue(())
    });
    if over {
        return Err(CapExceeded {
            what: "vertex-disjoint path systems",
            cap: max_systems,
        }
        .into());
    }
    Ok(LgvSides {
        determinant,
        system_sum,
        systems,
    })
}

pub fn lgv_check_with(
    g: &CauchonGraph,
    matrix: &BMatrix,
    index: &MinorIndex,
    max_systems: usize,
) -> Result<bool, MinorError> {
    lgv_sides(g, matrix, index, max_systems).map(|s| s.agree())
}

/// Builds the path matrix and compares both sides for one minor.
pub fn lgv_check(g: &CauchonGraph, index: &MinorIndex) -> Result<bool, MinorError> {
    let matrix = path_matrix_with(g, DEFAULT_MAX_PATHS, Exec::default())?;
    lgv_check_with(g, &matrix, index, DEFAULT_MAX_SYSTEMS)
}

/// Minors `(I, J)` with no vertex-disjoint path system, in index order.
pub fn generators(d: &CauchonDiagram) -> Vec<MinorIndex> {
    generators_with(d, Exec::default())
}

pub fn generators_with(d: &CauchonDiagram, exec: Exec) -> Vec<MinorIndex> {
    let g = CauchonGraph::build(d);
    let all = all_minor_indices(d.m(), d.n());
    let keep = parallel::map(exec, &all, |idx| !disjoint_system_exists(&g, idx));
    all.into_iter()
        .zip(keep)
        .filter_map(|(idx, k)| k.then_some(idx))
        .collect()
}

/// A minor where the determinant test and the graph test disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub index: MinorIndex,
    pub qdet_vanishes: bool,
    pub system_exists: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SizeTally {
    pub minors: usize,
    pub vanishing: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossReport {
    pub checked: usize,
    pub violations: Vec<Violation>,
    /// Keyed by minor size `k`.
    pub per_size: BTreeMap<usize, SizeTally>,
}

impl CrossReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares `det_q M[I,J] == 0` against "no disjoint system" for every minor.
pub fn cross_validate(d: &CauchonDiagram) -> Result<CrossReport, CapExceeded> {
    cross_validate_with(d, DEFAULT_MAX_PATHS, Exec::default())
}

pub fn cross_validate_with(
    d: &CauchonDiagram,
    max_paths: usize,
    exec: Exec,
) -> Result<CrossReport, CapExceeded> {
    let g = CauchonGraph::build(d);
    let matrix = path_matrix_with(&g, max_paths, exec)?;
    let all = all_minor_indices(d.m(), d.n());
    let results = parallel::map(exec, &all, |idx| {
        let vanishes = qdet(&matrix, idx).expect("index fits the matrix").is_zero();
        (vanishes, disjoint_system_exists(&g, idx))
    });
    let mut report = CrossReport::default();
    for (idx, (vanishes, exists)) in all.into_iter().zip(results) {
        report.checked += 1;
        let tally = report.per_size.entry(idx.k()).or_default();
        tally.minors += 1;
        if vanishes {
            tally.vanishing += 1;
        }
        if vanishes == exists {
            report.violations.push(Violation {
                index: idx,
                qdet_vanishes: vanishes,
                system_exists: exists,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(rows: &[usize], cols: &[usize]) -> MinorIndex {
        MinorIndex::new(rows.to_vec(), cols.to_vec()).unwrap()
    }

    fn example() -> CauchonDiagram {
        CauchonDiagram::parse("..X\n...\nX..").unwrap()
    }

    #[test]
    fn extremal_ideals() {
        assert!(generators(&CauchonDiagram::all_white(3, 3)).is_empty());
        let black = CauchonDiagram::all_black(2, 3);
        assert_eq!(generators(&black), all_minor_indices(2, 3));
    }

    #[test]
    fn example_generators() {
        let gens = generators(&example());
        assert!(gens.contains(&idx(&[1], &[3])));
        assert!(gens.contains(&idx(&[3], &[1])));
        assert!(!gens.contains(&idx(&[1, 2, 3], &[1, 2, 3])));
        assert!(!gens.contains(&idx(&[1], &[1])));
    }

    #[test]
    fn example_cross_validates() {
        let r = cross_validate(&example()).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations);
        assert_eq!(r.checked, 9 + 9 + 1);
        assert_eq!(r.per_size[&1].minors, 9);
    }

    #[test]
    fn lgv_on_example() {
        let d = example();
        let g = CauchonGraph::build(&d);
        for index in all_minor_indices(3, 3) {
            assert!(lgv_check(&g, &index).unwrap(), "{index}");
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let d = example();
        assert_eq!(
            generators_with(&d, Exec::Sequential),
            generators_with(&d, Exec::Parallel)
        );
    }
}
