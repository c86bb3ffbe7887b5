use itertools::Itertools;

use super::{MinorError, MinorIndex};
use crate::pathmatrix::BMatrix;
use crate::qtorus::{Element, QLaurent};

/// Number of pairs `a < b` with `perm[a] > perm[b]`.
pub fn inversions(perm: &[usize]) -> usize {
    perm.iter()
        .tuple_combinations()
        .filter(|(a, b)| a > b)
        .count()
}

/// `det_q M[I,J] = sum over s in S_k of (-q)^inv(s) M[i_1, j_s(1)] ... M[i_k, j_s(k)]`,
/// the product taken left to right in increasing row order.
pub fn qdet(matrix: &BMatrix, index: &MinorIndex) -> Result<Element, MinorError> {
    if !index.fits(matrix.m(), matrix.n()) {
        return Err(MinorError::ShapeMismatch {
            index: index.clone(),
            m: matrix.m(),
            n: matrix.n(),
        });
    }
    let k = index.k();
    let (rows, cols) = (index.rows(), index.cols());
    let mut det = Element::zero();
    for perm in (0..k).permutations(k) {
        let mut term = Element::one();
        for (pos, &p) in perm.iter().enumerate() {
            let entry = matrix.get(rows[pos], cols[p]);
            if entry.is_zero() {
                term = Element::zero();
                break;
            }
            term = &term * entry;
        }
        if !term.is_zero() {
            det += &term.scale(&QLaurent::neg_q_pow(inversions(&perm)));
        }
    }
    Ok(det)
}
