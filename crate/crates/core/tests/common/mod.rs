//! Shared samplers and oracles for the integration tests.
#![allow(dead_code)]

pub mod lemmas;

use cauchon_core::diagram::enumerate;
use cauchon_core::{CauchonDiagram, Element, GenIndex, Monomial, QLaurent};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random valid diagram, built square by square in row-major order. A black
/// square is only offered where the squares already placed above or to the
/// left allow it, so no rejection is needed.
pub fn random_diagram<R: Rng>(rng: &mut R, m: usize, n: usize) -> CauchonDiagram {
    let p: f64 = rng.gen_range(0.1..0.7);
    let mut black = vec![false; m * n];
    for i in 0..m {
        for j in 0..n {
            let up = (0..i).all(|a| black[a * n + j]);
            let left = (0..j).all(|b| black[i * n + b]);
            if (up || left) && rng.gen_bool(p) {
                black[i * n + j] = true;
            }
        }
    }
    let squares = (0..m * n)
        .filter(|&k| black[k])
        .map(|k| GenIndex::new(k / n + 1, k % n + 1));
    CauchonDiagram::new(m, n, squares).expect("sampler only places allowed squares")
}

/// Every valid diagram with `1 <= m, n <= max`.
pub fn all_small_diagrams(max: usize) -> Vec<CauchonDiagram> {
    let mut out = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            out.extend(enumerate(m, n));
        }
    }
    out
}

/// Brute-force validity straight from the definition.
pub fn brute_valid(m: usize, n: usize, black: &[bool]) -> bool {
    (0..m).all(|i| {
        (0..n).all(|j| {
            !black[i * n + j]
                || (0..i).all(|a| black[a * n + j])
                || (0..j).all(|b| black[i * n + b])
        })
    })
}

/// Exponent `k` in `t_a t_b = q^k t_b t_a`, read off the defining relations
/// of the 2x2 submatrices: with `a b` in one row (a left) `ab = q ba`, with
/// `a` above `c` in one column `ac = q ca`, and the diagonals commute.
fn swap_exponent(a: GenIndex, b: GenIndex) -> i64 {
    if a.row == b.row && a.col != b.col {
        if a.col < b.col {
            1
        } else {
            -1
        }
    } else if a.col == b.col && a.row != b.row {
        if a.row < b.row {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// Normal form of a word by adjacent transpositions: expands every letter
/// into unit powers, bubble-sorts into lexicographic order, and collects the
/// power of `q` from each swap.
pub fn oracle_word(word: &[(GenIndex, i64)]) -> Element {
    let mut letters: Vec<(GenIndex, i64)> = Vec::new();
    for &(g, e) in word {
        let unit = e.signum();
        for _ in 0..e.abs() {
            letters.push((g, unit));
        }
    }
    let mut qpow = 0;
    let len = letters.len();
    for pass in 0..len {
        for k in 0..len.saturating_sub(pass + 1) {
            let (a, x) = letters[k];
            let (b, y) = letters[k + 1];
            if a > b {
                // t_a^x t_b^y = q^(x y L) t_b^y t_a^x
                qpow += x * y * swap_exponent(a, b);
                letters.swap(k, k + 1);
            }
        }
    }
    let mono = Monomial::from_exponents(letters);
    Element::from_term(QLaurent::q_pow(qpow), mono)
}

pub fn random_word<R: Rng>(
    rng: &mut R,
    m: usize,
    n: usize,
    max_len: usize,
) -> Vec<(GenIndex, i64)> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let g = GenIndex::new(rng.gen_range(1..=m), rng.gen_range(1..=n));
            let e = *[-2i64, -1, 1, 2].get(rng.gen_range(0..4)).unwrap();
            (g, e)
        })
        .collect()
}

pub fn random_element<R: Rng>(rng: &mut R, m: usize, n: usize) -> Element {
    let terms = rng.gen_range(0..=3);
    let mut x = Element::zero();
    for _ in 0..terms {
        let word = random_word(rng, m, n, 3);
        let coeff = QLaurent::term(rng.gen_range(-2..=2), rng.gen_range(-3i64..=3));
        x += &Element::word(word).scale(&coeff);
    }
    x
}
