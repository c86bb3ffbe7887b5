use std::cmp::Ordering;
use std::fmt;

/// Index `(row, col)` of a canonical generator `t[row,col]`, 1-based.
///
/// The derived ordering is the lexicographic order on `(row, col)`, which is
/// also the normal order used for monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenIndex {
    pub row: usize,
    pub col: usize,
}

impl GenIndex {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// `(i,j) <= (s,t)` in the product (componentwise) order.
    pub fn le_product(self, other: GenIndex) -> bool {
        self.row <= other.row && self.col <= other.col
    }
}

impl fmt::Display for GenIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The exponent `L` with `t_a t_b = q^L t_b t_a`.
///
/// Generators in the same row or column q-commute (the one further left, or
/// further up, picks up `q` when moved to the right); all other pairs commute.
pub fn commutation_exponent(a: GenIndex, b: GenIndex) -> i64 {
    if a.row == b.row {
        match a.col.cmp(&b.col) {
            Ordering::Less => 1,
            Ordering::Greater => -1,
            Ordering::Equal => 0,
        }
    } else if a.col == b.col {
        match a.row.cmp(&b.row) {
            Ordering::Less => 1,
            Ordering::Greater => -1,
            Ordering::Equal => 0,
        }
    } else {
        0
    }
}

/// A normal-ordered Laurent monomial `prod t[i,j]^e` with the factors taken in
/// lexicographic order of `(i,j)`.
///
/// Stored as a sorted list with no zero exponents; the empty list is `1`. The
/// derived ordering compares these lists lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(GenIndex, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(g: GenIndex) -> Self {
        Self(vec![(g, 1)])
    }

    pub fn power(g: GenIndex, exp: i64) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Self(vec![(g, exp)])
        }
    }

    /// Builds the normal-ordered monomial with the given exponents, summing
    /// repeated indices and dropping zeros. This is *not* a product of the
    /// factors in the given order; use [`Monomial::product`] for that.
    pub fn from_exponents<I>(exps: I) -> Self
    where
        I: IntoIterator<Item = (GenIndex, i64)>,
    {
        let mut v: Vec<(GenIndex, i64)> = exps.into_iter().collect();
        v.sort_by_key(|(g, _)| *g);
        let mut out: Vec<(GenIndex, i64)> = Vec::with_capacity(v.len());
        for (g, e) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == g => *acc += e,
                _ => out.push((g, e)),
            }
        }
        out.retain(|(_, e)| *e != 0);
        Self(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(GenIndex, i64)] {
        &self.0
    }

    pub fn exponent(&self, g: GenIndex) -> i64 {
        self.0
            .binary_search_by_key(&g, |(h, _)| *h)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    /// Normal-ordered product: returns `(k, m)` with `N(self) N(rhs) = q^k N(m)`.
    ///
    /// Every factor of `rhs` is moved left past the factors of `self` that
    /// come after it in normal order; each crossing of `t_a^x` over `t_b^y`
    /// contributes `x * y * L(a, b)`.
    pub fn product(&self, rhs: &Monomial) -> (i64, Monomial) {
        let mut qpow = 0;
        for &(a, x) in &self.0 {
            for &(b, y) in &rhs.0 {
                if b >= a {
                    break;
                }
                qpow += x * y * commutation_exponent(a, b);
            }
        }
        (qpow, self.merge(rhs))
    }

    /// Two-sided inverse: returns `(k, m)` with `N(self)^-1 = q^k N(m)`, where
    /// `m` has the negated exponents.
    pub fn inverse(&self) -> (i64, Monomial) {
        let neg = Monomial(self.0.iter().map(|&(g, e)| (g, -e)).collect());
        let (k, one) = self.product(&neg);
        debug_assert!(one.is_one());
        (-k, neg)
    }

    fn merge(&self, rhs: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    /// `t[1,1] t[1,2]^-1`, or `1` for the empty monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "t[{},{}]", g.row, g.col)?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: usize, c: usize) -> GenIndex {
        GenIndex::new(r, c)
    }

    #[test]
    fn commutation_exponent_cases() {
        assert_eq!(commutation_exponent(g(1, 1), g(1, 2)), 1);
        assert_eq!(commutation_exponent(g(1, 2), g(2, 1)), 0);
        assert_eq!(commutation_exponent(g(2, 1), g(1, 1)), -1);
        assert_eq!(commutation_exponent(g(1, 1), g(2, 2)), 0);
        assert_eq!(commutation_exponent(g(3, 3), g(3, 3)), 0);
    }

    #[test]
    fn product_examples() {
        let (k, m) = Monomial::generator(g(1, 2)).product(&Monomial::generator(g(1, 1)));
        assert_eq!(k, -1);
        assert_eq!(m, Monomial::from_exponents([(g(1, 1), 1), (g(1, 2), 1)]));

        let b = Monomial::from_exponents([(g(2, 3), 2), (g(1, 1), -1)]);
        assert_eq!(Monomial::one().product(&b), (0, b.clone()));

        let (k, m) = Monomial::power(g(1, 2), -1).product(&Monomial::generator(g(1, 1)));
        assert_eq!(k, 1);
        assert_eq!(m, Monomial::from_exponents([(g(1, 1), 1), (g(1, 2), -1)]));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            Monomial::generator(g(1, 1)).inverse(),
            (0, Monomial::power(g(1, 1), -1))
        );
        assert_eq!(Monomial::one().inverse(), (0, Monomial::one()));
        let a = Monomial::from_exponents([(g(1, 1), 1), (g(1, 2), 1)]);
        let (k, inv) = a.inverse();
        let (k2, one) = a.product(&inv);
        assert_eq!(k + k2, 0);
        assert!(one.is_one());
        let (k3, one) = inv.product(&a);
        assert_eq!(k + k3, 0);
        assert!(one.is_one());
    }

    #[test]
    fn from_exponents_normalizes() {
        let m = Monomial::from_exponents([(g(2, 1), 1), (g(1, 3), 2), (g(2, 1), -1)]);
        assert_eq!(m.exponents(), &[(g(1, 3), 2)]);
        assert_eq!(m.exponent(g(1, 3)), 2);
        assert_eq!(m.exponent(g(2, 1)), 0);
    }

    #[test]
    fn display() {
        let m = Monomial::from_exponents([(g(1, 2), -1), (g(1, 1), 1)]);
        assert_eq!(m.to_string(), "t[1,1] t[1,2]^-1");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
