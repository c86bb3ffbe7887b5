use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in the formal parameter `q` with integer coefficients,
/// i.e. an element of `Z[q, q^-1]`.
///
/// Stored sparsely as exponent -> coefficient. Zero coefficients are never
/// stored, so the empty map is the unique zero and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::term(exp, 1)
    }

    /// `(-q)^k`, the sign weight attached to a permutation of length `k`.
    pub fn neg_q_pow(k: usize) -> Self {
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        Self::term(k as i64, sign)
    }

    /// `coeff * q^exp`; returns zero when `coeff` is zero.
    pub fn term(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(exp, coeff.into());
        out
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (exp, c) in terms {
            out.add_term(exp, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^exp` (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(mut self, rhs: QLaurent) -> QLaurent {
        self += &rhs;
        self
    }
}

impl Sub<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(mut self, rhs: QLaurent) -> QLaurent {
        self -= &rhs;
        self
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        -&self
    }
}

impl Mul<&QLaurent> for &QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: &QLaurent) -> QLaurent {
        // Fast path: most coefficients met in practice are a single signed q-power.
        if rhs.terms.len() == 1 {
            let (&e, c) = rhs.terms.iter().next().unwrap();
            return QLaurent {
                terms: self.terms.iter().map(|(a, b)| (a + e, b * c)).collect(),
            };
        }
        let mut out = QLaurent::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: QLaurent) -> QLaurent {
        &self * &rhs
    }
}

impl fmt::Display for QLaurent {
    /// Ascending powers, e.g. `q^-1 - 2*q + 3*q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let power = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            match (abs.is_one(), power.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => f.write_str(&power)?,
                (false, false) => write!(f, "{abs}*{power}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_empty_and_pruned() {
        let a = QLaurent::from_terms([(1, 2), (1, -2)]);
        assert!(a.is_zero());
        assert_eq!(a, QLaurent::zero());
        assert!(QLaurent::term(3, 0).is_zero());
    }

    #[test]
    fn ring_ops() {
        let a = QLaurent::from_terms([(0, 1), (-1, 1)]); // 1 + q^-1
        let b = QLaurent::from_terms([(1, 1), (0, -1)]); // q - 1
        let prod = &a * &b; // q - q^-1
        assert_eq!(prod, QLaurent::from_terms([(1, 1), (-1, -1)]));
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn sign_powers() {
        assert_eq!(QLaurent::neg_q_pow(0), QLaurent::one());
        assert_eq!(QLaurent::neg_q_pow(1), QLaurent::term(1, -1));
        assert_eq!(QLaurent::neg_q_pow(2), QLaurent::q_pow(2));
    }

    #[test]
    fn display() {
        let a = QLaurent::from_terms([(-1, 1), (1, -2), (2, 3), (0, 5)]);
        assert_eq!(a.to_string(), "q^-1 + 5 - 2*q + 3*q^2");
        assert_eq!(QLaurent::term(1, -1).to_string(), "-q");
        assert_eq!(QLaurent::zero().to_string(), "0");
    }

    #[test]
    fn coefficients_do_not_overflow() {
        let big = QLaurent::term(0, i64::MAX);
        let sq = &big * &big;
        let expected = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        assert_eq!(sq.coeff(0), expected);
    }
}
