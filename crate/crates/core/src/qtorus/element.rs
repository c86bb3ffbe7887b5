use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::{GenIndex, Monomial, QLaurent};

/// An element of the McConnell-Pettit algebra: a finite sum of normal-ordered
/// monomials with coefficients in `Z[q, q^-1]`.
///
/// The term map never holds a zero coefficient, so two elements are equal
/// exactly when their maps are equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Monomial, QLaurent>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_term(QLaurent::one(), m)
    }

    pub fn from_term(coeff: QLaurent, m: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &coeff);
        out
    }

    /// The scalar `c` (times the empty monomial).
    pub fn scalar(c: QLaurent) -> Self {
        Self::from_term(c, Monomial::one())
    }

    pub fn generator(g: GenIndex) -> Self {
        Self::monomial(Monomial::generator(g))
    }

    pub fn generator_inv(g: GenIndex) -> Self {
        Self::monomial(Monomial::power(g, -1))
    }

    /// Ordered product `w_1 w_2 ... w_k` of single letters `t_g^e`.
    pub fn word<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = (GenIndex, i64)>,
    {
        letters
            .into_iter()
            .map(|(g, e)| Self::monomial(Monomial::power(g, e)))
            .product()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QLaurent)> + '_ {
        self.terms.iter()
    }

    /// Some((coeff, monomial)) when the element has exactly one term.
    pub fn as_single_term(&self) -> Option<(&QLaurent, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, m: Monomial, coeff: &QLaurent) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by the central scalar `c`.
    pub fn scale(&self, c: &QLaurent) -> Self {
        let mut out = Self::zero();
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &(a * c));
        }
        out
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.shift(k)))
                .collect(),
        }
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Mul<&Element> for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (k, m) = ma.product(mb);
                out.add_term(m, &(ca * cb).shift(k));
            }
        }
        out
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl Sum for Element {
    fn sum<I: Iterator<Item = Element>>(iter: I) -> Element {
        iter.fold(Element::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Element> for Element {
    fn sum<I: Iterator<Item = &'a Element>>(iter: I) -> Element {
        iter.fold(Element::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

impl Product for Element {
    fn product<I: Iterator<Item = Element>>(iter: I) -> Element {
        iter.fold(Element::one(), |acc, x| &acc * &x)
    }
}

impl<'a> Product<&'a Element> for Element {
    fn product<I: Iterator<Item = &'a Element>>(iter: I) -> Element {
        iter.fold(Element::one(), |acc, x| &acc * x)
    }
}

impl fmt::Display for Element {
    /// Canonical text: terms in monomial order joined by ` + `, each written
    /// `mono`, `coeff`, or `(coeff) mono`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c}) {m}")?;
            }
        }
        Ok(())
    }
}
