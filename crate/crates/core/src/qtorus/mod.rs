//! Exact arithmetic in the McConnell-Pettit algebra of the `m x n` quantum
//! affine space: Laurent monomials in q-commuting generators `t[i,j]`, with
//! coefficients in `Z[q, q^-1]`.
//!
//! Relations: generators in the same row or the same column satisfy
//! `t[i,j] t[i,l] = q t[i,l] t[i,j]` for `j < l` (and likewise down a column);
//! every other pair commutes. `q` stays a formal parameter throughout, so an
//! element is zero only when it is identically zero.

mod element;
pub mod json;
mod laurent;
mod monomial;

pub use element::Element;
pub use laurent::QLaurent;
pub use monomial::{commutation_exponent, GenIndex, Monomial};
