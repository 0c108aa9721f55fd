//! Exact computations for Andrews-Curtis transformation groups.
//!
//! The crate covers free-group words ([`words`]), the integral group ring and
//! Laurent rings ([`groupring`]), Fox calculus ([`fox`]), AC-moves and their
//! automorphism view ([`acmoves`]), Magnus/Bachmuth matrices and the
//! projective representation `nu` ([`magnus`]), verification of relation
//! families ([`relations`]) and a bounded trivialization search ([`search`]).
//!
//! Ring arithmetic is generic over the coefficient type (see
//! [`Coefficient`]); the aliases below fix it to arbitrary-precision
//! integers, which is what every verification in this crate uses.

macro_rules! forward_owned_ops {
    ($t:ident) => {
        impl<C: $crate::scalar::Coefficient> ::std::ops::Add for $t<C> {
            type Output = $t<C>;
            fn add(self, rhs: $t<C>) -> $t<C> {
                &self + &rhs
            }
        }

        impl<C: $crate::scalar::Coefficient> ::std::ops::Sub for $t<C> {
            type Output = $t<C>;
            fn sub(self, rhs: $t<C>) -> $t<C> {
                &self - &rhs
            }
        }

        impl<C: $crate::scalar::Coefficient> ::std::ops::Mul for $t<C> {
            type Output = $t<C>;
            fn mul(self, rhs: $t<C>) -> $t<C> {
                &self * &rhs
            }
        }

        impl<C: $crate::scalar::Coefficient> ::std::ops::Neg for $t<C> {
            type Output = $t<C>;
            fn neg(self) -> $t<C> {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned_ops;

pub mod acmoves;
pub mod error;
pub mod fox;
pub mod groupring;
pub mod json;
pub mod magnus;
pub mod relations;
pub mod sample;
pub mod scalar;
pub mod search;
pub mod words;

pub use error::{Error, Result};
pub use scalar::Coefficient;

/// Arbitrary-precision integer coefficients.
pub type Integer = num_bigint::BigInt;
/// Rational coefficients, for computations over a field.
pub type Rational = num_rational::BigRational;

/// Element of the integral group ring `ZF`.
pub type ZGroupRing = groupring::GroupRingElement<Integer>;
/// Element of an integral Laurent ring (`Λ` or `Z[t, t^-1]`).
pub type ZLaurent = groupring::LaurentPoly<Integer>;
/// Laurent polynomial with rational coefficients.
pub type QLaurent = groupring::LaurentPoly<Rational>;
/// Matrix over `ZF`.
pub type ZGroupRingMatrix = magnus::Matrix<ZGroupRing>;
/// Matrix over an integral Laurent ring.
pub type ZLaurentMatrix = magnus::Matrix<ZLaurent>;
/// Class in `PGL_2(Z[t, t^-1])`.
pub type ZProjectiveClass = magnus::ProjectiveClass<Integer>;
