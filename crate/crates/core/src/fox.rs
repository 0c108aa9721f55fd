//! Left Fox derivatives on the integral group ring of a free group.
//!
//! `D_j` is the linear map with `D_j(g_j) = 1`, `D_j(g_i) = 0` for `i ≠ j`
//! and `D_j(uv) = D_j(u) + u·D_j(v)`. On a reduced word it unrolls to a
//! single prefix scan: each occurrence of `g_j` contributes `+prefix`, each
//! occurrence of `g_j⁻¹` contributes `-(prefix · g_j⁻¹)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groupring::{generator_minus_one, GroupRingElement, LaurentPoly};
use crate::scalar::Coefficient;
use crate::words::{Alphabet, Generator, Word};

/// Terms of `D_j(w)` as `(word, negative)`, for a single reduced word.
fn derivative_terms(j: Generator, w: &Word) -> impl Iterator<Item = (Word, bool)> + '_ {
    let letters = w.letters();
    letters.iter().enumerate().filter_map(move |(p, l)| {
        if l.generator != j {
            None
        } else if l.inverse {
            Some((Word::from_reduced(letters[..=p].to_vec()), true))
        } else {
            Some((Word::from_reduced(letters[..p].to_vec()), false))
        }
    })
}

/// `D_j(w)` for a single reduced word.
pub fn word_derivative<C: Coefficient>(j: Generator, w: &Word) -> GroupRingElement<C> {
    GroupRingElement::from_terms(
        derivative_terms(j, w).map(|(u, neg)| (u, if neg { -C::one() } else { C::one() })),
    )
}

/// `D_j(e)` extended linearly, without alphabet checks.
pub fn derive<C: Coefficient>(j: Generator, e: &GroupRingElement<C>) -> GroupRingElement<C> {
    GroupRingElement::from_terms(e.terms().flat_map(|(w, c)| {
        derivative_terms(j, w).map(move |(u, neg)| (u, if neg { -c.clone() } else { c.clone() }))
    }))
}

/// `D_j(e)`, checking that `j` and every word of `e` lie in `alphabet`.
pub fn fox_derive<C: Coefficient>(
    alphabet: &Alphabet,
    j: Generator,
    e: &GroupRingElement<C>,
) -> Result<GroupRingElement<C>> {
    alphabet.check_generator(j)?;
    e.check_alphabet(alphabet)?;
    Ok(derive(j, e))
}

/// Left-hand side of the main identity, `Σ_j D_j(e)·(g_j - 1)`.
pub fn main_identity_lhs<C: Coefficient>(
    alphabet: &Alphabet,
    e: &GroupRingElement<C>,
) -> GroupRingElement<C> {
    alphabet
        .generators()
        .map(|g| &derive(g, e) * &generator_minus_one(Word::generator(g)))
        .fold(GroupRingElement::zero(), |acc, t| &acc + &t)
}

/// Checks `Σ_j D_j(e)·(g_j - 1) = e - ε(e)`. Always true for valid input;
/// exposed as a self-test.
pub fn main_identity_check<C: Coefficient>(
    alphabet: &Alphabet,
    e: &GroupRingElement<C>,
) -> Result<bool> {
    e.check_alphabet(alphabet)?;
    let rhs = e - &GroupRingElement::constant(e.augment());
    Ok(main_identity_lhs(alphabet, e) == rhs)
}

/// The derivation `Σ_j α_j D_j`, acting by `(α D)(u) = D(u)·α`.
/// One coefficient per generator, in alphabet order.
pub fn general_derivative<C: Coefficient>(
    alphabet: &Alphabet,
    coeffs: &[GroupRingElement<C>],
    e: &GroupRingElement<C>,
) -> Result<GroupRingElement<C>> {
    if coeffs.len() != alphabet.rank() {
        return Err(Error::ArityMismatch {
            expected: alphabet.rank(),
            got: coeffs.len(),
        });
    }
    e.check_alphabet(alphabet)?;
    Ok(alphabet
        .generators()
        .zip(coeffs)
        .filter(|(_, a)| !a.is_zero())
        .map(|(g, a)| &derive(g, e) * a)
        .fold(GroupRingElement::zero(), |acc, t| &acc + &t))
}

/// Induced derivative into the group ring of the abelianization:
/// `d_j = abelianize ∘ D_j`.
pub fn induced_derive<C: Coefficient>(
    alphabet: &Alphabet,
    j: Generator,
    e: &GroupRingElement<C>,
) -> Result<LaurentPoly<C>> {
    fox_derive(alphabet, j, e)?.abelianize(alphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::One;

    type Z = GroupRingElement<BigInt>;

    fn al() -> Alphabet {
        Alphabet::new(3, 0).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s, &al()).unwrap()
    }

    fn z(s: &str) -> Z {
        Z::word(w(s))
    }

    fn x(i: u32) -> Generator {
        Generator::x(i)
    }

    #[test]
    fn generator_axioms() {
        assert_eq!(derive(x(1), &z("x1")), Z::one());
        assert!(derive(x(1), &z("x2")).is_zero());
    }

    #[test]
    fn inverse_letter() {
        assert_eq!(derive(x(1), &z("x1^-1")), -&z("x1^-1"));
    }

    #[test]
    fn conjugate_derivatives() {
        // D2(x1 x2 x1^-1) = D2(x1) + x1·(D2(x2) + x2·D2(x1^-1)) = x1
        assert_eq!(derive(x(2), &z("x1 x2 x1^-1")), z("x1"));
        // D1 of the same word = 1 + x1 x2·(-x1^-1)
        assert_eq!(
            derive(x(1), &z("x1 x2 x1^-1")),
            &Z::one() - &z("x1 x2 x1^-1")
        );
    }

    #[test]
    fn main_identity_examples() {
        let e = z("x1 x2");
        let lhs = main_identity_lhs(&al(), &e);
        assert_eq!(lhs, &z("x1 x2") - &Z::one());
        assert!(main_identity_check(&al(), &e).unwrap());
        assert!(main_identity_check(&al(), &Z::one()).unwrap());
        assert!(main_identity_check(&al(), &Z::zero()).unwrap());
    }

    #[test]
    fn general_derivative_examples() {
        let a2 = Alphabet::new(2, 0).unwrap();
        let e = z("x1 x2");
        let unit = [Z::one(), Z::zero()];
        assert_eq!(general_derivative(&a2, &unit, &e).unwrap(), derive(x(1), &e));
        let zero = [Z::zero(), Z::zero()];
        assert!(general_derivative(&a2, &zero, &e).unwrap().is_zero());
        let aug = [
            generator_minus_one(w("x1")),
            generator_minus_one(w("x2")),
        ];
        assert_eq!(general_derivative(&a2, &aug, &e).unwrap(), &e - &Z::one());
        assert_eq!(
            general_derivative(&a2, &aug[..1], &e),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn induced_derivative_examples() {
        let a2 = Alphabet::new(2, 0).unwrap();
        let u = z("x2 x1 x2^-1");
        type L = LaurentPoly<BigInt>;
        assert_eq!(induced_derive(&a2, x(1), &u).unwrap(), L::variable(1));
        assert_eq!(
            induced_derive(&a2, x(2), &u).unwrap(),
            &L::one() - &L::variable(0)
        );
    }

    #[test]
    fn alphabet_checks() {
        let a2 = Alphabet::new(2, 0).unwrap();
        assert!(fox_derive(&a2, x(3), &z("x1")).is_err());
        assert!(fox_derive(&a2, x(1), &z("x3")).is_err());
        assert!(fox_derive(&a2, Generator::y(1), &z("x1")).is_err());
    }
}
