use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{Exponents, LaurentPoly};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::words::{Alphabet, Word};

/// An element of the integral group ring of a free group: a finite formal
/// sum of reduced words with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElement<C> {
    terms: BTreeMap<Word, C>,
}

pub(crate) fn accumulate<K: Ord, C: Coefficient>(map: &mut BTreeMap<K, C>, key: K, c: C) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().clone() + c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl<C: Coefficient> GroupRingElement<C> {
    pub fn word(w: Word) -> Self {
        Self::term(w, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Word::identity(), c)
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, w, c);
        GroupRingElement { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, C)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (w, c) in iter {
            accumulate(&mut terms, w, c);
        }
        GroupRingElement { terms }
    }

    /// Terms in canonical (word) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Returns the word if `self` is a single word with coefficient 1.
    pub fn as_word(&self) -> Option<&Word> {
        match self.terms.iter().next() {
            Some((w, c)) if self.terms.len() == 1 && c.is_one() => Some(w),
            _ => None,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, d)| (w.clone(), d.clone() * c.clone())))
    }

    /// Augmentation: the sum of all coefficients.
    pub fn augment(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    /// Linear extension of a map on words (e.g. an endomorphism).
    pub fn map_words<F: FnMut(&Word) -> Word>(&self, mut f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Image in the Laurent ring of the abelianization: `x_i ↦ a_i`,
    /// `y_k ↦ b_k`, with the `b` slots placed after the `r` slots of `a`.
    pub fn abelianize(&self, alphabet: &Alphabet) -> Result<LaurentPoly<C>> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            accumulate(&mut out, abelianize_word(w, alphabet)?, c.clone());
        }
        Ok(LaurentPoly::from_map(out))
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        self.terms.keys().try_for_each(|w| alphabet.check_word(w))
    }
}

pub fn abelianize_word(w: &Word, alphabet: &Alphabet) -> Result<Exponents> {
    let mut exps = vec![0i64; alphabet.rank()];
    for l in w.letters() {
        let pos = alphabet.position(l.generator).ok_or(Error::GeneratorOutOfRange {
            generator: l.generator,
            alphabet: *alphabet,
        })?;
        exps[pos] += if l.inverse { -1 } else { 1 };
    }
    Ok(Exponents::new(exps))
}

impl<C: Coefficient> Zero for GroupRingElement<C> {
    fn zero() -> Self {
        GroupRingElement {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for GroupRingElement<C> {
    fn one() -> Self {
        Self::word(Word::identity())
    }
}

impl<C: Coefficient> From<Word> for GroupRingElement<C> {
    fn from(w: Word) -> Self {
        Self::word(w)
    }
}

impl<'a, C: Coefficient> Add<&'a GroupRingElement<C>> for &'a GroupRingElement<C> {
    type Output = GroupRingElement<C>;

    fn add(self, rhs: &GroupRingElement<C>) -> GroupRingElement<C> {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        GroupRingElement { terms }
    }
}

impl<'a, C: Coefficient> Sub<&'a GroupRingElement<C>> for &'a GroupRingElement<C> {
    type Output = GroupRingElement<C>;

    fn sub(self, rhs: &GroupRingElement<C>) -> GroupRingElement<C> {
        let mut terms = self.terms.clone();
        for (w, c) in &rhs.terms {
            accumulate(&mut terms, w.clone(), -c.clone());
        }
        GroupRingElement { terms }
    }
}

impl<'a, C: Coefficient> Mul<&'a GroupRingElement<C>> for &'a GroupRingElement<C> {
    type Output = GroupRingElement<C>;

    fn mul(self, rhs: &GroupRingElement<C>) -> GroupRingElement<C> {
        let mut terms = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                accumulate(&mut terms, u * v, a.clone() * b.clone());
            }
        }
        GroupRingElement { terms }
    }
}

impl<C: Coefficient> Neg for &GroupRingElement<C> {
    type Output = GroupRingElement<C>;

    fn neg(self) -> GroupRingElement<C> {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }
}

crate::forward_owned_ops!(GroupRingElement);

impl<C: Coefficient> fmt::Display for GroupRingElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::write_sum(
            f,
            self.terms.iter().map(|(w, c)| {
                let mono = if w.is_identity() {
                    None
                } else {
                    Some(w.to_string())
                };
                (c, mono)
            }),
        )
    }
}

/// `g - 1` for a generator word.
pub fn generator_minus_one<C: Coefficient>(w: Word) -> GroupRingElement<C> {
    GroupRingElement::from_terms([(w, C::one()), (Word::identity(), -C::one())])
}
