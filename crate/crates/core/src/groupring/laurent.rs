use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::element::accumulate;
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Exponent vector of a Laurent monomial. Trailing zeros are trimmed so
/// that the same monomial has one representation regardless of how many
/// variables the ambient ring declares.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Exponents(Vec<i64>);

impl Exponents {
    pub fn new(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Exponents(v)
    }

    pub fn one() -> Self {
        Exponents(Vec::new())
    }

    pub fn unit_vector(var: usize, power: i64) -> Self {
        let mut v = vec![0; var + 1];
        v[var] = power;
        Exponents::new(v)
    }

    pub fn get(&self, var: usize) -> i64 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    /// Exponents padded with zeros to `n` slots.
    pub fn padded(&self, n: usize) -> Vec<i64> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn add(&self, other: &Exponents) -> Exponents {
        let n = self.0.len().max(other.0.len());
        Exponents::new((0..n).map(|i| self.get(i) + other.get(i)).collect())
    }

    pub fn scaled(&self, k: i64) -> Exponents {
        Exponents::new(self.0.iter().map(|e| e * k).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

/// A Laurent polynomial with exact coefficients in commuting variables
/// indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<Exponents, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub(crate) fn from_map(terms: BTreeMap<Exponents, C>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        LaurentPoly { terms }
    }

    pub fn monomial(c: C, exps: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, exps, c);
        LaurentPoly { terms }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, Exponents::one())
    }

    pub fn variable(var: usize) -> Self {
        Self::monomial(C::one(), Exponents::unit_vector(var, 1))
    }

    /// `t^k` in the univariate ring.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(C::one(), Exponents::unit_vector(0, k))
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, C)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in iter {
            accumulate(&mut terms, e, c);
        }
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: &Exponents) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    /// Number of variable slots actually used.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|e| e.0.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, d)| (e.clone(), d.clone() * c.clone())))
    }

    /// Multiply by the monomial `x^e`.
    pub fn shift(&self, e: &Exponents) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(f, c)| (f.add(e), c.clone())).collect(),
        }
    }

    /// Units of the ring are `±monomial`; returns the inverse of such a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (e, c) = self.terms.iter().next()?;
        if self.terms.len() == 1 && c.is_unit_sign() {
            Some(Self::monomial(c.clone(), e.scaled(-1)))
        } else {
            None
        }
    }

    pub fn is_unit(&self) -> bool {
        self.unit_inverse().is_some()
    }

    /// Minimum exponent of `var` over all terms; `None` for zero.
    pub fn min_degree(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e.get(var)).min()
    }

    pub fn max_degree(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|e| e.get(var)).max()
    }

    /// Coefficient of the term with the greatest exponent vector.
    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn evaluate(&self, map: &EvaluationMap) -> Result<Self> {
        map.apply(self)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        NamedLaurent { poly: self, names }
    }
}

impl<C: Coefficient> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for LaurentPoly<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<'a, C: Coefficient> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        LaurentPoly { terms }
    }
}

impl<'a, C: Coefficient> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, e.clone(), -c.clone());
        }
        LaurentPoly { terms }
    }
}

impl<'a, C: Coefficient> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut terms = BTreeMap::new();
        for (e, a) in &self.terms {
            for (f, b) in &rhs.terms {
                accumulate(&mut terms, e.add(f), a.clone() * b.clone());
            }
        }
        LaurentPoly { terms }
    }
}

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

crate::forward_owned_ops!(LaurentPoly);

struct NamedLaurent<'a, C> {
    poly: &'a LaurentPoly<C>,
    names: &'a [String],
}

impl<C: Coefficient> fmt::Display for NamedLaurent<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::write_sum(
            f,
            self.poly.terms.iter().map(|(e, c)| {
                let factors: Vec<String> = e
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(i, &k)| {
                        let name = self
                            .names
                            .get(i)
                            .cloned()
                            .unwrap_or_else(|| format!("v{}", i + 1));
                        if k == 1 {
                            name
                        } else {
                            format!("{name}^{k}")
                        }
                    })
                    .collect();
                let mono = if factors.is_empty() {
                    None
                } else {
                    Some(factors.join("*"))
                };
                (c, mono)
            }),
        )
    }
}

impl<C: Coefficient> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.num_vars()).map(|i| format!("a{i}")).collect();
        NamedLaurent { poly: self, names: &names }.fmt(f)
    }
}

/// Image of one variable under an evaluation map: `±x^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitImage {
    pub negative: bool,
    pub exponents: Exponents,
}

impl UnitImage {
    pub fn one() -> Self {
        UnitImage {
            negative: false,
            exponents: Exponents::one(),
        }
    }

    pub fn variable(var: usize) -> Self {
        UnitImage {
            negative: false,
            exponents: Exponents::unit_vector(var, 1),
        }
    }
}

/// Ring homomorphism between Laurent rings, given by unit images of the
/// source variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvaluationMap {
    images: Vec<UnitImage>,
}

impl EvaluationMap {
    pub fn new(images: Vec<UnitImage>) -> Self {
        EvaluationMap { images }
    }

    /// Sends every variable to 1 except `keep`, which goes to `t`.
    pub fn single_variable(num_vars: usize, keep: usize) -> Self {
        EvaluationMap {
            images: (0..num_vars)
                .map(|i| {
                    if i == keep {
                        UnitImage::variable(0)
                    } else {
                        UnitImage::one()
                    }
                })
                .collect(),
        }
    }

    pub fn images(&self) -> &[UnitImage] {
        &self.images
    }

    pub fn apply<C: Coefficient>(&self, p: &LaurentPoly<C>) -> Result<LaurentPoly<C>> {
        let mut out = BTreeMap::new();
        for (e, c) in &p.terms {
            let mut exps = Exponents::one();
            let mut negative = false;
            for (var, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let img = self.images.get(var).ok_or(Error::UnassignedVariable(var))?;
                exps = exps.add(&img.exponents.scaled(k));
                negative ^= img.negative && k % 2 != 0;
            }
            let c = if negative { -c.clone() } else { c.clone() };
            accumulate(&mut out, exps, c);
        }
        Ok(LaurentPoly { terms: out })
    }

    /// The map "first `self`, then `next`".
    pub fn then(&self, next: &EvaluationMap) -> Result<EvaluationMap> {
        let images = self
            .images
            .iter()
            .map(|img| {
                let p = LaurentPoly::<i64>::monomial(
                    if img.negative { -1 } else { 1 },
                    img.exponents.clone(),
                );
                let q = next.apply(&p)?;
                let (e, c) = q.terms.into_iter().next().expect("unit image is nonzero");
                Ok(UnitImage {
                    negative: c < 0,
                    exponents: e,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(EvaluationMap { images })
    }
}
