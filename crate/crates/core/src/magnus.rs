//! Fox Jacobians of endomorphisms, the Bachmuth matrices over `Λ`, the
//! evaluation to `Z[t, t^-1]`, and the projective representation `nu`.
//!
//! With substitutions composed first-applied-first (see [`crate::acmoves`]),
//! the chain rule reads `J(φ then ψ) = ψ(J(φ)) · J(ψ)`, where `ψ` acts on
//! the entries of `J(φ)` by substitution.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::acmoves::{ACTransform, EndoMap};
use crate::error::{Error, Result};
use crate::fox::derive;
use crate::groupring::{generator_minus_one, EvaluationMap, Exponents, GroupRingElement, LaurentPoly};
use crate::scalar::Coefficient;
use crate::words::{Alphabet, Word};

/// What a matrix entry needs: a ring with owned arithmetic and equality.
pub trait RingElement:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> RingElement for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A square matrix over a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: Vec<Vec<E>>,
}

impl<E: RingElement> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain(format!("matrix with {n} rows is not square")));
        }
        Ok(Matrix { rows })
    }

    pub fn from_fn<F: FnMut(usize, usize) -> E>(n: usize, mut f: F) -> Self {
        Matrix {
            rows: (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { E::one() } else { E::zero() })
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| E::zero())
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.rows[i]
    }

    pub fn entries(&self) -> impl Iterator<Item = &E> {
        self.rows.iter().flatten()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.size())
    }

    pub fn map<F, T>(&self, mut f: F) -> Matrix<T>
    where
        F: FnMut(&E) -> T,
    {
        Matrix {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&mut f).collect())
                .collect(),
        }
    }

    pub fn try_map<F, T>(&self, mut f: F) -> Result<Matrix<T>>
    where
        F: FnMut(&E) -> Result<T>,
    {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(&mut f).collect::<Result<Vec<T>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows })
    }

    /// The leading `n × n` block.
    pub fn top_left(&self, n: usize) -> Self {
        Matrix {
            rows: self.rows[..n].iter().map(|r| r[..n].to_vec()).collect(),
        }
    }

    pub fn scale(&self, c: &E) -> Self {
        self.map(|e| c.clone() * e.clone())
    }

    pub fn mul(&self, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.size(), rhs.size(), "matrix sizes differ");
        let n = self.size();
        Self::from_fn(n, |i, j| {
            (0..n).fold(E::zero(), |acc, k| {
                let (a, b) = (&self.rows[i][k], &rhs.rows[k][j]);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + a.clone() * b.clone()
                }
            })
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.size());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn product<'a, I>(n: usize, factors: I) -> Self
    where
        E: 'a,
        I: IntoIterator<Item = &'a Matrix<E>>,
    {
        factors
            .into_iter()
            .fold(Self::identity(n), |acc, m| acc.mul(m))
    }
}

impl<C: Coefficient> Matrix<LaurentPoly<C>> {
    pub fn determinant_2x2(&self) -> Result<LaurentPoly<C>> {
        if self.size() != 2 {
            return Err(Error::Domain("determinant is implemented for 2x2 only".into()));
        }
        let r = &self.rows;
        Ok(&(&r[0][0] * &r[1][1]) - &(&r[0][1] * &r[1][0]))
    }

    /// Inverse of a 2×2 matrix whose determinant is a unit `±x^e`.
    pub fn inverse(&self) -> Result<Self> {
        let det_inv = self
            .determinant_2x2()?
            .unit_inverse()
            .ok_or(Error::NotInvertible)?;
        let r = &self.rows;
        let adj = vec![
            vec![r[1][1].clone(), -&r[0][1]],
            vec![-&r[1][0], r[0][0].clone()],
        ];
        Ok(Matrix { rows: adj }.scale(&det_inv))
    }

    pub fn pow_signed(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        Ok(base.pow(k.unsigned_abs() as u32))
    }

    pub fn evaluate(&self, map: &EvaluationMap) -> Result<Self> {
        self.try_map(|p| map.apply(p))
    }
}

impl<E: RingElement + fmt::Display> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

/// `J(φ)`: entry `(i, j)` is `D_j(φ(g_i))`, rows and columns in alphabet
/// order `x_1..x_r, y_1..y_s`.
pub fn jacobian<C: Coefficient>(e: &EndoMap) -> Matrix<GroupRingElement<C>> {
    let alphabet = e.alphabet();
    let gens: Vec<_> = alphabet.generators().collect();
    Matrix {
        rows: e
            .images()
            .iter()
            .map(|w| {
                let img = GroupRingElement::word(w.clone());
                gens.iter().map(|&g| derive(g, &img)).collect()
            })
            .collect(),
    }
}

/// Abelianized Jacobian, with entries in `Λ` (variables `a_1..a_r`, then
/// `b_1..b_s`).
pub fn bachmuth_jacobian<C: Coefficient>(e: &EndoMap) -> Matrix<LaurentPoly<C>> {
    let alphabet = e.alphabet();
    jacobian::<C>(e).map(|x| x.abelianize(alphabet).expect("entries lie in the alphabet"))
}

/// `ψ(M)`: apply the substitution `ψ` to every entry.
pub fn substitute_entries<C: Coefficient>(
    psi: &EndoMap,
    m: &Matrix<GroupRingElement<C>>,
) -> Matrix<GroupRingElement<C>> {
    m.map(|x| x.map_words(|w| psi.apply(w)))
}

/// Recovers `φ` from `J(φ)` using `Σ_j D_j(w)(g_j - 1) = w - 1`.
pub fn recover_images<C: Coefficient>(
    alphabet: &Alphabet,
    j: &Matrix<GroupRingElement<C>>,
) -> Result<EndoMap> {
    if j.size() != alphabet.rank() {
        return Err(Error::ArityMismatch {
            expected: alphabet.rank(),
            got: j.size(),
        });
    }
    let gens: Vec<_> = alphabet.generators().collect();
    let mut images = Vec::with_capacity(j.size());
    for (i, row) in j.rows().iter().enumerate() {
        let not_row = || Error::NotADerivativeRow { row: i + 1 };
        let mut sum = GroupRingElement::<C>::one();
        for (g, entry) in gens.iter().zip(row) {
            entry.check_alphabet(alphabet)?;
            sum = &sum + &(entry * &generator_minus_one(Word::generator(*g)));
        }
        let w = sum.as_word().ok_or_else(not_row)?.clone();
        let img = GroupRingElement::word(w.clone());
        if gens.iter().zip(row).any(|(&g, entry)| derive(g, &img) != *entry) {
            return Err(not_row());
        }
        images.push(w);
    }
    EndoMap::from_images(*alphabet, images)
}

/// A class in `PGL_n(Z[t, t^-1])`, stored by its canonical representative:
/// the minimum `t`-degree over all entries is 0 and the first nonzero entry
/// (row-major) has positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveClass<C> {
    rep: Matrix<LaurentPoly<C>>,
}

impl<C: Coefficient> ProjectiveClass<C> {
    pub fn new(m: Matrix<LaurentPoly<C>>) -> Result<Self> {
        if m.entries().any(|p| p.num_vars() > 1) {
            return Err(Error::Domain(
                "projective classes are defined over Z[t, t^-1] only".into(),
            ));
        }
        Ok(ProjectiveClass {
            rep: canonicalize(m),
        })
    }

    pub fn identity(n: usize) -> Self {
        ProjectiveClass {
            rep: Matrix::identity(n),
        }
    }

    pub fn representative(&self) -> &Matrix<LaurentPoly<C>> {
        &self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.rep.is_identity()
    }

    pub fn mul(&self, other: &ProjectiveClass<C>) -> Self {
        ProjectiveClass {
            rep: canonicalize(self.rep.mul(&other.rep)),
        }
    }
}

impl<C: Coefficient> fmt::Display for ProjectiveClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["t".to_string()];
        f.write_str("[")?;
        for (i, r) in self.rep.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let cells: Vec<String> = r.iter().map(|p| p.display_with(&names).to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

fn canonicalize<C: Coefficient>(m: Matrix<LaurentPoly<C>>) -> Matrix<LaurentPoly<C>> {
    let Some(min) = m.entries().filter_map(|p| p.min_degree(0)).min() else {
        return m;
    };
    let shift = Exponents::unit_vector(0, -min);
    let shifted = m.map(|p| p.shift(&shift));
    let first = shifted.entries().find(|p| !p.is_zero()).expect("nonzero matrix");
    if first.leading_coefficient().is_some_and(|c| c.is_negative()) {
        shifted.map(|p| -p)
    } else {
        shifted
    }
}

/// True iff `a = ±t^k · b` for some integer `k`.
pub fn proj_equal<C: Coefficient>(a: &Matrix<LaurentPoly<C>>, b: &Matrix<LaurentPoly<C>>) -> bool {
    a.size() == b.size() && canonicalize(a.clone()) == canonicalize(b.clone())
}

/// Evaluation `Λ_{2+m} → Z[t, t^-1]` killing everything except `b_kappa`.
pub fn nu_evaluation(m: u32, kappa: u32) -> EvaluationMap {
    EvaluationMap::single_variable(2 + m as usize, 1 + kappa as usize)
}

/// The evaluated `x`-block of the Bachmuth matrix, before passing to the
/// projective class.
pub fn nu_matrix<C: Coefficient>(t: &ACTransform, kappa: u32) -> Result<Matrix<LaurentPoly<C>>> {
    let alphabet = t.alphabet();
    if alphabet.r != 2 {
        return Err(Error::Domain(format!("nu needs r = 2, got r = {}", alphabet.r)));
    }
    if !(1..=alphabet.s).contains(&kappa) {
        return Err(Error::Domain(format!(
            "kappa = {kappa} outside 1..={}",
            alphabet.s
        )));
    }
    let full = bachmuth_jacobian::<C>(&t.to_endo());
    for i in 2..full.size() {
        for j in 0..full.size() {
            let expected = if i == j { LaurentPoly::one() } else { LaurentPoly::zero() };
            if *full.get(i, j) != expected {
                return Err(Error::Domain(format!(
                    "row {} of the Bachmuth matrix is not a unit row",
                    i + 1
                )));
            }
        }
    }
    full.top_left(2).evaluate(&nu_evaluation(alphabet.s, kappa))
}

/// `nu(T)` in `PGL_2(Z[t, t^-1])`, with `b_kappa ↦ t` and all other
/// variables sent to 1.
pub fn nu<C: Coefficient>(t: &ACTransform, kappa: u32) -> Result<ProjectiveClass<C>> {
    ProjectiveClass::new(nu_matrix(t, kappa)?)
}

/// `η̄(φ)` for `φ` on three generators: the Bachmuth matrix evaluated at
/// `a_1, a_2 ↦ 1`, `a_3 ↦ t`, restricted to its leading 2×2 block.
pub fn eta_bar<C: Coefficient>(e: &EndoMap) -> Result<Matrix<LaurentPoly<C>>> {
    if e.alphabet().rank() != 3 {
        return Err(Error::Domain("eta-bar is defined on rank 3".into()));
    }
    let eta = EvaluationMap::single_variable(3, 2);
    bachmuth_jacobian::<C>(e).evaluate(&eta).map(|m| m.top_left(2))
}
