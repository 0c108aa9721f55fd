//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use acgroups::groupring::{GroupRingElement, LaurentPoly};
use acgroups::magnus::Matrix;
use acgroups::words::{Generator, Letter, Word};
use acgroups::Integer;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Group-ring element as a plain map with zero entries dropped.
pub type Sparse = HashMap<Word, i64>;

fn add_into(acc: &mut Sparse, w: Word, c: i64) {
    let e = acc.entry(w.clone()).or_insert(0);
    *e += c;
    if *e == 0 {
        acc.remove(&w);
    }
}

/// `D_j` by the defining recursion `D(l·rest) = D(l) + l·D(rest)`, on the
/// raw (possibly unreduced) letter sequence.
pub fn fox_oracle(j: Generator, letters: &[Letter]) -> Sparse {
    let mut out = Sparse::new();
    let Some((&l, rest)) = letters.split_first() else {
        return out;
    };
    if l.generator == j {
        if l.inverse {
            add_into(&mut out, Word::letter(l), -1);
        } else {
            add_into(&mut out, Word::identity(), 1);
        }
    }
    let lw = Word::letter(l);
    for (w, c) in fox_oracle(j, rest) {
        add_into(&mut out, &lw * &w, c);
    }
    out
}

pub fn to_sparse(e: &GroupRingElement<Integer>) -> Sparse {
    e.terms()
        .map(|(w, c)| (w.clone(), i64::try_from(c.clone()).expect("small coefficient")))
        .collect()
}

/// Reduction by a stack, the textbook algorithm.
pub fn stack_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &l in letters {
        if out.last().is_some_and(|&p| p.generator == l.generator && p.inverse != l.inverse) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub type Q = BigRational;
pub type Q2 = [[Q; 2]; 2];

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q2(a: i64, b: i64, c: i64, d: i64) -> Q2 {
    [[q(a), q(b)], [q(c), q(d)]]
}

pub fn qmul(a: &Q2, b: &Q2) -> Q2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn qinv(a: &Q2) -> Q2 {
    let det = &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0];
    assert!(!det.is_zero(), "singular");
    [
        [&a[1][1] / &det, -&a[0][1] / &det],
        [-&a[1][0] / &det, &a[0][0] / &det],
    ]
}

pub fn qpow(a: &Q2, k: i64) -> Q2 {
    let base = if k < 0 { qinv(a) } else { a.clone() };
    let mut out = q2(1, 0, 0, 1);
    for _ in 0..k.unsigned_abs() {
        out = qmul(&out, &base);
    }
    out
}

pub fn qcomm(a: &Q2, b: &Q2) -> Q2 {
    qmul(&qmul(&qmul(a, b), &qinv(a)), &qinv(b))
}

/// True iff `m = λ·I` with `λ = ±t0^n` for some integer `n`.
pub fn is_unit_scalar(m: &Q2, t0: i64) -> bool {
    if !m[0][1].is_zero() || !m[1][0].is_zero() || m[0][0] != m[1][1] {
        return false;
    }
    let mut lam = m[0][0].abs();
    if lam.is_zero() {
        return false;
    }
    let t = q(t0.abs());
    while lam > Q::one() {
        lam = &lam / &t;
    }
    while lam < Q::one() {
        lam = &lam * &t;
    }
    lam == Q::one()
}

/// True iff `a = λ·b` with `λ = ±t0^n`.
pub fn proj_equal_at(a: &Q2, b: &Q2, t0: i64) -> bool {
    is_unit_scalar(&qmul(a, &qinv(b)), t0)
}

/// Evaluates a univariate Laurent polynomial at `t = t0` by summing terms.
pub fn eval_poly(p: &LaurentPoly<Integer>, t0: i64) -> Q {
    let t = q(t0);
    p.terms().fold(Q::zero(), |acc, (e, c)| {
        let k = e.get(0);
        let pow = if k >= 0 {
            num_traits::pow(t.clone(), k as usize)
        } else {
            num_traits::pow(t.recip(), (-k) as usize)
        };
        acc + pow * Q::from_integer(c.clone())
    })
}

pub fn eval_matrix(m: &Matrix<LaurentPoly<Integer>>, t0: i64) -> Q2 {
    assert_eq!(m.size(), 2);
    let e = |i, j| eval_poly(m.get(i, j), t0);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `d`, `e0`, `u` evaluated at `t0`, written out by hand.
pub fn constants_at(t0: i64) -> (Q2, Q2, Q2) {
    (q2(t0, 0, 0, 1), q2(1, 1, 0, 1), q2(1, t0 - 1, 0, 1))
}
