//! The relation families: `Q1` and `Q2` in `PGL_2(Z[t, t^-1])`, the
//! commutator family in `A_{2,m}` together with its image under `nu`, and the
//! structure checks for `A_{1,m}`.

use num_traits::{One, Zero};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::acmoves::{is_identity_transform, ACTransform, EndoMap, Move};
use crate::error::{Error, Result};
use crate::groupring::{EvaluationMap, UnitImage};
use crate::magnus::{nu, nu_matrix, proj_equal, Matrix, ProjectiveClass};
use crate::words::Alphabet;
use crate::{Integer, ZLaurent, ZLaurentMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationFamily {
    Q1,
    Q2,
    Commutator,
    A1m,
    /// A single move sequence checked by [`verify_relation`].
    Word,
}

/// Outcome of checking one relation instance. `holds` is the conjunction of
/// the individual checks that apply; each is also reported on its own.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub family: RelationFamily,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub word: Option<String>,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub action_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matrix_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pattern_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<serde_json::Value>,
}

impl RelationReport {
    fn new(family: RelationFamily) -> Self {
        RelationReport {
            family,
            k: None,
            word: None,
            holds: true,
            action_holds: None,
            matrix_holds: None,
            pattern_holds: None,
            witness: None,
        }
    }

    fn finish(mut self) -> Self {
        self.holds = [self.action_holds, self.matrix_holds, self.pattern_holds]
            .into_iter()
            .flatten()
            .all(|b| b);
        if self.holds {
            self.witness = None;
        }
        self
    }
}

fn m2(a: ZLaurent, b: ZLaurent, c: ZLaurent, d: ZLaurent) -> ZLaurentMatrix {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// `(d, e0, u)` with `d = [[t,0],[0,1]]`, `e0 = [[1,1],[0,1]]`,
/// `u = [[1,t-1],[0,1]]`.
pub fn mat_constants() -> (ZLaurentMatrix, ZLaurentMatrix, ZLaurentMatrix) {
    let (one, zero, t) = (ZLaurent::one(), ZLaurent::zero(), ZLaurent::t_pow(1));
    let d = m2(t.clone(), zero.clone(), zero.clone(), one.clone());
    let e0 = m2(one.clone(), one.clone(), zero.clone(), one.clone());
    let u = m2(one.clone(), &t - &one, zero, one);
    (d, e0, u)
}

/// `[g, h] = g h g⁻¹ h⁻¹`.
pub fn matrix_commutator(g: &ZLaurentMatrix, h: &ZLaurentMatrix) -> Result<ZLaurentMatrix> {
    Ok(g.mul(h).mul(&g.inverse()?).mul(&h.inverse()?))
}

/// `d^k e0 d^-k`.
pub fn conjugated_e0(k: i64) -> ZLaurentMatrix {
    let (d, e0, _) = mat_constants();
    d.pow_signed(k)
        .expect("d is invertible")
        .mul(&e0)
        .mul(&d.pow_signed(-k).expect("d is invertible"))
}

/// `[e0, d^k e0 d^-k]`.
pub fn q1(k: u32) -> ZLaurentMatrix {
    let (_, e0, _) = mat_constants();
    matrix_commutator(&e0, &conjugated_e0(k as i64)).expect("unitriangular")
}

/// `d^k (ud)^-k d^k (u⁻¹d)^-k`.
pub fn q2(k: u32) -> ZLaurentMatrix {
    let (d, _, u) = mat_constants();
    let k = k as i64;
    let dk = d.pow_signed(k).expect("invertible");
    let ud = u.mul(&d);
    let uinv_d = u.inverse().expect("invertible").mul(&d);
    dk.mul(&ud.pow_signed(-k).expect("invertible"))
        .mul(&dk)
        .mul(&uinv_d.pow_signed(-k).expect("invertible"))
}

fn matrix_witness(m: &ZLaurentMatrix) -> serde_json::Value {
    crate::json::laurent_matrix_json(m, "laurent-t")
}

fn verify_matrix(family: RelationFamily, k: u32, m: ZLaurentMatrix) -> RelationReport {
    let mut report = RelationReport::new(family);
    report.k = Some(k);
    let ok = proj_equal(&m, &Matrix::identity(2));
    report.matrix_holds = Some(ok);
    if !ok {
        report.witness = Some(matrix_witness(&m));
    }
    report.finish()
}

pub fn verify_q1(k: u32) -> RelationReport {
    verify_matrix(RelationFamily::Q1, k, q1(k))
}

pub fn verify_q2(k: u32) -> RelationReport {
    verify_matrix(RelationFamily::Q2, k, q2(k))
}

/// `AC4(2,kappa)^k; AC1(1,2); AC4(2,kappa)^-k`.
pub fn conjugated_rho(k: u32, m: u32, kappa: u32) -> Result<ACTransform> {
    let alphabet = Alphabet::new(2, m)?;
    if !(1..=m).contains(&kappa) {
        return Err(Error::Domain(format!("kappa = {kappa} outside 1..={m}")));
    }
    let xi = ACTransform::new(alphabet, vec![Move::ac4(2, kappa)])?;
    let rho = ACTransform::new(alphabet, vec![Move::ac1(1, 2)])?;
    xi.power(k as i64).then(&rho)?.then(&xi.power(-(k as i64)))
}

/// The commutator `[AC2(1,2), AC4(2,kappa)^k; AC1(1,2); AC4(2,kappa)^-k]`
/// over the alphabet `(2, m)`.
pub fn commutator_relation(k: u32, m: u32, kappa: u32) -> Result<ACTransform> {
    let b = conjugated_rho(k, m, kappa)?;
    let a = ACTransform::new(*b.alphabet(), vec![Move::ac2(1, 2)])?;
    ACTransform::commutator(&a, &b)
}

/// Checks `t` at the action level and, when `t` lives in some `A_{2,m}`,
/// that its `nu`-image is the identity class.
pub fn verify_relation(t: &ACTransform, kappa: u32) -> RelationReport {
    verify_relation_in(RelationFamily::Word, t, kappa)
}

fn verify_relation_in(family: RelationFamily, t: &ACTransform, kappa: u32) -> RelationReport {
    let mut report = RelationReport::new(family);
    report.word = Some(t.to_string());
    let action = is_identity_transform(t);
    report.action_holds = Some(action);
    if !action {
        report.witness = Some(serde_json::to_value(t.to_endo()).expect("serializable"));
    }
    if let Ok(class) = nu::<Integer>(t, kappa) {
        let ok = class.is_identity();
        report.matrix_holds = Some(ok);
        if !ok && report.witness.is_none() {
            report.witness = Some(matrix_witness(class.representative()));
        }
    }
    report.finish()
}

/// The sign `σ` with `nu(AC4(2,kappa); AC1(1,2); AC4(2,kappa)^-1)` equal to
/// the class of `[[1, t^σ], [0, 1]]`, computed directly.
pub fn sigma(m: u32, kappa: u32) -> Result<i64> {
    let class = nu::<Integer>(&conjugated_rho(1, m, kappa)?, kappa)?;
    let (one, zero) = (ZLaurent::one(), ZLaurent::zero());
    for s in [1, -1] {
        let target = m2(one.clone(), ZLaurent::t_pow(s), zero.clone(), one.clone());
        if class == ProjectiveClass::new(target)? {
            return Ok(s);
        }
    }
    Err(Error::Domain(format!(
        "conjugated factor maps to {class}, not a unitriangular t-power"
    )))
}

/// Full check of one commutator instance: action level, `nu`-image trivial,
/// and the factor images `e0` and `d^{σk} e0 d^{-σk}` whose commutator is
/// the `Q1` element.
pub fn verify_commutator(k: u32, m: u32, kappa: u32, sigma: i64) -> Result<RelationReport> {
    let t = commutator_relation(k, m, kappa)?;
    let mut report = verify_relation_in(RelationFamily::Commutator, &t, kappa);
    report.k = Some(k);
    let (_, e0, _) = mat_constants();
    let a = ACTransform::new(*t.alphabet(), vec![Move::ac2(1, 2)])?;
    let b = conjugated_rho(k, m, kappa)?;
    let na = nu_matrix::<Integer>(&a, kappa)?;
    let nb = nu_matrix::<Integer>(&b, kappa)?;
    let expected_b = conjugated_e0(sigma * k as i64);
    let factors_ok = proj_equal(&na, &e0) && proj_equal(&nb, &expected_b);
    let product = matrix_commutator(&e0, &expected_b)?;
    let full = nu_matrix::<Integer>(&t, kappa)?;
    let pattern = factors_ok && proj_equal(&full, &product);
    report.pattern_holds = Some(pattern);
    if !pattern && report.witness.is_none() {
        report.witness = Some(matrix_witness(&nb));
    }
    Ok(report.finish())
}

/// `verify_q1` or `verify_q2` for `k = 1..=k_max`, in parallel.
pub fn verify_q_family(family: RelationFamily, k_max: u32) -> Result<Vec<RelationReport>> {
    let f = match family {
        RelationFamily::Q1 => verify_q1,
        RelationFamily::Q2 => verify_q2,
        _ => return Err(Error::Domain("expected Q1 or Q2".into())),
    };
    Ok((1..=k_max).into_par_iter().map(f).collect())
}

/// `verify_commutator` for `k = 1..=k_max`, with `σ` fixed once at `k = 1`.
pub fn verify_commutator_family(k_max: u32, m: u32, kappa: u32) -> Result<Vec<RelationReport>> {
    let s = sigma(m, kappa)?;
    (1..=k_max)
        .into_par_iter()
        .map(|k| verify_commutator(k, m, kappa, s))
        .collect()
}

/// Structure of `A_{1,m}`: `AC3(1)` is an involution, it commutes with every
/// `AC4(1,k)`, and `trials` random nonempty reduced words in the `AC4(1,k)`
/// act non-trivially.
pub fn check_a1m_structure<R: Rng>(m: u32, trials: usize, rng: &mut R) -> Result<RelationReport> {
    let alphabet = Alphabet::new(1, m)?;
    let mut report = RelationReport::new(RelationFamily::A1m);
    report.word = Some(format!("m={m}"));
    let iota = Move::ac3(1).to_endo(&alphabet);
    let order_two = !iota.is_identity() && iota.then(&iota)?.is_identity();
    let mut commutes = true;
    for k in 1..=m {
        let xi = Move::ac4(1, k).to_endo(&alphabet);
        if iota.then(&xi)? != xi.then(&iota)? {
            commutes = false;
            report.witness = Some(serde_json::json!({ "non_commuting": format!("AC4(1,{k})") }));
        }
    }
    report.matrix_holds = Some(order_two && commutes);
    let mut free = true;
    for _ in 0..trials {
        let len = rng.gen_range(1..=12);
        let t = crate::sample::random_xi_word(rng, alphabet, len)?;
        if t.to_endo().is_identity() {
            free = false;
            report.witness = Some(serde_json::json!({ "identity_word": t.to_string() }));
            break;
        }
    }
    report.action_holds = Some(free);
    Ok(report.finish())
}

/// True iff `a` then `b` equals `b` then `a` as endomorphisms.
pub fn endos_commute(a: &EndoMap, b: &EndoMap) -> Result<bool> {
    Ok(a.then(b)? == b.then(a)?)
}

/// Evaluates `t ↦ 1` entrywise.
pub fn at_t_equals_one(m: &ZLaurentMatrix) -> ZLaurentMatrix {
    let one = EvaluationMap::new(vec![UnitImage::one()]);
    m.evaluate(&one).expect("univariate")
}
