mod common;

use acgroups::acmoves::{ACTransform, Move};
use acgroups::magnus::nu_matrix;
use acgroups::relations::{
    check_a1m_structure, commutator_relation, conjugated_rho, q1, q2, sigma, verify_commutator_family,
    verify_q_family, verify_relation, RelationFamily,
};
use acgroups::words::{Alphabet, Generator, Word};
use acgroups::Integer;
use common::{constants_at, eval_matrix, is_unit_scalar, proj_equal_at, q, qcomm, qinv, qmul, qpow, Q, Q2};
use num_traits::Zero;

/// `nu(T)` at `t = t0`, from the recursive Fox derivative of the images
/// with `y_kappa ↦ t0` and every other letter sent to 1.
fn nu_oracle(t: &ACTransform, kappa: u32, t0: i64) -> Q2 {
    let e = t.to_endo();
    let y = Generator::y(kappa);
    let weight = |w: &Word| -> Q {
        let n = w.exponent_sum(y);
        if n >= 0 {
            num_traits::pow(q(t0), n as usize)
        } else {
            num_traits::pow(q(t0).recip(), (-n) as usize)
        }
    };
    let entry = |i: usize, j: u32| -> Q {
        let d = common::fox_oracle(Generator::x(j), e.images()[i].letters());
        d.iter().fold(Q::zero(), |acc, (w, &c)| acc + weight(w) * q(c))
    };
    [[entry(0, 1), entry(0, 2)], [entry(1, 1), entry(1, 2)]]
}

#[test]
fn q_families_are_relations() {
    for family in [RelationFamily::Q1, RelationFamily::Q2] {
        let reports = verify_q_family(family, 64).unwrap();
        assert_eq!(reports.len(), 64);
        for (k, r) in reports.iter().enumerate() {
            assert!(r.holds, "{family:?} fails at k = {}", k + 1);
            assert_eq!(r.k, Some(k as u32 + 1));
            assert!(r.witness.is_none());
        }
    }
}

#[test]
fn q_families_against_rational_products() {
    for t0 in [2, 3, -2] {
        let (d, e0, u) = constants_at(t0);
        for k in 1..=64i64 {
            let conj = qmul(&qmul(&qpow(&d, k), &e0), &qpow(&d, -k));
            let o1 = qcomm(&e0, &conj);
            assert!(is_unit_scalar(&o1, t0), "q1({k}) at {t0}");
            let ud = qmul(&u, &d);
            let uid = qmul(&qinv(&u), &d);
            let o2 = qmul(&qmul(&qmul(&qpow(&d, k), &qpow(&ud, -k)), &qpow(&d, k)), &qpow(&uid, -k));
            assert!(is_unit_scalar(&o2, t0), "q2({k}) at {t0}");
            assert_eq!(eval_matrix(&q1(k as u32), t0), o1);
            assert_eq!(eval_matrix(&q2(k as u32), t0), o2);
        }
    }
}

#[test]
fn rational_oracle_detects_non_relations() {
    let (d, e0, _) = constants_at(2);
    assert!(!is_unit_scalar(&e0, 2));
    assert!(is_unit_scalar(&qmul(&d, &qinv(&d)), 2));
    assert!(!is_unit_scalar(&d, 2));
}

#[test]
fn sigma_matches_oracle() {
    for (m, kappa) in [(1, 1), (3, 1), (3, 3), (2, 2)] {
        let s = sigma(m, kappa).unwrap();
        let t = conjugated_rho(1, m, kappa).unwrap();
        for t0 in [2, 5] {
            let target = [[q(1), num_traits::pow(q(t0), 1).recip()], [q(0), q(1)]];
            let expected = if s == -1 { target } else { [[q(1), q(t0)], [q(0), q(1)]] };
            assert!(proj_equal_at(&nu_oracle(&t, kappa, t0), &expected, t0));
        }
        assert_eq!(s, -1);
    }
}

#[test]
fn commutator_family_holds() {
    for m in [1u32, 3] {
        for kappa in [1, m.min(3)] {
            let s = sigma(m, kappa).unwrap();
            let reports = verify_commutator_family(16, m, kappa).unwrap();
            for (idx, r) in reports.iter().enumerate() {
                let k = idx as u32 + 1;
                assert!(r.holds, "k={k} m={m} kappa={kappa}: {r:?}");
                assert_eq!((r.action_holds, r.matrix_holds, r.pattern_holds), (Some(true), Some(true), Some(true)));
                let t = commutator_relation(k, m, kappa).unwrap();
                assert_eq!(t.len() as u32, 4 * k + 4);
                let (d, e0, _) = constants_at(3);
                let a = ACTransform::new(*t.alphabet(), vec![Move::ac2(1, 2)]).unwrap();
                let b = conjugated_rho(k, m, kappa).unwrap();
                let sk = s * k as i64;
                let expected_b = qmul(&qmul(&qpow(&d, sk), &e0), &qpow(&d, -sk));
                assert!(proj_equal_at(&nu_oracle(&a, kappa, 3), &e0, 3));
                assert!(proj_equal_at(&nu_oracle(&b, kappa, 3), &expected_b, 3));
                assert!(is_unit_scalar(&nu_oracle(&t, kappa, 3), 3));
            }
        }
    }
}

#[test]
fn relation_check_reports_each_level() {
    let a = Alphabet::new(2, 1).unwrap();
    // a non-relation fails at both levels
    let r = verify_relation(&ACTransform::parse("AC1(1,2)", a).unwrap(), 1);
    assert_eq!((r.action_holds, r.matrix_holds), (Some(false), Some(false)));
    assert!(!r.holds && r.witness.is_some());
    let r = verify_relation(&ACTransform::parse("AC4(1,1); AC4(1,1)^-1", a).unwrap(), 1);
    assert!(r.holds && r.witness.is_none());
    // outside A_{2,m} only the action is checked
    let r = verify_relation(&ACTransform::parse("AC3(1); AC3(1)", Alphabet::new(3, 0).unwrap()).unwrap(), 1);
    assert_eq!(r.matrix_holds, None);
    assert!(r.holds);
}

#[test]
fn nu_oracle_matches_library_on_random_transforms() {
    let mut rng = common::rng(61);
    let a = Alphabet::new(2, 3).unwrap();
    for _ in 0..100 {
        let t = acgroups::sample::random_transform(&mut rng, a, 8);
        for kappa in 1..=3 {
            let m = nu_matrix::<Integer>(&t, kappa).unwrap();
            assert_eq!(eval_matrix(&m, 2), nu_oracle(&t, kappa, 2));
        }
    }
}

#[test]
fn a1m_structure() {
    let mut rng = common::rng(62);
    for m in 1..=4 {
        let r = check_a1m_structure(m, 100, &mut rng).unwrap();
        assert!(r.holds, "{r:?}");
    }
}
