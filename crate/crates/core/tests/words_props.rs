mod common;

use acgroups::words::{Alphabet, Generator, Letter, Word};
use proptest::prelude::*;
use rand::Rng;

fn letter() -> impl Strategy<Value = Letter> {
    (prop_oneof![(1u32..=3).prop_map(Generator::x), (1u32..=2).prop_map(Generator::y)], any::<bool>())
        .prop_map(|(g, inv)| Letter::new(g, inv))
}

fn letters(max: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(), 0..max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn reduction_matches_stack(ls in letters(40)) {
        let w = Word::from_letters(ls.clone());
        prop_assert_eq!(w.letters(), &common::stack_reduce(&ls)[..]);
        prop_assert_eq!(Word::from_letters(w.letters().to_vec()), w);
    }

    #[test]
    fn product_length_bound(a in letters(20), b in letters(20)) {
        let (a, b) = (Word::from_letters(a), Word::from_letters(b));
        let p = &a * &b;
        prop_assert!(p.len() <= a.len() + b.len());
        let junction_cancels = match (a.letters().last(), b.letters().first()) {
            (Some(&x), Some(&y)) => x.cancels(y),
            _ => false,
        };
        prop_assert_eq!(p.len() == a.len() + b.len(), !junction_cancels);
    }

    #[test]
    fn inverse_laws(ls in letters(30)) {
        let w = Word::from_letters(ls);
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!((&w * &w.inverse()).is_empty());
        prop_assert!((&w.inverse() * &w).is_empty());
    }

    #[test]
    fn associativity(a in letters(15), b in letters(15), c in letters(15)) {
        let (a, b, c) = (Word::from_letters(a), Word::from_letters(b), Word::from_letters(c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn display_parses_back(ls in letters(30)) {
        let w = Word::from_letters(ls);
        prop_assert_eq!(Word::parse_free(&w.to_string()).unwrap(), w);
    }
}

/// Cancels adjacent inverse pairs in a random order until none remain.
fn reduce_randomly<R: Rng>(rng: &mut R, mut ls: Vec<Letter>) -> Vec<Letter> {
    loop {
        let spots: Vec<usize> = (0..ls.len().saturating_sub(1))
            .filter(|&i| ls[i].cancels(ls[i + 1]))
            .collect();
        if spots.is_empty() {
            return ls;
        }
        let i = spots[rng.gen_range(0..spots.len())];
        ls.drain(i..i + 2);
    }
}

#[test]
fn reduction_is_confluent() {
    let mut rng = common::rng(11);
    let a = Alphabet::new(2, 1).unwrap();
    for _ in 0..1000 {
        let len = rng.gen_range(0..40);
        let ls: Vec<Letter> = (0..len).map(|_| acgroups::sample::random_letter(&mut rng, &a)).collect();
        let expected = Word::from_letters(ls.clone());
        for _ in 0..3 {
            assert_eq!(reduce_randomly(&mut rng, ls.clone()), expected.letters());
        }
    }
}

#[test]
fn parse_rejects_letters_outside_alphabet() {
    let a = Alphabet::new(2, 1).unwrap();
    assert!(Word::parse("x1 y1^-1 x2^3", &a).is_ok());
    assert!(Word::parse("x3", &a).is_err());
    assert!(Word::parse("y2", &a).is_err());
    assert!(Word::parse("x1 ^", &a).is_err());
}
