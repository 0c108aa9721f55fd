//! Seeded random generators for words, ring elements, transforms and
//! endomorphisms. Used by the property tests, the acceptance suite and the
//! CLI; every function takes the RNG explicitly so runs are reproducible.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::acmoves::{ACTransform, EndoMap, Move};
use crate::error::Result;
use crate::groupring::GroupRingElement;
use crate::scalar::Coefficient;
use crate::words::{Alphabet, Generator, Letter, Word};

pub fn random_letter<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> Letter {
    let g = alphabet.generator_at(rng.gen_range(0..alphabet.rank()));
    Letter {
        generator: g,
        inverse: rng.gen(),
    }
}

/// Product of `len` uniform letters, then reduced (so possibly shorter).
pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, len: usize) -> Word {
    Word::from_letters((0..len).map(|_| random_letter(rng, alphabet)))
}

/// A reduced word of exactly `len` letters.
pub fn random_reduced_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng, alphabet);
        if letters.last().is_some_and(|&p| p.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    Word::from_letters(letters)
}

/// Up to `max_terms` terms, words of length at most `max_len`, coefficients
/// in `-max_coeff..=max_coeff`.
pub fn random_element<C: Coefficient, R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    max_terms: usize,
    max_len: usize,
    max_coeff: i64,
) -> GroupRingElement<C> {
    let n = rng.gen_range(0..=max_terms);
    GroupRingElement::from_terms((0..n).map(|_| {
        let len = rng.gen_range(0..=max_len);
        let c = rng.gen_range(-max_coeff..=max_coeff);
        (random_word(rng, alphabet, len), C::from_int(c))
    }))
}

/// A uniformly chosen AC1–AC4 move (AC4 only when `s ≥ 1`, AC1/AC2 only
/// when `r ≥ 2`), inverted with probability 1/2.
pub fn random_move<R: Rng>(rng: &mut R, alphabet: &Alphabet) -> Move {
    let r = alphabet.r;
    let mut kinds = vec![2u8];
    if r >= 2 {
        kinds.extend([0, 1]);
    }
    if alphabet.s >= 1 {
        kinds.push(3);
    }
    let i = rng.gen_range(1..=r);
    let other = |rng: &mut R| loop {
        let j = rng.gen_range(1..=r);
        if j != i {
            break j;
        }
    };
    let m = match *kinds.choose(rng).expect("nonempty") {
        0 => Move::ac1(i, other(rng)),
        1 => Move::ac2(i, other(rng)),
        2 => Move::ac3(i),
        _ => Move::ac4(i, rng.gen_range(1..=alphabet.s)),
    };
    if rng.gen() {
        m.inverse()
    } else {
        m
    }
}

pub fn random_transform<R: Rng>(rng: &mut R, alphabet: Alphabet, len: usize) -> ACTransform {
    let moves = (0..len).map(|_| random_move(rng, &alphabet)).collect();
    ACTransform::new(alphabet, moves).expect("sampled moves are valid")
}

/// A nonempty freely reduced word in `AC4(1,1)..AC4(1,m)` and their inverses.
pub fn random_xi_word<R: Rng>(rng: &mut R, alphabet: Alphabet, len: usize) -> Result<ACTransform> {
    let mut moves: Vec<Move> = Vec::with_capacity(len);
    while moves.len() < len.max(1) {
        let mut m = Move::ac4(1, rng.gen_range(1..=alphabet.s));
        if rng.gen() {
            m = m.inverse();
        }
        if moves.last().is_some_and(|p| *p == m.inverse()) {
            continue;
        }
        moves.push(m);
    }
    ACTransform::new(alphabet, moves)
}

/// Composite of `len` random Nielsen automorphisms `ρ`, `λ`, `ι` and
/// conjugations `ξ`, over all generators of the alphabet.
pub fn random_nielsen_endo<R: Rng>(rng: &mut R, alphabet: Alphabet, len: usize) -> EndoMap {
    let gens: Vec<Generator> = alphabet.generators().collect();
    let mut e = EndoMap::identity(alphabet);
    for _ in 0..len {
        let g = *gens.choose(rng).expect("nonempty alphabet");
        let step = if gens.len() == 1 {
            EndoMap::iota(alphabet, g)
        } else {
            let h = loop {
                let h = *gens.choose(rng).expect("nonempty alphabet");
                if h != g {
                    break h;
                }
            };
            match rng.gen_range(0..4) {
                0 => EndoMap::rho(alphabet, g, h),
                1 => EndoMap::lambda(alphabet, g, h),
                2 => EndoMap::iota(alphabet, g),
                _ => EndoMap::xi(alphabet, g, h),
            }
        };
        e = e.then(&step.expect("generators lie in the alphabet")).expect("same alphabet");
    }
    e
}

/// A transform that is the identity by construction: starting from the
/// empty sequence, `pieces` times insert some `T; T⁻¹` at a random position.
pub fn random_identity_transform<R: Rng>(
    rng: &mut R,
    alphabet: Alphabet,
    pieces: usize,
    piece_len: usize,
) -> ACTransform {
    let mut moves: Vec<Move> = Vec::new();
    for _ in 0..pieces {
        let len = rng.gen_range(1..=piece_len.max(1));
        let t = random_transform(rng, alphabet, len);
        let at = rng.gen_range(0..=moves.len());
        let block: Vec<Move> = t
            .moves()
            .iter()
            .cloned()
            .chain(t.inverse().moves().iter().cloned())
            .collect();
        moves.splice(at..at, block);
    }
    ACTransform::new(alphabet, moves).expect("sampled moves are valid")
}
