//! Bounded breadth-first search for AC-trivializations of balanced pairs in
//! `F_2 = <x1, x2>`.
//!
//! States are canonical pairs: each component cyclically reduced and minimal
//! in shortlex order (`x1 < x1^-1 < x2 < x2^-1`) among the rotations of
//! itself and its inverse, the two components sorted. Every canonicalization
//! step is itself a sequence of AC-moves (single-letter conjugations,
//! inversions, and a Nielsen swap), so a path between canonical states lifts
//! to a replayable move sequence on the original pair.
//!
//! From a canonical state `(a, b)` the search multiplies one component by a
//! cyclic rotation of the other or of its inverse: `a ← a · rot(b)^±1`. The
//! rotation is a run of single-letter conjugations, the product is one
//! `AC1` move. Left multiplications give conjugate components and therefore
//! the same canonical states, so they are not generated separately.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::acmoves::{ACTransform, GroupTuple, Move};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Family, Generator, Letter, Word};

/// Largest total length a packed state can hold.
pub const MAX_TOTAL_LENGTH: usize = 56;

type Code = u8;

fn inv(c: Code) -> Code {
    c ^ 1
}

fn push_reduced(buf: &mut Vec<Code>, c: Code) {
    if buf.last() == Some(&inv(c)) {
        buf.pop();
    } else {
        buf.push(c);
    }
}

fn inverse_codes(w: &[Code]) -> Vec<Code> {
    w.iter().rev().map(|&c| inv(c)).collect()
}

fn shortlex(a: &[Code], b: &[Code]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn letter_of(c: Code) -> Letter {
    Letter {
        generator: Generator::x(1 + (c >> 1) as u32),
        inverse: c & 1 == 1,
    }
}

fn codes_of(w: &Word) -> Result<Vec<Code>> {
    Alphabet::new(2, 0)?.check_word(w)?;
    Ok(w
        .letters()
        .iter()
        .map(|l| (((l.generator.index - 1) as u8) << 1) | l.inverse as u8)
        .collect())
}

fn word_of(w: &[Code]) -> Word {
    Word::from_letters(w.iter().map(|&c| letter_of(c)))
}

/// Bounds `(s, e)` of the cyclically reduced core `w[s..e]`.
fn cyclic_core(w: &[Code]) -> (usize, usize) {
    let (mut s, mut e) = (0, w.len());
    while e - s >= 2 && w[s] == inv(w[e - 1]) {
        s += 1;
        e -= 1;
    }
    (s, e)
}

/// Minimal rotation of a cyclically reduced word or its inverse, with the
/// choice made: `(word, inverted, rotation)`.
fn canonical_component(core: &[Code]) -> (Vec<Code>, bool, usize) {
    let n = core.len();
    if n == 0 {
        return (Vec::new(), false, 0);
    }
    let inverse = inverse_codes(core);
    let mut best: Option<(bool, usize)> = None;
    let rotation_cmp = |x: (bool, usize), y: (bool, usize)| {
        let (wx, wy) = (
            if x.0 { &inverse } else { core },
            if y.0 { &inverse } else { core },
        );
        (0..n)
            .map(|k| wx[(x.1 + k) % n].cmp(&wy[(y.1 + k) % n]))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    };
    for flag in [false, true] {
        for r in 0..n {
            if best.is_none_or(|b| rotation_cmp((flag, r), b) == Ordering::Less) {
                best = Some((flag, r));
            }
        }
    }
    let (flag, r) = best.expect("nonempty");
    let w = if flag { &inverse } else { core };
    let out = (0..n).map(|k| w[(r + k) % n]).collect();
    (out, flag, r)
}

fn canonical_word(w: &[Code]) -> Vec<Code> {
    let (s, e) = cyclic_core(w);
    canonical_component(&w[s..e]).0
}

fn sort_pair(a: Vec<Code>, b: Vec<Code>) -> (Vec<Code>, Vec<Code>) {
    if shortlex(&b, &a) == Ordering::Less {
        (b, a)
    } else {
        (a, b)
    }
}

fn pack(a: &[Code], b: &[Code]) -> u128 {
    debug_assert!(a.len() + b.len() <= MAX_TOTAL_LENGTH);
    let mut key = (a.len() as u128) | ((b.len() as u128) << 6);
    for (k, &c) in a.iter().chain(b).enumerate() {
        key |= (c as u128) << (12 + 2 * k);
    }
    key
}

fn unpack(key: u128) -> (Vec<Code>, Vec<Code>) {
    let la = (key & 63) as usize;
    let lb = ((key >> 6) & 63) as usize;
    let code = |k: usize| ((key >> (12 + 2 * k)) & 3) as Code;
    ((0..la).map(code).collect(), (la..la + lb).map(code).collect())
}

/// A canonical pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairState {
    first: Word,
    second: Word,
}

impl PairState {
    pub fn first(&self) -> &Word {
        &self.first
    }

    pub fn second(&self) -> &Word {
        &self.second
    }

    pub fn total_length(&self) -> usize {
        self.first.len() + self.second.len()
    }

    fn from_codes(a: &[Code], b: &[Code]) -> Self {
        PairState {
            first: word_of(a),
            second: word_of(b),
        }
    }

    fn codes(&self) -> (Vec<Code>, Vec<Code>) {
        (
            codes_of(&self.first).expect("canonical words lie in F2"),
            codes_of(&self.second).expect("canonical words lie in F2"),
        )
    }
}

impl fmt::Display for PairState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.first, self.second)
    }
}

/// Canonical state of a pair of words over `x1, x2`.
pub fn canonicalize(u: &Word, v: &Word) -> Result<PairState> {
    let (a, b) = sort_pair(canonical_word(&codes_of(u)?), canonical_word(&codes_of(v)?));
    Ok(PairState::from_codes(&a, &b))
}

/// Target state, the class of `(x1, x2)`.
pub fn trivial_state() -> PairState {
    PairState::from_codes(&[0], &[2])
}

/// Neighbour generation from a canonical pair, in a fixed order: target
/// slot, rotation, then sign.
fn for_each_neighbor<F: FnMut(Descriptor, Vec<Code>, Vec<Code>)>(
    a: &[Code],
    b: &[Code],
    cap: usize,
    mut f: F,
) {
    let mut prod = Vec::with_capacity(a.len() + b.len());
    for target in 0..2u8 {
        let (ui, uj) = if target == 0 { (a, b) } else { (b, a) };
        let n = uj.len();
        for rot in 0..n {
            for inverted in [false, true] {
                prod.clear();
                prod.extend_from_slice(ui);
                if inverted {
                    for k in (0..n).rev() {
                        push_reduced(&mut prod, inv(uj[(rot + k) % n]));
                    }
                } else {
                    for k in 0..n {
                        push_reduced(&mut prod, uj[(rot + k) % n]);
                    }
                }
                let (s, e) = cyclic_core(&prod);
                if e - s + n > cap {
                    continue;
                }
                let new = canonical_component(&prod[s..e]).0;
                let (p, q) = sort_pair(new, uj.to_vec());
                f(
                    Descriptor {
                        target,
                        rot: rot as u8,
                        inverted,
                    },
                    p,
                    q,
                );
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Descriptor {
    target: u8,
    rot: u8,
    inverted: bool,
}

fn neighbor_keys(key: u128, cap: usize) -> Vec<u128> {
    let (a, b) = unpack(key);
    let mut out = Vec::with_capacity(4 * (a.len() + b.len()));
    for_each_neighbor(&a, &b, cap, |_, p, q| out.push(pack(&p, &q)));
    out.sort_unstable();
    out.dedup();
    out.retain(|&k| k != key);
    out
}

/// Canonical states one step away from `st`, with total length at most
/// `max_total_length`, sorted.
pub fn neighbors(st: &PairState, max_total_length: usize) -> Vec<PairState> {
    let (a, b) = st.codes();
    let cap = max_total_length.min(MAX_TOTAL_LENGTH);
    let mut out = BTreeSet::new();
    for_each_neighbor(&a, &b, cap, |_, p, q| {
        out.insert(PairState::from_codes(&p, &q));
    });
    out.remove(st);
    out.into_iter().collect()
}

fn conj_move(slot: usize, c: Code) -> Move {
    Move::conj(slot as u32 + 1, Word::letter(letter_of(c)))
}

/// Brings a concrete pair to its exact canonical representative, recording
/// the moves used.
fn canonicalize_moves(pair: &mut [Vec<Code>; 2], moves: &mut Vec<Move>) {
    for i in 0..2 {
        let w = std::mem::take(&mut pair[i]);
        let (s, e) = cyclic_core(&w);
        for &c in &w[..s] {
            moves.push(conj_move(i, inv(c)));
        }
        let core = &w[s..e];
        let (best, flag, rot) = canonical_component(core);
        let cur = if flag {
            moves.push(Move::ac3(i as u32 + 1));
            inverse_codes(core)
        } else {
            core.to_vec()
        };
        for &c in &cur[..rot] {
            moves.push(conj_move(i, inv(c)));
        }
        pair[i] = best;
    }
    if shortlex(&pair[1], &pair[0]) == Ordering::Less {
        moves.extend([
            Move::ac1(1, 2),
            Move::ac1(2, 1).inverse(),
            Move::ac2(1, 2),
            Move::ac3(2),
        ]);
        pair.swap(0, 1);
    }
}

fn replay_step(pair: &mut [Vec<Code>; 2], d: Descriptor, moves: &mut Vec<Move>) {
    let i = d.target as usize;
    let j = 1 - i;
    let uj = pair[j].clone();
    for &c in &uj[..d.rot as usize] {
        moves.push(conj_move(j, inv(c)));
    }
    let n = uj.len();
    let rotated: Vec<Code> = (0..n).map(|k| uj[(d.rot as usize + k) % n]).collect();
    let factor = if d.inverted {
        moves.push(Move::ac1(i as u32 + 1, j as u32 + 1).inverse());
        inverse_codes(&rotated)
    } else {
        moves.push(Move::ac1(i as u32 + 1, j as u32 + 1));
        rotated.clone()
    };
    for c in factor {
        push_reduced(&mut pair[i], c);
    }
    pair[j] = rotated;
    canonicalize_moves(pair, moves);
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_total_length: usize,
    pub max_nodes: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_depth: Option<u32>,
}

impl SearchBudget {
    pub fn new(max_total_length: usize, max_nodes: u64) -> Self {
        SearchBudget {
            max_total_length,
            max_nodes,
            max_depth: None,
        }
    }

    pub fn with_depth(mut self, depth: u32) -> Self {
        self.max_depth = Some(depth);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_total_length == 0 || self.max_nodes == 0 || self.max_depth == Some(0) {
            return Err(Error::Domain("search budget fields must be positive".into()));
        }
        if self.max_total_length > MAX_TOTAL_LENGTH {
            return Err(Error::Domain(format!(
                "max total length {} exceeds the supported {MAX_TOTAL_LENGTH}",
                self.max_total_length
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetHit,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub frontier_peak: usize,
    pub visited: usize,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub status: SearchStatus,
    /// Replayable moves on the original pair, when found.
    #[serde(default, skip_serializing_if = "Option::is_none", with = "path_serde")]
    pub path: Option<ACTransform>,
    /// Number of search steps between canonical states, when found.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    pub stats: SearchStats,
}

mod path_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &Option<ACTransform>, s: S) -> std::result::Result<S::Ok, S::Error> {
        match p {
            Some(t) => s.serialize_some(&t.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<ACTransform>, D::Error> {
        let text: Option<String> = Option::deserialize(d)?;
        text.map(|t| {
            ACTransform::parse(&t, Alphabet::new(2, 0).expect("valid"))
                .map_err(serde::de::Error::custom)
        })
        .transpose()
    }
}

/// Breadth-first search from `canonicalize(start)` to the class of
/// `(x1, x2)`. Frontier levels are expanded in parallel; results do not
/// depend on the number of workers.
pub fn bfs_trivialize(u: &Word, v: &Word, budget: &SearchBudget) -> Result<SearchResult> {
    bfs(u, v, budget, true)
}

/// Same as [`bfs_trivialize`] on the calling thread only.
pub fn bfs_trivialize_sequential(u: &Word, v: &Word, budget: &SearchBudget) -> Result<SearchResult> {
    bfs(u, v, budget, false)
}

fn bfs(u: &Word, v: &Word, budget: &SearchBudget, parallel: bool) -> Result<SearchResult> {
    budget.validate()?;
    let clock = Instant::now();
    let start_pair = [codes_of(u)?, codes_of(v)?];
    let (a, b) = sort_pair(canonical_word(&start_pair[0]), canonical_word(&start_pair[1]));
    if a.len() + b.len() > MAX_TOTAL_LENGTH {
        return Err(Error::Domain(format!(
            "cyclically reduced start has total length {} > {MAX_TOTAL_LENGTH}",
            a.len() + b.len()
        )));
    }
    let start = pack(&a, &b);
    let target = pack(&[0], &[2]);
    let cap = budget.max_total_length;
    let mut stats = SearchStats::default();
    let mut parent: FxHashMap<u128, u128> = FxHashMap::default();
    parent.insert(start, start);
    let mut frontier = vec![start];
    let mut depth = 0u32;
    let finish = |status, path, depth, mut stats: SearchStats, visited: usize| {
        stats.visited = visited;
        stats.elapsed_ms = clock.elapsed().as_secs_f64() * 1e3;
        Ok(SearchResult {
            status,
            path,
            depth,
            stats,
        })
    };
    if start == target {
        let path = reconstruct(start_pair, &[start]);
        return finish(SearchStatus::Found, Some(path), Some(0), stats, 1);
    }
    loop {
        stats.frontier_peak = stats.frontier_peak.max(frontier.len());
        if frontier.is_empty() {
            return finish(SearchStatus::Exhausted, None, None, stats, parent.len());
        }
        if budget.max_depth.is_some_and(|d| depth >= d) {
            return finish(SearchStatus::BudgetHit, None, None, stats, parent.len());
        }
        let remaining = budget.max_nodes - stats.nodes_expanded;
        if remaining == 0 {
            return finish(SearchStatus::BudgetHit, None, None, stats, parent.len());
        }
        let take = frontier.len().min(remaining.try_into().unwrap_or(usize::MAX));
        let level = &frontier[..take];
        let children: Vec<Vec<u128>> = if parallel {
            level.par_iter().map(|&k| neighbor_keys(k, cap)).collect()
        } else {
            level.iter().map(|&k| neighbor_keys(k, cap)).collect()
        };
        stats.nodes_expanded += take as u64;
        let mut next = Vec::new();
        for (&p, kids) in level.iter().zip(&children) {
            for &k in kids {
                if let std::collections::hash_map::Entry::Vacant(slot) = parent.entry(k) {
                    slot.insert(p);
                    if k == target {
                        let mut chain = vec![k];
                        let mut cur = k;
                        while cur != start {
                            cur = parent[&cur];
                            chain.push(cur);
                        }
                        chain.reverse();
                        let path = reconstruct(start_pair, &chain);
                        return finish(
                            SearchStatus::Found,
                            Some(path),
                            Some(depth + 1),
                            stats,
                            parent.len(),
                        );
                    }
                    next.push(k);
                }
            }
        }
        if take < frontier.len() {
            return finish(SearchStatus::BudgetHit, None, None, stats, parent.len());
        }
        frontier = next;
        depth += 1;
    }
}

fn reconstruct(start: [Vec<Code>; 2], chain: &[u128]) -> ACTransform {
    let mut moves = Vec::new();
    let mut pair = start;
    canonicalize_moves(&mut pair, &mut moves);
    for &next in &chain[1..] {
        let mut step = None;
        for_each_neighbor(&pair[0], &pair[1], MAX_TOTAL_LENGTH, |d, p, q| {
            if step.is_none() && pack(&p, &q) == next {
                step = Some(d);
            }
        });
        let d = step.expect("chain links are neighbours");
        replay_step(&mut pair, d, &mut moves);
        debug_assert_eq!(pack(&pair[0], &pair[1]), next);
    }
    ACTransform::new(Alphabet::new(2, 0).expect("valid"), moves).expect("moves are valid")
}

/// Applies a found path to the original pair.
pub fn replay(u: &Word, v: &Word, path: &ACTransform) -> Result<(Word, Word)> {
    let tuple = GroupTuple::new(Alphabet::new(2, 0)?, vec![u.clone(), v.clone()])?;
    let out = path.apply(&tuple)?.into_entries();
    Ok((out[0].clone(), out[1].clone()))
}

/// `AK(n) = (x^n y^-(n+1), x y x y^-1 x^-1 y^-1)` with `x = x1`, `y = x2`.
pub fn ak_pair(n: u32) -> Result<(Word, Word)> {
    if n < 2 {
        return Err(Error::Domain(format!("AK(n) needs n >= 2, got {n}")));
    }
    let x = Word::generator(Generator::x(1));
    let y = Word::generator(Generator::x(2));
    let u = x.pow(n as i64) * y.pow(-(n as i64 + 1));
    let v = Word::from_letters(
        [&x, &y, &x, &y.inverse(), &x.inverse(), &y.inverse()]
            .iter()
            .flat_map(|w| w.letters().to_vec()),
    );
    Ok((u, v))
}

/// Determinant of the exponent-sum matrix of a pair over `x1, x2`.
pub fn exponent_determinant(u: &Word, v: &Word) -> i64 {
    let (x, y) = (Generator::x(1), Generator::x(2));
    u.exponent_sum(x) * v.exponent_sum(y) - u.exponent_sum(y) * v.exponent_sum(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifiedPair {
    pub pair: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub status: Option<SearchStatus>,
}

/// Outcome of [`classify_small`]. Contains no timings, so it is identical
/// across runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub max_total_length: usize,
    pub budget: SearchBudget,
    pub classes: usize,
    pub excluded_by_determinant: usize,
    pub trivialized: Vec<ClassifiedPair>,
    pub unresolved: Vec<ClassifiedPair>,
}

/// Canonical components of length at most `max_len`, in shortlex order.
fn canonical_components(max_len: usize) -> Vec<Vec<Code>> {
    let mut out: BTreeSet<(usize, Vec<Code>)> = BTreeSet::new();
    out.insert((0, Vec::new()));
    let mut layer: Vec<Vec<Code>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for c in 0..4 {
                if w.last() == Some(&inv(c)) {
                    continue;
                }
                let mut x = w.clone();
                x.push(c);
                let (s, e) = cyclic_core(&x);
                if s == 0 && e == x.len() {
                    let canon = canonical_component(&x).0;
                    out.insert((canon.len(), canon));
                }
                next.push(x);
            }
        }
        layer = next;
    }
    out.into_iter().map(|(_, w)| w).collect()
}

/// Canonical pairs of total length at most `max_total_length`.
pub fn enumerate_states(max_total_length: usize) -> Vec<PairState> {
    let comps = canonical_components(max_total_length);
    let mut out = Vec::new();
    for (i, a) in comps.iter().enumerate() {
        for b in &comps[i..] {
            if a.len() + b.len() <= max_total_length {
                out.push(PairState::from_codes(a, b));
            }
        }
    }
    out
}

/// Tries every canonical class of total length at most `max_total_length`
/// whose exponent matrix has determinant ±1. Classes the search does not
/// trivialize within `budget` are listed as unresolved, nothing more.
pub fn classify_small(max_total_length: usize, budget: &SearchBudget) -> Result<ClassifyReport> {
    budget.validate()?;
    let states = enumerate_states(max_total_length);
    let candidates: Vec<&PairState> = states
        .iter()
        .filter(|s| exponent_determinant(&s.first, &s.second).abs() == 1)
        .collect();
    let results = candidates
        .par_iter()
        .map(|s| bfs_trivialize_sequential(&s.first, &s.second, budget))
        .collect::<Result<Vec<_>>>()?;
    let mut trivialized = Vec::new();
    let mut unresolved = Vec::new();
    for (s, r) in candidates.iter().zip(results) {
        if r.status == SearchStatus::Found {
            trivialized.push(ClassifiedPair {
                pair: s.to_string(),
                depth: r.depth,
                status: None,
            });
        } else {
            unresolved.push(ClassifiedPair {
                pair: s.to_string(),
                depth: None,
                status: Some(r.status),
            });
        }
    }
    Ok(ClassifyReport {
        max_total_length,
        budget: budget.clone(),
        classes: states.len(),
        excluded_by_determinant: states.len() - candidates.len(),
        trivialized,
        unresolved,
    })
}

/// A named pair from a corpus file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub pair: (Word, Word),
}

/// Parses lines `name: <word> ; <word>`; `#` starts a comment.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let alphabet = Alphabet::new(2, 0)?;
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let (name, rest) = body
            .split_once(':')
            .ok_or_else(|| Error::parse(start, "expected 'name: word ; word'"))?;
        let rest_pos = start + name.len() + 1;
        let (w1, w2) = rest
            .split_once(';')
            .ok_or_else(|| Error::parse(rest_pos, "expected two words separated by ';'"))?;
        let shift = |pos: usize| {
            move |e: Error| match e {
                Error::Parse { position, message } => Error::parse(pos + position, message),
                other => other,
            }
        };
        let u = Word::parse(w1, &alphabet).map_err(shift(rest_pos))?;
        let v = Word::parse(w2, &alphabet).map_err(shift(rest_pos + w1.len() + 1))?;
        out.push(CorpusEntry {
            name: name.trim().to_string(),
            pair: (u, v),
        });
    }
    Ok(out)
}

/// Akbulut-Kirby pairs with `x = x1`, `y = x2`, plus two trivial controls.
pub const AK_CORPUS: &str = "\
# Akbulut-Kirby presentations <x, y | x^n = y^(n+1), xyx = yxy>
ak2: x1^2 x2^-3 ; x1 x2 x1 x2^-1 x1^-1 x2^-1
ak3: x1^3 x2^-4 ; x1 x2 x1 x2^-1 x1^-1 x2^-1
ak4: x1^4 x2^-5 ; x1 x2 x1 x2^-1 x1^-1 x2^-1
ak5: x1^5 x2^-6 ; x1 x2 x1 x2^-1 x1^-1 x2^-1
# controls
trivial: x1 ; x2
product: x1 x2 ; x2
";

pub fn corpus_entry<'a>(entries: &'a [CorpusEntry], name: &str) -> Result<&'a CorpusEntry> {
    entries
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Domain(format!("no corpus entry named {name:?}")))
}

/// A random walk of up to `moves` AC-moves from `(x1, x2)` that keeps the
/// total length of the pair at most `cap`. Returns the pair and the moves.
pub fn scramble<R: Rng>(rng: &mut R, moves: usize, cap: usize) -> (Word, Word, ACTransform) {
    let alphabet = Alphabet::new(2, 0).expect("valid");
    let mut tuple = GroupTuple::basis(alphabet);
    let mut applied = Vec::new();
    for _ in 0..moves {
        for _attempt in 0..100 {
            let m = random_search_move(rng);
            let mut entries = tuple.entries().to_vec();
            m.apply(&mut entries);
            if entries.iter().map(Word::len).sum::<usize>() <= cap {
                tuple = GroupTuple::new(alphabet, entries).expect("same alphabet");
                applied.push(m);
                break;
            }
        }
    }
    let entries = tuple.into_entries();
    let t = ACTransform::new(alphabet, applied).expect("valid moves");
    (entries[0].clone(), entries[1].clone(), t)
}

fn random_search_move<R: Rng>(rng: &mut R) -> Move {
    let i = rng.gen_range(1..=2u32);
    let j = 3 - i;
    let m = match rng.gen_range(0..4) {
        0 => Move::ac1(i, j),
        1 => Move::ac2(i, j),
        2 => Move::ac3(i),
        _ => {
            let g = Generator {
                family: Family::X,
                index: rng.gen_range(1..=2),
            };
            Move::conj(i, Word::generator(g))
        }
    };
    if rng.gen() {
        m.inverse()
    } else {
        m
    }
}
