//! Elementary AC-moves, move sequences, their action on tuples, and the
//! endomorphism view.
//!
//! Move sequences act on tuples left to right: the first move in the
//! sequence is applied first. [`ACTransform::to_endo`] composes the
//! per-move substitutions in the same reading order, so
//! `to_endo(T1; T2) = to_endo(T1).then(to_endo(T2))`, where `a.then(b)`
//! substitutes with `a` first and with `b` second. With this order the
//! Magnus representation is twisted-multiplicative and the projective
//! representation in [`crate::magnus`] is a homomorphism on sequences.
//!
//! The tuple image of the basis under `T` is the substitution of the
//! reversed sequence; see [`ACTransform::basis_images`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::words::{format_tuple, Alphabet, Family, Generator, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// `u_i ← u_i u_j`
    Ac1 { i: u32, j: u32 },
    /// `u_i ← u_j u_i`
    Ac2 { i: u32, j: u32 },
    /// `u_i ← u_i⁻¹`
    Ac3 { i: u32 },
    /// `u_i ← y_k u_i y_k⁻¹`
    Ac4 { i: u32, k: u32 },
    /// `u_i ← w u_i w⁻¹` for an arbitrary word; classical moves only.
    Conj { i: u32, by: Word },
}

/// An elementary move, possibly inverted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub inverted: bool,
}

impl Move {
    pub fn new(kind: MoveKind) -> Self {
        Move {
            kind,
            inverted: false,
        }
    }

    pub fn ac1(i: u32, j: u32) -> Self {
        Move::new(MoveKind::Ac1 { i, j })
    }

    pub fn ac2(i: u32, j: u32) -> Self {
        Move::new(MoveKind::Ac2 { i, j })
    }

    pub fn ac3(i: u32) -> Self {
        Move::new(MoveKind::Ac3 { i })
    }

    pub fn ac4(i: u32, k: u32) -> Self {
        Move::new(MoveKind::Ac4 { i, k })
    }

    pub fn conj(i: u32, by: Word) -> Self {
        Move::new(MoveKind::Conj { i, by })
    }

    pub fn inverse(&self) -> Self {
        match self.kind {
            MoveKind::Ac3 { .. } => self.clone(),
            _ => Move {
                kind: self.kind.clone(),
                inverted: !self.inverted,
            },
        }
    }

    pub fn inverted(mut self) -> Self {
        self = self.inverse();
        self
    }

    /// The tuple slot this move rewrites (1-based).
    pub fn target(&self) -> u32 {
        match self.kind {
            MoveKind::Ac1 { i, .. }
            | MoveKind::Ac2 { i, .. }
            | MoveKind::Ac3 { i }
            | MoveKind::Ac4 { i, .. }
            | MoveKind::Conj { i, .. } => i,
        }
    }

    pub fn is_ac4(&self) -> bool {
        matches!(self.kind, MoveKind::Ac4 { .. })
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        let r = alphabet.r;
        let in_r = |n: u32| (1..=r).contains(&n);
        let bad = |msg: String| Err(Error::InvalidMove(format!("{self}: {msg}")));
        match &self.kind {
            MoveKind::Ac1 { i, j } | MoveKind::Ac2 { i, j } => {
                if i == j {
                    return bad("indices must differ".into());
                }
                if !in_r(*i) || !in_r(*j) {
                    return bad(format!("indices must lie in 1..={r}"));
                }
            }
            MoveKind::Ac3 { i } => {
                if !in_r(*i) {
                    return bad(format!("index must lie in 1..={r}"));
                }
            }
            MoveKind::Ac4 { i, k } => {
                if !in_r(*i) {
                    return bad(format!("index must lie in 1..={r}"));
                }
                if !(1..=alphabet.s).contains(k) {
                    return bad(format!("conjugator index must lie in 1..={}", alphabet.s));
                }
            }
            MoveKind::Conj { i, by } => {
                if !in_r(*i) {
                    return bad(format!("index must lie in 1..={r}"));
                }
                alphabet.check_word(by)?;
            }
        }
        Ok(())
    }

    /// Rewrites slot `i` of `entries` in place.
    pub fn apply(&self, entries: &mut [Word]) {
        let slot = (self.target() - 1) as usize;
        let u = &entries[slot];
        let new = match &self.kind {
            MoveKind::Ac1 { j, .. } => {
                let other = &entries[(*j - 1) as usize];
                if self.inverted {
                    u * &other.inverse()
                } else {
                    u * other
                }
            }
            MoveKind::Ac2 { j, .. } => {
                let other = &entries[(*j - 1) as usize];
                if self.inverted {
                    &other.inverse() * u
                } else {
                    other * u
                }
            }
            MoveKind::Ac3 { .. } => u.inverse(),
            MoveKind::Ac4 { k, .. } => {
                let y = Word::generator(Generator::y(*k));
                if self.inverted {
                    u.conjugate(&y.inverse())
                } else {
                    u.conjugate(&y)
                }
            }
            MoveKind::Conj { by, .. } => {
                if self.inverted {
                    u.conjugate(&by.inverse())
                } else {
                    u.conjugate(by)
                }
            }
        };
        entries[slot] = new;
    }

    /// The substitution obtained by applying this move to the basis.
    pub fn to_endo(&self, alphabet: &Alphabet) -> EndoMap {
        let mut images: Vec<Word> = alphabet.generators().map(Word::generator).collect();
        self.apply(&mut images[..alphabet.r as usize]);
        EndoMap {
            alphabet: *alphabet,
            images,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MoveKind::Ac1 { i, j } => write!(f, "AC1({i},{j})")?,
            MoveKind::Ac2 { i, j } => write!(f, "AC2({i},{j})")?,
            MoveKind::Ac3 { i } => write!(f, "AC3({i})")?,
            MoveKind::Ac4 { i, k } => write!(f, "AC4({i},{k})")?,
            MoveKind::Conj { i, by } => write!(f, "C({i}, {by})")?,
        }
        if self.inverted {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// Parses `AC1(i,j); AC4(i,k)^-1; C(i, <word>)` without alphabet checks.
pub fn parse_moves(text: &str) -> Result<Vec<Move>> {
    let mut moves = Vec::new();
    let mut offset = 0;
    for part in text.split(';') {
        let start = offset + (part.len() - part.trim_start().len());
        offset += part.len() + 1;
        let token = part.trim();
        if token.is_empty() {
            continue;
        }
        moves.push(parse_move(token, start)?);
    }
    Ok(moves)
}

fn parse_move(token: &str, pos: usize) -> Result<Move> {
    let (body, inverted) = match token.strip_suffix("^-1") {
        Some(b) => (b.trim_end(), true),
        None => (token, false),
    };
    let open = body
        .find('(')
        .ok_or_else(|| Error::parse(pos, format!("expected '(' in move {token:?}")))?;
    if !body.ends_with(')') {
        return Err(Error::parse(pos + body.len(), format!("expected ')' in move {token:?}")));
    }
    let name = body[..open].trim();
    let args = &body[open + 1..body.len() - 1];
    let args_pos = pos + open + 1;
    let int = |s: &str, at: usize| -> Result<u32> {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Error::parse(at, format!("expected a positive index, found {:?}", s.trim())))
    };
    let two = |args: &str| -> Result<(u32, u32)> {
        let (a, b) = args
            .split_once(',')
            .ok_or_else(|| Error::parse(args_pos, "expected two indices"))?;
        Ok((int(a, args_pos)?, int(b, args_pos + a.len() + 1)?))
    };
    let kind = match name {
        "AC1" => {
            let (i, j) = two(args)?;
            MoveKind::Ac1 { i, j }
        }
        "AC2" => {
            let (i, j) = two(args)?;
            MoveKind::Ac2 { i, j }
        }
        "AC3" => MoveKind::Ac3 {
            i: int(args, args_pos)?,
        },
        "AC4" => {
            let (i, k) = two(args)?;
            MoveKind::Ac4 { i, k }
        }
        "C" => {
            let (a, w) = args
                .split_once(',')
                .ok_or_else(|| Error::parse(args_pos, "expected C(i, word)"))?;
            let by = Word::parse_free(w).map_err(|e| match e {
                Error::Parse { position, message } => {
                    Error::parse(args_pos + a.len() + 1 + position, message)
                }
                other => other,
            })?;
            MoveKind::Conj {
                i: int(a, args_pos)?,
                by,
            }
        }
        other => return Err(Error::parse(pos, format!("unknown move {other:?}"))),
    };
    Ok(Move { kind, inverted }.normalized())
}

impl Move {
    fn normalized(self) -> Self {
        if matches!(self.kind, MoveKind::Ac3 { .. }) {
            Move {
                kind: self.kind,
                inverted: false,
            }
        } else {
            self
        }
    }
}

/// A finite sequence of elementary moves over a fixed alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ACTransform {
    alphabet: Alphabet,
    moves: Vec<Move>,
}

impl ACTransform {
    pub fn new(alphabet: Alphabet, moves: Vec<Move>) -> Result<Self> {
        for m in &moves {
            m.validate(&alphabet)?;
        }
        Ok(ACTransform { alphabet, moves })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        ACTransform {
            alphabet,
            moves: Vec::new(),
        }
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        ACTransform::new(alphabet, parse_moves(text)?)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// True when only AC1–AC4 occur, i.e. the transform lies in `A_{r,s}`.
    pub fn is_generalized(&self) -> bool {
        !self
            .moves
            .iter()
            .any(|m| matches!(m.kind, MoveKind::Conj { .. }))
    }

    pub fn ac4_count(&self) -> usize {
        self.moves.iter().filter(|m| m.is_ac4()).count()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ACTransform) -> Result<ACTransform> {
        if self.alphabet != next.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: next.alphabet,
            });
        }
        let mut moves = self.moves.clone();
        moves.extend(next.moves.iter().cloned());
        Ok(ACTransform {
            alphabet: self.alphabet,
            moves,
        })
    }

    pub fn push(&mut self, m: Move) -> Result<()> {
        m.validate(&self.alphabet)?;
        self.moves.push(m);
        Ok(())
    }

    pub fn inverse(&self) -> ACTransform {
        ACTransform {
            alphabet: self.alphabet,
            moves: self.moves.iter().rev().map(Move::inverse).collect(),
        }
    }

    /// The same moves in reverse order, not inverted.
    pub fn reversed(&self) -> ACTransform {
        ACTransform {
            alphabet: self.alphabet,
            moves: self.moves.iter().rev().cloned().collect(),
        }
    }

    pub fn power(&self, n: i64) -> ACTransform {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut moves = Vec::new();
        for _ in 0..n.unsigned_abs() {
            moves.extend(base.moves.iter().cloned());
        }
        ACTransform {
            alphabet: self.alphabet,
            moves,
        }
    }

    /// Group commutator `a; b; a⁻¹; b⁻¹`.
    pub fn commutator(a: &ACTransform, b: &ACTransform) -> Result<ACTransform> {
        a.then(b)?.then(&a.inverse())?.then(&b.inverse())
    }

    pub fn apply(&self, tuple: &GroupTuple) -> Result<GroupTuple> {
        if tuple.alphabet != self.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: tuple.alphabet,
            });
        }
        let mut entries = tuple.entries.clone();
        for m in &self.moves {
            m.apply(&mut entries);
        }
        Ok(GroupTuple {
            alphabet: tuple.alphabet,
            entries,
        })
    }

    /// Composite substitution, first move first.
    pub fn to_endo(&self) -> EndoMap {
        let mut e = EndoMap::identity(self.alphabet);
        for m in &self.moves {
            e = e.then_unchecked(&m.to_endo(&self.alphabet));
        }
        e
    }

    /// Image of the basis tuple `(x_1, ..., x_r)` under the tuple action.
    pub fn basis_images(&self) -> Vec<Word> {
        let basis = GroupTuple::basis(self.alphabet);
        self.apply(&basis).expect("same alphabet").entries
    }

    /// Replaces every conjugator `y_k` by `x_k`, turning `AC4(i,k)` into the
    /// classical conjugation `C(i, x_k)` over the alphabet `(r, 0)`.
    pub fn substitute_conjugators(&self) -> Result<ACTransform> {
        let r = self.alphabet.r;
        let target = Alphabet::new(r, 0)?;
        let swap = |w: &Word| -> Result<Word> {
            let (_, max_y) = w.max_indices();
            if max_y > r {
                return Err(Error::InvalidMove(format!(
                    "conjugator y{max_y} has no counterpart among x1..x{r}"
                )));
            }
            Ok(w.substitute(|g| match g.family {
                Family::X => Word::generator(g),
                Family::Y => Word::generator(Generator::x(g.index)),
            }))
        };
        let moves = self
            .moves
            .iter()
            .map(|m| {
                let kind = match &m.kind {
                    MoveKind::Ac4 { i, k } => {
                        if *k > r {
                            return Err(Error::InvalidMove(format!(
                                "{m}: conjugator y{k} has no counterpart among x1..x{r}"
                            )));
                        }
                        MoveKind::Conj {
                            i: *i,
                            by: Word::generator(Generator::x(*k)),
                        }
                    }
                    MoveKind::Conj { i, by } => MoveKind::Conj {
                        i: *i,
                        by: swap(by)?,
                    },
                    other => other.clone(),
                };
                Ok(Move {
                    kind,
                    inverted: m.inverted,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ACTransform::new(target, moves)
    }
}

impl fmt::Display for ACTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moves.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join("; "))
    }
}

/// An `r`-tuple of words over an alphabet `(r, s)`; the conjugator part
/// `y_1..y_s` is implicit and fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTuple {
    alphabet: Alphabet,
    entries: Vec<Word>,
}

impl GroupTuple {
    pub fn new(alphabet: Alphabet, entries: Vec<Word>) -> Result<Self> {
        if entries.len() != alphabet.r as usize {
            return Err(Error::Domain(format!(
                "tuple has {} entries, alphabet expects {}",
                entries.len(),
                alphabet.r
            )));
        }
        for w in &entries {
            alphabet.check_word(w)?;
        }
        Ok(GroupTuple { alphabet, entries })
    }

    pub fn basis(alphabet: Alphabet) -> Self {
        GroupTuple {
            alphabet,
            entries: (1..=alphabet.r).map(|i| Word::generator(Generator::x(i))).collect(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn entries(&self) -> &[Word] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Word> {
        self.entries
    }

    /// Substitutes `x_i ↦ values[i]`, fixing every `y_k`.
    pub fn substitute(&self, values: &[Word]) -> Vec<Word> {
        self.entries
            .iter()
            .map(|w| {
                w.substitute(|g| match g.family {
                    Family::X => values[(g.index - 1) as usize].clone(),
                    Family::Y => Word::generator(g),
                })
            })
            .collect()
    }
}

impl fmt::Display for GroupTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.entries))
    }
}

/// An endomorphism of the free group on `x_1..x_r, y_1..y_s`, given by the
/// images of the generators in alphabet order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "crate::json::EndoJson", into = "crate::json::EndoJson")]
pub struct EndoMap {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl EndoMap {
    pub fn identity(alphabet: Alphabet) -> Self {
        EndoMap {
            alphabet,
            images: alphabet.generators().map(Word::generator).collect(),
        }
    }

    pub fn from_images(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.rank() {
            return Err(Error::ArityMismatch {
                expected: alphabet.rank(),
                got: images.len(),
            });
        }
        for w in &images {
            alphabet.check_word(w)?;
        }
        Ok(EndoMap { alphabet, images })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, g: Generator) -> &Word {
        let pos = self
            .alphabet
            .position(g)
            .unwrap_or_else(|| panic!("{g} outside {}", self.alphabet));
        &self.images[pos]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .zip(self.alphabet.generators())
            .all(|(w, g)| *w == Word::generator(g))
    }

    /// True when every `y_k` is fixed.
    pub fn fixes_conjugators(&self) -> bool {
        self.images
            .iter()
            .zip(self.alphabet.generators())
            .skip(self.alphabet.r as usize)
            .all(|(w, g)| *w == Word::generator(g))
    }

    /// The map sending `g` to `image` and fixing every other generator.
    pub fn elementary(alphabet: Alphabet, g: Generator, image: Word) -> Result<Self> {
        alphabet.check_generator(g)?;
        alphabet.check_word(&image)?;
        let mut e = EndoMap::identity(alphabet);
        let pos = alphabet.position(g).expect("checked");
        e.images[pos] = image;
        Ok(e)
    }

    /// `ξ_{g,h}: g ↦ h g h⁻¹`.
    pub fn xi(alphabet: Alphabet, g: Generator, h: Generator) -> Result<Self> {
        let image = Word::generator(g).conjugate(&Word::generator(h));
        EndoMap::elementary(alphabet, g, image)
    }

    /// `ρ_{g,h}: g ↦ g h`.
    pub fn rho(alphabet: Alphabet, g: Generator, h: Generator) -> Result<Self> {
        EndoMap::elementary(alphabet, g, Word::generator(g) * Word::generator(h))
    }

    /// `λ_{g,h}: g ↦ h g`.
    pub fn lambda(alphabet: Alphabet, g: Generator, h: Generator) -> Result<Self> {
        EndoMap::elementary(alphabet, g, Word::generator(h) * Word::generator(g))
    }

    /// `ι_g: g ↦ g⁻¹`.
    pub fn iota(alphabet: Alphabet, g: Generator) -> Result<Self> {
        EndoMap::elementary(alphabet, g, Word::generator(g).inverse())
    }

    /// `ρ_{g,h,k}: g ↦ g [h, k]` with `[h, k] = h k h⁻¹ k⁻¹`.
    pub fn rho_commutator(
        alphabet: Alphabet,
        g: Generator,
        h: Generator,
        k: Generator,
    ) -> Result<Self> {
        let (h, k) = (Word::generator(h), Word::generator(k));
        let comm = &(&(&h * &k) * &h.inverse()) * &k.inverse();
        EndoMap::elementary(alphabet, g, Word::generator(g) * comm)
    }

    /// Image of a word (substitute and reduce).
    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(|g| self.image(g).clone())
    }

    /// "Substitute with `self`, then with `next`": `x ↦ next(self(x))`.
    pub fn then(&self, next: &EndoMap) -> Result<EndoMap> {
        if self.alphabet != next.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet,
                right: next.alphabet,
            });
        }
        Ok(self.then_unchecked(next))
    }

    fn then_unchecked(&self, next: &EndoMap) -> EndoMap {
        EndoMap {
            alphabet: self.alphabet,
            images: self.images.iter().map(|w| next.apply(w)).collect(),
        }
    }
}

/// `composeEndo(a, b)`: substitute with `a` first, then with `b`.
pub fn compose_endo(a: &EndoMap, b: &EndoMap) -> Result<EndoMap> {
    a.then(b)
}

impl fmt::Display for EndoMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .alphabet
            .generators()
            .zip(&self.images)
            .map(|(g, w)| format!("{g} -> {w}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Entries `x_{i+1}^{2m} x_i x_{i+1}^{2m}` with cyclic indices; defined for
/// every `r ≥ 1` (for `r = 1` it is `x_1^{4m+1}`).
fn witness_entries(m: u32, r: u32) -> Vec<Word> {
    (1..=r)
        .map(|i| {
            let next = if i == r { 1 } else { i + 1 };
            let pad = Word::generator(Generator::x(next)).pow(2 * m as i64);
            &(&pad * &Word::generator(Generator::x(i))) * &pad
        })
        .collect()
}

/// The separating tuple `u_i = x_{i+1}^{2m} x_i x_{i+1}^{2m}` (indices mod r).
pub fn witness_tuple(m: u32, r: u32) -> Result<GroupTuple> {
    if r < 2 {
        return Err(Error::Domain("witness tuple needs r >= 2".into()));
    }
    let alphabet = Alphabet::new(r, 0)?;
    Ok(GroupTuple {
        alphabet,
        entries: witness_entries(m, r),
    })
}

/// True iff the transform's substitution is the identity and it fixes the
/// witness tuple built with `m` = number of AC4 moves.
pub fn is_identity_transform(t: &ACTransform) -> bool {
    if !t.to_endo().is_identity() {
        return false;
    }
    witness_fixed(t)
}

/// The witness half of [`is_identity_transform`] on its own.
pub fn witness_fixed(t: &ACTransform) -> bool {
    let m = t.ac4_count() as u32;
    let tuple = GroupTuple {
        alphabet: t.alphabet,
        entries: witness_entries(m, t.alphabet.r),
    };
    t.apply(&tuple).expect("same alphabet") == tuple
}
