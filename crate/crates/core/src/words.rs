//! Freely reduced words over the two-family alphabet `x1..xr, y1..ys`.
//!
//! Every [`Word`] is kept reduced at all times, so equality of group
//! elements is plain sequence equality.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Generator family: acting generators `x` or conjugator generators `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    X,
    Y,
}

impl Family {
    pub fn symbol(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
        }
    }
}

/// A free generator, `x_i` or `y_k`, with a 1-based index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub family: Family,
    pub index: u32,
}

impl Generator {
    pub const fn x(index: u32) -> Self {
        Generator {
            family: Family::X,
            index,
        }
    }

    pub const fn y(index: u32) -> Self {
        Generator {
            family: Family::Y,
            index,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let family = match t.chars().next() {
            Some('x') => Family::X,
            Some('y') => Family::Y,
            _ => return Err(Error::parse(0, format!("expected generator, found {t:?}"))),
        };
        let index: u32 = t[1..]
            .parse()
            .map_err(|_| Error::parse(1, format!("bad generator index in {t:?}")))?;
        if index == 0 {
            return Err(Error::parse(1, "generator indices start at 1"));
        }
        Ok(Generator { family, index })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.symbol(), self.index)
    }
}

/// A generator or its inverse.
///
/// The derived order is `x1 < x1^-1 < x2 < ... < y1 < y1^-1 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: Generator, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Ranks of the two generator families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    pub r: u32,
    pub s: u32,
}

impl Alphabet {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidAlphabet("need r >= 1".into()));
        }
        Ok(Alphabet { r, s })
    }

    pub fn rank(&self) -> usize {
        (self.r + self.s) as usize
    }

    pub fn contains(&self, g: Generator) -> bool {
        g.index >= 1
            && match g.family {
                Family::X => g.index <= self.r,
                Family::Y => g.index <= self.s,
            }
    }

    /// Column position of `g`: x-generators first, then y-generators.
    pub fn position(&self, g: Generator) -> Option<usize> {
        if !self.contains(g) {
            return None;
        }
        Some(match g.family {
            Family::X => (g.index - 1) as usize,
            Family::Y => (self.r + g.index - 1) as usize,
        })
    }

    pub fn generator_at(&self, pos: usize) -> Generator {
        let pos = pos as u32;
        if pos < self.r {
            Generator::x(pos + 1)
        } else {
            Generator::y(pos - self.r + 1)
        }
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.rank()).map(|p| self.generator_at(p))
    }

    pub fn check_generator(&self, g: Generator) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange {
                generator: g,
                alphabet: *self,
            })
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.letters().iter().try_for_each(|l| self.check_generator(l.generator))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, s={})", self.r, self.s)
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: Generator) -> Self {
        Word {
            letters: vec![Letter::new(g, false)],
        }
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: vec![l] }
    }

    /// Reduces an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            push_reducing(&mut stack, l);
        }
        Word { letters: stack }
    }

    /// Caller guarantees `letters` is already reduced.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|p| !p[0].cancels(p[1])));
        Word { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `by · self · by⁻¹`.
    pub fn conjugate(&self, by: &Word) -> Word {
        &(by * self) * &by.inverse()
    }

    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.generator == g)
            .map(|l| if l.inverse { -1 } else { 1 })
            .sum()
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) if self.letters.len() > 1 => !a.cancels(*b),
            _ => true,
        }
    }

    /// Splits `self = h · c · h⁻¹` with `c` cyclically reduced.
    pub fn cyclic_decomposition(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].cancels(self.letters[n - 1 - k]) {
            k += 1;
        }
        (
            Word::from_reduced(self.letters[..k].to_vec()),
            Word::from_reduced(self.letters[k..n - k].to_vec()),
        )
    }

    /// Image under the endomorphism sending each generator `g` to `image(g)`.
    pub fn substitute<F>(&self, mut image: F) -> Word
    where
        F: FnMut(Generator) -> Word,
    {
        let mut stack = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            let img = image(l.generator);
            if l.inverse {
                for m in img.letters.iter().rev() {
                    push_reducing(&mut stack, m.inv());
                }
            } else {
                for &m in &img.letters {
                    push_reducing(&mut stack, m);
                }
            }
        }
        Word { letters: stack }
    }

    /// Largest `x`-index and largest `y`-index appearing (0 if none).
    pub fn max_indices(&self) -> (u32, u32) {
        self.letters.iter().fold((0, 0), |(mx, my), l| match l.generator.family {
            Family::X => (mx.max(l.generator.index), my),
            Family::Y => (mx, my.max(l.generator.index)),
        })
    }

    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Word> {
        let (word, generators) = parse_word_at(text, 0)?;
        for (_, g) in generators {
            alphabet.check_generator(g)?;
        }
        Ok(word)
    }

    /// Parses without alphabet bounds.
    pub fn parse_free(text: &str) -> Result<Word> {
        parse_word_at(text, 0).map(|(w, _)| w)
    }
}

fn push_reducing(stack: &mut Vec<Letter>, l: Letter) {
    if stack.last().is_some_and(|top| top.cancels(l)) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        let a = &self.letters;
        let b = &rhs.letters;
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k].cancels(b[k]) {
            k += 1;
        }
        let mut letters = Vec::with_capacity(a.len() + b.len() - 2 * k);
        letters.extend_from_slice(&a[..a.len() - k]);
        letters.extend_from_slice(&b[k..]);
        Word { letters }
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i + 1;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let exp = if l.inverse { -run } else { run };
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "{}", l.generator)?;
            } else {
                write!(f, "{}^{}", l.generator, exp)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Parses a word whose text starts at byte `offset` of some larger input.
/// Returns the word and, for error reporting, the token positions.
fn parse_word_at(text: &str, offset: usize) -> Result<(Word, Vec<(usize, Generator)>)> {
    let mut letters = Vec::new();
    let mut positions = Vec::new();
    for (start, token) in tokens(text) {
        let pos = offset + start;
        if token == "1" {
            continue;
        }
        let (gen_part, exp) = match token.split_once('^') {
            Some((g, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| Error::parse(pos + g.len() + 1, format!("bad exponent {e:?}")))?;
                (g, exp)
            }
            None => (token, 1),
        };
        let g = Generator::parse(gen_part).map_err(|e| match e {
            Error::Parse { position, message } => Error::parse(pos + position, message),
            other => other,
        })?;
        positions.push((pos, g));
        let l = Letter::new(g, exp < 0);
        for _ in 0..exp.unsigned_abs() {
            letters.push(l);
        }
    }
    Ok((Word::from_letters(letters), positions))
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
}

/// Parses `"(w1, w2, ...)"`.
pub fn parse_tuple(text: &str, alphabet: &Alphabet) -> Result<Vec<Word>> {
    let words = parse_tuple_free(text)?;
    for w in &words {
        alphabet.check_word(w)?;
    }
    Ok(words)
}

pub fn parse_tuple_free(text: &str) -> Result<Vec<Word>> {
    let open = text
        .find('(')
        .ok_or_else(|| Error::parse(0, "tuple must start with '('"))?;
    if !text[..open].trim().is_empty() {
        return Err(Error::parse(0, "unexpected text before '('"));
    }
    let close = text
        .rfind(')')
        .ok_or_else(|| Error::parse(text.len(), "tuple must end with ')'"))?;
    if !text[close + 1..].trim().is_empty() {
        return Err(Error::parse(close + 1, "unexpected text after ')'"));
    }
    let body = &text[open + 1..close];
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut words = Vec::new();
    let mut offset = open + 1;
    for part in body.split(',') {
        words.push(parse_word_at(part, offset)?.0);
        offset += part.len() + 1;
    }
    Ok(words)
}

pub fn format_tuple(words: &[Word]) -> String {
    let parts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Alphabet {
        Alphabet::new(3, 2).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s, &a()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(w("x1 x2^-1").len(), 2);
        assert!(w("x1 x1^-1").is_identity());
        let x2 = Letter::new(Generator::x(2), false);
        assert_eq!(w("x2^3").letters(), &[x2, x2, x2]);
        assert!(w("").is_identity());
        assert!(w("1").is_identity());
        assert!(w("x2^0").is_identity());
    }

    #[test]
    fn parse_errors_report_position() {
        let err = Word::parse("x1 z2", &a()).unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                position: 3,
                message: "expected generator, found \"z2\"".into()
            }
        );
        match Word::parse("x1 x2^q", &a()).unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 6),
            e => panic!("{e}"),
        }
        assert!(matches!(
            Word::parse("x4", &a()),
            Err(Error::GeneratorOutOfRange { .. })
        ));
        assert!(matches!(
            Word::parse("y3", &a()),
            Err(Error::GeneratorOutOfRange { .. })
        ));
        assert!(matches!(Word::parse("x0", &a()), Err(Error::Parse { .. })));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(&w("x1 x2") * &w("x2^-1 x1"), w("x1^2"));
        let u = w("x1 y2 x3^-1");
        assert!((&u * &u.inverse()).is_identity());
        assert_eq!(&w("x1") * &w("x2"), w("x1 x2"));
    }

    #[test]
    fn invert_and_conjugate() {
        assert_eq!(w("x1 x2").inverse(), w("x2^-1 x1^-1"));
        assert_eq!(w("x1").conjugate(&w("x2")), w("x2 x1 x2^-1"));
        assert_eq!(w("x1").conjugate(&w("x1")), w("x1"));
    }

    #[test]
    fn display_collapses_runs() {
        assert_eq!(w("x1 x1 x2^-1 x2^-1 y1").to_string(), "x1^2 x2^-2 y1");
        assert_eq!(Word::identity().to_string(), "1");
        let t = w("x3^-1 y2^4 x1");
        assert_eq!(w(&t.to_string()), t);
    }

    #[test]
    fn tuples() {
        let t = parse_tuple("(x1 x2, x2^-1)", &a()).unwrap();
        assert_eq!(t, vec![w("x1 x2"), w("x2^-1")]);
        assert_eq!(format_tuple(&t), "(x1 x2, x2^-1)");
        assert!(parse_tuple("x1, x2", &a()).is_err());
        match parse_tuple("(x1, x2 q1)", &a()).unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 8),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn cyclic_decomposition() {
        let u = w("x2 x1 x3 x2^-1");
        let (h, c) = u.cyclic_decomposition();
        assert_eq!(h, w("x2"));
        assert_eq!(c, w("x1 x3"));
        assert_eq!(c.conjugate(&h), u);
        let (h, c) = w("x1").cyclic_decomposition();
        assert!(h.is_identity());
        assert_eq!(c, w("x1"));
    }

    #[test]
    fn substitution_reduces() {
        let img = |g: Generator| {
            if g == Generator::x(1) {
                w("x1 x2")
            } else {
                Word::generator(g)
            }
        };
        assert_eq!(w("x1 x2^-1 x1^-1").substitute(img), w("x1 x2 x2^-1 x2^-1 x1^-1"));
        assert_eq!(w("x1^-1").substitute(img), w("x2^-1 x1^-1"));
    }
}
