//! JSON forms of the ring elements, matrices and maps.
//!
//! Group-ring elements are lists of `{word, coeff}`, Laurent polynomials
//! lists of `{exponents, coeff}`; coefficients are decimal strings so no
//! precision is lost. Matrices are `{ring, rows}`, endomorphisms
//! `{alphabet: {r, s}, images: [word]}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::acmoves::EndoMap;
use crate::error::{Error, Result};
use crate::groupring::{Exponents, GroupRingElement, LaurentPoly};
use crate::magnus::{Matrix, ProjectiveClass, RingElement};
use crate::scalar::Coefficient;
use crate::words::{Alphabet, Word};

#[derive(Serialize, Deserialize)]
struct WordTerm {
    word: String,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct MonomialTerm {
    exponents: Vec<i64>,
    coeff: String,
}

fn parse_coeff<C: Coefficient, E: serde::de::Error>(s: &str) -> std::result::Result<C, E> {
    s.parse::<C>()
        .map_err(|_| E::custom(format!("bad coefficient {s:?}")))
}

impl<C: Coefficient> Serialize for GroupRingElement<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<WordTerm> = self
            .terms()
            .map(|(w, c)| WordTerm {
                word: w.to_string(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for GroupRingElement<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<WordTerm>::deserialize(d)?;
        let parsed = terms
            .iter()
            .map(|t| {
                let w = Word::parse_free(&t.word).map_err(D::Error::custom)?;
                Ok((w, parse_coeff::<C, D::Error>(&t.coeff)?))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Ok(GroupRingElement::from_terms(parsed))
    }
}

impl<C: Coefficient> Serialize for LaurentPoly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<MonomialTerm> = self
            .terms()
            .map(|(e, c)| MonomialTerm {
                exponents: e.as_slice().to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<MonomialTerm>::deserialize(d)?;
        let parsed = terms
            .into_iter()
            .map(|t| Ok((Exponents::new(t.exponents), parse_coeff::<C, D::Error>(&t.coeff)?)))
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Ok(LaurentPoly::from_terms(parsed))
    }
}

/// A matrix together with the name of its entry ring: `groupring(n)`,
/// `laurent(n)` or `laurent-t`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TaggedMatrix<E> {
    pub ring: String,
    pub rows: Vec<Vec<E>>,
}

impl<E: RingElement> TaggedMatrix<E> {
    pub fn new(ring: impl Into<String>, m: &Matrix<E>) -> Self {
        TaggedMatrix {
            ring: ring.into(),
            rows: m.rows().to_vec(),
        }
    }

    pub fn into_matrix(self) -> Result<Matrix<E>> {
        Matrix::from_rows(self.rows)
    }
}

pub fn group_ring_tag(alphabet: &Alphabet) -> String {
    format!("groupring({})", alphabet.rank())
}

pub fn laurent_tag(vars: usize) -> String {
    format!("laurent({vars})")
}

pub const LAURENT_T: &str = "laurent-t";

pub fn laurent_matrix_json<C: Coefficient>(m: &Matrix<LaurentPoly<C>>, ring: &str) -> Value {
    serde_json::to_value(TaggedMatrix::new(ring, m)).expect("serializable")
}

impl<C: Coefficient> Serialize for ProjectiveClass<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TaggedMatrix::new(LAURENT_T, self.representative()).serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for ProjectiveClass<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let tagged = TaggedMatrix::<LaurentPoly<C>>::deserialize(d)?;
        if tagged.ring != LAURENT_T {
            return Err(D::Error::custom(format!(
                "expected ring {LAURENT_T}, found {}",
                tagged.ring
            )));
        }
        let m = tagged.into_matrix().map_err(D::Error::custom)?;
        ProjectiveClass::new(m).map_err(D::Error::custom)
    }
}

/// Wire form of [`EndoMap`].
#[derive(Serialize, Deserialize)]
pub struct EndoJson {
    alphabet: Alphabet,
    images: Vec<String>,
}

impl From<EndoMap> for EndoJson {
    fn from(e: EndoMap) -> Self {
        EndoJson {
            alphabet: *e.alphabet(),
            images: e.images().iter().map(|w| w.to_string()).collect(),
        }
    }
}

impl TryFrom<EndoJson> for EndoMap {
    type Error = Error;

    fn try_from(j: EndoJson) -> Result<EndoMap> {
        let alphabet = Alphabet::new(j.alphabet.r, j.alphabet.s)?;
        let images = j
            .images
            .iter()
            .map(|s| Word::parse(s, &alphabet))
            .collect::<Result<Vec<_>>>()?;
        EndoMap::from_images(alphabet, images)
    }
}
