//! Exact ring arithmetic: the integral group ring of a free group, Laurent
//! polynomial rings, and the homomorphisms between them (augmentation,
//! abelianization, evaluation).

mod element;
mod laurent;

use std::fmt;

pub use element::{abelianize_word, generator_minus_one, GroupRingElement};
pub use laurent::{EvaluationMap, Exponents, LaurentPoly, UnitImage};

use crate::scalar::Coefficient;

/// Writes `c1*m1 + c2*m2 - ...`, omitting unit coefficients.
pub(crate) fn write_sum<'a, C, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    C: Coefficient,
    I: Iterator<Item = (&'a C, Option<String>)>,
{
    let mut first = true;
    for (c, mono) in terms {
        let negative = c.is_negative();
        let abs = if negative { -c.clone() } else { c.clone() };
        if first {
            if negative {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if negative { " - " } else { " + " })?;
        }
        first = false;
        match mono {
            None => write!(f, "{abs}")?,
            Some(m) if abs.is_one() => f.write_str(&m)?,
            Some(m) => write!(f, "{abs}*{m}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
