//! Exact time arithmetic.
//!
//! Every duration, start time and objective value is a [`Rational`]. Display
//! follows `num/den`, collapsing integers to plain `num`.

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn ratio(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"3"`, `"-2"`, `"1/2"` or a finite decimal such as `"0.01"`.
pub fn parse(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if let Some((num, den)) = text.split_once('/') {
        let num: i128 = num.trim().parse().map_err(|_| bad())?;
        let den: i128 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(ratio(num, den));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 30 {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: i128 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let scale = 10i128.pow(frac.len() as u32);
        let frac: i128 = frac.parse().map_err(|_| bad())?;
        let magnitude = whole.abs() * scale + frac;
        return Ok(ratio(if negative { -magnitude } else { magnitude }, scale));
    }
    text.parse::<i128>().map(int).map_err(|_| bad())
}

/// Lossy conversion for human-facing output only.
pub fn to_f64(value: &Rational) -> f64 {
    *value.numer() as f64 / *value.denom() as f64
}

/// On-disk form of a rational: either a bare integer or `[numerator, denominator]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalRepr {
    Int(i64),
    Pair([i64; 2]),
}

impl RationalRepr {
    pub fn to_rational(self) -> Result<Rational> {
        match self {
            RationalRepr::Int(v) => Ok(int(v as i128)),
            RationalRepr::Pair([_, 0]) => Err(Error::Parse("zero denominator".into())),
            RationalRepr::Pair([n, d]) => Ok(ratio(n as i128, d as i128)),
        }
    }

    /// Always the pair form, reduced, so files are canonical.
    pub fn from_rational(value: &Rational) -> Result<Self> {
        let narrow = |v: i128| {
            i64::try_from(v).map_err(|_| Error::Parse(format!("{value} does not fit the file format")))
        };
        Ok(RationalRepr::Pair([narrow(*value.numer())?, narrow(*value.denom())?]))
    }
}
