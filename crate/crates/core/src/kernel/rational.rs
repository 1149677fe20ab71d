//! Exact rationals and their canonical text form.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, so zero is always `0/1`. The canonical rendering is
//! `p/q`, or just `p` when `q = 1`, with the sign on the numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `num/den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Canonical text: `p/q` or `p`, sign on the numerator.
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `p/q`, `-p/q` (an explicit `+` is also accepted).
///
/// The result is reduced, so `2/4` parses to `1/2`. Error positions are
/// 0-based byte offsets into `text`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = |position: usize, reason: &str| Error::ParseRational {
        input: text.to_string(),
        position,
        reason: reason.to_string(),
    };
    if text.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (num_text, den_text, slash) = match text.find('/') {
        Some(i) => (&text[..i], Some(&text[i + 1..]), i),
        None => (text, None, text.len()),
    };
    let numer = parse_integer(num_text, 0, true).map_err(|(p, r)| err(p, r))?;
    let denom = match den_text {
        None => BigInt::one(),
        Some(d) => parse_integer(d, slash + 1, false).map_err(|(p, r)| err(p, r))?,
    };
    if denom.is_zero() {
        return Err(err(slash + 1, "zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

fn parse_integer(
    text: &str,
    offset: usize,
    signed: bool,
) -> std::result::Result<BigInt, (usize, &'static str)> {
    let bytes = text.as_bytes();
    let mut start = 0;
    let mut negative = false;
    if signed && matches!(bytes.first(), Some(b'-') | Some(b'+')) {
        negative = bytes[0] == b'-';
        start = 1;
    }
    if start == bytes.len() {
        return Err((offset + start, "expected digits"));
    }
    if let Some(i) = bytes[start..].iter().position(|c| !c.is_ascii_digit()) {
        return Err((offset + start + i, "unexpected character"));
    }
    let magnitude: BigInt = text[start..].parse().map_err(|_| (offset, "invalid integer"))?;
    Ok(if negative { -magnitude } else { magnitude })
}

/// Parses a comma- or whitespace-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for field in text.split(',') {
        if field.trim().is_empty() && text.contains(',') {
            return Err(Error::ParseRational {
                input: text.to_string(),
                position: offset,
                reason: "empty list entry".into(),
            });
        }
        let mut inner = 0;
        for piece in field.split(char::is_whitespace) {
            if !piece.is_empty() {
                let value = parse_rational(piece).map_err(|e| match e {
                    Error::ParseRational { position, reason, .. } => Error::ParseRational {
                        input: text.to_string(),
                        position: offset + inner + position,
                        reason,
                    },
                    other => other,
                })?;
                out.push(value);
            }
            inner += piece.len() + 1;
        }
        offset += field.len() + 1;
    }
    Ok(out)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
