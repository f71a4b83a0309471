//! Exact rational arithmetic helpers.
//!
//! All probabilities, loads, and costs in this crate are `BigRational`s:
//! equilibrium conditions are weak inequalities, and a single rounded tie
//! would flip a verdict. `num-rational` keeps values in lowest terms with a
//! positive denominator, which is exactly the canonical form the document
//! layer serializes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact fraction used for every numeric quantity in the model.
pub type Rational = BigRational;

/// Error raised when a `num/den` string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal {0:?}")]
    BadInteger(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
    #[error("too many '/' in rational literal {0:?}")]
    TooManySlashes(String),
}

/// Builds a rational from small integer parts. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integer-valued rational.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `"num/den"` or a bare integer (`"-3"`, `"7"`).
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let mut parts = text.split('/');
    let num_part = parts.next().ok_or(RationalParseError::Empty)?;
    let num: BigInt = num_part
        .trim()
        .parse()
        .map_err(|_| RationalParseError::BadInteger(text.to_owned()))?;
    let den: BigInt = match parts.next() {
        None => BigInt::one(),
        Some(den_part) => den_part
            .trim()
            .parse()
            .map_err(|_| RationalParseError::BadInteger(text.to_owned()))?,
    };
    if parts.next().is_some() {
        return Err(RationalParseError::TooManySlashes(text.to_owned()));
    }
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator(text.to_owned()));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"num/den"` rendering (lowest terms, positive denominator,
/// denominator always present). Used by the document layer so golden files
/// are byte-stable.
pub fn format_rational(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Decimal approximation with six places, display only.
pub fn approx_decimal(value: &Rational) -> String {
    format!("{:.6}", rational_to_f64(value))
}

/// Lossy conversion for report columns and bound comparisons.
pub fn rational_to_f64(value: &Rational) -> f64 {
    let num = value.numer();
    let den = value.denom();
    // Exact for anything that fits; falls back to string parsing for
    // monster numerators, which only occur in adversarial inputs.
    match (i128::try_from(num.clone()), i128::try_from(den.clone())) {
        (Ok(n), Ok(d)) => n as f64 / d as f64,
        _ => {
            let s = format!("{num}");
            let n: f64 = s.parse().unwrap_or(if num.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            });
            let d: f64 = format!("{den}").parse().unwrap_or(f64::INFINITY);
            n / d
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction_and_integer_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert_eq!(parse_rational(" 6/8 ").unwrap(), rat(3, 4));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn canonical_format_is_lowest_terms_with_positive_denominator() {
        assert_eq!(format_rational(&rat(6, 8)), "3/4");
        assert_eq!(format_rational(&rat(3, -4)), "-3/4");
        assert_eq!(format_rational(&rat_int(5)), "5/1");
        assert_eq!(format_rational(&rat(0, 9)), "0/1");
    }

    #[test]
    fn decimal_rendering_is_stable() {
        assert_eq!(approx_decimal(&rat(12, 5)), "2.400000");
        assert_eq!(approx_decimal(&rat(173, 56)), "3.089286");
    }
}
