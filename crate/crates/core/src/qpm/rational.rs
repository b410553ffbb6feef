use num_rational::Ratio;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

/// Exact rationals; every value in this module stays far from the `i128` range.
pub type Rat = Ratio<i128>;

pub fn rat(numer: i128, denom: i128) -> Rat {
    Rat::new(numer, denom)
}

pub fn int(value: i128) -> Rat {
    Rat::from_integer(value)
}

/// `2^{-n}`.
pub fn dyadic(n: u32) -> Rat {
    assert!(n < 120, "dyadic exponent {n} out of range");
    Rat::new(1, 1 << n)
}

/// Parses `p/q` or an integer, with optional surrounding whitespace.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let text = text.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: `{text}`"));
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let numer: i128 = numer.parse().map_err(|_| bad())?;
    let denom: i128 = denom.parse().map_err(|_| bad())?;
    if denom == 0 {
        return Err(bad());
    }
    Ok(Rat::new(numer, denom))
}

/// `p/q`, or just `p` for integers.
pub fn format_rat(value: &Rat) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub(crate) fn serialize_rat<S: serde::Serializer>(value: &Rat, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&format_rat(value))
}

pub(crate) fn serialize_rats<S: serde::Serializer>(values: &[Rat], serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_seq(values.iter().map(format_rat))
}

/// The Sorgenfrey quasi-metric: `y − x` when `y ≥ x`, otherwise 1.
pub fn sorgenfrey(x: &Rat, y: &Rat) -> Rat {
    if y >= x {
        y - x
    } else {
        Rat::one()
    }
}

pub(crate) fn require_positive(eps: &Rat) -> Result<()> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveEps(format_rat(eps)))
    }
}

pub(crate) fn abs_diff(x: &Rat, y: &Rat) -> Rat {
    (x - y).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_branches() {
        assert_eq!(sorgenfrey(&int(0), &rat(1, 2)), rat(1, 2));
        assert_eq!(sorgenfrey(&rat(1, 2), &int(0)), int(1));
        assert_eq!(sorgenfrey(&rat(3, 7), &rat(3, 7)), int(0));
    }

    #[test]
    fn parsing_round_trips() {
        for text in ["3/4", "-1/2", "5", " 10/4 "] {
            let q = parse_rat(text).unwrap();
            assert_eq!(parse_rat(&format_rat(&q)).unwrap(), q);
        }
        assert_eq!(parse_rat("10/4").unwrap(), rat(5, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("0.5").is_err());
        assert_eq!(dyadic(3), rat(1, 8));
    }
}
