//! Exact rationals and their text form.
//!
//! Rationals render in lowest terms as `num/den`, integers without a slash.

use num_rational::Rational64;

use crate::error::{Error, Result};

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Parses `3`, `-1/2`, `+4/6` (reduced on construction).
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = |m: &str| Error::malformed(s, m);
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: i64 = num
        .strip_prefix('+')
        .unwrap_or(num)
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let den: i64 = den
        .parse()
        .map_err(|_| bad("denominator is not an integer"))?;
    if den == 0 {
        return Err(bad("zero denominator"));
    }
    Ok(Q::new(num, den))
}

/// Serde adapter storing a rational as its canonical string.
pub mod as_string {
    use super::{parse_rational, Q};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

pub mod vec_as_strings {
    use super::{parse_rational, Q};
    use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).map_err(D::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse_rational("4/6").unwrap(), qr(2, 3));
        assert_eq!(parse_rational(" -3 ").unwrap(), q(-3));
        assert_eq!(parse_rational("+1/2").unwrap(), qr(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn renders_lowest_terms() {
        assert_eq!(qr(6, 4).to_string(), "3/2");
        assert_eq!(qr(-8, 4).to_string(), "-2");
        assert_eq!(q(0).to_string(), "0");
    }
}
