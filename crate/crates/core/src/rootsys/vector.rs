use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, q, vec_as_strings, Q};

/// A vector of exact rationals in a fixed ambient Euclidean space.
///
/// Roots, chamber points and normal directions all use this type. Operators
/// panic on mismatched dimensions; [`RootVec::inner`] reports them as errors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootVec {
    coords: Vec<Q>,
}

impl RootVec {
    pub fn new(coords: Vec<Q>) -> Self {
        RootVec { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RootVec::new(coords.iter().map(|&c| q(c)).collect())
    }

    /// Half-integer vector given by its doubled coordinates.
    pub fn from_halves(doubled: &[i64]) -> Self {
        RootVec::new(doubled.iter().map(|&c| Q::new(c, 2)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        RootVec::new(vec![Q::zero(); dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = RootVec::zero(dim);
        v.coords[i] = q(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn inner(&self, other: &RootVec) -> Result<Q> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(self.dot(other))
    }

    pub(crate) fn dot(&self, other: &RootVec) -> Q {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Q::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm_sq(&self) -> Q {
        self.dot(self)
    }

    pub fn scale(&self, c: Q) -> RootVec {
        RootVec::new(self.coords.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: Q, other: &RootVec) -> RootVec {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        RootVec::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + c * b)
                .collect(),
        )
    }

    /// Reflection in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &RootVec) -> RootVec {
        let c = q(2) * self.dot(alpha) / alpha.norm_sq();
        self.add_scaled(-c, alpha)
    }

    /// Positive multiple test: `self = c * other` for some rational `c > 0`.
    pub fn is_positive_multiple_of(&self, other: &RootVec) -> bool {
        let ip = self.dot(other);
        ip.is_positive() && ip * ip == self.norm_sq() * other.norm_sq()
    }

    /// Proportional up to any nonzero scalar.
    pub fn is_parallel_to(&self, other: &RootVec) -> bool {
        let ip = self.dot(other);
        !ip.is_zero() && ip * ip == self.norm_sq() * other.norm_sq()
    }

    /// Parses `1,-1/2,0` with optional surrounding parentheses or brackets.
    pub fn parse(s: &str) -> Result<RootVec> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Err(Error::malformed(s, "empty vector"));
        }
        let coords = t
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::malformed(s, e.to_string()))?;
        Ok(RootVec::new(coords))
    }
}

impl Add for &RootVec {
    type Output = RootVec;
    fn add(self, rhs: &RootVec) -> RootVec {
        self.add_scaled(q(1), rhs)
    }
}

impl Sub for &RootVec {
    type Output = RootVec;
    fn sub(self, rhs: &RootVec) -> RootVec {
        self.add_scaled(q(-1), rhs)
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec::new(self.coords.iter().map(|x| -x).collect())
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RootVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        vec_as_strings::serialize(&self.coords, s)
    }
}

impl<'de> Deserialize<'de> for RootVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        vec_as_strings::deserialize(d).map(RootVec::new)
    }
}
