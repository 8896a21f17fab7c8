//! Canonical representatives of projective points.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactpoly::{common_denominator, parse_rational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PointError {
    #[error("the zero tuple is not a projective point")]
    Zero,
    #[error("cannot parse point `{0}`")]
    Parse(String),
}

/// Primitive integer tuple whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<BigInt>);

impl ProjPoint {
    pub fn normalize(raw: &[Rational]) -> Result<Self, PointError> {
        let d = common_denominator(raw);
        let ints: Vec<BigInt> = raw.iter().map(|r| (r * &d).to_integer()).collect();
        Self::from_bigints(ints)
    }

    pub fn from_bigints(mut v: Vec<BigInt>) -> Result<Self, PointError> {
        let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return Err(PointError::Zero);
        }
        let lead_neg = v.iter().find(|x| !x.is_zero()).unwrap().is_negative();
        for x in &mut v {
            *x /= &g;
            if lead_neg {
                *x = -&*x;
            }
        }
        Ok(ProjPoint(v))
    }

    pub fn from_ints(v: &[i64]) -> Result<Self, PointError> {
        Self::from_bigints(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Accepts `(a, b, ...)` or `a,b,...`; entries may be fractions.
    pub fn parse(s: &str) -> Result<Self, PointError> {
        let t = s.trim();
        let t = t.strip_prefix('(').unwrap_or(t);
        let t = t.strip_suffix(')').unwrap_or(t);
        let vals = t
            .split(',')
            .map(|x| parse_rational(x).ok_or_else(|| PointError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::normalize(&vals)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    pub fn height(&self) -> BigInt {
        self.0.iter().map(|x| x.abs()).max().unwrap_or_else(BigInt::one)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{int, rat};

    #[test]
    fn canonical_forms() {
        let p = |v: &[i64]| ProjPoint::from_ints(v).unwrap();
        assert_eq!(p(&[2, 2, 2, 2]), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[-3, 3, -1, -7]).coords(), p(&[3, -3, 1, 7]).coords());
        assert_eq!(p(&[0, -2, 4, 0]).coords(), p(&[0, 1, -2, 0]).coords());
        let q = ProjPoint::normalize(&[rat(1, 2), rat(1, 3), int(0), int(0)]).unwrap();
        assert_eq!(q, p(&[3, 2, 0, 0]));
        assert_eq!(ProjPoint::from_ints(&[0, 0]), Err(PointError::Zero));
    }

    #[test]
    fn parse_and_display() {
        let q = ProjPoint::parse("(-130, 31, 97, 196)").unwrap();
        assert_eq!(q.to_string(), "(130, -31, -97, -196)");
        assert_eq!(ProjPoint::parse("1/2,1/3").unwrap().to_string(), "(3, 2)");
        assert!(ProjPoint::parse("(1,x,2)").is_err());
        assert_eq!(q.height(), BigInt::from(196));
    }
}
