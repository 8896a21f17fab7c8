//! Second root of a binary quadratic given the first.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::Rational;

pub(crate) type Quadratic = (Rational, Rational, Rational);

pub(crate) fn eval_quadratic(q: &Quadratic, a1: &Rational, a2: &Rational) -> Rational {
    &q.0 * a1 * a1 + &q.1 * a1 * a2 + &q.2 * a2 * a2
}

pub(crate) fn discriminant(q: &Quadratic) -> Rational {
    &q.1 * &q.1 - Rational::from_integer(4.into()) * &q.0 * &q.2
}

/// Other projective root of φ₀s² + φ₁st + φ₂t² = 0 given the root (a1 : a2).
/// A double root comes back unchanged.
pub(crate) fn other_root(q: &Quadratic, a1: &Rational, a2: &Rational) -> Result<(Rational, Rational)> {
    let (p0, p1, p2) = q;
    if p0.is_zero() && p1.is_zero() && p2.is_zero() {
        return Err(Error::ParametricDegeneracy);
    }
    if (a1.is_zero() && a2.is_zero()) || !eval_quadratic(q, a1, a2).is_zero() {
        return Err(Error::NotARoot);
    }
    if p0.is_zero() {
        // t·(φ₁s + φ₂t): roots (1:0) and (−φ₂:φ₁)
        if p1.is_zero() {
            return Ok((Rational::one(), Rational::zero()));
        }
        return Ok(if a2.is_zero() {
            (-p2.clone(), p1.clone())
        } else {
            (Rational::one(), Rational::zero())
        });
    }
    if a1.is_zero() {
        // sum rule with one root at s = 0
        return Ok((-p1.clone(), p0.clone()));
    }
    // product rule: t·t' = φ₂/φ₀ with t = s/t
    Ok((p2 * a2, p0 * a1))
}
