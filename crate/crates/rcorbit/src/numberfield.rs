//! Arithmetic in Q[t]/(p(t)) in the power basis 1, ρ, …, ρ^(n−1).
//!
//! The modulus is given by its non-leading coefficients `[p1, .., pn]` of
//! t^n + p1 t^(n−1) + … + pn. Products reduce with ρ^n = −Σ p_k ρ^(n−k).
//! The multiplication-by-a matrix has column j equal to a·ρ^j, so its
//! determinant is the norm and solving M(x)·m = x′ recovers a multiplier.
//!
//! The generic helpers work over any [`Scalar`]; with [`MultiPoly`] entries
//! they give the bilinear composition maps and norm forms symbolically.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactpoly::{common_denominator, MultiPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus must have degree at least 2, got {0}")]
    Degree(usize),
    #[error("modulus has the rational root {0}")]
    RationalRoot(Rational),
    #[error("expected {expected} coordinates, got {got}")]
    Dim { expected: usize, got: usize },
    #[error("multiplier undefined: degenerate point (norm 0)")]
    Degenerate,
    #[error("symbolic norm limited to degree 6, got {0}")]
    DegreeCap(usize),
}

type Result<T> = std::result::Result<T, FieldError>;

/// Minimal ring interface shared by numbers and polynomials.
pub trait Scalar: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero_val(&self) -> bool;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero_like(self)
    }
    fn one_like(&self) -> Self {
        self.constant_like(Rational::one())
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
}

/// Power-basis product of `a` and `b` reduced modulo t^n + p1 t^(n−1) + … + pn.
pub fn reduce_product<T: Scalar>(a: &[T], b: &[T], modulus: &[T]) -> Vec<T> {
    let n = modulus.len();
    assert!(a.len() == n && b.len() == n, "dimension mismatch");
    let z = a[0].zero_like();
    let mut c = vec![z; 2 * n - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero_val() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero_val() {
                c[i + j] = c[i + j].add(&x.mul(y));
            }
        }
    }
    for k in (n..2 * n - 1).rev() {
        if c[k].is_zero_val() {
            continue;
        }
        let top = c[k].clone();
        for (s, p) in modulus.iter().enumerate() {
            // ρ^k = ρ^(k−n)·ρ^n contributes −p_{s+1}·ρ^(k−1−s)
            c[k - 1 - s] = c[k - 1 - s].sub(&p.mul(&top));
        }
        c[k] = top.zero_like();
    }
    c.truncate(n);
    c
}

/// Matrix of multiplication by `a`: column j holds a·ρ^j.
pub fn mul_matrix<T: Scalar>(a: &[T], modulus: &[T]) -> Vec<Vec<T>> {
    let n = modulus.len();
    let z = a[0].zero_like();
    let o = a[0].one_like();
    let cols: Vec<Vec<T>> = (0..n)
        .map(|j| {
            let mut e = vec![z.clone(); n];
            e[j] = o.clone();
            reduce_product(a, &e, modulus)
        })
        .collect();
    (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
}

fn minor<T: Clone>(m: &[Vec<T>], row: usize, col: usize) -> Vec<Vec<T>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, v)| v.clone())
                .collect()
        })
        .collect()
}

/// Cofactor expansion along the first row; fine for n ≤ 6.
pub fn determinant<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    match n {
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = m[0][0].zero_like();
            for j in 0..n {
                if m[0][j].is_zero_val() {
                    continue;
                }
                let t = m[0][j].mul(&determinant(&minor(m, 0, j)));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}

/// Classical adjugate, so that adj(M)·M = det(M)·I.
pub fn adjugate<T: Scalar>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = determinant(&minor(m, j, i));
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        c.zero_like().sub(&c)
                    }
                })
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) determinant over Q.
pub fn det_bareiss(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = Rational::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Solves A·x = b by Gaussian elimination; `None` when A is singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    for k in 0..n {
        let piv = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, piv);
        let inv = Rational::one() / &m[k][k];
        for v in m[k].iter_mut() {
            *v *= &inv;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k].clone();
                for j in k..=n {
                    let t = &f * &m[k][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    modulus: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    coords: Vec<Rational>,
}

impl RingElement {
    pub fn new(coords: Vec<Rational>) -> Self {
        RingElement { coords }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RingElement::new(v.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n];
        c[0] = Rational::one();
        RingElement::new(c)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }
}

fn rational_root(coeffs: &[Rational]) -> Option<Rational> {
    // integer polynomial c0 t^n + … + cn with the same roots
    let d = common_denominator(coeffs);
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &d).to_integer()).collect();
    let lead = &ints[0];
    let cons = ints.last().unwrap();
    if cons.is_zero() {
        return Some(Rational::zero());
    }
    let divisors = |v: &BigInt| -> Option<Vec<u64>> {
        let v = v.abs().to_u64().filter(|&v| v <= 1_000_000_000_000)?;
        let mut out = Vec::new();
        let mut k = 1u64;
        while k * k <= v {
            if v % k == 0 {
                out.push(k);
                out.push(v / k);
            }
            k += 1;
        }
        Some(out)
    };
    // oversized coefficients: skip the screen rather than stall
    let (ps, qs) = (divisors(cons)?, divisors(lead)?);
    for p in &ps {
        for q in &qs {
            for s in [1i64, -1] {
                let r = Rational::new(BigInt::from(*p) * s, BigInt::from(*q));
                let v = ints
                    .iter()
                    .fold(Rational::zero(), |acc, c| acc * &r + Rational::from_integer(c.clone()));
                if v.is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}

impl FieldSpec {
    /// Field modulus; rejects polynomials with a rational root.
    pub fn new(modulus: Vec<Rational>) -> Result<Self> {
        let f = Self::algebra(modulus)?;
        let mut full = vec![Rational::one()];
        full.extend(f.modulus.iter().cloned());
        if let Some(r) = rational_root(&full) {
            return Err(FieldError::RationalRoot(r));
        }
        Ok(f)
    }

    /// Quotient algebra without the irreducibility screen. Norms stay
    /// multiplicative, which is all the composition identity needs.
    pub fn algebra(modulus: Vec<Rational>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(FieldError::Degree(modulus.len()));
        }
        Ok(FieldSpec { modulus })
    }

    pub fn from_ints(p: &[i64]) -> Result<Self> {
        Self::new(p.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn degree(&self) -> usize {
        self.modulus.len()
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn has_rational_root(&self) -> bool {
        let mut full = vec![Rational::one()];
        full.extend(self.modulus.iter().cloned());
        rational_root(&full).is_some()
    }

    fn check(&self, a: &RingElement) -> Result<()> {
        if a.coords.len() == self.degree() {
            Ok(())
        } else {
            Err(FieldError::Dim {
                expected: self.degree(),
                got: a.coords.len(),
            })
        }
    }

    pub fn mul_matrix(&self, a: &RingElement) -> Result<Vec<Vec<Rational>>> {
        self.check(a)?;
        Ok(mul_matrix(&a.coords, &self.modulus))
    }

    /// Modulus coefficients as constants of a polynomial ring.
    pub fn modulus_in(&self, ring: &MultiPoly) -> Vec<MultiPoly> {
        self.modulus.iter().map(|c| ring.constant_like(c.clone())).collect()
    }
}

pub fn ring_mul(a: &RingElement, b: &RingElement, f: &FieldSpec) -> Result<RingElement> {
    f.check(a)?;
    f.check(b)?;
    Ok(RingElement::new(reduce_product(&a.coords, &b.coords, &f.modulus)))
}

pub fn norm(a: &RingElement, f: &FieldSpec) -> Result<Rational> {
    Ok(det_bareiss(&f.mul_matrix(a)?))
}

/// The unique m with m·x = x′.
pub fn recover_multiplier(x: &RingElement, xprime: &RingElement, f: &FieldSpec) -> Result<RingElement> {
    f.check(xprime)?;
    let m = f.mul_matrix(x)?;
    solve(&m, &xprime.coords)
        .map(RingElement::new)
        .ok_or(FieldError::Degenerate)
}

/// Norm of the generic element Σ v_i ρ^(i−1) as a form in `vars`.
pub fn norm_form_symbolic<S: AsRef<str>>(f: &FieldSpec, vars: &[S]) -> Result<MultiPoly> {
    let n = f.degree();
    if n > 6 {
        return Err(FieldError::DegreeCap(n));
    }
    if vars.len() != n {
        return Err(FieldError::Dim {
            expected: n,
            got: vars.len(),
        });
    }
    let g = MultiPoly::gens(vars);
    let modulus = f.modulus_in(&g[0]);
    Ok(determinant(&mul_matrix(&g, &modulus)))
}
