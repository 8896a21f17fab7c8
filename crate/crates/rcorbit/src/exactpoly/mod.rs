//! Exact rationals and sparse multivariate polynomials over Q.
//!
//! Terms live in a `BTreeMap` keyed by dense exponent vectors. The key order is
//! graded lexicographic with the first declared variable highest, so the last
//! entry of the map is the leading term.

mod binary;
mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_rational::BigRational as Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVar(String),
    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("divisor is not monic in `{0}`")]
    NotMonic(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("division leaves a nonzero remainder")]
    Remainder,
    #[error("not a binary quadratic form: {0}")]
    NotBinaryQuadratic(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, PolyError>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `a`, `-a` or `a/b` (decimal integers, b nonzero).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(vals: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    vals.into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Exponent vector, one entry per ambient variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

fn to_vars<S: AsRef<str>>(vars: &[S]) -> Arc<[String]> {
    vars.iter().map(|s| s.as_ref().to_string()).collect()
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MultiPoly {
            vars: to_vars(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: Rational) -> Self {
        Self::zero(vars).constant_like(c)
    }

    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        Self::zero(vars).var_like(name)
    }

    /// All variables of a ring, in order.
    pub fn gens<S: AsRef<str>>(vars: &[S]) -> Vec<Self> {
        let z = Self::zero(vars);
        (0..vars.len()).map(|i| z.gen_like(i)).collect()
    }

    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(PolyError::Arity {
                    expected: p.vars.len(),
                    got: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    /// Parses an expression over `vars`; see the `parse` module for the grammar.
    pub fn parse<S: AsRef<str>>(expr: &str, vars: &[S]) -> Result<Self> {
        parse::parse(expr, &to_vars(vars), &[])
    }

    /// Like [`MultiPoly::parse`] but with named numeric constants substituted on the fly.
    pub fn parse_with<S: AsRef<str>>(
        expr: &str,
        vars: &[S],
        consts: &[(&str, Rational)],
    ) -> Result<Self> {
        parse::parse(expr, &to_vars(vars), consts)
    }

    pub fn zero_like(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_like(&self, c: Rational) -> Self {
        let mut p = self.zero_like();
        p.add_term(Monomial::one(self.vars.len()), c);
        p
    }

    pub fn var_like(&self, name: &str) -> Result<Self> {
        let i = self.var_index(name)?;
        Ok(self.gen_like(i))
    }

    pub(crate) fn gen_like(&self, i: usize) -> Self {
        let mut e = vec![0; self.vars.len()];
        e[i] = 1;
        let mut p = self.zero_like();
        p.terms.insert(Monomial(e), Rational::one());
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVar(name.to_string()))
    }

    /// Terms in increasing graded-lex order; `.rev()` gives leading-first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VarMismatch(
                self.vars.to_vec(),
                other.vars.to_vec(),
            ))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), -c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut r = self.zero_like();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                r.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.constant_like(Rational::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(PolyError::Arity {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut pows: Vec<Vec<Rational>> = point.iter().map(|v| vec![Rational::one(), v.clone()]).collect();
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut pows[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &point[i];
                    cache.push(next);
                }
                t *= &cache[e as usize];
            }
            sum += t;
        }
        Ok(sum)
    }

    pub fn eval_ints(&self, point: &[BigInt]) -> Result<Rational> {
        let p: Vec<Rational> = point.iter().cloned().map(Rational::from_integer).collect();
        self.eval(&p)
    }

    /// Replaces every variable by the corresponding image (positional).
    /// All images must share one variable list, which becomes the result's.
    pub fn compose(&self, images: &[MultiPoly]) -> Result<Self> {
        if images.len() != self.vars.len() {
            return Err(PolyError::Arity {
                expected: self.vars.len(),
                got: images.len(),
            });
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        for im in images {
            first.check_same(im)?;
        }
        let mut cache: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|im| vec![first.constant_like(Rational::one()), im.clone()])
            .collect();
        let mut out = first.zero_like();
        for (m, c) in &self.terms {
            let mut t = first.constant_like(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e as usize {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e as usize];
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Substitutes the named variables. Unassigned variables map to the
    /// same-named variable of the target ring, which must exist.
    pub fn substitute(&self, assignments: &[(&str, MultiPoly)]) -> Result<Self> {
        let Some((_, first)) = assignments.first() else {
            return Ok(self.clone());
        };
        for (name, im) in assignments {
            self.var_index(name)?;
            first.check_same(im)?;
        }
        let images = self
            .vars
            .iter()
            .map(|v| match assignments.iter().find(|(n, _)| n == v) {
                Some((_, im)) => Ok(im.clone()),
                None => first.var_like(v),
            })
            .collect::<Result<Vec<_>>>()?;
        self.compose(&images)
    }

    /// Re-expresses the polynomial over another variable list; every variable
    /// actually used must appear there.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let target = to_vars(vars);
        let idx: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut out = MultiPoly {
            vars: target.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match idx[i] {
                    Some(j) => e[j] += k,
                    None => return Err(PolyError::UnknownVar(self.vars[i].clone())),
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Sets some variables to numbers and drops them from the variable list.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> Result<Self> {
        let mut fixed: Vec<Option<&Rational>> = vec![None; self.vars.len()];
        for (name, v) in values {
            fixed[self.var_index(name)?] = Some(v);
        }
        let keep: Vec<usize> = (0..self.vars.len()).filter(|&i| fixed[i].is_none()).collect();
        let kept: Vec<&str> = keep.iter().map(|&i| self.vars[i].as_str()).collect();
        let mut out = MultiPoly::zero(&kept);
        for (m, c) in &self.terms {
            let mut c = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if let (Some(v), true) = (fixed[i], e > 0) {
                    c *= num_traits::pow(v.clone(), e as usize);
                }
            }
            let e = keep.iter().map(|&i| m.0[i]).collect();
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }

    /// Division with remainder, treating both sides as univariate in `var`.
    /// The divisor's top coefficient in `var` must be the constant 1.
    pub fn div_rem_monic(&self, divisor: &Self, var: &str) -> Result<(Self, Self)> {
        self.check_same(divisor)?;
        if divisor.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        let v = self.var_index(var)?;
        let dv = divisor.degree_in(v);
        let top: Vec<(&Monomial, &Rational)> =
            divisor.terms.iter().filter(|(m, _)| m.0[v] == dv).collect();
        let monic = top.len() == 1 && top[0].1.is_one() && top[0].0.degree() == dv;
        if !monic {
            return Err(PolyError::NotMonic(var.to_string()));
        }
        let mut rem = self.clone();
        let mut quo = self.zero_like();
        loop {
            let k = rem.degree_in(v);
            if rem.is_zero() || k < dv {
                break;
            }
            let mut step = self.zero_like();
            for (m, c) in rem.terms.iter().filter(|(m, _)| m.0[v] == k) {
                let mut e = m.0.clone();
                e[v] -= dv;
                step.terms.insert(Monomial(e), c.clone());
            }
            rem = &rem - &(&step * divisor);
            quo = &quo + &step;
        }
        Ok((quo, rem))
    }

    pub fn exact_div(&self, divisor: &Self, leading_var: &str) -> Result<Self> {
        let (q, r) = self.div_rem_monic(divisor, leading_var)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::Remainder)
        }
    }

    /// Reads off (φ₀, φ₁, φ₂) from φ₀a² + φ₁ab + φ₂b².
    pub fn collect_binary_quadratic(&self, a: &str, b: &str) -> Result<(Rational, Rational, Rational)> {
        let ia = self.var_index(a)?;
        let ib = self.var_index(b)?;
        let mut out = [Rational::zero(), Rational::zero(), Rational::zero()];
        for (m, c) in &self.terms {
            let other = m
                .0
                .iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && i != ia && i != ib);
            if other {
                return Err(PolyError::NotBinaryQuadratic(format!(
                    "term {} involves variables other than {a}, {b}",
                    fmt_monomial(&self.vars, m)
                )));
            }
            if m.degree() != 2 {
                return Err(PolyError::NotBinaryQuadratic(format!(
                    "term {} has degree {}",
                    fmt_monomial(&self.vars, m),
                    m.degree()
                )));
            }
            out[m.0[ib] as usize] = c.clone();
        }
        let [p0, p1, p2] = out;
        Ok((p0, p1, p2))
    }
}

fn fmt_monomial(vars: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = m
        .0
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars[i].clone()
            } else {
                format!("{}^{}", vars[i], e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = fmt_monomial(&self.vars, m);
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else if a.is_integer() {
                write!(f, "{a}*{mono}")?;
            } else {
                write!(f, "({a})*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

// Operator forms panic on mismatched rings; use the try_ methods to recover.
macro_rules! binop {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
