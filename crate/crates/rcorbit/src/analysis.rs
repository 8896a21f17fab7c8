//! Brute-force oracles: bounded-height point search, invariant-point census
//! and orbit classification.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{common_denominator, MultiPoly, Rational};
use crate::orbit::{Op, Orbit};
use crate::point::ProjPoint;
use crate::surface4::SurfaceSpec;
use crate::varieties::SystemSpec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub height_bound: u64,
    pub points: Vec<ProjPoint>,
    pub pairs: Vec<(ProjPoint, ProjPoint)>,
    pub unpaired: Vec<ProjPoint>,
    /// Partners that were added although their height exceeds the bound.
    pub beyond_bound: Vec<ProjPoint>,
}

/// Integer-coefficient copy of a form, evaluated in i128 with a BigInt
/// fallback on overflow.
struct IntForm {
    terms: Vec<(Vec<u32>, i128)>,
    exact: MultiPoly,
}

impl IntForm {
    fn new(f: &MultiPoly) -> Self {
        let d = common_denominator(f.terms().map(|(_, c)| c));
        let terms = f
            .terms()
            .map(|(m, c)| {
                let v = (c * Rational::from_integer(d.clone())).to_integer();
                (m.exponents().to_vec(), v.to_i128())
            })
            .collect::<Vec<_>>();
        let ok = terms.iter().all(|(_, c)| c.is_some());
        IntForm {
            terms: if ok {
                terms.into_iter().map(|(e, c)| (e, c.unwrap())).collect()
            } else {
                Vec::new()
            },
            exact: f.clone(),
        }
    }

    fn fast(&self, x: &[i64]) -> Option<bool> {
        if self.terms.is_empty() && !self.exact.is_zero() {
            return None;
        }
        let mut s: i128 = 0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (&xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t = t.checked_mul(xi as i128)?;
                }
            }
            s = s.checked_add(t)?;
        }
        Some(s == 0)
    }

    fn vanishes(&self, x: &[i64]) -> bool {
        self.fast(x).unwrap_or_else(|| {
            let b: Vec<BigInt> = x.iter().map(|&v| v.into()).collect();
            self.exact.eval_ints(&b).map(|v| v.is_zero()).unwrap_or(false)
        })
    }
}

fn next_tuple(x: &mut [i64], h: i64) -> bool {
    for v in x.iter_mut().rev() {
        if *v < h {
            *v += 1;
            return true;
        }
        *v = -h;
    }
    false
}

fn canonical(x: &[i64]) -> bool {
    match x.iter().find(|v| **v != 0) {
        Some(v) => *v > 0 && x.iter().fold(0i64, |g, v| g.gcd(v)) == 1,
        None => false,
    }
}

fn sort_points(v: &mut [ProjPoint]) {
    v.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
}

/// Every primitive solution of all `forms` and `constraints` with
/// max |coordinate| ≤ `h`, ordered by height then coordinates.
pub fn height_search(forms: &[MultiPoly], constraints: &[MultiPoly], h: u64) -> Result<SearchReport> {
    let all: Vec<&MultiPoly> = forms.iter().chain(constraints).collect();
    let Some(first) = all.first() else {
        return Err(Error::InvalidSpec("height search needs at least one form".into()));
    };
    let k = first.nvars();
    if all.iter().any(|f| f.vars() != first.vars()) {
        return Err(Error::InvalidSpec("forms must share one variable list".into()));
    }
    let hb = i64::try_from(h).map_err(|_| Error::InvalidSpec("height bound too large".into()))?;
    // cheap linear constraints first
    let mut ints: Vec<IntForm> = constraints.iter().map(IntForm::new).collect();
    ints.extend(forms.iter().map(IntForm::new));
    let mut points = Vec::new();
    if hb > 0 {
        let mut x = vec![-hb; k];
        loop {
            if ints.iter().all(|f| f.vanishes(&x)) && canonical(&x) {
                points.push(ProjPoint::from_ints(&x)?);
            }
            if !next_tuple(&mut x, hb) {
                break;
            }
        }
    }
    sort_points(&mut points);
    Ok(SearchReport {
        height_bound: h,
        unpaired: points.clone(),
        points,
        pairs: Vec::new(),
        beyond_bound: Vec::new(),
    })
}

/// (x2, x3, x4) ↦ (x2, x3 + x4, −x4) on points with x1 = 0.
pub fn invariant_pairing(p: &ProjPoint) -> Result<ProjPoint> {
    let c = p.to_rationals();
    if c.len() != 4 {
        return Err(Error::InvalidSpec("pairing acts on four coordinates".into()));
    }
    Ok(ProjPoint::normalize(&[
        c[0].clone(),
        c[1].clone(),
        &c[2] + &c[3],
        -c[3].clone(),
    ])?)
}

/// The x1 = 0 section of a surface form, in (x2, x3, x4).
pub fn invariant_curve(spec: &SurfaceSpec) -> Result<MultiPoly> {
    Ok(spec.form().specialize(&[("x1", Rational::zero())])?)
}

/// Invariant points of a surface whose reflection negates x1: solutions with
/// x1 = 0, x2 ≠ 0 and (x3, x4) ≠ (0, 0) up to height `h`, paired off by
/// [`invariant_pairing`]. A partner above the bound is still a solution; it
/// is added (and listed in `beyond_bound`) so that pairing stays total.
pub fn invariant_census(spec: &SurfaceSpec, h: u64) -> Result<SearchReport> {
    let curve = invariant_curve(spec)?;
    let found = height_search(&[curve], &[], h)?;
    let mut set: BTreeSet<ProjPoint> = BTreeSet::new();
    for p in &found.points {
        let c = p.coords();
        if c[0].is_zero() || (c[1].is_zero() && c[2].is_zero()) {
            continue;
        }
        let mut full = vec![BigInt::zero()];
        full.extend(c.iter().cloned());
        let q = ProjPoint::from_bigints(full)?;
        if !spec.is_invariant(&q)? || !spec.verify_point(&q) {
            return Err(Error::Invariant(format!("{q} should be an invariant point")));
        }
        set.insert(q);
    }
    let mut beyond = Vec::new();
    for p in set.clone() {
        let q = invariant_pairing(&p)?;
        if !set.contains(&q) {
            if !spec.verify_point(&q) {
                return Err(Error::Invariant(format!("partner {q} of {p} is not on the surface")));
            }
            set.insert(q.clone());
            beyond.push(q);
        }
    }
    let mut points: Vec<ProjPoint> = set.into_iter().collect();
    sort_points(&mut points);
    let mut pairs = Vec::new();
    let mut unpaired = Vec::new();
    for p in &points {
        let q = invariant_pairing(p)?;
        if &q == p {
            unpaired.push(p.clone());
        } else if p < &q {
            pairs.push((p.clone(), q));
        }
    }
    sort_points(&mut beyond);
    Ok(SearchReport {
        height_bound: h,
        points,
        pairs,
        unpaired,
        beyond_bound: beyond,
    })
}

/// Rational zeros (a/c, b/c) of a polynomial in two variables with
/// |a|, |b| ≤ bound and 1 ≤ c ≤ bound, found by homogenizing.
pub fn bounded_rational_zeros(poly: &MultiPoly, bound: u64) -> Result<Vec<[Rational; 2]>> {
    if poly.nvars() != 2 {
        return Err(Error::InvalidSpec("expected a polynomial in two variables".into()));
    }
    let d = poly.total_degree().unwrap_or(0);
    let v = ["a", "b", "c"];
    let mut hom = MultiPoly::zero(&v);
    for (m, c) in poly.terms() {
        let e = m.exponents();
        let mut t = MultiPoly::constant(&v, c.clone());
        t = t * MultiPoly::var(&v, "a")?.pow(e[0]);
        t = t * MultiPoly::var(&v, "b")?.pow(e[1]);
        t = t * MultiPoly::var(&v, "c")?.pow(d - e[0] - e[1]);
        hom = hom + t;
    }
    let f = IntForm::new(&hom);
    let b = i64::try_from(bound).map_err(|_| Error::InvalidSpec("bound too large".into()))?;
    let mut out = Vec::new();
    for c in 1..=b {
        for a in -b..=b {
            for bb in -b..=b {
                if [a, bb, c].iter().fold(0i64, |g, v| g.gcd(v)) != 1 {
                    continue;
                }
                if f.vanishes(&[a, bb, c]) {
                    out.push([Rational::new(a.into(), c.into()), Rational::new(bb.into(), c.into())]);
                }
            }
        }
    }
    Ok(out)
}

/// Small rational zeros of the discriminant polynomial d(m1, m2); none
/// means no self-conjugate point with parameters of that size. m = (0, 0)
/// is skipped: it never comes from a point on the surface.
pub fn self_conjugate_search(spec: &SurfaceSpec, bound: u64) -> Result<Vec<[Rational; 2]>> {
    let mut z = bounded_rational_zeros(&spec.discriminant_poly(), bound)?;
    z.retain(|[a, b]| !(a.is_zero() && b.is_zero()));
    Ok(z)
}

/// Anything that generates RC/CR orbits.
pub trait OrbitEngine {
    fn orbit(&self, seed: &ProjPoint, op: Op, steps: usize) -> Result<Orbit>;
}

impl OrbitEngine for SurfaceSpec {
    fn orbit(&self, seed: &ProjPoint, op: Op, steps: usize) -> Result<Orbit> {
        self.generate_sequence(seed, op, steps)
    }
}

impl OrbitEngine for SystemSpec {
    fn orbit(&self, seed: &ProjPoint, op: Op, steps: usize) -> Result<Orbit> {
        self.generate_sequence(seed, op, steps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitClass {
    /// Least m with (op)^m(P) back on an earlier point.
    Finite(usize),
    BudgetExceeded,
    Halted(String),
}

pub fn orbit_census<E: OrbitEngine + ?Sized>(
    engine: &E,
    seeds: &[ProjPoint],
    op: Op,
    max_steps: usize,
) -> Result<Vec<(ProjPoint, OrbitClass)>> {
    seeds
        .iter()
        .map(|s| {
            let o = engine.orbit(s, op, max_steps)?;
            let class = match (o.period, o.stopped) {
                (Some(k), _) => OrbitClass::Finite(k),
                (None, Some(why)) => OrbitClass::Halted(why),
                (None, None) => OrbitClass::BudgetExceeded,
            };
            Ok((s.clone(), class))
        })
        .collect()
}

/// Largest absolute coordinate as a decimal digit count; handy for reports.
pub fn digits(p: &ProjPoint) -> usize {
    p.height().abs().to_string().len()
}
