//! Quartic, sextic and degree-2d surface families, and the named presets.
//!
//! The template functions take their variables and coefficients as
//! polynomials, so the same code builds a numeric surface, a surface with a
//! symbolic parameter, or the image of a surface under a substitution.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{int, MultiPoly, Rational};
use crate::point::ProjPoint;
use crate::surface4::{negate_first, Bilinear, SurfaceSpec, XVARS};

/// Q(x1, x2) = x1² + p x1x2 + q x2².
pub fn q_form(x1: &MultiPoly, x2: &MultiPoly, p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    x1 * x1 + p * x1 * x2 + q * x2 * x2
}

/// Q1 = x1x3 − q x2x4.
pub fn q1_form(x: &[MultiPoly], q: &MultiPoly) -> MultiPoly {
    &x[0] * &x[2] - q * &x[1] * &x[3]
}

/// Q2 = x1x4 + x2x3 + p x2x4.
pub fn q2_form(x: &[MultiPoly], p: &MultiPoly) -> MultiPoly {
    &x[0] * &x[3] + &x[1] * &x[2] + p * &x[1] * &x[3]
}

/// C1 = x1²x3 + q x2²x3 + pq x2²x4.
pub fn c1_form(x: &[MultiPoly], p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let x22 = &x[1] * &x[1];
    &x[0] * &x[0] * &x[2] + q * &x22 * &x[2] + p * q * &x22 * &x[3]
}

/// C2 = x1²x4 − p x2²x3 − (p² − q) x2²x4.
pub fn c2_form(x: &[MultiPoly], p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let x22 = &x[1] * &x[1];
    &x[0] * &x[0] * &x[3] - p * &x22 * &x[2] - (p * p - q) * &x22 * &x[3]
}

fn neg_first(x: &[MultiPoly]) -> Vec<MultiPoly> {
    let mut y = x.to_vec();
    y[0] = -&y[0];
    y
}

/// The general quartic F with coefficients a1..a12.
pub fn quartic_form(x: &[MultiPoly], p: &MultiPoly, q: &MultiPoly, a: &[MultiPoly]) -> MultiPoly {
    assert_eq!(a.len(), 12);
    let xn = neg_first(x);
    let qx = q_form(&x[0], &x[1], p, q);
    let qn = q_form(&xn[0], &x[1], p, q);
    let q34 = q_form(&x[2], &x[3], p, q);
    let (q1, q1n) = (q1_form(x, q), q1_form(&xn, q));
    let (q2, q2n) = (q2_form(x, p), q2_form(&xn, p));
    let tail = &a[5] * &x[0] * &x[0]
        + &a[6] * &x[1] * &x[1]
        + &a[7] * &x[1] * &x[2]
        + &a[8] * &x[1] * &x[3]
        + &a[9] * &x[2] * &x[2]
        + &a[10] * &x[2] * &x[3]
        + &a[11] * &x[3] * &x[3];
    &a[0] * &qx * &qn
        + &a[1] * &q1 * &q1n
        + &a[2] * &q2 * &q2n
        + &a[3] * (&qx * &q1n + &qn * &q1)
        + &a[4] * (&qx * &q2n + &qn * &q2)
        + tail * q34
}

/// The general sextic S with coefficients a1..a14.
pub fn sextic_form(x: &[MultiPoly], p: &MultiPoly, q: &MultiPoly, a: &[MultiPoly]) -> MultiPoly {
    assert_eq!(a.len(), 14);
    let c1 = c1_form(x, p, q);
    let c2 = c2_form(x, p, q);
    let q34 = q_form(&x[2], &x[3], p, q);
    let tail = &a[7] * &x[0] * &x[0]
        + &a[8] * &x[1] * &x[1]
        + &a[9] * &x[1] * &x[2]
        + &a[10] * &x[1] * &x[3]
        + &a[11] * &x[2] * &x[2]
        + &a[12] * &x[2] * &x[3]
        + &a[13] * &x[3] * &x[3];
    let mid = &x[1] * (&a[3] * &c1 + &a[4] * &c2) + &x[3] * (&a[5] * &c1 + &a[6] * &c2);
    &a[0] * &c1 * &c1 + &a[1] * &c1 * &c2 + &a[2] * &c2 * &c2 + &q34 * mid + tail * &q34 * &q34
}

/// G = Σ_j Q^(d−1−j)(x1,x2) Q^j(x3,x4) Q_(j+3) + (Σ_j b_j Q^(d−2−j)(x1,x2) Q^j(x3,x4))·F, with p = 0.
pub fn degree2d_form(
    x: &[MultiPoly],
    q: &MultiPoly,
    quads: &[MultiPoly],
    b: &[MultiPoly],
    a: &[MultiPoly],
) -> MultiPoly {
    let d = quads.len();
    assert!(d >= 2 && b.len() == d - 1);
    let zero = x[0].zero_like();
    let qa = q_form(&x[0], &x[1], &zero, q);
    let qb = q_form(&x[2], &x[3], &zero, q);
    let mut g = zero.clone();
    for (j, qj) in quads.iter().enumerate() {
        g = g + qa.pow((d - 1 - j) as u32) * qb.pow(j as u32) * qj;
    }
    let mut s = zero.clone();
    for (j, bj) in b.iter().enumerate() {
        s = s + bj * qa.pow((d - 2 - j) as u32) * qb.pow(j as u32);
    }
    g + s * quartic_form(x, &zero, q, a)
}

/// x3 = m1x1 + (p m1 + q m2)x2, x4 = m2x1 − m1x2.
pub fn family_maps(p: &Rational, q: &Rational) -> (Bilinear, Bilinear) {
    let (z, o) = (Rational::zero(), Rational::one());
    (
        [[o.clone(), p.clone()], [z.clone(), q.clone()]],
        [[z, -o.clone()], [o, Rational::zero()]],
    )
}

fn consts(ring: &MultiPoly, v: &[Rational]) -> Vec<MultiPoly> {
    v.iter().map(|c| ring.constant_like(c.clone())).collect()
}

fn removable_q(p: &Rational, q: &Rational) -> MultiPoly {
    let g = MultiPoly::gens(&["x1", "x2"]);
    let c = |v: &Rational| g[0].constant_like(v.clone());
    q_form(&g[0], &g[1], &c(p), &c(q))
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticFamilyParams {
    pub p: Rational,
    pub q: Rational,
    pub a: [Rational; 12],
}

#[derive(Clone, Debug, PartialEq)]
pub struct SexticFamilyParams {
    pub p: Rational,
    pub q: Rational,
    pub a: [Rational; 14],
}

/// Degree-2d family with p = 0. `quads` holds Q3..Q_(d+2) over x1..x4.
#[derive(Clone, Debug, PartialEq)]
pub struct Degree2dParams {
    pub q: Rational,
    pub quads: Vec<MultiPoly>,
    pub b: Vec<Rational>,
    pub a: [Rational; 12],
}

pub fn build_quartic_family(name: &str, params: &QuarticFamilyParams) -> Result<SurfaceSpec> {
    let x = MultiPoly::gens(&XVARS);
    let c = |v: &Rational| x[0].constant_like(v.clone());
    let form = quartic_form(&x, &c(&params.p), &c(&params.q), &consts(&x[0], &params.a));
    let (b3, b4) = family_maps(&params.p, &params.q);
    SurfaceSpec::new(name, form, b3, b4, negate_first(4), removable_q(&params.p, &params.q))
}

pub fn build_sextic_family(name: &str, params: &SexticFamilyParams) -> Result<SurfaceSpec> {
    let x = MultiPoly::gens(&XVARS);
    let c = |v: &Rational| x[0].constant_like(v.clone());
    let form = sextic_form(&x, &c(&params.p), &c(&params.q), &consts(&x[0], &params.a));
    let (b3, b4) = family_maps(&params.p, &params.q);
    SurfaceSpec::new(name, form, b3, b4, negate_first(4), removable_q(&params.p, &params.q).pow(2))
}

pub fn build_degree2d_family(name: &str, params: &Degree2dParams) -> Result<SurfaceSpec> {
    let d = params.quads.len();
    if d < 2 || params.b.len() != d - 1 {
        return Err(Error::InvalidSpec(format!(
            "{name}: need d >= 2 quadratic forms and d-1 coefficients b"
        )));
    }
    for (j, f) in params.quads.iter().enumerate() {
        let odd = f.vars() != XVARS || f.terms().any(|(m, _)| m.exponents()[0] % 2 == 1);
        if odd || !f.is_homogeneous_of(2) {
            return Err(Error::InvalidSpec(format!(
                "{name}: Q{} must be a quadratic form even in x1",
                j + 3
            )));
        }
    }
    let x = MultiPoly::gens(&XVARS);
    let form = degree2d_form(
        &x,
        &x[0].constant_like(params.q.clone()),
        &params.quads,
        &consts(&x[0], &params.b),
        &consts(&x[0], &params.a),
    );
    let zero = Rational::zero();
    let (b3, b4) = family_maps(&zero, &params.q);
    let removable = removable_q(&zero, &params.q).pow(d as u32 - 1);
    SurfaceSpec::new(name, form, b3, b4, negate_first(4), removable)
}

fn ints<const N: usize>(v: [i64; N]) -> [Rational; N] {
    v.map(int)
}

pub fn quartic_ex1_params(h: &Rational) -> QuarticFamilyParams {
    let k = |c: i64| int(c) * h;
    QuarticFamilyParams {
        p: int(3),
        q: int(-1),
        a: [
            int(1),
            k(-2),
            k(-1),
            k(-1),
            k(-1),
            k(-1),
            k(4),
            k(-1),
            k(-1),
            int(1),
            int(3),
            int(-1),
        ],
    }
}

pub fn quartic_ex2_params() -> QuarticFamilyParams {
    QuarticFamilyParams {
        p: int(1),
        q: int(3),
        a: ints([6, 6, 0, 1, 6, -3, -105, 12, 6, 3, 3, -3]),
    }
}

pub fn sextic_ex1_params() -> SexticFamilyParams {
    SexticFamilyParams {
        p: int(1),
        q: int(-1),
        a: ints([3, -1, 5, 44957, 6, 1, 2939, 29654, 13121, 2, -25057, -7856, -8176, 891]),
    }
}

pub fn sextic_ex2_params() -> SexticFamilyParams {
    SexticFamilyParams {
        p: int(1),
        q: int(3),
        a: ints([44, -36, 36, 120, -72, 0, 0, 0, -9, -972, -486, 9, 9, 9]),
    }
}

pub fn decic_params(h: &Rational) -> Degree2dParams {
    let k = |c: i64| int(c) * h;
    let f = |s: &str| MultiPoly::parse(s, &XVARS).expect("static form");
    Degree2dParams {
        q: int(2),
        quads: vec![
            f("x1^2 + x2^2"),
            f("2x1^2 + 3x2^2"),
            f("0"),
            f("0"),
            f("-(x3^2 + 2x4^2)"),
        ],
        b: vec![int(1), int(0), int(0), int(0)],
        a: [
            int(1),
            int(-1),
            int(-2),
            k(1),
            k(1),
            int(-1),
            int(-2),
            k(2),
            int(0),
            int(-1),
            int(0),
            int(-2),
        ],
    }
}

pub struct PresetInfo {
    pub name: &'static str,
    pub takes_h: bool,
    pub seed: &'static [i64],
}

pub const PRESETS: &[PresetInfo] = &[
    PresetInfo { name: "quartic-ex1", takes_h: true, seed: &[1, 1, 1, 1] },
    PresetInfo { name: "quartic-ex2", takes_h: false, seed: &[0, 1, 1, 0] },
    PresetInfo { name: "sextic-ex1", takes_h: false, seed: &[0, 1, 0, -1] },
    PresetInfo { name: "sextic-ex2", takes_h: false, seed: &[0, 1, 1, 0] },
    PresetInfo { name: "decic", takes_h: true, seed: &[1, 1, 1, 1] },
];

/// Named surface with its seed attached. `h` defaults to 0 where used.
pub fn preset(name: &str, h: Option<&Rational>) -> Result<SurfaceSpec> {
    let info = PRESETS
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
    let zero = Rational::zero();
    let h = h.unwrap_or(&zero);
    let spec = match name {
        "quartic-ex1" => build_quartic_family(name, &quartic_ex1_params(h))?,
        "quartic-ex2" => build_quartic_family(name, &quartic_ex2_params())?,
        "sextic-ex1" => build_sextic_family(name, &sextic_ex1_params())?,
        "sextic-ex2" => build_sextic_family(name, &sextic_ex2_params())?,
        "decic" => build_degree2d_family(name, &decic_params(h))?,
        _ => unreachable!(),
    };
    spec.with_seed(ProjPoint::from_ints(info.seed)?)
}

/// Both two-parameter x1 = x2 families kill the h = 0 quartic identically.
pub fn verify_parametric_family() -> Result<bool> {
    let ring = ["r", "s"];
    let f = |e: &str| MultiPoly::parse(e, &ring).expect("static family");
    let families = [
        [
            "r^2 - 8rs + 3s^2",
            "r^2 - 8rs + 3s^2",
            "r^2 - 6rs + 21s^2",
            "2r^2 - 6s^2",
        ],
        [
            "-r^2 + rs + 3s^2",
            "-r^2 + rs + 3s^2",
            "-r^2 + 6rs - 6s^2",
            "r^2 + 3s^2",
        ],
    ];
    let spec = build_quartic_family("quartic-ex1", &quartic_ex1_params(&int(0)))?;
    for fam in families {
        let images: Vec<MultiPoly> = fam.iter().map(|e| f(e)).collect();
        if !spec.form().compose(&images)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The elliptic parametrization of the decic orbit points, as polynomials in (X, Y, h).
pub fn decic_parametrization() -> (Vec<MultiPoly>, MultiPoly) {
    let ring = ["X", "Y", "h"];
    let f = |e: &str| MultiPoly::parse(e, &ring).expect("static parametrization");
    let xs = vec![
        f("4hX^3 - 2X^2 + 2XY + 6hX + 2h - 1"),
        f("4X^3 + 2hX^2 + 2hX + 2X - Y - h"),
        f("-4hX^3 + 10X^2 - 2XY + 2hX + 2h - 1"),
        f("4X^3 + 6hX^2 + 2hX - 4X + Y + h"),
    ];
    let curve = f("Y^2 - (4(h+1)^2X^4 + 8h(h-2)X^3 + 4X^2 - 4h(h+2)X + (h-1)^2)");
    (xs, curve)
}

/// Residues of the decic and of the quadric x1²+2x2² − x3²−2x4² modulo the
/// curve equation, with h kept symbolic.
pub fn decic_parametrization_residues() -> Result<(MultiPoly, MultiPoly)> {
    let (xs, curve) = decic_parametrization();
    let ring = xs[0].zero_like();
    let hvar = ring.var_like("h")?;
    let c = |v: i64| ring.constant_like(int(v));
    let params = decic_params(&int(1));
    let quads: Vec<MultiPoly> = params
        .quads
        .iter()
        .map(|q| q.compose(&xs))
        .collect::<std::result::Result<_, _>>()?;
    // a-list with h as a live variable
    let a: Vec<MultiPoly> = [1, -1, -2, 0, 0, -1, -2, 0, 0, -1, 0, -2]
        .iter()
        .enumerate()
        .map(|(i, &v)| match i {
            3 | 4 => hvar.clone(),
            7 => hvar.scale(&int(2)),
            _ => c(v),
        })
        .collect();
    let b: Vec<MultiPoly> = params.b.iter().map(|v| ring.constant_like(v.clone())).collect();
    let g = degree2d_form(&xs, &c(2), &quads, &b, &a);
    let (_, r1) = g.div_rem_monic(&curve, "Y")?;
    let quad = &xs[0] * &xs[0] + c(2) * &xs[1] * &xs[1] - &xs[2] * &xs[2] - c(2) * &xs[3] * &xs[3];
    let (_, r2) = quad.div_rem_monic(&curve, "Y")?;
    Ok((r1, r2))
}

pub fn verify_decic_parametrization() -> Result<bool> {
    let (r1, r2) = decic_parametrization_residues()?;
    Ok(r1.is_zero() && r2.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_zero_quartic_rejected() {
        let p = QuarticFamilyParams {
            p: int(1),
            q: int(1),
            a: ints([0; 12]),
        };
        assert!(matches!(build_quartic_family("z", &p), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn odd_quadratic_rejected() {
        let mut p = decic_params(&int(0));
        p.quads[1] = MultiPoly::parse("x1x2", &XVARS).unwrap();
        assert!(matches!(build_degree2d_family("bad", &p), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn unknown_preset() {
        assert!(matches!(preset("nonagon", None), Err(Error::UnknownPreset(_))));
    }
}
