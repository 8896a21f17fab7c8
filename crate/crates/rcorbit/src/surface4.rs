//! Reflection/conjugate engine for one homogeneous equation in x1..x4.
//!
//! A surface comes with bilinear maps x3 = B3(m; x1, x2), x4 = B4(m; x1, x2).
//! Substituting them leaves removable(x1, x2) · (φ0 x1² + φ1 x1x2 + φ2 x2²),
//! where the removable binary form has no rational zeros. A known point
//! fixes m and one root of the quadratic; Vieta gives the conjugate point.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{rational_sqrt, MultiPoly, Rational};
use crate::numberfield::solve;
use crate::orbit::{iterate, Op, Orbit, Step};
use crate::point::ProjPoint;
use crate::vieta::{discriminant, other_root, Quadratic};

pub const XVARS: [&str; 4] = ["x1", "x2", "x3", "x4"];
pub const MVARS: [&str; 2] = ["m1", "m2"];

/// Bilinear form Σ a[i][j] m_i x_j in (m1, m2) × (x1, x2).
pub type Bilinear = [[Rational; 2]; 2];

pub fn bilinear(a: [[i64; 2]; 2]) -> Bilinear {
    a.map(|r| r.map(|v| Rational::from_integer(v.into())))
}

fn apply_bilinear(b: &Bilinear, m: &[Rational; 2], x: &[Rational; 2]) -> Rational {
    let mut s = Rational::zero();
    for i in 0..2 {
        for j in 0..2 {
            s += &b[i][j] * &m[i] * &x[j];
        }
    }
    s
}

pub type Matrix = Vec<Vec<Rational>>;

pub fn matrix(rows: &[&[i64]]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
        .collect()
}

pub fn apply_matrix(r: &Matrix, x: &[Rational]) -> Vec<Rational> {
    r.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// Negates the first coordinate.
pub fn negate_first(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i == j, i) {
                    (true, 0) => -Rational::one(),
                    (true, _) => Rational::one(),
                    _ => Rational::zero(),
                })
                .collect()
        })
        .collect()
}

/// (x1, x2, x3, x4) ↦ (2x3, 2x4, x1, x2): a symmetry of F(x1,x2) + 4F(x3,x4).
pub fn swap_with_scaling() -> Matrix {
    matrix(&[&[0, 0, 2, 0], &[0, 0, 0, 2], &[1, 0, 0, 0], &[0, 1, 0, 0]])
}

/// λ with form(R·x) = λ·form(x), if the form is semi-invariant.
pub fn reflection_factor(form: &MultiPoly, r: &Matrix) -> Result<Option<Rational>> {
    let g = MultiPoly::gens(form.vars());
    let images: Vec<MultiPoly> = r
        .iter()
        .map(|row| {
            row.iter()
                .zip(&g)
                .fold(g[0].zero_like(), |acc, (c, v)| acc + v.scale(c))
        })
        .collect();
    let moved = form.compose(&images)?;
    let (Some((m, c)), false) = (form.leading_term(), form.is_zero()) else {
        return Ok(None);
    };
    let lam = moved.coeff(m.exponents()) / c;
    Ok((!lam.is_zero() && moved == form.scale(&lam)).then_some(lam))
}

#[derive(Clone, Debug)]
pub struct SurfaceSpec {
    name: String,
    form: MultiPoly,
    sub_x3: Bilinear,
    sub_x4: Bilinear,
    reflection: Matrix,
    reflection_factor: Rational,
    removable: MultiPoly,
    phi: [MultiPoly; 3],
    seed: Option<ProjPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub m: Vec<Rational>,
    pub z: Rational,
}

impl SurfaceSpec {
    /// Checks homogeneity, semi-invariance under the reflection and exact
    /// divisibility of the substituted form by `removable`.
    pub fn new(
        name: &str,
        form: MultiPoly,
        sub_x3: Bilinear,
        sub_x4: Bilinear,
        reflection: Matrix,
        removable: MultiPoly,
    ) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidSpec(format!("{name}: {m}")));
        if form.vars() != XVARS {
            return bad("form must be in x1..x4");
        }
        if form.is_zero() {
            return bad("zero form");
        }
        if !form.is_homogeneous() {
            return bad("form is not homogeneous");
        }
        let d = form.total_degree().unwrap();
        if removable.vars() != ["x1", "x2"] || !removable.is_homogeneous_of(d.saturating_sub(2)) {
            return bad("removable factor must be a binary form of degree d-2 in x1, x2");
        }
        if reflection.len() != 4 || reflection.iter().any(|r| r.len() != 4) {
            return bad("reflection must be 4x4");
        }
        let Some(lam) = reflection_factor(&form, &reflection)? else {
            return bad("form is not invariant under the reflection");
        };
        let phi = symbolic_phi(&form, &sub_x3, &sub_x4, &removable)?;
        Ok(SurfaceSpec {
            name: name.to_string(),
            form,
            sub_x3,
            sub_x4,
            reflection,
            reflection_factor: lam,
            removable,
            phi,
            seed: None,
        })
    }

    pub fn with_seed(mut self, seed: ProjPoint) -> Result<Self> {
        if !self.verify_point(&seed) {
            return Err(Error::NotOnVariety(seed.to_string()));
        }
        self.seed = Some(seed);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn removable(&self) -> &MultiPoly {
        &self.removable
    }

    pub fn reflection(&self) -> &Matrix {
        &self.reflection
    }

    /// λ in form(R·x) = λ·form(x); ±1 for the involutions.
    pub fn reflection_factor(&self) -> &Rational {
        &self.reflection_factor
    }

    pub fn seed(&self) -> Option<&ProjPoint> {
        self.seed.as_ref()
    }

    pub fn degree(&self) -> u32 {
        self.form.total_degree().unwrap_or(0)
    }

    pub fn verify_point(&self, p: &ProjPoint) -> bool {
        let c = p.coords();
        p.len() == 4
            && !(c[0].is_zero() && c[1].is_zero())
            && !(c[2].is_zero() && c[3].is_zero())
            && self.form.eval_ints(c).map(|v| v.is_zero()).unwrap_or(false)
    }

    fn require(&self, p: &ProjPoint) -> Result<()> {
        if self.verify_point(p) {
            Ok(())
        } else {
            Err(Error::NotOnVariety(p.to_string()))
        }
    }

    /// x3, x4 at parameters m and binary point (s, t).
    pub fn map_x34(&self, m: &[Rational; 2], s: &Rational, t: &Rational) -> [Rational; 2] {
        let x = [s.clone(), t.clone()];
        [apply_bilinear(&self.sub_x3, m, &x), apply_bilinear(&self.sub_x4, m, &x)]
    }

    pub fn recover_params(&self, p: &ProjPoint) -> Result<[Rational; 2]> {
        self.require(p)?;
        let x = p.to_rationals();
        let x12 = [x[0].clone(), x[1].clone()];
        let e = |i: usize| [[Rational::one(), Rational::zero()], [Rational::zero(), Rational::one()]][i].clone();
        let row = |b: &Bilinear| -> Vec<Rational> {
            (0..2).map(|i| apply_bilinear(b, &e(i), &x12)).collect()
        };
        let a = vec![row(&self.sub_x3), row(&self.sub_x4)];
        let m = solve(&a, &x[2..4]).ok_or_else(|| Error::Singular(p.to_string()))?;
        Ok([m[0].clone(), m[1].clone()])
    }

    /// Numeric route: substitute at this m, divide out the removable factor.
    pub fn reduce_to_quadratic(&self, m: &[Rational; 2]) -> Result<Quadratic> {
        let one = Rational::one();
        let zero = Rational::zero();
        let x3 = self.map_x34(m, &one, &zero);
        let x4 = self.map_x34(m, &zero, &one);
        let images = [
            (one.clone(), zero.clone()),
            (zero.clone(), one.clone()),
            (x3[0].clone(), x4[0].clone()),
            (x3[1].clone(), x4[1].clone()),
        ];
        let sub = self.form.substitute_linear2(&images, ["x1", "x2"])?;
        let q = sub.exact_div(&self.removable, "x1")?;
        let phi = q.collect_binary_quadratic("x1", "x2")?;
        if phi.0.is_zero() && phi.1.is_zero() && phi.2.is_zero() {
            return Err(Error::ParametricDegeneracy);
        }
        Ok(phi)
    }

    pub fn conjugate(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let m = self.recover_params(p)?;
        let q = self.reduce_to_quadratic(&m)?;
        let x = p.to_rationals();
        let (s, t) = other_root(&q, &x[0], &x[1])?;
        let [x3, x4] = self.map_x34(&m, &s, &t);
        Ok(ProjPoint::normalize(&[s, t, x3, x4])?)
    }

    pub fn reflect(&self, p: &ProjPoint) -> Result<ProjPoint> {
        Ok(ProjPoint::normalize(&apply_matrix(&self.reflection, &p.to_rationals()))?)
    }

    pub fn rc_step(&self, p: &ProjPoint) -> Result<ProjPoint> {
        self.reflect(&self.conjugate(p)?)
    }

    pub fn cr_step(&self, p: &ProjPoint) -> Result<ProjPoint> {
        self.conjugate(&self.reflect(p)?)
    }

    pub fn step(&self, p: &ProjPoint, op: Op) -> Result<ProjPoint> {
        match op {
            Op::Rc => self.rc_step(p),
            Op::Cr => self.cr_step(p),
        }
    }

    /// Up to `n` steps from `p`; every new point is re-verified.
    pub fn generate_sequence(&self, p: &ProjPoint, op: Op, n: usize) -> Result<Orbit> {
        self.require(p)?;
        iterate(p, n, |q| {
            let next = self.step(q, op)?;
            self.require(&next)?;
            Ok(Step::Next(next))
        })
    }

    pub fn discriminant_witness(&self, p: &ProjPoint) -> Result<Witness> {
        let m = self.recover_params(p)?;
        let disc = discriminant(&self.reduce_to_quadratic(&m)?);
        let z = rational_sqrt(&disc).ok_or(Error::NotASquare(disc))?;
        Ok(Witness { m: m.to_vec(), z })
    }

    /// (φ0, φ1, φ2) as polynomials in m1, m2.
    pub fn symbolic_quadratic(&self) -> &[MultiPoly; 3] {
        &self.phi
    }

    pub fn discriminant_poly(&self) -> MultiPoly {
        let [a, b, c] = &self.phi;
        b * b - a.scale(&Rational::from_integer(4.into())) * c
    }

    pub fn is_self_conjugate(&self, p: &ProjPoint) -> Result<bool> {
        Ok(&self.conjugate(p)? == p)
    }

    pub fn is_invariant(&self, p: &ProjPoint) -> Result<bool> {
        Ok(&self.reflect(p)? == p)
    }
}

fn symbolic_phi(
    form: &MultiPoly,
    b3: &Bilinear,
    b4: &Bilinear,
    removable: &MultiPoly,
) -> Result<[MultiPoly; 3]> {
    let ring = ["x1", "x2", "m1", "m2"];
    let g = MultiPoly::gens(&ring);
    let lift = |b: &Bilinear| {
        let mut acc = g[0].zero_like();
        for i in 0..2 {
            for j in 0..2 {
                acc = acc + (&g[2 + i] * &g[j]).scale(&b[i][j]);
            }
        }
        acc
    };
    let images = [g[0].clone(), g[1].clone(), lift(b3), lift(b4)];
    let sub = form.compose(&images)?;
    let quo = sub.exact_div(&removable.with_vars(&ring)?, "x1")?;
    let mut phi = [
        MultiPoly::zero(&MVARS),
        MultiPoly::zero(&MVARS),
        MultiPoly::zero(&MVARS),
    ];
    for (m, c) in quo.terms() {
        let e = m.exponents();
        if e[0] + e[1] != 2 {
            return Err(Error::InvalidSpec(
                "reduced form is not quadratic in x1, x2".into(),
            ));
        }
        let t = MultiPoly::from_terms(&MVARS, [(vec![e[2], e[3]], c.clone())])?;
        let k = e[1] as usize;
        phi[k] = &phi[k] + &t;
    }
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::int;

    // x1² + x2² = x3² + x4² with the Gaussian composition maps
    fn toy() -> SurfaceSpec {
        let f = MultiPoly::parse("x1^2 + x2^2 - x3^2 - x4^2", &XVARS).unwrap();
        SurfaceSpec::new(
            "toy",
            f,
            bilinear([[1, 0], [0, -1]]),
            bilinear([[0, 1], [1, 0]]),
            negate_first(4),
            MultiPoly::parse("1", &["x1", "x2"]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn toy_quadratic_is_symbolic_match() {
        let s = toy();
        let m = [int(2), int(3)];
        let q = s.reduce_to_quadratic(&m).unwrap();
        let [a, b, c] = s.symbolic_quadratic();
        assert_eq!(q.0, a.eval(&m).unwrap());
        assert_eq!(q.1, b.eval(&m).unwrap());
        assert_eq!(q.2, c.eval(&m).unwrap());
    }

    #[test]
    fn rejects_broken_specs() {
        let f = MultiPoly::parse("x1^3 + x2^2 x3 - x4^3", &XVARS).unwrap();
        let r = SurfaceSpec::new(
            "odd",
            f,
            bilinear([[1, 0], [0, 1]]),
            bilinear([[0, 1], [1, 0]]),
            negate_first(4),
            MultiPoly::parse("x1", &["x1", "x2"]).unwrap(),
        );
        assert!(matches!(r, Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn swap_reflection_scales_form() {
        let f = MultiPoly::parse("x1^4 + 3x1x2^3 + 4(x3^4 + 3x3x4^3)", &XVARS).unwrap();
        assert_eq!(reflection_factor(&f, &swap_with_scaling()).unwrap(), Some(int(4)));
        let p = ProjPoint::from_ints(&[3, -1, 7, 2]).unwrap();
        let r = swap_with_scaling();
        let twice = apply_matrix(&r, &apply_matrix(&r, &p.to_rationals()));
        assert_eq!(ProjPoint::normalize(&twice).unwrap(), p);
    }
}
