//! Reflection/conjugate engine for systems built on norm forms.
//!
//! Coordinates split into an x-block and an x′-block of equal size n. The
//! x′-block is tied to the x-block through a ring multiplier, x′ = m·x in
//! Q[t]/(p(t)). Linear constraints cut the x-block down to the binary pair
//! (x1, x2), so at fixed m the main form becomes a binary form which, after
//! removing a fixed factor, is a quadratic in (x1, x2).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{rat, rational_sqrt, MultiPoly, Rational};
use crate::numberfield::{
    adjugate, mul_matrix, norm, norm_form_symbolic, recover_multiplier, solve, FieldError, FieldSpec,
    RingElement,
};
use crate::orbit::{iterate, Op, Orbit, Step};
use crate::point::ProjPoint;
use crate::surface4::{apply_matrix, Matrix};
use crate::vieta::{discriminant, other_root, Quadratic};

/// Raw ingredients of a system; see [`SystemSpec::new`].
#[derive(Clone, Debug)]
pub struct SystemParts {
    pub name: String,
    pub field: FieldSpec,
    pub x_block: Vec<usize>,
    pub xp_block: Vec<usize>,
    pub main_form: MultiPoly,
    /// Linear forms that vanish on the variety; they may only involve the
    /// x-block and must determine it from its first two coordinates.
    pub constraints: Vec<MultiPoly>,
    pub reflection: Matrix,
    /// Binary form in the first two x-block variables, already raised to
    /// its exponent.
    pub removable: MultiPoly,
    pub removable_exponent: u32,
}

#[derive(Clone, Debug)]
pub struct SystemSpec {
    name: String,
    field: FieldSpec,
    x_block: Vec<usize>,
    xp_block: Vec<usize>,
    main_form: MultiPoly,
    constraints: Vec<MultiPoly>,
    reflection: Matrix,
    reflection_factor: Rational,
    removable: MultiPoly,
    removable_exponent: u32,
    // x-block coordinate k equals elim[k].0 * x1 + elim[k].1 * x2
    elim: Vec<(Rational, Rational)>,
    ratio_form: Option<MultiPoly>,
    extra_forms: Vec<MultiPoly>,
    witness_scale: Rational,
    aux: Vec<(String, MultiPoly)>,
    ratio_aux: Option<(String, Rational)>,
    printed: Vec<usize>,
    seed: Option<ProjPoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MWitness {
    pub m: Vec<Rational>,
    pub z: Rational,
    pub aux: Vec<(String, Rational)>,
}

fn bad<T>(name: &str, msg: &str) -> Result<T> {
    Err(Error::InvalidSpec(format!("{name}: {msg}")))
}

impl SystemSpec {
    /// Solves the constraints for the x-block, then checks that the
    /// reflection keeps the constrained variety's equation semi-invariant
    /// and that the removable factor divides the reduced form.
    pub fn new(parts: SystemParts) -> Result<Self> {
        let SystemParts {
            name,
            field,
            x_block,
            xp_block,
            main_form,
            constraints,
            reflection,
            removable,
            removable_exponent,
        } = parts;
        let n = field.degree();
        let nv = main_form.nvars();
        if x_block.len() != n || xp_block.len() != n {
            return bad(&name, "block sizes must equal the field degree");
        }
        let mut used = vec![false; nv];
        for &i in x_block.iter().chain(&xp_block) {
            if i >= nv || used[i] {
                return bad(&name, "blocks must partition the variables");
            }
            used[i] = true;
        }
        if used.iter().any(|u| !u) {
            return bad(&name, "blocks must partition the variables");
        }
        if main_form.is_zero() || !main_form.is_homogeneous() {
            return bad(&name, "main form must be a nonzero homogeneous form");
        }
        let d = main_form.total_degree().unwrap();
        let vars = main_form.vars().to_vec();
        let binary = [vars[x_block[0]].clone(), vars[x_block[1]].clone()];
        if removable.vars() != binary || !removable.is_homogeneous_of(d.saturating_sub(2)) {
            return bad(&name, "removable factor must be a binary form of degree D-2 in x1, x2");
        }
        if reflection.len() != nv || reflection.iter().any(|r| r.len() != nv) {
            return bad(&name, "reflection has the wrong shape");
        }
        let elim = eliminate(&name, &constraints, &x_block, nv)?;
        let mut spec = SystemSpec {
            name,
            field,
            x_block,
            xp_block,
            main_form,
            constraints,
            reflection,
            reflection_factor: Rational::one(),
            removable,
            removable_exponent,
            elim,
            ratio_form: None,
            extra_forms: Vec::new(),
            witness_scale: Rational::one(),
            aux: Vec::new(),
            ratio_aux: None,
            printed: (0..nv).collect(),
            seed: None,
        };
        spec.reflection_factor = spec
            .restricted_factor(&spec.main_form)?
            .ok_or_else(|| Error::InvalidSpec(format!("{}: main form not invariant under the reflection", spec.name)))?;
        // divisibility at two unrelated multipliers
        spec.sys_reduce(&RingElement::one(n).coords().to_vec())?;
        let probe: Vec<Rational> = (1..=n as i64).map(|k| rat(k * k - 3, k + 1)).collect();
        match spec.sys_reduce(&probe) {
            Ok(_) | Err(Error::ParametricDegeneracy) => {}
            Err(e) => return Err(e),
        }
        Ok(spec)
    }

    /// Images of all variables over the free ring (binary pair plus x′-block).
    fn section(&self) -> (Vec<String>, Vec<MultiPoly>) {
        let vars = self.main_form.vars();
        let mut free: Vec<String> = vec![vars[self.x_block[0]].clone(), vars[self.x_block[1]].clone()];
        free.extend(self.xp_block.iter().map(|&i| vars[i].clone()));
        let g = MultiPoly::gens(&free);
        let mut images = vec![g[0].zero_like(); vars.len()];
        for (k, &i) in self.x_block.iter().enumerate() {
            let (a, b) = &self.elim[k];
            images[i] = g[0].scale(a) + g[1].scale(b);
        }
        for (k, &i) in self.xp_block.iter().enumerate() {
            images[i] = g[k + 2].clone();
        }
        (free, images)
    }

    /// λ with form(R·x) = λ·form(x) on the constraint subspace, if any.
    fn restricted_factor(&self, form: &MultiPoly) -> Result<Option<Rational>> {
        let (_, images) = self.section();
        let moved: Vec<MultiPoly> = self
            .reflection
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&images)
                    .fold(images[0].zero_like(), |acc, (c, v)| acc + v.scale(c))
            })
            .collect();
        for c in &self.constraints {
            if !c.compose(&moved)?.is_zero() {
                return Ok(None);
            }
        }
        let before = form.compose(&images)?;
        let after = form.compose(&moved)?;
        let Some((m, c)) = before.leading_term() else {
            return Ok(after.is_zero().then(Rational::one));
        };
        let lam = after.coeff(m.exponents()) / c;
        Ok((!lam.is_zero() && after == before.scale(&lam)).then_some(lam))
    }

    pub fn with_ratio_form(mut self, form: MultiPoly) -> Result<Self> {
        if form.nvars() != self.field.degree() {
            return bad(&self.name, "ratio form must have one variable per block coordinate");
        }
        self.ratio_form = Some(form);
        Ok(self)
    }

    pub fn with_extra_form(mut self, form: MultiPoly) -> Result<Self> {
        if form.vars() != self.main_form.vars() {
            return bad(&self.name, "extra form must use the system variables");
        }
        if self.restricted_factor(&form)?.is_none() {
            return bad(&self.name, "extra form not invariant under the reflection");
        }
        self.extra_forms.push(form);
        Ok(self)
    }

    /// z² = scale · discriminant; lets witnesses match a differently
    /// normalized reduced quadratic.
    pub fn with_witness_scale(mut self, scale: Rational) -> Self {
        self.witness_scale = scale;
        self
    }

    /// Named polynomials in m1..mn reported with every witness.
    pub fn with_aux(mut self, name: &str, poly: MultiPoly) -> Self {
        self.aux.push((name.to_string(), poly));
        self
    }

    /// Asserts aux `name` equals `factor` times the ratio at every witness.
    pub fn with_ratio_aux(mut self, name: &str, factor: Rational) -> Self {
        self.ratio_aux = Some((name.to_string(), factor));
        self
    }

    /// Coordinates shown to users; the rest must be constraint-determined.
    pub fn with_printed(mut self, idx: Vec<usize>) -> Result<Self> {
        for i in 0..self.nvars() {
            if !idx.contains(&i) && !self.x_block[2..].contains(&i) {
                return bad(&self.name, "only constrained x-block coordinates may be hidden");
            }
        }
        self.printed = idx;
        Ok(self)
    }

    pub fn with_seed(mut self, seed: &ProjPoint) -> Result<Self> {
        let full = self.expand(seed)?;
        if !self.sys_verify(&full) {
            return Err(Error::NotOnVariety(seed.to_string()));
        }
        self.seed = Some(full);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn nvars(&self) -> usize {
        self.main_form.nvars()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn main_form(&self) -> &MultiPoly {
        &self.main_form
    }

    pub fn constraints(&self) -> &[MultiPoly] {
        &self.constraints
    }

    pub fn extra_forms(&self) -> &[MultiPoly] {
        &self.extra_forms
    }

    pub fn reflection(&self) -> &Matrix {
        &self.reflection
    }

    pub fn reflection_factor(&self) -> &Rational {
        &self.reflection_factor
    }

    pub fn removable(&self) -> &MultiPoly {
        &self.removable
    }

    pub fn removable_exponent(&self) -> u32 {
        self.removable_exponent
    }

    pub fn ratio_form(&self) -> Option<&MultiPoly> {
        self.ratio_form.as_ref()
    }

    pub fn aux(&self) -> &[(String, MultiPoly)] {
        &self.aux
    }

    pub fn printed_coords(&self) -> &[usize] {
        &self.printed
    }

    pub fn seed(&self) -> Option<&ProjPoint> {
        self.seed.as_ref()
    }

    /// Accepts full or printed-length tuples and returns the full point.
    pub fn expand(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let nv = self.nvars();
        if p.len() == nv {
            return Ok(p.clone());
        }
        if p.len() != self.printed.len() {
            return Err(Error::NotOnVariety(format!("{p}: expected {nv} or {} coordinates", self.printed.len())));
        }
        let given = p.to_rationals();
        let mut full = vec![Rational::zero(); nv];
        for (v, &i) in given.iter().zip(&self.printed) {
            full[i] = v.clone();
        }
        let (s, t) = (full[self.x_block[0]].clone(), full[self.x_block[1]].clone());
        for (k, &i) in self.x_block.iter().enumerate().skip(2) {
            if !self.printed.contains(&i) {
                let (a, b) = &self.elim[k];
                full[i] = a * &s + b * &t;
            }
        }
        Ok(ProjPoint::normalize(&full)?)
    }

    /// The printed subset of a full point.
    pub fn compress(&self, p: &ProjPoint) -> Vec<num_bigint::BigInt> {
        if p.len() != self.nvars() {
            return p.coords().to_vec();
        }
        self.printed.iter().map(|&i| p.coords()[i].clone()).collect()
    }

    fn block(&self, x: &[Rational], idx: &[usize]) -> RingElement {
        RingElement::new(idx.iter().map(|&i| x[i].clone()).collect())
    }

    fn full_point(&self, p: &ProjPoint) -> Option<ProjPoint> {
        self.expand(p).ok()
    }

    pub fn sys_verify(&self, p: &ProjPoint) -> bool {
        let Some(p) = self.full_point(p) else {
            return false;
        };
        let c = p.coords();
        let zero = |v: &MultiPoly| v.eval_ints(c).map(|r| r.is_zero()).unwrap_or(false);
        !(c[self.x_block[0]].is_zero() && c[self.x_block[1]].is_zero())
            && !self.xp_block.iter().all(|&i| c[i].is_zero())
            && zero(&self.main_form)
            && self.constraints.iter().all(zero)
            && self.extra_forms.iter().all(zero)
    }

    fn require(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let full = self.expand(p)?;
        if self.sys_verify(&full) {
            Ok(full)
        } else {
            Err(Error::NotOnVariety(p.to_string()))
        }
    }

    /// The multiplier m with x′ = m·x.
    pub fn sys_recover(&self, p: &ProjPoint) -> Result<Vec<Rational>> {
        let p = self.require(p)?;
        let x = p.to_rationals();
        let m = recover_multiplier(&self.block(&x, &self.x_block), &self.block(&x, &self.xp_block), &self.field)?;
        Ok(m.coords().to_vec())
    }

    /// Linear images of every coordinate in (x1, x2) at multiplier m.
    fn images(&self, m: &[Rational]) -> Result<Vec<(Rational, Rational)>> {
        let n = self.field.degree();
        if m.len() != n {
            return Err(FieldError::Dim { expected: n, got: m.len() }.into());
        }
        let mm = mul_matrix(m, self.field.modulus());
        let mut images = vec![(Rational::zero(), Rational::zero()); self.nvars()];
        for (k, &i) in self.x_block.iter().enumerate() {
            images[i] = self.elim[k].clone();
        }
        for (j, &i) in self.xp_block.iter().enumerate() {
            let mut a = Rational::zero();
            let mut b = Rational::zero();
            for (k, (ea, eb)) in self.elim.iter().enumerate() {
                a += &mm[j][k] * ea;
                b += &mm[j][k] * eb;
            }
            images[i] = (a, b);
        }
        Ok(images)
    }

    /// Reduced quadratic (φ0, φ1, φ2) in (x1, x2) at multiplier m.
    pub fn sys_reduce(&self, m: &[Rational]) -> Result<Quadratic> {
        let images = self.images(m)?;
        let b = self.removable.vars();
        let sub = self.main_form.substitute_linear2(&images, [&b[0], &b[1]])?;
        let q = sub.exact_div(&self.removable, &b[0])?;
        let phi = q.collect_binary_quadratic(&b[0], &b[1])?;
        if phi.0.is_zero() && phi.1.is_zero() && phi.2.is_zero() {
            return Err(Error::ParametricDegeneracy);
        }
        Ok(phi)
    }

    fn rebuild(&self, m: &[Rational], s: &Rational, t: &Rational) -> Result<ProjPoint> {
        let images = self.images(m)?;
        let coords: Vec<Rational> = images.iter().map(|(a, b)| a * s + b * t).collect();
        Ok(ProjPoint::normalize(&coords)?)
    }

    pub fn sys_conjugate(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let p = self.require(p)?;
        let m = self.sys_recover(&p)?;
        let q = self.sys_reduce(&m)?;
        let x = p.to_rationals();
        let (s, t) = other_root(&q, &x[self.x_block[0]], &x[self.x_block[1]])?;
        self.rebuild(&m, &s, &t)
    }

    pub fn sys_reflect(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let p = self.expand(p)?;
        Ok(ProjPoint::normalize(&apply_matrix(&self.reflection, &p.to_rationals()))?)
    }

    pub fn sys_rc_step(&self, p: &ProjPoint) -> Result<ProjPoint> {
        self.sys_reflect(&self.sys_conjugate(p)?)
    }

    pub fn sys_cr_step(&self, p: &ProjPoint) -> Result<ProjPoint> {
        self.sys_conjugate(&self.sys_reflect(p)?)
    }

    pub fn step(&self, p: &ProjPoint, op: Op) -> Result<ProjPoint> {
        match op {
            Op::Rc => self.sys_rc_step(p),
            Op::Cr => self.sys_cr_step(p),
        }
    }

    /// Up to `n` steps; each new point is re-verified. A vanishing x-block
    /// norm stops the orbit with a diagnostic instead of an error.
    pub fn generate_sequence(&self, p: &ProjPoint, op: Op, n: usize) -> Result<Orbit> {
        let p = self.require(p)?;
        iterate(&p, n, |q| match self.step(q, op) {
            Ok(next) => {
                if !self.sys_verify(&next) {
                    return Err(Error::NotOnVariety(next.to_string()));
                }
                Ok(Step::Next(next))
            }
            Err(Error::Field(FieldError::Degenerate)) => {
                Ok(Step::Halt(format!("x-block norm vanishes at {q}")))
            }
            Err(e) => Err(e),
        })
    }

    /// ratio_form(x′) / ratio_form(x).
    pub fn ratio_invariant(&self, p: &ProjPoint) -> Result<Rational> {
        let form = self
            .ratio_form
            .as_ref()
            .ok_or_else(|| Error::NoRatio(format!("{} has no ratio form", self.name)))?;
        let x = self.expand(p)?.to_rationals();
        let pick = |idx: &[usize]| idx.iter().map(|&i| x[i].clone()).collect::<Vec<_>>();
        let den = form.eval(&pick(&self.x_block))?;
        if den.is_zero() {
            return Err(Error::NoRatio(format!("ratio form vanishes on the x-block of {p}")));
        }
        Ok(form.eval(&pick(&self.xp_block))? / den)
    }

    pub fn m_witness(&self, p: &ProjPoint) -> Result<MWitness> {
        let m = self.sys_recover(p)?;
        let disc = &self.witness_scale * discriminant(&self.sys_reduce(&m)?);
        let z = rational_sqrt(&disc).ok_or(Error::NotASquare(disc))?;
        let aux = self
            .aux
            .iter()
            .map(|(k, f)| Ok((k.clone(), f.eval(&m)?)))
            .collect::<Result<Vec<_>>>()?;
        if let Some((name, factor)) = &self.ratio_aux {
            let ratio = self.ratio_invariant(p)?;
            let v = aux.iter().find(|(k, _)| k == name).map(|(_, v)| v.clone());
            if v.as_ref() != Some(&(factor * &ratio)) {
                return Err(Error::Invariant(format!("{name}(m) != {factor} * ratio {ratio}")));
            }
        }
        Ok(MWitness { m, z, aux })
    }

    /// Norm of the x-block; zero means the multiplier is undefined.
    pub fn x_norm(&self, p: &ProjPoint) -> Result<Rational> {
        let x = self.expand(p)?.to_rationals();
        Ok(norm(&self.block(&x, &self.x_block), &self.field)?)
    }
}

fn eliminate(name: &str, constraints: &[MultiPoly], x_block: &[usize], nv: usize) -> Result<Vec<(Rational, Rational)>> {
    let n = x_block.len();
    let mut rows = Vec::new();
    for c in constraints {
        if c.nvars() != nv || !c.is_homogeneous_of(1) {
            return bad(name, "constraints must be linear forms in the system variables");
        }
        let coef = |i: usize| {
            let mut e = vec![0; nv];
            e[i] = 1;
            c.coeff(&e)
        };
        if (0..nv).any(|i| !x_block.contains(&i) && !coef(i).is_zero()) {
            return bad(name, "constraints may only involve the x-block");
        }
        rows.push(x_block.iter().map(|&i| coef(i)).collect::<Vec<_>>());
    }
    if rows.len() != n - 2 {
        return bad(name, "need exactly n-2 constraints");
    }
    let one = (Rational::one(), Rational::zero());
    let two = (Rational::zero(), Rational::one());
    if n == 2 {
        return Ok(vec![one, two]);
    }
    let a: Vec<Vec<Rational>> = rows.iter().map(|r| r[2..].to_vec()).collect();
    let rhs = |j: usize| rows.iter().map(|r| -r[j].clone()).collect::<Vec<_>>();
    let (Some(u), Some(v)) = (solve(&a, &rhs(0)), solve(&a, &rhs(1))) else {
        return bad(name, "constraints do not determine the x-block from x1, x2");
    };
    let mut out = vec![one, two];
    out.extend(u.into_iter().zip(v));
    Ok(out)
}

fn x_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn m_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("m{i}")).collect()
}

/// Field for a preset modulus. Special parameter values can make the
/// modulus reducible; the composition identity survives, so fall back to
/// the plain quotient algebra.
fn preset_field(modulus: Vec<Rational>) -> Result<FieldSpec> {
    match FieldSpec::new(modulus.clone()) {
        Ok(f) => Ok(f),
        Err(FieldError::RationalRoot(_)) => Ok(FieldSpec::algebra(modulus)?),
        Err(e) => Err(e.into()),
    }
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

// Printed quartic forms G_j with G_j = m_j·F(x1..x4) once x5..x8 = m·x.
pub const QUARTIC_G: [&str; 4] = [
    "x1^3x5+(qx2x8-2px3x5+qx3x7+qx4x6-pqx4x8)x1^2+(px2^2x5-qx2^2x7-2qx2x3x6-2p^2x2x4x5+2qx2x4x5\
     +2pqx2x4x7+p^2x3^2x5+qx3^2x5-pqx3^2x7+2q^2x3x4x8+p^3x4^2x5-2pqx4^2x5-p^2qx4^2x7+q^2x4^2x7)x1\
     +q(x2^3x6-x2^2x3x5-2px2^2x4x6+qx2^2x4x8+px2x3^2x6-qx2x3^2x8+2px2x3x4x5-2qx2x3x4x7+p^2x2x4^2x6\
     +qx2x4^2x6-pqx2x4^2x8-px3^3x5+qx3^3x7-qx3^2x4x6-p^2x3x4^2x5+qx3x4^2x5+pqx3x4^2x7-pqx4^3x6+q^2x4^3x8)",
    "x1^3x6-(x2x5+2px3x6-qx3x8-qx4x7)x1^2+(px2^2x6-qx2^2x8+2px2x3x5-2qx2x3x7-2p^2x2x4x6+2qx2x4x6\
     +2pqx2x4x8+p^2x3^2x6+qx3^2x6-pqx3^2x8-2qx3x4x5+p^3x4^2x6-2pqx4^2x6-p^2qx4^2x8+q^2x4^2x8)x1\
     -px2^3x5+qx2^3x7-qx2^2x3x6+2p^2x2^2x4x5-qx2^2x4x5-2pqx2^2x4x7-p^2x2x3^2x5+qx2x3^2x5+pqx2x3^2x7\
     +2pqx2x3x4x6-2q^2x2x3x4x8-p^3x2x4^2x5+q^2x2x4^2x7+p^2qx2x4^2x7-pqx3^3x6+q^2x3^3x8+pqx3^2x4x5\
     -q^2x3^2x4x7+q^2x3x4^2x6-p^2qx3x4^2x6+pq^2x3x4^2x8+p^2qx4^3x5-q^2x4^3x5-pq^2x4^3x7",
    "x1^3x7-(x2x6-px2x8+x3x5+px3x7-px4x6+p^2x4x8-qx4x8)x1^2+(x2^2x5-2qx2x3x8-2px2x4x5+2qx2x4x7\
     +px3^2x5+qx3^2x7-2qx3x4x6+2pqx3x4x8+p^2x4^2x5-qx4^2x5-pqx4^2x7)x1-q(-x2^3x8+x2^2x3x7+x2^2x4x6\
     +px2^2x4x8-x2x3^2x6-2x2x3x4x5-px2x4^2x6-qx2x4^2x8+x3^3x5+qx3^2x4x8+px3x4^2x5-qx3x4^2x7+qx4^3x6)",
    "x1^3x8-(x2x7+x3x6+px3x8+x4x5-px4x7)x1^2+(x2^2x6+2x2x3x5-2px2x4x6+2qx2x4x8+px3^2x6+qx3^2x8\
     -2qx3x4x7+p^2x4^2x6-qx4^2x6-pqx4^2x8)x1-p^2x2x4^2x5+pqx2x4^2x7-pqx3x4^2x6+pqx4^3x5+q^2x3x4^2x8\
     -q^2x4^3x7+2px2^2x4x5-px2x3^2x5-qx2^2x3x8-qx2^2x4x7+qx2x3^2x7+2qx2x3x4x6-qx2x4^2x5-qx3^3x6\
     +qx3^2x4x5-x2^3x5",
];

// H = Σ w_j G_j with these quadratic weights in x5..x8.
const QUARTIC_H_WEIGHTS: [&str; 4] = [
    "-2x5x6+3x6^2+2px6x7-3px6x8-2qx7x8+3qx8^2",
    "2x5^2-3x5x6-2px5x7+3px5x8+2qx7^2-3qx7x8",
    "2q(x5x8-x6x7)",
    "-3q(x5x8-x6x7)",
];

/// The printed G_j over `vars` (which must contain x1..x8, and p, q unless
/// they are given as constants).
pub fn quartic_g_printed(vars: &[&str], consts: &[(&str, Rational)]) -> Result<Vec<MultiPoly>> {
    QUARTIC_G
        .iter()
        .map(|s| Ok(MultiPoly::parse_with(s, vars, consts)?))
        .collect()
}

/// G_j = (adj M(x) · x′)_j, where M(x) is multiplication by x in
/// Q[t]/(t⁴ + p t² + q). `p`, `q` live in a ring containing x1..x8.
pub fn quartic_g_adjugate(p: &MultiPoly, q: &MultiPoly) -> Result<Vec<MultiPoly>> {
    let x: Vec<MultiPoly> = (1..=4).map(|i| p.var_like(&format!("x{i}"))).collect::<std::result::Result<_, _>>()?;
    let xp: Vec<MultiPoly> = (5..=8).map(|i| p.var_like(&format!("x{i}"))).collect::<std::result::Result<_, _>>()?;
    let z = p.zero_like();
    let modulus = vec![z.clone(), p.clone(), z, q.clone()];
    let adj = adjugate(&mul_matrix(&x, &modulus));
    Ok(adj
        .iter()
        .map(|row| row.iter().zip(&xp).fold(p.zero_like(), |acc, (a, b)| acc + a * b))
        .collect())
}

fn quartic_h(vars: &[&str], consts: &[(&str, Rational)], g: &[MultiPoly]) -> Result<MultiPoly> {
    let mut h = MultiPoly::zero(vars);
    for (w, gj) in QUARTIC_H_WEIGHTS.iter().zip(g) {
        h = h + MultiPoly::parse_with(w, vars, consts)? * gj;
    }
    Ok(h)
}

/// Names accepted by [`build_system_preset`].
pub struct SystemPresetInfo {
    pub name: &'static str,
    pub takes_h: bool,
    /// In printed coordinates.
    pub seed: &'static [i64],
}

pub const SYSTEM_PRESETS: &[SystemPresetInfo] = &[
    SystemPresetInfo { name: "octic-x6p2", takes_h: false, seed: &[1, 1, 0, 0, 0, 0, 0, 1] },
    SystemPresetInfo { name: "decic-10in8", takes_h: true, seed: &[3, 1, 0, 1, 3, 1, 0, 1] },
    SystemPresetInfo { name: "decic-ratio-pair", takes_h: true, seed: &[3, 1, 0, 1, 3, 1, 0, 1] },
    SystemPresetInfo { name: "quintic-cubic", takes_h: true, seed: &[1, 1, 0, 6, -7, 0] },
    SystemPresetInfo { name: "quintic-ratio-pair", takes_h: true, seed: &[1, 1, 0, 6, -7, 0] },
];

pub fn build_system_preset(name: &str, h: Option<&Rational>) -> Result<SystemSpec> {
    let info = SYSTEM_PRESETS
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
    let zero = Rational::zero();
    let h = h.unwrap_or(&zero);
    let spec = match name {
        "octic-x6p2" => octic()?,
        "decic-10in8" => quartic_system(name, h, false)?,
        "decic-ratio-pair" => quartic_system(name, h, true)?,
        "quintic-cubic" => cubic_system(name, h, false)?,
        "quintic-ratio-pair" => cubic_system(name, h, true)?,
        _ => unreachable!(),
    };
    spec.with_seed(&ProjPoint::from_ints(info.seed)?)
}

fn octic() -> Result<SystemSpec> {
    let vars = x_names(12);
    let field = FieldSpec::from_ints(&[0, 0, 0, 0, 0, 2])?;
    let psi = norm_form_symbolic(&field, &vars[6..])?;
    let main = MultiPoly::parse(
        "(x1^6+2x2^6)(-x1^2+33x2^2)",
        &vars,
    )? - psi.with_vars(&vars)?
        * MultiPoly::parse("x7^2+x8^2+x9^2+x10^2+x11^2+3x12^2", &vars)?;
    let constraints = (3..=6)
        .map(|i| MultiPoly::var(&vars, &format!("x{i}")))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let spec = SystemSpec::new(SystemParts {
        name: "octic-x6p2".into(),
        field: field.clone(),
        x_block: (0..6).collect(),
        xp_block: (6..12).collect(),
        main_form: main,
        constraints,
        reflection: crate::surface4::negate_first(12),
        removable: MultiPoly::parse("x1^6+2x2^6", &["x1", "x2"])?,
        removable_exponent: 1,
    })?;
    let mut printed = vec![0, 1];
    printed.extend(6..12);
    spec.with_ratio_form(norm_form_symbolic(&field, &x_names(6))?)?
        .with_printed(printed)
}

/// Field x⁴ + (h+3)x² + (h+4); main form of degree 10 in x1..x8 with
/// x3 = 0, x4 = x2, reflection x1 ↦ −x1.
fn quartic_system(name: &str, h: &Rational, ratio_pair: bool) -> Result<SystemSpec> {
    let vars = x_names(8);
    let v: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let p = h + Rational::from_integer(3.into());
    let q = h + Rational::from_integer(4.into());
    let consts = [("p", p.clone()), ("q", q.clone()), ("h", h.clone())];
    let field = preset_field(vec![Rational::zero(), p.clone(), Rational::zero(), q.clone()])?;
    let f_x = norm_form_symbolic(&field, &v[..4])?.with_vars(&v)?;
    let f_xp = norm_form_symbolic(&field, &v[4..])?.with_vars(&v)?;

    let g = quartic_g_printed(&v, &consts)?;
    let ring = MultiPoly::zero(&v);
    let derived = quartic_g_adjugate(&ring.constant_like(p.clone()), &ring.constant_like(q.clone()))?;
    if g != derived {
        return bad(name, "printed G forms disagree with the adjugate");
    }
    let hh = quartic_h(&v, &consts, &g)?;
    let lin = MultiPoly::parse_with("x5-2x7+2x8+h(x6-x8)", &v, &consts)?;
    let quad = MultiPoly::parse("-x1^2+3x2^2+31x4^2", &v)?;
    let hc = ring.constant_like(h.clone());
    // sign chosen so the reduced x1² coefficient is positive
    let main = -(f_x.pow(2) * &quad + hc.clone() * (&f_x + &f_xp) * &hh - f_xp.pow(2) * lin.pow(2));
    let removable = norm_form_symbolic(&field, &v[..4])?
        .substitute(&[
            ("x3", MultiPoly::zero(&["x1", "x2"])),
            ("x4", MultiPoly::var(&["x1", "x2"], "x2")?),
        ])?
        .pow(2);
    let constraints = vec![
        MultiPoly::var(&v, "x3")?,
        MultiPoly::parse("x4-x2", &v)?,
    ];
    let mut spec = SystemSpec::new(SystemParts {
        name: name.into(),
        field: field.clone(),
        x_block: (0..4).collect(),
        xp_block: (4..8).collect(),
        main_form: main,
        constraints,
        reflection: crate::surface4::negate_first(8),
        removable,
        removable_exponent: 2,
    })?
    .with_ratio_form(norm_form_symbolic(&field, &x_names(4))?)?;
    if ratio_pair {
        let two_h = ring.constant_like(h * Rational::from_integer(2.into()));
        let sextic = &f_x * (quad - lin.pow(2)) + two_h * hh;
        spec = spec.with_extra_form(&f_xp - &f_x)?.with_extra_form(sextic)?;
    }
    Ok(spec)
}

/// p, q, r of the cubic field in terms of a, b, h (a ≠ ±b).
pub fn cubic_params(a: &Rational, b: &Rational, h: &Rational) -> [Rational; 3] {
    let d = (a - b) * (a - b);
    let k = |v: i64| Rational::from_integer(v.into());
    let q = -k(2) * ((h + k(6)) * a * a - (k(2) * h - k(6)) * a * b + (h + k(6)) * b * b) / &d;
    let r = k(4) * (k(2) * a * a - (h - k(2)) * a * b + k(2) * b * b) / &d;
    [h.clone(), q, r]
}

/// 2×2 block of the order-3 linear map fixing Q, C4 and C5.
pub fn cubic_reflection_block(a: &Rational, b: &Rational) -> [[Rational; 2]; 2] {
    let two = Rational::from_integer(2.into());
    let s = a + b;
    [
        [-(a / &s), -(&two * (a * a + a * b + b * b)) / (a * a - b * b)],
        [(a - b) / (&two * &s), -(b / &s)],
    ]
}

/// The invariant binary forms (Q, C4, C5) scaled to polynomials in x1, x2
/// with a, b as variables: Q as given, C4 and C5 times (a − b)².
pub fn cubic_invariant_forms() -> Result<[MultiPoly; 3]> {
    let v = ["x1", "x2", "a", "b"];
    Ok([
        MultiPoly::parse("(a-b)^2x1^2+2(a-b)^2x1x2+4(a^2+ab+b^2)x2^2", &v)?,
        MultiPoly::parse("(a-b)^2x1^3-12(a^2+ab+b^2)x1x2^2-8(a^2+ab+b^2)x2^3", &v)?,
        MultiPoly::parse("(a-b)^2(x1^2x2+2x1x2^2)-4abx2^3", &v)?,
    ])
}

/// Q, C4, C5 are unchanged by the order-3 map, as identities in a, b.
/// The map is cleared of denominators: x ↦ N·x / D with D = 2(a² − b²).
pub fn verify_cubic_reflection_forms() -> Result<bool> {
    let v = ["x1", "x2", "a", "b"];
    let n1 = MultiPoly::parse("-2a(a-b)x1-4(a^2+ab+b^2)x2", &v)?;
    let n2 = MultiPoly::parse("(a-b)^2x1-2b(a-b)x2", &v)?;
    let d = MultiPoly::parse("2(a^2-b^2)", &v)?;
    let a = MultiPoly::var(&v, "a")?;
    let b = MultiPoly::var(&v, "b")?;
    for (k, f) in cubic_invariant_forms()?.iter().enumerate() {
        let deg = if k == 0 { 2 } else { 3 };
        let moved = f.compose(&[n1.clone(), n2.clone(), a.clone(), b.clone()])?;
        if moved != f * &d.pow(deg) {
            return Ok(false);
        }
    }
    // the same map applied three times is a scalar multiple of the identity
    let x1 = MultiPoly::var(&v, "x1")?;
    let x2 = MultiPoly::var(&v, "x2")?;
    let mut img = [x1.clone(), x2.clone()];
    for _ in 0..3 {
        img = [
            n1.compose(&[img[0].clone(), img[1].clone(), a.clone(), b.clone()])?,
            n2.compose(&[img[0].clone(), img[1].clone(), a.clone(), b.clone()])?,
        ];
    }
    let d3 = d.pow(3);
    Ok(img[0] == &x1 * &d3 && img[1] == &x2 * &d3)
}

// ψ0..ψ3 in m1..m3 for the a = 1, b = −2 specialization. ψ0 is minus the x1²
// coefficient of Q1(m·x), so its m1m3 term is −2m1m3.
const CUBIC_PSI: [(&str, &str); 4] = [
    ("psi0", "-(49h+148)m1^2-2m1m2-2m1m3+(36h+107)m2^2-2m2m3-(h+4)m3^2"),
    (
        "psi1",
        "-9m1^2+(324h+954)m1m2+(392h^2+2351h+3507)m1m3-9m2^2+(648h^2+3230h+3840)m2m3+(9h^2+26h-12)m3^2",
    ),
    (
        "psi2",
        "6885m1^2+(11664h+23310)m1m3-2997m2^2+(162h-18)m2m3+(8447h^2+27839h+18492)m3^2",
    ),
    (
        "psi3",
        "81m1^3-81hm1^2m2+81(h^2+4h+8)m1^2m3-162(h+2)m1m2^2+(162h^2+540h+648)m1m2m3\
         +(180h^2+864h+1296)m1m3^2-72(h+3)m2^3+72(h+3)hm2^2m3+144(h+3)(h+2)m2m3^2+64(h+3)^2m3^3",
    ),
];

/// Field x³ + hx² + qx + r from a = 1, b = −2; main form
/// 8·C(x1,x2,x3)·Q(x1,x2) − 39·C(x4,x5,x6)·Q1 with x3 = 0.
fn cubic_system(name: &str, h: &Rational, ratio_pair: bool) -> Result<SystemSpec> {
    let vars = x_names(6);
    let v: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let a = Rational::one();
    let b = Rational::from_integer((-2).into());
    let modulus = cubic_params(&a, &b, h).to_vec();
    let field = preset_field(modulus)?;
    let consts = [("h", h.clone())];
    let c_x = norm_form_symbolic(&field, &v[..3])?.with_vars(&v)?;
    let c_xp = norm_form_symbolic(&field, &v[3..])?.with_vars(&v)?;
    let [qf, _, _] = cubic_invariant_forms()?;
    let qf = qf
        .specialize(&[("a", a.clone()), ("b", b.clone())])?
        .with_vars(&v)?;
    let q1 = MultiPoly::parse_with("(x4+x5+x6)^2+(h+3)(49x4^2-36x5^2+x6^2)", &v, &consts)?;
    let k = |n: i64| Rational::from_integer(n.into());
    let main = (&c_x * &qf).scale(&k(8)) - (&c_xp * &q1).scale(&k(39));
    let removable = norm_form_symbolic(&field, &v[..3])?
        .substitute(&[("x3", MultiPoly::zero(&["x1", "x2"]))])?;
    let blk = cubic_reflection_block(&a, &b);
    let mut refl = identity(6);
    for i in 0..2 {
        for j in 0..2 {
            refl[i][j] = blk[i][j].clone();
        }
    }
    let mut spec = SystemSpec::new(SystemParts {
        name: name.into(),
        field: field.clone(),
        x_block: (0..3).collect(),
        xp_block: (3..6).collect(),
        main_form: main,
        constraints: vec![MultiPoly::var(&v, "x3")?],
        reflection: refl,
        removable,
        removable_exponent: 1,
    })?
    .with_ratio_form(norm_form_symbolic(&field, &x_names(3))?)?
    // the printed witness equation is scaled differently from the monic reduction
    .with_witness_scale(rat(9, 256))
    .with_ratio_aux("psi3", k(81));
    let ms = m_names(3);
    for (nm, s) in CUBIC_PSI {
        spec = spec.with_aux(nm, MultiPoly::parse_with(s, &ms, &consts)?);
    }
    if ratio_pair {
        spec = spec.with_extra_form(c_xp - c_x.scale(&k(8)))?;
    }
    Ok(spec)
}
