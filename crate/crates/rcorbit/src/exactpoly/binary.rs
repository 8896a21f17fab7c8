//! Fast path for substituting linear binary forms into a large polynomial.
//!
//! Orbit steps substitute `x_i ↦ a_i s + b_i t` into forms with thousands of
//! terms. Doing that with generic sparse products over Q is slow, so images
//! are scaled to integers, expanded densely over Z, and unscaled once.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{common_denominator, Monomial, MultiPoly, PolyError, Rational, Result};

// Dense binary form of fixed degree: c[j] multiplies s^(deg-j) t^j.
fn conv(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

impl MultiPoly {
    /// Substitutes `var_i ↦ images[i].0 * s + images[i].1 * t` and returns the
    /// result as a polynomial in the two variables `target`.
    pub fn substitute_linear2(&self, images: &[(Rational, Rational)], target: [&str; 2]) -> Result<MultiPoly> {
        if images.len() != self.nvars() {
            return Err(PolyError::Arity {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let d = common_denominator(images.iter().flat_map(|(a, b)| [a, b]));
        let l = common_denominator(self.terms.values());
        let scaled: Vec<[BigInt; 2]> = images
            .iter()
            .map(|(a, b)| {
                [
                    (a * &d).to_integer(),
                    (b * &d).to_integer(),
                ]
            })
            .collect();

        let mut pows: Vec<Vec<Vec<BigInt>>> = scaled
            .iter()
            .map(|ab| vec![vec![BigInt::one()], ab.to_vec()])
            .collect();
        let mut acc: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut prod = vec![(c * &l).to_integer()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e as usize {
                    let next = conv(pows[i].last().unwrap(), &scaled[i]);
                    pows[i].push(next);
                }
                prod = conv(&prod, &pows[i][e as usize]);
            }
            let deg = m.degree();
            let slot = acc
                .entry(deg)
                .or_insert_with(|| vec![BigInt::zero(); deg as usize + 1]);
            for (s, v) in slot.iter_mut().zip(prod) {
                *s += v;
            }
        }

        let mut out = MultiPoly::zero(&target);
        for (deg, coeffs) in acc {
            let scale = Rational::from_integer(&l * num_traits::pow(d.clone(), deg as usize));
            for (j, c) in coeffs.into_iter().enumerate() {
                let e = vec![deg - j as u32, j as u32];
                out.add_term(Monomial::new(e), Rational::from_integer(c) / &scale);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, MultiPoly};

    #[test]
    fn matches_generic_compose() {
        let v = ["a", "b", "c"];
        let f = MultiPoly::parse("3/2 a^3 b - 7 b c^2 a + c^4 - 5a^2 + 1/3", &v).unwrap();
        let imgs = [(rat(1, 2), rat(-3, 1)), (rat(2, 3), rat(5, 7)), (rat(0, 1), rat(-1, 4))];
        let fast = f.substitute_linear2(&imgs, ["s", "t"]).unwrap();
        let st = MultiPoly::gens(&["s", "t"]);
        let lin: Vec<MultiPoly> = imgs
            .iter()
            .map(|(a, b)| st[0].scale(a) + st[1].scale(b))
            .collect();
        assert_eq!(fast, f.compose(&lin).unwrap());
    }
}
