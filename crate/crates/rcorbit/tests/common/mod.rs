#![allow(dead_code)]

use num_traits::Zero;
use rcorbit::{MultiPoly, ProjPoint, Rational};

pub fn pt(s: &str) -> ProjPoint {
    ProjPoint::parse(s).unwrap_or_else(|e| panic!("bad point {s}: {e}"))
}

/// Strips typesetting from a displayed formula so the poly reader accepts it:
/// `x_{12}` -> `x12`, `m_1^{10}` -> `m1^{10}`, `\{..\}` -> `(..)`, and the
/// alignment/spacing commands vanish.
pub fn untex(s: &str) -> String {
    let mut t = s.to_string();
    for junk in ["\\\\", "\\quad", "\\;", "\\,", "&", "\\left", "\\right"] {
        t = t.replace(junk, " ");
    }
    t = t.replace("\\{", "(").replace("\\}", ")");
    let mut out = String::with_capacity(t.len());
    let mut chars = t.chars().peekable();
    while let Some(c) = chars.next() {
        if c == '_' {
            if chars.peek() == Some(&'{') {
                chars.next();
                for d in chars.by_ref() {
                    if d == '}' {
                        break;
                    }
                    out.push(d);
                }
            }
            continue;
        }
        out.push(c);
    }
    out
}

pub fn tex(s: &str, vars: &[&str]) -> MultiPoly {
    MultiPoly::parse(&untex(s), vars).unwrap_or_else(|e| panic!("{e}: {s}"))
}

pub fn tex_with(s: &str, vars: &[&str], consts: &[(&str, Rational)]) -> MultiPoly {
    MultiPoly::parse_with(&untex(s), vars, consts).unwrap_or_else(|e| panic!("{e}: {s}"))
}

/// c with a = c·b, if the two polynomials are proportional.
pub fn proportional(a: &MultiPoly, b: &MultiPoly) -> Option<Rational> {
    let (m, cb) = b.leading_term()?;
    let c = a.coeff(m.exponents()) / cb;
    (!c.is_zero() && *a == b.scale(&c)).then_some(c)
}
