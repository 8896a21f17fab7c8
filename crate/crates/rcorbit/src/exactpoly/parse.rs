//! Recursive-descent reader for polynomial expressions.
//!
//! Accepts integers, `+ - * / ^`, any of `() {} []` for grouping, and
//! implicit multiplication by juxtaposition (`4x1^2x2`, `2h(x1+x2)`).
//! Identifiers are one letter followed by optional digits, so `x1x2` reads
//! as `x1*x2`. Division is only allowed by constants.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{MultiPoly, PolyError, Rational, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        match c {
            c if c.is_ascii_whitespace() => i += 1,
            '0'..='9' => {
                let st = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((st, Tok::Num(s[st..i].parse().unwrap())));
            }
            c if c.is_ascii_alphabetic() => {
                let st = i;
                i += 1;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((st, Tok::Ident(s[st..i].to_string())));
            }
            '+' | '-' | '*' | '/' | '^' => {
                out.push((i, Tok::Op(c)));
                i += 1;
            }
            '(' | '{' | '[' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            ')' | '}' | ']' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            _ => {
                return Err(PolyError::Parse {
                    pos: i,
                    msg: format!("unexpected character {c:?}"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: MultiPoly,
    consts: &'a [(&'a str, Rational)],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(PolyError::Parse {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Op('+')) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Tok::Op('-')) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.power()?;
                    match d.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::one() / c)),
                        _ => return self.err("division by a non-constant or zero"),
                    }
                }
                Some(Tok::Ident(_)) | Some(Tok::Open) | Some(Tok::Num(_)) => {
                    acc = acc * self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            self.pos += 1;
            let e = match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    n
                }
                Some(Tok::Open) => {
                    let e = self.atom()?;
                    match e.as_constant() {
                        Some(c) if c.is_integer() => c.to_integer(),
                        _ => return self.err("exponent must be an integer constant"),
                    }
                }
                _ => return self.err("expected exponent"),
            };
            match e.to_u32() {
                Some(e) => Ok(base.pow(e)),
                None => self.err("exponent must be a nonnegative integer"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.constant_like(Rational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                if let Some((_, v)) = self.consts.iter().find(|(c, _)| *c == name) {
                    self.pos += 1;
                    return Ok(self.ring.constant_like(v.clone()));
                }
                match self.ring.var_like(&name) {
                    Ok(v) => {
                        self.pos += 1;
                        Ok(v)
                    }
                    Err(_) => self.err(format!("unknown variable `{name}`")),
                }
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::Close) {
                    return self.err("expected closing bracket");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(super) fn parse(s: &str, vars: &Arc<[String]>, consts: &[(&str, Rational)]) -> Result<MultiPoly> {
    let ring = MultiPoly {
        vars: vars.clone(),
        terms: Default::default(),
    };
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        end: s.len(),
        ring,
        consts,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat, MultiPoly};

    const V: [&str; 4] = ["x1", "x2", "x3", "x4"];

    #[test]
    fn juxtaposition() {
        let a = MultiPoly::parse("4x1^2x2x3", &V).unwrap();
        assert_eq!(a.coeff(&[2, 1, 1, 0]), int(4));
        let b = MultiPoly::parse("2(x1+x2)(x1-x2)", &V).unwrap();
        assert_eq!(b, MultiPoly::parse("2*x1^2 - 2*x2^2", &V).unwrap());
    }

    #[test]
    fn braces_and_exponents() {
        let a = MultiPoly::parse("x1^{10} - {x2+1}^(2)", &V).unwrap();
        assert_eq!(a.coeff(&[10, 0, 0, 0]), int(1));
        assert_eq!(a.coeff(&[0, 1, 0, 0]), int(-2));
    }

    #[test]
    fn constants_and_division() {
        let a = MultiPoly::parse_with("8h/9 + 8/3 x1", &V, &[("h", int(1))]).unwrap();
        assert_eq!(a.coeff(&[0, 0, 0, 0]), rat(8, 9));
        assert_eq!(a.coeff(&[1, 0, 0, 0]), rat(8, 3));
    }

    #[test]
    fn errors() {
        assert!(MultiPoly::parse("x1 +", &V).is_err());
        assert!(MultiPoly::parse("y1", &V).is_err());
        assert!(MultiPoly::parse("x1/x2", &V).is_err());
        assert!(MultiPoly::parse("(x1", &V).is_err());
        assert!(MultiPoly::parse("x1 # 2", &V).is_err());
    }
}
