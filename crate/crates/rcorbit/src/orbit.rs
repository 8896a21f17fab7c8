//! Iteration driver shared by the surface and variety engines.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::point::ProjPoint;

/// Reflect-after-conjugate or conjugate-after-reflect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Rc,
    Cr,
}

impl FromStr for Op {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "RC" => Ok(Op::Rc),
            "CR" => Ok(Op::Cr),
            _ => Err(format!("unknown operation `{s}` (expected RC or CR)")),
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Op::Rc => "RC",
            Op::Cr => "CR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Seed first. When a cycle closes, the last entry is the repeated point.
    pub points: Vec<ProjPoint>,
    pub period: Option<usize>,
    /// Set when the step guard halted iteration early.
    pub stopped: Option<String>,
}

/// What a single step produced.
pub(crate) enum Step {
    Next(ProjPoint),
    Halt(String),
}

pub(crate) fn iterate(
    seed: &ProjPoint,
    steps: usize,
    mut step: impl FnMut(&ProjPoint) -> Result<Step>,
) -> Result<Orbit> {
    let mut seen: HashMap<ProjPoint, usize> = HashMap::new();
    seen.insert(seed.clone(), 0);
    let mut points = vec![seed.clone()];
    for k in 1..=steps {
        let next = match step(points.last().unwrap())? {
            Step::Next(p) => p,
            Step::Halt(why) => {
                return Ok(Orbit {
                    points,
                    period: None,
                    stopped: Some(why),
                })
            }
        };
        let prior = seen.get(&next).copied();
        points.push(next.clone());
        if let Some(j) = prior {
            return Ok(Orbit {
                points,
                period: Some(k - j),
                stopped: None,
            });
        }
        seen.insert(next, k);
    }
    Ok(Orbit {
        points,
        period: None,
        stopped: None,
    })
}
