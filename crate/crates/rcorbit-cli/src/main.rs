//! `rcorbit`: run reflection/conjugate orbits on the built-in surfaces and
//! systems, verify points, print witnesses and discriminants, and search.
//!
//! Exit codes: 0 ok, 1 point fails verification, 2 usage or parse error,
//! 3 internal invariant violation.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rcorbit::analysis::{height_search, invariant_census, self_conjugate_search, SearchReport};
use rcorbit::builders::{preset, PRESETS};
use rcorbit::orbit::{Op, Orbit};
use rcorbit::surface4::SurfaceSpec;
use rcorbit::varieties::{build_system_preset, SystemSpec, SYSTEM_PRESETS};
use rcorbit::{parse_rational, Error, MultiPoly, ProjPoint, Rational};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "rcorbit", version, about = "Exact RC/CR orbits on diophantine surfaces and varieties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args)]
struct Target {
    #[arg(long)]
    preset: String,
    /// Rational parameter for the h-families (default 0).
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an orbit from the seed.
    Iterate {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
        #[arg(long, default_value = "RC")]
        op: String,
        #[arg(long, default_value_t = 3)]
        steps: usize,
        /// Attach a discriminant witness to every point.
        #[arg(long)]
        witness: bool,
    },
    /// Check that a point lies on the variety.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, alias = "seed", allow_hyphen_values = true)]
        point: String,
    },
    /// Multiplier and z with z² equal to the reduced discriminant.
    Witness {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
    },
    /// φ0, φ1, φ2 and the discriminant as polynomials in m1, m2.
    SymbolicDisc {
        #[command(flatten)]
        target: Target,
    },
    /// Bounded-height search: `<preset>-invariant`, `<preset>-disc-zeros`,
    /// or an explicit `--form` over `--vars`.
    Search {
        #[arg(long)]
        curve: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        form: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long, default_value_t = 20)]
        height: u64,
        #[arg(long)]
        h: Option<String>,
    },
    /// List preset names.
    Presets,
}

/// Error classes mapped to exit codes.
enum Fail {
    Verify(String),
    Usage(String),
    Internal(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownPreset(_) | Error::Point(_) | Error::Poly(_) => Fail::Usage(e.to_string()),
            Error::NotOnVariety(_) => Fail::Verify(e.to_string()),
            _ => Fail::Internal(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for Fail {
    fn from(e: anyhow::Error) -> Self {
        Fail::Internal(format!("{e:#}"))
    }
}

enum Engine {
    Surface(SurfaceSpec),
    System(SystemSpec),
}

impl Engine {
    fn load(t: &Target) -> Result<(Engine, Rational), Fail> {
        let h = match &t.h {
            Some(s) => parse_rational(s).ok_or_else(|| Fail::Usage(format!("cannot parse h = `{s}`")))?,
            None => Rational::from_integer(0.into()),
        };
        if PRESETS.iter().any(|p| p.name == t.preset) {
            Ok((Engine::Surface(preset(&t.preset, Some(&h))?), h))
        } else {
            Ok((Engine::System(build_system_preset(&t.preset, Some(&h))?), h))
        }
    }

    /// Parses a user tuple; wrong arity is a usage error, not a failed check.
    fn point(&self, s: &str) -> Result<ProjPoint, Fail> {
        let p = ProjPoint::parse(s).map_err(|e| Fail::Usage(e.to_string()))?;
        let ok = match self {
            Engine::Surface(_) => p.len() == 4,
            Engine::System(s) => p.len() == s.nvars() || p.len() == s.printed_coords().len(),
        };
        if !ok {
            return Err(Fail::Usage(format!("{p} has the wrong number of coordinates")));
        }
        Ok(p)
    }

    fn seed(&self, given: Option<&str>) -> Result<ProjPoint, Fail> {
        match given {
            Some(s) => self.point(s),
            None => Ok(match self {
                Engine::Surface(s) => s.seed(),
                Engine::System(s) => s.seed(),
            }
            .expect("presets carry seeds")
            .clone()),
        }
    }

    fn verify(&self, p: &ProjPoint) -> bool {
        match self {
            Engine::Surface(s) => s.verify_point(p),
            Engine::System(s) => s.sys_verify(p),
        }
    }

    fn orbit(&self, p: &ProjPoint, op: Op, n: usize) -> rcorbit::Result<Orbit> {
        match self {
            Engine::Surface(s) => s.generate_sequence(p, op, n),
            Engine::System(s) => s.generate_sequence(p, op, n),
        }
    }

    fn shown(&self, p: &ProjPoint) -> Vec<String> {
        match self {
            Engine::Surface(_) => p.coords().iter().map(|c| c.to_string()).collect(),
            Engine::System(s) => s.compress(p).iter().map(|c| c.to_string()).collect(),
        }
    }

    fn witness(&self, p: &ProjPoint) -> rcorbit::Result<Value> {
        Ok(match self {
            Engine::Surface(s) => {
                let w = s.discriminant_witness(p)?;
                json!({"m": strs(&w.m), "z": w.z.to_string()})
            }
            Engine::System(s) => {
                let w = s.m_witness(p)?;
                let mut v = json!({"m": strs(&w.m), "z": w.z.to_string()});
                if !w.aux.is_empty() {
                    let aux: serde_json::Map<String, Value> =
                        w.aux.iter().map(|(k, x)| (k.clone(), Value::String(x.to_string()))).collect();
                    v["aux"] = Value::Object(aux);
                }
                if s.ratio_form().is_some() {
                    v["ratio"] = Value::String(s.ratio_invariant(p)?.to_string());
                }
                v
            }
        })
    }
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn tuple(v: &[String]) -> String {
    format!("({})", v.join(", "))
}

fn report_json(r: &SearchReport, shown: impl Fn(&ProjPoint) -> Vec<String>) -> Value {
    json!({
        "height_bound": r.height_bound,
        "points": r.points.iter().map(&shown).collect::<Vec<_>>(),
        "pairs": r.pairs.iter().map(|(a, b)| vec![shown(a), shown(b)]).collect::<Vec<_>>(),
        "unpaired": r.unpaired.iter().map(&shown).collect::<Vec<_>>(),
        "beyond_bound": r.beyond_bound.iter().map(&shown).collect::<Vec<_>>(),
        "count": r.points.len(),
    })
}

fn coords(p: &ProjPoint) -> Vec<String> {
    p.coords().iter().map(|c| c.to_string()).collect()
}

/// A document in both renderings.
struct Doc {
    json: Value,
    text: String,
}

fn run(cli: &Cli) -> Result<(Doc, bool), Fail> {
    match &cli.cmd {
        Cmd::Presets => {
            let surf: Vec<Value> = PRESETS
                .iter()
                .map(|p| json!({"name": p.name, "kind": "surface", "takes_h": p.takes_h, "seed": p.seed}))
                .collect();
            let sys: Vec<Value> = SYSTEM_PRESETS
                .iter()
                .map(|p| json!({"name": p.name, "kind": "system", "takes_h": p.takes_h, "seed": p.seed}))
                .collect();
            let all: Vec<Value> = surf.into_iter().chain(sys).collect();
            let text = all
                .iter()
                .map(|v| format!("{} ({}{})", v["name"].as_str().unwrap(), v["kind"].as_str().unwrap(),
                    if v["takes_h"].as_bool().unwrap() { ", h" } else { "" }))
                .collect::<Vec<_>>()
                .join("\n");
            Ok((Doc { json: Value::Array(all), text }, true))
        }
        Cmd::Iterate { target, seed, op, steps, witness } => {
            let op: Op = op.parse().map_err(Fail::Usage)?;
            let (eng, h) = Engine::load(target)?;
            let seed = eng.seed(seed.as_deref())?;
            if !eng.verify(&seed) {
                return Err(Fail::Verify(format!("seed {seed} is not on {}", target.preset)));
            }
            let orbit = eng.orbit(&seed, op, *steps)?;
            let mut pts = Vec::new();
            let mut text = Vec::new();
            for (k, p) in orbit.points.iter().enumerate() {
                let shown = eng.shown(p);
                let mut v = json!({"step": k, "coords": shown, "verified": eng.verify(p)});
                let mut line = format!("{k}: {}", tuple(&shown));
                if *witness {
                    let w = eng.witness(p)?;
                    line += &format!("  m = {}  z = {}", tuple(&serde_strs(&w["m"])), w["z"].as_str().unwrap());
                    v["witness"] = w;
                }
                pts.push(v);
                text.push(line);
            }
            if let Some(k) = orbit.period {
                text.push(format!("period {k}"));
            }
            if let Some(why) = &orbit.stopped {
                text.push(format!("stopped: {why}"));
            }
            let doc = json!({
                "preset": target.preset,
                "h": h.to_string(),
                "op": op.to_string(),
                "points": pts,
                "period": orbit.period,
                "stopped": orbit.stopped,
            });
            Ok((Doc { json: doc, text: text.join("\n") }, true))
        }
        Cmd::Verify { target, point } => {
            let (eng, h) = Engine::load(target)?;
            let p = eng.point(point)?;
            let ok = eng.verify(&p);
            let doc = json!({"preset": target.preset, "h": h.to_string(), "point": coords(&p), "verified": ok});
            Ok((Doc { json: doc, text: format!("{p}: {}", if ok { "on the variety" } else { "NOT on the variety" }) }, ok))
        }
        Cmd::Witness { target, seed } => {
            let (eng, h) = Engine::load(target)?;
            let p = eng.seed(seed.as_deref())?;
            if !eng.verify(&p) {
                return Err(Fail::Verify(format!("{p} is not on {}", target.preset)));
            }
            let w = eng.witness(&p)?;
            let text = format!("m = {}  z = {}", tuple(&serde_strs(&w["m"])), w["z"].as_str().unwrap());
            let doc = json!({"preset": target.preset, "h": h.to_string(), "point": eng.shown(&p), "witness": w});
            Ok((Doc { json: doc, text }, true))
        }
        Cmd::SymbolicDisc { target } => {
            let (eng, h) = Engine::load(target)?;
            let Engine::Surface(s) = eng else {
                return Err(Fail::Usage("symbolic-disc needs a surface preset".into()));
            };
            let phi = s.symbolic_quadratic();
            let d = s.discriminant_poly();
            let terms: Vec<Value> = d
                .terms()
                .rev()
                .map(|(m, c)| json!({"exponents": m.exponents(), "coeff": c.to_string()}))
                .collect();
            let doc = json!({
                "preset": target.preset,
                "h": h.to_string(),
                "vars": d.vars(),
                "phi": phi.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "discriminant": d.to_string(),
                "terms": terms,
            });
            Ok((Doc { json: doc, text: format!("d(m1, m2) = {d}") }, true))
        }
        Cmd::Search { curve, form, vars, height, h } => {
            let hv = match h {
                Some(s) => Some(parse_rational(s).ok_or_else(|| Fail::Usage(format!("cannot parse h = `{s}`")))?),
                None => None,
            };
            let (doc, text) = if let Some(c) = curve {
                if let Some(name) = c.strip_suffix("-invariant") {
                    let s = preset(name, hv.as_ref())?;
                    let r = invariant_census(&s, *height)?;
                    let mut doc = report_json(&r, coords);
                    doc["curve"] = json!(c);
                    doc["parity"] = json!(if r.points.len() % 2 == 1 { "odd" } else { "even" });
                    let text = format!(
                        "{} invariant points up to height {}: {}\nunpaired: {}",
                        r.points.len(),
                        height,
                        r.points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                        r.unpaired.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
                    );
                    (doc, text)
                } else if let Some(name) = c.strip_suffix("-disc-zeros") {
                    let s = preset(name, hv.as_ref())?;
                    let z = self_conjugate_search(&s, *height)?;
                    let zs: Vec<Vec<String>> = z.iter().map(|m| strs(m)).collect();
                    let text = format!("{} rational zeros of d(m1, m2) with numerators and denominators up to {height}", zs.len());
                    (json!({"curve": c, "bound": height, "zeros": zs}), text)
                } else {
                    return Err(Fail::Usage(format!("unknown curve `{c}`")));
                }
            } else {
                if form.is_empty() || vars.is_empty() {
                    return Err(Fail::Usage("search needs --curve, or --form with --vars".into()));
                }
                let forms = form
                    .iter()
                    .map(|f| MultiPoly::parse(f, vars))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Fail::Usage(e.to_string()))?;
                let r = height_search(&forms, &[], *height)?;
                let text = r.points.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("\n");
                (report_json(&r, coords), text)
            };
            Ok((Doc { json: doc, text }, true))
        }
    }
}

fn serde_strs(v: &Value) -> Vec<String> {
    v.as_array()
        .map(|a| a.iter().filter_map(|x| x.as_str().map(String::from)).collect())
        .unwrap_or_default()
}

fn emit(cli: &Cli, doc: &Doc) -> anyhow::Result<()> {
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&doc.json)?,
        Format::Text => doc.text.clone(),
    };
    match &cli.output {
        Some(path) => std::fs::write(path, body + "\n").with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut out = std::io::stdout().lock();
            match writeln!(out, "{body}") {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                r => r?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|(doc, ok)| {
        emit(&cli, &doc)?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail::Verify(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Fail::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
