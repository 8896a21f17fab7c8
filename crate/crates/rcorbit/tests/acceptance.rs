//! Acceptance criteria 1-13, one PASS/FAIL line each. Runs as a plain binary
//! (no libtest harness) so the lines always show up in the test log.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::{pt, tex, tex_with};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rcorbit::analysis::invariant_census;
use rcorbit::builders::{preset, verify_decic_parametrization, verify_parametric_family};
use rcorbit::numberfield::{norm, recover_multiplier, ring_mul, FieldSpec, RingElement};
use rcorbit::orbit::Op;
use rcorbit::surface4::SurfaceSpec;
use rcorbit::varieties::{
    build_system_preset, cubic_reflection_block, quartic_g_adjugate, quartic_g_printed,
    verify_cubic_reflection_forms, SystemSpec,
};
use rcorbit::{int, rat, MultiPoly, ProjPoint, Rational};

const CASES: usize = 100;

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn surface(name: &str, h: Option<i64>) -> SurfaceSpec {
    preset(name, h.map(int).as_ref()).unwrap()
}

fn rc_orbit(s: &SurfaceSpec, steps: usize) -> Vec<ProjPoint> {
    s.generate_sequence(s.seed().unwrap(), Op::Rc, steps).unwrap().points
}

fn sys_orbit(name: &str, h: i64, steps: usize) -> (SystemSpec, Vec<ProjPoint>) {
    let s = build_system_preset(name, Some(&int(h))).unwrap();
    let o = s.generate_sequence(s.seed().unwrap(), Op::Rc, steps).unwrap();
    (s, o.points)
}

fn shown(s: &SystemSpec, p: &ProjPoint) -> ProjPoint {
    ProjPoint::from_bigints(s.compress(p)).unwrap()
}

fn flip34(p: &ProjPoint) -> ProjPoint {
    let c = p.coords();
    ProjPoint::from_bigints(vec![c[0].clone(), c[1].clone(), -c[2].clone(), -c[3].clone()]).unwrap()
}

fn c1_quartic_h7() -> Outcome {
    let t = Instant::now();
    let s = surface("quartic-ex1", Some(7));
    let pts = rc_orbit(&s, 3);
    let want = [
        "(-130,31,97,196)",
        "(2244925401,1768375579,-3244635281,5477857719)",
        "(48174715330795614136594596008400681550325,39780816364918032832888229561551900194758,\
         -90144829539953389017242502188382745170382,-131064449157792994852020542549892912835855)",
    ];
    for (k, w) in want.iter().enumerate() {
        ensure!(pts[k + 1] == pt(w), "RC step {} = {}", k + 1, pts[k + 1]);
    }
    let cr = s.cr_step(s.seed().unwrap()).unwrap();
    ensure!(cr == pt("(15,8,8,-15)"), "CR step 1 = {cr}");
    let dt = t.elapsed();
    ensure!(dt.as_secs_f64() < 1.0, "took {dt:?}");
    Ok(())
}

fn c2_quartic_h0() -> Outcome {
    let pts = rc_orbit(&surface("quartic-ex1", Some(0)), 3);
    for (k, w) in ["(3,3,1,7)", "(9,9,13,37)", "(27,27,61,211)"].iter().enumerate() {
        let w = pt(w);
        ensure!(pts[k + 1] == w || pts[k + 1] == flip34(&w), "step {} = {}", k + 1, pts[k + 1]);
    }
    Ok(())
}

fn c3_witnesses() -> Outcome {
    let q1 = surface("quartic-ex1", Some(7));
    let o1 = rc_orbit(&q1, 1);
    let q2 = surface("quartic-ex2", None);
    let o2 = rc_orbit(&q2, 1);
    let s2 = surface("sextic-ex2", None);
    let cases = [
        (&q1, &o1[0], [rat(2, 3), rat(5, 3), int(66)]),
        (&q1, &o1[1], [rat(-2178, 1283), rat(-1415, 1283), rat(249877066, 1646089)]),
        (&q2, &o2[0], [int(0), rat(1, 3), int(7)]),
        (&q2, &o2[1], [rat(-1848, 2335), rat(1537, 7005), rat(122166401, 5452225)]),
        (&s2, s2.seed().unwrap(), [int(0), rat(1, 3), rat(137, 3)]),
    ];
    for (s, p, [m1, m2, z]) in cases {
        let w = s.discriminant_witness(p).map_err(|e| e.to_string())?;
        ensure!(w.m == vec![m1.clone(), m2.clone()] && w.z == z, "{} at {p}: {:?}", s.name(), w);
        ensure!(s.discriminant_poly().eval(&w.m).unwrap() == &w.z * &w.z, "z² ≠ disc at {p}");
    }
    Ok(())
}

fn c4_quartic_ex2() -> Outcome {
    let pts = rc_orbit(&surface("quartic-ex2", None), 3);
    let want = [
        "(0,1,1,0)",
        "(-63,44,44,21)",
        "(-53966863944,3060077833,-43118821745,14262975216)",
        "(-147609072097506717422185174080259362584795541167553561,40226536355947814403673938708520812105643977659529244,\
         111318341489401190419048903211940940726579266647898028,-77464352589959936491092062638791236314929817761076995)",
    ];
    for (k, w) in want.iter().enumerate() {
        ensure!(pts[k] == pt(w), "step {k} = {}", pts[k]);
    }
    Ok(())
}

fn c5_sextic_period() -> Outcome {
    let s = surface("sextic-ex1", None);
    let o = s.generate_sequence(s.seed().unwrap(), Op::Rc, 40).unwrap();
    ensure!(o.period == Some(11), "period {:?}", o.period);
    let want = [
        "(0,1,0,-1)", "(1,1,-1,-2)", "(-2,1,-4,-7)", "(-1,0,1,3)", "(-1,2,3,-1)", "(-3,2,7,-5)",
        "(3,2,7,-5)", "(1,2,3,-1)", "(1,0,1,3)", "(2,1,-4,-7)", "(-1,1,-1,-2)",
    ];
    for (k, w) in want.iter().enumerate() {
        ensure!(o.points[k] == pt(w), "point {k} = {}", o.points[k]);
    }
    Ok(())
}

fn c6_sextic_ex2() -> Outcome {
    let pts = rc_orbit(&surface("sextic-ex2", None), 2);
    ensure!(pts[1] == pt("(-411,37,37,137)"), "step 1 = {}", pts[1]);
    let w = pt("(3112824595430551806,686796656401231307,-183526740019270303,1115958479906433472)");
    ensure!(pts[2] == w, "step 2 = {}", pts[2]);
    Ok(())
}

fn c7_decic() -> Outcome {
    let pts = rc_orbit(&surface("decic", Some(0)), 3);
    for (k, w) in ["(3,3,5,-1)", "(9,9,1,-11)", "(27,27,-43,-13)"].iter().enumerate() {
        let w = pt(w);
        ensure!(pts[k + 1] == w || pts[k + 1] == flip34(&w), "step {} = {}", k + 1, pts[k + 1]);
    }
    let ratio = |p: &ProjPoint| {
        let v = p.to_rationals();
        (&v[2] * &v[2] + int(2) * &v[3] * &v[3]) / (&v[0] * &v[0] + int(2) * &v[1] * &v[1])
    };
    let r0 = ratio(&pts[0]);
    ensure!(pts.iter().all(|p| ratio(p) == r0), "quadric ratio drifts");
    Ok(())
}

fn c8_discriminants() -> Outcome {
    let m = ["m1", "m2"];
    let d2 = preset("quartic-ex2", None).unwrap().discriminant_poly();
    let spots2 = [
        ([8, 0], 45), ([4, 4], 4095), ([0, 8], 3645), ([0, 7], 4860), ([3, 3], 13536),
        ([2, 0], 2908), ([1, 0], -264), ([0, 0], -396),
    ];
    for (e, c) in spots2 {
        ensure!(d2.coeff(&e) == int(c), "quartic-ex2 coefficient of m^{e:?} is {}", d2.coeff(&e));
    }
    let shown2 = tex(
        r"45m_1^8+180m_1^7m_2+810m_1^6m_2^2+1800m_1^5m_2^3+4095m_1^4m_2^4+5400m_1^3m_2^5+7290m_1^2m_2^6
        +4860m_1m_2^7+3645m_2^8+180m_1^6m_2+540m_1^5m_2^2+2160m_1^4m_2^3+3420m_1^3m_2^4+6480m_1^2m_2^5
        +4860m_1m_2^6+4860m_2^7+1044m_1^6+3384m_1^5m_2+9000m_1^4m_2^2+13536m_1^3m_2^3+10872m_1^2m_2^4
        +6264m_1m_2^5-8100m_2^6+60m_1^5+492m_1^4m_2+324m_1^3m_2^2+2628m_1^2m_2^3+756m_1m_2^4+4860m_2^5
        -3036m_1^4-5112m_1^3m_2-15648m_1^2m_2^2-10512m_1m_2^3-13176m_2^4-192m_1^3-504m_1^2m_2
        -720m_1m_2^2-1512m_2^3+2908m_1^2+3048m_1m_2+8244m_2^2-264m_1-792m_2-396",
        &m,
    );
    ensure!(d2 == shown2, "quartic-ex2 discriminant differs from the display");

    let d1 = preset("quartic-ex1", Some(&int(7))).unwrap().discriminant_poly();
    let spots1 = [
        ([8, 0], 13), ([4, 4], -273), ([7, 0], 14), ([3, 3], -4606), ([0, 4], 1411),
        ([1, 0], -224), ([0, 0], 13),
    ];
    for (e, c) in spots1 {
        ensure!(d1.coeff(&e) == int(c), "quartic-ex1 coefficient of m^{e:?} is {}", d1.coeff(&e));
    }
    Ok(())
}

fn c9_octic() -> Outcome {
    let (s, pts) = sys_orbit("octic-x6p2", 0, 2);
    ensure!(shown(&s, &pts[1]) == pt("(-19,109,-60,60,-60,60,-60,79)"), "step 1 = {:?}", s.compress(&pts[1]));
    let w = pt("(-5213798318716593857204393,5565884623111221678035287,-163345550361845074758840,\
                174763856538766110586320,-109258836892219115576040,485050791706620297477120,\
                1670808317491786482902760,5483216674456163821019527)");
    ensure!(shown(&s, &pts[2]) == w, "step 2 = {:?}", s.compress(&pts[2]));
    Ok(())
}

fn c10_quartic_system() -> Outcome {
    let (s, pts) = sys_orbit("decic-10in8", 0, 3);
    let want = [
        "(3,1,0,1,3,1,0,1)",
        "(5,1,0,1,-5,1,0,1)",
        "(489,87,0,87,841,-353,0,-353)",
        "(228105,39465,0,39465,-769129,369377,0,369377)",
    ];
    let mut last: Option<Rational> = None;
    for (p, w) in pts.iter().zip(want) {
        ensure!(shown(&s, p) == pt(w), "h=0: {:?} vs {w}", s.compress(p));
        let x = p.to_rationals();
        let r = &x[0] / &x[1];
        ensure!(last.as_ref().is_none_or(|l| *l < r), "x1/x2 not increasing at {w}");
        last = Some(r);
        ensure!(s.ratio_invariant(p).unwrap().is_one(), "F-ratio ≠ 1 at {w}");
    }
    let (s, pts) = sys_orbit("decic-10in8", 1, 2);
    ensure!(shown(&s, &pts[1]) == pt("(7,1,0,1,-7,1,0,1)"), "h=1 step 1");
    ensure!(
        shown(&s, &pts[2]) == pt("(2734239,3306073,0,3306073,13666439,-2392627,4558960,-3695187)"),
        "h=1 step 2 = {:?}",
        s.compress(&pts[2])
    );
    ensure!(pts.iter().all(|p| s.ratio_invariant(p).unwrap().is_one()), "h=1 F-ratio ≠ 1");
    Ok(())
}

fn c11_cubic_system() -> Outcome {
    let (s, pts) = sys_orbit("quintic-ratio-pair", -3, 3);
    let want = ["(1,1,0,6,-7,0)", "(-18,45,0,-324,498,-156)", "(3,3,0,-216,317,-104)", "(-18,45,0,3888,-5794,1924)"];
    for (p, w) in pts.iter().zip(want) {
        ensure!(shown(&s, p) == pt(w), "h=-3: {:?} vs {w}", s.compress(p));
    }
    let (s, pts) = sys_orbit("quintic-ratio-pair", 1, 2);
    ensure!(
        shown(&s, &pts[1]) == pt("(-368765338,605494801,0,-297321236,-366427558,715340340)"),
        "h=1 step 1 = {:?}",
        s.compress(&pts[1])
    );
    let w = s.m_witness(&pts[0]).map_err(|e| e.to_string())?;
    ensure!(w.m == vec![rat(50, 43), int(0), rat(-117, 86)] && w.z == rat(13756545, 86), "seed witness {w:?}");
    let psi3 = tex_with(
        r"81m_1^3-81hm_1^2m_2+81(h^2+4h+8)m_1^2m_3-162(h+2)m_1m_2^2+(162h^2+540h+648)m_1m_2m_3
        +(180h^2+864h+1296)m_1m_3^2-72(h+3)m_2^3+72(h+3)hm_2^2m_3+144(h+3)(h+2)m_2m_3^2+64(h+3)^2m_3^3",
        &["m1", "m2", "m3"],
        &[("h", int(1))],
    );
    for p in &pts {
        ensure!(s.ratio_invariant(p).unwrap() == int(8), "C-ratio ≠ 8 at {p}");
        let m = s.sys_recover(p).map_err(|e| e.to_string())?;
        ensure!(psi3.eval(&m).unwrap() == int(648), "ψ3 ≠ 648 at {p}");
    }
    Ok(())
}

fn rand_rat(rng: &mut ChaCha8Rng, n: i64, d: i64) -> Rational {
    rat(rng.gen_range(-n..=n), rng.gen_range(1..=d))
}

/// Orbit points on random members of the h-families, plus the fixed presets.
fn random_surface_points(rng: &mut ChaCha8Rng) -> Vec<(SurfaceSpec, ProjPoint)> {
    let mut out = Vec::new();
    for name in ["quartic-ex2", "sextic-ex1", "sextic-ex2"] {
        let s = surface(name, None);
        for p in rc_orbit(&s, 2) {
            out.push((s.clone(), p));
        }
    }
    while out.len() < CASES + 20 {
        let name = if rng.gen_bool(0.5) { "quartic-ex1" } else { "decic" };
        let h = rand_rat(rng, 30, 4);
        let Ok(s) = preset(name, Some(&h)) else { continue };
        let Ok(o) = s.generate_sequence(s.seed().unwrap(), Op::Rc, 2) else { continue };
        for p in o.points {
            out.push((s.clone(), p));
        }
    }
    out
}

fn c12_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let pool = random_surface_points(&mut rng);

    // conjugation and the involutive reflection are involutions; RC∘CR = id
    let (mut n_conj, mut n_rc) = (0, 0);
    for (s, p) in &pool {
        ensure!(s.verify_point(p), "generated {p} fails on {}", s.name());
        if let Ok(c) = s.conjugate(p) {
            ensure!(s.verify_point(&c), "conjugate {c} off {}", s.name());
            ensure!(&s.conjugate(&c).unwrap() == p, "C² ≠ id at {p} on {}", s.name());
            n_conj += 1;
        }
        if let Ok(q) = s.cr_step(p) {
            ensure!(&s.rc_step(&q).unwrap() == p, "RC∘CR ≠ id at {p} on {}", s.name());
            n_rc += 1;
        }
        ensure!(&s.reflect(&s.reflect(p).unwrap()).unwrap() == p, "R² ≠ id at {p}");
    }
    ensure!(n_conj >= CASES && n_rc >= CASES, "only {n_conj}/{n_rc} usable cases");

    // systems: conjugation involutive, every generated point verifies
    for (name, h) in [("octic-x6p2", 0), ("decic-10in8", 0), ("decic-10in8", 1), ("quintic-cubic", 1)] {
        let (s, pts) = sys_orbit(name, h, 2);
        for p in &pts {
            ensure!(s.sys_verify(p), "{name}: {p} fails");
            let c = s.sys_conjugate(p).unwrap();
            ensure!(&s.sys_conjugate(&c).unwrap() == p, "{name}: C² ≠ id");
        }
    }
    for _ in 0..CASES {
        let v: Vec<i64> = (0..12).map(|_| rng.gen_range(-50..=50)).collect();
        let Ok(p) = ProjPoint::from_ints(&v) else { continue };
        let s = build_system_preset("octic-x6p2", None).unwrap();
        let r = ProjPoint::normalize(&rcorbit::surface4::apply_matrix(s.reflection(), &p.to_rationals())).unwrap();
        let rr = ProjPoint::normalize(&rcorbit::surface4::apply_matrix(s.reflection(), &r.to_rationals())).unwrap();
        ensure!(rr == p, "octic R² ≠ id");
    }

    // the order-3 map of the cubic reflection lemma
    for _ in 0..CASES {
        let a = rand_rat(&mut rng, 20, 6);
        let b = rand_rat(&mut rng, 20, 6);
        if a == b || a == -b.clone() {
            continue;
        }
        let m = cubic_reflection_block(&a, &b);
        let mul = |x: &[[Rational; 2]; 2], y: &[[Rational; 2]; 2]| {
            let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
            [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
        };
        let m3 = mul(&mul(&m, &m), &m);
        ensure!(m3 == [[int(1), int(0)], [int(0), int(1)]], "map³ ≠ id at a={a}, b={b}");
        ensure!(mul(&m, &m) != [[int(1), int(0)], [int(0), int(1)]], "map² = id at a={a}, b={b}");
    }
    ensure!(verify_cubic_reflection_forms().unwrap(), "lemma forms not invariant");

    // norms multiply; the multiplier is recovered from x and m·x
    let mut done = 0;
    while done < CASES {
        let n = rng.gen_range(2..=6);
        let modulus: Vec<Rational> = (0..n).map(|_| int(rng.gen_range(-9..=9))).collect();
        let Ok(f) = FieldSpec::algebra(modulus) else { continue };
        let el = |rng: &mut ChaCha8Rng| RingElement::new((0..n).map(|_| rand_rat(rng, 12, 3)).collect());
        let (a, b) = (el(&mut rng), el(&mut rng));
        let ab = ring_mul(&a, &b, &f).unwrap();
        ensure!(norm(&ab, &f).unwrap() == norm(&a, &f).unwrap() * norm(&b, &f).unwrap(), "N(ab) ≠ N(a)N(b)");
        if !norm(&a, &f).unwrap().is_zero() {
            ensure!(recover_multiplier(&a, &ab, &f).unwrap() == b, "recover(a, ab) ≠ b");
        }
        done += 1;
    }

    // division by a monic divisor reassembles
    let vars = ["x", "y"];
    let rand_poly = |rng: &mut ChaCha8Rng, deg: u32| {
        let mut p = MultiPoly::zero(&vars);
        for _ in 0..6 {
            let e = vec![rng.gen_range(0..=deg), rng.gen_range(0..=deg)];
            let t = MultiPoly::from_terms(&vars, [(e, rand_rat(rng, 9, 3))]).unwrap();
            p = p + t;
        }
        p
    };
    for _ in 0..CASES {
        let a = rand_poly(&mut rng, 5);
        let k = rng.gen_range(1..=3);
        let lead = MultiPoly::from_terms(&vars, [(vec![k, 0], Rational::one())]).unwrap();
        let mut b = lead;
        for _ in 0..3 {
            let e = vec![rng.gen_range(0..k), rng.gen_range(0..=2)];
            b = b + MultiPoly::from_terms(&vars, [(e, rand_rat(&mut rng, 9, 3))]).unwrap();
        }
        let (q, r) = a.div_rem_monic(&b, "x").unwrap();
        ensure!(&q * &b + &r == a, "a ≠ qb + r");
        ensure!(r.is_zero() || r.degree_in(0) < k, "remainder degree");
    }

    // the displayed G forms: symbolic identity with the adjugate, and
    // G_j(x, m·x) = m_j·F(x) at random p, q, x, m
    let mut ring: Vec<String> = (1..=8).map(|i| format!("x{i}")).collect();
    ring.extend(["p".into(), "q".into()]);
    let rv: Vec<&str> = ring.iter().map(|s| s.as_str()).collect();
    let g = quartic_g_printed(&rv, &[]).unwrap();
    let (pv, qv) = (MultiPoly::var(&rv, "p").unwrap(), MultiPoly::var(&rv, "q").unwrap());
    ensure!(g == quartic_g_adjugate(&pv, &qv).unwrap(), "printed G ≠ adjugate");
    let mut done = 0;
    while done < CASES {
        let (p, q) = (int(rng.gen_range(-9..=9)), int(rng.gen_range(-9..=9)));
        let Ok(f) = FieldSpec::algebra(vec![int(0), p.clone(), int(0), q.clone()]) else { continue };
        let x = RingElement::new((0..4).map(|_| rand_rat(&mut rng, 9, 2)).collect());
        let m = RingElement::new((0..4).map(|_| rand_rat(&mut rng, 9, 2)).collect());
        let xp = ring_mul(&m, &x, &f).unwrap();
        let nx = norm(&x, &f).unwrap();
        let mut point: Vec<Rational> = x.coords().to_vec();
        point.extend(xp.coords().iter().cloned());
        point.extend([p, q]);
        for (j, gj) in g.iter().enumerate() {
            ensure!(gj.eval(&point).unwrap() == &m.coords()[j] * &nx, "G{} ≠ m·F", j + 1);
        }
        done += 1;
    }

    // parametric families and the decic elliptic parametrization
    ensure!(verify_parametric_family().unwrap(), "x1 = x2 families off the surface");
    ensure!(verify_decic_parametrization().unwrap(), "decic parametrization residue ≠ 0");
    let s0 = surface("quartic-ex1", Some(0));
    for _ in 0..CASES {
        let (r, t) = (rng.gen_range(-99i64..=99), rng.gen_range(-99i64..=99));
        let a = r * r - 8 * r * t + 3 * t * t;
        let b = -r * r + r * t + 3 * t * t;
        for v in [[a, a, r * r - 6 * r * t + 21 * t * t, 2 * r * r - 6 * t * t], [b, b, -r * r + 6 * r * t - 6 * t * t, r * r + 3 * t * t]] {
            if let Ok(p) = ProjPoint::from_ints(&v) {
                ensure!(s0.verify_point(&p), "family point {p} off the h = 0 quartic");
            }
        }
    }
    Ok(())
}

fn c13_census() -> Outcome {
    for name in ["quartic-ex2", "sextic-ex2"] {
        let r = invariant_census(&surface(name, None), 50).map_err(|e| e.to_string())?;
        ensure!(r.points.len() % 2 == 1, "{name}: {} invariant points", r.points.len());
        ensure!(r.unpaired == vec![pt("(0,1,1,0)")], "{name}: unpaired {:?}", r.unpaired);
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("quartic h=7 RC orbit and CR step", c1_quartic_h7),
        ("quartic h=0 powers-of-three orbit", c2_quartic_h0),
        ("discriminant witnesses", c3_witnesses),
        ("quartic example 2 orbit", c4_quartic_ex2),
        ("sextic example 1 period 11", c5_sextic_period),
        ("sextic example 2 orbit", c6_sextic_ex2),
        ("decic h=0 orbit and quadric ratio", c7_decic),
        ("symbolic discriminants", c8_discriminants),
        ("octic x^6+2 system", c9_octic),
        ("quartic-norm system h=0 and h=1", c10_quartic_system),
        ("cubic-norm system h=-3 and h=1", c11_cubic_system),
        ("randomized and symbolic property suites", c12_properties),
        ("invariant census parity", c13_census),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let dt = t.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({dt:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({dt:.2}s): {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
