#![allow(dead_code)]

pub mod macaulay;

use atinf_core::analysis::{analyze, AnalysisOptions};
use atinf_core::betti::Method;
use atinf_core::groebner::{
    normal_form, same_ideal, satisfies_buchberger_criterion, saturate, standard_basis,
    MonomialOrder,
};
use atinf_core::poly::{int, Monomial, Poly};
use atinf_core::singularity::infinity_milnor_pairs;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = std::result::Result<(), String>;

pub fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn p(text: &str, names: &[&str]) -> Poly {
    Poly::parse(text, names).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub struct Fixture {
    pub name: String,
    pub poly: Poly,
    pub opts: AnalysisOptions,
    pub delta: i64,
}

fn fixture(name: &str, text: &str, names: &[&str], opts: AnalysisOptions, delta: i64) -> Fixture {
    Fixture { name: name.into(), poly: p(text, names), opts, delta }
}

/// Polynomials whose tangencies at infinity are finite, with their defects.
pub fn finite_tangency_fixtures() -> Vec<Fixture> {
    let conc = AnalysisOptions { assume_concentrated: true, ..Default::default() };
    let mut out = vec![fixture("cusp x + x^2*y", "x + x^2*y", &["x", "y"], Default::default(), 3)];
    for d in 3..=5 {
        let text = format!("z^2*x^{} + z^{d}", d - 2);
        out.push(fixture(&format!("line family d={d}"), &text, &["x", "z"], conc.clone(), d as i64));
    }
    out.push(fixture("x^2*y", "x^2*y", &["x", "y"], conc, 3));
    for (n, d) in [(2usize, 2u32), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)] {
        let names = &["x", "y", "z"][..n];
        let text: Vec<String> = names.iter().map(|v| format!("{v}^{d}")).collect();
        out.push(fixture(&format!("fermat n={n} d={d}"), &text.join(" + "), names, Default::default(), 0));
    }
    out
}

pub fn non_reduced_top(d: u32) -> Poly {
    let text = format!("z^{d} + z^2*x^{e} + z^2*y^{e} + x*y*(x^{c} - y^{c})", e = d - 2, c = d - 3);
    p(&text, &["x", "y", "z"])
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polynomial with `terms` terms of degree at most `d` and small
/// integer coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, names: &[String], d: u32, terms: usize) -> Poly {
    let n = names.len();
    let mut f = Poly::zero(names);
    for _ in 0..terms {
        let deg = rng.gen_range(0..=d);
        let mut m = Monomial::one();
        for _ in 0..deg {
            m = m.mul(&Monomial::var(rng.gen_range(0..n)));
        }
        f.add_term(m, int(rng.gen_range(-3..=3)));
    }
    f
}

fn random_order(rng: &mut ChaCha8Rng, n: usize) -> MonomialOrder {
    match rng.gen_range(0..3) {
        0 => MonomialOrder::DegRevLex,
        1 => MonomialOrder::LocalDegRevLex,
        _ => MonomialOrder::block(&[rng.gen_range(0..n)]),
    }
}

fn random_ideal(rng: &mut ChaCha8Rng) -> (Vec<String>, Vec<Poly>) {
    let names = vars(&["x", "y", "z"][..rng.gen_range(2..=3)]);
    let k = rng.gen_range(1..=3);
    let gens: Vec<Poly> = (0..k)
        .map(|_| {
            let terms = rng.gen_range(1..=3);
            random_poly(rng, &names, 3, terms)
        })
        .filter(|g| !g.is_zero())
        .collect();
    (names, gens)
}

pub fn buchberger_criterion(seed: u64) -> Check {
    let mut r = rng(seed);
    let (_, gens) = random_ideal(&mut r);
    if gens.is_empty() {
        return Ok(());
    }
    let order = random_order(&mut r, gens[0].nvars());
    let b = standard_basis(&gens, order).map_err(|e| e.to_string())?;
    satisfies_buchberger_criterion(&b)
        .then_some(())
        .ok_or_else(|| format!("{order:?} basis of {gens:?} fails the criterion"))
}

pub fn normal_form_idempotent(seed: u64) -> Check {
    let mut r = rng(seed);
    let (names, gens) = random_ideal(&mut r);
    if gens.is_empty() {
        return Ok(());
    }
    let order = random_order(&mut r, names.len());
    let b = standard_basis(&gens, order).map_err(|e| e.to_string())?;
    let q = random_poly(&mut r, &names, 4, 4);
    let once = normal_form(&q, &b).map_err(|e| e.to_string())?;
    let twice = normal_form(&once, &b).map_err(|e| e.to_string())?;
    (once == twice).then_some(()).ok_or_else(|| format!("NF({q}) = {once} but NF(NF) = {twice}"))
}

pub fn euler_relation(seed: u64) -> Check {
    let mut r = rng(seed);
    let names = vars(&["x", "y", "z", "w"][..r.gen_range(1..=4)]);
    let f = random_poly(&mut r, &names, 6, 8);
    let Some(d) = f.degree().finite() else { return Ok(()) };
    for k in 0..=d {
        let fk = f.graded_part(k);
        let mut lhs = Poly::zero(&names);
        for i in 0..names.len() {
            lhs = &lhs + &(&Poly::var_at(&names, i) * &fk.derivative_at(i));
        }
        if lhs != fk.scale(&int(k as i64)) {
            return Err(format!("Euler relation fails for degree-{k} part of {f}"));
        }
    }
    Ok(())
}

pub fn saturation_idempotent(seed: u64) -> Check {
    let mut r = rng(seed);
    let names = vars(&["x", "y"]);
    let gens: Vec<Poly> = (0..2).map(|_| random_poly(&mut r, &names, 3, 3)).filter(|g| !g.is_zero()).collect();
    let h = random_poly(&mut r, &names, 2, 2);
    if gens.is_empty() || h.is_zero() {
        return Ok(());
    }
    let once = saturate(&gens, &h).map_err(|e| e.to_string())?;
    let twice = saturate(once.gens(), &h).map_err(|e| e.to_string())?;
    same_ideal(&once, &twice)
        .then_some(())
        .ok_or_else(|| format!("saturation of {gens:?} by {h} is not idempotent"))
}

pub fn chart_seed_invariance(seed: u64) -> Check {
    let fixtures = finite_tangency_fixtures();
    let fx = &fixtures[seed as usize % fixtures.len()];
    let conc = fx.opts.assume_concentrated;
    let a = infinity_milnor_pairs(&fx.poly, seed, 2, conc).map_err(|e| e.to_string())?;
    let b = infinity_milnor_pairs(&fx.poly, seed + 7919, 2, conc).map_err(|e| e.to_string())?;
    (a.sum_mu_fiber == b.sum_mu_fiber && a.sum_mu_boundary == b.sum_mu_boundary)
        .then_some(())
        .ok_or_else(|| format!("{}: seeds disagree: {a:?} vs {b:?}", fx.name))
}

/// Outcome of analyzing one random polynomial: whether a defect was
/// computed, and an error message on any violated verdict.
pub fn random_analysis(seed: u64) -> std::result::Result<bool, String> {
    let mut r = rng(seed);
    let names = vars(&["x", "y", "z"][..r.gen_range(2..=3)]);
    let d = r.gen_range(2..=4);
    let terms = r.gen_range(2..=5);
    let f = random_poly(&mut r, &names, d, terms);
    if f.degree().finite().unwrap_or(0) < 1 {
        return Ok(false);
    }
    let a = match analyze(&f, &AnalysisOptions { seed, ..Default::default() }) {
        Ok(a) => a,
        Err(e) => return Err(format!("{f}: {e}")),
    };
    if let Some(delta) = a.report.delta {
        if delta < 0 {
            return Err(format!("{f}: negative defect {delta}"));
        }
    }
    if let Some(v) = a.report.range_verdicts.iter().find(|v| !v.pass) {
        return Err(format!("{f}: {} failed ({})", v.name, v.detail));
    }
    Ok(a.report.delta.is_some())
}

fn random_linear(r: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| r.gen_range(-3..=3)).collect();
        if v.iter().any(|&a| a != 0) {
            return v;
        }
    }
}

fn linear_poly(names: &[String], a: &[i64]) -> Poly {
    Poly::from_terms(names, a.iter().enumerate().map(|(i, &c)| (Monomial::var(i), int(c))))
}

fn proportional(a: &[i64], b: &[i64]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| a[i] * b[j] == a[j] * b[i]))
}

fn cross(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Random polynomial whose top form is a product of linear forms, with the
/// Euler characteristic of `{f_d = 0}` computed from the arrangement:
/// distinct points on the line, or lines in the plane minus the excess at
/// multiple points.
pub fn arrangement_poly(seed: u64) -> (Poly, i64) {
    let mut r = rng(seed);
    let n = r.gen_range(2..=3);
    let names = vars(&["x", "y", "z"][..n]);
    let d = r.gen_range(2..=4);
    let mut forms: Vec<Vec<i64>> = Vec::new();
    while forms.len() < d {
        let v = random_linear(&mut r, n);
        let repeat_ok = n == 2 && r.gen_bool(0.3) && !forms.is_empty();
        if repeat_ok {
            let k = r.gen_range(0..forms.len());
            forms.push(forms[k].clone());
        } else if !forms.iter().any(|w| proportional(w, &v)) {
            forms.push(v);
        }
    }
    let mut top = Poly::constant(&names, int(1));
    for v in &forms {
        top = &top * &linear_poly(&names, v);
    }
    let mut distinct: Vec<&Vec<i64>> = Vec::new();
    for v in &forms {
        if !distinct.iter().any(|w| proportional(w, v)) {
            distinct.push(v);
        }
    }
    let chi = if n == 2 {
        distinct.len() as i64
    } else {
        let mut points: Vec<(Vec<i64>, usize)> = Vec::new();
        for i in 0..distinct.len() {
            for j in i + 1..distinct.len() {
                let q = cross(distinct[i], distinct[j]);
                if !points.iter().any(|(w, _)| proportional(w, &q)) {
                    let on = distinct.iter().filter(|l| l.iter().zip(&q).map(|(a, b)| a * b).sum::<i64>() == 0).count();
                    points.push((q, on));
                }
            }
        }
        2 * distinct.len() as i64 - points.iter().map(|(_, k)| *k as i64 - 1).sum::<i64>()
    };
    let lower = random_poly(&mut r, &names, d as u32 - 1, 3);
    (&top + &lower, chi)
}

/// Returns whether both formulas applied.
pub fn eqf_eqb_agreement(seed: u64) -> std::result::Result<bool, String> {
    let (f, chi) = arrangement_poly(seed);
    let opts = AnalysisOptions { seed, chi_fd: Some(chi), ..Default::default() };
    let a = analyze(&f, &opts).map_err(|e| format!("{f}: {e}"))?;
    if a.report.method != Method::EqF {
        return Ok(false);
    }
    let v = a
        .report
        .range_verdicts
        .iter()
        .find(|v| v.name == "EQF_EQB_AGREE")
        .ok_or_else(|| format!("{f}: agreement verdict missing"))?;
    if v.pass {
        Ok(true)
    } else {
        Err(format!("{f} (chi = {chi}): {}", v.detail))
    }
}
