//! One-parameter deformations `f + eps*g` that simplify the singular loci,
//! with per-instance checks of the dimension drops and of the
//! semi-continuity of the defect.

use rand::Rng;
use serde::Serialize;

use crate::analysis::{analyze, AnalysisOptions};
use crate::betti::Verdict;
use crate::error::{Error, Result};
use crate::groebner::{same_ideal, standard_basis, MonomialOrder};
use crate::invariants::{krull_dim, proj_dim, VarietyDim};
use crate::poly::{int, Monomial, Poly, Rational};
use crate::sampling::{self, Stream};
use crate::singularity::bertini_check;

/// Draws of a generic linear form before giving up.
pub const FORM_DRAWS: usize = 20;
pub const DEFAULT_EPSILONS: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeformationKind {
    /// `f + eps*l` for a linear form `l`.
    Linear,
    /// `f + eps*l^d` for a linear form `l`.
    Power,
    /// `f + eps*h` for a form `h` of degree `d` with no tangencies at
    /// infinity.
    General,
}

impl std::str::FromStr for DeformationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(DeformationKind::Linear),
            "power" => Ok(DeformationKind::Power),
            "general" => Ok(DeformationKind::General),
            other => Err(Error::InvalidInput(format!("unknown deformation kind `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationSpec {
    pub kind: DeformationKind,
    pub with: Poly,
    pub epsilons: Vec<Rational>,
}

impl DeformationSpec {
    pub fn new(kind: DeformationKind, with: Poly, epsilons: Vec<Rational>) -> Result<Self> {
        if epsilons.is_empty() || epsilons.iter().any(|e| *e == int(0)) {
            return Err(Error::InvalidInput("epsilons must be nonempty and nonzero".into()));
        }
        match kind {
            DeformationKind::Linear | DeformationKind::Power => {
                if !(with.is_homogeneous() && with.degree().finite() == Some(1)) {
                    return Err(Error::NotLinear(with.to_string()));
                }
            }
            DeformationKind::General => {
                if with.is_zero() || !with.is_homogeneous() {
                    return Err(Error::NonHomogeneous(with.to_string()));
                }
                if !proj_dim(&with.gradient())?.is_empty() {
                    return Err(Error::InvalidInput(format!(
                        "{with} has tangencies at infinity"
                    )));
                }
            }
        }
        Ok(DeformationSpec { kind, with, epsilons })
    }

    /// Seeded spec for `f`: a linear form general with respect to `f` and
    /// `f_d`, or the Fermat form for the general kind, plus `count` values
    /// of `eps`.
    pub fn sampled(f: &Poly, kind: DeformationKind, seed: u64, count: usize) -> Result<Self> {
        let with = match kind {
            DeformationKind::General => fermat_form(f.vars(), degree(f)?),
            _ => general_linear_form(f, seed)?,
        };
        Self::new(kind, with, sample_epsilons(seed, count.max(1)))
    }

    /// Same as [`DeformationSpec::sampled`] with a caller-supplied form.
    pub fn with_form(kind: DeformationKind, with: Poly, seed: u64, count: usize) -> Result<Self> {
        Self::new(kind, with, sample_epsilons(seed, count.max(1)))
    }
}

fn degree(f: &Poly) -> Result<u32> {
    f.degree()
        .finite()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::InvalidInput("polynomial must have positive degree".into()))
}

pub fn sample_epsilons(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = sampling::rng(seed, Stream::Epsilon);
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let e = sampling::nonzero_rational(&mut rng, sampling::HEIGHT_BOUND);
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

/// `x_1^d + ... + x_n^d`.
pub fn fermat_form(vars: &[String], d: u32) -> Poly {
    Poly::from_terms(vars, (0..vars.len()).map(|i| (Monomial::var(i).pow(d), int(1))))
}

/// Seeded form `sum c_i x_i^d + small perturbation`, redrawn until it has
/// no tangencies at infinity.
pub fn random_general_form(vars: &[String], d: u32, seed: u64) -> Result<Poly> {
    let mut rng = sampling::rng(seed, Stream::Perturbation);
    let n = vars.len();
    for _ in 0..FORM_DRAWS {
        let mut h = Poly::zero(vars);
        for i in 0..n {
            h.add_term(Monomial::var(i).pow(d), int(rng.gen_range(1..=5)));
        }
        for _ in 0..n {
            let mut m = Monomial::one();
            for _ in 0..d {
                m = m.mul(&Monomial::var(rng.gen_range(0..n)));
            }
            h.add_term(m, int(rng.gen_range(-2..=2)));
        }
        if !h.is_zero() && h.is_homogeneous() && proj_dim(&h.gradient())?.is_empty() {
            return Ok(h);
        }
    }
    Err(Error::InvalidInput("no general form found".into()))
}

pub fn deform(f: &Poly, spec: &DeformationSpec, eps: &Rational) -> Result<Poly> {
    if *eps == int(0) {
        return Err(Error::InvalidInput("eps must be nonzero".into()));
    }
    let d = degree(f)?;
    let g = match spec.kind {
        DeformationKind::Linear => spec.with.clone(),
        DeformationKind::Power => spec.with.pow(d),
        DeformationKind::General => spec.with.clone(),
    };
    f.same_ring(&spec.with)?;
    let out = f + &g.scale(eps);
    match out.degree().finite() {
        Some(e) if e == d => Ok(out),
        other => Err(Error::DegreeDrop {
            expected: d,
            got: other.map_or("-inf".into(), |e| e.to_string()),
        }),
    }
}

fn dim_sing(f: &Poly) -> Result<VarietyDim> {
    krull_dim(&standard_basis(&f.gradient(), MonomialOrder::DegRevLex)?)
}

fn sigma_inf_gens(f: &Poly) -> Result<Vec<Poly>> {
    Ok(f.graded_part(degree(f)?).gradient())
}

fn dim_sigma_inf(f: &Poly) -> Result<VarietyDim> {
    proj_dim(&sigma_inf_gens(f)?)
}

/// Genericity of `l` as used by the dimension-drop statements: polar loci of
/// `f` and `f_d` are curves or empty, and `{l = 0}` cuts each positive
/// dimensional singular locus properly.
pub fn is_general_for(f: &Poly, l: &Poly) -> Result<bool> {
    let fd = f.graded_part(degree(f)?);
    if !bertini_check(f, l)? || !bertini_check(&fd, l)? {
        return Ok(false);
    }
    let ds = dim_sing(f)?;
    if ds.0 >= 1 {
        let mut gens = f.gradient();
        gens.push(l.clone());
        if krull_dim(&standard_basis(&gens, MonomialOrder::DegRevLex)?)?.0 != ds.0 - 1 {
            return Ok(false);
        }
    }
    let di = dim_sigma_inf(f)?;
    if di.0 >= 1 {
        let mut gens = fd.gradient();
        gens.push(l.clone());
        if proj_dim(&gens)?.0 != di.0 - 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn general_linear_form(f: &Poly, seed: u64) -> Result<Poly> {
    let mut rng = sampling::rng(seed, Stream::LinearForm);
    for _ in 0..FORM_DRAWS {
        let l = sampling::linear_form(&mut rng, f.vars(), sampling::MATRIX_ENTRY_BOUND);
        if is_general_for(f, &l)? {
            return Ok(l);
        }
    }
    Err(Error::Gate("no general linear form found; retry with a new seed".into()))
}

fn expected_drop(before: VarietyDim) -> impl Fn(VarietyDim) -> bool {
    move |after| if before.0 >= 1 { after.0 == before.0 - 1 } else { after.0 <= 0 }
}

/// Checks, for every sampled `eps`, the dimension statements attached to the
/// linear and power deformations. Verdict names: `GENERIC_L`,
/// `SING_DIM_DROP`, `SIGMA_INF_DIM_DROP` (power), `SING_ISOLATED`,
/// `SIGMA_INF_UNCHANGED` (linear), and `EPS_AGREEMENT`.
pub fn dimension_drop_check(f: &Poly, spec: &DeformationSpec) -> Result<Vec<Verdict>> {
    if spec.kind == DeformationKind::General {
        return Err(Error::InvalidInput("dimension drops concern linear and power kinds".into()));
    }
    if !is_general_for(f, &spec.with)? {
        return Ok(vec![Verdict::new(
            "GENERIC_L",
            false,
            format!("{} is not general with respect to f; retry with a new seed", spec.with),
        )]);
    }
    let (ds, di) = (dim_sing(f)?, dim_sigma_inf(f)?);
    let sigma_f = standard_basis(&sigma_inf_gens(f)?, MonomialOrder::DegRevLex)?;
    let mut per_eps: Vec<Vec<Verdict>> = Vec::new();
    for eps in &spec.epsilons {
        let g = deform(f, spec, eps)?;
        let (gs, gi) = (dim_sing(&g)?, dim_sigma_inf(&g)?);
        let at = format!("eps = {eps}");
        let v = match spec.kind {
            DeformationKind::Power => vec![
                Verdict::new(
                    "SING_DIM_DROP",
                    expected_drop(ds)(gs),
                    format!("{at}: dim Sing {ds} -> {gs}"),
                ),
                Verdict::new(
                    "SIGMA_INF_DIM_DROP",
                    expected_drop(di)(gi),
                    format!("{at}: dim Sigma_inf {di} -> {gi}"),
                ),
            ],
            _ => {
                let sigma_g = standard_basis(&sigma_inf_gens(&g)?, MonomialOrder::DegRevLex)?;
                vec![
                    Verdict::new("SING_ISOLATED", gs.0 <= 0, format!("{at}: dim Sing {ds} -> {gs}")),
                    Verdict::new(
                        "SIGMA_INF_UNCHANGED",
                        same_ideal(&sigma_f, &sigma_g),
                        format!("{at}: dim Sigma_inf {di} -> {gi}"),
                    ),
                ]
            }
        };
        per_eps.push(v);
    }
    let agree = per_eps.windows(2).all(|w| {
        w[0].iter().zip(&w[1]).all(|(a, b)| a.pass == b.pass)
    });
    let mut out = vec![Verdict::new("GENERIC_L", true, spec.with.to_string())];
    out.extend(per_eps.into_iter().flatten());
    out.push(Verdict::new(
        "EPS_AGREEMENT",
        agree,
        format!("{} samples", spec.epsilons.len()),
    ));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Comparison {
    Holds,
    Violated,
    /// One of the defects is not computable under the gates.
    Incomparable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformedDelta {
    pub eps: String,
    pub poly: String,
    pub delta: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemicontinuityReport {
    pub delta: Option<i64>,
    pub deformed: Vec<DeformedDelta>,
    pub comparison: Comparison,
}

impl SemicontinuityReport {
    pub fn verdict(&self) -> Verdict {
        let shown: Vec<String> = self
            .deformed
            .iter()
            .map(|d| format!("{}: {}", d.eps, d.delta.map_or("not computed".into(), |x| x.to_string())))
            .collect();
        Verdict::new(
            "SEMICONTINUITY",
            self.comparison != Comparison::Violated,
            format!("delta(f) = {:?}; {}", self.delta, shown.join(", ")),
        )
    }
}

/// Compares the defect of `f` with that of every sampled deformation.
/// `opts` apply to `f`; deformations are analyzed with the same seed and
/// override flag but without a supplied `chi_fd`.
pub fn semicontinuity_check(
    f: &Poly,
    spec: &DeformationSpec,
    opts: &AnalysisOptions,
) -> Result<SemicontinuityReport> {
    let delta = analyze(f, opts)?.report.delta;
    let sub = AnalysisOptions { chi_fd: None, line_at_infinity: false, ..opts.clone() };
    let mut deformed = Vec::new();
    for eps in &spec.epsilons {
        let g = deform(f, spec, eps)?;
        let dg = analyze(&g, &sub)?.report.delta;
        deformed.push(DeformedDelta { eps: eps.to_string(), poly: g.to_string(), delta: dg });
    }
    let comparison = match delta {
        None => Comparison::Incomparable,
        Some(df) => {
            if deformed.iter().any(|d| d.delta.is_none()) {
                Comparison::Incomparable
            } else if deformed.iter().all(|d| d.delta.is_some_and(|x| x <= df)) {
                Comparison::Holds
            } else {
                Comparison::Violated
            }
        }
    };
    Ok(SemicontinuityReport { delta, deformed, comparison })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub kind: DeformationKind,
    pub with: String,
    pub eps: String,
    pub poly: String,
    pub dim_sing: VarietyDim,
    pub dim_sigma_inf: VarietyDim,
}

/// Applies one linear deformation when the affine critical locus has
/// positive dimension, then power deformations until the tangencies at
/// infinity are finite. Returns the steps taken (possibly none).
pub fn isolating_chain(f: &Poly, seed: u64) -> Result<Vec<ChainStep>> {
    let d = degree(f)?;
    let mut g = f.clone();
    let mut steps = Vec::new();
    if dim_sing(&g)?.0 >= 1 {
        steps.push(chain_step(&mut g, DeformationKind::Linear, seed)?);
    }
    let budget = dim_sigma_inf(&g)?.0.max(1) as usize;
    for k in 0..budget {
        if dim_sigma_inf(&g)?.0 <= 0 && dim_sing(&g)?.0 <= 0 {
            break;
        }
        if d < 2 {
            break;
        }
        steps.push(chain_step(&mut g, DeformationKind::Power, seed.wrapping_add(k as u64 + 1))?);
    }
    Ok(steps)
}

fn chain_step(g: &mut Poly, kind: DeformationKind, seed: u64) -> Result<ChainStep> {
    let spec = DeformationSpec::sampled(g, kind, seed, 1)?;
    let eps = &spec.epsilons[0];
    *g = deform(g, &spec, eps)?;
    Ok(ChainStep {
        kind,
        with: spec.with.to_string(),
        eps: eps.to_string(),
        poly: g.to_string(),
        dim_sing: dim_sing(g)?,
        dim_sigma_inf: dim_sigma_inf(g)?,
    })
}
