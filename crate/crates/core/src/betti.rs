//! Euler characteristics, the top Betti defect and its consistency checks.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::invariants::VarietyDim;
use crate::singularity::{MilnorPairSums, SingularityProfile};

/// `(-1)^k`.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Euler characteristic of a smooth degree-`d` hypersurface in `P^m`.
pub fn chi_smooth(m: u32, d: u32) -> i64 {
    assert!(m >= 1 && d >= 1, "chi_smooth needs m >= 1 and d >= 1");
    let n = m as i128 + 1;
    let d = d as i128;
    let top = 1 + sign(n as i64 - 1) as i128 * (d - 1).pow(n as u32);
    assert!(top % d == 0, "non-integral Euler characteristic");
    (n - top / d) as i64
}

/// `(d-1)^n`, the top Betti number of a general-at-infinity polynomial.
pub fn max_betti(n: usize, d: u32) -> i64 {
    (d as i64 - 1).pow(n as u32)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "eqF")]
    EqF,
    #[serde(rename = "eqB")]
    EqB,
    #[serde(rename = "general-at-infinity")]
    GeneralAtInfinity,
    #[serde(rename = "none")]
    None,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::EqF => "eqF",
            Method::EqB => "eqB",
            Method::GeneralAtInfinity => "general-at-infinity",
            Method::None => "none",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Verdict { name: name.to_string(), pass, detail: detail.into() }
    }
}

fn ser_maybe<S: Serializer>(v: &Option<i64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(k) => s.serialize_i64(*k),
        None => s.serialize_str("not computed"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiReport {
    pub n: usize,
    pub d: u32,
    #[serde(serialize_with = "ser_maybe")]
    pub delta: Option<i64>,
    #[serde(serialize_with = "ser_maybe")]
    pub b_top: Option<i64>,
    pub method: Method,
    pub dim_sing: VarietyDim,
    pub dim_sigma_inf: VarietyDim,
    pub dim_sigma_cap_fd1: VarietyDim,
    pub general_at_infinity: bool,
    pub chi_smooth: i64,
    pub delta_chi_inf: Option<i64>,
    pub chi_fd: Option<i64>,
    pub mu_fiber_sum: Option<u64>,
    pub mu_boundary_sum: Option<u64>,
    pub t_used: Vec<String>,
    pub assumed_concentrated: bool,
    pub gate: Option<String>,
    pub range_verdicts: Vec<Verdict>,
    pub classification_candidates: Vec<BoundaryCandidate>,
}

impl BettiReport {
    fn skeleton(profile: &SingularityProfile, method: Method) -> Self {
        BettiReport {
            n: profile.n,
            d: profile.d,
            delta: None,
            b_top: None,
            method,
            dim_sing: profile.dim_sing_affine,
            dim_sigma_inf: profile.dim_sigma_inf,
            dim_sigma_cap_fd1: profile.dim_sigma_cap_fd1,
            general_at_infinity: profile.general_at_infinity,
            chi_smooth: chi_smooth(profile.n as u32 - 1, profile.d),
            delta_chi_inf: None,
            chi_fd: None,
            mu_fiber_sum: None,
            mu_boundary_sum: None,
            t_used: vec![],
            assumed_concentrated: false,
            gate: None,
            range_verdicts: vec![],
            classification_candidates: vec![],
        }
    }

    /// Report for a polynomial whose defect could not be computed.
    pub fn not_computed(profile: &SingularityProfile, reason: impl Into<String>) -> Self {
        BettiReport { gate: Some(reason.into()), ..Self::skeleton(profile, Method::None) }
    }

    fn set_delta(&mut self, delta: i64) {
        self.delta = Some(delta);
        self.b_top = Some(max_betti(self.n, self.d) - delta);
    }

    pub fn all_verdicts_pass(&self) -> bool {
        self.range_verdicts.iter().all(|v| v.pass)
    }
}

fn concentration_gate(profile: &SingularityProfile, assume_concentrated: bool) -> Result<()> {
    if profile.dim_sing_affine.0 >= 1 && !assume_concentrated {
        return Err(Error::Gate(
            "affine critical locus is not isolated; pass the concentrated-homology override".into(),
        ));
    }
    Ok(())
}

/// Defect as the sum of the fibre and boundary Milnor numbers over the
/// tangencies at infinity.
pub fn delta_eqf(
    profile: &SingularityProfile,
    pairs: &MilnorPairSums,
    assume_concentrated: bool,
) -> Result<BettiReport> {
    if profile.dim_sigma_inf.0 >= 1 {
        return Err(Error::Gate("tangencies at infinity are not finite".into()));
    }
    concentration_gate(profile, assume_concentrated)?;
    let delta = (pairs.sum_mu_fiber + pairs.sum_mu_boundary) as i64;
    let method = if delta == 0 {
        if !profile.general_at_infinity {
            return Err(Error::Gate("zero defect but tangencies at infinity are present".into()));
        }
        Method::GeneralAtInfinity
    } else {
        Method::EqF
    };
    let mut r = BettiReport::skeleton(profile, method);
    r.set_delta(delta);
    r.mu_fiber_sum = Some(pairs.sum_mu_fiber);
    r.mu_boundary_sum = Some(pairs.sum_mu_boundary);
    r.delta_chi_inf = Some(sign(profile.n as i64) * pairs.sum_mu_boundary as i64);
    r.chi_fd = r.delta_chi_inf.map(|dc| r.chi_smooth - dc);
    r.t_used = pairs.t_used.iter().map(|t| t.to_string()).collect();
    r.assumed_concentrated = assume_concentrated && profile.dim_sing_affine.0 >= 1;
    Ok(r)
}

/// Defect from the fibre Milnor sum and `χ({f_d = 0})`.
pub fn delta_eqb(
    profile: &SingularityProfile,
    mu_sum: u64,
    chi_fd: i64,
    assume_concentrated: bool,
) -> Result<BettiReport> {
    if profile.dim_sigma_cap_fd1.0 >= 1 {
        return Err(Error::Gate("tangencies on {f_(d-1) = 0} are not finite".into()));
    }
    concentration_gate(profile, assume_concentrated)?;
    let mut r = BettiReport::skeleton(profile, Method::EqB);
    let dchi = r.chi_smooth - chi_fd;
    r.set_delta(mu_sum as i64 + sign(profile.n as i64) * dchi);
    r.mu_fiber_sum = Some(mu_sum);
    r.delta_chi_inf = Some(dchi);
    r.chi_fd = Some(chi_fd);
    r.assumed_concentrated = assume_concentrated && profile.dim_sing_affine.0 >= 1;
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveComponent {
    pub g: u32,
    pub mu_t: u32,
    pub nu: u32,
    pub gamma: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    /// Isolated singular point off the curves, with its Milnor number.
    Mu,
    /// Special point on a curve with a local fibre homotopic to a sphere.
    Dinf,
    /// Special point on a curve with an explicitly given local term.
    Chi,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointStratum {
    pub kind: PointKind,
    #[serde(default)]
    pub value: i64,
}

/// Stratification of a projective hypersurface `V ⊂ P^{n-1}` of degree `d`
/// whose singular locus is a union of curves and points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratificationData {
    pub n: u32,
    pub d: u32,
    #[serde(default)]
    pub curves: Vec<CurveComponent>,
    #[serde(default)]
    pub points: Vec<PointStratum>,
}

impl StratificationData {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InconsistentStrata(m));
        if self.n < 2 || self.d < 1 {
            return bad(format!("need n >= 2 and d >= 1, got n = {}, d = {}", self.n, self.d));
        }
        if let Some(c) = self.curves.iter().find(|c| c.mu_t == 0) {
            return bad(format!("transversal Milnor number must be positive: {c:?}"));
        }
        if let Some(p) = self.points.iter().find(|p| p.kind == PointKind::Mu && p.value < 1) {
            return bad(format!("isolated point needs a positive Milnor number: {p:?}"));
        }
        let gamma: u64 = self.curves.iter().map(|c| c.gamma as u64).sum();
        let special = self.points.iter().filter(|p| p.kind != PointKind::Mu).count() as u64;
        if gamma != special {
            return bad(format!(
                "curves declare {gamma} special points but {special} are listed"
            ));
        }
        Ok(())
    }
}

/// Euler characteristic of the stratified hypersurface.
pub fn euler_sum(data: &StratificationData) -> Result<i64> {
    data.validate()?;
    let s = sign(data.n as i64 - 1);
    let mut chi = chi_smooth(data.n - 1, data.d);
    for c in &data.curves {
        chi += s * (c.nu as i64 + c.gamma as i64 + 2 * c.g as i64 - 2) * c.mu_t as i64;
    }
    for p in &data.points {
        chi += match p.kind {
            PointKind::Mu => s * p.value,
            PointKind::Dinf => s,
            PointKind::Chi => p.value,
        };
    }
    Ok(chi)
}

/// Lower bound for polynomials with isolated affine singularities whose
/// tangencies at infinity form a reduced line of Morse transversal type.
pub fn line_at_infinity_bound(n: usize, d: u32) -> i64 {
    2 * (n as i64 - 1) * (d as i64 - 2) + 1
}

/// Per-instance consistency checks of a computed defect against the
/// dimensions in the profile.
pub fn range_check(
    report: &BettiReport,
    profile: &SingularityProfile,
    line_at_infinity: bool,
) -> Vec<Verdict> {
    let Some(delta) = report.delta else {
        return vec![];
    };
    let d = profile.d as i64;
    let ds = profile.dim_sing_affine;
    let di = profile.dim_sigma_inf;
    let dims = format!("dim Sing = {ds}, dim Sigma_inf = {di}");
    let mut out = vec![
        Verdict::new("DELTA_NONNEG", delta >= 0, format!("delta = {delta}")),
        Verdict::new(
            "GAI_IFF_ZERO",
            (delta == 0) == profile.general_at_infinity,
            format!("delta = {delta}, general_at_infinity = {}", profile.general_at_infinity),
        ),
    ];
    let in_b = 0 < delta && delta <= d - 1;
    out.push(Verdict::new(
        "RANGE_B",
        !in_b || (ds.0 <= 0 && di.0 <= 0),
        if in_b { dims.clone() } else { "not in range".into() },
    ));
    if d >= 3 {
        let in_c = d <= delta && delta < 2 * d - 2;
        let detail = if !in_c {
            "not in range".to_string()
        } else if ds.0 >= 1 {
            format!("{dims}; affine critical line left for inspection")
        } else {
            dims.clone()
        };
        out.push(Verdict::new("RANGE_C_PARTIAL", !in_c || di.0 <= 0, detail));
    }
    let positive_dim = ds.0 >= 1 || di.0 >= 1;
    out.push(Verdict::new(
        "NONISOLATED_LOWER",
        !positive_dim || delta >= d - 1,
        if positive_dim { format!("{dims}, delta = {delta} vs d - 1 = {}", d - 1) } else { "isolated".into() },
    ));
    if line_at_infinity {
        let bound = line_at_infinity_bound(profile.n, profile.d);
        out.push(Verdict::new(
            "LINE_INF_BOUND",
            delta >= bound,
            format!("delta = {delta}, bound = {bound}"),
        ));
    }
    out
}

/// Singularity type `⟨A_i|A_j⟩` of a boundary pair, with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BoundaryPair {
    pub count: u32,
    pub fibre: u32,
    pub section: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryCandidate {
    pub pairs: Vec<BoundaryPair>,
    pub boundary_type: String,
    pub arnold_type: String,
    pub qualifier: &'static str,
}

impl BoundaryCandidate {
    pub fn mu_fibre(&self) -> u32 {
        self.pairs.iter().map(|p| p.count * p.fibre).sum()
    }

    pub fn mu_section(&self) -> u32 {
        self.pairs.iter().map(|p| p.count * p.section).sum()
    }
}

fn sub(k: u32) -> char {
    char::from_u32(0x2080 + k).expect("single digit")
}

fn pair_label(p: &BoundaryPair) -> String {
    let mult = if p.count > 1 { p.count.to_string() } else { String::new() };
    format!("{mult}⟨A{}|A{}⟩", sub(p.fibre), sub(p.section))
}

const TABLE: [&[(&[(u32, u32, u32)], &str)]; 4] = [
    &[(&[(1, 0, 0)], "A₀")],
    &[(&[(1, 0, 1)], "A₁")],
    &[(&[(1, 0, 2)], "A₂"), (&[(2, 0, 1)], "2A₁"), (&[(1, 1, 1)], "B₂")],
    &[
        (&[(1, 0, 3)], "A₃"),
        (&[(1, 0, 2), (1, 0, 1)], "A₂ + A₁"),
        (&[(3, 0, 1)], "3A₁"),
        (&[(1, 1, 2)], "C₃"),
        (&[(1, 1, 1), (1, 0, 1)], "B₂ + A₁"),
        (&[(1, 2, 1)], "B₃"),
    ],
];

/// Boundary types at infinity compatible with a defect of at most three.
pub fn classify_defect(delta: i64) -> Result<Vec<BoundaryCandidate>> {
    if !(0..=3).contains(&delta) {
        return Err(Error::OutsideTable(delta));
    }
    Ok(TABLE[delta as usize]
        .iter()
        .map(|(pairs, arnold)| {
            let pairs: Vec<BoundaryPair> = pairs
                .iter()
                .map(|&(count, fibre, section)| BoundaryPair { count, fibre, section })
                .collect();
            let boundary_type = pairs.iter().map(pair_label).collect::<Vec<_>>().join(" + ");
            BoundaryCandidate {
                pairs,
                boundary_type,
                arnold_type: arnold.to_string(),
                qualifier: "μ-consistent",
            }
        })
        .collect())
}

/// Table row filtered by the computed fibre and boundary Milnor sums.
pub fn candidates_for(report: &BettiReport) -> Vec<BoundaryCandidate> {
    let (Some(delta), Some(fib), Some(bd)) =
        (report.delta, report.mu_fiber_sum, report.mu_boundary_sum)
    else {
        return vec![];
    };
    if report.dim_sing.0 >= 1 || report.dim_sigma_inf.0 >= 1 {
        return vec![];
    }
    match classify_defect(delta) {
        Ok(row) => row
            .into_iter()
            .filter(|c| delta == 0 || (c.mu_fibre() as u64 == fib && c.mu_section() as u64 == bd))
            .collect(),
        Err(_) => vec![],
    }
}
