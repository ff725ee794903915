//! End-to-end defect computation for a single polynomial.

use serde::Serialize;

use crate::betti::{self, BettiReport, Verdict};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::singularity::{self, ChartScope, SingularityProfile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub seed: u64,
    pub t_samples: usize,
    /// Treat the general fibre as having homology concentrated in the top
    /// degree even when the affine critical locus is not isolated.
    pub assume_concentrated: bool,
    /// Caller asserts the tangencies at infinity form a reduced line of
    /// Morse transversal type; enables the corresponding lower bound.
    pub line_at_infinity: bool,
    /// Euler characteristic of `{f_d = 0}`, needed when the tangencies at
    /// infinity are not finite.
    pub chi_fd: Option<i64>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            seed: 0,
            t_samples: 2,
            assume_concentrated: false,
            line_at_infinity: false,
            chi_fd: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub poly: String,
    pub vars: Vec<String>,
    pub profile: SingularityProfile,
    pub report: BettiReport,
}

impl Analysis {
    pub fn delta(&self) -> Option<i64> {
        self.report.delta
    }
}

pub fn analyze(f: &Poly, opts: &AnalysisOptions) -> Result<Analysis> {
    let profile = singularity::singularity_profile(f, opts.seed)?;
    let mut report = match compute(f, &profile, opts) {
        Ok(r) => r,
        Err(Error::Gate(reason)) => BettiReport::not_computed(&profile, reason),
        Err(Error::NonIsolated) => {
            BettiReport::not_computed(&profile, "singular points at infinity are not isolated")
        }
        Err(e) => return Err(e),
    };
    report.range_verdicts.extend(betti::range_check(&report, &profile, opts.line_at_infinity));
    report.classification_candidates = betti::candidates_for(&report);
    Ok(Analysis { poly: f.to_string(), vars: f.vars().to_vec(), profile, report })
}

fn compute(f: &Poly, profile: &SingularityProfile, opts: &AnalysisOptions) -> Result<BettiReport> {
    let conc = opts.assume_concentrated;
    if profile.dim_sing_affine.0 >= 1 && !conc {
        return Err(Error::Gate(
            "affine critical locus has positive dimension; concentrated homology not assumed".into(),
        ));
    }
    match profile.chart_scope {
        Some(ChartScope::SigmaInf) => {
            let pairs =
                singularity::milnor_pairs_with_profile(f, profile, opts.seed, opts.t_samples, conc)?;
            let mut report = betti::delta_eqf(profile, &pairs, conc)?;
            if let Some(chi_fd) = opts.chi_fd {
                let b = betti::delta_eqb(profile, pairs.sum_mu_fiber, chi_fd, conc)?;
                report.range_verdicts.push(Verdict {
                    name: "EQF_EQB_AGREE".into(),
                    pass: b.delta == report.delta,
                    detail: format!("eqF = {:?}, eqB = {:?}", report.delta, b.delta),
                });
            }
            Ok(report)
        }
        Some(ChartScope::SigmaCapFd1) => {
            let chi_fd = opts.chi_fd.ok_or_else(|| {
                Error::Gate(
                    "tangencies at infinity are not finite; the Euler characteristic of \
                     {f_d = 0} must be supplied"
                        .into(),
                )
            })?;
            let (mu, ts) =
                singularity::fibre_milnor_sum(f, profile, opts.seed, opts.t_samples)?;
            let mut report = betti::delta_eqb(profile, mu, chi_fd, conc)?;
            report.t_used = ts.iter().map(|t| t.to_string()).collect();
            Ok(report)
        }
        None => Err(Error::Gate("tangencies on {f_(d-1) = 0} are not finite".into())),
    }
}
