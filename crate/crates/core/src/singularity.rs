//! Critical loci, tangencies at infinity, polar curves and Milnor-number
//! sums.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{
    normal_form, saturate_by_ideal, standard_basis, IdealBasis, MonomialOrder,
};
use crate::invariants::{
    is_zero_dim, krull_dim, proj_dim, quotient_dim, standard_monomials, StaircaseCount, VarietyDim,
};
use crate::linalg;
use crate::poly::{fresh_var, Degree, LinearChange, Monomial, Poly, Rational};
use crate::sampling::{self, Stream};

pub const CHART_DRAWS: usize = 20;
const T_ROUNDS: usize = 4;
const T_SMOOTH_DRAWS: usize = 50;

pub fn jacobian_ideal(f: &Poly) -> IdealBasis {
    IdealBasis::new(f.vars(), f.gradient(), MonomialOrder::DegRevLex).expect("same ring")
}

fn jacobian_basis(f: &Poly) -> Result<IdealBasis> {
    standard_basis(&f.gradient(), MonomialOrder::DegRevLex)
}

/// Which locus at infinity the chart was verified against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChartScope {
    /// All of the tangencies at infinity.
    SigmaInf,
    /// Only the tangencies on `{f_{d-1} = 0}`.
    SigmaCapFd1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityProfile {
    pub n: usize,
    pub d: u32,
    pub dim_sing_affine: VarietyDim,
    pub dim_sigma_inf: VarietyDim,
    pub dim_sigma_cap_fd1: VarietyDim,
    pub general_at_infinity: bool,
    pub chart_change: Option<LinearChange>,
    pub chart_scope: Option<ChartScope>,
}

fn degree_of(f: &Poly) -> Result<u32> {
    match f.degree() {
        Degree::Finite(d) if d >= 1 => Ok(d),
        _ => Err(Error::InvalidInput(format!("expected a nonconstant polynomial, got {f}"))),
    }
}

/// Generators of the cone over `Σ_f^∞`, optionally cut by `f_{d-1}`.
fn sigma_gens(f: &Poly, with_fd1: bool) -> Vec<Poly> {
    let d = f.degree().finite().unwrap_or(0);
    let mut g = f.leading_form().gradient();
    if with_fd1 && d >= 1 {
        g.push(f.graded_part(d - 1));
    }
    g
}

pub fn singularity_profile(f: &Poly, seed: u64) -> Result<SingularityProfile> {
    let d = degree_of(f)?;
    let n = f.nvars();
    if n < 2 {
        return Err(Error::InvalidInput("at least two variables are required".into()));
    }
    let dim_sing_affine = krull_dim(&jacobian_basis(f)?)?;
    let dim_sigma_inf = proj_dim(&sigma_gens(f, false))?;
    let dim_sigma_cap_fd1 = proj_dim(&sigma_gens(f, true))?;
    let scope = if dim_sigma_inf.0 <= 0 {
        Some(ChartScope::SigmaInf)
    } else if dim_sigma_cap_fd1.0 <= 0 {
        Some(ChartScope::SigmaCapFd1)
    } else {
        None
    };
    let chart_change = match scope {
        Some(s) => Some(find_chart(f, s, seed)?),
        None => None,
    };
    Ok(SingularityProfile {
        n,
        d,
        dim_sing_affine,
        dim_sigma_inf,
        dim_sigma_cap_fd1,
        general_at_infinity: dim_sigma_inf.is_empty(),
        chart_change,
        chart_scope: scope,
    })
}

/// Seeded change of coordinates after which the chosen locus at infinity
/// misses the hyperplane `x_n = 0`.
pub fn find_chart(f: &Poly, scope: ChartScope, seed: u64) -> Result<LinearChange> {
    let n = f.nvars();
    let mut rng = sampling::rng(seed, Stream::Chart);
    for _ in 0..CHART_DRAWS {
        let c = sampling::invertible_matrix(&mut rng, n, sampling::MATRIX_ENTRY_BOUND);
        if chart_covers(f, &c, scope)? {
            return Ok(c);
        }
    }
    Err(Error::ChartNormalization(CHART_DRAWS))
}

pub fn chart_covers(f: &Poly, c: &LinearChange, scope: ChartScope) -> Result<bool> {
    let g = f.apply_change(c)?;
    let mut gens = sigma_gens(&g, scope == ChartScope::SigmaCapFd1);
    gens.push(Poly::var_at(g.vars(), g.nvars() - 1));
    Ok(proj_dim(&gens)?.is_empty())
}

fn check_linear(l: &Poly) -> Result<()> {
    match l.degree() {
        Degree::Finite(1) => Ok(()),
        _ => Err(Error::NotLinear(l.to_string())),
    }
}

/// Closure of the critical set of `(l, f)` minus the critical set of `f`.
///
/// The critical set of `(l, f)` is cut out by the 2x2 minors of the
/// matrix with rows `∇f` and `∇l`.
pub fn polar_locus(f: &Poly, l: &Poly) -> Result<IdealBasis> {
    check_linear(l)?;
    if l.vars() != f.vars() {
        return Err(Error::VariableMismatch { left: f.vars().to_vec(), right: l.vars().to_vec() });
    }
    let gf = f.gradient();
    let gl: Vec<Rational> = l.gradient().iter().map(Poly::constant_term).collect();
    let mut minors = Vec::new();
    for i in 0..gf.len() {
        for j in i + 1..gf.len() {
            let m = &gf[i].scale(&gl[j]) - &gf[j].scale(&gl[i]);
            if !m.is_zero() {
                minors.push(m);
            }
        }
    }
    if minors.is_empty() {
        return IdealBasis::new(f.vars(), vec![], MonomialOrder::DegRevLex)
            .and_then(|b| crate::groebner::complete(&b));
    }
    let jac = f.gradient();
    if jac.iter().all(Poly::is_zero) {
        return standard_basis(&minors, MonomialOrder::DegRevLex);
    }
    saturate_by_ideal(&minors, &jac)
}

/// Dimension part of the Bertini-type statement: the polar locus is a
/// curve or empty. Reducedness is not checked.
pub fn bertini_check(f: &Poly, l: &Poly) -> Result<bool> {
    Ok(krull_dim(&polar_locus(f, l)?)?.0 <= 1)
}

/// Milnor number of `f` at a rational point, from the local standard basis
/// of the Jacobian ideal. `Infinite` means the critical point is not
/// isolated.
pub fn local_milnor(f: &Poly, point: &[Rational]) -> Result<StaircaseCount> {
    let g = f.translate(point)?;
    let grad = g.gradient();
    if grad.iter().any(|p| !p.constant_term().is_zero()) {
        return Ok(StaircaseCount::Finite(0));
    }
    let nonzero: Vec<Poly> = grad.into_iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(StaircaseCount::Infinite);
    }
    quotient_dim(&standard_basis(&nonzero, MonomialOrder::LocalDegRevLex)?)
}

/// Sum of the Milnor numbers of `g` over the singular points of `{g = 0}`.
///
/// Equals `dim R/(J(g) + g^k)` for `k` at least the number of variables: at
/// a critical point on the hypersurface `g^k` already lies in the local
/// Jacobian ideal, and off it `g` is a unit. When `J(g)` is
/// zero-dimensional this is the generalized kernel of multiplication by
/// `g` on `R/J(g)`.
pub fn milnor_sum_on_fiber(g: &Poly) -> Result<u64> {
    if g.is_zero() {
        return Err(Error::NonIsolated);
    }
    let jac = jacobian_basis(g)?;
    if jac.is_unit() {
        return Ok(0);
    }
    if let Some(basis) = standard_monomials(g.nvars(), &jac.leading_monomials()) {
        return multiplication_kernel(g, &jac, &basis);
    }
    let k = g.nvars().max(1) as u32;
    let g_red = normal_form(g, &jac)?;
    let mut power = g_red.clone();
    for _ in 1..k {
        power = normal_form(&(&power * &g_red), &jac)?;
    }
    let mut gens = jac.gens().to_vec();
    gens.push(power);
    match quotient_dim(&standard_basis(&gens, MonomialOrder::DegRevLex)?)? {
        StaircaseCount::Finite(k) => Ok(k),
        StaircaseCount::Infinite => Err(Error::NonIsolated),
    }
}

fn multiplication_kernel(g: &Poly, jac: &IdealBasis, basis: &[Monomial]) -> Result<u64> {
    let cols = multiplication_matrix(g, jac, basis)?;
    Ok(linalg::zero_eigenvalue_multiplicity(&cols) as u64)
}

/// Matrix of multiplication by `g` on `R/J` in the monomial basis `basis`,
/// by columns.
fn multiplication_matrix(g: &Poly, jac: &IdealBasis, basis: &[Monomial]) -> Result<Vec<Vec<Rational>>> {
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let g_red = normal_form(g, jac)?;
    basis
        .par_iter()
        .map(|m| {
            let r = normal_form(&g_red.mul_term(m, &Rational::one()), jac)?;
            let mut col = vec![Rational::zero(); basis.len()];
            for (mono, c) in r.terms() {
                col[index[mono]] = c.clone();
            }
            Ok(col)
        })
        .collect()
}

/// Same quantity as [`milnor_sum_on_fiber`] through two saturations: first
/// the critical components off the hypersurface, then the Jacobian ideal
/// with those removed.
pub fn milnor_sum_on_fiber_by_saturation(g: &Poly) -> Result<u64> {
    if g.is_zero() {
        return Err(Error::NonIsolated);
    }
    let jac = g.gradient();
    if jac.iter().any(|p| !p.is_zero() && p.is_constant()) {
        return Ok(0);
    }
    let off = saturate_by_ideal(&jac, std::slice::from_ref(g))?;
    let on = if off.is_unit() {
        jacobian_basis(g)?
    } else if off.gens().is_empty() {
        return Err(Error::NonIsolated);
    } else {
        saturate_by_ideal(&jac, off.gens())?
    };
    if !is_zero_dim(&on)? {
        return Err(Error::NonIsolated);
    }
    quotient_dim(&on)?.finite().ok_or(Error::NonIsolated)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MilnorPairSums {
    pub sum_mu_fiber: u64,
    pub sum_mu_boundary: u64,
    #[serde(serialize_with = "ser_rationals")]
    pub t_used: Vec<Rational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for q in v {
        seq.serialize_element(&q.to_string())?;
    }
    seq.end()
}

fn chart_of(profile: &SingularityProfile) -> Result<&LinearChange> {
    profile.chart_change.as_ref().ok_or(Error::ChartNormalization(CHART_DRAWS))
}

/// Boundary sum: Milnor numbers of `{f_d = 0} ⊂ P^{n-1}` at its singular
/// points, read in the chart `x_n = 1`.
pub fn boundary_milnor_sum(f: &Poly, profile: &SingularityProfile) -> Result<u64> {
    if profile.chart_scope != Some(ChartScope::SigmaInf) {
        return Err(Error::Gate("tangencies at infinity are not finite".into()));
    }
    let c = chart_of(profile)?;
    let fd = f.leading_form().apply_change(c)?;
    let g = fd.dehomogenize_at(fd.nvars() - 1, &Rational::one());
    if g.is_constant() {
        return Ok(0);
    }
    milnor_sum_on_fiber(&g)
}

/// The compactified fibre `{F - t z^d = 0}` in the chart `x_n = 1`.
pub fn fibre_in_chart(f: &Poly, c: &LinearChange, t: &Rational) -> Result<Poly> {
    let d = degree_of(f)?;
    let z = fresh_var(f.vars(), "_z");
    let big = f.apply_change(c)?.homogenize(&z, d)?;
    let mut g = big.dehomogenize_at(f.nvars() - 1, &Rational::one());
    let zi = g.nvars() - 1;
    g.add_term(Monomial::var(zi).pow(d), -t.clone());
    Ok(g)
}

/// True when `f = t` has no affine critical point.
pub fn fibre_is_smooth(jac: &IdealBasis, f: &Poly, t: &Rational) -> Result<bool> {
    let mut gens = jac.gens().to_vec();
    let mut ft = f.clone();
    ft.add_term(Monomial::one(), -t.clone());
    gens.push(ft);
    Ok(standard_basis(&gens, MonomialOrder::DegRevLex)?.is_unit())
}

/// Critical values of `f`. With finitely many critical points they are the
/// eigenvalues of multiplication by `f` on `R/J(f)`, so a value is tested
/// with one determinant instead of a Groebner basis.
enum CriticalValues<'a> {
    None,
    Eigen(Vec<Vec<Rational>>),
    General(&'a IdealBasis, &'a Poly),
}

impl<'a> CriticalValues<'a> {
    fn new(f: &'a Poly, jac: &'a IdealBasis) -> Result<Self> {
        if jac.is_unit() {
            return Ok(CriticalValues::None);
        }
        match standard_monomials(f.nvars(), &jac.leading_monomials()) {
            Some(basis) => Ok(CriticalValues::Eigen(multiplication_matrix(f, jac, &basis)?)),
            None => Ok(CriticalValues::General(jac, f)),
        }
    }

    fn contains(&self, t: &Rational) -> Result<bool> {
        match self {
            CriticalValues::None => Ok(false),
            CriticalValues::Eigen(cols) => {
                let mut shifted = cols.clone();
                for (i, col) in shifted.iter_mut().enumerate() {
                    col[i] -= t;
                }
                Ok(linalg::zero_eigenvalue_multiplicity(&shifted) > 0)
            }
            CriticalValues::General(jac, f) => Ok(!fibre_is_smooth(jac, f, t)?),
        }
    }
}

/// Draws `count` values of `t` with smooth affine fibres.
fn draw_smooth_values(
    critical: &CriticalValues,
    rng: &mut impl rand::Rng,
    count: usize,
) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(count);
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > T_SMOOTH_DRAWS * count {
            return Err(Error::AtypicalInstability(vec![]));
        }
        let t = sampling::nonzero_rational(rng, sampling::HEIGHT_BOUND);
        if !out.contains(&t) && !critical.contains(&t)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Sum of Milnor numbers of the compactified generic fibre at its singular
/// points at infinity. Needs a chart covering the tangencies on
/// `{f_{d-1} = 0}`.
pub fn fibre_milnor_sum(
    f: &Poly,
    profile: &SingularityProfile,
    seed: u64,
    t_samples: usize,
) -> Result<(u64, Vec<Rational>)> {
    if profile.chart_scope.is_none() {
        return Err(Error::Gate("tangencies on {f_(d-1) = 0} are not finite".into()));
    }
    let c = chart_of(profile)?;
    let jac = jacobian_basis(f)?;
    let critical = CriticalValues::new(f, &jac)?;
    let mut rng = sampling::rng(seed, Stream::FibreValue);
    let t_samples = t_samples.max(2);
    let mut seen = Vec::new();
    for _ in 0..T_ROUNDS {
        let ts = draw_smooth_values(&critical, &mut rng, t_samples)?;
        let sums: Vec<u64> = ts
            .par_iter()
            .map(|t| milnor_sum_on_fiber(&fibre_in_chart(f, c, t)?))
            .collect::<Result<_>>()?;
        if sums.iter().all(|s| *s == sums[0]) {
            return Ok((sums[0], ts));
        }
        seen.extend(sums);
    }
    Err(Error::AtypicalInstability(seen))
}

/// Both Milnor sums entering the defect formula for polynomials whose
/// tangencies at infinity are finite. `assume_concentrated` lifts the
/// requirement that affine critical points be isolated.
pub fn infinity_milnor_pairs(
    f: &Poly,
    seed: u64,
    t_samples: usize,
    assume_concentrated: bool,
) -> Result<MilnorPairSums> {
    let profile = singularity_profile(f, seed)?;
    milnor_pairs_with_profile(f, &profile, seed, t_samples, assume_concentrated)
}

pub fn milnor_pairs_with_profile(
    f: &Poly,
    profile: &SingularityProfile,
    seed: u64,
    t_samples: usize,
    assume_concentrated: bool,
) -> Result<MilnorPairSums> {
    if profile.dim_sing_affine.0 >= 1 && !assume_concentrated {
        return Err(Error::Gate("affine critical locus has positive dimension".into()));
    }
    if profile.dim_sigma_inf.0 >= 1 {
        return Err(Error::Gate("tangencies at infinity are not finite".into()));
    }
    if profile.general_at_infinity {
        return Ok(MilnorPairSums { sum_mu_fiber: 0, sum_mu_boundary: 0, t_used: vec![] });
    }
    let sum_mu_boundary = boundary_milnor_sum(f, profile)?;
    let (sum_mu_fiber, t_used) = fibre_milnor_sum(f, profile, seed, t_samples)?;
    Ok(MilnorPairSums { sum_mu_fiber, sum_mu_boundary, t_used })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    const XY: [&str; 2] = ["x", "y"];
    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn p(s: &str, v: &[&str]) -> Poly {
        Poly::parse(s, v).unwrap()
    }

    #[test]
    fn jacobian_examples() {
        let j = jacobian_ideal(&p("x^2*y", &XY));
        assert_eq!(j.gens(), &[p("2*x*y", &XY), p("x^2", &XY)]);
        let j = jacobian_ideal(&p("x + y", &XY));
        assert_eq!(j.gens(), &[p("1", &XY), p("1", &XY)]);
        assert!(crate::groebner::complete(&j).unwrap().is_unit());
        let j = jacobian_ideal(&p("x^3 + y^3", &XY));
        assert_eq!(j.gens(), &[p("3*x^2", &XY), p("3*y^2", &XY)]);
    }

    #[test]
    fn profile_of_quadratic_curve_with_cusp_at_infinity() {
        let pr = singularity_profile(&p("x + x^2*y", &XY), 0).unwrap();
        assert_eq!(pr.dim_sing_affine, VarietyDim::EMPTY);
        assert_eq!(pr.dim_sigma_inf, VarietyDim(0));
        assert!(!pr.general_at_infinity);
        assert!(pr.chart_change.is_some());
    }

    #[test]
    fn profile_of_fermat_and_line_critical_locus() {
        let pr = singularity_profile(&p("x^3 + y^3", &XY), 0).unwrap();
        assert_eq!(pr.dim_sigma_inf, VarietyDim::EMPTY);
        assert!(pr.general_at_infinity);
        let pr = singularity_profile(&p("x^2*y", &XY), 0).unwrap();
        assert_eq!(pr.dim_sing_affine, VarietyDim(1));
    }

    #[test]
    fn critical_values_by_eigenvalues() {
        for (text, critical) in [("x^3 + y^3 - 3*x*y", vec![0, -1]), ("x^2*y + x", vec![]), ("x^2 + y^2 + x*y^2", vec![0])] {
            let f = p(text, &XY);
            let jac = jacobian_basis(&f).unwrap();
            let cv = CriticalValues::new(&f, &jac).unwrap();
            for t in -3..=3 {
                let t = int(t);
                let expected = !fibre_is_smooth(&jac, &f, &t).unwrap();
                assert_eq!(cv.contains(&t).unwrap(), expected, "{text} at {t}");
            }
            for c in critical {
                assert!(cv.contains(&int(c)).unwrap(), "{text}: {c}");
            }
        }
    }

    #[test]
    fn polar_loci() {
        let b = polar_locus(&p("x^2 + y^2", &XY), &p("y", &XY)).unwrap();
        assert_eq!(b.gens(), &[p("x", &XY)]);
        let b = polar_locus(&p("x^2*y", &XY), &p("y", &XY)).unwrap();
        assert_eq!(b.gens(), &[p("y", &XY)]);
        for l in ["y", "x + y", "3*x - 2*y"] {
            assert!(polar_locus(&p("x", &XY), &p(l, &XY)).unwrap().is_unit());
        }
        assert!(matches!(polar_locus(&p("x", &XY), &p("x^2", &XY)), Err(Error::NotLinear(_))));
    }

    #[test]
    fn bertini_examples() {
        assert!(bertini_check(&p("x^2 + y^2", &XY), &p("y", &XY)).unwrap());
        let b = polar_locus(&p("x^3 + y^3 + z^3", &XYZ), &p("z", &XYZ)).unwrap();
        assert_eq!(krull_dim(&b).unwrap(), VarietyDim(1));
        assert!(bertini_check(&p("x^3 + y^3 + z^3", &XYZ), &p("z", &XYZ)).unwrap());
        // l = y does not involve x; the polar locus still saturates away
        assert!(polar_locus(&p("x^2", &XY), &p("y", &XY)).unwrap().is_unit());
        assert!(bertini_check(&p("x^2", &XY), &p("y", &XY)).unwrap());
    }

    #[test]
    fn local_milnor_numbers() {
        let o = [int(0), int(0)];
        let mu = |s: &str| local_milnor(&p(s, &XY), &o).unwrap();
        assert_eq!(mu("x^2 + y^2"), StaircaseCount::Finite(1));
        assert_eq!(mu("x^3 + y^2"), StaircaseCount::Finite(2));
        assert_eq!(mu("x^2*y + y^3"), StaircaseCount::Finite(4));
        assert_eq!(mu("x^2*y"), StaircaseCount::Infinite);
        assert_eq!(mu("x + y^2"), StaircaseCount::Finite(0));
        // translated A1 at (1, -2)
        let f = p("(x - 1)^2 + (y + 2)^2 + (x - 1)^3", &XY);
        assert_eq!(local_milnor(&f, &[int(1), int(-2)]).unwrap(), StaircaseCount::Finite(1));
    }

    #[test]
    fn fibre_sums() {
        for (g, want) in [("x^3 + y^3 - 3*x*y", 1), ("x^2 + y^2 - 1", 0), ("x^2 + y^2", 1)] {
            let g = p(g, &XY);
            assert_eq!(milnor_sum_on_fiber(&g).unwrap(), want);
            assert_eq!(milnor_sum_on_fiber_by_saturation(&g).unwrap(), want);
        }
        assert_eq!(milnor_sum_on_fiber(&p("x^2*y", &XY)), Err(Error::NonIsolated));
    }

    #[test]
    fn fibre_sum_ignores_critical_curve_off_the_fibre() {
        // critical hyperbola xy = 1 at level -1, node at the origin on g = 0
        let g = p("(x*y - 1)^2 - 1", &XY);
        assert_eq!(milnor_sum_on_fiber(&g).unwrap(), 1);
        assert_eq!(milnor_sum_on_fiber_by_saturation(&g).unwrap(), 1);
    }

    #[test]
    fn sums_at_rational_points_add_up() {
        // A1 at the origin and an A2 at (1, 0) on the same curve
        let g = p("y^2 - x^2*(x - 1)^3", &XY);
        let a = local_milnor(&g, &[int(0), int(0)]).unwrap().finite().unwrap();
        let b = local_milnor(&g, &[int(1), int(0)]).unwrap().finite().unwrap();
        assert_eq!((a, b), (1, 2));
        assert_eq!(milnor_sum_on_fiber(&g).unwrap(), 3);
        assert_eq!(milnor_sum_on_fiber_by_saturation(&g).unwrap(), 3);
    }

    #[test]
    fn homogeneous_isolated_singularity() {
        let g = p("x^3 + y^4 + x*y^3", &XY);
        let mu = local_milnor(&g, &[int(0), int(0)]).unwrap().finite().unwrap();
        assert_eq!(milnor_sum_on_fiber(&g).unwrap(), mu);
        let g = p("x^3 + y^3 + x*y*z + z^3", &XYZ);
        let mu = local_milnor(&g, &[int(0), int(0), int(0)]).unwrap().finite().unwrap();
        assert_eq!(milnor_sum_on_fiber(&g).unwrap(), mu);
    }

    #[test]
    fn milnor_pairs_of_small_examples() {
        let pairs = infinity_milnor_pairs(&p("x + x^2*y", &XY), 0, 2, false).unwrap();
        assert_eq!((pairs.sum_mu_fiber, pairs.sum_mu_boundary), (2, 1));
        assert_eq!(pairs.t_used.len(), 2);
        let pairs = infinity_milnor_pairs(&p("x^3 + y^3", &XY), 0, 2, false).unwrap();
        assert_eq!((pairs.sum_mu_fiber, pairs.sum_mu_boundary), (0, 0));
        let xz = ["x", "z"];
        let pairs = infinity_milnor_pairs(&p("z^2*x^2 + z^4", &xz), 0, 2, true).unwrap();
        assert_eq!((pairs.sum_mu_fiber, pairs.sum_mu_boundary), (3, 1));
        assert!(matches!(
            infinity_milnor_pairs(&p("z^2*x^2 + z^4", &xz), 0, 2, false),
            Err(Error::Gate(_))
        ));
    }
}
