//! Groebner bases, Mora standard bases, normal forms, elimination and
//! saturation.
//!
//! Bases are always returned reduced: global orders give the reduced
//! Groebner basis (monic, tail-reduced, sorted by leading monomial); the
//! local order gives a minimal monic standard basis, since tail reduction
//! does not terminate in the local ring in general.

mod engine;
mod order;

use num_traits::One;

pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::poly::{fresh_var, Monomial, Poly, Rational};
use engine::SortedPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    vars: Vec<String>,
    gens: Vec<Poly>,
    order: MonomialOrder,
    is_standard: bool,
}

impl IdealBasis {
    /// Plain generator list; no basis computed yet.
    pub fn new(vars: &[impl AsRef<str>], gens: Vec<Poly>, order: MonomialOrder) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for g in &gens {
            check_ring(&vars, g)?;
        }
        Ok(IdealBasis { vars, gens, order, is_standard: false })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_standard(&self) -> bool {
        self.is_standard
    }

    /// Leading monomials of the nonzero generators under the basis order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| *SortedPoly::from_poly(g, self.order).lm())
            .collect()
    }

    /// True for a standard basis of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.is_standard && self.leading_monomials().iter().any(Monomial::is_one)
    }

    /// Ideal membership via the normal form; requires a standard basis.
    pub fn contains(&self, p: &Poly) -> Result<bool> {
        if !self.is_standard {
            return Err(Error::InvalidInput("membership needs a standard basis".into()));
        }
        Ok(normal_form(p, self)?.is_zero())
    }

    fn corner(&self) -> Option<u32> {
        let lms = self.leading_monomials();
        engine::highest_corner(self.nvars(), lms.iter())
    }

    fn sorted_gens(&self) -> Vec<SortedPoly> {
        self.gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| SortedPoly::from_poly(g, self.order))
            .collect()
    }
}

fn check_ring(vars: &[String], p: &Poly) -> Result<()> {
    if p.vars() != vars {
        return Err(Error::VariableMismatch { left: vars.to_vec(), right: p.vars().to_vec() });
    }
    Ok(())
}

fn ring_of(gens: &[Poly]) -> Result<Vec<String>> {
    let first = gens.first().ok_or_else(|| Error::InvalidInput("empty generator list".into()))?;
    let vars = first.vars().to_vec();
    for g in gens {
        check_ring(&vars, g)?;
    }
    Ok(vars)
}

/// Remainder of `p` modulo the basis generators.
///
/// Global orders reduce every term. The local order returns Mora's weak
/// normal form: only the leading term is guaranteed irreducible, and the
/// remainder equals `u*p` modulo the ideal for some unit `u` of the local
/// ring. Either way the result is zero exactly when `p` lies in the
/// (localized) ideal, provided the basis is standard.
pub fn normal_form(p: &Poly, basis: &IdealBasis) -> Result<Poly> {
    check_ring(&basis.vars, p)?;
    let gens = basis.sorted_gens();
    let refs: Vec<&SortedPoly> = gens.iter().collect();
    let h = SortedPoly::from_poly(p, basis.order);
    let r = if basis.order.is_global() {
        engine::reduce_full(h, &refs, basis.order)
    } else {
        engine::mora_normal_form(h, &refs, basis.order, basis.corner())
    };
    Ok(r.to_poly(&basis.vars))
}

/// Reduced Groebner basis (global orders) or standard basis (local order).
pub fn standard_basis(gens: &[Poly], order: MonomialOrder) -> Result<IdealBasis> {
    let vars = ring_of(gens)?;
    let sorted = gens.iter().map(|g| SortedPoly::from_poly(g, order)).collect();
    let basis = engine::standard_basis(sorted, order, vars.len());
    Ok(IdealBasis {
        gens: basis.iter().map(|g| g.to_poly(&vars)).collect(),
        vars,
        order,
        is_standard: true,
    })
}

/// Computes a standard basis of an existing generator list under its order.
pub fn complete(basis: &IdealBasis) -> Result<IdealBasis> {
    if basis.is_standard {
        return Ok(basis.clone());
    }
    if basis.gens.is_empty() {
        return Ok(IdealBasis { is_standard: true, ..basis.clone() });
    }
    standard_basis(&basis.gens, basis.order)
}

/// S-polynomial of `f` and `g` under `order`, with both leading
/// coefficients normalized to one.
pub fn s_polynomial(f: &Poly, g: &Poly, order: MonomialOrder) -> Result<Poly> {
    check_ring(f.vars(), g)?;
    if f.is_zero() || g.is_zero() {
        return Ok(Poly::zero(f.vars()));
    }
    let s = engine::s_poly(
        &SortedPoly::from_poly(f, order),
        &SortedPoly::from_poly(g, order),
        order,
    );
    Ok(s.to_poly(f.vars()))
}

/// Buchberger's criterion: every S-polynomial of the generators reduces to
/// zero (weak normal form for the local order).
pub fn satisfies_buchberger_criterion(basis: &IdealBasis) -> bool {
    let gens = basis.sorted_gens();
    let refs: Vec<&SortedPoly> = gens.iter().collect();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let s = engine::s_poly(&gens[i], &gens[j], basis.order);
            let r = if basis.order.is_global() {
                engine::reduce_full(s, &refs, basis.order)
            } else {
                engine::mora_normal_form(s, &refs, basis.order, basis.corner())
            };
            if !r.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Basis of `ideal(gens) ∩ k[remaining variables]`, living in the ring
/// with `drop_vars` removed and ordered by degrevlex.
pub fn eliminate(gens: &[Poly], drop_vars: &[&str]) -> Result<IdealBasis> {
    let vars = ring_of(gens)?;
    let idx: Vec<usize> = drop_vars
        .iter()
        .map(|v| {
            vars.iter().position(|w| w == v).ok_or_else(|| Error::UnknownVariable(v.to_string()))
        })
        .collect::<Result<_>>()?;
    let full = standard_basis(gens, MonomialOrder::block(&idx))?;
    let mask = idx.iter().fold(0u32, |acc, &i| acc | (1 << i));
    let kept: Vec<Poly> = full
        .gens
        .iter()
        .filter(|g| g.support_mask() & mask == 0)
        .map(|g| g.remove_vars(&idx))
        .collect::<Result<_>>()?;
    let remaining: Vec<String> = vars
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) == 0)
        .map(|(_, v)| v.clone())
        .collect();
    Ok(IdealBasis { vars: remaining, gens: kept, order: MonomialOrder::DegRevLex, is_standard: true })
}

/// `(ideal : h^∞)` by eliminating `t` from `gens ∪ {t*h - 1}`.
pub fn saturate(gens: &[Poly], h: &Poly) -> Result<IdealBasis> {
    let vars = ring_of(gens)?;
    check_ring(&vars, h)?;
    if h.is_zero() {
        return Err(Error::ZeroSaturator);
    }
    if h.is_constant() || gens.iter().all(Poly::is_zero) {
        return standard_basis(gens, MonomialOrder::DegRevLex);
    }
    let t = fresh_var(&vars, "_t");
    let mut ext: Vec<Poly> = gens.iter().map(|g| g.extend_vars(&[&t])).collect::<Result<_>>()?;
    let tv = Poly::var(ext[0].vars(), &t)?;
    let he = h.extend_vars(&[&t])?;
    let mut rab = &tv * &he;
    rab.add_term(Monomial::one(), -Rational::one());
    ext.push(rab);
    eliminate(&ext, &[&t])
}

/// `a ∩ b` by eliminating `s` from `s*a + (1 - s)*b`.
pub fn intersect(a: &[Poly], b: &[Poly]) -> Result<IdealBasis> {
    let vars = ring_of(a).or_else(|_| ring_of(b))?;
    let a: Vec<&Poly> = a.iter().filter(|p| !p.is_zero()).collect();
    let b: Vec<&Poly> = b.iter().filter(|p| !p.is_zero()).collect();
    if a.is_empty() || b.is_empty() {
        return Ok(IdealBasis { vars, gens: vec![], order: MonomialOrder::DegRevLex, is_standard: true });
    }
    let s = fresh_var(&vars, "_s");
    let mut ext = Vec::with_capacity(a.len() + b.len());
    let one = Poly::constant(&vars, Rational::one()).extend_vars(&[&s])?;
    let sv = Poly::var(one.vars(), &s)?;
    let one_minus_s = &one - &sv;
    for p in a {
        check_ring(&vars, p)?;
        ext.push(&sv * &p.extend_vars(&[&s])?);
    }
    for p in b {
        check_ring(&vars, p)?;
        ext.push(&one_minus_s * &p.extend_vars(&[&s])?);
    }
    eliminate(&ext, &[&s])
}

/// `(ideal : h) = (ideal ∩ (h)) / h`.
pub fn ideal_quotient(gens: &[Poly], h: &Poly) -> Result<IdealBasis> {
    let vars = ring_of(gens)?;
    if h.is_zero() {
        return Err(Error::ZeroSaturator);
    }
    let cap = intersect(gens, std::slice::from_ref(h))?;
    let quotients: Vec<Poly> = cap.gens.iter().map(|g| exact_division(g, h)).collect::<Result<_>>()?;
    if quotients.is_empty() {
        return Ok(IdealBasis { vars, gens: vec![], order: MonomialOrder::DegRevLex, is_standard: true });
    }
    standard_basis(&quotients, MonomialOrder::DegRevLex)
}

/// `(ideal : C^∞)`, the intersection of the saturations by each nonzero
/// generator of `C`. A unit generator makes it the ideal itself.
pub fn saturate_by_ideal(gens: &[Poly], c: &[Poly]) -> Result<IdealBasis> {
    let vars = ring_of(gens)?;
    let nonzero: Vec<&Poly> = c.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::ZeroSaturator);
    }
    for p in &nonzero {
        check_ring(&vars, p)?;
    }
    if nonzero.iter().any(|p| p.is_constant()) {
        return standard_basis(gens, MonomialOrder::DegRevLex);
    }
    let mut acc: Option<IdealBasis> = None;
    for p in nonzero {
        let sat = saturate(gens, p)?;
        acc = Some(match acc {
            None => sat,
            Some(prev) if prev == sat => prev,
            Some(prev) => {
                if prev.gens.is_empty() || sat.gens.is_empty() {
                    IdealBasis { gens: vec![], ..prev }
                } else {
                    intersect(&prev.gens, &sat.gens)?
                }
            }
        });
    }
    Ok(acc.expect("at least one generator"))
}

/// Exact quotient `p / h`; errors if `h` does not divide `p`.
pub fn exact_division(p: &Poly, h: &Poly) -> Result<Poly> {
    check_ring(p.vars(), h)?;
    if h.is_zero() {
        return Err(Error::ZeroSaturator);
    }
    let order = MonomialOrder::DegRevLex;
    let hs = SortedPoly::from_poly(h, order);
    let mut rem = SortedPoly::from_poly(p, order);
    let mut quotient = Poly::zero(p.vars());
    while !rem.is_zero() {
        let q = hs
            .lm()
            .quotient_of(rem.lm())
            .ok_or_else(|| Error::InvalidInput(format!("{h} does not divide {p}")))?;
        quotient.add_term(q, rem.lc() / hs.lc());
        rem = engine::reduce_lead(&rem, &hs, order);
    }
    Ok(quotient)
}

/// Unit ideal as a standard basis in the ring of `vars`.
pub fn unit_ideal(vars: &[String]) -> IdealBasis {
    IdealBasis {
        vars: vars.to_vec(),
        gens: vec![Poly::constant(vars, Rational::one())],
        order: MonomialOrder::DegRevLex,
        is_standard: true,
    }
}

/// True when `basis` generates the same ideal as `other` (both standard
/// under the same global order).
pub fn same_ideal(a: &IdealBasis, b: &IdealBasis) -> bool {
    a.is_standard && b.is_standard && a.order == b.order && a.vars == b.vars && a.gens == b.gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(list: &[&str], vars: &[&str]) -> Vec<Poly> {
        list.iter().map(|s| Poly::parse(s, vars).unwrap()).collect()
    }

    fn gens_str(b: &IdealBasis) -> Vec<String> {
        b.gens().iter().map(|g| g.to_string()).collect()
    }

    const XY: [&str; 2] = ["x", "y"];

    #[test]
    fn normal_form_examples() {
        let b = standard_basis(&ps(&["x"], &XY), MonomialOrder::DegRevLex).unwrap();
        assert!(normal_form(&ps(&["x^2"], &XY)[0], &b).unwrap().is_zero());
        assert_eq!(normal_form(&ps(&["y"], &XY)[0], &b).unwrap(), ps(&["y"], &XY)[0]);
        let b = standard_basis(&ps(&["x - y"], &XY), MonomialOrder::DegRevLex).unwrap();
        let r = normal_form(&ps(&["x^3 + y^2"], &XY)[0], &b).unwrap();
        assert_eq!(r, ps(&["y^3 + y^2"], &XY)[0]);
    }

    #[test]
    fn normal_form_rejects_foreign_ring() {
        let b = standard_basis(&ps(&["x"], &XY), MonomialOrder::DegRevLex).unwrap();
        let p = Poly::parse("x", &["x", "z"]).unwrap();
        assert!(matches!(normal_form(&p, &b), Err(Error::VariableMismatch { .. })));
    }

    #[test]
    fn monomial_generators_are_a_basis() {
        let b = standard_basis(&ps(&["x^2", "x*y"], &XY), MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gens_str(&b), vec!["x*y", "x^2"]);
        assert!(satisfies_buchberger_criterion(&b));
    }

    #[test]
    fn substitution_system() {
        // Eliminating x leaves y^4 - y; the degrevlex basis contains y - y^4
        // as a member.
        let g = ps(&["x - y^2", "y - x^2"], &XY);
        let lexish = standard_basis(&g, MonomialOrder::block(&[0])).unwrap();
        assert_eq!(gens_str(&lexish), vec!["y^4 - y", "-y^2 + x"]);
        let grevlex = standard_basis(&g, MonomialOrder::DegRevLex).unwrap();
        assert!(grevlex.contains(&ps(&["y - y^4"], &XY)[0]).unwrap());
        assert!(grevlex.contains(&ps(&["x^4 - x"], &XY)[0]).unwrap());
        assert!(satisfies_buchberger_criterion(&grevlex));
    }

    #[test]
    fn local_jacobian_of_cusp() {
        let b = standard_basis(&ps(&["3*x^2", "2*y"], &XY), MonomialOrder::LocalDegRevLex).unwrap();
        // {3x^2, 2y} up to units
        let mut g = gens_str(&b);
        g.sort();
        assert_eq!(g, vec!["x^2", "y"]);
    }

    #[test]
    fn elimination_examples() {
        let e = eliminate(&ps(&["y - x^2", "y^2 - 1"], &XY), &["y"]).unwrap();
        assert_eq!(e.vars(), &["x".to_string()]);
        assert_eq!(gens_str(&e), vec!["x^4 - 1"]);
        let e = eliminate(&ps(&["x"], &XY), &["y"]).unwrap();
        assert_eq!(gens_str(&e), vec!["x"]);
        let e = eliminate(&ps(&["x*t - 1", "x"], &["x", "t"]), &["t"]).unwrap();
        assert_eq!(gens_str(&e), vec!["1"]);
    }

    #[test]
    fn saturation_examples() {
        let s = saturate(&ps(&["x^2", "x*y"], &XY), &ps(&["x"], &XY)[0]).unwrap();
        assert_eq!(gens_str(&s), vec!["1"]);
        let xyz = ["x", "y", "z"];
        let s = saturate(&ps(&["x*z", "y*z"], &xyz), &ps(&["z"], &xyz)[0]).unwrap();
        assert_eq!(gens_str(&s), vec!["y", "x"]);
        let s = saturate(&ps(&["x*y"], &XY), &ps(&["x"], &XY)[0]).unwrap();
        assert_eq!(gens_str(&s), vec!["y"]);
        assert_eq!(saturate(&ps(&["x"], &XY), &Poly::zero(&XY)), Err(Error::ZeroSaturator));
    }

    #[test]
    fn saturation_by_ideal_examples() {
        let s = saturate_by_ideal(&ps(&["x^2", "x*y"], &XY), &ps(&["x"], &XY)).unwrap();
        assert_eq!(gens_str(&s), vec!["1"]);
        let xyz = ["x", "y", "z"];
        let s = saturate_by_ideal(&ps(&["x*y", "x*z"], &xyz), &ps(&["y", "z"], &xyz)).unwrap();
        assert_eq!(gens_str(&s), vec!["x"]);
        let j = ps(&["x^2", "x*y + y^3"], &XY);
        let s = saturate_by_ideal(&j, &ps(&["1"], &XY)).unwrap();
        assert!(same_ideal(&s, &standard_basis(&j, MonomialOrder::DegRevLex).unwrap()));
        assert_eq!(
            saturate_by_ideal(&j, &[Poly::zero(&XY)]),
            Err(Error::ZeroSaturator)
        );
    }

    #[test]
    fn polar_style_saturation_keeps_off_locus_component() {
        // (xy) : (xy, x^2)^∞ = (y); composing the two saturations would give (1).
        let s = saturate_by_ideal(&ps(&["2*x*y"], &XY), &ps(&["2*x*y", "x^2"], &XY)).unwrap();
        assert_eq!(gens_str(&s), vec!["y"]);
    }

    #[test]
    fn intersection_and_quotient() {
        let i = intersect(&ps(&["x"], &XY), &ps(&["y"], &XY)).unwrap();
        assert_eq!(gens_str(&i), vec!["x*y"]);
        let q = ideal_quotient(&ps(&["x^2*y", "y^3"], &XY), &ps(&["y"], &XY)[0]).unwrap();
        assert_eq!(gens_str(&q), vec!["y^2", "x^2"]);
    }

    #[test]
    fn exact_division_checks_divisibility() {
        let p = ps(&["x^3 - y^3", "x - y", "x + 1"], &XY);
        assert_eq!(exact_division(&p[0], &p[1]).unwrap(), ps(&["x^2 + x*y + y^2"], &XY)[0]);
        assert!(exact_division(&p[0], &p[2]).is_err());
    }
}
