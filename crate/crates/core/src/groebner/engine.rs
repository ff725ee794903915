//! Buchberger's algorithm for global orders and Mora's tangent-cone
//! algorithm for the local degree order, over a shared sorted-term
//! representation.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::MonomialOrder;
use crate::poly::{Monomial, Poly, Rational};

/// Terms sorted ascending under `order`; the leading term is last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SortedPoly {
    pub terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    pub fn from_poly(p: &Poly, order: MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = p.terms().map(|(m, c)| (*m, c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub fn to_poly(&self, vars: &[String]) -> Poly {
        Poly::from_terms(vars, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms.last().expect("nonzero").1
    }

    pub fn make_monic(&mut self) {
        if let Some((_, c)) = self.terms.last() {
            if !c.is_one() {
                let inv = c.recip();
                for (_, a) in self.terms.iter_mut() {
                    *a *= &inv;
                }
            }
        }
    }

    /// Drops the terms of degree above `bound`.
    pub fn truncate_above(&mut self, bound: u32) {
        self.terms.retain(|(m, _)| m.degree() <= bound);
    }

    /// Largest total degree minus the degree of the leading monomial.
    pub fn ecart(&self) -> u32 {
        let top = self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        top - self.lm().degree()
    }
}

/// `a - c*q*b` over the non-leading parts, used once the leading terms are
/// known to cancel.
fn sub_scaled_tail(
    a: &[(Monomial, Rational)],
    c: &Rational,
    q: &Monomial,
    b: &[(Monomial, Rational)],
    order: MonomialOrder,
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() {
            out.extend_from_slice(&a[i..]);
            break;
        }
        let mb = q.mul(&b[j].0);
        if i == a.len() {
            out.push((mb, -(c * &b[j].1)));
            j += 1;
            continue;
        }
        match order.cmp(&a[i].0, &mb) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((mb, -(c * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let v = &a[i].1 - c * &b[j].1;
                if !v.is_zero() {
                    out.push((mb, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Cancels the leading term of `h` against `g`, whose leading monomial must
/// divide it.
pub(crate) fn reduce_lead(h: &SortedPoly, g: &SortedPoly, order: MonomialOrder) -> SortedPoly {
    let q = g.lm().quotient_of(h.lm()).expect("leading monomial divides");
    let c = h.lc() / g.lc();
    let (hn, gn) = (h.terms.len() - 1, g.terms.len() - 1);
    SortedPoly { terms: sub_scaled_tail(&h.terms[..hn], &c, &q, &g.terms[..gn], order) }
}

pub(crate) fn s_poly(f: &SortedPoly, g: &SortedPoly, order: MonomialOrder) -> SortedPoly {
    let l = f.lm().lcm(g.lm());
    let qf = f.lm().quotient_of(&l).expect("lcm");
    let qg = g.lm().quotient_of(&l).expect("lcm");
    let cf = f.lc().recip();
    let cg = g.lc().recip();
    let scaled_f: Vec<(Monomial, Rational)> =
        f.terms[..f.terms.len() - 1].iter().map(|(m, c)| (qf.mul(m), c * &cf)).collect();
    SortedPoly {
        terms: sub_scaled_tail(&scaled_f, &cg, &qg, &g.terms[..g.terms.len() - 1], order),
    }
}

/// Full reduction (every term) of `h` by `reducers` under a global order.
pub(crate) fn reduce_full(
    mut h: SortedPoly,
    reducers: &[&SortedPoly],
    order: MonomialOrder,
) -> SortedPoly {
    debug_assert!(order.is_global());
    let masks: Vec<u32> = reducers.iter().map(|g| g.lm().support_mask()).collect();
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, _)) = h.terms.last() {
        let mm = m.support_mask();
        let found = reducers
            .iter()
            .zip(&masks)
            .find(|(g, &gm)| gm & !mm == 0 && g.lm().divides(m))
            .map(|(g, _)| *g);
        match found {
            Some(g) => h = reduce_lead(&h, g, order),
            None => rem.push(h.terms.pop().expect("nonempty")),
        }
    }
    rem.reverse();
    SortedPoly { terms: rem }
}

/// Largest degree of a monomial outside the ideal generated by `lms` in
/// `n` variables, or `None` when there are infinitely many such monomials.
/// Every monomial of higher degree then lies in the ideal, so for the local
/// order the localized ideal contains all of them.
pub(crate) fn highest_corner<'a>(
    n: usize,
    lms: impl IntoIterator<Item = &'a Monomial>,
) -> Option<u32> {
    let lms: Vec<&Monomial> = lms.into_iter().collect();
    if !(0..n).all(|i| lms.iter().any(|m| m.pure_power_var() == Some(i))) {
        return None;
    }
    fn walk(m: Monomial, i: usize, n: usize, lms: &[&Monomial]) -> Option<u32> {
        if i == n {
            return Some(m.degree());
        }
        let mut best = None;
        let mut cur = m;
        while !lms.iter().any(|l| l.divides(&cur)) {
            best = best.max(walk(cur, i + 1, n, lms));
            cur = cur.mul(&Monomial::var(i));
        }
        best
    }
    Some(walk(Monomial::one(), 0, n, &lms).unwrap_or(0))
}

/// Mora's weak normal form: the result's leading monomial is not divisible
/// by any reducer's. Among applicable reducers the one of least ecart is
/// used, ties going to the lowest index; intermediate remainders of smaller
/// ecart join the reducer set. With a `corner`, terms above that degree are
/// discarded at every step.
pub(crate) fn mora_normal_form(
    mut h: SortedPoly,
    reducers: &[&SortedPoly],
    order: MonomialOrder,
    corner: Option<u32>,
) -> SortedPoly {
    let trunc = |h: &mut SortedPoly| {
        if let Some(c) = corner {
            h.truncate_above(c);
        }
    };
    trunc(&mut h);
    let base_ecart: Vec<u32> = reducers.iter().map(|g| g.ecart()).collect();
    let mut extra: Vec<SortedPoly> = Vec::new();
    let mut extra_ecart: Vec<u32> = Vec::new();
    loop {
        if h.is_zero() {
            return h;
        }
        let lm = *h.lm();
        let mut best: Option<(u32, usize)> = None;
        let candidates = base_ecart.iter().chain(extra_ecart.iter()).enumerate();
        for (k, &e) in candidates {
            let g = if k < reducers.len() { reducers[k] } else { &extra[k - reducers.len()] };
            if g.lm().divides(&lm) && best.is_none_or(|(be, _)| e < be) {
                best = Some((e, k));
            }
        }
        let Some((e, k)) = best else {
            return h;
        };
        let g = if k < reducers.len() { reducers[k] } else { &extra[k - reducers.len()] };
        let mut next = reduce_lead(&h, g, order);
        trunc(&mut next);
        let he = h.ecart();
        if e > he {
            extra.push(h);
            extra_ecart.push(he);
        }
        h = next;
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Builder {
    order: MonomialOrder,
    polys: Vec<SortedPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    nvars: usize,
    corner: Option<u32>,
}

impl Builder {
    fn active_refs(&self) -> Vec<&SortedPoly> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p).collect()
    }

    /// Adds a monic polynomial and updates the pair set. Global orders use
    /// the Gebauer-Moeller criteria; the local order keeps every pair.
    fn insert(&mut self, h: SortedPoly) {
        let k = self.polys.len();
        let lm_h = *h.lm();
        if !self.order.is_global() {
            for i in 0..k {
                self.pairs.push(Pair { i, j: k, lcm: self.polys[i].lm().lcm(&lm_h) });
            }
            self.polys.push(h);
            self.active.push(true);
            self.corner = highest_corner(self.nvars, self.polys.iter().map(SortedPoly::lm));
            return;
        }

        // Candidate pairs (g, h) for active g: (index, lcm, coprime).
        let mut cands: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| {
                let lm = self.polys[i].lm();
                (i, lm.lcm(&lm_h), lm.is_coprime(&lm_h))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((i, l, coprime)) = cands.pop() {
            let dominated = cands.iter().chain(kept.iter()).any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((i, l, coprime));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let li = polys[p.i].lm().lcm(&lm_h);
            let lj = polys[p.j].lm().lcm(&lm_h);
            !(lm_h.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
        });
        for (i, l, coprime) in kept {
            if !coprime {
                self.pairs.push(Pair { i, j: k, lcm: l });
            }
        }
        for i in 0..k {
            if self.active[i] && lm_h.divides(self.polys[i].lm()) {
                self.active[i] = false;
            }
        }
        self.polys.push(h);
        self.active.push(true);
    }

    /// Normal strategy: least lcm degree, then lexicographic on indices.
    fn pop_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.lcm.degree(), p.i, p.j))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Computes a reduced Groebner basis (global orders) or a minimal monic
/// standard basis (local order). The unit ideal comes back as `[1]`.
pub(crate) fn standard_basis(
    gens: Vec<SortedPoly>,
    order: MonomialOrder,
    nvars: usize,
) -> Vec<SortedPoly> {
    let mut b = Builder {
        order,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        nvars,
        corner: None,
    };
    let unit = || vec![SortedPoly { terms: vec![(Monomial::one(), Rational::one())] }];
    for mut g in gens.into_iter().filter(|g| !g.is_zero()) {
        if order.is_global() {
            g = reduce_full(g, &b.active_refs(), order);
            if g.is_zero() {
                continue;
            }
        }
        g.make_monic();
        if g.lm().is_one() {
            return unit();
        }
        b.insert(g);
    }
    while let Some(pair) = b.pop_pair() {
        let s = s_poly(&b.polys[pair.i], &b.polys[pair.j], order);
        let reducers = b.active_refs();
        let mut r = if order.is_global() {
            reduce_full(s, &reducers, order)
        } else {
            mora_normal_form(s, &reducers, order, b.corner)
        };
        if r.is_zero() {
            continue;
        }
        r.make_monic();
        if r.lm().is_one() {
            return unit();
        }
        b.insert(r);
    }
    let basis: Vec<SortedPoly> =
        b.polys.into_iter().zip(b.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    finalize(basis, order)
}

/// Drops elements whose leading monomial is divisible by another's, then
/// (global orders only) tail-reduces. Output is sorted by leading monomial.
fn finalize(mut basis: Vec<SortedPoly>, order: MonomialOrder) -> Vec<SortedPoly> {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()).then_with(|| a.terms.len().cmp(&b.terms.len())));
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|k| k.lm().divides(g.lm())) {
            minimal.retain(|k| !g.lm().divides(k.lm()));
            minimal.push(g);
        }
    }
    minimal.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    if !order.is_global() {
        return minimal;
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&SortedPoly> =
            minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p).collect();
        let mut g = minimal[k].clone();
        let lead = g.terms.pop().expect("nonzero");
        let mut tail = reduce_full(g, &others, order);
        tail.terms.push(lead);
        tail.make_monic();
        out.push(tail);
    }
    out
}
