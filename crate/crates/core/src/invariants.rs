//! Staircase counts and dimensions read off leading-term ideals.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{complete, standard_basis, IdealBasis, MonomialOrder};
use crate::poly::{Monomial, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StaircaseCount {
    Finite(u64),
    Infinite,
}

impl StaircaseCount {
    pub fn finite(self) -> Option<u64> {
        match self {
            StaircaseCount::Finite(k) => Some(k),
            StaircaseCount::Infinite => None,
        }
    }
}

impl fmt::Display for StaircaseCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StaircaseCount::Finite(k) => write!(f, "{k}"),
            StaircaseCount::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for StaircaseCount {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            StaircaseCount::Finite(k) => s.serialize_u64(*k),
            StaircaseCount::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// Dimension of an affine or projective variety; `-1` is the empty set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarietyDim(pub i32);

impl VarietyDim {
    pub const EMPTY: VarietyDim = VarietyDim(-1);

    pub fn is_empty(self) -> bool {
        self.0 < 0
    }

    pub fn value(self) -> i32 {
        self.0
    }
}

impl fmt::Display for VarietyDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("empty")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for VarietyDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_empty() {
            s.serialize_str("empty")
        } else {
            s.serialize_i32(self.0)
        }
    }
}

impl<'de> Deserialize<'de> for VarietyDim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i32),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(k) if k >= -1 => Ok(VarietyDim(k)),
            Raw::Str(s) if s == "empty" => Ok(VarietyDim::EMPTY),
            _ => Err(serde::de::Error::custom("expected an integer >= -1 or \"empty\"")),
        }
    }
}

fn leading(basis: &IdealBasis) -> Result<(usize, Vec<Monomial>)> {
    let b = complete(basis)?;
    Ok((b.nvars(), b.leading_monomials()))
}

/// Number of standard monomials of the basis.
pub fn quotient_dim(basis: &IdealBasis) -> Result<StaircaseCount> {
    let (n, lms) = leading(basis)?;
    Ok(staircase_count(n, &lms))
}

/// Standard-monomial count for a set of leading monomials in `n` variables.
pub fn staircase_count(n: usize, lms: &[Monomial]) -> StaircaseCount {
    if lms.iter().any(Monomial::is_one) {
        return StaircaseCount::Finite(0);
    }
    let has_pure_power = |i: usize| lms.iter().any(|m| m.pure_power_var() == Some(i));
    if !(0..n).all(has_pure_power) {
        return StaircaseCount::Infinite;
    }
    StaircaseCount::Finite(count_below(Monomial::one(), 0, n, lms))
}

// Standard monomials are closed under division, so a branch stops at the
// first exponent that lands in the ideal.
fn count_below(m: Monomial, i: usize, n: usize, lms: &[Monomial]) -> u64 {
    if i == n {
        return 1;
    }
    let mut total = 0;
    let mut cur = m;
    while !lms.iter().any(|l| l.divides(&cur)) {
        total += count_below(cur, i + 1, n, lms);
        cur = cur.mul(&Monomial::var(i));
    }
    total
}

/// The standard monomials themselves, or `None` when there are infinitely
/// many.
pub fn standard_monomials(n: usize, lms: &[Monomial]) -> Option<Vec<Monomial>> {
    staircase_count(n, lms).finite()?;
    let mut out = Vec::new();
    collect_below(Monomial::one(), 0, n, lms, &mut out);
    Some(out)
}

fn collect_below(m: Monomial, i: usize, n: usize, lms: &[Monomial], out: &mut Vec<Monomial>) {
    if i == n {
        out.push(m);
        return;
    }
    let mut cur = m;
    while !lms.iter().any(|l| l.divides(&cur)) {
        collect_below(cur, i + 1, n, lms, out);
        cur = cur.mul(&Monomial::var(i));
    }
}

/// Affine dimension of the zero set, via the largest set of variables
/// that supports no leading monomial. Requires a global order.
pub fn krull_dim(basis: &IdealBasis) -> Result<VarietyDim> {
    if !basis.order().is_global() {
        return Err(Error::InvalidInput("dimension needs a global order".into()));
    }
    let (n, lms) = leading(basis)?;
    Ok(dim_from_leading(n, &lms))
}

pub fn dim_from_leading(n: usize, lms: &[Monomial]) -> VarietyDim {
    if lms.iter().any(Monomial::is_one) {
        return VarietyDim::EMPTY;
    }
    let masks: Vec<u32> = lms.iter().map(Monomial::support_mask).collect();
    let best = (0u32..1 << n)
        .filter(|s| masks.iter().all(|m| m & !s != 0))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0);
    VarietyDim(best as i32)
}

/// True when the zero set is finite (the empty set included).
pub fn is_zero_dim(basis: &IdealBasis) -> Result<bool> {
    let (n, lms) = leading(basis)?;
    Ok(lms.iter().any(Monomial::is_one)
        || (0..n).all(|i| lms.iter().any(|m| m.pure_power_var() == Some(i))))
}

/// Dimension of the projective zero set of homogeneous generators.
pub fn proj_dim(gens: &[Poly]) -> Result<VarietyDim> {
    if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NonHomogeneous(g.to_string()));
    }
    let nonzero: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let n = match gens.first() {
        Some(g) => g.nvars(),
        None => return Err(Error::InvalidInput("empty generator list".into())),
    };
    if nonzero.is_empty() {
        return Ok(VarietyDim(n as i32 - 1));
    }
    let cone = krull_dim(&standard_basis(&nonzero, MonomialOrder::DegRevLex)?)?;
    Ok(if cone.0 <= 0 { VarietyDim::EMPTY } else { VarietyDim(cone.0 - 1) })
}
