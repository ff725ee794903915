//! Exact multivariate polynomials over the rationals.
//!
//! A [`Poly`] carries its ordered variable names together with a sparse map
//! from dense exponent vectors to nonzero rational coefficients. All
//! operations are pure; binary operators require identical variable lists.

mod linear;
mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

pub use linear::LinearChange;
pub use monomial::{Monomial, MAX_VARS};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A variable name based on `stem` that does not occur in `vars`.
pub fn fresh_var(vars: &[String], stem: &str) -> String {
    (0..)
        .map(|k| if k == 0 { stem.to_string() } else { format!("{stem}{k}") })
        .find(|c| !vars.contains(c))
        .expect("unbounded")
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Total degree; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(vars: &[impl AsRef<str>]) -> Self {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        assert!(vars.len() <= MAX_VARS, "too many variables");
        Poly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[impl AsRef<str>], c: Rational) -> Self {
        let mut p = Poly::zero(vars);
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(vars: &[impl AsRef<str>], name: &str) -> Result<Self> {
        let mut p = Poly::zero(vars);
        let i = p.var_index(name)?;
        p.add_term(Monomial::var(i), Rational::one());
        Ok(p)
    }

    pub fn var_at(vars: &[impl AsRef<str>], i: usize) -> Self {
        let mut p = Poly::zero(vars);
        assert!(i < p.nvars());
        p.add_term(Monomial::var(i), Rational::one());
        p
    }

    pub fn from_terms(
        vars: &[impl AsRef<str>],
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(text: &str, vars: &[impl AsRef<str>]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        parse::parse(text, &vars)
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |m| Degree::Finite(m.degree()))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub(crate) fn same_ring(&self, other: &Poly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.clone(),
                right: other.vars.clone(),
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Poly { vars: self.vars.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        let terms = self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect();
        Poly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(&self.vars, Rational::one());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales so the coefficient of the largest monomial (in the map's
    /// degree-then-lex order) is one.
    pub fn monic(&self) -> Poly {
        match self.terms.values().next_back() {
            None => self.clone(),
            Some(c) => self.scale(&c.recip()),
        }
    }

    pub fn derivative(&self, var: &str) -> Result<Poly> {
        let i = self.var_index(var)?;
        Ok(self.derivative_at(i))
    }

    pub fn derivative_at(&self, i: usize) -> Poly {
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e > 0 {
                out.add_term(m.with_exponent(i, e - 1), c * int(e as i64));
            }
        }
        out
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.derivative_at(i)).collect()
    }

    /// Sum of the terms of total degree exactly `k`.
    pub fn graded_part(&self, k: u32) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == k)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Poly { vars: self.vars.clone(), terms }
    }

    /// Top-degree part `f_d`; zero for the zero polynomial.
    pub fn leading_form(&self) -> Poly {
        match self.degree() {
            Degree::Finite(d) => self.graded_part(d),
            Degree::NegInfinity => self.clone(),
        }
    }

    /// Appends `newvar` and multiplies each term by `newvar^(d - deg term)`.
    pub fn homogenize(&self, newvar: &str, d: u32) -> Result<Poly> {
        if let Degree::Finite(actual) = self.degree() {
            if d < actual {
                return Err(Error::DegreeTooSmall { target: d, actual });
            }
        }
        if self.vars.iter().any(|v| v == newvar) {
            return Err(Error::InvalidInput(format!("variable `{newvar}` already present")));
        }
        if self.nvars() + 1 > MAX_VARS {
            return Err(Error::TooManyVariables(self.nvars() + 1));
        }
        let mut vars = self.vars.clone();
        vars.push(newvar.to_string());
        let k = self.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.with_exponent(k, d - m.degree()), c.clone()))
            .collect();
        Ok(Poly { vars, terms })
    }

    /// Substitutes `var := value` and removes `var` from the variable list.
    pub fn dehomogenize(&self, var: &str, value: &Rational) -> Result<Poly> {
        let i = self.var_index(var)?;
        Ok(self.dehomogenize_at(i, value))
    }

    pub fn dehomogenize_at(&self, i: usize, value: &Rational) -> Poly {
        let mut vars = self.vars.clone();
        vars.remove(i);
        let mut out = Poly { vars, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            let factor = num_traits::pow(value.clone(), e as usize);
            out.add_term(m.remove_slot(i), c * factor);
        }
        out
    }

    /// Substitutes `x_i := forms[i]` for every variable. The forms may live
    /// in a different ring; the result lives in theirs.
    pub fn compose(&self, forms: &[Poly]) -> Result<Poly> {
        if forms.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: forms.len() });
        }
        let target = match forms.first() {
            Some(f) => f.vars.clone(),
            None => return Ok(self.clone()),
        };
        for f in forms {
            if f.vars != target {
                return Err(Error::VariableMismatch { left: target, right: f.vars.clone() });
            }
        }
        let mut powers: Vec<Vec<Poly>> = forms
            .iter()
            .map(|f| vec![Poly::constant(&target, Rational::one()), f.clone()])
            .collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exponent(i) as usize;
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &forms[i];
                    pw.push(next);
                }
                if e > 0 {
                    t = &t * &pw[e];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// `p(M x)`: each variable is replaced by the corresponding row of the
    /// change's matrix read as a linear form.
    pub fn apply_change(&self, change: &LinearChange) -> Result<Poly> {
        if change.dim() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: change.dim() });
        }
        let forms: Vec<Poly> = (0..self.nvars()).map(|i| change.row_form(i, &self.vars)).collect();
        self.compose(&forms)
    }

    /// `p(x + point)`, moving `point` to the origin.
    pub fn translate(&self, point: &[Rational]) -> Result<Poly> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: point.len() });
        }
        let forms: Vec<Poly> = point
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut f = Poly::var_at(&self.vars, i);
                f.add_term(Monomial::one(), a.clone());
                f
            })
            .collect();
        self.compose(&forms)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, a) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t *= num_traits::pow(a.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Embeds into the ring with `extra` variables appended.
    pub fn extend_vars(&self, extra: &[impl AsRef<str>]) -> Result<Poly> {
        let mut vars = self.vars.clone();
        for v in extra {
            let v = v.as_ref();
            if vars.iter().any(|w| w == v) {
                return Err(Error::InvalidInput(format!("variable `{v}` already present")));
            }
            vars.push(v.to_string());
        }
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        Ok(Poly { vars, terms: self.terms.clone() })
    }

    /// Drops the trailing `k` variables, which must not occur.
    pub fn truncate_vars(&self, k: usize) -> Result<Poly> {
        let n = self.nvars() - k;
        for m in self.terms.keys() {
            if (n..self.nvars()).any(|i| m.exponent(i) > 0) {
                return Err(Error::InvalidInput(
                    "polynomial involves a variable being removed".into(),
                ));
            }
        }
        Ok(Poly { vars: self.vars[..n].to_vec(), terms: self.terms.clone() })
    }

    /// Removes the variables at `indices`, none of which may occur.
    pub fn remove_vars(&self, indices: &[usize]) -> Result<Poly> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let mask = idx.iter().fold(0u32, |acc, &i| acc | (1 << i));
        if self.support_mask() & mask != 0 {
            return Err(Error::InvalidInput("polynomial involves a variable being removed".into()));
        }
        let vars = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) == 0)
            .map(|(_, v)| v.clone())
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (idx.iter().rev().fold(*m, |acc, &i| acc.remove_slot(i)), c.clone()))
            .collect();
        Ok(Poly { vars, terms })
    }

    /// Bitmask of the variables that occur.
    pub fn support_mask(&self) -> u32 {
        self.terms.keys().fold(0, |acc, m| acc | m.support_mask())
    }

    /// Multiplies through by the lcm of denominators and divides by the gcd
    /// of numerators; the largest term gets a positive coefficient.
    pub fn primitive(&self) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut factor = Rational::new(den, num);
        if self.terms.values().next_back().is_some_and(|c| c.is_negative()) {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl fmt::Display for Poly {
    /// Prints in the grammar accepted by [`Poly::parse`], largest degree
    /// first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, v) in self.vars.iter().enumerate() {
                match m.exponent(i) {
                    0 => {}
                    1 => factors.push(v.clone()),
                    e => factors.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.same_ring(rhs).expect("polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.same_ring(rhs).expect("polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.same_ring(rhs).expect("polynomials from different rings");
        let mut out = Poly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}
