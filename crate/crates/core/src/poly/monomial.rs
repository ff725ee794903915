use std::fmt;

/// Upper bound on ring variables, including auxiliary ones introduced by
/// homogenization and elimination.
pub const MAX_VARS: usize = 16;

/// Dense exponent vector. Slots past the ring's variable count stay zero.
///
/// The cached total degree comes first so that the derived ordering sorts
/// by degree before comparing exponents lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial { deg: 0, exps: [0; MAX_VARS] }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::one();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Exponents of the first `n` variables.
    pub fn exponents(&self, n: usize) -> Vec<u32> {
        self.exps[..n].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub(crate) fn raw(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn with_exponent(&self, i: usize, e: u32) -> Self {
        let mut m = *self;
        m.deg = m.deg - m.exps[i] as u32 + e;
        m.exps[i] = u16::try_from(e).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps.iter()) {
            *a += *b;
        }
        m.deg += other.deg;
        m
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut m = *self;
        for a in m.exps.iter_mut() {
            *a = u16::try_from(*a as u32 * k).expect("exponent overflow");
        }
        m.deg *= k;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for (a, b) in m.exps.iter_mut().zip(self.exps.iter()) {
            *a -= *b;
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            let e = self.exps[i].max(other.exps[i]);
            m.exps[i] = e;
            m.deg += e as u32;
        }
        m
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` is set when variable `i` occurs.
    pub fn support_mask(&self) -> u32 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |acc, (i, _)| acc | (1 << i))
    }

    /// Index of the single variable of a pure power `x_i^k`, `k >= 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mask = self.support_mask();
        (mask.count_ones() == 1).then(|| mask.trailing_zeros() as usize)
    }

    /// Drops slot `i`, shifting later exponents down one slot.
    pub(crate) fn remove_slot(&self, i: usize) -> Monomial {
        let mut m = Monomial::one();
        let mut k = 0;
        for (j, &e) in self.exps.iter().enumerate() {
            if j == i {
                continue;
            }
            m.exps[k] = e;
            m.deg += e as u32;
            k += 1;
        }
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}
