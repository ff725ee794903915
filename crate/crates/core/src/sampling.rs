//! Seeded random draws: small-height rationals, integer matrices and
//! generic linear forms. Every consumer takes its own stream so adding a
//! draw in one place never shifts another's sequence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{int, LinearChange, Monomial, Poly, Rational};

pub const HEIGHT_BOUND: i64 = 1000;
pub const MATRIX_ENTRY_BOUND: i64 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    Chart = 1,
    FibreValue = 2,
    LinearForm = 3,
    Epsilon = 4,
    Perturbation = 5,
}

pub fn rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream as u64);
    r
}

/// `p/q` with `|p| <= bound` and `1 <= q <= bound`, never zero.
pub fn nonzero_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    loop {
        let p = rng.gen_range(-bound..=bound);
        if p != 0 {
            let q = rng.gen_range(1..=bound);
            return Rational::new(p.into(), q.into());
        }
    }
}

/// Invertible `n x n` integer matrix with entries in `[-bound, bound]`.
pub fn invertible_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> LinearChange {
    loop {
        let rows: Vec<Vec<i64>> =
            (0..n).map(|_| (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()).collect();
        if let Ok(c) = LinearChange::from_integers(&rows) {
            return c;
        }
    }
}

/// Nonzero homogeneous linear form with integer coefficients.
pub fn linear_form(rng: &mut impl Rng, vars: &[String], bound: i64) -> Poly {
    loop {
        let l = Poly::from_terms(
            vars,
            (0..vars.len()).map(|i| (Monomial::var(i), int(rng.gen_range(-bound..=bound)))),
        );
        if !l.is_zero() {
            return l;
        }
    }
}
