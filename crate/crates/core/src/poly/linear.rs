use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{Monomial, Poly, Rational};
use crate::error::{Error, Result};

/// Invertible linear substitution `x -> M x` with its exact inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    matrix: Vec<Vec<Rational>>,
    inverse: Vec<Vec<Rational>>,
}

impl LinearChange {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: row.len() });
        }
        let inverse = invert(&matrix).ok_or(Error::SingularMatrix)?;
        Ok(LinearChange { matrix, inverse })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&a| super::int(a)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let id: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()
            })
            .collect();
        LinearChange { matrix: id.clone(), inverse: id }
    }

    /// Exchanges variables `i` and `j`.
    pub fn swap(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::identity(n).matrix;
        m.swap(i, j);
        LinearChange { matrix: m.clone(), inverse: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn inverse(&self) -> LinearChange {
        LinearChange { matrix: self.inverse.clone(), inverse: self.matrix.clone() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    /// Row `i` of the matrix as a linear form in `vars`.
    pub(crate) fn row_form(&self, i: usize, vars: &[String]) -> Poly {
        Poly::from_terms(
            vars,
            self.matrix[i].iter().enumerate().map(|(j, a)| (Monomial::var(j), a.clone())),
        )
    }
}

impl Serialize for LinearChange {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> =
            self.matrix.iter().map(|r| r.iter().map(|a| a.to_string()).collect()).collect();
        rows.serialize(s)
    }
}

fn invert(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
