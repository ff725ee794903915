//! Brute-force local algebra dimensions from Macaulay matrices. Works on
//! plain term lists and its own elimination so it shares nothing with the
//! library's polynomial or Groebner code.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::HashMap;

/// `(coefficient, exponents)`.
pub type Term = (i64, Vec<u32>);

fn gradient(f: &[Term], n: usize) -> Vec<Vec<Term>> {
    (0..n)
        .map(|i| {
            f.iter()
                .filter(|(_, e)| e[i] > 0)
                .map(|(c, e)| {
                    let mut e2 = e.clone();
                    e2[i] -= 1;
                    (c * e[i] as i64, e2)
                })
                .collect()
        })
        .collect()
}

fn monomials_below(n: usize, bound: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, n: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(prefix, n, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, bound - 1, &mut out);
    out
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            if row[col].is_zero() {
                continue;
            }
            let k = &row[col] / &pivot[col];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &k * y;
            }
        }
        r += 1;
    }
    r
}

/// `dim Q[x]/(gens + m^bound)`: the number of monomials of degree below
/// `bound` minus the rank of all truncated monomial multiples of `gens`.
pub fn truncated_quotient_dim(gens: &[Vec<Term>], n: usize, bound: u32) -> usize {
    let monos = monomials_below(n, bound);
    let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        for m in &monos {
            let mut row = vec![BigRational::zero(); monos.len()];
            let mut any = false;
            for (c, e) in g {
                let prod: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
                if let Some(&k) = index.get(&prod) {
                    row[k] += BigRational::from_integer(BigInt::from(*c));
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    monos.len() - rank(rows)
}

/// Milnor number at the origin, provided the truncated dimensions have
/// stabilized by `bound` (checked against `bound - 1`).
pub fn milnor_at_origin(f: &[Term], n: usize, bound: u32) -> Option<usize> {
    let grad = gradient(f, n);
    let a = truncated_quotient_dim(&grad, n, bound - 1);
    let b = truncated_quotient_dim(&grad, n, bound);
    (a == b).then_some(b)
}

