//! Exact linear algebra on rational matrices.
//!
//! The zero-eigenvalue multiplicity is read off the characteristic
//! polynomial, computed modulo enough 62-bit primes that every coefficient
//! found to vanish modulo all of them is provably zero over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::poly::Rational;

/// Algebraic multiplicity of the eigenvalue 0 of the square matrix whose
/// columns are `cols`, i.e. the dimension of its generalized kernel.
pub(crate) fn zero_eigenvalue_multiplicity(cols: &[Vec<Rational>]) -> usize {
    let n = cols.len();
    if n == 0 {
        return 0;
    }
    let denom = cols.iter().flatten().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<Vec<BigInt>> = cols
        .iter()
        .map(|c| c.iter().map(|x| x.numer() * (&denom / x.denom())).collect())
        .collect();
    // |c_k| <= 2^n * prod_j max(1, |col_j|_2) for every coefficient c_k.
    let half_log_n = (usize::BITS - n.leading_zeros()).div_ceil(2) as u64;
    let bound_bits: u64 = n as u64
        + ints
            .iter()
            .map(|c| c.iter().map(BigInt::bits).max().unwrap_or(0))
            .filter(|&b| b > 0)
            .map(|b| b + half_log_n)
            .sum::<u64>();
    let primes = primes_below_2_62(bound_bits.div_ceil(61) as usize + 1);
    let polys: Vec<Vec<u64>> = primes.par_iter().map(|&p| charpoly_mod(&ints, p)).collect();
    (0..=n).find(|&k| polys.iter().any(|c| c[k] != 0)).unwrap_or(n)
}

fn primes_below_2_62(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut q = (1u64 << 62) - 1;
    while out.len() < count {
        if primal_check::miller_rabin(q) {
            out.push(q);
        }
        q -= 2;
    }
    out
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = (x.abs() % p).to_u64().expect("residue fits");
    if x.is_negative() && r != 0 {
        p - r
    } else {
        r
    }
}

/// Coefficients `c_0..=c_n` of `det(lambda I - A)` modulo `p`, through a
/// Hessenberg reduction. `a` holds the matrix by columns; the transpose has
/// the same characteristic polynomial.
fn charpoly_mod(a: &[Vec<BigInt>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
    let sub = |x: u64, y: u64| if x >= y { x - y } else { x + p - y };
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            h.swap(piv, j + 1);
            for row in h.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p);
        for r in j + 2..n {
            let u = mul_mod(h[r][j], inv, p);
            if u == 0 {
                continue;
            }
            for c in j..n {
                let v = mul_mod(u, h[j + 1][c], p);
                h[r][c] = sub(h[r][c], v);
            }
            for row in h.iter_mut() {
                let v = mul_mod(u, row[r], p);
                row[j + 1] = (row[j + 1] + v) % p;
            }
        }
    }
    // polys[k] is the characteristic polynomial of the leading k x k block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = sub(next[i], mul_mod(h[k][k], c, p));
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = mul_mod(t, h[i + 1][i], p);
            let f = mul_mod(h[i][k], t, p);
            if f == 0 {
                continue;
            }
            for (e, &c) in polys[i].iter().enumerate() {
                next[e] = sub(next[e], mul_mod(f, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("nonempty")
}
