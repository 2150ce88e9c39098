//! Exact characteristic polynomials `det(xI - M)` of integer matrices.
//!
//! Two independent routes:
//! * [`charpoly_exact`]: the Faddeev–LeVerrier recurrence over big integers.
//!   Every division by the step index is exact and is checked.
//! * [`charpoly_modular`]: Hessenberg reduction modulo word-size primes,
//!   recombined by CRT. The number of primes comes from a Hadamard bound on
//!   the coefficients, so the result is exact. `O(n^3)` per prime, which is
//!   what makes the large adjacency matrices tractable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::BigPoly;
use super::{LinalgError, Result};
use crate::graph::IntMatrix;

/// Faddeev–LeVerrier: `M_0 = 0`, `M_k = A M_{k-1} + c_{n-k+1} I`,
/// `c_{n-k} = -tr(A M_k) / k`.
pub fn charpoly_exact(m: &IntMatrix) -> Result<BigPoly> {
    let n = m.order();
    // sparse rows of A: (column, entry)
    let sparse: Vec<Vec<(usize, i64)>> = m
        .rows()
        .map(|r| {
            r.iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, v))
                .collect()
        })
        .collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_1 = I
    let mut mk: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::one();
            row
        })
        .collect();
    for k in 1..=n {
        if k > 1 {
            let mut next = times_sparse(&sparse, &mk);
            for (i, row) in next.iter_mut().enumerate() {
                row[i] += &coeffs[n - k + 1];
            }
            mk = next;
        }
        // tr(A M_k) = sum_ij a_ij (M_k)_ji
        let mut tr = BigInt::zero();
        for (i, row) in sparse.iter().enumerate() {
            for &(j, a) in row {
                add_scaled(&mut tr, &mk[j][i], a);
            }
        }
        let (q, r) = tr.div_rem(&BigInt::from(k));
        if !r.is_zero() {
            return Err(LinalgError::InexactDivision { step: k });
        }
        coeffs[n - k] = -q;
    }
    Ok(BigPoly::new(coeffs))
}

#[inline]
fn add_scaled(acc: &mut BigInt, x: &BigInt, a: i64) {
    match a {
        1 => *acc += x,
        -1 => *acc -= x,
        _ => *acc += x * a,
    }
}

fn times_sparse(sparse: &[Vec<(usize, i64)>], m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    sparse
        .iter()
        .map(|row| {
            let mut out = vec![BigInt::zero(); n];
            for &(j, a) in row {
                for (o, x) in out.iter_mut().zip(&m[j]) {
                    add_scaled(o, x, a);
                }
            }
            out
        })
        .collect()
}

/// Exact characteristic polynomial by multimodular Hessenberg reduction.
pub fn charpoly_modular(m: &IntMatrix) -> BigPoly {
    let n = m.order();
    let bits = coefficient_bound_bits(m);
    let mut modulus = BigInt::one();
    let mut acc = vec![BigInt::zero(); n + 1];
    let mut primes = PrimeStream::new();
    while modulus.bits() as f64 <= bits + 2.0 {
        let p = primes.next_prime();
        let residues = charpoly_mod_p(m, p);
        crt_merge(&mut acc, &modulus, &residues, p);
        modulus *= p;
    }
    let half = &modulus >> 1u32;
    let coeffs = acc
        .into_iter()
        .map(|c| if c > half { c - &modulus } else { c })
        .collect();
    BigPoly::new(coeffs)
}

/// log2 of a bound on every coefficient of `det(xI - M)`: each coefficient
/// is a sum of at most `2^n` principal minors, each bounded by the product
/// of row norms (Hadamard).
fn coefficient_bound_bits(m: &IntMatrix) -> f64 {
    let n = m.order() as f64;
    let norms: f64 = m
        .rows()
        .map(|r| {
            let sq: f64 = r.iter().map(|&v| (v as f64) * (v as f64)).sum();
            sq.sqrt().max(1.0).log2()
        })
        .sum();
    n + norms
}

fn crt_merge(acc: &mut [BigInt], modulus: &BigInt, residues: &[u64], p: u64) {
    // x = acc + modulus * t with t = (r - acc) * modulus^{-1} mod p
    let m_mod_p = (modulus % p).to_u64().expect("reduced mod p");
    let inv = if modulus.is_one() {
        1
    } else {
        inv_mod(m_mod_p, p)
    };
    for (a, &r) in acc.iter_mut().zip(residues) {
        let a_mod_p = (&*a % p).to_u64().expect("reduced mod p");
        let diff = (r + p - a_mod_p) % p;
        let t = mul_mod(diff, inv, p);
        *a += modulus * t;
    }
}

fn charpoly_mod_p(m: &IntMatrix, p: u64) -> Vec<u64> {
    let n = m.order();
    let mut h: Vec<Vec<u64>> = m
        .rows()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    // reduce to upper Hessenberg form by similarity transforms
    for col in 0..n.saturating_sub(2) {
        let pivot_row = col + 1;
        let Some(piv) = (pivot_row..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if piv != pivot_row {
            h.swap(piv, pivot_row);
            for row in h.iter_mut() {
                row.swap(piv, pivot_row);
            }
        }
        let inv = inv_mod(h[pivot_row][col], p);
        for i in pivot_row + 1..n {
            let u = mul_mod(h[i][col], inv, p);
            if u == 0 {
                continue;
            }
            // row_i -= u * row_pivot
            for j in 0..n {
                let t = mul_mod(u, h[pivot_row][j], p);
                h[i][j] = sub_mod(h[i][j], t, p);
            }
            // col_pivot += u * col_i
            for row in h.iter_mut() {
                let t = mul_mod(u, row[i], p);
                row[pivot_row] = add_mod(row[pivot_row], t, p);
            }
        }
    }
    // p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = add_mod(next[d + 1], c, p);
            next[d] = sub_mod(next[d], mul_mod(h[k][k], c, p), p);
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = mul_mod(t, h[i + 1][i], p);
            if t == 0 {
                break;
            }
            let f = mul_mod(h[i][k], t, p);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub_mod(next[d], mul_mod(f, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().expect("at least the constant polynomial")
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for 64-bit integers.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below 2^62.
struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    fn new() -> Self {
        Self {
            next: (1u64 << 62) - 1,
        }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}
