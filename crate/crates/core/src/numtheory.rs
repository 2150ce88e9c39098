//! Arithmetic functions used by the closed-form spectra: totient, Möbius,
//! squarefree radical, divisors, units and Ramanujan sums.
//!
//! Everything here factors by trial division; the integers involved stay in
//! the low thousands.

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NumTheoryError {
    #[error("argument must be a positive integer, got 0")]
    Zero,
}

pub type Result<T> = std::result::Result<T, NumTheoryError>;

/// Prime factorization `n = p_1^e_1 ... p_k^e_k` with increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    primes: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn of(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(NumTheoryError::Zero);
        }
        let mut primes = Vec::new();
        let mut m = n;
        let mut p = 2u64;
        while p * p <= m {
            if m.is_multiple_of(p) {
                let mut e = 0;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                }
                primes.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            primes.push((m, 1));
        }
        Ok(Self { n, primes })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[(u64, u32)] {
        &self.primes
    }

    /// Number of distinct prime divisors.
    pub fn distinct_primes(&self) -> usize {
        self.primes.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.primes.iter().all(|&(_, e)| e == 1)
    }

    pub fn is_prime(&self) -> bool {
        self.primes.len() == 1 && self.primes[0].1 == 1
    }

    pub fn is_prime_power(&self) -> bool {
        self.primes.len() == 1
    }

    pub fn smallest_prime(&self) -> Option<u64> {
        self.primes.first().map(|&(p, _)| p)
    }
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = Factorization::of(n)?;
    Ok(f.primes.iter().fold(n, |acc, &(p, _)| acc / p * (p - 1)))
}

pub fn mobius(n: u64) -> Result<i64> {
    let f = Factorization::of(n)?;
    if !f.is_squarefree() {
        return Ok(0);
    }
    Ok(if f.distinct_primes() % 2 == 0 { 1 } else { -1 })
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> Result<u64> {
    Ok(Factorization::of(n)?
        .primes
        .iter()
        .map(|&(p, _)| p)
        .product())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = Factorization::of(n)?;
    let mut out = vec![1u64];
    for &(p, e) in &f.primes {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Residues `0 <= a < n` coprime to `n`. For `n = 1` this is `[0]`.
pub fn unit_group(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(NumTheoryError::Zero);
    }
    Ok((0..n).filter(|a| a.gcd(&n) == 1).collect())
}

/// Number of distinct prime factors of `n`.
pub fn prime_count(n: u64) -> Result<usize> {
    Ok(Factorization::of(n)?.distinct_primes())
}

pub fn smallest_prime_factor(n: u64) -> Result<Option<u64>> {
    Ok(Factorization::of(n)?.smallest_prime())
}

/// `c_q(l)`: the sum of the `l`-th powers of the primitive `q`-th roots of
/// unity, evaluated as `μ(d) φ(q) / φ(d)` with `d = q / gcd(q, l)`.
pub fn ramanujan_sum(q: u64, l: u64) -> Result<i64> {
    if q == 0 {
        return Err(NumTheoryError::Zero);
    }
    let d = q / q.gcd(&l);
    let mu = mobius(d)?;
    Ok(mu * (euler_phi(q)? / euler_phi(d)?) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn totient_examples() {
        assert_eq!(euler_phi(1), Ok(1));
        assert_eq!(euler_phi(12), Ok(4));
        assert_eq!(euler_phi(7), Ok(6));
        assert_eq!(euler_phi(0), Err(NumTheoryError::Zero));
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), Ok(1));
        assert_eq!(mobius(6), Ok(1));
        assert_eq!(mobius(12), Ok(0));
        assert_eq!(mobius(30), Ok(-1));
        assert!(mobius(0).is_err());
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(12), Ok(6));
        assert_eq!(radical(8), Ok(2));
        assert_eq!(radical(7), Ok(7));
        assert_eq!(radical(1), Ok(1));
        assert!(radical(0).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(9).unwrap(), vec![1, 3, 9]);
        assert_eq!(divisors(360).unwrap().len(), 24);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn unit_group_examples() {
        assert_eq!(unit_group(6).unwrap(), vec![1, 5]);
        assert_eq!(unit_group(4).unwrap(), vec![1, 3]);
        assert_eq!(unit_group(2).unwrap(), vec![1]);
        assert!(unit_group(0).is_err());
    }

    #[test]
    fn ramanujan_examples() {
        assert_eq!(ramanujan_sum(6, 0), Ok(2));
        assert_eq!(ramanujan_sum(6, 1), Ok(1));
        assert_eq!(ramanujan_sum(6, 3), Ok(-2));
    }

    #[test]
    fn totient_divisor_sum() {
        for n in 1..=10_000u64 {
            let s: u64 = divisors(n)
                .unwrap()
                .iter()
                .map(|&d| euler_phi(d).unwrap())
                .sum();
            assert_eq!(s, n, "n = {n}");
        }
    }

    #[test]
    fn mobius_divisor_sum() {
        for n in 1..=10_000u64 {
            let s: i64 = divisors(n)
                .unwrap()
                .iter()
                .map(|&d| mobius(d).unwrap())
                .sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn ramanujan_matches_root_of_unity_sum() {
        for q in 1..=200u64 {
            let units = unit_group(q).unwrap();
            for l in 0..q {
                let direct: f64 = units
                    .iter()
                    .map(|&j| (2.0 * PI * (j * l) as f64 / q as f64).cos())
                    .sum();
                let closed = ramanujan_sum(q, l).unwrap() as f64;
                assert!(
                    (direct - closed).abs() < 1e-9,
                    "q={q} l={l}: {direct} vs {closed}"
                );
            }
        }
    }

    #[test]
    fn unit_group_length_is_totient() {
        for n in 1..=500 {
            assert_eq!(unit_group(n).unwrap().len() as u64, euler_phi(n).unwrap());
        }
    }

    proptest::proptest! {
        #[test]
        fn radical_is_squarefree_divisor(n in 1u64..100_000) {
            let r = radical(n).unwrap();
            proptest::prop_assert_eq!(n % r, 0);
            proptest::prop_assert!(Factorization::of(r).unwrap().is_squarefree());
            proptest::prop_assert_ne!(mobius(r).unwrap(), 0);
        }

        #[test]
        fn factorization_reconstructs(n in 1u64..1_000_000) {
            let f = Factorization::of(n).unwrap();
            let prod: u64 = f.primes().iter().map(|&(p, e)| p.pow(e)).product();
            proptest::prop_assert_eq!(prod, n);
            proptest::prop_assert!(f.primes().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }
}
