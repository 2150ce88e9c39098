//! Closed-form spectra of the generating graphs and their pieces.
//!
//! Notation: `φ = φ(n)`, `n0` the squarefree radical of `n`, and for each
//! divisor `d > 1` of `n0` the integer `μ(d) φ / φ(d)`.

use super::spectrum::Spectrum;
use super::value::QuadraticValue;
use super::{Result, SpectraError};
use crate::numtheory::{divisors, euler_phi, mobius, radical};

pub(crate) struct Arith {
    pub n: i64,
    pub phi: i64,
    pub n0: i64,
    /// `(μ(d) φ / φ(d), φ(d))` for each divisor `d > 1` of `n0`.
    pub terms: Vec<(i64, usize)>,
}

impl Arith {
    pub fn new(n: usize, min_n: usize) -> Result<Self> {
        if n < min_n {
            return Err(SpectraError::Domain { n, min: min_n });
        }
        let n64 = n as u64;
        let phi = euler_phi(n64).expect("n >= 2") as i64;
        let n0 = radical(n64).expect("n >= 2");
        let terms = divisors(n0)
            .expect("n0 >= 1")
            .into_iter()
            .skip(1)
            .map(|d| {
                let pd = euler_phi(d).expect("d >= 1") as i64;
                (mobius(d).expect("d >= 1") * phi / pd, pd as usize)
            })
            .collect();
        Ok(Self {
            n: n as i64,
            phi,
            n0: n0 as i64,
            terms,
        })
    }

    fn count(&self, c: i64) -> usize {
        usize::try_from(c).expect("multiplicity is nonnegative")
    }
}

/// `A(Ω₂)`: reflections of `D_n`.
pub fn adjacency_spectrum_omega2_d(n: usize) -> Result<Spectrum> {
    let t = Arith::new(n, 2)?;
    let mut s = Spectrum::default();
    s.insert_int(0, t.count(t.n - t.n0));
    s.insert_int(t.phi, 1);
    for &(v, m) in &t.terms {
        s.insert_int(v, m);
    }
    Ok(s)
}

pub fn adjacency_spectrum_d(n: usize) -> Result<Spectrum> {
    let t = Arith::new(n, 2)?;
    let mut s = Spectrum::default();
    s.insert_int(0, t.count(2 * t.n - t.n0 - 1));
    for &(v, m) in &t.terms {
        s.insert_int(v, m);
    }
    let disc = (t.phi * t.phi + 4 * t.n * t.phi) as u64;
    for sign in [1, -1] {
        s.insert(QuadraticValue::from_parts(t.phi, sign, 2, disc), 1);
    }
    Ok(s)
}

/// `A₁₁`: the mixed elements `x^b y` of `Q_n`.
pub fn adjacency_spectrum_omega_q(n: usize) -> Result<Spectrum> {
    let t = Arith::new(n, 2)?;
    let mut s = Spectrum::default();
    s.insert_int(0, t.count(2 * t.n - t.n0));
    s.insert_int(2 * t.phi, 1);
    for &(v, m) in &t.terms {
        s.insert_int(2 * v, m);
    }
    Ok(s)
}

pub fn adjacency_spectrum_q(n: usize) -> Result<Spectrum> {
    let t = Arith::new(n, 2)?;
    let mut s = Spectrum::default();
    s.insert_int(0, t.count(4 * t.n - t.n0 - 1));
    for &(v, m) in &t.terms {
        s.insert_int(2 * v, m);
    }
    let disc = (t.phi * t.phi + 4 * t.n * t.phi) as u64;
    for sign in [1, -1] {
        s.insert(QuadraticValue::from_parts(t.phi, sign, 1, disc), 1);
    }
    Ok(s)
}

pub fn laplacian_spectrum_d(n: usize) -> Result<Spectrum> {
    let t = Arith::new(n, 2)?;
    let mut s = Spectrum::default();
    s.insert_int(0, t.count(t.n - t.phi + 1));
    for &(v, m) in &t.terms {
        s.insert_int(2 * t.phi - v, m);
    }
    s.insert_int(2 * t.phi, t.count(t.n - t.n0));
    s.insert_int(t.n, t.count(t.phi - 1));
    s.insert_int(t.n + t.phi, 1);
    Ok(s)
}

pub fn laplacian_spectrum_q(n: usize) -> Result<Spectrum> {
    let t = Arith::new(n, 2)?;
    let mut s = Spectrum::default();
    s.insert_int(0, t.count(2 * (t.n - t.phi) + 1));
    for &(v, m) in &t.terms {
        s.insert_int(4 * t.phi - 2 * v, m);
    }
    s.insert_int(4 * t.phi, t.count(2 * t.n - t.n0));
    s.insert_int(2 * t.n, t.count(2 * t.phi - 1));
    s.insert_int(2 * (t.n + t.phi), 1);
    Ok(s)
}

/// Distance spectrum of `Δ(D_n)`, defined for `n >= 3`.
pub fn distance_spectrum_d(n: usize) -> Result<Spectrum> {
    let t = Arith::new(n, 3)?;
    let mut s = Spectrum::default();
    s.insert_int(-2, t.count(t.phi + t.n - t.n0 - 1));
    for &(v, m) in &t.terms {
        s.insert_int(-2 - v, m);
    }
    let disc = (4 * t.n * t.n - 8 * t.n * t.phi + 9 * t.phi * t.phi) as u64;
    for sign in [1, -1] {
        s.insert(
            QuadraticValue::from_parts(2 * t.n - 4 + t.phi, sign, 2, disc),
            1,
        );
    }
    Ok(s)
}

/// Distance spectrum of `Δ(Q_n)`.
pub fn distance_spectrum_q(n: usize) -> Result<Spectrum> {
    let t = Arith::new(n, 2)?;
    let mut s = Spectrum::default();
    s.insert_int(-2, t.count(2 * (t.phi + t.n) - t.n0 - 1));
    for &(v, m) in &t.terms {
        s.insert_int(-2 - 2 * v, m);
    }
    let disc = ((3 * t.phi - 2 * t.n).pow(2) + 4 * t.n * t.phi) as u64;
    for sign in [1, -1] {
        s.insert(
            QuadraticValue::from_parts(t.phi + 2 * t.n - 2, sign, 1, disc),
            1,
        );
    }
    Ok(s)
}
