//! Characteristic polynomials of the eccentricity matrices of `Δ(D_n)` and
//! `Δ(Q_n)`, in verified form and in the form printed in the literature.

use serde::Serialize;

use super::closed::Arith;
use super::spectrum::{FactoredPoly, FactoredPolyJson, Spectrum};
use super::Result;
use crate::group::Family;
use crate::linalg::BigPoly;
use crate::numtheory::Factorization;

/// One linear factor whose printed root disagrees with the verified root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermCheck {
    pub label: String,
    pub printed_root: i64,
    pub verified_root: i64,
}

impl TermCheck {
    pub fn agrees(&self) -> bool {
        self.printed_root == self.verified_root
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityReport {
    pub family: Family,
    pub n: usize,
    pub printed: FactoredPoly,
    pub verified: FactoredPoly,
    /// Empty when the printed form is taken as is.
    pub terms: Vec<TermCheck>,
}

impl EccentricityReport {
    /// Whether the printed and verified factorizations differ at all.
    pub fn has_errata(&self) -> bool {
        self.printed != self.verified
    }

    /// Exact eigenvalues from the verified form.
    pub fn spectrum(&self) -> Spectrum {
        self.verified
            .roots()
            .expect("eccentricity factors have degree at most 2")
    }

    pub fn to_json(&self) -> EccentricityJson {
        EccentricityJson {
            family: self.family,
            n: self.n,
            printed: self.printed.to_json(),
            verified: self.verified.to_json(),
            printed_text: self.printed.to_string(),
            verified_text: self.verified.to_string(),
            terms: self.terms.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EccentricityJson {
    pub family: Family,
    pub n: usize,
    pub printed: FactoredPolyJson,
    pub verified: FactoredPolyJson,
    pub printed_text: String,
    pub verified_text: String,
    pub terms: Vec<TermCheck>,
}

fn linear(root: i64, exp: i64) -> (BigPoly, u32) {
    (
        BigPoly::linear(root),
        u32::try_from(exp).expect("exponent is nonnegative"),
    )
}

/// `n >= 3`. Prime `n` uses the block form with `Ω₁`/`Ω₂` coupling;
/// otherwise the matrix is block diagonal `2(J - I) ⊕ 2(J - I - A(Ω₂))`.
pub fn eccentricity_charpoly_d(n: usize) -> Result<EccentricityReport> {
    let t = Arith::new(n, 3)?;
    if Factorization::of(n as u64).expect("n >= 3").is_prime() {
        let p = t.n;
        let f = FactoredPoly::new(vec![
            (BigPoly::from_i64(&[(p - 1) * (p - 4), -(3 * p - 5), 1]), 1),
            linear(-2, p - 2),
            linear(-1, p - 1),
        ]);
        return Ok(EccentricityReport {
            family: Family::Dihedral,
            n,
            printed: f.clone(),
            verified: f,
            terms: Vec::new(),
        });
    }
    let (phi, n0) = (t.phi, t.n0);
    let mut verified = vec![
        linear(2 * phi - 2, 1),
        linear(-2, phi - 1 + t.n - n0),
        linear(2 * t.n - 2 * phi - 2, 1),
    ];
    let mut printed = vec![
        linear(-2, phi + t.n - n0 - 1),
        linear(phi, 1),
        linear(-2 * phi - 2, 1),
    ];
    for &(v, m) in &t.terms {
        verified.push(linear(-2 * v - 2, m as i64));
        printed.push(linear(-2 * v - 2, m as i64));
    }
    Ok(EccentricityReport {
        family: Family::Dihedral,
        n,
        printed: FactoredPoly::new(printed),
        verified: FactoredPoly::new(verified),
        terms: vec![
            TermCheck {
                label: "factor (x - φ(n))".into(),
                printed_root: phi,
                verified_root: 2 * phi - 2,
            },
            TermCheck {
                label: "product term d = 1".into(),
                printed_root: -2 * phi - 2,
                verified_root: 2 * t.n - 2 * phi - 2,
            },
        ],
    })
}

/// `n >= 2`. The matrix is `2(J - I) ⊕ 2(J - I - A₁₁)` on `R₁ ∪ Ω`.
pub fn eccentricity_charpoly_q(n: usize) -> Result<EccentricityReport> {
    let t = Arith::new(n, 2)?;
    let (phi, n0) = (t.phi, t.n0);
    let mut verified = vec![
        linear(4 * phi - 2, 1),
        linear(-2, 2 * phi - 1 + 2 * t.n - n0),
        linear(4 * t.n - 4 * phi - 2, 1),
    ];
    let mut printed = vec![
        linear(4 * phi + 2, 1),
        linear(-2, 2 * (phi + t.n) - (n0 + 1)),
        linear(-4 * phi - 2, 1),
    ];
    for &(v, m) in &t.terms {
        verified.push(linear(-4 * v - 2, m as i64));
        printed.push(linear(-4 * v - 2, m as i64));
    }
    Ok(EccentricityReport {
        family: Family::Dicyclic,
        n,
        printed: FactoredPoly::new(printed),
        verified: FactoredPoly::new(verified),
        terms: vec![
            TermCheck {
                label: "factor (x - (4φ(n) + 2))".into(),
                printed_root: 4 * phi + 2,
                verified_root: 4 * phi - 2,
            },
            TermCheck {
                label: "product term d = 1".into(),
                printed_root: -4 * phi - 2,
                verified_root: 4 * t.n - 4 * phi - 2,
            },
        ],
    })
}
