use serde::Serialize;

use super::poly::BigPoly;
use super::{LinalgError, Result};
use crate::spectra::{FactoredPoly, Spectrum};

/// Default tolerance for matching exact spectra against numeric ones.
pub const MATCH_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchReport {
    pub matched: bool,
    pub worst_deviation: f64,
    /// Position in the descending order where the worst deviation occurs.
    pub worst_index: usize,
    pub tol: f64,
}

/// Pairs the exact values (sorted descending) with the numeric list (also
/// sorted descending) position by position.
pub fn spectra_match(closed: &Spectrum, numeric: &[f64], tol: f64) -> Result<MatchReport> {
    let exact = closed.approx_values();
    if exact.len() != numeric.len() {
        return Err(LinalgError::LengthMismatch {
            closed: exact.len(),
            numeric: numeric.len(),
        });
    }
    let mut sorted = numeric.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut worst = 0.0f64;
    let mut worst_index = 0;
    for (i, (a, b)) in exact.iter().zip(&sorted).enumerate() {
        let d = (a - b).abs();
        if d > worst || d.is_nan() {
            worst = d;
            worst_index = i;
        }
    }
    Ok(MatchReport {
        matched: worst < tol,
        worst_deviation: worst,
        worst_index,
        tol,
    })
}

pub fn expand(f: &FactoredPoly) -> BigPoly {
    f.factors()
        .iter()
        .fold(BigPoly::one(), |acc, (p, e)| acc.mul(&p.pow(*e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::QuadraticValue;

    fn ints(values: &[(i64, usize)]) -> Spectrum {
        Spectrum::new(
            values
                .iter()
                .map(|&(v, m)| (QuadraticValue::integer(v), m))
                .collect(),
        )
    }

    #[test]
    fn matching() {
        let s = ints(&[(1, 1), (-1, 1)]);
        assert!(spectra_match(&s, &[1.0, -1.0], MATCH_TOL).unwrap().matched);
        assert!(spectra_match(&s, &[-1.0, 1.0], MATCH_TOL).unwrap().matched);
        let r = spectra_match(&ints(&[(0, 1)]), &[1e-3], MATCH_TOL).unwrap();
        assert!(!r.matched);
        assert!((r.worst_deviation - 1e-3).abs() < 1e-15);
        assert_eq!(
            spectra_match(&s, &[1.0], MATCH_TOL),
            Err(LinalgError::LengthMismatch {
                closed: 2,
                numeric: 1
            })
        );
    }

    #[test]
    fn expansion() {
        let f = FactoredPoly::new(vec![(BigPoly::linear(-2), 2)]);
        assert_eq!(expand(&f), BigPoly::from_i64(&[4, 4, 1]));
        assert_eq!(expand(&FactoredPoly::new(vec![])), BigPoly::one());
    }
}
