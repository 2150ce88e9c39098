//! Spectra of joins `X1 ∨ X2` of regular graphs.

use super::spectrum::Spectrum;
use super::value::{QuadraticValue, Rational};
use super::Result;

/// Adjacency spectrum of the join of a `k1`-regular graph on `n1` vertices
/// with a `k2`-regular graph on `n2` vertices.
pub fn join_adjacency(
    spec1: &Spectrum,
    n1: usize,
    k1: i64,
    spec2: &Spectrum,
    n2: usize,
    k2: i64,
) -> Result<Spectrum> {
    let (rest1, rest2) = drop_perron(spec1, k1, spec2, k2)?;
    let mut out = rest1.merged(&rest2);
    let disc = (k1 - k2).pow(2) + 4 * (n1 * n2) as i64;
    for sign in [1, -1] {
        out.insert(QuadraticValue::from_parts(k1 + k2, sign, 2, disc as u64), 1);
    }
    Ok(out)
}

/// Laplacian spectrum of a join; the inputs are the parts' Laplacian spectra.
pub fn join_laplacian(
    spec1: &Spectrum,
    n1: usize,
    spec2: &Spectrum,
    n2: usize,
) -> Result<Spectrum> {
    let zero = QuadraticValue::integer(0);
    let mut rest1 = spec1.clone();
    rest1.remove_one(&zero)?;
    let mut rest2 = spec2.clone();
    rest2.remove_one(&zero)?;
    let mut out = rest1
        .map(|v| v.shifted(Rational::from_integer(n2 as i64)))
        .merged(&rest2.map(|v| v.shifted(Rational::from_integer(n1 as i64))));
    out.insert_int(0, 1);
    out.insert_int((n1 + n2) as i64, 1);
    Ok(out)
}

/// Distance spectrum of a join of regular graphs, from the parts' adjacency
/// spectra. Inside each part non-adjacent vertices are at distance 2.
pub fn join_distance(
    spec1: &Spectrum,
    n1: usize,
    k1: i64,
    spec2: &Spectrum,
    n2: usize,
    k2: i64,
) -> Result<Spectrum> {
    let (rest1, rest2) = drop_perron(spec1, k1, spec2, k2)?;
    let mut out = rest1.merged(&rest2).map(QuadraticValue::neg_minus_two);
    let (n1, n2) = (n1 as i64, n2 as i64);
    let a2 = 2 * (n1 + n2 - 2) - (k1 + k2);
    let disc = (2 * (n1 - n2) - (k1 - k2)).pow(2) + 4 * n1 * n2;
    for sign in [1, -1] {
        out.insert(QuadraticValue::from_parts(a2, sign, 2, disc as u64), 1);
    }
    Ok(out)
}

fn drop_perron(
    spec1: &Spectrum,
    k1: i64,
    spec2: &Spectrum,
    k2: i64,
) -> Result<(Spectrum, Spectrum)> {
    let mut rest1 = spec1.clone();
    rest1.remove_one(&QuadraticValue::integer(k1))?;
    let mut rest2 = spec2.clone();
    rest2.remove_one(&QuadraticValue::integer(k2))?;
    Ok((rest1, rest2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::SpectraError;

    fn ints(values: &[(i64, usize)]) -> Spectrum {
        let mut s = Spectrum::default();
        for &(v, m) in values {
            s.insert_int(v, m);
        }
        s
    }

    #[test]
    fn single_vertices() {
        let k1 = ints(&[(0, 1)]);
        assert_eq!(
            join_adjacency(&k1, 1, 0, &k1, 1, 0).unwrap(),
            ints(&[(1, 1), (-1, 1)])
        );
        assert_eq!(
            join_laplacian(&k1, 1, &k1, 1).unwrap(),
            ints(&[(0, 1), (2, 1)])
        );
        assert_eq!(
            join_distance(&k1, 1, 0, &k1, 1, 0).unwrap(),
            ints(&[(1, 1), (-1, 1)])
        );
    }

    #[test]
    fn delta_q2_from_parts() {
        // the 4-cycle on the mixed elements joined with two isolated vertices
        let c4 = ints(&[(2, 1), (0, 2), (-2, 1)]);
        let e2 = ints(&[(0, 2)]);
        assert_eq!(
            join_adjacency(&c4, 4, 2, &e2, 2, 0).unwrap(),
            ints(&[(4, 1), (0, 3), (-2, 2)])
        );
        assert_eq!(
            join_distance(&c4, 4, 2, &e2, 2, 0).unwrap(),
            ints(&[(6, 1), (0, 2), (-2, 3)])
        );
        let lc4 = ints(&[(0, 1), (2, 2), (4, 1)]);
        assert_eq!(
            join_laplacian(&lc4, 4, &e2, 2).unwrap(),
            ints(&[(0, 1), (4, 3), (6, 2)])
        );
    }

    #[test]
    fn contract_errors() {
        let s = ints(&[(1, 2)]);
        assert!(matches!(
            join_adjacency(&s, 2, 0, &s, 2, 1),
            Err(SpectraError::MissingEigenvalue(_))
        ));
        assert!(join_laplacian(&s, 2, &ints(&[(0, 1)]), 1).is_err());
    }
}
