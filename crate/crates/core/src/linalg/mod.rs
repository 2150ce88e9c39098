//! Verification oracles: numeric eigenvalues, exact characteristic
//! polynomials, polynomial division and spectrum comparison.

mod charpoly;
mod compare;
mod jacobi;
mod poly;

use thiserror::Error;

pub use charpoly::{charpoly_exact, charpoly_modular};
pub use compare::{expand, spectra_match, MatchReport, MATCH_TOL};
pub use jacobi::{symmetric_eigenvalues, DEFAULT_TOL};
pub use poly::{poly_divide, BigPoly, QPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division in Faddeev-LeVerrier step {step}")]
    InexactDivision { step: usize },
    #[error("closed form has {closed} eigenvalues but the oracle returned {numeric}")]
    LengthMismatch { closed: usize, numeric: usize },
}

pub type Result<T> = std::result::Result<T, LinalgError>;
