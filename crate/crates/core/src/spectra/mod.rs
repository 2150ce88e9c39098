//! Exact spectra: values of the form `a + b√d`, spectra as multisets of
//! such values, factored characteristic polynomials, join formulas and the
//! closed forms for the generating graphs of `D_n` and `Q_n`.

mod closed;
mod eccentricity;
mod join;
mod spectrum;
mod value;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use closed::{
    adjacency_spectrum_d, adjacency_spectrum_omega2_d, adjacency_spectrum_omega_q,
    adjacency_spectrum_q, distance_spectrum_d, distance_spectrum_q, laplacian_spectrum_d,
    laplacian_spectrum_q,
};
pub use eccentricity::{
    eccentricity_charpoly_d, eccentricity_charpoly_q, EccentricityJson, EccentricityReport,
    TermCheck,
};
pub use join::{join_adjacency, join_distance, join_laplacian};
pub use spectrum::{
    EntryJson, ExactSum, FactorJson, FactoredPoly, FactoredPolyJson, Spectrum, SpectrumJson,
};
pub use value::{ratio_text, QuadraticValue, Rational};

use crate::group::{Family, GroupId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("closed form requires n >= {min}, got {n}")]
    Domain { n: usize, min: usize },
    #[error("eigenvalue {0} is not in the spectrum")]
    MissingEigenvalue(String),
    #[error("unknown matrix kind {0:?}; expected adj, lap, dist or ecc")]
    UnknownMatrix(String),
}

pub type Result<T> = std::result::Result<T, SpectraError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    Distance,
    Eccentricity,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 4] = [
        MatrixKind::Adjacency,
        MatrixKind::Laplacian,
        MatrixKind::Distance,
        MatrixKind::Eccentricity,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adj",
            MatrixKind::Laplacian => "lap",
            MatrixKind::Distance => "dist",
            MatrixKind::Eccentricity => "ecc",
        }
    }

    /// Distance and eccentricity matrices live on `Δ`, the others on the
    /// whole generating graph.
    pub fn on_delta(self) -> bool {
        matches!(self, MatrixKind::Distance | MatrixKind::Eccentricity)
    }

    /// Smallest `n` with a closed form.
    pub fn min_n(self, family: Family) -> usize {
        match (self, family) {
            (MatrixKind::Distance | MatrixKind::Eccentricity, Family::Dihedral) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for MatrixKind {
    type Err = SpectraError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adj" | "adjacency" => Ok(MatrixKind::Adjacency),
            "lap" | "laplacian" => Ok(MatrixKind::Laplacian),
            "dist" | "distance" => Ok(MatrixKind::Distance),
            "ecc" | "eccentricity" => Ok(MatrixKind::Eccentricity),
            other => Err(SpectraError::UnknownMatrix(other.to_string())),
        }
    }
}

/// Closed-form spectrum of the chosen matrix of `Γ(G)` (or `Δ(G)`).
pub fn closed_spectrum(id: GroupId, kind: MatrixKind) -> Result<Spectrum> {
    let n = id.n();
    match (id.family(), kind) {
        (Family::Dihedral, MatrixKind::Adjacency) => adjacency_spectrum_d(n),
        (Family::Dihedral, MatrixKind::Laplacian) => laplacian_spectrum_d(n),
        (Family::Dihedral, MatrixKind::Distance) => distance_spectrum_d(n),
        (Family::Dihedral, MatrixKind::Eccentricity) => Ok(eccentricity_charpoly_d(n)?.spectrum()),
        (Family::Dicyclic, MatrixKind::Adjacency) => adjacency_spectrum_q(n),
        (Family::Dicyclic, MatrixKind::Laplacian) => laplacian_spectrum_q(n),
        (Family::Dicyclic, MatrixKind::Distance) => distance_spectrum_q(n),
        (Family::Dicyclic, MatrixKind::Eccentricity) => Ok(eccentricity_charpoly_q(n)?.spectrum()),
    }
}

pub fn eccentricity_charpoly(id: GroupId) -> Result<EccentricityReport> {
    match id.family() {
        Family::Dihedral => eccentricity_charpoly_d(id.n()),
        Family::Dicyclic => eccentricity_charpoly_q(id.n()),
    }
}
