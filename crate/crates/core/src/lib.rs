//! Generating graphs of the dihedral groups `D_n` and dicyclic groups `Q_n`:
//! construction, exact closed-form spectra, and independent oracles that
//! check them.

pub mod graph;
pub mod group;
pub mod invariants;
pub mod linalg;
pub mod numtheory;
pub mod partition;
pub mod spectra;
pub mod verify;
