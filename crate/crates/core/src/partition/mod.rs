//! Vertex partitions: the pairing `Θ` of `x^i` with `x^(i+n)`, the `∼`
//! classes on the mixed elements, equitability, quotients and small-graph
//! isomorphism.

mod iso;

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

pub use iso::{is_isomorphic, ISO_MAX_ORDER};

use crate::graph::{build_generating_graph, Graph, IntMatrix};
use crate::group::{GroupElement, GroupId};
use crate::linalg::{charpoly_exact, charpoly_modular, poly_divide};
use crate::numtheory::radical;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("invalid partition: {0}")]
    Invalid(String),
    #[error("partition is not equitable: {0}")]
    NotEquitable(Witness),
    #[error("cell {0} contains adjacent vertices")]
    AdjacentInsideCell(usize),
    #[error("charpoly of the quotient does not divide charpoly of the matrix")]
    Indivisible,
    #[error("isomorphism search is limited to {max} vertices, got {order}")]
    TooLarge { order: usize, max: usize },
    #[error("isomorphism search exceeded its budget of {0} steps")]
    BudgetExhausted(u64),
    #[error("group parameter n must be at least 2, got {0}")]
    InvalidN(usize),
}

pub type Result<T> = std::result::Result<T, PartitionError>;

/// Two rows of cell `row_cell` with different sums over cell `col_cell`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row_cell: usize,
    pub col_cell: usize,
    pub rows: (usize, usize),
    pub sums: (i64, i64),
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "rows {} and {} of cell {} sum to {} and {} over cell {}",
            self.rows.0, self.rows.1, self.row_cell, self.sums.0, self.sums.1, self.col_cell
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equitability {
    Equitable,
    NotEquitable(Witness),
}

impl Equitability {
    pub fn is_equitable(&self) -> bool {
        matches!(self, Equitability::Equitable)
    }
}

/// Disjoint nonempty cells covering `0..order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    order: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(order: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; order];
        for (k, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(PartitionError::Invalid(format!("cell {k} is empty")));
            }
            for &v in cell {
                if v >= order {
                    return Err(PartitionError::Invalid(format!("index {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(PartitionError::Invalid(format!("index {v} repeated")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(PartitionError::Invalid(format!("index {v} not covered")));
        }
        Ok(Self { order, cells })
    }

    pub fn singletons(order: usize) -> Self {
        Self {
            order,
            cells: (0..order).map(|v| vec![v]).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// The partition induced on `keep`, renumbered by position in `keep`.
    /// Cells that lose every member disappear.
    pub fn restrict(&self, keep: &[usize]) -> Result<Partition> {
        let position: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let cells = self
            .cells
            .iter()
            .map(|c| {
                c.iter()
                    .filter_map(|v| position.get(v).copied())
                    .collect::<Vec<_>>()
            })
            .filter(|c| !c.is_empty())
            .collect();
        Partition::new(keep.len(), cells)
    }
}

fn vertex_index(id: GroupId) -> HashMap<GroupElement, usize> {
    id.strata()
        .into_iter()
        .flat_map(|(_, members)| members)
        .enumerate()
        .map(|(i, g)| (g, i))
        .collect()
}

/// `Θ` on the vertices of `Γ(Q_n)`: cells `{x^i, x^(i+n)}` for `0 <= i < n`,
/// then `{x^i y, x^(i+n) y}`.
pub fn theta_partition(n: usize) -> Result<Partition> {
    let id = GroupId::dicyclic(n).map_err(|_| PartitionError::InvalidN(n))?;
    let index = vertex_index(id);
    let pair =
        |make: fn(usize) -> GroupElement, i: usize| vec![index[&make(i)], index[&make(i + n)]];
    let cells = (0..n)
        .map(|i| pair(GroupElement::Power, i))
        .chain((0..n).map(|i| pair(GroupElement::Mixed, i)))
        .collect();
    Partition::new(4 * n, cells)
}

/// The `∼` classes on `Ω = {x^b y}`, indexed as in `Γ_Ω(Q_n)` (equivalently
/// the first `2n` vertices of `Γ(Q_n)`): `x^b y ∼ x^c y` iff `b ≡ c (mod n0)`.
pub fn sim_classes(n: usize) -> Result<Partition> {
    residue_classes(n, 2 * n)
}

/// The same classes on the reflections `Ω₂ = {s r^b}` of `D_n`.
pub fn sim_classes_dihedral(n: usize) -> Result<Partition> {
    residue_classes(n, n)
}

fn residue_classes(n: usize, size: usize) -> Result<Partition> {
    if n < 2 {
        return Err(PartitionError::InvalidN(n));
    }
    let n0 = radical(n as u64).expect("n >= 2") as usize;
    let cells = (0..n0).map(|r| (r..size).step_by(n0).collect()).collect();
    Partition::new(size, cells)
}

pub fn equitability(m: &IntMatrix, p: &Partition) -> Equitability {
    match block_sums(m, p) {
        Ok(_) => Equitability::Equitable,
        Err(w) => Equitability::NotEquitable(w),
    }
}

pub fn is_equitable(m: &IntMatrix, p: &Partition) -> bool {
    equitability(m, p).is_equitable()
}

fn block_sums(m: &IntMatrix, p: &Partition) -> std::result::Result<IntMatrix, Witness> {
    assert_eq!(
        m.order(),
        p.order(),
        "partition must cover the matrix indices"
    );
    let k = p.len();
    let mut q = IntMatrix::zeros(k);
    for (i, ci) in p.cells.iter().enumerate() {
        for (j, cj) in p.cells.iter().enumerate() {
            let sum = |r: usize| cj.iter().map(|&c| m.get(r, c)).sum::<i64>();
            let first = sum(ci[0]);
            if let Some(&r) = ci[1..].iter().find(|&&r| sum(r) != first) {
                return Err(Witness {
                    row_cell: i,
                    col_cell: j,
                    rows: (ci[0], r),
                    sums: (first, sum(r)),
                });
            }
            q.set(i, j, first);
        }
    }
    Ok(q)
}

/// Matrix of constant block row sums, `b_ij`.
pub fn quotient_matrix(m: &IntMatrix, p: &Partition) -> Result<IntMatrix> {
    block_sums(m, p).map_err(PartitionError::NotEquitable)
}

/// One vertex per cell, adjacent iff some pair across the two cells is.
pub fn quotient_graph(g: &Graph, p: &Partition) -> Result<Graph> {
    for (k, cell) in p.cells.iter().enumerate() {
        for (i, &u) in cell.iter().enumerate() {
            if cell[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                return Err(PartitionError::AdjacentInsideCell(k));
            }
        }
    }
    let mut q = Graph::empty(p.len());
    for (a, ca) in p.cells.iter().enumerate() {
        for (b, cb) in p.cells.iter().enumerate().skip(a + 1) {
            if ca.iter().any(|&u| cb.iter().any(|&v| g.has_edge(u, v))) {
                q.add_edge(a, b);
            }
        }
    }
    Ok(q)
}

/// Exact check that the characteristic polynomial of the quotient divides
/// that of `m`. A remainder is reported as an error.
pub fn charpoly_divides_check(m: &IntMatrix, p: &Partition) -> Result<bool> {
    let q = quotient_matrix(m, p)?;
    let full = charpoly_modular(m);
    let small = charpoly_exact(&q).expect("integer quotient matrix");
    let (_, rem) = poly_divide(&full, &small).expect("charpoly is monic, never zero");
    if rem.is_zero() {
        Ok(true)
    } else {
        Err(PartitionError::Indivisible)
    }
}

/// Checks that `Γ(Q_n)/Θ` equals `Γ(D_n)` under `{x^i} ↦ r^i`, `{x^i y} ↦ s r^i`.
pub fn quotient_iso_to_dihedral(n: usize) -> Result<bool> {
    let q_id = GroupId::dicyclic(n).map_err(|_| PartitionError::InvalidN(n))?;
    let d_id = GroupId::dihedral(n).map_err(|_| PartitionError::InvalidN(n))?;
    let quotient = quotient_graph(&build_generating_graph(q_id), &theta_partition(n)?)?;
    let dn = build_generating_graph(d_id);
    // theta cell k: powers for k < n, mixed after
    let image = |k: usize| {
        let g = if k < n {
            GroupElement::Power(k)
        } else {
            GroupElement::Mixed(k - n)
        };
        dn.index_of(g).expect("element of D_n")
    };
    let cells = 2 * n;
    Ok((0..cells).all(|a| {
        (a + 1..cells).all(|b| quotient.has_edge(a, b) == dn.has_edge(image(a), image(b)))
    }))
}
