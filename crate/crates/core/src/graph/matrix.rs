use std::fmt;

use serde::{Deserialize, Serialize};

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zeros(order);
        for i in 0..order {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        Self { order, entries }
    }

    /// Panics when the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        Self {
            order,
            entries: rows.concat(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.order + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> i64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        Self::from_fn(indices.len(), |i, j| self.get(indices[i], indices[j]))
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|&v| v * k).collect(),
        }
    }

    pub fn max_abs(&self) -> i64 {
        self.entries.iter().map(|v| v.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
