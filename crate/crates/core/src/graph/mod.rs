//! Generating graphs `Γ(G)`, their induced subgraphs and the integer
//! matrices (adjacency, Laplacian, distance, eccentricity) built from them.
//!
//! Vertex order is part of the contract: strata in the order given by
//! [`GroupId::strata`], and within a stratum by increasing exponent. Matrix
//! fixtures therefore do not move between runs.

mod export;
mod matrix;

use std::collections::{BTreeMap, VecDeque};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::group::{self, GroupElement, GroupId, Stratum};
use crate::numtheory;

pub use export::{export, parse_json, ExportFormat, GraphJson};
pub use matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph is disconnected: no path between vertices {0} and {1}")]
    Disconnected(usize, usize),
    #[error("vertex {vertex} in stratum {stratum:?} has degree {degree}, expected {expected}")]
    UnexpectedDegree {
        vertex: usize,
        stratum: Stratum,
        degree: usize,
        expected: usize,
    },
    #[error("graph carries no group labels")]
    Unlabeled,
    #[error("malformed graph data: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, GraphError>;

/// Simple undirected graph with packed adjacency rows. Graphs built from a
/// group carry the element labelling; plain fixtures do not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    group: Option<GroupId>,
    labels: Vec<GroupElement>,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        Self {
            group: None,
            labels: Vec::new(),
            adj: vec![FixedBitSet::with_capacity(order); order],
        }
    }

    /// Panics on out-of-range endpoints or self-loops.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(order: usize) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(order: usize) -> Self {
        let edges: Vec<_> = (1..order).map(|i| (i - 1, i)).collect();
        Self::from_edges(order, &edges)
    }

    pub fn cycle(order: usize) -> Self {
        let mut g = Self::path(order);
        if order > 2 {
            g.add_edge(order - 1, 0);
        }
        g
    }

    pub(crate) fn with_labels(group: GroupId, labels: Vec<GroupElement>) -> Self {
        let mut g = Self::empty(labels.len());
        g.group = Some(group);
        g.labels = labels;
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn group(&self) -> Option<GroupId> {
        self.group
    }

    pub fn labels(&self) -> &[GroupElement] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<GroupElement> {
        self.labels.get(v).copied()
    }

    pub fn index_of(&self, g: GroupElement) -> Option<usize> {
        self.labels.iter().position(|&h| h == g)
    }

    /// Element text for labelled graphs, the vertex index otherwise.
    pub fn vertex_name(&self, v: usize) -> String {
        match (self.group, self.label(v)) {
            (Some(id), Some(g)) => id.format(g),
            _ => v.to_string(),
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order())
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        g.group = self.group;
        if !self.labels.is_empty() {
            g.labels = vertices.iter().map(|&v| self.labels[v]).collect();
        }
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        g.group = self.group;
        g.labels = self.labels.clone();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Vertices of each connected component, in order of smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.order(), |i, j| i64::from(self.has_edge(i, j)))
    }

    pub fn laplacian_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.order(), |i, j| {
            if i == j {
                self.degree(i) as i64
            } else {
                -i64::from(self.has_edge(i, j))
            }
        })
    }

    /// Indices of vertices whose label lies in one of `strata`.
    pub fn stratum_vertices(&self, strata: &[Stratum]) -> Result<Vec<usize>> {
        let id = self.group.ok_or(GraphError::Unlabeled)?;
        Ok((0..self.order())
            .filter(|&v| strata.contains(&id.stratum_of(self.labels[v])))
            .collect())
    }

    /// Subgraph induced by the union of `strata`, keeping vertex order.
    pub fn stratum_subgraph(&self, strata: &[Stratum]) -> Result<Graph> {
        Ok(self.induced(&self.stratum_vertices(strata)?))
    }
}

/// `Γ(G)`: vertices are the group elements, `g ~ h` iff `<g, h> = G`.
pub fn build_generating_graph(id: GroupId) -> Graph {
    let labels: Vec<GroupElement> = id.strata().into_iter().flat_map(|(_, m)| m).collect();
    let mut g = Graph::with_labels(id, labels.clone());
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate().skip(i + 1) {
            if group::generates_unchecked(id, a, b) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Expected degree of every vertex in a stratum of `Γ(G)`.
pub fn expected_degree(id: GroupId, stratum: Stratum) -> usize {
    let n = id.n();
    let phi = numtheory::euler_phi(n as u64).expect("n >= 2") as usize;
    match stratum {
        Stratum::R1 => 2 * n,
        Stratum::Omega => 4 * phi,
        Stratum::Omega1 => n,
        Stratum::Omega2 => 2 * phi,
        Stratum::R2 | Stratum::Omega3 => 0,
    }
}

/// The common degree of each stratum, checked against the closed form.
pub fn degree_profile(g: &Graph) -> Result<BTreeMap<Stratum, usize>> {
    let id = g.group.ok_or(GraphError::Unlabeled)?;
    let mut profile = BTreeMap::new();
    for v in 0..g.order() {
        let stratum = id.stratum_of(g.labels[v]);
        let expected = expected_degree(id, stratum);
        let degree = g.degree(v);
        if degree != expected {
            return Err(GraphError::UnexpectedDegree {
                vertex: v,
                stratum,
                degree,
                expected,
            });
        }
        profile.insert(stratum, degree);
    }
    Ok(profile)
}

/// `Δ(G)`: the graph with its isolated vertices removed.
pub fn delta(g: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    g.induced(&keep)
}

/// All-pairs shortest path lengths. Requires a connected graph.
pub fn distance_matrix(g: &Graph) -> Result<IntMatrix> {
    let n = g.order();
    let mut m = IntMatrix::zeros(n);
    for u in 0..n {
        for (v, d) in g.bfs(u).into_iter().enumerate() {
            let d = d.ok_or(GraphError::Disconnected(u, v))?;
            m.set(u, v, d as i64);
        }
    }
    Ok(m)
}

pub fn eccentricities(distances: &IntMatrix) -> Vec<i64> {
    distances
        .rows()
        .map(|r| r.iter().copied().max().unwrap_or(0))
        .collect()
}

pub fn diameter(g: &Graph) -> Result<i64> {
    Ok(eccentricities(&distance_matrix(g)?)
        .into_iter()
        .max()
        .unwrap_or(0))
}

/// Keeps `d(u, v)` where it equals `min(e(u), e(v))`, zero elsewhere.
pub fn eccentricity_matrix(g: &Graph) -> Result<IntMatrix> {
    let dist = distance_matrix(g)?;
    let ecc = eccentricities(&dist);
    Ok(IntMatrix::from_fn(g.order(), |u, v| {
        let d = dist.get(u, v);
        if u != v && d == ecc[u].min(ecc[v]) {
            d
        } else {
            0
        }
    }))
}
