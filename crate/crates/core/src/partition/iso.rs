//! Isomorphism of small graphs: colour refinement, then backtracking over
//! colour-preserving maps.

use std::collections::BTreeMap;

use super::{PartitionError, Result};
use crate::graph::Graph;

pub const ISO_MAX_ORDER: usize = 64;

const BUDGET: u64 = 50_000_000;

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    let n = g1.order();
    for g in [g1, g2] {
        if g.order() > ISO_MAX_ORDER {
            return Err(PartitionError::TooLarge {
                order: g.order(),
                max: ISO_MAX_ORDER,
            });
        }
    }
    if n != g2.order() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let (c1, c2) = refine(g1, g2);
    let histogram = |c: &[usize]| {
        c.iter().fold(BTreeMap::new(), |mut h, &k| {
            *h.entry(k).or_insert(0usize) += 1;
            h
        })
    };
    if histogram(&c1) != histogram(&c2) {
        return Ok(false);
    }
    // place vertices of rare colours first
    let sizes = histogram(&c1);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (sizes[&c1[v]], c1[v], v));
    let mut search = Search {
        g1,
        g2,
        c1: &c1,
        c2: &c2,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        steps: 0,
    };
    search.extend(0)
}

/// Stable colouring of the disjoint union, returned per graph.
fn refine(g1: &Graph, g2: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g1.order();
    let neighbors = |v: usize| -> Vec<usize> {
        if v < n {
            g1.neighbors(v).collect()
        } else {
            g2.neighbors(v - n).map(|u| u + n).collect()
        }
    };
    let adj: Vec<Vec<usize>> = (0..2 * n).map(neighbors).collect();
    let mut colour: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut classes = count_distinct(&colour);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..2 * n)
            .map(|v| {
                let mut s: Vec<usize> = adj[v].iter().map(|&u| colour[u]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut ids = BTreeMap::new();
        for s in &signatures {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        colour = signatures.iter().map(|s| ids[s]).collect();
        let next_classes = ids.len();
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let c2 = colour.split_off(n);
    (colour, c2)
}

fn count_distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    c1: &'a [usize],
    c2: &'a [usize],
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    steps: u64,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        for w in 0..self.g2.order() {
            if self.used[w] || self.c2[w] != self.c1[v] {
                continue;
            }
            self.steps += 1;
            if self.steps > BUDGET {
                return Err(PartitionError::BudgetExhausted(BUDGET));
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&u| self.g1.has_edge(u, v) == self.g2.has_edge(self.map[u], w));
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.used[w] = false;
        }
        self.map[v] = usize::MAX;
        Ok(false)
    }
}
