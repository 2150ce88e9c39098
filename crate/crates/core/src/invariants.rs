//! Exact combinatorial invariants of small graphs: clique, chromatic and
//! independence numbers, domination, girth, Euler and Hamilton properties,
//! pancyclicity and certificate-based planarity.
//!
//! Vertex sets are `u128` masks, so every search here is limited to
//! [`MAX_ORDER`] vertices.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::group::{Family, GroupElement, GroupId};
use crate::numtheory::smallest_prime_factor;

pub const MAX_ORDER: usize = 128;
pub const PANCYCLIC_MAX_ORDER: usize = 20;
pub const HAMILTON_MAX_ORDER: usize = 64;
const BUDGET: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("{what} is limited to {max} vertices, got {order}")]
    TooLarge {
        what: &'static str,
        order: usize,
        max: usize,
    },
    #[error("{0} search exceeded its step budget")]
    BudgetExhausted(&'static str),
    #[error("no planarity certificate found")]
    Inconclusive,
    #[error("planarity verdicts are only provided for dicyclic groups")]
    NotDicyclic,
}

pub type Result<T> = std::result::Result<T, InvariantError>;

type Mask = u128;

fn masks(g: &Graph, what: &'static str, max: usize) -> Result<Vec<Mask>> {
    if g.order() > max {
        return Err(InvariantError::TooLarge {
            what,
            order: g.order(),
            max,
        });
    }
    Ok((0..g.order())
        .map(|v| g.neighbors(v).fold(0, |m, u| m | 1 << u))
        .collect())
}

fn full(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

fn members(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// A maximum clique, by Bron–Kerbosch with pivoting and a size bound.
pub fn max_clique(g: &Graph) -> Result<Vec<usize>> {
    let adj = masks(g, "clique search", MAX_ORDER)?;
    let mut best = 0;
    let mut best_set = 0;
    expand_clique(&adj, 0, full(g.order()), 0, &mut best, &mut best_set);
    Ok(members(best_set).collect())
}

fn expand_clique(
    adj: &[Mask],
    r: Mask,
    mut p: Mask,
    mut x: Mask,
    best: &mut u32,
    best_set: &mut Mask,
) {
    if p == 0 {
        if x == 0 && r.count_ones() > *best {
            *best = r.count_ones();
            *best_set = r;
        }
        return;
    }
    if r.count_ones() + p.count_ones() <= *best {
        return;
    }
    let pivot = members(p | x)
        .max_by_key(|&u| (p & adj[u]).count_ones())
        .expect("p is nonempty");
    for v in members(p & !adj[pivot]) {
        expand_clique(adj, r | 1 << v, p & adj[v], x & adj[v], best, best_set);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    Ok(max_clique(g)?.len())
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    clique_number(&g.complement())
}

/// Smallest `k` admitting a proper colouring, searched upward from the
/// clique number with DSatur-ordered backtracking.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    let adj = masks(g, "colouring", MAX_ORDER)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let mut steps = 0u64;
    for k in clique_number(g)?.max(1)..=n {
        let mut colour = vec![usize::MAX; n];
        if colourable(&adj, k, &mut colour, 0, &mut steps)? {
            return Ok(k);
        }
    }
    unreachable!("n colours always suffice")
}

fn colourable(
    adj: &[Mask],
    k: usize,
    colour: &mut [usize],
    done: usize,
    steps: &mut u64,
) -> Result<bool> {
    let n = adj.len();
    if done == n {
        return Ok(true);
    }
    // DSatur: most distinct neighbour colours, then highest degree
    let used_around = |v: usize| {
        members(adj[v]).fold(0u128, |m, u| {
            if colour[u] == usize::MAX {
                m
            } else {
                m | 1 << colour[u]
            }
        })
    };
    let v = (0..n)
        .filter(|&v| colour[v] == usize::MAX)
        .max_by_key(|&v| (used_around(v).count_ones(), adj[v].count_ones()))
        .expect("some vertex is uncoloured");
    let forbidden = used_around(v);
    // colours beyond the largest in use are interchangeable
    let fresh = colour
        .iter()
        .filter(|&&c| c != usize::MAX)
        .max()
        .map_or(0, |&c| c + 1);
    for c in 0..k.min(fresh + 1) {
        if forbidden >> c & 1 == 1 {
            continue;
        }
        *steps += 1;
        if *steps > BUDGET {
            return Err(InvariantError::BudgetExhausted("colouring"));
        }
        colour[v] = c;
        if colourable(adj, k, colour, done + 1, steps)? {
            return Ok(true);
        }
    }
    colour[v] = usize::MAX;
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Domination {
    pub gamma: usize,
    pub gamma_t: usize,
    pub dominating_set: Vec<usize>,
    pub total_dominating_set: Option<Vec<usize>>,
}

/// Domination and total domination numbers by search over subsets of
/// increasing size. `gamma_t` is absent when some vertex is isolated.
pub fn domination_numbers(g: &Graph) -> Result<Domination> {
    let adj = masks(g, "domination search", MAX_ORDER)?;
    let n = g.order();
    let all = full(n);
    let closed: Vec<Mask> = (0..n).map(|v| adj[v] | 1 << v).collect();
    let dominating_set = smallest_cover(&closed, all)?.expect("the whole vertex set dominates");
    let total = if adj.contains(&0) {
        None
    } else {
        smallest_cover(&adj, all)?
    };
    Ok(Domination {
        gamma: dominating_set.len(),
        gamma_t: total.as_ref().map_or(0, Vec::len),
        dominating_set,
        total_dominating_set: total,
    })
}

fn smallest_cover(sets: &[Mask], target: Mask) -> Result<Option<Vec<usize>>> {
    let mut steps = 0u64;
    for k in 0..=sets.len() {
        let mut chosen = Vec::with_capacity(k);
        if cover_search(sets, target, k, 0, 0, &mut chosen, &mut steps)? {
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

fn cover_search(
    sets: &[Mask],
    target: Mask,
    k: usize,
    start: usize,
    covered: Mask,
    chosen: &mut Vec<usize>,
    steps: &mut u64,
) -> Result<bool> {
    if covered & target == target {
        return Ok(true);
    }
    if chosen.len() == k {
        return Ok(false);
    }
    let missing = (target & !covered).count_ones();
    let largest = sets[start..]
        .iter()
        .map(|m| m.count_ones())
        .max()
        .unwrap_or(0);
    if largest * ((k - chosen.len()) as u32) < missing {
        return Ok(false);
    }
    for v in start..sets.len() {
        *steps += 1;
        if *steps > BUDGET {
            return Err(InvariantError::BudgetExhausted("domination"));
        }
        chosen.push(v);
        if cover_search(sets, target, k, v + 1, covered | sets[v], chosen, steps)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Connected with every degree even.
pub fn is_eulerian(g: &Graph) -> bool {
    g.order() > 0 && g.is_connected() && g.degrees().iter().all(|d| d % 2 == 0)
}

/// A Hamiltonian cycle (`closed`) or path, as a vertex sequence.
pub fn hamiltonian(g: &Graph, closed: bool) -> Result<Option<Vec<usize>>> {
    let adj = masks(g, "Hamiltonian search", HAMILTON_MAX_ORDER)?;
    let n = g.order();
    if n == 0 {
        return Ok(None);
    }
    if closed && n < 3 {
        return Ok(None);
    }
    let mut steps = 0u64;
    let starts: Vec<usize> = if closed { vec![0] } else { (0..n).collect() };
    for s in starts {
        let mut path = vec![s];
        if extend_path(&adj, closed, 1 << s, &mut path, &mut steps)? {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

fn extend_path(
    adj: &[Mask],
    closed: bool,
    visited: Mask,
    path: &mut Vec<usize>,
    steps: &mut u64,
) -> Result<bool> {
    let n = adj.len();
    let last = *path.last().expect("path starts nonempty");
    if path.len() == n {
        return Ok(!closed || adj[last] >> path[0] & 1 == 1);
    }
    let unvisited = full(n) & !visited;
    // an unvisited vertex with too few free neighbours makes the branch dead
    let ends = (1 << last) | if closed { 1 << path[0] } else { 0 };
    let dead = members(unvisited).any(|u| {
        let free = (adj[u] & (unvisited | ends)).count_ones();
        free == 0 || (closed && free < 2 && path.len() + 1 < n)
    });
    if dead {
        return Ok(false);
    }
    let mut next: Vec<usize> = members(adj[last] & unvisited).collect();
    next.sort_by_key(|&v| (adj[v] & unvisited).count_ones());
    for v in next {
        *steps += 1;
        if *steps > BUDGET {
            return Err(InvariantError::BudgetExhausted("Hamiltonian"));
        }
        path.push(v);
        if extend_path(adj, closed, visited | 1 << v, path, steps)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

/// Whether cycles of every length from 3 to the order exist.
///
/// Dynamic programming over vertex subsets: `ends[S]` holds the vertices at
/// which a path starting at the smallest vertex of `S` and covering `S` can
/// end.
pub fn pancyclic_check(g: &Graph) -> Result<bool> {
    let adj = masks(g, "pancyclicity search", PANCYCLIC_MAX_ORDER)?;
    let n = g.order();
    if n < 3 {
        return Ok(false);
    }
    let adj: Vec<u32> = adj.iter().map(|&m| m as u32).collect();
    let mut ends = vec![0u32; 1 << n];
    let mut found = vec![false; n + 1];
    for s in 0..n {
        ends[1 << s] = 1 << s;
    }
    for set in 1usize..1 << n {
        let e = ends[set];
        if e == 0 {
            continue;
        }
        let s = set.trailing_zeros() as usize;
        let len = set.count_ones() as usize;
        let above = !((1u32 << s) - 1) & !(set as u32);
        let mut rest = e;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if len >= 3 && adj[v] >> s & 1 == 1 {
                found[len] = true;
            }
            let mut next = adj[v] & above;
            while next != 0 {
                let u = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[set | 1 << u] |= 1 << u;
            }
        }
    }
    Ok((3..=n).all(|l| found[l]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Planarity {
    /// Face boundaries of a 2-cell embedding in the sphere.
    Planar { faces: Vec<Vec<usize>> },
    /// A `K_{3,3}` subgraph: every left vertex is adjacent to every right one.
    NonPlanar { left: [usize; 3], right: [usize; 3] },
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar { .. })
    }
}

/// Planarity of `Δ(Q_n)` by certificate: an explicit octahedral embedding
/// for `n = 2`, otherwise a `K_{3,3}` subgraph.
pub fn planarity_verdict(g: &Graph, id: GroupId) -> Result<Planarity> {
    if id.family() != Family::Dicyclic {
        return Err(InvariantError::NotDicyclic);
    }
    if id.n() == 2 {
        use GroupElement::{Mixed, Power};
        let rim = [Mixed(0), Mixed(1), Mixed(2), Mixed(3)];
        let mut faces = Vec::new();
        for apex in [Power(1), Power(3)] {
            for i in 0..4 {
                let face = [apex, rim[i], rim[(i + 1) % 4]];
                match face
                    .iter()
                    .map(|&e| g.index_of(e))
                    .collect::<Option<Vec<_>>>()
                {
                    Some(f) => faces.push(f),
                    None => return Err(InvariantError::Inconclusive),
                }
            }
        }
        return if verify_embedding(g, &faces) {
            Ok(Planarity::Planar { faces })
        } else {
            Err(InvariantError::Inconclusive)
        };
    }
    find_k33(g)?.ok_or(InvariantError::Inconclusive)
}

/// Searches for three vertices with three common neighbours.
pub fn find_k33(g: &Graph) -> Result<Option<Planarity>> {
    let adj = masks(g, "K33 search", MAX_ORDER)?;
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            let ab = adj[a] & adj[b];
            if ab.count_ones() < 3 {
                continue;
            }
            for c in b + 1..n {
                let common = ab & adj[c] & !(1 << a | 1 << b | 1 << c);
                let right: Vec<usize> = members(common).take(3).collect();
                if let [r0, r1, r2] = right[..] {
                    return Ok(Some(Planarity::NonPlanar {
                        left: [a, b, c],
                        right: [r0, r1, r2],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Checks a face list: every face is a closed walk on graph edges, every
/// edge borders exactly two faces, the faces around each vertex form one
/// cycle, and `V - E + F = 2`.
pub fn verify_embedding(g: &Graph, faces: &[Vec<usize>]) -> bool {
    let n = g.order();
    let mut edge_uses = std::collections::BTreeMap::new();
    for f in faces {
        if f.len() < 3 {
            return false;
        }
        for i in 0..f.len() {
            let (u, v) = (f[i], f[(i + 1) % f.len()]);
            if u >= n || v >= n || !g.has_edge(u, v) {
                return false;
            }
            *edge_uses.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
    }
    if edge_uses.len() != g.edge_count() || edge_uses.values().any(|&c| c != 2) {
        return false;
    }
    // rotation at each vertex: faces through v linked by shared edges
    for v in 0..n {
        let corners: Vec<(usize, usize)> = faces
            .iter()
            .filter_map(|f| {
                let i = f.iter().position(|&u| u == v)?;
                Some((f[(i + f.len() - 1) % f.len()], f[(i + 1) % f.len()]))
            })
            .collect();
        if corners.len() != g.degree(v) {
            return false;
        }
        let mut seen = vec![false; corners.len()];
        let mut at = 0;
        let mut exit = corners[0].1;
        for _ in 0..corners.len() {
            if std::mem::replace(&mut seen[at], true) {
                return false;
            }
            let next = (0..corners.len())
                .find(|&j| j != at && (corners[j].0 == exit || corners[j].1 == exit));
            match next {
                Some(j) => {
                    exit = if corners[j].0 == exit {
                        corners[j].1
                    } else {
                        corners[j].0
                    };
                    at = j;
                }
                None => return false,
            }
        }
        if at != 0 || seen.iter().any(|s| !s) {
            return false;
        }
    }
    n as i64 - g.edge_count() as i64 + faces.len() as i64 == 2
}

/// The invariant report for `Δ(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Props {
    pub family: Family,
    pub n: usize,
    pub order: usize,
    pub omega: usize,
    pub chi: usize,
    pub alpha: usize,
    pub gamma: usize,
    pub gamma_t: usize,
    pub girth: Option<usize>,
    pub eulerian: bool,
    pub hamiltonian_cycle: Option<bool>,
    pub hamiltonian_path: Option<bool>,
    pub pancyclic: Option<bool>,
    pub planar: Option<bool>,
    /// `p + 1` with `p` the smallest prime factor of `n`.
    pub expected_omega: usize,
    /// `2n/p` for `Q_n`, `n/p` for `D_n`.
    pub expected_alpha: usize,
}

/// Computes every invariant of `Δ(G)`. Searches beyond their size limits
/// are reported as `None`.
pub fn props(id: GroupId) -> Result<Props> {
    let g = crate::graph::delta(&crate::graph::build_generating_graph(id));
    let n = id.n();
    let p = smallest_prime_factor(n as u64)
        .expect("n >= 2")
        .expect("n >= 2") as usize;
    let within = |limit: usize| g.order() <= limit;
    let dom = domination_numbers(&g)?;
    let planar = match id.family() {
        Family::Dicyclic => Some(planarity_verdict(&g, id)?.is_planar()),
        Family::Dihedral => None,
    };
    Ok(Props {
        family: id.family(),
        n,
        order: g.order(),
        omega: clique_number(&g)?,
        chi: chromatic_number(&g)?,
        alpha: independence_number(&g)?,
        gamma: dom.gamma,
        gamma_t: dom.gamma_t,
        girth: girth(&g),
        eulerian: is_eulerian(&g),
        hamiltonian_cycle: within(HAMILTON_MAX_ORDER)
            .then(|| hamiltonian(&g, true).map(|c| c.is_some()))
            .transpose()?,
        hamiltonian_path: within(HAMILTON_MAX_ORDER)
            .then(|| hamiltonian(&g, false).map(|c| c.is_some()))
            .transpose()?,
        pancyclic: within(PANCYCLIC_MAX_ORDER)
            .then(|| pancyclic_check(&g))
            .transpose()?,
        planar,
        expected_omega: p + 1,
        expected_alpha: match id.family() {
            Family::Dicyclic => 2 * n / p,
            Family::Dihedral => n / p,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_generating_graph, delta};

    fn delta_q(n: usize) -> Graph {
        delta(&build_generating_graph(GroupId::dicyclic(n).unwrap()))
    }

    #[test]
    fn pancyclic_fixtures() {
        // Petersen graph: girth 5, no 7-cycle
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        assert!(!pancyclic_check(&Graph::from_edges(10, &edges)).unwrap());
        // wheel: hub 0 joined to a 9-cycle
        let mut wheel: Vec<_> = (1..10).map(|i| (0, i)).collect();
        wheel.extend((1..10).map(|i| (i, i % 9 + 1)));
        assert!(pancyclic_check(&Graph::from_edges(10, &wheel)).unwrap());
        assert!(!pancyclic_check(&Graph::complete(2)).unwrap());
        assert!(pancyclic_check(&delta_q(6)).unwrap());
    }

    #[test]
    fn small_fixtures() {
        let k3 = Graph::complete(3);
        assert_eq!(clique_number(&k3).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(4)).unwrap(), 1);
        assert_eq!(independence_number(&Graph::path(2)).unwrap(), 1);
        let d = domination_numbers(&k3).unwrap();
        assert_eq!((d.gamma, d.gamma_t), (1, 2));
        assert_eq!(girth(&Graph::cycle(4)), Some(4));
        assert_eq!(girth(&Graph::path(5)), None);
        assert!(!is_eulerian(&Graph::path(3)));
        assert!(hamiltonian(&Graph::path(3), true).unwrap().is_none());
        assert!(hamiltonian(&Graph::path(3), false).unwrap().is_some());
        assert!(!pancyclic_check(&Graph::cycle(4)).unwrap());
        assert!(pancyclic_check(&Graph::complete(5)).unwrap());
    }

    #[test]
    fn odd_cycle_needs_three_colours() {
        assert_eq!(chromatic_number(&Graph::cycle(7)).unwrap(), 3);
        assert_eq!(clique_number(&Graph::cycle(7)).unwrap(), 2);
        // Petersen graph
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let petersen = Graph::from_edges(10, &edges);
        assert_eq!(chromatic_number(&petersen).unwrap(), 3);
        assert_eq!(independence_number(&petersen).unwrap(), 4);
        assert_eq!(girth(&petersen), Some(5));
        assert!(hamiltonian(&petersen, true).unwrap().is_none());
        assert!(hamiltonian(&petersen, false).unwrap().is_some());
    }

    #[test]
    fn delta_q6() {
        let g = delta_q(6);
        assert_eq!(clique_number(&g).unwrap(), 3);
        assert_eq!(chromatic_number(&g).unwrap(), 3);
        assert_eq!(independence_number(&g).unwrap(), 6);
        let d = domination_numbers(&g).unwrap();
        assert_eq!((d.gamma, d.gamma_t), (2, 2));
        let names: Vec<String> = d
            .total_dominating_set
            .unwrap()
            .iter()
            .map(|&v| g.vertex_name(v))
            .collect();
        assert_eq!(names.len(), 2);
        assert!(is_eulerian(&g));
        let cycle = hamiltonian(&g, true).unwrap().unwrap();
        assert_eq!(cycle.len(), g.order());
        assert!((0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()])));
    }

    #[test]
    fn independence_exceeds_2n_over_p_when_units_dominate() {
        // R1 is an independent set of size 2φ(n)
        assert_eq!(independence_number(&delta_q(9)).unwrap(), 12);
        assert_eq!(independence_number(&delta_q(3)).unwrap(), 4);
    }

    #[test]
    fn pancyclic_small() {
        assert!(pancyclic_check(&delta_q(2)).unwrap());
        assert!(pancyclic_check(&delta_q(3)).unwrap());
    }

    #[test]
    fn planarity() {
        let q2 = GroupId::dicyclic(2).unwrap();
        let v = planarity_verdict(&delta_q(2), q2).unwrap();
        let Planarity::Planar { faces } = &v else {
            panic!("Q_2 is planar")
        };
        assert_eq!(faces.len(), 8);
        for n in [3, 6] {
            let g = delta_q(n);
            let Planarity::NonPlanar { left, right } =
                planarity_verdict(&g, GroupId::dicyclic(n).unwrap()).unwrap()
            else {
                panic!("Q_{n} is not planar")
            };
            assert!(left
                .iter()
                .all(|&a| right.iter().all(|&b| g.has_edge(a, b))));
        }
        assert!(find_k33(&Graph::complete(5)).unwrap().is_none());
    }

    #[test]
    fn embedding_checks_reject_bad_faces() {
        let g = delta_q(2);
        let Planarity::Planar { mut faces } =
            planarity_verdict(&g, GroupId::dicyclic(2).unwrap()).unwrap()
        else {
            unreachable!()
        };
        assert!(verify_embedding(&g, &faces));
        faces.pop();
        assert!(!verify_embedding(&g, &faces));
        // tetrahedron embedded as its four triangles
        let k4 = Graph::complete(4);
        assert!(verify_embedding(
            &k4,
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        ));
    }

    #[test]
    fn capacity() {
        assert!(matches!(
            pancyclic_check(&Graph::empty(PANCYCLIC_MAX_ORDER + 1)),
            Err(InvariantError::TooLarge { .. })
        ));
    }
}
