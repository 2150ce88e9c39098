//! Element arithmetic for the dihedral groups `D_n = <r, s | r^n = s^2 = 1, srs = r^-1>`
//! and the dicyclic groups `Q_n = <x, y | x^2n = 1, x^n = y^2, y^-1 x y = x^-1>`.
//!
//! Elements are kept in normal form. In `Q_n` a mixed element `x^b y` is stored
//! with `b` reduced mod `2n`; in `D_n` the reflection `s r^b` with `b` mod `n`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numtheory;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group parameter n must be at least 2, got {0}")]
    InvalidN(usize),
    #[error("element {element:?} does not belong to {id}")]
    ForeignElement { element: GroupElement, id: GroupId },
    #[error("a generating pair needs two distinct elements, got {0:?} twice")]
    RepeatedElement(GroupElement),
    #[error("operation is only defined for dicyclic groups, got {0}")]
    NotDicyclic(GroupId),
    #[error("unknown group family {0:?}; expected D or Q")]
    UnknownFamily(String),
    #[error("cannot parse element {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("brute-force subgroup enumeration is limited to n <= {max}, got {n}")]
    TooLarge { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, GroupError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Dihedral,
    Dicyclic,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::Dihedral => 'D',
            Family::Dicyclic => 'Q',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" | "d" | "dihedral" => Ok(Family::Dihedral),
            "Q" | "q" | "dicyclic" => Ok(Family::Dicyclic),
            _ => Err(GroupError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupId {
    family: Family,
    n: usize,
}

impl GroupId {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(GroupError::InvalidN(n));
        }
        Ok(Self { family, n })
    }

    pub fn dihedral(n: usize) -> Result<Self> {
        Self::new(Family::Dihedral, n)
    }

    pub fn dicyclic(n: usize) -> Result<Self> {
        Self::new(Family::Dicyclic, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Modulus of the exponent of both element kinds.
    pub fn modulus(&self) -> usize {
        match self.family {
            Family::Dihedral => self.n,
            Family::Dicyclic => 2 * self.n,
        }
    }

    pub fn order(&self) -> usize {
        2 * self.modulus()
    }

    pub fn contains(&self, g: GroupElement) -> bool {
        g.exponent() < self.modulus()
    }

    /// All elements: powers by exponent, then mixed elements by exponent.
    pub fn elements(&self) -> Vec<GroupElement> {
        let m = self.modulus();
        (0..m)
            .map(GroupElement::Power)
            .chain((0..m).map(GroupElement::Mixed))
            .collect()
    }

    fn check(&self, g: GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(GroupError::ForeignElement {
                element: g,
                id: *self,
            })
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::Power(0)
    }

    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    fn mul_unchecked(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        use GroupElement::*;
        let m = self.modulus();
        let sub = |a: usize, b: usize| (a + m - b) % m;
        match self.family {
            // (x^a y)(x^b y) = x^a (y x^b y^-1) y^2 = x^(a - b + n)
            Family::Dicyclic => match (g, h) {
                (Power(a), Power(b)) => Power((a + b) % m),
                (Power(a), Mixed(b)) => Mixed((a + b) % m),
                (Mixed(a), Power(b)) => Mixed(sub(a, b)),
                (Mixed(a), Mixed(b)) => Power((sub(a, b) + self.n) % m),
            },
            // Mixed(b) is s r^b, and r^a s = s r^-a.
            Family::Dihedral => match (g, h) {
                (Power(a), Power(b)) => Power((a + b) % m),
                (Power(a), Mixed(b)) => Mixed(sub(b, a)),
                (Mixed(a), Power(b)) => Mixed((a + b) % m),
                (Mixed(a), Mixed(b)) => Power(sub(b, a)),
            },
        }
    }

    pub fn stratum_of(&self, g: GroupElement) -> Stratum {
        let n = self.n;
        match (self.family, g) {
            (Family::Dicyclic, GroupElement::Mixed(_)) => Stratum::Omega,
            (Family::Dicyclic, GroupElement::Power(a)) if a.gcd(&n) == 1 => Stratum::R1,
            (Family::Dicyclic, GroupElement::Power(_)) => Stratum::R2,
            (Family::Dihedral, GroupElement::Mixed(_)) => Stratum::Omega2,
            (Family::Dihedral, GroupElement::Power(a)) if a.gcd(&n) == 1 => Stratum::Omega1,
            (Family::Dihedral, GroupElement::Power(_)) => Stratum::Omega3,
        }
    }

    /// The three strata in vertex order: `Ω, R_1, R_2` for `Q_n` and
    /// `Ω_2, Ω_1, Ω_3` for `D_n`, each listed by increasing exponent.
    pub fn strata(&self) -> Vec<(Stratum, Vec<GroupElement>)> {
        let order = match self.family {
            Family::Dicyclic => [Stratum::Omega, Stratum::R1, Stratum::R2],
            Family::Dihedral => [Stratum::Omega2, Stratum::Omega1, Stratum::Omega3],
        };
        let elements = self.elements();
        order
            .into_iter()
            .map(|s| {
                let members = elements
                    .iter()
                    .copied()
                    .filter(|&g| self.stratum_of(g) == s)
                    .collect();
                (s, members)
            })
            .collect()
    }

    /// Text form of an element: `1`, `x^3`, `x^3*y`, `y` for `Q_n`;
    /// `1`, `r^2`, `s*r^2`, `s` for `D_n`. A zero exponent is elided.
    pub fn format(&self, g: GroupElement) -> String {
        let (rot, refl) = match self.family {
            Family::Dicyclic => ("x", "y"),
            Family::Dihedral => ("r", "s"),
        };
        let power = |a: usize| match a {
            0 => None,
            1 => Some(rot.to_string()),
            _ => Some(format!("{rot}^{a}")),
        };
        match (self.family, g) {
            (_, GroupElement::Power(a)) => power(a).unwrap_or_else(|| "1".to_string()),
            (Family::Dicyclic, GroupElement::Mixed(b)) => match power(b) {
                Some(p) => format!("{p}*{refl}"),
                None => refl.to_string(),
            },
            (Family::Dihedral, GroupElement::Mixed(b)) => match power(b) {
                Some(p) => format!("{refl}*{p}"),
                None => refl.to_string(),
            },
        }
    }

    pub fn parse(&self, text: &str) -> Result<GroupElement> {
        let err = |reason: &str| GroupError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let (rot, refl) = match self.family {
            Family::Dicyclic => ('x', 'y'),
            Family::Dihedral => ('r', 's'),
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "1" || s == "e" {
            return Ok(self.identity());
        }
        let parse_power = |p: &str| -> Result<usize> {
            let mut chars = p.chars();
            if chars.next() != Some(rot) {
                return Err(err("expected rotation generator"));
            }
            let rest = chars.as_str();
            if rest.is_empty() {
                return Ok(1);
            }
            rest.strip_prefix('^')
                .ok_or_else(|| err("expected '^' after generator"))?
                .parse::<usize>()
                .map_err(|_| err("bad exponent"))
        };
        let reduce = |a: usize| a % self.modulus();
        let refl_str = refl.to_string();
        let g = match self.family {
            Family::Dicyclic => {
                if s == refl_str {
                    GroupElement::Mixed(0)
                } else if let Some(p) = s.strip_suffix(&format!("*{refl}")) {
                    GroupElement::Mixed(reduce(parse_power(p)?))
                } else {
                    GroupElement::Power(reduce(parse_power(&s)?))
                }
            }
            Family::Dihedral => {
                if s == refl_str {
                    GroupElement::Mixed(0)
                } else if let Some(p) = s.strip_prefix(&format!("{refl}*")) {
                    GroupElement::Mixed(reduce(parse_power(p)?))
                } else {
                    GroupElement::Power(reduce(parse_power(&s)?))
                }
            }
        };
        Ok(g)
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

/// `Power(a)` is `x^a` (or `r^a`); `Mixed(b)` is `x^b y` (or `s r^b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupElement {
    Power(usize),
    Mixed(usize),
}

impl GroupElement {
    pub fn exponent(self) -> usize {
        match self {
            GroupElement::Power(a) | GroupElement::Mixed(a) => a,
        }
    }

    pub fn is_power(self) -> bool {
        matches!(self, GroupElement::Power(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stratum {
    /// `x^a` with `gcd(a, n) = 1`.
    R1,
    /// Remaining powers of `x`.
    R2,
    /// All `x^b y`.
    Omega,
    /// `r^i` with `gcd(i, n) = 1`.
    Omega1,
    /// All reflections `s r^i`.
    Omega2,
    /// Remaining rotations.
    Omega3,
}

impl Stratum {
    pub fn name(self) -> &'static str {
        match self {
            Stratum::R1 => "R1",
            Stratum::R2 => "R2",
            Stratum::Omega => "Omega",
            Stratum::Omega1 => "Omega1",
            Stratum::Omega2 => "Omega2",
            Stratum::Omega3 => "Omega3",
        }
    }
}

/// Closure of `{1, g, h}` under multiplication.
pub fn generated_subgroup(
    id: GroupId,
    g: GroupElement,
    h: GroupElement,
) -> Result<BTreeSet<GroupElement>> {
    id.check(g)?;
    id.check(h)?;
    Ok(closure(id, &[g, h]))
}

fn closure(id: GroupId, gens: &[GroupElement]) -> BTreeSet<GroupElement> {
    let mut seen = BTreeSet::from([id.identity()]);
    let mut queue = VecDeque::from([id.identity()]);
    while let Some(a) = queue.pop_front() {
        for &s in gens {
            let b = id.mul_unchecked(a, s);
            if seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    assert_eq!(
        id.order() % seen.len(),
        0,
        "subgroup order {} does not divide |{id}| = {}",
        seen.len(),
        id.order()
    );
    seen
}

/// Whether `{g, h}` generates the whole group, decided by the gcd rules:
/// a power with a mixed element generates iff the power's exponent is
/// coprime to `n`; two mixed elements generate iff their exponent
/// difference is coprime to `n`; two powers never generate.
pub fn generates_pair(id: GroupId, g: GroupElement, h: GroupElement) -> Result<bool> {
    id.check(g)?;
    id.check(h)?;
    if g == h {
        return Err(GroupError::RepeatedElement(g));
    }
    Ok(generates_unchecked(id, g, h))
}

pub(crate) fn generates_unchecked(id: GroupId, g: GroupElement, h: GroupElement) -> bool {
    use GroupElement::*;
    let n = id.n;
    match (g, h) {
        (Power(_), Power(_)) => false,
        (Power(a), Mixed(_)) | (Mixed(_), Power(a)) => a.gcd(&n) == 1,
        (Mixed(c), Mixed(d)) => c.abs_diff(d).gcd(&n) == 1,
    }
}

/// Number of ordered pairs `(g1, g2)`, `g1 != g2`, generating the group.
pub fn gen_count(id: GroupId) -> u64 {
    let els = id.elements();
    let mut count = 0u64;
    for &g in &els {
        for &h in &els {
            if g != h && generates_unchecked(id, g, h) {
                count += 1;
            }
        }
    }
    count
}

/// Probability that two distinct uniformly chosen elements generate the group.
pub fn generating_probability(id: GroupId) -> Ratio<u64> {
    let m = id.order() as u64;
    Ratio::new(gen_count(id), m * (m - 1))
}

/// `3 φ(n) / (4n - 1)`, the closed form for `Q_n`.
pub fn dicyclic_probability_closed_form(n: usize) -> Ratio<u64> {
    let phi = numtheory::euler_phi(n as u64).expect("n >= 1");
    Ratio::new(3 * phi, 4 * n as u64 - 1)
}

/// `Φ(Q_n) = <x^{rad(n)}>`.
pub fn frattini_subgroup(id: GroupId) -> Result<BTreeSet<GroupElement>> {
    if id.family != Family::Dicyclic {
        return Err(GroupError::NotDicyclic(id));
    }
    let rad = numtheory::radical(id.n as u64).expect("n >= 2") as usize;
    Ok(closure(id, &[GroupElement::Power(rad % id.modulus())]))
}

pub const FRATTINI_BRUTE_FORCE_MAX_N: usize = 12;

/// Intersection of all maximal subgroups, by enumerating every subgroup
/// generated by a pair of elements.
pub fn frattini_brute_force(id: GroupId) -> Result<BTreeSet<GroupElement>> {
    if id.n > FRATTINI_BRUTE_FORCE_MAX_N {
        return Err(GroupError::TooLarge {
            n: id.n,
            max: FRATTINI_BRUTE_FORCE_MAX_N,
        });
    }
    let els = id.elements();
    let mut subgroups: BTreeSet<BTreeSet<GroupElement>> = BTreeSet::new();
    for (i, &g) in els.iter().enumerate() {
        for &h in &els[i..] {
            let sub = closure(id, &[g, h]);
            if sub.len() < id.order() {
                subgroups.insert(sub);
            }
        }
    }
    let maximal: Vec<&BTreeSet<GroupElement>> = subgroups
        .iter()
        .filter(|s| {
            !subgroups
                .iter()
                .any(|t| t.len() > s.len() && s.is_subset(t))
        })
        .collect();
    let mut result: BTreeSet<GroupElement> = els.iter().copied().collect();
    for m in maximal {
        result = result.intersection(m).copied().collect();
    }
    Ok(result)
}

/// Elements that generate the group with no partner.
pub fn isolated_elements(id: GroupId) -> BTreeSet<GroupElement> {
    let els = id.elements();
    els.iter()
        .copied()
        .filter(|&g| !els.iter().any(|&h| h != g && generates_unchecked(id, g, h)))
        .collect()
}

/// Compares the isolated vertices of `Γ(Q_n)` with `Φ(Q_n)` as sets.
pub fn isolated_equals_frattini(n: usize) -> Result<bool> {
    let id = GroupId::dicyclic(n)?;
    Ok(isolated_elements(id) == frattini_subgroup(id)?)
}

/// The equivalence as printed: equality iff `n = p^k` with `k > 1`.
pub fn isolated_equals_frattini_as_printed(n: usize) -> bool {
    let f = numtheory::Factorization::of(n as u64).expect("n >= 1");
    f.is_prime_power() && f.primes()[0].1 > 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupElement::*;

    fn q(n: usize) -> GroupId {
        GroupId::dicyclic(n).unwrap()
    }
    fn d(n: usize) -> GroupId {
        GroupId::dihedral(n).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(q(3).multiply(Mixed(1), Mixed(1)), Ok(Power(3)));
        assert_eq!(q(3).multiply(Power(2), Power(5)), Ok(Power(1)));
        assert_eq!(d(4).multiply(Mixed(1), Mixed(1)), Ok(Power(0)));
    }

    #[test]
    fn multiply_rejects_foreign_elements() {
        assert!(matches!(
            d(4).multiply(Power(5), Power(1)),
            Err(GroupError::ForeignElement { .. })
        ));
    }

    #[test]
    fn defining_relations_hold() {
        for n in 2..=12 {
            let g = q(n);
            let x = Power(1);
            let y = Mixed(0);
            let pow = |e: GroupElement, k: usize| {
                (0..k).fold(g.identity(), |acc, _| g.multiply(acc, e).unwrap())
            };
            assert_eq!(pow(x, 2 * n), g.identity());
            assert_eq!(pow(y, 4), g.identity());
            assert_eq!(pow(x, n), pow(y, 2));
            let y_inv = pow(y, 3);
            let conj = g.multiply(g.multiply(y_inv, x).unwrap(), y).unwrap();
            assert_eq!(conj, pow(x, 2 * n - 1));

            let h = d(n);
            let r = Power(1);
            let s = Mixed(0);
            assert_eq!(
                (0..n).fold(h.identity(), |a, _| h.multiply(a, r).unwrap()),
                h.identity()
            );
            assert_eq!(h.multiply(s, s).unwrap(), h.identity());
            let srs = h.multiply(h.multiply(s, r).unwrap(), s).unwrap();
            assert_eq!(srs, Power(n - 1));
            // Mixed(b) really is s r^b
            for b in 0..n {
                let srb = (0..b).fold(s, |a, _| h.multiply(a, r).unwrap());
                assert_eq!(srb, Mixed(b));
            }
        }
    }

    #[test]
    fn mixed_normal_form_is_x_power_times_y() {
        let g = q(5);
        for b in 0..10 {
            let xb = (0..b).fold(g.identity(), |a, _| g.multiply(a, Power(1)).unwrap());
            assert_eq!(g.multiply(xb, Mixed(0)).unwrap(), Mixed(b));
        }
    }

    #[test]
    fn associativity_small_groups() {
        for id in [q(3), q(4), d(5), d(6)] {
            let els = id.elements();
            for &a in &els {
                for &b in &els {
                    for &c in &els {
                        let l = id.multiply(id.multiply(a, b).unwrap(), c).unwrap();
                        let r = id.multiply(a, id.multiply(b, c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn generated_subgroup_examples() {
        assert_eq!(
            generated_subgroup(q(3), Power(1), Mixed(0)).unwrap().len(),
            12
        );
        let sub = generated_subgroup(q(6), Power(2), Power(3)).unwrap();
        assert_eq!(sub.len(), 12);
        assert!(sub.iter().all(|g| g.is_power()));
        let sub = generated_subgroup(d(5), Power(1), Power(2)).unwrap();
        assert_eq!(sub, (0..5).map(Power).collect());
    }

    #[test]
    fn generates_pair_examples() {
        assert_eq!(generates_pair(q(6), Power(1), Mixed(0)), Ok(true));
        assert_eq!(generates_pair(q(6), Power(2), Mixed(0)), Ok(false));
        assert_eq!(generates_pair(q(6), Mixed(4), Mixed(3)), Ok(true));
        assert_eq!(
            generates_pair(q(6), Mixed(4), Mixed(4)),
            Err(GroupError::RepeatedElement(Mixed(4)))
        );
    }

    #[test]
    fn rules_agree_with_closure_oracle() {
        for n in 2..=12 {
            for id in [q(n), d(n)] {
                let els = id.elements();
                for &g in &els {
                    for &h in &els {
                        if g == h {
                            continue;
                        }
                        let rule = generates_pair(id, g, h).unwrap();
                        let oracle = generated_subgroup(id, g, h).unwrap().len() == id.order();
                        assert_eq!(rule, oracle, "{id}: {g:?} {h:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn gen_count_examples() {
        assert_eq!(gen_count(q(2)), 24);
        assert_eq!(gen_count(q(3)), 72);
        assert_eq!(gen_count(d(6)), 36);
        for n in 2..=60 {
            let phi = numtheory::euler_phi(n as u64).unwrap();
            assert_eq!(gen_count(q(n)), 12 * n as u64 * phi);
        }
    }

    #[test]
    fn probability_examples() {
        assert_eq!(generating_probability(q(5)), Ratio::new(12, 19));
        assert_eq!(generating_probability(q(6)), Ratio::new(6, 23));
        assert_eq!(generating_probability(q(2)), Ratio::new(3, 7));
        assert_eq!(dicyclic_probability_closed_form(2), Ratio::new(3, 7));
    }

    #[test]
    fn frattini_examples() {
        let pw = |v: &[usize]| v.iter().map(|&a| Power(a)).collect::<BTreeSet<_>>();
        assert_eq!(frattini_subgroup(q(4)).unwrap(), pw(&[0, 2, 4, 6]));
        assert_eq!(frattini_subgroup(q(6)).unwrap(), pw(&[0, 6]));
        assert_eq!(frattini_subgroup(q(5)).unwrap(), pw(&[0, 5]));
        assert!(frattini_subgroup(d(5)).is_err());
    }

    #[test]
    fn frattini_closed_form_matches_brute_force() {
        for n in 2..=FRATTINI_BRUTE_FORCE_MAX_N {
            assert_eq!(
                frattini_subgroup(q(n)).unwrap(),
                frattini_brute_force(q(n)).unwrap(),
                "n={n}"
            );
        }
        assert!(frattini_brute_force(q(13)).is_err());
    }

    #[test]
    fn isolated_vs_frattini() {
        assert_eq!(isolated_equals_frattini(4), Ok(true));
        assert_eq!(isolated_equals_frattini(6), Ok(false));
        assert_eq!(isolated_equals_frattini(5), Ok(true));
        for n in 2..=60 {
            let f = numtheory::Factorization::of(n as u64).unwrap();
            assert_eq!(
                isolated_equals_frattini(n).unwrap(),
                f.is_prime_power(),
                "n={n}"
            );
        }
        // the printed condition excludes primes
        assert!(!isolated_equals_frattini_as_printed(5));
        assert!(isolated_equals_frattini_as_printed(9));
    }

    #[test]
    fn strata_sizes() {
        for n in 2..=200 {
            let phi = numtheory::euler_phi(n as u64).unwrap() as usize;
            let sizes: Vec<usize> = q(n).strata().iter().map(|(_, m)| m.len()).collect();
            assert_eq!(sizes, vec![2 * n, 2 * phi, 2 * (n - phi)]);
            let sizes: Vec<usize> = d(n).strata().iter().map(|(_, m)| m.len()).collect();
            assert_eq!(sizes, vec![n, phi, n - phi]);
        }
    }

    #[test]
    fn text_format_round_trips() {
        assert_eq!(q(3).format(Power(3)), "x^3");
        assert_eq!(q(3).format(Mixed(3)), "x^3*y");
        assert_eq!(q(3).format(Mixed(0)), "y");
        assert_eq!(q(3).format(Power(0)), "1");
        assert_eq!(d(4).format(Power(2)), "r^2");
        assert_eq!(d(4).format(Mixed(2)), "s*r^2");
        assert_eq!(d(4).format(Mixed(1)), "s*r");
        assert_eq!(q(3).parse("x^1*y"), Ok(Mixed(1)));
        assert!(q(3).parse("s*r").is_err());
        for id in [q(7), d(9)] {
            for g in id.elements() {
                assert_eq!(id.parse(&id.format(g)), Ok(g));
            }
        }
    }

    #[test]
    fn invalid_n_rejected() {
        assert_eq!(GroupId::dicyclic(1), Err(GroupError::InvalidN(1)));
    }

    proptest::proptest! {
        #[test]
        fn power_pairs_never_generate(n in 2usize..40, a in 0usize..80, b in 0usize..80) {
            let id = q(n);
            let (a, b) = (a % (2 * n), b % (2 * n));
            if a != b {
                proptest::prop_assert!(!generates_pair(id, Power(a), Power(b)).unwrap());
            }
        }

        #[test]
        fn closure_sizes_divide_order(n in 2usize..30, a in 0usize..60, b in 0usize..60, ka: bool, kb: bool) {
            for id in [q(n), d(n)] {
                let m = id.modulus();
                let mk = |k: bool, e: usize| if k { Mixed(e % m) } else { Power(e % m) };
                let sub = generated_subgroup(id, mk(ka, a), mk(kb, b)).unwrap();
                proptest::prop_assert_eq!(id.order() % sub.len(), 0);
            }
        }
    }
}
