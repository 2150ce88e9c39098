use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::value::{ratio_text, QuadraticValue, Rational};
use super::{Result, SpectraError};
use crate::group::Family;
use crate::linalg::BigPoly;

/// Multiset of exact eigenvalues, sorted descending with distinct values.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Spectrum {
    entries: Vec<(QuadraticValue, usize)>,
}

/// Sum of a spectrum split by square-root component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSum {
    pub rational: Rational,
    pub irrational: BTreeMap<u64, Rational>,
}

impl ExactSum {
    /// The value when every surd cancels.
    pub fn as_rational(&self) -> Option<Rational> {
        self.irrational
            .values()
            .all(Zero::is_zero)
            .then_some(self.rational)
    }
}

impl Spectrum {
    pub fn new(entries: Vec<(QuadraticValue, usize)>) -> Self {
        let mut s = Self::default();
        for (v, m) in entries {
            s.insert(v, m);
        }
        s
    }

    pub fn insert(&mut self, v: QuadraticValue, mult: usize) {
        if mult == 0 {
            return;
        }
        if let Some(e) = self.entries.iter_mut().find(|(w, _)| *w == v) {
            e.1 += mult;
            return;
        }
        let at = self
            .entries
            .partition_point(|(w, _)| w.cmp_desc(&v).is_lt());
        self.entries.insert(at, (v, mult));
    }

    pub fn insert_int(&mut self, v: i64, mult: usize) {
        self.insert(QuadraticValue::integer(v), mult);
    }

    pub fn entries(&self) -> &[(QuadraticValue, usize)] {
        &self.entries
    }

    /// Sum of multiplicities.
    pub fn order(&self) -> usize {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, v: &QuadraticValue) -> usize {
        self.entries
            .iter()
            .find(|(w, _)| w == v)
            .map_or(0, |(_, m)| *m)
    }

    /// Removes one copy of `v`.
    pub fn remove_one(&mut self, v: &QuadraticValue) -> Result<()> {
        let pos = self
            .entries
            .iter()
            .position(|(w, _)| w == v)
            .ok_or_else(|| SpectraError::MissingEigenvalue(v.to_string()))?;
        self.entries[pos].1 -= 1;
        if self.entries[pos].1 == 0 {
            self.entries.remove(pos);
        }
        Ok(())
    }

    pub fn map(&self, f: impl Fn(&QuadraticValue) -> QuadraticValue) -> Spectrum {
        Spectrum::new(self.entries.iter().map(|(v, m)| (f(v), *m)).collect())
    }

    pub fn scaled(&self, k: i64) -> Spectrum {
        self.map(|v| v.scaled(Rational::from_integer(k)))
    }

    pub fn merged(&self, other: &Spectrum) -> Spectrum {
        let mut s = self.clone();
        for &(v, m) in &other.entries {
            s.insert(v, m);
        }
        s
    }

    /// Every eigenvalue as a float, repeated by multiplicity, descending.
    pub fn approx_values(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .entries
            .iter()
            .flat_map(|(v, m)| std::iter::repeat_n(v.approx(), *m))
            .collect();
        out.sort_by(|a, b| b.total_cmp(a));
        out
    }

    pub fn exact_sum(&self) -> ExactSum {
        let mut sum = ExactSum {
            rational: Rational::zero(),
            irrational: BTreeMap::new(),
        };
        for (v, m) in &self.entries {
            let m = Rational::from_integer(*m as i64);
            sum.rational += v.a() * m;
            if !v.is_rational() {
                *sum.irrational
                    .entry(v.disc())
                    .or_insert_with(Rational::zero) += v.b() * m;
            }
        }
        sum
    }

    pub fn to_json(&self, family: Family, n: usize, matrix: &str) -> SpectrumJson {
        SpectrumJson {
            family,
            n,
            matrix: matrix.to_string(),
            entries: self
                .entries
                .iter()
                .map(|(v, m)| EntryJson {
                    a: ratio_text(v.a()),
                    b: ratio_text(v.b()),
                    disc: v.disc(),
                    approx: v.approx(),
                    mult: *m,
                })
                .collect(),
        }
    }

    /// One row per distinct eigenvalue.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,disc,approx,mult\n");
        for (v, m) in &self.entries {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                ratio_text(v.a()),
                ratio_text(v.b()),
                v.disc(),
                v.approx(),
                m
            );
        }
        out
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let text = v.to_string();
            let text = if v.is_rational() {
                text
            } else {
                format!("[{text}]")
            };
            if *m == 1 {
                write!(f, "{text}")?;
            } else {
                write!(f, "{text}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryJson {
    pub a: String,
    pub b: String,
    pub disc: u64,
    pub approx: f64,
    pub mult: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub family: Family,
    pub n: usize,
    pub matrix: String,
    pub entries: Vec<EntryJson>,
}

/// Product of monic integer polynomials raised to positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredPoly {
    factors: Vec<(BigPoly, u32)>,
}

impl FactoredPoly {
    /// Drops factors with exponent 0.
    pub fn new(factors: Vec<(BigPoly, u32)>) -> Self {
        Self {
            factors: factors.into_iter().filter(|(_, e)| *e > 0).collect(),
        }
    }

    pub fn factors(&self) -> &[(BigPoly, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(p, e)| p.degree().unwrap_or(0) * *e as usize)
            .sum()
    }

    /// Roots with multiplicity, when every factor has degree at most 2.
    pub fn roots(&self) -> Option<Spectrum> {
        let mut s = Spectrum::default();
        for (p, e) in &self.factors {
            let c: Vec<i64> = p
                .coeffs()
                .iter()
                .map(|c| c.to_i64())
                .collect::<Option<_>>()?;
            let e = *e as usize;
            match c.as_slice() {
                [_] => {}
                [c0, 1] => s.insert_int(-c0, e),
                [c0, c1, 1] => {
                    let disc = c1 * c1 - 4 * c0;
                    if disc < 0 {
                        return None;
                    }
                    for sign in [1, -1] {
                        s.insert(QuadraticValue::from_parts(-c1, sign, 2, disc as u64), e);
                    }
                }
                _ => return None,
            }
        }
        Some(s)
    }

    pub fn to_json(&self) -> FactoredPolyJson {
        FactoredPolyJson {
            factors: self
                .factors
                .iter()
                .map(|(p, e)| FactorJson {
                    coeffs: p.coeffs().to_vec(),
                    exp: *e,
                })
                .collect(),
        }
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (p, e) in &self.factors {
            if p.degree() == Some(1) && p.coeff(0).is_zero() && p.is_monic() {
                write!(f, "x")?;
            } else {
                write!(f, "({p})")?;
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorJson {
    #[serde(with = "bigint_list")]
    pub coeffs: Vec<BigInt>,
    pub exp: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactoredPolyJson {
    pub factors: Vec<FactorJson>,
}

/// Coefficients as JSON integers.
mod bigint_list {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::ser::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let ints = v
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| S::Error::custom("coefficient exceeds i64"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        s.collect_seq(ints)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let ints = Vec::<i64>::deserialize(d).map_err(D::Error::custom)?;
        Ok(ints.into_iter().map(BigInt::from).collect())
    }
}
