use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{LinalgError, Result};

/// Integer polynomial, constant term first, no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BigPoly {
    coeffs: Vec<BigInt>,
}

impl BigPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x - root`
    pub fn linear(root: i64) -> Self {
        Self::from_i64(&[-root, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &BigPoly) -> BigPoly {
        if self.is_zero() || other.is_zero() {
            return BigPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BigPoly::new(out)
    }

    pub fn pow(&self, mut e: u32) -> BigPoly {
        let mut base = self.clone();
        let mut acc = BigPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn to_rational(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for BigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().map(|c| c.to_string()).collect(),
            |c| c.starts_with('-'),
        )
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    coeffs: Vec<String>,
    negative: impl Fn(&str) -> bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let neg = negative(c);
        let mag = c.trim_start_matches('-');
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        let unit = mag == "1" && k > 0;
        if !unit {
            write!(f, "{mag}")?;
        }
        match k {
            0 => {}
            1 => write!(f, "x")?,
            _ => write!(f, "x^{k}")?,
        }
    }
    Ok(())
}

/// Polynomial with rational coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The integer polynomial with the same coefficients, if all are integers.
    pub fn to_integer(&self) -> Option<BigPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(BigPoly::new)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().map(|c| c.to_string()).collect(),
            |c| c.starts_with('-'),
        )
    }
}

/// Long division over the rationals: `p = q * quotient + remainder` with
/// `deg(remainder) < deg(q)`.
pub fn poly_divide(p: &BigPoly, q: &BigPoly) -> Result<(QPoly, QPoly)> {
    let dq = q.degree().ok_or(LinalgError::DivisionByZero)?;
    let divisor = q.to_rational();
    let lead = divisor.coeffs[dq].clone();
    let mut rem = p.to_rational().coeffs;
    let Some(dp) = p.degree() else {
        return Ok((QPoly::default(), QPoly::default()));
    };
    if dp < dq {
        return Ok((QPoly::default(), QPoly::new(rem)));
    }
    let mut quot = vec![BigRational::zero(); dp - dq + 1];
    for k in (0..=dp - dq).rev() {
        let c = &rem[k + dq] / &lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in divisor.coeffs.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    rem.truncate(dq);
    Ok((QPoly::new(quot), QPoly::new(rem)))
}
