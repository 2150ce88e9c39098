use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

pub type Rational = Ratio<i64>;

/// Exact real number `a + b * sqrt(disc)` with rational `a`, `b`.
///
/// Normal form: `disc` is squarefree and greater than 1 whenever `b != 0`;
/// otherwise `b = 0` and `disc = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticValue {
    a: Rational,
    b: Rational,
    disc: u64,
}

impl QuadraticValue {
    pub fn new(a: Rational, b: Rational, disc: u64) -> Self {
        if b.is_zero() || disc == 0 {
            return Self::rational(a);
        }
        let (square_root, rest) = split_square(disc);
        let b = b * Rational::from_integer(square_root as i64);
        if rest == 1 {
            Self::rational(a + b)
        } else {
            Self { a, b, disc: rest }
        }
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            disc: 0,
        }
    }

    pub fn integer(v: i64) -> Self {
        Self::rational(Rational::from_integer(v))
    }

    /// `a/den + (b/den) * sqrt(disc)` from integers.
    pub fn from_parts(a: i64, b: i64, den: i64, disc: u64) -> Self {
        Self::new(Rational::new(a, den), Rational::new(b, den), disc)
    }

    pub fn a(&self) -> Rational {
        self.a
    }

    pub fn b(&self) -> Rational {
        self.b
    }

    pub fn disc(&self) -> u64 {
        self.disc
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.is_rational() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    pub fn approx(&self) -> f64 {
        let a = ratio_f64(self.a);
        if self.b.is_zero() {
            a
        } else {
            a + ratio_f64(self.b) * (self.disc as f64).sqrt()
        }
    }

    pub fn scaled(&self, k: Rational) -> Self {
        Self::new(self.a * k, self.b * k, self.disc)
    }

    pub fn shifted(&self, c: Rational) -> Self {
        Self::new(self.a + c, self.b, self.disc)
    }

    /// `-self - 2`
    pub fn neg_minus_two(&self) -> Self {
        Self::new(-self.a - 2, -self.b, self.disc)
    }

    /// Descending by value, then by discriminant and parts for a total order.
    pub fn cmp_desc(&self, other: &Self) -> Ordering {
        other
            .approx()
            .total_cmp(&self.approx())
            .then(self.disc.cmp(&other.disc))
            .then(other.a.cmp(&self.a))
            .then(other.b.cmp(&self.b))
    }
}

fn ratio_f64(r: Rational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// `d = s^2 * f` with `f` squarefree; returns `(s, f)`.
fn split_square(mut d: u64) -> (u64, u64) {
    let mut s = 1;
    let mut f = 1;
    let mut p = 2;
    while p * p <= d {
        let mut e = 0;
        while d.is_multiple_of(p) {
            d /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            f *= p;
        }
        p += 1;
    }
    (s, f * d)
}

/// Exact `p/q` text with the denominator always present.
pub fn ratio_text(r: Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for QuadraticValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let den = self.a.denom().lcm(self.b.denom());
        let a = (self.a * den).to_integer();
        let b = (self.b * den).to_integer();
        let coeff = if b.abs() == 1 {
            String::new()
        } else {
            b.abs().to_string()
        };
        let surd = format!("{coeff}√{}", self.disc);
        let num = match (a, b < 0) {
            (0, false) => surd.clone(),
            (0, true) => format!("-{surd}"),
            (a, neg) => format!("{a} {} {surd}", if neg { '-' } else { '+' }),
        };
        if den == 1 {
            write!(f, "{num}")
        } else if a == 0 {
            write!(f, "{num}/{den}")
        } else {
            write!(f, "({num})/{den}")
        }
    }
}
