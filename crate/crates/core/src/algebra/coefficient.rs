//! Exact scalar fields for function values.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;
pub type GaussianRational = Complex<BigRational>;

/// Which exact field a function takes values in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Gaussian,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldKind::Rational => "rational",
            FieldKind::Gaussian => "gaussian",
        })
    }
}

impl FromStr for FieldKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rational" => Ok(FieldKind::Rational),
            "gaussian" => Ok(FieldKind::Gaussian),
            other => Err(format!("unknown field `{other}` (expected rational or gaussian)")),
        }
    }
}

/// An exact field element. Equality is decidable because values are kept
/// in canonical reduced form.
pub trait Coefficient:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + 'static
{
    const FIELD: FieldKind;

    /// `self * other` without consuming either operand.
    fn mul_ref(&self, other: &Self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn recip(&self) -> Option<Self>;

    fn from_rational(r: Rational) -> Self;

    fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// Text form used by the line-oriented serialization format.
    fn to_text(&self) -> String;

    fn parse_text(s: &str) -> Option<Self>;
}

fn rational_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

impl Coefficient for Rational {
    const FIELD: FieldKind = FieldKind::Rational;

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational::recip(self))
        }
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn to_text(&self) -> String {
        rational_text(self)
    }

    fn parse_text(s: &str) -> Option<Self> {
        parse_rational(s)
    }
}

impl Coefficient for GaussianRational {
    const FIELD: FieldKind = FieldKind::Gaussian;

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Complex::new(&self.re / &n, -(&self.im / &n)))
    }

    fn from_rational(r: Rational) -> Self {
        Complex::new(r, Rational::zero())
    }

    fn to_text(&self) -> String {
        format!("{}+{}i", rational_text(&self.re), rational_text(&self.im))
    }

    fn parse_text(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.strip_suffix('i') {
            Some(body) => {
                // the separator is the first '+' after a possible leading sign
                let split = body.char_indices().skip(1).find(|&(_, c)| c == '+')?.0;
                let re = parse_rational(&body[..split])?;
                let im = parse_rational(&body[split + 1..])?;
                Some(Complex::new(re, im))
            }
            None => parse_rational(s).map(Self::from_rational),
        }
    }
}
