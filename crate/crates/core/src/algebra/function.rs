use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::Zero;

use super::coefficient::{Coefficient, Rational};
use crate::error::{Error, Result};
use crate::numtheory::{sieve, DEFAULT_SIEVE_BOUND};

/// Largest supported truncation bound. Values are stored densely and
/// factorizations come from the shared sieve.
pub const MAX_BOUND: usize = DEFAULT_SIEVE_BOUND;

/// Order of an element at truncation `N`: the least index of its support,
/// or `AboveBound` when the element vanishes on `[1..N]` (the zero of the
/// truncated ring). `Finite(_)` sorts below `AboveBound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderValue {
    Finite(usize),
    AboveBound,
}

impl OrderValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            OrderValue::Finite(k) => Some(k),
            OrderValue::AboveBound => None,
        }
    }
}

impl fmt::Display for OrderValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderValue::Finite(k) => write!(f, "{k}"),
            OrderValue::AboveBound => f.write_str("above-bound"),
        }
    }
}

/// Minimum of `omega` over the support. The zero element has no degree;
/// it gets the `Undefined` sentinel and no arithmetic is defined on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    Finite(u32),
    Undefined,
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::Undefined => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::Undefined => f.write_str("undefined"),
        }
    }
}

/// An element of the truncated ring `A_N`: a function `[1..N] -> C`.
///
/// Every operation is carried out in the quotient of the full ring by the
/// ideal of functions vanishing on `[1..N]`, so ring identities hold
/// exactly. Operands of binary operations must share the same bound.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArithFunc<C> {
    // values[n - 1] = f(n)
    values: Vec<C>,
}

impl<C: Coefficient> ArithFunc<C> {
    fn check_bound(bound: usize) -> Result<()> {
        if bound == 0 || bound > MAX_BOUND {
            Err(Error::UnsupportedBound(bound, MAX_BOUND))
        } else {
            Ok(())
        }
    }

    /// The zero function at bound `N`.
    ///
    /// Panics if `bound` is 0 or above [`MAX_BOUND`].
    pub fn zero(bound: usize) -> Self {
        Self::check_bound(bound).unwrap();
        Self { values: vec![C::zero(); bound] }
    }

    /// The constant function 1.
    pub fn one(bound: usize) -> Self {
        Self::check_bound(bound).unwrap();
        Self { values: vec![C::one(); bound] }
    }

    /// Indicator `e_k` of the index `k`.
    pub fn e(k: usize, bound: usize) -> Result<Self> {
        Self::check_bound(bound)?;
        if k == 0 || k > bound {
            return Err(Error::IndexOutOfRange { index: k, bound });
        }
        let mut f = Self::zero(bound);
        f.values[k - 1] = C::one();
        Ok(f)
    }

    /// Multiplicative identity `e_1`.
    pub fn identity(bound: usize) -> Self {
        Self::e(1, bound).unwrap()
    }

    pub fn from_fn(bound: usize, mut value: impl FnMut(usize) -> C) -> Self {
        Self::check_bound(bound).unwrap();
        Self { values: (1..=bound).map(&mut value).collect() }
    }

    /// Builds a function from `(index, value)` entries; repeated indices add up.
    pub fn from_entries(bound: usize, entries: impl IntoIterator<Item = (usize, C)>) -> Result<Self> {
        Self::check_bound(bound)?;
        let mut f = Self::zero(bound);
        for (k, c) in entries {
            if k == 0 || k > bound {
                return Err(Error::IndexOutOfRange { index: k, bound });
            }
            f.values[k - 1] += &c;
        }
        Ok(f)
    }

    /// Builds a function from its dense value list `[f(1), ..., f(N)]`.
    pub fn from_values(values: Vec<C>) -> Result<Self> {
        Self::check_bound(values.len())?;
        Ok(Self { values })
    }

    pub fn bound(&self) -> usize {
        self.values.len()
    }

    /// `f(n)`. Panics when `n` lies outside `[1..N]`.
    pub fn get(&self, n: usize) -> &C {
        assert!(n >= 1 && n <= self.bound(), "index {n} outside 1..={}", self.bound());
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    /// `(n, f(n))` for every `n` in the support, ascending.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &C)> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries().map(|(n, _)| n).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    fn same_bound(&self, other: &Self) -> Result<()> {
        if self.bound() == other.bound() {
            Ok(())
        } else {
            Err(Error::BoundMismatch(self.bound(), other.bound()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_bound(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Self { values })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_bound(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Self { values })
    }

    pub fn neg(&self) -> Self {
        Self { values: self.values.iter().map(|c| -c.clone()).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self { values: self.values.iter().map(|v| v.mul_ref(c)).collect() }
    }

    /// Keeps the values at indices satisfying `keep` and zeroes the rest.
    pub fn restrict(&self, mut keep: impl FnMut(usize) -> bool) -> Self {
        Self::from_fn(self.bound(), |n| {
            if keep(n) {
                self.values[n - 1].clone()
            } else {
                C::zero()
            }
        })
    }

    fn convolve(&self, other: &Self, unitary: bool) -> Result<Self> {
        self.same_bound(other)?;
        let bound = self.bound();
        let rhs: Vec<(usize, &C)> = other.entries().collect();
        let mut out = vec![C::zero(); bound];
        for (a, fa) in self.entries() {
            for &(b, gb) in &rhs {
                let n = a * b;
                if n > bound {
                    break;
                }
                if unitary && a.gcd(&b) != 1 {
                    continue;
                }
                out[n - 1] += &fa.mul_ref(gb);
            }
        }
        Ok(Self { values: out })
    }

    /// Unitary convolution: `(f ⊕ g)(n) = Σ_{d || n} f(d) g(n/d)`.
    pub fn uconv(&self, other: &Self) -> Result<Self> {
        self.convolve(other, true)
    }

    /// Dirichlet convolution: `(f · g)(n) = Σ_{r | n} f(r) g(n/r)`.
    pub fn dconv(&self, other: &Self) -> Result<Self> {
        self.convolve(other, false)
    }

    /// `n`-fold unitary power; `f^0 = e_1`.
    pub fn upow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.bound());
        for _ in 0..n {
            if acc.is_zero() {
                break;
            }
            acc = acc.uconv(self).expect("same bound");
        }
        acc
    }

    pub fn order(&self) -> OrderValue {
        self.values
            .iter()
            .position(|c| !c.is_zero())
            .map_or(OrderValue::AboveBound, |i| OrderValue::Finite(i + 1))
    }

    /// `1 / order`, or 0 for the zero element.
    pub fn norm(&self) -> Rational {
        match self.order() {
            OrderValue::Finite(k) => Rational::new(1.into(), k.into()),
            OrderValue::AboveBound => Rational::zero(),
        }
    }

    pub fn degree(&self) -> Degree {
        let s = sieve();
        self.entries()
            .map(|(n, _)| s.omega(n).expect("bound within sieve"))
            .min()
            .map_or(Degree::Undefined, Degree::Finite)
    }

    pub fn is_unit(&self) -> bool {
        !self.values[0].is_zero()
    }

    /// Inverse under unitary convolution, by recursion on the index:
    /// `g(1) = 1/f(1)` and `g(n) = -(1/f(1)) Σ_{d || n, d > 1} f(d) g(n/d)`.
    pub fn inverse(&self) -> Result<Self> {
        let inv1 = self.values[0].recip().ok_or(Error::NotUnit)?;
        let bound = self.bound();
        let tail: Vec<(usize, &C)> = self.entries().filter(|&(d, _)| d > 1).collect();
        // acc[n] collects Σ f(d) g(m) over finished m with d·m = n, gcd(d, m) = 1
        let mut acc = vec![C::zero(); bound];
        let mut g = vec![C::zero(); bound];
        let minus_inv1 = -inv1.clone();
        for m in 1..=bound {
            let gm = if m == 1 { inv1.clone() } else { acc[m - 1].mul_ref(&minus_inv1) };
            if !gm.is_zero() {
                for &(d, fd) in &tail {
                    let n = d * m;
                    if n > bound {
                        break;
                    }
                    if d.gcd(&m) == 1 {
                        acc[n - 1] += &fd.mul_ref(&gm);
                    }
                }
            }
            g[m - 1] = gm;
        }
        Ok(Self { values: g })
    }

    /// Inverse as the geometric series `(1/c) Σ_i h^i` with `c = f(1)` and
    /// `h = e_1 - f/c`. `h` is a non-unit, so its powers vanish in `A_N`
    /// after finitely many steps.
    pub fn geometric_inverse(&self) -> Result<Self> {
        let inv1 = self.values[0].recip().ok_or(Error::NotUnit)?;
        let unit = Self::identity(self.bound());
        let h = unit.sub(&self.scale(&inv1))?;
        let mut sum = unit.clone();
        let mut power = unit;
        loop {
            power = power.uconv(&h)?;
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        Ok(sum.scale(&inv1))
    }

    /// Unitary Möbius function `μ*(n) = (-1)^ω(n)`.
    pub fn mobius_star(bound: usize) -> Self {
        let s = sieve();
        Self::from_fn(bound, |n| {
            if s.omega(n).expect("bound within sieve").is_multiple_of(2) {
                C::one()
            } else {
                -C::one()
            }
        })
    }

    /// The multiplicative function `Π_i (1 + Σ_j c_{i,j} y_i^{(j)})`:
    /// value 1 at 1 and `Π c_{i_t, j_t}` at `p_{i_1}^{j_1} ... p_{i_r}^{j_r}`,
    /// with missing table entries read as 0.
    pub fn multiplicative_from(table: &BTreeMap<(usize, u32), C>, bound: usize) -> Self {
        let s = sieve();
        Self::from_fn(bound, |n| {
            let fac = s.factor(n).expect("bound within sieve");
            let mut v = C::one();
            for &(p, a) in fac.pairs() {
                let i = s.prime_index(p).expect("sieved prime");
                match table.get(&(i, a)) {
                    Some(c) => v *= c,
                    None => return C::zero(),
                }
            }
            v
        })
    }

    /// True when `f(1) = 1` and `f(nm) = f(n) f(m)` for all coprime `n, m`
    /// with `nm ≤ N`. (`f(1) ∈ {0, 1}` is forced, and `f(1) = 0` only for zero.)
    pub fn is_multiplicative(&self) -> bool {
        if !self.values[0].is_one() {
            return false;
        }
        let bound = self.bound();
        for n in 2..=bound {
            for m in n..=bound / n {
                if n.gcd(&m) == 1 && *self.get(n * m) != self.get(n).mul_ref(self.get(m)) {
                    return false;
                }
            }
        }
        true
    }
}

impl<C: Coefficient> fmt::Debug for ArithFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ArithFunc(N={}; ", self.bound())?;
        let mut first = true;
        for (n, c) in self.entries() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{n}: {}", c.to_text())?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

// Operator forms panic on a bound mismatch; use the named methods to get an error.
impl<C: Coefficient> Add for &ArithFunc<C> {
    type Output = ArithFunc<C>;

    fn add(self, rhs: Self) -> ArithFunc<C> {
        ArithFunc::add(self, rhs).unwrap()
    }
}

impl<C: Coefficient> Sub for &ArithFunc<C> {
    type Output = ArithFunc<C>;

    fn sub(self, rhs: Self) -> ArithFunc<C> {
        ArithFunc::sub(self, rhs).unwrap()
    }
}

impl<C: Coefficient> Neg for &ArithFunc<C> {
    type Output = ArithFunc<C>;

    fn neg(self) -> ArithFunc<C> {
        ArithFunc::neg(self)
    }
}
