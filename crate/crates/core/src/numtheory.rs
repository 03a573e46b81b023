//! Integer-level primitives: factorization through a smallest-prime-factor
//! sieve, unitary divisors, the unitary product on integers, leading primes
//! and the codec between separated monomials and positive integers.
//!
//! Primes are indexed from 1, so `p_1 = 2`, `p_2 = 3`, and so on. A monomial
//! `y_{i_1}^{(j_1)} ... y_{i_r}^{(j_r)}` with distinct columns is represented
//! by the [`Factorization`] `p_{i_1}^{j_1} ... p_{i_r}^{j_r}`.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Bound of the shared sieve returned by [`sieve`].
pub const DEFAULT_SIEVE_BOUND: usize = 1_000_000;

/// Prime-power decomposition of a positive integer.
///
/// Pairs are `(prime, exponent)` with strictly increasing primes and
/// exponents at least 1. The empty list is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Factorization {
    pairs: Vec<(usize, u32)>,
}

impl Factorization {
    /// The empty factorization, i.e. the integer 1 (the empty monomial).
    pub fn one() -> Self {
        Self { pairs: Vec::new() }
    }

    /// Validates and wraps a list of `(prime, exponent)` pairs.
    pub fn new(pairs: Vec<(usize, u32)>) -> Result<Self> {
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidFactorization("primes must be strictly increasing"));
            }
        }
        for &(p, a) in &pairs {
            if a == 0 {
                return Err(Error::InvalidFactorization("exponents must be positive"));
            }
            if !is_prime_trial(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(Self { pairs })
    }

    /// Builds the factorization of the separated monomial given as
    /// `(column, exponent)` pairs, where column `i` stands for the `i`-th prime.
    pub fn from_columns(sieve: &Sieve, columns: &[(usize, u32)]) -> Result<Self> {
        let mut pairs = Vec::with_capacity(columns.len());
        for &(i, j) in columns {
            let p = sieve.nth_prime(i).ok_or_else(|| {
                Error::InvalidArgument(format!("column {i} has no prime within the sieve"))
            })?;
            pairs.push((p, j));
        }
        pairs.sort_unstable();
        Self::new(pairs)
    }

    pub fn pairs(&self) -> &[(usize, u32)] {
        &self.pairs
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Number of distinct primes, i.e. the number of variables in the monomial.
    pub fn omega(&self) -> u32 {
        self.pairs.len() as u32
    }

    /// The prime powers `p^a` exactly dividing the integer, in increasing prime order.
    pub fn prime_powers(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(p, a)| p.pow(a)).collect()
    }

    /// Product of the monomials when their columns are disjoint, `None`
    /// (the exterior zero) otherwise.
    pub fn separated_product(&self, other: &Self) -> Option<Self> {
        let mut pairs = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.pairs.len() && j < other.pairs.len() {
            let (a, b) = (self.pairs[i], other.pairs[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    pairs.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    pairs.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        pairs.extend_from_slice(&self.pairs[i..]);
        pairs.extend_from_slice(&other.pairs[j..]);
        Some(Self { pairs })
    }

    /// All unitary divisors, ascending. There are `2^omega` of them.
    pub fn unitary_divisors(&self) -> Vec<usize> {
        let mut out = vec![1usize];
        for q in self.prime_powers() {
            let len = out.len();
            for t in 0..len {
                out.push(out[t] * q);
            }
        }
        out.sort_unstable();
        out
    }

    /// All divisors, ascending.
    pub fn divisors(&self) -> Vec<usize> {
        let mut out = vec![1usize];
        for &(p, a) in &self.pairs {
            let len = out.len();
            let mut pk = 1;
            for _ in 0..a {
                pk *= p;
                for t in 0..len {
                    out.push(out[t] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// True when every exponent satisfies `keep`.
    pub fn exponents_all(&self, keep: impl Fn(u32) -> bool) -> bool {
        self.pairs.iter().all(|&(_, a)| keep(a))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        for (t, &(p, a)) in self.pairs.iter().enumerate() {
            if t > 0 {
                write!(f, "*")?;
            }
            if a == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{a}")?;
            }
        }
        Ok(())
    }
}

/// Result of the unitary product on integers: a positive integer or the
/// exterior zero of the monoid-with-zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnitaryProduct {
    Value(usize),
    Zero,
}

impl UnitaryProduct {
    pub fn value(self) -> Option<usize> {
        match self {
            UnitaryProduct::Value(v) => Some(v),
            UnitaryProduct::Zero => None,
        }
    }
}

/// `k ⊕ m`: the ordinary product when `gcd(k, m) = 1`, the exterior zero
/// otherwise.
pub fn unitary_product(k: usize, m: usize) -> UnitaryProduct {
    if k.gcd(&m) == 1 {
        UnitaryProduct::Value(k * m)
    } else {
        UnitaryProduct::Zero
    }
}

/// Encodes a separated monomial as the positive integer it corresponds to.
pub fn phi_encode(m: &Factorization) -> Result<usize> {
    m.pairs.iter().try_fold(1usize, |acc, &(p, a)| {
        p.checked_pow(a)
            .and_then(|q| acc.checked_mul(q))
            .ok_or(Error::Overflow)
    })
}

fn is_prime_trial(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest-prime-factor table up to a fixed bound. Immutable once built.
#[derive(Debug, Clone)]
pub struct Sieve {
    bound: usize,
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl Sieve {
    pub fn new(bound: usize) -> Self {
        assert!(bound >= 1 && bound <= u32::MAX as usize, "sieve bound out of range");
        let mut spf = vec![0u32; bound + 1];
        let mut primes = Vec::new();
        for n in 2..=bound {
            if spf[n] == 0 {
                spf[n] = n as u32;
                primes.push(n as u32);
            }
            let sn = spf[n];
            for &p in &primes {
                if p > sn || n * p as usize > bound {
                    break;
                }
                spf[n * p as usize] = p;
            }
        }
        Self { bound, spf, primes }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.bound {
            Err(Error::OutsideSieve { value: n, bound: self.bound })
        } else {
            Ok(())
        }
    }

    pub fn factor(&self, n: usize) -> Result<Factorization> {
        self.check(n)?;
        let mut pairs: Vec<(usize, u32)> = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m] as usize;
            let mut a = 0;
            while m.is_multiple_of(p) {
                m /= p;
                a += 1;
            }
            pairs.push((p, a));
        }
        Ok(Factorization { pairs })
    }

    pub fn is_prime(&self, n: usize) -> Result<bool> {
        self.check(n)?;
        Ok(n >= 2 && self.spf[n] as usize == n)
    }

    pub fn unitary_divisors(&self, n: usize) -> Result<Vec<usize>> {
        Ok(self.factor(n)?.unitary_divisors())
    }

    pub fn omega(&self, n: usize) -> Result<u32> {
        self.check(n)?;
        let mut count = 0;
        let mut m = n;
        while m > 1 {
            let p = self.spf[m];
            while m.is_multiple_of(p as usize) {
                m /= p as usize;
            }
            count += 1;
        }
        Ok(count)
    }

    /// Smallest prime dividing `n`; undefined for `n = 1`.
    pub fn leading_prime(&self, n: usize) -> Result<usize> {
        self.check(n)?;
        if n == 1 {
            return Err(Error::NoLeadingPrime(1));
        }
        Ok(self.spf[n] as usize)
    }

    /// The `i` with `n ∈ A^i`, i.e. `lp(n) = p_i`.
    pub fn class_index(&self, n: usize) -> Result<usize> {
        let p = self.leading_prime(n)?;
        Ok(self.prime_index(p).expect("leading prime is a sieved prime"))
    }

    /// 1-based index of the prime `p`, `None` if `p` is not a prime within the sieve.
    pub fn prime_index(&self, p: usize) -> Option<usize> {
        let p = u32::try_from(p).ok()?;
        self.primes.binary_search(&p).ok().map(|i| i + 1)
    }

    /// The `i`-th prime (1-based), if it lies within the sieve.
    pub fn nth_prime(&self, i: usize) -> Option<usize> {
        i.checked_sub(1)
            .and_then(|t| self.primes.get(t))
            .map(|&p| p as usize)
    }

    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        self.primes.iter().map(|&p| p as usize)
    }

    /// `p_1 p_2 ... p_k`, or `None` when it does not fit.
    pub fn primorial(&self, k: usize) -> Option<usize> {
        (1..=k).try_fold(1usize, |acc, i| acc.checked_mul(self.nth_prime(i)?))
    }

    /// Inverse of [`phi_encode`].
    pub fn phi_decode(&self, n: usize) -> Result<Factorization> {
        self.factor(n)
    }
}

/// The shared sieve with bound [`DEFAULT_SIEVE_BOUND`], built on first use.
pub fn sieve() -> &'static Sieve {
    static SIEVE: OnceLock<Sieve> = OnceLock::new();
    SIEVE.get_or_init(|| Sieve::new(DEFAULT_SIEVE_BOUND))
}

pub fn factor(n: usize) -> Result<Factorization> {
    sieve().factor(n)
}

pub fn unitary_divisors(n: usize) -> Result<Vec<usize>> {
    sieve().unitary_divisors(n)
}

pub fn omega(n: usize) -> Result<u32> {
    sieve().omega(n)
}

pub fn leading_prime(n: usize) -> Result<usize> {
    sieve().leading_prime(n)
}

pub fn class_index(n: usize) -> Result<usize> {
    sieve().class_index(n)
}

pub fn phi_decode(n: usize) -> Result<Factorization> {
    sieve().phi_decode(n)
}
