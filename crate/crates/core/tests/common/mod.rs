//! Random generators and brute-force oracles shared by the integration tests.
//!
//! The oracles use trial division and direct divisor loops only, never the
//! library's sieve or convolution code.
#![allow(dead_code)]

use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use unitary_core::{ArithFunc, Rational};

pub type F = ArithFunc<Rational>;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn e(k: usize, bound: usize) -> F {
    F::e(k, bound).unwrap()
}

/// Nonzero rational with small numerator and denominator.
pub fn rational(rng: &mut StdRng) -> Rational {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-9..=9);
    }
    q(n, rng.gen_range(1..=5))
}

/// Each index is nonzero with probability `density`.
pub fn dense(rng: &mut StdRng, bound: usize, density: f64) -> F {
    F::from_fn(bound, |_| if rng.gen_bool(density) { rational(rng) } else { q(0, 1) })
}

/// Random nonzero values on exactly the given indices.
pub fn on(rng: &mut StdRng, bound: usize, indices: &[usize]) -> F {
    F::from_values({
        let mut v = vec![q(0, 1); bound];
        for &i in indices {
            v[i - 1] = rational(rng);
        }
        v
    })
    .unwrap()
}

/// `count` distinct indices from `lo..=hi`.
pub fn indices(rng: &mut StdRng, lo: usize, hi: usize, count: usize) -> Vec<usize> {
    let pool: Vec<usize> = (lo..=hi).collect();
    let mut picked: Vec<usize> = pool.choose_multiple(rng, count.min(pool.len())).copied().collect();
    picked.sort_unstable();
    picked
}

/// Sparse function with `count` random indices in `lo..=hi`.
pub fn sparse(rng: &mut StdRng, bound: usize, lo: usize, hi: usize, count: usize) -> F {
    let idx = indices(rng, lo, hi.min(bound), count);
    on(rng, bound, &idx)
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime factorization by trial division.
pub fn trial_factor(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut a = 0;
        while n.is_multiple_of(p) {
            n /= p;
            a += 1;
        }
        if a > 0 {
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn trial_omega(n: usize) -> u32 {
    trial_factor(n).len() as u32
}

pub fn trial_is_prime(n: usize) -> bool {
    n > 1 && trial_factor(n) == vec![(n, 1)]
}

pub fn trial_is_prime_power(n: usize) -> bool {
    trial_factor(n).len() == 1
}

/// Primes up to 200000, found by trial division against smaller primes.
fn prime_table() -> &'static [usize] {
    static PRIMES: OnceLock<Vec<usize>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut primes: Vec<usize> = Vec::new();
        for n in 2..=200_000 {
            if primes.iter().take_while(|&&p| p * p <= n).all(|&p| n % p != 0) {
                primes.push(n);
            }
        }
        primes
    })
}

/// First `k` primes.
pub fn first_primes(k: usize) -> Vec<usize> {
    prime_table()[..k].to_vec()
}

/// Position (1-based) of the smallest prime factor of `n > 1` among the primes.
pub fn trial_class(n: usize) -> usize {
    let p = trial_factor(n)[0].0;
    prime_table().binary_search(&p).expect("prime within table") + 1
}

/// Unitary convolution straight from the definition.
pub fn naive_uconv(f: &F, g: &F) -> F {
    let n = f.bound();
    F::from_fn(n, |m| {
        let mut acc = q(0, 1);
        for d in (1..=m).filter(|d| m % d == 0 && gcd(*d, m / d) == 1) {
            acc += f.get(d) * g.get(m / d);
        }
        acc
    })
}

pub fn naive_dconv(f: &F, g: &F) -> F {
    let n = f.bound();
    F::from_fn(n, |m| {
        let mut acc = q(0, 1);
        for d in (1..=m).filter(|d| m % d == 0) {
            acc += f.get(d) * g.get(m / d);
        }
        acc
    })
}

/// Number of ordered `k`-tuples of pairwise coprime prime powers `> 1`
/// whose product is `n`.
pub fn ordered_prime_power_tuples(n: usize, k: u32) -> u64 {
    if k == 0 {
        return u64::from(n == 1);
    }
    (2..=n)
        .filter(|&d| n.is_multiple_of(d) && trial_is_prime_power(d) && gcd(d, n / d) == 1)
        .map(|d| ordered_prime_power_tuples(n / d, k - 1))
        .sum()
}

pub fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

/// Like [`dense`] but with a nonzero value at 1.
pub fn unit(rng: &mut StdRng, bound: usize, density: f64) -> F {
    let mut v = dense(rng, bound, density).values().to_vec();
    v[0] = rational(rng);
    F::from_values(v).unwrap()
}

pub mod strategies {
    use super::{q, F};
    use proptest::prelude::*;
    use unitary_core::Rational;

    pub fn nonzero() -> impl Strategy<Value = Rational> {
        (1i64..=7, any::<bool>(), 1i64..=4).prop_map(|(n, neg, d)| q(if neg { -n } else { n }, d))
    }

    /// Coefficient that is zero about half the time.
    pub fn coeff() -> impl Strategy<Value = Rational> {
        prop_oneof![1 => Just(q(0, 1)), 1 => nonzero()]
    }

    pub fn func(bound: usize) -> impl Strategy<Value = F> {
        proptest::collection::vec(coeff(), bound).prop_map(|v| F::from_values(v).unwrap())
    }

    /// Function with a nonzero value at 1.
    pub fn unit(bound: usize) -> impl Strategy<Value = F> {
        (nonzero(), func(bound)).prop_map(|(c, f)| {
            let mut v = f.values().to_vec();
            v[0] = c;
            F::from_values(v).unwrap()
        })
    }

    /// Function vanishing at 1.
    pub fn non_unit(bound: usize) -> impl Strategy<Value = F> {
        func(bound).prop_map(|f| f.restrict(|n| n > 1))
    }

    /// Random nonzero values on a random subset of `indices`.
    pub fn on_subset(bound: usize, indices: Vec<usize>) -> impl Strategy<Value = F> {
        let k = indices.len();
        proptest::collection::vec(coeff(), k).prop_map(move |cs| {
            F::from_entries(bound, indices.iter().copied().zip(cs)).unwrap()
        })
    }
}
