use std::fmt;

use crate::error::{Error, Result};
use crate::numtheory::{sieve, unitary_product, UnitaryProduct};

/// Result of checking one generator `e_k` against the target `e_L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateCheck {
    pub k: usize,
    pub remainder: usize,
    /// Cofactors `i` with `i ⊕ k = L`; empty when the candidate fails.
    pub cofactors: Vec<usize>,
}

impl CandidateCheck {
    pub fn failed(&self) -> bool {
        self.cofactors.is_empty()
    }
}

/// Record that `e_L` is not a combination `Σ f_k ⊕ e_k` over `2 ≤ k ≤ cap`.
///
/// Every term `c e_i ⊕ e_k` equals `c e_{ik}` when `gcd(i, k) = 1` and
/// vanishes otherwise, so `e_L` can only arise from some `k` with `i ⊕ k = L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript {
    pub prime: usize,
    pub cap: usize,
    pub checks: Vec<CandidateCheck>,
}

impl Transcript {
    pub fn all_failed(&self) -> bool {
        self.checks.iter().all(CandidateCheck::failed)
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.prime;
        writeln!(f, "# target e_{l}, generators e_2..e_{}", self.cap)?;
        for c in &self.checks {
            if c.failed() {
                writeln!(
                    f,
                    "k={}: no i with i*{} = {l} and gcd(i,{})=1 ({l} mod {} = {}) -- fails",
                    c.k, c.k, c.k, c.k, c.remainder
                )?;
            } else {
                writeln!(f, "k={}: {l} = i*{} for i in {:?} -- succeeds", c.k, c.k, c.cofactors)?;
            }
        }
        if self.all_failed() {
            writeln!(f, "result: e_{l} is not in the ideal generated by e_2..e_{}", self.cap)
        } else {
            writeln!(f, "result: some generator reaches e_{l}")
        }
    }
}

pub fn demo_not_finitely_generated(prime: usize, cap: usize) -> Result<Transcript> {
    if !sieve().is_prime(prime)? {
        return Err(Error::NotPrime(prime));
    }
    if prime <= cap {
        return Err(Error::InvalidArgument(format!("prime {prime} must exceed the generator cap {cap}")));
    }
    let checks = (2..=cap)
        .map(|k| {
            let cofactors = (1..=prime / k)
                .filter(|&i| unitary_product(i, k) == UnitaryProduct::Value(prime))
                .collect();
            CandidateCheck { k, remainder: prime % k, cofactors }
        })
        .collect();
    Ok(Transcript { prime, cap, checks })
}
