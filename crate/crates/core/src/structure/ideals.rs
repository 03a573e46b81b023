use crate::algebra::{ArithFunc, Coefficient};
use crate::error::{Error, Result};
use crate::numtheory::sieve;

/// Membership in `I_k`: `f` vanishes at every `n ≤ N` coprime to `p_1 ... p_k`.
pub fn in_ik<C: Coefficient>(f: &ArithFunc<C>, k: usize) -> bool {
    let s = sieve();
    // n is coprime to p_1..p_k iff n = 1 or its leading prime comes after p_k
    f.entries()
        .all(|(n, _)| n > 1 && s.class_index(n).expect("bound within sieve") <= k)
}

/// Tests `f ⊕ e_{p_1 ... p_K} = 0` in `A_N`.
pub fn annihilates_squarefree_block<C: Coefficient>(f: &ArithFunc<C>, k: usize) -> Result<bool> {
    let bound = f.bound();
    let witness = sieve()
        .primorial(k)
        .filter(|&p| p <= bound)
        .ok_or(Error::PrimorialExceedsBound { k, bound })?;
    Ok(f.uconv(&ArithFunc::e(witness, bound)?)?.is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NilpotencyIndex {
    Index(u32),
    NotFoundWithin(u32),
}

/// Smallest `n ≤ max_n` with `f^n = 0` in `A_N`.
pub fn nilpotency_index<C: Coefficient>(f: &ArithFunc<C>, max_n: u32) -> NilpotencyIndex {
    let mut power = ArithFunc::identity(f.bound());
    for n in 1..=max_n {
        power = power.uconv(f).expect("same bound");
        if power.is_zero() {
            return NilpotencyIndex::Index(n);
        }
    }
    NilpotencyIndex::NotFoundWithin(max_n)
}
