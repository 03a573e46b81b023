use std::collections::BTreeMap;

use crate::algebra::{ArithFunc, Coefficient};
use crate::numtheory::sieve;

/// Splitting of `f` into parts supported on the classes
/// `A^i = {k : lp(k) = p_i}`, plus the value at 1, which lies in no class.
///
/// Only nonzero parts are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDecomposition<C: Coefficient> {
    pub constant_term: C,
    pub parts: BTreeMap<usize, ArithFunc<C>>,
    bound: usize,
}

impl<C: Coefficient> CanonicalDecomposition<C> {
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// The part `f_i`, zero when absent.
    pub fn part(&self, i: usize) -> ArithFunc<C> {
        self.parts.get(&i).cloned().unwrap_or_else(|| ArithFunc::zero(self.bound))
    }

    /// `constant_term · e_1 + Σ_i f_i`.
    pub fn reconstruct(&self) -> ArithFunc<C> {
        let mut acc = ArithFunc::identity(self.bound).scale(&self.constant_term);
        for part in self.parts.values() {
            acc = &acc + part;
        }
        acc
    }
}

pub fn canonical_decompose<C: Coefficient>(f: &ArithFunc<C>) -> CanonicalDecomposition<C> {
    let s = sieve();
    let bound = f.bound();
    let mut entries: BTreeMap<usize, Vec<(usize, C)>> = BTreeMap::new();
    for (n, c) in f.entries().filter(|&(n, _)| n > 1) {
        let i = s.class_index(n).expect("bound within sieve");
        entries.entry(i).or_default().push((n, c.clone()));
    }
    let parts = entries
        .into_iter()
        .map(|(i, es)| (i, ArithFunc::from_entries(bound, es).expect("indices in range")))
        .collect();
    CanonicalDecomposition { constant_term: f.get(1).clone(), parts, bound }
}

/// Largest class index `i` with `f_i ≠ 0`, or 0 when every part vanishes.
/// The value at 1 is ignored.
///
/// At a finite bound every element has finitely many nonzero parts, so
/// there is no "not of polynomial type" outcome; see [`filtration_report`]
/// for telling genuine degree apart from support that merely sits in high
/// classes.
pub fn filtration_degree<C: Coefficient>(f: &ArithFunc<C>) -> usize {
    let s = sieve();
    f.entries()
        .filter(|&(n, _)| n > 1)
        .map(|(n, _)| s.class_index(n).expect("bound within sieve"))
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiltrationReport {
    pub degree: usize,
    /// Whether some index in the support has a leading prime above the threshold.
    pub beyond_threshold: bool,
}

/// [`filtration_degree`] together with a flag telling whether `f` has
/// support in classes whose leading prime exceeds `prime_threshold`.
pub fn filtration_report<C: Coefficient>(f: &ArithFunc<C>, prime_threshold: usize) -> FiltrationReport {
    let s = sieve();
    let beyond_threshold = f
        .entries()
        .filter(|&(n, _)| n > 1)
        .any(|(n, _)| s.leading_prime(n).expect("bound within sieve") > prime_threshold);
    FiltrationReport { degree: filtration_degree(f), beyond_threshold }
}
