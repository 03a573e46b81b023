use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{ArithFunc, Coefficient};
use crate::numtheory::sieve;

/// Projection onto the values at square-free indices.
pub fn retract_sqf<C: Coefficient>(f: &ArithFunc<C>) -> ArithFunc<C> {
    let s = sieve();
    f.restrict(|n| s.factor(n).expect("bound within sieve").exponents_all(|a| a == 1))
}

/// Allowed exponent set `Q` for [`retract_q`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExponentSet {
    All,
    Odd,
    Finite(BTreeSet<u32>),
}

impl ExponentSet {
    pub fn contains(&self, a: u32) -> bool {
        match self {
            ExponentSet::All => true,
            ExponentSet::Odd => a % 2 == 1,
            ExponentSet::Finite(set) => set.contains(&a),
        }
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExponentSet::All => f.write_str("all"),
            ExponentSet::Odd => f.write_str("odd"),
            ExponentSet::Finite(set) => {
                let items: Vec<String> = set.iter().map(u32::to_string).collect();
                f.write_str(&items.join(","))
            }
        }
    }
}

impl FromStr for ExponentSet {
    type Err = String;

    /// `all`, `odd`, or a comma separated list of positive exponents.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "all" => Ok(ExponentSet::All),
            "odd" => Ok(ExponentSet::Odd),
            list => list
                .split(',')
                .map(|t| match t.trim().parse::<u32>() {
                    Ok(a) if a > 0 => Ok(a),
                    _ => Err(format!("bad exponent `{}`", t.trim())),
                })
                .collect::<Result<BTreeSet<_>, _>>()
                .map(ExponentSet::Finite),
        }
    }
}

/// Keeps the values at `n = Π p^a` with every exponent `a ∈ Q`; index 1 is
/// always kept.
pub fn retract_q<C: Coefficient>(f: &ArithFunc<C>, q: &ExponentSet) -> ArithFunc<C> {
    let s = sieve();
    f.restrict(|n| s.factor(n).expect("bound within sieve").exponents_all(|a| q.contains(a)))
}
