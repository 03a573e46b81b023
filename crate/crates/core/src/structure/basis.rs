use std::collections::BTreeMap;

use crate::algebra::{ArithFunc, Coefficient, OrderValue};
use crate::error::{Error, Result};
use crate::linalg::RowEchelon;

/// Order-indexed family `g_k` with `order(g_k) = k` and `g_k(k) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFamily<C: Coefficient> {
    entries: BTreeMap<usize, ArithFunc<C>>,
}

impl<C: Coefficient> BasisFamily<C> {
    /// Validates that each entry has the order it is keyed by and leading coefficient 1.
    pub fn new(entries: BTreeMap<usize, ArithFunc<C>>) -> Result<Self> {
        let mut bound = None;
        for (&k, g) in &entries {
            if *bound.get_or_insert(g.bound()) != g.bound() {
                return Err(Error::BoundMismatch(bound.unwrap(), g.bound()));
            }
            if g.order() != OrderValue::Finite(k) || !g.get(k).is_one() {
                return Err(Error::InvalidArgument(format!(
                    "basis entry {k} must have order {k} and leading coefficient 1"
                )));
            }
        }
        Ok(Self { entries })
    }

    /// The standard family `{e_k : 1 ≤ k ≤ N}`.
    pub fn standard(bound: usize) -> Self {
        let entries = (1..=bound).map(|k| (k, ArithFunc::e(k, bound).unwrap())).collect();
        Self { entries }
    }

    pub fn get(&self, k: usize) -> Option<&ArithFunc<C>> {
        self.entries.get(&k)
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &ArithFunc<C>)> + '_ {
        self.entries.iter().map(|(&k, g)| (k, g))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Reduced row echelon form of the span of `generators`, read with
/// ascending index as column order: one `g_k` per order realized by the span.
pub fn echelon_basis<C: Coefficient>(generators: &[ArithFunc<C>]) -> Result<BasisFamily<C>> {
    let Some(first) = generators.first() else {
        return Ok(BasisFamily { entries: BTreeMap::new() });
    };
    let bound = first.bound();
    let mut ech = RowEchelon::new(bound);
    for g in generators {
        if g.bound() != bound {
            return Err(Error::BoundMismatch(bound, g.bound()));
        }
        ech.insert(g.values().to_vec());
    }
    let entries = ech
        .rows()
        .iter()
        .zip(ech.pivots())
        .map(|(row, &p)| (p + 1, ArithFunc::from_values(row.clone()).expect("valid bound")))
        .collect();
    Ok(BasisFamily { entries })
}

/// Outcome of greedy elimination against a [`BasisFamily`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisExpansion<C: Coefficient> {
    /// `f = Σ a_k g_k`, terms in the (strictly increasing) order they were consumed.
    Combination(Vec<(usize, C)>),
    /// Elimination reached an order with no basis entry.
    ResidueNonzero { terms: Vec<(usize, C)>, residue: ArithFunc<C> },
}

/// Repeatedly subtracts `a g_n` with `n = order(f_i)` and `a = f_i(n)`.
/// Each step strictly raises the order of the residual.
pub fn express_in_basis<C: Coefficient>(f: &ArithFunc<C>, basis: &BasisFamily<C>) -> Result<BasisExpansion<C>> {
    let mut residual = f.clone();
    let mut terms = Vec::new();
    while let OrderValue::Finite(n) = residual.order() {
        let Some(g) = basis.get(n) else {
            return Ok(BasisExpansion::ResidueNonzero { terms, residue: residual });
        };
        let a = residual.get(n).clone();
        residual = residual.sub(&g.scale(&a))?;
        terms.push((n, a));
    }
    Ok(BasisExpansion::Combination(terms))
}
