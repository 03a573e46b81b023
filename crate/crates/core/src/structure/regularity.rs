use num_integer::Integer;

use crate::algebra::{ArithFunc, Coefficient};
use crate::error::{Error, Result};
use crate::linalg::RowEchelon;

/// Basis of `{g : supp(g) ⊆ [1..M], f ⊕ g = 0 in A_N}`.
///
/// Row `n` of the system reads `Σ_{m || n, m ≤ M} f(n/m) g(m) = 0`; all
/// `n ≤ N` are used. An empty result means `f` is not a zero divisor
/// against any `g` supported on `[1..M]` at this resolution.
pub fn regularity_kernel<C: Coefficient>(f: &ArithFunc<C>, m: usize) -> Result<Vec<ArithFunc<C>>> {
    let bound = f.bound();
    if m == 0 || m > bound {
        return Err(Error::IndexOutOfRange { index: m, bound });
    }
    let mut ech = RowEchelon::new(m);
    for n in 1..=bound {
        let mut row = vec![C::zero(); m];
        let mut nonzero = false;
        for col in 1..=m.min(n) {
            if n % col == 0 && col.gcd(&(n / col)) == 1 {
                let v = f.get(n / col);
                if !v.is_zero() {
                    row[col - 1] = v.clone();
                    nonzero = true;
                }
            }
        }
        if nonzero && ech.insert(row) && ech.rank() == m {
            return Ok(Vec::new());
        }
    }
    Ok(ech
        .nullspace()
        .into_iter()
        .map(|v| ArithFunc::from_entries(bound, v.into_iter().enumerate().map(|(i, c)| (i + 1, c))).unwrap())
        .collect())
}
