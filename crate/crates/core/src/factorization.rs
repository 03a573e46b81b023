//! Factorization diagnostics: product certificates, the length bound from
//! the degree, associate testing by exact linear algebra, and a bounded
//! exhaustive search for two-factor factorizations.
//!
//! Nothing here labels an element an atom. A search that finds nothing
//! only means no factorization exists within the search bounds.

use std::collections::HashSet;

use num_integer::Integer;

use crate::algebra::text;
use crate::algebra::{ArithFunc, Coefficient, Degree};
use crate::error::{Error, Result};
use crate::linalg::RowEchelon;

/// `verified` is true exactly when the ⊕-product of `factors` equals `target` in `A_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationCertificate<C: Coefficient> {
    pub target: ArithFunc<C>,
    pub factors: Vec<ArithFunc<C>>,
    pub verified: bool,
}

impl<C: Coefficient> FactorizationCertificate<C> {
    /// Target block, factor blocks, then a `verified:` line.
    pub fn to_text(&self) -> String {
        let mut out = text::to_text(&self.target);
        for f in &self.factors {
            out.push('\n');
            out.push_str(&text::to_text(f));
        }
        out.push_str(&format!("\nverified: {}\n", self.verified));
        out
    }
}

pub fn verify_factorization<C: Coefficient>(
    target: &ArithFunc<C>,
    factors: &[ArithFunc<C>],
) -> Result<FactorizationCertificate<C>> {
    let mut product = ArithFunc::identity(target.bound());
    for f in factors {
        product = product.uconv(f)?;
    }
    Ok(FactorizationCertificate {
        verified: product == *target,
        target: target.clone(),
        factors: factors.to_vec(),
    })
}

/// Upper bound on the number of non-unit factors in any factorization of
/// the non-unit `f`: its degree, since degrees add under ⊕.
pub fn factorization_length_bound<C: Coefficient>(f: &ArithFunc<C>) -> Result<u32> {
    if f.is_unit() {
        return Err(Error::UnitElement);
    }
    match f.degree() {
        Degree::Finite(d) => Ok(d),
        Degree::Undefined => Err(Error::ZeroElement),
    }
}

/// Whether `g = u ⊕ f` for some `u` with `u(1) ≠ 0`, solving for
/// `u(1..N)` exactly.
fn unit_multiple<C: Coefficient>(f: &ArithFunc<C>, g: &ArithFunc<C>) -> bool {
    let bound = f.bound();
    let mut ech = RowEchelon::new(bound + 1);
    for n in 1..=bound {
        let mut row = vec![C::zero(); bound + 1];
        for m in (1..=n).filter(|m| n % m == 0) {
            if m.gcd(&(n / m)) == 1 {
                row[m - 1] = f.get(n / m).clone();
            }
        }
        row[bound] = g.get(n).clone();
        ech.insert(row);
    }
    match ech.solve_augmented() {
        None => false,
        Some(sol) => !sol.particular[0].is_zero() || sol.directions.iter().any(|d| !d[0].is_zero()),
    }
}

/// Associates in the sense `A ⊕ f = A ⊕ g`, tested as two-sided unit
/// divisibility. Dense elimination over `N` unknowns: meant for small bounds.
pub fn is_associate<C: Coefficient>(f: &ArithFunc<C>, g: &ArithFunc<C>) -> Result<bool> {
    if f.bound() != g.bound() {
        return Err(Error::BoundMismatch(f.bound(), g.bound()));
    }
    Ok(unit_multiple(f, g) && unit_multiple(g, f))
}

type Sparse<C> = Vec<(usize, C)>;

fn normalized_key<C: Coefficient>(a: &Sparse<C>) -> String {
    let lead = a[0].1.recip().expect("nonzero coefficients");
    a.iter()
        .map(|(k, c)| format!("{k}:{}", c.mul_ref(&lead).to_text()))
        .collect::<Vec<_>>()
        .join(",")
}

fn assignments<C: Coefficient>(support: &[usize], coeffs: &[C]) -> Vec<Sparse<C>> {
    let mut out: Vec<Sparse<C>> = vec![Vec::new()];
    for &k in support {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                coeffs.iter().map(move |c| {
                    let mut v = prefix.clone();
                    v.push((k, c.clone()));
                    v
                })
            })
            .collect();
    }
    out
}

/// Exhaustive search for `f = a ⊕ b` with `a, b` supported on at most two
/// indices in `[2..support_cap]` and coefficients drawn from `coeff_set`.
/// Pairs equal up to moving scalars between the factors are reported once.
pub fn atom_search<C: Coefficient>(
    f: &ArithFunc<C>,
    support_cap: usize,
    coeff_set: &[C],
) -> Result<Vec<FactorizationCertificate<C>>> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let bound = f.bound();
    let cap = support_cap.min(bound);
    let mut coeffs: Vec<C> = Vec::new();
    for c in coeff_set {
        if !c.is_zero() && !coeffs.contains(c) {
            coeffs.push(c.clone());
        }
    }
    let target: Sparse<C> = f.entries().map(|(n, c)| (n, c.clone())).collect();

    let mut supports: Vec<Vec<usize>> = (2..=cap).map(|s| vec![s]).collect();
    for s in 2..=cap {
        for t in s + 1..=cap {
            supports.push(vec![s, t]);
        }
    }

    let mut seen = HashSet::new();
    let mut found = Vec::new();
    for (si, sa) in supports.iter().enumerate() {
        for sb in &supports[si..] {
            // surviving index products (position in a, position in b, product)
            let products: Vec<(usize, usize, usize)> = sa
                .iter()
                .enumerate()
                .flat_map(|(x, &s)| sb.iter().enumerate().map(move |(y, &t)| (x, y, s, t)))
                .filter(|&(_, _, s, t)| s * t <= bound && s.gcd(&t) == 1)
                .map(|(x, y, s, t)| (x, y, s * t))
                .collect();
            if !target.iter().all(|(n, _)| products.iter().any(|p| p.2 == *n)) {
                continue;
            }
            let mut indices: Vec<usize> = products.iter().map(|p| p.2).collect();
            indices.sort_unstable();
            indices.dedup();
            for a in assignments(sa, &coeffs) {
                for b in assignments(sb, &coeffs) {
                    let matches = indices.iter().all(|&n| {
                        let mut v = C::zero();
                        for &(x, y, _) in products.iter().filter(|p| p.2 == n) {
                            v += &a[x].1.mul_ref(&b[y].1);
                        }
                        v == *f.get(n)
                    });
                    if !matches {
                        continue;
                    }
                    let (ka, kb) = (normalized_key(&a), normalized_key(&b));
                    let key = if ka <= kb { (ka, kb) } else { (kb, ka) };
                    if !seen.insert(key) {
                        continue;
                    }
                    let fa = ArithFunc::from_entries(bound, a.clone())?;
                    let fb = ArithFunc::from_entries(bound, b.clone())?;
                    found.push(verify_factorization(f, &[fa, fb])?);
                }
            }
        }
    }
    Ok(found)
}
