use std::collections::BTreeMap;

use crate::algebra::{ArithFunc, Coefficient};
use crate::error::{Error, Result};
use crate::numtheory::sieve;

/// Images `γ_{i,j}` of the variables `y_i^{(j)}` (i.e. of `e_{p_i^j}`)
/// under a ring endomorphism. Missing entries are zero images.
///
/// Construction checks `γ_{i,j} ⊕ γ_{i,k} = 0` for every column `i` and
/// all present `j, k`, including `j = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTable<C: Coefficient> {
    bound: usize,
    images: BTreeMap<(usize, u32), ArithFunc<C>>,
}

impl<C: Coefficient> GammaTable<C> {
    pub fn new(bound: usize, images: BTreeMap<(usize, u32), ArithFunc<C>>) -> Result<Self> {
        for (&(i, j), img) in &images {
            if i == 0 || j == 0 {
                return Err(Error::InvalidArgument(format!("table key ({i},{j}) must be positive")));
            }
            if img.bound() != bound {
                return Err(Error::BoundMismatch(bound, img.bound()));
            }
        }
        let mut columns: BTreeMap<usize, Vec<(u32, &ArithFunc<C>)>> = BTreeMap::new();
        for (&(i, j), img) in &images {
            if !img.is_zero() {
                columns.entry(i).or_default().push((j, img));
            }
        }
        for (column, entries) in &columns {
            for (a, &(j, gj)) in entries.iter().enumerate() {
                for &(k, gk) in &entries[a..] {
                    if !gj.uconv(gk)?.is_zero() {
                        return Err(Error::KernelCondition { column: *column, j, k });
                    }
                }
            }
        }
        Ok(Self { bound, images })
    }

    /// Builds a table with an entry for every prime power `p_i^j ≤ limit`.
    ///
    /// Images are dense, so `limit` should cover only the prime powers that
    /// occur in the inputs rather than default to the bound.
    pub fn from_fn(
        bound: usize,
        limit: usize,
        mut image: impl FnMut(usize, u32) -> ArithFunc<C>,
    ) -> Result<Self> {
        let mut images = BTreeMap::new();
        for (t, p) in sieve().primes().take_while(|&p| p <= limit).enumerate() {
            let mut j = 1;
            let mut pj = p;
            while pj <= limit {
                images.insert((t + 1, j), image(t + 1, j));
                j += 1;
                pj *= p;
            }
        }
        Self::new(bound, images)
    }

    /// `γ_{i,j} = e_{p_i^j}` for `p_i^j ≤ limit ≤ bound`: the identity on
    /// functions whose support factors into such prime powers.
    pub fn identity(bound: usize, limit: usize) -> Self {
        let s = sieve();
        Self::from_fn(bound, limit.min(bound), |i, j| {
            ArithFunc::e(s.nth_prime(i).unwrap().pow(j), bound).unwrap()
        })
        .expect("identity table satisfies the kernel condition")
    }

    /// `γ_{i,j} = e_{p_i^{2j}}` for `p_i^j ≤ limit`, zero where `p_i^{2j}`
    /// exceeds the bound.
    pub fn exponent_doubling(bound: usize, limit: usize) -> Self {
        let s = sieve();
        Self::from_fn(bound, limit, |i, j| {
            let p = s.nth_prime(i).unwrap();
            match p.checked_pow(2 * j).filter(|&v| v <= bound) {
                Some(v) => ArithFunc::e(v, bound).unwrap(),
                None => ArithFunc::zero(bound),
            }
        })
        .expect("doubling table satisfies the kernel condition")
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn image(&self, i: usize, j: u32) -> Option<&ArithFunc<C>> {
        self.images.get(&(i, j))
    }

    pub fn images(&self) -> &BTreeMap<(usize, u32), ArithFunc<C>> {
        &self.images
    }

    /// `θ(e_k)`: the ⊕-product of the images of the prime-power parts of `k`.
    pub fn image_of_index(&self, k: usize) -> Result<ArithFunc<C>> {
        let s = sieve();
        let mut acc = ArithFunc::identity(self.bound);
        for &(p, a) in s.factor(k)?.pairs() {
            let i = s.prime_index(p).expect("sieved prime");
            match self.images.get(&(i, a)) {
                Some(g) => acc = acc.uconv(g)?,
                None => return Ok(ArithFunc::zero(self.bound)),
            }
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

/// `θ(f) = Σ_k f(k) θ(e_k)`.
pub fn apply_endomorphism<C: Coefficient>(f: &ArithFunc<C>, table: &GammaTable<C>) -> Result<ArithFunc<C>> {
    if f.bound() != table.bound() {
        return Err(Error::BoundMismatch(f.bound(), table.bound()));
    }
    let mut acc = vec![C::zero(); f.bound()];
    for (k, c) in f.entries() {
        let img = table.image_of_index(k)?;
        for (n, v) in img.entries() {
            acc[n - 1] += &c.mul_ref(v);
        }
    }
    ArithFunc::from_values(acc)
}
