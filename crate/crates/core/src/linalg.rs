//! Exact Gaussian elimination over a coefficient field.
//!
//! [`RowEchelon`] keeps a matrix in reduced row echelon form while rows are
//! streamed in, so tall systems (one row per index `n ≤ N`) never have to
//! be materialized and elimination can stop as soon as the rank is full.

use crate::algebra::Coefficient;

/// Reduced row echelon form built incrementally.
///
/// Invariants: rows are sorted by pivot column, every pivot entry is 1, and
/// each pivot column is zero in every other row.
#[derive(Debug, Clone)]
pub struct RowEchelon<C> {
    ncols: usize,
    rows: Vec<Vec<C>>,
    pivots: Vec<usize>,
}

/// Solution set `particular + span(directions)` of a linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpace<C> {
    pub particular: Vec<C>,
    pub directions: Vec<Vec<C>>,
}

impl<C: Coefficient> RowEchelon<C> {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    /// Reduces `row` modulo the current row space.
    pub fn reduce(&self, mut row: Vec<C>) -> Vec<C> {
        assert_eq!(row.len(), self.ncols, "row length");
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, y) in row.iter_mut().zip(r).skip(p) {
                if !y.is_zero() {
                    *x -= &factor.mul_ref(y);
                }
            }
        }
        row
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<C>) -> bool {
        let mut row = self.reduce(row);
        let Some(p) = row.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = row[p].recip().expect("nonzero pivot");
        for x in row.iter_mut().skip(p) {
            *x *= &inv;
        }
        for r in &mut self.rows {
            if r[p].is_zero() {
                continue;
            }
            let factor = r[p].clone();
            for (x, y) in r.iter_mut().zip(&row).skip(p) {
                if !y.is_zero() {
                    *x -= &factor.mul_ref(y);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    fn free_columns(&self, upto: usize) -> impl Iterator<Item = usize> + '_ {
        (0..upto).filter(move |c| self.pivots.binary_search(c).is_err())
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<C>> {
        self.kernel_in(self.ncols)
    }

    fn kernel_in(&self, width: usize) -> Vec<Vec<C>> {
        self.free_columns(width)
            .map(|f| {
                let mut v = vec![C::zero(); width];
                v[f] = C::one();
                for (r, &p) in self.rows.iter().zip(&self.pivots) {
                    if p < width {
                        v[p] = -r[f].clone();
                    }
                }
                v
            })
            .collect()
    }

    /// Treats the last column as the right-hand side of `A x = b` and
    /// returns the solution set, or `None` when the system is inconsistent.
    pub fn solve_augmented(&self) -> Option<AffineSpace<C>> {
        let rhs = self.ncols.checked_sub(1)?;
        if self.pivots.last() == Some(&rhs) {
            return None;
        }
        let mut particular = vec![C::zero(); rhs];
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            particular[p] = r[rhs].clone();
        }
        Some(AffineSpace { particular, directions: self.kernel_in(rhs) })
    }
}
