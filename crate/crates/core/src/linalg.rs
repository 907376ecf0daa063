//! Reduced row echelon form over `F_p` with a caller-chosen column priority.

use crate::ring::RingContext;

/// A subspace of `F_p^N` kept in reduced row echelon form.
///
/// `order` lists column indices from most to least significant; a row's pivot
/// is its first nonzero column in that order, normalized to 1, and every other
/// row is zero in that column. The RREF of a subspace is unique for a given
/// order, so two `Echelon`s with the same order are equal iff their spaces are.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    ctx: RingContext,
    order: Vec<usize>,
    rank_of: Vec<usize>,
    /// (pivot column, row), sorted by the pivot's position in `order`.
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    pub fn new(ctx: RingContext, order: Vec<usize>) -> Self {
        let mut rank_of = vec![0; order.len()];
        for (r, &c) in order.iter().enumerate() {
            rank_of[c] = r;
        }
        Self {
            ctx,
            order,
            rank_of,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[u32])> {
        self.rows.iter().map(|(c, r)| (*c, r.as_slice()))
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                self.axpy(&mut v, self.ctx.fp_neg(c), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span. Returns false if it was already there.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut v = self.reduce(v);
        let Some(pivot) = self.order.iter().copied().find(|&c| v[c] != 0) else {
            return false;
        };
        let inv = self.ctx.fp_inv(v[pivot]);
        for x in v.iter_mut() {
            *x = self.ctx.fp_mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                let factor = self.ctx.fp_neg(c);
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = self.ctx.fp_add(*x, self.ctx.fp_mul(factor, y));
                }
            }
        }
        let at = self
            .rows
            .partition_point(|(c, _)| self.rank_of[*c] < self.rank_of[pivot]);
        self.rows.insert(at, (pivot, v));
        true
    }

    fn axpy(&self, v: &mut [u32], a: u32, row: &[u32]) {
        for (x, &y) in v.iter_mut().zip(row) {
            if y != 0 {
                *x = self.ctx.fp_add(*x, self.ctx.fp_mul(a, y));
            }
        }
    }

    /// Same space, re-echelonized under another column order.
    pub fn reordered(&self, order: Vec<usize>) -> Self {
        let mut out = Self::new(self.ctx, order);
        for (_, row) in &self.rows {
            out.insert(row);
        }
        out
    }

    /// Rows as a matrix, for structural comparison.
    pub fn basis(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }
}
