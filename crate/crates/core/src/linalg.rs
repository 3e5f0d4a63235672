//! Dense linear algebra over F_p: row reduction, kernels, solving.
//! Used by the finite-dimensional algebra analysis and for degreewise
//! dimension cross-checks.

use crate::polyring::field::PrimeField;

/// Dense row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub field: PrimeField,
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: PrimeField, rows: Vec<Vec<u64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            debug_assert_eq!(r.len(), ncols);
            data.extend_from_slice(r);
        }
        FpMatrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = FpMatrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn matmul(&self, other: &FpMatrix) -> FpMatrix {
        debug_assert_eq!(self.cols, other.rows);
        let k = self.field;
        let mut out = FpMatrix::zero(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = k.add(out.at(i, j), k.mul(a, other.at(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> u64 {
        debug_assert_eq!(self.rows, self.cols);
        let k = self.field;
        let mut t = 0;
        for i in 0..self.rows {
            t = k.add(t, self.at(i, i));
        }
        t
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let k = self.field;
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pivot_row) = (row..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            self.data.swap_chunks(row, pivot_row, self.cols);
            let inv = k.inv(self.at(row, col));
            for c in col..self.cols {
                let v = k.mul(self.at(row, c), inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.at(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = k.sub(self.at(r, c), k.mul(factor, self.at(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel (vectors v with M v = 0), echelonized.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let k = self.field;
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = k.neg(m.at(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `M x = b`; returns one solution if consistent.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        debug_assert_eq!(b.len(), self.rows);
        let k = self.field;
        let mut aug = FpMatrix::zero(k, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols);
        }
        Some(x)
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<u64> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.split_at_mut(hi * width);
        head[lo * width..(lo + 1) * width].swap_with_slice(&mut tail[..width]);
    }
}

/// Incremental span of F_p vectors: rows kept in echelon form, so
/// membership and dimension queries are cheap and deterministic.
#[derive(Debug, Clone)]
pub struct SpanBuilder {
    field: PrimeField,
    width: usize,
    /// (pivot column, reduced row)
    rows: Vec<(usize, Vec<u64>)>,
}

impl SpanBuilder {
    pub fn new(field: PrimeField, width: usize) -> Self {
        SpanBuilder {
            field,
            width,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current span; the remainder is returned.
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let k = self.field;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for i in 0..self.width {
                    v[i] = k.sub(v[i], k.mul(c, row[i]));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&c| c == 0)
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let k = self.field;
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = k.inv(v[pivot]);
        for c in v.iter_mut() {
            *c = k.mul(*c, inv);
        }
        // keep earlier rows reduced against the new one
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if c != 0 {
                for i in 0..self.width {
                    row[i] = k.sub(row[i], k.mul(c, v[i]));
                }
            }
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    /// Echelonized basis rows.
    pub fn basis(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Coordinates of `v` over the current basis rows, if `v` lies in the
    /// span.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        let k = self.field;
        let mut v = v.to_vec();
        let mut coords = vec![0u64; self.rows.len()];
        for (i, (pivot, row)) in self.rows.iter().enumerate() {
            let c = v[*pivot];
            if c != 0 {
                coords[i] = c;
                for j in 0..self.width {
                    v[j] = k.sub(v[j], k.mul(c, row[j]));
                }
            }
        }
        if v.iter().all(|&c| c == 0) {
            Some(coords)
        } else {
            None
        }
    }
}
