//! Exact integer linear algebra: left kernels of integer matrices via
//! unimodular row reduction. All arithmetic is checked; overflow surfaces
//! as [`Error::Overflow`] instead of wrapping.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub(crate) struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols);
            data.extend(row);
        }
        IntMatrix { rows: nrows, cols: ncols, data }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: i64) -> Result<()> {
        for c in 0..self.cols {
            let delta = q.checked_mul(self.at(src, c)).ok_or(Error::Overflow)?;
            let v = self.at(dst, c).checked_sub(delta).ok_or(Error::Overflow)?;
            self.set(dst, c, v);
        }
        Ok(())
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let (x, y) = (self.at(a, c), self.at(b, c));
            self.set(a, c, y);
            self.set(b, c, x);
        }
    }

    fn row_negate(&mut self, r: usize) -> Result<()> {
        for c in 0..self.cols {
            let v = self.at(r, c).checked_neg().ok_or(Error::Overflow)?;
            self.set(r, c, v);
        }
        Ok(())
    }
}

/// Integral basis of the left kernel `{v : v^T M = 0}`.
///
/// The kernel of an integer matrix is a saturated sublattice, so rows of a
/// unimodular transform that zero out the matrix form a genuine Z-basis.
/// The basis is returned in row Hermite normal form: positive pivots in
/// strictly increasing columns, entries above each pivot reduced into
/// `[0, pivot)`, which makes it canonical.
pub(crate) fn left_kernel(m: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    let n = m.rows;
    let mut a = m.clone();
    let mut u = identity(n);

    let mut pivot_row = 0;
    for col in 0..a.cols {
        loop {
            // rows still in play with a non-zero entry in this column
            let mut live: Vec<usize> =
                (pivot_row..n).filter(|&r| a.at(r, col) != 0).collect();
            match live.len() {
                0 => break,
                1 => {
                    let r = live[0];
                    a.row_swap(pivot_row, r);
                    u.row_swap(pivot_row, r);
                    if a.at(pivot_row, col) < 0 {
                        a.row_negate(pivot_row)?;
                        u.row_negate(pivot_row)?;
                    }
                    pivot_row += 1;
                    break;
                }
                _ => {
                    // reduce everything by the row of least magnitude; each
                    // pass strictly shrinks the column, so this terminates
                    live.sort_by_key(|&r| a.at(r, col).unsigned_abs());
                    let best = live[0];
                    for &r in &live[1..] {
                        let q = a.at(r, col) / a.at(best, col);
                        debug_assert_ne!(q, 0);
                        a.row_axpy(r, best, q)?;
                        u.row_axpy(r, best, q)?;
                    }
                }
            }
        }
    }

    let kernel: Vec<Vec<i64>> = (pivot_row..n)
        .map(|r| (0..u.cols).map(|c| u.at(r, c)).collect())
        .collect();
    debug_assert!((pivot_row..n).all(|r| (0..a.cols).all(|c| a.at(r, c) == 0)));
    hermite_rows(kernel)
}

/// In-place row Hermite normal form of a set of linearly independent rows.
fn hermite_rows(rows: Vec<Vec<i64>>) -> Result<Vec<Vec<i64>>> {
    if rows.is_empty() {
        return Ok(rows);
    }
    let width = rows[0].len();
    let mut m = IntMatrix::from_rows(rows);
    let n = m.rows;
    let mut pivot_row = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..width {
        loop {
            let mut live: Vec<usize> =
                (pivot_row..n).filter(|&r| m.at(r, col) != 0).collect();
            match live.len() {
                0 => break,
                1 => {
                    let r = live[0];
                    m.row_swap(pivot_row, r);
                    if m.at(pivot_row, col) < 0 {
                        m.row_negate(pivot_row)?;
                    }
                    // clear the entries above into [0, pivot)
                    let piv = m.at(pivot_row, col);
                    for r_above in 0..pivot_row {
                        let q = m.at(r_above, col).div_euclid(piv);
                        if q != 0 {
                            m.row_axpy(r_above, pivot_row, q)?;
                        }
                    }
                    pivots.push((pivot_row, col));
                    pivot_row += 1;
                    break;
                }
                _ => {
                    live.sort_by_key(|&r| m.at(r, col).unsigned_abs());
                    let best = live[0];
                    for &r in &live[1..] {
                        let q = m.at(r, col) / m.at(best, col);
                        debug_assert_ne!(q, 0);
                        m.row_axpy(r, best, q)?;
                    }
                }
            }
        }
    }
    debug_assert_eq!(pivot_row, n, "rows were not linearly independent");
    Ok((0..n).map(|r| (0..width).map(|c| m.at(r, c)).collect()).collect())
}

fn identity(n: usize) -> IntMatrix {
    let mut m = IntMatrix { rows: n, cols: n, data: vec![0; n * n] };
    for i in 0..n {
        m.set(i, i, 1);
    }
    m
}
