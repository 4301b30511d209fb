//! Small dense matrices over exact rationals.
//!
//! Only what the representation theory needs: multiplication, stacking,
//! rank, and the projection onto a cokernel. Dimensions here are tiny
//! (tens), so plain Gaussian elimination with `BigRational` entries is the
//! right tool; floats would change answers.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Rat = BigRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    #[cfg(test)]
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Mat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, Rat::from_integer(v.into()));
            }
        }
        m
    }

    #[cfg(test)]
    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a * b);
                    }
                }
            }
        }
        out
    }

    /// Stack matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[&Mat]) -> Mat {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Mat::zeros(rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.cols, cols, "shape mismatch in vstack");
            for i in 0..m.rows {
                for j in 0..cols {
                    out.set(off + i, j, m.get(i, j).clone());
                }
            }
            off += m.rows;
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (r, c) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..c {
            if rank == r {
                break;
            }
            let pivot = (rank..r).find(|&i| !a[i * c + col].is_zero());
            let Some(p) = pivot else { continue };
            a.swap_chunks(p, rank, c);
            let inv = a[rank * c + col].clone();
            for j in 0..c {
                a[rank * c + j] = &a[rank * c + j] / &inv;
            }
            for i in 0..r {
                if i != rank && !a[i * c + col].is_zero() {
                    let f = a[i * c + col].clone();
                    for j in 0..c {
                        let sub = &f * &a[rank * c + j];
                        a[i * c + j] = &a[i * c + j] - sub;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// A surjection `pi` from the row space onto the quotient by the column
    /// span of `self`: `pi` has shape `(rows - rank) x rows` and its kernel
    /// is exactly the column space.
    pub fn cokernel_projection(&self) -> Mat {
        // reduced column echelon form of self
        let mut a = self.data.clone();
        let (r, c) = (self.rows, self.cols);
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, echelon col)
        let mut lead = 0usize;
        for row in 0..r {
            if lead == c {
                break;
            }
            let pivot = (lead..c).find(|&j| !a[row * c + j].is_zero());
            let Some(p) = pivot else { continue };
            // swap columns p and lead
            if p != lead {
                for i in 0..r {
                    a.swap(i * c + p, i * c + lead);
                }
            }
            let inv = a[row * c + lead].clone();
            for i in 0..r {
                a[i * c + lead] = &a[i * c + lead] / &inv;
            }
            for j in 0..c {
                if j != lead && !a[row * c + j].is_zero() {
                    let f = a[row * c + j].clone();
                    for i in 0..r {
                        let sub = &f * &a[i * c + lead];
                        a[i * c + j] = &a[i * c + j] - sub;
                    }
                }
            }
            pivots.push((row, lead));
            lead += 1;
        }
        let rank = pivots.len();
        let pivot_rows: Vec<usize> = pivots.iter().map(|&(row, _)| row).collect();
        let nonpivot_rows: Vec<usize> =
            (0..r).filter(|row| !pivot_rows.contains(row)).collect();
        let mut pi = Mat::zeros(r - rank, r);
        for (t, &nr) in nonpivot_rows.iter().enumerate() {
            pi.set(t, nr, Rat::one());
            for &(prow, pcol) in &pivots {
                let v = -a[nr * c + pcol].clone();
                pi.set(t, prow, v);
            }
        }
        debug_assert!({
            let prod = pi.mul(self);
            prod.data.iter().all(|v| v.is_zero())
        });
        pi
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<Rat> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for j in 0..width {
            self.swap(a * width + j, b * width + j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_simple_matrices() {
        let m = Mat::from_int_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
        let m = Mat::from_int_rows(&[vec![1, 0], vec![0, 1]]);
        assert_eq!(m.rank(), 2);
        let m = Mat::zeros(3, 2);
        assert_eq!(m.rank(), 0);
        let m = Mat::zeros(0, 5);
        assert_eq!(m.rank(), 0);
    }

    #[test]
    fn cokernel_projection_kills_the_column_space() {
        let m = Mat::from_int_rows(&[vec![1, 0], vec![1, 1], vec![0, 2]]);
        let pi = m.cokernel_projection();
        assert_eq!(pi.rows, 1);
        assert_eq!(pi.cols, 3);
        assert_eq!(pi.rank(), 1);

        // full column span: trivial quotient
        let m = Mat::identity(2);
        let pi = m.cokernel_projection();
        assert_eq!(pi.rows, 0);

        // zero map: quotient is everything
        let m = Mat::zeros(2, 1);
        let pi = m.cokernel_projection();
        assert_eq!(pi.rows, 2);
        assert_eq!(pi.rank(), 2);
    }

    #[test]
    fn multiplication_shapes() {
        let a = Mat::from_int_rows(&[vec![1, 2, 3]]);
        let b = Mat::from_int_rows(&[vec![1], vec![0], vec![-1]]);
        let c = a.mul(&b);
        assert_eq!((c.rows, c.cols), (1, 1));
        assert_eq!(c.get(0, 0), &Rat::from_integer((-2).into()));
    }
}
