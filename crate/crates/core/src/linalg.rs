//! Dense matrices over the rationals with Gaussian elimination.

use num_rational::Ratio;

pub type Q = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::from_integer(0); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>, cols: usize) -> Self {
        let r = rows.len();
        let data: Vec<Q> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * cols);
        Matrix { rows: r, cols, data }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Q {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    #[cfg(test)]
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Q::from_integer(0) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let zero = Q::from_integer(0);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col) != zero) else {
                continue;
            };
            for c in 0..self.cols {
                self.data.swap(p * self.cols + c, row * self.cols + c);
            }
            let inv = self.get(row, col).recip();
            for c in 0..self.cols {
                let v = self.get(row, c) * inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                let f = self.get(r, col);
                if r != row && f != zero {
                    for c in 0..self.cols {
                        let v = self.get(r, c) - f * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per row of the result.
    pub fn nullspace(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, Q::from_integer(1));
            for (r, &p) in pivots.iter().enumerate() {
                basis.set(k, p, -m.get(r, f));
            }
        }
        basis
    }

    /// Rows spanning `{y : y * self = 0}`.
    pub fn left_nullspace(&self) -> Matrix {
        self.transpose().nullspace()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Q {
        Q::from_integer(v)
    }

    #[test]
    fn rank_and_nullspace() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]], 3);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.rows, 2);
        assert!(m.mul(&ns.transpose()).data.iter().all(|&x| x == q(0)));
        let ln = m.left_nullspace();
        assert_eq!(ln.rows, 1);
        assert!(ln.mul(&m).data.iter().all(|&x| x == q(0)));
    }
}
