//! Dense matrices over a finite field.

use super::field::FiniteField;
use super::poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<u32>),
    /// Consistent with a kernel of the given dimension.
    Underdetermined(usize),
    Inconsistent,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.concat() }
    }

    pub fn from_columns(cols: &[Vec<u32>]) -> Self {
        let rows = cols.first().map_or(0, |c| c.len());
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged columns");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul<F: FiniteField>(&self, f: &F, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec<F: FiniteField>(&self, f: &F, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let mut out = vec![0; self.rows];
        for (j, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.data[i * self.cols + j];
                if a != 0 {
                    *o = f.add(*o, f.mul(a, x));
                }
            }
        }
        out
    }

    pub fn add<F: FiniteField>(&self, f: &F, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref<F: FiniteField>(&self, f: &F) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(v, inv));
            }
            let pivot_row: Vec<u32> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    if pivot_row[j] != 0 {
                        let v = m.get(i, j);
                        m.set(i, j, f.sub(v, f.mul(factor, pivot_row[j])));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank<F: FiniteField>(&self, f: &F) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel<F: FiniteField>(&self, f: &F) -> Vec<Vec<u32>> {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0; self.cols];
                v[fc] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, fc));
                }
                v
            })
            .collect()
    }

    pub fn solve<F: FiniteField>(&self, f: &F, b: &[u32]) -> Solution {
        assert_eq!(b.len(), self.rows, "shape mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return Solution::Inconsistent;
        }
        if pivots.len() < self.cols {
            return Solution::Underdetermined(self.cols - pivots.len());
        }
        Solution::Unique((0..self.cols).map(|i| r.get(i, self.cols)).collect())
    }

    pub fn inverse<F: FiniteField>(&self, f: &F) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn det<F: FiniteField>(&self, f: &F) -> u32 {
        let cp = self.charpoly(f);
        // charpoly(0) = (−1)^n det
        if self.rows % 2 == 0 { cp[0] } else { f.neg(cp[0]) }
    }

    pub fn trace<F: FiniteField>(&self, f: &F) -> u32 {
        (0..self.rows).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }

    /// Monic `det(x·I − A)`, lowest degree first.  Hessenberg reduction
    /// followed by the standard determinant recurrence.
    pub fn charpoly<F: FiniteField>(&self, f: &F) -> Vec<u32> {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(p) = (j + 1..n).find(|&i| h.get(i, j) != 0) else {
                continue;
            };
            if p != j + 1 {
                for c in 0..n {
                    h.data.swap(p * n + c, (j + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + p, r * n + j + 1);
                }
            }
            let piv_inv = f.inv(h.get(j + 1, j)).expect("pivot");
            for k in j + 2..n {
                let u = f.mul(h.get(k, j), piv_inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h.get(k, c), f.mul(u, h.get(j + 1, c)));
                    h.set(k, c, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, j + 1), f.mul(u, h.get(r, k)));
                    h.set(r, j + 1, v);
                }
            }
        }
        let mut p: Vec<Vec<u32>> = vec![vec![1]];
        for m in 1..=n {
            let mut next = poly::mul(f, &[f.neg(h.get(m - 1, m - 1)), 1], &p[m - 1]);
            let mut t = 1;
            for i in (1..m).rev() {
                t = f.mul(t, h.get(i, i - 1));
                let coef = f.mul(h.get(i - 1, m - 1), t);
                if coef != 0 {
                    next = poly::sub(f, &next, &poly::scale(f, &p[i - 1], coef));
                }
            }
            p.push(next);
        }
        let mut out = p.pop().expect("nonempty");
        out.resize(n + 1, 0);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Fq;

    fn det3<F: FiniteField>(f: &F, m: &Matrix) -> u32 {
        let g = |i, j| m.get(i, j);
        let t1 = f.mul(g(0, 0), f.sub(f.mul(g(1, 1), g(2, 2)), f.mul(g(1, 2), g(2, 1))));
        let t2 = f.mul(g(0, 1), f.sub(f.mul(g(1, 0), g(2, 2)), f.mul(g(1, 2), g(2, 0))));
        let t3 = f.mul(g(0, 2), f.sub(f.mul(g(1, 0), g(2, 1)), f.mul(g(1, 1), g(2, 0))));
        f.add(f.sub(t1, t2), t3)
    }

    #[test]
    fn charpoly_against_cofactor_expansion() {
        let f = Fq::of_order(7).unwrap();
        let mut seed = 12345u64;
        for _ in 0..300 {
            let data: Vec<u32> = (0..9)
                .map(|_| {
                    seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((seed >> 33) % 7) as u32
                })
                .collect();
            let m = Matrix { rows: 3, cols: 3, data };
            let cp = m.charpoly(&f);
            // evaluate det(xI − A) at every x directly
            for x in 0..7 {
                let mut xm = m.clone();
                for i in 0..3 {
                    for j in 0..3 {
                        let v = if i == j { f.sub(x, m.get(i, j)) } else { f.neg(m.get(i, j)) };
                        xm.set(i, j, v);
                    }
                }
                assert_eq!(poly::eval(&f, &cp, x), det3(&f, &xm));
            }
            assert_eq!(m.det(&f), det3(&f, &m));
        }
    }

    #[test]
    fn kernel_and_solve() {
        let f = Fq::of_order(5).unwrap();
        let a = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 0]]);
        let ker = a.kernel(&f);
        assert_eq!(ker.len(), 1);
        assert!(a.mul_vec(&f, &ker[0]).iter().all(|&x| x == 0));
        assert_eq!(a.solve(&f, &[1, 2]), Solution::Underdetermined(1));
        let b = Matrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(b.solve(&f, &[1, 3]), Solution::Inconsistent);
        let c = Matrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(c.solve(&f, &[3, 1]), Solution::Unique(vec![2, 1]));
        let ci = c.inverse(&f).unwrap();
        assert_eq!(c.mul(&f, &ci), Matrix::identity(2));
    }
}
