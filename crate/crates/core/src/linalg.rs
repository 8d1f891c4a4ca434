//! Dense matrices over a cyclotomic field, with exact elimination.

use crate::cyclo::CycNumber;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    conductor: u64,
    data: Vec<CycNumber>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, conductor: u64) -> Self {
        Matrix { rows, cols, conductor, data: vec![CycNumber::zero(conductor); rows * cols] }
    }

    pub fn identity(n: usize, conductor: u64) -> Self {
        let mut m = Matrix::zeros(n, n, conductor);
        for i in 0..n {
            m.data[i * n + i] = CycNumber::one(conductor);
        }
        m
    }

    pub fn from_rows(conductor: u64, rows: Vec<Vec<CycNumber>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix rows");
            data.extend(row.into_iter().map(|x| lift(x, conductor)));
        }
        Matrix { rows: r, cols: c, conductor, data }
    }

    pub fn from_ints(conductor: u64, rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            conductor,
            rows.iter().map(|r| r.iter().map(|&v| CycNumber::from_int(conductor, v)).collect()).collect(),
        )
    }

    pub fn scalar(n: usize, c: &CycNumber, conductor: u64) -> Self {
        let mut m = Matrix::zeros(n, n, conductor);
        for i in 0..n {
            m.data[i * n + i] = lift(c.clone(), conductor);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNumber) {
        self.data[i * self.cols + j] = lift(v, self.conductor);
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let m = self.conductor.max(other.conductor);
        let mut out = Matrix::zeros(self.rows, other.cols, m);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, conductor: self.conductor, data }
    }

    pub fn scale(&self, c: &CycNumber) -> Matrix {
        let data = self.data.iter().map(|a| a.mul(c)).collect();
        Matrix { rows: self.rows, cols: self.cols, conductor: self.conductor, data }
    }

    pub fn trace(&self) -> CycNumber {
        (0..self.rows.min(self.cols)).fold(CycNumber::zero(self.conductor), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows, self.conductor);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Kronecker product; row index (i, k) maps to i * other.rows + k.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols, self.conductor.max(other.conductor));
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * cols + j * other.cols + l] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols, self.conductor.max(other.conductor));
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        row_reduce(&mut work, self.rows, self.cols, self.cols).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let w = 2 * n;
        let mut work = Vec::with_capacity(n * w);
        for i in 0..n {
            work.extend(self.data[i * n..(i + 1) * n].iter().cloned());
            for j in 0..n {
                work.push(if i == j { CycNumber::one(self.conductor) } else { CycNumber::zero(self.conductor) });
            }
        }
        let pivots = row_reduce(&mut work, n, w, n);
        if pivots.len() < n {
            return None;
        }
        let mut out = Matrix::zeros(n, n, self.conductor);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + j] = work[i * w + n + j].clone();
            }
        }
        Some(out)
    }

    /// Some solution of `self · x = rhs`, if consistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &[CycNumber]) -> Option<Vec<CycNumber>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length");
        let w = self.cols + 1;
        let mut work = Vec::with_capacity(self.rows * w);
        for i in 0..self.rows {
            work.extend(self.data[i * self.cols..(i + 1) * self.cols].iter().cloned());
            work.push(lift(rhs[i].clone(), self.conductor));
        }
        let pivots = row_reduce(&mut work, self.rows, w, self.cols);
        for r in pivots.len()..self.rows {
            if !work[r * w + self.cols].is_zero() {
                return None;
            }
        }
        let mut x = vec![CycNumber::zero(self.conductor); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = work[r * w + self.cols].clone();
        }
        Some(x)
    }
}

fn lift(x: CycNumber, conductor: u64) -> CycNumber {
    if x.conductor() == conductor {
        x
    } else {
        x.embed(conductor).unwrap_or(x)
    }
}

/// Gauss-Jordan on a row-major buffer, pivoting on the first nonzero entry in
/// each of the first `pivot_cols` columns. Returns the pivot column of each row.
fn row_reduce(work: &mut [CycNumber], rows: usize, cols: usize, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !work[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                work.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = work[r * cols + c].inv().expect("nonzero pivot");
        for j in c..cols {
            if !work[r * cols + j].is_zero() {
                work[r * cols + j] = work[r * cols + j].mul(&inv);
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = work[i * cols + c].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = &work[r * cols + j];
                if !v.is_zero() {
                    let t = f.mul(v);
                    work[i * cols + j] = work[i * cols + j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_rows(
            4,
            vec![
                vec![CycNumber::root(4, 1), CycNumber::one(4)],
                vec![CycNumber::from_int(4, 2), CycNumber::root(4, 3)],
            ],
        );
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2, 4));
    }

    #[test]
    fn singular_rank() {
        let m = Matrix::from_ints(1, &[&[1, 2], &[2, 4]]);
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_none());
        assert!(m.solve(&[CycNumber::from_int(1, 1), CycNumber::from_int(1, 3)]).is_none());
        let x = m.solve(&[CycNumber::from_int(1, 1), CycNumber::from_int(1, 2)]).unwrap();
        assert_eq!(x[0], CycNumber::one(1));
    }

    #[test]
    fn kron_trace_multiplies() {
        let a = Matrix::from_ints(1, &[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(1, &[&[0, 1], &[1, 5]]);
        assert_eq!(a.kron(&b).trace(), a.trace().mul(&b.trace()));
    }
}
