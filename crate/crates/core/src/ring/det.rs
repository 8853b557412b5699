use serde::{Deserialize, Serialize};

use super::Ring;
use crate::error::MatrixError;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut E {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Determinant by Berkowitz's algorithm: only ring additions and
/// multiplications, so it is exact over rings with zero divisors.
///
/// Writing the trailing principal block as `[[a, R], [C, A₁]]`, the
/// characteristic polynomial of the block is `T · χ(A₁)` where `T` is the
/// lower-triangular Toeplitz matrix with first column
/// `1, −a, −RC, −RA₁C, …`. The determinant is `(−1)ⁿ` times the constant
/// coefficient of `χ(A)`.
pub fn det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem, MatrixError> {
    let n = m.rows();
    if n != m.cols() {
        return Err(MatrixError::NotSquare { rows: n, cols: m.cols() });
    }
    if n == 0 {
        return Ok(ring.one());
    }
    let nz: Vec<bool> = m.data.iter().map(|x| !ring.is_zero(x)).collect();
    let at = |i: usize, j: usize| (nz[i * n + j], m.get(i, j));

    // char poly of the 1x1 block at the bottom-right, highest degree first
    let mut v = vec![ring.one(), ring.neg(m.get(n - 1, n - 1))];
    for k in (0..n - 1).rev() {
        let size = n - k - 1; // size of A₁
        let mut col = Vec::with_capacity(size + 2);
        col.push(ring.one());
        col.push(ring.neg(m.get(k, k)));
        // y = A₁^j C, starting from C = column k below the diagonal
        let mut y: Vec<R::Elem> = (k + 1..n).map(|i| m.get(i, k).clone()).collect();
        for j in 0..size {
            let mut rc = ring.zero();
            for (idx, i) in (k + 1..n).enumerate() {
                let (nzr, r) = at(k, i);
                if nzr && !ring.is_zero(&y[idx]) {
                    rc = ring.add(&rc, &ring.mul(r, &y[idx]));
                }
            }
            col.push(ring.neg(&rc));
            if j + 1 < size {
                y = (k + 1..n)
                    .map(|i| {
                        let mut acc = ring.zero();
                        for (idx, jj) in (k + 1..n).enumerate() {
                            let (nza, a) = at(i, jj);
                            if nza && !ring.is_zero(&y[idx]) {
                                acc = ring.add(&acc, &ring.mul(a, &y[idx]));
                            }
                        }
                        acc
                    })
                    .collect();
            }
        }
        // v <- T v, T is (size+2) x (size+1) Toeplitz with first column `col`
        let last_step = k == 0;
        let mut next = Vec::with_capacity(size + 2);
        for i in 0..size + 2 {
            if last_step && i != size + 1 {
                next.push(ring.zero());
                continue;
            }
            let mut acc = ring.zero();
            for j in 0..=i.min(size) {
                let c = &col[i - j];
                if !ring.is_zero(c) && !ring.is_zero(&v[j]) {
                    acc = ring.add(&acc, &ring.mul(c, &v[j]));
                }
            }
            next.push(acc);
        }
        v = next;
    }
    let c0 = v.pop().expect("nonempty");
    Ok(if n % 2 == 0 { c0 } else { ring.neg(&c0) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use num_bigint::BigInt;

    fn ints(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    #[test]
    fn small_integer_determinants() {
        assert_eq!(det(&Integers, &ints(&[])).unwrap(), BigInt::from(1));
        assert_eq!(det(&Integers, &ints(&[&[7]])).unwrap(), BigInt::from(7));
        assert_eq!(det(&Integers, &ints(&[&[1, 2], &[3, 4]])).unwrap(), BigInt::from(-2));
        assert_eq!(det(&Integers, &ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])).unwrap(), BigInt::from(6));
        assert_eq!(det(&Integers, &ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])).unwrap(), BigInt::from(1));
        assert_eq!(det(&Integers, &ints(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn rejects_non_square() {
        let m = Matrix::filled(2, 3, BigInt::from(0));
        assert_eq!(det(&Integers, &m), Err(MatrixError::NotSquare { rows: 2, cols: 3 }));
    }
}
