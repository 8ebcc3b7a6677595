//! Dense matrices over a generic scalar, plus the exact integer linear
//! algebra the engine needs: characteristic polynomials (Faddeev-LeVerrier),
//! integer kernels via unimodular column elimination, adjugate inverses,
//! and rational rank.

use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use crate::{Error, IntMat, Integer, IntPoly, RatMat, Rational, Result};
use num_integer::Integer as NumInteger;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn neg(&self) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() * c.clone()
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut acc = T::zero();
        for i in 0..self.rows {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat::from_fn(self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }
}

impl<T: Scalar + FromPrimitive> Mat<T> {
    /// Characteristic polynomial `det(x I - M)` by Faddeev-LeVerrier.
    /// Exact over any ring in which division by 1..=n is exact (integers,
    /// rationals).
    pub fn char_poly(&self) -> UniPoly<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        let mut aux = Mat::identity(n);
        for k in 1..=n {
            let prod = self.mul(&aux);
            let k_scalar = T::from_usize(k).expect("small integer fits scalar");
            let c = -(prod.trace() / k_scalar);
            coeffs[n - k] = c.clone();
            if k < n {
                aux = prod;
                for i in 0..n {
                    aux[(i, i)] = aux[(i, i)].clone() + c.clone();
                }
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Adjugate matrix: `M * adj(M) = det(M) * I`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return self.clone();
        }
        // With p(x) = det(xI - M) = x^n + a_(n-1) x^(n-1) + ... + a_0,
        // Cayley-Hamilton gives adj(M) = (-1)^(n-1) (M^(n-1) + a_(n-1) M^(n-2) + ... + a_1 I).
        let p = self.char_poly();
        let mut acc = Mat::zero(n, n);
        for k in (1..=n).rev() {
            acc = self.mul(&acc);
            let c = p.coeff(k);
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].clone() + c.clone();
            }
        }
        if (n - 1) % 2 == 1 {
            acc = acc.neg();
        }
        acc
    }

    /// Determinant from the characteristic polynomial.
    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        let c = self.char_poly().coeff(0); // det(xI - M) at 0 = (-1)^n det M
        if n % 2 == 1 {
            -c
        } else {
            c
        }
    }
}

impl IntMat {
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> RatMat {
        self.map(|c| Rational::from_integer(c.clone()))
    }

    /// Integer characteristic polynomial.
    pub fn char_poly_int(&self) -> IntPoly {
        self.char_poly()
    }

    /// Max row sum of absolute values (operator infinity norm).
    pub fn norm_inf(&self) -> Integer {
        (0..self.rows)
            .map(|i| {
                let mut acc = Integer::zero();
                for j in 0..self.cols {
                    acc += self[(i, j)].abs();
                }
                acc
            })
            .max()
            .unwrap_or_else(Integer::zero)
    }

    /// Inverse of a matrix with determinant +-1; errors otherwise.
    pub fn inverse_unimodular(&self) -> Result<IntMat> {
        if !self.is_square() {
            return Err(Error::Invalid("inverse of non-square matrix".into()));
        }
        let d = self.det();
        if d.abs() != Integer::one() {
            return Err(Error::Invalid(format!(
                "matrix determinant {d} is not a unit"
            )));
        }
        let adj = self.adjugate();
        Ok(if d == Integer::one() { adj } else { adj.neg() })
    }

    /// Signed integer power; negative exponents require determinant +-1.
    pub fn pow_signed(&self, e: i64) -> Result<IntMat> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse_unimodular()?.pow((-e) as u32))
        }
    }

    /// Unimodular column elimination: returns `(reduced, transform, rank)`
    /// with `self * transform = reduced`, `transform` unimodular, and the
    /// columns of `reduced` beyond the rank all zero.
    pub fn column_reduce_with_transform(&self) -> (IntMat, IntMat, usize) {
        let mut a = self.clone();
        let mut u = IntMat::identity(self.cols);
        let mut pivcol = 0usize;
        for i in 0..self.rows {
            if pivcol >= self.cols {
                break;
            }
            let Some(mut j0) = (pivcol..self.cols).find(|&j| !a[(i, j)].is_zero()) else {
                continue;
            };
            for j in (pivcol..self.cols).filter(|&j| j != j0) {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let x = a[(i, j0)].clone();
                let y = a[(i, j)].clone();
                let eg = x.extended_gcd(&y);
                let (g, s, t) = (eg.gcd, eg.x, eg.y);
                let xq = &x / &g;
                let yq = &y / &g;
                // [col_j0, col_j] <- [col_j0, col_j] * [[s, -yq], [t, xq]], det = 1
                for m in [&mut a, &mut u] {
                    for r in 0..m.nrows() {
                        let c0 = m[(r, j0)].clone();
                        let c1 = m[(r, j)].clone();
                        m[(r, j0)] = &c0 * &s + &c1 * &t;
                        m[(r, j)] = -(&c0 * &yq) + &c1 * &xq;
                    }
                }
            }
            if j0 != pivcol {
                for m in [&mut a, &mut u] {
                    for r in 0..m.nrows() {
                        let tmp = m[(r, j0)].clone();
                        m[(r, j0)] = m[(r, pivcol)].clone();
                        m[(r, pivcol)] = tmp;
                    }
                }
                j0 = pivcol;
            }
            let _ = j0;
            pivcol += 1;
        }
        (a, u, pivcol)
    }

    /// Basis of the lattice `{ a in Z^c : M a = 0 }`.
    ///
    /// The returned vectors form a basis of the full kernel lattice, which
    /// is saturated (a multiple of a vector lies in the kernel only along
    /// with the vector itself).
    pub fn integer_kernel_basis(&self) -> Vec<Vec<Integer>> {
        let (a, u, rank) = self.column_reduce_with_transform();
        let mut basis = Vec::new();
        for j in rank..self.cols {
            debug_assert!((0..self.rows).all(|i| a[(i, j)].is_zero()));
            let mut v = u.column(j);
            normalize_sign(&mut v);
            basis.push(v);
        }
        basis
    }
}

fn normalize_sign(v: &mut [Integer]) {
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in v.iter_mut() {
                *c = -c.clone();
            }
        }
    }
}

impl RatMat {
    /// Rank by Gaussian elimination over the rationals.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0usize;
        let mut row = 0usize;
        for col in 0..cols {
            let Some(piv) = (row..rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                let tmp = m[(piv, j)].clone();
                m[(piv, j)] = m[(row, j)].clone();
                m[(row, j)] = tmp;
            }
            let inv = Rational::one() / m[(row, col)].clone();
            for j in col..cols {
                m[(row, j)] = m[(row, j)].clone() * inv.clone();
            }
            for r in 0..rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for j in col..cols {
                        let v = m[(row, j)].clone() * f.clone();
                        m[(r, j)] = m[(r, j)].clone() - v;
                    }
                }
            }
            row += 1;
            rank += 1;
            if row == rows {
                break;
            }
        }
        rank
    }

    /// Kernel basis over the rationals (columns of the right null space).
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots: Vec<Option<usize>> = vec![None; cols];
        let mut row = 0usize;
        for col in 0..cols {
            let Some(piv) = (row..rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            for j in 0..cols {
                let tmp = m[(piv, j)].clone();
                m[(piv, j)] = m[(row, j)].clone();
                m[(row, j)] = tmp;
            }
            let inv = Rational::one() / m[(row, col)].clone();
            for j in 0..cols {
                m[(row, j)] = m[(row, j)].clone() * inv.clone();
            }
            for r in 0..rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for j in 0..cols {
                        let v = m[(row, j)].clone() * f.clone();
                        m[(r, j)] = m[(r, j)].clone() - v;
                    }
                }
            }
            pivots[col] = Some(row);
            row += 1;
            if row == rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..cols {
            if pivots[free].is_some() {
                continue;
            }
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for col in 0..cols {
                if let Some(r) = pivots[col] {
                    v[col] = -m[(r, free)].clone();
                }
            }
            basis.push(v);
        }
        basis
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> IntMat {
        IntMat::from_i64(&[&[a, b], &[c, d]]).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        // [[2,1],[1,1]] -> x^2 - 3x + 1
        let p = m2(2, 1, 1, 1).char_poly_int();
        assert_eq!(p.to_string(), "x^2 - 3*x + 1");
        // identity -> (x-1)^2
        let p = IntMat::identity(2).char_poly_int();
        assert_eq!(p.to_string(), "x^2 - 2*x + 1");
        // [[0,1],[1,-1]] -> x^2 + x - 1
        let p = m2(0, 1, 1, -1).char_poly_int();
        assert_eq!(p.to_string(), "x^2 + x - 1");
    }

    #[test]
    fn det_and_inverse() {
        let m = m2(2, 1, 1, 1);
        assert_eq!(m.det(), int(1));
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(inv, m2(1, -1, -1, 2));
        assert_eq!(m.mul(&inv), IntMat::identity(2));
        let m = m2(2, 1, 1, 0);
        assert_eq!(m.det(), int(-1));
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(m.mul(&inv), IntMat::identity(2));
    }

    #[test]
    fn kernel_examples() {
        // [[-1,1],[1,-1]] -> {(1,1)}
        let k = m2(-1, 1, 1, -1).integer_kernel_basis();
        assert_eq!(k, vec![vec![int(1), int(1)]]);
        // identity -> empty
        assert!(IntMat::identity(2).integer_kernel_basis().is_empty());
        // [[0,1],[0,0]] -> {(1,0)}
        let k = m2(0, 1, 0, 0).integer_kernel_basis();
        assert_eq!(k, vec![vec![int(1), int(0)]]);
    }

    #[test]
    fn kernel_vectors_satisfy_equation_and_primitivity() {
        let m = IntMat::from_i64(&[&[2, 4, 6], &[1, 2, 3]]).unwrap();
        let basis = m.integer_kernel_basis();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let mv = m.mul_vec(v);
            assert!(mv.iter().all(|c| c.is_zero()));
            let mut g = Integer::zero();
            for c in v {
                g = g.gcd(c);
            }
            assert_eq!(g, int(1));
        }
    }

    #[test]
    fn rational_rank() {
        let m = m2(1, 2, 2, 4).to_rational();
        assert_eq!(m.rank(), 1);
        let m = m2(1, 0, 0, 1).to_rational();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn signed_power() {
        let m = m2(1, 1, 0, 1);
        assert_eq!(m.pow_signed(5).unwrap(), m2(1, 5, 0, 1));
        assert_eq!(m.pow_signed(-2).unwrap(), m2(1, -2, 0, 1));
        assert_eq!(m.pow_signed(0).unwrap(), IntMat::identity(2));
    }
}
