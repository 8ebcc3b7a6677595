//! Sublattices of Z^n given by explicit bases.

use crate::{IntMat, Integer, Rational, Result};
use num_traits::{One, Zero};

/// A basis of a sublattice of `Z^dim`.
///
/// The vectors are Z-linearly independent and generate a primitive (saturated)
/// sublattice: obtained from integer kernels, the lattice equals its
/// saturation, so dividing a member by an integer never leaves the lattice.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeBasis {
    dim: usize,
    vectors: Vec<Vec<Integer>>,
}

impl LatticeBasis {
    pub fn empty(dim: usize) -> Self {
        LatticeBasis {
            dim,
            vectors: Vec::new(),
        }
    }

    pub fn new(dim: usize, vectors: Vec<Vec<Integer>>) -> Result<Self> {
        for v in &vectors {
            if v.len() != dim {
                return Err(crate::Error::Invalid(
                    "basis vector arity mismatch".into(),
                ));
            }
        }
        let basis = LatticeBasis { dim, vectors };
        if basis.rank_check() {
            Ok(basis)
        } else {
            Err(crate::Error::Invalid(
                "basis vectors are linearly dependent".into(),
            ))
        }
    }

    /// Kernel lattice `{ a : M a = 0 }` of an integer matrix.
    pub fn kernel_of(m: &IntMat) -> Self {
        LatticeBasis {
            dim: m.ncols(),
            vectors: m.integer_kernel_basis(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<Integer>] {
        &self.vectors
    }

    fn rank_check(&self) -> bool {
        if self.vectors.is_empty() {
            return true;
        }
        let m = IntMat::from_rows(self.vectors.clone()).expect("checked arity");
        m.to_rational().rank() == self.vectors.len()
    }

    /// Membership of an integer vector in the lattice spanned by the basis.
    pub fn contains(&self, v: &[Integer]) -> bool {
        if v.len() != self.dim {
            return false;
        }
        if v.iter().all(|c| c.is_zero()) {
            return true;
        }
        if self.vectors.is_empty() {
            return false;
        }
        // Solve B^T x = v over Q and require an integral solution.
        let cols = self.vectors.len();
        let bt = crate::RatMat::from_fn(self.dim, cols, |i, j| {
            Rational::from_integer(self.vectors[j][i].clone())
        });
        let rhs: Vec<Rational> = v.iter().map(|c| Rational::from_integer(c.clone())).collect();
        match solve(&bt, &rhs) {
            Some(x) => x.iter().all(|c| c.denom().is_one()),
            None => false,
        }
    }
}

/// Solve `A x = b` over the rationals; `None` when inconsistent. When the
/// solution space is positive-dimensional, returns one solution with free
/// variables set to zero.
pub fn solve(a: &crate::RatMat, b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.nrows();
    let cols = a.ncols();
    assert_eq!(rows, b.len());
    let mut m = crate::RatMat::from_fn(rows, cols + 1, |i, j| {
        if j < cols {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let mut pivots: Vec<Option<usize>> = vec![None; cols];
    let mut row = 0usize;
    for col in 0..cols {
        let Some(piv) = (row..rows).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        for j in 0..=cols {
            let tmp = m[(piv, j)].clone();
            m[(piv, j)] = m[(row, j)].clone();
            m[(row, j)] = tmp;
        }
        let inv = Rational::one() / m[(row, col)].clone();
        for j in 0..=cols {
            m[(row, j)] = m[(row, j)].clone() * inv.clone();
        }
        for r in 0..rows {
            if r != row && !m[(r, col)].is_zero() {
                let f = m[(r, col)].clone();
                for j in 0..=cols {
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
    // Inconsistent when a zero row has nonzero rhs.
    for r in row..rows {
        if !m[(r, cols)].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); cols];
    for col in 0..cols {
        if let Some(r) = pivots[col] {
            x[col] = m[(r, cols)].clone();
        }
    }
    Some(x)
}

impl LatticeBasis {
    /// Saturation probe used by tests: if `p * w` is in the lattice then so
    /// is `w`, for the given prime `p`.
    pub fn saturated_at(&self, p: i64, w: &[Integer]) -> bool {
        let scaled: Vec<Integer> = w.iter().map(|c| c * Integer::from(p)).collect();
        !self.contains(&scaled) || self.contains(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    #[test]
    fn membership_and_saturation() {
        let basis = LatticeBasis::new(2, vec![vec![int(1), int(1)]]).unwrap();
        assert!(basis.contains(&[int(2), int(2)]));
        assert!(!basis.contains(&[int(1), int(0)]));
        assert!(basis.saturated_at(3, &[int(1), int(1)]));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = crate::IntMat::from_i64(&[&[1, 1], &[0, 1]])
            .unwrap()
            .to_rational();
        let b = vec![crate::rat(3), crate::rat(1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![crate::rat(2), crate::rat(1)]);
        let a = crate::IntMat::from_i64(&[&[1, 1], &[1, 1]])
            .unwrap()
            .to_rational();
        let b = vec![crate::rat(0), crate::rat(1)];
        assert!(solve(&a, &b).is_none());
    }
}
