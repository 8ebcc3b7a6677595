//! Monomial automorphisms of the n-torus.
//!
//! Convention, fixed once: the automorphism sends the i-th coordinate to
//! `sigma(u_i) = lambda_i * u^(M e_i)` where `M e_i` is the i-th column of
//! the matrix, so on a general monomial `sigma(u^a) = lambda^a * u^(M a)`.
//! On points the induced scheme map is contravariant:
//! `u_i(sigma(p)) = sigma(u_i)(p)`, hence
//! `apply_point(compose(s, t), p) = apply_point(t, apply_point(s, p))`.

use crate::torus::{TorusCoord, TorusPoint};
use crate::unipoly::rat_pow;
use crate::{Error, IntMat, Integer, RatLaurent, Rational, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialAutomorphism {
    matrix: IntMat,
    coeffs: Vec<Rational>,
}

impl MonomialAutomorphism {
    pub fn new(matrix: IntMat, coeffs: Vec<Rational>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::Invalid("automorphism matrix must be square".into()));
        }
        if matrix.nrows() != coeffs.len() {
            return Err(Error::Mismatch(
                "coefficient vector length differs from matrix size".into(),
            ));
        }
        if matrix.det().abs() != Integer::one() {
            return Err(Error::Invalid(format!(
                "matrix determinant {} is not a unit; not a torus automorphism",
                matrix.det()
            )));
        }
        if coeffs.iter().any(|c| c.is_zero()) {
            return Err(Error::Invalid("coefficient scalars must be nonzero".into()));
        }
        Ok(MonomialAutomorphism { matrix, coeffs })
    }

    pub fn with_trivial_coeffs(matrix: IntMat) -> Result<Self> {
        let n = matrix.nrows();
        MonomialAutomorphism::new(matrix, vec![Rational::one(); n])
    }

    pub fn identity(n: usize) -> Self {
        MonomialAutomorphism {
            matrix: IntMat::identity(n),
            coeffs: vec![Rational::one(); n],
        }
    }

    pub fn arity(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntMat::identity(self.arity())
            && self.coeffs.iter().all(|c| c.is_one())
    }

    /// `lambda^a = prod_i lambda_i^(a_i)`.
    pub fn coeff_power(&self, exps: &[i64]) -> Rational {
        let mut acc = Rational::one();
        for (c, &e) in self.coeffs.iter().zip(exps) {
            acc *= rat_pow(c, e);
        }
        acc
    }

    /// Composition `self . other` (apply `other` first as a ring map).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::Mismatch("arity mismatch in composition".into()));
        }
        let matrix = self.matrix.mul(&other.matrix);
        // (s.t)(u_i) = s(lambda^t_i u^(Mt e_i)) = lambda^t_i * lambda^s^(Mt e_i) * u^(Ms Mt e_i)
        let coeffs = (0..self.arity())
            .map(|i| {
                let col: Vec<i64> = (0..self.arity())
                    .map(|j| int_to_i64(&other.matrix[(j, i)]))
                    .collect();
                other.coeffs[i].clone() * self.coeff_power(&col)
            })
            .collect();
        MonomialAutomorphism::new(matrix, coeffs)
    }

    pub fn inverse(&self) -> Self {
        let minv = self
            .matrix
            .inverse_unimodular()
            .expect("automorphism matrices are unimodular");
        let coeffs = (0..self.arity())
            .map(|i| {
                let col: Vec<i64> = (0..self.arity())
                    .map(|j| int_to_i64(&minv[(j, i)]))
                    .collect();
                Rational::one() / self.coeff_power(&col)
            })
            .collect::<Vec<_>>();
        MonomialAutomorphism {
            matrix: minv,
            coeffs,
        }
    }

    /// `sigma^n` for any integer `n`.
    pub fn iterate(&self, n: i64) -> Self {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut acc = MonomialAutomorphism::identity(self.arity());
        for _ in 0..n.unsigned_abs() {
            acc = acc.compose(&base).expect("same arity");
        }
        acc
    }

    /// The ring map on Laurent polynomials.
    pub fn apply_laurent(&self, p: &RatLaurent) -> RatLaurent {
        assert_eq!(p.arity(), self.arity(), "arity mismatch");
        let n = self.arity();
        let mut out = RatLaurent::zero(n);
        for (e, c) in p.terms() {
            let new_exps: Vec<i64> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| int_to_i64(&self.matrix[(i, j)]) * e[j])
                        .sum()
                })
                .collect();
            out.add_term(new_exps, c.clone() * self.coeff_power(e));
        }
        out
    }

    /// The induced point map: `u_i(q) = sigma(u_i)(p)`.
    pub fn apply_point(&self, p: &TorusPoint) -> Result<TorusPoint> {
        if p.arity() != self.arity() {
            return Err(Error::Mismatch("point arity mismatch".into()));
        }
        let n = self.arity();
        let coords = (0..n)
            .map(|i| {
                let mut acc = TorusCoord::one();
                for j in 0..n {
                    acc = acc.mul(&p.coords()[j].pow(int_to_i64(&self.matrix[(j, i)])));
                }
                acc.scale(&self.coeffs[i])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TorusPoint::new(coords))
    }

    /// Accumulated coefficient scalar of `sigma^m` on the monomial `u^a`:
    /// `sigma^m(u^a) = c * u^(M^m a)` with `c = lambda^((I + M + ... + M^(m-1)) a)`.
    pub fn accumulated_coeff(&self, exps: &[i64], m: u32) -> Rational {
        let mut acc = Rational::one();
        let mut cur: Vec<i64> = exps.to_vec();
        for _ in 0..m {
            acc *= self.coeff_power(&cur);
            let n = self.arity();
            cur = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| int_to_i64(&self.matrix[(i, j)]) * cur[j])
                        .sum()
                })
                .collect();
        }
        acc
    }

    /// Exact order of the automorphism, when finite and within the
    /// root-of-unity order bound for the matrix size.
    pub fn order(&self) -> Option<u32> {
        for k in crate::growth::quasi_unipotence_orders(self.arity()) {
            let p = self.iterate(k as i64);
            if p.is_identity() {
                return Some(k as u32);
            }
        }
        None
    }
}

pub(crate) fn int_to_i64(x: &Integer) -> i64 {
    use num_traits::ToPrimitive;
    x.to_i64().expect("matrix entry fits in i64 at desk scale")
}

impl fmt::Display for MonomialAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.arity();
        let names: Vec<String> = (0..n).map(var_name).collect();
        for i in 0..n {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} -> ", names[i])?;
            if !self.coeffs[i].is_one() {
                write!(f, "{}*", self.coeffs[i])?;
            }
            let mut printed = false;
            for j in 0..n {
                let e = int_to_i64(&self.matrix[(j, i)]);
                if e == 0 {
                    continue;
                }
                if printed {
                    write!(f, "*")?;
                }
                write!(f, "{}", names[j])?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
                printed = true;
            }
            if !printed {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn var_name(i: usize) -> String {
    const NAMES: [&str; 4] = ["u", "v", "s", "r"];
    if i < NAMES.len() {
        NAMES[i].to_string()
    } else {
        format!("u{}", i + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn lorenz() -> MonomialAutomorphism {
        MonomialAutomorphism::with_trivial_coeffs(
            IntMat::from_i64(&[&[2, 1], &[1, 1]]).unwrap(),
        )
        .unwrap()
    }

    fn swap() -> MonomialAutomorphism {
        MonomialAutomorphism::with_trivial_coeffs(
            IntMat::from_i64(&[&[0, 1], &[1, 0]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn construction_validates_determinant() {
        assert!(MonomialAutomorphism::with_trivial_coeffs(
            IntMat::from_i64(&[&[2, 0], &[0, 1]]).unwrap()
        )
        .is_err());
        assert!(MonomialAutomorphism::with_trivial_coeffs(
            IntMat::from_i64(&[&[2, 1], &[1, 0]]).unwrap()
        )
        .is_ok());
    }

    #[test]
    fn lorenz_ring_action() {
        // sigma(u) = u^2 v, sigma(v) = u v
        let s = lorenz();
        let u = RatLaurent::var(2, 0);
        let img = s.apply_laurent(&u);
        assert_eq!(img, RatLaurent::monomial(2, rat(1), vec![2, 1]));
        let v = RatLaurent::var(2, 1);
        assert_eq!(s.apply_laurent(&v), RatLaurent::monomial(2, rat(1), vec![1, 1]));
    }

    #[test]
    fn composition_examples() {
        let s = lorenz();
        let sq = s.compose(&s).unwrap();
        assert_eq!(sq.matrix(), &IntMat::from_i64(&[&[5, 3], &[3, 2]]).unwrap());
        let sw = swap();
        assert!(sw.compose(&sw).unwrap().is_identity());
    }

    #[test]
    fn inverse_and_iterate() {
        let s = lorenz();
        let inv = s.inverse();
        assert_eq!(
            inv.matrix(),
            &IntMat::from_i64(&[&[1, -1], &[-1, 2]]).unwrap()
        );
        assert!(s.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&s).unwrap().is_identity());
        let shear = MonomialAutomorphism::with_trivial_coeffs(
            IntMat::from_i64(&[&[1, 1], &[0, 1]]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            shear.iterate(5).matrix(),
            &IntMat::from_i64(&[&[1, 5], &[0, 1]]).unwrap()
        );
        assert_eq!(shear.iterate(0).matrix(), &IntMat::identity(2));
    }

    #[test]
    fn inverse_with_coefficients() {
        let m = IntMat::from_i64(&[&[2, 1], &[1, 1]]).unwrap();
        let s = MonomialAutomorphism::new(m, vec![ratio(2, 3), rat(5)]).unwrap();
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert!(s.inverse().compose(&s).unwrap().is_identity());
    }

    #[test]
    fn point_action_lorenz() {
        let s = lorenz();
        let p = TorusPoint::from_i64(&[-1, -1]).unwrap();
        let q = s.apply_point(&p).unwrap();
        assert_eq!(q, TorusPoint::from_i64(&[-1, 1]).unwrap());
        // fixed point at (1,1)
        let one = TorusPoint::all_ones(2);
        assert_eq!(s.apply_point(&one).unwrap(), one);
    }

    #[test]
    fn point_action_contravariant() {
        let s = lorenz();
        let t = swap();
        let p = TorusPoint::from_rationals(&[ratio(2, 1), ratio(-3, 1)]).unwrap();
        let st = s.compose(&t).unwrap();
        let lhs = st.apply_point(&p).unwrap();
        let rhs = t.apply_point(&s.apply_point(&p).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn swap_on_root_of_unity() {
        let sw = swap();
        let zeta = TorusCoord::root_of_unity(1, 3);
        let p = TorusPoint::new(vec![zeta.clone(), TorusCoord::one()]);
        let q = sw.apply_point(&p).unwrap();
        assert_eq!(q, TorusPoint::new(vec![TorusCoord::one(), zeta]));
    }

    #[test]
    fn orders() {
        assert_eq!(swap().order(), Some(2));
        assert_eq!(lorenz().order(), None);
        let rot = MonomialAutomorphism::with_trivial_coeffs(
            IntMat::from_i64(&[&[0, -1], &[1, 0]]).unwrap(),
        )
        .unwrap();
        assert_eq!(rot.order(), Some(4));
        // scaling has infinite order even with identity matrix
        let scale =
            MonomialAutomorphism::new(IntMat::identity(2), vec![rat(2), rat(1)]).unwrap();
        assert_eq!(scale.order(), None);
    }

    #[test]
    fn accumulated_coefficients() {
        let m = IntMat::from_i64(&[&[0, 1], &[1, 0]]).unwrap();
        let s = MonomialAutomorphism::new(m, vec![rat(2), rat(3)]).unwrap();
        // sigma(u) = 2v, sigma(v) = 3u; sigma^2(u) = 2*3*u -> scalar 6 on u
        assert_eq!(s.accumulated_coeff(&[1, 0], 2), rat(6));
        // on uv: sigma(uv) = 6uv
        assert_eq!(s.accumulated_coeff(&[1, 1], 1), rat(6));
    }
}
