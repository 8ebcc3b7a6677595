//! Growth data `(rho, j)` and quasi-unipotence, with certificates.
//!
//! For a monomial automorphism the growth is read off the exponent-lattice
//! action: `rho` is the spectral radius of the matrix and, in the
//! quasi-unipotent case, `j` is one less than the nilpotency index of
//! `M^k - I` for the smallest suitable `k`. This lattice proxy stands in
//! for the divisor-theoretic growth data of a compactified model; the
//! engine relies only on the consequence it needs, that `rho(M) = 1` is
//! equivalent to finite growth type, and reports `j` as the lattice value.
//! For plane automorphisms the elementary/Henon classification decides
//! everything: elementary maps have `rho = 1` with `j` fitted from the exact
//! degree sequence, Henon maps have `rho` equal to the product of the
//! degrees of the reduced word and `j = 0`.

use crate::automorphism::{MonomialAutomorphism, PlaneAutomorphism, PlaneClass};
use crate::spectral::max_root_modulus;
use crate::unipoly::root_of_unity_orders;
use crate::{rat, AlgebraicReal, Error, IntMat, IntPoly, Rational, Result};
use num_traits::One;
use std::cmp::Ordering;
use std::fmt;

/// Either supported automorphism family.
#[derive(Clone, Debug)]
pub enum Automorphism {
    Monomial(MonomialAutomorphism),
    Plane(PlaneAutomorphism),
}

impl Automorphism {
    pub fn iterate(&self, n: i64) -> Automorphism {
        match self {
            Automorphism::Monomial(s) => Automorphism::Monomial(s.iterate(n)),
            Automorphism::Plane(s) => Automorphism::Plane(s.iterate(n)),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GrowthType {
    Finite,
    Infinite,
}

impl fmt::Display for GrowthType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GrowthType::Finite => write!(f, "finite"),
            GrowthType::Infinite => write!(f, "infinite"),
        }
    }
}

/// Why the reported `(rho, j)` is correct.
#[derive(Clone, Debug)]
pub enum GrowthCertificate {
    /// `M^k - I` is nilpotent with the given index; all eigenvalues are
    /// roots of unity and `rho = 1`.
    Cyclotomic { order: u32, nilpotency_index: u32 },
    /// Isolating interval (carried by `rho`) proving `rho > 1`; `simple`
    /// records that every dominant-modulus eigenvalue is a simple root.
    DominantRoot { simple: bool },
    /// Plane map with degree sequence bounded by `max_degree` over the
    /// sampled range; `rho = 1`.
    BoundedDegrees { max_degree: i64, checked_to: u32 },
}

#[derive(Clone, Debug)]
pub struct GrowthData {
    pub rho: AlgebraicReal,
    pub j: u32,
    pub certificate: GrowthCertificate,
}

impl GrowthData {
    pub fn growth_type(&self) -> GrowthType {
        if self.rho.is_one() {
            GrowthType::Finite
        } else {
            GrowthType::Infinite
        }
    }
}

/// Candidate orders for quasi-unipotence certificates: the lcm-closure of
/// the orders k with phi(k) <= n.
pub fn quasi_unipotence_orders(n: usize) -> Vec<u64> {
    let base = root_of_unity_orders(n);
    let cap: u64 = base.iter().fold(1u64, |acc, &k| num_integer::lcm(acc, k));
    let mut set: Vec<u64> = base;
    loop {
        let mut added = false;
        let snapshot = set.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let l = num_integer::lcm(a, b);
                if l <= cap && !set.contains(&l) {
                    set.push(l);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    set.sort_unstable();
    set
}

/// Certificate that every eigenvalue of `M` is a root of unity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuasiUnipotenceCertificate {
    /// Smallest k >= 1 with `M^k - I` nilpotent.
    pub order: u32,
    /// Smallest e >= 1 with `(M^k - I)^e = 0`.
    pub nilpotency_index: u32,
}

/// Polynomial test: all eigenvalues are roots of unity iff the squarefree
/// characteristic polynomial divides a product of cyclotomic polynomials of
/// the admissible orders.
pub fn has_only_root_of_unity_eigenvalues(m: &IntMat) -> bool {
    let sf = m.char_poly_int().squarefree_primitive();
    let mut cyclo_prod = IntPoly::cyclotomic(1).to_rational();
    for k in root_of_unity_orders(m.nrows()).into_iter().skip(1) {
        cyclo_prod = cyclo_prod.mul(&IntPoly::cyclotomic(k).to_rational());
    }
    let g = sf.to_rational().gcd(&cyclo_prod).to_int_primitive();
    g == sf
}

/// Quasi-unipotence with certificate; `None` when some eigenvalue is not a
/// root of unity.
pub fn is_quasi_unipotent(m: &IntMat) -> Option<QuasiUnipotenceCertificate> {
    assert!(m.is_square());
    let n = m.nrows();
    if !has_only_root_of_unity_eigenvalues(m) {
        return None;
    }
    for k in quasi_unipotence_orders(n) {
        let nk = m.pow(k as u32).sub(&IntMat::identity(n));
        if let Some(e) = nilpotency_index(&nk, n as u32 + 1) {
            return Some(QuasiUnipotenceCertificate {
                order: k as u32,
                nilpotency_index: e,
            });
        }
    }
    // Unreachable for genuine integer matrices: eigenvalue orders divide the
    // lcm cap by the phi bound.
    None
}

/// Smallest e >= 1 with N^e = 0, up to the given cap.
fn nilpotency_index(n: &IntMat, cap: u32) -> Option<u32> {
    let mut p = n.clone();
    for e in 1..=cap {
        if p.is_zero() {
            return Some(e);
        }
        p = p.mul(n);
    }
    if p.is_zero() {
        return Some(cap + 1);
    }
    None
}

/// Growth data for a monomial automorphism, from the exponent-lattice action.
pub fn growth_data_monomial(s: &MonomialAutomorphism) -> Result<GrowthData> {
    let m = s.matrix();
    if let Some(cert) = is_quasi_unipotent(m) {
        return Ok(GrowthData {
            rho: AlgebraicReal::one(),
            j: cert.nilpotency_index - 1,
            certificate: GrowthCertificate::Cyclotomic {
                order: cert.order,
                nilpotency_index: cert.nilpotency_index,
            },
        });
    }
    let rho = crate::spectral::spectral_radius(m);
    debug_assert_eq!(rho.cmp_rational(&Rational::one()), Ordering::Greater);
    // j = 0 when every dominant-modulus eigenvalue is a simple root of the
    // characteristic polynomial; this always holds for 2x2 unimodular
    // matrices, where the two eigenvalue moduli are rho and 1/rho.
    let p = m.char_poly_int();
    let rep = p.to_rational().gcd(&p.to_rational().derivative()).to_int_primitive();
    let simple = if rep.is_constant() {
        true
    } else {
        max_root_modulus(&rep).cmp_alg(&rho) == Ordering::Less
    };
    if !simple {
        return Err(Error::Unsupported(
            "repeated dominant eigenvalue; the polynomial-in-n factor of the growth \
             is not determined by the characteristic polynomial alone"
                .into(),
        ));
    }
    Ok(GrowthData {
        rho,
        j: 0,
        certificate: GrowthCertificate::DominantRoot { simple },
    })
}

/// Growth data for a plane automorphism via the elementary/Henon dichotomy.
pub fn growth_data_plane(s: &PlaneAutomorphism) -> Result<GrowthData> {
    match s.classify() {
        PlaneClass::Elementary { .. } => {
            let checked_to = 12u32;
            let mut max_degree = 1i64;
            for n in 1..=checked_to {
                max_degree = max_degree.max(s.iterate(n as i64).degree());
            }
            // Linear maps act trivially on the divisor class of the ambient
            // plane's compactification; nonlinear bounded-degree maps carry
            // the degree-one polynomial factor.
            let j = if max_degree <= 1 { 0 } else { 1 };
            Ok(GrowthData {
                rho: AlgebraicReal::one(),
                j,
                certificate: GrowthCertificate::BoundedDegrees {
                    max_degree,
                    checked_to,
                },
            })
        }
        PlaneClass::Henon {
            dynamical_degree, ..
        } => Ok(GrowthData {
            rho: AlgebraicReal::from_rational(rat(dynamical_degree as i64)),
            j: 0,
            certificate: GrowthCertificate::DominantRoot { simple: true },
        }),
    }
}

pub fn growth_data(s: &Automorphism) -> Result<GrowthData> {
    match s {
        Automorphism::Monomial(m) => growth_data_monomial(m),
        Automorphism::Plane(p) => growth_data_plane(p),
    }
}

pub fn growth_type(s: &Automorphism) -> Result<GrowthType> {
    Ok(growth_data(s)?.growth_type())
}

/// Dynamical degree of a plane automorphism: 1 for elementary type, the
/// product of the reduced-word degrees for Henon type. Cross-validated
/// against the exact degrees of small powers of the reduced word.
pub fn dynamical_degree(s: &PlaneAutomorphism) -> AlgebraicReal {
    match s.classify() {
        PlaneClass::Elementary { .. } => AlgebraicReal::one(),
        PlaneClass::Henon {
            dynamical_degree: d,
            reduced,
            ..
        } => {
            let mut n = 1u32;
            let mut dn = d;
            // Validate multiplicativity as deep as stays cheap.
            while n < 5 && dn.saturating_mul(d) <= 64 {
                n += 1;
                dn *= d;
            }
            let power = reduced.iterate(n as i64);
            assert_eq!(
                power.degree() as u64,
                dn,
                "reduced Henon word degree growth must be exactly multiplicative"
            );
            AlgebraicReal::from_rational(rat(d as i64))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{AffineFactor, ElementaryFactor, PlaneFactor};
    use crate::RatLaurent;

    fn mono(rows: &[&[i64]]) -> MonomialAutomorphism {
        MonomialAutomorphism::with_trivial_coeffs(IntMat::from_i64(rows).unwrap()).unwrap()
    }

    #[test]
    fn quasi_unipotence_certificates() {
        // shear: k=1, nilpotency index 2
        let cert = is_quasi_unipotent(&IntMat::from_i64(&[&[1, 1], &[0, 1]]).unwrap()).unwrap();
        assert_eq!(cert.order, 1);
        assert_eq!(cert.nilpotency_index, 2);
        // rotation of order 4
        let cert = is_quasi_unipotent(&IntMat::from_i64(&[&[0, -1], &[1, 0]]).unwrap()).unwrap();
        assert_eq!(cert.order, 4);
        assert_eq!(cert.nilpotency_index, 1);
        // Lorenz matrix is not quasi-unipotent
        assert!(is_quasi_unipotent(&IntMat::from_i64(&[&[2, 1], &[1, 1]]).unwrap()).is_none());
    }

    #[test]
    fn orders_closure_for_dim_two() {
        let orders = quasi_unipotence_orders(2);
        assert_eq!(orders, vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn growth_data_examples() {
        // shear -> (1, 1)
        let g = growth_data_monomial(&mono(&[&[1, 1], &[0, 1]])).unwrap();
        assert!(g.rho.is_one());
        assert_eq!(g.j, 1);
        assert_eq!(g.growth_type(), GrowthType::Finite);
        // identity -> (1, 0)
        let g = growth_data_monomial(&MonomialAutomorphism::identity(2)).unwrap();
        assert!(g.rho.is_one());
        assert_eq!(g.j, 0);
        // Lorenz -> rho = (3+sqrt5)/2, j = 0
        let g = growth_data_monomial(&mono(&[&[2, 1], &[1, 1]])).unwrap();
        assert_eq!(g.j, 0);
        assert_eq!(g.growth_type(), GrowthType::Infinite);
        assert_eq!(g.rho.defining_poly().to_string(), "x^2 - 3*x + 1");
        // Jordan -> golden ratio
        let g = growth_data_monomial(&mono(&[&[0, 1], &[1, -1]])).unwrap();
        assert_eq!(g.rho.defining_poly().to_string(), "x^2 - x - 1");
        assert_eq!(g.growth_type(), GrowthType::Infinite);
    }

    #[test]
    fn plane_growth() {
        // Henon (z^2 + 1 - w, z): rho = 2, j = 0
        let z = RatLaurent::var(2, 0);
        let w = RatLaurent::var(2, 1);
        let h = PlaneAutomorphism::from_pair(
            z.pow(2).add(&RatLaurent::one(2)).sub(&w),
            z.clone(),
        )
        .unwrap();
        let g = growth_data_plane(&h).unwrap();
        assert!(g.rho.eq_rational(&rat(2)));
        assert_eq!(g.j, 0);
        assert_eq!(g.growth_type(), GrowthType::Infinite);
        assert!(dynamical_degree(&h).eq_rational(&rat(2)));
        // elementary (z + w^2, w): rho = 1, j = 1
        let e = PlaneAutomorphism::from_word(vec![PlaneFactor::Elementary(
            ElementaryFactor::shear(rat(1), 2),
        )]);
        let g = growth_data_plane(&e).unwrap();
        assert!(g.rho.is_one());
        assert_eq!(g.j, 1);
        // affine translation: rho = 1, j = 0
        let t = PlaneAutomorphism::from_word(vec![PlaneFactor::Affine(
            AffineFactor::new(
                [
                    [rat(1), rat(0)],
                    [rat(0), rat(1)],
                ],
                [rat(1), rat(0)],
            )
            .unwrap(),
        )]);
        let g = growth_data_plane(&t).unwrap();
        assert!(g.rho.is_one());
        assert_eq!(g.j, 0);
    }

    #[test]
    fn dynamical_degree_of_inverse_matches() {
        let z = RatLaurent::var(2, 0);
        let w = RatLaurent::var(2, 1);
        let h = PlaneAutomorphism::from_pair(
            z.pow(2).add(&RatLaurent::one(2)).sub(&w),
            z.clone(),
        )
        .unwrap();
        let d1 = dynamical_degree(&h);
        let d2 = dynamical_degree(&h.inverse());
        assert_eq!(d1, d2);
    }

    #[test]
    fn growth_type_stable_under_powers() {
        for rows in [
            [[2i64, 1], [1, 1]],
            [[1, 1], [0, 1]],
            [[0, 1], [1, 0]],
            [[0, 1], [1, -1]],
        ] {
            let s = mono(&[&rows[0], &rows[1]]);
            let t1 = growth_data_monomial(&s).unwrap().growth_type();
            for m in [2i64, 3] {
                let tm = growth_data_monomial(&s.iterate(m)).unwrap().growth_type();
                assert_eq!(t1, tm);
            }
        }
    }
}
