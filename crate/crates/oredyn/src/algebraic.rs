//! Real algebraic numbers as an integer defining polynomial plus an
//! isolating rational interval.
//!
//! Comparisons are exact: sign evaluation of the defining polynomial at
//! rational points, Sturm counts, interval refinement, and gcds for equality
//! detection. No floating point anywhere.

use crate::unipoly::UniPoly;
use crate::{rat, Error, IntPoly, Rational, Result};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A real algebraic number.
///
/// Invariant: `poly` is squarefree, primitive, with positive leading
/// coefficient, and has exactly one real root in `[lo, hi]`. Either
/// `lo == hi` (the number is the rational `lo`, a root of `poly`), or
/// `lo < hi` with `poly` nonzero at both endpoints and changing sign.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicReal {
    pub fn from_rational(r: Rational) -> Self {
        let poly = UniPoly::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicReal {
            poly,
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn zero() -> Self {
        AlgebraicReal::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        AlgebraicReal::from_rational(Rational::one())
    }

    /// Build from a defining polynomial and an isolating interval; validated.
    pub fn from_root(poly: &IntPoly, lo: Rational, hi: Rational) -> Result<Self> {
        let sf = poly.squarefree_primitive();
        if sf.is_zero() || sf.is_constant() {
            return Err(Error::Invalid("defining polynomial has no roots".into()));
        }
        if lo == hi {
            if sf.sign_at(&lo) != 0 {
                return Err(Error::Invalid(
                    "point interval is not a root of the polynomial".into(),
                ));
            }
            return Ok(AlgebraicReal { poly: sf, lo, hi });
        }
        if lo > hi {
            return Err(Error::Invalid("empty isolating interval".into()));
        }
        // A rational root may sit at an endpoint; nudge inward is not allowed,
        // so reject and let callers isolate properly.
        if sf.sign_at(&lo) == 0 || sf.sign_at(&hi) == 0 {
            return Err(Error::Invalid(
                "isolating interval endpoint is a root".into(),
            ));
        }
        let chain = sf.sturm_chain();
        if IntPoly::sturm_count(&chain, &lo, &hi) != 1 {
            return Err(Error::Invalid(
                "interval does not isolate exactly one root".into(),
            ));
        }
        Ok(AlgebraicReal { poly: sf, lo, hi })
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> (Rational, Rational) {
        (self.lo.clone(), self.hi.clone())
    }

    /// The exact rational value, when the number is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.lo == self.hi {
            Some(self.lo.clone())
        } else {
            None
        }
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    /// One bisection step; point intervals are untouched.
    fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = (self.lo.clone() + self.hi.clone()) / rat(2);
        match self.poly.sign_at(&mid) {
            0 => {
                self.lo = mid.clone();
                self.hi = mid;
            }
            s => {
                if s == self.poly.sign_at(&self.lo) {
                    self.lo = mid;
                } else {
                    self.hi = mid;
                }
            }
        }
    }

    /// Shrink the isolating interval until its width is at most `width`.
    pub fn refined_interval(&self, width: &Rational) -> (Rational, Rational) {
        let mut a = self.clone();
        while a.lo != a.hi && (a.hi.clone() - a.lo.clone()) > *width {
            a.bisect();
        }
        (a.lo, a.hi)
    }

    /// Exact comparison against a rational number.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if self.lo == self.hi {
            return self.lo.cmp(q);
        }
        if *q <= self.lo {
            return Ordering::Greater;
        }
        if *q >= self.hi {
            return Ordering::Less;
        }
        match self.poly.sign_at(q) {
            0 => Ordering::Equal,
            s => {
                // Root lies on the side of q where the sign change persists.
                if s == self.poly.sign_at(&self.lo) {
                    // sign at q matches sign at lo: root in (q, hi)
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }

    /// Exact comparison of two algebraic reals.
    pub fn cmp_alg(&self, other: &Self) -> Ordering {
        if let Some(r) = self.as_rational() {
            return other.cmp_rational(&r).reverse();
        }
        if let Some(r) = other.as_rational() {
            return self.cmp_rational(&r);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        for _ in 0..100_000 {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            if let Some(r) = a.as_rational() {
                return b.cmp_rational(&r).reverse();
            }
            if let Some(r) = b.as_rational() {
                return a.cmp_rational(&r);
            }
            // Overlapping open intervals. An endpoint of one may be the root
            // of the other; that root is then rational.
            fn collapse_at_endpoints(x: &mut AlgebraicReal, e0: Rational, e1: Rational) -> bool {
                for e in [e0, e1] {
                    if e > x.lo && e < x.hi && x.poly.sign_at(&e) == 0 {
                        x.lo = e.clone();
                        x.hi = e;
                        return true;
                    }
                }
                false
            }
            if collapse_at_endpoints(&mut a, b.lo.clone(), b.hi.clone())
                || collapse_at_endpoints(&mut b, a.lo.clone(), a.hi.clone())
            {
                continue;
            }
            let olo = if a.lo >= b.lo { a.lo.clone() } else { b.lo.clone() };
            let ohi = if a.hi <= b.hi { a.hi.clone() } else { b.hi.clone() };
            let in_a = a.poly.sign_at(&olo) != a.poly.sign_at(&ohi);
            let in_b = b.poly.sign_at(&olo) != b.poly.sign_at(&ohi);
            if !in_a {
                // a's root is outside the overlap; decide which side.
                return if a.poly.sign_at(&a.lo) != a.poly.sign_at(&olo) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
            if !in_b {
                return if b.poly.sign_at(&b.lo) != b.poly.sign_at(&olo) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
            // Both roots in the overlap: equal iff the gcd has a root there.
            let g = self
                .poly
                .to_rational()
                .gcd(&other.poly.to_rational())
                .to_int_primitive();
            if !g.is_constant() {
                let chain = g.sturm_chain();
                if IntPoly::sturm_count(&chain, &olo, &ohi) >= 1 {
                    return Ordering::Equal;
                }
            }
            a.bisect();
            b.bisect();
        }
        unreachable!("algebraic comparison failed to separate distinct roots");
    }

    pub fn eq_rational(&self, q: &Rational) -> bool {
        self.cmp_rational(q) == Ordering::Equal
    }

    pub fn is_one(&self) -> bool {
        self.eq_rational(&Rational::one())
    }

    /// Rational bounds for the n-th power of a nonnegative algebraic real.
    pub fn pow_bounds(&self, n: u32) -> (Rational, Rational) {
        let lo = if self.lo.is_negative() {
            Rational::zero()
        } else {
            self.lo.clone()
        };
        let mut plo = Rational::one();
        let mut phi = Rational::one();
        for _ in 0..n {
            plo *= lo.clone();
            phi *= self.hi.clone();
        }
        (plo, phi)
    }
}

impl PartialEq for AlgebraicReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_alg(other) == Ordering::Equal
    }
}
impl Eq for AlgebraicReal {}

impl PartialOrd for AlgebraicReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_alg(other))
    }
}
impl Ord for AlgebraicReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_alg(other)
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            write!(f, "{r}")
        } else {
            write!(
                f,
                "root of {} in ({}, {})",
                self.poly, self.lo, self.hi
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn zp(coeffs: &[i64]) -> IntPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| crate::int(c)).collect())
    }

    fn sqrt2() -> AlgebraicReal {
        AlgebraicReal::from_root(&zp(&[-2, 0, 1]), rat(1), rat(2)).unwrap()
    }

    fn golden() -> AlgebraicReal {
        AlgebraicReal::from_root(&zp(&[-1, -1, 1]), rat(1), rat(2)).unwrap()
    }

    #[test]
    fn rational_comparisons() {
        let s = sqrt2();
        assert_eq!(s.cmp_rational(&rat(1)), Ordering::Greater);
        assert_eq!(s.cmp_rational(&rat(2)), Ordering::Less);
        assert_eq!(s.cmp_rational(&ratio(3, 2)), Ordering::Less);
        assert_eq!(s.cmp_rational(&ratio(7, 5)), Ordering::Greater);
        assert!(!s.is_one());
        assert!(AlgebraicReal::one().is_one());
    }

    #[test]
    fn algebraic_comparisons() {
        let s = sqrt2();
        let g = golden();
        assert_eq!(s.cmp_alg(&g), Ordering::Less); // 1.414 < 1.618
        assert_eq!(g.cmp_alg(&s), Ordering::Greater);
        // equality across different defining polynomials:
        // sqrt2 as root of (x^2-2)(x-3) restricted near 1.4
        let p = zp(&[-2, 0, 1]).mul(&zp(&[-3, 1]));
        let s2 = AlgebraicReal::from_root(&p, rat(1), rat(2)).unwrap();
        assert_eq!(s.cmp_alg(&s2), Ordering::Equal);
        assert!(s == s2);
    }

    #[test]
    fn point_vs_interval_equality() {
        let two = AlgebraicReal::from_rational(rat(2));
        // 2 as non-point root of (x-2)(x^2-2) in (3/2, 3)
        let p = zp(&[-2, 1]).mul(&zp(&[-2, 0, 1]));
        let two2 = AlgebraicReal::from_root(&p, ratio(3, 2), rat(3)).unwrap();
        assert!(two == two2);
        assert!(two2.eq_rational(&rat(2)));
    }

    #[test]
    fn refinement_narrows() {
        let s = sqrt2();
        let (lo, hi) = s.refined_interval(&ratio(1, 1000));
        assert!(hi.clone() - lo.clone() <= ratio(1, 1000));
        assert!(lo < hi);
        // sqrt2 in (1.414, 1.4143)-ish
        assert!(lo > ratio(14, 10) && hi < ratio(15, 10));
    }

    #[test]
    fn rejects_bad_intervals() {
        assert!(AlgebraicReal::from_root(&zp(&[-2, 0, 1]), rat(-2), rat(2)).is_err());
        assert!(AlgebraicReal::from_root(&zp(&[-2, 0, 1]), rat(3), rat(4)).is_err());
    }
}
