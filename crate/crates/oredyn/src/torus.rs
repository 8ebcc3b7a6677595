//! Exact coordinates on the algebraic torus.
//!
//! A coordinate is a positive rational times a root of unity, the root of
//! unity held symbolically as a residue `k mod d` (meaning `zeta_d^k`).
//! This class of values is closed under multiplication, inversion and
//! integer powers, which is all the monomial dynamics ever needs; rational
//! values embed with their sign folded into `zeta_2`.

use crate::{rat, Error, Rational, Result};
use num_integer::Integer as NumInteger;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A symbolic root of unity `zeta_d^k`, normalized so that `0 <= k < d` and
/// `gcd(k, d)` is reduced away; the trivial root is `(0 mod 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RootOfUnity {
    k: u64,
    d: u64,
}

impl RootOfUnity {
    pub fn new(k: i64, d: u64) -> RootOfUnity {
        assert!(d >= 1);
        let k = k.rem_euclid(d as i64) as u64;
        let g = k.gcd(&d);
        let (k, d) = if g > 0 { (k / g, d / g) } else { (0, 1) };
        if k == 0 {
            RootOfUnity { k: 0, d: 1 }
        } else {
            RootOfUnity { k, d }
        }
    }

    pub fn one() -> RootOfUnity {
        RootOfUnity { k: 0, d: 1 }
    }

    pub fn minus_one() -> RootOfUnity {
        RootOfUnity { k: 1, d: 2 }
    }

    pub fn is_one(&self) -> bool {
        self.d == 1
    }

    pub fn order(&self) -> u64 {
        self.d
    }

    pub fn exponent(&self) -> u64 {
        self.k
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let d = self.d.lcm(&other.d);
        let k = (self.k as i64) * (d / self.d) as i64 + (other.k as i64) * (d / other.d) as i64;
        RootOfUnity::new(k, d)
    }

    pub fn pow(&self, e: i64) -> RootOfUnity {
        let k = (self.k as i128 * e as i128).rem_euclid(self.d as i128) as i64;
        RootOfUnity::new(k, self.d)
    }

    pub fn inv(&self) -> RootOfUnity {
        self.pow(-1)
    }
}

/// A nonzero torus coordinate: positive rational magnitude times a root of
/// unity phase.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusCoord {
    magnitude: Rational,
    phase: RootOfUnity,
}

impl TorusCoord {
    pub fn one() -> TorusCoord {
        TorusCoord {
            magnitude: Rational::one(),
            phase: RootOfUnity::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Result<TorusCoord> {
        if r.is_zero() {
            return Err(Error::Invalid("zero coordinate on the torus".into()));
        }
        Ok(TorusCoord {
            magnitude: r.abs(),
            phase: if r.is_negative() {
                RootOfUnity::minus_one()
            } else {
                RootOfUnity::one()
            },
        })
    }

    pub fn root_of_unity(k: i64, d: u64) -> TorusCoord {
        TorusCoord {
            magnitude: Rational::one(),
            phase: RootOfUnity::new(k, d),
        }
    }

    pub fn new(magnitude: Rational, phase: RootOfUnity) -> Result<TorusCoord> {
        if magnitude.is_zero() {
            return Err(Error::Invalid("zero coordinate on the torus".into()));
        }
        if magnitude.is_negative() {
            Ok(TorusCoord {
                magnitude: -magnitude,
                phase: phase.mul(&RootOfUnity::minus_one()),
            })
        } else {
            Ok(TorusCoord { magnitude, phase })
        }
    }

    pub fn magnitude(&self) -> &Rational {
        &self.magnitude
    }

    pub fn phase(&self) -> &RootOfUnity {
        &self.phase
    }

    pub fn mul(&self, other: &TorusCoord) -> TorusCoord {
        TorusCoord {
            magnitude: self.magnitude.clone() * other.magnitude.clone(),
            phase: self.phase.mul(&other.phase),
        }
    }

    pub fn pow(&self, e: i64) -> TorusCoord {
        TorusCoord {
            magnitude: crate::unipoly::rat_pow(&self.magnitude, e),
            phase: self.phase.pow(e),
        }
    }

    pub fn scale(&self, r: &Rational) -> Result<TorusCoord> {
        Ok(self.mul(&TorusCoord::from_rational(r)?))
    }

    pub fn is_one(&self) -> bool {
        self.magnitude.is_one() && self.phase.is_one()
    }

    /// The exact rational value when the phase is +-1.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.phase.order() {
            1 => Some(self.magnitude.clone()),
            2 => Some(-self.magnitude.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for TorusCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        if !self.magnitude.is_one() {
            write!(f, "{}*", self.magnitude)?;
        }
        write!(f, "zeta({})", self.phase.d)?;
        if self.phase.k != 1 {
            write!(f, "^{}", self.phase.k)?;
        }
        Ok(())
    }
}

/// A point on the torus with exactly representable coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusPoint {
    coords: Vec<TorusCoord>,
}

impl TorusPoint {
    pub fn new(coords: Vec<TorusCoord>) -> TorusPoint {
        TorusPoint { coords }
    }

    pub fn from_rationals(coords: &[Rational]) -> Result<TorusPoint> {
        Ok(TorusPoint {
            coords: coords
                .iter()
                .map(TorusCoord::from_rational)
                .collect::<Result<_>>()?,
        })
    }

    pub fn from_i64(coords: &[i64]) -> Result<TorusPoint> {
        let rats: Vec<Rational> = coords.iter().map(|&c| rat(c)).collect();
        TorusPoint::from_rationals(&rats)
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[TorusCoord] {
        &self.coords
    }

    pub fn all_ones(n: usize) -> TorusPoint {
        TorusPoint {
            coords: vec![TorusCoord::one(); n],
        }
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A torsion point of the torus: order `d` and residue exponents, coordinate
/// `i` being `zeta_d^(exponents[i])`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorsionPoint {
    order: u64,
    exponents: Vec<u64>,
}

impl TorsionPoint {
    /// Normalized: the common factor of `d` and all exponents is reduced.
    pub fn new(order: u64, exponents: Vec<i64>) -> TorsionPoint {
        assert!(order >= 1);
        let exps: Vec<u64> = exponents
            .iter()
            .map(|&e| e.rem_euclid(order as i64) as u64)
            .collect();
        let mut g = order;
        for &e in &exps {
            g = g.gcd(&e);
        }
        if g > 1 {
            TorsionPoint {
                order: order / g,
                exponents: exps.iter().map(|&e| e / g).collect(),
            }
        } else {
            TorsionPoint {
                order,
                exponents: exps,
            }
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn to_point(&self) -> TorusPoint {
        TorusPoint {
            coords: self
                .exponents
                .iter()
                .map(|&e| TorusCoord::root_of_unity(e as i64, self.order))
                .collect(),
        }
    }
}

impl fmt::Display for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_point())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn roots_of_unity_normalize() {
        assert_eq!(RootOfUnity::new(2, 6), RootOfUnity::new(1, 3));
        assert_eq!(RootOfUnity::new(-1, 4), RootOfUnity::new(3, 4));
        assert!(RootOfUnity::new(6, 3).is_one());
        assert_eq!(
            RootOfUnity::new(1, 2).mul(&RootOfUnity::new(1, 3)),
            RootOfUnity::new(5, 6)
        );
    }

    #[test]
    fn coord_arithmetic_folds_signs() {
        let a = TorusCoord::from_rational(&ratio(-3, 2)).unwrap();
        assert_eq!(a.as_rational(), Some(ratio(-3, 2)));
        let sq = a.mul(&a);
        assert_eq!(sq.as_rational(), Some(ratio(9, 4)));
        let inv = a.pow(-1);
        assert_eq!(inv.as_rational(), Some(ratio(-2, 3)));
        assert!(a.mul(&inv).is_one());
    }

    #[test]
    fn torsion_points_normalize() {
        let p = TorsionPoint::new(6, vec![2, 4]);
        assert_eq!(p.order(), 3);
        assert_eq!(p.exponents(), &[1, 2]);
        let q = TorsionPoint::new(4, vec![0, 2]);
        assert_eq!(q.order(), 2);
        assert_eq!(q.exponents(), &[0, 1]);
        assert_eq!(q.to_point().coords()[1].as_rational(), Some(crate::rat(-1)));
    }
}
