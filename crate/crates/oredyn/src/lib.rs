//! Exact dynamics of torus and plane automorphisms.
//!
//! The engine computes, with certificates and no floating point on any
//! verdict path, the dynamical data attached to two families of
//! automorphisms:
//!
//! * monomial automorphisms of the algebraic torus `(k*)^n`, encoded by a
//!   `GL(n, Z)` matrix together with nonzero rational coefficient scalars;
//! * polynomial automorphisms of the affine plane, held as words in
//!   elementary and affine generators (Jung–van der Kulk form).
//!
//! From that data it derives growth data `(rho, j)`, invariant rational
//! functions, dense-orbit classifications, periodic points and divisors,
//! arithmetic in the associated skew and skew-Laurent extensions
//! `S[t; sigma]` and `S[t, t^-1; sigma]`, and finally Dixmier-Moeglin
//! verdicts for the prime `(0)` of those rings, each verdict traced to the
//! rule that produced it.
//!
//! Core arithmetic (polynomials, matrices) is generic over the scalar type
//! through `num-traits`; the concrete instantiations used by the verdict
//! layer are fixed at arbitrary-precision rationals and integers via the
//! type aliases exported at the crate root.

pub mod algebraic;
pub mod automorphism;
pub mod dm;
pub mod dynamics;
pub mod growth;
pub mod invariants;
pub mod laurent;
pub mod lattice;
pub mod matrix;
pub mod ore;
pub mod polygon;
pub mod report;
pub mod scalar;
pub mod spectral;
pub mod torus;
pub mod unipoly;

mod error;

pub use error::{Error, Result};

/// Arbitrary-precision integer scalar.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational scalar (always stored reduced, denominator > 0).
pub type Rational = num_rational::BigRational;

/// Dense univariate polynomial with integer coefficients.
pub type IntPoly = unipoly::UniPoly<Integer>;
/// Dense univariate polynomial with rational coefficients.
pub type RatPoly = unipoly::UniPoly<Rational>;

/// Matrix with integer entries.
pub type IntMat = matrix::Mat<Integer>;
/// Matrix with rational entries.
pub type RatMat = matrix::Mat<Rational>;

/// Multivariate Laurent polynomial with rational coefficients.
pub type RatLaurent = laurent::LaurentPoly<Rational>;

pub use algebraic::AlgebraicReal;
pub use automorphism::{
    AffineFactor, ElementaryFactor, MonomialAutomorphism, PlaneAutomorphism, PlaneClass,
    PlaneFactor,
};
pub use dm::{DMReport, RingKind, Verdict};
pub use dynamics::{MaxIrreducibles, OrbitClassification, OrbitStatus};
pub use growth::{GrowthCertificate, GrowthData, GrowthType};
pub use invariants::InvariantWitness;
pub use lattice::LatticeBasis;
pub use ore::{GKProfile, InvariantIdealSpec, OreElement};
pub use polygon::LatticePolygon;
pub use torus::{TorsionPoint, TorusCoord, TorusPoint};

/// Parse a rational from a string such as `-3/2` or `7`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Shorthand for a rational fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Shorthand for a big integer.
pub fn int(n: i64) -> Integer {
    Integer::from(n)
}
