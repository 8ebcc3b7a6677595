//! The two supported automorphism families: monomial automorphisms of the
//! algebraic torus and polynomial automorphisms of the affine plane.

mod monomial;
mod plane;

pub use monomial::MonomialAutomorphism;
pub use plane::{
    AffineFactor, ElementaryFactor, PlaneAutomorphism, PlaneClass, PlaneFactor,
};
