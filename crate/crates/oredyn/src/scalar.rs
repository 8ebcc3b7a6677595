//! Scalar trait for the generic arithmetic layer.

use num_traits::{Num, Signed};
use std::fmt::Debug;

/// Coefficient scalar for the polynomial and matrix types.
///
/// `Num` supplies ring (and, for field instantiations, division) operators;
/// `Signed` supplies negation, absolute value, and sign queries. The crate's
/// verdict layer instantiates this at `BigRational` and `BigInt`; plain
/// floats satisfy the bound as well, but nothing in the verdict paths uses
/// them.
pub trait Scalar: Num + Signed + Clone + PartialEq + Debug {}

impl<T> Scalar for T where T: Num + Signed + Clone + PartialEq + Debug {}
