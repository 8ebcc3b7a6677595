//! Skew polynomial and skew-Laurent arithmetic over a Laurent polynomial
//! ring with monomial twist, homogeneous ideals and their primality test,
//! and the Newton-polytope growth profiler.
//!
//! Elements are graded: `sum s_n t^n` with coefficients written on the left,
//! so multiplication follows `t s = sigma(s) t`, i.e.
//! `(s t^m)(r t^n) = s sigma^m(r) t^(m+n)`.

use crate::automorphism::MonomialAutomorphism;
use crate::polygon::LatticePolygon;
use crate::torus::TorusPoint;
use crate::{rat, Error, IntMat, Integer, RatLaurent, Rational, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An element of `S[t, t^-1; sigma]` (or of `S[t; sigma]` when the support
/// is nonnegative).
#[derive(Clone, PartialEq, Debug)]
pub struct OreElement {
    arity: usize,
    graded: BTreeMap<i64, RatLaurent>,
}

impl OreElement {
    pub fn zero(arity: usize) -> Self {
        OreElement {
            arity,
            graded: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        OreElement::from_term(RatLaurent::one(arity), 0)
    }

    /// `s * t^n`.
    pub fn from_term(coeff: RatLaurent, degree: i64) -> Self {
        let arity = coeff.arity();
        let mut graded = BTreeMap::new();
        if !coeff.is_zero() {
            graded.insert(degree, coeff);
        }
        OreElement { arity, graded }
    }

    /// `t^n`.
    pub fn t_power(arity: usize, n: i64) -> Self {
        OreElement::from_term(RatLaurent::one(arity), n)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.graded.is_empty()
    }

    pub fn coefficient(&self, degree: i64) -> RatLaurent {
        self.graded
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| RatLaurent::zero(self.arity))
    }

    pub fn support(&self) -> impl Iterator<Item = (&i64, &RatLaurent)> {
        self.graded.iter()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.graded.keys().next().copied()
    }

    pub fn add_term(&mut self, coeff: RatLaurent, degree: i64) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .graded
            .remove(&degree)
            .unwrap_or_else(|| RatLaurent::zero(self.arity));
        let sum = entry.add(&coeff);
        if !sum.is_zero() {
            self.graded.insert(degree, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.graded {
            out.add_term(c.clone(), *d);
        }
        out
    }

    pub fn neg(&self) -> Self {
        OreElement {
            arity: self.arity,
            graded: self
                .graded
                .iter()
                .map(|(d, c)| (*d, c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

/// `(s t^m)(r t^n) = s sigma^m(r) t^(m+n)`, extended bilinearly.
pub fn ore_mul(a: &OreElement, b: &OreElement, sigma: &MonomialAutomorphism) -> Result<OreElement> {
    if a.arity() != b.arity() || a.arity() != sigma.arity() {
        return Err(Error::Mismatch("arity mismatch in Ore multiplication".into()));
    }
    let mut out = OreElement::zero(a.arity());
    for (m, s) in &a.graded {
        let twist = sigma.iterate(*m);
        for (n, r) in &b.graded {
            out.add_term(s.mul(&twist.apply_laurent(r)), m + n);
        }
    }
    Ok(out)
}

/// Supported irreducible component shapes of invariant closed subsets.
#[derive(Clone, PartialEq, Debug)]
pub enum ComponentShape {
    /// The subtorus coset `{ u^a = c }` for a primitive exponent `a`.
    Subtorus { exponent: Vec<i64>, value: Rational },
    /// A single rational point of the torus.
    Point { coords: Vec<Rational> },
}

impl ComponentShape {
    fn normalize(self) -> Result<ComponentShape> {
        match self {
            ComponentShape::Subtorus { exponent, value } => {
                if value.is_zero() {
                    return Err(Error::Invalid("subtorus value must be nonzero".into()));
                }
                if exponent.iter().all(|&e| e == 0) {
                    return Err(Error::Invalid("subtorus direction must be nonzero".into()));
                }
                let g = exponent
                    .iter()
                    .fold(0i64, |acc, &e| num_integer::gcd(acc, e.abs()));
                if g != 1 {
                    return Err(Error::Invalid(
                        "subtorus direction must be primitive".into(),
                    ));
                }
                // Canonical orientation: first nonzero exponent positive
                // ({u^a = c} and {u^-a = 1/c} are the same set).
                let first = exponent.iter().find(|&&e| e != 0).copied().unwrap();
                if first < 0 {
                    Ok(ComponentShape::Subtorus {
                        exponent: exponent.iter().map(|e| -e).collect(),
                        value: Rational::one() / value,
                    })
                } else {
                    Ok(ComponentShape::Subtorus { exponent, value })
                }
            }
            ComponentShape::Point { coords } => {
                if coords.iter().any(|c| c.is_zero()) {
                    return Err(Error::Invalid("torus point has nonzero coordinates".into()));
                }
                Ok(ComponentShape::Point { coords })
            }
        }
    }

    /// Image under the automorphism (as a set).
    fn apply(&self, sigma: &MonomialAutomorphism) -> Result<ComponentShape> {
        match self {
            ComponentShape::Subtorus { exponent, value } => {
                // x in sigma(Z) iff sigma^{-1}(u^a)(x) = c; the inverse ring
                // map sends u^a to scalar * u^(M^-1 a).
                let inv = sigma.inverse();
                let mono = RatLaurent::monomial(
                    sigma.arity(),
                    Rational::one(),
                    exponent.clone(),
                );
                let image = inv.apply_laurent(&mono);
                let (e, c) = image.terms().next().expect("monomial image");
                // image = c * u^e; condition c * u^e = value.
                ComponentShape::Subtorus {
                    exponent: e.clone(),
                    value: value / c,
                }
                .normalize()
            }
            ComponentShape::Point { coords } => {
                let p = TorusPoint::from_rationals(coords)?;
                let q = sigma.apply_point(&p)?;
                let rats: Option<Vec<Rational>> =
                    q.coords().iter().map(|c| c.as_rational()).collect();
                match rats {
                    Some(coords) => Ok(ComponentShape::Point { coords }),
                    None => Err(Error::Unsupported(
                        "point component left the rational locus".into(),
                    )),
                }
            }
        }
    }

    /// Radical ideal membership: reduce modulo the defining equations.
    fn contains_in_ideal(&self, p: &RatLaurent) -> bool {
        match self {
            ComponentShape::Point { coords } => p
                .eval(coords)
                .map(|v| v.is_zero())
                .unwrap_or(false),
            ComponentShape::Subtorus { exponent, value } => {
                // Change exponent coordinates so u^a becomes the first
                // variable, then substitute it by the value.
                subtorus_reduce(p, exponent, value).is_zero()
            }
        }
    }

    /// A generator of the component's ideal.
    fn generator(&self, arity: usize) -> RatLaurent {
        match self {
            ComponentShape::Subtorus { exponent, value } => RatLaurent::monomial(
                arity,
                Rational::one(),
                exponent.clone(),
            )
            .sub(&RatLaurent::constant(arity, value.clone())),
            ComponentShape::Point { coords } => {
                // Product of the coordinate equations; enough for display,
                // membership testing goes through evaluation.
                let mut prod = RatLaurent::one(arity);
                for (i, c) in coords.iter().enumerate() {
                    let factor = RatLaurent::var(arity, i)
                        .sub(&RatLaurent::constant(arity, c.clone()));
                    prod = prod.mul(&factor);
                }
                prod
            }
        }
    }
}

/// Reduce a Laurent polynomial modulo `u^a - value` for primitive `a`, by a
/// unimodular exponent change putting `a` first.
fn subtorus_reduce(p: &RatLaurent, a: &[i64], value: &Rational) -> RatLaurent {
    let n = a.len();
    let v = complete_to_unimodular(a);
    let vinv = v.inverse_unimodular().expect("unimodular basis");
    let mut out = RatLaurent::zero(n);
    for (e, c) in p.terms() {
        let ei: Vec<Integer> = e.iter().map(|&x| Integer::from(x)).collect();
        let coords = vinv.mul_vec(&ei);
        // e = coords[0]*a + sum_j coords[j]*col_j(V); substitute u^a -> value.
        let xpow = crate::unipoly::rat_pow(value, to_i64(&coords[0]));
        let mut rem = vec![0i64; n];
        for j in 1..n {
            let cj = to_i64(&coords[j]);
            for (i, r) in rem.iter_mut().enumerate() {
                *r += cj * to_i64(&v[(i, j)]);
            }
        }
        out.add_term(rem, c.clone() * xpow);
    }
    out
}

fn to_i64(x: &Integer) -> i64 {
    use num_traits::ToPrimitive;
    x.to_i64().expect("desk-scale exponent")
}

/// Unimodular matrix whose first column is the given primitive vector.
///
/// Column-reduce the single-row matrix `[a]`: with `a W = (g, 0, ..., 0)`
/// and `g = +-1`, the inverse transpose of `W` (sign-corrected) sends `e_1`
/// to `a`.
fn complete_to_unimodular(a: &[i64]) -> IntMat {
    let row = IntMat::from_rows(vec![a.iter().map(|&x| Integer::from(x)).collect()])
        .expect("one row");
    let (reduced, w, rank) = row.column_reduce_with_transform();
    assert_eq!(rank, 1, "zero direction vector");
    let g = reduced[(0, 0)].clone();
    assert!(
        g.clone().abs() == Integer::one(),
        "direction vector must be primitive"
    );
    let mut w = w;
    if g == -Integer::one() {
        for i in 0..w.nrows() {
            w[(i, 0)] = -w[(i, 0)].clone();
        }
    }
    w.transpose()
        .inverse_unimodular()
        .expect("transform is unimodular")
}

/// A reduced invariant closed subset in supported shape, with the induced
/// permutation of its components.
#[derive(Clone, Debug)]
pub struct InvariantIdealSpec {
    components: Vec<ComponentShape>,
    /// `permutation[i]` is the index of the image of component i.
    permutation: Vec<usize>,
    generators: Vec<RatLaurent>,
}

impl InvariantIdealSpec {
    /// Build and verify: the automorphism must permute the component set.
    pub fn new(
        sigma: &MonomialAutomorphism,
        components: Vec<ComponentShape>,
    ) -> Result<InvariantIdealSpec> {
        if components.is_empty() {
            return Err(Error::Invalid("empty component list".into()));
        }
        let arity = sigma.arity();
        let components: Vec<ComponentShape> = components
            .into_iter()
            .map(|c| c.normalize())
            .collect::<Result<_>>()?;
        for (i, c) in components.iter().enumerate() {
            for d in components.iter().skip(i + 1) {
                if c == d {
                    return Err(Error::Invalid("duplicate component".into()));
                }
            }
        }
        let mut permutation = Vec::with_capacity(components.len());
        for c in &components {
            let image = c.apply(sigma)?;
            match components.iter().position(|d| *d == image) {
                Some(j) => permutation.push(j),
                None => {
                    return Err(Error::Invalid(format!(
                        "component set is not invariant: image {image:?} missing"
                    )))
                }
            }
        }
        // Product of per-component generators cuts out the union.
        let mut gen = RatLaurent::one(arity);
        for c in &components {
            gen = gen.mul(&c.generator(arity));
        }
        Ok(InvariantIdealSpec {
            components,
            permutation,
            generators: vec![gen],
        })
    }

    pub fn components(&self) -> &[ComponentShape] {
        &self.components
    }

    pub fn generators(&self) -> &[RatLaurent] {
        &self.generators
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Membership of a Laurent polynomial in the radical ideal of the union:
    /// it must vanish on every component.
    pub fn ideal_contains(&self, p: &RatLaurent) -> bool {
        self.components.iter().all(|c| c.contains_in_ideal(p))
    }

    /// The permutation cycle through component 0, when the permutation is a
    /// single cycle.
    pub fn single_cycle(&self) -> Option<Vec<usize>> {
        let n = self.components.len();
        let mut cycle = vec![0usize];
        let mut cur = self.permutation[0];
        while cur != 0 && cycle.len() <= n {
            cycle.push(cur);
            cur = self.permutation[cur];
        }
        if cycle.len() == n {
            Some(cycle)
        } else {
            None
        }
    }
}

/// Which ring a homogeneous ideal lives in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OreRing {
    /// `T = S[t, t^-1; sigma]`.
    SkewLaurent,
    /// `U = S[t; sigma]`.
    Skew,
}

/// A homogeneous ideal handle supporting membership tests.
#[derive(Clone, Debug)]
pub enum HomogeneousIdeal {
    /// `P = (+)_n I t^n` for the invariant radical ideal `I` of the spec.
    Graded {
        ring: OreRing,
        spec: InvariantIdealSpec,
    },
    /// `Q = J (+) S t (+) S t^2 (+) ...` in `U`, for a prime `J` of `S`
    /// given by a single supported component.
    AugmentationFamily { prime: ComponentShape },
}

impl HomogeneousIdeal {
    /// The graded family from an invariant spec.
    pub fn graded(
        sigma: &MonomialAutomorphism,
        spec: InvariantIdealSpec,
        ring: OreRing,
    ) -> HomogeneousIdeal {
        let _ = sigma;
        HomogeneousIdeal::Graded { ring, spec }
    }

    /// The skew-only family `J (+) St (+) St^2 (+) ...` (the prime `J` need
    /// not be invariant).
    pub fn augmentation(prime: ComponentShape) -> Result<HomogeneousIdeal> {
        Ok(HomogeneousIdeal::AugmentationFamily {
            prime: prime.normalize()?,
        })
    }

    /// Degreewise membership of an Ore element.
    pub fn contains(&self, x: &OreElement) -> bool {
        match self {
            HomogeneousIdeal::Graded { ring, spec } => {
                if *ring == OreRing::Skew && x.min_degree().map(|d| d < 0).unwrap_or(false) {
                    return false;
                }
                x.support().all(|(_, coeff)| spec.ideal_contains(coeff))
            }
            HomogeneousIdeal::AugmentationFamily { prime } => x.support().all(|(d, coeff)| {
                if *d < 0 {
                    false
                } else if *d == 0 {
                    prime.contains_in_ideal(coeff)
                } else {
                    true
                }
            }),
        }
    }
}

/// Single-cycle (hence prime) check for a verified invariant spec, with the
/// cycle as certificate.
pub fn is_homogeneous_prime(spec: &InvariantIdealSpec) -> (bool, Option<Vec<usize>>) {
    match spec.single_cycle() {
        Some(cycle) => (true, Some(cycle)),
        None => (false, None),
    }
}

/// Growth classification of the filtration dimensions.
#[derive(Clone, PartialEq, Debug)]
pub enum GKClassification {
    /// Dimension sequence fits polynomial growth of the given degree.
    Polynomial { fitted_degree: u32 },
    /// Sustained geometric growth with at least the given ratio.
    Exponential { base_lower_bound: Rational },
}

/// Exact filtration dimensions and their growth classification.
#[derive(Clone, Debug)]
pub struct GKProfile {
    pub dims: Vec<Integer>,
    pub classification: GKClassification,
    pub generator_polytope: LatticePolygon,
    /// Third finite differences over the tail, recorded for auditability.
    pub residuals: Vec<Integer>,
    /// Thresholds used by the classifier.
    pub ratio_threshold: Rational,
    pub tail_samples: usize,
}

/// Filtration growth of the subalgebra generated in degree one by the
/// monomials of a polygon: `dims_n = #(P + MP + ... + M^(n-1) P)`.
pub fn gk_profile(
    sigma: &MonomialAutomorphism,
    polytope: &LatticePolygon,
    depth: u32,
) -> Result<GKProfile> {
    if sigma.arity() != 2 {
        return Err(Error::Unsupported(
            "growth profiling is implemented for the 2-torus".into(),
        ));
    }
    if depth < 2 {
        return Err(Error::Invalid("profile depth must be at least 2".into()));
    }
    if !polytope.contains_origin() {
        return Err(Error::Invalid(
            "generator polytope must contain the origin".into(),
        ));
    }
    let mut dims = Vec::with_capacity(depth as usize);
    let mut sum = polytope.clone();
    let mut power = polytope.clone();
    dims.push(sum.lattice_point_count());
    for _ in 1..depth {
        power = power.apply_matrix(sigma.matrix());
        sum = sum.minkowski_sum(&power);
        dims.push(sum.lattice_point_count());
    }
    for w in dims.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::Invalid(
                "filtration dimensions failed to increase strictly".into(),
            ));
        }
    }
    let tail_samples = (depth as usize).div_ceil(3);
    let ratio_threshold = rat(5) / rat(4);
    // Exponential test: dims_(n+1)/dims_n >= 5/4 sustained over the tail.
    // "Sustained" also demands the ratios hold their level across the tail:
    // geometric growth approaches its limit ratio, while polynomial growth
    // has ratios decaying toward 1 (they can still sit above 5/4 at shallow
    // depths for cubic data).
    let tail_start = dims.len() - tail_samples.min(dims.len() - 1);
    let tail_ratios: Vec<Rational> = dims[tail_start.saturating_sub(1)..]
        .windows(2)
        .map(|w| Rational::new(w[1].clone(), w[0].clone()))
        .collect();
    let above_threshold = tail_ratios.iter().all(|r| *r >= ratio_threshold);
    let level_held = match (tail_ratios.first(), tail_ratios.last()) {
        (Some(first), Some(last)) => {
            last.clone() * rat(16) >= first.clone() * rat(15)
        }
        _ => false,
    };
    let exponential = above_threshold && level_held;
    let diff3 = finite_differences(&dims, 3);
    let residuals: Vec<Integer> = diff3[diff3.len().saturating_sub(tail_samples)..].to_vec();
    let classification = if exponential {
        let mut base = Rational::new(dims[dims.len() - 1].clone(), dims[dims.len() - 2].clone());
        for w in dims[tail_start.saturating_sub(1)..].windows(2) {
            let r = Rational::new(w[1].clone(), w[0].clone());
            if r < base {
                base = r;
            }
        }
        GKClassification::Exponential {
            base_lower_bound: base,
        }
    } else {
        GKClassification::Polynomial {
            fitted_degree: fit_polynomial_degree(&dims, tail_samples),
        }
    };
    Ok(GKProfile {
        dims,
        classification,
        generator_polytope: polytope.clone(),
        residuals,
        ratio_threshold,
        tail_samples,
    })
}

fn finite_differences(dims: &[Integer], order: u32) -> Vec<Integer> {
    let mut cur: Vec<Integer> = dims.to_vec();
    for _ in 0..order {
        if cur.len() < 2 {
            return Vec::new();
        }
        cur = cur.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    cur
}

/// Fitted growth degree of an eventually quasi-polynomial increasing integer
/// sequence: at the true degree the d-th differences stay strictly positive
/// over a window covering a full quasi-period, while the (d+1)-st
/// differences oscillate around zero. The fitted degree is therefore the
/// smallest d whose (d+1)-st differences admit a nonpositive entry in the
/// trailing window.
fn fit_polynomial_degree(dims: &[Integer], tail: usize) -> u32 {
    let window = tail.max(6);
    for d in 0..=6u32 {
        let next = finite_differences(dims, d + 1);
        if next.is_empty() {
            return d;
        }
        let w = &next[next.len().saturating_sub(window)..];
        if w.iter().any(|x| !x.is_positive()) {
            return d;
        }
    }
    6
}

impl fmt::Display for OreElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.graded {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c.display_with(&["u", "v", "s", "r"]))?;
            if *d != 0 {
                write!(f, "*t")?;
                if *d != 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn u() -> RatLaurent {
        RatLaurent::var(2, 0)
    }
    fn v() -> RatLaurent {
        RatLaurent::var(2, 1)
    }

    #[test]
    fn defining_relation() {
        // t * u = sigma(u) t = u^2 v t for Lorenz
        let t = OreElement::t_power(2, 1);
        let ue = OreElement::from_term(u(), 0);
        let prod = ore_mul(&t, &ue, &lorenz()).unwrap();
        let expect = OreElement::from_term(u().pow(2).mul(&v()), 1);
        assert_eq!(prod, expect);
    }

    #[test]
    fn product_of_graded_terms() {
        // (u t)(v t) = u sigma(v) t^2 = u^2 v t^2
        let a = OreElement::from_term(u(), 1);
        let b = OreElement::from_term(v(), 1);
        let prod = ore_mul(&a, &b, &lorenz()).unwrap();
        assert_eq!(prod, OreElement::from_term(u().pow(2).mul(&v()), 2));
    }

    #[test]
    fn negative_degrees_and_inverse_twist() {
        // (t^-1)(u t) = sigma^{-1}(u) = u v^{-1}
        let tinv = OreElement::t_power(2, -1);
        let ut = OreElement::from_term(u(), 1);
        let prod = ore_mul(&tinv, &ut, &lorenz()).unwrap();
        let expect = OreElement::from_term(
            RatLaurent::monomial(2, crate::rat(1), vec![1, -1]),
            0,
        );
        assert_eq!(prod, expect);
        // t^-1 t = 1
        let t = OreElement::t_power(2, 1);
        assert_eq!(ore_mul(&tinv, &t, &lorenz()).unwrap(), OreElement::one(2));
        assert_eq!(ore_mul(&t, &tinv, &lorenz()).unwrap(), OreElement::one(2));
    }

    #[test]
    fn conjugation_identity() {
        // t s t^-1 = sigma(s)
        let s = u().add(&v().pow(3)).sub(&RatLaurent::one(2));
        let t = OreElement::t_power(2, 1);
        let tinv = OreElement::t_power(2, -1);
        let lhs = ore_mul(
            &ore_mul(&t, &OreElement::from_term(s.clone(), 0), &lorenz()).unwrap(),
            &tinv,
            &lorenz(),
        )
        .unwrap();
        assert_eq!(lhs, OreElement::from_term(lorenz().apply_laurent(&s), 0));
    }

    #[test]
    fn ideal_membership_fixed_subtorus() {
        // I = (uv - 1) under swap
        let spec = InvariantIdealSpec::new(
            &swap(),
            vec![ComponentShape::Subtorus {
                exponent: vec![1, 1],
                value: rat(1),
            }],
        )
        .unwrap();
        let ideal = HomogeneousIdeal::Graded {
            ring: OreRing::SkewLaurent,
            spec: spec.clone(),
        };
        let gen = u().mul(&v()).sub(&RatLaurent::one(2));
        assert!(ideal.contains(&OreElement::from_term(gen.clone(), 3)));
        assert!(!ideal.contains(&OreElement::from_term(u(), 1)));
        // (uv-1)*anything is in the ideal
        let x = gen.mul(&u().pow(2).add(&v()));
        assert!(ideal.contains(&OreElement::from_term(x, -2)));
        let (prime, cycle) = is_homogeneous_prime(&spec);
        assert!(prime);
        assert_eq!(cycle.unwrap(), vec![0]);
    }

    #[test]
    fn union_swapped_by_sigma() {
        // {u = 1} union {v = 1} under swap: a 2-cycle, prime.
        let spec = InvariantIdealSpec::new(
            &swap(),
            vec![
                ComponentShape::Subtorus {
                    exponent: vec![1, 0],
                    value: rat(1),
                },
                ComponentShape::Subtorus {
                    exponent: vec![0, 1],
                    value: rat(1),
                },
            ],
        )
        .unwrap();
        let (prime, cycle) = is_homogeneous_prime(&spec);
        assert!(prime);
        assert_eq!(cycle.unwrap().len(), 2);
        // (u-1)(v-1) lies in the intersection ideal
        let p = u()
            .sub(&RatLaurent::one(2))
            .mul(&v().sub(&RatLaurent::one(2)));
        assert!(spec.ideal_contains(&p));
        assert!(!spec.ideal_contains(&u().sub(&RatLaurent::one(2))));
        // Same union under the identity: two fixed components, not prime.
        let spec = InvariantIdealSpec::new(
            &MonomialAutomorphism::identity(2),
            vec![
                ComponentShape::Subtorus {
                    exponent: vec![1, 0],
                    value: rat(1),
                },
                ComponentShape::Subtorus {
                    exponent: vec![0, 1],
                    value: rat(1),
                },
            ],
        )
        .unwrap();
        let (prime, _) = is_homogeneous_prime(&spec);
        assert!(!prime);
    }

    #[test]
    fn rejects_non_invariant_specs() {
        // {u = 1} alone is not swap-invariant.
        assert!(InvariantIdealSpec::new(
            &swap(),
            vec![ComponentShape::Subtorus {
                exponent: vec![1, 0],
                value: rat(1),
            }],
        )
        .is_err());
    }

    #[test]
    fn augmentation_ideal_membership() {
        // Q = J + St + St^2 + ... with J the ideal of the point (1,1).
        let ideal = HomogeneousIdeal::augmentation(ComponentShape::Point {
            coords: vec![rat(1), rat(1)],
        })
        .unwrap();
        let t = OreElement::t_power(2, 1);
        assert!(ideal.contains(&t));
        assert!(ideal.contains(&OreElement::from_term(u().sub(&RatLaurent::one(2)), 0)));
        assert!(!ideal.contains(&OreElement::from_term(u(), 0)));
        assert!(!ideal.contains(&OreElement::t_power(2, -1)));
    }

    #[test]
    fn profiler_fixture_values() {
        let tri = LatticePolygon::standard_triangle();
        // shear: dims start 3, 7
        let shear = MonomialAutomorphism::with_trivial_coeffs(
            IntMat::from_i64(&[&[1, 1], &[0, 1]]).unwrap(),
        )
        .unwrap();
        let prof = gk_profile(&shear, &tri, 6).unwrap();
        assert_eq!(prof.dims[0], crate::int(3));
        assert_eq!(prof.dims[1], crate::int(7));
        // identity: 3, 6, 10, ... triangular numbers; the pinned thresholds
        // need the full depth of 12 to separate quadratic from exponential.
        let prof = gk_profile(&MonomialAutomorphism::identity(2), &tri, 12).unwrap();
        let expect: Vec<crate::Integer> = (1..=12i64)
            .map(|n| crate::int((n + 1) * (n + 2) / 2))
            .collect();
        assert_eq!(prof.dims, expect);
        assert!(matches!(
            prof.classification,
            GKClassification::Polynomial { fitted_degree: 2 }
        ));
    }

    #[test]
    fn profiler_exponential_for_lorenz() {
        let tri = LatticePolygon::standard_triangle();
        let prof = gk_profile(&lorenz(), &tri, 10).unwrap();
        match prof.classification {
            GKClassification::Exponential { base_lower_bound } => {
                assert!(base_lower_bound >= Rational::new(crate::int(3), crate::int(2)));
            }
            other => panic!("expected exponential, got {other:?}"),
        }
    }
}
