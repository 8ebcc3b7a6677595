//! Invariant and semi-invariant rational functions.
//!
//! Three independent routes are implemented.
//!
//! 1. Lattice kernels (`invariant_monomials`): a monomial `u^a` is fixed by
//!    `sigma^m` iff `M^m a = a` and the accumulated coefficient scalar on
//!    `u^a` equals 1. With rational coefficient scalars the scalar condition
//!    is a finite linear computation in prime valuations, so existence is
//!    fully decidable.
//! 2. Orbit sums (`sigma_invariant`): whenever some power of `sigma` fixes a
//!    monomial up to a unit scalar of modulus one, weighting the exponent
//!    orbit produces a function invariant under `sigma` itself. This
//!    realizes, exactly, the descent from power-invariance to invariance.
//! 3. A degree-bounded brute-force search (`bounded_invariant_search`): the
//!    eigen-ratio construction. Pairs `(p, q)` with
//!    `sigma^m(p) q = p sigma^m(q)` are found as eigenvectors of the exact
//!    linear substitution action sharing an eigenvalue, and ratios of such
//!    pairs are invariant. The search is exhaustive for rational witnesses
//!    within the degree bound and is used as an independent oracle against
//!    route 1.
//!
//! Every witness is re-verified by exact substitution before being returned.

use crate::automorphism::{MonomialAutomorphism, PlaneAutomorphism, PlaneClass};
use crate::growth::{quasi_unipotence_orders, Automorphism};
use crate::lattice::LatticeBasis;
use crate::{
    Error, IntMat, Integer, RatLaurent, RatMat, Rational, Result,
};
use num_integer::Integer as NumInteger;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// How a witness was produced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessKind {
    Monomial,
    Fibration,
    BruteForce,
}

/// Which coordinate names render the witness.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoordinateNames {
    Torus,
    Plane,
}

impl CoordinateNames {
    fn names(self) -> &'static [&'static str] {
        match self {
            CoordinateNames::Torus => &["u", "v", "s", "r"],
            CoordinateNames::Plane => &["z", "w"],
        }
    }
}

/// A verified invariant rational function `f = numerator / denominator` with
/// `sigma^period(f) = f` as an exact identity.
#[derive(Clone, PartialEq, Debug)]
pub struct InvariantWitness {
    pub numerator: RatLaurent,
    pub denominator: RatLaurent,
    pub period: u32,
    pub kind: WitnessKind,
    pub vars: CoordinateNames,
}

impl InvariantWitness {
    pub fn of_polynomial(
        p: RatLaurent,
        period: u32,
        kind: WitnessKind,
        vars: CoordinateNames,
    ) -> Self {
        let arity = p.arity();
        InvariantWitness {
            numerator: p,
            denominator: RatLaurent::one(arity),
            period,
            kind,
            vars,
        }
    }

    pub fn is_nonconstant(&self) -> bool {
        // p/q constant would force p = c q.
        if self.denominator.is_constant() {
            return !self.numerator.is_constant();
        }
        if self.numerator.is_zero() {
            return false;
        }
        // Compare cross-monomial structure: p*q' != q*p' for some derivative
        // is overkill; a direct proportionality check is exact and cheap.
        let (e0, c0) = match self.numerator.terms().next() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return false,
        };
        let d0 = self.denominator.coeff(&e0);
        if d0.is_zero() {
            return true;
        }
        let ratio = c0 / d0;
        self.numerator != self.denominator.scale(&ratio)
    }

    /// Exact substitution check: `sigma^period(p) q == p sigma^period(q)`.
    pub fn verify(&self, s: &Automorphism) -> bool {
        let (ps, qs) = match s {
            Automorphism::Monomial(m) => {
                let it = m.iterate(self.period as i64);
                (
                    it.apply_laurent(&self.numerator),
                    it.apply_laurent(&self.denominator),
                )
            }
            Automorphism::Plane(p) => {
                let it = p.iterate(self.period as i64);
                let subs = [it.pair().0.clone(), it.pair().1.clone()];
                (
                    self.numerator.substitute(&subs).expect("plane polynomials"),
                    self.denominator
                        .substitute(&subs)
                        .expect("plane polynomials"),
                )
            }
        };
        ps.mul(&self.denominator) == self.numerator.mul(&qs)
    }
}

impl fmt::Display for InvariantWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: &[&str] = self.vars.names();
        if self.denominator.is_constant() && self.denominator.constant_term().is_one() {
            write!(f, "{}", self.numerator.display_with(vars))
        } else {
            write!(
                f,
                "({}) / ({})",
                self.numerator.display_with(vars),
                self.denominator.display_with(vars)
            )
        }
    }
}

/// Output of the lattice-kernel route for one period.
#[derive(Clone, Debug)]
pub struct MonomialInvariantReport {
    pub period: u32,
    /// Basis of the fixed exponent lattice `{ a : M^m a = a }` (primitive).
    pub fixed_basis: LatticeBasis,
    /// Accumulated coefficient scalar of `sigma^m` on each basis monomial.
    pub scalars: Vec<Rational>,
    /// Basis of the subgroup of the fixed lattice on which the accumulated
    /// scalar is exactly 1; these exponents give true invariant monomials.
    /// Not saturated in general: the scalar condition genuinely selects a
    /// finite-index subgroup (e.g. only even powers).
    pub invariant_exponents: Vec<Vec<Integer>>,
    /// Verified witnesses `u^a` for the invariant exponents.
    pub witnesses: Vec<InvariantWitness>,
}

impl MonomialInvariantReport {
    pub fn has_invariant(&self) -> bool {
        !self.invariant_exponents.is_empty()
    }
}

fn int_vec_to_i64(v: &[Integer]) -> Vec<i64> {
    v.iter()
        .map(|c| c.to_i64().expect("desk-scale exponent"))
        .collect()
}

/// Invariant monomials of `sigma^m` via the kernel of `M^m - I`.
pub fn invariant_monomials(s: &MonomialAutomorphism, m: u32) -> MonomialInvariantReport {
    assert!(m >= 1);
    let n = s.arity();
    let mm = s.matrix().pow(m).sub(&IntMat::identity(n));
    let fixed_basis = LatticeBasis::kernel_of(&mm);
    let scalars: Vec<Rational> = fixed_basis
        .vectors()
        .iter()
        .map(|a| s.accumulated_coeff(&int_vec_to_i64(a), m))
        .collect();
    let invariant_exponents = scalar_one_subgroup(fixed_basis.vectors(), &scalars);
    let witnesses = invariant_exponents
        .iter()
        .map(|a| {
            let w = InvariantWitness::of_polynomial(
                RatLaurent::monomial(n, Rational::one(), int_vec_to_i64(a)),
                m,
                WitnessKind::Monomial,
                CoordinateNames::Torus,
            );
            debug_assert!(w.verify(&Automorphism::Monomial(s.clone())));
            w
        })
        .collect();
    MonomialInvariantReport {
        period: m,
        fixed_basis,
        scalars,
        invariant_exponents,
        witnesses,
    }
}

/// Subgroup `{ x : prod scalars[j]^(x_j) = 1 }` of the integer span, pushed
/// back to exponent vectors.
fn scalar_one_subgroup(basis: &[Vec<Integer>], scalars: &[Rational]) -> Vec<Vec<Integer>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let r = basis.len();
    // Valuation rows: one per prime dividing any scalar.
    let mut primes: Vec<Integer> = Vec::new();
    for s in scalars {
        for part in [s.numer().abs(), s.denom().clone()] {
            for (p, _) in trial_factor(&part) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
    }
    let mut rows: Vec<Vec<Integer>> = Vec::new();
    for p in &primes {
        rows.push(
            scalars
                .iter()
                .map(|s| Integer::from(valuation(s, p)))
                .collect(),
        );
    }
    let modulus_kernel: Vec<Vec<Integer>> = if rows.is_empty() {
        (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| if i == j { Integer::one() } else { Integer::zero() })
                    .collect()
            })
            .collect()
    } else {
        IntMat::from_rows(rows).expect("rectangular").integer_kernel_basis()
    };
    // Now impose the sign condition: prod sign(scalars[j])^(x_j) = +1.
    let parities: Vec<u8> = modulus_kernel
        .iter()
        .map(|x| {
            let mut parity = 0u8;
            for (j, c) in x.iter().enumerate() {
                if scalars[j].is_negative() && c.is_odd() {
                    parity ^= 1;
                }
            }
            parity
        })
        .collect();
    let coord_basis: Vec<Vec<Integer>> = if parities.iter().all(|&p| p == 0) {
        modulus_kernel
    } else {
        let pivot = parities.iter().position(|&p| p == 1).unwrap();
        let mut out = Vec::new();
        for (j, v) in modulus_kernel.iter().enumerate() {
            if j == pivot {
                continue;
            }
            if parities[j] == 0 {
                out.push(v.clone());
            } else {
                out.push(
                    v.iter()
                        .zip(&modulus_kernel[pivot])
                        .map(|(a, b)| a - b)
                        .collect(),
                );
            }
        }
        out.push(
            modulus_kernel[pivot]
                .iter()
                .map(|c| c * Integer::from(2))
                .collect(),
        );
        out
    };
    // Push coordinates back to exponent vectors.
    coord_basis
        .iter()
        .map(|x| {
            let mut v = vec![Integer::zero(); basis[0].len()];
            for (j, c) in x.iter().enumerate() {
                for (i, b) in basis[j].iter().enumerate() {
                    v[i] += c * b;
                }
            }
            v
        })
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .collect()
}

fn trial_factor(n: &Integer) -> Vec<(Integer, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n <= Integer::one() {
        return out;
    }
    let mut p = Integer::from(2);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut e = 0u32;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > Integer::one() {
        out.push((n, 1));
    }
    out
}

fn valuation(q: &Rational, p: &Integer) -> i64 {
    let mut v = 0i64;
    let mut n = q.numer().abs();
    while !n.is_zero() && (&n % p).is_zero() {
        n /= p;
        v += 1;
    }
    let mut d = q.denom().clone();
    while (&d % p).is_zero() {
        d /= p;
        v -= 1;
    }
    v
}

/// Outcome of the complete power-invariance decision for a monomial map.
#[derive(Clone, Debug)]
pub enum PowerInvariance {
    /// A verified invariant exists; the witness is invariant under
    /// `sigma^period` (orbit-sum descent also yields a `sigma`-invariant;
    /// see `sigma_invariant`).
    Exists(InvariantWitness),
    /// No power of `sigma` admits a nonconstant invariant rational function.
    /// Certified: every eigenvalue-one exponent lattice of every power
    /// carries a coefficient scalar of modulus != 1.
    CertifiedAbsent,
}

/// Decide, completely, whether any power of a monomial automorphism has a
/// nonconstant invariant rational function.
///
/// Any invariant of any power forces an exponent vector fixed by some
/// `M^s` (with `s` ranging over the root-of-unity order closure) whose
/// accumulated scalar has modulus one; conversely such a vector yields an
/// invariant of `sigma^s` (scalar 1 on `a` or on `2a`).
pub fn power_invariant(s: &MonomialAutomorphism) -> PowerInvariance {
    let n = s.arity();
    for k in quasi_unipotence_orders(n) {
        let m = k as u32;
        let fixed = LatticeBasis::kernel_of(&s.matrix().pow(m).sub(&IntMat::identity(n)));
        if fixed.is_empty() {
            continue;
        }
        let scalars: Vec<Rational> = fixed
            .vectors()
            .iter()
            .map(|a| s.accumulated_coeff(&int_vec_to_i64(a), m))
            .collect();
        let unit = unit_scalar_subgroup(fixed.vectors(), &scalars);
        if let Some(a) = unit.first() {
            let exps = int_vec_to_i64(a);
            let c = s.accumulated_coeff(&exps, m);
            let witness = if c.is_one() {
                InvariantWitness::of_polynomial(
                    RatLaurent::monomial(n, Rational::one(), exps),
                    m,
                    WitnessKind::Monomial,
                    CoordinateNames::Torus,
                )
            } else {
                // c = -1: the squared monomial is invariant.
                InvariantWitness::of_polynomial(
                    RatLaurent::monomial(
                        n,
                        Rational::one(),
                        exps.iter().map(|e| 2 * e).collect(),
                    ),
                    m,
                    WitnessKind::Monomial,
                    CoordinateNames::Torus,
                )
            };
            assert!(witness.verify(&Automorphism::Monomial(s.clone())));
            return PowerInvariance::Exists(witness);
        }
    }
    PowerInvariance::CertifiedAbsent
}

/// `{ x : |prod scalars^x| = 1 }`: the valuation kernel with no sign
/// condition.
fn unit_scalar_subgroup(basis: &[Vec<Integer>], scalars: &[Rational]) -> Vec<Vec<Integer>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let r = basis.len();
    let mut primes: Vec<Integer> = Vec::new();
    for s in scalars {
        for part in [s.numer().abs(), s.denom().clone()] {
            for (p, _) in trial_factor(&part) {
                if !primes.contains(&p) {
                    primes.push(p);
                }
            }
        }
    }
    let coord: Vec<Vec<Integer>> = if primes.is_empty() {
        (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| if i == j { Integer::one() } else { Integer::zero() })
                    .collect()
            })
            .collect()
    } else {
        let rows: Vec<Vec<Integer>> = primes
            .iter()
            .map(|p| {
                scalars
                    .iter()
                    .map(|s| Integer::from(valuation(s, p)))
                    .collect()
            })
            .collect();
        IntMat::from_rows(rows).expect("rectangular").integer_kernel_basis()
    };
    coord
        .iter()
        .map(|x| {
            let mut v = vec![Integer::zero(); basis[0].len()];
            for (j, c) in x.iter().enumerate() {
                for (i, b) in basis[j].iter().enumerate() {
                    v[i] += c * b;
                }
            }
            v
        })
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .collect()
}

/// A nonconstant function invariant under `sigma` itself (period 1), when
/// one exists: the orbit-sum descent applied to the first power witness.
pub fn sigma_invariant(s: &MonomialAutomorphism) -> Option<InvariantWitness> {
    let n = s.arity();
    for k in quasi_unipotence_orders(n) {
        let m = k as u32;
        let fixed = LatticeBasis::kernel_of(&s.matrix().pow(m).sub(&IntMat::identity(n)));
        if fixed.is_empty() {
            continue;
        }
        let scalars: Vec<Rational> = fixed
            .vectors()
            .iter()
            .map(|a| s.accumulated_coeff(&int_vec_to_i64(a), m))
            .collect();
        for a in unit_scalar_subgroup(fixed.vectors(), &scalars) {
            let exps = int_vec_to_i64(&a);
            if let Some(w) = orbit_sum_invariant(s, &exps) {
                return Some(w);
            }
            let doubled: Vec<i64> = exps.iter().map(|e| 2 * e).collect();
            if let Some(w) = orbit_sum_invariant(s, &doubled) {
                return Some(w);
            }
        }
    }
    None
}

/// Weighted sum over the exponent orbit of `a`, made `sigma`-invariant when
/// the cycle scalar allows it (scaled directly at cycle scalar 1, squared at
/// cycle scalar -1 on an odd orbit).
fn orbit_sum_invariant(s: &MonomialAutomorphism, a: &[i64]) -> Option<InvariantWitness> {
    let n = s.arity();
    let mut orbit = vec![a.to_vec()];
    let mut cur = a.to_vec();
    let cap = 1 + quasi_unipotence_orders(n).last().copied().unwrap_or(12) as usize;
    for _ in 0..cap {
        let next: Vec<i64> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| s.matrix()[(i, j)].to_i64().expect("desk scale") * cur[j])
                    .sum()
            })
            .collect();
        if next == *a {
            cur = next;
            break;
        }
        orbit.push(next.clone());
        cur = next;
    }
    if cur != *a {
        return None;
    }
    // Cycle scalar: product of per-step scalars lambda^(orbit point).
    let mut cycle = Rational::one();
    for x in &orbit {
        cycle *= s.coeff_power(x);
    }
    let build_sum = |t: &Rational| -> RatLaurent {
        let mut p = RatLaurent::zero(n);
        let mut d = Rational::one();
        for x in &orbit {
            p.add_term(x.clone(), d.clone());
            d = d * s.coeff_power(x) / t.clone();
        }
        p
    };
    let candidate = if cycle.is_one() {
        Some(build_sum(&Rational::one()))
    } else if cycle == -Rational::one() && orbit.len() % 2 == 1 {
        let g = build_sum(&-Rational::one());
        Some(g.mul(&g))
    } else {
        None
    };
    let p = candidate?;
    if p.is_constant() {
        return None;
    }
    let w = InvariantWitness::of_polynomial(p, 1, WitnessKind::Monomial, CoordinateNames::Torus);
    if w.verify(&Automorphism::Monomial(s.clone())) {
        Some(w)
    } else {
        None
    }
}

const COEFF_SPACE_CAP: usize = 8192;

/// Degree-bounded brute-force invariant search: the eigen-ratio oracle.
pub fn bounded_invariant_search(
    s: &Automorphism,
    degree_bound: u32,
    period: u32,
) -> Result<Vec<InvariantWitness>> {
    match s {
        Automorphism::Monomial(m) => bounded_search_monomial(m, degree_bound, period),
        Automorphism::Plane(p) => bounded_search_plane(p, degree_bound, period),
    }
}

/// Monomial case. The substitution action permutes monomials up to scalars,
/// so semi-invariants with unit eigenvalue `t * u^b` are supported on orbits
/// of the affine exponent map `x -> M x - b` that stay inside the box, and
/// eigenvectors are weighted orbit sums; pairs sharing `(b, t)` give
/// invariant ratios.
fn bounded_search_monomial(
    s: &MonomialAutomorphism,
    degree_bound: u32,
    period: u32,
) -> Result<Vec<InvariantWitness>> {
    let n = s.arity();
    let d = degree_bound as i64;
    let box_size = (2 * d + 1).pow(n as u32) as usize;
    if box_size > COEFF_SPACE_CAP {
        return Err(Error::resource(
            "coefficient-space",
            format!("monomial box of size {box_size} exceeds the cap"),
        ));
    }
    let tau = s.iterate(period as i64);
    let mut points = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &points {
            for x in -d..=d {
                let mut q: Vec<i64> = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        points = next;
    }
    let image = |x: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| tau.matrix()[(i, j)].to_i64().expect("desk scale") * x[j])
                    .sum()
            })
            .collect()
    };
    // Candidate shifts b = Phi(x) - y for box points x, y.
    let mut shifts: Vec<Vec<i64>> = Vec::new();
    for x in &points {
        let fx = image(x);
        for y in &points {
            let b: Vec<i64> = fx.iter().zip(y).map(|(a, c)| a - c).collect();
            if !shifts.contains(&b) {
                shifts.push(b);
            }
        }
    }
    shifts.sort();
    let in_box = |x: &[i64]| x.iter().all(|&c| c.abs() <= d);
    let mut witnesses: Vec<InvariantWitness> = Vec::new();
    for b in &shifts {
        // Orbits of psi(x) = Phi(x) - b inside the box.
        let mut seen: Vec<Vec<i64>> = Vec::new();
        let mut orbits: Vec<Vec<Vec<i64>>> = Vec::new();
        for start in &points {
            if seen.contains(start) {
                continue;
            }
            let mut orbit = vec![start.clone()];
            let mut cur = start.clone();
            let mut closed = false;
            for _ in 0..=box_size {
                let nexti: Vec<i64> = image(&cur).iter().zip(b).map(|(a, c)| a - c).collect();
                if nexti == *start {
                    closed = true;
                    break;
                }
                if !in_box(&nexti) {
                    break;
                }
                orbit.push(nexti.clone());
                cur = nexti;
            }
            if closed {
                for x in &orbit {
                    seen.push(x.clone());
                }
                orbits.push(orbit);
            }
        }
        // Eigenvectors per orbit per rational eigenvalue t with t^len = cycle.
        let mut groups: BTreeMap<(Vec<i64>, Rational), Vec<RatLaurent>> = BTreeMap::new();
        for orbit in &orbits {
            let mut cycle = Rational::one();
            for x in orbit {
                cycle *= tau.coeff_power(x);
            }
            for t in rational_roots_of_power(&cycle, orbit.len() as u32) {
                let mut p = RatLaurent::zero(n);
                let mut dcoef = Rational::one();
                for x in orbit {
                    p.add_term(x.clone(), dcoef.clone());
                    dcoef = dcoef * tau.coeff_power(x) / t.clone();
                }
                groups.entry((b.clone(), t)).or_default().push(p);
            }
        }
        for ((_, t), vecs) in groups {
            // Invariant polynomials: eigenvalue exactly 1 and zero shift.
            if b.iter().all(|&c| c == 0) && t.is_one() {
                for p in &vecs {
                    if !p.is_constant() {
                        push_witness(
                            &mut witnesses,
                            p.clone(),
                            RatLaurent::one(n),
                            period,
                            s,
                        );
                    }
                }
            }
            for pair in vecs.windows(2) {
                push_witness(
                    &mut witnesses,
                    pair[0].clone(),
                    pair[1].clone(),
                    period,
                    s,
                );
            }
        }
    }
    Ok(witnesses)
}

fn push_witness(
    out: &mut Vec<InvariantWitness>,
    p: RatLaurent,
    q: RatLaurent,
    period: u32,
    s: &MonomialAutomorphism,
) {
    // Canonical form of the ratio: shift both parts by the joint minimum
    // exponent and scale both by the denominator's first coefficient, so
    // equivalent ratios collapse to one representative.
    let (p, q) = joint_normalize(p, q);
    let w = InvariantWitness {
        numerator: p,
        denominator: q,
        period,
        kind: WitnessKind::BruteForce,
        vars: CoordinateNames::Torus,
    };
    if w.is_nonconstant()
        && w.verify(&Automorphism::Monomial(s.clone()))
        && !out.contains(&w)
    {
        out.push(w);
    }
}

fn joint_normalize(p: RatLaurent, q: RatLaurent) -> (RatLaurent, RatLaurent) {
    let arity = p.arity();
    let joint: Option<Vec<i64>> = match (p.support_min(), q.support_min()) {
        (Some(a), Some(b)) => Some(a.iter().zip(&b).map(|(x, y)| *(x.min(y))).collect()),
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => None,
    };
    let (mut p, mut q) = match joint {
        Some(m) => {
            let neg: Vec<i64> = m.iter().map(|e| -e).collect();
            (p.shift(&neg), q.shift(&neg))
        }
        None => (p, q),
    };
    let lead = q.terms().next().map(|(_, c)| c.clone());
    if let Some(c) = lead {
        let inv = Rational::one() / c;
        p = p.scale(&inv);
        q = q.scale(&inv);
    }
    let _ = arity;
    (p, q)
}

/// Rational solutions t of `t^k = c`.
fn rational_roots_of_power(c: &Rational, k: u32) -> Vec<Rational> {
    if c.is_zero() {
        return vec![];
    }
    let mag = c.abs();
    let rn = nth_root_exact(mag.numer(), k);
    let rd = nth_root_exact(mag.denom(), k);
    let (Some(rn), Some(rd)) = (rn, rd) else {
        return vec![];
    };
    let r = Rational::new(rn, rd);
    let mut out = Vec::new();
    for cand in [r.clone(), -r] {
        let mut p = Rational::one();
        for _ in 0..k {
            p *= cand.clone();
        }
        if p == *c && !out.contains(&cand) {
            out.push(cand);
        }
    }
    out
}

fn nth_root_exact(n: &Integer, k: u32) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let r = n.nth_root(k);
    let mut p = Integer::one();
    for _ in 0..k {
        p *= &r;
    }
    if &p == n {
        Some(r)
    } else {
        None
    }
}

/// Plane case: stabilize the degree-bounded coefficient space under the
/// substitution action, then pair eigenvectors by rational eigenvalue.
fn bounded_search_plane(
    s: &PlaneAutomorphism,
    degree_bound: u32,
    period: u32,
) -> Result<Vec<InvariantWitness>> {
    let d = degree_bound as i64;
    let tau = s.iterate(period as i64);
    // Basis of V: monomials z^i w^j with i + j <= d.
    let mut basis: Vec<(i64, i64)> = Vec::new();
    for i in 0..=d {
        for j in 0..=(d - i) {
            basis.push((i, j));
        }
    }
    if basis.len() > 64 {
        return Err(Error::resource(
            "coefficient-space",
            format!("plane basis of size {} exceeds the cap", basis.len()),
        ));
    }
    let subs = [tau.pair().0.clone(), tau.pair().1.clone()];
    let act = |p: &RatLaurent| p.substitute(&subs).expect("plane polynomials");
    // Iteratively cut down to the largest subspace W with act(W) in W.
    // Represent W by a basis of polynomials.
    let mut w_basis: Vec<RatLaurent> = basis
        .iter()
        .map(|&(i, j)| RatLaurent::monomial(2, Rational::one(), vec![i, j]))
        .collect();
    loop {
        let images: Vec<RatLaurent> = w_basis.iter().map(&act).collect();
        // Coordinates: collect all exponents appearing anywhere.
        let mut exps: Vec<Vec<i64>> = Vec::new();
        for p in w_basis.iter().chain(images.iter()) {
            for (e, _) in p.terms() {
                if !exps.contains(e) {
                    exps.push(e.clone());
                }
            }
        }
        exps.sort();
        let coord = |p: &RatLaurent| -> Vec<Rational> {
            exps.iter().map(|e| p.coeff(e)).collect()
        };
        // Solve: which combinations of images land back in span(w_basis)?
        // Columns: w_basis coords (negated) followed by image coords; kernel
        // rows pair (combination, expression in basis).
        let k = w_basis.len();
        let rows = exps.len();
        let mat = RatMat::from_fn(rows, 2 * k, |r, c| {
            if c < k {
                coord(&images[c])[r].clone()
            } else {
                -coord(&w_basis[c - k])[r].clone()
            }
        });
        let kernel = mat.kernel_basis();
        // Combinations x (first k coords) with act(sum x_i b_i) in span. The
        // second block is determined by the first (the basis coordinate
        // matrix has full column rank), so the projections of a kernel basis
        // stay independent.
        let stable: Vec<Vec<Rational>> = kernel
            .iter()
            .map(|v| v[..k].to_vec())
            .filter(|x| x.iter().any(|c| !c.is_zero()))
            .collect();
        debug_assert_eq!(
            RatMat::from_fn(stable.len(), k, |r, c| stable[r][c].clone()).rank(),
            stable.len()
        );
        if stable.len() == k {
            break;
        }
        w_basis = stable
            .iter()
            .map(|x| {
                let mut p = RatLaurent::zero(2);
                for (c, b) in x.iter().zip(&w_basis) {
                    p = p.add(&b.scale(c));
                }
                p
            })
            .collect();
        if w_basis.is_empty() {
            return Ok(Vec::new());
        }
    }
    // Endomorphism matrix of the action on W.
    let images: Vec<RatLaurent> = w_basis.iter().map(&act).collect();
    let k = w_basis.len();
    let mut exps: Vec<Vec<i64>> = Vec::new();
    for p in w_basis.iter().chain(images.iter()) {
        for (e, _) in p.terms() {
            if !exps.contains(e) {
                exps.push(e.clone());
            }
        }
    }
    exps.sort();
    let coord_mat = RatMat::from_fn(exps.len(), k, |r, c| w_basis[c].coeff(&exps[r]));
    let mut a = RatMat::zero(k, k);
    for (col, img) in images.iter().enumerate() {
        let rhs: Vec<Rational> = exps.iter().map(|e| img.coeff(e)).collect();
        let x = crate::lattice::solve(&coord_mat, &rhs)
            .expect("stable subspace: image lies in the span");
        for (row, val) in x.into_iter().enumerate() {
            a[(row, col)] = val;
        }
    }
    let charpoly = a.char_poly();
    let eigenvalues = charpoly.rational_roots()?;
    let mut witnesses = Vec::new();
    for t in eigenvalues {
        let shifted = RatMat::from_fn(k, k, |i, j| {
            if i == j {
                a[(i, j)].clone() - t.clone()
            } else {
                a[(i, j)].clone()
            }
        });
        let eig = shifted.kernel_basis();
        let vecs: Vec<RatLaurent> = eig
            .iter()
            .map(|x| {
                let mut p = RatLaurent::zero(2);
                for (c, b) in x.iter().zip(&w_basis) {
                    p = p.add(&b.scale(c));
                }
                p
            })
            .collect();
        for (i, p) in vecs.iter().enumerate() {
            if t.is_one() && !p.is_constant() {
                let w = InvariantWitness::of_polynomial(
                    p.clone(),
                    period,
                    WitnessKind::BruteForce,
                    CoordinateNames::Plane,
                );
                if w.verify(&Automorphism::Plane(s.clone())) && !witnesses.contains(&w) {
                    witnesses.push(w);
                }
            }
            for q in vecs.iter().skip(i + 1) {
                let w = InvariantWitness {
                    numerator: p.clone(),
                    denominator: q.clone(),
                    period,
                    kind: WitnessKind::BruteForce,
                    vars: CoordinateNames::Plane,
                };
                if w.is_nonconstant()
                    && w.verify(&Automorphism::Plane(s.clone()))
                    && !witnesses.contains(&w)
                {
                    witnesses.push(w);
                }
            }
        }
    }
    Ok(witnesses)
}

/// Fibration data for an elementary-type plane automorphism.
#[derive(Clone, Debug)]
pub struct FibrationReport {
    /// The fibration function: the second coordinate pulled back through the
    /// conjugating witness.
    pub function: RatLaurent,
    /// Induced action on the base: `w -> beta w + gamma`.
    pub base_beta: Rational,
    pub base_gamma: Rational,
    /// Exact order of the base action, when finite.
    pub base_order: Option<u32>,
    /// Invariant of `sigma^m` (m = base order) when the base action is
    /// finite, verified.
    pub power_invariant: Option<InvariantWitness>,
    /// A function invariant under `sigma` itself, built from the base orbit
    /// of the fibration function, when the base action is finite.
    pub sigma_invariant: Option<InvariantWitness>,
    /// The fibration function is a semi-invariant (`f . sigma = beta f`).
    pub semi_invariant: bool,
}

/// Extract the invariant fibration of an elementary-type plane automorphism.
pub fn invariant_fibration(s: &PlaneAutomorphism) -> Result<FibrationReport> {
    let class = s.classify();
    let (conj, target) = match class {
        PlaneClass::Henon { .. } => {
            return Err(Error::Unsupported(
                "invariant fibration of a Henon-type automorphism".into(),
            ))
        }
        PlaneClass::Elementary {
            conjugator, target, ..
        } => match (conjugator, target) {
            (Some(c), Some(t)) => (c, t),
            _ => {
                return Err(Error::Unsupported(
                    "no rational conjugating witness to an elementary map".into(),
                ))
            }
        },
    };
    // F = w . conj^{-1}: sigma = conj . target . conj^{-1} sends the fiber
    // F = c to F = beta c + gamma.
    let function = conj.inverse().pair().1.clone();
    let beta = target.beta.clone();
    let gamma = target.gamma.clone();
    let base_order = if beta.is_one() && gamma.is_zero() {
        Some(1)
    } else if beta == -Rational::one() {
        Some(2)
    } else {
        None
    };
    let compose_sigma = |p: &RatLaurent| -> RatLaurent {
        p.substitute(&[s.pair().0.clone(), s.pair().1.clone()])
            .expect("plane polynomials")
    };
    // Exact self-check of the base action: F . sigma = beta F + gamma.
    let f_sigma = compose_sigma(&function);
    let expected = function
        .scale(&beta)
        .add(&RatLaurent::constant(2, gamma.clone()));
    if f_sigma != expected {
        return Err(Error::Invalid(
            "conjugation witness failed the base-action identity".into(),
        ));
    }
    let mut power_invariant = None;
    let mut sigma_inv = None;
    if let Some(m) = base_order {
        let w = InvariantWitness::of_polynomial(
            function.clone(),
            m,
            WitnessKind::Fibration,
            CoordinateNames::Plane,
        );
        if w.verify(&Automorphism::Plane(s.clone())) {
            power_invariant = Some(w);
        }
        // sigma-invariant from the base orbit: F itself at order 1, the
        // product F * (F . sigma) at order 2.
        let candidate = if m == 1 {
            function.clone()
        } else {
            let prod = function.mul(&f_sigma);
            // Prefer a positive leading coefficient.
            let neg_lead = prod
                .terms()
                .last()
                .map(|(_, c)| c.is_negative())
                .unwrap_or(false);
            if neg_lead {
                prod.neg()
            } else {
                prod
            }
        };
        if !candidate.is_constant() {
            let w = InvariantWitness::of_polynomial(
                candidate,
                1,
                WitnessKind::Fibration,
                CoordinateNames::Plane,
            );
            if w.verify(&Automorphism::Plane(s.clone())) {
                sigma_inv = Some(w);
            }
        }
    }
    let semi_invariant = gamma.is_zero() && !beta.is_one();
    Ok(FibrationReport {
        function,
        base_beta: beta,
        base_gamma: gamma,
        base_order,
        power_invariant,
        sigma_invariant: sigma_inv,
        semi_invariant,
    })
}

/// A codimension-one periodic direction for a two-torus monomial map.
#[derive(Clone, Debug)]
pub struct DivisorDirection {
    /// Primitive cocharacter direction, periodic under the transpose matrix.
    pub cocharacter: Vec<Integer>,
    /// The orthogonal character exponent: the family is `{ u^a = c }`.
    pub character: Vec<i64>,
    /// Smallest period `m <= N` with `(M^T)^m b = sign * b`.
    pub period: u32,
    pub sign: i8,
    /// Accumulated coefficient of `sigma^period` on `u^a` (sign `+` only).
    pub scalar: Option<Rational>,
    /// Whether the direction carries infinitely many periodic divisors.
    pub family_infinite: bool,
}

#[derive(Clone, Debug)]
pub struct PeriodicDivisorReport {
    /// Some power of the matrix acts as the identity on directions, so every
    /// primitive direction is periodic (enumeration capped).
    pub all_directions_periodic: bool,
    pub directions: Vec<DivisorDirection>,
    /// Dichotomy verdict: infinitely many periodic codimension-one subtori.
    pub infinitely_many: bool,
    /// Invariant of some power, produced whenever `infinitely_many`.
    pub witness: Option<InvariantWitness>,
}

/// Enumerate periodic codimension-one subtorus directions up to period `N`.
pub fn periodic_divisors(s: &MonomialAutomorphism, n_cap: u32) -> Result<PeriodicDivisorReport> {
    if s.arity() != 2 {
        return Err(Error::Unsupported(
            "periodic divisor enumeration is implemented for the 2-torus".into(),
        ));
    }
    let mt = s.matrix().transpose();
    let mut directions: Vec<DivisorDirection> = Vec::new();
    let mut all_periodic = false;
    let mut seen: Vec<Vec<Integer>> = Vec::new();
    for m in 1..=n_cap {
        let p = mt.pow(m);
        for (sign, mat) in [
            (1i8, p.sub(&IntMat::identity(2))),
            (-1i8, p.add(&IntMat::identity(2))),
        ] {
            let kernel = mat.integer_kernel_basis();
            if kernel.len() == 2 {
                all_periodic = true;
                continue;
            }
            for b in kernel {
                if seen.contains(&b) {
                    continue;
                }
                seen.push(b.clone());
                // Orthogonal character direction.
                let a = vec![
                    b[1].to_i64().expect("desk scale"),
                    -(b[0].to_i64().expect("desk scale")),
                ];
                let (scalar, family_infinite) = if sign > 0 {
                    let c = s.accumulated_coeff(&a, m);
                    let inf = c.is_one() || c == -Rational::one();
                    (Some(c), inf)
                } else {
                    // M^m a = -a: every fiber value is 2-periodic.
                    (None, true)
                };
                directions.push(DivisorDirection {
                    cocharacter: b,
                    character: a,
                    period: m,
                    sign,
                    scalar,
                    family_infinite,
                });
            }
        }
    }
    let mut infinitely_many = directions.iter().any(|d| d.family_infinite);
    let mut witness = None;
    if all_periodic {
        // Identity-like action on directions: infinitude is governed by the
        // coefficient scalars exactly as in the general power-invariance
        // decision.
        match power_invariant(s) {
            PowerInvariance::Exists(w) => {
                infinitely_many = true;
                witness = Some(w);
            }
            PowerInvariance::CertifiedAbsent => {}
        }
    } else if infinitely_many {
        match power_invariant(s) {
            PowerInvariance::Exists(w) => witness = Some(w),
            PowerInvariance::CertifiedAbsent => {
                return Err(Error::Invalid(
                    "internal inconsistency: infinite divisor family without an invariant"
                        .into(),
                ))
            }
        }
    }
    Ok(PeriodicDivisorReport {
        all_directions_periodic: all_periodic,
        directions,
        infinitely_many,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::{ElementaryFactor, PlaneFactor};
    use crate::{rat, ratio};

    fn mono(rows: &[&[i64]]) -> MonomialAutomorphism {
        MonomialAutomorphism::with_trivial_coeffs(IntMat::from_i64(rows).unwrap()).unwrap()
    }

    fn mono_with(rows: &[&[i64]], coeffs: &[Rational]) -> MonomialAutomorphism {
        MonomialAutomorphism::new(IntMat::from_i64(rows).unwrap(), coeffs.to_vec()).unwrap()
    }

    #[test]
    fn invariant_monomials_examples() {
        // swap, m=1: basis {(1,1)}, invariant uv
        let rep = invariant_monomials(&mono(&[&[0, 1], &[1, 0]]), 1);
        assert_eq!(rep.fixed_basis.vectors(), &[vec![crate::int(1), crate::int(1)]]);
        assert!(rep.has_invariant());
        assert_eq!(rep.witnesses.len(), 1);
        assert_eq!(rep.witnesses[0].to_string(), "u*v");
        // shear, m=1: basis {(1,0)}, invariant u
        let rep = invariant_monomials(&mono(&[&[1, 1], &[0, 1]]), 1);
        assert_eq!(rep.witnesses[0].to_string(), "u");
        // Lorenz: empty for all m <= 6
        for m in 1..=6 {
            let rep = invariant_monomials(&mono(&[&[2, 1], &[1, 1]]), m);
            assert!(rep.fixed_basis.is_empty());
            assert!(!rep.has_invariant());
        }
    }

    #[test]
    fn coefficient_conditions_matter() {
        // sigma(u) = 2u, sigma(v) = v: u is only semi-invariant; v invariant.
        let s = mono_with(&[&[1, 0], &[0, 1]], &[rat(2), rat(1)]);
        let rep = invariant_monomials(&s, 1);
        assert_eq!(rep.fixed_basis.rank(), 2);
        // invariant exponents: only multiples of (0,1)
        assert_eq!(rep.invariant_exponents.len(), 1);
        assert_eq!(rep.witnesses[0].to_string(), "v");
        // sigma(u) = -u: u semi-invariant, u^2 invariant
        let s = mono_with(&[&[1, 0], &[0, 1]], &[rat(-1), rat(1)]);
        let rep = invariant_monomials(&s, 1);
        assert_eq!(rep.invariant_exponents.len(), 2);
        for w in &rep.witnesses {
            assert!(w.verify(&Automorphism::Monomial(s.clone())));
        }
    }

    #[test]
    fn power_invariance_decision() {
        // Lorenz: certified absent
        assert!(matches!(
            power_invariant(&mono(&[&[2, 1], &[1, 1]])),
            PowerInvariance::CertifiedAbsent
        ));
        // Jordan: certified absent
        assert!(matches!(
            power_invariant(&mono(&[&[0, 1], &[1, -1]])),
            PowerInvariance::CertifiedAbsent
        ));
        // swap: exists
        assert!(matches!(
            power_invariant(&mono(&[&[0, 1], &[1, 0]])),
            PowerInvariance::Exists(_)
        ));
        // scaling (2u, 3v): certified absent despite identity matrix
        let s = mono_with(&[&[1, 0], &[0, 1]], &[rat(2), rat(3)]);
        assert!(matches!(power_invariant(&s), PowerInvariance::CertifiedAbsent));
        // (2u, v/2): invariant uv exists
        let s = mono_with(&[&[1, 0], &[0, 1]], &[rat(2), ratio(1, 2)]);
        match power_invariant(&s) {
            PowerInvariance::Exists(w) => {
                assert!(w.verify(&Automorphism::Monomial(s)));
            }
            other => panic!("expected invariant, got {other:?}"),
        }
    }

    #[test]
    fn sigma_invariant_descends_from_powers() {
        // Inversion u -> u^{-1}, v -> v^{-1}: u + u^{-1} style invariants.
        let s = mono(&[&[-1, 0], &[0, -1]]);
        let w = sigma_invariant(&s).expect("invariant exists");
        assert_eq!(w.period, 1);
        assert!(w.verify(&Automorphism::Monomial(s)));
        // Rotation of order 4: orbit sums.
        let s = mono(&[&[0, -1], &[1, 0]]);
        let w = sigma_invariant(&s).expect("invariant exists");
        assert_eq!(w.period, 1);
        assert!(w.verify(&Automorphism::Monomial(s)));
        // Lorenz: none.
        assert!(sigma_invariant(&mono(&[&[2, 1], &[1, 1]])).is_none());
    }

    #[test]
    fn bounded_search_monomial_agrees() {
        // swap, D=1, m=1: finds u*v (as an invariant polynomial).
        let s = mono(&[&[0, 1], &[1, 0]]);
        let ws = bounded_invariant_search(&Automorphism::Monomial(s), 1, 1).unwrap();
        assert!(!ws.is_empty());
        assert!(ws
            .iter()
            .any(|w| w.to_string().contains("u*v") || w.to_string().contains("v*u")));
        // Lorenz: empty at D=2, m<=4
        let s = mono(&[&[2, 1], &[1, 1]]);
        for m in 1..=4 {
            let ws = bounded_invariant_search(&Automorphism::Monomial(s.clone()), 2, m).unwrap();
            assert!(ws.is_empty(), "unexpected witnesses {ws:?}");
        }
    }

    #[test]
    fn bounded_search_plane() {
        // elementary (z + w^2, w): finds w at D=1, m=1
        let e = PlaneAutomorphism::from_word(vec![PlaneFactor::Elementary(
            ElementaryFactor::shear(rat(1), 2),
        )]);
        let ws = bounded_invariant_search(&Automorphism::Plane(e), 1, 1).unwrap();
        assert!(ws.iter().any(|w| w.numerator == RatLaurent::var(2, 1)
            && w.denominator.is_constant()));
        // Henon (z^2 + 1 - w, z): empty for D <= 3, m <= 2
        let z = RatLaurent::var(2, 0);
        let wv = RatLaurent::var(2, 1);
        let h = PlaneAutomorphism::from_pair(
            z.pow(2).add(&RatLaurent::one(2)).sub(&wv),
            z.clone(),
        )
        .unwrap();
        for d in 1..=3 {
            for m in 1..=2 {
                let ws =
                    bounded_invariant_search(&Automorphism::Plane(h.clone()), d, m).unwrap();
                assert!(ws.is_empty(), "D={d} m={m}: {ws:?}");
            }
        }
    }

    #[test]
    fn fibration_examples() {
        // (z + w^2, w): invariant w with period 1
        let e = PlaneAutomorphism::from_word(vec![PlaneFactor::Elementary(
            ElementaryFactor::shear(rat(1), 2),
        )]);
        let rep = invariant_fibration(&e).unwrap();
        assert_eq!(rep.base_order, Some(1));
        assert_eq!(rep.power_invariant.as_ref().unwrap().period, 1);
        assert!(rep.sigma_invariant.is_some());
        // (z + w^2, -w): base order 2, sigma-invariant w^2
        let e = PlaneAutomorphism::from_word(vec![PlaneFactor::Elementary(
            ElementaryFactor::new(
                rat(1),
                crate::unipoly::UniPoly::monomial(rat(1), 2),
                rat(-1),
                rat(0),
            )
            .unwrap(),
        )]);
        let rep = invariant_fibration(&e).unwrap();
        assert_eq!(rep.base_order, Some(2));
        let si = rep.sigma_invariant.unwrap();
        assert_eq!(si.period, 1);
        assert_eq!(si.numerator, RatLaurent::var(2, 1).pow(2));
        // (2z, 3w): semi-invariant w, no invariant
        let e = PlaneAutomorphism::from_word(vec![PlaneFactor::Elementary(
            ElementaryFactor::new(rat(2), crate::RatPoly::zero(), rat(3), rat(0)).unwrap(),
        )]);
        let rep = invariant_fibration(&e).unwrap();
        assert_eq!(rep.base_order, None);
        assert!(rep.semi_invariant);
        assert!(rep.power_invariant.is_none());
    }

    #[test]
    fn periodic_divisor_examples() {
        // swap, N=2: directions (1,1) and (1,-1) at period 1; the square of
        // the map is the identity, so at period 2 every direction is
        // periodic. Infinitely many invariant divisors either way.
        let rep = periodic_divisors(&mono(&[&[0, 1], &[1, 0]]), 2).unwrap();
        assert!(rep.all_directions_periodic);
        assert_eq!(rep.directions.len(), 2);
        assert!(rep.infinitely_many);
        assert!(rep.witness.is_some());
        // Restricted to period 1 only the two eigen-directions appear.
        let rep = periodic_divisors(&mono(&[&[0, 1], &[1, 0]]), 1).unwrap();
        assert!(!rep.all_directions_periodic);
        assert_eq!(rep.directions.len(), 2);
        // Lorenz, N=6: none.
        let rep = periodic_divisors(&mono(&[&[2, 1], &[1, 1]]), 6).unwrap();
        assert!(rep.directions.is_empty());
        assert!(!rep.infinitely_many);
        // identity, N=1: all directions periodic.
        let rep = periodic_divisors(&MonomialAutomorphism::identity(2), 1).unwrap();
        assert!(rep.all_directions_periodic);
        assert!(rep.infinitely_many);
    }
}
