//! Dense univariate polynomials, generic over the coefficient scalar.
//!
//! The exact machinery the rest of the crate leans on lives here: Euclidean
//! division and gcd over the rationals, squarefree parts, Sturm chains and
//! real-root isolation for integer polynomials, resultants, and cyclotomic
//! polynomials. Everything is exact; no floating point.

use crate::scalar::Scalar;
use crate::{int, Error, Integer, IntPoly, RatPoly, Rational, Result};
use num_integer::Integer as NumInteger;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Polynomial `c0 + c1 x + ... + cd x^d`, stored dense with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The variable `x`.
    pub fn var() -> Self {
        UniPoly {
            coeffs: vec![T::zero(), T::one()],
        }
    }

    /// `c * x^d`.
    pub fn monomial(c: T, d: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![T::zero(); d + 1];
        coeffs[d] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; the zero polynomial reports degree 0 alongside `is_zero`.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, d: usize) -> T {
        self.coeffs.get(d).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> T {
        self.coeffs.last().cloned().unwrap_or_else(T::zero)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut k = T::zero();
            for _ in 0..i {
                k = k + T::one();
            }
            coeffs.push(c.clone() * k);
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `p(x^2)`.
    pub fn compose_square(&self) -> Self {
        let mut coeffs = vec![T::zero(); 2 * self.coeffs.len().saturating_sub(1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Strip the factor `x^k`, returning `(k, quotient)`.
    pub fn strip_zero_roots(&self) -> (usize, Self) {
        if self.is_zero() {
            return (0, self.clone());
        }
        let k = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (k, UniPoly::from_coeffs(self.coeffs[k..].to_vec()))
    }
}

// Field-only routines: division, gcd, squarefree part, resultant.
impl UniPoly<Rational> {
    /// Euclidean division; panics if `div` is zero.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = UniPoly::zero();
        let dlead = div.leading();
        let ddeg = div.degree();
        while !rem.is_zero() && rem.degree() >= ddeg {
            let shift = rem.degree() - ddeg;
            let c = rem.leading() / dlead.clone();
            let term = UniPoly::monomial(c, shift);
            quot = quot.add(&term);
            rem = rem.sub(&term.mul(div));
        }
        (quot, rem)
    }

    /// True when `div` divides `self` exactly.
    pub fn divides_exactly(&self, div: &Self) -> bool {
        if div.is_zero() {
            return self.is_zero();
        }
        self.divrem(div).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        self.scale(&(Rational::one() / lead))
    }

    /// `p / gcd(p, p')`, monic. Roots are preserved, multiplicities dropped.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() || self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.monic();
        }
        self.divrem(&g).0.monic()
    }

    /// Lagrange interpolation through distinct sample points.
    pub fn interpolate(points: &[(Rational, Rational)]) -> RatPoly {
        let mut acc = RatPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = RatPoly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let denom = xi.clone() - xj.clone();
                let lin = RatPoly::from_coeffs(vec![
                    -xj.clone() / denom.clone(),
                    Rational::one() / denom,
                ]);
                basis = basis.mul(&lin);
            }
            acc = acc.add(&basis);
        }
        acc
    }

    /// Resultant of two polynomials via the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Self) -> Rational {
        let mut a = self.clone();
        let mut b = other.clone();
        if a.is_zero() || b.is_zero() {
            return Rational::zero();
        }
        let mut sign = Rational::one();
        let mut acc = Rational::one();
        loop {
            if b.is_constant() {
                let c = b.coeff(0);
                let res = acc.clone() * pow_rat(&c, a.degree());
                return sign * res;
            }
            let (_, r) = a.divrem(&b);
            if r.is_zero() {
                return Rational::zero();
            }
            // res(a, b) = (-1)^(da*db) * lc(b)^(da - dr) * res(b, r)
            let da = a.degree();
            let db = b.degree();
            let dr = r.degree();
            if (da * db) % 2 == 1 {
                sign = -sign;
            }
            acc = acc * pow_rat(&b.leading(), da - dr);
            a = b;
            b = r;
        }
    }

    /// Clear denominators and content: primitive integer polynomial with
    /// positive leading coefficient, a rational multiple of `self`.
    pub fn to_int_primitive(&self) -> IntPoly {
        let mut out = self.to_int_primitive_signed();
        if out.leading().is_negative() {
            out = out.neg();
        }
        out
    }

    /// Clear denominators and content by a positive rational factor only,
    /// preserving the sign of every coefficient (needed wherever signs carry
    /// meaning, notably Sturm chains).
    pub fn to_int_primitive_signed(&self) -> IntPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut lcm = Integer::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<Integer> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = Integer::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if content.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(ints.iter().map(|c| c / &content).collect())
    }

    /// All rational roots, with multiplicity 1 (computed on the squarefree
    /// part). Errors if the trial-division factoring budget is exceeded.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        let sf = self.squarefree_part();
        if sf.is_zero() || sf.is_constant() {
            return Ok(Vec::new());
        }
        let (zeros, core) = sf.to_int_primitive().strip_zero_roots();
        let mut roots = Vec::new();
        if zeros > 0 {
            roots.push(Rational::zero());
        }
        if core.is_constant() {
            roots.sort();
            return Ok(roots);
        }
        let a0 = core.coeff(0).abs();
        let an = core.leading().abs();
        let num_divs = divisors(&a0)?;
        let den_divs = divisors(&an)?;
        for p in &num_divs {
            for q in &den_divs {
                let cand = Rational::new(p.clone(), q.clone());
                for c in [cand.clone(), -cand] {
                    if core.eval_rat(&c).is_zero() && !roots.contains(&c) {
                        roots.push(c);
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }
}

impl IntPoly {
    pub fn to_rational(&self) -> RatPoly {
        UniPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Evaluate at a rational point.
    pub fn eval_rat(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval_rat(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Squarefree, primitive, positive-leading form with the same real roots.
    pub fn squarefree_primitive(&self) -> IntPoly {
        self.to_rational().squarefree_part().to_int_primitive()
    }

    /// Cauchy bound: every real root lies in `(-B, B)`.
    pub fn root_bound(&self) -> Rational {
        if self.is_zero() || self.is_constant() {
            return Rational::one();
        }
        let lead = Rational::from_integer(self.leading().abs());
        let mut maxq = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = Rational::from_integer(c.abs()) / lead.clone();
            if q > maxq {
                maxq = q;
            }
        }
        maxq + Rational::one()
    }

    /// Sturm chain of a squarefree polynomial. Chain members are scaled by
    /// positive rationals only; their signs are load-bearing.
    pub fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain: Vec<RatPoly> = vec![self.to_rational(), self.to_rational().derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        chain.iter().map(|p| p.to_int_primitive_signed()).collect()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`,
    /// given the Sturm chain of the squarefree polynomial.
    pub fn sturm_count(chain: &[IntPoly], a: &Rational, b: &Rational) -> usize {
        let va = sign_variations(chain, a);
        let vb = sign_variations(chain, b);
        va.saturating_sub(vb)
    }

    /// Isolate all real roots. Returns intervals sorted increasingly; a
    /// rational root is returned as a point interval `[r, r]`, any other
    /// root as an open interval `(lo, hi)` with a strict sign change and
    /// exactly one root inside.
    pub fn isolate_real_roots(&self) -> Vec<(Rational, Rational)> {
        let sf = self.squarefree_primitive();
        if sf.is_zero() || sf.is_constant() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let mut work = sf;
        // Deflate all rational roots up front so they come out as exact
        // points; fall back to pure bisection if the factoring budget for
        // root candidates is exhausted.
        if let Ok(rational) = work.to_rational().rational_roots() {
            for r in rational {
                roots.push((r.clone(), r.clone()));
                let lin = RatPoly::from_coeffs(vec![-r, Rational::one()]);
                work = work.to_rational().divrem(&lin).0.to_int_primitive();
            }
        }
        // Rational roots found at bisection sample points still deflate.
        'restart: loop {
            let (zeros, core) = work.strip_zero_roots();
            if zeros > 0 {
                roots.push((Rational::zero(), Rational::zero()));
                work = core;
                continue;
            }
            if work.is_constant() {
                break;
            }
            let chain = work.sturm_chain();
            let bound = work.root_bound();
            let mut stack = vec![(-bound.clone(), bound.clone())];
            let mut found: Vec<(Rational, Rational)> = Vec::new();
            while let Some((a, b)) = stack.pop() {
                let n = IntPoly::sturm_count(&chain, &a, &b);
                if n == 0 {
                    continue;
                }
                // The right endpoint may itself be the root counted by (a, b].
                if n == 1 && work.sign_at(&a) != 0 && work.sign_at(&b) != 0 {
                    found.push((a, b));
                    continue;
                }
                let mid = (a.clone() + b.clone()) / crate::rat(2);
                if work.sign_at(&mid) == 0 {
                    // Exact rational root: record, deflate, start over.
                    roots.push((mid.clone(), mid.clone()));
                    let lin = RatPoly::from_coeffs(vec![-mid, Rational::one()]);
                    work = work.to_rational().divrem(&lin).0.to_int_primitive();
                    continue 'restart;
                }
                stack.push((a, mid.clone()));
                stack.push((mid, b));
            }
            roots.extend(found);
            break;
        }
        roots.sort_by(|x, y| x.0.cmp(&y.0));
        roots
    }

    /// The k-th cyclotomic polynomial.
    pub fn cyclotomic(k: u64) -> IntPoly {
        assert!(k >= 1);
        // x^k - 1 divided by the cyclotomics of the proper divisors.
        let mut num = UniPoly::monomial(Integer::one(), k as usize)
            .sub(&UniPoly::constant(Integer::one()))
            .to_rational();
        for d in 1..k {
            if k % d == 0 {
                let (q, r) = num.divrem(&IntPoly::cyclotomic(d).to_rational());
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        num.to_int_primitive()
    }
}

fn sign_variations(chain: &[IntPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = p.sign_at(x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

fn pow_rat(c: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc = acc * c.clone();
    }
    acc
}

/// Euler's totient.
pub fn euler_phi(k: u64) -> u64 {
    let mut n = k;
    let mut result = k;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Orders k with phi(k) <= n; these are the only possible orders of a root
/// of unity that is an eigenvalue of an n x n integer matrix.
pub fn root_of_unity_orders(n: usize) -> Vec<u64> {
    let cap = 2 * (n as u64 + 1) * (n as u64 + 1);
    (1..=cap).filter(|&k| euler_phi(k) <= n as u64).collect()
}

const DIVISOR_TRIAL_BUDGET: u64 = 10_000_000;

/// Positive divisors of |n| by trial division, within a fixed budget.
fn divisors(n: &Integer) -> Result<Vec<Integer>> {
    let n = n.abs();
    if n.is_zero() {
        return Ok(vec![Integer::one()]);
    }
    let mut divs = Vec::new();
    let mut d = Integer::one();
    let mut steps = 0u64;
    while &d * &d <= n {
        steps += 1;
        if steps > DIVISOR_TRIAL_BUDGET {
            return Err(Error::resource(
                "divisor-trial-budget",
                format!("factoring {n} for rational root candidates"),
            ));
        }
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            let q = &n / &d;
            if q != d {
                divs.push(q);
            }
        }
        d += 1;
    }
    Ok(divs)
}

impl<T: Scalar> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({:?})", self.coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = mag != Integer::one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if i >= 1 {
                if show_coeff {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// Compare two rationals; helper for ordering code written against refs.
pub fn cmp_rat(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}

/// Integer power of a rational; exponent may be negative.
pub fn rat_pow(base: &Rational, e: i64) -> Rational {
    if e >= 0 {
        pow_rat(base, e as usize)
    } else {
        Rational::one() / pow_rat(base, (-e) as usize)
    }
}

/// x^k as an integer polynomial times the given constant; small helper used
/// by matrix code.
pub fn int_monomial(c: i64, d: usize) -> IntPoly {
    UniPoly::monomial(int(c), d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn zp(coeffs: &[i64]) -> IntPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let p = zp(&[1, 0, 1]); // x^2 + 1
        let q = zp(&[-1, 1]); // x - 1
        assert_eq!(p.mul(&q), zp(&[-1, 1, -1, 1]));
        assert_eq!(p.add(&q), zp(&[0, 1, 1]));
        assert_eq!(p.eval(&int(3)), int(10));
        assert_eq!(p.derivative(), zp(&[0, 2]));
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) = x^2 - 3x + 2
        let p = zp(&[2, -3, 1]).to_rational();
        let q = zp(&[-1, 1]).to_rational();
        let (quot, rem) = p.divrem(&q);
        assert!(rem.is_zero());
        assert_eq!(quot.to_int_primitive(), zp(&[-2, 1]));
        let g = p.gcd(&zp(&[-2, 1]).to_rational());
        assert_eq!(g.to_int_primitive(), zp(&[-2, 1]));
    }

    #[test]
    fn squarefree() {
        // (x-1)^2 (x+2)
        let p = zp(&[-1, 1]).mul(&zp(&[-1, 1])).mul(&zp(&[2, 1]));
        let sf = p.squarefree_primitive();
        assert_eq!(sf, zp(&[-2, 1, 1])); // (x-1)(x+2)
    }

    #[test]
    fn isolation_finds_golden_ratio() {
        // x^2 - x - 1: roots (1±sqrt5)/2
        let p = zp(&[-1, -1, 1]);
        let roots = p.isolate_real_roots();
        assert_eq!(roots.len(), 2);
        // Second interval isolates the golden ratio with a sign change.
        let (lo, hi) = &roots[1];
        assert!(p.sign_at(lo) != 0 && p.sign_at(hi) != 0);
        assert!(p.sign_at(lo) != p.sign_at(hi));
        let root = crate::AlgebraicReal::from_root(&p, lo.clone(), hi.clone()).unwrap();
        use std::cmp::Ordering;
        assert_eq!(root.cmp_rational(&crate::ratio(16, 10)), Ordering::Greater);
        assert_eq!(root.cmp_rational(&crate::ratio(17, 10)), Ordering::Less);
    }

    #[test]
    fn isolation_reports_rational_roots_exactly() {
        // (x - 1/2)(x^2 - 2), cleared: (2x - 1)(x^2 - 2)
        let p = zp(&[-1, 2]).mul(&zp(&[-2, 0, 1]));
        let roots = p.isolate_real_roots();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().any(|(a, b)| a == b && *a == ratio(1, 2)));
    }

    #[test]
    fn rational_roots_complete() {
        // roots 1/2, -3, and an irrational pair from x^2 - 2
        let p = zp(&[-1, 2]).mul(&zp(&[3, 1])).mul(&zp(&[-2, 0, 1]));
        let roots = p.to_rational().rational_roots().unwrap();
        assert_eq!(roots, vec![rat(-3), ratio(1, 2)]);
    }

    #[test]
    fn resultant_matches_known_value() {
        // res(x^2 - 1, x - 2) = p(2) = 3 for monic p
        let p = zp(&[-1, 0, 1]).to_rational();
        let q = zp(&[-2, 1]).to_rational();
        assert_eq!(p.resultant(&q), rat(3));
        // res(f, g) = 0 iff common root
        let r = zp(&[-1, 1]).to_rational();
        assert_eq!(p.resultant(&r), rat(0));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(IntPoly::cyclotomic(1), zp(&[-1, 1]));
        assert_eq!(IntPoly::cyclotomic(2), zp(&[1, 1]));
        assert_eq!(IntPoly::cyclotomic(4), zp(&[1, 0, 1]));
        assert_eq!(IntPoly::cyclotomic(6), zp(&[1, -1, 1]));
        assert_eq!(IntPoly::cyclotomic(12), zp(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_and_orders() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
        let orders = root_of_unity_orders(2);
        assert_eq!(orders, vec![1, 2, 3, 4, 6]);
    }

    #[test]
    fn display_form() {
        let p = zp(&[1, -3, 1]);
        assert_eq!(p.to_string(), "x^2 - 3*x + 1");
        assert_eq!(zp(&[0, -1]).to_string(), "-x");
    }
}
