//! Sparse multivariate Laurent polynomials over a generic scalar.
//!
//! Terms are kept in a BTreeMap from exponent vectors in Z^n to nonzero
//! coefficients; plane (non-Laurent) polynomials are the same type with
//! nonnegative support.

use crate::scalar::Scalar;
use crate::{Error, Rational, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in `arity` variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly<T> {
    arity: usize,
    terms: BTreeMap<Vec<i64>, T>,
}

impl<T: Scalar> LaurentPoly<T> {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: T) -> Self {
        let mut p = LaurentPoly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        LaurentPoly::constant(arity, T::one())
    }

    /// `c * u^exps`.
    pub fn monomial(arity: usize, c: T, exps: Vec<i64>) -> Self {
        assert_eq!(exps.len(), arity, "exponent arity mismatch");
        let mut p = LaurentPoly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The i-th variable.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        let mut exps = vec![0; arity];
        exps[i] = 1;
        LaurentPoly::monomial(arity, T::one(), exps)
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<i64>, T)>) -> Self {
        let mut p = LaurentPoly::zero(arity);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    pub fn constant_term(&self) -> T {
        self.terms
            .get(&vec![0; self.arity])
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> T {
        self.terms.get(exps).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: T) {
        assert_eq!(exps.len(), self.arity, "exponent arity mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = LaurentPoly::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one(self.arity);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Shift all exponents by the given vector (multiply by a monomial).
    pub fn shift(&self, by: &[i64]) -> Self {
        assert_eq!(by.len(), self.arity);
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum of the support exponents.
    pub fn support_min(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            acc.iter().zip(e).map(|(a, b)| (*a).min(*b)).collect()
        }))
    }

    /// Normalize the support to have componentwise minimum zero; returns the
    /// shift removed. The zero polynomial is returned unchanged.
    pub fn shift_normalize(&self) -> (Vec<i64>, Self) {
        match self.support_min() {
            None => (vec![0; self.arity], self.clone()),
            Some(min) => {
                let neg: Vec<i64> = min.iter().map(|e| -e).collect();
                (min, self.shift(&neg))
            }
        }
    }

    /// True when every exponent is nonnegative (an ordinary polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Total degree, for nonnegative support.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Sum of the terms of maximal total degree.
    pub fn leading_form(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let d = self.total_degree();
        LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<i64>() == d)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> LaurentPoly<U> {
        let mut out = LaurentPoly::zero(self.arity);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Formal partial derivative in one variable.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = LaurentPoly::zero(self.arity);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut k = T::zero();
            let steps = e[var].unsigned_abs();
            for _ in 0..steps {
                k = k + T::one();
            }
            if e[var] < 0 {
                k = -k;
            }
            let mut ne = e.clone();
            ne[var] -= 1;
            out.add_term(ne, c.clone() * k);
        }
        out
    }

    /// Substitute polynomials for every variable. Requires nonnegative
    /// exponents throughout (no Laurent inversion of a general polynomial).
    pub fn substitute(&self, values: &[LaurentPoly<T>]) -> Result<LaurentPoly<T>> {
        assert_eq!(values.len(), self.arity);
        if !self.is_polynomial() {
            return Err(Error::Unsupported(
                "substitution into negative exponents".into(),
            ));
        }
        let out_arity = values
            .first()
            .map(|p| p.arity)
            .unwrap_or(self.arity);
        let mut out = LaurentPoly::zero(out_arity);
        for (e, c) in &self.terms {
            let mut term = LaurentPoly::constant(out_arity, c.clone());
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = term.mul(&values[i].pow(exp as u32));
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// View a one-variable polynomial (nonnegative exponents) as univariate.
    pub fn to_unipoly(&self) -> Result<crate::unipoly::UniPoly<T>> {
        if self.arity != 1 || !self.is_polynomial() {
            return Err(Error::Unsupported(
                "not a univariate polynomial with nonnegative exponents".into(),
            ));
        }
        let deg = self.degree_in(0).max(0) as usize;
        let mut coeffs = vec![T::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Ok(crate::unipoly::UniPoly::from_coeffs(coeffs))
    }

    /// Substitute a constant for one variable, dropping it from the arity.
    /// Requires nonnegative exponents in that variable.
    pub fn partial_eval(&self, var: usize, value: &T) -> Result<LaurentPoly<T>> {
        assert!(var < self.arity);
        let mut out = LaurentPoly::zero(self.arity - 1);
        for (e, c) in &self.terms {
            if e[var] < 0 {
                return Err(Error::Unsupported(
                    "partial evaluation at negative exponent".into(),
                ));
            }
            let mut coeff = c.clone();
            for _ in 0..e[var] {
                coeff = coeff * value.clone();
            }
            let mut ne = e.clone();
            ne.remove(var);
            out.add_term(ne, coeff);
        }
        Ok(out)
    }
}

impl LaurentPoly<Rational> {
    /// Evaluate at a rational point. A zero coordinate is allowed only where
    /// no term has a negative exponent in that variable.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        assert_eq!(point.len(), self.arity);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if point[i].is_zero() {
                    if exp < 0 {
                        return Err(Error::Invalid(
                            "evaluation of a negative power at a zero coordinate".into(),
                        ));
                    }
                    if exp > 0 {
                        term = Rational::zero();
                        break;
                    }
                } else {
                    term *= crate::unipoly::rat_pow(&point[i], exp);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Render with the given variable names.
    pub fn display_with<'a>(&'a self, vars: &'a [&'a str]) -> LaurentDisplay<'a> {
        LaurentDisplay { poly: self, vars }
    }
}

pub struct LaurentDisplay<'a> {
    poly: &'a LaurentPoly<Rational>,
    vars: &'a [&'a str],
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{One, Signed};
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // Highest terms first for readability.
        let mut terms: Vec<(&Vec<i64>, &Rational)> = self.poly.terms.iter().collect();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        let mut first = true;
        for (e, c) in terms {
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
            let is_const_term = e.iter().all(|&x| x == 0);
            let show_coeff = !mag.is_one() || is_const_term;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            let mut printed_var = false;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if show_coeff || printed_var {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.vars.get(i).copied().unwrap_or("?"))?;
                if exp != 1 {
                    write!(f, "^{exp}")?;
                }
                printed_var = true;
            }
            let _ = printed_var;
        }
        Ok(())
    }
}
