//! Polynomial automorphisms of the affine plane.
//!
//! Automorphisms are held as words in two generator families:
//!
//! * elementary factors `(z, w) -> (alpha z + p(w), beta w + gamma)`;
//! * affine factors `(z, w) -> L (z, w) + t` with `det L != 0`.
//!
//! A raw polynomial pair is admitted and immediately decomposed into such a
//! word by degree reduction (the tame decomposition): while some component
//! has degree at least 2, its leading form is a constant times a power of
//! the other component's leading form, and subtracting that power peels off
//! an elementary factor on the left. Classification then normalizes the
//! word: composable neighbors are merged, affine factors that preserve the
//! horizontal fibration (`w`-row independent of `z`) are absorbed into
//! elementary neighbors, and the word is reduced cyclically by conjugation.
//! What survives is either a single factor (elementary type, dynamical
//! degree 1) or an alternating word of nonlinear elementary and generic
//! affine factors (Henon type, dynamical degree the product of the
//! elementary degrees).

use crate::unipoly::UniPoly;
use crate::{Error, RatLaurent, RatPoly, Rational, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// `(z, w) -> (alpha z + p(w), beta w + gamma)` with `alpha, beta != 0`.
#[derive(Clone, PartialEq, Debug)]
pub struct ElementaryFactor {
    pub alpha: Rational,
    pub p: RatPoly,
    pub beta: Rational,
    pub gamma: Rational,
}

impl ElementaryFactor {
    pub fn new(alpha: Rational, p: RatPoly, beta: Rational, gamma: Rational) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::Invalid(
                "elementary factor needs alpha, beta nonzero".into(),
            ));
        }
        Ok(ElementaryFactor {
            alpha,
            p,
            beta,
            gamma,
        })
    }

    pub fn identity() -> Self {
        ElementaryFactor {
            alpha: Rational::one(),
            p: RatPoly::zero(),
            beta: Rational::one(),
            gamma: Rational::zero(),
        }
    }

    /// Shear `(z + c w^q, w)`.
    pub fn shear(c: Rational, q: usize) -> Self {
        ElementaryFactor {
            alpha: Rational::one(),
            p: UniPoly::monomial(c, q),
            beta: Rational::one(),
            gamma: Rational::zero(),
        }
    }

    pub fn inverse(&self) -> Self {
        // w = (w' - gamma)/beta, z = (z' - p(w))/alpha
        let lin = RatPoly::from_coeffs(vec![
            -self.gamma.clone() / self.beta.clone(),
            Rational::one() / self.beta.clone(),
        ]);
        let p_inv = self
            .p
            .compose(&lin)
            .scale(&(-Rational::one() / self.alpha.clone()));
        ElementaryFactor {
            alpha: Rational::one() / self.alpha.clone(),
            p: p_inv,
            beta: Rational::one() / self.beta.clone(),
            gamma: -self.gamma.clone() / self.beta.clone(),
        }
    }

    /// `self . other`, still elementary.
    pub fn compose(&self, other: &Self) -> Self {
        // (a1 z + p1(w), b1 w + g1) . (a2 z + p2(w), b2 w + g2)
        let base = RatPoly::from_coeffs(vec![other.gamma.clone(), other.beta.clone()]);
        let p = other
            .p
            .scale(&self.alpha)
            .add(&self.p.compose(&base));
        ElementaryFactor {
            alpha: self.alpha.clone() * other.alpha.clone(),
            p,
            beta: self.beta.clone() * other.beta.clone(),
            gamma: self.beta.clone() * other.gamma.clone() + self.gamma.clone(),
        }
    }

    pub fn to_pair(&self) -> (RatLaurent, RatLaurent) {
        let z = RatLaurent::var(2, 0);
        let mut first = z.scale(&self.alpha);
        for (d, c) in self.p.coeffs().iter().enumerate() {
            first = first.add(&RatLaurent::monomial(2, c.clone(), vec![0, d as i64]));
        }
        let w = RatLaurent::var(2, 1);
        let second = w
            .scale(&self.beta)
            .add(&RatLaurent::constant(2, self.gamma.clone()));
        (first, second)
    }
}

/// `(z, w) -> L (z, w) + t` with invertible rational `L`.
#[derive(Clone, PartialEq, Debug)]
pub struct AffineFactor {
    pub linear: [[Rational; 2]; 2],
    pub translation: [Rational; 2],
}

impl AffineFactor {
    pub fn new(linear: [[Rational; 2]; 2], translation: [Rational; 2]) -> Result<Self> {
        let a = AffineFactor {
            linear,
            translation,
        };
        if a.det().is_zero() {
            return Err(Error::Invalid("affine factor with singular linear part".into()));
        }
        Ok(a)
    }

    pub fn det(&self) -> Rational {
        self.linear[0][0].clone() * self.linear[1][1].clone()
            - self.linear[0][1].clone() * self.linear[1][0].clone()
    }

    pub fn swap() -> Self {
        AffineFactor {
            linear: [
                [Rational::zero(), Rational::one()],
                [Rational::one(), Rational::zero()],
            ],
            translation: [Rational::zero(), Rational::zero()],
        }
    }

    pub fn identity() -> Self {
        AffineFactor {
            linear: [
                [Rational::one(), Rational::zero()],
                [Rational::zero(), Rational::one()],
            ],
            translation: [Rational::zero(), Rational::zero()],
        }
    }

    /// Whether the map preserves the horizontal fibration: the `w`-output
    /// does not involve `z`. These are exactly the affine maps that are also
    /// elementary.
    pub fn is_triangular(&self) -> bool {
        self.linear[1][0].is_zero()
    }

    pub fn to_elementary(&self) -> Option<ElementaryFactor> {
        if !self.is_triangular() {
            return None;
        }
        Some(ElementaryFactor {
            alpha: self.linear[0][0].clone(),
            p: RatPoly::from_coeffs(vec![
                self.translation[0].clone(),
                self.linear[0][1].clone(),
            ]),
            beta: self.linear[1][1].clone(),
            gamma: self.translation[1].clone(),
        })
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        let inv = [
            [
                self.linear[1][1].clone() / d.clone(),
                -self.linear[0][1].clone() / d.clone(),
            ],
            [
                -self.linear[1][0].clone() / d.clone(),
                self.linear[0][0].clone() / d.clone(),
            ],
        ];
        let t = [
            -(inv[0][0].clone() * self.translation[0].clone()
                + inv[0][1].clone() * self.translation[1].clone()),
            -(inv[1][0].clone() * self.translation[0].clone()
                + inv[1][1].clone() * self.translation[1].clone()),
        ];
        AffineFactor {
            linear: inv,
            translation: t,
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        let mut linear = [
            [Rational::zero(), Rational::zero()],
            [Rational::zero(), Rational::zero()],
        ];
        for i in 0..2 {
            for j in 0..2 {
                linear[i][j] = self.linear[i][0].clone() * other.linear[0][j].clone()
                    + self.linear[i][1].clone() * other.linear[1][j].clone();
            }
        }
        let translation = [
            self.linear[0][0].clone() * other.translation[0].clone()
                + self.linear[0][1].clone() * other.translation[1].clone()
                + self.translation[0].clone(),
            self.linear[1][0].clone() * other.translation[0].clone()
                + self.linear[1][1].clone() * other.translation[1].clone()
                + self.translation[1].clone(),
        ];
        AffineFactor {
            linear,
            translation,
        }
    }

    pub fn to_pair(&self) -> (RatLaurent, RatLaurent) {
        let z = RatLaurent::var(2, 0);
        let w = RatLaurent::var(2, 1);
        let first = z
            .scale(&self.linear[0][0])
            .add(&w.scale(&self.linear[0][1]))
            .add(&RatLaurent::constant(2, self.translation[0].clone()));
        let second = z
            .scale(&self.linear[1][0])
            .add(&w.scale(&self.linear[1][1]))
            .add(&RatLaurent::constant(2, self.translation[1].clone()));
        (first, second)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum PlaneFactor {
    Elementary(ElementaryFactor),
    Affine(AffineFactor),
}

impl PlaneFactor {
    pub fn to_pair(&self) -> (RatLaurent, RatLaurent) {
        match self {
            PlaneFactor::Elementary(e) => e.to_pair(),
            PlaneFactor::Affine(a) => a.to_pair(),
        }
    }

    pub fn inverse(&self) -> PlaneFactor {
        match self {
            PlaneFactor::Elementary(e) => PlaneFactor::Elementary(e.inverse()),
            PlaneFactor::Affine(a) => PlaneFactor::Affine(a.inverse()),
        }
    }
}

/// A polynomial automorphism of the plane: a word of generators plus the
/// composed polynomial pair, kept in sync.
#[derive(Clone, PartialEq, Debug)]
pub struct PlaneAutomorphism {
    word: Vec<PlaneFactor>,
    pair: (RatLaurent, RatLaurent),
}

fn identity_pair() -> (RatLaurent, RatLaurent) {
    (RatLaurent::var(2, 0), RatLaurent::var(2, 1))
}

/// `outer . inner` as point maps: substitute `inner` into `outer`.
pub(crate) fn compose_pairs(
    outer: &(RatLaurent, RatLaurent),
    inner: &(RatLaurent, RatLaurent),
) -> (RatLaurent, RatLaurent) {
    let subs = [inner.0.clone(), inner.1.clone()];
    (
        outer.0.substitute(&subs).expect("plane polynomials"),
        outer.1.substitute(&subs).expect("plane polynomials"),
    )
}

impl PlaneAutomorphism {
    pub fn identity() -> Self {
        PlaneAutomorphism {
            word: Vec::new(),
            pair: identity_pair(),
        }
    }

    pub fn from_word(word: Vec<PlaneFactor>) -> Self {
        let mut pair = identity_pair();
        for f in word.iter().rev() {
            pair = compose_pairs(&f.to_pair(), &pair);
        }
        PlaneAutomorphism { word, pair }
    }

    /// Admit a raw polynomial pair: decompose into generators, verifying the
    /// recomposition reproduces the input exactly.
    pub fn from_pair(f: RatLaurent, g: RatLaurent) -> Result<Self> {
        if f.arity() != 2 || g.arity() != 2 {
            return Err(Error::Invalid("plane polynomials have two variables".into()));
        }
        if !f.is_polynomial() || !g.is_polynomial() {
            return Err(Error::Invalid(
                "plane automorphism components must be polynomials".into(),
            ));
        }
        let word = jung_van_der_kulk(&f, &g)?;
        let built = PlaneAutomorphism::from_word(word);
        if built.pair.0 != f || built.pair.1 != g {
            return Err(Error::Invalid(
                "decomposition does not recompose to the input pair".into(),
            ));
        }
        Ok(built)
    }

    pub fn word(&self) -> &[PlaneFactor] {
        &self.word
    }

    pub fn pair(&self) -> &(RatLaurent, RatLaurent) {
        &self.pair
    }

    /// Max total degree of the two components.
    pub fn degree(&self) -> i64 {
        self.pair.0.total_degree().max(self.pair.1.total_degree())
    }

    pub fn is_identity(&self) -> bool {
        self.pair == identity_pair()
    }

    pub fn compose(&self, other: &Self) -> Self {
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        PlaneAutomorphism {
            word,
            pair: compose_pairs(&self.pair, &other.pair),
        }
    }

    pub fn inverse(&self) -> Self {
        let word: Vec<PlaneFactor> = self.word.iter().rev().map(|f| f.inverse()).collect();
        PlaneAutomorphism::from_word(word)
    }

    pub fn iterate(&self, n: i64) -> Self {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut acc = PlaneAutomorphism::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    pub fn apply_point(&self, p: &(Rational, Rational)) -> (Rational, Rational) {
        let at = [p.0.clone(), p.1.clone()];
        (
            self.pair.0.eval(&at).expect("polynomial evaluation"),
            self.pair.1.eval(&at).expect("polynomial evaluation"),
        )
    }

    /// Normalize and cyclically reduce the word, classifying the map.
    pub fn classify(&self) -> PlaneClass {
        classify_word(&self.word)
    }
}

/// Tame decomposition of a polynomial automorphism pair into elementary and
/// affine factors, by repeated cancellation of the top-degree form.
pub fn jung_van_der_kulk(f: &RatLaurent, g: &RatLaurent) -> Result<Vec<PlaneFactor>> {
    // Necessary condition first: the Jacobian determinant must be a nonzero
    // constant; it cheaply rejects most non-automorphisms with a clear
    // diagnostic.
    let jac = f
        .derivative(0)
        .mul(&g.derivative(1))
        .sub(&f.derivative(1).mul(&g.derivative(0)));
    if jac.is_zero() || !jac.is_constant() {
        return Err(Error::Invalid(
            "not an automorphism: Jacobian determinant is not a nonzero constant".into(),
        ));
    }
    let mut f = f.clone();
    let mut g = g.clone();
    let mut word: Vec<PlaneFactor> = Vec::new();
    loop {
        let df = f.total_degree();
        let dg = g.total_degree();
        if f.is_zero() || g.is_zero() {
            return Err(Error::Invalid(
                "not an automorphism: a component reduced to zero".into(),
            ));
        }
        if df <= 1 && dg <= 1 {
            let linear = [
                [f.coeff(&[1, 0]), f.coeff(&[0, 1])],
                [g.coeff(&[1, 0]), g.coeff(&[0, 1])],
            ];
            let translation = [f.coeff(&[0, 0]), g.coeff(&[0, 0])];
            let aff = AffineFactor::new(linear, translation).map_err(|_| {
                Error::Invalid("not an automorphism: final linear part is singular".into())
            })?;
            word.push(PlaneFactor::Affine(aff));
            return Ok(word);
        }
        if df < dg {
            word.push(PlaneFactor::Affine(AffineFactor::swap()));
            std::mem::swap(&mut f, &mut g);
            continue;
        }
        if dg == 0 {
            return Err(Error::Invalid(
                "not an automorphism: constant component under a nonlinear one".into(),
            ));
        }
        if df % dg != 0 {
            return Err(Error::Invalid(format!(
                "not an automorphism: degree reduction stalls ({df} vs {dg})"
            )));
        }
        let q = (df / dg) as u32;
        let ftop = f.leading_form();
        let gq = g.leading_form().pow(q);
        // ftop must be c * gq for a constant c.
        let (e0, a0) = gq.terms().next().expect("nonzero leading form");
        let c = ftop.coeff(e0) / a0.clone();
        if c.is_zero() || ftop != gq.scale(&c) {
            return Err(Error::Invalid(
                "not an automorphism: top form is not proportional to the required power".into(),
            ));
        }
        f = f.sub(&g.pow(q).scale(&c));
        word.push(PlaneFactor::Elementary(ElementaryFactor::shear(
            c, q as usize,
        )));
    }
}

/// Result of classifying a plane automorphism.
#[derive(Clone, Debug)]
pub enum PlaneClass {
    /// Dynamical degree 1: conjugate (over the complex numbers) to an
    /// elementary map. When a rational conjugating witness exists it is
    /// returned with the elementary target, satisfying
    /// `sigma = conjugator . target . conjugator^(-1)`.
    Elementary {
        conjugator: Option<PlaneAutomorphism>,
        target: Option<ElementaryFactor>,
        note: String,
    },
    /// Dynamical degree > 1: cyclically reduced alternating word of
    /// nonlinear elementary and fibration-breaking affine factors, with
    /// `sigma = conjugator . reduced . conjugator^(-1)`.
    Henon {
        degrees: Vec<u64>,
        dynamical_degree: u64,
        reduced: PlaneAutomorphism,
        conjugator: PlaneAutomorphism,
    },
}

#[derive(Clone, Debug)]
enum NormFactor {
    E(ElementaryFactor),
    A(AffineFactor),
}

fn canonicalize(word: &[PlaneFactor]) -> Vec<NormFactor> {
    word.iter()
        .map(|f| match f {
            PlaneFactor::Affine(a) => NormFactor::A(a.clone()),
            PlaneFactor::Elementary(e) => {
                if e.p.degree() >= 2 && !e.p.is_constant() {
                    NormFactor::E(e.clone())
                } else {
                    // Degenerate elementary factor is affine.
                    NormFactor::A(AffineFactor {
                        linear: [
                            [e.alpha.clone(), e.p.coeff(1)],
                            [Rational::zero(), e.beta.clone()],
                        ],
                        translation: [e.p.coeff(0), e.gamma.clone()],
                    })
                }
            }
        })
        .collect()
}

/// Compose adjacent factors whenever the result stays a generator: A.A and
/// E.E always, and E.A / A.E when the affine factor is triangular.
fn merge_pass(word: &mut Vec<NormFactor>) {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            let merged: Option<NormFactor> = match (&word[i], &word[i + 1]) {
                (NormFactor::A(a1), NormFactor::A(a2)) => Some(NormFactor::A(a1.compose(a2))),
                (NormFactor::E(e1), NormFactor::E(e2)) => Some(NormFactor::E(e1.compose(e2))),
                (NormFactor::E(e), NormFactor::A(a)) if a.is_triangular() => {
                    let ae = a.to_elementary().expect("triangular");
                    Some(NormFactor::E(e.compose(&ae)))
                }
                (NormFactor::A(a), NormFactor::E(e)) if a.is_triangular() => {
                    let ae = a.to_elementary().expect("triangular");
                    Some(NormFactor::E(ae.compose(e)))
                }
                _ => None,
            };
            if let Some(m) = merged {
                // A merged elementary factor may degenerate to affine.
                let m = match m {
                    NormFactor::E(e) if e.p.degree() < 2 || e.p.is_constant() => {
                        NormFactor::A(AffineFactor {
                            linear: [
                                [e.alpha.clone(), e.p.coeff(1)],
                                [Rational::zero(), e.beta.clone()],
                            ],
                            translation: [e.p.coeff(0), e.gamma.clone()],
                        })
                    }
                    other => other,
                };
                word.splice(i..i + 2, [m]);
                changed = true;
            } else {
                i += 1;
            }
        }
        // Drop identity affine factors except as the only factor.
        if word.len() > 1 {
            let before = word.len();
            word.retain(|f| match f {
                NormFactor::A(a) => *a != AffineFactor::identity(),
                NormFactor::E(_) => true,
            });
            if word.len() != before {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

fn norm_to_plane(f: &NormFactor) -> PlaneFactor {
    match f {
        NormFactor::E(e) => PlaneFactor::Elementary(e.clone()),
        NormFactor::A(a) => PlaneFactor::Affine(a.clone()),
    }
}

fn classify_word(word: &[PlaneFactor]) -> PlaneClass {
    let mut w = canonicalize(word);
    merge_pass(&mut w);
    let mut conj_word: Vec<PlaneFactor> = Vec::new();
    // Cyclic reduction: while the ends have the same type, rotate the first
    // factor to the back (a conjugation) and re-merge.
    loop {
        if w.len() < 2 {
            break;
        }
        let same_type = matches!(
            (&w[0], &w[w.len() - 1]),
            (NormFactor::E(_), NormFactor::E(_)) | (NormFactor::A(_), NormFactor::A(_))
        );
        if !same_type {
            break;
        }
        let first = w.remove(0);
        conj_word.push(norm_to_plane(&first));
        w.push(first);
        merge_pass(&mut w);
    }
    let conjugator = PlaneAutomorphism::from_word(conj_word);
    match w.len() {
        0 => PlaneClass::Elementary {
            conjugator: Some(conjugator),
            target: Some(ElementaryFactor::identity()),
            note: "identity".into(),
        },
        1 => match &w[0] {
            NormFactor::E(e) => PlaneClass::Elementary {
                conjugator: Some(conjugator),
                target: Some(e.clone()),
                note: "single elementary factor".into(),
            },
            NormFactor::A(a) => classify_single_affine(a, conjugator),
        },
        _ => {
            let mut degrees = Vec::new();
            for f in &w {
                if let NormFactor::E(e) = f {
                    degrees.push(e.p.degree() as u64);
                }
            }
            debug_assert!(w.len() % 2 == 0, "cyclically reduced word alternates");
            let dynamical_degree = degrees.iter().product();
            let reduced = PlaneAutomorphism::from_word(w.iter().map(norm_to_plane).collect());
            PlaneClass::Henon {
                degrees,
                dynamical_degree,
                reduced,
                conjugator,
            }
        }
    }
}

fn classify_single_affine(a: &AffineFactor, conjugator: PlaneAutomorphism) -> PlaneClass {
    if let Some(e) = a.to_elementary() {
        return PlaneClass::Elementary {
            conjugator: Some(conjugator),
            target: Some(e),
            note: "affine factor preserving the horizontal fibration".into(),
        };
    }
    // Try to triangularize the linear part over the rationals: possible iff
    // its characteristic polynomial has a rational root.
    let tr = a.linear[0][0].clone() + a.linear[1][1].clone();
    let det = a.det();
    let disc = tr.clone() * tr.clone() - crate::rat(4) * det;
    if let Some(sq) = rational_sqrt(&disc) {
        let lambda = (tr + sq) / crate::rat(2);
        // Kernel vector of the singular matrix L - lambda I: rotate any
        // nonzero row by a quarter turn.
        let r1 = (
            a.linear[0][0].clone() - lambda.clone(),
            a.linear[0][1].clone(),
        );
        let r2 = (
            a.linear[1][0].clone(),
            a.linear[1][1].clone() - lambda.clone(),
        );
        let v = if !r1.0.is_zero() || !r1.1.is_zero() {
            (r1.1.clone(), -r1.0.clone())
        } else if !r2.0.is_zero() || !r2.1.is_zero() {
            (r2.1.clone(), -r2.0.clone())
        } else {
            (Rational::one(), Rational::zero())
        };
        // Complete to a basis.
        let u = if v.0.is_zero() {
            (Rational::one(), Rational::zero())
        } else {
            (Rational::zero(), Rational::one())
        };
        let p = AffineFactor::new(
            [[v.0.clone(), u.0.clone()], [v.1.clone(), u.1.clone()]],
            [Rational::zero(), Rational::zero()],
        )
        .expect("eigenbasis is invertible");
        let theta = PlaneAutomorphism::from_word(vec![PlaneFactor::Affine(p.clone())]);
        let target_aff = p.inverse().compose(a).compose(&p);
        if let Some(e) = target_aff.to_elementary() {
            let full_conj = conjugator.compose(&theta);
            return PlaneClass::Elementary {
                conjugator: Some(full_conj),
                target: Some(e),
                note: "affine factor, triangularized over the rationals".into(),
            };
        }
    }
    PlaneClass::Elementary {
        conjugator: None,
        target: None,
        note: "affine factor with irrational linear spectrum; elementary over the \
               complex numbers, no rational conjugating witness"
            .into(),
    }
}

/// Exact rational square root, when it exists.
fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl fmt::Display for PlaneAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(z, w) -> ({}, {})",
            self.pair.0.display_with(&["z", "w"]),
            self.pair.1.display_with(&["z", "w"])
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn zvar() -> RatLaurent {
        RatLaurent::var(2, 0)
    }
    fn wvar() -> RatLaurent {
        RatLaurent::var(2, 1)
    }

    /// The pair (z^2 + 1 - w, z).
    fn henon_pair() -> (RatLaurent, RatLaurent) {
        (
            zvar().pow(2).add(&RatLaurent::one(2)).sub(&wvar()),
            zvar(),
        )
    }

    #[test]
    fn decompose_already_elementary() {
        // (z + w^2, w): a single (elementary-led) word
        let f = zvar().add(&wvar().pow(2));
        let g = wvar();
        let a = PlaneAutomorphism::from_pair(f.clone(), g.clone()).unwrap();
        assert_eq!(a.pair().0, f);
        assert_eq!(a.pair().1, g);
        assert!(matches!(a.classify(), PlaneClass::Elementary { .. }));
    }

    #[test]
    fn decompose_identity_is_empty_or_trivial() {
        let a = PlaneAutomorphism::from_pair(zvar(), wvar()).unwrap();
        assert!(a.is_identity());
        assert!(matches!(
            a.classify(),
            PlaneClass::Elementary { target: Some(_), .. }
        ));
    }

    #[test]
    fn decompose_henon_and_classify() {
        let (f, g) = henon_pair();
        let a = PlaneAutomorphism::from_pair(f.clone(), g.clone()).unwrap();
        assert_eq!(a.pair(), &(f, g));
        match a.classify() {
            PlaneClass::Henon {
                degrees,
                dynamical_degree,
                reduced,
                conjugator,
            } => {
                assert_eq!(degrees, vec![2]);
                assert_eq!(dynamical_degree, 2);
                // sigma = conj . reduced . conj^{-1}
                let recon = conjugator.compose(&reduced).compose(&conjugator.inverse());
                assert_eq!(recon.pair(), a.pair());
            }
            other => panic!("expected Henon, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_automorphisms() {
        // (z^2, w): Jacobian 2z*1 not constant
        assert!(PlaneAutomorphism::from_pair(zvar().pow(2), wvar()).is_err());
        // (z*w, w): Jacobian w
        assert!(PlaneAutomorphism::from_pair(zvar().mul(&wvar()), wvar()).is_err());
        // (z + w, 2z + 2w): singular linear part, Jacobian 0
        let s = zvar().add(&wvar());
        assert!(PlaneAutomorphism::from_pair(s.clone(), s.scale(&rat(2))).is_err());
    }

    #[test]
    fn compose_substitutes() {
        // elementary (z + w^2, w) . swap -> (w + z^2, z)
        let e = PlaneAutomorphism::from_word(vec![PlaneFactor::Elementary(
            ElementaryFactor::shear(rat(1), 2),
        )]);
        let s = PlaneAutomorphism::from_word(vec![PlaneFactor::Affine(AffineFactor::swap())]);
        let c = e.compose(&s);
        assert_eq!(c.pair().0, wvar().add(&zvar().pow(2)));
        assert_eq!(c.pair().1, zvar());
    }

    #[test]
    fn inverse_round_trip() {
        let (f, g) = henon_pair();
        let a = PlaneAutomorphism::from_pair(f, g).unwrap();
        let inv = a.inverse();
        assert!(a.compose(&inv).is_identity());
        assert!(inv.compose(&a).is_identity());
    }

    #[test]
    fn iterate_degree_doubles() {
        let (f, g) = henon_pair();
        let a = PlaneAutomorphism::from_pair(f, g).unwrap();
        let sq = a.iterate(2);
        assert_eq!(sq.degree(), 4);
        assert_eq!(a.iterate(3).degree(), 8);
    }

    #[test]
    fn affine_maps_classify_elementary() {
        // Rotation by 90 degrees: no rational witness, still elementary type.
        let rot = AffineFactor::new(
            [
                [rat(0), rat(-1)],
                [rat(1), rat(0)],
            ],
            [rat(0), rat(0)],
        )
        .unwrap();
        let a = PlaneAutomorphism::from_word(vec![PlaneFactor::Affine(rot)]);
        match a.classify() {
            PlaneClass::Elementary {
                conjugator, target, ..
            } => {
                assert!(conjugator.is_none());
                assert!(target.is_none());
            }
            other => panic!("expected elementary, got {other:?}"),
        }
        // A diagonalizable map gets a witness.
        let d = AffineFactor::new(
            [
                [rat(0), rat(1)],
                [rat(1), rat(0)],
            ],
            [rat(0), rat(0)],
        )
        .unwrap();
        let a = PlaneAutomorphism::from_word(vec![PlaneFactor::Affine(d)]);
        match a.classify() {
            PlaneClass::Elementary {
                conjugator: Some(theta),
                target: Some(e),
                ..
            } => {
                let t = PlaneAutomorphism::from_word(vec![PlaneFactor::Elementary(e)]);
                let recon = theta.compose(&t).compose(&theta.inverse());
                assert_eq!(recon.pair(), a.pair());
            }
            other => panic!("expected witnessed elementary, got {other:?}"),
        }
    }

    #[test]
    fn elementary_inverse_and_compose() {
        let e = ElementaryFactor::new(
            ratio(2, 1),
            RatPoly::from_coeffs(vec![rat(1), rat(0), rat(3)]),
            ratio(-1, 2),
            rat(4),
        )
        .unwrap();
        let inv = e.inverse();
        let composed = e.compose(&inv);
        let id = PlaneAutomorphism::from_word(vec![PlaneFactor::Elementary(composed)]);
        assert!(id.is_identity());
    }

    #[test]
    fn henon_conjugated_by_affine_stays_henon() {
        let (f, g) = henon_pair();
        let h = PlaneAutomorphism::from_pair(f, g).unwrap();
        let t = PlaneAutomorphism::from_word(vec![PlaneFactor::Affine(
            AffineFactor::new(
                [
                    [rat(1), rat(2)],
                    [rat(3), rat(7)],
                ],
                [rat(5), rat(-1)],
            )
            .unwrap(),
        )]);
        let conj = t.compose(&h).compose(&t.inverse());
        match conj.classify() {
            PlaneClass::Henon {
                dynamical_degree, ..
            } => assert_eq!(dynamical_degree, 2),
            other => panic!("expected Henon, got {other:?}"),
        }
    }
}
