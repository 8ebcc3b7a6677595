//! Exact spectral radius of an integer matrix.
//!
//! The modulus of a complex eigenvalue is not itself a root of the
//! characteristic polynomial, so the radius is extracted through the
//! composed-product polynomial: the polynomial whose roots are the pairwise
//! products of the eigenvalues. Every `|mu|^2 = mu * conj(mu)` is such a
//! product, every product is bounded by the squared radius, and the squared
//! radius is attained, so the largest real root of the composed product is
//! exactly `rho^2`. The radius itself is then the largest real root of that
//! polynomial evaluated at `x^2`, and the certificate is minimized against
//! the characteristic polynomial when the dominant eigenvalue is real.

use crate::unipoly::UniPoly;
use crate::{rat, AlgebraicReal, IntMat, IntPoly, RatPoly, Rational};
use num_traits::Zero;

/// Largest modulus of a (complex) eigenvalue, as an exact algebraic real.
pub fn spectral_radius(m: &IntMat) -> AlgebraicReal {
    assert!(m.is_square(), "spectral radius of a non-square matrix");
    max_root_modulus(&m.char_poly_int())
}

/// Largest modulus of a complex root of an integer polynomial.
pub fn max_root_modulus(p: &IntPoly) -> AlgebraicReal {
    let (_, core) = p.squarefree_primitive().strip_zero_roots();
    if core.is_constant() {
        // All roots are zero (or there are none).
        return AlgebraicReal::zero();
    }
    let products = composed_product(&core);
    let msf = {
        let (_, stripped) = products.squarefree_primitive().strip_zero_roots();
        stripped
    };
    // The largest real root of the composed product is rho^2.
    let squared = msf
        .isolate_real_roots()
        .last()
        .expect("composed product has a real root")
        .clone();
    // Roots of radius_poly are the +-square roots of the eigenvalue products.
    let radius_poly = msf.compose_square().squarefree_primitive();
    let roots = radius_poly.isolate_real_roots();
    let (lo, hi) = roots.last().expect("composed product has a real root").clone();
    // Shrink the defining polynomial: prefer a factor of the characteristic
    // polynomial (dominant root real positive), then of its reflection
    // (dominant root real negative), then x^2 - rho^2 when the square is
    // rational, else keep the composed form.
    let sf = core.squarefree_primitive();
    let mut candidates = vec![
        gcd_int(&sf, &radius_poly),
        gcd_int(&sf.reflect().squarefree_primitive(), &radius_poly),
    ];
    if squared.0 == squared.1 {
        let r = &squared.0;
        let sq_poly = UniPoly::from_coeffs(vec![
            -r.numer().clone(),
            Zero::zero(),
            r.denom().clone(),
        ]);
        candidates.push(sq_poly.squarefree_primitive());
    }
    candidates.push(radius_poly.clone());
    for cand in candidates {
        if cand.is_constant() {
            continue;
        }
        if has_unique_root_in(&cand, &lo, &hi) {
            return AlgebraicReal::from_root(&cand, lo, hi)
                .expect("validated isolating interval");
        }
    }
    AlgebraicReal::from_root(&radius_poly, lo, hi).expect("validated isolating interval")
}

/// Polynomial (up to constants) whose roots are all pairwise products of
/// roots of `p`, computed by evaluation and interpolation of
/// `Res_y(p(y), y^d p(x/y))`.
fn composed_product(p: &IntPoly) -> IntPoly {
    let d = p.degree();
    let pq = p.to_rational();
    let samples = (d * d + 1) as i64;
    let mut points = Vec::with_capacity(samples as usize);
    for k in 0..samples {
        let x0 = rat(sample_point(k));
        // y^d * p(x0 / y) has y^(d-k) coefficient a_k x0^k; leading y
        // coefficient is a_0 != 0 since zero roots were stripped.
        let mut coeffs = vec![Rational::zero(); d + 1];
        let mut xp = Rational::from_integer(1.into());
        for k in 0..=d {
            coeffs[d - k] = pq.coeff(k) * xp.clone();
            xp *= x0.clone();
        }
        let q = RatPoly::from_coeffs(coeffs);
        points.push((x0, pq.resultant(&q)));
    }
    UniPoly::interpolate(&points).to_int_primitive()
}

fn sample_point(k: i64) -> i64 {
    // 0, 1, -1, 2, -2, ...
    if k % 2 == 0 {
        -(k / 2)
    } else {
        k / 2 + 1
    }
}

fn gcd_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a.to_rational().gcd(&b.to_rational()).to_int_primitive()
}

/// True when `cand` (a divisor of a polynomial with exactly one root in the
/// interval) itself has a root there.
fn has_unique_root_in(cand: &IntPoly, lo: &Rational, hi: &Rational) -> bool {
    if lo == hi {
        return cand.sign_at(lo) == 0;
    }
    if cand.sign_at(lo) == 0 || cand.sign_at(hi) == 0 {
        return false;
    }
    let chain = cand.sturm_chain();
    IntPoly::sturm_count(&chain, lo, hi) == 1
}
