//! The Cayley transform between the real line and the unit circle.
//!
//! `line_to_disk` substitutes `ξ = i(1 + w)/(1 − w)`, which carries the
//! extended real line onto `|w| = 1`, the upper half-plane onto `|w| < 1` and
//! `ξ = ∞` onto `w = 1`. The inverse substitution is `w = r(ξ) = (ξ − i)/(ξ + i)`.
//! The `_half` variants use the conjugate transform for the lower half-plane.

use super::{GaussianRational, Half, Polynomial, RationalFunction, Ring};

/// Substitutes `x = (a·y + b)/(c·y + d)` into `f(x)`.
pub fn compose_mobius(
    f: &RationalFunction,
    a: &GaussianRational,
    b: &GaussianRational,
    c: &GaussianRational,
    d: &GaussianRational,
) -> RationalFunction {
    if f.is_zero() {
        return RationalFunction::default();
    }
    let top = Polynomial::new(vec![b.clone(), a.clone()]);
    let bottom = Polynomial::new(vec![d.clone(), c.clone()]);
    let homogenize = |p: &Polynomial| -> (Polynomial, usize) {
        let deg = p.degree().unwrap_or(0);
        let mut acc = Polynomial::default();
        for (k, ck) in p.coeffs().iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            let term = &top.pow(k as u32) * &bottom.pow((deg - k) as u32);
            acc = &acc + &term.scale(ck);
        }
        (acc, deg)
    };
    let (n, dn) = homogenize(f.num());
    let (m, dm) = homogenize(f.den());
    // f = n/bottom^dn ÷ m/bottom^dm
    let (num, den) = if dm >= dn {
        (&n * &bottom.pow((dm - dn) as u32), m)
    } else {
        (n, &m * &bottom.pow((dn - dm) as u32))
    };
    RationalFunction::frac(num, den)
}

fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

/// `f(ξ) ↦ f(i(1 + w)/(1 − w))`.
pub fn line_to_disk(f: &RationalFunction) -> RationalFunction {
    line_to_disk_half(f, Half::Plus)
}

/// `F(w) ↦ F((ξ − i)/(ξ + i))`.
pub fn disk_to_line(f: &RationalFunction) -> RationalFunction {
    disk_to_line_half(f, Half::Plus)
}

/// Transform sending the closed `half`-plane onto the closed unit disk.
pub fn line_to_disk_half(f: &RationalFunction, half: Half) -> RationalFunction {
    match half {
        Half::Plus => compose_mobius(f, &g(0, 1), &g(0, 1), &g(-1, 0), &g(1, 0)),
        Half::Minus => compose_mobius(f, &g(0, -1), &g(0, -1), &g(-1, 0), &g(1, 0)),
    }
}

pub fn disk_to_line_half(f: &RationalFunction, half: Half) -> RationalFunction {
    match half {
        Half::Plus => compose_mobius(f, &g(1, 0), &g(0, -1), &g(1, 0), &g(0, 1)),
        Half::Minus => compose_mobius(f, &g(1, 0), &g(0, 1), &g(1, 0), &g(0, -1)),
    }
}

/// Polynomial version of the transform to the line: for `p(w)` of degree at
/// most `deg`, returns `(ξ + i)^deg · p(r(ξ))`, a polynomial in `ξ` whose roots
/// are the images of the roots of `p` (the root `w = 1` maps to `∞` and lowers
/// the degree).
pub fn disk_poly_to_line(p: &Polynomial, deg: usize, half: Half) -> Polynomial {
    let s = half.sign() as i64;
    let minus = Polynomial::linear(&g(0, s)); // ξ − s·i
    let plus = Polynomial::linear(&g(0, -s)); // ξ + s·i
    let mut acc = Polynomial::default();
    for (k, ck) in p.coeffs().iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        acc = &acc + &(&minus.pow(k as u32) * &plus.pow((deg - k) as u32)).scale(ck);
    }
    acc
}
