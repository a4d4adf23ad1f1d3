//! Exact root location relative to the real line.
//!
//! Sturm sequences count distinct real roots; the Cauchy index of `B/A` for
//! `p = A + iB` counts roots in each open half-plane.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{GaussianRational, Polynomial, Ring};

type RPoly = Vec<BigRational>;

fn trim(mut p: RPoly) -> RPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn real_part(p: &Polynomial) -> RPoly {
    trim(p.coeffs().iter().map(|c| c.re.clone()).collect())
}

fn imag_part(p: &Polynomial) -> RPoly {
    trim(p.coeffs().iter().map(|c| c.im.clone()).collect())
}

fn rem(a: &RPoly, b: &RPoly) -> RPoly {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut r = a.clone();
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &(&c * bc);
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

fn derivative(p: &RPoly) -> RPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer((k as i64).into()))
            .collect(),
    )
}

/// Sequence `p0, p1, -rem(p0, p1), ...` until the remainder vanishes.
fn sturm_chain(p0: RPoly, p1: RPoly) -> Vec<RPoly> {
    let mut chain = vec![p0, p1];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let r: RPoly = rem(&chain[n - 2], &chain[n - 1]).into_iter().map(|c| -c).collect();
        if r.is_empty() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_at_infinity(p: &RPoly, positive: bool) -> i32 {
    let Some(lead) = p.last() else { return 0 };
    let s = if lead.is_positive() { 1 } else { -1 };
    if positive || (p.len() - 1).is_multiple_of(2) {
        s
    } else {
        -s
    }
}

fn sign_at(p: &RPoly, x: &BigRational) -> i32 {
    let v = p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i32>) -> i64 {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn chain_variations_inf(chain: &[RPoly], positive: bool) -> i64 {
    variations(chain.iter().map(|p| sign_at_infinity(p, positive)))
}

/// Number of distinct real roots of a real-coefficient polynomial.
fn distinct_real_roots_r(p: &RPoly) -> usize {
    if p.len() <= 1 {
        return 0;
    }
    let chain = sturm_chain(p.clone(), derivative(p));
    (chain_variations_inf(&chain, false) - chain_variations_inf(&chain, true)) as usize
}

/// Number of distinct real roots of `p` (complex coefficients allowed).
pub fn distinct_real_roots(p: &Polynomial) -> usize {
    let g = real_gcd_part(p);
    distinct_real_roots_r(&g)
}

/// Distinct real roots of `p` in the half-open interval `(a, b]`.
pub fn real_roots_in(p: &Polynomial, a: &BigRational, b: &BigRational) -> usize {
    let g = real_gcd_part(p);
    if g.len() <= 1 {
        return 0;
    }
    let chain = sturm_chain(g.clone(), derivative(&g));
    let va = variations(chain.iter().map(|q| sign_at(q, a)));
    let vb = variations(chain.iter().map(|q| sign_at(q, b)));
    (va - vb).max(0) as usize
}

/// `gcd(A, B)` for `p = A + iB`, as a real polynomial: its real roots are
/// exactly the real roots of `p`.
fn real_gcd_part(p: &Polynomial) -> RPoly {
    let a = real_part(p);
    let b = imag_part(p);
    let (mut x, mut y) = (a, b);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// The real polynomial whose real roots are those of `p`, as a Polynomial.
pub fn real_root_carrier(p: &Polynomial) -> Polynomial {
    Polynomial::new(real_gcd_part(p).into_iter().map(GaussianRational::real).collect()).monic()
}

/// Root counts of a nonzero polynomial with respect to the real line,
/// with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HalfPlaneCount {
    pub upper: usize,
    pub lower: usize,
    /// Real roots, with multiplicity.
    pub real: usize,
}

/// Exact count of roots in the open upper half-plane, the open lower
/// half-plane and on the real line. Panics on the zero polynomial.
pub fn half_plane_count(p: &Polynomial) -> HalfPlaneCount {
    let d = p.degree().expect("half_plane_count of zero polynomial");
    if d == 0 {
        return HalfPlaneCount { upper: 0, lower: 0, real: 0 };
    }
    let real: usize = p
        .squarefree()
        .iter()
        .map(|(f, k)| *k as usize * distinct_real_roots(f))
        .sum();
    // For monic p = A + iB the chain (A, B, ...) carries gcd(A, B) as a common
    // factor, which does not affect sign variations at ±∞; the Cauchy index
    // of B/A therefore only sees the non-real roots outside gcd(A, B), and the
    // non-real roots inside it come in conjugate pairs.
    let q = p.monic();
    let a = real_part(&q);
    let b = imag_part(&q);
    let index = if b.is_empty() {
        0
    } else {
        let chain = sturm_chain(a, b);
        chain_variations_inf(&chain, false) - chain_variations_inf(&chain, true)
    };
    let upper = ((d as i64 - real as i64 - index) / 2) as usize;
    HalfPlaneCount { upper, lower: d - real - upper, real }
}

/// Whether `p` has any real root.
pub fn has_real_root(p: &Polynomial) -> bool {
    !p.is_zero() && distinct_real_roots(p) > 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn linear_factors() {
        let up = Polynomial::linear(&g(0, 1));
        let down = Polynomial::linear(&g(3, -2));
        let re = Polynomial::linear(&g(5, 0));
        let p = &(&up.pow(2) * &down) * &re.pow(3);
        let c = half_plane_count(&p);
        assert_eq!(c, HalfPlaneCount { upper: 2, lower: 1, real: 3 });
        assert_eq!(distinct_real_roots(&p), 1);
    }

    #[test]
    fn real_coefficients_split_evenly() {
        let p = Polynomial::from_ints(&[4, 0, 1]); // roots ±2i
        assert_eq!(half_plane_count(&p), HalfPlaneCount { upper: 1, lower: 1, real: 0 });
        let q = Polynomial::from_ints(&[-2, 0, 1]); // roots ±√2
        assert_eq!(half_plane_count(&q).real, 2);
    }

    #[test]
    fn interval_count() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let one = BigRational::from_integer(1.into());
        let two = BigRational::from_integer(2.into());
        assert_eq!(real_roots_in(&p, &one, &two), 1);
        assert_eq!(real_roots_in(&p, &-two.clone(), &two), 2);
    }
}
