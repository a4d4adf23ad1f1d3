//! Scalar Wiener–Hopf factorization of rational symbols, winding numbers and
//! the weighted Riesz projections.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rings::{
    factor_numeric, FactoredRational, GaussianRational, HalfPlane, Point, Polynomial, RationalFunction, Ring,
    RootFactor,
};

/// `f = γ₋ · r^k · γ₊`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarWH {
    pub gamma_minus: FactoredRational,
    pub k: i64,
    pub gamma_plus: FactoredRational,
}

impl ScalarWH {
    /// Expanded product `γ₋ r^k γ₊`.
    pub fn product(&self) -> RationalFunction {
        let r = RationalFunction::r_pow(self.k);
        &(&self.gamma_minus.expand() * &r) * &self.gamma_plus.expand()
    }

    pub fn is_exact(&self) -> bool {
        self.gamma_minus.is_exact() && self.gamma_plus.is_exact()
    }

    /// Checks the root tags and the degree balance of both factors and the
    /// normalization `γ₊(∞) = 1`.
    pub fn certify(&self) -> Result<()> {
        let bad = |g: &FactoredRational, want: HalfPlane, name: &str| -> Result<()> {
            if let Some(f) = g.factors().iter().find(|f| f.half != want) {
                return Err(Error::CertificateInvalid(format!("{name} has a root at {} outside {}", f.point(), want.tag())));
            }
            if g.degree_balance() != 0 {
                return Err(Error::CertificateInvalid(format!("{name} is not invertible at ∞")));
            }
            Ok(())
        };
        bad(&self.gamma_minus, HalfPlane::Upper, "γ₋")?;
        bad(&self.gamma_plus, HalfPlane::Lower, "γ₊")?;
        if !self.gamma_plus.lead().is_one() {
            return Err(Error::CertificateInvalid("γ₊(∞) ≠ 1".into()));
        }
        Ok(())
    }
}

fn check_on_line(f: &FactoredRational) -> Result<()> {
    if let Some(z) = f.real_roots().next() {
        return Err(Error::SymbolSingularOnLine(Box::new(z.point())));
    }
    if f.degree_balance() != 0 {
        return Err(Error::SymbolSingularOnLine(Box::new(Point::Infinity)));
    }
    Ok(())
}

/// Anchored factorization: zeros and poles in `C⁺` are paired with anchors at
/// `i` and go to `γ₋`, those in `C⁻` are paired with `−i` and go to `γ₊`. The
/// constant lives in `γ₋`.
pub fn wh_factor_scalar(f: &FactoredRational) -> Result<ScalarWH> {
    check_on_line(f)?;
    let i = GaussianRational::i();
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    let mut k = 0i64;
    for fac in f.factors() {
        match fac.half {
            HalfPlane::Upper => {
                minus.push(fac.clone());
                minus.push(RootFactor::new(i.clone(), -fac.mult));
                k += fac.mult as i64;
            }
            HalfPlane::Lower => {
                plus.push(fac.clone());
                plus.push(RootFactor::new(-i.clone(), -fac.mult));
            }
            HalfPlane::Real => unreachable!("checked above"),
        }
    }
    Ok(ScalarWH {
        gamma_minus: FactoredRational::from_factors(f.lead().clone(), minus),
        k,
        gamma_plus: FactoredRational::from_factors(GaussianRational::one(), plus),
    })
}

/// Factors a symbol given as `num/den`, refusing ambiguous root tags.
pub fn wh_factor_rational(f: &RationalFunction, tol: f64) -> Result<ScalarWH> {
    if f.is_zero() {
        return Err(Error::SymbolSingularOnLine(Box::new(Point::Infinity)));
    }
    wh_factor_scalar(&factor_numeric(f, tol)?.factored)
}

/// `Z⁺ − P⁺` with multiplicity.
pub fn winding_exact(f: &FactoredRational) -> Result<i64> {
    check_on_line(f)?;
    Ok(f.net_count(HalfPlane::Upper))
}

/// `phi = plus_part + minus_part` with the weight `ξ + i` on both parts.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionResult {
    pub plus_part: RationalFunction,
    pub minus_part: RationalFunction,
}

/// Exact partial-fraction split of `phi/(ξ + i)` by pole location, each part
/// multiplied back by `ξ + i`.
pub fn riesz_project(phi: &RationalFunction) -> Result<ProjectionResult> {
    if phi.is_zero() {
        return Ok(ProjectionResult { plus_part: RationalFunction::zero(), minus_part: RationalFunction::zero() });
    }
    if phi.degree_balance().is_some_and(|b| b > 0) {
        return Err(Error::RealPole(Box::new(Point::Infinity)));
    }
    let mut upper = Polynomial::one();
    let mut lower = Polynomial::one();
    if !phi.den().is_constant() {
        let den = factor_numeric(&RationalFunction::from_poly(phi.den().clone()), 1e-9)?.factored;
        for f in den.factors() {
            if !f.exact {
                return Err(Error::InexactRoot(Box::new(f.point())));
            }
            let lin = Polynomial::linear(&f.root).pow(f.mult as u32);
            match f.half {
                HalfPlane::Real => return Err(Error::RealPole(Box::new(f.point()))),
                HalfPlane::Upper => upper = &upper * &lin,
                HalfPlane::Lower => lower = &lower * &lin,
            }
        }
    }
    let anchor = Polynomial::linear(&-GaussianRational::i());
    lower = &lower * &anchor;
    // s·upper + t·lower = 1, so num/(upper·lower) = num·t/upper + num·s/lower.
    let (g, s, t) = Polynomial::xgcd(&upper, &lower);
    debug_assert!(g.is_one());
    let num = phi.num();
    let minus_rem = (num * &t).rem(&upper);
    let plus_rem = (num * &s).rem(&lower);
    let weight = RationalFunction::from_poly(anchor);
    let plus_part = &weight * &RationalFunction::frac(plus_rem, lower);
    let minus_part = &weight * &RationalFunction::frac(minus_rem, upper);
    debug_assert_eq!(&plus_part + &minus_part, *phi);
    Ok(ProjectionResult { plus_part, minus_part })
}

/// Symbols that can be sampled along the extended real line.
pub trait LineSymbol {
    /// Value at `ξ = tan(θ/2)` for `θ ∈ (−π, π]`; `θ = π` is `ξ = ∞`.
    fn eval_theta(&self, theta: f64) -> Complex64;
}

/// Evaluates `p` at `ξ = tan(θ/2)` scaled by `cos(θ/2)^deg`, which stays
/// bounded as `θ → π`.
fn homogeneous_eval(p: &Polynomial, deg: usize, theta: f64) -> Complex64 {
    let (s, c) = (theta / 2.0).sin_cos();
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, a) in p.coeffs().iter().enumerate().rev() {
        acc += a.to_complex() * s.powi(k as i32) * c.powi((deg - k) as i32);
    }
    acc
}

impl LineSymbol for RationalFunction {
    fn eval_theta(&self, theta: f64) -> Complex64 {
        let deg = self.num().degree().unwrap_or(0).max(self.den().degree().unwrap_or(0));
        homogeneous_eval(self.num(), deg, theta) / homogeneous_eval(self.den(), deg, theta)
    }
}

impl LineSymbol for FactoredRational {
    fn eval_theta(&self, theta: f64) -> Complex64 {
        let (s, c) = (theta / 2.0).sin_cos();
        let mut acc = self.lead().to_complex();
        // Each factor (ξ − a) becomes (sin − a·cos); the cos^balance leftover
        // is 1 for degree-balanced symbols.
        for f in self.factors() {
            acc *= (Complex64::new(s, 0.0) - f.root.to_complex() * c).powi(f.mult);
        }
        acc * c.powi(-(self.degree_balance() as i32))
    }
}

/// Adapter for closures `ξ ↦ f(ξ)` with a separate value at `∞`.
pub struct FnSymbol<F: Fn(f64) -> Complex64> {
    pub f: F,
    pub at_infinity: Complex64,
}

impl<F: Fn(f64) -> Complex64> LineSymbol for FnSymbol<F> {
    fn eval_theta(&self, theta: f64) -> Complex64 {
        if (theta - PI).abs() < 1e-15 {
            self.at_infinity
        } else {
            (self.f)((theta / 2.0).tan())
        }
    }
}

/// Numeric winding number along the extended real line: samples on `grid`
/// equal steps in `θ`, bisecting any step whose argument increment reaches
/// `π/2`.
pub fn winding_numeric(f: &dyn LineSymbol, grid: usize, tol: f64) -> Result<i64> {
    let grid = grid.max(4);
    let sample = |theta: f64| -> Result<Complex64> {
        let v = f.eval_theta(theta);
        if !(v.norm() >= tol) {
            let xi = if (theta - PI).abs() < 1e-15 { f64::INFINITY } else { (theta / 2.0).tan() };
            return Err(Error::NearZeroOnContour(xi));
        }
        Ok(v)
    };
    let step = 2.0 * PI / grid as f64;
    let mut total = 0.0;
    let mut prev_theta = -PI;
    let mut prev = sample(PI)?;
    for j in 1..=grid {
        let theta = if j == grid { PI } else { -PI + step * j as f64 };
        let cur = sample(theta)?;
        total += increment(&sample, prev_theta, prev, theta, cur, 0)?;
        prev_theta = theta;
        prev = cur;
    }
    Ok((total / (2.0 * PI)).round() as i64)
}

fn increment(
    sample: &dyn Fn(f64) -> Result<Complex64>,
    a: f64,
    fa: Complex64,
    b: f64,
    fb: Complex64,
    depth: u32,
) -> Result<f64> {
    let d = (fb / fa).arg();
    if d.abs() < PI / 2.0 {
        return Ok(d);
    }
    if depth > 48 {
        return Err(Error::NearZeroOnContour(((a + b) / 4.0).tan()));
    }
    let m = 0.5 * (a + b);
    let fm = sample(m)?;
    Ok(increment(sample, a, fa, m, fm, depth + 1)? + increment(sample, m, fm, b, fb, depth + 1)?)
}
