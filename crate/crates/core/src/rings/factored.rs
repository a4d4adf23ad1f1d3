//! Rational functions stored by their zeros and poles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::realroots::half_plane_count;
use super::{GaussianRational, Polynomial, RationalFunction, Ring};
use crate::error::{Error, Result};

/// Location of a root relative to the real line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HalfPlane {
    Upper,
    Lower,
    Real,
}

impl HalfPlane {
    pub fn of(z: &GaussianRational) -> HalfPlane {
        match z.half_plane_sign() {
            1 => HalfPlane::Upper,
            -1 => HalfPlane::Lower,
            _ => HalfPlane::Real,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            HalfPlane::Upper => "C+",
            HalfPlane::Lower => "C-",
            HalfPlane::Real => "R",
        }
    }
}

/// A point of the extended complex plane, with a flag for whether a finite
/// location is known exactly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Point {
    Exact(GaussianRational),
    /// Floating-point location converted exactly; not a verified root.
    Approx(GaussianRational),
    Infinity,
}

impl Point {
    pub fn value(&self) -> Option<&GaussianRational> {
        match self {
            Point::Exact(z) | Point::Approx(z) => Some(z),
            Point::Infinity => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Point::Approx(_))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Exact(z) => write!(f, "{z}"),
            Point::Approx(z) => {
                let c = z.to_complex();
                write!(f, "≈{:.12}{:+.12}i", c.re, c.im)
            }
            Point::Infinity => write!(f, "∞"),
        }
    }
}

/// One linear factor `(ξ − root)^mult`; negative `mult` is a pole.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootFactor {
    pub root: GaussianRational,
    pub mult: i32,
    pub half: HalfPlane,
    /// False when `root` is a floating-point approximation.
    pub exact: bool,
}

impl RootFactor {
    pub fn new(root: GaussianRational, mult: i32) -> Self {
        let half = HalfPlane::of(&root);
        RootFactor { root, mult, half, exact: true }
    }

    pub fn point(&self) -> Point {
        if self.exact {
            Point::Exact(self.root.clone())
        } else {
            Point::Approx(self.root.clone())
        }
    }
}

/// `lead · Π (ξ − root_j)^{mult_j}` with pairwise distinct roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    lead: GaussianRational,
    factors: Vec<RootFactor>,
}

impl FactoredRational {
    /// Builds the canonical form: repeated roots merged, zero multiplicities
    /// dropped, roots sorted.
    pub fn new(lead: GaussianRational, factors: impl IntoIterator<Item = (GaussianRational, i32)>) -> Result<Self> {
        if lead.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(Self::from_factors(lead, factors.into_iter().map(|(z, m)| RootFactor::new(z, m))))
    }

    pub(crate) fn from_factors(lead: GaussianRational, factors: impl IntoIterator<Item = RootFactor>) -> Self {
        let mut merged: BTreeMap<(String, String, bool), RootFactor> = BTreeMap::new();
        for f in factors {
            let key = (f.root.re.to_string(), f.root.im.to_string(), f.exact);
            match merged.get_mut(&key) {
                Some(e) => e.mult += f.mult,
                None => {
                    merged.insert(key, f);
                }
            }
        }
        let mut factors: Vec<RootFactor> = merged.into_values().filter(|f| f.mult != 0).collect();
        factors.sort_by(|a, b| (&a.root.re, &a.root.im).cmp(&(&b.root.re, &b.root.im)));
        FactoredRational { lead, factors }
    }

    pub fn constant(c: GaussianRational) -> Result<Self> {
        Self::new(c, [])
    }

    pub fn one() -> Self {
        Self::from_factors(GaussianRational::one(), [])
    }

    /// `r^k = ((ξ − i)/(ξ + i))^k`.
    pub fn r_pow(k: i32) -> Self {
        Self::from_factors(
            GaussianRational::one(),
            [RootFactor::new(GaussianRational::i(), k), RootFactor::new(-GaussianRational::i(), -k)],
        )
    }

    pub fn lead(&self) -> &GaussianRational {
        &self.lead
    }

    pub fn factors(&self) -> &[RootFactor] {
        &self.factors
    }

    pub fn is_exact(&self) -> bool {
        self.factors.iter().all(|f| f.exact)
    }

    /// Exact product of the linear factors.
    pub fn expand(&self) -> RationalFunction {
        let mut num = Polynomial::constant(self.lead.clone());
        let mut den = Polynomial::constant(GaussianRational::one());
        for f in &self.factors {
            let lin = Polynomial::linear(&f.root).pow(f.mult.unsigned_abs());
            if f.mult > 0 {
                num = &num * &lin;
            } else {
                den = &den * &lin;
            }
        }
        RationalFunction::frac(num, den)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_factors(&self.lead * &o.lead, self.factors.iter().chain(&o.factors).cloned())
    }

    pub fn inv(&self) -> Self {
        Self::from_factors(
            self.lead.inv().expect("lead is nonzero"),
            self.factors.iter().map(|f| RootFactor { mult: -f.mult, ..f.clone() }),
        )
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let k = e.unsigned_abs();
        Self::from_factors(
            base.lead.pow(k),
            base.factors.iter().map(|f| RootFactor { mult: f.mult * k as i32, ..f.clone() }),
        )
    }

    pub fn scale(&self, c: &GaussianRational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(FactoredRational { lead: &self.lead * c, factors: self.factors.clone() })
    }

    /// `deg num − deg den`.
    pub fn degree_balance(&self) -> i64 {
        self.factors.iter().map(|f| f.mult as i64).sum()
    }

    /// Zeros minus poles in the given open half-plane, with multiplicity.
    pub fn net_count(&self, half: HalfPlane) -> i64 {
        self.factors.iter().filter(|f| f.half == half).map(|f| f.mult as i64).sum()
    }

    pub fn real_roots(&self) -> impl Iterator<Item = &RootFactor> {
        self.factors.iter().filter(|f| f.half == HalfPlane::Real)
    }

    /// Keeps only the factors in `half`, with lead 1.
    pub fn restrict(&self, half: HalfPlane) -> Self {
        Self::from_factors(GaussianRational::one(), self.factors.iter().filter(|f| f.half == half).cloned())
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.factors
            .iter()
            .fold(self.lead.to_complex(), |acc, f| acc * (x - f.root.to_complex()).powi(f.mult))
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.lead.is_one() || self.factors.is_empty() {
            parts.push(self.lead.to_string());
        }
        for r in &self.factors {
            let base = if !r.exact {
                format!("ξ - {}", r.point())
            } else if r.root.is_zero() {
                "ξ".to_string()
            } else {
                let neg = -r.root.clone();
                let z = r.root.to_string();
                if z.starts_with('-') {
                    format!("ξ + {neg}")
                } else {
                    format!("ξ - {z}")
                }
            };
            parts.push(if r.mult == 1 { format!("({base})") } else { format!("({base})^{}", r.mult) });
        }
        f.write_str(&parts.join("·"))
    }
}

/// Result of [`factor_numeric`].
#[derive(Clone, Debug)]
pub struct NumericFactoring {
    pub factored: FactoredRational,
    /// True when every root snapped to an exact Gaussian rational, so that
    /// `factored.expand()` equals the input.
    pub exact: bool,
}

/// Locates zeros and poles of `f`. Roots are snapped to Gaussian rationals
/// with small denominators when the snapped value is an exact root; other
/// roots are kept as floating-point points. Half-plane tags of all roots are
/// cross-checked against exact Cauchy-index counts.
pub fn factor_numeric(f: &RationalFunction, tol: f64) -> Result<NumericFactoring> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut factors = Vec::new();
    let mut exact = true;
    for (poly, sign) in [(f.num(), 1i32), (f.den(), -1i32)] {
        for (sf, k) in poly.squarefree() {
            let (roots, all_exact) = roots_of_squarefree(&sf, tol)?;
            exact &= all_exact;
            factors.extend(roots.into_iter().map(|mut r| {
                r.mult = sign * k as i32;
                r
            }));
        }
    }
    let lead = f.num().lead().unwrap().clone();
    Ok(NumericFactoring { factored: FactoredRational::from_factors(lead, factors), exact })
}

fn roots_of_squarefree(p: &Polynomial, tol: f64) -> Result<(Vec<RootFactor>, bool)> {
    let mut out = Vec::new();
    let mut rest = p.monic();
    // Exact roots first: each verified candidate is divided out exactly.
    let approx = aberth(&rest);
    for z in &approx {
        if let Some(c) = snap(*z, tol) {
            if rest.eval(&c).is_zero() {
                rest = rest.div_exact(&Polynomial::linear(&c)).unwrap();
                out.push(RootFactor::new(c, 1));
            }
        }
    }
    if rest.is_constant() {
        return Ok((out, true));
    }
    let counts = half_plane_count(&rest);
    let mut upper = 0;
    let mut real = 0;
    let approx = aberth(&rest);
    let mut inexact = Vec::new();
    for z in approx {
        let half = if z.im.abs() < tol {
            real += 1;
            HalfPlane::Real
        } else if z.im > 0.0 {
            upper += 1;
            HalfPlane::Upper
        } else {
            HalfPlane::Lower
        };
        let mut root = GaussianRational::from_complex(z).ok_or(Error::ZeroInput)?;
        if half == HalfPlane::Real {
            root.im = BigRational::zero();
        }
        inexact.push(RootFactor { root, mult: 1, half, exact: false });
    }
    if real != counts.real || upper != counts.upper {
        let suspect = inexact
            .iter()
            .filter(|r| r.root.to_complex().im.abs() < tol.max(1e-6))
            .map(|r| r.point())
            .next()
            .unwrap_or_else(|| inexact[0].point());
        return Err(Error::RootClassificationAmbiguous(Box::new(suspect)));
    }
    out.extend(inexact);
    Ok((out, false))
}

/// Simultaneous root iteration (Aberth) followed by Newton polishing.
pub(crate) fn aberth(p: &Polynomial) -> Vec<Complex64> {
    let Some(d) = p.degree() else { return Vec::new() };
    if d == 0 {
        return Vec::new();
    }
    let coeffs: Vec<Complex64> = p.coeffs().iter().map(|c| c.to_complex()).collect();
    let lead = coeffs[d];
    let c: Vec<Complex64> = coeffs.iter().map(|x| x / lead).collect();
    if d == 1 {
        return vec![-c[0]];
    }
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            dv = dv * z + v;
            v = v * z + a;
        }
        (v, dv)
    };
    let radius = 1.0 + c[..d].iter().map(|x| x.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let t = 2.0 * std::f64::consts::PI * (k as f64) / (d as f64) + 0.4;
            Complex64::from_polar(radius * 0.5, t)
        })
        .collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for k in 0..d {
            let (v, dv) = eval(z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let s: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[k] -= w;
            moved = moved.max(w.norm() / z[k].norm().max(1.0));
        }
        if moved < 1e-15 {
            break;
        }
    }
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let (v, dv) = eval(*zk);
            if dv.norm() == 0.0 {
                break;
            }
            *zk -= v / dv;
        }
    }
    z
}

/// Best small-denominator Gaussian rational near `z`, if one is within a
/// loose relative distance. The caller verifies exactness.
fn snap(z: Complex64, tol: f64) -> Option<GaussianRational> {
    let slack = tol.max(1e-7);
    let re = snap_real(z.re, slack)?;
    let im = snap_real(z.im, slack)?;
    Some(GaussianRational::new(re, im))
}

fn snap_real(x: f64, slack: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    if x.abs() < slack {
        return Some(BigRational::zero());
    }
    const MAX_DEN: i64 = 1_000_000;
    // Continued-fraction convergents h/k of x.
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut y = x;
    for _ in 0..40 {
        let a = y.floor();
        let ai = BigInt::from(a.to_i64()?);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if k2 > BigInt::from(MAX_DEN) {
            break;
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let approx = h1.to_f64()? / k1.to_f64()?;
        if (approx - x).abs() <= slack * x.abs().max(1.0) * 1e-3 {
            return Some(BigRational::new(h1, k1));
        }
        let frac = y - a;
        if frac.abs() < 1e-300 {
            break;
        }
        y = 1.0 / frac;
    }
    let approx = h1.to_f64()? / k1.to_f64()?;
    ((approx - x).abs() <= slack * x.abs().max(1.0)).then(|| BigRational::new(h1, k1))
}
