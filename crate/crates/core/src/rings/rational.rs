//! Rational functions over Q(i) in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::realroots::{half_plane_count, has_real_root, HalfPlaneCount};
use super::{GaussianRational, Polynomial, Ring};
use crate::error::{Error, Result};

/// Which open half-plane (or which Hardy-type algebra) is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    Plus,
    Minus,
}

impl Half {
    pub fn opposite(self) -> Half {
        match self {
            Half::Plus => Half::Minus,
            Half::Minus => Half::Plus,
        }
    }

    pub fn sign(self) -> i32 {
        match self {
            Half::Plus => 1,
            Half::Minus => -1,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Half::Plus => "+",
            Half::Minus => "-",
        }
    }
}

/// `num/den` with `den` monic and `gcd(num, den) = 1`; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::from_poly(Polynomial::default())
    }
}

impl RationalFunction {
    /// Canonical form of `num/den`.
    pub fn normalize(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::default());
        }
        let g = Polynomial::gcd(&num, &den);
        let mut n = num.div_exact(&g).unwrap();
        let mut d = den.div_exact(&g).unwrap();
        let l = d.lead().unwrap().inv().unwrap();
        if !l.is_one() {
            n = n.scale(&l);
            d = d.scale(&l);
        }
        Ok(RationalFunction { num: n, den: d })
    }

    /// Like [`normalize`](Self::normalize) for a denominator known to be nonzero.
    pub fn frac(num: Polynomial, den: Polynomial) -> Self {
        Self::normalize(num, den).expect("nonzero denominator")
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::constant(GaussianRational::one()) }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    /// `r(ξ) = (ξ − i)/(ξ + i)`.
    pub fn r() -> Self {
        let i = GaussianRational::i();
        RationalFunction { num: Polynomial::linear(&i), den: Polynomial::linear(&-i) }
    }

    /// `r^k` for any integer `k`.
    pub fn r_pow(k: i64) -> Self {
        let i = GaussianRational::i();
        let up = Polynomial::linear(&i).pow(k.unsigned_abs() as u32);
        let down = Polynomial::linear(&-i).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            RationalFunction { num: up, den: down }
        } else {
            RationalFunction { num: down, den: up }
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<GaussianRational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::frac(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|oi| self * &oi)
    }

    pub fn pow_i(&self, e: i64) -> Option<Self> {
        let b = if e < 0 { self.inv()? } else { self.clone() };
        Some(RationalFunction {
            num: b.num.pow(e.unsigned_abs() as u32),
            den: b.den.pow(e.unsigned_abs() as u32),
        })
    }

    /// Exact value, `None` at a pole.
    pub fn eval(&self, x: &GaussianRational) -> Option<GaussianRational> {
        let d = self.den.eval(x);
        d.inv().map(|di| &self.num.eval(x) * &di)
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.num.eval_complex(x) / self.den.eval_complex(x)
    }

    /// `deg num − deg den`; `None` for zero.
    pub fn degree_balance(&self) -> Option<i64> {
        (!self.num.is_zero()).then(|| self.num.degree_i() - self.den.degree_i())
    }

    /// Limit at ∞ when finite.
    pub fn value_at_infinity(&self) -> Option<GaussianRational> {
        match self.degree_balance() {
            None => Some(GaussianRational::zero()),
            Some(b) if b < 0 => Some(GaussianRational::zero()),
            Some(0) => Some(self.num.lead().unwrap().clone()),
            _ => None,
        }
    }

    /// Coefficientwise conjugate. On the real line this is the pointwise
    /// complex conjugate, so it realizes `f ↦ f*` exactly.
    pub fn conj(&self) -> Self {
        RationalFunction { num: self.num.conj(), den: self.den.conj() }
    }

    pub fn zero_count(&self) -> HalfPlaneCount {
        if self.num.is_zero() {
            return HalfPlaneCount { upper: 0, lower: 0, real: 0 };
        }
        half_plane_count(&self.num)
    }

    pub fn pole_count(&self) -> HalfPlaneCount {
        half_plane_count(&self.den)
    }

    /// Bounded on the extended real line: no real poles and no pole at ∞.
    /// For rational functions this is membership in L∞, and also in M∞±.
    pub fn is_bounded_on_line(&self) -> bool {
        self.value_at_infinity().is_some() && !has_real_root(&self.den)
    }

    /// Membership in H∞^half: bounded with every pole in the opposite open
    /// half-plane.
    pub fn in_hardy(&self, half: Half) -> bool {
        if self.value_at_infinity().is_none() {
            return false;
        }
        let c = self.pole_count();
        match half {
            Half::Plus => c.upper == 0 && c.real == 0,
            Half::Minus => c.lower == 0 && c.real == 0,
        }
    }

    /// Invertible in L∞ (the group GR for rational functions): bounded,
    /// no zeros on the real line, nonzero at ∞.
    pub fn is_invertible_on_line(&self) -> bool {
        self.degree_balance() == Some(0) && !has_real_root(&self.den) && !has_real_root(&self.num)
    }

    /// Invertible in H∞^half: in the algebra together with its inverse.
    pub fn is_hardy_unit(&self, half: Half) -> bool {
        self.in_hardy(half) && self.inv().is_some_and(|f| f.in_hardy(half))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.den.is_one() {
            return self.num.fmt_var(var);
        }
        format!("({})/({})", self.num.fmt_var(var), self.den.fmt_var(var))
    }
}

impl Ring for RationalFunction {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(GaussianRational::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_scalar(c: &GaussianRational) -> Self {
        Self::constant(c.clone())
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn unit_inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div(d)
    }
    fn is_integral_domain() -> bool {
        true
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() {
            return o.clone();
        }
        if o.num.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RationalFunction::frac(&self.num + &o.num, self.den.clone());
        }
        let g = Polynomial::gcd(&self.den, &o.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = o.den.div_exact(&g).unwrap();
        let num = &(&self.num * &b) + &(&o.num * &a);
        RationalFunction::frac(num, &a * &o.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || o.num.is_zero() {
            return RationalFunction::default();
        }
        // Cross-cancel before multiplying; the result is then already coprime.
        let g1 = Polynomial::gcd(&self.num, &o.den);
        let g2 = Polynomial::gcd(&o.num, &self.den);
        let n = &self.num.div_exact(&g1).unwrap() * &o.num.div_exact(&g2).unwrap();
        let d = &self.den.div_exact(&g2).unwrap() * &o.den.div_exact(&g1).unwrap();
        RationalFunction::frac(n, d)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("ξ"))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
