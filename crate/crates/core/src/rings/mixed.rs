//! Finite sums `Σ r_λ(ξ)·e_λ(ξ)` with rational-function coefficients.
//!
//! Supports ring arithmetic and determinants only.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::gaussian::rat_to_f64;
use super::{APPoly, GaussianRational, RationalFunction, Ring};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct MixedElem {
    terms: BTreeMap<BigRational, RationalFunction>,
}

impl MixedElem {
    pub fn from_terms(terms: impl IntoIterator<Item = (BigRational, RationalFunction)>) -> Self {
        let mut map: BTreeMap<BigRational, RationalFunction> = BTreeMap::new();
        for (f, c) in terms {
            let e = map.entry(f).or_default();
            *e = &*e + &c;
        }
        map.retain(|_, c| !c.is_zero());
        MixedElem { terms: map }
    }

    pub fn from_rational(r: RationalFunction) -> Self {
        Self::from_terms([(BigRational::zero(), r)])
    }

    pub fn from_ap(p: &APPoly) -> Self {
        Self::from_terms(p.terms().iter().map(|(f, c)| (f.clone(), RationalFunction::constant(c.clone()))))
    }

    pub fn terms(&self) -> &BTreeMap<BigRational, RationalFunction> {
        &self.terms
    }

    /// The rational function, if there is no exponential part.
    pub fn as_rational(&self) -> Option<RationalFunction> {
        match self.terms.len() {
            0 => Some(RationalFunction::default()),
            1 => self.terms.get(&BigRational::zero()).cloned(),
            _ => None,
        }
    }

    /// The almost periodic polynomial, if every coefficient is constant.
    pub fn as_ap(&self) -> Option<APPoly> {
        let mut out = Vec::new();
        for (f, c) in &self.terms {
            out.push((f.clone(), c.as_constant()?));
        }
        Some(APPoly::from_terms(out))
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let xc = Complex64::new(x, 0.0);
        self.terms
            .iter()
            .map(|(f, c)| c.eval_complex(xc) * Complex64::from_polar(1.0, rat_to_f64(f) * x))
            .sum()
    }
}

impl Ring for MixedElem {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_rational(RationalFunction::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_scalar(c: &GaussianRational) -> Self {
        Self::from_rational(RationalFunction::constant(c.clone()))
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
        if self.terms.len() != 1 {
            return None;
        }
        let (f, c) = self.terms.iter().next().unwrap();
        Some(Self::from_terms([(-f.clone(), c.inv()?)]))
    }
}

impl<'a> Add<&'a MixedElem> for &'a MixedElem {
    type Output = MixedElem;
    fn add(self, o: &MixedElem) -> MixedElem {
        MixedElem::from_terms(self.terms.iter().chain(&o.terms).map(|(f, c)| (f.clone(), c.clone())))
    }
}

impl<'a> Sub<&'a MixedElem> for &'a MixedElem {
    type Output = MixedElem;
    fn sub(self, o: &MixedElem) -> MixedElem {
        self + &(-o)
    }
}

impl<'a> Mul<&'a MixedElem> for &'a MixedElem {
    type Output = MixedElem;
    fn mul(self, o: &MixedElem) -> MixedElem {
        MixedElem::from_terms(
            self.terms.iter().flat_map(|(f, a)| o.terms.iter().map(move |(g, b)| (f + g, a * b))),
        )
    }
}

impl Neg for &MixedElem {
    type Output = MixedElem;
    fn neg(self) -> MixedElem {
        MixedElem { terms: self.terms.iter().map(|(f, c)| (f.clone(), -c)).collect() }
    }
}

impl Neg for MixedElem {
    type Output = MixedElem;
    fn neg(self) -> MixedElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MixedElem {
            type Output = MixedElem;
            fn $m(self, o: MixedElem) -> MixedElem {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for MixedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(fr, c)| if fr.is_zero() { format!("({c})") } else { format!("({c})·e[{fr}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for MixedElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
