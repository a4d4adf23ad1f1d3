//! Almost periodic polynomials `Σ c_λ e_λ`, `e_λ(ξ) = exp(iλξ)`, with exact
//! rational frequencies.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::gaussian::rat_to_f64;
use super::{GaussianRational, Half, Ring};

/// Finite sum of exponentials; never stores a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct APPoly {
    terms: BTreeMap<BigRational, GaussianRational>,
}

impl APPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = (BigRational, GaussianRational)>) -> Self {
        let mut map: BTreeMap<BigRational, GaussianRational> = BTreeMap::new();
        for (f, c) in terms {
            let e = map.entry(f).or_insert_with(GaussianRational::zero);
            *e = &*e + &c;
        }
        map.retain(|_, c| !c.is_zero());
        APPoly { terms: map }
    }

    pub fn monomial(c: GaussianRational, freq: BigRational) -> Self {
        Self::from_terms([(freq, c)])
    }

    /// `e_λ`.
    pub fn e(freq: BigRational) -> Self {
        Self::monomial(GaussianRational::one(), freq)
    }

    pub fn e_int(p: i64, q: i64) -> Self {
        Self::e(BigRational::new(p.into(), q.into()))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial(c, BigRational::zero())
    }

    pub fn terms(&self) -> &BTreeMap<BigRational, GaussianRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, freq: &BigRational) -> GaussianRational {
        self.terms.get(freq).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn as_monomial(&self) -> Option<(&BigRational, &GaussianRational)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn min_freq(&self) -> Option<&BigRational> {
        self.terms.keys().next()
    }

    pub fn max_freq(&self) -> Option<&BigRational> {
        self.terms.keys().next_back()
    }

    pub fn freqs(&self) -> impl Iterator<Item = &BigRational> {
        self.terms.keys()
    }

    /// Membership in AP^half polynomials: all frequencies ≥ 0 for `Plus`,
    /// ≤ 0 for `Minus`.
    pub fn in_half(&self, half: Half) -> bool {
        match half {
            Half::Plus => self.min_freq().is_none_or(|f| !f.is_negative()),
            Half::Minus => self.max_freq().is_none_or(|f| !f.is_positive()),
        }
    }

    /// Frequency-sign split: `Plus` keeps λ ≥ 0, `Minus` keeps λ < 0.
    pub fn project(&self, half: Half) -> Self {
        let keep = |f: &BigRational| match half {
            Half::Plus => !f.is_negative(),
            Half::Minus => f.is_negative(),
        };
        APPoly { terms: self.terms.iter().filter(|(f, _)| keep(f)).map(|(f, c)| (f.clone(), c.clone())).collect() }
    }

    /// Keeps the terms whose frequency satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&BigRational) -> bool) -> Self {
        APPoly { terms: self.terms.iter().filter(|(f, _)| pred(f)).map(|(f, c)| (f.clone(), c.clone())).collect() }
    }

    /// Multiplication by `e_λ`.
    pub fn shift(&self, by: &BigRational) -> Self {
        APPoly { terms: self.terms.iter().map(|(f, c)| (f + by, c.clone())).collect() }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        APPoly { terms: self.terms.iter().map(|(f, a)| (f.clone(), a * c)).collect() }
    }

    /// Pointwise conjugate on the real line: `conj(c)·e_{−λ}`.
    pub fn conj(&self) -> Self {
        APPoly { terms: self.terms.iter().map(|(f, c)| (-f.clone(), c.conj())).collect() }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(f, c)| c.to_complex() * Complex64::from_polar(1.0, rat_to_f64(f) * x))
            .sum()
    }

    /// Long division in the ordered group ring; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some((f, c)) = d.as_monomial() {
            return Some(self.shift(&-f.clone()).scale(&c.inv()?));
        }
        let (dmax, dlead) = d.terms.iter().next_back().unwrap();
        let dmin = d.min_freq().unwrap();
        let dlead_inv = dlead.inv()?;
        let mut rem = self.clone();
        let mut quot = APPoly::default();
        let floor = match self.min_freq() {
            Some(m) => m - dmin,
            None => return Some(APPoly::default()),
        };
        for _ in 0..10_000 {
            let Some((rmax, rc)) = rem.terms.iter().next_back() else {
                return Some(quot);
            };
            let qf = rmax - dmax;
            if qf < floor {
                return None;
            }
            let term = APPoly::monomial(rc * &dlead_inv, qf);
            rem = &rem - &(&term * d);
            quot = &quot + &term;
        }
        None
    }

    fn fmt_term(f: &BigRational, c: &GaussianRational) -> String {
        if f.is_zero() {
            return c.to_string();
        }
        let e = if f.is_integer() { format!("e[{f}]") } else { format!("e[{}/{}]", f.numer(), f.denom()) };
        if c.is_one() {
            e
        } else if *c == -GaussianRational::one() {
            format!("-{e}")
        } else {
            format!("{c}{e}")
        }
    }
}

impl Ring for APPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(GaussianRational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
    /// Units of the polynomial ring are exactly the nonzero monomials.
    fn unit_inverse(&self) -> Option<Self> {
        let (f, c) = self.as_monomial()?;
        Some(APPoly::monomial(c.inv()?, -f.clone()))
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d)
    }
    fn is_integral_domain() -> bool {
        true
    }
}

impl<'a> Add<&'a APPoly> for &'a APPoly {
    type Output = APPoly;
    fn add(self, o: &APPoly) -> APPoly {
        let mut terms = self.terms.clone();
        for (f, c) in &o.terms {
            match terms.get_mut(f) {
                Some(e) => {
                    *e = &*e + c;
                    if e.is_zero() {
                        terms.remove(f);
                    }
                }
                None => {
                    terms.insert(f.clone(), c.clone());
                }
            }
        }
        APPoly { terms }
    }
}

impl<'a> Sub<&'a APPoly> for &'a APPoly {
    type Output = APPoly;
    fn sub(self, o: &APPoly) -> APPoly {
        self + &(-o)
    }
}

impl<'a> Mul<&'a APPoly> for &'a APPoly {
    type Output = APPoly;
    fn mul(self, o: &APPoly) -> APPoly {
        APPoly::from_terms(
            self.terms.iter().flat_map(|(f, a)| o.terms.iter().map(move |(g, b)| (f + g, a * b))),
        )
    }
}

impl Neg for &APPoly {
    type Output = APPoly;
    fn neg(self) -> APPoly {
        APPoly { terms: self.terms.iter().map(|(f, c)| (f.clone(), -c)).collect() }
    }
}

impl Neg for APPoly {
    type Output = APPoly;
    fn neg(self) -> APPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for APPoly {
            type Output = APPoly;
            fn $m(self, o: APPoly) -> APPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for APPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(fr, c)| APPoly::fmt_term(fr, c)).collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for APPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    pub(crate) fn arb_ap() -> impl Strategy<Value = APPoly> {
        prop::collection::vec(((-6i64..6, 1i64..4), (-4i64..4, -4i64..4)), 0..5)
            .prop_map(|v| APPoly::from_terms(v.into_iter().map(|((p, d), (a, b))| (q(p, d), g(a, b)))))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_ap(), b in arb_ap(), c in arb_ap()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn product_support_in_sumset(a in arb_ap(), b in arb_ap()) {
            let p = &a * &b;
            for f in p.freqs() {
                prop_assert!(a.freqs().any(|x| b.freqs().any(|y| &(x + y) == f)));
            }
        }

        #[test]
        fn projection_split(a in arb_ap()) {
            let p = a.project(Half::Plus);
            let m = a.project(Half::Minus);
            prop_assert_eq!(&p + &m, a.clone());
            prop_assert_eq!(p.project(Half::Plus), p.clone());
            prop_assert!(p.in_half(Half::Plus));
            prop_assert!(m.freqs().all(|f| f.is_negative()));
        }

        #[test]
        fn division_inverts_multiplication(a in arb_ap(), b in arb_ap()) {
            prop_assume!(!b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.div_exact(&b), Some(a));
        }
    }

    #[test]
    fn exponentials_multiply() {
        assert_eq!(&APPoly::e_int(1, 2) * &APPoly::e_int(3, 2), APPoly::e_int(2, 1));
        let p = APPoly::from_terms([(q(-1, 1), g(2, 0)), (q(0, 1), g(5, 0)), (q(2, 1), g(1, 0))]);
        assert_eq!(p.project(Half::Plus).to_string(), "5 + e[2]");
        assert_eq!(p.project(Half::Minus).to_string(), "2e[-1]");
        assert!(APPoly::from_terms([(q(1, 1), g(1, 0)), (q(2, 1), g(1, 0))]).unit_inverse().is_none());
        assert!((&APPoly::e_int(1, 1) + &APPoly::e_int(2, 1)).div_exact(&APPoly::e_int(2, 1) .add_ref(&APPoly::one())).is_none());
    }
}
