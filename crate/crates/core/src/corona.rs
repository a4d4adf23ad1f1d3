//! Corona problems `Σ g_j h_j = 1` in the rational parts of H∞±, M∞± and in
//! the almost periodic polynomials of AP±.
//!
//! Rational data is moved to the unit disk, where membership in the half-plane
//! algebras is a statement about roots of polynomials in `w` and the point
//! `ξ = ∞` is the ordinary point `w = 1`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{multi_xgcd, BezoutOutcome, BezoutSolver};
use crate::rings::mobius::disk_poly_to_line;
use crate::rings::{
    disk_to_line_half, factor_numeric, line_to_disk_half, APPoly, GaussianRational, Half, HalfPlane, Point,
    Polynomial, RationalFunction, Ring,
};
use crate::scalar_wh::{wh_factor_rational, ScalarWH};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Hardy(Half),
    Meromorphic(Half),
    AlmostPeriodic(Half),
}

impl Algebra {
    pub fn tag(self) -> &'static str {
        match self {
            Algebra::Hardy(Half::Plus) => "H+",
            Algebra::Hardy(Half::Minus) => "H-",
            Algebra::Meromorphic(Half::Plus) => "M+",
            Algebra::Meromorphic(Half::Minus) => "M-",
            Algebra::AlmostPeriodic(Half::Plus) => "AP+",
            Algebra::AlmostPeriodic(Half::Minus) => "AP-",
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A truncated solution: `Σ g_j h_j − 1 = residual` exactly, and the Wiener
/// norm of `residual` is at most `norm_bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct Approximation<R> {
    pub residual: R,
    pub norm_bound: BigRational,
    pub terms: usize,
}

/// `h_j = r · tuple_j` with `r` invertible on the extended line and `tuple`
/// a corona tuple of H∞^half.
#[derive(Clone, Debug, PartialEq)]
pub struct MDecomposition {
    pub r: RationalFunction,
    pub tuple: Vec<RationalFunction>,
    /// `r = γ₋ r^k γ₊` when the roots of `r` are Gaussian rationals.
    pub canonical: Option<ScalarWH>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoronaCertificate<R> {
    pub algebra: Algebra,
    pub solution: Vec<R>,
    /// Present only for truncated AP series.
    pub approximation: Option<Approximation<R>>,
    pub decomposition: Option<MDecomposition>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoronaFailure {
    pub algebra: Algebra,
    /// Common zero of every `h_j`, when located.
    pub witness: Option<Point>,
    /// Common non-invertible factor (AP case).
    pub common_factor: Option<APPoly>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CoronaOutcome<R> {
    Certificate(CoronaCertificate<R>),
    Failure(CoronaFailure),
    Unresolved(String),
}

impl<R> CoronaOutcome<R> {
    pub fn certificate(&self) -> Option<&CoronaCertificate<R>> {
        match self {
            CoronaOutcome::Certificate(c) => Some(c),
            _ => None,
        }
    }

    pub fn failure(&self) -> Option<&CoronaFailure> {
        match self {
            CoronaOutcome::Failure(f) => Some(f),
            _ => None,
        }
    }
}

fn unit_vector<R: Ring>(n: usize, j: usize, v: R) -> Vec<R> {
    let mut out = vec![R::zero(); n];
    out[j] = v;
    out
}

fn lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let g = Polynomial::gcd(a, b);
    (a * b).div_exact(&g).expect("gcd divides").monic()
}

/// Disk-side numerators over a common monic denominator.
fn disk_numerators(h: &[RationalFunction], half: Half) -> (Vec<Polynomial>, Polynomial) {
    let disk: Vec<RationalFunction> = h.iter().map(|f| line_to_disk_half(f, half)).collect();
    let l = disk.iter().fold(Polynomial::one(), |acc, f| lcm(&acc, f.den()));
    let nums = disk.iter().map(|f| f.num() * &l.div_exact(f.den()).expect("den divides lcm")).collect();
    (nums, l)
}

/// Where the roots of a disk polynomial sit relative to the closed disk.
struct DiskRoots {
    at_one: bool,
    on_circle: usize,
    inside: usize,
    line_image: Polynomial,
}

fn disk_roots(g: &Polynomial, half: Half) -> DiskRoots {
    let deg = g.degree().unwrap_or(0);
    let line_image = disk_poly_to_line(g, deg, half);
    let counts = crate::rings::half_plane_count(&line_image);
    DiskRoots {
        at_one: g.eval(&GaussianRational::one()).is_zero(),
        on_circle: counts.real,
        inside: match half {
            Half::Plus => counts.upper,
            Half::Minus => counts.lower,
        },
        line_image,
    }
}

/// Picks a common zero from the line image of the gcd; exact points first.
fn locate_witness(roots: &DiskRoots, half: Half, interior: bool) -> Option<Point> {
    let mut candidates: Vec<(u8, Point)> = Vec::new();
    if roots.at_one {
        candidates.push((1, Point::Infinity));
    }
    if !roots.line_image.is_constant() {
        if let Ok(nf) = factor_numeric(&RationalFunction::from_poly(roots.line_image.clone()), 1e-9) {
            let wanted = match half {
                Half::Plus => HalfPlane::Upper,
                Half::Minus => HalfPlane::Lower,
            };
            for f in nf.factored.factors() {
                let rank = match (f.half, f.exact) {
                    (HalfPlane::Real, true) => 0,
                    (h, true) if h == wanted && interior => 2,
                    (HalfPlane::Real, false) => 3,
                    (h, false) if h == wanted && interior => 4,
                    _ => continue,
                };
                candidates.push((rank, f.point()));
            }
        }
    }
    candidates.into_iter().min_by_key(|(rank, _)| *rank).map(|(_, p)| p)
}

/// Exact check that every `h_j` vanishes at `p`.
pub fn vanishes_at(h: &[RationalFunction], p: &Point) -> bool {
    match p {
        Point::Infinity => h.iter().all(|f| f.value_at_infinity().is_some_and(|v| v.is_zero())),
        Point::Exact(z) => h.iter().all(|f| f.eval(z).is_some_and(|v| v.is_zero())),
        Point::Approx(_) => false,
    }
}

fn all_zero_failure(algebra: Algebra) -> CoronaFailure {
    CoronaFailure { algebra, witness: None, common_factor: None, reason: "every entry is zero".into() }
}

/// Corona problem in `H∞^half ∩ R`.
pub fn corona_solve_hplus(h: &[RationalFunction], half: Half) -> Result<CoronaOutcome<RationalFunction>> {
    let algebra = Algebra::Hardy(half);
    for (index, f) in h.iter().enumerate() {
        if !f.in_hardy(half) {
            return Err(Error::MembershipViolation { index, algebra: format!("H∞{} ∩ R", half.symbol()) });
        }
    }
    if let Some(j) = h.iter().position(|f| f.is_hardy_unit(half)) {
        let inv = h[j].inv().expect("unit");
        return Ok(certificate(algebra, unit_vector(h.len(), j, inv), None));
    }
    let (nums, l) = disk_numerators(h, half);
    let (g, coeffs) = multi_xgcd(&nums);
    if g.is_zero() {
        return Ok(CoronaOutcome::Failure(all_zero_failure(algebra)));
    }
    let roots = disk_roots(&g, half);
    if roots.at_one || roots.on_circle > 0 || roots.inside > 0 {
        let witness = locate_witness(&roots, half, true);
        debug_assert!(witness.as_ref().is_none_or(|p| !p.is_exact() || vanishes_at(h, p)));
        return Ok(CoronaOutcome::Failure(CoronaFailure {
            algebra,
            witness,
            common_factor: None,
            reason: format!("the entries share the factor {} on the disk side", g.fmt_var("w")),
        }));
    }
    let solution: Vec<RationalFunction> = coeffs
        .iter()
        .map(|a| disk_to_line_half(&RationalFunction::frac(a * &l, g.clone()), half))
        .collect();
    verify_solution(h, &solution, |f| f.in_hardy(half), algebra)?;
    Ok(certificate(algebra, solution, None))
}

fn certificate<R>(algebra: Algebra, solution: Vec<R>, decomposition: Option<MDecomposition>) -> CoronaOutcome<R> {
    CoronaOutcome::Certificate(CoronaCertificate { algebra, solution, approximation: None, decomposition })
}

fn verify_solution<R: Ring>(h: &[R], g: &[R], member: impl Fn(&R) -> bool, algebra: Algebra) -> Result<()> {
    if !crate::rings::dot(g, h).is_one() {
        return Err(Error::CertificateInvalid(format!("Σ g_j h_j ≠ 1 in {algebra}")));
    }
    if let Some(j) = g.iter().position(|x| !member(x)) {
        return Err(Error::CertificateInvalid(format!("g_{j} is not in {algebra}")));
    }
    Ok(())
}

/// Corona problem in `M∞^half ∩ R`: the common zeros off the line are divided
/// out into an invertible factor `r`, and the quotient tuple is solved in
/// `H∞^half`.
pub fn corona_solve_mplus(h: &[RationalFunction], half: Half) -> Result<CoronaOutcome<RationalFunction>> {
    let algebra = Algebra::Meromorphic(half);
    for (index, f) in h.iter().enumerate() {
        if !f.is_bounded_on_line() {
            return Err(Error::MembershipViolation { index, algebra: format!("M∞{} ∩ R", half.symbol()) });
        }
    }
    let (nums, l) = disk_numerators(h, half);
    let (g, _) = multi_xgcd(&nums);
    if g.is_zero() {
        return Ok(CoronaOutcome::Failure(all_zero_failure(algebra)));
    }
    let roots = disk_roots(&g, half);
    if roots.at_one || roots.on_circle > 0 {
        let witness = locate_witness(&roots, half, false);
        debug_assert!(witness.as_ref().is_none_or(|p| !p.is_exact() || vanishes_at(h, p)));
        return Ok(CoronaOutcome::Failure(CoronaFailure {
            algebra,
            witness,
            common_factor: None,
            reason: "the entries have a common zero on the extended real line".into(),
        }));
    }
    let r = disk_to_line_half(&RationalFunction::frac(g.clone(), l), half);
    let tuple: Vec<RationalFunction> = nums
        .iter()
        .map(|p| disk_to_line_half(&RationalFunction::from_poly(p.div_exact(&g).expect("gcd divides")), half))
        .collect();
    let r_inv = r.inv().expect("r is nonzero");
    let solution = if let Some(j) = h.iter().position(|f| f.is_invertible_on_line()) {
        unit_vector(h.len(), j, h[j].inv().expect("invertible"))
    } else {
        match corona_solve_hplus(&tuple, half)? {
            CoronaOutcome::Certificate(c) => c.solution.iter().map(|x| x * &r_inv).collect(),
            other => {
                return Err(Error::CertificateInvalid(format!("quotient tuple is not a corona tuple: {other:?}")));
            }
        }
    };
    verify_solution(h, &solution, |f| f.is_bounded_on_line(), algebra)?;
    let canonical = wh_factor_rational(&r, 1e-9).ok().filter(|w| w.is_exact());
    Ok(certificate(algebra, solution, Some(MDecomposition { r, tuple, canonical })))
}

/// Wiener norm bound `Σ |c_λ|` from rational upper bounds of each modulus.
pub fn wiener_norm_bound(p: &APPoly) -> BigRational {
    p.terms().values().fold(BigRational::zero(), |acc, c| acc + c.abs_bounds().1)
}

/// Corona problem in `AP^half`, decided on the fragment where one entry has a
/// dominant mean coefficient after a common exponential is factored out.
pub fn corona_solve_ap(h: &[APPoly], half: Half, terms: usize) -> Result<CoronaOutcome<APPoly>> {
    let algebra = Algebra::AlmostPeriodic(half);
    for (index, f) in h.iter().enumerate() {
        if !f.in_half(half) {
            return Err(Error::MembershipViolation { index, algebra: format!("AP{}", half.symbol()) });
        }
    }
    let nonzero = h.iter().filter(|f| !f.is_empty());
    let mu = match half {
        Half::Plus => nonzero.filter_map(|f| f.min_freq().cloned()).min(),
        Half::Minus => nonzero.filter_map(|f| f.max_freq().cloned()).max(),
    };
    let Some(mu) = mu else {
        return Ok(CoronaOutcome::Failure(all_zero_failure(algebra)));
    };
    if !mu.is_zero() {
        let factor = APPoly::e(mu.clone());
        return Ok(CoronaOutcome::Failure(CoronaFailure {
            algebra,
            witness: None,
            reason: format!("every entry is divisible by {factor}, which is not invertible in {algebra}"),
            common_factor: Some(factor),
        }));
    }
    if let Some(j) = h.iter().position(|f| f.as_monomial().is_some_and(|(l, _)| l.is_zero())) {
        let inv = h[j].unit_inverse().expect("nonzero constant");
        return Ok(certificate(algebra, unit_vector(h.len(), j, inv), None));
    }
    let zero = BigRational::zero();
    for (j, f) in h.iter().enumerate() {
        let c0 = f.coeff(&zero);
        if c0.is_zero() {
            continue;
        }
        let rest = f.filter(|l| !l.is_zero());
        let (c0_low, _) = c0.abs_bounds();
        if c0_low <= wiener_norm_bound(&rest) {
            continue;
        }
        let c0_inv = c0.inv().expect("nonzero");
        let u = rest.scale(&c0_inv);
        let neg_u = -&u;
        let mut series = APPoly::zero();
        let mut power = APPoly::one();
        for _ in 0..terms.max(1) {
            series = &series + &power;
            power = &power * &neg_u;
        }
        let solution = unit_vector(h.len(), j, series.scale(&c0_inv));
        let residual = &crate::rings::dot(&solution, h) - &APPoly::one();
        debug_assert_eq!(residual, -&power);
        let norm_bound = wiener_norm_bound(&residual);
        return Ok(CoronaOutcome::Certificate(CoronaCertificate {
            algebra,
            solution,
            approximation: Some(Approximation { residual, norm_bound, terms: terms.max(1) }),
            decomposition: None,
        }));
    }
    Ok(CoronaOutcome::Unresolved(format!(
        "no entry has a dominant mean coefficient; general {algebra} corona data is outside the constructive fragment"
    )))
}

/// Bezout solver for `H∞^half ∩ R`.
#[derive(Clone, Copy, Debug)]
pub struct HardySolver(pub Half);

/// Bezout solver for `M∞^half ∩ R`.
#[derive(Clone, Copy, Debug)]
pub struct MeromorphicSolver(pub Half);

/// Bezout solver for `AP^half`; truncated certificates are not exact, so they
/// surface as unresolved.
#[derive(Clone, Copy, Debug)]
pub struct AlmostPeriodicSolver(pub Half);

fn to_bezout<R>(outcome: Result<CoronaOutcome<R>>) -> BezoutOutcome<R> {
    match outcome {
        Ok(CoronaOutcome::Certificate(c)) if c.approximation.is_none() => BezoutOutcome::Solved(c.solution),
        Ok(CoronaOutcome::Certificate(c)) => BezoutOutcome::Unresolved(format!(
            "only a truncated {} certificate exists (residual norm ≤ {})",
            c.algebra,
            c.approximation.map(|a| a.norm_bound.to_string()).unwrap_or_default()
        )),
        Ok(CoronaOutcome::Failure(f)) => BezoutOutcome::NoSolution { witness: f.witness, reason: f.reason },
        Ok(CoronaOutcome::Unresolved(s)) => BezoutOutcome::Unresolved(s),
        Err(e) => BezoutOutcome::NoSolution { witness: None, reason: e.to_string() },
    }
}

impl BezoutSolver<RationalFunction> for HardySolver {
    fn solve(&self, h: &[RationalFunction]) -> BezoutOutcome<RationalFunction> {
        to_bezout(corona_solve_hplus(h, self.0))
    }
}

impl BezoutSolver<RationalFunction> for MeromorphicSolver {
    fn solve(&self, h: &[RationalFunction]) -> BezoutOutcome<RationalFunction> {
        to_bezout(corona_solve_mplus(h, self.0))
    }
}

impl BezoutSolver<APPoly> for AlmostPeriodicSolver {
    fn solve(&self, h: &[APPoly]) -> BezoutOutcome<APPoly> {
        to_bezout(corona_solve_ap(h, self.0, 8))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{one_sided_diagnose, Diagnosis, Side};
    use crate::rings::RingMatrix;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn lin(re: i64, im: i64) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::linear(&g(re, im)))
    }

    fn q(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.div(b).unwrap()
    }

    #[test]
    fn hardy_examples() {
        let h = vec![RationalFunction::r(), q(&RationalFunction::one(), &lin(0, -1))];
        let c = corona_solve_hplus(&h, Half::Plus).unwrap();
        assert_eq!(c.certificate().unwrap().solution, vec![RationalFunction::one(), RationalFunction::constant(g(0, 2))]);

        let c = corona_solve_hplus(&[RationalFunction::one()], Half::Plus).unwrap();
        assert_eq!(c.certificate().unwrap().solution, vec![RationalFunction::one()]);

        let h = vec![q(&lin(1, 0), &lin(0, -1)), q(&lin(1, 0), &lin(0, -3))];
        let f = corona_solve_hplus(&h, Half::Plus).unwrap();
        assert_eq!(f.failure().unwrap().witness, Some(Point::Exact(g(1, 0))));

        let bad = vec![q(&RationalFunction::one(), &lin(0, 1))];
        assert!(matches!(corona_solve_hplus(&bad, Half::Plus), Err(Error::MembershipViolation { index: 0, .. })));
        // In H∞⁻ the entry is a member but vanishes at ∞.
        let c = corona_solve_hplus(&bad, Half::Minus).unwrap();
        assert_eq!(c.failure().unwrap().witness, Some(Point::Infinity));
    }

    #[test]
    fn meromorphic_versus_hardy() {
        let a = q(&lin(0, 2), &lin(0, -1));
        let b = &a * &q(&lin(0, 3), &lin(0, -1));
        let h = vec![a, b];
        let hf = corona_solve_hplus(&h, Half::Plus).unwrap();
        assert_eq!(hf.failure().unwrap().witness, Some(Point::Exact(g(0, 2))));
        let m = corona_solve_mplus(&h, Half::Plus).unwrap();
        let cert = m.certificate().unwrap();
        let dec = cert.decomposition.as_ref().unwrap();
        for (hj, tj) in h.iter().zip(&dec.tuple) {
            assert_eq!(&dec.r * tj, *hj);
            assert!(tj.in_hardy(Half::Plus));
        }
        let w = dec.canonical.as_ref().unwrap();
        assert_eq!(w.product(), dec.r);
        assert_eq!(crate::rings::dot(&cert.solution, &h), RationalFunction::one());
    }

    #[test]
    fn meromorphic_trivial_and_infinity() {
        let other = q(&lin(3, 1), &lin(0, 5));
        let c = corona_solve_mplus(&[RationalFunction::one(), other.clone()], Half::Plus).unwrap();
        assert_eq!(c.certificate().unwrap().solution, vec![RationalFunction::one(), RationalFunction::zero()]);
        let h = vec![q(&RationalFunction::one(), &lin(0, -1)), q(&lin(2, 0), &(&lin(0, 1) * &lin(0, -1)))];
        let f = corona_solve_mplus(&h, Half::Plus).unwrap();
        assert_eq!(f.failure().unwrap().witness, Some(Point::Infinity));
        assert!(vanishes_at(&h, &Point::Infinity));
    }

    fn ap(terms: &[(i64, i64, i64, i64)]) -> APPoly {
        APPoly::from_terms(
            terms.iter().map(|&(p, q, n, d)| (BigRational::new(p.into(), q.into()), GaussianRational::from_fracs(n, d, 0, 1))),
        )
    }

    #[test]
    fn almost_periodic_examples() {
        let h = vec![ap(&[(0, 1, 1, 1), (1, 1, 1, 4)]), ap(&[(2, 1, 1, 1)])];
        let c = corona_solve_ap(&h, Half::Plus, 6).unwrap();
        let approx = c.certificate().unwrap().approximation.clone().unwrap();
        assert_eq!(approx.norm_bound, BigRational::new(1.into(), 4096.into()));
        let exact = corona_solve_ap(&[APPoly::one()], Half::Plus, 6).unwrap();
        assert_eq!(exact.certificate().unwrap().solution, vec![APPoly::one()]);
        assert!(exact.certificate().unwrap().approximation.is_none());

        let h = vec![ap(&[(1, 1, 1, 1)]), ap(&[(2, 1, 1, 1)])];
        let f = corona_solve_ap(&h, Half::Plus, 6).unwrap();
        assert_eq!(f.failure().unwrap().common_factor, Some(APPoly::e_int(1, 1)));

        let bad = vec![ap(&[(1, 1, 1, 1), (-1, 1, 1, 1)])];
        assert!(matches!(corona_solve_ap(&bad, Half::Plus, 6), Err(Error::MembershipViolation { .. })));

        let balanced = vec![ap(&[(0, 1, 1, 1), (1, 1, 1, 1)])];
        assert!(matches!(corona_solve_ap(&balanced, Half::Plus, 6).unwrap(), CoronaOutcome::Unresolved(_)));
        let minus = vec![ap(&[(0, 1, 2, 1), (-1, 2, 1, 1)])];
        assert!(corona_solve_ap(&minus, Half::Minus, 4).unwrap().certificate().is_some());
    }

    #[test]
    fn diagnose_agrees_with_corona() {
        let x = q(&RationalFunction::one(), &lin(0, -1));
        let phi = RingMatrix::from_rows(vec![vec![RationalFunction::r()], vec![x.clone()]]).unwrap();
        match one_sided_diagnose(&phi, Side::Left, &HardySolver(Half::Plus)).unwrap() {
            Diagnosis::Certificate { inverse, .. } => assert!(inverse.mul(&phi).unwrap().is_identity()),
            other => panic!("{other:?}"),
        }
        let phi = RingMatrix::from_rows(vec![vec![RationalFunction::r()], vec![&RationalFunction::r() * &x]]).unwrap();
        assert!(matches!(
            one_sided_diagnose(&phi, Side::Left, &HardySolver(Half::Plus)).unwrap(),
            Diagnosis::NotInvertible { .. }
        ));
    }

    /// `(ξ − a)/(ξ − b)` with `b` in the opposite half-plane.
    fn arb_entry(half: Half) -> impl Strategy<Value = RationalFunction> {
        let s = -half.sign() as i64;
        prop::collection::vec(((-3i64..4, -3i64..4), (-3i64..4, 1i64..4)), 0..3).prop_map(move |fs| {
            fs.into_iter().fold(RationalFunction::one(), |acc, ((ar, ai), (br, bi))| {
                &acc * &q(&lin(ar, ai), &lin(br, s * bi))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn hardy_certificates_and_witnesses(
            h in prop::collection::vec(arb_entry(Half::Plus), 1..4),
            plant in prop::option::of(-3i64..4),
        ) {
            let h: Vec<RationalFunction> = match plant {
                Some(t) => h.iter().map(|f| f * &q(&lin(t, 0), &lin(0, -2))).collect(),
                None => h,
            };
            match corona_solve_hplus(&h, Half::Plus).unwrap() {
                CoronaOutcome::Certificate(c) => {
                    prop_assert!(plant.is_none());
                    prop_assert!(crate::rings::dot(&c.solution, &h).is_one());
                    prop_assert!(c.solution.iter().all(|g| g.in_hardy(Half::Plus)));
                }
                CoronaOutcome::Failure(f) => {
                    if plant.is_some() {
                        let w = f.witness.clone().unwrap();
                        prop_assert!(w.is_exact() && w.value().is_some_and(|z| z.is_real()));
                    }
                    if let Some(p) = f.witness.filter(|p| p.is_exact()) {
                        prop_assert!(vanishes_at(&h, &p));
                    }
                }
                CoronaOutcome::Unresolved(s) => prop_assert!(false, "{}", s),
            }
        }

        #[test]
        fn meromorphic_decomposition_reconstructs(
            h in prop::collection::vec(arb_entry(Half::Minus), 1..4),
            half in prop::sample::select(vec![Half::Plus, Half::Minus]),
        ) {
            if let CoronaOutcome::Certificate(c) = corona_solve_mplus(&h, half).unwrap() {
                let dec = c.decomposition.unwrap();
                prop_assert!(dec.r.is_invertible_on_line());
                for (hj, tj) in h.iter().zip(&dec.tuple) {
                    prop_assert_eq!(&(&dec.r * tj), hj);
                }
                prop_assert!(crate::rings::dot(&c.solution, &h).is_one());
            }
        }
    }
}
