//! Matrix Wiener–Hopf factorization `G = G₋ D G₊` of rational symbols built
//! from a one-sided invertible submatrix (row or column route) or from a
//! solution pair of the Riemann–Hilbert problem `GΦ⁺ = Φ⁻`.

use crate::error::{Error, Result};
use crate::linalg::complete;
use crate::rings::{factor_numeric, GaussianRational, Half, Point, Polynomial, RationalFunction, Ring, RingMatrix};
use crate::scalar_wh::{riesz_project, winding_exact, ScalarWH};

pub type RMatrix = RingMatrix<RationalFunction>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Row,
    Column,
    RiemannHilbert,
    Given,
}

impl Route {
    pub fn tag(self) -> &'static str {
        match self {
            Route::Row => "row",
            Route::Column => "col",
            Route::RiemannHilbert => "rh",
            Route::Given => "given",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum TraceValue {
    Text(String),
    Matrix(RMatrix),
}

/// Intermediate objects of a construction, in the order they were formed.
#[derive(Clone, Debug, PartialEq)]
pub struct Trace {
    pub route: Route,
    pub entries: Vec<(String, TraceValue)>,
}

impl Trace {
    pub fn new(route: Route) -> Self {
        Trace { route, entries: Vec::new() }
    }

    fn text(&mut self, label: &str, s: impl Into<String>) {
        self.entries.push((label.into(), TraceValue::Text(s.into())));
    }

    fn matrix(&mut self, label: &str, m: &RMatrix) {
        self.entries.push((label.into(), TraceValue::Matrix(m.clone())));
    }

    pub fn get_matrix(&self, label: &str) -> Option<&RMatrix> {
        self.entries.iter().find_map(|(l, v)| match v {
            TraceValue::Matrix(m) if l == label => Some(m),
            _ => None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WHFactorization {
    pub g_minus: RMatrix,
    pub partial_indices: Vec<i64>,
    pub g_plus: RMatrix,
    /// All factors and their inverses are bounded, so the factorization is a
    /// WH p-factorization for every `p ∈ (1, ∞)`.
    pub bounded: bool,
    pub trace: Trace,
}

impl WHFactorization {
    pub fn d(&self) -> RMatrix {
        RingMatrix::diagonal(self.partial_indices.iter().map(|&k| RationalFunction::r_pow(k)).collect())
    }

    pub fn product(&self) -> Result<RMatrix> {
        self.g_minus.mul(&self.d())?.mul(&self.g_plus)
    }

    pub fn is_canonical(&self) -> bool {
        self.partial_indices.iter().all(|&k| k == 0)
    }

    /// Trivial factorization `I · I · I`.
    pub fn identity(n: usize) -> Self {
        WHFactorization {
            g_minus: RingMatrix::identity(n),
            partial_indices: vec![0; n],
            g_plus: RingMatrix::identity(n),
            bounded: true,
            trace: Trace::new(Route::Given),
        }
    }
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::HypothesisViolation(msg.into())
}

fn check_square(g: &RMatrix) -> Result<usize> {
    if !g.is_square() || g.rows() < 2 {
        return Err(Error::ShapeMismatch(format!("need an n×n symbol with n ≥ 2, got {}×{}", g.rows(), g.cols())));
    }
    Ok(g.rows())
}

fn check_hardy(m: &RMatrix, half: Half, name: &str) -> Result<()> {
    match m.entries().iter().position(|f| !f.in_hardy(half)) {
        Some(p) => Err(hypothesis(format!(
            "{name} entry ({}, {}) is not in H∞{} ∩ R",
            p / m.cols(),
            p % m.cols(),
            half.symbol()
        ))),
        None => Ok(()),
    }
}

fn check_scalar(g: &RMatrix, scalar: &ScalarWH) -> Result<RationalFunction> {
    if !scalar.is_exact() {
        return Err(hypothesis("scalar factorization of det G has inexact roots"));
    }
    scalar.certify()?;
    let det = g.det()?;
    if scalar.product() != det {
        return Err(hypothesis("scalar factorization does not reproduce det G"));
    }
    Ok(det)
}

/// `perm` listing every index except `skip`, followed by `skip`.
fn move_to_last(n: usize, skip: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != skip).chain(std::iter::once(skip)).collect()
}

/// Sign of moving one index of `0..n` to the end.
fn move_sign(n: usize, skip: usize) -> GaussianRational {
    GaussianRational::from_ints(if (n - 1 - skip).is_multiple_of(2) { 1 } else { -1 }, 0)
}

fn inverse_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (k, &p) in perm.iter().enumerate() {
        inv[p] = k;
    }
    inv
}

fn diag_last(n: usize, last: RationalFunction) -> RMatrix {
    let mut m = RingMatrix::identity(n);
    m.set(n - 1, n - 1, last);
    m
}

fn sign_n(n: usize) -> RationalFunction {
    if (n - 1).is_multiple_of(2) {
        RationalFunction::one()
    } else {
        -RationalFunction::one()
    }
}

fn indices(n: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[n - 1] = k;
    v
}

/// Row route: `Ψ = G` without `omitted_row` is right invertible over
/// `H∞⁺ ∩ R` with inverse `phi_plus`, and `k ≤ 0`.
///
/// With `Ψ_e` the completion of `(Φ⁺, Ψ)`, `G = G̃ Ψ_e` where
/// `G̃ = [[I, 0], [ĝ_n Φ⁺, (−1)^{n−1} det G]]`, and the lower triangular `G̃`
/// splits through `P̃±(ĝ_n Φ⁺ γ₋⁻¹)`.
pub fn factor_via_row(g: &RMatrix, omitted_row: usize, phi_plus: &RMatrix, scalar: &ScalarWH) -> Result<WHFactorization> {
    let n = check_square(g)?;
    if omitted_row >= n {
        return Err(Error::ShapeMismatch(format!("omitted row {omitted_row} out of range")));
    }
    if phi_plus.rows() != n || phi_plus.cols() != n - 1 {
        return Err(Error::ShapeMismatch("Φ⁺ must be n×(n−1)".into()));
    }
    let det = check_scalar(g, scalar)?;
    if scalar.k > 0 {
        return Err(hypothesis(format!("row route needs k ≤ 0, scalar factorization has k = {}", scalar.k)));
    }
    let mut trace = Trace::new(Route::Row);
    let perm = move_to_last(n, omitted_row);
    let gp = g.permute_rows(&perm);
    if omitted_row != n - 1 {
        trace.text("permutation", format!("rows reordered as {perm:?} so the omitted row is last"));
    }
    let psi = gp.remove_row(n - 1);
    check_hardy(&psi, Half::Plus, "Ψ")?;
    check_hardy(phi_plus, Half::Plus, "Φ⁺")?;
    if !psi.mul(phi_plus)?.is_identity() {
        return Err(hypothesis("Ψ Φ⁺ ≠ I"));
    }
    let c = complete(phi_plus, &psi)?;
    trace.matrix("Psi_e", &c.psi_e);
    let gn = RingMatrix::row_vector(gp.row(n - 1));
    let q = gn.mul(phi_plus)?;
    trace.matrix("G_n Phi+", &q);

    // det of the permuted symbol carries the permutation sign; it goes into γ₋.
    let sgn = move_sign(n, omitted_row);
    let gamma_minus = scalar.gamma_minus.expand().scale(&sgn);
    let gm_inv = gamma_minus.inv().expect("γ₋ is nonzero");
    let r_neg_k = RationalFunction::r_pow(-scalar.k);
    let mut lower_minus = RingMatrix::identity(n);
    let mut lower_plus = RingMatrix::identity(n);
    for j in 0..n - 1 {
        let split = riesz_project(&(q.get(0, j) * &gm_inv))?;
        lower_minus.set(n - 1, j, split.minus_part);
        lower_plus.set(n - 1, j, &split.plus_part * &r_neg_k);
    }
    let g_minus = diag_last(n, gamma_minus).mul(&lower_minus)?;
    let sigma = sign_n(n);
    let g_plus = lower_plus
        .mul(&diag_last(n, &sigma * &scalar.gamma_plus.expand()))?
        .mul(&c.psi_e)?;
    let g_tilde = {
        let mut t = RingMatrix::identity(n);
        for j in 0..n - 1 {
            t.set(n - 1, j, q.get(0, j).clone());
        }
        t.set(n - 1, n - 1, &sigma * &det.scale(&sgn));
        t
    };
    trace.matrix("G_tilde", &g_tilde);
    let g_minus = g_minus.permute_rows(&inverse_perm(&perm));
    finish(g, g_minus, indices(n, scalar.k), g_plus, trace)
}

/// Column route: `Φ = G` without `omitted_col` is left invertible over
/// `H∞⁻ ∩ R` with inverse `psi_minus`, and `k ≥ 0`.
pub fn factor_via_column(
    g: &RMatrix,
    omitted_col: usize,
    psi_minus: &RMatrix,
    scalar: &ScalarWH,
) -> Result<WHFactorization> {
    let n = check_square(g)?;
    if omitted_col >= n {
        return Err(Error::ShapeMismatch(format!("omitted column {omitted_col} out of range")));
    }
    if psi_minus.rows() != n - 1 || psi_minus.cols() != n {
        return Err(Error::ShapeMismatch("Ψ₋ must be (n−1)×n".into()));
    }
    check_scalar(g, scalar)?;
    if scalar.k < 0 {
        return Err(hypothesis(format!("column route needs k ≥ 0, scalar factorization has k = {}", scalar.k)));
    }
    let mut trace = Trace::new(Route::Column);
    let perm = move_to_last(n, omitted_col);
    let gp = g.permute_cols(&perm);
    if omitted_col != n - 1 {
        trace.text("permutation", format!("columns reordered as {perm:?} so the omitted column is last"));
    }
    let phi = gp.remove_col(n - 1);
    check_hardy(&phi, Half::Minus, "Φ")?;
    check_hardy(psi_minus, Half::Minus, "Ψ₋")?;
    if !psi_minus.mul(&phi)?.is_identity() {
        return Err(hypothesis("Ψ₋ Φ ≠ I"));
    }
    let c = complete(&phi, psi_minus)?;
    trace.matrix("Phi_e", &c.phi_e);
    let p = psi_minus.mul(&RingMatrix::column(gp.col(n - 1)))?;
    trace.matrix("Psi- G_n", &p);

    let gp_inv = scalar.gamma_plus.expand().inv().expect("γ₊ is nonzero");
    let gamma_plus = scalar.gamma_plus.expand();
    let r_neg_k = RationalFunction::r_pow(-scalar.k);
    let sgn = move_sign(n, omitted_col);
    let mut upper_minus = diag_last(n, &sign_n(n) * &scalar.gamma_minus.expand().scale(&sgn));
    let mut g_plus = diag_last(n, gamma_plus.clone());
    for i in 0..n - 1 {
        let split = riesz_project(&(&gp_inv * p.get(i, 0)))?;
        upper_minus.set(i, n - 1, &r_neg_k * &split.minus_part);
        g_plus.set(i, n - 1, &gamma_plus * &split.plus_part);
    }
    let g_minus = c.phi_e.mul(&upper_minus)?;
    let g_plus = g_plus.permute_cols(&inverse_perm(&perm));
    finish(g, g_minus, indices(n, scalar.k), g_plus, trace)
}

/// Riemann–Hilbert route: `GΦ⁺ = Φ⁻` with `Ψ±Φ± = I` over `H∞± ∩ R`, and
/// `k ≥ 0`.
///
/// `G₀ = Ψ_e⁻ G Φ_e⁺ = [[I, Q], [0, det G]]` with `Q = Ψ⁻ G N⁺`. The
/// off-diagonal block is split as `Q γ₊⁻¹ = α₊ + r^k α₋`, which reduces to
/// `α₊ = P̃⁺(Q)`, `α₋ = r^{−k} P̃⁻(Q)` only when `γ₊ = 1`.
pub fn factor_via_rh(
    g: &RMatrix,
    phi_plus: &RMatrix,
    phi_minus: &RMatrix,
    psi_plus: &RMatrix,
    psi_minus: &RMatrix,
    scalar: &ScalarWH,
) -> Result<WHFactorization> {
    let n = check_square(g)?;
    for (m, rows, cols, name) in [
        (phi_plus, n, n - 1, "Φ⁺"),
        (phi_minus, n, n - 1, "Φ⁻"),
        (psi_plus, n - 1, n, "Ψ⁺"),
        (psi_minus, n - 1, n, "Ψ⁻"),
    ] {
        if m.rows() != rows || m.cols() != cols {
            return Err(Error::ShapeMismatch(format!("{name} must be {rows}×{cols}")));
        }
    }
    if g.mul(phi_plus)? != *phi_minus {
        return Err(Error::RhResidual);
    }
    let det = check_scalar(g, scalar)?;
    if scalar.k < 0 {
        return Err(hypothesis(format!("RH route needs k ≥ 0, scalar factorization has k = {}", scalar.k)));
    }
    check_hardy(phi_plus, Half::Plus, "Φ⁺")?;
    check_hardy(psi_plus, Half::Plus, "Ψ⁺")?;
    check_hardy(phi_minus, Half::Minus, "Φ⁻")?;
    check_hardy(psi_minus, Half::Minus, "Ψ⁻")?;
    if !psi_plus.mul(phi_plus)?.is_identity() || !psi_minus.mul(phi_minus)?.is_identity() {
        return Err(hypothesis("Ψ±Φ± ≠ I"));
    }
    let mut trace = Trace::new(Route::RiemannHilbert);
    let cp = complete(phi_plus, psi_plus)?;
    let cm = complete(phi_minus, psi_minus)?;
    let g0 = cm.psi_e.mul(g)?.mul(&cp.phi_e)?;
    trace.matrix("G0", &g0);
    let expected_g0 = {
        let mut t = RingMatrix::identity(n);
        for i in 0..n - 1 {
            t.set(i, n - 1, g0.get(i, n - 1).clone());
        }
        t.set(n - 1, n - 1, det);
        t
    };
    if g0 != expected_g0 {
        return Err(Error::CertificateInvalid("G₀ is not of the form [[I, Q], [0, det G]]".into()));
    }
    trace.text("G0 form", "[[I, Q], [0, det G]] confirmed; det G0 = det G");
    let q = psi_minus.mul(g)?.mul(&RingMatrix::column(cp.n_col()))?;
    trace.matrix("Q", &q);
    trace.text(
        "alpha",
        "α₊ = P̃⁺(Qγ₊⁻¹), α₋ = r^{−k} P̃⁻(Qγ₊⁻¹); the unweighted forms P̃±(Q) reconstruct G only when γ₊ = 1",
    );
    let gp_inv = scalar.gamma_plus.expand().inv().expect("γ₊ is nonzero");
    let r_neg_k = RationalFunction::r_pow(-scalar.k);
    let mut upper_minus = RingMatrix::identity(n);
    let mut upper_plus = RingMatrix::identity(n);
    for i in 0..n - 1 {
        let split = riesz_project(&(q.get(i, 0) * &gp_inv))?;
        upper_plus.set(i, n - 1, split.plus_part);
        upper_minus.set(i, n - 1, &r_neg_k * &split.minus_part);
    }
    trace.matrix("alpha+", &RingMatrix::column(upper_plus.col(n - 1)[..n - 1].to_vec()));
    trace.matrix("alpha-", &RingMatrix::column(upper_minus.col(n - 1)[..n - 1].to_vec()));
    let g_minus = cm.phi_e.mul(&diag_last(n, scalar.gamma_minus.expand()))?.mul(&upper_minus)?;
    let g_plus = upper_plus.mul(&diag_last(n, scalar.gamma_plus.expand()))?.mul(&cp.psi_e)?;
    finish(g, g_minus, indices(n, scalar.k), g_plus, trace)
}

fn finish(g: &RMatrix, g_minus: RMatrix, partial_indices: Vec<i64>, g_plus: RMatrix, trace: Trace) -> Result<WHFactorization> {
    let f = WHFactorization { g_minus, partial_indices, g_plus, bounded: true, trace };
    if f.product()? != *g {
        return Err(Error::CertificateInvalid(format!("{} route does not reconstruct G", f.trace.route.tag())));
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn membership_detail(m: &RMatrix, half: Half) -> (bool, String) {
    match m.entries().iter().position(|f| !f.in_hardy(half)) {
        None => (true, format!("every entry is in H∞{} ∩ R", half.symbol())),
        Some(p) => (false, format!("entry ({}, {}) = {} is not in H∞{}", p / m.cols(), p % m.cols(), m.entries()[p], half.symbol())),
    }
}

/// Rechecks a factorization: the product identity, the shape of `D`, pole
/// locations of `G±` and of their exact inverses, and invertibility of the
/// determinants up to and including `∞`.
pub fn verify_factorization(g: &RMatrix, f: &WHFactorization) -> VerificationReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(Check { name: name.into(), passed, detail });
    };
    let n = g.rows();
    let shapes_ok = g.is_square()
        && f.partial_indices.len() == n
        && [&f.g_minus, &f.g_plus].iter().all(|m| m.rows() == n && m.cols() == n);
    push("shape", shapes_ok, format!("G is {}×{}, {} partial indices", g.rows(), g.cols(), f.partial_indices.len()));
    if !shapes_ok {
        return VerificationReport { checks };
    }
    match f.product() {
        Ok(p) => {
            let ok = p == *g;
            push("product", ok, if ok { "G₋ D G₊ − G = exact-zero".into() } else { "G₋ D G₊ ≠ G".into() });
        }
        Err(e) => push("product", false, e.to_string()),
    }
    for (name, m, half) in [("G+", &f.g_plus, Half::Plus), ("G-", &f.g_minus, Half::Minus)] {
        let (ok, detail) = membership_detail(m, half);
        push(&format!("{name} membership"), ok, detail);
        let det = m.det().unwrap_or_default();
        let unit = det.is_hardy_unit(half);
        push(
            &format!("det {name}"),
            unit,
            if unit {
                format!("det = {det} has no zeros or poles in the closed {} half-plane, nonzero at ∞", half.symbol())
            } else {
                format!("det = {det} is not invertible in H∞{}", half.symbol())
            },
        );
        match m.inverse() {
            Ok(Some(inv)) => {
                let (ok, detail) = membership_detail(&inv, half);
                push(&format!("{name} inverse membership"), ok, detail);
            }
            _ => push(&format!("{name} inverse membership"), false, "not invertible".into()),
        }
    }
    let sum: i64 = f.partial_indices.iter().sum();
    match g.det().ok().filter(|d| !d.is_zero()).map(|d| factor_numeric(&d, 1e-9)) {
        Some(Ok(nf)) => match winding_exact(&nf.factored) {
            Ok(w) => push("index sum", w == sum, format!("Σk_j = {sum}, winding of det G = {w}")),
            Err(e) => push("index sum", false, e.to_string()),
        },
        Some(Err(e)) => push("index sum", false, e.to_string()),
        None => push("index sum", false, "det G is zero".into()),
    }
    VerificationReport { checks }
}

/// Plain Riesz projection onto `H_p⁺`: the principal parts of `y` at its
/// poles in `C⁻`. `y` must vanish at `∞`.
pub fn project_plus(y: &RationalFunction) -> Result<RationalFunction> {
    if y.is_zero() {
        return Ok(RationalFunction::zero());
    }
    if y.degree_balance().is_some_and(|b| b >= 0) {
        return Err(hypothesis(format!("{y} does not vanish at ∞, so it is not in L_p")));
    }
    let den = factor_numeric(&RationalFunction::from_poly(y.den().clone()), 1e-9)?.factored;
    let mut upper = Polynomial::one();
    let mut lower = Polynomial::one();
    for f in den.factors() {
        if !f.exact {
            return Err(Error::InexactRoot(Box::new(f.point())));
        }
        let lin = Polynomial::linear(&f.root).pow(f.mult as u32);
        match f.half {
            crate::rings::HalfPlane::Real => return Err(Error::RealPole(Box::new(f.point()))),
            crate::rings::HalfPlane::Upper => upper = &upper * &lin,
            crate::rings::HalfPlane::Lower => lower = &lower * &lin,
        }
    }
    let (_, s, _) = Polynomial::xgcd(&upper, &lower);
    // y = num·t/upper + num·s/lower; the C⁻ part is the proper part of the second.
    Ok(RationalFunction::frac((y.num() * &s).rem(&lower), lower))
}

fn real_pole(f: &RationalFunction) -> Point {
    factor_numeric(&RationalFunction::from_poly(f.den().clone()), 1e-9)
        .ok()
        .and_then(|nf| nf.factored.real_roots().next().map(|r| r.point()))
        .unwrap_or(Point::Infinity)
}

/// `T_G x = P⁺(G x)`.
pub fn toeplitz_apply(g: &RMatrix, x: &[RationalFunction]) -> Result<Vec<RationalFunction>> {
    let gx = g.mul(&RingMatrix::column(x.to_vec()))?;
    gx.col(0).iter().map(project_plus).collect()
}

/// `T_G⁻¹ φ = G₊⁻¹ P⁺ G₋⁻¹ φ` for a canonical factorization.
pub fn apply_inverse(f: &WHFactorization, phi: &[RationalFunction]) -> Result<Vec<RationalFunction>> {
    if !f.is_canonical() {
        return Err(Error::IndexNonzero);
    }
    let n = f.g_minus.rows();
    if phi.len() != n {
        return Err(Error::ShapeMismatch(format!("vector has length {}, symbol is {n}×{n}", phi.len())));
    }
    for p in phi {
        let c = p.pole_count();
        if c.real > 0 {
            return Err(Error::RealPole(Box::new(real_pole(p))));
        }
        if c.upper > 0 || p.degree_balance().is_some_and(|b| b >= 0) {
            return Err(hypothesis(format!("{p} is not in H_p⁺")));
        }
    }
    let gm_inv = f.g_minus.inverse()?.ok_or_else(|| hypothesis("G₋ is singular"))?;
    let gp_inv = f.g_plus.inverse()?.ok_or_else(|| hypothesis("G₊ is singular"))?;
    let y = gm_inv.mul(&RingMatrix::column(phi.to_vec()))?;
    let z: Vec<RationalFunction> = y.col(0).iter().map(project_plus).collect::<Result<_>>()?;
    let x = gp_inv.mul(&RingMatrix::column(z))?.col(0);
    if let Some(bad) = x.iter().find(|v| !v.is_zero() && !v.in_hardy(Half::Plus)) {
        return Err(Error::CertificateInvalid(format!("T_G⁻¹φ has an entry {bad} with poles in the closed upper half-plane")));
    }
    Ok(x)
}
