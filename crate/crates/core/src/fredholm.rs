//! Toeplitz operator diagnostics: kernel and cokernel dimensions from partial
//! indices, and near/strict Fredholm equivalence with the scalar operator
//! `T_{det G}` under checked structural certificates.

use crate::ap_factor::{mean_motion, MeanMotionMethod};
use crate::corona::{corona_solve_mplus, CoronaOutcome, HardySolver};
use crate::error::{Error, Result};
use crate::linalg::{one_sided_diagnose, Diagnosis, Side};
use crate::matrix_wh::RMatrix;
use crate::rings::{GaussianRational, Half, MixedElem, RationalFunction, Ring, RingMatrix};
use crate::scalar_wh::{wh_factor_rational, winding_numeric};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Nearly,
    Strictly,
    NoneEstablished,
}

impl Equivalence {
    pub fn tag(self) -> &'static str {
        match self {
            Equivalence::Nearly => "nearly",
            Equivalence::Strictly => "strictly",
            Equivalence::NoneEstablished => "none-established",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coburn {
    KerZero,
    CokerZero,
    Both,
    Unknown,
}

impl Coburn {
    pub fn tag(self) -> &'static str {
        match self {
            Coburn::KerZero => "ker_zero",
            Coburn::CokerZero => "coker_zero",
            Coburn::Both => "both",
            Coburn::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FredholmReport {
    pub fredholm: Verdict,
    pub partial_indices: Option<Vec<i64>>,
    pub dim_ker: Option<u64>,
    pub dim_coker: Option<u64>,
    /// `dim ker − dim coker`.
    pub index: Option<i64>,
    pub equivalence: Equivalence,
    /// Which structural result the verdict rests on.
    pub justification: String,
    pub coburn: Coburn,
    /// The conclusions hold for every `p ∈ (1, ∞)`.
    pub uniform_in_p: bool,
    /// `det G` when it could not be resolved by the scalar machinery.
    pub det_mixed: Option<MixedElem>,
    pub notes: Vec<String>,
}

impl FredholmReport {
    pub(crate) fn unknown(equivalence: Equivalence, justification: impl Into<String>) -> Self {
        FredholmReport {
            fredholm: Verdict::Unknown,
            partial_indices: None,
            dim_ker: None,
            dim_coker: None,
            index: None,
            equivalence,
            justification: justification.into(),
            coburn: Coburn::Unknown,
            uniform_in_p: false,
            det_mixed: None,
            notes: Vec::new(),
        }
    }

    pub(crate) fn invertible(justification: impl Into<String>) -> Self {
        FredholmReport {
            fredholm: Verdict::Yes,
            dim_ker: Some(0),
            dim_coker: Some(0),
            index: Some(0),
            coburn: Coburn::Both,
            uniform_in_p: true,
            ..Self::unknown(Equivalence::NoneEstablished, justification)
        }
    }

    /// Fredholm with trivial kernel and cokernel.
    pub fn is_invertible(&self) -> bool {
        self.fredholm == Verdict::Yes && self.dim_ker == Some(0) && self.dim_coker == Some(0)
    }
}

fn coburn_of(dim_ker: u64, dim_coker: u64) -> Coburn {
    match (dim_ker, dim_coker) {
        (0, 0) => Coburn::Both,
        (0, _) => Coburn::KerZero,
        (_, 0) => Coburn::CokerZero,
        _ => Coburn::Unknown,
    }
}

/// Report for a symbol with a bounded factorization and the given partial
/// indices: `dim ker = Σ_{k≤0} |k|`, `dim coker = Σ_{k≥0} k`.
pub fn report_from_indices(indices: &[i64]) -> FredholmReport {
    let dim_ker: u64 = indices.iter().filter(|&&k| k < 0).map(|k| k.unsigned_abs()).sum();
    let dim_coker: u64 = indices.iter().filter(|&&k| k > 0).map(|&k| k as u64).sum();
    FredholmReport {
        fredholm: Verdict::Yes,
        partial_indices: Some(indices.to_vec()),
        dim_ker: Some(dim_ker),
        dim_coker: Some(dim_coker),
        index: Some(-indices.iter().sum::<i64>()),
        coburn: coburn_of(dim_ker, dim_coker),
        uniform_in_p: true,
        ..FredholmReport::unknown(Equivalence::NoneEstablished, "factorization with bounded factors")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Certificates over `M∞± ∩ R` (bounded rational functions).
    Meromorphic,
    /// Certificates over `H∞± ∩ R`.
    Hardy,
}

/// Structural certificate supplied to [`classify`].
#[derive(Clone, Debug, PartialEq)]
pub enum Structure {
    /// `G` without `omitted_row` has the right inverse `right_inverse` over
    /// the `+` algebra of `level`.
    RowSubmatrix { omitted_row: usize, right_inverse: RMatrix, level: Level },
    /// `G` without `omitted_col` has the left inverse `left_inverse` over the
    /// `−` algebra of `level`.
    ColumnSubmatrix { omitted_col: usize, left_inverse: RMatrix, level: Level },
    /// `GΦ⁺ = Φ⁻` with `Ψ±Φ± = I` over the `±` algebras of `level`.
    RhPair { phi_plus: RMatrix, phi_minus: RMatrix, psi_plus: RMatrix, psi_minus: RMatrix, level: Level },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::CertificateInvalid(msg.into())
}

fn check_level(m: &RMatrix, half: Half, level: Level, name: &str) -> Result<()> {
    let ok = |f: &RationalFunction| match level {
        Level::Hardy => f.in_hardy(half),
        Level::Meromorphic => f.is_bounded_on_line(),
    };
    match m.entries().iter().position(|f| !ok(f)) {
        Some(p) => {
            let algebra = match level {
                Level::Hardy => format!("H∞{}", half.symbol()),
                Level::Meromorphic => format!("M∞{}", half.symbol()),
            };
            Err(invalid(format!("{name} entry ({}, {}) is not in {algebra} ∩ R", p / m.cols(), p % m.cols())))
        }
        None => Ok(()),
    }
}

fn check_identity(m: RMatrix, what: &str) -> Result<()> {
    if m.is_identity() {
        Ok(())
    } else {
        Err(invalid(format!("{what} ≠ I")))
    }
}

fn check_shape(m: &RMatrix, rows: usize, cols: usize, name: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::ShapeMismatch(format!("{name} must be {rows}×{cols}, got {}×{}", m.rows(), m.cols())));
    }
    Ok(())
}

/// Fredholm classification of `T_G` from a verified structural certificate:
/// near equivalence with `T_{det G}` at the meromorphic level, strict
/// equivalence (dimensions copied from the scalar report) at the Hardy level.
pub fn classify(g: &RMatrix, structure: &Structure) -> Result<FredholmReport> {
    if !g.is_square() || g.rows() < 2 {
        return Err(Error::ShapeMismatch(format!("need an n×n symbol with n ≥ 2, got {}×{}", g.rows(), g.cols())));
    }
    let n = g.rows();
    let (level, justification) = match structure {
        Structure::RowSubmatrix { omitted_row, right_inverse, level } => {
            if *omitted_row >= n {
                return Err(Error::ShapeMismatch(format!("omitted row {omitted_row} out of range")));
            }
            check_shape(right_inverse, n, n - 1, "right inverse")?;
            let psi = g.remove_row(*omitted_row);
            check_level(&psi, Half::Plus, *level, "Ψ")?;
            check_level(right_inverse, Half::Plus, *level, "Φ⁺")?;
            check_identity(psi.mul(right_inverse)?, "Ψ Φ⁺")?;
            (*level, "row submatrix right invertible")
        }
        Structure::ColumnSubmatrix { omitted_col, left_inverse, level } => {
            if *omitted_col >= n {
                return Err(Error::ShapeMismatch(format!("omitted column {omitted_col} out of range")));
            }
            check_shape(left_inverse, n - 1, n, "left inverse")?;
            let phi = g.remove_col(*omitted_col);
            check_level(&phi, Half::Minus, *level, "Φ")?;
            check_level(left_inverse, Half::Minus, *level, "Ψ₋")?;
            check_identity(left_inverse.mul(&phi)?, "Ψ₋ Φ")?;
            (*level, "column submatrix left invertible")
        }
        Structure::RhPair { phi_plus, phi_minus, psi_plus, psi_minus, level } => {
            check_shape(phi_plus, n, n - 1, "Φ⁺")?;
            check_shape(phi_minus, n, n - 1, "Φ⁻")?;
            check_shape(psi_plus, n - 1, n, "Ψ⁺")?;
            check_shape(psi_minus, n - 1, n, "Ψ⁻")?;
            if g.mul(phi_plus)? != *phi_minus {
                return Err(invalid("G Φ⁺ ≠ Φ⁻"));
            }
            check_level(phi_plus, Half::Plus, *level, "Φ⁺")?;
            check_level(psi_plus, Half::Plus, *level, "Ψ⁺")?;
            check_level(phi_minus, Half::Minus, *level, "Φ⁻")?;
            check_level(psi_minus, Half::Minus, *level, "Ψ⁻")?;
            check_identity(psi_plus.mul(phi_plus)?, "Ψ⁺ Φ⁺")?;
            check_identity(psi_minus.mul(phi_minus)?, "Ψ⁻ Φ⁻")?;
            (*level, "Riemann–Hilbert solution pair")
        }
    };
    if let Some((i, f)) = g.entries().iter().enumerate().find(|(_, f)| !f.is_bounded_on_line()) {
        return Err(Error::HypothesisViolation(format!(
            "entry ({}, {}) = {f} is unbounded on the line",
            i / n,
            i % n
        )));
    }
    let det = g.det()?;
    let (equivalence, level_tag) = match level {
        Level::Meromorphic => (Equivalence::Nearly, "M∞"),
        Level::Hardy => (Equivalence::Strictly, "H∞"),
    };
    let justification = format!("{justification} over {level_tag} ∩ R");
    if det.is_zero() || !det.is_invertible_on_line() {
        return Ok(FredholmReport {
            fredholm: Verdict::No,
            notes: vec![format!("det G = {det} vanishes on the extended line, so T_det G is not Fredholm")],
            ..FredholmReport::unknown(equivalence, justification)
        });
    }
    let k = wh_factor_rational(&det, 1e-9)?.k;
    let mut report = match equivalence {
        Equivalence::Strictly => {
            let scalar = report_from_indices(&[k]);
            FredholmReport {
                partial_indices: None,
                equivalence,
                justification,
                uniform_in_p: true,
                ..scalar
            }
        }
        _ => FredholmReport { fredholm: Verdict::Yes, ..FredholmReport::unknown(equivalence, justification) },
    };
    report.notes.push(format!("det G = {det} has index k = {k}"));
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialMode {
    /// `G G* = I` on the line.
    Unitary,
    /// `G Gᵀ = I`.
    Orthogonal,
}

impl SpecialMode {
    pub fn tag(self) -> &'static str {
        match self {
            SpecialMode::Unitary => "unitary",
            SpecialMode::Orthogonal => "orthogonal",
        }
    }

    /// Half-plane whose corona condition the last row must satisfy.
    pub fn last_row_half(self) -> Half {
        match self {
            SpecialMode::Unitary => Half::Minus,
            SpecialMode::Orthogonal => Half::Plus,
        }
    }
}

fn hypothesis(msg: impl Into<String>) -> Error {
    Error::HypothesisViolation(msg.into())
}

/// `G(ξ)*` for real `ξ`: transpose with coefficient conjugation.
fn adjoint_on_line(g: &RMatrix) -> RMatrix {
    g.transpose().map(|f| f.conj())
}

/// Rational symbol that is unitary on the line with constant determinant.
pub fn special_unitary(g: &RMatrix, det_constant: Option<&GaussianRational>) -> Result<FredholmReport> {
    special_rational(g, SpecialMode::Unitary, det_constant)
}

/// Rational symbol with `G Gᵀ = I` and constant determinant.
pub fn special_orthogonal(g: &RMatrix) -> Result<FredholmReport> {
    special_rational(g, SpecialMode::Orthogonal, None)
}

fn special_rational(g: &RMatrix, mode: SpecialMode, det_constant: Option<&GaussianRational>) -> Result<FredholmReport> {
    if !g.is_square() || g.rows() < 2 {
        return Err(Error::ShapeMismatch(format!("need an n×n symbol with n ≥ 2, got {}×{}", g.rows(), g.cols())));
    }
    let n = g.rows();
    let psi = g.remove_row(n - 1);
    if let Some(p) = psi.entries().iter().position(|f| !f.is_bounded_on_line()) {
        return Err(hypothesis(format!("entry ({}, {}) of the first n−1 rows is not in M∞⁺ ∩ R", p / n, p % n)));
    }
    let last = g.row(n - 1);
    let half = mode.last_row_half();
    match corona_solve_mplus(&last, half) {
        Ok(CoronaOutcome::Certificate(_)) => {}
        Ok(CoronaOutcome::Failure(f)) => {
            let at = f.witness.map(|w| format!(" at {w}")).unwrap_or_default();
            return Err(hypothesis(format!("last row is not a corona tuple of M∞{}{at}: {}", half.symbol(), f.reason)));
        }
        Ok(CoronaOutcome::Unresolved(reason)) => return Err(hypothesis(reason)),
        Err(e) => return Err(hypothesis(format!("last row: {e}"))),
    }
    let det = g.det()?;
    let Some(c) = det.as_constant().filter(|c| !c.is_zero()) else {
        return Err(hypothesis(format!("det G = {det} is not a nonzero constant")));
    };
    if let Some(expected) = det_constant {
        if *expected != c {
            return Err(hypothesis(format!("det G = {c}, expected {expected}")));
        }
    }
    let product = match mode {
        SpecialMode::Unitary => g.mul(&adjoint_on_line(g))?,
        SpecialMode::Orthogonal => g.mul(&g.transpose())?,
    };
    if !product.is_identity() {
        return Err(match mode {
            SpecialMode::Unitary => Error::NotUnitary,
            SpecialMode::Orthogonal => Error::NotOrthogonal,
        });
    }

    let justification = format!("{} with constant determinant", mode.tag());
    let mut notes = Vec::new();
    if mode == SpecialMode::Orthogonal {
        notes.push("G Gᵀ = I: the first n−1 columns of Gᵀ are a right inverse of the first n−1 rows".to_string());
    }

    // Hardy-level hypotheses: first rows in H∞⁺ and right invertible there.
    let strict = psi.entries().iter().all(|f| f.in_hardy(Half::Plus))
        && matches!(
            one_sided_diagnose(&psi, Side::Right, &HardySolver(Half::Plus))?,
            Diagnosis::Certificate { .. }
        );
    if strict {
        let mut report = FredholmReport {
            equivalence: Equivalence::Strictly,
            notes,
            ..FredholmReport::invertible(format!("{justification}, first rows right invertible over H∞⁺ ∩ R"))
        };
        report.notes.push("T_G is invertible".into());
        return Ok(report);
    }

    let mut report = FredholmReport {
        fredholm: Verdict::Yes,
        uniform_in_p: true,
        notes,
        ..FredholmReport::unknown(Equivalence::Nearly, justification)
    };
    let det_rf = RationalFunction::constant(c);
    let numeric = winding_numeric(&det_rf, 256, 1e-9)?;
    report.index = Some(-numeric);
    report.notes.push(format!(
        "G is continuous on the extended line: index = −winding(det G) = {} (numeric winding {numeric})",
        -numeric
    ));
    if let Some(indices) = diagonal_indices(g)? {
        let exact = report_from_indices(&indices);
        report.partial_indices = exact.partial_indices;
        report.dim_ker = exact.dim_ker;
        report.dim_coker = exact.dim_coker;
        report.coburn = exact.coburn;
        report.index = exact.index;
        report.notes.push("diagonal symbol: partial indices are the indices of the diagonal entries".into());
    }
    Ok(report)
}

/// Scalar indices of the diagonal entries when `g` is diagonal.
fn diagonal_indices(g: &RMatrix) -> Result<Option<Vec<i64>>> {
    let n = g.rows();
    for i in 0..n {
        for j in 0..n {
            if i != j && !g.get(i, j).is_zero() {
                return Ok(None);
            }
        }
    }
    (0..n).map(|i| wh_factor_rational(g.get(i, i), 1e-9).map(|w| w.k)).collect::<Result<Vec<_>>>().map(Some)
}

/// Symbol whose entries are rational except those in one row or one column,
/// which may be mixed rational × almost periodic.
pub fn continuous_except_line(g: &RingMatrix<MixedElem>) -> Result<FredholmReport> {
    if !g.is_square() || g.rows() == 0 {
        return Err(Error::ShapeViolation(format!("need a nonempty square matrix, got {}×{}", g.rows(), g.cols())));
    }
    let n = g.rows();
    let exceptional: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| g.get(i, j).as_rational().is_none())
        .collect();
    let same_row = exceptional.windows(2).all(|w| w[0].0 == w[1].0);
    let same_col = exceptional.windows(2).all(|w| w[0].1 == w[1].1);
    if !same_row && !same_col {
        return Err(Error::ShapeViolation(
            "non-rational entries must lie in a single row or a single column".into(),
        ));
    }
    for (i, j) in (0..n).flat_map(|i| (0..n).map(move |j| (i, j))) {
        if g.get(i, j).terms().values().any(|r| !r.is_bounded_on_line()) {
            return Err(Error::HypothesisViolation(format!("entry ({i}, {j}) has a rational part unbounded on the line")));
        }
    }
    let justification = if exceptional.is_empty() {
        "rational symbol, continuous on the extended line"
    } else {
        "continuous on the extended line except for one row or column"
    };
    let mut report = FredholmReport::unknown(Equivalence::Nearly, justification);
    report.uniform_in_p = true;
    let det = g.det()?;
    if let Some(d) = det.as_rational() {
        if d.is_zero() || !d.is_invertible_on_line() {
            report.fredholm = Verdict::No;
            report.notes.push(format!("det G = {d} vanishes on the extended line"));
            return Ok(report);
        }
        let k = wh_factor_rational(&d, 1e-9)?.k;
        report.fredholm = Verdict::Yes;
        report.notes.push(format!("det G = {d} has index k = {k}"));
        if exceptional.is_empty() {
            report.index = Some(-k);
            report.notes.push("continuous symbol: index = −winding(det G)".into());
        } else if let Some(diag) = triangular_rational_diagonal(g) {
            let ks = diag.iter().map(|f| wh_factor_rational(f, 1e-9).map(|w| w.k)).collect::<Result<Vec<_>>>()?;
            report.index = Some(-ks.iter().sum::<i64>());
            report.notes.push(format!(
                "triangular symbol with rational diagonal: index is the sum of the diagonal indices (diagonal k = {ks:?})"
            ));
        } else {
            report.notes.push("index of T_G not inferred from det G".into());
        }
        return Ok(report);
    }
    if let Some(p) = det.as_ap() {
        let mm = mean_motion(&p)?;
        match (mm.kappa, mm.method) {
            (Some(kappa), method) if method != MeanMotionMethod::NumericEstimate => {
                // An invertible almost periodic scalar symbol gives a Fredholm
                // Toeplitz operator exactly when its mean motion vanishes.
                report.fredholm = if kappa == num_rational::BigRational::from_integer(0.into()) {
                    Verdict::Yes
                } else {
                    Verdict::No
                };
                report.notes.push(format!("det G = {p} is invertible with mean motion {kappa} ({})", method.tag()));
            }
            (kappa, method) => {
                report.det_mixed = Some(det.clone());
                report.notes.push(format!(
                    "det G = {p}: mean motion not established exactly ({}{}){}",
                    method.tag(),
                    kappa.map(|k| format!(", estimate {k}")).unwrap_or_default(),
                    mm.note.map(|n| format!("; {n}")).unwrap_or_default()
                ));
                if mm.invertible == Some(false) {
                    report.fredholm = Verdict::No;
                }
            }
        }
        return Ok(report);
    }
    report.notes.push(format!("det G = {det} is genuinely mixed; returned for external analysis"));
    report.det_mixed = Some(det);
    Ok(report)
}

/// Diagonal of `g` when it is triangular with rational diagonal entries.
fn triangular_rational_diagonal(g: &RingMatrix<MixedElem>) -> Option<Vec<RationalFunction>> {
    let n = g.rows();
    let lower = (0..n).all(|i| (i + 1..n).all(|j| g.get(i, j).is_zero()));
    let upper = (0..n).all(|i| (0..i).all(|j| g.get(i, j).is_zero()));
    if !lower && !upper {
        return None;
    }
    (0..n).map(|i| g.get(i, i).as_rational()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::corona_solve_mplus;
    use crate::rings::{APPoly, Polynomial};

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn rf(num: &[(i64, i64)], den: &[(i64, i64)]) -> RationalFunction {
        let p = |c: &[(i64, i64)]| Polynomial::new(c.iter().map(|&(a, b)| gi(a, b)).collect());
        RationalFunction::frac(p(num), p(den))
    }

    fn m(rows: Vec<Vec<RationalFunction>>) -> RMatrix {
        RingMatrix::from_rows(rows).unwrap()
    }

    fn one() -> RationalFunction {
        RationalFunction::one()
    }

    fn zero() -> RationalFunction {
        RationalFunction::zero()
    }

    #[test]
    fn indices_to_dimensions() {
        let r = report_from_indices(&[0, 0, -2]);
        assert_eq!((r.dim_ker, r.dim_coker, r.index), (Some(2), Some(0), Some(2)));
        assert_eq!(r.coburn, Coburn::CokerZero);
        let r = report_from_indices(&[0, 0, 0]);
        assert!(r.is_invertible());
        let r = report_from_indices(&[1, -1]);
        assert_eq!((r.dim_ker, r.dim_coker, r.index), (Some(1), Some(1), Some(0)));
        assert!(!r.is_invertible());
        assert_eq!(r.coburn, Coburn::Unknown);
    }

    #[test]
    fn exhaustive_index_arithmetic() {
        fn lists(n: usize) -> Vec<Vec<i64>> {
            if n == 0 {
                return vec![vec![]];
            }
            lists(n - 1).into_iter().flat_map(|l| (-3..=3).map(move |k| [l.clone(), vec![k]].concat())).collect()
        }
        for n in 1..=4 {
            for l in lists(n) {
                let r = report_from_indices(&l);
                let (dk, dc) = (r.dim_ker.unwrap() as i64, r.dim_coker.unwrap() as i64);
                assert_eq!(dk - dc, -l.iter().sum::<i64>());
                let same_sign = l.iter().all(|&k| k >= 0) || l.iter().all(|&k| k <= 0);
                assert_eq!(dk * dc == 0, same_sign);
            }
        }
    }

    fn row_example() -> RMatrix {
        // G = [[1, 0], [b, r⁻¹]], b = 1/(ξ²+1).
        let b = rf(&[(1, 0)], &[(1, 0), (0, 0), (1, 0)]);
        m(vec![vec![one(), zero()], vec![b, RationalFunction::r_pow(-1)]])
    }

    #[test]
    fn strict_copy_from_scalar_report() {
        let g = row_example();
        let s = Structure::RowSubmatrix {
            omitted_row: 1,
            right_inverse: RingMatrix::column(vec![one(), zero()]),
            level: Level::Hardy,
        };
        let r = classify(&g, &s).unwrap();
        assert_eq!(r.equivalence, Equivalence::Strictly);
        assert_eq!((r.dim_ker, r.dim_coker, r.index), (Some(1), Some(0), Some(1)));
        assert_eq!(r.coburn, Coburn::CokerZero);
        let bad = Structure::RowSubmatrix {
            omitted_row: 1,
            right_inverse: RingMatrix::column(vec![RationalFunction::constant(gi(2, 0)), zero()]),
            level: Level::Hardy,
        };
        assert!(matches!(classify(&g, &bad), Err(Error::CertificateInvalid(_))));
    }

    #[test]
    fn meromorphic_level_is_only_near() {
        // Ψ = [(ξ−2i)/(ξ+i), (ξ−2i)(ξ−3i)/(ξ+i)²] shares the C⁺ zero 2i, so it
        // is right invertible over M∞⁺ but not over H∞⁺.
        let h1 = rf(&[(0, -2), (1, 0)], &[(0, 1), (1, 0)]);
        let h2 = rf(&[(-6, 0), (0, -5), (1, 0)], &[(-1, 0), (0, 2), (1, 0)]);
        let sol = corona_solve_mplus(&[h1.clone(), h2.clone()], Half::Plus).unwrap();
        let sol = sol.certificate().unwrap().solution.clone();
        let g = m(vec![vec![h1, h2], vec![zero(), one()]]);
        let s = Structure::RowSubmatrix {
            omitted_row: 1,
            right_inverse: RingMatrix::column(sol.clone()),
            level: Level::Meromorphic,
        };
        let r = classify(&g, &s).unwrap();
        assert_eq!(r.equivalence, Equivalence::Nearly);
        assert_eq!(r.fredholm, Verdict::Yes);
        assert_eq!(r.dim_ker, None);
        let claimed_hardy =
            Structure::RowSubmatrix { omitted_row: 1, right_inverse: RingMatrix::column(sol), level: Level::Hardy };
        assert!(matches!(classify(&g, &claimed_hardy), Err(Error::CertificateInvalid(_))));
    }

    #[test]
    fn unitary_examples() {
        let r = RationalFunction::r();
        let rinv = RationalFunction::r_pow(-1);
        let g = m(vec![vec![r.clone(), zero()], vec![zero(), rinv]]);
        let rep = special_unitary(&g, Some(&gi(1, 0))).unwrap();
        assert_eq!(rep.fredholm, Verdict::Yes);
        assert_eq!(rep.partial_indices, Some(vec![1, -1]));
        assert_eq!((rep.dim_ker, rep.dim_coker), (Some(1), Some(1)));
        assert!(!rep.is_invertible());

        let id = RingMatrix::identity(2);
        assert!(special_unitary(&id, None).unwrap().is_invertible());

        let g = m(vec![vec![r.clone(), zero()], vec![zero(), r]]);
        assert!(matches!(special_unitary(&g, None), Err(Error::HypothesisViolation(_))));

        let g = m(vec![vec![RationalFunction::constant(gi(2, 0)), zero()], vec![zero(), RationalFunction::constant(GaussianRational::from_fracs(1, 2, 0, 1))]]);
        assert!(matches!(special_unitary(&g, None), Err(Error::NotUnitary)));
    }

    #[test]
    fn orthogonal_rotation() {
        let c = rf(&[(-1, 0), (0, 0), (1, 0)], &[(1, 0), (0, 0), (1, 0)]);
        let s = rf(&[(0, 0), (2, 0)], &[(1, 0), (0, 0), (1, 0)]);
        let g = m(vec![vec![c.clone(), s.clone()], vec![-s.clone(), c.clone()]]);
        let rep = special_orthogonal(&g).unwrap();
        assert_eq!(rep.fredholm, Verdict::Yes);
        assert_eq!(rep.index, Some(0));
        assert!(special_orthogonal(&RingMatrix::identity(3)).unwrap().is_invertible());

        // Last row scaled by x = ξ/(ξ+i), so both entries vanish at 0.
        let x = rf(&[(0, 0), (1, 0)], &[(0, 1), (1, 0)]);
        let g = m(vec![vec![c.clone(), s.clone()], vec![&-s * &x, &c * &x]]);
        match special_orthogonal(&g) {
            Err(Error::HypothesisViolation(msg)) => assert!(msg.contains("at 0"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mixed_triangular() {
        let e = |p, q| MixedElem::from_ap(&APPoly::e_int(p, q));
        let rat = MixedElem::from_rational;
        let g = RingMatrix::from_rows(vec![
            vec![MixedElem::one(), MixedElem::zero()],
            vec![e(1, 2), rat(RationalFunction::r())],
        ])
        .unwrap();
        let rep = continuous_except_line(&g).unwrap();
        assert_eq!(rep.equivalence, Equivalence::Nearly);
        assert_eq!(rep.fredholm, Verdict::Yes);
        assert_eq!(rep.index, Some(-1));

        let g = RingMatrix::from_rows(vec![
            vec![e(1, 2), rat(RationalFunction::r())],
            vec![MixedElem::one(), MixedElem::one()],
        ])
        .unwrap();
        let rep = continuous_except_line(&g).unwrap();
        assert_eq!(rep.fredholm, Verdict::Unknown);
        assert!(rep.det_mixed.is_some());

        let g = RingMatrix::from_rows(vec![vec![e(1, 2), MixedElem::one()], vec![MixedElem::one(), e(1, 1)]]).unwrap();
        assert!(matches!(continuous_except_line(&g), Err(Error::ShapeViolation(_))));

        // det = e_1: invertible with mean motion 1, so not Fredholm.
        let g = RingMatrix::from_rows(vec![vec![MixedElem::one(), MixedElem::zero()], vec![e(1, 2), e(1, 1)]]).unwrap();
        let rep = continuous_except_line(&g).unwrap();
        assert_eq!(rep.fredholm, Verdict::No);
    }
}
