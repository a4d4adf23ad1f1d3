//! Command dispatch. Every command takes one JSON document and returns one
//! JSON value; hypothesis failures become [`CliError::Verdict`].

use serde_json::{json, Map, Value};
use whfactor_core::ap_factor::{
    ap_factor_via_rh, ap_factor_via_row, ap_project, ap_special, mean_motion, verify_ap_factorization,
    APDetFactorization, APMatrix,
};
use whfactor_core::codec::{self, RingTag};
use whfactor_core::corona::{
    corona_solve_ap, corona_solve_hplus, corona_solve_mplus, AlmostPeriodicSolver, CoronaOutcome, HardySolver,
};
use whfactor_core::fredholm::{
    classify, continuous_except_line, report_from_indices, special_orthogonal, special_unitary, Level, SpecialMode,
    Structure,
};
use whfactor_core::linalg::{
    complete, delta_left_inverse_from_psi, left_inverse_general, maximal_minors, one_sided_diagnose, BezoutSolver,
    Diagnosis, MinorVector, Side,
};
use whfactor_core::matrix_wh::{
    apply_inverse, factor_via_column, factor_via_rh, factor_via_row, toeplitz_apply, verify_factorization, RMatrix,
    VerificationReport,
};
use whfactor_core::rings::{
    dot, factor_numeric, APPoly, GaussianRational, Half, MixedElem, Polynomial, RationalFunction, Ring, RingMatrix,
};
use whfactor_core::scalar_wh::{riesz_project, wh_factor_rational, wh_factor_scalar, winding_exact, winding_numeric, ScalarWH};
use whfactor_core::Error as CoreError;

use crate::ringio::{AlgebraArg, IoRing};
use crate::{CliError, CommandName, Mode, Settings};

type CliResult<T> = Result<T, CliError>;

/// Default number of Neumann-series terms for AP corona certificates.
const DEFAULT_AP_TERMS: usize = 8;
const MAX_AP_TERMS: usize = 64;

/// Runs a ring-generic command for every ring that has a matrix type.
macro_rules! dispatch {
    ($ring:expr, $f:ident $(, $arg:expr)*) => {
        match $ring {
            RingTag::Gaussian => $f::<GaussianRational>($ring $(, $arg)*),
            RingTag::Polynomial => $f::<Polynomial>($ring $(, $arg)*),
            RingTag::Rational => $f::<RationalFunction>($ring $(, $arg)*),
            RingTag::AlmostPeriodic => $f::<APPoly>($ring $(, $arg)*),
            RingTag::Mixed => $f::<MixedElem>($ring $(, $arg)*),
            RingTag::Factored => Err(unsupported($ring)),
        }
    };
}

pub fn execute(name: CommandName, doc: &Value, s: &Settings) -> CliResult<Value> {
    if !doc.is_object() {
        return Err(input("the input document must be a JSON object"));
    }
    let ring = RingTag::of_document(doc)?;
    match name {
        CommandName::Minors => dispatch!(ring, minors, doc),
        CommandName::LeftInverse => dispatch!(ring, one_sided, doc, Side::Left, s),
        CommandName::RightInverse => dispatch!(ring, one_sided, doc, Side::Right, s),
        CommandName::Complete => dispatch!(ring, completion, doc),
        CommandName::Corona => corona(ring, doc, s),
        CommandName::WhScalar => wh_scalar(ring, doc, s),
        CommandName::WhMatrix => wh_matrix(ring, doc, s),
        CommandName::ApFactor => ap_factor(ring, doc, s),
        CommandName::Report => report(ring, doc, s),
        CommandName::Verify => verify(ring, doc),
        CommandName::Winding => winding(ring, doc, s),
        CommandName::Project => project(ring, doc),
        CommandName::ApplyInverse => apply_inv(ring, doc),
    }
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn unsupported(ring: RingTag) -> CliError {
    input(format!("ring \"{}\" is not supported by this command", ring.tag()))
}

fn require_ring(ring: RingTag, allowed: &[RingTag]) -> CliResult<()> {
    if allowed.contains(&ring) {
        Ok(())
    } else {
        Err(unsupported(ring))
    }
}

fn get<'a>(doc: &'a Value, key: &str) -> CliResult<&'a Value> {
    Ok(codec::field(doc, key)?)
}

fn opt<'a>(doc: &'a Value, key: &str) -> Option<&'a Value> {
    doc.get(key).filter(|v| !v.is_null())
}

fn opt_str<'a>(doc: &'a Value, key: &str) -> CliResult<Option<&'a str>> {
    match opt(doc, key) {
        None => Ok(None),
        Some(Value::String(s)) => Ok(Some(s)),
        Some(_) => Err(input(format!("\"{key}\" must be a string"))),
    }
}

fn opt_usize(doc: &Value, key: &str) -> CliResult<Option<usize>> {
    match opt(doc, key) {
        None => Ok(None),
        Some(v) => v
            .as_u64()
            .and_then(|u| usize::try_from(u).ok())
            .map(Some)
            .ok_or_else(|| input(format!("\"{key}\" must be a non-negative integer"))),
    }
}

fn matrix<R: IoRing>(v: &Value) -> CliResult<RingMatrix<R>> {
    Ok(codec::decode_matrix(v, R::decode)?)
}

fn enc_matrix<R: IoRing>(m: &RingMatrix<R>) -> Value {
    codec::encode_matrix(m, R::encode)
}

fn enc_vec<R: IoRing>(v: &[R]) -> Value {
    Value::Array(v.iter().map(R::encode).collect())
}

fn rmatrix(v: &Value) -> CliResult<RMatrix> {
    matrix::<RationalFunction>(v)
}

fn apmatrix(v: &Value) -> CliResult<APMatrix> {
    matrix::<APPoly>(v)
}

/// Residual marker for an exact identity check.
fn marker(holds: bool) -> Value {
    Value::String(if holds { "exact-zero" } else { "nonzero" }.into())
}

fn algebra(doc: &Value) -> CliResult<AlgebraArg> {
    match opt_str(doc, "algebra")? {
        None | Some("H") => Ok(AlgebraArg::Hardy),
        Some("M") => Ok(AlgebraArg::Meromorphic),
        Some(other) => Err(input(format!("unknown algebra \"{other}\" (expected H or M)"))),
    }
}

fn level(doc: &Value) -> CliResult<Level> {
    Ok(match algebra(doc)? {
        AlgebraArg::Hardy => Level::Hardy,
        AlgebraArg::Meromorphic => Level::Meromorphic,
    })
}

fn verdict(message: impl Into<String>, report: Value) -> CliError {
    CliError::Verdict { message: message.into(), report }
}

fn encode_minors<R: IoRing>(m: &MinorVector<R>) -> Value {
    json!({"subsets": m.subsets, "values": enc_vec(&m.values)})
}

fn minors<R: IoRing>(ring: RingTag, doc: &Value) -> CliResult<Value> {
    let m = matrix::<R>(get(doc, "matrix")?)?;
    let (along, mv) =
        if m.rows() >= m.cols() { ("rows", maximal_minors(&m)?) } else { ("cols", maximal_minors(&m.transpose())?) };
    Ok(json!({"ring": ring.tag(), "along": along, "subsets": mv.subsets, "values": enc_vec(&mv.values)}))
}

fn one_sided<R: IoRing>(ring: RingTag, doc: &Value, side: Side, s: &Settings) -> CliResult<Value> {
    let phi = matrix::<R>(get(doc, "matrix")?)?;
    let side_tag = match side {
        Side::Left => "left",
        Side::Right => "right",
    };
    let tall = match side {
        Side::Left => phi.clone(),
        Side::Right => phi.transpose(),
    };
    let (minors, coefficients, inverse) = match opt(doc, "certificate") {
        Some(c) => {
            let coefficients = codec::decode_vector(c, R::decode)?;
            let minors = maximal_minors(&tall)?;
            if coefficients.len() != minors.len() {
                return Err(input(format!(
                    "certificate has {} coefficients for {} minors",
                    coefficients.len(),
                    minors.len()
                )));
            }
            if !minors.pair(&coefficients).is_one() {
                return Err(CoreError::BezoutCertificateInvalid.into());
            }
            let left = left_inverse_general(&tall, &coefficients)?;
            let inverse = if side == Side::Left { left } else { left.transpose() };
            (minors, coefficients, inverse)
        }
        None => {
            let solver = R::solver(s.half, algebra(doc)?).ok_or_else(|| unsupported(ring))?;
            match one_sided_diagnose(&phi, side, solver.as_ref())? {
                Diagnosis::Certificate { minors, coefficients, inverse } => (minors, coefficients, inverse),
                Diagnosis::NotInvertible { minors, witness, reason } => {
                    let report = json!({
                        "status": "not-invertible",
                        "side": side_tag,
                        "minors": encode_minors(&minors),
                        "witness": witness.as_ref().map(codec::encode_point).unwrap_or(Value::Null),
                        "reason": reason,
                    });
                    return Err(verdict(format!("not {side_tag} invertible: {reason}"), report));
                }
                Diagnosis::Unresolved { minors, reason } => {
                    let report = json!({"status": "unresolved", "side": side_tag, "minors": encode_minors(&minors), "reason": reason});
                    return Err(verdict(format!("unresolved: {reason}"), report));
                }
            }
        }
    };
    let identity = match side {
        Side::Left => inverse.mul(&phi)?,
        Side::Right => phi.mul(&inverse)?,
    };
    Ok(json!({
        "ring": ring.tag(),
        "status": "certificate",
        "side": side_tag,
        "minors": encode_minors(&minors),
        "coefficients": enc_vec(&coefficients),
        "inverse": enc_matrix(&inverse),
        "checks": {
            "bezout": marker(minors.pair(&coefficients).is_one()),
            "identity": marker(identity.is_identity()),
        },
    }))
}

fn completion<R: IoRing>(ring: RingTag, doc: &Value) -> CliResult<Value> {
    let phi = matrix::<R>(get(doc, "phi")?)?;
    let psi = matrix::<R>(get(doc, "psi")?)?;
    let c = complete(&phi, &psi)?;
    let delta_phi = maximal_minors(&phi)?;
    let delta_star = delta_left_inverse_from_psi(&psi, &phi)?;
    let det_phi = c.phi_e.det()?;
    let det_psi = c.psi_e.det()?;
    Ok(json!({
        "ring": ring.tag(),
        "phi_e": enc_matrix(&c.phi_e),
        "psi_e": enc_matrix(&c.psi_e),
        "det": c.det_value.encode(),
        "checks": {
            "minor pairing": marker(dot(&delta_star.values, &delta_phi.values).is_one()),
            "psi_e phi_e - I": marker(c.psi_e.mul(&c.phi_e)?.is_identity()),
            "phi_e psi_e - I": marker(c.phi_e.mul(&c.psi_e)?.is_identity()),
            "det phi_e": marker(det_phi == c.det_value),
            "det psi_e": marker(det_psi == c.det_value),
        },
    }))
}

fn corona_result<R: IoRing>(ring: RingTag, h: &[R], outcome: CoronaOutcome<R>) -> CliResult<Value> {
    let mut v = codec::encode_corona(&outcome, R::encode);
    match &outcome {
        CoronaOutcome::Certificate(c) => {
            let residual = dot(&c.solution, h) - R::one();
            let expected = c.approximation.as_ref().map_or_else(R::zero, |a| a.residual.clone());
            let obj = v.as_object_mut().expect("certificate encodes as an object");
            obj.insert("ring".into(), json!(ring.tag()));
            obj.insert(
                "residual".into(),
                if c.approximation.is_some() {
                    json!({"matches_reported": residual == expected})
                } else {
                    marker(residual.is_zero())
                },
            );
            Ok(v)
        }
        CoronaOutcome::Failure(f) => Err(verdict(format!("corona condition fails: {}", f.reason), v)),
        CoronaOutcome::Unresolved(reason) => Err(verdict(format!("unresolved: {reason}"), v)),
    }
}

fn corona(ring: RingTag, doc: &Value, s: &Settings) -> CliResult<Value> {
    match ring {
        RingTag::Rational => {
            let h = codec::decode_vector(get(doc, "tuple")?, codec::decode_rational_function)?;
            let outcome = match algebra(doc)? {
                AlgebraArg::Hardy => corona_solve_hplus(&h, s.half)?,
                AlgebraArg::Meromorphic => corona_solve_mplus(&h, s.half)?,
            };
            corona_result(ring, &h, outcome)
        }
        RingTag::AlmostPeriodic => {
            let h = codec::decode_vector(get(doc, "tuple")?, codec::decode_appoly)?;
            let terms = opt_usize(doc, "terms")?.unwrap_or(DEFAULT_AP_TERMS);
            if terms == 0 || terms > MAX_AP_TERMS {
                return Err(input(format!("\"terms\" must lie in [1, {MAX_AP_TERMS}]")));
            }
            let outcome = corona_solve_ap(&h, s.half, terms)?;
            corona_result(ring, &h, outcome)
        }
        other => Err(unsupported(other)),
    }
}

fn scalar_checks(w: &ScalarWH, target: Option<&RationalFunction>) -> Value {
    let reconstruction = match target {
        Some(f) => marker(w.product() == *f),
        None => json!("inexact-roots"),
    };
    let certificates = match w.certify() {
        Ok(()) => json!({"passed": true}),
        Err(e) => json!({"passed": false, "detail": e.to_string()}),
    };
    json!({"reconstruction": reconstruction, "certificates": certificates})
}

fn wh_scalar(ring: RingTag, doc: &Value, s: &Settings) -> CliResult<Value> {
    let symbol = get(doc, "symbol")?;
    let (w, target) = match ring {
        RingTag::Factored => {
            let f = codec::decode_factored(symbol)?;
            let w = wh_factor_scalar(&f)?;
            (w, f.is_exact().then(|| f.expand()))
        }
        RingTag::Rational => {
            let f = codec::decode_rational_function(symbol)?;
            let w = wh_factor_rational(&f, s.tolerance)?;
            let exact = w.is_exact();
            (w, exact.then_some(f))
        }
        other => return Err(unsupported(other)),
    };
    Ok(json!({
        "ring": ring.tag(),
        "symbol": symbol,
        "factorization": codec::encode_scalar_wh(&w),
        "winding": w.k,
        "checks": scalar_checks(&w, target.as_ref()),
    }))
}

/// Route from `--mode`, else the document's `"mode"`, else `row`.
fn route(doc: &Value, s: &Settings, allowed: &[Mode]) -> CliResult<Mode> {
    let mode = match (s.mode, opt_str(doc, "mode")?) {
        (Some(m), _) => m,
        (None, None) => Mode::Row,
        (None, Some("row")) => Mode::Row,
        (None, Some("col")) => Mode::Col,
        (None, Some("rh")) => Mode::Rh,
        (None, Some(other)) => return Err(input(format!("unknown mode \"{other}\""))),
    };
    if !allowed.contains(&mode) {
        return Err(input(format!("mode {} is not available here", mode.tag())));
    }
    Ok(mode)
}

fn omitted(doc: &Value, s: &Settings, n: usize) -> CliResult<usize> {
    let k = match s.omitted {
        Some(k) => k,
        None => opt_usize(doc, "omitted")?.unwrap_or(n.saturating_sub(1)),
    };
    if k >= n {
        return Err(input(format!("omitted index {k} is out of range for a {n}×{n} matrix")));
    }
    Ok(k)
}

fn check_square<R: Ring>(g: &RingMatrix<R>) -> CliResult<usize> {
    if !g.is_square() || g.rows() < 2 {
        return Err(input(format!("matrix must be square of size ≥ 2, got {}×{}", g.rows(), g.cols())));
    }
    Ok(g.rows())
}

/// One-sided inverse computed from minors, turned into a verdict when the
/// certificate does not exist.
fn certify<R: Ring>(m: &RingMatrix<R>, side: Side, solver: &dyn BezoutSolver<R>, what: &str) -> CliResult<RingMatrix<R>> {
    match one_sided_diagnose(m, side, solver)? {
        Diagnosis::Certificate { inverse, .. } => Ok(inverse),
        Diagnosis::NotInvertible { witness, reason, .. } => {
            let message = format!("{what}: {reason}");
            let report = json!({
                "status": "failure",
                "error": {
                    "kind": "hypothesis-violation",
                    "message": message,
                    "witness": witness.as_ref().map(codec::encode_point).unwrap_or(Value::Null),
                },
            });
            Err(verdict(message, report))
        }
        Diagnosis::Unresolved { reason, .. } => {
            let message = format!("{what}: {reason}");
            Err(verdict(message.clone(), json!({"status": "unresolved", "reason": message})))
        }
    }
}

fn supplied_or<R: IoRing>(doc: &Value, key: &str, compute: impl FnOnce() -> CliResult<RingMatrix<R>>) -> CliResult<RingMatrix<R>> {
    match opt(doc, key) {
        Some(v) => matrix::<R>(v),
        None => compute(),
    }
}

fn wh_matrix(ring: RingTag, doc: &Value, s: &Settings) -> CliResult<Value> {
    require_ring(ring, &[RingTag::Rational])?;
    let g = rmatrix(get(doc, "matrix")?)?;
    let n = check_square(&g)?;
    let mode = route(doc, s, &[Mode::Row, Mode::Col, Mode::Rh])?;
    let scalar = match opt(doc, "scalar") {
        Some(v) => codec::decode_scalar_wh(v)?,
        None => wh_factor_rational(&g.det()?, s.tolerance)?,
    };
    let mut used = Map::new();
    let f = match mode {
        Mode::Row => {
            let k = omitted(doc, s, n)?;
            let phi_plus = supplied_or(doc, "phi_plus", || {
                certify(&g.remove_row(k), Side::Right, &HardySolver(Half::Plus), "rows without the omitted row")
            })?;
            used.insert("omitted".into(), json!(k));
            used.insert("phi_plus".into(), enc_matrix(&phi_plus));
            factor_via_row(&g, k, &phi_plus, &scalar)?
        }
        Mode::Col => {
            let k = omitted(doc, s, n)?;
            let psi_minus = supplied_or(doc, "psi_minus", || {
                certify(&g.remove_col(k), Side::Left, &HardySolver(Half::Minus), "columns without the omitted column")
            })?;
            used.insert("omitted".into(), json!(k));
            used.insert("psi_minus".into(), enc_matrix(&psi_minus));
            factor_via_column(&g, k, &psi_minus, &scalar)?
        }
        Mode::Rh => {
            let phi_plus = rmatrix(get(doc, "phi_plus")?)?;
            let phi_minus = supplied_or(doc, "phi_minus", || Ok(g.mul(&phi_plus)?))?;
            let psi_plus =
                supplied_or(doc, "psi_plus", || certify(&phi_plus, Side::Left, &HardySolver(Half::Plus), "Φ⁺"))?;
            let psi_minus =
                supplied_or(doc, "psi_minus", || certify(&phi_minus, Side::Left, &HardySolver(Half::Minus), "Φ⁻"))?;
            for (key, m) in [("phi_plus", &phi_plus), ("phi_minus", &phi_minus), ("psi_plus", &psi_plus), ("psi_minus", &psi_minus)] {
                used.insert(key.into(), enc_matrix(m));
            }
            factor_via_rh(&g, &phi_plus, &phi_minus, &psi_plus, &psi_minus, &scalar)?
        }
    };
    let report = verify_factorization(&g, &f);
    let out = json!({
        "ring": ring.tag(),
        "matrix": enc_matrix(&g),
        "scalar": codec::encode_scalar_wh(&scalar),
        "certificates": Value::Object(used),
        "factorization": codec::encode_wh_factorization(&f),
        "verify": codec::encode_verification(&report),
    });
    finish_verified(out, &report)
}

fn finish_verified(out: Value, report: &VerificationReport) -> CliResult<Value> {
    if report.all_passed() {
        Ok(out)
    } else {
        let names: Vec<&str> = report.failed().map(|c| c.name.as_str()).collect();
        Err(verdict(format!("verification failed: {}", names.join(", ")), out))
    }
}

fn ap_factor(ring: RingTag, doc: &Value, s: &Settings) -> CliResult<Value> {
    require_ring(ring, &[RingTag::AlmostPeriodic])?;
    let g = apmatrix(get(doc, "matrix")?)?;
    let n = check_square(&g)?;
    let mode = route(doc, s, &[Mode::Row, Mode::Rh])?;
    let det_poly = g.det()?;
    let motion = mean_motion(&det_poly)?;
    let det = match opt(doc, "det_factorization") {
        Some(v) => codec::decode_ap_det(v)?,
        None => APDetFactorization::from_det(&det_poly)?,
    };
    let mut used = Map::new();
    let f = match mode {
        Mode::Row => {
            let k = omitted(doc, s, n)?;
            let phi_plus = supplied_or(doc, "phi_plus", || {
                certify(&g.remove_row(k), Side::Right, &AlmostPeriodicSolver(Half::Plus), "rows without the omitted row")
            })?;
            used.insert("omitted".into(), json!(k));
            used.insert("phi_plus".into(), enc_matrix(&phi_plus));
            ap_factor_via_row(&g, k, &phi_plus, &det)?
        }
        _ => {
            let phi_plus = apmatrix(get(doc, "phi_plus")?)?;
            let phi_minus = supplied_or(doc, "phi_minus", || Ok(g.mul(&phi_plus)?))?;
            let psi_plus = supplied_or(doc, "psi_plus", || {
                certify(&phi_plus, Side::Left, &AlmostPeriodicSolver(Half::Plus), "Φ⁺")
            })?;
            let psi_minus = supplied_or(doc, "psi_minus", || {
                certify(&phi_minus, Side::Left, &AlmostPeriodicSolver(Half::Minus), "Φ⁻")
            })?;
            for (key, m) in [("phi_plus", &phi_plus), ("phi_minus", &phi_minus), ("psi_plus", &psi_plus), ("psi_minus", &psi_minus)] {
                used.insert(key.into(), enc_matrix(m));
            }
            ap_factor_via_rh(&g, &phi_plus, &phi_minus, &psi_plus, &psi_minus, &det)?
        }
    };
    let report = verify_ap_factorization(&g, &f);
    let out = json!({
        "ring": ring.tag(),
        "matrix": enc_matrix(&g),
        "det_factorization": codec::encode_ap_det(&det),
        "mean_motion": codec::encode_mean_motion(&motion),
        "certificates": Value::Object(used),
        "factorization": codec::encode_ap_factorization(&f),
        "verify": codec::encode_verification(&report),
    });
    finish_verified(out, &report)
}

fn report(ring: RingTag, doc: &Value, s: &Settings) -> CliResult<Value> {
    let kind = match s.mode {
        Some(m) => m.tag(),
        None => opt_str(doc, "kind")?.ok_or_else(|| input("missing field \"kind\" (or pass --mode)"))?,
    };
    let r = match kind {
        "indices" => {
            let v = get(doc, "indices")?;
            let indices: Vec<i64> = v
                .as_array()
                .ok_or_else(|| input("\"indices\" must be an array"))?
                .iter()
                .map(|x| x.as_i64().filter(|k| k.abs() <= codec::LIMITS.max_index))
                .collect::<Option<_>>()
                .ok_or_else(|| input(format!("indices must be integers of modulus ≤ {}", codec::LIMITS.max_index)))?;
            if indices.is_empty() || indices.len() > codec::LIMITS.max_dim {
                return Err(input(format!("between 1 and {} indices are required", codec::LIMITS.max_dim)));
            }
            report_from_indices(&indices)
        }
        "row" | "col" | "rh" => {
            require_ring(ring, &[RingTag::Rational])?;
            let g = rmatrix(get(doc, "matrix")?)?;
            let n = check_square(&g)?;
            let level = level(doc)?;
            let structure = match kind {
                "row" => Structure::RowSubmatrix {
                    omitted_row: omitted(doc, s, n)?,
                    right_inverse: rmatrix(get(doc, "right_inverse")?)?,
                    level,
                },
                "col" => Structure::ColumnSubmatrix {
                    omitted_col: omitted(doc, s, n)?,
                    left_inverse: rmatrix(get(doc, "left_inverse")?)?,
                    level,
                },
                _ => Structure::RhPair {
                    phi_plus: rmatrix(get(doc, "phi_plus")?)?,
                    phi_minus: rmatrix(get(doc, "phi_minus")?)?,
                    psi_plus: rmatrix(get(doc, "psi_plus")?)?,
                    psi_minus: rmatrix(get(doc, "psi_minus")?)?,
                    level,
                },
            };
            classify(&g, &structure)?
        }
        "unitary" | "orthogonal" => {
            let mode = if kind == "unitary" { SpecialMode::Unitary } else { SpecialMode::Orthogonal };
            match ring {
                RingTag::Rational => {
                    let g = rmatrix(get(doc, "matrix")?)?;
                    match mode {
                        SpecialMode::Unitary => {
                            let c = opt(doc, "det").map(codec::decode_gaussian).transpose()?;
                            special_unitary(&g, c.as_ref())?
                        }
                        SpecialMode::Orthogonal => special_orthogonal(&g)?,
                    }
                }
                RingTag::AlmostPeriodic => ap_special(&apmatrix(get(doc, "matrix")?)?, mode)?,
                other => return Err(unsupported(other)),
            }
        }
        "continuous" => {
            require_ring(ring, &[RingTag::Mixed])?;
            continuous_except_line(&matrix::<MixedElem>(get(doc, "matrix")?)?)?
        }
        other => {
            return Err(input(format!(
                "unknown report kind \"{other}\" (expected indices, row, col, rh, unitary, orthogonal or continuous)"
            )))
        }
    };
    Ok(json!({"ring": ring.tag(), "kind": kind, "report": codec::encode_report(&r)}))
}

fn verify(ring: RingTag, doc: &Value) -> CliResult<Value> {
    let report = match ring {
        RingTag::Rational => {
            let g = rmatrix(get(doc, "matrix")?)?;
            let f = codec::decode_wh_factorization(get(doc, "factorization")?)?;
            verify_factorization(&g, &f)
        }
        RingTag::AlmostPeriodic => {
            let g = apmatrix(get(doc, "matrix")?)?;
            let f = codec::decode_ap_factorization(get(doc, "factorization")?)?;
            verify_ap_factorization(&g, &f)
        }
        other => return Err(unsupported(other)),
    };
    finish_verified(json!({"ring": ring.tag(), "verify": codec::encode_verification(&report)}), &report)
}

fn winding(ring: RingTag, doc: &Value, s: &Settings) -> CliResult<Value> {
    let symbol = get(doc, "symbol")?;
    let (exact, numeric) = match ring {
        RingTag::Factored => {
            let f = codec::decode_factored(symbol)?;
            (winding_exact(&f)?, winding_numeric(&f, s.grid, s.tolerance)?)
        }
        RingTag::Rational => {
            let f = codec::decode_rational_function(symbol)?;
            if f.is_zero() {
                return Err(CoreError::ZeroInput.into());
            }
            let factored = factor_numeric(&f, s.tolerance)?.factored;
            (winding_exact(&factored)?, winding_numeric(&f, s.grid, s.tolerance)?)
        }
        RingTag::AlmostPeriodic => {
            let p = codec::decode_appoly(symbol)?;
            let m = mean_motion(&p)?;
            let out = json!({"ring": ring.tag(), "mean_motion": codec::encode_mean_motion(&m)});
            return match (m.invertible, &m.kappa) {
                (Some(false), _) => Err(verdict("symbol is not invertible in AP", out)),
                (_, None) => Err(verdict("mean motion unresolved", out)),
                _ => Ok(out),
            };
        }
        other => return Err(unsupported(other)),
    };
    let out = json!({"ring": ring.tag(), "exact": exact, "numeric": numeric, "agree": exact == numeric});
    if exact == numeric {
        Ok(out)
    } else {
        Err(verdict(format!("numeric winding {numeric} disagrees with exact winding {exact}"), out))
    }
}

fn project(ring: RingTag, doc: &Value) -> CliResult<Value> {
    let symbol = get(doc, "symbol")?;
    match ring {
        RingTag::Rational => {
            let f = codec::decode_rational_function(symbol)?;
            let p = riesz_project(&f)?;
            Ok(json!({
                "ring": ring.tag(),
                "plus": codec::encode_rational_function(&p.plus_part),
                "minus": codec::encode_rational_function(&p.minus_part),
                "checks": {"sum": marker(&p.plus_part + &p.minus_part == f)},
            }))
        }
        RingTag::AlmostPeriodic => {
            let f = codec::decode_appoly(symbol)?;
            let plus = ap_project(&f, Half::Plus);
            let minus = ap_project(&f, Half::Minus);
            Ok(json!({
                "ring": ring.tag(),
                "plus": codec::encode_appoly(&plus),
                "minus": codec::encode_appoly(&minus),
                "checks": {
                    "sum": marker(plus.clone() + minus.clone() == f),
                    "idempotent": marker(ap_project(&plus, Half::Plus) == plus && ap_project(&minus, Half::Minus) == minus),
                },
            }))
        }
        other => Err(unsupported(other)),
    }
}

fn apply_inv(ring: RingTag, doc: &Value) -> CliResult<Value> {
    require_ring(ring, &[RingTag::Rational])?;
    let f = codec::decode_wh_factorization(get(doc, "factorization")?)?;
    let rhs = codec::decode_vector(get(doc, "rhs")?, codec::decode_rational_function)?;
    let x = apply_inverse(&f, &rhs)?;
    let g = match opt(doc, "matrix") {
        Some(v) => rmatrix(v)?,
        None => f.product()?,
    };
    let residual = toeplitz_apply(&g, &x)? == rhs;
    let out = json!({"ring": ring.tag(), "solution": enc_vec(&x), "residual": marker(residual)});
    if residual {
        Ok(out)
    } else {
        Err(verdict("T_G x differs from the right-hand side", out))
    }
}

fn kind_tag(e: &CoreError) -> &'static str {
    match e {
        CoreError::ZeroDenominator => "zero-denominator",
        CoreError::ShapeMismatch(_) => "shape-mismatch",
        CoreError::RootClassificationAmbiguous(_) => "root-classification-ambiguous",
        CoreError::InexactRoot(_) => "inexact-root",
        CoreError::NotALeftInverse => "not-a-left-inverse",
        CoreError::BezoutCertificateInvalid => "bezout-certificate-invalid",
        CoreError::MembershipViolation { .. } => "membership-violation",
        CoreError::SymbolSingularOnLine(_) => "symbol-singular-on-line",
        CoreError::RealPole(_) => "real-pole",
        CoreError::NearZeroOnContour(_) => "near-zero-on-contour",
        CoreError::HypothesisViolation(_) => "hypothesis-violation",
        CoreError::CommonZero(_) => "common-zero",
        CoreError::IndexNonzero => "index-nonzero",
        CoreError::CertificateInvalid(_) => "certificate-invalid",
        CoreError::NotUnitary => "not-unitary",
        CoreError::NotOrthogonal => "not-orthogonal",
        CoreError::ShapeViolation(_) => "shape-violation",
        CoreError::ZeroInput => "zero-input",
        CoreError::RhResidual => "rh-residual",
        CoreError::SplitUnavailable { .. } => "split-unavailable",
        CoreError::Unresolved(_) => "unresolved",
        CoreError::Decode(_) => "decode",
    }
}

/// Structured verdict for a library error.
pub fn error_report(e: &CoreError) -> Value {
    let mut err = Map::new();
    err.insert("kind".into(), json!(kind_tag(e)));
    err.insert("message".into(), json!(e.to_string()));
    match e {
        CoreError::SymbolSingularOnLine(p)
        | CoreError::RealPole(p)
        | CoreError::CommonZero(p)
        | CoreError::RootClassificationAmbiguous(p)
        | CoreError::InexactRoot(p) => {
            err.insert("witness".into(), codec::encode_point(p));
        }
        CoreError::NearZeroOnContour(x) => {
            err.insert("near".into(), json!(x));
        }
        CoreError::SplitUnavailable { offending } => {
            err.insert("offending".into(), Value::Array(offending.iter().map(codec::encode_rational).collect()));
        }
        CoreError::MembershipViolation { index, algebra } => {
            err.insert("index".into(), json!(index));
            err.insert("algebra".into(), json!(algebra));
        }
        _ => {}
    }
    let status = if matches!(e, CoreError::Unresolved(_)) { "unresolved" } else { "failure" };
    json!({"status": status, "error": Value::Object(err)})
}
