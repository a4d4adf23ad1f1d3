//! JSON encodings of ring elements, matrices and results.
//!
//! Rationals are `[p, q]` with integer `p`, `q` (JSON numbers, or decimal
//! strings when they do not fit in 64 bits); Gaussian rationals are
//! `{"re": [p, q], "im": [p, q]}`; polynomials are ascending coefficient
//! arrays; rational functions are `{"num": …, "den": …}`; factored rationals
//! are `{"lead": …, "factors": [{"root": …, "mult": k}]}`; AP polynomials are
//! `[{"freq": [p, q], "coeff": …}]`; mixed elements use the AP layout with a
//! rational function as coefficient; matrices are row-major nested arrays.
//!
//! Decoders enforce [`Limits`] so that untrusted input cannot request
//! unbounded work.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use crate::ap_factor::{APDetFactorization, APFactorization, MeanMotionResult, SplitTrace};
use crate::corona::{Approximation, CoronaFailure, CoronaOutcome, MDecomposition};
use crate::error::{Error, Result};
use crate::fredholm::FredholmReport;
use crate::matrix_wh::{Route, Trace, TraceValue, VerificationReport, WHFactorization};
use crate::rings::{
    APPoly, FactoredRational, GaussianRational, MixedElem, Point, Polynomial, RationalFunction, Ring, RingMatrix,
    RootFactor,
};
use crate::scalar_wh::ScalarWH;

/// Size bounds applied by every decoder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Rows and columns of a matrix.
    pub max_dim: usize,
    pub max_degree: usize,
    /// Absolute value of a root multiplicity.
    pub max_mult: i64,
    /// Factors of a factored rational, terms of an AP or mixed element.
    pub max_terms: usize,
    /// Decimal digits of an integer.
    pub max_digits: usize,
    /// Absolute value of a partial index.
    pub max_index: i64,
}

pub const LIMITS: Limits =
    Limits { max_dim: 12, max_degree: 64, max_mult: 64, max_terms: 64, max_digits: 120, max_index: 256 };

fn err(msg: impl Into<String>) -> Error {
    Error::Decode(msg.into())
}

fn kind(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

pub fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    match v {
        Value::Object(m) => m.get(name).ok_or_else(|| err(format!("missing field \"{name}\""))),
        other => Err(err(format!("expected an object with field \"{name}\", got {}", kind(other)))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(format!("{what}: expected an array, got {}", kind(v))))
}

pub fn decode_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.into())
            } else if let Some(u) = n.as_u64() {
                Ok(u.into())
            } else {
                Err(err(format!("{n} is not an integer")))
            }
        }
        Value::String(s) => {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(format!("\"{s}\" is not a decimal integer")));
            }
            if digits.len() > LIMITS.max_digits {
                return Err(err(format!("integer with {} digits exceeds the limit {}", digits.len(), LIMITS.max_digits)));
            }
            s.parse::<BigInt>().map_err(|e| err(e.to_string()))
        }
        other => Err(err(format!("expected an integer, got {}", kind(other)))),
    }
}

fn decode_small(v: &Value, what: &str, bound: i64) -> Result<i64> {
    let i = decode_int(v)?.to_i64().filter(|i| i.abs() <= bound);
    i.ok_or_else(|| err(format!("{what} must be an integer of absolute value at most {bound}")))
}

pub fn encode_int(i: &BigInt) -> Value {
    match i.to_i64() {
        Some(s) => json!(s),
        None => Value::String(i.to_string()),
    }
}

/// `[p, q]`, `q ≠ 0`.
pub fn decode_rational(v: &Value) -> Result<BigRational> {
    let a = array(v, "rational")?;
    if a.len() != 2 {
        return Err(err(format!("rational must be [p, q], got {} entries", a.len())));
    }
    let (p, q) = (decode_int(&a[0])?, decode_int(&a[1])?);
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(p, q))
}

pub fn encode_rational(q: &BigRational) -> Value {
    json!([encode_int(q.numer()), encode_int(q.denom())])
}

pub fn decode_gaussian(v: &Value) -> Result<GaussianRational> {
    if let Value::Object(m) = v {
        if let Some(k) = m.keys().find(|k| *k != "re" && *k != "im") {
            return Err(err(format!("unexpected field \"{k}\" in Gaussian rational")));
        }
        let part = |name: &str| m.get(name).map(decode_rational).unwrap_or_else(|| Ok(BigRational::zero()));
        return Ok(GaussianRational::new(part("re")?, part("im")?));
    }
    Err(err(format!("Gaussian rational must be {{\"re\": [p, q], \"im\": [p, q]}}, got {}", kind(v))))
}

pub fn encode_gaussian(z: &GaussianRational) -> Value {
    json!({"re": encode_rational(&z.re), "im": encode_rational(&z.im)})
}

pub fn decode_polynomial(v: &Value) -> Result<Polynomial> {
    let a = array(v, "polynomial")?;
    if a.len() > LIMITS.max_degree + 1 {
        return Err(err(format!("polynomial degree {} exceeds the limit {}", a.len() - 1, LIMITS.max_degree)));
    }
    Ok(Polynomial::new(a.iter().map(decode_gaussian).collect::<Result<_>>()?))
}

pub fn encode_polynomial(p: &Polynomial) -> Value {
    Value::Array(p.coeffs().iter().map(encode_gaussian).collect())
}

/// `{"num": …, "den": …}`; `den` defaults to 1.
pub fn decode_rational_function(v: &Value) -> Result<RationalFunction> {
    let num = decode_polynomial(field(v, "num")?)?;
    let den = match v.get("den") {
        Some(d) => decode_polynomial(d)?,
        None => Polynomial::one(),
    };
    RationalFunction::normalize(num, den)
}

pub fn encode_rational_function(f: &RationalFunction) -> Value {
    json!({"num": encode_polynomial(f.num()), "den": encode_polynomial(f.den())})
}

pub fn decode_factored(v: &Value) -> Result<FactoredRational> {
    let lead = decode_gaussian(field(v, "lead")?)?;
    if lead.is_zero() {
        return Err(Error::ZeroInput);
    }
    let factors = match v.get("factors") {
        Some(f) => array(f, "factors")?.as_slice(),
        None => &[],
    };
    if factors.len() > LIMITS.max_terms {
        return Err(err(format!("{} factors exceed the limit {}", factors.len(), LIMITS.max_terms)));
    }
    let mut out = Vec::with_capacity(factors.len());
    for f in factors {
        let root = decode_gaussian(field(f, "root")?)?;
        let mult = decode_small(field(f, "mult")?, "mult", LIMITS.max_mult)? as i32;
        let exact = match f.get("exact") {
            None => true,
            Some(Value::Bool(b)) => *b,
            Some(other) => return Err(err(format!("\"exact\" must be a boolean, got {}", kind(other)))),
        };
        out.push(RootFactor { exact, ..RootFactor::new(root, mult) });
    }
    let total: i64 = out.iter().map(|f| (f.mult as i64).abs()).sum();
    if total > LIMITS.max_mult * 4 {
        return Err(err(format!("total multiplicity {total} exceeds the limit {}", LIMITS.max_mult * 4)));
    }
    Ok(FactoredRational::from_factors(lead, out))
}

pub fn encode_factored(f: &FactoredRational) -> Value {
    let factors: Vec<Value> = f
        .factors()
        .iter()
        .map(|r| {
            json!({
                "root": encode_gaussian(&r.root),
                "mult": r.mult,
                "half": r.half.tag(),
                "exact": r.exact,
            })
        })
        .collect();
    json!({"lead": encode_gaussian(f.lead()), "factors": factors})
}

fn decode_terms<C>(v: &Value, what: &str, coeff: impl Fn(&Value) -> Result<C>) -> Result<Vec<(BigRational, C)>> {
    let a = array(v, what)?;
    if a.len() > LIMITS.max_terms {
        return Err(err(format!("{what} has {} terms, limit {}", a.len(), LIMITS.max_terms)));
    }
    a.iter().map(|t| Ok((decode_rational(field(t, "freq")?)?, coeff(field(t, "coeff")?)?))).collect()
}

pub fn decode_appoly(v: &Value) -> Result<APPoly> {
    Ok(APPoly::from_terms(decode_terms(v, "AP polynomial", decode_gaussian)?))
}

pub fn encode_appoly(p: &APPoly) -> Value {
    Value::Array(
        p.terms().iter().map(|(f, c)| json!({"freq": encode_rational(f), "coeff": encode_gaussian(c)})).collect(),
    )
}

pub fn decode_mixed(v: &Value) -> Result<MixedElem> {
    Ok(MixedElem::from_terms(decode_terms(v, "mixed element", decode_rational_function)?))
}

pub fn encode_mixed(p: &MixedElem) -> Value {
    Value::Array(
        p.terms()
            .iter()
            .map(|(f, c)| json!({"freq": encode_rational(f), "coeff": encode_rational_function(c)}))
            .collect(),
    )
}

pub fn decode_matrix<R: Ring>(v: &Value, entry: impl Fn(&Value) -> Result<R>) -> Result<RingMatrix<R>> {
    let rows = array(v, "matrix")?;
    if rows.is_empty() || rows.len() > LIMITS.max_dim {
        return Err(err(format!("matrix must have 1..={} rows, got {}", LIMITS.max_dim, rows.len())));
    }
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let r = array(r, "matrix row")?;
        if r.is_empty() || r.len() > LIMITS.max_dim {
            return Err(err(format!("matrix rows must have 1..={} entries, got {}", LIMITS.max_dim, r.len())));
        }
        out.push(r.iter().map(&entry).collect::<Result<Vec<R>>>()?);
    }
    RingMatrix::from_rows(out).map_err(|_| err("matrix rows have different lengths"))
}

pub fn encode_matrix<R: Ring>(m: &RingMatrix<R>, entry: impl Fn(&R) -> Value) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(&entry).collect())).collect())
}

pub fn decode_vector<R>(v: &Value, entry: impl Fn(&Value) -> Result<R>) -> Result<Vec<R>> {
    let a = array(v, "vector")?;
    if a.len() > LIMITS.max_dim * LIMITS.max_dim {
        return Err(err(format!("vector of length {} exceeds the limit", a.len())));
    }
    a.iter().map(entry).collect()
}

/// Ring tag of a self-describing input document.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingTag {
    Gaussian,
    Polynomial,
    Rational,
    Factored,
    AlmostPeriodic,
    Mixed,
}

impl RingTag {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "gaussian" => RingTag::Gaussian,
            "polynomial" => RingTag::Polynomial,
            "rational" => RingTag::Rational,
            "factored" => RingTag::Factored,
            "ap" => RingTag::AlmostPeriodic,
            "mixed" => RingTag::Mixed,
            other => {
                return Err(err(format!(
                    "unknown ring \"{other}\" (expected gaussian, polynomial, rational, factored, ap or mixed)"
                )))
            }
        })
    }

    pub fn tag(self) -> &'static str {
        match self {
            RingTag::Gaussian => "gaussian",
            RingTag::Polynomial => "polynomial",
            RingTag::Rational => "rational",
            RingTag::Factored => "factored",
            RingTag::AlmostPeriodic => "ap",
            RingTag::Mixed => "mixed",
        }
    }

    pub fn of_document(v: &Value) -> Result<Self> {
        match field(v, "ring")? {
            Value::String(s) => Self::parse(s),
            other => Err(err(format!("\"ring\" must be a string, got {}", kind(other)))),
        }
    }
}

/// A matrix over one of the supported rings.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyMatrix {
    Gaussian(RingMatrix<GaussianRational>),
    Polynomial(RingMatrix<Polynomial>),
    Rational(RingMatrix<RationalFunction>),
    AlmostPeriodic(RingMatrix<APPoly>),
    Mixed(RingMatrix<MixedElem>),
}

impl AnyMatrix {
    pub fn decode(ring: RingTag, v: &Value) -> Result<Self> {
        Ok(match ring {
            RingTag::Gaussian => AnyMatrix::Gaussian(decode_matrix(v, decode_gaussian)?),
            RingTag::Polynomial => AnyMatrix::Polynomial(decode_matrix(v, decode_polynomial)?),
            RingTag::Rational => AnyMatrix::Rational(decode_matrix(v, decode_rational_function)?),
            RingTag::AlmostPeriodic => AnyMatrix::AlmostPeriodic(decode_matrix(v, decode_appoly)?),
            RingTag::Mixed => AnyMatrix::Mixed(decode_matrix(v, decode_mixed)?),
            RingTag::Factored => return Err(err("matrices over the factored ring are not supported; use \"rational\"")),
        })
    }

    pub fn encode(&self) -> Value {
        match self {
            AnyMatrix::Gaussian(m) => encode_matrix(m, encode_gaussian),
            AnyMatrix::Polynomial(m) => encode_matrix(m, encode_polynomial),
            AnyMatrix::Rational(m) => encode_matrix(m, encode_rational_function),
            AnyMatrix::AlmostPeriodic(m) => encode_matrix(m, encode_appoly),
            AnyMatrix::Mixed(m) => encode_matrix(m, encode_mixed),
        }
    }
}

pub fn encode_point(p: &Point) -> Value {
    match p {
        Point::Exact(z) => json!({"kind": "exact", "value": encode_gaussian(z), "display": z.to_string()}),
        Point::Approx(z) => json!({"kind": "approx", "value": encode_gaussian(z), "display": p.to_string()}),
        Point::Infinity => json!({"kind": "infinity", "display": "∞"}),
    }
}

pub fn encode_scalar_wh(w: &ScalarWH) -> Value {
    json!({
        "gamma_minus": encode_factored(&w.gamma_minus),
        "k": w.k,
        "gamma_plus": encode_factored(&w.gamma_plus),
        "exact": w.is_exact(),
    })
}

pub fn decode_scalar_wh(v: &Value) -> Result<ScalarWH> {
    Ok(ScalarWH {
        gamma_minus: decode_factored(field(v, "gamma_minus")?)?,
        k: decode_small(field(v, "k")?, "k", LIMITS.max_index)?,
        gamma_plus: decode_factored(field(v, "gamma_plus")?)?,
    })
}

fn encode_trace(t: &Trace) -> Value {
    let steps: Vec<Value> = t
        .entries
        .iter()
        .map(|(label, value)| match value {
            TraceValue::Text(s) => json!({"label": label, "text": s}),
            TraceValue::Matrix(m) => json!({"label": label, "matrix": encode_matrix(m, encode_rational_function)}),
        })
        .collect();
    json!({"route": t.route.tag(), "steps": steps})
}

pub fn encode_wh_factorization(f: &WHFactorization) -> Value {
    json!({
        "g_minus": encode_matrix(&f.g_minus, encode_rational_function),
        "partial_indices": f.partial_indices,
        "g_plus": encode_matrix(&f.g_plus, encode_rational_function),
        "bounded": f.bounded,
        "trace": encode_trace(&f.trace),
    })
}

/// Reads the factors and indices of an encoded factorization; the trace is
/// not needed for verification and is not read back.
pub fn decode_wh_factorization(v: &Value) -> Result<WHFactorization> {
    let g_minus = decode_matrix(field(v, "g_minus")?, decode_rational_function)?;
    let g_plus = decode_matrix(field(v, "g_plus")?, decode_rational_function)?;
    let partial_indices =
        decode_vector(field(v, "partial_indices")?, |k| decode_small(k, "partial index", LIMITS.max_index))?;
    let bounded = field(v, "bounded").ok().and_then(Value::as_bool).unwrap_or(true);
    Ok(WHFactorization { g_minus, partial_indices, g_plus, bounded, trace: Trace::new(Route::Given) })
}

pub fn encode_verification(r: &VerificationReport) -> Value {
    let checks: Vec<Value> =
        r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail})).collect();
    json!({"all_passed": r.all_passed(), "checks": checks})
}

pub fn encode_ap_det(d: &APDetFactorization) -> Value {
    json!({
        "gamma_minus": encode_gaussian(&d.gamma_minus),
        "kappa": encode_rational(&d.kappa),
        "gamma_plus": encode_gaussian(&d.gamma_plus),
    })
}

pub fn decode_ap_det(v: &Value) -> Result<APDetFactorization> {
    Ok(APDetFactorization {
        gamma_minus: decode_gaussian(field(v, "gamma_minus")?)?,
        kappa: decode_rational(field(v, "kappa")?)?,
        gamma_plus: decode_gaussian(field(v, "gamma_plus")?)?,
    })
}

fn encode_split(s: &SplitTrace) -> Value {
    json!({
        "minus": s.minus.iter().map(encode_appoly).collect::<Vec<_>>(),
        "plus": s.plus.iter().map(encode_appoly).collect::<Vec<_>>(),
    })
}

pub fn encode_ap_factorization(f: &APFactorization) -> Value {
    json!({
        "g_minus": encode_matrix(&f.g_minus, encode_appoly),
        "partial_ap_indices": f.partial_ap_indices.iter().map(encode_rational).collect::<Vec<_>>(),
        "g_plus": encode_matrix(&f.g_plus, encode_appoly),
        "route": f.route.tag(),
        "split": encode_split(&f.split),
    })
}

pub fn decode_ap_factorization(v: &Value) -> Result<APFactorization> {
    Ok(APFactorization {
        g_minus: decode_matrix(field(v, "g_minus")?, decode_appoly)?,
        partial_ap_indices: decode_vector(field(v, "partial_ap_indices")?, decode_rational)?,
        g_plus: decode_matrix(field(v, "g_plus")?, decode_appoly)?,
        route: Route::Given,
        split: SplitTrace::default(),
    })
}

pub fn encode_mean_motion(m: &MeanMotionResult) -> Value {
    let mut o = Map::new();
    o.insert("kappa".into(), m.kappa.as_ref().map(encode_rational).unwrap_or(Value::Null));
    o.insert("method".into(), json!(m.method.tag()));
    o.insert("invertible".into(), m.invertible.map(Value::Bool).unwrap_or(Value::Null));
    if let Some(n) = &m.note {
        o.insert("note".into(), json!(n));
    }
    Value::Object(o)
}

pub fn encode_report(r: &FredholmReport) -> Value {
    let opt = |v: Option<Value>| v.unwrap_or(Value::Null);
    json!({
        "fredholm": r.fredholm.tag(),
        "partial_indices": opt(r.partial_indices.as_ref().map(|v| json!(v))),
        "dim_ker": opt(r.dim_ker.map(|v| json!(v))),
        "dim_coker": opt(r.dim_coker.map(|v| json!(v))),
        "index": opt(r.index.map(|v| json!(v))),
        "equivalence": r.equivalence.tag(),
        "justification": r.justification,
        "coburn": r.coburn.tag(),
        "uniform_in_p": r.uniform_in_p,
        "det_mixed": opt(r.det_mixed.as_ref().map(encode_mixed)),
        "notes": r.notes,
    })
}

fn encode_failure(f: &CoronaFailure) -> Value {
    json!({
        "algebra": f.algebra.tag(),
        "witness": f.witness.as_ref().map(encode_point).unwrap_or(Value::Null),
        "common_factor": f.common_factor.as_ref().map(encode_appoly).unwrap_or(Value::Null),
        "reason": f.reason,
    })
}

fn encode_approximation<R>(a: &Approximation<R>, entry: &impl Fn(&R) -> Value) -> Value {
    json!({"residual": entry(&a.residual), "norm_bound": encode_rational(&a.norm_bound), "terms": a.terms})
}

fn encode_decomposition(d: &MDecomposition) -> Value {
    json!({
        "r": encode_rational_function(&d.r),
        "tuple": d.tuple.iter().map(encode_rational_function).collect::<Vec<_>>(),
        "canonical": d.canonical.as_ref().map(encode_scalar_wh).unwrap_or(Value::Null),
    })
}

pub fn encode_corona<R>(o: &CoronaOutcome<R>, entry: impl Fn(&R) -> Value) -> Value {
    match o {
        CoronaOutcome::Certificate(c) => json!({
            "status": "certificate",
            "algebra": c.algebra.tag(),
            "solution": c.solution.iter().map(&entry).collect::<Vec<_>>(),
            "approximation": c.approximation.as_ref().map(|a| encode_approximation(a, &entry)).unwrap_or(Value::Null),
            "decomposition": c.decomposition.as_ref().map(encode_decomposition).unwrap_or(Value::Null),
        }),
        CoronaOutcome::Failure(f) => json!({"status": "failure", "failure": encode_failure(f)}),
        CoronaOutcome::Unresolved(reason) => json!({"status": "unresolved", "reason": reason}),
    }
}
