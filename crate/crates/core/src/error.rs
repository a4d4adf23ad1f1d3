use num_rational::BigRational;
use thiserror::Error;

use crate::rings::Point;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports. Variants that carry a location use
/// [`Point`], which says whether the location is exact.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("root {0} lies within tolerance of the real line but is not real")]
    RootClassificationAmbiguous(Box<Point>),
    #[error("root {0} is not a Gaussian rational; exact construction unavailable")]
    InexactRoot(Box<Point>),
    #[error("supplied matrix is not a one-sided inverse")]
    NotALeftInverse,
    #[error("Bezout certificate does not satisfy Δ*·Δ = 1")]
    BezoutCertificateInvalid,
    #[error("entry {index} is not in {algebra}")]
    MembershipViolation { index: usize, algebra: String },
    #[error("symbol is singular on the extended real line at {0}")]
    SymbolSingularOnLine(Box<Point>),
    #[error("pole on the extended real line at {0}")]
    RealPole(Box<Point>),
    #[error("|f| is below tolerance on the contour near ξ = {0}")]
    NearZeroOnContour(f64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("common zero at {0}: corona condition fails")]
    CommonZero(Box<Point>),
    #[error("partial indices are not all zero")]
    IndexNonzero,
    #[error("certificate invalid: {0}")]
    CertificateInvalid(String),
    #[error("G(ξ)G(ξ)* is not the identity")]
    NotUnitary,
    #[error("G(ξ)G(ξ)ᵀ is not the identity")]
    NotOrthogonal,
    #[error("shape violation: {0}")]
    ShapeViolation(String),
    #[error("input is zero")]
    ZeroInput,
    #[error("G·Φ⁺ differs from Φ⁻")]
    RhResidual,
    #[error("frequency split unavailable; offending frequencies {}", fmt_freqs(.offending))]
    SplitUnavailable { offending: Vec<BigRational> },
    #[error("{0}")]
    Unresolved(String),
    #[error("invalid input: {0}")]
    Decode(String),
}

fn fmt_freqs(f: &[BigRational]) -> String {
    let parts: Vec<String> = f.iter().map(|q| q.to_string()).collect();
    format!("[{}]", parts.join(", "))
}
