//! Per-ring JSON coding and Bezout solver selection.

use serde_json::Value;
use whfactor_core::codec;
use whfactor_core::corona::{AlmostPeriodicSolver, HardySolver, MeromorphicSolver};
use whfactor_core::linalg::{BezoutSolver, FieldSolver, PolynomialSolver};
use whfactor_core::rings::{APPoly, GaussianRational, Half, MixedElem, Polynomial, RationalFunction, Ring};
use whfactor_core::Result;

/// Function algebra requested for rational one-sided inverses and corona
/// problems: `H` (bounded analytic) or `M` (bounded on the line).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraArg {
    Hardy,
    Meromorphic,
}

pub trait IoRing: Ring + std::fmt::Display + 'static {
    fn decode(v: &Value) -> Result<Self>;
    fn encode(&self) -> Value;
    /// Solver for one-sided inverses; `None` when the ring has none.
    fn solver(half: Half, algebra: AlgebraArg) -> Option<Box<dyn BezoutSolver<Self>>>;
}

impl IoRing for GaussianRational {
    fn decode(v: &Value) -> Result<Self> {
        codec::decode_gaussian(v)
    }
    fn encode(&self) -> Value {
        codec::encode_gaussian(self)
    }
    fn solver(_: Half, _: AlgebraArg) -> Option<Box<dyn BezoutSolver<Self>>> {
        Some(Box::new(FieldSolver))
    }
}

impl IoRing for Polynomial {
    fn decode(v: &Value) -> Result<Self> {
        codec::decode_polynomial(v)
    }
    fn encode(&self) -> Value {
        codec::encode_polynomial(self)
    }
    fn solver(_: Half, _: AlgebraArg) -> Option<Box<dyn BezoutSolver<Self>>> {
        Some(Box::new(PolynomialSolver))
    }
}

impl IoRing for RationalFunction {
    fn decode(v: &Value) -> Result<Self> {
        codec::decode_rational_function(v)
    }
    fn encode(&self) -> Value {
        codec::encode_rational_function(self)
    }
    fn solver(half: Half, algebra: AlgebraArg) -> Option<Box<dyn BezoutSolver<Self>>> {
        Some(match algebra {
            AlgebraArg::Hardy => Box::new(HardySolver(half)),
            AlgebraArg::Meromorphic => Box::new(MeromorphicSolver(half)),
        })
    }
}

impl IoRing for APPoly {
    fn decode(v: &Value) -> Result<Self> {
        codec::decode_appoly(v)
    }
    fn encode(&self) -> Value {
        codec::encode_appoly(self)
    }
    fn solver(half: Half, _: AlgebraArg) -> Option<Box<dyn BezoutSolver<Self>>> {
        Some(Box::new(AlmostPeriodicSolver(half)))
    }
}

impl IoRing for MixedElem {
    fn decode(v: &Value) -> Result<Self> {
        codec::decode_mixed(v)
    }
    fn encode(&self) -> Value {
        codec::encode_mixed(self)
    }
    fn solver(_: Half, _: AlgebraArg) -> Option<Box<dyn BezoutSolver<Self>>> {
        None
    }
}
