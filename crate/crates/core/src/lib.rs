//! Exact Wiener–Hopf factorization of rational and almost periodic matrix
//! symbols, one-sided inverses of rectangular matrices over commutative rings,
//! and Fredholm diagnostics for the associated Toeplitz operators.

pub mod ap_factor;
pub mod codec;
pub mod corona;
pub mod error;
pub mod fredholm;
pub mod linalg;
pub mod matrix_wh;
pub mod rings;
pub mod scalar_wh;

pub use error::{Error, Result};
