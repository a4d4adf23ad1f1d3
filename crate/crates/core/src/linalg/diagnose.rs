//! Reduction of one-sided matrix invertibility to a scalar Bezout problem on
//! the maximal minors.

use crate::error::Result;
use crate::rings::{Point, Polynomial, Ring, RingMatrix};

use super::{left_inverse_general, maximal_minors, MinorVector};

/// Verdict of a scalar Bezout problem `Σ g_j h_j = 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum BezoutOutcome<R> {
    Solved(Vec<R>),
    /// No solution exists; `witness` is a common zero when one is known.
    NoSolution { witness: Option<Point>, reason: String },
    Unresolved(String),
}

/// A ring-specific solver for `Σ g_j h_j = 1`.
pub trait BezoutSolver<R: Ring> {
    fn solve(&self, h: &[R]) -> BezoutOutcome<R>;
}

/// Solver for fields: any nonzero entry is invertible.
#[derive(Clone, Copy, Debug, Default)]
pub struct FieldSolver;

impl<R: Ring> BezoutSolver<R> for FieldSolver {
    fn solve(&self, h: &[R]) -> BezoutOutcome<R> {
        for (j, x) in h.iter().enumerate() {
            if let Some(inv) = x.unit_inverse() {
                let mut g = vec![R::zero(); h.len()];
                g[j] = inv;
                return BezoutOutcome::Solved(g);
            }
        }
        BezoutOutcome::NoSolution { witness: None, reason: "all entries are zero".into() }
    }
}

/// Solver for `Q(i)[x]` by iterated extended Euclid.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolynomialSolver;

impl BezoutSolver<Polynomial> for PolynomialSolver {
    fn solve(&self, h: &[Polynomial]) -> BezoutOutcome<Polynomial> {
        match multi_xgcd(h) {
            (g, coeffs) if g.is_one() => BezoutOutcome::Solved(coeffs),
            (g, _) if g.is_zero() => {
                BezoutOutcome::NoSolution { witness: None, reason: "all entries are zero".into() }
            }
            (g, _) => BezoutOutcome::NoSolution { witness: None, reason: format!("common factor {g}") },
        }
    }
}

/// Monic `g = gcd(h_1, …, h_n)` and coefficients `a` with `Σ a_j h_j = g`.
pub fn multi_xgcd(h: &[Polynomial]) -> (Polynomial, Vec<Polynomial>) {
    let mut g = Polynomial::zero();
    let mut coeffs: Vec<Polynomial> = Vec::with_capacity(h.len());
    for hj in h {
        let (ng, s, t) = Polynomial::xgcd(&g, hj);
        for c in coeffs.iter_mut() {
            *c = &*c * &s;
        }
        coeffs.push(t);
        g = ng;
    }
    (g, coeffs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Outcome of [`one_sided_diagnose`].
#[derive(Clone, Debug, PartialEq)]
pub enum Diagnosis<R: Ring> {
    /// `coefficients · minors = 1` and `inverse` is a one-sided inverse
    /// (`inverse·Φ = I` for the left side, `Φ·inverse = I` for the right).
    Certificate { minors: MinorVector<R>, coefficients: Vec<R>, inverse: RingMatrix<R> },
    NotInvertible { minors: MinorVector<R>, witness: Option<Point>, reason: String },
    Unresolved { minors: MinorVector<R>, reason: String },
}

/// Left (or, by transposition, right) invertibility of `phi` via the Bezout
/// problem on its maximal minors.
pub fn one_sided_diagnose<R: Ring>(
    phi: &RingMatrix<R>,
    side: Side,
    solver: &dyn BezoutSolver<R>,
) -> Result<Diagnosis<R>> {
    let tall = match side {
        Side::Left => phi.clone(),
        Side::Right => phi.transpose(),
    };
    let minors = maximal_minors(&tall)?;
    Ok(match solver.solve(&minors.values) {
        BezoutOutcome::Solved(coefficients) => {
            if !minors.pair(&coefficients).is_one() {
                return Err(crate::Error::BezoutCertificateInvalid);
            }
            let left = left_inverse_general(&tall, &coefficients)?;
            let inverse = match side {
                Side::Left => left,
                Side::Right => left.transpose(),
            };
            Diagnosis::Certificate { minors, coefficients, inverse }
        }
        BezoutOutcome::NoSolution { witness, reason } => Diagnosis::NotInvertible { minors, witness, reason },
        BezoutOutcome::Unresolved(reason) => Diagnosis::Unresolved { minors, reason },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::GaussianRational;

    fn scalar(v: i64) -> GaussianRational {
        GaussianRational::from_ints(v, 0)
    }

    fn qm(rows: &[&[i64]]) -> RingMatrix<GaussianRational> {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| scalar(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn field_diagnosis() {
        let phi = qm(&[&[1, 0], &[0, 1], &[0, 0]]);
        match one_sided_diagnose(&phi, Side::Left, &FieldSolver).unwrap() {
            Diagnosis::Certificate { coefficients, inverse, .. } => {
                assert_eq!(coefficients, vec![scalar(1), scalar(0), scalar(0)]);
                assert!(inverse.mul(&phi).unwrap().is_identity());
            }
            other => panic!("{other:?}"),
        }
        let flat = qm(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert!(matches!(
            one_sided_diagnose(&flat, Side::Left, &FieldSolver).unwrap(),
            Diagnosis::NotInvertible { .. }
        ));
    }

    #[test]
    fn right_side_by_transposition() {
        let psi = qm(&[&[1, 0, 2], &[0, 1, 3]]);
        match one_sided_diagnose(&psi, Side::Right, &FieldSolver).unwrap() {
            Diagnosis::Certificate { inverse, .. } => assert!(psi.mul(&inverse).unwrap().is_identity()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn polynomial_diagnosis() {
        let x = Polynomial::x();
        let one = Polynomial::one();
        // Column [x, x + 1]: minors coprime.
        let phi = RingMatrix::from_rows(vec![vec![x.clone()], vec![&x + &one]]).unwrap();
        match one_sided_diagnose(&phi, Side::Left, &PolynomialSolver).unwrap() {
            Diagnosis::Certificate { inverse, .. } => assert!(inverse.mul(&phi).unwrap().is_identity()),
            other => panic!("{other:?}"),
        }
        // Column [x, x²]: common factor x.
        let phi = RingMatrix::from_rows(vec![vec![x.clone()], vec![&x * &x]]).unwrap();
        assert!(matches!(
            one_sided_diagnose(&phi, Side::Left, &PolynomialSolver).unwrap(),
            Diagnosis::NotInvertible { .. }
        ));
    }
}
