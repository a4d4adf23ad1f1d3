//! One-sided inverses of rectangular matrices over a commutative ring, built
//! from maximal minors and a Bezout certificate, and the square completion
//! of an `n × (n−1)` left-invertible matrix.
//!
//! Row and column indices are 0-based throughout.

mod calibration;
mod diagnose;

pub use calibration::{calibrate_signs, printed_sign_check, CalibrationReport, SignCheck};
pub use diagnose::{
    multi_xgcd, one_sided_diagnose, BezoutOutcome, BezoutSolver, Diagnosis, FieldSolver, PolynomialSolver, Side,
};

use crate::error::{Error, Result};
use crate::rings::{dot, Ring, RingMatrix};

/// All `m`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        // Advance the rightmost index that still has room.
        let Some(i) = (0..m).rev().find(|&i| cur[i] < n - m + i) else { break };
        cur[i] += 1;
        for j in i + 1..m {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Maximal minors paired with the row subsets they come from.
#[derive(Clone, Debug, PartialEq)]
pub struct MinorVector<R: Ring> {
    pub subsets: Vec<Vec<usize>>,
    pub values: Vec<R>,
}

impl<R: Ring> MinorVector<R> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Σ c_k d_k`.
    pub fn pair(&self, c: &[R]) -> R {
        dot(c, &self.values)
    }
}

/// `d_k = det Φ_{I_k}` for every `m`-subset `I_k` of the rows of the `n × m`
/// matrix `phi`.
pub fn maximal_minors<R: Ring>(phi: &RingMatrix<R>) -> Result<MinorVector<R>> {
    let (n, m) = (phi.rows(), phi.cols());
    if m > n {
        return Err(Error::ShapeMismatch(format!("maximal minors need rows ≥ cols, got {n}×{m}")));
    }
    let subsets = subsets(n, m);
    let values = subsets.iter().map(|s| phi.select_rows(s).det()).collect::<Result<Vec<_>>>()?;
    Ok(MinorVector { subsets, values })
}

/// The calibrated diagonal sign matrix `S_m` used by [`left_inverse_general`]
/// and [`left_inverse_corank1`]. With [`adjoint_submatrix`] built from local
/// cofactor positions, `Φ*_I·Φ = det Φ_I · I`, so every sign is `+1`;
/// [`calibrate_signs`] re-derives this by exhaustive search.
pub fn sign_matrix(m: usize) -> Vec<i32> {
    vec![1; m]
}

/// `Φ*_I`: the `m × n` matrix whose columns at the rows in `subset` hold the
/// classical adjugate of `Φ_I` and whose other columns are zero. Satisfies
/// `Φ*_I · Φ = det Φ_I · S_m`.
pub fn adjoint_submatrix<R: Ring>(phi: &RingMatrix<R>, subset: &[usize]) -> Result<RingMatrix<R>> {
    let (n, m) = (phi.rows(), phi.cols());
    if subset.len() != m || subset.iter().any(|&i| i >= n) || subset.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ShapeMismatch(format!(
            "row subset {subset:?} is not an increasing {m}-subset of 0..{n}"
        )));
    }
    let adj = phi.select_rows(subset).adjugate()?;
    let mut out = RingMatrix::zeros(m, n);
    for (local, &p) in subset.iter().enumerate() {
        for q in 0..m {
            out.set(q, p, adj.get(q, local).clone());
        }
    }
    Ok(out)
}

/// `Δ*` with `Δ*_k = det (Ψᵀ)_{I_k}`; by Cauchy–Binet `Δ*·Δ(Φ) = 1` whenever
/// `ΨΦ = I`.
pub fn delta_left_inverse_from_psi<R: Ring>(psi: &RingMatrix<R>, phi: &RingMatrix<R>) -> Result<MinorVector<R>> {
    if psi.rows() != phi.cols() || psi.cols() != phi.rows() {
        return Err(Error::ShapeMismatch(format!(
            "Ψ is {}×{}, Φ is {}×{}",
            psi.rows(),
            psi.cols(),
            phi.rows(),
            phi.cols()
        )));
    }
    if !psi.mul(phi)?.is_identity() {
        return Err(Error::NotALeftInverse);
    }
    maximal_minors(&psi.transpose())
}

/// `Ψ = S_m · Σ_k Δ*_k Φ*_{I_k}`, a left inverse of `phi` whenever
/// `Δ*·Δ(Φ) = 1`.
pub fn left_inverse_general<R: Ring>(phi: &RingMatrix<R>, delta_star: &[R]) -> Result<RingMatrix<R>> {
    let minors = maximal_minors(phi)?;
    if delta_star.len() != minors.len() {
        return Err(Error::ShapeMismatch(format!(
            "certificate has {} entries, expected {}",
            delta_star.len(),
            minors.len()
        )));
    }
    if !minors.pair(delta_star).is_one() {
        return Err(Error::BezoutCertificateInvalid);
    }
    let (n, m) = (phi.rows(), phi.cols());
    let mut psi = RingMatrix::zeros(m, n);
    for (c, subset) in delta_star.iter().zip(&minors.subsets) {
        if c.is_zero() {
            continue;
        }
        psi = psi.add(&adjoint_submatrix(phi, subset)?.scale(c))?;
    }
    Ok(apply_row_signs(&psi, &sign_matrix(m)))
}

fn apply_row_signs<R: Ring>(m: &RingMatrix<R>, signs: &[i32]) -> RingMatrix<R> {
    let mut out = m.clone();
    for (i, &s) in signs.iter().enumerate() {
        if s < 0 {
            for j in 0..m.cols() {
                out.set(i, j, -m.get(i, j).clone());
            }
        }
    }
    out
}

/// `Δ_{p;·}(Φ)` for `p = 0..n`: minors of an `n × (n−1)` matrix ordered by
/// the omitted row.
pub fn minors_by_omitted_row<R: Ring>(phi: &RingMatrix<R>) -> Result<Vec<R>> {
    if phi.cols() + 1 != phi.rows() {
        return Err(Error::ShapeMismatch(format!("expected n×(n−1), got {}×{}", phi.rows(), phi.cols())));
    }
    (0..phi.rows()).map(|p| phi.remove_row(p).det()).collect()
}

/// `Δ_{·;p}(Ψ)` for `p = 0..n`: minors of an `(n−1) × n` matrix ordered by
/// the omitted column.
pub fn minors_by_omitted_col<R: Ring>(psi: &RingMatrix<R>) -> Result<Vec<R>> {
    minors_by_omitted_row(&psi.transpose())
}

/// Left inverse of an `n × (n−1)` matrix from `(n−2) × (n−2)` minors:
/// row `j` is `(−1)^j · Δ* · K_j · Ĩ_n` (1-based `j`), where `K_j` is the
/// skew-symmetric matrix with `(p, s)` entry `Δ_{p,s;j}(Φ)` for `p < s` and
/// `Ĩ_n = diag(1, −1, 1, …)`. The certificate `delta_star` pairs with the
/// minors ordered by omitted row ([`minors_by_omitted_row`]).
pub fn left_inverse_corank1<R: Ring>(phi: &RingMatrix<R>, delta_star: &[R]) -> Result<RingMatrix<R>> {
    let omitted = minors_by_omitted_row(phi)?;
    let n = phi.rows();
    if delta_star.len() != n {
        return Err(Error::ShapeMismatch(format!("certificate has {} entries, expected {n}", delta_star.len())));
    }
    if !dot(delta_star, &omitted).is_one() {
        return Err(Error::BezoutCertificateInvalid);
    }
    let m = n - 1;
    let mut psi = RingMatrix::zeros(m, n);
    for j in 0..m {
        let without_col = phi.remove_col(j);
        // Δ_{p,s;j} for p < s.
        let mut k = vec![vec![R::zero(); n]; n];
        for p in 0..n {
            for s in p + 1..n {
                let rows: Vec<usize> = (0..n).filter(|&i| i != p && i != s).collect();
                let d = without_col.select_rows(&rows).det()?;
                k[s][p] = -d.clone();
                k[p][s] = d;
            }
        }
        // 1-based row index j+1 gives the factor (−1)^{j+1}.
        let row_sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
        for s in 0..n {
            let col: Vec<R> = (0..n).map(|p| k[p][s].clone()).collect();
            let mut v = dot(delta_star, &col);
            // Ĩ_n entry for 1-based column s+1 is (−1)^s.
            if (row_sign < 0) != (s % 2 == 1) {
                v = -v;
            }
            psi.set(j, s, v);
        }
    }
    Ok(apply_row_signs(&psi, &sign_matrix(m)))
}

/// Square completion of an `n × (n−1)` matrix and its left inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct Completion<R: Ring> {
    /// `Φ_e = [Φ  N]`.
    pub phi_e: RingMatrix<R>,
    /// `Ψ_e = [Ψ; Ñ]`.
    pub psi_e: RingMatrix<R>,
    /// `det Φ_e = det Ψ_e = (−1)^{n−1}`.
    pub det_value: R,
}

impl<R: Ring> Completion<R> {
    /// The appended column `N`.
    pub fn n_col(&self) -> Vec<R> {
        self.phi_e.col(self.phi_e.cols() - 1)
    }

    /// The appended row `Ñ`.
    pub fn n_row(&self) -> Vec<R> {
        self.psi_e.row(self.psi_e.rows() - 1)
    }
}

/// `N_j = (−1)^{j−1} Δ_{·;j}(Ψ)`, `Ñ_j = (−1)^{j−1} Δ_{j;·}(Φ)` (1-based `j`),
/// giving `Ψ_e Φ_e = Φ_e Ψ_e = I_n`.
pub fn complete<R: Ring>(phi: &RingMatrix<R>, psi: &RingMatrix<R>) -> Result<Completion<R>> {
    let n = phi.rows();
    if n == 0 || phi.cols() + 1 != n || psi.rows() + 1 != n || psi.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "completion needs Φ n×(n−1) and Ψ (n−1)×n, got {}×{} and {}×{}",
            phi.rows(),
            phi.cols(),
            psi.rows(),
            psi.cols()
        )));
    }
    if !psi.mul(phi)?.is_identity() {
        return Err(Error::NotALeftInverse);
    }
    let alt = |v: Vec<R>| -> Vec<R> {
        v.into_iter().enumerate().map(|(j, x)| if j % 2 == 0 { x } else { -x }).collect()
    };
    let n_col = alt(minors_by_omitted_col(psi)?);
    let n_row = alt(minors_by_omitted_row(phi)?);
    let phi_e = phi.push_col(&n_col)?;
    let psi_e = psi.push_row(&n_row)?;
    let det_value = if (n - 1).is_multiple_of(2) { R::one() } else { -R::one() };
    Ok(Completion { phi_e, psi_e, det_value })
}
