//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the test
//! harness so the lines always reach the terminal; exits nonzero on failure.

use std::path::Path;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use num_traits::Signed;
use serde_json::Value;
use whfactor_core::ap_factor::{
    ap_factor_via_row, ap_project, verify_ap_factorization, APDetFactorization, APMatrix,
};
use whfactor_core::corona::{corona_solve_hplus, corona_solve_mplus, Algebra, CoronaOutcome};
use whfactor_core::fredholm::{report_from_indices, special_orthogonal, special_unitary, Verdict};
use whfactor_core::linalg::{calibrate_signs, complete, delta_left_inverse_from_psi, left_inverse_general, maximal_minors};
use whfactor_core::matrix_wh::{
    apply_inverse, factor_via_rh, factor_via_row, toeplitz_apply, verify_factorization, RMatrix, WHFactorization,
};
use whfactor_core::rings::{
    APPoly, FactoredRational, GaussianRational, Half, Point, Polynomial, RationalFunction, Ring, RingMatrix,
};
use whfactor_core::scalar_wh::{wh_factor_scalar, winding_exact, winding_numeric, ScalarWH};
use whfactor_core::Error;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("one-sided inverses and completions", criterion_1),
        ("sign calibration", criterion_2),
        ("corona suite", criterion_3),
        ("scalar factorization", criterion_4),
        ("matrix factorization", criterion_5),
        ("Fredholm diagnostics", criterion_6),
        ("almost periodic suite", criterion_7),
        ("CLI determinism and verify round-trip", criterion_8),
    ];
    let mut failed = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{secs:.2}s]", k + 1),
            Err(why) => {
                println!("FAIL criterion {} ({name}): {why} [{secs:.2}s]", k + 1);
                failed.push(k + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}

// ---------------------------------------------------------------------------
// Shared helpers

fn gr(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

fn small_gr(rng: &mut ChaCha8Rng) -> GaussianRational {
    gr(rng.gen_range(-3..=3), rng.gen_range(-3..=3))
}

fn nonzero_gr(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let z = small_gr(rng);
        if !z.is_zero() {
            return z;
        }
    }
}

fn poly_deg2(rng: &mut ChaCha8Rng) -> Polynomial {
    let deg = rng.gen_range(0..=2);
    Polynomial::new((0..=deg).map(|_| small_gr(rng)).collect())
}

fn rf_const(c: i64) -> RationalFunction {
    RationalFunction::constant(gr(c, 0))
}

fn lin(a: &GaussianRational) -> Polynomial {
    Polynomial::linear(a)
}

/// `(ξ − i)/(ξ + i)`.
fn r() -> RationalFunction {
    RationalFunction::r()
}

/// `1/(ξ² + 1)`.
fn bump() -> RationalFunction {
    RationalFunction::frac(Polynomial::one(), Polynomial::from_ints(&[1, 0, 1]))
}

fn rmat(rows: Vec<Vec<RationalFunction>>) -> RMatrix {
    RingMatrix::from_rows(rows).unwrap()
}

/// Lexicographic `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..n {
            cur.push(j);
            go(j + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Cofactor expansion along the first row; independent of the library's
/// elimination.
fn laplace<R: Ring>(m: &RingMatrix<R>) -> R {
    let n = m.rows();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = R::zero();
    for j in 0..n {
        let a = m.get(0, j);
        if a.is_zero() {
            continue;
        }
        let minor = m.remove_row(0).remove_col(j);
        let term = a.mul_ref(&laplace(&minor));
        acc = if j % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
    }
    acc
}

fn mat_mul<R: Ring>(a: &RingMatrix<R>, b: &RingMatrix<R>) -> RingMatrix<R> {
    a.mul(b).unwrap()
}

// ---------------------------------------------------------------------------
// Criteria 1 and 2: random unimodular matrices over Q(i) and Q(i)[x]

/// `U = P·L·R` with `L` unit lower triangular (entries from `entry`), `R`
/// unit upper triangular with scalar entries and `P` a permutation, together
/// with `U⁻¹ = R⁻¹·L⁻¹·Pᵀ` by substitution.
fn unimodular<R: Ring>(
    n: usize,
    rng: &mut ChaCha8Rng,
    entry: &mut dyn FnMut(&mut ChaCha8Rng) -> R,
) -> (RingMatrix<R>, RingMatrix<R>) {
    let mut l = RingMatrix::<R>::identity(n);
    let mut u = RingMatrix::<R>::identity(n);
    for i in 0..n {
        for j in 0..i {
            l.set(i, j, entry(rng));
            u.set(j, i, R::from_scalar(&small_gr(rng)));
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut p = RingMatrix::<R>::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p.set(i, j, R::one());
    }
    let mut l_inv = RingMatrix::<R>::identity(n);
    for i in 0..n {
        for j in (0..i).rev() {
            let mut s = R::zero();
            for k in j..i {
                s = s.add_ref(&l.get(i, k).mul_ref(l_inv.get(k, j)));
            }
            l_inv.set(i, j, -s);
        }
    }
    let mut u_inv = RingMatrix::<R>::identity(n);
    for i in (0..n).rev() {
        for j in i + 1..n {
            let mut s = R::zero();
            for k in i + 1..=j {
                s = s.add_ref(&u.get(i, k).mul_ref(u_inv.get(k, j)));
            }
            u_inv.set(i, j, -s);
        }
    }
    let m = mat_mul(&mat_mul(&p, &l), &u);
    let m_inv = mat_mul(&mat_mul(&u_inv, &l_inv), &p.transpose());
    (m, m_inv)
}

struct SuiteStats {
    instances: usize,
    by_m: [usize; 6],
}

/// Generates the 500 suite instances and hands each `(Φ, Ψ)` pair to `check`.
fn suite<F>(mut check: F) -> Result<SuiteStats, String>
where
    F: FnMut(&dyn SuiteCase) -> Result<(), String>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut stats = SuiteStats { instances: 0, by_m: [0; 6] };
    for t in 0..500 {
        let n = 2 + t % 5;
        let case: Box<dyn SuiteCase> = if (t / 5) % 2 == 0 {
            let (u, u_inv) = unimodular::<GaussianRational>(n, &mut rng, &mut |r| small_gr(r));
            Box::new(Case { phi: u.select_cols(&(0..n - 1).collect::<Vec<_>>()), psi: u_inv.select_rows(&(0..n - 1).collect::<Vec<_>>()) })
        } else {
            let (u, u_inv) = unimodular::<Polynomial>(n, &mut rng, &mut |r| poly_deg2(r));
            Box::new(Case { phi: u.select_cols(&(0..n - 1).collect::<Vec<_>>()), psi: u_inv.select_rows(&(0..n - 1).collect::<Vec<_>>()) })
        };
        check(case.as_ref()).map_err(|e| format!("instance {t} (n = {n}, {}): {e}", case.ring()))?;
        stats.instances += 1;
        stats.by_m[n - 1] += 1;
    }
    Ok(stats)
}

trait SuiteCase {
    fn ring(&self) -> &'static str;
    fn check_inverses(&self) -> Result<(), String>;
    fn check_general_left_inverse(&self) -> Result<(), String>;
}

struct Case<R: Ring> {
    phi: RingMatrix<R>,
    psi: RingMatrix<R>,
}

impl<R: Ring> SuiteCase for Case<R> {
    fn ring(&self) -> &'static str {
        if std::any::type_name::<R>().ends_with("Polynomial") {
            "Q(i)[x]"
        } else {
            "Q(i)"
        }
    }

    fn check_inverses(&self) -> Result<(), String> {
        let (phi, psi) = (&self.phi, &self.psi);
        let n = phi.rows();
        ensure!(psi.mul(phi).unwrap().is_identity(), "ΨΦ ≠ I");
        // Cauchy–Binet oracle over explicit row/column subsets.
        let subsets = combinations(n, n - 1);
        let d_phi: Vec<R> = subsets.iter().map(|s| laplace(&phi.select_rows(s))).collect();
        let d_psi: Vec<R> = subsets.iter().map(|s| laplace(&psi.select_cols(s))).collect();
        let lib_phi = maximal_minors(phi).map_err(|e| e.to_string())?;
        let lib_psi = delta_left_inverse_from_psi(psi, phi).map_err(|e| e.to_string())?;
        ensure!(lib_phi.subsets == subsets && lib_phi.values == d_phi, "Δ(Φ) differs from cofactor expansion");
        ensure!(lib_psi.values == d_psi, "Δ*(Ψ) differs from cofactor expansion");
        let pairing = d_psi.iter().zip(&d_phi).fold(R::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)));
        ensure!(pairing.is_one(), "Δ*(Ψ)·Δ(Φ) ≠ 1");
        let c = complete(phi, psi).map_err(|e| e.to_string())?;
        ensure!(c.psi_e.mul(&c.phi_e).unwrap().is_identity(), "Ψ_e Φ_e ≠ I");
        ensure!(c.phi_e.mul(&c.psi_e).unwrap().is_identity(), "Φ_e Ψ_e ≠ I");
        let expected = if (n - 1) % 2 == 0 { R::one() } else { -R::one() };
        ensure!(laplace(&c.phi_e) == expected, "det Φ_e ≠ (−1)^(n−1)");
        ensure!(laplace(&c.psi_e) == expected, "det Ψ_e ≠ (−1)^(n−1)");
        Ok(())
    }

    fn check_general_left_inverse(&self) -> Result<(), String> {
        let delta = delta_left_inverse_from_psi(&self.psi, &self.phi).map_err(|e| e.to_string())?;
        let left = left_inverse_general(&self.phi, &delta.values).map_err(|e| e.to_string())?;
        ensure!(left.mul(&self.phi).unwrap().is_identity(), "S_m·ΣΔ*_k Φ*_k is not a left inverse");
        Ok(())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let stats = suite(|c| c.check_inverses())?;
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "runtime {elapsed:?} exceeds 60 s");
    Ok(format!("{} instances, n = 2..6 counts {:?}, exact identities hold, {:.2}s", stats.instances, &stats.by_m[1..], elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let stats = suite(|c| c.check_general_left_inverse())?;
    let report = calibrate_signs(5);
    ensure!(report.all_match(), "calibration does not confirm the fixed sign matrices:\n{report}");
    let s = &report.symbolic;
    ensure!(!s.alternating_holds, "the alternating sign pattern unexpectedly holds on the symbolic 2×2 case");
    ensure!(s.calibrated_holds, "calibrated signs fail on the symbolic 2×2 case");
    let m_max = report.entries.iter().map(|e| e.m).max().unwrap_or(0);
    Ok(format!(
        "calibrated S_m = I confirmed for m ≤ {m_max}; left inverse from Δ* exact on {} instances; diag((−1)^q) fails on symbolic Φ = {}",
        stats.instances, s.phi
    ))
}

// ---------------------------------------------------------------------------
// Criterion 3: corona suite

/// Pole anchor for `H∞^half`: poles sit in the opposite half-plane.
fn anchor(half: Half) -> GaussianRational {
    gr(0, -half.sign() as i64)
}

fn distinct_root(rng: &mut ChaCha8Rng, used: &mut Vec<GaussianRational>) -> GaussianRational {
    loop {
        let z = GaussianRational::from_fracs(rng.gen_range(-6..=6), rng.gen_range(1..=2), rng.gen_range(-6..=6), rng.gen_range(1..=2));
        if !used.contains(&z) {
            used.push(z.clone());
            return z;
        }
    }
}

/// A corona tuple of `H∞^half` with pairwise distinct zeros, nonzero at ∞.
fn free_tuple(rng: &mut ChaCha8Rng, half: Half) -> Vec<RationalFunction> {
    let a = anchor(half);
    let mut used = vec![a.clone()];
    let m = rng.gen_range(2..=3);
    (0..m)
        .map(|_| {
            let d = rng.gen_range(1..=2);
            let roots: Vec<GaussianRational> = (0..d).map(|_| distinct_root(rng, &mut used)).collect();
            let num = Polynomial::from_roots(roots.iter()).scale(&nonzero_gr(rng));
            RationalFunction::frac(num, lin(&a).pow(d as u32))
        })
        .collect()
}

fn sum_products(g: &[RationalFunction], h: &[RationalFunction]) -> RationalFunction {
    g.iter().zip(h).fold(RationalFunction::zero(), |acc, (x, y)| &acc + &(x * y))
}

fn expect_certificate(
    o: &CoronaOutcome<RationalFunction>,
    h: &[RationalFunction],
    algebra: Algebra,
    member: impl Fn(&RationalFunction) -> bool,
) -> Result<(), String> {
    let c = o.certificate().ok_or_else(|| format!("expected a certificate, got {o:?}"))?;
    ensure!(c.algebra == algebra, "certificate algebra {} ≠ {}", c.algebra, algebra);
    ensure!(sum_products(&c.solution, h).is_one(), "Σ g_j h_j ≠ 1");
    ensure!(c.solution.iter().all(&member), "a coefficient lies outside {}", algebra);
    Ok(())
}

fn expect_failure(o: &CoronaOutcome<RationalFunction>, witness: &Point) -> Result<(), String> {
    let f = o.failure().ok_or_else(|| format!("expected a failure, got {o:?}"))?;
    ensure!(f.witness.as_ref() == Some(witness), "witness {:?} ≠ planted {witness}", f.witness);
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let (mut free, mut interior, mut real) = (0, 0, 0);
    for t in 0..100 {
        let half = if t % 2 == 0 { Half::Plus } else { Half::Minus };
        let a = anchor(half);
        let h = free_tuple(&mut rng, half);
        let ctx = |e: String| format!("instance {t} ({}): {e}", half.symbol());
        match t % 10 {
            0..=4 => {
                let o = corona_solve_hplus(&h, half).map_err(|e| ctx(e.to_string()))?;
                expect_certificate(&o, &h, Algebra::Hardy(half), |g| g.in_hardy(half)).map_err(ctx)?;
                free += 1;
            }
            5 | 6 => {
                // Planted zero inside the half-plane: M∞ accepts, H∞ rejects.
                let z0 = GaussianRational::from_fracs(rng.gen_range(-4..=4), 1, half.sign() as i64 * rng.gen_range(2..=5), 1);
                let f = RationalFunction::frac(lin(&z0), lin(&a));
                let h: Vec<RationalFunction> = h.iter().map(|x| x * &f).collect();
                let o = corona_solve_hplus(&h, half).map_err(|e| ctx(e.to_string()))?;
                expect_failure(&o, &Point::Exact(z0.clone())).map_err(ctx)?;
                let o = corona_solve_mplus(&h, half).map_err(|e| ctx(e.to_string()))?;
                expect_certificate(&o, &h, Algebra::Meromorphic(half), |g| g.is_bounded_on_line()).map_err(ctx)?;
                interior += 1;
            }
            _ => {
                let (factor, witness) = if t % 10 == 9 {
                    (RationalFunction::frac(Polynomial::one(), lin(&a)), Point::Infinity)
                } else {
                    let x0 = GaussianRational::from_fracs(rng.gen_range(-9..=9), rng.gen_range(1..=4), 0, 1);
                    (RationalFunction::frac(lin(&x0), lin(&a)), Point::Exact(x0))
                };
                let h: Vec<RationalFunction> = h.iter().map(|x| x * &factor).collect();
                for o in [corona_solve_hplus(&h, half), corona_solve_mplus(&h, half)] {
                    expect_failure(&o.map_err(|e| ctx(e.to_string()))?, &witness).map_err(ctx)?;
                }
                real += 1;
            }
        }
    }
    // The (ξ − 2i) family: common zero 2i in C⁺.
    let z2 = lin(&gr(0, 2));
    let den = lin(&gr(0, -1));
    let h = vec![
        RationalFunction::frac(z2.clone(), den.clone()),
        RationalFunction::frac(&z2 * &lin(&gr(0, 3)), den.pow(2)),
    ];
    let o = corona_solve_hplus(&h, Half::Plus).map_err(|e| e.to_string())?;
    expect_failure(&o, &Point::Exact(gr(0, 2))).map_err(|e| format!("(ξ−2i) family over H∞⁺: {e}"))?;
    let o = corona_solve_mplus(&h, Half::Plus).map_err(|e| e.to_string())?;
    expect_certificate(&o, &h, Algebra::Meromorphic(Half::Plus), |g| g.is_bounded_on_line())
        .map_err(|e| format!("(ξ−2i) family over M∞⁺: {e}"))?;
    let d = o.certificate().and_then(|c| c.decomposition.as_ref()).ok_or("M∞⁺ certificate lacks the decomposition")?;
    ensure!(
        h.iter().zip(&d.tuple).all(|(hj, tj)| *hj == &d.r * tj),
        "h_j ≠ r·g_j in the M∞⁺ decomposition"
    );
    Ok(format!(
        "{free} corona tuples certified, {interior} interior zeros (M∞ accepts, H∞ rejects), {real} planted ℝ̇ zeros rejected with exact witness; (ξ−2i) family splits M∞⁺/H∞⁺"
    ))
}

// ---------------------------------------------------------------------------
// Criterion 4: scalar factorization

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let mut max_factors = 0;
    for t in 0..100 {
        let pairs = rng.gen_range(1..=3);
        let mut used = Vec::new();
        let mut factors = Vec::new();
        let mut upper = 0i64;
        for _ in 0..pairs {
            let mult = rng.gen_range(1..=2);
            for sign in [1, -1] {
                let z = loop {
                    let z = distinct_root(&mut rng, &mut used);
                    if !z.is_real() {
                        break z;
                    }
                };
                if z.half_plane_sign() > 0 {
                    upper += (sign * mult) as i64;
                }
                factors.push((z, sign * mult));
            }
        }
        max_factors = max_factors.max(factors.len());
        let f = FactoredRational::new(nonzero_gr(&mut rng), factors).map_err(|e| e.to_string())?;
        let w = wh_factor_scalar(&f).map_err(|e| format!("instance {t}: {e}"))?;
        ensure!(w.product() == f.expand(), "instance {t}: γ₋ r^k γ₊ ≠ f");
        w.certify().map_err(|e| format!("instance {t}: certificate: {e}"))?;
        let exact = winding_exact(&f).map_err(|e| e.to_string())?;
        let numeric = winding_numeric(&f.expand(), 256, 1e-9).map_err(|e| format!("instance {t}: {e}"))?;
        ensure!(exact == upper && w.k == upper, "instance {t}: winding {exact}, k = {}, oracle {upper}", w.k);
        ensure!(numeric == exact, "instance {t}: numeric winding {numeric} ≠ exact {exact}");
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "runtime {elapsed:?} exceeds 30 s");
    Ok(format!(
        "100 symbols (≤ {max_factors} factors) reconstruct exactly, certificates pass, exact = numeric winding (grid 256, tol 1e-9), {:.2}s",
        elapsed.as_secs_f64()
    ))
}

// ---------------------------------------------------------------------------
// Criterion 5: matrix factorization

fn scalar_r_pow(k: i32) -> ScalarWH {
    wh_factor_scalar(&FactoredRational::r_pow(k)).unwrap()
}

fn check_factorization(g: &RMatrix, f: &WHFactorization, indices: &[i64], label: &str) -> Result<(), String> {
    ensure!(f.partial_indices == indices, "{label}: partial indices {:?} ≠ {indices:?}", f.partial_indices);
    let d = RingMatrix::diagonal(indices.iter().map(|&k| r().pow_i(k).unwrap()).collect());
    ensure!(mat_mul(&mat_mul(&f.g_minus, &d), &f.g_plus) == *g, "{label}: G₋ D G₊ ≠ G");
    let report = verify_factorization(g, f);
    ensure!(report.all_passed(), "{label}: failed checks {:?}", report.failed().map(|c| &c.name).collect::<Vec<_>>());
    Ok(())
}

fn criterion_5() -> Outcome {
    let col = rmat(vec![vec![rf_const(1)], vec![rf_const(0)]]);
    let row = rmat(vec![vec![rf_const(1), rf_const(0)]]);

    let g_row = rmat(vec![vec![rf_const(1), rf_const(0)], vec![bump(), r().inv().unwrap()]]);
    let f = factor_via_row(&g_row, 1, &col, &scalar_r_pow(-1)).map_err(|e| e.to_string())?;
    check_factorization(&g_row, &f, &[0, -1], "row route")?;

    let g_rh = rmat(vec![vec![rf_const(1), bump()], vec![rf_const(0), r()]]);
    let f = factor_via_rh(&g_rh, &col, &col, &row, &row, &scalar_r_pow(1)).map_err(|e| e.to_string())?;
    check_factorization(&g_rh, &f, &[0, 1], "RH route")?;

    // 3×3: first rows Ψ from a suite-1 completion, last row chosen so that
    // det G = r⁻¹.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let (u, u_inv) = unimodular::<GaussianRational>(3, &mut rng, &mut |r| small_gr(r));
    let phi = u.select_cols(&[0, 1]).map(|z| RationalFunction::constant(z.clone()));
    let psi = u_inv.select_rows(&[0, 1]).map(|z| RationalFunction::constant(z.clone()));
    let c = complete(&phi, &psi).map_err(|e| e.to_string())?;
    let x = [bump(), RationalFunction::frac(Polynomial::one(), lin(&gr(0, 1)))];
    let lower = rmat(vec![
        vec![rf_const(1), rf_const(0), rf_const(0)],
        vec![rf_const(0), rf_const(1), rf_const(0)],
        vec![x[0].clone(), x[1].clone(), r().inv().unwrap()],
    ]);
    let g3 = mat_mul(&lower, &c.psi_e);
    let f = factor_via_row(&g3, 2, &phi, &scalar_r_pow(-1)).map_err(|e| e.to_string())?;
    check_factorization(&g3, &f, &[0, 0, -1], "3×3 row route")?;

    // T_G x = φ on the canonical example, checked without the projection:
    // x ∈ H⁺ and G x − φ ∈ H⁻ vanishing at ∞.
    let g_can = rmat(vec![vec![rf_const(1), bump()], vec![rf_const(0), rf_const(1)]]);
    let f = factor_via_rh(&g_can, &col, &col, &row, &row, &scalar_r_pow(0)).map_err(|e| e.to_string())?;
    check_factorization(&g_can, &f, &[0, 0], "canonical example")?;
    let rhs = vec![RationalFunction::zero(), RationalFunction::frac(Polynomial::one(), lin(&gr(0, -1)))];
    let sol = apply_inverse(&f, &rhs).map_err(|e| e.to_string())?;
    let in_h_plus = |v: &RationalFunction| {
        v.is_zero() || (v.pole_count().upper == 0 && v.pole_count().real == 0 && v.degree_balance().is_some_and(|b| b < 0))
    };
    let in_h_minus = |v: &RationalFunction| {
        v.is_zero() || (v.pole_count().lower == 0 && v.pole_count().real == 0 && v.degree_balance().is_some_and(|b| b < 0))
    };
    ensure!(sol.iter().all(in_h_plus), "T_G⁻¹φ is not in H⁺");
    let gx = mat_mul(&g_can, &RingMatrix::column(sol.clone())).col(0);
    ensure!(gx.iter().zip(&rhs).all(|(a, b)| in_h_minus(&(a - b))), "G x − φ is not in H⁻");
    ensure!(toeplitz_apply(&g_can, &sol).map_err(|e| e.to_string())? == rhs, "T_G x ≠ φ");
    Ok("row (0,−1), RH (0,1) and 3×3 (0,0,−1) examples reconstruct and verify; T_G⁻¹ round-trip exact".into())
}

// ---------------------------------------------------------------------------
// Criterion 6: Fredholm diagnostics

fn criterion_6() -> Outcome {
    let mut lists = 0;
    for n in 1..=4u32 {
        for code in 0..7usize.pow(n) {
            let mut c = code;
            let ks: Vec<i64> = (0..n)
                .map(|_| {
                    let k = (c % 7) as i64 - 3;
                    c /= 7;
                    k
                })
                .collect();
            let rep = report_from_indices(&ks);
            let ker: u64 = ks.iter().map(|&k| if k < 0 { (-k) as u64 } else { 0 }).sum();
            let coker: u64 = ks.iter().map(|&k| if k > 0 { k as u64 } else { 0 }).sum();
            ensure!(rep.fredholm == Verdict::Yes, "{ks:?}: not Fredholm");
            ensure!(rep.dim_ker == Some(ker) && rep.dim_coker == Some(coker), "{ks:?}: dimensions {:?}/{:?}", rep.dim_ker, rep.dim_coker);
            ensure!(rep.index == Some(ker as i64 - coker as i64), "{ks:?}: index {:?}", rep.index);
            ensure!(rep.partial_indices.as_deref() == Some(&ks[..]), "{ks:?}: partial indices not copied");
            lists += 1;
        }
    }
    let unitary = rmat(vec![vec![r(), rf_const(0)], vec![rf_const(0), r().inv().unwrap()]]);
    let rep = special_unitary(&unitary, None).map_err(|e| e.to_string())?;
    ensure!(rep.fredholm == Verdict::Yes, "diag(r, r⁻¹) not reported Fredholm");
    ensure!((rep.dim_ker, rep.dim_coker) == (Some(1), Some(1)), "diag(r, r⁻¹): (ker, coker) = {:?}", (rep.dim_ker, rep.dim_coker));

    let den = Polynomial::from_ints(&[1, 0, 1]);
    let c = RationalFunction::frac(Polynomial::from_ints(&[-1, 0, 1]), den.clone());
    let s = RationalFunction::frac(Polynomial::from_ints(&[0, 2]), den);
    let rot = rmat(vec![vec![c.clone(), s.clone()], vec![-s, c]]);
    let rep = special_orthogonal(&rot).map_err(|e| e.to_string())?;
    let det = rot.det().map_err(|e| e.to_string())?;
    let numeric = winding_numeric(&det, 256, 1e-9).map_err(|e| e.to_string())?;
    ensure!(rep.index == Some(0), "orthogonal example index {:?}", rep.index);
    ensure!(-numeric == 0, "numeric winding of det is {numeric}");
    Ok(format!("{lists} index lists match; diag(r, r⁻¹) has (ker, coker) = (1, 1); rotation index 0 = −numeric winding"))
}

// ---------------------------------------------------------------------------
// Criterion 7: almost periodic suite

fn random_ap(rng: &mut ChaCha8Rng, nonnegative: bool, max_terms: usize) -> APPoly {
    let mut p = APPoly::zero();
    for _ in 0..rng.gen_range(0..=max_terms) {
        let q = rng.gen_range(1..=4);
        let num = if nonnegative { rng.gen_range(0..=6) } else { rng.gen_range(-6..=6) };
        p = p + APPoly::e_int(num, q).scale(&small_gr(rng));
    }
    p
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for t in 0..200 {
        let p = random_ap(&mut rng, false, 8);
        let plus = ap_project(&p, Half::Plus);
        let minus = ap_project(&p, Half::Minus);
        ensure!(plus.clone() + minus.clone() == p, "sample {t}: P⁺p + P⁻p ≠ p");
        ensure!(ap_project(&plus, Half::Plus) == plus && ap_project(&minus, Half::Minus) == minus, "sample {t}: not idempotent");
        ensure!(ap_project(&plus, Half::Minus).is_zero() && ap_project(&minus, Half::Plus).is_zero(), "sample {t}: ranges overlap");
        for (freq, coeff) in p.terms() {
            let part = if freq.is_negative() { &minus } else { &plus };
            ensure!(part.coeff(freq) == *coeff, "sample {t}: term at {freq} misplaced");
        }
    }

    let e = |p, q| APPoly::e_int(p, q);
    let c = |v| APPoly::constant(gr(v, 0));
    let am = |rows: Vec<Vec<APPoly>>| -> APMatrix { RingMatrix::from_rows(rows).unwrap() };
    let col = am(vec![vec![c(1)], vec![c(0)]]);
    let g = am(vec![vec![c(1), c(0)], vec![e(-1, 1) + e(2, 1).scale(&gr(4, 0)), e(1, 1)]]);
    let det = APDetFactorization::from_det(&g.det().unwrap()).map_err(|e| e.to_string())?;
    let f = ap_factor_via_row(&g, 1, &col, &det).map_err(|e| e.to_string())?;
    let idx: Vec<String> = f.partial_ap_indices.iter().map(|m| m.to_string()).collect();
    ensure!(idx == ["0", "1"], "gap-respecting example has indices {idx:?}");
    ensure!(f.product().unwrap() == g, "gap-respecting example does not reconstruct");
    ensure!(verify_ap_factorization(&g, &f).all_passed(), "gap-respecting example fails verification");

    // Canonical instances: Ψ = [I | a] over AP⁺ with right inverse [I; 0]
    // and last row chosen so that det G is a nonzero constant.
    for t in 0..50 {
        let n = 2 + t % 2;
        let mut rows = Vec::new();
        let a: Vec<APPoly> = (0..n - 1).map(|_| random_ap(&mut rng, true, 3)).collect();
        for i in 0..n - 1 {
            let mut r: Vec<APPoly> = (0..n - 1).map(|j| if i == j { c(1) } else { c(0) }).collect();
            r.push(a[i].clone());
            rows.push(r);
        }
        let u: Vec<APPoly> = (0..n - 1).map(|_| random_ap(&mut rng, false, 3)).collect();
        let k = APPoly::constant(nonzero_gr(&mut rng));
        let last = u.iter().zip(&a).fold(k, |acc, (x, y)| acc + x.clone() * y.clone());
        let mut lr = u.clone();
        lr.push(last);
        rows.push(lr);
        let g = am(rows);
        let mut phi = RingMatrix::<APPoly>::zeros(n, n - 1);
        for i in 0..n - 1 {
            phi.set(i, i, c(1));
        }
        let det = APDetFactorization::from_det(&g.det().unwrap()).map_err(|e| format!("instance {t}: {e}"))?;
        let f = ap_factor_via_row(&g, n - 1, &phi, &det).map_err(|e| format!("instance {t}: {e}"))?;
        ensure!(f.partial_ap_indices.iter().all(|m| m.to_string() == "0"), "instance {t}: indices not all zero");
        ensure!(f.product().unwrap() == g, "instance {t}: G₋ D G₊ ≠ G");
        ensure!(verify_ap_factorization(&g, &f).all_passed(), "instance {t}: verification fails");
    }

    let g = am(vec![vec![c(1), c(0)], vec![e(1, 2), e(1, 1)]]);
    let det = APDetFactorization::from_det(&g.det().unwrap()).map_err(|e| e.to_string())?;
    match ap_factor_via_row(&g, 1, &col, &det) {
        Err(Error::SplitUnavailable { offending }) => {
            let names: Vec<String> = offending.iter().map(|q| q.to_string()).collect();
            ensure!(names == ["1/2"], "offending frequencies {names:?}");
        }
        Ok(f) => return Err(format!("[[1,0],[e_1/2, e_1]] produced indices {:?}", f.partial_ap_indices)),
        Err(other) => return Err(format!("[[1,0],[e_1/2, e_1]] failed with {other}")),
    }
    Ok("200 projections split and idempotent; gap example indices (0,1); 50 canonical instances reconstruct; [[1,0],[e_1/2,e_1]] → SplitUnavailable [1/2]".into())
}

// ---------------------------------------------------------------------------
// Criterion 8: CLI determinism and verify round-trip

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = whfactor_cli::run(std::iter::once("whfactor").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

fn criterion_8() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("testdata");
    let manifest: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
    let tmp = std::env::temp_dir().join(format!("whfactor-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let (mut jobs, mut round_trips) = (0, 0);
    for job in manifest.as_array().unwrap() {
        let input = dir.join(job["input"].as_str().unwrap());
        let mut args = vec![job["command"].as_str().unwrap(), "--input", input.to_str().unwrap()];
        args.extend(job["args"].as_array().unwrap().iter().map(|a| a.as_str().unwrap()));
        let expected = job["exit"].as_i64().unwrap() as i32;
        for format in ["json", "text"] {
            let mut a = args.clone();
            a.extend(["--format", format]);
            let (c1, o1) = cli(&a);
            let (c2, o2) = cli(&a);
            ensure!(c1 == expected && c2 == expected, "{}: exit {c1}/{c2}, expected {expected}", job["input"]);
            ensure!(o1 == o2, "{} ({format}): outputs differ between runs", job["input"]);
            if format == "json" && c1 == 0 {
                let v: Value = serde_json::from_slice(&o1).unwrap();
                if v.get("factorization").is_some() && v.get("matrix").is_some() {
                    let path = tmp.join(job["input"].as_str().unwrap());
                    std::fs::write(&path, &o1).unwrap();
                    let (code, out) = cli(&["verify", "--input", path.to_str().unwrap()]);
                    let rv: Value = serde_json::from_slice(&out).unwrap();
                    ensure!(code == 0 && rv["verify"]["all_passed"] == true, "{}: verify round-trip fails", job["input"]);
                    round_trips += 1;
                }
            }
        }
        jobs += 1;
    }
    std::fs::remove_dir_all(&tmp).ok();
    ensure!(round_trips > 0, "no factorizations were emitted");
    Ok(format!("{jobs} corpus jobs byte-identical across runs (json and text); {round_trips} emitted factorizations pass verify"))
}
