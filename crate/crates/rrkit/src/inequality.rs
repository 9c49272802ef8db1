//! Machine verification of the entropy inequalities behind the closed forms.
//!
//! The interpolation lemma: for nonnegative strictly increasing f, g with
//! f'/g' decreasing, the g-value at the f-interpolation point is dominated
//! by the g-interpolation. Its finite-mixture corollary, the derived
//! convexity of h(p * f^{-1}(y)), the derivative-ratio monotonicity claim,
//! and the appendix reduction that proves it are all checked on dense grids
//! with fixed numerical-differentiation parameters.
//!
//! Tolerances: 1e-10 for algebraic identities, 1e-9 for grid inequalities,
//! 1e-6 for derivative cross-checks. Grid checks use 2001+ points with
//! endpoint margins of 1e-3 unless stated otherwise.
//!
//! The appendix chain is evaluated in natural logarithms: the displayed
//! closed form of the left-hand derivative, `-1 + J(x*p)(1 - 2(x*p))`, only
//! holds with J(x) = ln((1-x)/x) (the constant is J'(z) z(1-z) = -1). The
//! inequalities themselves are base-independent.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entropy::{central_diff_richardson, convolve, f_skew, f_skew_d1, g_bsc, g_bsc_d1,
    quadratic_term};
use crate::{Error, Result};

/// Slack below which an inequality check is considered violated.
pub const ALGEBRA_TOL: f64 = 1e-10;
/// Tolerance for grid inequalities.
pub const GRID_TOL: f64 = 1e-9;
/// Endpoint margin for open-interval grids.
pub const EDGE_MARGIN: f64 = 1e-3;

/// Natural-log odds ln((1-x)/x).
fn ln_ratio(x: f64) -> f64 {
    assert!(x > 0.0 && x < 1.0, "ln_ratio: x = {x} not in (0,1)");
    ((1.0 - x) / x).ln()
}

/// Outcome of a single interpolation-lemma instance.
#[derive(Debug, Clone, Copy)]
pub struct LemmaVerdict {
    /// Interpolation point with f(x_int) = mixture of f-values.
    pub x_int: f64,
    /// g-mixture minus g(x_int); nonnegative when the hypothesis holds.
    pub slack: f64,
    pub pass: bool,
}

fn invert_increasing<F: Fn(f64) -> f64>(f: &F, target: f64, lo: f64, hi: f64) -> Result<f64> {
    let (flo, fhi) = (f(lo), f(hi));
    if !(flo <= target + 1e-12 && target <= fhi + 1e-12) {
        return Err(Error::RootNotBracketed { lo, hi });
    }
    let (mut a, mut b) = (lo, hi);
    for _ in 0..200 {
        if b - a <= 1e-14 {
            break;
        }
        let mid = 0.5 * (a + b);
        if f(mid) < target {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Checks the two-point interpolation inequality
/// g(x_int) <= u g(x1) + (1-u) g(x2) with f(x_int) = u f(x1) + (1-u) f(x2).
///
/// The caller asserts the hypothesis (f, g nonnegative, strictly increasing,
/// f'/g' decreasing on [x1, x2]); the checker reports the observed slack and
/// can therefore also expose violations when the hypothesis fails.
pub fn check_lemma1<F, G>(f: F, g: G, x1: f64, x2: f64, u: f64) -> Result<LemmaVerdict>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::Domain(format!("mixture weight u = {u} not in [0,1]")));
    }
    if x1 >= x2 || x1.is_nan() || x2.is_nan() {
        return Err(Error::Domain(format!("need x1 < x2, got [{x1}, {x2}]")));
    }
    let target = u * f(x1) + (1.0 - u) * f(x2);
    let x_int = invert_increasing(&f, target, x1, x2)?;
    let slack = u * g(x1) + (1.0 - u) * g(x2) - g(x_int);
    Ok(LemmaVerdict { x_int, slack, pass: slack >= -ALGEBRA_TOL })
}

/// Finite-mixture version: f(x_int) = sum_i u_i f(y_i), checks
/// g(x_int) <= sum_i u_i g(y_i).
pub fn check_corollary1<F, G>(f: F, g: G, weights: &[f64], points: &[f64]) -> Result<LemmaVerdict>
where
    F: Fn(f64) -> f64,
    G: Fn(f64) -> f64,
{
    if weights.len() != points.len() || weights.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights vs {} points",
            weights.len(),
            points.len()
        )));
    }
    let wsum: f64 = weights.iter().sum();
    if weights.iter().any(|&w| w < 0.0) || (wsum - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidDistribution(format!("weights sum to {wsum}")));
    }
    let lo = points.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = points.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let target: f64 = weights.iter().zip(points).map(|(u, y)| u * f(*y)).sum();
    let x_int = if hi - lo < 1e-15 {
        lo
    } else {
        invert_increasing(&f, target, lo, hi)?
    };
    let gmix: f64 = weights.iter().zip(points).map(|(u, y)| u * g(*y)).sum();
    let slack = gmix - g(x_int);
    Ok(LemmaVerdict { x_int, slack, pass: slack >= -ALGEBRA_TOL })
}

/// Result of a randomized instance family.
#[derive(Debug, Clone, Copy)]
pub struct SuiteVerdict {
    pub trials: usize,
    pub min_slack: f64,
    pub pass: bool,
}

/// Random two-point instances of the lemma with f = f_skew, g = h(. * p).
pub fn lemma1_random_suite(p: f64, trials: usize, seed: u64) -> Result<SuiteVerdict> {
    if !(0.0..=0.5).contains(&p) {
        return Err(Error::Domain(format!("p = {p} not in [0, 1/2]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_slack = f64::INFINITY;
    for _ in 0..trials {
        let mut a: f64 = rng.gen_range(0.05..0.45);
        let mut b: f64 = rng.gen_range(0.05..0.45);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        if b - a < 1e-3 {
            b = (b + 2e-3).min(0.45 + 2e-3);
        }
        let u = rng.gen_range(0.0..=1.0);
        let v = check_lemma1(f_skew, |x| g_bsc(x, p), a, b, u)?;
        min_slack = min_slack.min(v.slack);
    }
    Ok(SuiteVerdict { trials, min_slack, pass: min_slack >= -ALGEBRA_TOL })
}

/// Random finite-mixture instances of the corollary (5 atoms).
pub fn corollary1_random_suite(p: f64, trials: usize, seed: u64) -> Result<SuiteVerdict> {
    if !(0.0..=0.5).contains(&p) {
        return Err(Error::Domain(format!("p = {p} not in [0, 1/2]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_slack = f64::INFINITY;
    for _ in 0..trials {
        let m = 5;
        let mut w: Vec<f64> = (0..m).map(|_| rng.gen_range(1e-3..1.0)).collect();
        let sum: f64 = w.iter().sum();
        w.iter_mut().for_each(|x| *x /= sum);
        let adjust = 1.0 - w.iter().sum::<f64>();
        w[0] += adjust;
        let pts: Vec<f64> = (0..m).map(|_| rng.gen_range(0.02..0.48)).collect();
        let v = check_corollary1(f_skew, |x| g_bsc(x, p), &w, &pts)?;
        min_slack = min_slack.min(v.slack);
    }
    Ok(SuiteVerdict { trials, min_slack, pass: min_slack >= -ALGEBRA_TOL })
}

/// Grid-inequality verdict.
#[derive(Debug, Clone, Copy)]
pub struct GridVerdict {
    pub grid: usize,
    /// For convexity checks: smallest second difference.
    /// For monotonicity checks: largest adjacent increase.
    pub extremum: f64,
    pub at: f64,
    pub pass: bool,
}

/// Midpoint convexity of phi(y) = h(p * f^{-1}(y)) on [0, f(1/2)].
///
/// Valid in the proved regime 1/6 <= p <= 1/2; second differences on the
/// uniform grid must be >= -1e-9.
pub fn mrs_gerber_convexity(p: f64, grid_n: usize) -> Result<GridVerdict> {
    if !(1.0 / 6.0 - 1e-15..=0.5).contains(&p) {
        return Err(Error::Domain(format!("p = {p} outside the proved regime [1/6, 1/2]")));
    }
    if grid_n < 3 {
        return Err(Error::Domain("grid_n must be at least 3".into()));
    }
    let ymax = f_skew(0.5);
    let phi = |y: f64| {
        let x = invert_f_skew(y.clamp(0.0, ymax));
        g_bsc(x, p)
    };
    let vals: Vec<f64> = (0..grid_n)
        .map(|i| phi(ymax * i as f64 / (grid_n - 1) as f64))
        .collect();
    let mut worst = f64::INFINITY;
    let mut at = 0.0;
    for i in 1..grid_n - 1 {
        let d2 = vals[i - 1] - 2.0 * vals[i] + vals[i + 1];
        if d2 < worst {
            worst = d2;
            at = ymax * i as f64 / (grid_n - 1) as f64;
        }
    }
    Ok(GridVerdict { grid: grid_n, extremum: worst, at, pass: worst >= -GRID_TOL })
}

/// Inverse of f_skew on [0, 1/2] by bisection.
fn invert_f_skew(y: f64) -> f64 {
    let (mut lo, mut hi) = (0.0_f64, 0.5_f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if f_skew(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Monotonicity of the derivative ratio f'/g' on a grid of (0, 1/2).
///
/// Reports the largest adjacent increase; the ratio is proved decreasing for
/// 1/6 <= p < 1/2, observed to fail well below that, and the verdict simply
/// records what the grid shows. At p = 1/2 the denominator vanishes
/// identically and the claim is vacuous.
pub fn claim1_ratio_decreasing(p: f64, grid_n: usize) -> Result<GridVerdict> {
    if !(0.0..=0.5).contains(&p) || p == 0.0 {
        return Err(Error::Domain(format!("p = {p} not in (0, 1/2]")));
    }
    if grid_n < 2 {
        return Err(Error::Domain("grid_n must be at least 2".into()));
    }
    if p == 0.5 {
        return Ok(GridVerdict { grid: grid_n, extremum: 0.0, at: 0.0, pass: true });
    }
    let lo = EDGE_MARGIN;
    let hi = 0.5 - EDGE_MARGIN;
    let xs = |i: usize| lo + (hi - lo) * i as f64 / (grid_n - 1) as f64;
    let ratio = |x: f64| f_skew_d1(x) / g_bsc_d1(x, p);
    let mut prev = ratio(xs(0));
    let mut worst = f64::NEG_INFINITY;
    let mut at = xs(0);
    for i in 1..grid_n {
        let x = xs(i);
        let cur = ratio(x);
        let inc = cur - prev;
        if inc > worst {
            worst = inc;
            at = x;
        }
        prev = cur;
    }
    Ok(GridVerdict { grid: grid_n, extremum: worst, at, pass: worst <= ALGEBRA_TOL })
}

// ---------------------------------------------------------------------------
// Appendix chain (natural logarithms)
// ---------------------------------------------------------------------------

/// Left-hand side of the appendix reduction: J(x*p) q(x*p) / (1-2p).
pub fn appendix_lhs(x: f64, p: f64) -> f64 {
    let z = convolve(x, p);
    ln_ratio(z) * quadratic_term(z) / (1.0 - 2.0 * p)
}

/// Closed form of d/dx [appendix_lhs]: -1 + J(x*p)(1 - 2(x*p)).
pub fn appendix_lhs_derivative(x: f64, p: f64) -> f64 {
    assert!(x > 0.0 && x < 1.0, "appendix_lhs_derivative: x = {x} not in (0,1)");
    let z = convolve(x, p);
    -1.0 + ln_ratio(z) * (1.0 - 2.0 * z)
}

/// Right-hand side of the appendix reduction:
/// 2 (J(x/2) - J((1-x)/2)) / (1/q(x/2) + 1/q((1-x)/2)).
pub fn appendix_rhs(x: f64) -> f64 {
    assert!(x > 0.0 && x < 1.0, "appendix_rhs: x = {x} not in (0,1)");
    2.0 * (ln_ratio(x / 2.0) - ln_ratio((1.0 - x) / 2.0))
        / (1.0 / quadratic_term(x / 2.0) + 1.0 / quadratic_term((1.0 - x) / 2.0))
}

/// R(x): derivative of [`appendix_rhs`] by central differences with one
/// Richardson level at step 1e-5.
pub fn appendix_r(x: f64) -> f64 {
    central_diff_richardson(appendix_rhs, x, 1e-5)
}

/// S(x): the left-hand derivative at the worst case p = 1/6.
pub fn appendix_s(x: f64) -> f64 {
    appendix_lhs_derivative(x, 1.0 / 6.0)
}

/// One row of the R/S comparison table.
#[derive(Debug, Clone, Copy)]
pub struct AppendixRow {
    pub x: f64,
    pub r: f64,
    pub s: f64,
}

/// (x, R(x), S(x)) on a uniform grid of [0.001, 0.499].
pub fn appendix_table(grid_n: usize) -> Vec<AppendixRow> {
    let lo = EDGE_MARGIN;
    let hi = 0.5 - EDGE_MARGIN;
    (0..grid_n)
        .map(|i| {
            let x = lo + (hi - lo) * i as f64 / (grid_n - 1) as f64;
            AppendixRow { x, r: appendix_r(x), s: appendix_s(x) }
        })
        .collect()
}

/// Grid check of S(x) <= R(x).
pub fn appendix_check(grid_n: usize) -> GridVerdict {
    let mut worst = f64::INFINITY;
    let mut at = 0.0;
    for row in appendix_table(grid_n) {
        let gap = row.r - row.s;
        if gap < worst {
            worst = gap;
            at = row.x;
        }
    }
    GridVerdict { grid: grid_n, extremum: worst, at, pass: worst >= -GRID_TOL }
}
