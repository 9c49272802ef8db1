//! Scalar binary-entropy kernels.
//!
//! Everything here is a pure function of one or two probabilities, in bits.
//! The two step-response kernels of the skew-symmetric family are
//!
//! ```text
//! f(x) = h(x/2) + h((1-x)/2) - 1        (conditional rate to Y1/Y2)
//! g(x) = h(x*p)                          (output entropy of BSC(p))
//! ```
//!
//! with `x*p = x(1-p) + p(1-x)`. Both are strictly increasing on [0, 1/2],
//! and their closed-form derivatives are exposed for the inequality checks.
//!
//! Domain violations are programming errors and panic; fallible validation
//! belongs to the structured types in [`crate::dmc`].

use std::f64::consts::LN_2;

/// Binary entropy h(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
///
/// Symmetric about 1/2; h(0) = h(1) = 0, h(1/2) = 1.
///
/// # Panics
/// If `x` is outside [0, 1].
pub fn binary_entropy(x: f64) -> f64 {
    assert!((0.0..=1.0).contains(&x), "binary_entropy: x = {x} not in [0,1]");
    if x == 0.0 || x == 1.0 {
        return 0.0;
    }
    -x * x.log2() - (1.0 - x) * (1.0 - x).log2()
}

/// Inverse of [`binary_entropy`] on the branch [0, 1/2].
///
/// Returns the unique x in [0, 1/2] with h(x) = y, by bisection down to a
/// bracket width of 1e-14 (at most 200 iterations); the residual |h(x) - y|
/// is below 1e-12 everywhere on the branch.
///
/// # Panics
/// If `y` is outside [0, 1].
pub fn binary_entropy_inv(y: f64) -> f64 {
    assert!((0.0..=1.0).contains(&y), "binary_entropy_inv: y = {y} not in [0,1]");
    if y == 0.0 {
        return 0.0;
    }
    if y == 1.0 {
        return 0.5;
    }
    let (mut lo, mut hi) = (0.0_f64, 0.5_f64);
    let mut iters = 0;
    while hi - lo > 1e-14 && iters < 200 {
        let mid = 0.5 * (lo + hi);
        if binary_entropy(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
        iters += 1;
    }
    0.5 * (lo + hi)
}

/// Binary convolution x*p = x(1-p) + p(1-x).
///
/// Probability that a Bernoulli(x) bit passed through BSC(p) comes out 1.
/// Symmetric in its arguments, with fixed point 1/2.
pub fn convolve(x: f64, p: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&p));
    x * (1.0 - p) + p * (1.0 - x)
}

/// Log-odds J(x) = log2((1-x)/x), the derivative of [`binary_entropy`].
///
/// Antisymmetric about 1/2: J(x) = -J(1-x).
///
/// # Panics
/// At the endpoints x = 0 and x = 1, where J is infinite.
pub fn log_ratio(x: f64) -> f64 {
    assert!(x > 0.0 && x < 1.0, "log_ratio: x = {x} not in (0,1)");
    ((1.0 - x) / x).log2()
}

/// q(x) = x(1-x); appears in every second derivative below.
pub fn quadratic_term(x: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&x));
    x * (1.0 - x)
}

/// f(x) = h(x/2) + h((1-x)/2) - 1.
///
/// Strictly increasing on [0, 1/2] and symmetric: f(x) = f(1-x).
pub fn f_skew(x: f64) -> f64 {
    binary_entropy(x / 2.0) + binary_entropy((1.0 - x) / 2.0) - 1.0
}

/// g(x) = h(x*p), the output entropy of BSC(p) at input bias x.
///
/// Strictly increasing on [0, 1/2] for p < 1/2.
pub fn g_bsc(x: f64, p: f64) -> f64 {
    binary_entropy(convolve(x, p))
}

/// First derivative of [`f_skew`]: f'(x) = (J(x/2) - J((1-x)/2)) / 2.
///
/// # Panics
/// At the endpoints of (0, 1).
pub fn f_skew_d1(x: f64) -> f64 {
    0.5 * (log_ratio(x / 2.0) - log_ratio((1.0 - x) / 2.0))
}

/// Second derivative of [`f_skew`], from J'(z) = -1/(ln2 z(1-z)).
pub fn f_skew_d2(x: f64) -> f64 {
    assert!(x > 0.0 && x < 1.0, "f_skew_d2: x = {x} not in (0,1)");
    let a = quadratic_term(x / 2.0);
    let b = quadratic_term((1.0 - x) / 2.0);
    -(1.0 / a + 1.0 / b) / (4.0 * LN_2)
}

/// First derivative of [`g_bsc`] in x: g'(x) = (1-2p) J(x*p).
pub fn g_bsc_d1(x: f64, p: f64) -> f64 {
    (1.0 - 2.0 * p) * log_ratio(convolve(x, p))
}

/// Second derivative of [`g_bsc`] in x: g''(x) = -(1-2p)^2 / (ln2 q(x*p)).
pub fn g_bsc_d2(x: f64, p: f64) -> f64 {
    assert!(x > 0.0 && x < 1.0, "g_bsc_d2: x = {x} not in (0,1)");
    let z = convolve(x, p);
    let d = 1.0 - 2.0 * p;
    -d * d / (LN_2 * quadratic_term(z))
}

/// Central difference with one Richardson extrapolation level.
///
/// D(h) = (f(x+h) - f(x-h)) / 2h errs in O(h^2); (4 D(h/2) - D(h)) / 3
/// cancels that term. Used by the derivative cross-checks and by the
/// appendix verification.
pub fn central_diff_richardson<F: Fn(f64) -> f64>(f: F, x: f64, step: f64) -> f64 {
    let d1 = (f(x + step) - f(x - step)) / (2.0 * step);
    let h = step / 2.0;
    let d2 = (f(x + h) - f(x - h)) / (2.0 * h);
    (4.0 * d2 - d1) / 3.0
}
