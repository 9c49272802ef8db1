//! Closed-form treatment of the binary skew-symmetric + BSC(p) family.
//!
//! For this channel pair the optimal auxiliary channel is a symmetric binary
//! mixture, so the inner-bound boundary collapses to a one-parameter curve:
//!
//! ```text
//! R0(s) = 1 - h(s*p)
//! R1(s) = min( f(s)/2 , h(1/4) - 3/2 + h(s*p) )      0 <= s <= 1/2
//! ```
//!
//! with the sum-rate cap h(1/4) - 1/2. Two crossover thresholds split
//! [0, 1/2] into three regimes: below [`p_max`] the region is the sum-rate
//! triangle, between [`p_max`] and [`p_o`] the clipped curve, above [`p_o`]
//! the unclipped curve. The revised single-auxiliary outer bound evaluated
//! on the same channel matches the inner bound, which is what makes this
//! the capacity region.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds;
use crate::dmc::{bsc, bssc_y1, bssc_y2, AuxDecomposition, ChannelTriple};
use crate::entropy::{binary_entropy, convolve, f_skew, f_skew_d1, log_ratio};
use crate::region::{RatePair, RateRegion};
use crate::{Error, Result};

/// Default resolution of the one-parameter boundary sweeps.
pub const DEFAULT_CURVE_GRID: usize = 513;

/// Sum-rate cap of the skew-symmetric pair: h(1/4) - 1/2.
pub fn sum_rate_cap() -> f64 {
    binary_entropy(0.25) - 0.5
}

/// The skew-symmetric pair with a BSC(p) common branch.
#[derive(Debug, Clone, Copy)]
pub struct BsscBscChannel {
    p: f64,
}

impl BsscBscChannel {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&p) {
            return Err(Error::Domain(format!("crossover p = {p} not in [0, 1/2]")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// The three transition matrices as a [`ChannelTriple`].
    pub fn triple(&self) -> ChannelTriple {
        ChannelTriple::new(bssc_y1(), bssc_y2(), bsc(self.p).expect("validated"))
            .expect("fixed alphabets")
    }
}

/// Crossover below which the BSC branch out-carries the skew pair:
/// the root of 1 - h(p) = h(1/4) - 1/2, about 0.184.
pub fn p_max() -> f64 {
    let cap = sum_rate_cap();
    let (mut lo, mut hi) = (0.0_f64, 0.5_f64);
    // 1 - h(p) - cap decreases from 1 - cap to -cap
    for _ in 0..200 {
        if hi - lo <= 1e-16 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if 1.0 - binary_entropy(mid) - cap > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Crossover above which the sum-rate cap stops binding:
/// (sqrt(3) - 1) / (2 sqrt(3)), about 0.211.
pub fn p_o() -> f64 {
    let s3 = 3.0_f64.sqrt();
    (s3 - 1.0) / (2.0 * s3)
}

/// Boundary slope dR1/dR0 of the unclipped curve at parameter `s`.
fn curve_slope(s: f64, p: f64) -> f64 {
    (f_skew_d1(s) / 2.0) / (-(1.0 - 2.0 * p) * log_ratio(convolve(s, p)))
}

/// Numerical limit of the unclipped boundary slope at the R1 intercept
/// (s -> 1/2), estimated from s = 1/2 - 10^-k for k = 3..6 with one
/// Richardson level (the correction is quadratic in the offset).
pub fn boundary_slope_limit(p: f64) -> Result<f64> {
    if !(0.0..0.5).contains(&p) {
        return Err(Error::Domain(format!("p = {p} not in [0, 1/2)")));
    }
    let slopes: Vec<f64> = (3..=6)
        .map(|k| curve_slope(0.5 - 10f64.powi(-k), p))
        .collect();
    // ratio-100 extrapolation of the first pair; the later ones only lose
    // precision to cancellation and serve as a consistency guard
    let extrap = (100.0 * slopes[1] - slopes[0]) / 99.0;
    let guard = (100.0 * slopes[2] - slopes[1]) / 99.0;
    if (extrap - guard).abs() > 1e-6 {
        return Err(Error::Domain(format!(
            "slope extrapolation failed to settle: {extrap} vs {guard}"
        )));
    }
    Ok(extrap)
}

/// Closed form of the same limit: -1 / (3 (1-2p)^2), derived from the
/// second-derivative ratio of the two curve coordinates.
pub fn boundary_slope_limit_analytic(p: f64) -> f64 {
    let d = 1.0 - 2.0 * p;
    -1.0 / (3.0 * d * d)
}

/// Regimes of the capacity region over the crossover range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// p < p_max: the sum-rate triangle.
    SumRateOnly,
    /// p_max <= p < p_o: parametric curve with the sum-rate clip active.
    ThreeConstraint,
    /// p >= p_o: the unclipped parametric curve.
    NoSumRate,
}

impl Regime {
    /// Half-open classification; exact boundary values go to the higher
    /// regime (both expressions agree there).
    pub fn classify(p: f64) -> Regime {
        if p < p_max() {
            Regime::SumRateOnly
        } else if p < p_o() {
            Regime::ThreeConstraint
        } else {
            Regime::NoSumRate
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Regime::SumRateOnly => "sum-rate-only",
            Regime::ThreeConstraint => "three-constraint",
            Regime::NoSumRate => "no-sum-rate",
        }
    }
}

fn validate_p(p: f64) -> Result<()> {
    if !(0.0..=0.5).contains(&p) {
        return Err(Error::Domain(format!("crossover p = {p} not in [0, 1/2]")));
    }
    Ok(())
}

fn curve_region(p: f64, s_grid: usize, clip: bool) -> Result<RateRegion> {
    if s_grid < 2 {
        return Err(Error::Domain("s_grid must be at least 2".into()));
    }
    let cap = sum_rate_cap();
    let mut pts = Vec::with_capacity(s_grid);
    for i in 0..s_grid {
        let s = 0.5 * i as f64 / (s_grid - 1) as f64;
        let hsp = binary_entropy(convolve(s, p));
        let r0 = 1.0 - hsp;
        let mut r1 = 0.5 * f_skew(s);
        if clip {
            r1 = r1.min(cap - 1.0 + hsp); // h(1/4) - 3/2 + h(s*p)
        }
        pts.push(RatePair::new(r0, r1.max(0.0)));
    }
    RateRegion::from_point_cloud(&pts)
}

/// The parametric inner-bound boundary with the sum-rate clip, swept over
/// `s_grid` points of [0, 1/2].
///
/// The closed form characterizes the boundary for p >= p_max; it stays
/// callable below that, where the capacity region is the triangle instead.
pub fn inner_boundary(p: f64, s_grid: usize) -> Result<RateRegion> {
    validate_p(p)?;
    curve_region(p, s_grid, true)
}

/// The capacity region of the family with its regime label.
pub fn capacity_region(p: f64, s_grid: usize) -> Result<(RateRegion, Regime)> {
    validate_p(p)?;
    let regime = Regime::classify(p);
    let cap = sum_rate_cap();
    let region = match regime {
        Regime::SumRateOnly => RateRegion::from_point_cloud(&[
            RatePair::new(0.0, cap),
            RatePair::new(cap, 0.0),
        ])?,
        Regime::ThreeConstraint => curve_region(p, s_grid, true)?,
        Regime::NoSumRate => curve_region(p, s_grid, false)?,
    };
    Ok((region, regime))
}

/// Symmetrized auxiliary: doubles the states to (u_i/2, s_i), (u_i/2, 1-s_i),
/// inducing the uniform input marginal. Never shrinks any of the three
/// bound functionals on this channel family.
pub fn symmetrize(aux: &AuxDecomposition) -> AuxDecomposition {
    let mut w = Vec::with_capacity(2 * aux.len());
    let mut s = Vec::with_capacity(2 * aux.len());
    for (&u, &x0) in aux.weights().iter().zip(aux.x0_given_u()) {
        w.push(0.5 * u);
        s.push(x0);
        w.push(0.5 * u);
        s.push(1.0 - x0);
    }
    AuxDecomposition::new(w, s).expect("symmetrized weights stay stochastic")
}

/// The mixture collapse point: the unique s in [0, 1/2] with
/// f(s) = sum_i u_i f(s_i), found by bisection.
pub fn s_int(weights: &[f64], values: &[f64]) -> Result<f64> {
    if weights.len() != values.len() || weights.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "{} weights vs {} values",
            weights.len(),
            values.len()
        )));
    }
    if values.iter().any(|&s| !(0.0..=0.5).contains(&s)) {
        return Err(Error::Domain("s_int values must lie in [0, 1/2]".into()));
    }
    let wsum: f64 = weights.iter().sum();
    if weights.iter().any(|&w| w < 0.0) || (wsum - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidDistribution(format!("weights sum to {wsum}")));
    }
    let target: f64 = weights.iter().zip(values).map(|(u, s)| u * f_skew(*s)).sum();
    let (mut lo, mut hi) = (0.0_f64, 0.5_f64);
    for _ in 0..200 {
        if hi - lo <= 1e-15 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f_skew(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Slack of the collapse dominance h(s_int * p) <= sum_i u_i h(s_i * p);
/// nonnegative in the proved regime p >= 1/6.
pub fn s_int_dominance_slack(weights: &[f64], values: &[f64], p: f64) -> Result<f64> {
    validate_p(p)?;
    let si = s_int(weights, values)?;
    let mix: f64 = weights
        .iter()
        .zip(values)
        .map(|(u, s)| u * binary_entropy(convolve(*s, p)))
        .sum();
    Ok(mix - binary_entropy(convolve(si, p)))
}

/// Region A: the two-auxiliary witness family that separates the generic
/// outer bound from the inner bound. For u in [0, 1/2] and s = (1/2-u)/(1-u):
///
/// ```text
/// R0 <= 1 - (1-u) h(s*p) - u h(p)
/// R1 <= (1-u) h(s/2) - 1/2 + u
/// R0 + R1 <= h(1/4) - 1/2
/// ```
pub fn region_a(p: f64, u_grid: usize) -> Result<RateRegion> {
    validate_p(p)?;
    if u_grid < 2 {
        return Err(Error::Domain("u_grid must be at least 2".into()));
    }
    let cap = sum_rate_cap();
    let hp = binary_entropy(p);
    let mut pts = Vec::with_capacity(2 * u_grid);
    for i in 0..u_grid {
        let u = 0.5 * i as f64 / (u_grid - 1) as f64;
        let s = if u < 1.0 { (0.5 - u) / (1.0 - u) } else { 0.0 };
        let a0 = 1.0 - (1.0 - u) * binary_entropy(convolve(s, p)) - u * hp;
        let a1 = (1.0 - u) * binary_entropy(s / 2.0) - 0.5 + u;
        let a0 = a0.max(0.0);
        let a1 = a1.max(0.0);
        let e0 = a0.min(cap);
        pts.push(RatePair::new(e0, a1.min(cap - e0)));
        let e1 = a1.min(cap);
        pts.push(RatePair::new(a0.min(cap - e1), e1));
    }
    RateRegion::from_point_cloud(&pts)
}

/// The revised single-auxiliary outer bound on this family, evaluated by
/// grid search. Matches [`capacity_region`] within grid tolerance.
pub fn bound3_region(p: f64, aux_card: usize, grid_n: usize) -> Result<RateRegion> {
    let ch = BsscBscChannel::new(p)?;
    bounds::revised_outer_region(&ch.triple(), aux_card, grid_n)
}

/// Verdict of the randomized symmetrization-dominance suite.
#[derive(Debug, Clone, Copy)]
pub struct SymmetrizationVerdict {
    pub trials: usize,
    /// Smallest slack over the three dominance inequalities and all draws.
    pub min_slack: f64,
    pub pass: bool,
}

/// Checks, on random auxiliary decompositions, that symmetrizing never
/// shrinks any of the three bound functionals:
/// I(U~;Y3) >= I(U;Y3), the conditional rates average to at least the min,
/// and the symmetric sum cap dominates the average of the original two.
pub fn symmetrization_suite(p: f64, trials: usize, seed: u64) -> Result<SymmetrizationVerdict> {
    validate_p(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = sum_rate_cap();
    let mut min_slack = f64::INFINITY;
    for _ in 0..trials {
        let m = rng.gen_range(1..=4usize);
        let mut w: Vec<f64> = (0..m).map(|_| rng.gen_range(1e-3..1.0)).collect();
        let sum: f64 = w.iter().sum();
        w.iter_mut().for_each(|x| *x /= sum);
        let adjust = 1.0 - w.iter().sum::<f64>();
        w[0] += adjust;
        let s: Vec<f64> = (0..m).map(|_| rng.gen_range(0.0..=1.0)).collect();

        // I(U;Y3) before/after: the symmetrized marginal output is uniform
        let cond_h: f64 = w.iter().zip(&s).map(|(u, si)| u * binary_entropy(convolve(*si, p))).sum();
        let mix: f64 = w.iter().zip(&s).map(|(u, si)| u * convolve(*si, p)).sum();
        let i_u_y3 = binary_entropy(mix) - cond_h;
        let i_tilde_y3 = 1.0 - cond_h;
        min_slack = min_slack.min(i_tilde_y3 - i_u_y3);

        // conditional rates: tilde value equals the average of the pair and
        // dominates the min
        let i1: f64 = w.iter().zip(&s).map(|(u, si)| u * (binary_entropy(si / 2.0) - si)).sum();
        let i2: f64 = w
            .iter()
            .zip(&s)
            .map(|(u, si)| u * (binary_entropy((1.0 - si) / 2.0) - (1.0 - si)))
            .sum();
        let tilde = 0.5 * (i1 + i2);
        min_slack = min_slack.min(tilde - i1.min(i2));

        // sum caps: symmetric input reaches h(1/4) - 1/2
        let xb: f64 = w.iter().zip(&s).map(|(u, si)| u * si).sum();
        let c1 = binary_entropy(xb / 2.0) - xb;
        let c2 = binary_entropy((1.0 - xb) / 2.0) - (1.0 - xb);
        min_slack = min_slack.min(cap - 0.5 * (c1 + c2));
    }
    Ok(SymmetrizationVerdict { trials, min_slack, pass: min_slack >= -1e-10 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dmc::{aux_channel_mutual_information, conditional_mutual_information};
    use crate::region::{max_vertical_gap, symmetric_vertical_gap};

    const CAP: f64 = 0.311_278_124_459_132_9;

    #[test]
    fn p_max_value_and_residual() {
        let pm = p_max();
        assert!((pm - 0.184).abs() < 0.001, "paper headline value");
        assert!((pm - 0.183_987_002_735_231_89).abs() < 1e-11);
        let residual = (1.0 - binary_entropy(pm)) - sum_rate_cap();
        assert!(residual.abs() <= 1e-12, "defining equation residual {residual}");
        assert!((binary_entropy(pm) - 0.688_721_875_540_867_1).abs() < 1e-11);
    }

    #[test]
    fn p_o_value_and_slope() {
        let po = p_o();
        assert!((po - 0.211_324_865_405_187_1).abs() < 1e-15);
        let slope = boundary_slope_limit(po).unwrap();
        assert!((slope + 1.0).abs() < 1e-4, "slope at p_o is -1, got {slope}");
        // analytic oracle at another crossover
        let s = boundary_slope_limit(0.3).unwrap();
        assert!((s - boundary_slope_limit_analytic(0.3)).abs() < 1e-3);
        assert!((boundary_slope_limit_analytic(0.3) + 1.0 / (3.0 * 0.16)).abs() < 1e-12);
        // p_o is exactly where the analytic slope crosses -1
        assert!((boundary_slope_limit_analytic(po) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn inner_boundary_endpoints() {
        for p in [0.2, 0.25, 0.4] {
            let r = inner_boundary(p, 513).unwrap();
            assert!((r.r0_max() - (1.0 - binary_entropy(p))).abs() < 1e-10);
            assert!((r.height_at(0.0) - CAP).abs() < 1e-10);
            assert!(r.height_at(r.r0_max()) < 1e-10);
        }
    }

    #[test]
    fn eq_boundary_frozen_point() {
        // s = 0.25 lies on the 513-point grid of [0, 1/2]
        let r = inner_boundary(0.3, 513).unwrap();
        let r0 = 0.029_049_405_545_331_4;
        let r1 = 0.248_999_223_062_281;
        assert!((r.height_at(r0) - r1).abs() < 1e-9);
        // the sum-rate term is inactive at this point
        let t2 = sum_rate_cap() - 1.0 + binary_entropy(convolve(0.25, 0.3));
        assert!(t2 > r1);
    }

    #[test]
    fn regimes_and_intercepts() {
        let (r, reg) = capacity_region(0.1, 257).unwrap();
        assert_eq!(reg, Regime::SumRateOnly);
        assert!((r.r1_max() - CAP).abs() < 1e-12);
        assert!((r.r0_max() - CAP).abs() < 1e-12);

        let (_, reg) = capacity_region(0.2, 257).unwrap();
        assert_eq!(reg, Regime::ThreeConstraint);
        let (_, reg) = capacity_region(0.25, 257).unwrap();
        assert_eq!(reg, Regime::NoSumRate);
        // boundary values go to the higher regime
        assert_eq!(Regime::classify(p_max()), Regime::ThreeConstraint);
        assert_eq!(Regime::classify(p_o()), Regime::NoSumRate);
    }

    #[test]
    fn clip_active_between_thresholds() {
        // at p = 0.2 the sum-rate term switches the min somewhere
        let clipped = curve_region(0.2, 2049, true).unwrap();
        let unclipped = curve_region(0.2, 2049, false).unwrap();
        let (gap, _) = max_vertical_gap(&clipped, &unclipped);
        assert!(gap > 1e-3, "clip must bite at p = 0.2, gap {gap}");
    }

    #[test]
    fn clip_inactive_above_po() {
        // above p_o the first term is the min everywhere on the grid
        for p in [0.25, 0.4] {
            for i in 0..=2000 {
                let s = 0.5 * i as f64 / 2000.0;
                let t1 = 0.5 * f_skew(s);
                let t2 = sum_rate_cap() - 1.0 + binary_entropy(convolve(s, p));
                assert!(t2 - t1 >= -1e-12, "clip bites at p = {p}, s = {s}");
            }
        }
    }

    #[test]
    fn halfplane_clip_reproduces_the_boundary_min() {
        // clipping the unclipped curve by the sum-rate halfplane matches the
        // pointwise min within chord resolution (dense grid)
        let p = 0.2;
        let unclipped = curve_region(p, 4097, false).unwrap();
        let clipped_via_halfplane = unclipped.intersect_halfplane(1.0, 1.0, sum_rate_cap());
        let direct = curve_region(p, 4097, true).unwrap();
        assert!(symmetric_vertical_gap(&clipped_via_halfplane, &direct) < 1e-5);
    }

    #[test]
    fn capacity_respects_sum_rate_cap() {
        for p in [0.0, 0.1, 0.19, 0.25, 0.4, 0.5] {
            let (r, _) = capacity_region(p, 257).unwrap();
            for v in r.boundary() {
                assert!(v.r0 + v.r1 <= CAP + 1e-12);
            }
        }
    }

    #[test]
    fn capacity_continuous_across_p_max() {
        let (below, _) = capacity_region(p_max() - 1e-6, 4097).unwrap();
        let (above, _) = capacity_region(p_max() + 1e-6, 4097).unwrap();
        assert!(symmetric_vertical_gap(&below, &above) <= 1e-4);
    }

    #[test]
    fn symmetrize_relations() {
        let ch = BsscBscChannel::new(0.3).unwrap().triple();
        let aux = AuxDecomposition::new(vec![0.3, 0.7], vec![0.15, 0.6]).unwrap();
        let tilde = symmetrize(&aux);
        assert_eq!(tilde.len(), 4);
        assert!((tilde.marginal_input().prob(0) - 0.5).abs() < 1e-12);

        let i3 = aux_channel_mutual_information(&aux, &ch.y3).unwrap();
        let i3t = aux_channel_mutual_information(&tilde, &ch.y3).unwrap();
        assert!(i3t >= i3 - 1e-12);

        let c1 = conditional_mutual_information(&tilde, &ch.y1).unwrap();
        let c2 = conditional_mutual_information(&tilde, &ch.y2).unwrap();
        assert!((c1 - c2).abs() < 1e-12, "tilde conditional rates equalize");
        let o1 = conditional_mutual_information(&aux, &ch.y1).unwrap();
        let o2 = conditional_mutual_information(&aux, &ch.y2).unwrap();
        assert!((c1 - 0.5 * (o1 + o2)).abs() < 1e-12);
    }

    #[test]
    fn symmetrize_fixed_point_on_symmetric_aux() {
        let ch = BsscBscChannel::new(0.25).unwrap().triple();
        let aux = AuxDecomposition::new(vec![0.5, 0.5], vec![0.2, 0.8]).unwrap();
        let tilde = symmetrize(&aux);
        for m in [&ch.y1, &ch.y2, &ch.y3] {
            let a = conditional_mutual_information(&aux, m).unwrap();
            let b = conditional_mutual_information(&tilde, m).unwrap();
            assert!((a - b).abs() < 1e-12);
            let a = aux_channel_mutual_information(&aux, m).unwrap();
            let b = aux_channel_mutual_information(&tilde, m).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn symmetrization_suite_dominates() {
        for p in [0.2, 0.3, 0.4] {
            let v = symmetrization_suite(p, 1000, 0).unwrap();
            assert!(v.pass, "min slack {} at p = {p}", v.min_slack);
        }
    }

    #[test]
    fn s_int_examples() {
        assert!((s_int(&[1.0], &[0.3]).unwrap() - 0.3).abs() < 1e-12);
        assert!((s_int(&[0.25, 0.75], &[0.2, 0.2]).unwrap() - 0.2).abs() < 1e-12);
        let si = s_int(&[0.5, 0.5], &[0.1, 0.3]).unwrap();
        assert!((si - 0.178_985_088_624_644).abs() < 1e-9);
        let slack = s_int_dominance_slack(&[0.5, 0.5], &[0.1, 0.3], 0.25).unwrap();
        assert!((slack - 0.001_788_470_075).abs() < 1e-9);
        assert!(slack > 0.0);
        assert!(s_int(&[0.5, 0.5], &[0.1, 0.7]).is_err());
    }

    #[test]
    fn region_a_corners() {
        let p = 0.25;
        let r = region_a(p, 513).unwrap();
        assert!((r.height_at(0.0) - CAP).abs() < 1e-12);
        assert!((r.r0_max() - (1.0 - binary_entropy(p))).abs() < 1e-12);
        assert!(r.height_at(r.r0_max()) < 1e-12);
    }

    #[test]
    fn region_a_separates_bounds_at_quarter() {
        let (inner, _) = capacity_region(0.25, 2049).unwrap();
        let ra = region_a(0.25, 2049).unwrap();
        let (gap, at) = max_vertical_gap(&inner, &ra);
        assert!(gap > 1e-3, "Region A exceeds the inner bound, gap {gap} at {at}");
        assert!((gap - 1.82e-2).abs() < 2e-3, "gap magnitude near the known value, got {gap}");
        // below p_max both collapse to the triangle
        let (tri, _) = capacity_region(0.1, 2049).unwrap();
        let ra = region_a(0.1, 2049).unwrap();
        assert!(symmetric_vertical_gap(&tri, &ra) <= 1e-6);
    }

    #[test]
    fn bound3_matches_capacity_small_grid() {
        for p in [0.25, 0.4] {
            let (cap_region, _) = capacity_region(p, 513).unwrap();
            let b3 = bound3_region(p, 2, 101).unwrap();
            let gap = symmetric_vertical_gap(&b3, &cap_region);
            assert!(gap <= 4e-3, "bound3 vs capacity at p = {p}: {gap}");
        }
        // the degenerate auxiliary point sits inside the capacity region
        let (cap_region, _) = capacity_region(0.25, 513).unwrap();
        assert!(cap_region.contains(RatePair::new(0.0, CAP), 1e-9));
    }

    #[test]
    fn channel_validation() {
        assert!(BsscBscChannel::new(0.51).is_err());
        assert!(BsscBscChannel::new(-0.01).is_err());
        assert!(capacity_region(0.7, 65).is_err());
        assert!(inner_boundary(0.3, 1).is_err());
    }
}
