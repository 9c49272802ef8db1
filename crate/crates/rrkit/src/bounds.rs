//! Grid optimizers for the generic inner and outer bounds.
//!
//! All three sweeps enumerate auxiliary decompositions of a binary channel
//! input on deterministic uniform grids: conditionals `P(X=0|U=i)` on a
//! `grid_n`-point grid of [0,1] (auxiliary states are exchangeable, so
//! tuples are enumerated nondecreasing), weights on a simplex grid. Weight
//! resolution is capped at [`WEIGHT_RESOLUTION_CAP`] steps: the conditional
//! grid is what controls boundary accuracy, weight spacing only perturbs
//! mixture coefficients, and an uncapped 201-step weight simplex would put
//! the sweep at ~1e11 cells. Iteration order is fixed and results reduce in
//! grid order, so output is deterministic and independent of thread count.
//!
//! Everything is table-driven: per-state functionals are precomputed on the
//! conditional grid, and the marginal-dependent terms on the lattice of
//! exactly representable means k/(nw*ns), so the inner loop is a handful of
//! fused multiply-adds and two table lookups per cell.

use rayon::prelude::*;

use crate::dmc::{distribution_entropy, ChannelTriple, StochasticMatrix};
use crate::region::{BinnedChampions, RatePair, RateRegion, RegionBuilder};
use crate::{Error, Result};

/// Weight-simplex resolution cap for the pentagon sweeps (inner bound and
/// revised outer bound). The optimizing mixtures of the target family sit on
/// this grid, and the conditional grid is what controls boundary accuracy.
pub const WEIGHT_RESOLUTION_CAP: usize = 20;

/// Weight cap for the two-auxiliary outer sweep, which is not on a timed
/// path and benefits from finer mixtures when covering witness families.
pub const OUTER_WEIGHT_RESOLUTION_CAP: usize = 40;

/// Sweeps at or below this many cells use the exact hull accumulator;
/// larger ones switch to per-bin champions (see `region::BinnedChampions`).
const EXACT_CELL_LIMIT: u128 = 30_000_000;

/// Auxiliary cardinalities above this are refused (cell count explodes).
pub const MAX_AUX_CARD: usize = 6;

/// Precomputed per-grid tables for one channel triple.
struct Tables {
    ns: usize,
    nw: usize,
    /// H(Y_k | X ~ (s_j, 1-s_j)) per conditional-grid index j
    h1: Vec<f64>,
    h2: Vec<f64>,
    h3: Vec<f64>,
    /// I(X;Y_k) at input (s_j, 1-s_j)
    i1: Vec<f64>,
    i2: Vec<f64>,
    /// marginal-entropy and sum-cap tables on the mean lattice k/(nw*ns)
    h1m: Vec<f64>,
    h2m: Vec<f64>,
    h3m: Vec<f64>,
    cmin: Vec<f64>,
    /// upper bound on any emitted rate (bin scaling for the hull builder)
    r0_cap: f64,
}

fn mix_entropy(ch: &StochasticMatrix, s: f64) -> f64 {
    let (r0, r1) = (ch.row(0), ch.row(1));
    let mix: Vec<f64> = r0.iter().zip(r1).map(|(&a, &b)| s * a + (1.0 - s) * b).collect();
    distribution_entropy(&mix)
}

impl Tables {
    fn new(triple: &ChannelTriple, grid_n: usize, nw: usize) -> Self {
        let ns = grid_n - 1;
        let hx1 = [distribution_entropy(triple.y1.row(0)), distribution_entropy(triple.y1.row(1))];
        let hx2 = [distribution_entropy(triple.y2.row(0)), distribution_entropy(triple.y2.row(1))];
        let mut h1 = Vec::with_capacity(ns + 1);
        let mut h2 = Vec::with_capacity(ns + 1);
        let mut h3 = Vec::with_capacity(ns + 1);
        let mut i1 = Vec::with_capacity(ns + 1);
        let mut i2 = Vec::with_capacity(ns + 1);
        for j in 0..=ns {
            let s = j as f64 / ns as f64;
            let m1 = mix_entropy(&triple.y1, s);
            let m2 = mix_entropy(&triple.y2, s);
            h1.push(m1);
            h2.push(m2);
            h3.push(mix_entropy(&triple.y3, s));
            i1.push(m1 - (s * hx1[0] + (1.0 - s) * hx1[1]));
            i2.push(m2 - (s * hx2[0] + (1.0 - s) * hx2[1]));
        }
        let lat = nw * ns;
        let mut h1m = Vec::with_capacity(lat + 1);
        let mut h2m = Vec::with_capacity(lat + 1);
        let mut h3m = Vec::with_capacity(lat + 1);
        let mut cmin = Vec::with_capacity(lat + 1);
        for k in 0..=lat {
            let xb = k as f64 / lat as f64;
            let m1 = mix_entropy(&triple.y1, xb);
            let m2 = mix_entropy(&triple.y2, xb);
            h1m.push(m1);
            h2m.push(m2);
            h3m.push(mix_entropy(&triple.y3, xb));
            let c1 = m1 - (xb * hx1[0] + (1.0 - xb) * hx1[1]);
            let c2 = m2 - (xb * hx2[0] + (1.0 - xb) * hx2[1]);
            cmin.push(c1.min(c2));
        }
        let max_out = triple
            .y3
            .num_outputs()
            .max(triple.y1.num_outputs())
            .max(triple.y2.num_outputs());
        let r0_cap = (max_out as f64).log2().max(1.0) + 1e-9;
        Tables { ns, nw, h1, h2, h3, i1, i2, h1m, h2m, h3m, cmin, r0_cap }
    }
}

/// Lexicographic compositions of `total` into `m` nonnegative parts.
fn compositions(total: usize, m: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(left - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total as u32, m, &mut Vec::with_capacity(m), &mut out);
    out
}

/// Advance a nondecreasing index tuple in place; the first coordinate is
/// pinned (it defines the parallel chunk). Returns false when exhausted.
#[inline]
fn next_tuple(idx: &mut [usize], ns: usize) -> bool {
    let mut d = idx.len() - 1;
    loop {
        if d == 0 {
            return false;
        }
        if idx[d] < ns {
            idx[d] += 1;
            let v = idx[d];
            for e in idx.iter_mut().skip(d + 1) {
                *e = v;
            }
            return true;
        }
        d -= 1;
    }
}

/// Destination for emitted corner points.
trait CornerSink {
    fn push(&mut self, r0: f64, r1: f64);
}

impl CornerSink for RegionBuilder {
    #[inline]
    fn push(&mut self, r0: f64, r1: f64) {
        RegionBuilder::push(self, r0, r1);
    }
}

impl CornerSink for BinnedChampions {
    #[inline]
    fn push(&mut self, r0: f64, r1: f64) {
        BinnedChampions::push(self, r0, r1);
    }
}

/// Corner rule applied to each cell's functionals.
#[derive(Clone, Copy)]
enum CornerRule {
    /// Bound 1 pentagon: R0 <= a, R1 <= min(r1,r2), R0+R1 <= c.
    Inner,
    /// Revised outer bound: R0 <= a, R0+R1 <= a + min(r1,r2), R0+R1 <= c.
    RevisedOuter,
}

/// Per-chunk corner emitter. Corners that land on an axis are reduced to a
/// running maximum (only the extreme one can survive the hull), which cuts
/// sink traffic roughly in half in the clip-dominated regimes.
struct CornerEmitter<'a, S: CornerSink> {
    sink: &'a mut S,
    rule: CornerRule,
    /// largest r0 among corners of the form (x, 0)
    axis_r0: f64,
    /// largest r1 among corners of the form (0, y)
    axis_r1: f64,
}

impl<'a, S: CornerSink> CornerEmitter<'a, S> {
    fn new(sink: &'a mut S, rule: CornerRule) -> Self {
        Self { sink, rule, axis_r0: -1.0, axis_r1: -1.0 }
    }

    #[inline]
    fn cell(&mut self, a: f64, r1: f64, r2: f64, c: f64) {
        match self.rule {
            CornerRule::Inner => {
                let r = r1.min(r2);
                if a + r <= c {
                    // sum cap inactive: both pentagon corners coincide
                    self.sink.push(a, r);
                } else {
                    if a >= c {
                        self.axis_r0 = self.axis_r0.max(c);
                    } else {
                        self.sink.push(a, c - a);
                    }
                    if r >= c {
                        self.axis_r1 = self.axis_r1.max(c);
                    } else {
                        self.sink.push(a.min(c - r), r);
                    }
                }
            }
            CornerRule::RevisedOuter => {
                let d = (a + r1.min(r2)).min(c);
                if a >= d {
                    self.axis_r0 = self.axis_r0.max(d);
                } else {
                    self.sink.push(a, d - a);
                }
                self.axis_r1 = self.axis_r1.max(d);
            }
        }
    }

    fn finish(self) {
        if self.axis_r0 >= 0.0 {
            self.sink.push(self.axis_r0, 0.0);
        }
        if self.axis_r1 >= 0.0 {
            self.sink.push(0.0, self.axis_r1);
        }
    }
}

macro_rules! corner_chunk_arity {
    ($name:ident, $m:literal) => {
        /// Sweeps every cell whose smallest conditional index is `j1`.
        fn $name<S: CornerSink>(t: &Tables, comps: &[([f64; $m], [u32; $m])], j1: usize, rule: CornerRule, b: &mut S) {
            let mut em = CornerEmitter::new(b, rule);
            let mut idx = [j1; $m];
            loop {
                let mut h3v = [0.0; $m];
                let mut i1v = [0.0; $m];
                let mut i2v = [0.0; $m];
                let mut bv = [0u32; $m];
                for d in 0..$m {
                    let j = idx[d];
                    h3v[d] = t.h3[j];
                    i1v[d] = t.i1[j];
                    i2v[d] = t.i2[j];
                    bv[d] = j as u32;
                }
                for (w, iw) in comps {
                    let mut k = 0u32;
                    let mut h3s = 0.0;
                    let mut r1 = 0.0;
                    let mut r2 = 0.0;
                    for d in 0..$m {
                        k += iw[d] * bv[d];
                        h3s += w[d] * h3v[d];
                        r1 += w[d] * i1v[d];
                        r2 += w[d] * i2v[d];
                    }
                    let k = k as usize;
                    em.cell(t.h3m[k] - h3s, r1, r2, t.cmin[k]);
                }
                if !next_tuple(&mut idx, t.ns) {
                    em.finish();
                    return;
                }
            }
        }
    };
}

corner_chunk_arity!(corner_chunk_m2, 2);
corner_chunk_arity!(corner_chunk_m3, 3);

/// Dynamic-arity fallback.
fn corner_chunk_dyn<S: CornerSink>(t: &Tables, comps: &[Vec<u32>], m: usize, j1: usize, rule: CornerRule, b: &mut S) {
    let nw = t.nw as f64;
    let mut em = CornerEmitter::new(b, rule);
    let mut idx = vec![j1; m];
    loop {
        for comp in comps {
            let mut k = 0u32;
            let mut h3s = 0.0;
            let mut r1 = 0.0;
            let mut r2 = 0.0;
            for d in 0..m {
                let w = comp[d] as f64 / nw;
                let j = idx[d];
                k += comp[d] * j as u32;
                h3s += w * t.h3[j];
                r1 += w * t.i1[j];
                r2 += w * t.i2[j];
            }
            let k = k as usize;
            em.cell(t.h3m[k] - h3s, r1, r2, t.cmin[k]);
        }
        if !next_tuple(&mut idx, t.ns) {
            em.finish();
            return;
        }
    }
}

fn pack_comps<const M: usize>(comps: &[Vec<u32>], nw: usize) -> Vec<([f64; M], [u32; M])> {
    comps
        .iter()
        .map(|c| {
            let mut w = [0.0; M];
            let mut iw = [0u32; M];
            for d in 0..M {
                iw[d] = c[d];
                w[d] = c[d] as f64 / nw as f64;
            }
            (w, iw)
        })
        .collect()
}

fn validate(triple: &ChannelTriple, aux_card: usize, grid_n: usize) -> Result<()> {
    if triple.num_inputs() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "bound optimizers need a binary input alphabet, got {}",
            triple.num_inputs()
        )));
    }
    if grid_n < 2 {
        return Err(Error::Domain(format!("grid_n = {grid_n} must be at least 2")));
    }
    if !(1..=MAX_AUX_CARD).contains(&aux_card) {
        return Err(Error::Domain(format!("aux_card = {aux_card} must be in 1..={MAX_AUX_CARD}")));
    }
    Ok(())
}

fn weight_resolution(grid_n: usize, cap: usize) -> usize {
    (grid_n - 1).min(cap)
}

/// Number of nondecreasing conditional tuples: C(ns + m, m).
fn tuple_count(ns: usize, m: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..m {
        c = c * (ns + 1 + i) as u128 / (i + 1) as u128;
    }
    c
}

fn run_chunk<S: CornerSink>(
    t: &Tables,
    comps: &[Vec<u32>],
    aux_card: usize,
    nw: usize,
    j1: usize,
    rule: CornerRule,
    b: &mut S,
) {
    match aux_card {
        1 => corner_chunk_m1_like(t, j1, rule, b),
        2 => corner_chunk_m2(t, &pack_comps::<2>(comps, nw), j1, rule, b),
        3 => corner_chunk_m3(t, &pack_comps::<3>(comps, nw), j1, rule, b),
        _ => corner_chunk_dyn(t, comps, aux_card, j1, rule, b),
    }
}

fn corner_sweep(triple: &ChannelTriple, aux_card: usize, grid_n: usize, rule: CornerRule) -> Result<RateRegion> {
    validate(triple, aux_card, grid_n)?;
    let nw = weight_resolution(grid_n, WEIGHT_RESOLUTION_CAP);
    let t = Tables::new(triple, grid_n, nw);
    let comps = compositions(nw, aux_card);
    let cells = tuple_count(t.ns, aux_card) * comps.len() as u128;
    let pts: Vec<RatePair> = if cells <= EXACT_CELL_LIMIT {
        let chunks: Vec<Vec<RatePair>> = (0..t.ns + 1)
            .into_par_iter()
            .map(|j1| {
                let mut b = RegionBuilder::new();
                run_chunk(&t, &comps, aux_card, nw, j1, rule, &mut b);
                b.into_points()
            })
            .collect();
        chunks.into_iter().flatten().collect()
    } else {
        (0..t.ns + 1)
            .into_par_iter()
            .with_min_len(8)
            .fold(
                || BinnedChampions::new(t.r0_cap),
                |mut b, j1| {
                    run_chunk(&t, &comps, aux_card, nw, j1, rule, &mut b);
                    b
                },
            )
            .reduce(|| BinnedChampions::new(t.r0_cap), BinnedChampions::merge)
            .into_points()
    };
    RateRegion::from_point_cloud(&pts)
}

/// Single-state sweep (aux_card = 1): the auxiliary carries nothing, every
/// cell is a plain input distribution.
fn corner_chunk_m1_like<S: CornerSink>(t: &Tables, j1: usize, rule: CornerRule, b: &mut S) {
    let mut em = CornerEmitter::new(b, rule);
    let k = j1 * t.nw;
    em.cell(t.h3m[k] - t.h3[j1], t.i1[j1], t.i2[j1], t.cmin[k]);
    em.finish();
}

/// Achievable region of Bound 1 by deterministic grid search.
///
/// Returns the hull of the pentagon corner points over every auxiliary
/// decomposition on the grid: an inner approximation of the true Bound-1
/// region that refines with `grid_n` and never shrinks with `aux_card`.
pub fn inner_bound(triple: &ChannelTriple, aux_card: usize, grid_n: usize) -> Result<RateRegion> {
    corner_sweep(triple, aux_card, grid_n, CornerRule::Inner)
}

/// Single-auxiliary revised outer bound, evaluated by the same grid search
/// (the engine behind the closed-form module's Bound-3 evaluation).
pub(crate) fn revised_outer_region(triple: &ChannelTriple, aux_card: usize, grid_n: usize) -> Result<RateRegion> {
    corner_sweep(triple, aux_card, grid_n, CornerRule::RevisedOuter)
}

// ---------------------------------------------------------------------------
// Two-auxiliary outer bound (inner approximation)
// ---------------------------------------------------------------------------

const ABINS: usize = 4096;

/// Per-mean-bucket Pareto staircases: best achievable sum cap `d_j` per
/// R0-cap bin for each receiver role.
struct Bound2Acc {
    l1: Vec<f64>,
    l2: Vec<f64>,
}

impl Bound2Acc {
    fn new(buckets: usize) -> Self {
        Bound2Acc { l1: vec![-1.0; buckets * ABINS], l2: vec![-1.0; buckets * ABINS] }
    }

    /// Elementwise max: associative and exact, so the parallel reduction
    /// order cannot change the result.
    fn merge(mut self, other: Bound2Acc) -> Bound2Acc {
        for (a, b) in self.l1.iter_mut().zip(&other.l1) {
            *a = a.max(*b);
        }
        for (a, b) in self.l2.iter_mut().zip(&other.l2) {
            *a = a.max(*b);
        }
        self
    }
}

/// Bound-2 sweep chunk; tracks the exact mean-lattice index per cell so
/// decompositions pair only within a common input marginal (rounded to the
/// conditional grid).
fn bound2_chunk(
    t: &Tables,
    comps: &[Vec<u32>],
    m: usize,
    j1: usize,
    constrained: bool,
    inv_a: f64,
    acc: &mut Bound2Acc,
) {
    let nw = t.nw as f64;
    let mut idx = vec![j1; m];
    loop {
        for comp in comps {
            let mut k = 0u32;
            let mut h3s = 0.0;
            let mut r1 = 0.0;
            let mut r2 = 0.0;
            let mut h1s = 0.0;
            let mut h2s = 0.0;
            for d in 0..m {
                let w = comp[d] as f64 / nw;
                let j = idx[d];
                k += comp[d] * j as u32;
                h3s += w * t.h3[j];
                r1 += w * t.i1[j];
                r2 += w * t.i2[j];
                if constrained {
                    h1s += w * t.h1[j];
                    h2s += w * t.h2[j];
                }
            }
            let k = k as usize;
            let a = t.h3m[k] - h3s;
            let c = t.cmin[k];
            let d1 = (a + r1).min(c);
            let d2 = (a + r2).min(c);
            let (a1, a2) = if constrained {
                ((t.h1m[k] - h1s).min(a), (t.h2m[k] - h2s).min(a))
            } else {
                (a, a)
            };
            let bucket = (2 * k + t.nw) / (2 * t.nw);
            let base = bucket * ABINS;
            let bin1 = ((a1.max(0.0) * inv_a) as usize).min(ABINS - 1);
            let bin2 = ((a2.max(0.0) * inv_a) as usize).min(ABINS - 1);
            if d1 > acc.l1[base + bin1] {
                acc.l1[base + bin1] = d1;
            }
            if d2 > acc.l2[base + bin2] {
                acc.l2[base + bin2] = d2;
            }
        }
        if !next_tuple(&mut idx, t.ns) {
            return;
        }
    }
}

fn outer_bound_impl(triple: &ChannelTriple, aux_card: usize, grid_n: usize, constrained: bool) -> Result<RateRegion> {
    validate(triple, aux_card, grid_n)?;
    let nw = weight_resolution(grid_n, OUTER_WEIGHT_RESOLUTION_CAP);
    let t = Tables::new(triple, grid_n, nw);
    let comps = compositions(nw, aux_card);
    let buckets = t.ns + 1;
    let inv_a = ABINS as f64 / t.r0_cap;

    let acc = (0..t.ns + 1)
        .into_par_iter()
        .with_min_len(16)
        .fold(
            || Bound2Acc::new(buckets),
            |mut acc, j1| {
                bound2_chunk(&t, &comps, aux_card, j1, constrained, inv_a, &mut acc);
                acc
            },
        )
        .reduce(|| Bound2Acc::new(buckets), Bound2Acc::merge);

    // Merge the two role staircases per bucket: suffix maxima give, for each
    // R0 threshold A (conservative lower bin edge), the best joint sum cap.
    let mut pts: Vec<RatePair> = vec![RatePair::new(0.0, 0.0)];
    let step = t.r0_cap / ABINS as f64;
    for bucket in 0..buckets {
        let l1 = &acc.l1[bucket * ABINS..(bucket + 1) * ABINS];
        let l2 = &acc.l2[bucket * ABINS..(bucket + 1) * ABINS];
        let mut s1 = f64::NEG_INFINITY;
        let mut suffix = vec![(0.0_f64, 0.0_f64); ABINS];
        let mut s2 = f64::NEG_INFINITY;
        for bin in (0..ABINS).rev() {
            s1 = s1.max(l1[bin]);
            s2 = s2.max(l2[bin]);
            suffix[bin] = (s1, s2);
        }
        for (bin, &(m1, m2)) in suffix.iter().enumerate() {
            if m1 < 0.0 || m2 < 0.0 {
                break;
            }
            let d = m1.min(m2);
            let a = bin as f64 * step;
            let e = a.min(d);
            pts.push(RatePair::new(e, d - e));
            if bin == 0 {
                pts.push(RatePair::new(0.0, d));
            }
        }
    }
    RateRegion::from_point_cloud(&pts)
}

/// Inner approximation of the two-auxiliary outer bound.
///
/// Pairs (U1, U2) must induce a common input marginal; the sweep enumerates
/// single decompositions, buckets them by induced mean (rounded to the
/// conditional grid), and combines the per-receiver Pareto staircases within
/// each bucket. With truncated cardinality and gridded weights this is an
/// inner approximation of the Bound-2 region: large enough to exhibit points
/// outside Bound 1, never claimed to be the full outer bound.
pub fn outer_bound_inner_approx(triple: &ChannelTriple, aux_card: usize, grid_n: usize) -> Result<RateRegion> {
    outer_bound_impl(triple, aux_card, grid_n, false)
}

/// Same sweep with the optional extra constraint
/// R0 <= min(I(U1;Y1), I(U2;Y2)), for empirical comparison against
/// [`outer_bound_inner_approx`]. No equality between the two is asserted.
pub fn outer_bound_inner_approx_constrained(
    triple: &ChannelTriple,
    aux_card: usize,
    grid_n: usize,
) -> Result<RateRegion> {
    outer_bound_impl(triple, aux_card, grid_n, true)
}

/// Closed-form region for a deterministic Y3 branch:
/// R0 <= max H(Y3), R0+R1 <= max min(I(X;Y1), I(X;Y2)), i.e. the convex
/// closure of the U=Y3 and U=empty corner points. Maxima by 1-D grid search
/// over P(X=0).
pub fn deterministic_y3_region(triple: &ChannelTriple) -> Result<RateRegion> {
    if triple.num_inputs() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "deterministic-Y3 region needs a binary input alphabet, got {}",
            triple.num_inputs()
        )));
    }
    if !triple.y3.is_deterministic() {
        return Err(Error::NotDeterministic(
            "Y3 rows must be unit vectors for the deterministic-Y3 region".into(),
        ));
    }
    const GRID: usize = 20_000;
    let hx1 = [distribution_entropy(triple.y1.row(0)), distribution_entropy(triple.y1.row(1))];
    let hx2 = [distribution_entropy(triple.y2.row(0)), distribution_entropy(triple.y2.row(1))];
    let mut r0_cap = 0.0_f64;
    let mut sum_cap = 0.0_f64;
    for k in 0..=GRID {
        let xb = k as f64 / GRID as f64;
        r0_cap = r0_cap.max(mix_entropy(&triple.y3, xb));
        let c1 = mix_entropy(&triple.y1, xb) - (xb * hx1[0] + (1.0 - xb) * hx1[1]);
        let c2 = mix_entropy(&triple.y2, xb) - (xb * hx2[0] + (1.0 - xb) * hx2[1]);
        sum_cap = sum_cap.max(c1.min(c2));
    }
    let e = r0_cap.min(sum_cap);
    RateRegion::from_point_cloud(&[RatePair::new(0.0, sum_cap), RatePair::new(e, sum_cap - e)])
}
