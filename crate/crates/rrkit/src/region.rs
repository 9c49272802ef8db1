//! Convex 2-D rate regions in the (R0, R1) quadrant.
//!
//! A region is stored by the upper-right boundary of its down-closed convex
//! hull: a polyline with strictly increasing `r0`, non-increasing `r1` and
//! non-increasing slopes. Down-closure toward the axes is implicit, so the
//! boundary height is flat to the left of the first vertex and the region
//! ends at the last vertex's `r0`.

use std::io::Write;

use crate::{Error, Result};

/// Dedup tolerance for hull construction.
const DEDUP_TOL: f64 = 1e-12;
/// Default containment tolerance.
pub const CONTAINS_TOL: f64 = 1e-9;

/// A nonnegative rate pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatePair {
    pub r0: f64,
    pub r1: f64,
}

impl RatePair {
    pub fn new(r0: f64, r1: f64) -> Self {
        Self { r0, r1 }
    }
}

/// Down-closed convex region given by its Pareto boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct RateRegion {
    boundary: Vec<RatePair>,
}

/// Sort, dedupe and reduce a point set to the Pareto frontier of its
/// down-closed convex hull. Vertices are always members of the input set.
fn pareto_upper_chain(mut points: Vec<RatePair>) -> Vec<RatePair> {
    points.sort_by(|a, b| a.r0.total_cmp(&b.r0).then(b.r1.total_cmp(&a.r1)));
    // collapse near-equal r0 values, keeping the highest r1 (first in group)
    let mut dedup: Vec<RatePair> = Vec::with_capacity(points.len());
    for p in points {
        match dedup.last() {
            Some(last) if (p.r0 - last.r0).abs() <= DEDUP_TOL => {}
            _ => dedup.push(p),
        }
    }
    // upper hull: pop the middle point whenever it lies on or below the
    // chord of its neighbours
    let mut hull: Vec<RatePair> = Vec::with_capacity(dedup.len().min(256));
    for p in dedup {
        hull.push(p);
        while hull.len() >= 3 {
            let [a, b, c] = [hull[hull.len() - 3], hull[hull.len() - 2], hull[hull.len() - 1]];
            let cross = (b.r0 - a.r0) * (c.r1 - a.r1) - (b.r1 - a.r1) * (c.r0 - a.r0);
            if cross >= -1e-15 {
                hull.remove(hull.len() - 2);
            } else {
                break;
            }
        }
    }
    // keep the Pareto part: from the highest vertex rightward (on a flat
    // top the rightmost vertex dominates, and max_by keeps the last one)
    let peak = hull
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.r1.total_cmp(&b.r1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    hull.drain(..peak);
    hull
}

impl RateRegion {
    /// Pareto frontier of the down-closed convex hull of `points`.
    ///
    /// Invariant under permutation and duplication of the input; near-equal
    /// `r0` values are merged at tolerance 1e-12.
    pub fn from_point_cloud(points: &[RatePair]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointCloud);
        }
        let mut cleaned = Vec::with_capacity(points.len());
        for p in points {
            if !(p.r0.is_finite() && p.r1.is_finite()) || p.r0 < -1e-9 || p.r1 < -1e-9 {
                return Err(Error::Domain(format!("invalid rate pair ({}, {})", p.r0, p.r1)));
            }
            cleaned.push(RatePair::new(p.r0.max(0.0), p.r1.max(0.0)));
        }
        Ok(Self { boundary: pareto_upper_chain(cleaned) })
    }

    pub fn boundary(&self) -> &[RatePair] {
        &self.boundary
    }

    /// Largest achievable R0.
    pub fn r0_max(&self) -> f64 {
        self.boundary.last().map_or(0.0, |p| p.r0)
    }

    /// Largest achievable R1 (the boundary height at R0 = 0).
    pub fn r1_max(&self) -> f64 {
        self.boundary.first().map_or(0.0, |p| p.r1)
    }

    /// Boundary height at `r0`: flat left of the first vertex, linear in
    /// between, and 0 beyond the last vertex.
    pub fn height_at(&self, r0: f64) -> f64 {
        let b = &self.boundary;
        if b.is_empty() || r0 > b[b.len() - 1].r0 {
            return 0.0;
        }
        if r0 <= b[0].r0 {
            return b[0].r1;
        }
        let i = b.partition_point(|v| v.r0 < r0);
        if b[i].r0 == r0 {
            return b[i].r1;
        }
        let (lo, hi) = (b[i - 1], b[i]);
        lo.r1 + (hi.r1 - lo.r1) * (r0 - lo.r0) / (hi.r0 - lo.r0)
    }

    /// True iff `pt` lies in the region expanded by `tol` in the sup norm.
    pub fn contains(&self, pt: RatePair, tol: f64) -> bool {
        let x = (pt.r0 - tol).max(0.0);
        let y = (pt.r1 - tol).max(0.0);
        x <= self.r0_max() && y <= self.height_at(x)
    }

    /// Clips the region by the halfplane a*r0 + b*r1 <= c (a, b >= 0).
    pub fn intersect_halfplane(&self, a: f64, b: f64, c: f64) -> RateRegion {
        assert!(a >= 0.0 && b >= 0.0 && (a > 0.0 || b > 0.0), "halfplane must face the axes");
        if c < 0.0 {
            return RateRegion { boundary: vec![RatePair::new(0.0, 0.0)] };
        }
        let r0_cut = if a > 0.0 { (c / a).min(self.r0_max()) } else { self.r0_max() };
        let mut xs: Vec<f64> = vec![0.0, r0_cut];
        for v in &self.boundary {
            if v.r0 <= r0_cut {
                xs.push(v.r0);
            }
        }
        if b > 0.0 {
            // crossings of the line with the flat part and each segment
            let line = |x: f64| (c - a * x) / b;
            let first = self.boundary[0];
            if a > 0.0 && first.r0 > 0.0 {
                let x = (c - b * first.r1) / a;
                if x > 0.0 && x < first.r0.min(r0_cut) {
                    xs.push(x);
                }
            }
            for w in self.boundary.windows(2) {
                let (p, q) = (w[0], w[1]);
                // solve height(x) = line(x) on [p.r0, q.r0]
                let dh = (q.r1 - p.r1) / (q.r0 - p.r0);
                let denom = dh + a / b;
                if denom.abs() > 1e-300 {
                    let x = (line(p.r0) - p.r1) / denom + p.r0;
                    if x > p.r0 && x < q.r0 && x <= r0_cut {
                        xs.push(x);
                    }
                }
            }
        }
        let mut pts = Vec::with_capacity(xs.len());
        for &x in &xs {
            let h = self.height_at(x);
            let y = if b > 0.0 { h.min((c - a * x) / b) } else { h };
            if y >= 0.0 {
                pts.push(RatePair::new(x, y));
            } else {
                pts.push(RatePair::new(x, 0.0));
            }
        }
        pts.push(RatePair::new(0.0, 0.0));
        RateRegion { boundary: pareto_upper_chain(pts) }
    }

    /// Writes the boundary as CSV with header `R0,R1`, one row per vertex,
    /// 12 significant digits.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "R0,R1")?;
        for p in &self.boundary {
            writeln!(w, "{:.11e},{:.11e}", p.r0, p.r1)?;
        }
        Ok(())
    }
}

/// Largest vertical excess of `b`'s boundary over `a`'s, with the R0 where
/// it is attained. Evaluated at every vertex of either boundary plus segment
/// midpoints; negative means `b` lies inside `a` everywhere vertically.
pub fn max_vertical_gap(a: &RateRegion, b: &RateRegion) -> (f64, f64) {
    let mut xs: Vec<f64> = a
        .boundary
        .iter()
        .chain(b.boundary.iter())
        .map(|p| p.r0)
        .chain([0.0])
        .collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    let mids: Vec<f64> = xs.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    xs.extend(mids);
    xs.sort_by(f64::total_cmp);
    let mut best = f64::NEG_INFINITY;
    let mut at = 0.0;
    for &x in &xs {
        let gap = b.height_at(x) - a.height_at(x);
        if gap > best {
            best = gap;
            at = x;
        }
    }
    (best, at)
}

/// Two-sided match metric: the larger of the two one-sided vertical gaps.
pub fn symmetric_vertical_gap(a: &RateRegion, b: &RateRegion) -> f64 {
    max_vertical_gap(a, b).0.max(max_vertical_gap(b, a).0)
}

/// Exact streaming hull accumulator for small grid sweeps.
///
/// Buffers every pushed point and compacts through the hull chain
/// periodically, so the result is identical to collecting every point and
/// hulling once while memory stays bounded.
pub(crate) struct RegionBuilder {
    buf: Vec<RatePair>,
    hull: Vec<RatePair>,
}

const BUILDER_FLUSH: usize = 1 << 20;

impl RegionBuilder {
    pub fn new() -> Self {
        Self { buf: Vec::with_capacity(BUILDER_FLUSH + 8), hull: Vec::new() }
    }

    #[inline]
    pub fn push(&mut self, r0: f64, r1: f64) {
        self.buf.push(RatePair::new(r0.max(0.0), r1.max(0.0)));
        if self.buf.len() >= BUILDER_FLUSH {
            self.compact();
        }
    }

    fn compact(&mut self) {
        self.buf.extend_from_slice(&self.hull);
        self.hull = pareto_upper_chain(std::mem::take(&mut self.buf));
    }

    /// Vertices of the hull of everything pushed so far.
    pub fn into_points(mut self) -> Vec<RatePair> {
        self.compact();
        self.hull
    }
}

/// Bin-champion accumulator for large grid sweeps.
///
/// Keeps, per r0 bin, the lexicographic maxima by (r1, r0) and by (r0, r1).
/// Both champions are exact visited points; only interior points of a bin's
/// Pareto staircase are dropped, so the hull of the champions undershoots
/// the exact hull by at most one bin span horizontally (a few 1e-5 of the
/// rate range). Updates are associative max operations: merging partial
/// accumulators in any order gives identical results.
pub(crate) struct BinnedChampions {
    inv_bin: f64,
    /// champion by (r1, r0); r1 < 0 marks empty
    by_r1: Vec<RatePair>,
    /// champion by (r0, r1); r1 < 0 marks empty
    by_r0: Vec<RatePair>,
}

pub(crate) const CHAMPION_BINS: usize = 16384;

impl BinnedChampions {
    pub fn new(r0_cap: f64) -> Self {
        Self {
            inv_bin: CHAMPION_BINS as f64 / r0_cap.max(1e-9),
            by_r1: vec![RatePair::new(0.0, -1.0); CHAMPION_BINS],
            by_r0: vec![RatePair::new(0.0, -1.0); CHAMPION_BINS],
        }
    }

    #[inline]
    pub fn push(&mut self, r0: f64, r1: f64) {
        let r0 = r0.max(0.0);
        let r1 = r1.max(0.0);
        let bin = ((r0 * self.inv_bin) as usize).min(CHAMPION_BINS - 1);
        let c = &mut self.by_r1[bin];
        if r1 > c.r1 || (r1 == c.r1 && r0 > c.r0) {
            *c = RatePair::new(r0, r1);
        }
        let c = &mut self.by_r0[bin];
        if c.r1 < 0.0 || r0 > c.r0 || (r0 == c.r0 && r1 > c.r1) {
            *c = RatePair::new(r0, r1);
        }
    }

    pub fn merge(mut self, other: BinnedChampions) -> BinnedChampions {
        for (a, b) in self.by_r1.iter_mut().zip(&other.by_r1) {
            if b.r1 > a.r1 || (b.r1 == a.r1 && b.r0 > a.r0) {
                *a = *b;
            }
        }
        for (a, b) in self.by_r0.iter_mut().zip(&other.by_r0) {
            if a.r1 < 0.0 || (b.r1 >= 0.0 && (b.r0 > a.r0 || (b.r0 == a.r0 && b.r1 > a.r1))) {
                *a = *b;
            }
        }
        self
    }

    pub fn into_points(self) -> Vec<RatePair> {
        let mut pts = Vec::with_capacity(2 * CHAMPION_BINS);
        for (a, b) in self.by_r1.into_iter().zip(self.by_r0) {
            if a.r1 >= 0.0 {
                pts.push(a);
            }
            if b.r1 >= 0.0 {
                pts.push(b);
            }
        }
        pts
    }
}


#[cfg(test)]
mod prop_tests {
    use super::*;
    use proptest::prelude::*;

    fn points() -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((0.0..1.0_f64, 0.0..1.0_f64), 1..60)
    }

    proptest! {
        #[test]
        fn hull_invariant_under_permutation_and_duplication(pts in points(), seed in 0_u64..1000) {
            let v: Vec<RatePair> = pts.iter().map(|&(a, b)| RatePair::new(a, b)).collect();
            let base = RateRegion::from_point_cloud(&v).unwrap();

            let mut shuffled = v.clone();
            let mut state = seed.wrapping_add(1);
            for i in (1..shuffled.len()).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                shuffled.swap(i, j);
            }
            shuffled.extend_from_slice(&v[..v.len().min(7)]); // duplicates
            let again = RateRegion::from_point_cloud(&shuffled).unwrap();
            prop_assert_eq!(base.boundary(), again.boundary());
        }

        #[test]
        fn clip_then_hull_stays_inside_hull_then_clip(pts in points(), a in 0.1..2.0_f64, b in 0.1..2.0_f64, c in 0.1..2.0_f64) {
            // Full equality of the two pipelines fails for sparse clouds
            // (the clipped hull's crossing vertices are convex combinations
            // pointwise clipping cannot produce), so the properties are
            // one-sided containment plus stability of the clipped region.
            let v: Vec<RatePair> = pts.iter().map(|&(x, y)| RatePair::new(x, y)).collect();
            let hull_then_clip = RateRegion::from_point_cloud(&v).unwrap().intersect_halfplane(a, b, c);
            // clip each point's down-closed rectangle, then hull the corners
            let mut projected: Vec<RatePair> = Vec::new();
            for p in &v {
                if a * p.r0 + b * p.r1 <= c {
                    projected.push(*p);
                    continue;
                }
                if p.r0 <= c / a {
                    projected.push(RatePair::new(p.r0, (c - a * p.r0) / b));
                } else {
                    projected.push(RatePair::new(c / a, 0.0));
                }
                if p.r1 <= c / b {
                    projected.push(RatePair::new((c - b * p.r1) / a, p.r1));
                } else {
                    projected.push(RatePair::new(0.0, c / b));
                }
            }
            let clip_then_hull = RateRegion::from_point_cloud(&projected).unwrap();
            let (excess, _) = max_vertical_gap(&hull_then_clip, &clip_then_hull);
            prop_assert!(excess < 1e-10, "pointwise clipping escaped the clipped hull by {excess}");

            // re-hulling the clipped vertices reproduces the region, and a
            // second identical clip is a no-op
            let rebuilt = RateRegion::from_point_cloud(hull_then_clip.boundary()).unwrap();
            prop_assert!(symmetric_vertical_gap(&rebuilt, &hull_then_clip) < 1e-12);
            let twice = hull_then_clip.intersect_halfplane(a, b, c);
            prop_assert!(symmetric_vertical_gap(&twice, &hull_then_clip) < 1e-12);
        }
    }
}
