//! Desk-scale verification of the flip-symmetric codebook argument.
//!
//! Codewords are n-bit words (n <= 10) indexed by a common message `m0` and
//! a private index `m1v`; decoding maps assign each output word a decision.
//! The doubling construction takes a base codebook with disjoint decoding
//! sets, adds every flipped codeword under the same `m0`, and resolves
//! decoding overlaps by an explicit tie that exact error accounting scores
//! as half credit. Everything here is computed by full enumeration over
//! output words, so equalities hold to machine precision rather than
//! asymptotically.
//!
//! Channels are fixed to the skew-symmetric family: `Y1` (input 1 pins the
//! output to 1), its mirror `Y2`, and BSC(p) for `Y3`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::{Error, Result};

/// Exact enumeration is capped at this blocklength.
pub const MAX_BLOCKLENGTH: usize = 10;
/// Joint auxiliary distributions are capped lower (state space 2^n per i).
pub const MAX_AUX_BLOCKLENGTH: usize = 8;

/// Decoding decision for one output word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision<T> {
    None,
    Unique(T),
    /// Two candidates chosen with equal probability; by construction the
    /// first is the b=0 branch and the second the b=1 branch.
    Tie(T, T),
}

impl<T: Copy + PartialEq> Decision<T> {
    fn credit(&self, msg: T) -> f64 {
        match self {
            Decision::None => 0.0,
            Decision::Unique(m) => {
                if *m == msg {
                    1.0
                } else {
                    0.0
                }
            }
            Decision::Tie(a, b) => {
                let mut c = 0.0;
                if *a == msg {
                    c += 0.5;
                }
                if *b == msg {
                    c += 0.5;
                }
                c
            }
        }
    }
}

/// Message pair (m0, m1v) decoded by receivers 1 and 2.
pub type PairMsg = (u32, u32);

/// A codebook with explicit decoding maps for the three receivers.
#[derive(Debug, Clone)]
pub struct Codebook {
    n: usize,
    m0_count: u32,
    m1_count: u32,
    /// codeword bits, indexed m0 * m1_count + m1v
    words: Vec<u16>,
    dec1: Vec<Decision<PairMsg>>,
    dec2: Vec<Decision<PairMsg>>,
    dec3: Vec<Decision<u32>>,
}

/// Receiver selector for error computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Receiver {
    Y1,
    Y2,
    Y3,
}

/// Coordinatewise bit flip of an n-bit word.
pub fn flip(word: u16, n: usize) -> u16 {
    !word & ((1u16 << n) - 1)
}

fn popcount(w: u16) -> u32 {
    w.count_ones()
}

/// P(y | x) over n symbols of the Y1 branch: a 1 input forces a 1 output,
/// a 0 input is equiprobable.
pub fn likelihood_y1(y: u16, x: u16, n: usize) -> f64 {
    let mask = (1u16 << n) - 1;
    if x & !y & mask != 0 {
        return 0.0;
    }
    0.5f64.powi(n as i32 - popcount(x & mask) as i32)
}

/// P(y | x) over the mirror branch Y2: a 0 input forces a 0 output.
pub fn likelihood_y2(y: u16, x: u16, n: usize) -> f64 {
    let mask = (1u16 << n) - 1;
    if !x & y & mask != 0 {
        return 0.0;
    }
    0.5f64.powi(popcount(x & mask) as i32)
}

/// P(y | x) over BSC(p).
pub fn likelihood_y3(y: u16, x: u16, n: usize, p: f64) -> f64 {
    let d = popcount((x ^ y) & ((1u16 << n) - 1)) as i32;
    p.powi(d) * (1.0 - p).powi(n as i32 - d)
}

impl Codebook {
    pub fn new(
        n: usize,
        m0_count: u32,
        m1_count: u32,
        words: Vec<u16>,
        dec1: Vec<Decision<PairMsg>>,
        dec2: Vec<Decision<PairMsg>>,
        dec3: Vec<Decision<u32>>,
    ) -> Result<Self> {
        if n == 0 || n > MAX_BLOCKLENGTH {
            return Err(Error::BlocklengthTooLarge { n, max: MAX_BLOCKLENGTH });
        }
        if m0_count == 0 || m1_count == 0 {
            return Err(Error::MalformedCodebook("empty message set".into()));
        }
        if words.len() != (m0_count * m1_count) as usize {
            return Err(Error::MalformedCodebook(format!(
                "{} codewords for {}x{} messages",
                words.len(),
                m0_count,
                m1_count
            )));
        }
        let space = 1usize << n;
        if dec1.len() != space || dec2.len() != space || dec3.len() != space {
            return Err(Error::MalformedCodebook("decoder maps must cover every output word".into()));
        }
        let mask = (1u16 << n) - 1;
        if words.iter().any(|&w| w & !mask != 0) {
            return Err(Error::MalformedCodebook("codeword exceeds blocklength".into()));
        }
        Ok(Self { n, m0_count, m1_count, words, dec1, dec2, dec3 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m0_count(&self) -> u32 {
        self.m0_count
    }

    pub fn m1_count(&self) -> u32 {
        self.m1_count
    }

    pub fn word(&self, m0: u32, m1v: u32) -> u16 {
        self.words[(m0 * self.m1_count + m1v) as usize]
    }

    pub fn dec1(&self) -> &[Decision<PairMsg>] {
        &self.dec1
    }

    pub fn dec2(&self) -> &[Decision<PairMsg>] {
        &self.dec2
    }

    pub fn dec3(&self) -> &[Decision<u32>] {
        &self.dec3
    }

    fn messages(&self) -> impl Iterator<Item = PairMsg> + '_ {
        (0..self.m0_count).flat_map(move |m0| (0..self.m1_count).map(move |m1| (m0, m1)))
    }

    /// True if every codeword's flip is a codeword of the same `m0`.
    pub fn is_pi_closed(&self) -> bool {
        for m0 in 0..self.m0_count {
            for m1 in 0..self.m1_count {
                let flipped = flip(self.word(m0, m1), self.n);
                if !(0..self.m1_count).any(|m1b| self.word(m0, m1b) == flipped) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact average error probability of the given receiver under the
    /// uniform message prior, by enumeration of all output words. Ties
    /// score half credit.
    pub fn exact_error(&self, p: f64, receiver: Receiver) -> Result<f64> {
        if !(0.0..=0.5).contains(&p) {
            return Err(Error::Domain(format!("crossover p = {p} not in [0, 1/2]")));
        }
        let space = 1u32 << self.n;
        let mut correct = 0.0;
        for (m0, m1) in self.messages() {
            let x = self.word(m0, m1);
            for y in 0..space {
                let y = y as u16;
                match receiver {
                    Receiver::Y1 => {
                        let lik = likelihood_y1(y, x, self.n);
                        if lik > 0.0 {
                            correct += lik * self.dec1[y as usize].credit((m0, m1));
                        }
                    }
                    Receiver::Y2 => {
                        let lik = likelihood_y2(y, x, self.n);
                        if lik > 0.0 {
                            correct += lik * self.dec2[y as usize].credit((m0, m1));
                        }
                    }
                    Receiver::Y3 => {
                        let lik = likelihood_y3(y, x, self.n, p);
                        correct += lik * self.dec3[y as usize].credit(m0);
                    }
                }
            }
        }
        Ok(1.0 - correct / (self.m0_count * self.m1_count) as f64)
    }
}

/// The three decoding maps of a codebook (receivers 1, 2 and 3).
pub type DecoderMaps = (Vec<Decision<PairMsg>>, Vec<Decision<PairMsg>>, Vec<Decision<u32>>);

/// Maximum-likelihood decoding maps for the three receivers (deterministic:
/// ties break toward the lowest message index). Receiver 3 ranks messages
/// by the likelihood averaged over the private index at crossover `p`.
pub fn ml_decoders(n: usize, m0_count: u32, m1_count: u32, words: &[u16], p: f64) -> DecoderMaps {
    let space = 1usize << n;
    let mut dec1 = vec![Decision::None; space];
    let mut dec2 = vec![Decision::None; space];
    let mut dec3 = vec![Decision::None; space];
    for y in 0..space {
        let yw = y as u16;
        let mut best1 = (0.0f64, None);
        let mut best2 = (0.0f64, None);
        let mut best3 = (0.0f64, None);
        for m0 in 0..m0_count {
            let mut avg3 = 0.0;
            for m1 in 0..m1_count {
                let x = words[(m0 * m1_count + m1) as usize];
                let l1 = likelihood_y1(yw, x, n);
                if l1 > best1.0 + 1e-15 {
                    best1 = (l1, Some((m0, m1)));
                }
                let l2 = likelihood_y2(yw, x, n);
                if l2 > best2.0 + 1e-15 {
                    best2 = (l2, Some((m0, m1)));
                }
                avg3 += likelihood_y3(yw, x, n, p);
            }
            if avg3 > best3.0 + 1e-15 {
                best3 = (avg3, Some(m0));
            }
        }
        if let Some(m) = best1.1 {
            dec1[y] = Decision::Unique(m);
        }
        if let Some(m) = best2.1 {
            dec2[y] = Decision::Unique(m);
        }
        if let Some(m) = best3.1 {
            dec3[y] = Decision::Unique(m);
        }
    }
    (dec1, dec2, dec3)
}

/// Random codebook with distinct codewords and maximum-likelihood decoders.
pub fn random_codebook(n: usize, m0_count: u32, m1_count: u32, p: f64, seed: u64) -> Result<Codebook> {
    if n == 0 || n > MAX_BLOCKLENGTH {
        return Err(Error::BlocklengthTooLarge { n, max: MAX_BLOCKLENGTH });
    }
    let total = (m0_count * m1_count) as usize;
    if total > 1usize << n {
        return Err(Error::MalformedCodebook(format!(
            "{total} distinct codewords do not fit in {} words",
            1usize << n
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut used = std::collections::BTreeSet::new();
    let mut words = Vec::with_capacity(total);
    while words.len() < total {
        let w = rng.gen_range(0..1u32 << n) as u16;
        if used.insert(w) {
            words.push(w);
        }
    }
    let (dec1, dec2, dec3) = ml_decoders(n, m0_count, m1_count, &words, p);
    Codebook::new(n, m0_count, m1_count, words, dec1, dec2, dec3)
}

fn toggle_pair(m: PairMsg) -> PairMsg {
    (m.0, m.1 ^ 1)
}

/// The flip-doubled codebook: private indices become (m1, b) packed as
/// 2*m1 + b, the b = 1 codewords are the flipped b = 0 ones, and decoding
/// overlaps between the base maps and their flipped, receiver-swapped
/// counterparts are recorded as explicit ties.
pub fn symmetrize_codebook(base: &Codebook) -> Result<Codebook> {
    for y in 0..1usize << base.n {
        if matches!(base.dec1[y], Decision::Tie(..))
            || matches!(base.dec2[y], Decision::Tie(..))
            || matches!(base.dec3[y], Decision::Tie(..))
        {
            return Err(Error::MalformedCodebook(
                "base decoding sets must be disjoint (no ties)".into(),
            ));
        }
    }
    let n = base.n;
    let m1_count = base.m1_count * 2;
    let mut words = Vec::with_capacity((base.m0_count * m1_count) as usize);
    for m0 in 0..base.m0_count {
        for m1 in 0..base.m1_count {
            words.push(base.word(m0, m1));
            words.push(flip(base.word(m0, m1), n));
        }
    }
    let space = 1usize << n;
    let mut dec1 = vec![Decision::None; space];
    let mut dec2 = vec![Decision::None; space];
    let mut dec3 = vec![Decision::None; space];
    let combine_pair = |a: Option<PairMsg>, b: Option<PairMsg>| match (a, b) {
        (None, None) => Decision::None,
        (Some(m), None) => Decision::Unique(m),
        (None, Some(m)) => Decision::Unique(m),
        (Some(m), Some(k)) => Decision::Tie(m, k),
    };
    for y in 0..space {
        let yf = flip(y as u16, n) as usize;
        // receiver 1: base set decodes (m1, b=0); the flipped image of the
        // base Y2 set decodes (m1, b=1)
        let a = match base.dec1[y] {
            Decision::Unique((m0, m1)) => Some((m0, 2 * m1)),
            _ => None,
        };
        let b = match base.dec2[yf] {
            Decision::Unique((m0, m1)) => Some((m0, 2 * m1 + 1)),
            _ => None,
        };
        dec1[y] = combine_pair(a, b);
        // receiver 2: roles swapped
        let a = match base.dec2[y] {
            Decision::Unique((m0, m1)) => Some((m0, 2 * m1)),
            _ => None,
        };
        let b = match base.dec1[yf] {
            Decision::Unique((m0, m1)) => Some((m0, 2 * m1 + 1)),
            _ => None,
        };
        dec2[y] = combine_pair(a, b);
        // receiver 3: both branches carry the same m0; agreement collapses
        let a = match base.dec3[y] {
            Decision::Unique(m0) => Some(m0),
            _ => None,
        };
        let b = match base.dec3[yf] {
            Decision::Unique(m0) => Some(m0),
            _ => None,
        };
        dec3[y] = match (a, b) {
            (None, None) => Decision::None,
            (Some(m), None) | (None, Some(m)) => Decision::Unique(m),
            (Some(m), Some(k)) if m == k => Decision::Unique(m),
            (Some(m), Some(k)) => Decision::Tie(m, k),
        };
    }
    Codebook::new(n, base.m0_count, m1_count, words, dec1, dec2, dec3)
}

/// A codebook whose words and decoders carry the flip symmetry.
#[derive(Debug, Clone)]
pub struct SymmetricCodebook(Codebook);

impl SymmetricCodebook {
    /// Validates the flip-closure invariants: every codeword's flip is a
    /// codeword of the same m0; the receiver-1/2 decision maps are flipped,
    /// branch-toggled images of each other; the receiver-3 map is flip-
    /// invariant as a set.
    pub fn new(cb: Codebook) -> Result<Self> {
        if !cb.is_pi_closed() {
            return Err(Error::MalformedCodebook("codewords are not flip-closed".into()));
        }
        let n = cb.n;
        for y in 0..1usize << n {
            let yf = flip(y as u16, n) as usize;
            let want = match cb.dec1[yf] {
                Decision::None => Decision::None,
                Decision::Unique(m) => Decision::Unique(toggle_pair(m)),
                Decision::Tie(a, b) => Decision::Tie(toggle_pair(b), toggle_pair(a)),
            };
            if cb.dec2[y] != want {
                return Err(Error::MalformedCodebook(format!(
                    "receiver decoders are not flip images at output {y}"
                )));
            }
            let set3 = |d: Decision<u32>| match d {
                Decision::None => (None, None),
                Decision::Unique(m) => (Some(m), None),
                Decision::Tie(a, b) => (Some(a.min(b)), Some(a.max(b))),
            };
            if set3(cb.dec3[y]) != set3(cb.dec3[yf]) {
                return Err(Error::MalformedCodebook(format!(
                    "common-message decoder is not flip-invariant at output {y}"
                )));
            }
        }
        Ok(Self(cb))
    }

    pub fn as_codebook(&self) -> &Codebook {
        &self.0
    }
}

impl std::ops::Deref for SymmetricCodebook {
    type Target = Codebook;
    fn deref(&self) -> &Codebook {
        &self.0
    }
}

// ---------------------------------------------------------------------------
// Auxiliary-identification joints
// ---------------------------------------------------------------------------

/// Exact joint law of (M0, Y3-prefix before i, branch suffix after i, X_i)
/// under the uniform message prior.
#[derive(Debug, Clone)]
pub struct JointDistribution {
    pub m0_count: u32,
    pub prefix_bits: usize,
    pub suffix_bits: usize,
    probs: Vec<f64>,
}

impl JointDistribution {
    fn index(&self, m0: u32, pre: u16, suf: u16, x: u16) -> usize {
        (((m0 as usize) << self.prefix_bits | pre as usize) << self.suffix_bits | suf as usize) << 1
            | x as usize
    }

    pub fn prob(&self, m0: u32, pre: u16, suf: u16, x: u16) -> f64 {
        self.probs[self.index(m0, pre, suf, x)]
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    fn aux_states(&self) -> usize {
        (self.m0_count as usize) << (self.prefix_bits + self.suffix_bits)
    }

    /// P(aux) and P(X=0 | aux) pairs, flattened over auxiliary states.
    fn aux_marginals(&self) -> Vec<(f64, f64)> {
        let states = self.aux_states();
        let mut out = Vec::with_capacity(states);
        for a in 0..states {
            let p0 = self.probs[a << 1];
            let p1 = self.probs[a << 1 | 1];
            out.push((p0 + p1, p0));
        }
        out
    }

    /// I(U; Y3_i) where the auxiliary is the whole tuple and Y3_i is the
    /// current-position BSC(p) output.
    pub fn aux_y3_mutual_information(&self, p: f64) -> f64 {
        let states = self.aux_states();
        let mut joint = vec![0.0f64; states * 2];
        for a in 0..states {
            let p0 = self.probs[a << 1];
            let p1 = self.probs[a << 1 | 1];
            joint[a << 1] = p0 * (1.0 - p) + p1 * p;
            joint[a << 1 | 1] = p0 * p + p1 * (1.0 - p);
        }
        let mut py = [0.0f64; 2];
        for a in 0..states {
            py[0] += joint[a << 1];
            py[1] += joint[a << 1 | 1];
        }
        let mut mi = 0.0;
        for a in 0..states {
            let pa = joint[a << 1] + joint[a << 1 | 1];
            if pa <= 0.0 {
                continue;
            }
            for y in 0..2 {
                let j = joint[a << 1 | y];
                if j > 0.0 {
                    mi += j * (j / (pa * py[y])).log2();
                }
            }
        }
        mi
    }

    /// I(X_i; Y_i | U) through the given per-symbol receiver channel.
    pub fn conditional_mi_to_receiver(&self, receiver: Receiver) -> f64 {
        // per-symbol transition rows P(y|x) for x = 0, 1
        let rows: [[f64; 2]; 2] = match receiver {
            Receiver::Y1 => [[0.5, 0.5], [0.0, 1.0]],
            Receiver::Y2 => [[1.0, 0.0], [0.5, 0.5]],
            Receiver::Y3 => panic!("use aux_y3_mutual_information for the BSC branch"),
        };
        let mut total = 0.0;
        for (pa, p0) in self.aux_marginals() {
            if pa <= 0.0 {
                continue;
            }
            let (q0, q1) = (p0 / pa, (pa - p0) / pa);
            let mix = [
                q0 * rows[0][0] + q1 * rows[1][0],
                q0 * rows[0][1] + q1 * rows[1][1],
            ];
            let h = |v: f64| if v > 0.0 { -v * v.log2() } else { 0.0 };
            let hy = h(mix[0]) + h(mix[1]);
            let hyx = q0 * (h(rows[0][0]) + h(rows[0][1])) + q1 * (h(rows[1][0]) + h(rows[1][1]));
            total += pa * (hy - hyx);
        }
        total
    }
}

/// Which receiver supplies the suffix observations of the auxiliary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Y1,
    Y2,
}

/// Exact joint of (M0, Y3 prefix up to i-1, branch suffix from i+1, X_i)
/// for position `i` (1-based), uniform prior, blocklength capped at
/// [`MAX_AUX_BLOCKLENGTH`].
pub fn aux_distribution(cb: &Codebook, i: usize, p: f64, branch: Branch) -> Result<JointDistribution> {
    if cb.n > MAX_AUX_BLOCKLENGTH {
        return Err(Error::BlocklengthTooLarge { n: cb.n, max: MAX_AUX_BLOCKLENGTH });
    }
    if i == 0 || i > cb.n {
        return Err(Error::Domain(format!("position i = {i} not in 1..={}", cb.n)));
    }
    if !(0.0..=0.5).contains(&p) {
        return Err(Error::Domain(format!("crossover p = {p} not in [0, 1/2]")));
    }
    let prefix_bits = i - 1;
    let suffix_bits = cb.n - i;
    let mut probs =
        vec![0.0f64; (cb.m0_count as usize) << (prefix_bits + suffix_bits + 1)];
    let msg_prob = 1.0 / (cb.m0_count * cb.m1_count) as f64;
    let pre_mask = (1u16 << prefix_bits) - 1;
    let suf_mask = (1u16 << suffix_bits) - 1;
    for m0 in 0..cb.m0_count {
        for m1 in 0..cb.m1_count {
            let x = cb.word(m0, m1);
            let xi = (x >> (i - 1)) & 1;
            let xpre = x & pre_mask;
            let xsuf = (x >> i) & suf_mask;
            for pre in 0..=pre_mask {
                let l3 = likelihood_y3(pre, xpre, prefix_bits, p);
                if l3 == 0.0 {
                    continue;
                }
                for suf in 0..=suf_mask {
                    let lb = match branch {
                        Branch::Y1 => likelihood_y1(suf, xsuf, suffix_bits),
                        Branch::Y2 => likelihood_y2(suf, xsuf, suffix_bits),
                    };
                    if lb == 0.0 {
                        continue;
                    }
                    let idx = (((m0 as usize) << prefix_bits | pre as usize) << suffix_bits
                        | suf as usize)
                        << 1
                        | xi as usize;
                    probs[idx] += msg_prob * l3 * lb;
                }
            }
        }
    }
    Ok(JointDistribution { m0_count: cb.m0_count, prefix_bits, suffix_bits, probs })
}

/// Largest absolute difference between d1 with flipped prefix, suffix and X
/// coordinates and d2.
pub fn relabel_deviation(d1: &JointDistribution, d2: &JointDistribution) -> Result<f64> {
    if d1.m0_count != d2.m0_count
        || d1.prefix_bits != d2.prefix_bits
        || d1.suffix_bits != d2.suffix_bits
    {
        return Err(Error::DimensionMismatch("joint distribution shapes differ".into()));
    }
    let pre_mask = ((1u32 << d1.prefix_bits) - 1) as u16;
    let suf_mask = ((1u32 << d1.suffix_bits) - 1) as u16;
    let mut worst = 0.0f64;
    for m0 in 0..d1.m0_count {
        for pre in 0..=pre_mask {
            for suf in 0..=suf_mask {
                for x in 0..2u16 {
                    let lhs = d1.prob(m0, pre, suf, x);
                    let rhs = d2.prob(m0, !pre & pre_mask, !suf & suf_mask, 1 - x);
                    worst = worst.max((lhs - rhs).abs());
                }
            }
        }
    }
    Ok(worst)
}

/// True iff flipping d1's prefix, suffix and X coordinates reproduces d2
/// exactly (tolerance 1e-12). This is the "identical up to relabeling"
/// check between the two branch identifications.
pub fn check_relabel_equivalence(d1: &JointDistribution, d2: &JointDistribution) -> Result<bool> {
    Ok(relabel_deviation(d1, d2)? <= 1e-12)
}

/// Exact equality of two joints (no relabeling).
pub fn joints_equal(d1: &JointDistribution, d2: &JointDistribution) -> bool {
    d1.m0_count == d2.m0_count
        && d1.prefix_bits == d2.prefix_bits
        && d1.suffix_bits == d2.suffix_bits
        && d1
            .probs
            .iter()
            .zip(&d2.probs)
            .all(|(a, b)| (a - b).abs() <= 1e-12)
}

// ---------------------------------------------------------------------------
// JSON loading
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct CodebookDoc {
    n: usize,
    codewords: BTreeMap<String, String>,
    #[serde(default)]
    decoders: Option<DecoderDoc>,
}

#[derive(Deserialize)]
struct DecoderDoc {
    y1: BTreeMap<String, (u32, u32)>,
    y2: BTreeMap<String, (u32, u32)>,
    y3: BTreeMap<String, u32>,
}

fn parse_bits(s: &str, n: usize) -> Result<u16> {
    if s.len() != n || !s.bytes().all(|b| b == b'0' || b == b'1') {
        return Err(Error::MalformedCodebook(format!("bad binary string {s:?} for n = {n}")));
    }
    // leftmost character is position 1
    let mut w = 0u16;
    for (pos, b) in s.bytes().enumerate() {
        if b == b'1' {
            w |= 1 << pos;
        }
    }
    Ok(w)
}

/// Loads `{"n":..., "codewords": {"m0,m1": "bits"}, "decoders": {...}}`.
///
/// Message indices must be contiguous from zero. When `decoders` is absent,
/// maximum-likelihood maps are built at crossover `ml_p`.
pub fn load_codebook(json: &str, ml_p: f64) -> Result<Codebook> {
    let doc: CodebookDoc = serde_json::from_str(json)?;
    if doc.n == 0 || doc.n > MAX_BLOCKLENGTH {
        return Err(Error::BlocklengthTooLarge { n: doc.n, max: MAX_BLOCKLENGTH });
    }
    let mut pairs: Vec<(u32, u32, u16)> = Vec::new();
    for (key, bits) in &doc.codewords {
        let (a, b) = key
            .split_once(',')
            .ok_or_else(|| Error::MalformedCodebook(format!("bad message key {key:?}")))?;
        let m0: u32 = a.trim().parse().map_err(|_| Error::MalformedCodebook(format!("bad m0 in {key:?}")))?;
        let m1: u32 = b.trim().parse().map_err(|_| Error::MalformedCodebook(format!("bad m1 in {key:?}")))?;
        pairs.push((m0, m1, parse_bits(bits, doc.n)?));
    }
    let m0_count = pairs.iter().map(|&(a, _, _)| a + 1).max().unwrap_or(0);
    let m1_count = pairs.iter().map(|&(_, b, _)| b + 1).max().unwrap_or(0);
    if (m0_count * m1_count) as usize != pairs.len() {
        return Err(Error::MalformedCodebook(format!(
            "expected {}x{} contiguous messages, found {}",
            m0_count,
            m1_count,
            pairs.len()
        )));
    }
    let mut words = vec![0u16; pairs.len()];
    let mut seen = vec![false; pairs.len()];
    for (m0, m1, w) in pairs {
        let idx = (m0 * m1_count + m1) as usize;
        if seen[idx] {
            return Err(Error::MalformedCodebook(format!("duplicate message {m0},{m1}")));
        }
        seen[idx] = true;
        words[idx] = w;
    }
    let (dec1, dec2, dec3) = match doc.decoders {
        None => ml_decoders(doc.n, m0_count, m1_count, &words, ml_p),
        Some(d) => {
            let space = 1usize << doc.n;
            let mut dec1 = vec![Decision::None; space];
            let mut dec2 = vec![Decision::None; space];
            let mut dec3 = vec![Decision::None; space];
            for (k, v) in &d.y1 {
                dec1[parse_bits(k, doc.n)? as usize] = Decision::Unique(*v);
            }
            for (k, v) in &d.y2 {
                dec2[parse_bits(k, doc.n)? as usize] = Decision::Unique(*v);
            }
            for (k, v) in &d.y3 {
                dec3[parse_bits(k, doc.n)? as usize] = Decision::Unique(*v);
            }
            (dec1, dec2, dec3)
        }
    };
    Codebook::new(doc.n, m0_count, m1_count, words, dec1, dec2, dec3)
}
