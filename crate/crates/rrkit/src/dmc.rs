//! Discrete memoryless channel algebra.
//!
//! Transition matrices, input distributions, auxiliary decompositions of a
//! binary input, and the mutual-information functionals the bound optimizers
//! are built from. The three concrete channels of the skew-symmetric family:
//!
//! * `Y1`: input 0 splits evenly over {0,1}, input 1 maps to 1;
//! * `Y2`: the mirror image under a global bit flip;
//! * `Y3`: BSC(p).
//!
//! The generic operations accept arbitrary finite output alphabets so the
//! bound optimizers can be reused on other binary-input triples.

use serde::Deserialize;

use crate::{Error, Result};

const PROB_SUM_TOL: f64 = 1e-12;

/// Shannon entropy of a nonnegative vector summing to 1, in bits.
pub fn distribution_entropy(p: &[f64]) -> f64 {
    p.iter().map(|&x| if x > 0.0 { -x * x.log2() } else { 0.0 }).sum()
}

/// Row-stochastic channel transition matrix; rows are input letters.
#[derive(Debug, Clone, PartialEq)]
pub struct StochasticMatrix {
    rows: Vec<Vec<f64>>,
}

impl StochasticMatrix {
    /// Validates that every entry is nonnegative and every row sums to
    /// 1 within 1e-12.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::InvalidDistribution("empty transition matrix".into()));
        }
        let cols = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if row.iter().any(|&x| x < 0.0) {
                return Err(Error::InvalidDistribution(format!("negative entry in row {i}")));
            }
            let s: f64 = row.iter().sum();
            if (s - 1.0).abs() > PROB_SUM_TOL {
                return Err(Error::InvalidDistribution(format!("row {i} sums to {s}")));
            }
        }
        Ok(Self { rows })
    }

    pub fn num_inputs(&self) -> usize {
        self.rows.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.rows[0].len()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.rows[i]
    }

    /// Output distribution induced by `px`.
    pub fn output_distribution(&self, px: &InputDistribution) -> Result<Vec<f64>> {
        if px.len() != self.num_inputs() {
            return Err(Error::DimensionMismatch(format!(
                "input distribution has {} letters, channel expects {}",
                px.len(),
                self.num_inputs()
            )));
        }
        let mut out = vec![0.0; self.num_outputs()];
        for (x, row) in self.rows.iter().enumerate() {
            let w = px.prob(x);
            for (y, &t) in row.iter().enumerate() {
                out[y] += w * t;
            }
        }
        Ok(out)
    }

    /// True if every row is a unit vector (entries 0/1 within 1e-12).
    pub fn is_deterministic(&self) -> bool {
        self.rows.iter().all(|row| {
            row.iter().filter(|&&x| (x - 1.0).abs() <= PROB_SUM_TOL).count() == 1
                && row.iter().all(|&x| x <= PROB_SUM_TOL || (x - 1.0).abs() <= PROB_SUM_TOL)
        })
    }
}

/// The Y1 branch of the skew-symmetric pair.
pub fn bssc_y1() -> StochasticMatrix {
    StochasticMatrix::new(vec![vec![0.5, 0.5], vec![0.0, 1.0]]).expect("fixed matrix")
}

/// The Y2 branch: mirror of [`bssc_y1`] under the global bit flip.
pub fn bssc_y2() -> StochasticMatrix {
    StochasticMatrix::new(vec![vec![1.0, 0.0], vec![0.5, 0.5]]).expect("fixed matrix")
}

/// Binary symmetric channel with crossover probability `p` in [0, 1/2].
pub fn bsc(p: f64) -> Result<StochasticMatrix> {
    if !(0.0..=0.5).contains(&p) {
        return Err(Error::Domain(format!("BSC crossover p = {p} not in [0, 1/2]")));
    }
    StochasticMatrix::new(vec![vec![1.0 - p, p], vec![p, 1.0 - p]])
}

/// Probability distribution over the channel input alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct InputDistribution {
    probs: Vec<f64>,
}

impl InputDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidDistribution("empty input distribution".into()));
        }
        if probs.iter().any(|&x| x < 0.0) {
            return Err(Error::InvalidDistribution("negative probability".into()));
        }
        let s: f64 = probs.iter().sum();
        if (s - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::InvalidDistribution(format!("probabilities sum to {s}")));
        }
        Ok(Self { probs })
    }

    /// Binary input with P(X=0) = `s`.
    pub fn binary(s: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::Domain(format!("P(X=0) = {s} not in [0,1]")));
        }
        Ok(Self { probs: vec![s, 1.0 - s] })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn prob(&self, x: usize) -> f64 {
        self.probs[x]
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn entropy(&self) -> f64 {
        distribution_entropy(&self.probs)
    }
}

/// Mutual information I(X;Y) = H(Y) - H(Y|X) in bits.
pub fn mutual_information(px: &InputDistribution, ch: &StochasticMatrix) -> Result<f64> {
    let out = ch.output_distribution(px)?;
    let hy = distribution_entropy(&out);
    let hyx: f64 = (0..ch.num_inputs())
        .map(|x| px.prob(x) * distribution_entropy(ch.row(x)))
        .sum();
    Ok(hy - hyx)
}

/// Weighted description (U, X) of a binary input: P(U=i) = `weights[i]`,
/// P(X=0 | U=i) = `x0_given_u[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AuxDecomposition {
    weights: Vec<f64>,
    x0_given_u: Vec<f64>,
}

impl AuxDecomposition {
    pub fn new(weights: Vec<f64>, x0_given_u: Vec<f64>) -> Result<Self> {
        if weights.is_empty() || weights.len() != x0_given_u.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights vs {} conditionals",
                weights.len(),
                x0_given_u.len()
            )));
        }
        if weights.iter().any(|&u| u < 0.0) {
            return Err(Error::InvalidDistribution("negative weight".into()));
        }
        let s: f64 = weights.iter().sum();
        if (s - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::InvalidDistribution(format!("weights sum to {s}")));
        }
        if x0_given_u.iter().any(|&v| !(0.0..=1.0).contains(&v)) {
            return Err(Error::Domain("conditional P(X=0|U=i) outside [0,1]".into()));
        }
        Ok(Self { weights, x0_given_u })
    }

    /// Number of auxiliary states.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn x0_given_u(&self) -> &[f64] {
        &self.x0_given_u
    }

    /// Induced input marginal: P(X=0) = sum_i u_i s_i.
    pub fn marginal_input(&self) -> InputDistribution {
        let p0: f64 = self
            .weights
            .iter()
            .zip(&self.x0_given_u)
            .map(|(u, s)| u * s)
            .sum();
        InputDistribution { probs: vec![p0, 1.0 - p0] }
    }
}

/// Conditional mutual information I(X;Y|U) = sum_i u_i I(X;Y | U=i)
/// for a binary-input channel.
pub fn conditional_mutual_information(aux: &AuxDecomposition, ch: &StochasticMatrix) -> Result<f64> {
    if ch.num_inputs() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "auxiliary decomposition needs a binary-input channel, got {} inputs",
            ch.num_inputs()
        )));
    }
    let mut total = 0.0;
    for (&u, &s) in aux.weights.iter().zip(&aux.x0_given_u) {
        if u == 0.0 {
            continue;
        }
        let px = InputDistribution { probs: vec![s, 1.0 - s] };
        total += u * mutual_information(&px, ch)?;
    }
    Ok(total)
}

/// Mutual information I(U;Y) between the auxiliary and the channel output
/// along the chain U -> X -> Y: H(Y) - sum_i u_i H(Y | U=i).
pub fn aux_channel_mutual_information(aux: &AuxDecomposition, ch: &StochasticMatrix) -> Result<f64> {
    if ch.num_inputs() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "auxiliary decomposition needs a binary-input channel, got {} inputs",
            ch.num_inputs()
        )));
    }
    let hy = distribution_entropy(&ch.output_distribution(&aux.marginal_input())?);
    let mut hyu = 0.0;
    for (&u, &s) in aux.weights.iter().zip(&aux.x0_given_u) {
        if u == 0.0 {
            continue;
        }
        let px = InputDistribution { probs: vec![s, 1.0 - s] };
        hyu += u * distribution_entropy(&ch.output_distribution(&px)?);
    }
    Ok(hy - hyu)
}

/// The three branches of a broadcast channel sharing one input alphabet.
#[derive(Debug, Clone)]
pub struct ChannelTriple {
    pub y1: StochasticMatrix,
    pub y2: StochasticMatrix,
    pub y3: StochasticMatrix,
}

#[derive(Deserialize)]
struct TripleDoc {
    y1: Vec<Vec<f64>>,
    y2: Vec<Vec<f64>>,
    y3: Vec<Vec<f64>>,
}

impl ChannelTriple {
    pub fn new(y1: StochasticMatrix, y2: StochasticMatrix, y3: StochasticMatrix) -> Result<Self> {
        let n = y1.num_inputs();
        if y2.num_inputs() != n || y3.num_inputs() != n {
            return Err(Error::DimensionMismatch(format!(
                "branch input alphabets differ: {n}, {}, {}",
                y2.num_inputs(),
                y3.num_inputs()
            )));
        }
        Ok(Self { y1, y2, y3 })
    }

    /// Parses `{"y1": [[..]], "y2": [[..]], "y3": [[..]]}` (row-major,
    /// rows = input letters) and validates stochasticity.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: TripleDoc = serde_json::from_str(s)?;
        Self::new(
            StochasticMatrix::new(doc.y1)?,
            StochasticMatrix::new(doc.y2)?,
            StochasticMatrix::new(doc.y3)?,
        )
    }

    pub fn num_inputs(&self) -> usize {
        self.y1.num_inputs()
    }
}
