//! Partitions and the symmetric-function verification layer: conjugates,
//! Durfee rank, Frobenius coordinates, the almost-self-conjugate and
//! threshold predicates, special rim-hook tableaux, inverse Kostka numbers,
//! and the elementary expansion of the plethysm `e_s ∘ e_2`.

pub mod plethysm;
pub mod srht;

pub use plethysm::{
    amu_coefficients, denominator_from_srht, e_mu, elementary_symmetric, pairwise_product_e,
    plethysm_e_coeffs, schur_eval,
};
pub use srht::{frob_condition, inverse_kostka, srht_enumerate, Ribbon, RimHookDecomposition};

use crate::error::{Error, Result};

/// Integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Durfee rank: the largest `i` with `λ_i ≥ i`.
    pub fn rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize >= i + 1)
            .count()
    }

    /// Frobenius coordinates `(λ_i − i | λ′_i − i)` for `i` up to the rank;
    /// both sequences are strictly decreasing and nonnegative.
    pub fn frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let d = self.rank();
        let arms = (0..d).map(|i| self.parts[i] - i as u32 - 1).collect();
        let legs = (0..d).map(|i| conj.parts[i] - i as u32 - 1).collect();
        (arms, legs)
    }

    /// Almost self-conjugate: `λ_i = λ′_i + 1` for every `i` up to the rank.
    pub fn is_asc(&self) -> bool {
        let conj = self.conjugate();
        (0..self.rank()).all(|i| self.parts[i] == conj.parts[i] + 1)
    }

    /// Threshold: `λ′_i = λ_i + 1` up to the rank, i.e. the conjugate is
    /// almost self-conjugate.
    pub fn is_threshold(&self) -> bool {
        let conj = self.conjugate();
        (0..self.rank()).all(|i| conj.parts[i] == self.parts[i] + 1)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn all_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn go(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        let mut p = max.min(remaining);
        while p >= 1 {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
            p -= 1;
        }
    }
    go(n, n, &mut cur, &mut out);
    out
}

/// All partitions of `n` into distinct parts, each as a strictly decreasing
/// sequence.
pub fn distinct_partitions(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn go(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        let mut p = max.min(remaining);
        while p >= 1 {
            cur.push(p);
            go(remaining - p, p.saturating_sub(1), cur, out);
            cur.pop();
            p -= 1;
        }
    }
    go(n, n, &mut cur, &mut out);
    out
}

/// All almost-self-conjugate partitions of the even number `two_n`, built
/// from the distinct-part partitions of `two_n/2` through Frobenius
/// coordinates `(f_1, …, f_d | f_1 − 1, …, f_d − 1)`.
pub fn enumerate_asc(two_n: u32) -> Result<Vec<Partition>> {
    if two_n % 2 != 0 {
        return Err(Error::OddTarget);
    }
    let mut out = Vec::new();
    for fs in distinct_partitions(two_n / 2) {
        let d = fs.len();
        let mut parts: Vec<u32> = (0..d).map(|i| fs[i] + i as u32 + 1).collect();
        // below the Durfee square, row i has one cell per column j <= d with
        // column length f_j - 1 + j at least i
        let mut row = d as u32 + 1;
        loop {
            let len = (0..d).filter(|&j| fs[j] - 1 + j as u32 + 1 >= row).count() as u32;
            if len == 0 {
                break;
            }
            parts.push(len);
            row += 1;
        }
        let p = Partition { parts };
        debug_assert!(p.is_asc() && p.size() == u64::from(two_n));
        out.push(p);
    }
    Ok(out)
}
