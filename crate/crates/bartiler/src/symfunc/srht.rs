//! Special rim-hook tableaux: decompositions of a partition shape into rim
//! hooks that each touch the first column, enumerated by repeatedly peeling
//! the hook through the bottom-left cell. Signed counts give inverse Kostka
//! numbers.

use super::Partition;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

/// One rim hook of a decomposition. `cells` are `(row, col)` pairs, 1-based,
/// sorted by row then column; `rows` is the number of distinct rows spanned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ribbon {
    pub cells: Vec<(u32, u32)>,
    pub rows: u32,
}

impl Ribbon {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(-1)^(rows - 1)`.
    pub fn sign(&self) -> i64 {
        if (self.rows - 1) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// A decomposition of a shape into special rim hooks, listed in placement
/// order: the first ribbon is the one whose cells form a sub-partition
/// containing the top-left cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookDecomposition {
    pub ribbons: Vec<Ribbon>,
}

impl RimHookDecomposition {
    pub fn sign(&self) -> i64 {
        self.ribbons.iter().map(Ribbon::sign).product()
    }

    /// Multiset of ribbon lengths, sorted decreasing.
    pub fn content(&self) -> Vec<u32> {
        let mut c: Vec<u32> = self.ribbons.iter().map(|r| r.len() as u32).collect();
        c.sort_unstable_by(|x, y| y.cmp(x));
        c
    }
}

/// The rim hooks of `shape` that contain the bottom-left cell are exactly the
/// first-column hooks: one per row `i`, of length `shape[i] + rows - i - 1`
/// (0-based `i`). Removing the hook through row `i` leaves
/// `(shape[0..i], shape[i+1] - 1, ..., shape[last] - 1)`.
fn peel_options(shape: &[u32]) -> Vec<(usize, u32)> {
    let rows = shape.len();
    (0..rows)
        .map(|i| (i, shape[i] + (rows - i - 1) as u32))
        .collect()
}

fn peel(shape: &[u32], i: usize) -> (Vec<u32>, Ribbon) {
    let rows = shape.len();
    let last = shape[rows - 1];
    let mut cells: Vec<(u32, u32)> = Vec::new();
    for t in i..rows - 1 {
        for col in shape[t + 1]..=shape[t] {
            cells.push((t as u32 + 1, col));
        }
    }
    for col in 1..=last {
        cells.push((rows as u32, col));
    }
    cells.sort_unstable();
    let ribbon = Ribbon {
        cells,
        rows: (rows - i) as u32,
    };
    let mut rest: Vec<u32> = shape[..i].to_vec();
    rest.extend(shape[i + 1..].iter().map(|&p| p - 1).filter(|&p| p > 0));
    (rest, ribbon)
}

fn multiset(parts: &[u32]) -> BTreeMap<u32, u32> {
    let mut m = BTreeMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// All special rim-hook tableaux of shape `lambda` with content `mu`.
pub fn srht_enumerate(lambda: &Partition, mu: &Partition) -> Result<Vec<RimHookDecomposition>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch);
    }
    let mut remaining = multiset(mu.parts());
    let mut stack: Vec<Ribbon> = Vec::new();
    let mut out = Vec::new();
    fn go(
        shape: &[u32],
        remaining: &mut BTreeMap<u32, u32>,
        stack: &mut Vec<Ribbon>,
        out: &mut Vec<RimHookDecomposition>,
    ) {
        if shape.is_empty() {
            let mut ribbons = stack.clone();
            ribbons.reverse();
            out.push(RimHookDecomposition { ribbons });
            return;
        }
        for (i, len) in peel_options(shape) {
            match remaining.get_mut(&len) {
                Some(c) if *c > 0 => *c -= 1,
                _ => continue,
            }
            let (rest, ribbon) = peel(shape, i);
            stack.push(ribbon);
            go(&rest, remaining, stack, out);
            stack.pop();
            *remaining.get_mut(&len).unwrap() += 1;
        }
    }
    go(lambda.parts(), &mut remaining, &mut stack, &mut out);
    Ok(out)
}

/// All special rim-hook decompositions of `lambda`, over every content.
pub fn special_decompositions(lambda: &Partition) -> Vec<RimHookDecomposition> {
    let mut stack: Vec<Ribbon> = Vec::new();
    let mut out = Vec::new();
    fn go(shape: &[u32], stack: &mut Vec<Ribbon>, out: &mut Vec<RimHookDecomposition>) {
        if shape.is_empty() {
            let mut ribbons = stack.clone();
            ribbons.reverse();
            out.push(RimHookDecomposition { ribbons });
            return;
        }
        for (i, _) in peel_options(shape) {
            let (rest, ribbon) = peel(shape, i);
            stack.push(ribbon);
            go(&rest, stack, out);
            stack.pop();
        }
    }
    go(lambda.parts(), &mut stack, &mut out);
    out
}

/// Inverse Kostka number: the signed count of special rim-hook tableaux of
/// shape `lambda` and content `mu`.
pub fn inverse_kostka(mu: &Partition, lambda: &Partition) -> Result<i64> {
    Ok(srht_enumerate(lambda, mu)?.iter().map(|d| d.sign()).sum())
}

/// For an almost-self-conjugate `lambda` of rank `d` with Frobenius arm
/// lengths `f_1 > … > f_d`, tests the pair of inequalities
/// `f_j + f_(d+1-j) >= k` and `f_(j+1) + f_(d+1-j) < k` for all `j`,
/// with `f_(d+1) = 0`. These hold exactly when `lambda` admits a (then
/// unique) special rim-hook tableau of content `(k^d, 1^(|lambda| - dk))`.
pub fn frob_condition(lambda: &Partition, k: u32) -> Result<bool> {
    if !lambda.is_asc() {
        return Err(Error::NotAsc);
    }
    let (arms, _) = lambda.frobenius();
    let d = arms.len();
    let f = |j: usize| -> u32 {
        if j < d {
            arms[j]
        } else {
            0
        }
    };
    Ok((0..d).all(|j| f(j) + f(d - 1 - j) >= k && f(j + 1) + f(d - 1 - j) < k))
}
