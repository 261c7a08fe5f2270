//! Ground-truth brute force for `k × 1` bar tilings of an `m × n` rectangle:
//! a column-sweep transfer DP for the weighted count, an independent explicit
//! enumerator with fault predicates, and the classical existence criteria
//! (Klarner divisibility, Graham fault-free, narrow-rectangle closed count).

mod explicit;

pub use explicit::{
    empirical_series, empirical_series_with, enumerate_tilings, fault_predicates,
    has_central_fault, is_vertically_fault_free, vertical_bars_in_k_contiguous_rows, visit_tilings,
    Bar, CensusKind, Dir, Faults, Tiling,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::comb::binomial;
use crate::error::{Error, Result};
use crate::poly::BiPoly;

/// Soft capacity bounds for the brute-force oracles. `BARTILER_CAPACITY`
/// (a single integer) overrides both bounds when set.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Maximum number of DP profile states, `k^m`.
    pub dp_states: u128,
    /// Maximum number of tilings the explicit enumerator may emit.
    pub enumeration: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            dp_states: 1 << 24,
            enumeration: 10_000_000,
        }
    }
}

impl Caps {
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(s) = std::env::var("BARTILER_CAPACITY") {
            if let Ok(v) = s.trim().parse::<u128>() {
                caps.dp_states = v;
                caps.enumeration = v;
            }
        }
        caps
    }
}

/// Exact weighted count `t(m,n;k) = Σ a^v b^h` over all tilings, by the
/// column-sweep DP. The zero polynomial means no tiling exists.
pub fn count_tilings(m: u32, n: u32, k: u32) -> Result<BiPoly> {
    count_tilings_with(m, n, k, &Caps::from_env(), 1)
}

/// DP state: one base-`k` digit per row, giving how many of the following
/// columns are already occupied in that row by a horizontal bar.
fn encode(profile: &[u8], k: u64) -> u64 {
    profile
        .iter()
        .rev()
        .fold(0u64, |acc, &d| acc * k + u64::from(d))
}

fn decode(mut state: u64, k: u64, m: usize) -> Vec<u8> {
    let mut profile = vec![0u8; m];
    for slot in profile.iter_mut() {
        *slot = (state % k) as u8;
        state /= k;
    }
    profile
}

/// Fill every empty cell of the current column top to bottom, branching on
/// vertical bar vs horizontal start; yields (next state, Δvertical, Δhorizontal).
fn expand_state(profile: &[u8], k: u32, can_start_horizontal: bool) -> Vec<(u64, u32, u32)> {
    let m = profile.len();
    let mut out_profile = vec![0u8; m];
    let mut results = Vec::new();
    fn go(
        row: usize,
        profile: &[u8],
        out: &mut Vec<u8>,
        k: u32,
        can_h: bool,
        dv: u32,
        dh: u32,
        results: &mut Vec<(u64, u32, u32)>,
    ) {
        let m = profile.len();
        if row == m {
            results.push((encode(out, u64::from(k)), dv, dh));
            return;
        }
        if profile[row] > 0 {
            out[row] = profile[row] - 1;
            go(row + 1, profile, out, k, can_h, dv, dh, results);
            return;
        }
        if can_h {
            out[row] = k as u8 - 1;
            go(row + 1, profile, out, k, can_h, dv, dh + 1, results);
            out[row] = 0;
        }
        let ku = k as usize;
        if row + ku <= m && profile[row..row + ku].iter().all(|&p| p == 0) {
            // the k cells below are empty; out[] is already zeroed there
            go(row + ku, profile, out, k, can_h, dv + 1, dh, results);
        }
    }
    go(
        0,
        profile,
        &mut out_profile,
        k,
        can_start_horizontal,
        0,
        0,
        &mut results,
    );
    results
}

/// As [`count_tilings`], with explicit capacity bounds and an optional thread
/// count (> 1 parallelizes the per-column state expansion; the result is
/// bit-identical for every thread count because the arithmetic is exact and
/// the accumulation order canonicalized).
pub fn count_tilings_with(m: u32, n: u32, k: u32, caps: &Caps, threads: usize) -> Result<BiPoly> {
    assert!(k >= 1, "bar length must be positive");
    if m == 0 || n == 0 {
        return Ok(BiPoly::one());
    }
    let states = (u128::from(k)).checked_pow(m).unwrap_or(u128::MAX);
    let cap = caps.dp_states.min(u128::from(u64::MAX));
    if states > cap {
        return Err(Error::CapacityExceeded {
            needed: states,
            cap: caps.dp_states,
        });
    }

    let mut layer: Vec<(u64, BiPoly)> = vec![(0, BiPoly::one())];
    for col in 0..n {
        let can_h = col + k <= n;
        let expand_one = |(state, poly): &(u64, BiPoly)| -> Vec<(u64, BiPoly)> {
            let profile = decode(*state, u64::from(k), m as usize);
            expand_state(&profile, k, can_h)
                .into_iter()
                .map(|(next, dv, dh)| (next, poly.mul_monomial(dv, dh)))
                .collect()
        };
        let chunks: Vec<Vec<(u64, BiPoly)>> = if threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("thread pool construction");
            pool.install(|| {
                use rayon::prelude::*;
                layer.par_iter().map(expand_one).collect()
            })
        } else {
            layer.iter().map(expand_one).collect()
        };
        let mut merged: std::collections::BTreeMap<u64, BiPoly> = std::collections::BTreeMap::new();
        for chunk in chunks {
            for (state, poly) in chunk {
                match merged.entry(state) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(poly);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get().add(&poly);
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        layer = merged.into_iter().collect();
    }
    // horizontal starts are bounds-checked, so the sweep ends flush
    debug_assert!(layer.iter().all(|(s, _)| *s == 0));
    Ok(layer
        .into_iter()
        .find(|(s, _)| *s == 0)
        .map(|(_, p)| p)
        .unwrap_or_else(BiPoly::zero))
}

/// An `m × n` rectangle is tileable by `k × 1` bars iff `k` divides `m` or `n`.
pub fn klarner_tileable(m: u32, n: u32, k: u32) -> bool {
    assert!(m >= 1 && n >= 1 && k >= 1, "inputs must be positive");
    m % k == 0 || n % k == 0
}

/// Graham's criterion: a fault-free tiling of `m × n` by `k1 × k2` rectangles
/// (both orientations) exists iff (1) each of `k1, k2` divides `m` or `n`,
/// (2) each of `m, n` is `u·k1 + v·k2` with `u, v ≥ 1` in at least two ways,
/// and (3) `{k1,k2} = {1,2}` excludes `(m,n) = (6,6)`.
pub fn graham_fault_free_exists(m: u32, n: u32, k1: u32, k2: u32) -> Result<bool> {
    if m < 1 || n < 1 || k1 < 1 || k2 < 1 {
        return Err(Error::PreconditionViolated(
            "all side and tile lengths must be positive".into(),
        ));
    }
    if k1.gcd(&k2) != 1 {
        return Err(Error::PreconditionViolated(format!(
            "tile sides {k1} and {k2} must be coprime"
        )));
    }
    if u64::from(m) * u64::from(n) <= u64::from(k1) * u64::from(k2) {
        return Err(Error::PreconditionViolated(format!(
            "rectangle area {m}*{n} must exceed tile area {k1}*{k2}"
        )));
    }
    let divides_one = |k: u32| m % k == 0 || n % k == 0;
    let representations = |t: u32| {
        let mut count = 0u32;
        let mut u = 1;
        while u * k1 < t {
            if (t - u * k1) % k2 == 0 {
                count += 1;
            }
            u += 1;
        }
        count
    };
    let cond1 = divides_one(k1) && divides_one(k2);
    let cond2 = representations(m) >= 2 && representations(n) >= 2;
    let pair = (k1.min(k2), k1.max(k2));
    let cond3 = !(pair == (1, 2) && m == 6 && n == 6);
    Ok(cond1 && cond2 && cond3)
}

/// Closed count of all tilings of an `m × kℓ` rectangle in the narrow regime
/// `k ≤ m < 2k`: `Σ_{j=0}^{ℓ} (m−k+1)^j · C(kj+ℓ−j, ℓ−j)`.
pub fn ar_narrow_count(m: u32, ell: u32, k: u32) -> Result<BigInt> {
    if !(k <= m && m < 2 * k) {
        return Err(Error::RangeViolation(format!(
            "need k <= m < 2k, got m={m}, k={k}"
        )));
    }
    let mut total = BigInt::zero();
    let base = BigInt::from(m - k + 1);
    let mut power = BigInt::one();
    for j in 0..=i64::from(ell) {
        let (ell, k) = (i64::from(ell), i64::from(k));
        total += &power * binomial(k * j + ell - j, ell - j);
        power *= &base;
    }
    Ok(total)
}
