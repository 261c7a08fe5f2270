//! Odd compositions and their statistics: the zig-zag permutation `σ_N`, the
//! statistic `S_N`, slide normal forms, the closed-form coefficients `c_s(N)`,
//! both constructions of `f_N(x;a,b)`, the `P_α` subsets, and the `TComp`
//! compositions attached to centrally faulted fault-free tilings.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, XPoly};

/// `C(n, r)` with the convention that out-of-range arguments give 0.
pub fn binomial(n: i64, r: i64) -> BigInt {
    if r < 0 || r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The zig-zag permutation: even positions map to `i/2`, odd ones count down
/// from `n`. As a word, `σ_7 = 7 1 6 2 5 3 4`.
pub fn sigma(n: u32, i: u32) -> Result<u32> {
    if i < 1 || i > n {
        return Err(Error::OutOfRange(format!("sigma index {i} not in 1..={n}")));
    }
    Ok(if i % 2 == 0 { i / 2 } else { n - (i - 1) / 2 })
}

fn validate_oc(n: u32, parts: &[u32]) -> Result<()> {
    let mut sum: u64 = 0;
    for &p in parts {
        if p == 0 || p % 2 == 0 {
            return Err(Error::NotOddComposition);
        }
        sum += u64::from(p);
    }
    if sum > u64::from(n) {
        return Err(Error::SumExceedsN);
    }
    Ok(())
}

/// All odd compositions with sum at most `n` (including the empty one), in
/// lexicographic order with prefixes listed before their extensions.
pub fn enumerate_oc(n: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        let mut p = 1;
        while p <= remaining {
            cur.push(p);
            go(remaining - p, cur, out);
            cur.pop();
            p += 2;
        }
    }
    go(n, &mut cur, &mut out);
    out
}

/// `S_N(α)`: the sum of `σ_N` over the partial sums of `α`.
pub fn s_stat(n: u32, parts: &[u32]) -> Result<u64> {
    validate_oc(n, parts)?;
    let mut partial = 0u32;
    let mut total = 0u64;
    for &p in parts {
        partial += p;
        total += u64::from(sigma(n, partial)?);
    }
    Ok(total)
}

/// Slide normal form `(1, 1, …, 1, a)` by the closed formulas; preserves both
/// `S_N` and the length.
pub fn canonical_form(n: u32, parts: &[u32]) -> Result<Vec<u32>> {
    validate_oc(n, parts)?;
    let l = parts.len();
    if l <= 1 {
        return Ok(parts.to_vec());
    }
    let (ones, last) = if l % 2 == 1 {
        // length 2m+1: (1^{2m}, α₁+α₃+⋯+α_{2m+1} − m)
        let m = (l - 1) / 2;
        let odd_sum: u32 = parts.iter().step_by(2).sum();
        (l - 1, odd_sum - m as u32)
    } else {
        // length 2m: (1^{2m−1}, α₂+α₄+⋯+α_{2m} − m + 1)
        let m = l / 2;
        let even_sum: u32 = parts.iter().skip(1).step_by(2).sum();
        (l - 1, even_sum - m as u32 + 1)
    };
    let mut out = vec![1u32; ones];
    out.push(last);
    Ok(out)
}

/// Closed-form coefficient `c_s(N)` of `x^s` in `f_N(x;1,1)`.
pub fn c_closed(s: u64, n: u32) -> Result<BigInt> {
    let max = u64::from(n) * (u64::from(n) + 1) / 2;
    if s > max {
        return Err(Error::OutOfRange(format!("s={s} exceeds N(N+1)/2={max}")));
    }
    if s == 0 {
        return Ok(BigInt::one());
    }
    let (s, n) = (s as i64, i64::from(n));
    let half = n / 2;
    if (2 * s / (n + 1)) % 2 == 1 {
        let (q1, r1) = (s / (n + 1), s % (n + 1));
        if r1 > half {
            let sign = if (q1 + 1) % 2 == 0 { 1 } else { -1 };
            Ok(BigInt::from(sign) * binomial(n - r1, q1) * binomial(q1 + r1 - half - 1, q1))
        } else {
            Ok(BigInt::zero())
        }
    } else {
        let (q0, r0) = (s / n, s % n);
        if r0 <= half {
            let sign = if q0 % 2 == 0 { 1 } else { -1 };
            Ok(BigInt::from(sign) * binomial(r0 - 1, q0 - 1) * binomial(half - r0 + q0, q0))
        } else {
            Ok(BigInt::zero())
        }
    }
}

/// Which of the two constructions of `f_N` to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FnRoute {
    /// Coefficientwise via `c_s(N)` with exponents `rem(2s, N+1)` and `⌊2s/(N+1)⌋`.
    Closed,
    /// Signed sum over all odd compositions with sum ≤ N.
    Combinatorial,
}

/// `f_N(x;a,b)`, by either route; the two agree exactly (tested invariant).
pub fn f_poly(n: u32, route: FnRoute) -> XPoly {
    let max = usize::from(n as u16) * (n as usize + 1) / 2;
    let mut coeffs = vec![BiPoly::zero(); max + 1];
    match route {
        FnRoute::Closed => {
            for s in 0..=max as u64 {
                let c = c_closed(s, n).expect("s within range by construction");
                if c.is_zero() {
                    continue;
                }
                let rem = (2 * s % (u64::from(n) + 1)) as u32;
                let fl = (2 * s / (u64::from(n) + 1)) as u32;
                coeffs[s as usize].add_term(rem, fl, &c);
            }
        }
        FnRoute::Combinatorial => {
            for alpha in enumerate_oc(n) {
                let l = alpha.len() as u32;
                let s = s_stat(n, &alpha).expect("enumerated compositions are valid");
                let sign = if ((l + 1) / 2) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                let rem = (2 * s % (u64::from(n) + 1)) as u32;
                coeffs[s as usize].add_term(rem, l, &sign);
            }
        }
    }
    XPoly::from_coeffs(coeffs)
}

/// Number of compositions of `n` into `k` odd parts: `C((n+k)/2 − 1, k−1)`,
/// zero when `n+k` is odd.
pub fn oc_count_by_parts(n: u64, k: u64) -> BigInt {
    if (n + k) % 2 != 0 {
        return BigInt::zero();
    }
    binomial(((n + k) / 2) as i64 - 1, k as i64 - 1)
}

/// Number of odd compositions of integers ≤ `n` into `k` parts: `C(⌊(n+k)/2⌋, k)`.
pub fn oc_leq_count(n: u64, k: u64) -> BigInt {
    binomial(((n + k) / 2) as i64, k as i64)
}

/// The subset `P_α = {σ_N(α₁), σ_N(α₁+α₂), …}` of `[N]`.
pub fn palpha(n: u32, parts: &[u32]) -> Result<BTreeSet<u32>> {
    validate_oc(n, parts)?;
    let mut partial = 0u32;
    let mut set = BTreeSet::new();
    for &p in parts {
        partial += p;
        set.insert(sigma(n, partial)?);
    }
    Ok(set)
}

/// Tests whether a nonempty `S ⊆ [N]`, written `x₁ > x₂ > … > x_ℓ`, satisfies
/// `x_i + x_{ℓ+1−i} ≥ N+1` and `x_{i+1} + x_{ℓ+1−i} < N+1` for all `i`
/// (with `x_{ℓ+1} = 0`). The empty set is not a `P_α`.
pub fn is_palpha_set(n: u32, set: &BTreeSet<u32>) -> bool {
    assert!(
        set.iter().all(|&x| 1 <= x && x <= n),
        "set must be a subset of 1..=N"
    );
    if set.is_empty() {
        return false;
    }
    let xs: Vec<u32> = set.iter().rev().copied().collect();
    let l = xs.len();
    let x = |i: usize| if i < l { xs[i] } else { 0 }; // 0-based, x(l) = 0
    for i in 0..l {
        let opposite = x(l - 1 - i);
        if x(i) + opposite < n + 1 {
            return false;
        }
        if x(i + 1) + opposite >= n + 1 {
            return false;
        }
    }
    true
}

/// Compositions of `n` with all parts ≤ `k−1` and every two consecutive parts
/// summing to at least `k`, in lexicographic order.
pub fn tcomp_enumerate(n: u32, k: u32) -> Vec<Vec<u32>> {
    assert!(k >= 2, "parts live in 1..=k-1, so k must be at least 2");
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::new();
    fn go(remaining: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=(k - 1).min(remaining) {
            if let Some(&prev) = cur.last() {
                if prev + p < k {
                    continue;
                }
            }
            cur.push(p);
            go(remaining - p, k, cur, out);
            cur.pop();
        }
    }
    go(n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma_word(n: u32) -> Vec<u32> {
        (1..=n).map(|i| sigma(n, i).unwrap()).collect()
    }

    #[test]
    fn sigma_words() {
        assert_eq!(sigma_word(7), vec![7, 1, 6, 2, 5, 3, 4]);
        assert_eq!(sigma_word(6), vec![6, 1, 5, 2, 4, 3]);
        assert_eq!(sigma_word(1), vec![1]);
    }

    #[test]
    fn sigma_is_a_bijection() {
        for n in 1..=20 {
            let mut word = sigma_word(n);
            word.sort_unstable();
            assert_eq!(word, (1..=n).collect::<Vec<_>>());
        }
        assert!(sigma(5, 0).is_err());
        assert!(sigma(5, 6).is_err());
    }

    #[test]
    fn s_stat_examples() {
        assert_eq!(s_stat(6, &[1, 3, 1]).unwrap(), 12);
        assert_eq!(s_stat(15, &[1, 3, 5, 3, 1]).unwrap(), 43);
        assert_eq!(s_stat(9, &[]).unwrap(), 0);
        assert_eq!(s_stat(4, &[2]).unwrap_err(), Error::NotOddComposition);
        assert_eq!(s_stat(4, &[3, 3]).unwrap_err(), Error::SumExceedsN);
    }

    #[test]
    fn oc_listing_small() {
        let got = enumerate_oc(4);
        let expect: Vec<Vec<u32>> = vec![
            vec![],
            vec![1],
            vec![1, 1],
            vec![1, 1, 1],
            vec![1, 1, 1, 1],
            vec![1, 3],
            vec![3],
            vec![3, 1],
        ];
        assert_eq!(got, expect);
        assert_eq!(enumerate_oc(1), vec![vec![], vec![1]]);
    }

    #[test]
    fn oc_counts_are_fibonacci() {
        let mut fib = vec![1u64, 1];
        for i in 2..25 {
            let v = fib[i - 1] + fib[i - 2];
            fib.push(v);
        }
        for n in 1..=20u32 {
            // |OC_{≤N}| = F_{N+2} with F_1 = F_2 = 1
            assert_eq!(enumerate_oc(n).len() as u64, fib[(n + 1) as usize]);
        }
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(
            canonical_form(15, &[1, 3, 5, 3, 1]).unwrap(),
            vec![1, 1, 1, 1, 5]
        );
        assert_eq!(canonical_form(5, &[1]).unwrap(), vec![1]);
        assert_eq!(canonical_form(4, &[3, 1]).unwrap(), vec![1, 1]);
        assert_eq!(s_stat(4, &[3, 1]).unwrap(), s_stat(4, &[1, 1]).unwrap());
    }

    /// Slide reference: repeatedly slide the leftmost non-1 pair as far left
    /// as possible; middle pairs use
    /// `(…, α_{i−2}, α_{i−1}, α_i, α_{i+1}, …) → (…, α_{i−2}, 1, α_i, α_{i−1}+α_{i+1}−1, …)`
    /// and the final pair uses `(…, α_{ℓ−1}, α_ℓ) → (…, 1, α_ℓ)`.
    fn slide_to_normal_form(n: u32, alpha: &[u32]) -> Vec<u32> {
        let mut cur = alpha.to_vec();
        loop {
            let l = cur.len();
            let Some(p) = (0..l.saturating_sub(1)).find(|&j| cur[j] != 1) else {
                return cur;
            };
            let s_before = s_stat(n, &cur).unwrap();
            if p + 1 == l - 1 {
                let mut next = cur[..p].to_vec();
                next.push(1);
                next.push(cur[p + 1]);
                cur = next;
            } else {
                let mut next = cur[..p].to_vec();
                next.push(1);
                next.push(cur[p + 1]);
                next.push(cur[p] + cur[p + 2] - 1);
                next.extend_from_slice(&cur[p + 3..]);
                cur = next;
            }
            assert_eq!(s_stat(n, &cur).unwrap(), s_before, "slide must preserve S");
        }
    }

    #[test]
    fn closed_canonical_form_matches_iterated_slides() {
        for n in 1..=9 {
            for alpha in enumerate_oc(n) {
                assert_eq!(
                    canonical_form(n, &alpha).unwrap(),
                    slide_to_normal_form(n, &alpha),
                    "N={n} alpha={alpha:?}"
                );
            }
        }
    }

    #[test]
    fn canonical_form_preserves_s_and_length() {
        for n in 1..=10 {
            for alpha in enumerate_oc(n) {
                let beta = canonical_form(n, &alpha).unwrap();
                assert_eq!(beta.len(), alpha.len());
                assert_eq!(s_stat(n, &beta).unwrap(), s_stat(n, &alpha).unwrap());
            }
        }
    }

    #[test]
    fn length_recovered_from_s() {
        for n in 1..=10u32 {
            for alpha in enumerate_oc(n) {
                let s = s_stat(n, &alpha).unwrap();
                assert_eq!(
                    alpha.len() as u64,
                    2 * s / (u64::from(n) + 1),
                    "N={n} alpha={alpha:?}"
                );
            }
        }
    }

    #[test]
    fn c_closed_examples() {
        for n in 1..=8 {
            assert_eq!(c_closed(0, n).unwrap(), BigInt::one());
        }
        assert_eq!(c_closed(5, 4).unwrap(), BigInt::from(-2));
        assert_eq!(c_closed(1, 2).unwrap(), BigInt::zero());
        assert!(c_closed(11, 4).is_err());
    }

    #[test]
    fn c_closed_counts_compositions_up_to_sign() {
        for n in 1..=10u32 {
            let mut counts = std::collections::HashMap::new();
            for alpha in enumerate_oc(n) {
                *counts.entry(s_stat(n, &alpha).unwrap()).or_insert(0i64) += 1;
            }
            for s in 0..=u64::from(n) * (u64::from(n) + 1) / 2 {
                let c = c_closed(s, n).unwrap();
                let count = counts.get(&s).copied().unwrap_or(0);
                assert_eq!(
                    num_traits::Signed::abs(&c),
                    BigInt::from(count),
                    "N={n} s={s}"
                );
            }
        }
    }

    #[test]
    fn f_small_values() {
        // f_1 = 1 - b x
        let f1 = f_poly(1, FnRoute::Combinatorial);
        let expect = XPoly::from_coeffs(vec![BiPoly::one(), BiPoly::monomial_i64(-1, 0, 1)]);
        assert_eq!(f1, expect);
        assert_eq!(f_poly(1, FnRoute::Closed), expect);
        // f_2 = 1 - a b x^2 - b^2 x^3
        let f2 = f_poly(2, FnRoute::Closed);
        let expect = XPoly::from_coeffs(vec![
            BiPoly::one(),
            BiPoly::zero(),
            BiPoly::monomial_i64(-1, 1, 1),
            BiPoly::monomial_i64(-1, 0, 2),
        ]);
        assert_eq!(f2, expect);
        assert_eq!(f_poly(2, FnRoute::Combinatorial), expect);
    }

    #[test]
    fn f_degree_is_triangular() {
        for n in 1..=9u32 {
            let f = f_poly(n, FnRoute::Closed);
            assert_eq!(f.deg(), Some(n as usize * (n as usize + 1) / 2));
        }
    }

    #[test]
    fn oc_count_formulas_match_brute_force() {
        for n in 0..=14u64 {
            for k in 0..=10u64 {
                let brute = enumerate_oc(14)
                    .into_iter()
                    .filter(|alpha| {
                        alpha.len() as u64 == k
                            && alpha.iter().map(|&p| u64::from(p)).sum::<u64>() == n
                    })
                    .count();
                if k > 0 {
                    assert_eq!(
                        oc_count_by_parts(n, k),
                        BigInt::from(brute),
                        "exact-sum count n={n} k={k}"
                    );
                }
            }
        }
        assert_eq!(oc_count_by_parts(5, 3), BigInt::from(3));
        assert_eq!(oc_count_by_parts(4, 3), BigInt::zero());
        assert_eq!(oc_leq_count(4, 2), BigInt::from(3));
        for n in 1..=12u64 {
            for k in 1..=8u64 {
                let brute = enumerate_oc(n as u32)
                    .into_iter()
                    .filter(|alpha| alpha.len() as u64 == k)
                    .count();
                assert_eq!(
                    oc_leq_count(n, k),
                    BigInt::from(brute),
                    "leq count n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn palpha_example() {
        let set = palpha(15, &[1, 3, 5, 3, 1]).unwrap();
        let expect: BTreeSet<u32> = [15, 2, 11, 6, 9].into_iter().collect();
        assert_eq!(set, expect);
        assert!(is_palpha_set(15, &set));
    }

    #[test]
    fn palpha_image_matches_predicate_exhaustively() {
        let n = 4u32;
        let mut image = BTreeSet::new();
        for alpha in enumerate_oc(n) {
            if !alpha.is_empty() {
                image.insert(palpha(n, &alpha).unwrap());
            }
        }
        // all subsets of [4]
        for mask in 0u32..16 {
            let set: BTreeSet<u32> = (1..=4).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
            assert_eq!(
                is_palpha_set(n, &set),
                image.contains(&set),
                "subset {set:?}"
            );
        }
    }

    #[test]
    fn tcomp_examples() {
        let got = tcomp_enumerate(6, 3);
        let expect: Vec<Vec<u32>> = vec![
            vec![1, 2, 1, 2],
            vec![1, 2, 2, 1],
            vec![2, 1, 2, 1],
            vec![2, 2, 2],
        ];
        assert_eq!(got, expect);
        assert_eq!(tcomp_enumerate(0, 4), vec![Vec::<u32>::new()]);
        assert_eq!(tcomp_enumerate(1, 3), vec![vec![1]]);
    }
}
