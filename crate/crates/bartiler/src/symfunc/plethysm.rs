//! Numeric symmetric-function oracles built on the rim-hook layer: exact
//! evaluation of elementary symmetric polynomials, Schur polynomials through
//! the dual Jacobi-Trudi determinant, the elementary expansion of the
//! plethysm `e_s ∘ e_2`, and the reconstruction of the transfer-determinant
//! closed form from signed tableau counts.

use super::srht::{frob_condition, special_decompositions, srht_enumerate};
use super::{enumerate_asc, Partition};
use crate::poly::{BiPoly, XPoly};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// All elementary symmetric polynomials `e_0..e_n` of the given values.
pub fn elementary_symmetric(values: &[BigInt]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); values.len() + 1];
    e[0] = BigInt::one();
    for (i, v) in values.iter().enumerate() {
        for j in (1..=i + 1).rev() {
            let add = v * &e[j - 1];
            e[j] += add;
        }
    }
    e
}

fn e_at(es: &[BigInt], idx: i64) -> BigInt {
    if idx < 0 || idx as usize >= es.len() {
        BigInt::zero()
    } else {
        es[idx as usize].clone()
    }
}

/// Product `e_(mu_1) e_(mu_2) ...` over a table of precomputed elementary
/// symmetric values; indices past the table are zero.
pub fn e_mu(es: &[BigInt], mu: &[u32]) -> BigInt {
    mu.iter().map(|&p| e_at(es, i64::from(p))).product()
}

/// `e_s` of the pairwise products `γ_i γ_j`, `i < j`: the plethysm
/// `e_s ∘ e_2` evaluated at `γ`.
pub fn pairwise_product_e(gamma: &[BigInt], s: usize) -> BigInt {
    let mut products = Vec::new();
    for i in 0..gamma.len() {
        for j in i + 1..gamma.len() {
            products.push(&gamma[i] * &gamma[j]);
        }
    }
    e_at(&elementary_symmetric(&products), s as i64)
}

/// Fraction-free determinant (Bareiss).
fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Schur polynomial `s_lambda(gamma)` through the dual Jacobi-Trudi
/// determinant `det(e_(λ'_i - i + j))`.
pub fn schur_eval(lambda: &Partition, gamma: &[BigInt]) -> BigInt {
    let conj = lambda.conjugate();
    let m = conj.len();
    if m == 0 {
        return BigInt::one();
    }
    let es = elementary_symmetric(gamma);
    let mat: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| e_at(&es, i64::from(conj.parts()[i]) - i as i64 + j as i64))
                .collect()
        })
        .collect();
    det_bigint(mat)
}

/// Coefficients `a_mu` of the elementary expansion
/// `e_s ∘ e_2 = sum over mu of a_mu e_mu`, as signed tableau counts summed
/// over the almost-self-conjugate shapes of `2s`. Keys are partitions of
/// `2s` in decreasing-part form; zero coefficients are dropped.
pub fn amu_coefficients(s: u32) -> BTreeMap<Vec<u32>, BigInt> {
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for lambda in enumerate_asc(2 * s).expect("even target") {
        for d in special_decompositions(&lambda) {
            let entry = out.entry(d.content()).or_insert_with(BigInt::zero);
            *entry += d.sign();
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The part of `amu_coefficients(s)` supported on contents with parts in
/// `{1, k}`: only shapes passing the Frobenius arm inequalities contribute,
/// each through its unique tableau.
pub fn plethysm_e_coeffs(s: u32, k: u32) -> BTreeMap<Vec<u32>, BigInt> {
    assert!(k >= 2, "hook length must be at least 2");
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for lambda in enumerate_asc(2 * s).expect("even target") {
        if !frob_condition(&lambda, k).expect("shape is almost self-conjugate") {
            continue;
        }
        let d = lambda.rank() as u32;
        let ones = (2 * s).checked_sub(k * d).expect("content fits the shape");
        let mut mu_parts = vec![k; d as usize];
        mu_parts.extend(std::iter::repeat(1).take(ones as usize));
        let mu = Partition::new(mu_parts).expect("decreasing parts");
        let tableaux = srht_enumerate(&lambda, &mu).expect("sizes match");
        assert_eq!(tableaux.len(), 1, "tableau must be unique");
        let entry = out.entry(mu.parts().to_vec()).or_insert_with(BigInt::zero);
        *entry += tableaux[0].sign();
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Rebuilds the closed-form transfer determinant `f_(k-1)(x; a, -b)` from
/// signed tableau counts alone: the coefficient of `x^s` collects, over the
/// almost-self-conjugate shapes of `2s` passing the arm inequalities,
/// `sgn(S_lambda) a^(2s - k d) ((-1)^(k+1) b)^d` with an overall `(-1)^s`.
pub fn denominator_from_srht(k: u32) -> XPoly {
    assert!(k >= 2, "bar length must be at least 2");
    let smax = (k * (k - 1) / 2) as usize;
    let mut coeffs = vec![BiPoly::zero(); smax + 1];
    for s in 0..=smax as u32 {
        for lambda in enumerate_asc(2 * s).expect("even target") {
            if !frob_condition(&lambda, k).expect("shape is almost self-conjugate") {
                continue;
            }
            let d = lambda.rank() as u32;
            let ones = 2 * s - k * d;
            let mut mu_parts = vec![k; d as usize];
            mu_parts.extend(std::iter::repeat(1).take(ones as usize));
            let mu = Partition::new(mu_parts).expect("decreasing parts");
            let tableaux = srht_enumerate(&lambda, &mu).expect("sizes match");
            assert_eq!(tableaux.len(), 1, "tableau must be unique");
            let mut c = BigInt::from(tableaux[0].sign());
            if s % 2 == 1 {
                c = -c;
            }
            if k % 2 == 0 && d % 2 == 1 {
                c = -c;
            }
            coeffs[s as usize].add_term(ones, d, &c);
        }
    }
    XPoly::from_coeffs(coeffs)
}
