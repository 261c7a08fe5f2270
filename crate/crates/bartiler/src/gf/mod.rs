//! Rational generating functions for bar tilings of `2k × n` rectangles:
//! the transfer-matrix route (adjacency matrix, determinant, adjugate), the
//! closed combined form, the central-fault and fault-free block series, and
//! big-integer coefficient extraction.

pub mod multilinear;

use num_bigint::BigInt;
use num_traits::One;

use crate::comb::{enumerate_oc, f_poly, palpha, FnRoute};
use crate::error::Result;
use crate::poly::{coeff_at, sqrt_pair_product, BiPoly, RationalGF, XPoly};

/// Square matrix of polynomials in x with `BiPoly` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: Vec<Vec<XPoly>>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<XPoly>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        PolyMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// 0-based access.
    pub fn entry(&self, i: usize, j: usize) -> &XPoly {
        &self.rows[i][j]
    }

    /// `I − self`.
    pub fn identity_minus(&self) -> PolyMatrix {
        let dim = self.dim();
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            XPoly::one().sub(&self.rows[i][j])
                        } else {
                            self.rows[i][j].neg()
                        }
                    })
                    .collect()
            })
            .collect();
        PolyMatrix { rows }
    }
}

/// Weighted adjacency matrix of the width-offset graph for bar length `k`:
/// `(k−1) × (k−1)` with entry `(i,j) = b^k x^j` when `i + j ≥ k` (1-based),
/// zero otherwise.
pub fn build_a(k: u32) -> PolyMatrix {
    assert!(k >= 2, "bar length must be at least 2");
    let dim = (k - 1) as usize;
    let rows = (1..=dim)
        .map(|i| {
            (1..=dim)
                .map(|j| {
                    if i + j >= k as usize {
                        XPoly::monomial(BiPoly::monomial_i64(1, 0, k), j)
                    } else {
                        XPoly::zero()
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix { rows }
}

/// Exact determinant by cofactor expansion along rows, memoized on the set of
/// surviving columns (2^dim subproblems; entries stay sparse).
pub fn det_poly(m: &PolyMatrix) -> XPoly {
    let dim = m.dim();
    assert!(dim <= 63, "determinant dimension out of range");
    let full: u64 = if dim == 64 { u64::MAX } else { (1 << dim) - 1 };
    let mut memo: std::collections::HashMap<u64, XPoly> = std::collections::HashMap::new();
    fn go(cols: u64, m: &PolyMatrix, memo: &mut std::collections::HashMap<u64, XPoly>) -> XPoly {
        if cols == 0 {
            return XPoly::one();
        }
        if let Some(hit) = memo.get(&cols) {
            return hit.clone();
        }
        let dim = m.dim();
        let row = dim - cols.count_ones() as usize;
        let mut acc = XPoly::zero();
        let mut pos = 0u32;
        for j in 0..dim {
            if cols >> j & 1 == 0 {
                continue;
            }
            let entry = m.entry(row, j);
            if !entry.is_zero() {
                let minor = go(cols & !(1 << j), m, memo);
                let term = entry.mul(&minor);
                acc = if pos % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            pos += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    go(full, m, &mut memo)
}

/// Adjugate: `adj(M)[j][i] = (−1)^{i+j} det(M without row i, column j)`, so
/// that `M · adj(M) = det(M) · I`.
pub fn adjugate(m: &PolyMatrix) -> PolyMatrix {
    let dim = m.dim();
    assert!(dim >= 1, "adjugate needs a nonempty matrix");
    if dim == 1 {
        return PolyMatrix::from_rows(vec![vec![XPoly::one()]]);
    }
    let minor = |skip_row: usize, skip_col: usize| {
        let rows: Vec<Vec<XPoly>> = (0..dim)
            .filter(|&i| i != skip_row)
            .map(|i| {
                (0..dim)
                    .filter(|&j| j != skip_col)
                    .map(|j| m.entry(i, j).clone())
                    .collect()
            })
            .collect();
        det_poly(&PolyMatrix::from_rows(rows))
    };
    let rows = (0..dim)
        .map(|j| {
            (0..dim)
                .map(|i| {
                    let d = minor(i, j);
                    if (i + j) % 2 == 0 {
                        d
                    } else {
                        d.neg()
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix { rows }
}

/// Direct evaluation of the signed odd-composition polynomial: substitutes
/// `assignment[i−1]` for `x_i` in the sum over all odd compositions with
/// total at most `r` (see [`multilinear::phi_set`] for the abstract form).
pub fn phi(r: u32, assignment: &[XPoly]) -> XPoly {
    assert_eq!(assignment.len(), r as usize, "need one value per variable");
    let mut out = XPoly::zero();
    for alpha in enumerate_oc(r) {
        let l = alpha.len() as u32;
        let sign = if ((l + 1) / 2) % 2 == 0 { 1 } else { -1 };
        let mut prod = XPoly::constant(BiPoly::constant_i64(sign));
        for p in palpha(r, &alpha).expect("enumerated compositions are valid") {
            prod = prod.mul(&assignment[(p - 1) as usize]);
        }
        out = out.add(&prod);
    }
    out
}

/// Generating function `V_k`: weighted vertically fault-free tilings of a
/// `2k × n` rectangle with a central fault, summed over n. Built from the
/// transfer matrix (adjugate route), then rehomogenized so the coefficient of
/// `x^n` has total degree `2n` in `a, b`.
pub fn v_rational(k: u32) -> Result<RationalGF> {
    assert!(k >= 2, "bar length must be at least 2");
    let a = build_a(k);
    let i_minus_a = a.identity_minus();
    let q = det_poly(&i_minus_a);
    let adj = adjugate(&i_minus_a);
    let dim = a.dim();
    let v: Vec<XPoly> = (1..=dim)
        .map(|j| XPoly::monomial(BiPoly::monomial_i64(1, 0, k), j))
        .collect();
    // w = v·A, then p = w·adj(I−A)·1ᵀ
    let w: Vec<XPoly> = (0..dim)
        .map(|col| {
            let mut acc = XPoly::zero();
            for (i, vi) in v.iter().enumerate() {
                acc = acc.add(&vi.mul(a.entry(i, col)));
            }
            acc
        })
        .collect();
    let mut p = XPoly::zero();
    for (i, wi) in w.iter().enumerate() {
        for j in 0..dim {
            p = p.add(&wi.mul(adj.entry(i, j)));
        }
    }
    let v_dot_ones = v.iter().fold(XPoly::zero(), |acc, vi| acc.add(vi));
    let p_tilde = XPoly::one().add(&v_dot_ones).mul(&q).add(&p);
    // numerator of (x + b^{2k} x^k) + 2 b^k x^k · (p̃/q)
    let head = XPoly::monomial(BiPoly::one(), 1).add(&XPoly::monomial(
        BiPoly::monomial_i64(1, 0, 2 * k),
        k as usize,
    ));
    let num_b = head
        .mul(&q)
        .add(&p_tilde.mul(&XPoly::monomial(BiPoly::monomial_i64(2, 0, k), k as usize)));
    Ok(RationalGF::new(
        num_b.homogenize_weight2()?,
        q.homogenize_weight2()?,
    )?)
}

/// Generating function `U_k`: weighted vertically fault-free tilings without
/// a central fault: `(k−1) a^k b^k x^k / (1 − b^{2k} x^k)^{k−1}`.
pub fn u_rational(k: u32) -> RationalGF {
    assert!(k >= 2, "bar length must be at least 2");
    let num = XPoly::monomial(BiPoly::monomial(BigInt::from(k - 1), k, k), k as usize);
    let den = XPoly::one()
        .sub(&XPoly::monomial(
            BiPoly::monomial_i64(1, 0, 2 * k),
            k as usize,
        ))
        .pow(k - 1);
    RationalGF::new(num, den).expect("denominator has constant term 1")
}

/// Closed form of the diagonal Hadamard square of `1/(1 − a x − b x^N)`:
/// numerator `f_{N−1}(x;a,b)`, denominator
/// `q(x) · f_{N−1}(x;a,−b)` where `q(x²) = p(x)·p(−x)`.
pub fn hadamard_rational(n: u32) -> Result<RationalGF> {
    assert!(n >= 2, "order must be at least 2");
    let f = f_poly(n - 1, FnRoute::Closed);
    let p = XPoly::one()
        .sub(&XPoly::monomial(BiPoly::monomial_i64(1, 1, 0), 1))
        .sub(&XPoly::monomial(BiPoly::monomial_i64(1, 0, 1), n as usize));
    let den = sqrt_pair_product(&p)?.mul(&f.negate_b());
    RationalGF::new(f, den)
}

/// The headline rational form: `Σ_n t(2k,n;k) xⁿ` with
/// numerator `(1 − b^{2k} x^k)^{k−1} · f_{k−1}(x;a,b^k)` and denominator
/// `q(x)·(1 − b^{2k} x^k)^{k−1}·f_{k−1}(x;a,−b^k) − (k−1) a^k b^k x^k·f_{k−1}(x;a,b^k)`,
/// where `q(x²) = p(x)p(−x)` for `p = 1 − a x − b^k x^k`. Deliberately left
/// unreduced; common factors are tolerated downstream.
pub fn f_main(k: u32) -> Result<RationalGF> {
    assert!(k >= 2, "bar length must be at least 2");
    let f_base = f_poly(k - 1, FnRoute::Closed);
    let f_pos = f_base.substitute_b_pow(k);
    let f_neg = f_base.negate_b().substitute_b_pow(k);
    let cyc_pow = XPoly::one()
        .sub(&XPoly::monomial(
            BiPoly::monomial_i64(1, 0, 2 * k),
            k as usize,
        ))
        .pow(k - 1);
    let p = XPoly::one()
        .sub(&XPoly::monomial(BiPoly::monomial_i64(1, 1, 0), 1))
        .sub(&XPoly::monomial(BiPoly::monomial_i64(1, 0, k), k as usize));
    let q = sqrt_pair_product(&p)?;
    let num = cyc_pow.mul(&f_pos);
    let tail = XPoly::monomial(BiPoly::monomial(BigInt::from(k - 1), k, k), k as usize).mul(&f_pos);
    let den = q.mul(&cyc_pow).mul(&f_neg).sub(&tail);
    RationalGF::new(num, den)
}

/// Number of bar tilings of a `2k × n` rectangle, exactly: the coefficient of
/// `xⁿ` in the rational form at `a = b = 1`, via the streaming recurrence
/// (memory bounded by the denominator degree).
pub fn big_count(k: u32, n: usize) -> Result<BigInt> {
    big_count_at(k, n, &BigInt::one(), &BigInt::one())
}

/// As [`big_count`] with arbitrary integer weights for vertical and
/// horizontal bars.
pub fn big_count_at(k: u32, n: usize, a: &BigInt, b: &BigInt) -> Result<BigInt> {
    coeff_at(&f_main(k)?, n, a, b)
}
