use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, RationalGF, XPoly};

/// Power series in `x` truncated at a fixed order `T`: exactly `T+1`
/// coefficients are stored, including zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XSeries {
    coeffs: Vec<BiPoly>,
}

impl XSeries {
    pub fn from_coeffs(coeffs: Vec<BiPoly>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series carries at least its constant term"
        );
        XSeries { coeffs }
    }

    pub fn from_xpoly(p: &XPoly, order: usize) -> Self {
        let coeffs = (0..=order).map(|i| p.coeff(i).clone()).collect();
        XSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series orders must match");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(p, q)| p.add(q))
            .collect();
        XSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series orders must match");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(p, q)| p.sub(q))
            .collect();
        XSeries { coeffs }
    }

    /// Product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order(), "series orders must match");
        let t = self.order();
        let mut out = vec![BiPoly::zero(); t + 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coeffs.iter().enumerate() {
                if i + j > t {
                    break;
                }
                if cj.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&ci.mul(cj));
            }
        }
        XSeries { coeffs: out }
    }
}

/// Multiplicative inverse of `p` modulo `x^(T+1)`; requires `p(0) = 1`.
pub fn series_invert(p: &XPoly, order: usize) -> Result<XSeries> {
    if !p.coeff(0).is_one() {
        return Err(Error::NonUnitConstantTerm);
    }
    let mut coeffs: Vec<BiPoly> = Vec::with_capacity(order + 1);
    coeffs.push(BiPoly::one());
    let deg = p.deg().unwrap_or(0);
    for n in 1..=order {
        let mut acc = BiPoly::zero();
        for i in 1..=deg.min(n) {
            let pi = p.coeff(i);
            if pi.is_zero() {
                continue;
            }
            acc = acc.add(&pi.mul(&coeffs[n - i]));
        }
        coeffs.push(acc.neg());
    }
    Ok(XSeries { coeffs })
}

/// Termwise (Hadamard) product: `(A * B)_n = A_n · B_n` as `BiPoly` products.
pub fn hadamard_product(a: &XSeries, b: &XSeries) -> Result<XSeries> {
    if a.order() != b.order() {
        return Err(Error::TruncationMismatch(a.order(), b.order()));
    }
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(p, q)| p.mul(q))
        .collect();
    Ok(XSeries { coeffs })
}

/// Series of `num/den` to the given order.
pub fn rational_to_series(r: &RationalGF, order: usize) -> XSeries {
    let inv = series_invert(r.den(), order)
        .expect("RationalGF invariant guarantees a unit constant term");
    let num = XSeries::from_xpoly(r.num(), order);
    inv.mul(&num)
}

/// Coefficient of `x^n` in `num/den` after substituting integers for `a, b`,
/// by the linear recurrence `c_n = num_n − Σ_{i≥1} den_i·c_{n−i}`. Keeps only
/// the trailing `deg(den)` values.
pub fn coeff_at(r: &RationalGF, n: usize, a_val: &BigInt, b_val: &BigInt) -> Result<BigInt> {
    let num_vals = r.num().eval_ab(a_val, b_val);
    let den_vals = r.den().eval_ab(a_val, b_val);
    if den_vals.first().map_or(true, |c| !c.is_one()) {
        return Err(Error::NonUnitConstantTerm);
    }
    let d = den_vals.len() - 1;
    let num_at = |i: usize| num_vals.get(i).cloned().unwrap_or_else(BigInt::zero);
    if d == 0 {
        return Ok(num_at(n));
    }
    // history[i % d] holds c_i for the last d indices
    let mut history: Vec<BigInt> = vec![BigInt::zero(); d];
    let mut last = BigInt::zero();
    for i in 0..=n {
        let mut c = num_at(i);
        for j in 1..=d.min(i) {
            let dj = &den_vals[j];
            if dj.is_zero() {
                continue;
            }
            c -= dj * &history[(i - j) % d];
        }
        history[i % d] = c.clone();
        last = c;
    }
    Ok(last)
}

/// The polynomial `q` with `q(x²) = p(x)·p(−x)`. The product is computed
/// directly; any surviving odd-degree term signals an arithmetic bug.
pub fn sqrt_pair_product(p: &XPoly) -> Result<XPoly> {
    let r = p.mul(&p.negate_x());
    let mut out = Vec::new();
    for (i, c) in r.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            out.push(c.clone());
        } else if !c.is_zero() {
            return Err(Error::OddTermSurvived(i));
        }
    }
    Ok(XPoly::from_coeffs(out))
}
