//! Multilinear polynomials in indeterminates `x_1, …, x_r`, each monomial a
//! subset of the variables. Used for the signed odd-composition polynomial
//! `φ_r` and its two-step recursion, which the determinant checks instantiate
//! with independent monomials.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::comb::{enumerate_oc, palpha};
use crate::poly::{BiPoly, XPoly};

/// Multilinear integer polynomial; bit `i−1` of a monomial mask is `x_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SetPoly {
    terms: BTreeMap<u64, BigInt>,
}

impl SetPoly {
    pub fn zero() -> Self {
        SetPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        let mut p = SetPoly::zero();
        p.add_term(0, &BigInt::one());
        p
    }

    pub fn add_term(&mut self, mask: u64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mask, c) in other.terms() {
            out.add_term(mask, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mask, c) in other.terms() {
            out.add_term(mask, &-c.clone());
        }
        out
    }

    /// Multiplies by `±x_{i1}·x_{i2}·…` (1-based variables). The factors must
    /// be absent from every term, as squares would leave the multilinear ring.
    pub fn mul_vars(&self, vars: &[u32], sign: i64) -> Self {
        let mut bits = 0u64;
        for &v in vars {
            assert!(v >= 1, "variables are 1-based");
            bits |= 1 << (v - 1);
        }
        let mut out = SetPoly::zero();
        let sign = BigInt::from(sign);
        for (mask, c) in self.terms() {
            assert_eq!(mask & bits, 0, "product would square a variable");
            out.add_term(mask | bits, &(c * &sign));
        }
        out
    }

    /// Partial derivative with respect to `x_i`: keep the terms containing
    /// `x_i` and delete that factor.
    pub fn derivative(&self, i: u32) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let bit = 1u64 << (i - 1);
        let mut out = SetPoly::zero();
        for (mask, c) in self.terms() {
            if mask & bit != 0 {
                out.add_term(mask & !bit, c);
            }
        }
        out
    }

    /// Renames every `x_i` to `x_{i+1}`.
    pub fn shift_up(&self) -> Self {
        let mut out = SetPoly::zero();
        for (mask, c) in self.terms() {
            out.add_term(mask << 1, c);
        }
        out
    }

    /// Substitutes `x_i ↦ b^{exps[i−1]}`. With exponents like `2^i` whose
    /// subset sums are all distinct, equality of instantiations is equality
    /// of multilinear polynomials.
    pub fn instantiate_b(&self, exps: &[u32]) -> BiPoly {
        let mut out = BiPoly::zero();
        for (mask, c) in self.terms() {
            let mut deg = 0u32;
            for (i, &e) in exps.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    deg += e;
                }
            }
            assert!(
                mask >> exps.len() == 0,
                "term uses a variable without an exponent"
            );
            out.add_term(0, deg, c);
        }
        out
    }

    /// Substitutes `x_i ↦ assignment[i−1]`.
    pub fn eval_xpoly(&self, assignment: &[XPoly]) -> XPoly {
        let mut out = XPoly::zero();
        for (mask, c) in self.terms() {
            let mut prod = XPoly::constant(BiPoly::constant(c.clone()));
            for (i, value) in assignment.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    prod = prod.mul(value);
                }
            }
            assert!(
                mask >> assignment.len() == 0,
                "term uses a variable without a value"
            );
            out = out.add(&prod);
        }
        out
    }
}

/// `φ_r` from its definition: the sum over odd compositions `α` with total at
/// most `r` of `(−1)^{⌊(ℓ(α)+1)/2⌋} ∏_{p} x_p`, the product over the zig-zag
/// images of the partial sums of `α`.
pub fn phi_set(r: u32) -> SetPoly {
    let mut out = SetPoly::zero();
    for alpha in enumerate_oc(r) {
        let l = alpha.len() as u32;
        let sign = if ((l + 1) / 2) % 2 == 0 { 1 } else { -1 };
        let mut mask = 0u64;
        for p in palpha(r, &alpha).expect("enumerated compositions are valid") {
            mask |= 1 << (p - 1);
        }
        out.add_term(mask, &BigInt::from(sign));
    }
    out
}

/// `φ_r` by the two-step recursion
/// `φ_r = (1 − x_1 x_r + x_r ∂/∂x_{r−1}) φ_{r−2}(x_2, …, x_{r−1})`,
/// grounded at `φ_1 = 1 − x_1` and `φ_2 = 1 − x_2 − x_1 x_2`. Exists only to
/// cross-check [`phi_set`]; production code never calls it.
pub fn phi_rec(r: u32) -> SetPoly {
    assert!(r >= 1);
    if r == 1 {
        let mut p = SetPoly::one();
        p.add_term(1 << 0, &BigInt::from(-1));
        return p;
    }
    if r == 2 {
        let mut p = SetPoly::one();
        p.add_term(1 << 1, &BigInt::from(-1));
        p.add_term(0b11, &BigInt::from(-1));
        return p;
    }
    let shifted = phi_rec(r - 2).shift_up();
    shifted
        .sub(&shifted.mul_vars(&[1, r], 1))
        .add(&shifted.derivative(r - 1).mul_vars(&[r], 1))
}
