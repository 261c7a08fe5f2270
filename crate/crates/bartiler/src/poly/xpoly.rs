use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::BiPoly;

fn zero_bipoly() -> &'static BiPoly {
    static ZERO: OnceLock<BiPoly> = OnceLock::new();
    ZERO.get_or_init(BiPoly::zero)
}

/// Dense polynomial in `x` with `BiPoly` coefficients; trailing zeros trimmed,
/// so the empty coefficient list is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    coeffs: Vec<BiPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BiPoly::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BiPoly>) -> Self {
        while coeffs.last().map_or(false, BiPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    /// `c * x^n`.
    pub fn monomial(c: BiPoly, n: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BiPoly::zero(); n + 1];
        coeffs[n] = c;
        XPoly { coeffs }
    }

    pub fn constant(c: BiPoly) -> Self {
        Self::monomial(c, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BiPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &BiPoly {
        self.coeffs.get(n).unwrap_or_else(|| zero_bipoly())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(other.coeff(i)));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).sub(other.coeff(i)));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        XPoly {
            coeffs: self.coeffs.iter().map(BiPoly::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BiPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&ci.mul(cj));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn mul_bipoly(&self, c: &BiPoly) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|p| p.mul(c)).collect())
    }

    /// Multiplies by `x^n`.
    pub fn shift_x(&self, n: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BiPoly::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `x -> -x`: negates odd-degree coefficients.
    pub fn negate_x(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
            .collect();
        XPoly { coeffs }
    }

    /// `x -> c*x` for a constant-in-x multiplier `c` in `Z[a,b]`.
    pub fn scale_x(&self, c: &BiPoly) -> Self {
        let mut factor = BiPoly::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for coeff in &self.coeffs {
            out.push(coeff.mul(&factor));
            factor = factor.mul(c);
        }
        Self::from_coeffs(out)
    }

    /// `b -> b^k` in every coefficient.
    pub fn substitute_b_pow(&self, k: u32) -> Self {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| c.substitute_b_pow(k)).collect(),
        }
    }

    /// `b -> -b` in every coefficient.
    pub fn negate_b(&self) -> Self {
        XPoly {
            coeffs: self.coeffs.iter().map(BiPoly::negate_b).collect(),
        }
    }

    /// `a -> 1` in every coefficient.
    pub fn substitute_a_one(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(BiPoly::substitute_a_one).collect())
    }

    /// Rehomogenizes a polynomial in `(x, b)` so the `x^n` coefficient becomes
    /// homogeneous of degree `2n` in `(a, b)`: each `b^β x^n` turns into
    /// `a^(2n−β) b^β x^n`. Requires `a`-free input and `β ≤ 2n` throughout.
    pub fn homogenize_weight2(&self) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (n, c) in self.coeffs.iter().enumerate() {
            let mut h = BiPoly::zero();
            for (&(da, db), v) in c.terms() {
                if da != 0 {
                    return Err(Error::PreconditionViolated(
                        "homogenize_weight2 expects an a-free polynomial".into(),
                    ));
                }
                let target = 2 * n as i64 - db as i64;
                if target < 0 {
                    return Err(Error::NegativeExponent(target));
                }
                h.add_term(target as u32, db, v);
            }
            out.push(h);
        }
        Ok(Self::from_coeffs(out))
    }

    pub fn eval_ab(&self, a: &BigInt, b: &BigInt) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval(a, b)).collect()
    }

    pub fn eval_ab_rational(&self, a: &BigRational, b: &BigRational) -> Vec<BigRational> {
        self.coeffs.iter().map(|c| c.eval_rational(a, b)).collect()
    }

    /// Exact division; `None` when `divisor` does not divide `self` in `Z[a,b][x]`.
    /// The divisor's leading x-coefficient must be a (signed) monomial.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.deg().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.deg().unwrap();
        if nd < dd {
            return None;
        }
        let (lda, ldb, lc) = divisor
            .coeff(dd)
            .as_monomial()
            .expect("divisor leading coefficient must be a monomial");
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut quot = vec![BiPoly::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = rem.coeff(i + dd).clone();
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact_monomial(&lc, lda, ldb)?;
            rem = rem.sub(&divisor.mul(&XPoly::monomial(q.clone(), i)));
            quot[i] = q;
        }
        rem.is_zero().then(|| Self::from_coeffs(quot))
    }

    /// JSON: list of BiPoly JSON values indexed by x-degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(BiPoly::to_json).collect())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::OutOfRange("XPoly JSON must be a list".into()))?;
        let coeffs = arr
            .iter()
            .map(BiPoly::from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

impl fmt::Display for XPoly {
    /// Ascending x-degree, each coefficient parenthesized when it has several
    /// terms: `1 - a^2*x - (3*a^2*b^2 + 2*b^4)*x^2 - ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // Pull a common sign out when every term has the same sign.
            let all_neg = c.terms().all(|(_, v)| v < &BigInt::from(0));
            let (sign_neg, body) = if all_neg {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if first {
                if sign_neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let body_str = body.to_string();
            let needs_parens = body.num_terms() > 1 && n > 0;
            let is_unit = body.is_one();
            if n == 0 {
                write!(f, "{body_str}")?;
            } else {
                if !is_unit {
                    if needs_parens {
                        write!(f, "({body_str})*")?;
                    } else {
                        write!(f, "{body_str}*")?;
                    }
                }
                if n == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{n}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}
