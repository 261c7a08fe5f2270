use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial in `Z[a,b]`, keyed by `(deg_a, deg_b)`.
///
/// Zero coefficients are never stored, so equal polynomials have identical
/// representations and `==` is semantic equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn constant_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// `c * a^deg_a * b^deg_b`.
    pub fn monomial(c: BigInt, deg_a: u32, deg_b: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_a, deg_b), c);
        }
        BiPoly { terms }
    }

    pub fn monomial_i64(c: i64, deg_a: u32, deg_b: u32) -> Self {
        Self::monomial(BigInt::from(c), deg_a, deg_b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending `(deg_a, deg_b)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, deg_a: u32, deg_b: u32) -> BigInt {
        self.terms
            .get(&(deg_a, deg_b))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Adds `c * a^deg_a * b^deg_b`, keeping the representation canonical.
    pub fn add_term(&mut self, deg_a: u32, deg_b: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((deg_a, deg_b))
            .or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(deg_a, deg_b));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(da, db), c) in &other.terms {
            out.add_term(da, db, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(da, db), c) in &other.terms {
            out.add_term(da, db, &(-c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(&k, c)| (k, -c)).collect();
        BiPoly { terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(da1, db1), c1) in &self.terms {
            for (&(da2, db2), c2) in &other.terms {
                out.add_term(da1 + da2, db1 + db2, &(c1 * c2));
            }
        }
        out
    }

    pub fn mul_bigint(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let terms = self.terms.iter().map(|(&k, v)| (k, v * c)).collect();
        BiPoly { terms }
    }

    /// Multiplies by the monomial `a^deg_a * b^deg_b`.
    pub fn mul_monomial(&self, deg_a: u32, deg_b: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(da, db), v)| ((da + deg_a, db + deg_b), v.clone()))
            .collect();
        BiPoly { terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = BiPoly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for (&(da, db), c) in &self.terms {
            acc += c * int_pow(a, da) * int_pow(b, db);
        }
        acc
    }

    pub fn eval_rational(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(da, db), c) in &self.terms {
            acc += BigRational::from(c.clone()) * rat_pow(a, da) * rat_pow(b, db);
        }
        acc
    }

    /// `b -> b^k`.
    pub fn substitute_b_pow(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(da, db), v)| ((da, db * k), v.clone()))
            .collect();
        BiPoly { terms }
    }

    /// `b -> -b`.
    pub fn negate_b(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(da, db), v)| ((da, db), if db % 2 == 1 { -v } else { v.clone() }))
            .collect();
        BiPoly { terms }
    }

    /// `a -> 1`, merging terms that collide.
    pub fn substitute_a_one(&self) -> Self {
        let mut out = BiPoly::zero();
        for (&(_, db), c) in &self.terms {
            out.add_term(0, db, c);
        }
        out
    }

    pub fn max_deg_a(&self) -> u32 {
        self.terms.keys().map(|&(da, _)| da).max().unwrap_or(0)
    }

    pub fn max_deg_b(&self) -> u32 {
        self.terms.keys().map(|&(_, db)| db).max().unwrap_or(0)
    }

    /// Total degree `deg_a + deg_b` shared by every term, if there is one.
    /// Zero has every degree; reported as `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|&(da, db)| da + db);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Exact division by `c * a^deg_a * b^deg_b`; `None` unless every term divides.
    pub fn div_exact_monomial(&self, c: &BigInt, deg_a: u32, deg_b: u32) -> Option<Self> {
        assert!(!c.is_zero(), "division by zero monomial");
        let mut terms = BTreeMap::new();
        for (&(da, db), v) in &self.terms {
            if da < deg_a || db < deg_b {
                return None;
            }
            let (q, r) = num_integer::div_rem(v.clone(), c.clone());
            if !r.is_zero() {
                return None;
            }
            terms.insert((da - deg_a, db - deg_b), q);
        }
        Some(BiPoly { terms })
    }

    /// The single term of a monomial, if this is one.
    pub fn as_monomial(&self) -> Option<(u32, u32, &BigInt)> {
        if self.terms.len() == 1 {
            let (&(da, db), c) = self.terms.iter().next().unwrap();
            Some((da, db, c))
        } else {
            None
        }
    }

    /// JSON list of `{"a":int,"b":int,"c":"decimal"}` in ascending `(deg_a, deg_b)`.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&(da, db), c)| serde_json::json!({"a": da, "b": db, "c": c.to_string()}))
            .collect();
        serde_json::Value::Array(items)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::OutOfRange("BiPoly JSON must be a list".into()))?;
        let mut out = BiPoly::zero();
        for item in arr {
            let da = item
                .get("a")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| Error::OutOfRange("missing exponent 'a'".into()))?;
            let db = item
                .get("b")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| Error::OutOfRange("missing exponent 'b'".into()))?;
            let c = item
                .get("c")
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::OutOfRange("missing coefficient 'c'".into()))?;
            let c: BigInt = c
                .parse()
                .map_err(|_| Error::OutOfRange(format!("bad coefficient {c:?}")))?;
            out.add_term(da as u32, db as u32, &c);
        }
        Ok(out)
    }
}

pub(crate) fn int_pow(base: &BigInt, e: u32) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn rat_pow(base: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, c: &BigInt, da: u32, db: u32) -> fmt::Result {
    let c_abs = c.abs();
    let mut wrote = false;
    if !c_abs.is_one() || (da == 0 && db == 0) {
        write!(f, "{c_abs}")?;
        wrote = true;
    }
    for (sym, e) in [("a", da), ("b", db)] {
        if e > 0 {
            if wrote {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
            wrote = true;
        }
    }
    Ok(())
}

impl fmt::Display for BiPoly {
    /// Descending `deg_a`, ascending `deg_b` within equal `deg_a` — the order
    /// the weighted counts are conventionally written in (`a^6 + 6*a^4*b^2 + ...`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        for (i, &(da, db)) in keys.iter().enumerate() {
            let c = &self.terms[&(da, db)];
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            fmt_monomial(f, c, da, db)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> BiPoly {
        BiPoly::monomial_i64(1, 1, 0)
    }

    fn b() -> BiPoly {
        BiPoly::monomial_i64(1, 0, 1)
    }

    #[test]
    fn add_cancels() {
        let p = a().add(&b());
        let q = a().sub(&b());
        assert_eq!(p.add(&q), BiPoly::monomial_i64(2, 1, 0));
    }

    #[test]
    fn difference_of_squares() {
        let p = a().add(&b());
        let q = a().sub(&b());
        let expect = BiPoly::monomial_i64(1, 2, 0).sub(&BiPoly::monomial_i64(1, 0, 2));
        assert_eq!(p.mul(&q), expect);
    }

    #[test]
    fn monomial_product() {
        let p = BiPoly::monomial_i64(1, 2, 0);
        let q = BiPoly::monomial_i64(3, 0, 2);
        assert_eq!(p.mul(&q), BiPoly::monomial_i64(3, 2, 2));
    }

    #[test]
    fn zero_is_empty() {
        let p = a().sub(&a());
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(p, BiPoly::zero());
    }

    #[test]
    fn substitutions() {
        // a*b + b^2, b -> b^3
        let p = BiPoly::monomial_i64(1, 1, 1).add(&BiPoly::monomial_i64(1, 0, 2));
        let q = p.substitute_b_pow(3);
        let expect = BiPoly::monomial_i64(1, 1, 3).add(&BiPoly::monomial_i64(1, 0, 6));
        assert_eq!(q, expect);
        // b -> -b flips odd b-degrees only
        let r = p.negate_b();
        let expect = BiPoly::monomial_i64(-1, 1, 1).add(&BiPoly::monomial_i64(1, 0, 2));
        assert_eq!(r, expect);
        // a -> 1 merges
        let s = BiPoly::monomial_i64(1, 2, 1).add(&BiPoly::monomial_i64(2, 0, 1));
        assert_eq!(s.substitute_a_one(), BiPoly::monomial_i64(3, 0, 1));
    }

    #[test]
    fn eval_matches_hand_computation() {
        // 2*a^2*b - 3 at a=3, b=2 -> 36 - 3 = 33
        let p = BiPoly::monomial_i64(2, 2, 1).add(&BiPoly::constant_i64(-3));
        assert_eq!(p.eval(&BigInt::from(3), &BigInt::from(2)), BigInt::from(33));
    }

    #[test]
    fn homogeneity() {
        let p = BiPoly::monomial_i64(1, 6, 0)
            .add(&BiPoly::monomial_i64(6, 4, 2))
            .add(&BiPoly::monomial_i64(4, 2, 4));
        assert_eq!(p.homogeneous_degree(), Some(6));
        let q = p.add(&BiPoly::one());
        assert_eq!(q.homogeneous_degree(), None);
    }

    #[test]
    fn json_round_trip_at_i64_boundary() {
        let big = BigInt::from(i64::MAX) + 1u32;
        let p = BiPoly::monomial(big.clone(), 3, 5)
            .add(&BiPoly::monomial(-&big, 0, 1))
            .add(&BiPoly::one());
        let v = p.to_json();
        assert_eq!(BiPoly::from_json(&v).unwrap(), p);
    }

    #[test]
    fn display_order() {
        let p = BiPoly::monomial_i64(1, 6, 0)
            .add(&BiPoly::monomial_i64(6, 4, 2))
            .add(&BiPoly::monomial_i64(4, 2, 4));
        assert_eq!(p.to_string(), "a^6 + 6*a^4*b^2 + 4*a^2*b^4");
        let q = BiPoly::monomial_i64(3, 2, 2).add(&BiPoly::monomial_i64(2, 0, 4));
        assert_eq!(q.to_string(), "3*a^2*b^2 + 2*b^4");
    }

    #[test]
    fn exact_monomial_division() {
        let p = BiPoly::monomial_i64(6, 4, 2).add(&BiPoly::monomial_i64(-2, 2, 4));
        let q = p.div_exact_monomial(&BigInt::from(2), 2, 2).unwrap();
        let expect = BiPoly::monomial_i64(3, 2, 0).add(&BiPoly::monomial_i64(-1, 0, 2));
        assert_eq!(q, expect);
        assert!(p.div_exact_monomial(&BigInt::from(4), 0, 0).is_none());
        assert!(p.div_exact_monomial(&BigInt::from(1), 3, 0).is_none());
    }
}
