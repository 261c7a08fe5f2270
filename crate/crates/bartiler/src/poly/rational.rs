use std::fmt;

use crate::error::{Error, Result};
use crate::poly::XPoly;

/// A rational generating function `num/den` with `den(0) = 1`, kept in the
/// exact product form it was constructed in — never reduced to lowest terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalGF {
    num: XPoly,
    den: XPoly,
}

impl RationalGF {
    pub fn new(num: XPoly, den: XPoly) -> Result<Self> {
        if !den.coeff(0).is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        Ok(RationalGF { num, den })
    }

    pub fn num(&self) -> &XPoly {
        &self.num
    }

    pub fn den(&self) -> &XPoly {
        &self.den
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": self.num.to_json(),
            "den": self.den.to_json(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let num = XPoly::from_json(
            v.get("num")
                .ok_or_else(|| Error::OutOfRange("missing field 'num'".into()))?,
        )?;
        let den = XPoly::from_json(
            v.get("den")
                .ok_or_else(|| Error::OutOfRange("missing field 'den'".into()))?,
        )?;
        Self::new(num, den)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BiPoly;

    #[test]
    fn rejects_non_unit_den() {
        let den = XPoly::from_coeffs(vec![BiPoly::constant_i64(2)]);
        assert_eq!(
            RationalGF::new(XPoly::one(), den).unwrap_err(),
            Error::NonUnitConstantTerm
        );
    }

    #[test]
    fn json_round_trip() {
        let num = XPoly::from_coeffs(vec![BiPoly::one(), BiPoly::monomial_i64(-1, 0, 4)]);
        let den = XPoly::from_coeffs(vec![BiPoly::one(), BiPoly::monomial_i64(-1, 2, 0)]);
        let r = RationalGF::new(num, den).unwrap();
        assert_eq!(RationalGF::from_json(&r.to_json()).unwrap(), r);
    }
}
