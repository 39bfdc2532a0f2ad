//! Exact arithmetic in the ring `Z[t, 1/t]`.
//!
//! A [`LaurentPoly`] is stored as a sorted map from exponent to a nonzero
//! arbitrary-precision coefficient. Every constructor and operation drops
//! zero coefficients, so structural equality is ring equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("division is not exact in Z[t, 1/t]")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed polynomial text: {0}")]
    Parse(String),
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `t^k`.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(1, k)
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c.into());
        }
        out
    }

    fn add_term(&mut self, k: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_degree - min_degree`, or `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_degree()? - self.min_degree()?)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Units of `Z[t, 1/t]` are exactly `±t^k`. Returns `(sign, k)` when
    /// `self` is one of them.
    pub fn as_unit(&self) -> Option<(i8, i64)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some((1, *k))
        } else if (-c).is_one() {
            Some((-1, *k))
        } else {
            None
        }
    }

    /// Inverse of a unit `±t^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        let (s, k) = self.as_unit()?;
        Some(Self::monomial(s, -k))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact division: returns `q` with `self = q * divisor`, or an error if
    /// no such `q` exists in `Z[t, 1/t]`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(inv) = divisor.unit_inverse() {
            return Ok(self * &inv);
        }
        // Long division from the top degree down. Over Z[t] any exact
        // quotient has integral coefficients, so each leading division must
        // be exact.
        let d_max = divisor.max_degree().unwrap();
        let d_min = divisor.min_degree().unwrap();
        let lead = divisor.terms[&d_max].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(r_max) = rem.max_degree() {
            let r_min = rem.min_degree().unwrap();
            if r_max - r_min < d_max - d_min {
                return Err(LaurentError::InexactDivision);
            }
            let (q, r) = rem.terms[&r_max].div_rem(&lead);
            if !r.is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            let k = r_max - d_max;
            let term = Self::monomial(q.clone(), k);
            rem = &rem - &(divisor * &term);
            quot.add_term(k, q);
        }
        Ok(quot)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Terms in increasing exponent order, `c*t^k` with the `t^0` factor elided.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *k == 0 {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*t^{k}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = LaurentError;

    /// Accepts the [`Display`](fmt::Display) form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LaurentError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        // split before every sign that is not part of an exponent
        let bytes = compact.as_bytes();
        let mut cuts = vec![0];
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                cuts.push(i);
            }
        }
        cuts.push(bytes.len());
        let mut out = Self::zero();
        for w in cuts.windows(2) {
            let term = compact[w[0]..w[1]].trim_start_matches('+');
            let (c, k) = match term.split_once("*t^") {
                Some((c, k)) => (c, k.parse::<i64>().map_err(|_| bad())?),
                None => (term, 0),
            };
            let c: BigInt = c.parse().map_err(|_| bad())?;
            out.add_term(k, c);
        }
        Ok(out)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

// JSON: {"<exponent>": "<coefficient>", ...}, exponents ascending.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (k, c) in &self.terms {
            map.serialize_entry(&k.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from decimal exponent strings to decimal coefficient strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<LaurentPoly, A::Error> {
                let mut out = LaurentPoly::zero();
                while let Some((k, c)) = access.next_entry::<String, String>()? {
                    let k: i64 = k.parse().map_err(de::Error::custom)?;
                    let c: BigInt = c.parse().map_err(de::Error::custom)?;
                    out.add_term(k, c);
                }
                Ok(out)
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn addition_examples() {
        let one_minus_t = p(&[(0, 1), (1, -1)]);
        assert_eq!(&one_minus_t + &LaurentPoly::t_pow(1), LaurentPoly::one());
        assert_eq!(&LaurentPoly::zero() + &one_minus_t, one_minus_t);
        let a = p(&[(-1, 1), (1, 1)]);
        assert_eq!(&a + &LaurentPoly::monomial(-1, 1), LaurentPoly::t_pow(-1));
    }

    #[test]
    fn multiplication_examples() {
        let one_minus_t = p(&[(0, 1), (1, -1)]);
        assert_eq!(
            &LaurentPoly::monomial(-1, 1) * &LaurentPoly::monomial(-1, -1),
            LaurentPoly::one()
        );
        assert_eq!(&one_minus_t * &LaurentPoly::one(), one_minus_t);
        // (1 - t)^2 by direct convolution: 1 - 2t + t^2
        assert_eq!(&one_minus_t * &one_minus_t, p(&[(0, 1), (1, -2), (2, 1)]));
    }

    #[test]
    fn unit_detection() {
        assert_eq!(LaurentPoly::monomial(-1, 1).as_unit(), Some((-1, 1)));
        assert_eq!(LaurentPoly::one().as_unit(), Some((1, 0)));
        assert_eq!(p(&[(0, 1), (1, -1)]).as_unit(), None);
        assert_eq!(LaurentPoly::constant(2).as_unit(), None);
        assert_eq!(LaurentPoly::zero().as_unit(), None);
    }

    #[test]
    fn zero_has_no_terms() {
        let z = &p(&[(3, 5)]) - &p(&[(3, 5)]);
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[(0, 1), (1, -1)]).to_string(), "1 - 1*t^1");
        assert_eq!(LaurentPoly::monomial(-1, 1).to_string(), "-1*t^1");
        assert_eq!(p(&[(-1, 1), (2, 3)]).to_string(), "1*t^-1 + 3*t^2");
        assert_eq!(LaurentPoly::constant(-1).to_string(), "-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn parse_display_form() {
        for poly in [
            p(&[(0, 1), (1, -1)]),
            p(&[(-3, -2), (0, 7), (4, 1)]),
            LaurentPoly::monomial(-1, -1),
            LaurentPoly::zero(),
        ] {
            assert_eq!(poly.to_string().parse::<LaurentPoly>().unwrap(), poly);
        }
        assert!("t^^2".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn json_encoding() {
        let one_minus_t = p(&[(0, 1), (1, -1)]);
        let s = serde_json::to_string(&one_minus_t).unwrap();
        assert_eq!(s, r#"{"0":"1","1":"-1"}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, one_minus_t);
        let zeros: LaurentPoly = serde_json::from_str(r#"{"2":"0","-1":"4"}"#).unwrap();
        assert_eq!(zeros, LaurentPoly::monomial(4, -1));
    }

    #[test]
    fn exact_division() {
        let a = p(&[(0, 1), (1, -1)]);
        let b = p(&[(-2, 3), (0, 1), (5, -4)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(
            LaurentPoly::one().exact_div(&a),
            Err(LaurentError::InexactDivision)
        );
        assert_eq!(
            LaurentPoly::constant(3).exact_div(&LaurentPoly::constant(2)),
            Err(LaurentError::InexactDivision)
        );
        assert_eq!(
            a.exact_div(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn coefficients_do_not_overflow() {
        let x = LaurentPoly::from_terms([(0, 3i64), (1, -5)]);
        let big = x.pow(80);
        assert!(big.coeff(40).bits() > 64);
        assert_eq!(big.exact_div(&x.pow(79)).unwrap(), x);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn canonical_form_is_closed(a in arb_poly(), b in arb_poly()) {
            for r in [&a + &b, &a * &b, -&a, &a - &b] {
                prop_assert!(r.terms().all(|(_, c)| !c.is_zero()));
            }
        }

        #[test]
        fn product_span_bound(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            if let (Some(sa), Some(sb), Some(sp)) = (a.span(), b.span(), prod.span()) {
                prop_assert!(sp <= sa + sb);
            }
        }

        #[test]
        fn unit_times_inverse_is_one(s in prop::bool::ANY, k in -50i64..50) {
            let u = LaurentPoly::monomial(if s { 1 } else { -1 }, k);
            let (sign, exp) = u.as_unit().unwrap();
            prop_assert!((&u * &LaurentPoly::monomial(sign, -exp)).is_one());
        }
    }
}
