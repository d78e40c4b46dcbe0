//! Exact integer Laurent polynomials in one variable `v`.
//!
//! A polynomial is stored densely as a coefficient vector together with the
//! exponent of its first entry. The representation is kept canonical: the
//! first and last coefficients are nonzero, and the zero polynomial is the
//! empty vector with offset 0. Structural equality is therefore polynomial
//! equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Degree of a Laurent polynomial; the zero polynomial has degree `-∞`.
///
/// `NegInfinity` orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i32),
}

impl Degree {
    pub fn finite(self) -> Option<i32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for Degree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Degree::NegInfinity => serializer.serialize_str("-inf"),
            Degree::Finite(d) => serializer.serialize_i32(*d),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseLaurentError {
    #[error("empty polynomial string")]
    Empty,
    #[error("malformed term `{0}`")]
    BadTerm(String),
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The monomial `c·v^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        Self::from_parts(k, vec![c.into()])
    }

    /// `v + v⁻¹`, the eigenvalue of a simple KL element on itself.
    pub fn v_plus_v_inv() -> Self {
        Self::from_parts(-1, vec![BigInt::one(), BigInt::zero(), BigInt::one()])
    }

    /// Builds a polynomial whose coefficient of `v^(offset + i)` is `coeffs[i]`.
    pub fn from_parts(offset: i32, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i32, BigInt)> = terms.into_iter().map(|(k, c)| (k, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - lo) as usize] += c;
        }
        Self::from_parts(lo, coeffs)
    }

    fn normalize(&mut self) {
        let trailing = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.truncate(self.coeffs.len() - trailing);
        let leading = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading > 0 {
            self.coeffs.drain(..leading);
            self.offset += leading as i32;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.offset == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Degree {
        if self.is_zero() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.offset + self.coeffs.len() as i32 - 1)
        }
    }

    /// Smallest exponent with a nonzero coefficient (`None` for zero).
    pub fn low_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.offset)
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        let i = k as i64 - self.offset as i64;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Degree together with the coefficient of `v^k`.
    pub fn inspect(&self, k: i32) -> (Degree, BigInt) {
        (self.degree(), self.coeff(k))
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.offset + i as i32, c))
    }

    /// The bar involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let top = self.offset + self.coeffs.len() as i32 - 1;
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        LaurentPoly { offset: -top, coeffs }
    }

    pub fn is_bar_symmetric(&self) -> bool {
        *self == self.bar()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { offset: self.offset + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { offset: self.offset, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Adds `c·v^shift·other` into `self`.
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &BigInt, shift: i32) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let other_lo = other.offset + shift;
        let other_hi = other_lo + other.coeffs.len() as i32 - 1;
        if self.is_zero() {
            self.offset = other_lo;
            self.coeffs = other.coeffs.iter().map(|x| x * c).collect();
            return;
        }
        let hi = other_hi.max(self.offset + self.coeffs.len() as i32 - 1);
        if other_lo < self.offset {
            let pad = (self.offset - other_lo) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
            self.offset = other_lo;
        }
        let len = (hi - self.offset + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let base = (other_lo - self.offset) as usize;
        for (i, x) in other.coeffs.iter().enumerate() {
            self.coeffs[base + i] += x * c;
        }
        self.normalize();
    }

    /// Coefficient of `v^k` as a machine integer, when it fits.
    pub fn coeff_i64(&self, k: i32) -> Option<i64> {
        self.coeff(k).to_i64()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Renders terms by descending exponent, e.g. `v^3+2v+2v^-1+v^-3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let terms: Vec<_> = self.terms().collect();
        for (k, c) in terms.into_iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if k == 1 {
                f.write_str("v")?;
            } else {
                write!(f, "v^{k}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ParseLaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ParseLaurentError::Empty);
        }
        // split into signed terms; a '-' right after '^' belongs to the exponent
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);

        let mut parsed = Vec::with_capacity(terms.len());
        for term in terms {
            let bad = || ParseLaurentError::BadTerm(term.to_string());
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff, exp) = match body.find('v') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 { BigInt::one() } else { body[..pos].parse::<BigInt>().map_err(|_| bad())? };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        let e = rest.strip_prefix('^').ok_or_else(bad)?;
                        let e = e.trim_start_matches('{').trim_end_matches('}');
                        e.parse::<i32>().map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            parsed.push((exp, if neg { -coeff } else { coeff }));
        }
        Ok(LaurentPoly::from_terms(parsed))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &BigInt::one(), 0);
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
        self.add_scaled(rhs, &BigInt::one(), 0);
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-BigInt::one(), 0);
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, &-BigInt::one(), 0);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { offset: self.offset, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_parts(self.offset + rhs.offset, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels_and_restores_canonical_form() {
        assert_eq!(p("v+v^-1") + p("-v^-1"), p("v"));
        assert_eq!(LaurentPoly::zero() + p("v^2-3"), p("v^2-3"));
        assert_eq!(p("v^2") + p("v^2"), p("2v^2"));
        let z = p("v") - p("v");
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("v+v^-1") * p("v+v^-1"), p("v^2+2+v^-2"));
        assert!((p("v^3-1") * LaurentPoly::zero()).is_zero());
        assert_eq!(p("v") * p("v^-1"), LaurentPoly::one());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(p("v").bar(), p("v^-1"));
        assert_eq!(p("v+v^-1").bar(), p("v+v^-1"));
        let q = p("3v^4-v+7v^-2");
        assert_eq!(q.bar().bar(), q);
    }

    #[test]
    fn inspect_examples() {
        assert_eq!(p("v^3+2v").inspect(1), (Degree::Finite(3), BigInt::from(2)));
        assert_eq!(LaurentPoly::zero().inspect(0), (Degree::NegInfinity, BigInt::zero()));
        assert_eq!(p("v^-1").inspect(-1), (Degree::Finite(-1), BigInt::one()));
        assert!(Degree::NegInfinity < Degree::Finite(-100));
    }

    #[test]
    fn display_format() {
        assert_eq!(p("v^3+2v+2v^-1+v^-3").to_string(), "v^3+2v+2v^-1+v^-3");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-v+1").to_string(), "-v+1");
        assert_eq!(p("v^-1-v").to_string(), "-v+v^-1");
        assert_eq!(p("-2").to_string(), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("v^".parse::<LaurentPoly>().is_err());
        assert!("2x".parse::<LaurentPoly>().is_err());
        assert!("v+".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn large_coefficients_do_not_overflow() {
        let big = LaurentPoly::monomial(BigInt::from(i64::MAX), 0);
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(sq.coeff_i64(0), None);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-4i32..4, prop::collection::vec(-5i64..6, 0..6))
            .prop_map(|(off, cs)| LaurentPoly::from_parts(off, cs.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn bar_is_a_ring_involution(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
            prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
            prop_assert_eq!(a.bar().bar(), a.clone());
        }

        #[test]
        fn degree_is_additive(a in arb_poly(), b in arb_poly()) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Degree::Finite(x), Degree::Finite(y)) => prop_assert_eq!(prod.degree(), Degree::Finite(x + y)),
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn text_format_round_trips(a in arb_poly()) {
            let back: LaurentPoly = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
