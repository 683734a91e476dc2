//! Exact integer polynomials.
//!
//! [`UniPoly`] is a dense polynomial in `q` with big-integer coefficients.
//! [`BivarPoly`] is a sparse polynomial in `q` and `t`; exponents of `q`
//! may go negative in intermediate values (Laurent in `q`), exponents of
//! `t` never do.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::json;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("exact division left a non-zero remainder")]
    NonZeroRemainder,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor must have a unit monomial as its leading coefficient in t")]
    UnsupportedDivisor,
    #[error("negative exponent q^{exponent} where a polynomial was required")]
    LaurentLeak { exponent: i64 },
}

/// Polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `q^k`; trailing zeros are never stored,
/// so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, exponent: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exponent + 1];
        coeffs[exponent] = c;
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, q0: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q0 + c)
    }

    pub fn eval_i64(&self, q0: i64) -> BigInt {
        self.eval(&BigInt::from(q0))
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` over the integers.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly, PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.leading_coeff().expect("non-zero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(PolyError::NonZeroRemainder)
            };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(PolyError::NonZeroRemainder);
            }
            let c = top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonZeroRemainder);
        }
        Ok(Self::from_coeffs(quot))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..n)
            .map(|i| {
                f(
                    self.coeffs.get(i).unwrap_or(&zero),
                    other.coeffs.get(i).unwrap_or(&zero),
                )
            })
            .collect();
        Self::from_coeffs(coeffs)
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
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
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binops {
    ($ty:ty) => {
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
    };
}

forward_owned_binops!(UniPoly);
forward_owned_binops!(BivarPoly);

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for UniPoly {
    fn product<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::one(), |acc, p| &acc * &p)
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
    monomial: &str,
) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    let mag = c.abs();
    if first {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {sign} ")?;
    }
    if monomial.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{monomial}")
    } else {
        write!(f, "{mag}{monomial}")
    }
}

fn power(var: &str, e: i64) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, first, c, &power("q", k as i64))?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<serde_json::Number> = self.coeffs.iter().map(json::number).collect();
        let mut s = serializer.serialize_struct("UniPoly", 2)?;
        s.serialize_field("var", "q")?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for UniPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            var: String,
            coeffs: Vec<serde_json::Number>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.var != "q" {
            return Err(D::Error::custom(format!("expected var \"q\", got {:?}", raw.var)));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(json::parse_bigint)
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(UniPoly::from_coeffs(coeffs))
    }
}

/// A substitution applied by [`BivarPoly::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `t -> t * q^k`
    ScaleT(i64),
    /// `q -> q^d, t -> t^d`
    Power(u32),
    /// `t -> c`
    TConst(BigInt),
}

/// Sparse polynomial in `q` and `t`, keyed by `(t exponent, q exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, i64), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    /// `c * q^eq * t^et`
    pub fn monomial(c: impl Into<BigInt>, eq: i64, et: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(et, eq, c.into());
        p
    }

    /// `p(q) * t^et`
    pub fn from_uni(p: &UniPoly, et: u32) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(et, k as i64, c.clone());
        }
        out
    }

    /// Builds from `(q exponent, t exponent, coefficient)` triples, summing repeats.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, u32, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (eq, et, c) in terms {
            out.add_term(et, eq, c);
        }
        out
    }

    fn add_term(&mut self, et: u32, eq: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((et, eq)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(et, eq));
        }
    }

    /// Terms as `(q exponent, t exponent, coefficient)`, ordered by `(t, q)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(et, eq), c)| (eq, et, c))
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(et, _)| et).max()
    }

    pub fn min_q_exponent(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, eq)| eq).min()
    }

    /// True when no `q` exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_q_exponent().is_none_or(|e| e >= 0)
    }

    pub fn ensure_polynomial(&self) -> Result<(), PolyError> {
        match self.min_q_exponent() {
            Some(e) if e < 0 => Err(PolyError::LaurentLeak { exponent: e }),
            _ => Ok(()),
        }
    }

    pub fn substitute(&self, sub: &Substitution) -> BivarPoly {
        let mut out = BivarPoly::zero();
        match sub {
            Substitution::ScaleT(k) => {
                for (&(et, eq), c) in &self.terms {
                    out.add_term(et, eq + k * et as i64, c.clone());
                }
            }
            Substitution::Power(d) => {
                for (&(et, eq), c) in &self.terms {
                    out.add_term(et * d, eq * *d as i64, c.clone());
                }
            }
            Substitution::TConst(value) => {
                for (&(et, eq), c) in &self.terms {
                    out.add_term(0, eq, c * num_traits::pow(value.clone(), et as usize));
                }
            }
        }
        out
    }

    /// The coefficient of `t^j`, as a polynomial in `q`.
    pub fn coefficient_in_t(&self, j: u32) -> Result<UniPoly, PolyError> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (&(_, eq), c) in self.terms.range((j, i64::MIN)..=(j, i64::MAX)) {
            if eq < 0 {
                return Err(PolyError::LaurentLeak { exponent: eq });
            }
            let k = eq as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    /// Coefficients of `t^0 ..= t^n`.
    pub fn t_coefficients(&self, n: u32) -> Result<Vec<UniPoly>, PolyError> {
        (0..=n).map(|j| self.coefficient_in_t(j)).collect()
    }

    /// Evaluate at integer `q` and `t`. Requires a true polynomial.
    pub fn eval(&self, q0: &BigInt, t0: &BigInt) -> Result<BigInt, PolyError> {
        self.ensure_polynomial()?;
        Ok(self
            .terms
            .iter()
            .map(|(&(et, eq), c)| {
                c * num_traits::pow(q0.clone(), eq as usize) * num_traits::pow(t0.clone(), et as usize)
            })
            .sum())
    }

    fn t_slice(&self, et: u32) -> Vec<(i64, BigInt)> {
        self.terms
            .range((et, i64::MIN)..=(et, i64::MAX))
            .map(|(&(_, eq), c)| (eq, c.clone()))
            .collect()
    }

    /// Exact long division in `t`.
    ///
    /// The leading `t`-coefficient of `divisor` must be `±q^k`; this covers
    /// `t - 1` and every other divisor the crate needs.
    pub fn divide_exact(&self, divisor: &BivarPoly) -> Result<BivarPoly, PolyError> {
        let dd = divisor.t_degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.t_slice(dd);
        let (lead_q, unit) = match lead.as_slice() {
            [(eq, c)] if c.abs().is_one() => (*eq, c.clone()),
            _ => return Err(PolyError::UnsupportedDivisor),
        };
        let mut rem = self.clone();
        let mut quot = BivarPoly::zero();
        while let Some(top) = rem.t_degree() {
            if top < dd {
                break;
            }
            let mut step = BivarPoly::zero();
            for (eq, c) in rem.t_slice(top) {
                step.add_term(top - dd, eq - lead_q, c * &unit);
            }
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(PolyError::NonZeroRemainder)
        }
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(et, eq), c) in &rhs.terms {
            out.add_term(et, eq, c.clone());
        }
        out
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(et, eq), c) in &rhs.terms {
            out.add_term(et, eq, -c);
        }
        out
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(et1, eq1), c1) in &self.terms {
            for (&(et2, eq2), c2) in &rhs.terms {
                out.add_term(et1 + et2, eq1 + eq2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl std::iter::Product for BivarPoly {
    fn product<I: Iterator<Item = BivarPoly>>(iter: I) -> BivarPoly {
        iter.fold(BivarPoly::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(et, eq), c) in &self.terms {
            let q = power("q", eq);
            let t = power("t", et as i64);
            let mono = match (q.is_empty(), t.is_empty()) {
                (false, false) => format!("{q}*{t}"),
                _ => format!("{q}{t}"),
            };
            write_term(f, first, c, &mono)?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for BivarPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<(i64, u32, serde_json::Number)> = self
            .terms
            .iter()
            .map(|(&(et, eq), c)| (eq, et, json::number(c)))
            .collect();
        let mut s = serializer.serialize_struct("BivarPoly", 2)?;
        s.serialize_field("vars", &["q", "t"])?;
        s.serialize_field("terms", &terms)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for BivarPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vars: Vec<String>,
            terms: Vec<(i64, u32, serde_json::Number)>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.vars != ["q", "t"] {
            return Err(D::Error::custom("expected vars [\"q\",\"t\"]"));
        }
        let mut out = BivarPoly::zero();
        for (eq, et, c) in &raw.terms {
            out.add_term(*et, *eq, json::parse_bigint(c).map_err(D::Error::custom)?);
        }
        Ok(out)
    }
}
