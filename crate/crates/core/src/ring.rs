//! Exact polynomial arithmetic for virtual classes.
//!
//! [`LPoly`] is an element of ℤ[𝕃], the part of the Grothendieck ring of
//! varieties spanned by powers of the Lefschetz class. [`TPoly`] is a
//! Poincaré polynomial in `t` (so `𝕃 ↦ t²`) with nonnegative coefficients.
//! Both sit on top of [`Poly`], a sparse signed polynomial with
//! arbitrary-precision coefficients.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse univariate polynomial over ℤ. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<u32, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::monomial(0, BigInt::one())
    }

    pub fn monomial(degree: u32, coefficient: impl Into<BigInt>) -> Self {
        let mut p = Poly::zero();
        p.add_term(degree, coefficient.into());
        p
    }

    /// Dense constructor: `coeffs[j]` is the coefficient of `x^j`.
    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        let mut p = Poly::zero();
        for (j, c) in coeffs.iter().enumerate() {
            p.add_term(j as u32, c.clone().into());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        let mut p = Poly::zero();
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    fn add_term(&mut self, degree: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(degree).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, degree: u32) -> BigInt {
        self.terms.get(&degree).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    /// Dense coefficient list from degree 0 up to the degree.
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|j| self.coeff(j)).collect(),
        }
    }

    /// Multiply by `x^by`.
    pub fn shift(&self, by: u32) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(d, c)| (d + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, by: &BigInt) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(d, c)| (*d, c * by)))
    }

    /// Value at `x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut prev = self.degree().unwrap_or(0);
        for (d, c) in self.terms.iter().rev() {
            for _ in *d..prev {
                acc *= x;
            }
            acc += c;
            prev = *d;
        }
        for _ in 0..prev {
            acc *= x;
        }
        acc
    }

    pub fn has_negative_coefficient(&self) -> Option<(u32, BigInt)> {
        self.terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(d, c)| (*d, c.clone()))
    }

    /// Exact quotient `self / divisor` in ℤ[x].
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let top = divisor
            .degree()
            .ok_or_else(|| Error::InvalidParameter("division by the zero polynomial".into()))?;
        let lead = divisor.coeff(top);
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(d) = rem.degree() {
            if d < top {
                break;
            }
            let (q, r) = rem.coeff(d).div_rem(&lead);
            if !r.is_zero() {
                break;
            }
            let step = Poly::monomial(d - top, q);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonExactDivision {
                remainder: rem.to_string(),
            })
        }
    }

    /// `coeff(j) == coeff(2·center − j)` for every `j`, with nothing above `2·center`.
    pub fn is_palindromic_about(&self, center: u32) -> bool {
        let top = 2 * center;
        if self.degree().is_some_and(|d| d > top) {
            return false;
        }
        self.terms.iter().all(|(d, c)| self.coeff(top - d) == *c)
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let unit = mag.is_one();
            match d {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "{var}")?,
                1 => write!(f, "{mag}{var}")?,
                _ if unit => write!(f, "{var}^{d}")?,
                _ => write!(f, "{mag}{var}^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, "x")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

macro_rules! forward_binops {
    ($ty:ident) => {
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
    };
}

forward_binops!(Poly);

/// A class in ℤ[𝕃] ⊂ K₀(Var).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LPoly(Poly);

impl LPoly {
    pub fn zero() -> Self {
        LPoly(Poly::zero())
    }

    pub fn one() -> Self {
        LPoly(Poly::one())
    }

    /// The Lefschetz class itself.
    pub fn lefschetz() -> Self {
        LPoly::lefschetz_pow(1)
    }

    /// `𝕃^j`.
    pub fn lefschetz_pow(j: u32) -> Self {
        LPoly(Poly::monomial(j, 1))
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LPoly(Poly::monomial(0, c))
    }

    pub fn from_coeffs<T: Into<BigInt> + Clone>(coeffs: &[T]) -> Self {
        LPoly(Poly::from_coeffs(coeffs))
    }

    pub fn from_poly(p: Poly) -> Self {
        LPoly(p)
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    pub fn coeff(&self, j: u32) -> BigInt {
        self.0.coeff(j)
    }

    pub fn to_dense(&self) -> Vec<BigInt> {
        self.0.to_dense()
    }

    /// Value at 𝕃 = 1: the Euler characteristic of a cellular variety with this class.
    pub fn eval_at_one(&self) -> BigInt {
        self.0.eval_one()
    }

    pub fn shift(&self, by: u32) -> LPoly {
        LPoly(self.0.shift(by))
    }

    pub fn div_exact(&self, divisor: &LPoly) -> Result<LPoly> {
        self.0.div_exact(&divisor.0).map(LPoly)
    }

    /// Poincaré realization `𝕃 ↦ t²`.
    pub fn to_poincare(&self) -> Result<TPoly> {
        if let Some((degree, c)) = self.0.has_negative_coefficient() {
            return Err(Error::NegativeCoefficient {
                degree,
                coefficient: c.to_string(),
            });
        }
        Ok(TPoly(Poly::from_terms(
            self.0.terms().map(|(d, c)| (2 * d, c.clone())),
        )))
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, "L")
    }
}

impl Add for &LPoly {
    type Output = LPoly;
    fn add(self, rhs: &LPoly) -> LPoly {
        LPoly(&self.0 + &rhs.0)
    }
}

impl Sub for &LPoly {
    type Output = LPoly;
    fn sub(self, rhs: &LPoly) -> LPoly {
        LPoly(&self.0 - &rhs.0)
    }
}

impl Mul for &LPoly {
    type Output = LPoly;
    fn mul(self, rhs: &LPoly) -> LPoly {
        LPoly(&self.0 * &rhs.0)
    }
}

impl Neg for &LPoly {
    type Output = LPoly;
    fn neg(self) -> LPoly {
        LPoly(-&self.0)
    }
}

forward_binops!(LPoly);

pub fn lpoly_mul(a: &LPoly, b: &LPoly) -> LPoly {
    a * b
}

pub fn lpoly_div_exact(a: &LPoly, b: &LPoly) -> Result<LPoly> {
    a.div_exact(b)
}

/// `[ℙ^n] = 1 + 𝕃 + … + 𝕃^n`. `projective_class(-1)` is the empty space and is zero.
pub fn projective_class(n: i64) -> LPoly {
    if n < 0 {
        return LPoly::zero();
    }
    LPoly(Poly::from_terms((0..=n as u32).map(|j| (j, BigInt::one()))))
}

pub fn to_poincare(a: &LPoly) -> Result<TPoly> {
    a.to_poincare()
}

/// A Poincaré polynomial: coefficient of `t^j` is the j-th Betti number.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TPoly(Poly);

impl TPoly {
    pub fn zero() -> Self {
        TPoly(Poly::zero())
    }

    pub fn one() -> Self {
        TPoly(Poly::one())
    }

    /// Build from Betti numbers `b_0, b_1, …`.
    pub fn from_betti<T: Into<BigInt> + Clone>(betti: &[T]) -> Result<Self> {
        TPoly::try_from_poly(Poly::from_coeffs(betti))
    }

    /// Checked conversion of a signed polynomial.
    pub fn try_from_poly(p: Poly) -> Result<Self> {
        if let Some((degree, c)) = p.has_negative_coefficient() {
            return Err(Error::NegativeCoefficient {
                degree,
                coefficient: c.to_string(),
            });
        }
        Ok(TPoly(p))
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    pub fn betti(&self, j: u32) -> BigInt {
        self.0.coeff(j)
    }

    pub fn betti_numbers(&self) -> Vec<BigInt> {
        self.0.to_dense()
    }

    /// Multiply by `t^by`.
    pub fn shift(&self, by: u32) -> TPoly {
        TPoly(self.0.shift(by))
    }

    /// Alternating sum of Betti numbers.
    pub fn euler_characteristic(&self) -> BigInt {
        self.0.eval(&BigInt::from(-1))
    }

    /// Poincaré duality for complex dimension `d`.
    pub fn is_palindromic(&self, d: u32) -> bool {
        self.0.is_palindromic_about(d)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(f, "t")
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        TPoly(&self.0 + &rhs.0)
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        TPoly(&self.0 * &rhs.0)
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

pub fn is_palindromic(p: &TPoly, d: u32) -> bool {
    p.is_palindromic(d)
}

impl Serialize for TPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::json_int::vec::serialize(&self.betti_numbers(), s)
    }
}

impl<'de> Deserialize<'de> for TPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let betti = crate::json_int::vec::deserialize(d)?;
        TPoly::from_betti(&betti).map_err(serde::de::Error::custom)
    }
}

impl Serialize for LPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::json_int::vec::serialize(&self.to_dense(), s)
    }
}

impl<'de> Deserialize<'de> for LPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(LPoly::from_coeffs(&crate::json_int::vec::deserialize(d)?))
    }
}
