//! Exact Laurent polynomials and truncated character series.
//!
//! Polynomials are kept in the half-degree variable `q` with `q^2 = t`, so
//! the exponent of `q` is the cohomological degree. Series are formal sums
//! `sum c_alpha(q) e^alpha` over `alpha` in `N[I]`, truncated at total
//! degree `|alpha| <= bound`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::CorootVector;

/// Sparse Laurent polynomial in one variable with big-integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `t^exp = q^{2 exp}`.
    pub fn t_power(exp: i64) -> Self {
        Self::monomial(1, 2 * exp)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Builds a polynomial in `t` from ascending coefficients `[c_0, c_1, ...]`.
    pub fn from_t_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (2 * k as i64, c)))
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Substitutes `q -> q^{-1}` (equivalently `t -> t^{-1}`).
    pub fn negate_exponents(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut p = Self::zero();
        for (e, c) in &self.terms {
            p.add_term(*e, c * k);
        }
        p
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Evaluates at an integer point. Negative exponents are rejected.
    pub fn eval_polynomial(&self, x: &BigInt) -> Option<BigInt> {
        if self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            acc += c * num_traits::pow(x.clone(), *e as usize);
        }
        Some(acc)
    }

    /// Invariant under `q -> q^{-1}`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.negate_exponents()
    }

    /// `Some(0)` or `Some(1)` if every exponent has that parity; `None` if
    /// the parities are mixed or the polynomial is zero.
    pub fn parity(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|e| e.rem_euclid(2));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Prints in `t = q^2`; returns `None` when an odd power of `q` occurs.
    pub fn try_to_t_string(&self) -> Option<String> {
        if self.terms.keys().any(|e| e.rem_euclid(2) != 0) {
            return None;
        }
        Some(render(self.terms.iter().map(|(e, c)| (e / 2, c)), "t"))
    }

    /// Prints in `t`, falling back to `q` if odd powers are present.
    pub fn to_t_string(&self) -> String {
        self.try_to_t_string().unwrap_or_else(|| self.to_q_string())
    }

    pub fn to_q_string(&self) -> String {
        render(self.terms.iter().map(|(e, c)| (*e, c)), "q")
    }
}

fn render<'a>(terms: impl Iterator<Item = (i64, &'a BigInt)>, var: &str) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let unit = mag.is_one();
        if !unit || e == 0 {
            let _ = write!(out, "{mag}");
        }
        match e {
            0 => {}
            1 => out.push_str(var),
            _ => {
                let _ = write!(out, "{var}^{e}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_q_string())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
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

// Wire format: [[exponent, "coefficient"], ...] in ascending exponent order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<(i64, String)> = Vec::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in raw {
            let c: BigInt = c.parse().map_err(de::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

/// Truncated formal character `sum_{|alpha| <= bound} c_alpha e^alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeries {
    rank: usize,
    bound: u32,
    coeffs: BTreeMap<CorootVector, LaurentPoly>,
}

impl CharSeries {
    pub fn zero(rank: usize, bound: u32) -> Self {
        Self {
            rank,
            bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize, bound: u32) -> Self {
        Self::monomial(CorootVector::zero(rank), LaurentPoly::one(), bound)
    }

    /// `c * e^alpha`, or zero if `|alpha|` is above the bound.
    pub fn monomial(alpha: CorootVector, c: LaurentPoly, bound: u32) -> Self {
        let mut s = Self::zero(alpha.len(), bound);
        s.add_coeff(alpha, &c);
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c e^alpha`; terms above the bound are discarded.
    pub fn add_coeff(&mut self, alpha: CorootVector, c: &LaurentPoly) {
        assert_eq!(alpha.len(), self.rank, "series rank mismatch");
        if alpha.norm() > self.bound || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(alpha.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&alpha);
        }
    }

    pub fn coefficient(&self, alpha: &CorootVector) -> LaurentPoly {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in lexicographic order of `alpha`.
    pub fn iter(&self) -> impl Iterator<Item = (&CorootVector, &LaurentPoly)> + '_ {
        self.coeffs.iter()
    }

    /// Drops everything above a smaller bound.
    pub fn restrict(&self, bound: u32) -> Self {
        let bound = bound.min(self.bound);
        Self {
            rank: self.rank,
            bound,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(a, _)| a.norm() <= bound)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self::zero(self.rank, self.bound);
        for (a, c) in &self.coeffs {
            out.add_coeff(a.clone(), &f(c));
        }
        out
    }

    /// Specializes `q = 1`, leaving constant coefficients.
    pub fn at_q_one(&self) -> Self {
        self.map_coeffs(|c| LaurentPoly::constant(c.eval_at_one()))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.bound != other.bound {
            return Err(Error::DegreeBoundMismatch(self.bound, other.bound));
        }
        if self.rank != other.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, c) in &other.coeffs {
            out.add_coeff(a.clone(), c);
        }
        Ok(out)
    }

    /// Convolution over the lattice, truncated at the common bound.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.rank, self.bound);
        for (a, ca) in &self.coeffs {
            let room = self.bound - a.norm();
            for (b, cb) in other.coeffs.iter().filter(|(b, _)| b.norm() <= room) {
                out.add_coeff(a + b, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// Expansion of `(1 - c e^theta)^{-1}` up to total degree `bound`.
    pub fn geometric_inverse(c: &LaurentPoly, theta: &CorootVector, bound: u32) -> Result<Self> {
        if theta.is_zero() {
            return Err(Error::NonInvertibleDirection);
        }
        if !c.is_monomial() {
            return Err(Error::NotAMonomial(c.to_q_string()));
        }
        let step = theta.norm();
        let mut out = Self::zero(theta.len(), bound);
        let mut power = LaurentPoly::one();
        let mut k = 0;
        while k * step <= bound {
            out.add_coeff(theta.scaled(k), &power);
            power = &power * c;
            k += 1;
        }
        Ok(out)
    }
}

impl Serialize for CharSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for entry in &self.coeffs {
            seq.serialize_element(&entry)?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(c: &[u32]) -> CorootVector {
        CorootVector::new(c.to_vec())
    }

    fn t(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_t_coeffs(c)
    }

    #[test]
    fn poly_examples() {
        assert_eq!(&t(&[1, 1]) * &t(&[1, -1]), t(&[1, 0, -1]));
        let p = LaurentPoly::from_terms([(3, 1), (1, 1)]);
        assert_eq!(
            p.negate_exponents(),
            LaurentPoly::from_terms([(-3, 1), (-1, 1)])
        );
        assert_eq!(t(&[1, 2, 1]).eval_at_one(), BigInt::from(4));
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = &t(&[1, 1]) - &t(&[1, 1]);
        assert!(p.is_zero());
        assert_eq!(p.terms().count(), 0);
        assert_eq!(p.to_q_string(), "0");
    }

    #[test]
    fn rendering() {
        assert_eq!(t(&[1, 1, 1, 1]).to_t_string(), "1+t+t^2+t^3");
        assert_eq!(t(&[1, 0, -1]).to_t_string(), "1-t^2");
        let shifted = LaurentPoly::from_terms([(-5, 1), (-3, 2), (-1, 3), (1, 3), (3, 2), (5, 1)]);
        assert_eq!(shifted.to_q_string(), "q^-5+2q^-3+3q^-1+3q+2q^3+q^5");
        assert_eq!(shifted.try_to_t_string(), None);
        assert_eq!(LaurentPoly::monomial(-1, 0).to_q_string(), "-1");
    }

    #[test]
    fn parity_and_palindrome() {
        let p = LaurentPoly::from_terms([(-1, 1), (1, 1)]);
        assert!(p.is_palindromic());
        assert_eq!(p.parity(), Some(1));
        assert_eq!(t(&[1, 1]).parity(), Some(0));
        assert_eq!(LaurentPoly::from_terms([(0, 1), (1, 1)]).parity(), None);
        assert!(!t(&[1, 2]).is_palindromic());
    }

    #[test]
    fn json_wire_format() {
        let p = LaurentPoly::from_terms([(2, 3), (-1, -7)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"[[-1,"-7"],[2,"3"]]"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let big = LaurentPoly::constant(BigInt::from(10).pow(30));
        assert_eq!(
            serde_json::to_string(&big).unwrap(),
            r#"[[0,"1000000000000000000000000000000"]]"#
        );
        let series = CharSeries::monomial(v(&[1, 0]), t(&[0, 1]), 3);
        assert_eq!(
            serde_json::to_string(&series).unwrap(),
            r#"[[[1,0],[[2,"1"]]]]"#
        );
    }

    #[test]
    fn series_mul_examples() {
        let a = CharSeries::monomial(v(&[1, 0]), LaurentPoly::one(), 4);
        let b = CharSeries::monomial(v(&[1, 1]), LaurentPoly::one(), 4);
        let ab = a.try_mul(&b).unwrap();
        assert_eq!(ab, CharSeries::monomial(v(&[2, 1]), LaurentPoly::one(), 4));
        assert!(a.try_mul(&CharSeries::zero(2, 4)).unwrap().is_zero());

        let theta = v(&[1, 1]);
        let one = CharSeries::one(2, 4);
        let te = CharSeries::monomial(theta.clone(), t(&[0, 1]), 4);
        let plus = one.try_add(&te).unwrap();
        let minus = one.try_add(&te.map_coeffs(|c| -c)).unwrap();
        let expected = one
            .try_add(&CharSeries::monomial(theta.scaled(2), t(&[0, 0, -1]), 4))
            .unwrap();
        assert_eq!(plus.try_mul(&minus).unwrap(), expected);
    }

    #[test]
    fn series_mul_checks_bounds() {
        let a = CharSeries::one(1, 3);
        let b = CharSeries::one(1, 4);
        assert_eq!(a.try_mul(&b), Err(Error::DegreeBoundMismatch(3, 4)));
    }

    #[test]
    fn geometric_inverse_examples() {
        let theta = v(&[1, 1]);
        let tq = t(&[0, 1]);
        let inv_t = LaurentPoly::t_power(-1);
        let g = CharSeries::geometric_inverse(&tq, &theta, 4).unwrap();
        let mut expected = CharSeries::one(2, 4);
        expected.add_coeff(theta.clone(), &tq);
        expected.add_coeff(theta.scaled(2), &t(&[0, 0, 1]));
        assert_eq!(g, expected);

        let h = CharSeries::geometric_inverse(&inv_t, &theta, 2).unwrap();
        let mut expected = CharSeries::one(2, 2);
        expected.add_coeff(theta.clone(), &inv_t);
        assert_eq!(h, expected);

        let prod = g.restrict(2).try_mul(&h).unwrap();
        let mut expected = CharSeries::one(2, 2);
        expected.add_coeff(theta.clone(), &(&tq + &inv_t));
        assert_eq!(prod, expected);

        assert_eq!(
            CharSeries::geometric_inverse(&tq, &v(&[0, 0]), 4),
            Err(Error::NonInvertibleDirection)
        );
        assert!(matches!(
            CharSeries::geometric_inverse(&t(&[1, 1]), &theta, 4),
            Err(Error::NotAMonomial(_))
        ));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-4i64..=4, -5i64..=5), 0..5).prop_map(LaurentPoly::from_terms)
    }

    fn arb_series(bound: u32) -> impl Strategy<Value = CharSeries> {
        prop::collection::vec(((0u32..=3, 0u32..=3), arb_poly()), 0..5).prop_map(move |terms| {
            let mut s = CharSeries::zero(2, bound);
            for ((a, b), c) in terms {
                s.add_coeff(v(&[a, b]), &c);
            }
            s
        })
    }

    proptest! {
        #[test]
        fn poly_ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!((&a * &b).negate_exponents(), &a.negate_exponents() * &b.negate_exponents());
            prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }

        #[test]
        fn series_ring_axioms(a in arb_series(5), b in arb_series(5), c in arb_series(5)) {
            let ab_c = a.try_mul(&b).unwrap().try_mul(&c).unwrap();
            let a_bc = a.try_mul(&b.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
            let lhs = a.try_mul(&b.try_add(&c).unwrap()).unwrap();
            let rhs = a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn truncation_coherence(a in arb_series(6), b in arb_series(6), small in 0u32..6) {
            let full = a.try_mul(&b).unwrap().restrict(small);
            let direct = a.restrict(small).try_mul(&b.restrict(small)).unwrap();
            prop_assert_eq!(full, direct);
        }

        #[test]
        fn geometric_inverse_is_inverse(e in -3i64..=3, x in 0u32..3, y in 0u32..3, bound in 0u32..8) {
            prop_assume!(x + y > 0);
            let theta = v(&[x, y]);
            let c = LaurentPoly::monomial(1, e);
            let inv = CharSeries::geometric_inverse(&c, &theta, bound).unwrap();
            let mut factor = CharSeries::one(2, bound);
            factor.add_coeff(theta, &-&c);
            prop_assert_eq!(inv.try_mul(&factor).unwrap(), CharSeries::one(2, bound));
        }
    }
}
