//! Sparse multivariate Laurent polynomials over the integers.
//!
//! A polynomial lives in a fixed ambient ring `Z[x1^±1, ..., xn^±1]`. Terms are
//! kept in a `BTreeMap` keyed by exponent vector, so iteration order is the
//! lexicographic order on exponents and printing is canonical.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponents of a monomial, one slot per ambient variable.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    /// The exponent vector of `x_{index+1}^power`.
    pub fn unit(nvars: usize, index: usize, power: i32) -> Self {
        let mut v = vec![0; nvars];
        v[index] = power;
        ExponentVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i32 {
        self.0[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i32>> for ExponentVector {
    fn from(v: Vec<i32>) -> Self {
        ExponentVector(v)
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// An element of `Z[x1^±1, ..., xn^±1]`.
///
/// Invariants: no stored coefficient is zero and every key has length
/// `nvars`. The zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

/// Numerator and denominator exponents of a Laurent polynomial.
///
/// `numerator * x^(-denominator)` is the source polynomial, and for every
/// variable some numerator term has exponent zero in that slot. Initial
/// variables `x_i` split with denominator entry `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialFactorization {
    pub numerator: LaurentPolynomial,
    pub denominator: ExponentVector,
}

impl MonomialFactorization {
    pub fn recombine(&self) -> LaurentPolynomial {
        self.numerator.mul_monomial(&self.denominator.neg())
    }
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, ExponentVector::zero(nvars), c)
    }

    /// The variable `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(nvars, ExponentVector::unit(nvars, index, 1), 1)
    }

    pub fn monomial(nvars: usize, exps: ExponentVector, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length must equal nvars");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPolynomial { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length must equal nvars");
            p.add_term(ExponentVector(e), c.into());
        }
        p
    }

    fn add_term(&mut self, e: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// True when the polynomial is a single term `c * x^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum exponent over all terms; `None` for zero.
    pub fn min_exponents(&self) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.0.clone();
        let mins = it.fold(first, |mut acc, e| {
            for (a, b) in acc.iter_mut().zip(&e.0) {
                *a = (*a).min(*b);
            }
            acc
        });
        Some(ExponentVector(mins))
    }

    /// True when every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|&x| x >= 0))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        if other.is_monomial() {
            let (e, c) = other.terms.iter().next().unwrap();
            return Ok(self.mul_term(e, c));
        }
        if self.is_monomial() {
            let (e, c) = self.terms.iter().next().unwrap();
            return Ok(other.mul_term(e, c));
        }
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn mul_term(&self, e: &ExponentVector, c: &BigInt) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e1, c1)| (e1.add(e), c1 * c))
            .collect();
        LaurentPolynomial {
            nvars: self.nvars,
            terms,
        }
    }

    /// Multiplies by the monomial `x^e`.
    pub fn mul_monomial(&self, e: &ExponentVector) -> Self {
        assert_eq!(e.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e1, c1)| (e1.add(e), c1.clone()))
            .collect();
        LaurentPolynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c1)| (e.clone(), c1 * c))
            .collect();
        LaurentPolynomial {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a unit, i.e. of a monomial `±x^e`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Pole("inverse of zero".into()));
        }
        let (e, c) = match self.leading_term() {
            Some(t) if self.is_monomial() && c_is_unit(t.1) => t,
            _ => return Err(Error::Pole(format!("{self} is not a unit"))),
        };
        Ok(Self::monomial(self.nvars, e.neg(), c.clone()))
    }

    /// Exact quotient `self / q`.
    ///
    /// Both operands are shifted to genuine polynomials with zero minimum
    /// exponents; the shifted quotient is then a polynomial, found by
    /// lexicographic long division.
    pub fn div_exact(&self, q: &Self) -> Result<Self> {
        self.check_dims(q)?;
        if q.is_zero() {
            return Err(Error::Divisibility("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        if q.is_monomial() {
            let (e, c) = q.leading_term().unwrap();
            let mut out = Self::zero(self.nvars);
            for (e1, c1) in &self.terms {
                let (quo, rem) = c1.div_rem(c);
                if !rem.is_zero() {
                    return Err(Error::Divisibility(format!("{self} by {q}")));
                }
                out.terms.insert(e1.sub(e), quo);
            }
            return Ok(out);
        }
        let pmin = self.min_exponents().unwrap();
        let qmin = q.min_exponents().unwrap();
        let mut r = self.mul_monomial(&pmin.neg());
        let qq = q.mul_monomial(&qmin.neg());
        let (lq, lc) = qq
            .leading_term()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut quot = Self::zero(self.nvars);
        while let Some((lr, rc)) = r.leading_term().map(|(e, c)| (e.clone(), c.clone())) {
            let diff = lr.sub(&lq);
            let (c, rem) = rc.div_rem(&lc);
            if diff.0.iter().any(|&d| d < 0) || !rem.is_zero() {
                return Err(Error::Divisibility(format!("({self}) by ({q})")));
            }
            r = &r - &qq.mul_term(&diff, &c);
            quot.add_term(diff, c);
        }
        Ok(quot.mul_monomial(&pmin.sub(&qmin)))
    }

    /// Simultaneous substitution `x_i -> assignment[i]` into a ring with
    /// `target_nvars` variables. Unassigned variables map to the variable
    /// with the same index in the target ring.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<usize, LaurentPolynomial>,
        target_nvars: usize,
    ) -> Result<Self> {
        let mut images = Vec::with_capacity(self.nvars);
        for i in 0..self.nvars {
            match assignment.get(&i) {
                Some(v) => {
                    if v.nvars != target_nvars {
                        return Err(Error::Dimension(v.nvars, target_nvars));
                    }
                    images.push(v.clone());
                }
                None => {
                    if i >= target_nvars {
                        return Err(Error::Dimension(self.nvars, target_nvars));
                    }
                    images.push(Self::var(target_nvars, i));
                }
            }
        }
        let mut powers: Vec<BTreeMap<i32, LaurentPolynomial>> = vec![BTreeMap::new(); self.nvars];
        let mut out = Self::zero(target_nvars);
        for (e, c) in &self.terms {
            let mut t = Self::constant(target_nvars, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !powers[i].contains_key(&k) {
                    let base = if k < 0 {
                        images[i].inverse().map_err(|_| {
                            Error::Pole(format!(
                                "x{} -> {} under a negative exponent",
                                i + 1,
                                images[i]
                            ))
                        })?
                    } else {
                        images[i].clone()
                    };
                    powers[i].insert(k, base.pow(k.unsigned_abs()));
                }
                t = &t * &powers[i][&k];
            }
            for (e2, c2) in t.terms {
                out.add_term(e2, c2);
            }
        }
        Ok(out)
    }

    /// Splits off the monomial denominator.
    pub fn split(&self) -> Result<MonomialFactorization> {
        let mins = self
            .min_exponents()
            .ok_or_else(|| Error::Domain("split of the zero polynomial".into()))?;
        let denominator = mins.neg();
        Ok(MonomialFactorization {
            numerator: self.mul_monomial(&denominator),
            denominator,
        })
    }

    /// Parses the canonical text form, e.g. `x1*x3 + 2*x2 + 1` or
    /// `-x1^-1*x2^2 - 3`. Accepts any term order and repeated factors.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        Parser {
            src: s.as_bytes(),
            pos: 0,
            nvars,
        }
        .polynomial()
    }

    /// Human fraction form: `(x2 + 1) / x1`.
    ///
    /// Negative denominator entries, which only occur for initial
    /// variables, are folded back into the numerator.
    pub fn to_fraction_string(&self) -> String {
        let Ok(f) = self.split() else {
            return "0".into();
        };
        let fold: Vec<i32> = f.denominator.0.iter().map(|&d| d.min(0)).collect();
        let num = f.numerator.mul_monomial(&ExponentVector(fold).neg());
        let den: Vec<i32> = f.denominator.0.iter().map(|&d| d.max(0)).collect();
        if den.iter().all(|&d| d == 0) {
            return num.to_string();
        }
        let factors = den.iter().filter(|&&d| d != 0).count();
        let den = Self::monomial(self.nvars, ExponentVector(den), 1);
        let num = if num.num_terms() > 1 {
            format!("({num})")
        } else {
            num.to_string()
        };
        if factors > 1 {
            format!("{num} / ({den})")
        } else {
            format!("{num} / {den}")
        }
    }
}

fn c_is_unit(c: &BigInt) -> bool {
    c.abs().is_one()
}

fn write_monomial(
    f: &mut impl fmt::Write,
    e: &ExponentVector,
    names: Option<&[String]>,
) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.0.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        match names {
            Some(n) => f.write_str(&n[i])?,
            None => write!(f, "x{}", i + 1)?,
        }
        if k != 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl LaurentPolynomial {
    fn write_with(&self, f: &mut impl fmt::Write, names: Option<&[String]>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if e.is_zero() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, e, names)?;
            }
        }
        Ok(())
    }

    /// Canonical text with custom variable names, one per slot.
    pub fn display_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        let mut s = String::new();
        self.write_with(&mut s, Some(names)).unwrap();
        s
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Terms in descending lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, None)
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'a> Add<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    /// Panics on an ambient mismatch; see [`LaurentPolynomial::checked_add`].
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_add(rhs).expect("ambient mismatch in add")
    }
}

impl<'a> Sub<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_sub(rhs).expect("ambient mismatch in sub")
    }
}

impl<'a> Mul<&'a LaurentPolynomial> for &'a LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.checked_mul(rhs).expect("ambient mismatch in mul")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPolynomial {
            nvars: self.nvars,
            terms,
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $m(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        let v = self.int()?;
        let v: i32 = match i32::try_from(v) {
            Ok(v) => v,
            Err(_) => return self.err("exponent out of range"),
        };
        if paren {
            if self.peek() != Some(b')') {
                return self.err("expected ')'");
            }
            self.pos += 1;
        }
        Ok(if neg { -v } else { v })
    }

    fn term(&mut self, negative: bool) -> Result<(ExponentVector, BigInt)> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0i32; self.nvars];
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let idx = self.int()?;
                    let idx: usize = match usize::try_from(idx) {
                        Ok(i) if i >= 1 && i <= self.nvars => i,
                        _ => return self.err(format!("variable index outside 1..={}", self.nvars)),
                    };
                    let mut k = 1;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        k = self.exponent()?;
                    }
                    exps[idx - 1] += k;
                }
                Some(c) if c.is_ascii_digit() => coeff *= self.int()?,
                _ => return self.err("expected a coefficient or variable"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        Ok((ExponentVector(exps), coeff))
    }

    fn polynomial(&mut self) -> Result<LaurentPolynomial> {
        let mut p = LaurentPolynomial::zero(self.nvars);
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negative = true;
        }
        loop {
            let (e, c) = self.term(negative)?;
            p.add_term(e, c);
            match self.peek() {
                None => return Ok(p),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            self.pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> LaurentPolynomial {
        LaurentPolynomial::parse(s, n).unwrap()
    }

    #[test]
    fn canonical_print() {
        assert_eq!(p("1 + 2*x2 + x3*x1", 3).to_string(), "x1*x3 + 2*x2 + 1");
        assert_eq!(p("-x1^-1 + x2^2", 2).to_string(), "x2^2 - x1^-1");
        assert_eq!(p("x1 - x1", 2).to_string(), "0");
        assert_eq!(p("-3", 1).to_string(), "-3");
        assert_eq!(p("x1^(-2)*x1", 1).to_string(), "x1^-1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(LaurentPolynomial::parse("x4", 3).is_err());
        assert!(LaurentPolynomial::parse("x1 +", 3).is_err());
        assert!(LaurentPolynomial::parse("y1", 3).is_err());
        assert!(LaurentPolynomial::parse("", 3).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let a = LaurentPolynomial::one(2);
        let b = LaurentPolynomial::one(3);
        assert_eq!(a.checked_add(&b), Err(Error::Dimension(2, 3)));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn monomial_division_with_coefficients() {
        let a = p("6*x1^2 + 4*x2", 2);
        assert_eq!(
            a.div_exact(&p("2*x1", 2)).unwrap(),
            p("3*x1 + 2*x1^-1*x2", 2)
        );
        assert!(a.div_exact(&p("4", 2)).is_err());
        assert!(a.div_exact(&LaurentPolynomial::zero(2)).is_err());
    }

    #[test]
    fn inexact_division_fails() {
        assert!(p("x1 + x2", 2).div_exact(&p("x1 + 1", 2)).is_err());
        assert!(p("x1^2 + 1", 1).div_exact(&p("x1 + 1", 1)).is_err());
    }

    #[test]
    fn pole_on_zero_substitution() {
        let a = p("x1^-1 + x2", 2);
        let mut m = BTreeMap::new();
        m.insert(0, LaurentPolynomial::zero(2));
        assert!(matches!(a.substitute(&m, 2), Err(Error::Pole(_))));
        m.insert(0, p("x1 + 1", 2));
        assert!(a.substitute(&m, 2).is_err());
    }

    #[test]
    fn named_display() {
        let names = vec!["y0".to_string(), "y2".to_string()];
        assert_eq!(p("x1*x2 - 1", 2).display_with(&names), "y0*y2 - 1");
    }

    #[test]
    fn fraction_text() {
        assert_eq!(
            p("x1^-1*x2 + x1^-1", 2).to_fraction_string(),
            "(x2 + 1) / x1"
        );
        assert_eq!(p("x1", 2).to_fraction_string(), "x1");
        assert_eq!(p("x1^-1*x2^-2", 2).to_fraction_string(), "1 / (x1*x2^2)");
        assert_eq!(p("x1*x2^-1", 2).to_fraction_string(), "x1 / x2");
        assert_eq!(p("3", 2).to_fraction_string(), "3");
    }
}
