//! Sparse Laurent polynomials with integer coefficients.
//!
//! [`LaurentPoly2`] holds the skein polynomial `P(v, z)`; [`LaurentPoly1`]
//! holds one-variable specializations (Burau entries in `t`, Conway in `z`,
//! Alexander and Jones in `s = t^{1/2}`, z-coefficients in `v`).
//!
//! Coefficients are `i128` with checked arithmetic; an overflow panics with
//! a `coefficient overflow` message instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = i128;

#[inline]
fn cadd(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b).expect("coefficient overflow")
}

#[inline]
fn cmul(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b).expect("coefficient overflow")
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Coeff>, key: K, c: Coeff) {
    if c == 0 {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = cadd(*e.get(), c);
            if s == 0 {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}

/// Variable name of a one-variable polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    T,
    /// `s = t^{1/2}`.
    S,
    V,
    Z,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::S => "s",
            Var::V => "v",
            Var::Z => "z",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly1 {
    var: Var,
    terms: BTreeMap<i32, Coeff>,
}

impl LaurentPoly1 {
    pub fn zero(var: Var) -> Self {
        LaurentPoly1 {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(var: Var, c: Coeff) -> Self {
        Self::monomial(var, c, 0)
    }

    pub fn monomial(var: Var, c: Coeff, exp: i32) -> Self {
        let mut p = Self::zero(var);
        accumulate(&mut p.terms, exp, c);
        p
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i32, Coeff)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            accumulate(&mut p.terms, e, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> Coeff {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, Coeff)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_deg(&self) -> Result<i32> {
        self.terms
            .keys()
            .next_back()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn min_deg(&self) -> Result<i32> {
        self.terms
            .keys()
            .next()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Result<Coeff> {
        self.terms
            .values()
            .next_back()
            .copied()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn eval_at_one(&self) -> Coeff {
        self.terms.values().fold(0, |a, &c| cadd(a, c))
    }

    /// Substitutes `x ↦ x⁻¹`.
    pub fn invert_var(&self) -> Self {
        Self::from_terms(self.var, self.terms().map(|(e, c)| (-e, c)))
    }

    /// Invariant under `x ↦ x⁻¹`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.invert_var()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.var, 1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by `x − x⁻¹`; `None` when it does not divide.
    pub fn div_by_x_minus_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let top = *self.terms.keys().next_back().unwrap();
        let bottom = *self.terms.keys().next().unwrap();
        // f_e = g_{e-1} - g_{e+1}, solved from the top degree down.
        let mut g: BTreeMap<i32, Coeff> = BTreeMap::new();
        let mut e = top;
        while e > bottom {
            let above = g.get(&(e + 1)).copied().unwrap_or(0);
            let val = cadd(self.coeff(e), above);
            if val != 0 {
                g.insert(e - 1, val);
            }
            e -= 1;
        }
        let q = LaurentPoly1 {
            var: self.var,
            terms: g,
        };
        let divisor = Self::from_terms(self.var, [(1, 1), (-1, -1)]);
        if &q * &divisor == *self {
            Some(q)
        } else {
            None
        }
    }

    fn assert_same_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "mixing polynomials in different variables"
        );
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let name = self.var.name();
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{name}^{e}")?;
        }
        Ok(())
    }
}

impl Add for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn add(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        self.assert_same_var(rhs);
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            accumulate(&mut out.terms, e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn sub(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn mul(self, rhs: &LaurentPoly1) -> LaurentPoly1 {
        self.assert_same_var(rhs);
        let mut out = LaurentPoly1::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                accumulate(&mut out.terms, e1 + e2, cmul(c1, c2));
            }
        }
        out
    }
}

impl Neg for &LaurentPoly1 {
    type Output = LaurentPoly1;
    fn neg(self) -> LaurentPoly1 {
        LaurentPoly1 {
            var: self.var,
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly1 {
    type Output = LaurentPoly1;
    fn neg(self) -> LaurentPoly1 {
        -&self
    }
}

forward_binop!(LaurentPoly1, Add, add);
forward_binop!(LaurentPoly1, Sub, sub);
forward_binop!(LaurentPoly1, Mul, mul);

/// Two-variable Laurent polynomial in `v` and `z`.
///
/// Terms are keyed by `(dz, dv)` so iteration follows the rendering order:
/// ascending in `z`, then in `v`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), Coeff>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c · v^dv · z^dz`.
    pub fn monomial(c: Coeff, dv: i32, dz: i32) -> Self {
        let mut p = Self::zero();
        accumulate(&mut p.terms, (dz, dv), c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Coeff, i32, i32)>) -> Self {
        let mut p = Self::zero();
        for (c, dv, dz) in terms {
            accumulate(&mut p.terms, (dz, dv), c);
        }
        p
    }

    pub fn v() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// The split-unknot factor `δ = (v⁻¹ − v) z⁻¹`.
    pub fn delta() -> Self {
        Self::from_terms([(1, -1, -1), (-1, 1, -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dv: i32, dz: i32) -> Coeff {
        self.terms.get(&(dz, dv)).copied().unwrap_or(0)
    }

    /// Terms as `(coefficient, dv, dz)`, ordered by `(dz, dv)`.
    pub fn terms(&self) -> impl Iterator<Item = (Coeff, i32, i32)> + '_ {
        self.terms.iter().map(|(&(dz, dv), &c)| (c, dv, dz))
    }

    pub fn max_deg_z(&self) -> Result<i32> {
        self.terms
            .keys()
            .next_back()
            .map(|k| k.0)
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn min_deg_z(&self) -> Result<i32> {
        self.terms
            .keys()
            .next()
            .map(|k| k.0)
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn max_deg_v(&self) -> Result<i32> {
        self.terms
            .keys()
            .map(|k| k.1)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn min_deg_v(&self) -> Result<i32> {
        self.terms
            .keys()
            .map(|k| k.1)
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// The polynomial in `v` multiplying `z^dz`.
    pub fn z_coefficient(&self, dz: i32) -> LaurentPoly1 {
        LaurentPoly1::from_terms(
            Var::V,
            self.terms
                .range((dz, i32::MIN)..=(dz, i32::MAX))
                .map(|(&(_, dv), &c)| (dv, c)),
        )
    }

    /// Multiplies by `c · v^dv · z^dz`.
    pub fn scale_by_monomial(&self, c: Coeff, dv: i32, dz: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(z, v), &k)| ((z + dz, v + dv), cmul(k, c)))
                .collect(),
        }
    }

    /// Adds `c · v^dv · z^dz · other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: Coeff, dv: i32, dz: i32) {
        if c == 0 {
            return;
        }
        for (&(z, v), &k) in &other.terms {
            accumulate(&mut self.terms, (z + dz, v + dv), cmul(k, c));
        }
    }

    /// The substitution `v ↦ v⁻¹, z ↦ −z`, which takes the polynomial of a
    /// link to that of its mirror image.
    pub fn mirror(&self) -> Self {
        Self::from_terms(
            self.terms()
                .map(|(c, dv, dz)| (if dz % 2 == 0 { c } else { -c }, -dv, dz)),
        )
    }

    /// Substitutes `v ↦ v⁻¹` leaving `z` alone.
    pub fn invert_v(&self) -> Self {
        Self::from_terms(self.terms().map(|(c, dv, dz)| (c, -dv, dz)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Common parity of every `z`-exponent, if there is one.
    pub fn z_parity(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|k| k.0.rem_euclid(2));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// True when every term has `dv ≡ dz ≡ p (mod 2)` for a single `p`.
    pub fn parity_consistent(&self) -> bool {
        match self.z_parity() {
            None => true,
            Some(p) => self.terms.keys().all(|k| k.1.rem_euclid(2) == p),
        }
    }

    /// Conway polynomial `∇(z) = P(1, z)`.
    pub fn conway(&self) -> LaurentPoly1 {
        LaurentPoly1::from_terms(Var::Z, self.terms().map(|(c, _, dz)| (dz, c)))
    }

    /// Jones polynomial in `s = t^{1/2}`: `v = s²`, `z = s − s⁻¹`.
    pub fn jones(&self) -> Result<LaurentPoly1> {
        let shift = self.min_deg_z().map(|m| (-m).max(0)).unwrap_or(0);
        let zs = LaurentPoly1::from_terms(Var::S, [(1, 1), (-1, -1)]);
        let mut acc = LaurentPoly1::zero(Var::S);
        for (c, dv, dz) in self.terms() {
            let z_part = zs.pow((dz + shift) as u32);
            acc = acc + &LaurentPoly1::monomial(Var::S, c, 2 * dv) * &z_part;
        }
        for _ in 0..shift {
            acc = acc.div_by_x_minus_inverse().ok_or_else(|| {
                Error::domain("polynomial does not specialize to a Jones polynomial")
            })?;
        }
        Ok(acc)
    }
}

/// `δ = (v⁻¹ − v) z⁻¹`, the factor contributed by a split unknot.
pub fn delta_unlink_factor() -> LaurentPoly2 {
    LaurentPoly2::delta()
}

/// Alexander polynomial in `s = t^{1/2}` from a Conway polynomial, via
/// `z = s − s⁻¹`.
pub fn alexander(nabla: &LaurentPoly1) -> Result<LaurentPoly1> {
    if nabla.var() != Var::Z {
        return Err(Error::domain("alexander expects a polynomial in z"));
    }
    if let Ok(m) = nabla.min_deg() {
        if m < 0 {
            return Err(Error::domain("Conway polynomial has negative z-exponents"));
        }
    }
    let zs = LaurentPoly1::from_terms(Var::S, [(1, 1), (-1, -1)]);
    let mut acc = LaurentPoly1::zero(Var::S);
    for (e, c) in nabla.terms() {
        acc = acc + &LaurentPoly1::constant(Var::S, c) * &zs.pow(e as u32);
    }
    Ok(acc)
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out.add_scaled(rhs, 1, 0, 0);
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        out.add_scaled(rhs, -1, 0, 0);
        out
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly2::zero();
        for (c, dv, dz) in small.terms() {
            out.add_scaled(big, c, dv, dz);
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.scale_by_monomial(-1, 0, 0)
    }
}

impl Neg for LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        -&self
    }
}

forward_binop!(LaurentPoly2, Add, add);
forward_binop!(LaurentPoly2, Sub, sub);
forward_binop!(LaurentPoly2, Mul, mul);

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, dv, dz)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*v^{dv}*z^{dz}")?;
        }
        Ok(())
    }
}

/// Character cursor over the input with whitespace removed; positions refer
/// to the original text.
struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            at: 0,
            text,
        }
    }

    fn pos(&self) -> usize {
        self.chars
            .get(self.at)
            .map(|&(i, _)| i)
            .unwrap_or(self.text.len())
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect_str(&mut self, s: &str) -> Result<()> {
        for want in s.chars() {
            if !self.eat(want) {
                return Err(self.unexpected(&format!("expected `{s}`")));
            }
        }
        Ok(())
    }

    fn unexpected(&self, what: &str) -> Error {
        match self.peek() {
            Some(c) => Error::parse(self.pos(), format!("{what}, found `{c}`")),
            None => Error::parse(self.pos(), format!("{what}, found end of input")),
        }
    }

    fn int<T: FromStr>(&mut self) -> Result<T> {
        let start = self.at;
        let begin = self.pos();
        if matches!(self.peek(), Some('+' | '-')) {
            self.at += 1;
        }
        let digits_from = self.at;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.at += 1;
        }
        if self.at == digits_from {
            self.at = start;
            return Err(self.unexpected("expected an integer"));
        }
        let s: String = self.chars[start..self.at].iter().map(|&(_, c)| c).collect();
        s.parse()
            .map_err(|_| Error::parse(begin, format!("integer `{s}` out of range")))
    }
}

impl FromStr for LaurentPoly2 {
    type Err = Error;

    /// Parses `term ('+' term)*` with `term := int '*v^' int '*z^' int`.
    /// Whitespace is ignored; the `*v^` and `*z^` parts may be omitted
    /// (exponent 0) and the literal `0` denotes the zero polynomial.
    fn from_str(text: &str) -> Result<Self> {
        let mut cur = Cursor::new(text);
        if cur.peek().is_none() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut out = LaurentPoly2::zero();
        loop {
            let c: Coeff = cur.int()?;
            let mut dv = 0;
            let mut dz = 0;
            if cur.peek() == Some('*') && cur.chars.get(cur.at + 1).map(|x| x.1) == Some('v') {
                cur.expect_str("*v^")?;
                dv = cur.int()?;
            }
            if cur.peek() == Some('*') {
                cur.expect_str("*z^")?;
                dz = cur.int()?;
            }
            accumulate(&mut out.terms, (dz, dv), c);
            match cur.peek() {
                None => break,
                Some('+') => {
                    cur.at += 1;
                }
                Some(_) => return Err(cur.unexpected("expected `+` or end of input")),
            }
        }
        Ok(out)
    }
}

impl Serialize for LaurentPoly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for LaurentPoly1 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
