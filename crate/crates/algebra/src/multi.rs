//! Sparse multivariate polynomials with lexicographic term order.
//!
//! Variables are listed greatest-first, so the lexicographic order on
//! exponent vectors is the monomial order and the last map entry is the
//! leading term.

use crate::dyadic::{sqrt3_interval, DyadicInterval};
use crate::poly::Poly;
use crate::quad::{QuadInt, QuadRat};
use crate::ring::{Domain, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

pub type Monomial = Vec<u32>;

#[derive(Clone, Debug)]
pub struct MultiPoly<R> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, R>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("coefficient ring cannot represent {0}")]
    Unrepresentable(String),
}

/// Coefficient rings the parser and the interval evaluator understand.
pub trait Coeff: Ring {
    fn sqrt3() -> Option<Self>;
    fn div_int(&self, d: &BigInt) -> Option<Self>;
    fn to_interval(&self, prec: u32) -> DyadicInterval;
}

impl Coeff for BigInt {
    fn sqrt3() -> Option<Self> {
        None
    }
    fn div_int(&self, d: &BigInt) -> Option<Self> {
        Domain::div_exact(self, d)
    }
    fn to_interval(&self, prec: u32) -> DyadicInterval {
        DyadicInterval::from_rational(&BigRational::from_integer(self.clone()), prec)
    }
}

impl Coeff for BigRational {
    fn sqrt3() -> Option<Self> {
        None
    }
    fn div_int(&self, d: &BigInt) -> Option<Self> {
        Domain::div_exact(self, &BigRational::from_integer(d.clone()))
    }
    fn to_interval(&self, prec: u32) -> DyadicInterval {
        DyadicInterval::from_rational(self, prec)
    }
}

impl Coeff for QuadInt {
    fn sqrt3() -> Option<Self> {
        Some(QuadInt::sqrt3())
    }
    fn div_int(&self, d: &BigInt) -> Option<Self> {
        self.div_int_exact(d)
    }
    fn to_interval(&self, prec: u32) -> DyadicInterval {
        let a = DyadicInterval::from_rational(&BigRational::from_integer(self.a.clone()), prec);
        let b = DyadicInterval::from_rational(&BigRational::from_integer(self.b.clone()), prec);
        a.add(&b.mul(&sqrt3_interval(prec)))
    }
}

impl Coeff for QuadRat {
    fn sqrt3() -> Option<Self> {
        Some(QuadRat::from_quad_int(QuadInt::sqrt3()))
    }
    fn div_int(&self, d: &BigInt) -> Option<Self> {
        Domain::div_exact(self, &QuadRat::from_bigint(d))
    }
    fn to_interval(&self, prec: u32) -> DyadicInterval {
        let a = DyadicInterval::from_rational(&self.rational_part(), prec);
        let b = DyadicInterval::from_rational(&self.sqrt3_part(), prec);
        a.add(&b.mul(&sqrt3_interval(prec)))
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn zero_like(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_like(&self, c: R) -> Self {
        let mut p = self.zero_like();
        p.add_term(vec![0; self.vars.len()], c);
        p
    }

    pub fn constant(vars: &[&str], c: R) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        let i = vars.iter().position(|v| *v == name).expect("variable in list");
        let mut m = vec![0; vars.len()];
        m[i] = 1;
        let mut p = MultiPoly::zero(vars);
        p.add_term(m, R::one());
        p
    }

    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Monomial, R)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, R> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn coeff(&self, m: &[u32]) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    /// Leading monomial and coefficient under lex.
    pub fn leading(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    pub fn degree_in_name(&self, name: &str) -> u32 {
        self.var_index(name).map_or(0, |i| self.degree_in(i))
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m[var] > 0)
    }

    fn check_vars(&self, rhs: &Self) {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
    }

    /// A variable-free constant (as produced by `Ring::one()`) adopts the
    /// other operand's variable list.
    fn aligned<'a>(&'a self, rhs: &'a Self) -> (std::borrow::Cow<'a, Self>, std::borrow::Cow<'a, Self>) {
        use std::borrow::Cow;
        if self.vars == rhs.vars {
            return (Cow::Borrowed(self), Cow::Borrowed(rhs));
        }
        if self.vars.is_empty() {
            return (Cow::Owned(self.lift(&rhs.vars)), Cow::Borrowed(rhs));
        }
        if rhs.vars.is_empty() {
            return (Cow::Borrowed(self), Cow::Owned(rhs.lift(&self.vars)));
        }
        panic!("variable lists differ: {:?} vs {:?}", self.vars, rhs.vars);
    }

    fn lift(&self, vars: &[String]) -> Self {
        MultiPoly {
            vars: vars.to_vec(),
            terms: self.terms.values().map(|c| (vec![0; vars.len()], c.clone())).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (a, b) = self.aligned(rhs);
        let mut out = a.into_owned();
        for (m, c) in &b.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(k));
        }
        out
    }

    /// Multiply by `c·x^m`.
    pub fn mul_term(&self, m: &[u32], c: &R) -> Self {
        let mut out = self.zero_like();
        for (mm, cc) in &self.terms {
            let e: Monomial = mm.iter().zip(m).map(|(a, b)| a + b).collect();
            out.add_term(e, cc.mul(c));
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.aligned(rhs);
        let mut out = a.zero_like();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let e: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.constant_like(R::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Re-express over another variable list (must contain every variable
    /// actually used).
    pub fn with_vars(&self, vars: &[&str]) -> Self {
        let idx: Vec<Option<usize>> = self.vars.iter().map(|v| vars.iter().position(|w| w == v)).collect();
        let mut out = MultiPoly::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.iter().enumerate() {
                if k > 0 {
                    let j = idx[i].unwrap_or_else(|| panic!("variable {} dropped", self.vars[i]));
                    e[j] = k;
                } else if let Some(j) = idx[i] {
                    e[j] = 0;
                }
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Substitute a polynomial (over the same variable list) for one variable.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        self.check_vars(value);
        let d = self.degree_in(var) as usize;
        let mut powers = vec![self.constant_like(R::one())];
        for k in 1..=d {
            powers.push(powers[k - 1].mul(value));
        }
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = rest[var] as usize;
            rest[var] = 0;
            out = out.add(&powers[k].mul_term(&rest, c));
        }
        out
    }

    /// Replace a variable by a constant.
    pub fn eval_var(&self, var: usize, value: &R) -> Self {
        let mut out = self.zero_like();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = rest[var];
            rest[var] = 0;
            out.add_term(rest, c.mul(&value.pow(k)));
        }
        out
    }

    /// View as a univariate polynomial in `var` with coefficients that keep
    /// the full variable list (exponent of `var` zero).
    pub fn to_univariate(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var) as usize;
        let mut out = vec![self.zero_like(); d + 1];
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = rest[var] as usize;
            rest[var] = 0;
            out[k].add_term(rest, c.clone());
        }
        out
    }

    pub fn from_univariate(var: usize, coeffs: &[Self]) -> Self {
        let mut out = coeffs[0].zero_like();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut e = m.clone();
                e[var] += k as u32;
                out.add_term(e, v.clone());
            }
        }
        out
    }

    /// Dense univariate polynomial in the single variable `var`; `None` if
    /// another variable occurs.
    pub fn to_poly(&self, var: usize) -> Option<Poly<R>> {
        let d = self.degree_in(var) as usize;
        let mut v = vec![R::zero(); d + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            v[m[var] as usize] = c.clone();
        }
        Some(Poly::new(v))
    }

    pub fn from_poly(vars: &[&str], var: &str, p: &Poly<R>) -> Self {
        let i = vars.iter().position(|v| *v == var).expect("variable in list");
        let mut out = MultiPoly::zero(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut m = vec![0; vars.len()];
            m[i] = k as u32;
            out.add_term(m, c.clone());
        }
        out
    }

    /// Bivariate `(outer, inner)` view as a dense polynomial in `outer`
    /// whose coefficients are dense polynomials in `inner`.
    pub fn to_nested(&self, outer: usize, inner: usize) -> Option<Poly<Poly<R>>> {
        let d = self.degree_in(outer) as usize;
        let mut rows: Vec<Vec<R>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != outer && i != inner && e > 0) {
                return None;
            }
            let row = &mut rows[m[outer] as usize];
            let k = m[inner] as usize;
            if row.len() <= k {
                row.resize(k + 1, R::zero());
            }
            row[k] = c.clone();
        }
        Some(Poly::new(rows.into_iter().map(Poly::new).collect()))
    }

    pub fn from_nested(vars: &[&str], outer: &str, inner: &str, p: &Poly<Poly<R>>) -> Self {
        let io = vars.iter().position(|v| *v == outer).expect("outer variable");
        let ii = vars.iter().position(|v| *v == inner).expect("inner variable");
        let mut out = MultiPoly::zero(vars);
        for (k, row) in p.coeffs().iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                let mut m = vec![0; vars.len()];
                m[io] = k as u32;
                m[ii] = j as u32;
                out.add_term(m, c.clone());
            }
        }
        out
    }
}

impl<R: Domain> MultiPoly<R> {
    /// Exact division by lex-leading-term elimination.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (a, d) = self.aligned(d);
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut r = a.into_owned();
        let mut q = self.zero_like();
        while let Some((m, c)) = r.leading() {
            if m.iter().zip(&dm).any(|(a, b)| a < b) {
                return None;
            }
            let e: Monomial = m.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let k = c.div_exact(&dc)?;
            r = r.sub(&d.mul_term(&e, &k));
            q.add_term(e, k);
        }
        Some(q)
    }
}

impl<R: Coeff> MultiPoly<R> {
    /// Interval evaluation; `point[i]` encloses variable `i`.
    pub fn eval_interval(&self, point: &[DyadicInterval]) -> DyadicInterval {
        assert_eq!(point.len(), self.vars.len());
        let prec = point.first().map_or(128, |p| p.precision());
        let mut acc = DyadicInterval::from_int(0, prec);
        for (m, c) in &self.terms {
            let mut t = c.to_interval(prec);
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].powi(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Parse `"27 - 36*T^2 + 12*T*yD - 4*yD^2"`; `r3` (or `√3`) is √3 and
    /// `a/b` divides by an integer literal.
    pub fn parse(src: &str, vars: &[&str]) -> Result<Self, ParseError> {
        let mut p = Parser {
            s: src.as_bytes(),
            src,
            i: 0,
            vars,
        };
        let v = p.expr()?;
        p.ws();
        if p.i < p.s.len() {
            return Err(ParseError::Unexpected(p.peek_char(), p.i));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    src: &'a str,
    i: usize,
    vars: &'a [&'a str],
}

impl<'a> Parser<'a> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }
    fn peek_char(&self) -> char {
        self.src[self.i..].chars().next().unwrap_or('\0')
    }
    fn eat(&mut self, c: u8) -> bool {
        self.ws();
        if self.i < self.s.len() && self.s[self.i] == c {
            self.i += 1;
            true
        } else {
            false
        }
    }
    fn expr<R: Coeff>(&mut self) -> Result<MultiPoly<R>, ParseError> {
        self.ws();
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        let mut acc = self.term::<R>()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }
    fn term<R: Coeff>(&mut self) -> Result<MultiPoly<R>, ParseError> {
        let mut acc = self.power::<R>()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat(b'/') {
                self.ws();
                let d = self.integer()?;
                let mut out = acc.zero_like();
                for (m, c) in acc.terms() {
                    let q = c.div_int(&d).ok_or_else(|| ParseError::Unrepresentable(format!("division by {d}")))?;
                    out.add_term(m.clone(), q);
                }
                acc = out;
            } else {
                self.ws();
                // implicit product: "2T", "8r3(…)", "(…)(…)"
                if self.i < self.s.len() && (self.s[self.i] == b'(' || self.s[self.i].is_ascii_alphabetic() || self.src[self.i..].starts_with('√')) {
                    acc = acc.mul(&self.power()?);
                } else {
                    return Ok(acc);
                }
            }
        }
    }
    fn power<R: Coeff>(&mut self) -> Result<MultiPoly<R>, ParseError> {
        let base = self.atom::<R>()?;
        if self.eat(b'^') {
            self.ws();
            let e = self.integer()?;
            let e: u32 = u32::try_from(&e).map_err(|_| ParseError::Unrepresentable(format!("exponent {e}")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        if start == self.i {
            return Err(if self.i < self.s.len() { ParseError::Unexpected(self.peek_char(), self.i) } else { ParseError::Eof });
        }
        Ok(self.src[start..self.i].parse().expect("digits"))
    }
    fn atom<R: Coeff>(&mut self) -> Result<MultiPoly<R>, ParseError> {
        self.ws();
        if self.i >= self.s.len() {
            return Err(ParseError::Eof);
        }
        let c = self.s[self.i];
        if c == b'(' {
            self.i += 1;
            let v = self.expr()?;
            if !self.eat(b')') {
                return Err(if self.i < self.s.len() { ParseError::Unexpected(self.peek_char(), self.i) } else { ParseError::Eof });
            }
            return Ok(v);
        }
        if c.is_ascii_digit() {
            let n = self.integer()?;
            return Ok(MultiPoly::constant(self.vars, R::from_bigint(&n)));
        }
        if self.src[self.i..].starts_with('√') {
            self.i += '√'.len_utf8();
            self.ws();
            let n = self.integer()?;
            if n != BigInt::from(3) {
                return Err(ParseError::Unrepresentable(format!("√{n}")));
            }
            return R::sqrt3()
                .map(|s| MultiPoly::constant(self.vars, s))
                .ok_or_else(|| ParseError::Unrepresentable("√3".into()));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.i;
            while self.i < self.s.len() && (self.s[self.i].is_ascii_alphanumeric() || self.s[self.i] == b'_') {
                self.i += 1;
            }
            let name = &self.src[start..self.i];
            if self.vars.contains(&name) {
                return Ok(MultiPoly::var(self.vars, name));
            }
            if name == "r3" {
                return R::sqrt3()
                    .map(|s| MultiPoly::constant(self.vars, s))
                    .ok_or_else(|| ParseError::Unrepresentable("√3".into()));
            }
            return Err(ParseError::UnknownVariable(name.to_string()));
        }
        Err(ParseError::Unexpected(self.peek_char(), self.i))
    }
}

impl<R: Ring> Ring for MultiPoly<R> {
    fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::from_bigint(&BigInt::from(1))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.is_constant() && self.terms.values().all(|c| c.is_one())
    }
    fn add(&self, rhs: &Self) -> Self {
        MultiPoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        MultiPoly::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        MultiPoly::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn from_bigint(n: &BigInt) -> Self {
        let mut p = <Self as Ring>::zero();
        p.add_term(Vec::new(), R::from_bigint(n));
        p
    }
}

impl<R: Domain> Domain for MultiPoly<R> {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        MultiPoly::div_exact(self, rhs)
    }
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = self.aligned(other);
        a.terms == b.terms
    }
}

impl<R: Ring + fmt::Display> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", self.vars[i])?,
                    _ => write!(f, "*{}^{}", self.vars[i], e)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type ZM = MultiPoly<BigInt>;

    #[test]
    fn parse_and_arithmetic() {
        let v = ["x", "T"];
        let p = ZM::parse("(x - T)(x + T)", &v).unwrap();
        assert_eq!(p, ZM::parse("x^2 - T^2", &v).unwrap());
        assert_eq!(p.total_degree(), 2);
        let q = MultiPoly::<QuadInt>::parse("-1 + 28T^2 - 12r3*T*x + 4x^2", &v).unwrap();
        assert_eq!(q.coeff(&[1, 1]), QuadInt::new(0, -12));
        assert!(ZM::parse("r3*x", &v).is_err());
        assert!(ZM::parse("y", &v).is_err());
        let h = MultiPoly::<BigRational>::parse("3/2 + x", &v).unwrap();
        assert_eq!(h.coeff(&[0, 0]), BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn exact_division_and_substitution() {
        let v = ["x", "T"];
        let a = ZM::parse("x^2 - T^2", &v).unwrap();
        let b = ZM::parse("x - T", &v).unwrap();
        assert_eq!(a.div_exact(&b), Some(ZM::parse("x + T", &v).unwrap()));
        assert_eq!(a.div_exact(&ZM::parse("x - 2T", &v).unwrap()), None);
        let s = a.substitute(0, &ZM::parse("T + 1", &v).unwrap());
        assert_eq!(s, ZM::parse("2T + 1", &v).unwrap());
    }

    #[test]
    fn nested_roundtrip() {
        let v = ["y", "T"];
        let p = ZM::parse("81 - 648T^2 + (432T - 864T^3) y + 144 y^4", &v).unwrap();
        let n = p.to_nested(0, 1).unwrap();
        assert_eq!(n.deg(), 4);
        assert_eq!(MultiPoly::from_nested(&v, "y", "T", &n), p);
    }

    #[test]
    fn interval_eval_contains_value() {
        let v = ["x", "T"];
        let p = MultiPoly::<QuadInt>::parse("x^2 - 3T^2", &v).unwrap();
        // x = √3·T at T = 1/8
        let t = DyadicInterval::from_rational(&BigRational::new(1.into(), 8.into()), 200);
        let x = sqrt3_interval(200).mul(&t);
        assert!(p.eval_interval(&[x, t]).contains_zero());
    }
}
