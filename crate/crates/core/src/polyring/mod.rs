//! Exact sparse multivariate polynomials over the rationals.
//!
//! Polynomials carry their variable count; binary operations on
//! polynomials in different rings are rejected by the `try_*` methods and
//! panic in the operator impls.

mod monomial;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;

use crate::error::{Error, Result};

/// Exact rational coefficient, always reduced with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Canonical `a` or `a/b` rendering.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Syntax { pos: 0, msg: format!("invalid rational `{s}`") };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = num.parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(n, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Poly::monomial(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Poly::monomial(Monomial::var(nvars, i), Rat::one())
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms sorted by descending order.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Smallest total degree of a term (the order at the origin); `None` for zero.
    pub fn ord(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// True iff `p` lies in the square of the maximal ideal at the origin.
    pub fn in_m_squared(&self) -> bool {
        self.terms.keys().all(|m| m.degree() >= 2)
    }

    /// Drops all terms of total degree `>= k`.
    pub fn truncate(&self, k: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() < k).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to `x_i` (0-based).
    pub fn partial_derivative(&self, i: usize) -> Result<Poly> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange { index: i, nvars: self.nvars });
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[i] -= 1;
            out.add_term(Monomial::new(ex), c * Rat::from_integer(e.into()));
        }
        Ok(out)
    }

    /// All first partials `f_1, ..., f_n`.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.partial_derivative(i).expect("index in range")).collect()
    }

    /// Exact division by a constant-free scaling: returns `self / c`.
    pub fn div_scalar(&self, c: &Rat) -> Poly {
        self.scale(&c.recip())
    }

    /// Scales so that the coefficients are coprime integers and the
    /// grevlex-leading coefficient is positive.
    pub fn primitive(&self) -> Poly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&den / c.denom());
            g = g.gcd(&v);
        }
        let mut s = Rat::new(den, g);
        if self.leading_term(MonomialOrder::GrevLex).map(|(_, c)| c.is_negative()).unwrap_or(false) {
            s = -s;
        }
        self.scale(&s)
    }

    /// Renders with the given variable names in canonical form.
    pub fn render<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms(MonomialOrder::GrevLex).into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&fmt_rat(&a));
            } else if a.is_one() {
                out.push_str(&m.render(names));
            } else {
                out.push_str(&fmt_rat(&a));
                out.push('*');
                out.push_str(&m.render(names));
            }
        }
        out
    }

    /// Default names `x, y, z` for up to three variables, `x1..xn` otherwise.
    pub fn default_names(nvars: usize) -> Vec<String> {
        if nvars <= 3 {
            ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=nvars).map(|i| format!("x{i}")).collect()
        }
    }

    /// Weighted degree of the support if all terms share one; `None` for
    /// zero or non-homogeneous input.
    pub fn weighted_homogeneous_degree(&self, w: &Weights) -> Result<Option<Rat>> {
        if w.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: w.len() });
        }
        let mut deg: Option<Rat> = None;
        for m in self.terms.keys() {
            let d = weighted_degree(m, w)?;
            match &deg {
                None => deg = Some(d),
                Some(d0) if *d0 != d => return Ok(None),
                _ => {}
            }
        }
        Ok(deg)
    }

    pub fn is_weighted_homogeneous(&self, w: &Weights) -> Result<bool> {
        Ok(self.weighted_homogeneous_degree(w)?.is_some())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&Poly::default_names(self.nvars)))
    }
}

pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("nvars mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("nvars mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("nvars mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

/// Returns `([f_1..f_n], [f, f_1..f_n])`.
pub fn jacobian_ideals(f: &Poly) -> (Vec<Poly>, Vec<Poly>) {
    let grad = f.gradient();
    let mut j = Vec::with_capacity(grad.len() + 1);
    j.push(f.clone());
    j.extend(grad.iter().cloned());
    (grad, j)
}

/// Strictly positive rational weights, one per variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights(Vec<Rat>);

impl Weights {
    pub fn new(w: Vec<Rat>) -> Result<Self> {
        if let Some(bad) = w.iter().find(|x| !x.is_positive()) {
            return Err(Error::InvalidWeights(format!("weight {} is not positive", fmt_rat(bad))));
        }
        Ok(Weights(w))
    }

    /// Parses a comma-separated list such as `1/2,1/3`.
    pub fn parse(s: &str) -> Result<Self> {
        let w = s.split(',').map(parse_rat).collect::<Result<Vec<_>>>()?;
        Weights::new(w)
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> Rat {
        self.0.iter().fold(Rat::zero(), |a, b| a + b)
    }

    pub fn scaled(&self, c: &Rat) -> Weights {
        Weights(self.0.iter().map(|w| w * c).collect())
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rat).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `sum_i w_i a_i`.
pub fn weighted_degree(m: &Monomial, w: &Weights) -> Result<Rat> {
    if m.nvars() != w.len() {
        return Err(Error::DimensionMismatch { expected: m.nvars(), got: w.len() });
    }
    Ok(m.exponents().iter().zip(w.as_slice()).fold(Rat::zero(), |acc, (&a, wi)| acc + wi * Rat::from_integer(a.into())))
}
