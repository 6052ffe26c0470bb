//! Exact arithmetic in the field of finite rational combinations of square
//! roots of squarefree positive integers.
//!
//! A [`RadicalScalar`] is a map `s -> q_s` denoting `sum q_s * sqrt(s)`, with
//! `s = 1` the rational part. The square roots of distinct squarefree
//! integers are linearly independent over the rationals, so two scalars are
//! equal as real numbers exactly when their maps are equal; no numerics are
//! involved anywhere.

mod conditions;

pub use conditions::{check_eigen_condition, Condition};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Writes `n = m^2 * s` with `s` squarefree. `n` must be positive.
pub fn sqfree_decompose(n: u64) -> (u64, u64) {
    assert!(n >= 1, "sqfree_decompose needs a positive integer");
    let mut rest = n;
    let mut m = 1;
    let mut s = 1;
    let mut p = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        m *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    (m, s * rest)
}

fn prime_factors(mut s: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= s {
        if s % p == 0 {
            out.push(p);
            while s % p == 0 {
                s /= p;
            }
        }
        p += 1;
    }
    if s > 1 {
        out.push(s);
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    terms: BTreeMap<u64, BigRational>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::term(q, 1)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `q * sqrt(s)` for squarefree `s`.
    pub fn term(q: BigRational, s: u64) -> Self {
        debug_assert_eq!(sqfree_decompose(s).0, 1, "key must be squarefree");
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(s, q);
        }
        RadicalScalar { terms }
    }

    /// `sqrt(n)` in canonical form.
    pub fn sqrt(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let (m, s) = sqfree_decompose(n);
        Self::term(BigRational::from_integer(BigInt::from(m)), s)
    }

    /// Builds from `(squarefree, coefficient)` pairs, merging and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (u64, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (s, q) in pairs {
            out.add_term(s, q);
        }
        out
    }

    fn add_term(&mut self, s: u64, q: BigRational) {
        if q.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += q;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `(squarefree, coefficient)` pairs in increasing key order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(&s, q)| (s, q))
    }

    pub fn coefficient(&self, s: u64) -> BigRational {
        self.terms.get(&s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RadicalScalar { terms: self.terms.iter().map(|(&s, c)| (s, c * q)).collect() }
    }

    /// Image under the field automorphism `sqrt(p) -> -sqrt(p)`.
    fn conjugate_at(&self, p: u64) -> Self {
        RadicalScalar {
            terms: self
                .terms
                .iter()
                .map(|(&s, c)| (s, if s % p == 0 { -c.clone() } else { c.clone() }))
                .collect(),
        }
    }

    fn support_primes(&self) -> Vec<u64> {
        let mut primes: Vec<u64> = self.terms.keys().flat_map(|&s| prime_factors(s)).collect();
        primes.sort_unstable();
        primes.dedup();
        primes
    }

    /// Exact inverse, by multiplying through with one conjugate per prime in
    /// the support until the denominator is rational.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut denom = self.clone();
        let mut numer = Self::one();
        for p in self.support_primes() {
            let conj = denom.conjugate_at(p);
            denom = &denom * &conj;
            numer = &numer * &conj;
        }
        let d = denom.as_rational().expect("conjugate products eliminate every prime");
        Ok(numer.scale(&(BigRational::one() / d)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }
}

impl Add for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        for (&s, q) in &rhs.terms {
            out.add_term(s, q.clone());
        }
        out
    }
}

impl Sub for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        for (&s, q) in &rhs.terms {
            out.add_term(s, -q.clone());
        }
        out
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar { terms: self.terms.iter().map(|(&s, q)| (s, -q.clone())).collect() }
    }
}

impl Mul for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = RadicalScalar::zero();
        for (&s, a) in &self.terms {
            for (&t, b) in &rhs.terms {
                // sqrt(s) sqrt(t) = g sqrt(st / g^2) with g = gcd(s, t).
                let g = s.gcd(&t);
                let key = (s / g) * (t / g);
                out.add_term(key, a * b * BigRational::from_integer(BigInt::from(g)));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RadicalScalar {
            type Output = RadicalScalar;
            fn $m(self, rhs: RadicalScalar) -> RadicalScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<BigRational> for RadicalScalar {
    fn from(q: BigRational) -> Self {
        RadicalScalar::from_rational(q)
    }
}

impl fmt::Display for RadicalScalar {
    /// `1 - (1/3)*sqrt(3)`, rational part first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&s, q)) in self.terms.iter().enumerate() {
            let mag = q.abs();
            match (i == 0, q.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            if s == 1 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "sqrt({s})")?;
            } else if mag.is_integer() {
                write!(f, "{mag}*sqrt({s})")?;
            } else {
                write!(f, "({mag})*sqrt({s})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalScalar({self})")
    }
}

/// Dense square matrix of radical scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RadicalMatrix {
    dim: usize,
    entries: Vec<RadicalScalar>,
}

impl RadicalMatrix {
    pub fn new(dim: usize, entries: Vec<RadicalScalar>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        RadicalMatrix { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        RadicalMatrix { dim, entries: vec![RadicalScalar::zero(); dim * dim] }
    }

    pub fn from_rational(m: &crate::exact::ExactMatrix) -> Self {
        RadicalMatrix {
            dim: m.dim(),
            entries: m.entries().iter().cloned().map(RadicalScalar::from_rational).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RadicalScalar {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[RadicalScalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RadicalScalar::is_zero)
    }

    pub fn add_scaled(&mut self, other: &RadicalMatrix, c: &RadicalScalar) {
        assert_eq!(self.dim, other.dim);
        if c.is_zero() {
            return;
        }
        for (x, y) in self.entries.iter_mut().zip(&other.entries) {
            if !y.is_zero() {
                *x = &*x + &(c * y);
            }
        }
    }
}
