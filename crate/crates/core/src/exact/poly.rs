//! Dense univariate polynomials over exact coefficient rings.
//!
//! Coefficients are stored lowest degree first. The vector is empty for the
//! zero polynomial and otherwise ends in a nonzero coefficient.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact coefficient ring: big integers or big rationals.
pub trait Coeff:
    Clone + PartialEq + Zero + One + Neg<Output = Self> + Signed + fmt::Debug + fmt::Display
{
    /// `self / other` when the quotient exists in the ring.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
}

impl Coeff for BigInt {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl Coeff for BigRational {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRational>;

impl<T: Coeff> Polynomial<T> {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn x() -> Self {
        Polynomial { coeffs: vec![T::zero(), T::one()] }
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x - root`.
    pub fn linear_root(root: T) -> Self {
        Polynomial { coeffs: vec![-root, T::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Long division. Fails with `InexactDivision` if a leading coefficient
    /// does not divide in the ring, and `DivisionByZero` for a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let top = rem[i + d].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.exact_div(lead).ok_or(Error::InexactDivision)?;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * c.clone();
            }
            quot[i] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of an exact division; `InexactDivision` on a nonzero remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Multiplicity of `root` as a root (zero polynomial reports 0).
    pub fn root_multiplicity(&self, root: &T) -> usize {
        if self.is_zero() {
            return 0;
        }
        let factor = Self::linear_root(root.clone());
        let mut p = self.clone();
        let mut m = 0;
        while let Ok(q) = p.div_exact(&factor) {
            p = q;
            m += 1;
        }
        m
    }

    /// `p(x) -> p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// If only even powers appear, returns `psi` with `self(x) = psi(x^2)`.
    pub fn even_part_in_square(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs.iter().step_by(2).cloned().collect()))
    }
}

impl IntPolynomial {
    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::from_coeffs(self.coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    /// Content-free version with positive leading coefficient.
    pub fn primitive(&self) -> IntPolynomial {
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return self.clone();
        }
        let g = if self.leading().unwrap().is_negative() { -g } else { g };
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c / &g).collect())
    }
}

impl RatPolynomial {
    /// `Some` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::from_coeffs)
    }

    /// Scales by the lcm of denominators, then removes content; leading
    /// coefficient positive.
    pub fn primitive_integer(&self) -> IntPolynomial {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }

    pub fn monic(&self) -> RatPolynomial {
        match self.leading() {
            Some(l) => self.scale(&(BigRational::one() / l)),
            None => self.clone(),
        }
    }
}

impl<T: Coeff> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl<T: Coeff> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coeff> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let text = mag.to_string();
            if deg == 0 {
                write!(f, "{text}")?;
                continue;
            }
            if !mag.is_one() {
                if text.contains('/') {
                    write!(f, "({text})")?;
                } else {
                    write!(f, "{text}")?;
                }
            }
            match deg {
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Parses `x^3 - 5x^2 + 6x - 1`, `(4/3)x`, `3*x^2`, or a comma-separated
/// coefficient list lowest degree first (`-1,6,-5,1`).
pub fn parse_rat_polynomial(text: &str) -> Result<RatPolynomial> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::MalformedInput("empty polynomial".into()));
    }
    let bad = |msg: &str| Error::MalformedInput(format!("polynomial {text:?}: {msg}"));
    let parse_q = |t: &str| -> Result<BigRational> {
        let t = t.trim_start_matches('(').trim_end_matches(')');
        match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
                let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Ok(BigRational::new(n, d))
            }
            None => t.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad("bad coefficient")),
        }
    };
    if !s.contains('x') {
        let coeffs = s.split(',').map(parse_q).collect::<Result<Vec<_>>>()?;
        return Ok(RatPolynomial::from_coeffs(coeffs));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut depth = 0;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if (ch == '+' || ch == '-') && depth == 0 {
            if !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else if ch == '-' && !terms.is_empty() {
                return Err(bad("doubled sign"));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(bad("dangling sign"));
    }
    terms.push((negative, current));
    let mut out = RatPolynomial::zero();
    for (negative, term) in terms {
        let (coef, degree) = match term.find('x') {
            None => (parse_q(&term)?, 0usize),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let coef = if head.is_empty() { BigRational::one() } else { parse_q(head)? };
                let tail = &term[pos + 1..];
                let degree = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|e| e.parse().ok())
                        .ok_or_else(|| bad("bad exponent"))?
                };
                (coef, degree)
            }
        };
        let coef = if negative { -coef } else { coef };
        out = &out + &RatPolynomial::monomial(coef, degree);
    }
    Ok(out)
}
