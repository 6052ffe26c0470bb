//! Dense square matrices over the rationals with an all-integer fast path.

use super::linear::{self, Rows};
use super::poly::{IntPolynomial, RatPolynomial};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BigRational>,
    integral: bool,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ExactMatrix {
    /// Row-major entries; panics if `entries.len() != dim * dim`.
    pub fn new(dim: usize, entries: Vec<BigRational>) -> ExactMatrix {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        let integral = entries.iter().all(BigRational::is_integer);
        ExactMatrix { dim, entries, integral }
    }

    pub fn from_int_entries(dim: usize, entries: Vec<BigInt>) -> ExactMatrix {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        ExactMatrix {
            dim,
            entries: entries.into_iter().map(BigRational::from_integer).collect(),
            integral: true,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> ExactMatrix {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), dim, "matrix must be square");
                r.iter().map(|&v| int(v))
            })
            .collect();
        ExactMatrix { dim, entries, integral: true }
    }

    pub fn zero(dim: usize) -> ExactMatrix {
        ExactMatrix { dim, entries: vec![BigRational::zero(); dim * dim], integral: true }
    }

    pub fn identity(dim: usize) -> ExactMatrix {
        Self::scalar(dim, BigRational::one())
    }

    pub fn scalar(dim: usize, c: BigRational) -> ExactMatrix {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m.integral = c.is_integer();
        m
    }

    pub fn diagonal(values: &[BigRational]) -> ExactMatrix {
        let dim = values.len();
        let mut m = Self::zero(dim);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * dim + i] = v.clone();
        }
        m.integral = values.iter().all(BigRational::is_integer);
        m
    }

    /// The all-ones matrix.
    pub fn ones(dim: usize) -> ExactMatrix {
        ExactMatrix { dim, entries: vec![BigRational::one(); dim * dim], integral: true }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_integral(&self) -> bool {
        self.integral
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn int_entries(&self) -> Option<Vec<BigInt>> {
        self.integral.then(|| self.entries.iter().map(|e| e.to_integer()).collect())
    }

    pub fn scale(&self, c: &BigRational) -> ExactMatrix {
        ExactMatrix::new(self.dim, self.entries.iter().map(|e| e * c).collect())
    }

    pub fn trace(&self) -> BigRational {
        (0..self.dim).fold(BigRational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn transpose(&self) -> ExactMatrix {
        let n = self.dim;
        let entries = (0..n * n).map(|k| self.entries[(k % n) * n + k / n].clone()).collect();
        ExactMatrix { dim: n, entries, integral: self.integral }
    }

    pub fn pow(&self, e: u32) -> ExactMatrix {
        let mut result = Self::identity(self.dim);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `p(self)` by Horner's rule.
    pub fn eval_poly(&self, p: &RatPolynomial) -> ExactMatrix {
        p.coeffs().iter().rev().fold(Self::zero(self.dim), |acc, c| {
            &(&acc * self) + &Self::scalar(self.dim, c.clone())
        })
    }

    pub fn eval_int_poly(&self, p: &IntPolynomial) -> ExactMatrix {
        self.eval_poly(&p.to_rational())
    }

    /// Deletes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> ExactMatrix {
        let n = self.dim;
        let entries = (0..n)
            .filter(|&i| i != r)
            .flat_map(|i| (0..n).filter(move |&j| j != c).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        ExactMatrix { dim: n.saturating_sub(1), entries, integral: self.integral }
    }

    pub fn rows(&self) -> Rows {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(<[_]>::to_vec).collect()
    }

    pub fn rank(&self) -> usize {
        linear::rank(&self.rows(), self.dim)
    }

    /// Exact determinant: fraction-free Bareiss elimination for integer
    /// matrices, rational Gaussian elimination otherwise.
    pub fn determinant(&self) -> BigRational {
        match self.int_entries() {
            Some(ints) => BigRational::from_integer(bareiss_determinant(self.dim, ints)),
            None => self.determinant_gauss(),
        }
    }

    /// Determinant by rational Gaussian elimination with row pivoting.
    pub fn determinant_gauss(&self) -> BigRational {
        let n = self.dim;
        let mut a = self.rows();
        let mut det = BigRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return BigRational::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det *= &pivot;
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let factor = &a[i][c] / &pivot;
                for j in c..n {
                    let t = &factor * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
        det
    }

    /// `det(xI - self)` by the Faddeev–LeVerrier recurrence. Monic of
    /// degree `dim`; integer matrices are handled in integer arithmetic.
    pub fn charpoly(&self) -> RatPolynomial {
        match self.int_entries() {
            Some(ints) => faddeev_leverrier_int(self.dim, &ints).to_rational(),
            None => self.faddeev_leverrier_rational(),
        }
    }

    /// Characteristic polynomial of an integer matrix with integer coefficients.
    pub fn charpoly_int(&self) -> Option<IntPolynomial> {
        self.int_entries().map(|ints| faddeev_leverrier_int(self.dim, &ints))
    }

    fn faddeev_leverrier_rational(&self) -> RatPolynomial {
        let n = self.dim;
        // coeffs[k] is the coefficient of x^k.
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = Self::zero(n);
        for k in 1..=n {
            m = &(self * &m) + &Self::scalar(n, coeffs[n + 1 - k].clone());
            let t = (self * &m).trace();
            coeffs[n - k] = -t / int(k as i64);
        }
        RatPolynomial::from_coeffs(coeffs)
    }

    /// Least-degree monic annihilating polynomial, found as the first
    /// linear dependence among the vectorized powers `I, M, M^2, ...`.
    pub fn minpoly(&self) -> RatPolynomial {
        let n = self.dim;
        if n == 0 {
            return RatPolynomial::one();
        }
        // Each stored row: vectorized power reduced against earlier rows, with
        // the combination of original powers it equals.
        let mut basis: Vec<(usize, Vec<BigRational>, Vec<BigRational>)> = Vec::new();
        let mut power = Self::identity(n);
        for k in 0..=n {
            let mut v = power.entries.clone();
            let mut combo = vec![BigRational::zero(); k + 1];
            combo[k] = BigRational::one();
            for (pivot, row, row_combo) in &basis {
                if v[*pivot].is_zero() {
                    continue;
                }
                let f = v[*pivot].clone() / &row[*pivot];
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
                for (x, r) in combo.iter_mut().zip(row_combo) {
                    *x -= &f * r;
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return RatPolynomial::from_coeffs(combo),
                Some(pivot) => basis.push((pivot, v, combo)),
            }
            power = &power * self;
        }
        unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by dim")
    }
}

fn faddeev_leverrier_int(n: usize, a: &[BigInt]) -> IntPolynomial {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![BigInt::zero(); n * n];
    for k in 1..=n {
        let mut next = int_mul(n, a, &m);
        for i in 0..n {
            next[i * n + i] += &coeffs[n + 1 - k];
        }
        m = next;
        // trace(A M) without forming the product.
        let mut t = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                let x = &a[i * n + j];
                if !x.is_zero() {
                    t += x * &m[j * n + i];
                }
            }
        }
        let (q, r) = num_integer::Integer::div_rem(&t, &BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace must be divisible by k");
        coeffs[n - k] = -q;
    }
    IntPolynomial::from_coeffs(coeffs)
}

fn int_mul(n: usize, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            let x = &a[i * n + k];
            if x.is_zero() {
                continue;
            }
            let row = &b[k * n..(k + 1) * n];
            let dst = &mut out[i * n..(i + 1) * n];
            if x.is_one() {
                for (d, y) in dst.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *d += y;
                    }
                }
            } else {
                for (d, y) in dst.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *d += x * y;
                    }
                }
            }
        }
    }
    out
}

/// Fraction-free determinant; every division is exact.
pub fn bareiss_determinant(n: usize, mut a: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let v = &pivot * &a[i * n + j] - &lead * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    sign * &a[n * n - 1]
}

/// Rank of an arbitrary `rows x cols` rational matrix.
pub fn rank_of(rows: &Rows, cols: usize) -> usize {
    linear::rank(rows, cols)
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim);
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
            integral: self.integral && rhs.integral,
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim);
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
            integral: self.integral && rhs.integral,
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| -a).collect(),
            integral: self.integral,
        }
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        if let (Some(a), Some(b)) = (self.int_entries(), rhs.int_entries()) {
            return ExactMatrix::from_int_entries(n, int_mul(n, &a, &b));
        }
        let mut out = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = rhs.get(k, j);
                    if !y.is_zero() {
                        out[i * n + j] += x * y;
                    }
                }
            }
        }
        ExactMatrix::new(n, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ExactMatrix {
            type Output = ExactMatrix;
            fn $m(self, rhs: ExactMatrix) -> ExactMatrix {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.dim.max(1)).take(self.dim) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMatrix {}x{}\n{self}", self.dim, self.dim)
    }
}

/// Null-space basis of a linear system written as a list of matrices:
/// all coefficient vectors `c` with `sum c_i * columns[i] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    vectors: Vec<Vec<BigRational>>,
    len: usize,
}

impl KernelBasis {
    pub fn vectors(&self) -> &[Vec<BigRational>] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Whether `v` lies in the span of the basis.
    pub fn contains(&self, v: &[BigRational]) -> bool {
        if v.len() != self.len {
            return false;
        }
        let mut rows: Rows = self.vectors.clone();
        let before = linear::rank(&rows, self.len);
        rows.push(v.to_vec());
        linear::rank(&rows, self.len) == before
    }
}

/// Flattens each matrix to a `dim^2` vector and returns a basis of the
/// coefficient vectors that combine them to zero.
pub fn solve_kernel(columns: &[ExactMatrix]) -> Result<KernelBasis> {
    let system = column_system(columns)?;
    Ok(KernelBasis { vectors: linear::null_space(&system, columns.len()), len: columns.len() })
}

/// The `dim^2 x k` system whose columns are the flattened matrices.
pub fn column_system(columns: &[ExactMatrix]) -> Result<Rows> {
    let Some(first) = columns.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    if let Some(bad) = columns.iter().find(|m| m.dim() != dim) {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix among {dim}x{dim}", bad.dim(), bad.dim())));
    }
    Ok((0..dim * dim)
        .map(|e| columns.iter().map(|m| m.entries[e].clone()).collect())
        .collect())
}
