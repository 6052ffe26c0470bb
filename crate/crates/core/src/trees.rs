//! Spanning-tree counts: the Matrix-Tree determinant, the biregular spectral
//! formula, and closed forms for the layer graphs `C_{n,k}` and `C_{n,k}(q)`,
//! together with the q-integer helpers they need.

use crate::error::{Error, Result};
use crate::exact::{bareiss_determinant, IntPolynomial};
use crate::graph::families::is_prime;
use crate::graph::Graph;
use crate::spectral::{build_matrices, transport};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Determinant of the Laplacian with row and column 0 removed.
pub fn spanning_trees_matrixtree(g: &Graph) -> BigInt {
    let n = g.n();
    if n == 0 {
        return BigInt::zero();
    }
    let minor = build_matrices(g).l.minor(0, 0);
    let ints = minor.int_entries().expect("Laplacian is integral");
    bareiss_determinant(n - 1, ints)
}

/// `|Q_G(x) / x|` at `x = 0`, divided by the number of vertices, with `Q_G`
/// obtained from the adjacency spectrum by the biregular transport.
pub fn spanning_trees_biregular_spectral(g: &Graph) -> Result<BigInt> {
    let t = transport(g)?;
    let reduced = t.q_charpoly.div_exact(&IntPolynomial::x())?;
    let value = reduced.coeff(0).abs();
    exact_div(&value, &BigInt::from(t.n1 + t.n2))
}

fn exact_div(a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (quot, rem) = a.div_rem(b);
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(Error::InexactDivision)
    }
}

fn exponent(e: &BigInt) -> Result<u32> {
    e.to_u32().ok_or_else(|| Error::BadParams(format!("exponent {e} out of range")))
}

fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = k as u64;
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn check_layer(n: u64, k: u64) -> Result<()> {
    if k < 1 || 2 * k > n {
        return Err(Error::BadParams(format!("need 1 <= k <= n/2, got n={n}, k={k}")));
    }
    Ok(())
}

pub fn trees_cube_layer(n: u64, k: u64) -> Result<BigInt> {
    check_layer(n, k)?;
    let k_i = k as i64;
    let mult = |i: i64| binomial(n, k_i - i) - binomial(n, k_i - i - 1);
    let mut numer = BigInt::from(n + 1) * BigInt::from(k).pow(exponent(&mult(0))?);
    for i in 1..k {
        let base = BigInt::from(k - i) * BigInt::from(i + n - k + 1);
        numer *= base.pow(exponent(&mult(i as i64))?);
    }
    exact_div(&numer, &(binomial(n, k_i) + binomial(n, k_i - 1)))
}

fn check_q(q: u64) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::BadParams(format!("q must be prime, got {q}")));
    }
    Ok(())
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: u64, q: u64) -> Result<BigInt> {
    check_q(q)?;
    Ok(q_int_unchecked(n, q))
}

fn q_int_unchecked(n: u64, q: u64) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = BigInt::zero();
    let mut power = BigInt::one();
    for _ in 0..n {
        acc += &power;
        power *= &q;
    }
    acc
}

/// Gaussian binomial coefficient; zero when `k < 0` or `k > n`.
pub fn gauss_binomial(n: u64, k: i64, q: u64) -> Result<BigInt> {
    check_q(q)?;
    Ok(gauss_unchecked(n, k, q))
}

fn gauss_unchecked(n: u64, k: i64, q: u64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let mut numer = BigInt::one();
    let mut denom = BigInt::one();
    for j in 0..k as u64 {
        numer *= q.pow((n - j) as u32) - 1;
        denom *= q.pow((j + 1) as u32) - 1;
    }
    let (quot, rem) = numer.div_rem(&denom);
    debug_assert!(rem.is_zero());
    quot
}

/// `gamma_i = [i] (q^{k-i} [n-2k] + q^{n-k-i} [i+1])`, the closed form of
/// `r_{k-1} + ... + r_{k-i}`.
pub fn gamma_i(n: u64, k: u64, q: u64, i: u64) -> Result<BigInt> {
    check_q(q)?;
    check_layer(n, k)?;
    if i < 1 || i > k {
        return Err(Error::BadParams(format!("need 1 <= i <= k, got i={i}")));
    }
    let qb = BigInt::from(q);
    let left = qb.pow((k - i) as u32) * q_int_unchecked(n - 2 * k, q);
    let right = qb.pow((n - k - i) as u32) * q_int_unchecked(i + 1, q);
    Ok(q_int_unchecked(i, q) * (left + right))
}

/// `r_i = [n-i] - [i]`.
pub fn r_i(n: u64, i: u64, q: u64) -> Result<BigInt> {
    check_q(q)?;
    if 2 * i > n {
        return Err(Error::BadParams(format!("need 2i <= n, got n={n}, i={i}")));
    }
    Ok(q_int_unchecked(n - i, q) - q_int_unchecked(i, q))
}

pub fn trees_subspace_layer(n: u64, k: u64, q: u64) -> Result<BigInt> {
    check_q(q)?;
    check_layer(n, k)?;
    let k_i = k as i64;
    let gb = |j: i64| gauss_unchecked(n, j, q);
    let qk = q_int_unchecked(k, q);
    let qnk = q_int_unchecked(n - k + 1, q);
    let d1d2 = &qk * &qnk;
    let mut numer = (&qk + &qnk) * qk.pow(exponent(&(gb(k_i) - gb(k_i - 1)))?);
    for i in 1..k {
        let base = &d1d2 - gamma_i(n, k, q, i)?;
        numer *= base.pow(exponent(&(gb(k_i - i as i64) - gb(k_i - i as i64 - 1)))?);
    }
    exact_div(&numer, &(gb(k_i) + gb(k_i - 1)))
}
