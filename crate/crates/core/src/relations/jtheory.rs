//! Polynomials `f` with `f(A) = J`, which exist exactly for connected
//! regular graphs, where the minimal one is `m_A(x) / (x - k)`.

use crate::error::{Error, Result};
use crate::exact::linear::solve_many;
use crate::exact::{ExactMatrix, IntPolynomial, RatPolynomial};
use crate::graph::{classify, Graph, Kind};
use crate::spectral::build_matrices;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JReport {
    pub k: usize,
    pub minpoly: IntPolynomial,
    /// `m'_A = m_A / (x - k)`.
    pub m_prime: IntPolynomial,
    /// `m'_A(A) = c J`.
    pub c: BigRational,
    pub distinct_eigenvalue_count: usize,
    /// `(n, k, lambda, mu)` when there are exactly three distinct eigenvalues.
    pub srg_params: Option<(usize, usize, usize, usize)>,
}

pub fn j_relation(g: &Graph) -> Result<JReport> {
    let k = match classify(g).kind {
        Kind::Regular(k) => k,
        _ => return Err(Error::NotRegular),
    };
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    let a = build_matrices(g).a;
    let minpoly = a.minpoly().to_integer().expect("adjacency minpoly is monic over the integers");
    let m_prime = minpoly.div_exact(&IntPolynomial::linear_root(BigInt::from(k)))?;
    let value = a.eval_int_poly(&m_prime);
    let c = value.get(0, 0).clone();
    if c.is_zero() || value != ExactMatrix::ones(n).scale(&c) {
        return Err(Error::PrereqFailed("m'_A(A) is not a nonzero multiple of J".into()));
    }
    let count = minpoly.degree().unwrap_or(0);
    let srg_params = if count == 3 { srg_parameters(g, &a, k) } else { None };
    Ok(JReport { k, minpoly, m_prime, c, distinct_eigenvalue_count: count, srg_params })
}

/// Reads `lambda` off an edge and `mu` off a non-edge of `A^2`, then checks
/// `A^2 = kI + lambda A + mu (J - I - A)` exactly.
fn srg_parameters(g: &Graph, a: &ExactMatrix, k: usize) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let a2 = a * a;
    let (u, v) = g.edges().first().copied()?;
    let lambda = a2.get(u, v).to_integer().to_usize()?;
    let (x, y) = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !g.has_edge(i, j))?;
    let mu = a2.get(x, y).to_integer().to_usize()?;
    let r = |v: usize| BigRational::from_integer(BigInt::from(v));
    let identity = ExactMatrix::identity(n);
    let complement = &(&ExactMatrix::ones(n) - &identity) - a;
    let expected = &(&identity.scale(&r(k)) + &a.scale(&r(lambda))) + &complement.scale(&r(mu));
    (a2 == expected).then_some((n, k, lambda, mu))
}

/// Looks for `f` of degree at most `degree` with `f(A) = J`.
pub fn solve_polynomial_for_j(g: &Graph, degree: usize) -> Option<RatPolynomial> {
    let n = g.n();
    let a = build_matrices(g).a;
    let mut powers = vec![ExactMatrix::identity(n)];
    for _ in 0..degree {
        let next = powers.last().unwrap() * &a;
        powers.push(next);
    }
    let rows: Vec<Vec<BigRational>> =
        (0..n * n).map(|e| powers.iter().map(|m| m.entries()[e].clone()).collect()).collect();
    let j = ExactMatrix::ones(n).entries().to_vec();
    solve_many(&rows, powers.len(), &[j]).pop().flatten().map(RatPolynomial::from_coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::graph::make_named;

    #[test]
    fn complete_graph() {
        let report = j_relation(&make_named("complete", &[4]).unwrap()).unwrap();
        assert_eq!(report.m_prime, IntPolynomial::from_i64s(&[1, 1]));
        assert_eq!(report.c, rat(1));
        assert_eq!(report.distinct_eigenvalue_count, 2);
        assert_eq!(report.srg_params, None);
    }

    #[test]
    fn petersen_is_strongly_regular() {
        let report = j_relation(&make_named("petersen", &[]).unwrap()).unwrap();
        assert_eq!(report.m_prime, IntPolynomial::from_i64s(&[-2, 1, 1]));
        assert_eq!(report.c, rat(1));
        assert_eq!(report.srg_params, Some((10, 3, 0, 1)));
    }

    #[test]
    fn errors() {
        assert_eq!(j_relation(&make_named("path", &[3]).unwrap()), Err(Error::NotRegular));
        let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(j_relation(&two_triangles), Err(Error::NotConnected));
    }

    #[test]
    fn direct_solve() {
        let c5 = make_named("cycle", &[5]).unwrap();
        let report = j_relation(&c5).unwrap();
        let deg = report.m_prime.degree().unwrap();
        assert!(solve_polynomial_for_j(&c5, deg - 1).is_none());
        let f = solve_polynomial_for_j(&c5, deg).unwrap();
        assert_eq!(f.primitive_integer(), report.m_prime.primitive());
        assert!(solve_polynomial_for_j(&make_named("path", &[4]).unwrap(), 3).is_none());
    }
}
