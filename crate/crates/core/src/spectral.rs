//! The matrices `A, D, Q, L` and the normalized Laplacian of a graph, their
//! characteristic polynomials, and the biregular identities that tie them
//! together.

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, IntPolynomial, RatPolynomial};
use crate::graph::{classify, Graph, Kind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug)]
pub struct MatrixBundle {
    pub a: ExactMatrix,
    pub d: ExactMatrix,
    pub q: ExactMatrix,
    pub l: ExactMatrix,
    degrees: Vec<usize>,
}

pub fn build_matrices(g: &Graph) -> MatrixBundle {
    let n = g.n();
    let mut a = vec![BigInt::zero(); n * n];
    for (u, v) in g.edges() {
        a[u * n + v] = BigInt::one();
        a[v * n + u] = BigInt::one();
    }
    let a = ExactMatrix::from_int_entries(n, a);
    let d = ExactMatrix::diagonal(
        &g.degrees().iter().map(|&k| BigRational::from_integer(k.into())).collect::<Vec<_>>(),
    );
    MatrixBundle { q: &d + &a, l: &d - &a, a, d, degrees: g.degrees().to_vec() }
}

impl MatrixBundle {
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    fn require_no_isolated(&self) -> Result<()> {
        match self.degrees.iter().position(|&d| d == 0) {
            Some(v) => Err(Error::IsolatedVertex(v)),
            None => Ok(()),
        }
    }

    /// The random-walk Laplacian `D^{-1} L`, similar to the normalized
    /// Laplacian via `NL = D^{1/2} (D^{-1} L) D^{-1/2}`. It is the rational
    /// stand-in for `NL` wherever only similarity-invariant data is needed.
    pub fn random_walk(&self) -> Result<ExactMatrix> {
        self.require_no_isolated()?;
        let n = self.degrees.len();
        let entries = (0..n)
            .flat_map(|i| {
                let inv = BigRational::new(BigInt::one(), BigInt::from(self.degrees[i]));
                (0..n).map(move |j| (i, j, inv.clone()))
            })
            .map(|(i, j, inv)| self.l.get(i, j) * inv)
            .collect();
        Ok(ExactMatrix::new(n, entries))
    }
}

/// `det(xI - NL)` computed as `det(xD - L) / det(D)`. The numerator is
/// interpolated from integer determinants at `x = 0, 1, ..., n`.
pub fn charpoly_nl(g: &Graph) -> Result<RatPolynomial> {
    if let Some(v) = g.first_isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let m = build_matrices(g);
    let n = g.n();
    let points: Vec<(BigRational, BigRational)> = (0..=n)
        .map(|t| {
            let t_d = m.d.scale(&BigRational::from_integer(t.into()));
            (BigRational::from_integer(t.into()), (&t_d - &m.l).determinant())
        })
        .collect();
    let numer = lagrange(&points);
    let det_d: BigInt = m.degrees.iter().map(|&d| BigInt::from(d)).product();
    Ok(numer.scale(&BigRational::new(BigInt::one(), det_d)))
}

fn lagrange(points: &[(BigRational, BigRational)]) -> RatPolynomial {
    let mut out = RatPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RatPolynomial::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let factor = RatPolynomial::linear_root(xj.clone());
                basis = (&basis * &factor).scale(&(BigRational::one() / (xi - xj)));
            }
        }
        out = &out + &basis;
    }
    out
}

/// Degree data for the identities: `(d1, d2, part1, part2)`, where regular
/// graphs use `d1 = d2 = d` and, if bipartite, their 2-coloring.
struct Biregular {
    d1: usize,
    d2: usize,
    part1: Vec<usize>,
    part2: Vec<usize>,
}

fn biregular_data(g: &Graph, need_bipartite: bool) -> Result<Biregular> {
    let c = classify(g);
    match c.kind {
        Kind::Biregular { d1, d2, part1, part2 } => Ok(Biregular { d1, d2, part1, part2 }),
        Kind::Regular(d) => {
            let coloring = c.bipartition;
            if need_bipartite && coloring.is_none() {
                return Err(Error::NotBiregular);
            }
            let (part1, part2) = match coloring {
                Some(col) => (0..g.n()).partition(|&v| col[v] == 0),
                None => ((0..g.n()).collect(), Vec::new()),
            };
            let (part1, part2) = if part1.len() >= part2.len() { (part1, part2) } else { (part2, part1) };
            Ok(Biregular { d1: d, d2: d, part1, part2 })
        }
        Kind::Neither => Err(Error::NotBiregular),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub d1: usize,
    pub d2: usize,
    /// `A^2 = (Q - d1 I)(Q - d2 I)`.
    pub q_identity: bool,
    /// `A^2 = (L - d1 I)(L - d2 I)`.
    pub l_identity: bool,
    /// `NL = I - A / sqrt(d1 d2)`.
    pub nl_identity: bool,
}

impl IdentityReport {
    pub fn all(&self) -> bool {
        self.q_identity && self.l_identity && self.nl_identity
    }
}

pub fn verify_biregular_identity(g: &Graph) -> Result<IdentityReport> {
    let b = biregular_data(g, false)?;
    let m = build_matrices(g);
    let n = g.n();
    let shift = |k: usize| ExactMatrix::scalar(n, BigRational::from_integer(k.into()));
    let a2 = &m.a * &m.a;
    let q_identity = a2 == &(&m.q - &shift(b.d1)) * &(&m.q - &shift(b.d2));
    let l_identity = a2 == &(&m.l - &shift(b.d1)) * &(&m.l - &shift(b.d2));
    // NL has unit diagonal and off-diagonal entries -1/sqrt(d_u d_v) on
    // edges, so it equals I - A/sqrt(d1 d2) exactly when no vertex is
    // isolated and every edge has d_u d_v = d1 d2.
    let deg = g.degrees();
    let nl_identity = g.first_isolated_vertex().is_none()
        && g.edges().iter().all(|&(u, v)| deg[u] * deg[v] == b.d1 * b.d2);
    Ok(IdentityReport { d1: b.d1, d2: b.d2, q_identity, l_identity, nl_identity })
}

/// `charpoly(Q)` from `charpoly(A)` alone: strip `x^{n1-n2}`, read the
/// quotient as `psi(x^2)`, and return `(x-d1)^{n1-n2} psi((x-d1)(x-d2))`.
pub fn q_charpoly_from_a(g: &Graph) -> Result<IntPolynomial> {
    let t = transport(g)?;
    Ok(t.q_charpoly)
}

/// Intermediate data of the A-to-Q transport, exposed for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transport {
    pub d1: usize,
    pub d2: usize,
    pub n1: usize,
    pub n2: usize,
    pub a_charpoly: IntPolynomial,
    pub psi: IntPolynomial,
    pub q_charpoly: IntPolynomial,
}

pub fn transport(g: &Graph) -> Result<Transport> {
    let b = biregular_data(g, true)?;
    let (n1, n2) = (b.part1.len(), b.part2.len());
    let m = build_matrices(g);
    let phi = m.a.charpoly_int().expect("adjacency matrices are integral");
    let gap = n1 - n2;
    let quotient = phi.div_exact(&IntPolynomial::monomial(BigInt::one(), gap))?;
    let psi = quotient.even_part_in_square().ok_or(Error::InternalParityError(gap))?;
    let lin = |d: usize| IntPolynomial::linear_root(BigInt::from(d));
    let inner = &lin(b.d1) * &lin(b.d2);
    let q_charpoly = &lin(b.d1).pow(gap as u32) * &psi.compose(&inner);
    Ok(Transport { d1: b.d1, d2: b.d2, n1, n2, a_charpoly: phi, psi, q_charpoly })
}

/// Multiplicities of `d1` and `d2` as eigenvalues of `Q`, read off the rank
/// of the `n1 x n2` biadjacency block.
pub fn zero_multiplicities(g: &Graph) -> Result<(usize, usize)> {
    let b = biregular_data(g, true)?;
    let entries: Vec<BigRational> = b
        .part1
        .iter()
        .flat_map(|&u| {
            b.part2.iter().map(move |&v| if g.has_edge(u, v) { BigRational::one() } else { BigRational::zero() })
        })
        .collect();
    let rows: Vec<Vec<BigRational>> = entries.chunks(b.part2.len().max(1)).map(<[_]>::to_vec).collect();
    let r = if b.part2.is_empty() { 0 } else { crate::exact::rank_of(&rows, b.part2.len()) };
    Ok((b.part1.len() - r, b.part2.len() - r))
}
