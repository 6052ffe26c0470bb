//! Polynomial relations between graph matrices: `f(X) = g(Y)`, `X^r = f(Y)`,
//! the `f(A) = J` theory for regular graphs, and a comparator against the
//! existence table predicted for regular, biregular and other graphs.
//!
//! The normalized Laplacian is handled through the random-walk Laplacian
//! `R = D^{-1} L`, using `NL^j = D^{1/2} R^j D^{-1/2}`. A polynomial in `NL`
//! is therefore stored as a rational matrix plus a flag saying that it is
//! conjugated by `D^{1/2}`; radicals appear only when such a matrix has to
//! be compared against an unconjugated one.

mod jtheory;
mod power;
mod theorem;

pub use jtheory::{j_relation, solve_polynomial_for_j, JReport};
pub use power::{power_relation_exists, verify_power_relation, PowerRelation};
pub use theorem::{classify_vs_theorem, predicted, PairOutcome, TheoremComparison};

use crate::error::{Error, Result};
use crate::exact::{solve_kernel, ExactMatrix, IntPolynomial, KernelBasis, RatPolynomial};
use crate::graph::Graph;
use crate::radical::{sqfree_decompose, RadicalMatrix, RadicalScalar};
use crate::spectral::build_matrices;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixId {
    A,
    Q,
    L,
    NL,
}

impl MatrixId {
    pub const ALL: [MatrixId; 4] = [MatrixId::A, MatrixId::Q, MatrixId::L, MatrixId::NL];

    pub fn name(self) -> &'static str {
        match self {
            MatrixId::A => "A",
            MatrixId::Q => "Q",
            MatrixId::L => "L",
            MatrixId::NL => "NL",
        }
    }
}

impl fmt::Display for MatrixId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MatrixId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MatrixId::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadParams(format!("unknown matrix {s:?} (expected A, Q, L or NL)")))
    }
}

/// A matrix, possibly standing for `D^{1/2} M D^{-1/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Side {
    pub m: ExactMatrix,
    pub conjugated: bool,
}

/// The four matrices of a graph with their minimal polynomials, computed
/// once and shared by every relation query on that graph.
#[derive(Clone, Debug)]
pub struct GraphMatrices {
    degrees: Vec<usize>,
    base: Vec<Option<ExactMatrix>>,
    minpolys: Vec<Option<RatPolynomial>>,
}

impl GraphMatrices {
    pub fn new(g: &Graph) -> GraphMatrices {
        let bundle = build_matrices(g);
        let rw = bundle.random_walk().ok();
        let base = vec![Some(bundle.a.clone()), Some(bundle.q.clone()), Some(bundle.l.clone()), rw];
        let minpolys = base.iter().map(|m| m.as_ref().map(ExactMatrix::minpoly)).collect();
        GraphMatrices { degrees: g.degrees().to_vec(), base, minpolys }
    }

    fn slot(id: MatrixId) -> usize {
        id as usize
    }

    fn isolated(&self) -> Error {
        Error::IsolatedVertex(self.degrees.iter().position(|&d| d == 0).unwrap_or(0))
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// The rational matrix behind `id`; for `NL` this is `R = D^{-1} L`.
    pub fn rational(&self, id: MatrixId) -> Result<&ExactMatrix> {
        self.base[Self::slot(id)].as_ref().ok_or_else(|| self.isolated())
    }

    /// Minimal polynomial (for `NL`, equal to that of `R`).
    pub fn minpoly(&self, id: MatrixId) -> Result<&RatPolynomial> {
        self.minpolys[Self::slot(id)].as_ref().ok_or_else(|| self.isolated())
    }

    pub fn minpoly_degree(&self, id: MatrixId) -> Result<usize> {
        Ok(self.minpoly(id)?.degree().unwrap_or(0))
    }

    pub(crate) fn side(&self, id: MatrixId, m: ExactMatrix) -> Side {
        Side { m, conjugated: id == MatrixId::NL }
    }

    /// `I, M, ..., M^{count-1}` for the rational matrix behind `id`.
    pub(crate) fn powers(&self, id: MatrixId, count: usize) -> Result<Vec<ExactMatrix>> {
        let m = self.rational(id)?;
        let mut out = Vec::with_capacity(count);
        let mut cur = ExactMatrix::identity(self.dim());
        for i in 0..count {
            if i > 0 {
                cur = &cur * m;
            }
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub(crate) fn eval(&self, id: MatrixId, p: &RatPolynomial) -> Result<Side> {
        Ok(self.side(id, self.rational(id)?.eval_poly(p)))
    }

    /// Entrywise radical form of a side.
    pub(crate) fn to_radical(&self, side: &Side) -> RadicalMatrix {
        if !side.conjugated {
            return RadicalMatrix::from_rational(&side.m);
        }
        let n = self.dim();
        let entries = (0..n * n)
            .map(|k| {
                let (u, v) = (k / n, k % n);
                let (scale, s) = self.conjugation_factor(u, v, v);
                RadicalScalar::term(side.m.get(u, v) * scale, s)
            })
            .collect();
        RadicalMatrix::new(n, entries)
    }

    /// `sqrt(d_u d_v) / d_w` as `(rational, squarefree)`.
    pub(crate) fn conjugation_factor(&self, u: usize, v: usize, w: usize) -> (BigRational, u64) {
        let (m, s) = sqfree_decompose((self.degrees[u] * self.degrees[v]) as u64);
        (BigRational::new(BigInt::from(m), BigInt::from(self.degrees[w])), s)
    }

    fn sides_equal(&self, a: &Side, b: &Side) -> bool {
        if a.conjugated == b.conjugated {
            a.m == b.m
        } else {
            self.to_radical(a) == self.to_radical(b)
        }
    }
}

/// All relations `f(X) = g(Y)` with `deg f < deg m_X`, `deg g < deg m_Y`.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub x: MatrixId,
    pub y: MatrixId,
    pub minpoly_x: RatPolynomial,
    pub minpoly_y: RatPolynomial,
    /// Normalized basis pairs: `f` has no constant term, the pair has
    /// coprime integer coefficients and `f` has positive leading coefficient.
    pub kernel: Vec<(IntPolynomial, IntPolynomial)>,
    pub nontrivial: bool,
    /// Number of unknowns in the flattened system.
    pub columns: usize,
    pub rank: usize,
    basis: KernelBasis,
}

impl RelationReport {
    /// Whether `f(X) = g(Y)` lies in the span of the kernel, after reducing
    /// `f` and `g` modulo the minimal polynomials.
    pub fn contains(&self, f: &RatPolynomial, g: &RatPolynomial) -> bool {
        let (Ok((_, f)), Ok((_, g))) = (f.div_rem(&self.minpoly_x), g.div_rem(&self.minpoly_y)) else {
            return false;
        };
        let a = self.minpoly_x.degree().unwrap_or(0);
        let b = self.minpoly_y.degree().unwrap_or(0);
        let mut v = vec![BigRational::zero(); a + b.saturating_sub(1)];
        v[0] = f.coeff(0) - g.coeff(0);
        for i in 1..a {
            v[i] = f.coeff(i);
        }
        for j in 1..b {
            v[a + j - 1] = -g.coeff(j);
        }
        self.basis.contains(&v)
    }
}

/// Scales a pair to coprime integers with `f`'s leading coefficient positive
/// (or `g`'s, if `f` vanishes).
fn normalize_pair(f: &RatPolynomial, g: &RatPolynomial) -> (IntPolynomial, IntPolynomial) {
    let len_f = f.coeffs().len();
    let joined = RatPolynomial::from_coeffs(f.coeffs().iter().chain(g.coeffs()).cloned().collect());
    if joined.is_zero() {
        return (IntPolynomial::zero(), IntPolynomial::zero());
    }
    let common = joined.primitive_integer();
    let coeffs: Vec<BigInt> = (0..len_f + g.coeffs().len()).map(|i| common.coeff(i)).collect();
    let (fc, gc) = coeffs.split_at(len_f);
    let (mut fi, mut gi) = (IntPolynomial::from_coeffs(fc.to_vec()), IntPolynomial::from_coeffs(gc.to_vec()));
    let lead = fi.leading().or(gi.leading()).cloned().unwrap_or_else(BigInt::one);
    if lead.is_negative() {
        fi = -&fi;
        gi = -&gi;
    }
    (fi, gi)
}

/// Kernel of the flattened system `{X^i : i < deg m_X} + {Y^j : 1 <= j < deg m_Y}`,
/// with the identity shared between the two sides.
pub fn find_relation(g: &Graph, x: MatrixId, y: MatrixId) -> Result<RelationReport> {
    find_relation_with(&GraphMatrices::new(g), x, y)
}

pub fn find_relation_with(ctx: &GraphMatrices, x: MatrixId, y: MatrixId) -> Result<RelationReport> {
    if x == MatrixId::NL || y == MatrixId::NL {
        return Err(Error::BadParams("find_relation works over A, Q and L".into()));
    }
    let a = ctx.minpoly_degree(x)?;
    let b = ctx.minpoly_degree(y)?;
    let mut columns = ctx.powers(x, a)?;
    columns.extend(ctx.powers(y, b)?.into_iter().skip(1));
    let basis = solve_kernel(&columns)?;
    let kernel = basis
        .vectors()
        .iter()
        .map(|v| {
            let mut fc = v[..a].to_vec();
            let constant = std::mem::replace(&mut fc[0], BigRational::zero());
            let mut gc = vec![-constant];
            gc.extend(v[a..].iter().map(|c| -c.clone()));
            normalize_pair(&RatPolynomial::from_coeffs(fc), &RatPolynomial::from_coeffs(gc))
        })
        .collect::<Vec<_>>();
    Ok(RelationReport {
        x,
        y,
        minpoly_x: ctx.minpoly(x)?.clone(),
        minpoly_y: ctx.minpoly(y)?.clone(),
        nontrivial: !kernel.is_empty(),
        kernel,
        columns: columns.len(),
        rank: columns.len() - basis.dim(),
        basis,
    })
}

/// Exact test of `f(X) = g(Y)`.
pub fn verify_polynomial_identity(
    g: &Graph,
    f: &RatPolynomial,
    x: MatrixId,
    gp: &RatPolynomial,
    y: MatrixId,
) -> Result<bool> {
    verify_polynomial_identity_with(&GraphMatrices::new(g), f, x, gp, y)
}

pub fn verify_polynomial_identity_with(
    ctx: &GraphMatrices,
    f: &RatPolynomial,
    x: MatrixId,
    gp: &RatPolynomial,
    y: MatrixId,
) -> Result<bool> {
    let lhs = ctx.eval(x, f)?;
    let rhs = ctx.eval(y, gp)?;
    Ok(ctx.sides_equal(&lhs, &rhs))
}

/// Checks that `f(X) = g(Y)` and then that `f(X)` and `g(Y)` have the same
/// characteristic polynomial, i.e. that `f` maps the spectrum of `X` onto
/// the spectrum of `g(Y)` with multiplicity.
pub fn eigen_transport_check(
    g: &Graph,
    f: &RatPolynomial,
    x: MatrixId,
    gp: &RatPolynomial,
    y: MatrixId,
) -> Result<bool> {
    eigen_transport_check_with(&GraphMatrices::new(g), f, x, gp, y)
}

pub fn eigen_transport_check_with(
    ctx: &GraphMatrices,
    f: &RatPolynomial,
    x: MatrixId,
    gp: &RatPolynomial,
    y: MatrixId,
) -> Result<bool> {
    if !verify_polynomial_identity_with(ctx, f, x, gp, y)? {
        return Err(Error::PrereqFailed(format!("{f} on {x} differs from {gp} on {y}")));
    }
    // Conjugation preserves characteristic polynomials, so the rational
    // matrices suffice.
    let left = ctx.eval(x, f)?.m.charpoly();
    let right = ctx.eval(y, gp)?.m.charpoly();
    Ok(left == right)
}
