//! Solving `X^r = f(Y)` exactly, including over the radical field when the
//! normalized Laplacian is involved.

use super::{GraphMatrices, MatrixId, Side};
use crate::error::Result;
use crate::exact::linear::solve_many;
use crate::graph::Graph;
use crate::radical::{RadicalMatrix, RadicalScalar};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A solution of `X^r = f(Y)` with `deg f < deg m_Y`; coefficients are
/// lowest-degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerRelation {
    pub x: MatrixId,
    pub y: MatrixId,
    pub r: u32,
    pub coeffs: Vec<RadicalScalar>,
}

impl PowerRelation {
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_rational().is_some())
    }

    /// Renders `f` as text, e.g. `1 + (-(1/3)*sqrt(3))*x`.
    pub fn f_display(&self) -> String {
        let mut parts = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = if c.terms().count() > 1 || c.as_rational().is_none() {
                format!("({c})")
            } else {
                c.to_string()
            };
            parts.push(match j {
                0 => coef,
                1 => format!("{coef}*x"),
                _ => format!("{coef}*x^{j}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for PowerRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{} = f({}) with f(x) = {}", self.x, self.r, self.y, self.f_display())
    }
}

/// Finds `f` with `X^r = f(Y)`, or `None` when no polynomial works.
///
/// With `Y = NL` (or `X = NL`) the equation is compared entry by entry after
/// dividing out the conjugation factor, so the coefficient matrix is
/// rational and the right-hand side lives in the span of `sqrt(s)` for the
/// squarefree parts `s` of `d_u d_v`. A linear system with rational
/// coefficients and such a right-hand side is solvable over the reals iff
/// it is solvable over the radical field, and since the `sqrt(s)` are
/// linearly independent over the rationals it splits into one rational
/// system per `s`.
pub fn power_relation_exists(g: &Graph, x: MatrixId, y: MatrixId, r: u32) -> Result<Option<PowerRelation>> {
    power_relation_with(&GraphMatrices::new(g), x, y, r)
}

pub fn power_relation_with(ctx: &GraphMatrices, x: MatrixId, y: MatrixId, r: u32) -> Result<Option<PowerRelation>> {
    let basis = ctx.powers(y, ctx.minpoly_degree(y)?)?;
    let target = ctx.side(x, ctx.rational(x)?.pow(r));
    let conj_basis = y == MatrixId::NL;
    solve_against(ctx, &target, &basis, conj_basis).map(|sol| sol.map(|coeffs| PowerRelation { x, y, r, coeffs }))
}

fn solve_against(ctx: &GraphMatrices, target: &Side, basis: &[crate::exact::ExactMatrix], conj_basis: bool) -> Result<Option<Vec<RadicalScalar>>> {
    let n = ctx.dim();
    let k = basis.len();
    let rows: Vec<Vec<BigRational>> = (0..n * n).map(|e| basis.iter().map(|m| m.entries()[e].clone()).collect()).collect();

    // Right-hand side grouped by squarefree part.
    let mut groups: BTreeMap<u64, Vec<BigRational>> = BTreeMap::new();
    for (e, t) in target.m.entries().iter().enumerate() {
        if t.is_zero() {
            continue;
        }
        let (u, v) = (e / n, e % n);
        let (scale, s) = match (target.conjugated, conj_basis) {
            (false, false) | (true, true) => (BigRational::from_integer(1.into()), 1),
            // t_uv = sum c_j (B_j)_uv sqrt(d_u d_v) / d_v, divided through.
            (false, true) => ctx.conjugation_factor(u, v, u),
            (true, false) => ctx.conjugation_factor(u, v, v),
        };
        groups.entry(s).or_insert_with(|| vec![BigRational::zero(); n * n])[e] = t * scale;
    }
    if groups.is_empty() {
        groups.insert(1, vec![BigRational::zero(); n * n]);
    }
    let keys: Vec<u64> = groups.keys().copied().collect();
    let rhs: Vec<Vec<BigRational>> = groups.into_values().collect();
    let solutions = solve_many(&rows, k, &rhs);
    let mut coeffs = vec![RadicalScalar::zero(); k];
    for (s, sol) in keys.into_iter().zip(solutions) {
        let Some(sol) = sol else {
            return Ok(None);
        };
        for (c, q) in coeffs.iter_mut().zip(sol) {
            *c = &*c + &RadicalScalar::term(q, s);
        }
    }
    Ok(Some(coeffs))
}

/// Re-substitutes a relation: evaluates `X^r` and `f(Y)` as radical matrices.
pub fn verify_power_relation(g: &Graph, rel: &PowerRelation) -> Result<bool> {
    let ctx = GraphMatrices::new(g);
    let lhs = ctx.to_radical(&ctx.side(rel.x, ctx.rational(rel.x)?.pow(rel.r)));
    let mut rhs = RadicalMatrix::zero(ctx.dim());
    for (j, p) in ctx.powers(rel.y, rel.coeffs.len())?.into_iter().enumerate() {
        rhs.add_scaled(&ctx.to_radical(&ctx.side(rel.y, p)), &rel.coeffs[j]);
    }
    Ok(lhs == rhs)
}
