//! Eigenvector tests for the vectors `D^{1/2} 1` and `1`.

use super::{sqfree_decompose, RadicalScalar};
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `D^{1/2} 1` is an eigenvector of `A`.
    Dsqrt1A,
    /// `D^{1/2} 1` is an eigenvector of `A^2`.
    Dsqrt1A2,
    /// `D^{1/2} 1` is an eigenvector of `Q`.
    Dsqrt1Q,
    /// `1` is an eigenvector of the normalized Laplacian.
    OneNl,
}

impl Condition {
    pub const ALL: [Condition; 4] = [Condition::Dsqrt1A, Condition::Dsqrt1A2, Condition::Dsqrt1Q, Condition::OneNl];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Dsqrt1A => "DSQRT1_A",
            Condition::Dsqrt1A2 => "DSQRT1_A2",
            Condition::Dsqrt1Q => "DSQRT1_Q",
            Condition::OneNl => "ONE_NL",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Condition::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadParams(format!("unknown condition {s:?}")))
    }
}

/// Integer combination `sum c_s sqrt(s)`, kept sorted by `s` with no zero
/// coefficients so that equality is structural.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
struct SurdSum(Vec<(u64, i128)>);

impl SurdSum {
    fn add(&mut self, s: u64, c: i128) {
        if c == 0 {
            return;
        }
        match self.0.binary_search_by_key(&s, |&(k, _)| k) {
            Ok(i) => {
                self.0[i].1 += c;
                if self.0[i].1 == 0 {
                    self.0.remove(i);
                }
            }
            Err(i) => self.0.insert(i, (s, c)),
        }
    }

    fn add_all(&mut self, other: &SurdSum) {
        for &(s, c) in &other.0 {
            self.add(s, c);
        }
    }

    /// Product with `m sqrt(t)`.
    fn times_surd(&self, m: u64, t: u64) -> SurdSum {
        let mut out = SurdSum::default();
        for &(s, c) in &self.0 {
            let g = s.gcd(&t);
            out.add((s / g) * (t / g), c * (m * g) as i128);
        }
        out
    }

    fn scaled(&self, k: i128) -> SurdSum {
        SurdSum(self.0.iter().map(|&(s, c)| (s, c * k)).collect())
    }

    fn to_scalar(&self, denom: u64) -> RadicalScalar {
        let d = BigInt::from(denom);
        RadicalScalar::from_terms(
            self.0.iter().map(|&(s, c)| (s, BigRational::new(BigInt::from(c), d.clone()))),
        )
    }
}

/// Tests whether the target vector of `which` is an eigenvector and, if so,
/// returns its eigenvalue. Per-vertex ratios are compared as canonical surd
/// sums; the first disagreement ends the check.
pub fn check_eigen_condition(g: &Graph, which: Condition) -> Result<Option<RadicalScalar>> {
    if let Some(v) = g.first_isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let deg = g.degrees();
    if which == Condition::OneNl {
        return Ok(one_nl(g, deg));
    }

    let roots: Vec<(u64, u64)> = deg.iter().map(|&d| sqfree_decompose(d as u64)).collect();
    let x: Vec<SurdSum> = roots.iter().map(|&(m, s)| SurdSum(vec![(s, m as i128)])).collect();
    let apply_a = |x: &[SurdSum]| -> Vec<SurdSum> {
        (0..n)
            .map(|v| {
                let mut acc = SurdSum::default();
                for u in g.neighbors(v) {
                    acc.add_all(&x[u]);
                }
                acc
            })
            .collect()
    };
    let y = match which {
        Condition::Dsqrt1A => apply_a(&x),
        Condition::Dsqrt1A2 => apply_a(&apply_a(&x)),
        Condition::Dsqrt1Q => {
            let mut y = apply_a(&x);
            for (v, yv) in y.iter_mut().enumerate() {
                yv.add_all(&x[v].scaled(deg[v] as i128));
            }
            y
        }
        Condition::OneNl => unreachable!(),
    };

    // ratio_v = y_v / sqrt(d_v) = (y_v sqrt(d_v)) / d_v; compare by cross-multiplying.
    let z = |v: usize| y[v].times_surd(roots[v].0, roots[v].1);
    let z0 = z(0);
    for v in 1..n {
        if z(v).scaled(deg[0] as i128) != z0.scaled(deg[v] as i128) {
            return Ok(None);
        }
    }
    Ok(Some(z0.to_scalar(deg[0] as u64)))
}

fn one_nl(g: &Graph, deg: &[usize]) -> Option<RadicalScalar> {
    // (NL 1)_v = 1 - sum_{u ~ v} 1 / sqrt(d_u d_v) = 1 - sum sqrt(p) / p, p = d_u d_v.
    let value = |v: usize| {
        let mut w = RadicalScalar::one();
        for u in g.neighbors(v) {
            let p = (deg[u] * deg[v]) as u64;
            let (m, s) = sqfree_decompose(p);
            w = &w - &RadicalScalar::term(BigRational::new(BigInt::from(m), BigInt::from(p)), s);
        }
        w
    };
    let first = value(0);
    (1..g.n()).all(|v| value(v) == first).then_some(first)
}
