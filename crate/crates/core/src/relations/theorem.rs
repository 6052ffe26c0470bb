//! Comparator between actual `X^r = f(Y)` solvability and the table the
//! classification theorem predicts for connected graphs.

use super::power::power_relation_with;
use super::{GraphMatrices, MatrixId};
use crate::error::{Error, Result};
use crate::graph::{classify, Graph, Kind};

/// Predicted existence of `X^r = f(Y)` for some `1 <= r <= r_max`; `None`
/// where the theorem makes no claim (`A^r = f(NL)` for graphs that are
/// neither regular nor biregular).
///
/// For biregular graphs the `A <- Q` and `A <- L` relations need `r = 2`:
/// an odd power of `A` has nonzero entries across every edge and so cannot
/// commute with `D`, while `Q` and `L` do.
pub fn predicted(kind: &Kind, x: MatrixId, y: MatrixId, r_max: u32) -> Option<bool> {
    use MatrixId::*;
    match kind {
        Kind::Regular(_) => Some(true),
        Kind::Biregular { .. } => Some(match (x, y) {
            (A, Q) | (A, L) => r_max >= 2,
            (A, NL) | (NL, A) => true,
            _ => false,
        }),
        Kind::Neither => match (x, y) {
            (A, NL) => None,
            _ => Some(false),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOutcome {
    pub x: MatrixId,
    pub y: MatrixId,
    pub predicted: Option<bool>,
    /// Smallest `r <= r_max` with a solution.
    pub found_r: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremComparison {
    pub kind: Kind,
    pub r_max: u32,
    pub pairs: Vec<PairOutcome>,
    pub mismatches: Vec<PairOutcome>,
    /// `A^r = f(NL)` solutions on graphs that are neither regular nor
    /// biregular: counterexamples to the open conjecture.
    pub con_full_candidates: Vec<PairOutcome>,
}

pub fn classify_vs_theorem(g: &Graph, r_max: u32) -> Result<TheoremComparison> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let kind = classify(g).kind;
    let ctx = GraphMatrices::new(g);
    let mut pairs = Vec::new();
    for x in MatrixId::ALL {
        for y in MatrixId::ALL {
            if x == y {
                continue;
            }
            let mut found_r = None;
            for r in 1..=r_max {
                if power_relation_with(&ctx, x, y, r)?.is_some() {
                    found_r = Some(r);
                    break;
                }
            }
            pairs.push(PairOutcome { x, y, predicted: predicted(&kind, x, y, r_max), found_r });
        }
    }
    let mismatches = pairs
        .iter()
        .filter(|p| matches!(p.predicted, Some(e) if e != p.found_r.is_some()))
        .cloned()
        .collect();
    let con_full_candidates = pairs.iter().filter(|p| p.predicted.is_none() && p.found_r.is_some()).cloned().collect();
    Ok(TheoremComparison { kind, r_max, pairs, mismatches, con_full_candidates })
}
