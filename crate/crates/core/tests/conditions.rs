//! The surd fast path of `check_eigen_condition` against a plain evaluation
//! in the radical field.

use biregular::graph::Graph;
use biregular::harness::{enumerate_connected, Shard};
use biregular::radical::{check_eigen_condition, Condition, RadicalScalar};

fn apply(g: &Graph, m: &dyn Fn(usize, usize) -> i64, x: &[RadicalScalar]) -> Vec<RadicalScalar> {
    (0..g.n())
        .map(|u| {
            (0..g.n()).fold(RadicalScalar::zero(), |acc, v| &acc + &(&RadicalScalar::from_integer(m(u, v)) * &x[v]))
        })
        .collect()
}

fn eigenvalue(x: &[RadicalScalar], y: &[RadicalScalar]) -> Option<RadicalScalar> {
    let lambda = y[0].checked_div(&x[0]).unwrap();
    x.iter().zip(y).all(|(a, b)| &lambda * a == *b).then_some(lambda)
}

fn slow(g: &Graph, c: Condition) -> Option<RadicalScalar> {
    let adj = |u: usize, v: usize| g.has_edge(u, v) as i64;
    let q = |u: usize, v: usize| if u == v { g.degree(u) as i64 } else { adj(u, v) };
    let root_deg: Vec<RadicalScalar> = (0..g.n()).map(|v| RadicalScalar::sqrt(g.degree(v) as u64)).collect();
    match c {
        Condition::Dsqrt1A => eigenvalue(&root_deg, &apply(g, &adj, &root_deg)),
        Condition::Dsqrt1A2 => eigenvalue(&root_deg, &apply(g, &adj, &apply(g, &adj, &root_deg))),
        Condition::Dsqrt1Q => eigenvalue(&root_deg, &apply(g, &q, &root_deg)),
        Condition::OneNl => {
            // NL_uv = [u = v] - A_uv / sqrt(d_u d_v), applied to the ones vector.
            let ones = vec![RadicalScalar::one(); g.n()];
            let y: Vec<RadicalScalar> = (0..g.n())
                .map(|u| {
                    g.neighbors(u).fold(RadicalScalar::one(), |acc, v| {
                        let w = RadicalScalar::sqrt((g.degree(u) * g.degree(v)) as u64).inverse().unwrap();
                        &acc - &w
                    })
                })
                .collect();
            eigenvalue(&ones, &y)
        }
    }
}

#[test]
fn fast_path_matches_radical_field() {
    for n in 2..=6 {
        for g in enumerate_connected(n, Shard::ALL, true).unwrap() {
            for c in Condition::ALL {
                assert_eq!(check_eigen_condition(&g, c).unwrap(), slow(&g, c), "{} {c}", g.to_graph6().unwrap());
            }
        }
    }
}
