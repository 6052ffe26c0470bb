mod common;

use biregular::exact::IntPolynomial;
use biregular::graph::{classify, make_named};
use biregular::harness::{enumerate_connected, Shard};
use biregular::relations::{find_relation, MatrixId};
use biregular::spectral::{build_matrices, transport, zero_multiplicities};
use common::{adjacency, oracle_charpoly};
use num_bigint::BigInt;

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Squared nonzero eigenvalues of A(C_{n,k}) are i(n-2k+i+1), i = 1..=k, with
/// multiplicity C(n,k-i) - C(n,k-i-1).
#[test]
fn cube_layer_squared_spectrum() {
    for n in 2..=6i64 {
        for k in 1..=n / 2 {
            let g = make_named("cube", &[n as u64, k as u64]).unwrap();
            let t = transport(&g).unwrap();
            let mut expected = IntPolynomial::one();
            for i in 1..=k {
                let mult = binom(n, k - i) - binom(n, k - i - 1);
                expected = &expected * &IntPolynomial::linear_root(BigInt::from(i * (n - 2 * k + i + 1))).pow(mult as u32);
            }
            assert_eq!(t.psi, expected, "C_({n},{k})");
        }
    }
}

#[test]
fn adjacency_charpoly_matches_oracle() {
    for n in 1..=5 {
        for g in enumerate_connected(n, Shard::ALL, true).unwrap() {
            let lib = build_matrices(&g).a.charpoly();
            assert_eq!(lib.coeffs(), oracle_charpoly(&adjacency(&g)).as_slice());
        }
    }
}

#[test]
fn zero_multiplicities_of_layers() {
    // Full-rank biadjacency: d2 appears n1 - n2 times, d1 never.
    let g = make_named("cube", &[5, 2]).unwrap();
    assert_eq!(zero_multiplicities(&g).unwrap(), (10 - 5, 0));
    let star = make_named("complete_bipartite", &[1, 4]).unwrap();
    assert_eq!(zero_multiplicities(&star).unwrap(), (3, 0));
}

/// Kernel dimension is columns minus rank; regular and biregular graphs
/// always admit some `f(A) = g(L)`.
#[test]
fn kernel_columns_follow_minimal_polynomials() {
    for n in 2..=5 {
        for g in enumerate_connected(n, Shard::ALL, true).unwrap() {
            let r = find_relation(&g, MatrixId::A, MatrixId::L).unwrap();
            assert_eq!(r.kernel.len(), r.columns - r.rank);
            if !classify(&g).is_regular_or_biregular() {
                continue;
            }
            assert!(r.nontrivial, "{}", g.to_graph6().unwrap());
        }
    }
}
