use biregular::graph::classify;
use biregular::harness::{enumerate_connected_filtered, Shard};
use biregular::relations::{j_relation, solve_polynomial_for_j};

/// Every solution of `f(A) = J` vanishes at each eigenvalue other than `k`,
/// so `m'_A` divides `f`; at the minimum degree `f` is a multiple of `m'_A`
/// and the division also goes the other way.
#[test]
fn j_solutions_are_multiples_of_m_prime() {
    for n in 1..=7 {
        for g in enumerate_connected_filtered(n, Shard::ALL, true, |g| classify(g).is_regular()).unwrap() {
            let m_prime = j_relation(&g).unwrap().m_prime.to_rational();
            let d = m_prime.degree().unwrap();
            for degree in d..=d + 2 {
                let f = solve_polynomial_for_j(&g, degree).expect("a solution exists from deg m' up");
                let (_, rem) = f.div_rem(&m_prime).unwrap();
                assert!(rem.is_zero(), "{}: m' does not divide {f}", g.to_graph6().unwrap());
                if degree == d {
                    let (_, back) = m_prime.div_rem(&f).unwrap();
                    assert!(back.is_zero());
                }
            }
        }
    }
}

#[test]
fn j_relation_rejects_irregular_and_disconnected() {
    use biregular::graph::{make_named, Graph};
    use biregular::Error;
    assert_eq!(j_relation(&make_named("path", &[4]).unwrap()).unwrap_err(), Error::NotRegular);
    let two_triangles = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    assert_eq!(j_relation(&two_triangles).unwrap_err(), Error::NotConnected);
}
