//! Independent oracles for integration tests. Nothing here calls into the
//! library's linear algebra: determinants use plain rational Gaussian
//! elimination on `Vec<Vec<_>>`, and tree counts enumerate edge subsets.

#![allow(dead_code)]

use biregular::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Number of spanning trees by checking every `(n-1)`-edge subset for
/// acyclicity with a union-find.
pub fn brute_force_spanning_trees(g: &Graph) -> u64 {
    let n = g.n();
    let edges = g.edges();
    if n <= 1 {
        return 1;
    }
    let m = edges.len();
    assert!(m <= 24, "brute force is exponential in the edge count");
    let mut count = 0;
    for subset in 0u32..(1 << m) {
        if subset.count_ones() as usize != n - 1 {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut acyclic = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if subset >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    acyclic = false;
                    break;
                }
                parent[a] = b;
            }
        }
        if acyclic {
            count += 1;
        }
    }
    count
}

fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

/// `det(tI - M)` coefficients, lowest first, by evaluating at `t = 0..=n`
/// and solving the Vandermonde system.
pub fn oracle_charpoly(m: &[Vec<i64>]) -> Vec<BigRational> {
    let n = m.len();
    let values: Vec<BigRational> = (0..=n as i64)
        .map(|t| {
            det((0..n)
                .map(|i| (0..n).map(|j| q(if i == j { t } else { 0 }) - q(m[i][j])).collect())
                .collect())
        })
        .collect();
    // Vandermonde solve by Gaussian elimination on the augmented matrix.
    let mut aug: Vec<Vec<BigRational>> = (0..=n)
        .map(|t| {
            let mut row: Vec<BigRational> = (0..=n as u32).map(|k| q((t as i64).pow(k))).collect();
            row.push(values[t].clone());
            row
        })
        .collect();
    let size = n + 1;
    for c in 0..size {
        let p = (c..size).find(|&i| !aug[i][c].is_zero()).unwrap();
        aug.swap(p, c);
        let piv = aug[c][c].clone();
        for x in aug[c].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..size {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let pivot_row = aug[c].clone();
                for (x, y) in aug[i].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    aug.into_iter().map(|r| r[size].clone()).collect()
}

pub fn adjacency(g: &Graph) -> Vec<Vec<i64>> {
    (0..g.n()).map(|i| (0..g.n()).map(|j| g.has_edge(i, j) as i64).collect()).collect()
}

/// `Q = D + A` as nested rows.
pub fn signless(g: &Graph) -> Vec<Vec<i64>> {
    let mut m = adjacency(g);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = g.degree(i) as i64;
    }
    m
}

/// `P(x) = prod (x - r)` for integer roots, lowest coefficient first.
pub fn from_roots(roots: &[i64]) -> Vec<BigRational> {
    let mut c = vec![q(1)];
    for &r in roots {
        let mut next = vec![BigRational::zero(); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] += ci.clone();
            next[i] -= ci * q(r);
        }
        c = next;
    }
    c
}
