//! Named graph families and fixture graphs.

use super::Graph;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Upper bound on the vertex count of any constructed family member.
pub const MAX_FAMILY_VERTICES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Middle layers `k-1, k` of the `n`-cube.
    CubeLayer { n: usize, k: usize },
    /// Subspaces of dimension `k-1` and `k` of `F_q^n` under containment.
    SubspaceLayer { n: usize, k: usize, q: u32 },
    /// The 5-vertex graph with no nontrivial `f(A) = g(Q)`.
    AG,
    /// The 5-vertex graph with `3A^2 - 3A = -L^3 + 9L^2 - 20L + 12I`.
    GPrime,
    Petersen,
    /// Triangle with a pendant edge.
    Paw,
}

const A_G_ROWS: [[u8; 5]; 5] = [
    [0, 1, 1, 1, 1],
    [1, 0, 1, 1, 1],
    [1, 1, 0, 1, 0],
    [1, 1, 1, 0, 0],
    [1, 1, 0, 0, 0],
];

const G_PRIME_ROWS: [[u8; 5]; 5] = [
    [0, 1, 1, 1, 1],
    [1, 0, 0, 0, 1],
    [1, 0, 0, 1, 0],
    [1, 0, 1, 0, 0],
    [1, 1, 0, 0, 0],
];

impl Family {
    /// Builds a family from its identifier and integer parameters.
    pub fn from_parts(name: &str, params: &[u64]) -> Result<Family> {
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!(
                    "family {name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let p = |i: usize| params[i] as usize;
        let family = match name {
            "path" => {
                arity(1)?;
                Family::Path(p(0))
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(p(0))
            }
            "complete" => {
                arity(1)?;
                Family::Complete(p(0))
            }
            "complete_bipartite" | "kbip" => {
                arity(2)?;
                Family::CompleteBipartite(p(0), p(1))
            }
            "star" => {
                arity(1)?;
                Family::CompleteBipartite(1, p(0))
            }
            "cube_layer" | "cube" => {
                arity(2)?;
                Family::CubeLayer { n: p(0), k: p(1) }
            }
            "subspace_layer" | "subspace" => {
                arity(3)?;
                let q = u32::try_from(params[2])
                    .map_err(|_| Error::BadParams(format!("q = {} is too large", params[2])))?;
                Family::SubspaceLayer { n: p(0), k: p(1), q }
            }
            "paper_A_G" | "a_g" => {
                arity(0)?;
                Family::AG
            }
            "paper_G_prime" | "g_prime" => {
                arity(0)?;
                Family::GPrime
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "paw" => {
                arity(0)?;
                Family::Paw
            }
            _ => return Err(Error::BadParams(format!("unknown family {name:?}"))),
        };
        Ok(family)
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => {
                positive(n)?;
                Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::BadParams(format!("cycle needs n >= 3, got {n}")));
                }
                Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            }
            Family::Complete(n) => {
                positive(n)?;
                capped(n as u128)?;
                Graph::from_edges(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j))))
            }
            Family::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(Error::BadParams("complete bipartite parts must be nonempty".into()));
                }
                capped(a as u128 + b as u128)?;
                Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            }
            Family::CubeLayer { n, k } => cube_layer(n, k),
            Family::SubspaceLayer { n, k, q } => subspace_layer(n, k, q),
            Family::AG => Graph::from_adjacency_rows(&A_G_ROWS.iter().map(|r| &r[..]).collect::<Vec<_>>()),
            Family::GPrime => {
                Graph::from_adjacency_rows(&G_PRIME_ROWS.iter().map(|r| &r[..]).collect::<Vec<_>>())
            }
            Family::Petersen => {
                let pairs: Vec<u32> = (0u32..32).filter(|m| m.count_ones() == 2 && *m < 1 << 5).collect();
                let edges = (0..pairs.len())
                    .flat_map(|i| (0..i).map(move |j| (j, i)))
                    .filter(|&(i, j)| pairs[i] & pairs[j] == 0);
                Graph::from_edges(pairs.len(), edges.collect::<Vec<_>>())
            }
            Family::Paw => Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `NAME` or `NAME:a,b,c`, e.g. `path:4`, `cube:4,2`, `subspace:4,2,2`.
    fn from_str(s: &str) -> Result<Family> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let params = rest
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::BadParams(format!("bad family parameter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(name.trim(), &params)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::CubeLayer { n, k } => write!(f, "cube_layer:{n},{k}"),
            Family::SubspaceLayer { n, k, q } => write!(f, "subspace_layer:{n},{k},{q}"),
            Family::AG => write!(f, "a_g"),
            Family::GPrime => write!(f, "g_prime"),
            Family::Petersen => write!(f, "petersen"),
            Family::Paw => write!(f, "paw"),
        }
    }
}

/// Builds a named family member, e.g. `make_named("cube_layer", &[4, 2])`.
pub fn make_named(family: &str, params: &[u64]) -> Result<Graph> {
    Family::from_parts(family, params)?.build()
}

fn positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::BadParams("vertex count must be positive".into()))
    } else {
        Ok(())
    }
}

fn capped(count: u128) -> Result<()> {
    if count > MAX_FAMILY_VERTICES as u128 {
        Err(Error::BadParams(format!(
            "family would have {count} vertices, cap is {MAX_FAMILY_VERTICES}"
        )))
    } else {
        Ok(())
    }
}

fn layer_range_check(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::BadParams(format!("layer needs 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(())
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

fn cube_layer(n: usize, k: usize) -> Result<Graph> {
    layer_range_check(n, k)?;
    if n > 40 {
        return Err(Error::BadParams(format!("cube layer dimension {n} is too large")));
    }
    capped(binomial_u128(n, k) + binomial_u128(n, k - 1))?;
    // Weight-k strings first, then weight k-1, each in increasing order.
    let mut vertices: Vec<u64> = Vec::new();
    for weight in [k, k - 1] {
        vertices.extend((0u64..1 << n).filter(|m| m.count_ones() as usize == weight));
    }
    let edges: Vec<(usize, usize)> = (0..vertices.len())
        .flat_map(|i| (0..i).map(move |j| (j, i)))
        .filter(|&(i, j)| (vertices[i] ^ vertices[j]).count_ones() == 1)
        .collect();
    Graph::from_edges(vertices.len(), edges)
}

pub(crate) fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// A subspace of `F_q^n` given by the rows of its reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Rref {
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Rref {
    fn contains(&self, v: &[u32], q: u32) -> bool {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                for (x, &r) in w.iter_mut().zip(row) {
                    *x = (*x + q - c * r % q) % q;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

/// All `dim`-dimensional subspaces of `F_q^n`, one canonical RREF each.
fn enumerate_rref(n: usize, dim: usize, q: u32) -> Vec<Rref> {
    let mut out = Vec::new();
    for pivots in combinations(n, dim) {
        // Free entries: row i, column j > pivots[i], j not a pivot column.
        let free: Vec<(usize, usize)> = (0..dim)
            .flat_map(|i| ((pivots[i] + 1)..n).map(move |j| (i, j)))
            .filter(|(_, j)| !pivots.contains(j))
            .collect();
        let total = (q as u64).pow(free.len() as u32);
        for mut code in 0..total {
            let mut rows = vec![vec![0u32; n]; dim];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = 1;
            }
            for &(i, j) in &free {
                rows[i][j] = (code % q as u64) as u32;
                code /= q as u64;
            }
            out.push(Rref { rows, pivots: pivots.clone() });
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn subspace_layer(n: usize, k: usize, q: u32) -> Result<Graph> {
    layer_range_check(n, k)?;
    if !is_prime(q as u64) {
        return Err(Error::BadParams(format!("q = {q} is not prime")));
    }
    let gauss = |m: usize| -> u128 {
        // [n choose m]_q, saturating; only used for the size cap.
        let q = q as u128;
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..m {
            num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
            den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
        }
        if num == u128::MAX {
            u128::MAX
        } else {
            num / den
        }
    };
    capped(gauss(k).saturating_add(gauss(k - 1)))?;
    let upper = enumerate_rref(n, k, q);
    let lower = enumerate_rref(n, k - 1, q);
    let offset = upper.len();
    let mut edges = Vec::new();
    for (i, big) in upper.iter().enumerate() {
        for (j, small) in lower.iter().enumerate() {
            if small.rows.iter().all(|row| big.contains(row, q)) {
                edges.push((i, offset + j));
            }
        }
    }
    Graph::from_edges(offset + lower.len(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, Kind};

    fn is_star(g: &Graph, leaves: usize) -> bool {
        let mut d = g.degrees().to_vec();
        d.sort_unstable();
        g.is_connected() && g.n() == leaves + 1 && d[..leaves].iter().all(|&x| x == 1) && d[leaves] == leaves
    }

    #[test]
    fn cube_layer_3_1_is_a_claw() {
        assert!(is_star(&make_named("cube_layer", &[3, 1]).unwrap(), 3));
    }

    #[test]
    fn subspace_layer_2_1_2_is_a_claw() {
        assert!(is_star(&make_named("subspace_layer", &[2, 1, 2]).unwrap(), 3));
        assert!(is_star(&make_named("subspace_layer", &[3, 1, 2]).unwrap(), 7));
    }

    #[test]
    fn subspace_layer_counts() {
        // 35 planes and 15 lines of F_2^4; each plane has 3 lines, each line lies in 7 planes.
        let g = make_named("subspace_layer", &[4, 2, 2]).unwrap();
        assert_eq!(g.n(), 50);
        assert_eq!(
            classify(&g).biregular_params(),
            Some((3, 7, 35, 15))
        );
        let g3 = make_named("subspace_layer", &[3, 1, 3]).unwrap();
        assert_eq!(g3.n(), 14);
    }

    #[test]
    fn cube_layer_is_biregular() {
        let g = make_named("cube", &[4, 2]).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(classify(&g).biregular_params(), Some((2, 3, 6, 4)));
    }

    #[test]
    fn g_prime_matrix() {
        let g = Family::GPrime.build().unwrap();
        for (u, row) in G_PRIME_ROWS.iter().enumerate() {
            for (v, &bit) in row.iter().enumerate() {
                assert_eq!(g.has_edge(u, v), bit == 1);
            }
        }
        assert_eq!(classify(&g).kind, Kind::Neither);
    }

    #[test]
    fn petersen_is_cubic() {
        let g = Family::Petersen.build().unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(classify(&g).kind, Kind::Regular(3));
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn family_strings() {
        assert_eq!("path:4".parse::<Family>().unwrap(), Family::Path(4));
        assert_eq!("cube:4,2".parse::<Family>().unwrap(), Family::CubeLayer { n: 4, k: 2 });
        assert_eq!("paper_A_G".parse::<Family>().unwrap(), Family::AG);
        let f: Family = "subspace:4,2,2".parse().unwrap();
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
    }

    #[test]
    fn bad_params() {
        for (name, params) in [
            ("cube_layer", vec![3, 0]),
            ("cube_layer", vec![3, 4]),
            ("subspace_layer", vec![3, 1, 4]),
            ("subspace_layer", vec![2, 3, 2]),
            ("subspace_layer", vec![30, 15, 2]),
            ("path", vec![]),
            ("nope", vec![]),
        ] {
            assert!(matches!(make_named(name, &params), Err(Error::BadParams(_))), "{name} {params:?}");
        }
    }
}
