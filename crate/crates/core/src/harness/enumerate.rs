//! Labeled enumeration of small graphs as upper-triangle bitmasks, with
//! brute-force canonical representatives.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the scanner accepts: 2^28 masks at n = 8.
pub const SCAN_CAP: usize = 8;

/// Shard `index` of `count` takes the masks with `mask % count == index`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shard {
    pub index: u64,
    pub count: u64,
}

impl Shard {
    pub const ALL: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: u64, count: u64) -> Result<Shard> {
        if count == 0 || index >= count {
            return Err(Error::BadParams(format!("invalid shard {index}/{count}")));
        }
        Ok(Shard { index, count })
    }

    pub fn contains(&self, mask: u64) -> bool {
        mask % self.count == self.index
    }
}

impl std::str::FromStr for Shard {
    type Err = Error;
    /// `i/c`.
    fn from_str(s: &str) -> Result<Shard> {
        let (i, c) = s.split_once('/').ok_or_else(|| Error::BadParams(format!("shard {s:?} is not i/c")))?;
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| Error::BadParams(format!("shard {s:?} is not i/c")));
        Shard::new(parse(i)?, parse(c)?)
    }
}

impl std::fmt::Display for Shard {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

/// Mask geometry and permutation tables for one vertex count.
#[derive(Clone, Debug)]
pub struct Enumerator {
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// For every non-identity permutation, the image of each pair index.
    perm_maps: Vec<Vec<u8>>,
}

fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl Enumerator {
    pub fn new(n: usize) -> Result<Enumerator> {
        Self::build(n, true)
    }

    /// Without permutation tables; `is_canonical` must not be used.
    pub fn labeled(n: usize) -> Result<Enumerator> {
        Self::build(n, false)
    }

    fn build(n: usize, with_perms: bool) -> Result<Enumerator> {
        if n > SCAN_CAP {
            return Err(Error::CapExceeded { n, cap: SCAN_CAP });
        }
        if n == 0 {
            return Err(Error::BadParams("need at least one vertex".into()));
        }
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut perm_maps = Vec::new();
        if with_perms {
            let mut p: Vec<usize> = (0..n).collect();
            while next_permutation(&mut p) {
                perm_maps.push(pairs.iter().map(|&(i, j)| pair_index(p[i], p[j]) as u8).collect());
            }
        }
        Ok(Enumerator { n, pairs, perm_maps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask_count(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    pub fn is_connected_mask(&self, mask: u64) -> bool {
        let mut adj = [0u16; SCAN_CAP];
        for (e, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> e & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let full: u16 = (1 << self.n) - 1;
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next = 0;
            for (v, row) in adj.iter().enumerate().take(self.n) {
                if frontier >> v & 1 == 1 {
                    next |= row;
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    fn permute(map: &[u8], mask: u64) -> u64 {
        let mut out = 0;
        let mut rest = mask;
        while rest != 0 {
            let e = rest.trailing_zeros() as usize;
            out |= 1 << map[e];
            rest &= rest - 1;
        }
        out
    }

    /// Whether `mask` is the smallest mask in its isomorphism class.
    pub fn is_canonical(&self, mask: u64) -> bool {
        assert!(self.n <= 1 || !self.perm_maps.is_empty(), "enumerator built without permutations");
        self.perm_maps.iter().all(|map| Self::permute(map, mask) >= mask)
    }

    pub fn canonical_form(&self, mask: u64) -> u64 {
        self.perm_maps.iter().map(|map| Self::permute(map, mask)).fold(mask, u64::min)
    }

    pub fn graph(&self, mask: u64) -> Graph {
        Graph::from_upper_mask(self.n, mask)
    }
}

/// Connected graphs on `n` labeled vertices in the shard, optionally only
/// the canonical representative of each isomorphism class.
pub fn enumerate_connected(n: usize, shard: Shard, dedup: bool) -> Result<impl Iterator<Item = Graph>> {
    enumerate_connected_filtered(n, shard, dedup, |_| true)
}

/// As [`enumerate_connected`], with `keep` applied before the (expensive)
/// canonicity test.
pub fn enumerate_connected_filtered(
    n: usize,
    shard: Shard,
    dedup: bool,
    keep: impl Fn(&Graph) -> bool,
) -> Result<impl Iterator<Item = Graph>> {
    let e = if dedup { Enumerator::new(n)? } else { Enumerator::labeled(n)? };
    Ok((0..e.mask_count()).filter(move |&m| shard.contains(m)).filter_map(move |m| {
        if !e.is_connected_mask(m) {
            return None;
        }
        let g = e.graph(m);
        (keep(&g) && (!dedup || e.is_canonical(m))).then_some(g)
    }))
}
