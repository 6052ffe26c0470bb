use super::Graph;

/// Degree structure of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kind {
    /// Every vertex has degree `d`. Takes precedence over `Biregular`, so a
    /// d-regular bipartite graph is reported here.
    Regular(usize),
    /// Bipartite with parts of constant, distinct degrees. `part1` is the
    /// larger part (ties broken by `d1 <= d2`) and `d1` is its degree.
    Biregular {
        d1: usize,
        d2: usize,
        part1: Vec<usize>,
        part2: Vec<usize>,
    },
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub connected: bool,
    pub kind: Kind,
    /// A proper 2-coloring when the graph is bipartite.
    pub bipartition: Option<Vec<u8>>,
}

impl Classification {
    pub fn is_regular(&self) -> bool {
        matches!(self.kind, Kind::Regular(_))
    }

    pub fn is_biregular(&self) -> bool {
        matches!(self.kind, Kind::Biregular { .. })
    }

    pub fn is_regular_or_biregular(&self) -> bool {
        !matches!(self.kind, Kind::Neither)
    }

    /// `(d1, d2, n1, n2)` for biregular graphs.
    pub fn biregular_params(&self) -> Option<(usize, usize, usize, usize)> {
        match &self.kind {
            Kind::Biregular { d1, d2, part1, part2 } => Some((*d1, *d2, part1.len(), part2.len())),
            _ => None,
        }
    }
}

pub fn classify(g: &Graph) -> Classification {
    let connected = g.is_connected();
    let bipartition = g.two_coloring();
    let degrees = g.degrees();
    let mut distinct: Vec<usize> = degrees.to_vec();
    distinct.sort_unstable();
    distinct.dedup();

    let kind = match distinct.as_slice() {
        [] => Kind::Regular(0),
        [d] => Kind::Regular(*d),
        // With two distinct degrees the parts of a biregular graph are
        // forced to be the degree classes, so it suffices to check that
        // every edge crosses between them.
        &[lo, hi] if g.edges().iter().all(|&(u, v)| degrees[u] != degrees[v]) => {
            let (low, high): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| degrees[v] == lo);
            if low.len() > high.len() || (low.len() == high.len() && lo <= hi) {
                Kind::Biregular { d1: lo, d2: hi, part1: low, part2: high }
            } else {
                Kind::Biregular { d1: hi, d2: lo, part1: high, part2: low }
            }
        }
        _ => Kind::Neither,
    };
    Classification { connected, kind, bipartition }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_regular() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = classify(&c4);
        assert!(c.connected);
        assert_eq!(c.kind, Kind::Regular(2));
        assert!(c.bipartition.is_some());
    }

    #[test]
    fn star_is_biregular() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = classify(&star);
        assert_eq!(
            c.kind,
            Kind::Biregular { d1: 1, d2: 3, part1: vec![1, 2, 3], part2: vec![0] }
        );
        assert_eq!(c.biregular_params(), Some((1, 3, 3, 1)));
    }

    #[test]
    fn paw_is_neither() {
        let paw = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let c = classify(&paw);
        assert!(c.connected);
        assert_eq!(c.kind, Kind::Neither);
        assert!(c.bipartition.is_none());
    }

    #[test]
    fn two_degrees_but_not_biregular() {
        // P4: degrees {1,2} but the middle edge joins two degree-2 vertices.
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(classify(&p4).kind, Kind::Neither);
    }

    #[test]
    fn disconnected_biregular() {
        let two_stars = Graph::from_edges(6, [(0, 1), (0, 2), (3, 4), (3, 5)]).unwrap();
        let c = classify(&two_stars);
        assert!(!c.connected);
        assert_eq!(c.biregular_params(), Some((1, 2, 4, 2)));
    }

    #[test]
    fn edgeless_is_zero_regular() {
        assert_eq!(classify(&Graph::empty(3)).kind, Kind::Regular(0));
    }
}
