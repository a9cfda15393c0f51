//! Arc sets, polytree validity and scoring.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{Instance, Vertex};

/// A set of directed arcs `(parent, child)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ArcSet(BTreeSet<(Vertex, Vertex)>);

impl ArcSet {
    pub fn new() -> Self {
        ArcSet(BTreeSet::new())
    }

    pub fn insert(&mut self, parent: Vertex, child: Vertex) -> bool {
        self.0.insert((parent, child))
    }

    pub fn contains(&self, parent: Vertex, child: Vertex) -> bool {
        self.0.contains(&(parent, child))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.iter().copied()
    }

    /// `P^A_v`, sorted.
    pub fn parents_of(&self, v: Vertex) -> Vec<Vertex> {
        self.0.iter().filter(|a| a.1 == v).map(|a| a.0).collect()
    }

    /// Adds `P × v`.
    pub fn add_parent_set(&mut self, v: Vertex, parents: &[Vertex]) {
        for &u in parents {
            self.0.insert((u, v));
        }
    }
}

impl FromIterator<(Vertex, Vertex)> for ArcSet {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        ArcSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a ArcSet {
    type Item = (Vertex, Vertex);
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, (Vertex, Vertex)>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Union-find with union by rank and path compression.
#[derive(Debug, Clone)]
pub struct DisjointSetForest {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSetForest {
    pub fn new(n: usize) -> Self {
        DisjointSetForest { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Inserts arcs as skeleton edges; false as soon as one closes a cycle.
///
/// A pair of anti-parallel arcs closes a cycle on its second insertion, and
/// any directed cycle is also a skeleton cycle, so this single check covers
/// both the DAG and the forest condition.
pub(crate) fn forest_insert<I>(uf: &mut DisjointSetForest, arcs: I) -> bool
where
    I: IntoIterator<Item = (Vertex, Vertex)>,
{
    arcs.into_iter().all(|(u, v)| uf.union(u, v))
}

pub fn is_polytree(n: usize, arcs: &ArcSet) -> Result<bool> {
    if let Some(bad) = arcs.iter().flat_map(|(u, v)| [u, v]).find(|&x| x >= n) {
        return Err(Error::VertexOutOfRange { index: bad, n });
    }
    let mut uf = DisjointSetForest::new(n);
    Ok(forest_insert(&mut uf, arcs.iter()))
}

/// `score(A) = Σ_v f_v(P^A_v)`; parent sets that are not stored count 0.
pub fn score(inst: &Instance, arcs: &ArcSet) -> u64 {
    let mut parents: Vec<Vec<Vertex>> = vec![Vec::new(); inst.n()];
    for (u, v) in arcs.iter() {
        if v < inst.n() {
            parents[v].push(u);
        }
    }
    parents
        .iter()
        .enumerate()
        .map(|(v, ps)| inst.local_score(v, ps))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub polytree: bool,
    pub score: u64,
    pub meets_t: bool,
}

pub fn verify_solution(inst: &Instance, arcs: &ArcSet) -> Result<VerifyReport> {
    let polytree = is_polytree(inst.n(), arcs)?;
    let score = score(inst, arcs);
    Ok(VerifyReport {
        polytree,
        score,
        meets_t: polytree && score >= inst.threshold(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_instance;
    use proptest::prelude::*;

    const CHAIN: &str = "3\na 0\nb 1\n1 1 a\nc 1\n1 1 b\n";

    fn arcs(list: &[(usize, usize)]) -> ArcSet {
        list.iter().copied().collect()
    }

    #[test]
    fn polytree_examples() {
        assert!(is_polytree(3, &ArcSet::new()).unwrap());
        assert!(is_polytree(3, &arcs(&[(0, 1), (1, 2)])).unwrap());
        assert!(!is_polytree(3, &arcs(&[(0, 2), (1, 2), (0, 1)])).unwrap());
        assert!(!is_polytree(2, &arcs(&[(0, 1), (1, 0)])).unwrap());
        assert!(matches!(
            is_polytree(2, &arcs(&[(0, 5)])),
            Err(Error::VertexOutOfRange { index: 5, n: 2 })
        ));
    }

    #[test]
    fn score_examples() {
        let inst = parse_instance(CHAIN, 0).unwrap();
        assert_eq!(score(&inst, &arcs(&[(0, 1), (1, 2)])), 2);
        assert_eq!(score(&inst, &arcs(&[(2, 1)])), 0);
        assert_eq!(score(&inst, &ArcSet::new()), 0);
    }

    #[test]
    fn verify_examples() {
        let path = arcs(&[(0, 1), (1, 2)]);
        let inst = parse_instance(CHAIN, 2).unwrap();
        let r = verify_solution(&inst, &path).unwrap();
        assert_eq!(r, VerifyReport { polytree: true, score: 2, meets_t: true });
        let inst = inst.with_threshold(3);
        let r = verify_solution(&inst, &path).unwrap();
        assert_eq!(r, VerifyReport { polytree: true, score: 2, meets_t: false });
        let inst = inst.with_threshold(0);
        let r = verify_solution(&inst, &ArcSet::new()).unwrap();
        assert_eq!(r, VerifyReport { polytree: true, score: 0, meets_t: true });
    }

    /// No anti-parallel pair and no cycle in the undirected multigraph, the
    /// latter found by repeatedly deleting vertices of degree at most one.
    fn brute_polytree(n: usize, arcs: &ArcSet) -> bool {
        if arcs.iter().any(|(u, v)| u == v || arcs.contains(v, u)) {
            return false;
        }
        let mut edges: Vec<(usize, usize)> = arcs.iter().collect();
        loop {
            let mut deg = vec![0; n];
            for &(u, v) in &edges {
                deg[u] += 1;
                deg[v] += 1;
            }
            let before = edges.len();
            edges.retain(|&(u, v)| deg[u] > 1 && deg[v] > 1);
            if edges.is_empty() {
                return true;
            }
            if edges.len() == before {
                return false;
            }
        }
    }

    #[test]
    fn union_find_matches_brute_force_sampled() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect();
            for _ in 0..10_000 {
                let density = rng.gen_range(0.02..0.5);
                let set: ArcSet = pairs.iter().copied().filter(|_| rng.gen_bool(density)).collect();
                assert_eq!(is_polytree(n, &set).unwrap(), brute_polytree(n, &set), "{set:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn sparse_arc_sets_match_brute_force(n in 2usize..=6, raw in proptest::collection::vec((0usize..6, 0usize..6), 0..7)) {
            let set: ArcSet = raw.into_iter().filter(|&(u, v)| u < n && v < n && u != v).collect();
            prop_assert_eq!(is_polytree(n, &set).unwrap(), brute_polytree(n, &set));
        }
    }

    #[test]
    fn score_grows_when_an_empty_vertex_takes_a_stored_set() {
        let inst = parse_instance("3\na 0\nb 1\n2 1 a\nc 1\n3 1 a\n", 0).unwrap();
        let base = arcs(&[(0, 1)]);
        let mut more = base.clone();
        more.insert(0, 2);
        assert!(score(&inst, &more) > score(&inst, &base));
    }
}
