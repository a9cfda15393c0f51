//! Instance factories: the two Independent Set reductions and seeded random
//! instances, plus small brute-force deciders used to validate them.

use std::collections::{BTreeSet, HashSet};

use rand::seq::{index::sample, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{Instance, ParentSetEntry, Vertex};

/// A simple undirected graph with named vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    names: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl UndirectedGraph {
    /// Vertices named `0..n`.
    pub fn new(n: usize) -> Self {
        Self::with_names((0..n).map(|i| i.to_string()).collect())
    }

    pub fn with_names(names: Vec<String>) -> Self {
        UndirectedGraph { names, edges: BTreeSet::new() }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { index: u.max(v), n });
        }
        if u == v {
            return Err(Error::Invalid(format!("self-loop at vertex {u}")));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(Error::Invalid(format!("duplicate edge {{{u}, {v}}}")));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// `w_<a>_<b>` with the endpoint names in sorted order.
    fn edge_vertex_name(&self, u: usize, v: usize) -> String {
        let (a, b) = (self.name(u), self.name(v));
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        format!("w_{a}_{b}")
    }
}

/// Parses `n m` followed by `m` lines `u v` with vertices `0..n`.
pub fn parse_graph(text: &str) -> Result<UndirectedGraph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Invalid("empty graph file".into()))?;
    let nums = parse_numbers(header)?;
    let [n, m] = nums[..] else {
        return Err(Error::Invalid(format!("graph header must be `n m`, got `{header}`")));
    };
    let mut g = UndirectedGraph::new(n);
    for _ in 0..m {
        let line = lines.next().ok_or_else(|| Error::Invalid(format!("expected {m} edge lines")))?;
        match parse_numbers(line)?[..] {
            [u, v] => g.add_edge(u, v)?,
            _ => return Err(Error::Invalid(format!("edge line must be `u v`, got `{line}`"))),
        }
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Invalid(format!("trailing content `{extra}`")));
    }
    Ok(g)
}

pub fn write_graph(g: &UndirectedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a partition: one class per line, vertex indices separated by
/// whitespace.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_numbers)
        .collect()
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse().map_err(|_| Error::Invalid(format!("`{t}` is not a vertex index"))))
        .collect()
}

/// Reduction from Independent Set: `k` selector vertices, a hub `vstar`, and
/// one vertex per edge of `G`. Each selector may take the parent set of any
/// graph vertex `x`, namely the edge vertices at `x` plus the hub; two
/// selectors can only coexist in a polytree when their graph vertices are
/// non-adjacent and distinct. The threshold is `k`.
pub fn gen_from_independent_set(g: &UndirectedGraph, k: usize) -> Result<Instance> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::Precondition(format!("vertex {} is isolated", g.name(v))));
    }
    let mut names: Vec<String> = (1..=k).map(|i| format!("v{i}")).collect();
    let hub = names.len();
    names.push("vstar".into());
    let edge_base = names.len();
    let edge_list: Vec<(usize, usize)> = g.edges().collect();
    names.extend(edge_list.iter().map(|&(u, v)| g.edge_vertex_name(u, v)));

    let mut sets: Vec<Vec<Vertex>> = Vec::new();
    for x in 0..g.n() {
        let mut set: Vec<Vertex> = edge_list
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| u == x || v == x)
            .map(|(i, _)| edge_base + i)
            .collect();
        set.push(hub);
        set.sort_unstable();
        // the two endpoints of an isolated edge yield the same set
        if !sets.contains(&set) {
            sets.push(set);
        }
    }
    let mut scores = vec![Vec::new(); names.len()];
    for entries in scores.iter_mut().take(k) {
        *entries = sets.iter().map(|s| ParentSetEntry::new(1, s.clone())).collect();
    }
    Instance::new(names, scores, k as u64)
}

/// Reduction from Multicolored Independent Set with classes `V_1..V_k`.
/// Vertices of the first `k - 1` classes keep their names and choose the
/// hub plus their incident edge vertices; the hub encodes the choice in
/// `V_k` by its neighbourhood outside `V_k`. A vertex of `V_k` without such
/// neighbours is encoded by the extra parent `vdummy`, because an empty
/// parent set cannot carry a positive score.
pub fn gen_from_multicolored_is(g: &UndirectedGraph, partition: &[Vec<usize>]) -> Result<Instance> {
    let k = partition.len();
    validate_partition(g, partition)?;
    if k < 2 {
        return Err(Error::Precondition("at least two classes are required".into()));
    }
    let last: HashSet<usize> = partition[k - 1].iter().copied().collect();
    let lower: Vec<usize> = (0..g.n()).filter(|v| !last.contains(v)).collect();
    let mut index = vec![usize::MAX; g.n()];
    let mut names: Vec<String> = Vec::new();
    for &v in &lower {
        index[v] = names.len();
        names.push(g.name(v).to_string());
    }
    let mut edge_index = std::collections::HashMap::new();
    for (u, v) in g.edges().filter(|(u, v)| !last.contains(u) && !last.contains(v)) {
        edge_index.insert((u, v), names.len());
        names.push(g.edge_vertex_name(u, v));
    }
    let hub = names.len();
    names.push("vstar".into());

    let mut scores: Vec<Vec<ParentSetEntry>> = vec![Vec::new(); names.len()];
    for &v in &lower {
        let mut set: Vec<Vertex> = g
            .neighbors(v)
            .into_iter()
            .filter(|u| !last.contains(u))
            .map(|u| edge_index[&(u.min(v), u.max(v))])
            .collect();
        set.push(hub);
        scores[index[v]].push(ParentSetEntry::new(1, set));
    }
    let mut hub_sets: Vec<Vec<Vertex>> = Vec::new();
    let mut dummy = None;
    for &u in &partition[k - 1] {
        let mut set: Vec<Vertex> = g
            .neighbors(u)
            .into_iter()
            .filter(|w| !last.contains(w))
            .map(|w| index[w])
            .collect();
        if set.is_empty() {
            let id = *dummy.get_or_insert_with(|| {
                names.push("vdummy".into());
                scores.push(Vec::new());
                names.len() - 1
            });
            set.push(id);
        }
        set.sort_unstable();
        if !hub_sets.contains(&set) {
            hub_sets.push(set);
        }
    }
    scores[hub] = hub_sets.into_iter().map(|s| ParentSetEntry::new(1, s)).collect();
    Instance::new(names, scores, k as u64)
}

fn validate_partition(g: &UndirectedGraph, partition: &[Vec<usize>]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for class in partition {
        for &v in class {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { index: v, n: g.n() });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!("vertex {} is in two classes", g.name(v))));
            }
        }
        for (i, &a) in class.iter().enumerate() {
            if let Some(&b) = class[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                return Err(Error::Precondition(format!(
                    "class is not a clique: {} and {} are not adjacent",
                    g.name(a),
                    g.name(b)
                )));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::Precondition(format!("vertex {} is in no class", g.name(v))));
    }
    Ok(())
}

/// Random instance on `n` vertices named `x0..`: each vertex gets up to
/// `delta - 1` distinct nonempty parent sets of size at most `p`, scores
/// uniform in `1..=max_score`.
pub fn gen_random(n: usize, delta: usize, p: usize, max_score: u64, seed: u64) -> Result<Instance> {
    check_random_params(n, delta, p, max_score)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scores = Vec::with_capacity(n);
    for v in 0..n {
        let count = rng.gen_range(0..delta);
        scores.push(random_parent_sets(&mut rng, n, v, count, p, max_score));
    }
    Instance::new(random_names(n), scores, 0)
}

/// Like [`gen_random`], but exactly `d` randomly chosen vertices are
/// dependent, each with `1..=delta - 1` parent sets.
pub fn gen_random_with_dependents(
    n: usize,
    d: usize,
    delta: usize,
    p: usize,
    max_score: u64,
    seed: u64,
) -> Result<Instance> {
    check_random_params(n, delta, p, max_score)?;
    if d > n || (d > 0 && (delta < 2 || p == 0)) {
        return Err(Error::Precondition(format!(
            "cannot make {d} of {n} vertices dependent with delta {delta} and p {p}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut scores = vec![Vec::new(); n];
    let mut deps: Vec<usize> = sample(&mut rng, n, d).into_vec();
    deps.sort_unstable();
    for v in deps {
        let count = rng.gen_range(1..delta);
        scores[v] = random_parent_sets(&mut rng, n, v, count, p, max_score);
        if scores[v].is_empty() {
            scores[v].push(ParentSetEntry::new(1, vec![(v + 1) % n]));
        }
    }
    Instance::new(random_names(n), scores, 0)
}

fn check_random_params(n: usize, delta: usize, p: usize, max_score: u64) -> Result<()> {
    if delta == 0 || max_score == 0 {
        return Err(Error::Precondition("delta and max_score must be positive".into()));
    }
    if n == 0 || p >= n {
        return Err(Error::Precondition(format!("parent-set size {p} infeasible on {n} vertices")));
    }
    Ok(())
}

fn random_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn random_parent_sets(
    rng: &mut ChaCha8Rng,
    n: usize,
    v: usize,
    count: usize,
    p: usize,
    max_score: u64,
) -> Vec<ParentSetEntry> {
    let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    // a bounded number of draws keeps tiny vertex sets from looping forever
    for _ in 0..count * 8 {
        if out.len() == count || p == 0 {
            break;
        }
        let size = rng.gen_range(1..=p);
        let mut set: Vec<usize> = others.choose_multiple(rng, size).copied().collect();
        set.sort_unstable();
        if seen.insert(set.clone()) {
            out.push(ParentSetEntry::new(rng.gen_range(1..=max_score), set));
        }
    }
    out
}

/// Does `G` have an independent set of size `k`?
pub fn brute_is(g: &UndirectedGraph, k: usize) -> Result<bool> {
    let n = g.n();
    if n > 20 {
        return Err(Error::Budget(format!("brute-force independent set limited to 20 vertices, got {n}")));
    }
    if k > n {
        return Ok(false);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &u| acc | 1 << u))
        .collect();
    Ok((0u32..1 << n).any(|mask| {
        mask.count_ones() as usize == k
            && (0..n).all(|v| mask & (1 << v) == 0 || adj[v] & mask == 0)
    }))
}

/// Does `G` have an independent set with one vertex per class?
pub fn brute_multicolored_is(g: &UndirectedGraph, partition: &[Vec<usize>]) -> Result<bool> {
    validate_partition(g, partition)?;
    fn extend(g: &UndirectedGraph, partition: &[Vec<usize>], chosen: &mut Vec<usize>) -> bool {
        let Some(class) = partition.get(chosen.len()) else {
            return true;
        };
        for &v in class {
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                if extend(g, partition, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    Ok(extend(g, partition, &mut Vec::new()))
}

/// Random cluster graph for the multicolored reduction: `k` cliques of the
/// given sizes plus each cross-class edge with probability `density`.
pub fn gen_random_cluster_graph(
    class_sizes: &[usize],
    density: f64,
    seed: u64,
) -> (UndirectedGraph, Vec<Vec<usize>>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n: usize = class_sizes.iter().sum();
    let mut partition = Vec::new();
    let mut next = 0;
    for &s in class_sizes {
        partition.push((next..next + s).collect::<Vec<_>>());
        next += s;
    }
    let mut class_of = vec![0; n];
    for (c, class) in partition.iter().enumerate() {
        for &v in class {
            class_of[v] = c;
        }
    }
    let mut g = UndirectedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if class_of[u] == class_of[v] || rng.gen_bool(density) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    let mut order: Vec<usize> = (0..partition.len()).collect();
    order.shuffle(&mut rng);
    (g, order.into_iter().map(|c| partition[c].clone()).collect())
}
