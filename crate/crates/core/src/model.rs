//! Instance data model: vertices, local scores in non-zero representation,
//! the score-file format, and the structures derived from the scores
//! (potential parent sets, dependent vertices, the directed superstructure,
//! and the uniform-size padding used by the representative-set algorithms).

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, ParseError, Result};
use crate::polytree::ArcSet;

/// Vertices are addressed by their position in the instance ordering.
pub type Vertex = usize;

/// One stored local score `f_v(P) = score` with `P` nonempty.
///
/// `parents` is kept sorted ascending, i.e. in instance order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParentSetEntry {
    pub score: u64,
    pub parents: Vec<Vertex>,
}

impl ParentSetEntry {
    pub fn new(score: u64, mut parents: Vec<Vertex>) -> Self {
        parents.sort_unstable();
        ParentSetEntry { score, parents }
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }
}

/// A polytree learning instance `(N, F, t)`.
///
/// The vertex order is the order of declaration, and it doubles as the fixed
/// total ordering used by the subset dynamic program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    names: Vec<String>,
    index: HashMap<String, Vertex>,
    scores: Vec<Vec<ParentSetEntry>>,
    threshold: u64,
}

impl Instance {
    /// Builds an instance from already-resolved parts, checking every
    /// invariant of the non-zero representation.
    pub fn new(names: Vec<String>, scores: Vec<Vec<ParentSetEntry>>, threshold: u64) -> Result<Self> {
        if names.len() != scores.len() {
            return Err(Error::Invalid(format!(
                "{} vertex names but {} score lists",
                names.len(),
                scores.len()
            )));
        }
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (v, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::Invalid(format!("invalid vertex name `{name}`")));
            }
            if index.insert(name.clone(), v).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex name `{name}`")));
            }
        }
        let mut scores = scores;
        for (v, entries) in scores.iter_mut().enumerate() {
            let mut seen = HashSet::new();
            for e in entries.iter_mut() {
                e.parents.sort_unstable();
                if e.score == 0 {
                    return Err(Error::Invalid(format!("zero score entry for `{}`", names[v])));
                }
                if e.parents.is_empty() {
                    return Err(Error::Invalid(format!("empty parent set entry for `{}`", names[v])));
                }
                if e.parents.windows(2).any(|w| w[0] == w[1]) {
                    return Err(Error::Invalid(format!("repeated parent for `{}`", names[v])));
                }
                if let Some(&u) = e.parents.iter().find(|&&u| u >= n) {
                    return Err(Error::VertexOutOfRange { index: u, n });
                }
                if e.parents.contains(&v) {
                    return Err(Error::Invalid(format!("`{}` lists itself as a parent", names[v])));
                }
                if !seen.insert(e.parents.clone()) {
                    return Err(Error::Invalid(format!("duplicate parent set for `{}`", names[v])));
                }
            }
        }
        Ok(Instance { names, index, scores, threshold })
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<Vertex> {
        self.index.get(name).copied()
    }

    /// Stored entries of `v`, in file order.
    pub fn entries(&self, v: Vertex) -> &[ParentSetEntry] {
        &self.scores[v]
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn with_threshold(mut self, t: u64) -> Self {
        self.threshold = t;
        self
    }

    /// `f_v(P)`; zero for every set that is not stored, including the empty set.
    pub fn local_score(&self, v: Vertex, parents: &[Vertex]) -> u64 {
        if parents.is_empty() {
            return 0;
        }
        let mut sorted = parents.to_vec();
        sorted.sort_unstable();
        self.scores[v]
            .iter()
            .find(|e| e.parents == sorted)
            .map_or(0, |e| e.score)
    }

    /// `P_F(v)`: the empty set first, then every stored parent set in order.
    pub fn potential_parents(&self, v: Vertex) -> Vec<Vec<Vertex>> {
        std::iter::once(Vec::new())
            .chain(self.scores[v].iter().map(|e| e.parents.clone()))
            .collect()
    }

    /// Vertices with at least one nonempty potential parent set.
    pub fn dependent_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| !self.scores[v].is_empty()).collect()
    }

    /// `δ_F`, the maximum number of potential parent sets of any vertex.
    pub fn delta(&self) -> usize {
        1 + self.scores.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Maximum cardinality of a stored parent set (0 when nothing is stored).
    pub fn max_parent_size(&self) -> usize {
        self.scores
            .iter()
            .flat_map(|es| es.iter().map(ParentSetEntry::len))
            .max()
            .unwrap_or(0)
    }

    /// Total number of stored entries.
    pub fn entry_count(&self) -> usize {
        self.scores.iter().map(Vec::len).sum()
    }

    pub fn superstructure(&self) -> Superstructure {
        build_superstructure(self)
    }

    /// Renders an arc set with vertex names, one `PARENT CHILD` pair per line.
    pub fn format_arcs(&self, arcs: &ArcSet) -> String {
        let mut out = String::new();
        for (u, v) in arcs.iter() {
            let _ = writeln!(out, "{} {}", self.names[u], self.names[v]);
        }
        out
    }

    /// Parses the `PARENT CHILD` arc-list format against this instance's names.
    pub fn parse_arcs(&self, text: &str) -> Result<ArcSet, ParseError> {
        let mut arcs = ArcSet::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            if toks.len() != 2 {
                return Err(ParseError::Malformed {
                    line: line_no,
                    msg: "expected `PARENT CHILD`".into(),
                });
            }
            let lookup = |name: &str| {
                self.index_of(name).ok_or_else(|| ParseError::UnknownVertex {
                    line: line_no,
                    name: name.to_string(),
                })
            };
            let (u, v) = (lookup(toks[0])?, lookup(toks[1])?);
            if u == v {
                return Err(ParseError::SelfParent { line: line_no, name: toks[0].to_string() });
            }
            arcs.insert(u, v);
        }
        Ok(arcs)
    }
}

struct RawEntry {
    line: usize,
    score: u64,
    parents: Vec<(String, usize)>,
}

struct RawVertex {
    line: usize,
    name: String,
    entries: Vec<RawEntry>,
}

fn parse_count(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| ParseError::Malformed {
        line,
        msg: format!("{what} must be a non-negative integer, got `{tok}`"),
    })
}

/// Reads the score-file format.
///
/// ```text
/// n
/// NAME COUNT
/// SCORE K P1 .. PK      (COUNT times)
/// ...                   (n vertex blocks)
/// ```
///
/// Parent names may refer to vertices declared later in the file.
pub fn parse_instance(text: &str, t: u64) -> Result<Instance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::MalformedHeader {
        line: 1,
        msg: "empty input".into(),
    })?;
    let header_toks: Vec<&str> = header.split_whitespace().collect();
    if header_toks.len() != 1 {
        return Err(ParseError::MalformedHeader {
            line: header_line,
            msg: "expected a single vertex count".into(),
        });
    }
    let n: usize = header_toks[0].parse().map_err(|_| ParseError::MalformedHeader {
        line: header_line,
        msg: format!("vertex count must be a non-negative integer, got `{}`", header_toks[0]),
    })?;

    let mut last_line = header_line;
    let mut raw = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines.next().ok_or_else(|| ParseError::UnexpectedEof {
            line: last_line,
            msg: format!("expected {n} vertex blocks"),
        })?;
        last_line = line;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                msg: "expected `NAME COUNT`".into(),
            });
        }
        let count = parse_count(toks[1], line, "entry count")?;
        let mut entries = Vec::with_capacity(count);
        for _ in 0..count {
            let (eline, etext) = lines.next().ok_or_else(|| ParseError::UnexpectedEof {
                line: last_line,
                msg: format!("expected {count} entries for `{}`", toks[0]),
            })?;
            last_line = eline;
            entries.push(parse_entry(eline, etext)?);
        }
        raw.push(RawVertex { line, name: toks[0].to_string(), entries });
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::Malformed {
            line,
            msg: format!("trailing content after {n} vertex blocks"),
        });
    }

    let mut index = HashMap::with_capacity(n);
    for (v, rv) in raw.iter().enumerate() {
        if index.insert(rv.name.clone(), v).is_some() {
            return Err(ParseError::DuplicateVertex { line: rv.line, name: rv.name.clone() });
        }
    }
    for rv in &raw {
        if is_reserved_padding_name(&rv.name, &index) {
            return Err(ParseError::ReservedName { line: rv.line, name: rv.name.clone() });
        }
    }

    let mut names = Vec::with_capacity(n);
    let mut scores = Vec::with_capacity(n);
    for (v, rv) in raw.into_iter().enumerate() {
        let mut seen = HashSet::new();
        let mut list = Vec::with_capacity(rv.entries.len());
        for e in rv.entries {
            let mut parents = Vec::with_capacity(e.parents.len());
            for (pname, pline) in &e.parents {
                let u = *index.get(pname).ok_or_else(|| ParseError::UnknownVertex {
                    line: *pline,
                    name: pname.clone(),
                })?;
                if u == v {
                    return Err(ParseError::SelfParent { line: *pline, name: pname.clone() });
                }
                parents.push(u);
            }
            parents.sort_unstable();
            if parents.windows(2).any(|w| w[0] == w[1]) {
                return Err(ParseError::Malformed {
                    line: e.line,
                    msg: "a parent is listed twice".into(),
                });
            }
            if !seen.insert(parents.clone()) {
                return Err(ParseError::DuplicateParentSet { line: e.line, name: rv.name.clone() });
            }
            list.push(ParentSetEntry { score: e.score, parents });
        }
        names.push(rv.name);
        scores.push(list);
    }
    Ok(Instance { names, index, scores, threshold: t })
}

fn parse_entry(line: usize, text: &str) -> Result<RawEntry, ParseError> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() < 2 {
        return Err(ParseError::Malformed {
            line,
            msg: "expected `SCORE K P1 .. PK`".into(),
        });
    }
    if toks[0].starts_with('-') {
        return Err(ParseError::NegativeScore { line, value: toks[0].to_string() });
    }
    let score: u64 = toks[0].parse().map_err(|_| ParseError::Malformed {
        line,
        msg: format!("score must be a non-negative integer, got `{}`", toks[0]),
    })?;
    let k = parse_count(toks[1], line, "parent count")?;
    if toks.len() != 2 + k {
        return Err(ParseError::Malformed {
            line,
            msg: format!("declared {k} parents but found {}", toks.len() - 2),
        });
    }
    if score == 0 {
        return Err(ParseError::ZeroScore { line });
    }
    if k == 0 {
        return Err(ParseError::EmptyParentSet { line });
    }
    Ok(RawEntry {
        line,
        score,
        parents: toks[2..].iter().map(|s| (s.to_string(), line)).collect(),
    })
}

/// Names of the form `<declared>__pad<i>` are reserved for padding vertices.
fn is_reserved_padding_name(name: &str, index: &HashMap<String, Vertex>) -> bool {
    let Some(pos) = name.rfind(PAD_MARK) else {
        return false;
    };
    let (base, suffix) = (&name[..pos], &name[pos + PAD_MARK.len()..]);
    !suffix.is_empty()
        && suffix.bytes().all(|b| b.is_ascii_digit())
        && !suffix.starts_with('0')
        && index.contains_key(base)
}

const PAD_MARK: &str = "__pad";

/// Canonical text form: entries sorted by size, then by parent list.
pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", inst.n());
    for v in 0..inst.n() {
        let mut entries: Vec<&ParentSetEntry> = inst.entries(v).iter().collect();
        entries.sort_by(|a, b| (a.len(), &a.parents).cmp(&(b.len(), &b.parents)));
        let _ = writeln!(out, "{} {}", inst.name(v), entries.len());
        for e in entries {
            let _ = write!(out, "{} {}", e.score, e.len());
            for &u in &e.parents {
                let _ = write!(out, " {}", inst.name(u));
            }
            out.push('\n');
        }
    }
    out
}

/// The directed superstructure `S_F`: arc `(u, v)` exists iff `u` occurs in
/// some potential parent set of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superstructure {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    index: HashMap<(Vertex, Vertex), usize>,
}

impl Superstructure {
    /// Collects arcs child by child, in the order the parent sets are given.
    pub fn from_parent_sets<'a, I>(n: usize, sets: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, &'a [Vertex])>,
    {
        let mut arcs = Vec::new();
        let mut index = HashMap::new();
        for (child, parents) in sets {
            for &u in parents {
                index.entry((u, child)).or_insert_with(|| {
                    arcs.push((u, child));
                    arcs.len() - 1
                });
            }
        }
        Superstructure { n, arcs, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arcs `m`.
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn arc(&self, e: usize) -> (Vertex, Vertex) {
        self.arcs[e]
    }

    pub fn arc_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.index.get(&(u, v)).copied()
    }

    /// True when the superstructure, read as a directed graph, has no cycle.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.n];
        let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            indeg[v] += 1;
            out[u].push(v);
        }
        let mut stack: Vec<Vertex> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for &v in &out[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
        seen == self.n
    }
}

pub fn build_superstructure(inst: &Instance) -> Superstructure {
    Superstructure::from_parent_sets(
        inst.n(),
        (0..inst.n()).flat_map(|v| inst.entries(v).iter().map(move |e| (v, e.parents.as_slice()))),
    )
}

/// An instance in which every nonempty potential parent set has exactly `p`
/// vertices.
///
/// Each dependent vertex `v` owns `p` fresh vertices `<v>__pad1..<v>__padp`,
/// appended after the original vertices. An entry `P` with `|P| < p` is
/// stored as `P` plus the first `p - |P|` fresh vertices of `v`. The empty
/// parent set of a dependent vertex corresponds to the full fresh set with
/// score 0; it is not stored (scores stay in non-zero representation) but is
/// returned by [`PaddedInstance::candidates`].
#[derive(Debug, Clone)]
pub struct PaddedInstance {
    instance: Instance,
    p: usize,
    original_n: usize,
    fresh: Vec<Vec<Vertex>>,
}

impl PaddedInstance {
    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn original_n(&self) -> usize {
        self.original_n
    }

    /// Fresh vertices owned by `v` (empty for nondependent vertices).
    pub fn fresh(&self, v: Vertex) -> &[Vertex] {
        self.fresh.get(v).map_or(&[], Vec::as_slice)
    }

    pub fn is_padding(&self, v: Vertex) -> bool {
        v >= self.original_n
    }

    /// Every nonempty candidate parent set of `v` with its score: the
    /// zero-score stand-in for the empty set first, then the stored entries.
    pub fn candidates(&self, v: Vertex) -> Vec<(Vec<Vertex>, u64)> {
        let entries = self.instance.entries(v);
        if entries.is_empty() || self.p == 0 {
            return Vec::new();
        }
        std::iter::once((self.fresh[v].clone(), 0))
            .chain(entries.iter().map(|e| (e.parents.clone(), e.score)))
            .collect()
    }

    /// Superstructure over all candidate sets, including the stand-ins.
    pub fn superstructure(&self) -> Superstructure {
        let cands: Vec<(Vertex, Vec<(Vec<Vertex>, u64)>)> =
            (0..self.original_n).map(|v| (v, self.candidates(v))).collect();
        Superstructure::from_parent_sets(
            self.instance.n(),
            cands
                .iter()
                .flat_map(|(v, cs)| cs.iter().map(move |(ps, _)| (*v, ps.as_slice()))),
        )
    }

    /// Drops every vertex that is padding from a parent set.
    pub fn strip_set(&self, parents: &[Vertex]) -> Vec<Vertex> {
        parents.iter().copied().filter(|&u| !self.is_padding(u)).collect()
    }

    /// Projects an arc set of the padded instance back to the original vertices.
    pub fn strip(&self, arcs: &ArcSet) -> ArcSet {
        arcs.iter()
            .filter(|&(u, v)| !self.is_padding(u) && !self.is_padding(v))
            .collect()
    }
}

/// Adds `p` fresh nondependent vertices per dependent vertex and lifts every
/// stored parent set to size exactly `p`. Scores are unchanged.
pub fn pad_to_uniform(inst: &Instance, p: usize) -> Result<PaddedInstance> {
    let max = inst.max_parent_size();
    if p < max {
        return Err(Error::PaddingTooSmall { p, size: max });
    }
    let original_n = inst.n();
    let mut names = inst.names().to_vec();
    let mut fresh = vec![Vec::new(); original_n];
    for v in inst.dependent_vertices() {
        for i in 1..=p {
            fresh[v].push(names.len());
            names.push(format!("{}{PAD_MARK}{i}", inst.name(v)));
        }
    }
    let mut scores: Vec<Vec<ParentSetEntry>> = (0..original_n)
        .map(|v| {
            inst.entries(v)
                .iter()
                .map(|e| {
                    let mut parents = e.parents.clone();
                    parents.extend_from_slice(&fresh[v][..p - e.len()]);
                    ParentSetEntry::new(e.score, parents)
                })
                .collect()
        })
        .collect();
    scores.resize(names.len(), Vec::new());
    let instance = Instance::new(names, scores, inst.threshold())?;
    Ok(PaddedInstance { instance, p, original_n, fresh })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const CHAIN: &str = "3\na 0\nb 1\n1 1 a\nc 1\n1 1 b\n";

    #[test]
    fn parses_empty_score_instance() {
        let inst = parse_instance("1\na 0\n", 0).unwrap();
        assert_eq!(inst.n(), 1);
        assert_eq!(inst.entry_count(), 0);
        assert_eq!(inst.threshold(), 0);
    }

    #[test]
    fn parses_chain() {
        let inst = parse_instance(CHAIN, 2).unwrap();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.local_score(1, &[0]), 1);
        assert_eq!(inst.local_score(2, &[1]), 1);
        assert_eq!(inst.local_score(2, &[0]), 0);
        assert_eq!(inst.threshold(), 2);
    }

    #[test]
    fn parse_diagnostics() {
        let cases: &[(&str, fn(&ParseError) -> bool, usize)] = &[
            ("2\na 0\nb 1\n0 1 a\n", |e| matches!(e, ParseError::ZeroScore { .. }), 4),
            ("2\na 0\nb 1\n-3 1 a\n", |e| matches!(e, ParseError::NegativeScore { .. }), 4),
            ("2\na 0\nb 1\n1 1 z\n", |e| matches!(e, ParseError::UnknownVertex { .. }), 4),
            ("2\na 0\nb 1\n1 1 b\n", |e| matches!(e, ParseError::SelfParent { .. }), 4),
            ("2\na 0\nb 2\n1 1 a\n2 1 a\n", |e| matches!(e, ParseError::DuplicateParentSet { .. }), 5),
            ("x\na 0\n", |e| matches!(e, ParseError::MalformedHeader { .. }), 1),
            ("2\na 0\nb 1\n1.5 1 a\n", |e| matches!(e, ParseError::Malformed { .. }), 4),
            ("2\na 0\nb 1\n1 2 a\n", |e| matches!(e, ParseError::Malformed { .. }), 4),
            ("2\na 0\nb 1\n3 0\n", |e| matches!(e, ParseError::EmptyParentSet { .. }), 4),
            ("2\na 0\na 0\n", |e| matches!(e, ParseError::DuplicateVertex { .. }), 3),
            ("2\na 0\nb 2\n1 1 a\n", |e| matches!(e, ParseError::UnexpectedEof { .. }), 4),
            ("1\na 0\nb 0\n", |e| matches!(e, ParseError::Malformed { .. }), 3),
            ("2\na 0\na__pad1 0\n", |e| matches!(e, ParseError::ReservedName { .. }), 3),
        ];
        for (text, check, line) in cases {
            let err = parse_instance(text, 0).unwrap_err();
            assert!(check(&err), "{text:?} gave {err:?}");
            assert_eq!(err.line(), *line, "{text:?} gave {err:?}");
        }
    }

    #[test]
    fn forward_references_resolve() {
        let inst = parse_instance("2\na 1\n4 1 b\nb 0\n", 0).unwrap();
        assert_eq!(inst.local_score(0, &[1]), 4);
    }

    #[test]
    fn pad_like_names_without_base_are_fine() {
        assert!(parse_instance("1\nq__pad1 0\n", 0).is_ok());
        assert!(parse_instance("2\na 0\na__pad0 0\n", 0).is_ok());
    }

    #[test]
    fn potential_parents_and_dependents() {
        let inst = parse_instance(CHAIN, 0).unwrap();
        assert_eq!(inst.potential_parents(2), vec![vec![], vec![1]]);
        assert_eq!(inst.potential_parents(0), vec![Vec::<usize>::new()]);
        assert_eq!(inst.dependent_vertices(), vec![1, 2]);
        let three = parse_instance("3\na 3\n1 1 b\n2 1 c\n3 2 b c\nb 0\nc 0\n", 0).unwrap();
        assert_eq!(three.potential_parents(0).len(), 4);
        assert_eq!(three.delta(), 4);
        let zero = parse_instance("2\na 0\nb 0\n", 0).unwrap();
        assert!(zero.dependent_vertices().is_empty());
        assert_eq!(zero.delta(), 1);
    }

    #[test]
    fn superstructure_arcs() {
        let inst = parse_instance(CHAIN, 0).unwrap();
        let s = build_superstructure(&inst);
        assert_eq!(s.m(), 2);
        assert_eq!(s.arcs(), &[(0, 1), (1, 2)]);
        assert_eq!(s.arc_index(1, 2), Some(1));
        assert_eq!(s.arc_index(2, 1), None);

        let zero = parse_instance("2\na 0\nb 0\n", 0).unwrap();
        assert_eq!(build_superstructure(&zero).m(), 0);

        let tri = parse_instance("3\na 0\nb 1\n3 1 a\nc 2\n5 2 a b\n2 1 a\n", 0).unwrap();
        let s = build_superstructure(&tri);
        assert_eq!(s.m(), 3);
        for arc in [(0, 2), (1, 2), (0, 1)] {
            assert!(s.arc_index(arc.0, arc.1).is_some());
        }
    }

    #[test]
    fn canonical_write() {
        let inst = parse_instance("3\na 0\nb 0\nc 3\n5 2 b a\n2 1 b\n1 1 a\n", 0).unwrap();
        assert_eq!(write_instance(&inst), "3\na 0\nb 0\nc 3\n1 1 a\n2 1 b\n5 2 a b\n");
    }

    #[test]
    fn padding_chain() {
        let inst = parse_instance(CHAIN, 0).unwrap();
        let padded = pad_to_uniform(&inst, 2).unwrap();
        let pi = padded.instance();
        assert_eq!(pi.n(), 7);
        let b1 = pi.index_of("b__pad1").unwrap();
        let c1 = pi.index_of("c__pad1").unwrap();
        assert_eq!(pi.local_score(1, &[0, b1]), 1);
        assert_eq!(pi.local_score(2, &[1, c1]), 1);
        assert!(pi.index_of("a__pad1").is_none());
        for v in 0..pi.n() {
            assert!(pi.entries(v).iter().all(|e| e.len() == 2));
        }
        assert_eq!(padded.candidates(1)[0], (padded.fresh(1).to_vec(), 0));
        assert!(padded.candidates(0).is_empty());
    }

    #[test]
    fn padding_same_size_and_errors() {
        let inst = parse_instance("2\na 1\n4 1 b\nb 0\n", 0).unwrap();
        let padded = pad_to_uniform(&inst, 1).unwrap();
        assert_eq!(padded.instance().n(), 3);
        assert_eq!(padded.instance().entries(0), inst.entries(0));

        let zero = parse_instance("2\na 0\nb 0\n", 0).unwrap();
        let padded = pad_to_uniform(&zero, 3).unwrap();
        assert_eq!(padded.instance(), &zero);

        let tri = parse_instance("3\na 0\nb 0\nc 1\n5 2 a b\n", 0).unwrap();
        assert!(matches!(pad_to_uniform(&tri, 1), Err(Error::PaddingTooSmall { p: 1, size: 2 })));
    }
}
