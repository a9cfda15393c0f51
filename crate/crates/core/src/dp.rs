//! The `3^n` dynamic program over vertex subsets.
//!
//! An entry `T[v, P, S, i]` (with `P ∈ P_F(v)`, `S ⊆ N \ (P ∪ {v})` and
//! `0 ≤ i ≤ |P|`) is the best score of a polytree on `{v} ∪ P ∪ S` in which
//! `v` is a sink with parent set exactly `P`, and the parents `p_j` with
//! `j > i` touch nothing but their arc `(p_j, v)`. Here `p_j` is the `j`-th
//! smallest element of `P` in instance order.
//!
//! ```text
//! T[v, P, ∅, i] = f_v(P)
//! T[v, P, S, 0] = f_v(P) + G[S]
//! T[v, P, S, i] = max_{S' ⊆ S} T[v, P, S \ S', i-1] + G[S' ∪ {p_i}]
//! G[U]          = max_{v' ∈ U, P' ∈ P_F(v'), P' ⊆ U} T[v', P', U \ (P' ∪ {v'}), |P'|]
//! ```
//!
//! `G[U]` is the inner double maximum of both recurrences, memoized once per
//! subset; `G[N]` is the optimum. Entries are filled top-down on demand, so
//! parent sets that never fit a requested subset are never touched.

use crate::error::{Error, Result};
use crate::{ArcSet, Instance, Solution, Vertex};

pub const DEFAULT_MAX_N: usize = 20;
const HARD_MAX_N: usize = 30;
const UNSET: u64 = u64::MAX;

#[derive(Debug, Clone, Copy)]
pub struct DpOptions {
    pub max_n: usize,
}

impl Default for DpOptions {
    fn default() -> Self {
        DpOptions { max_n: DEFAULT_MAX_N }
    }
}

struct Choice {
    mask: u64,
    parents: Vec<Vertex>,
    score: u64,
    /// `N \ (P ∪ {v})`; the `S` coordinates of this choice are packed into
    /// the bits of this mask.
    free: u64,
}

#[derive(Default)]
struct Layer {
    val: Vec<u64>,
    /// Chosen `S'`, packed the same way as `S`.
    pick: Vec<u32>,
}

/// Memo table for one instance. Entries are computed lazily.
pub struct DpTable<'a> {
    inst: &'a Instance,
    choices: Vec<Vec<Choice>>,
    /// `layers[v][k][i - 1]` holds `T[v, P_k, ·, i]` for `i ≥ 1`.
    layers: Vec<Vec<Vec<Layer>>>,
    g_val: Vec<u64>,
    g_pick: Vec<(u32, u32)>,
}

/// Packs the bits of `s` selected by `mask` into the low bits (software pext).
fn compress(s: u64, mask: u64) -> u64 {
    let (mut out, mut bit, mut m) = (0u64, 1u64, mask);
    while m != 0 {
        let low = m & m.wrapping_neg();
        if s & low != 0 {
            out |= bit;
        }
        bit <<= 1;
        m ^= low;
    }
    out
}

/// Inverse of [`compress`] (software pdep).
fn expand(c: u64, mask: u64) -> u64 {
    let (mut out, mut bit, mut m) = (0u64, 1u64, mask);
    while m != 0 {
        let low = m & m.wrapping_neg();
        if c & bit != 0 {
            out |= low;
        }
        bit <<= 1;
        m ^= low;
    }
    out
}

fn mask_of(vs: &[Vertex]) -> u64 {
    vs.iter().fold(0, |m, &u| m | 1 << u)
}

/// Bytes the fully materialized table would take for `inst`.
pub fn dp_memory_estimate(inst: &Instance) -> u128 {
    let n = inst.n() as u32;
    if n == 0 {
        return 0;
    }
    let mut bytes: u128 = (1u128 << n) * 16;
    for v in 0..inst.n() {
        for e in inst.entries(v) {
            let k = e.parents.len() as u32;
            bytes += u128::from(k) * (1u128 << (n - k - 1)) * 12;
        }
    }
    bytes
}

impl<'a> DpTable<'a> {
    pub fn new(inst: &'a Instance, opts: DpOptions) -> Result<Self> {
        let n = inst.n();
        if n > opts.max_n.min(HARD_MAX_N) {
            return Err(Error::Budget(format!(
                "dynamic program limited to n <= {} (instance has n = {n}, estimated table size {} bytes)",
                opts.max_n.min(HARD_MAX_N),
                dp_memory_estimate(inst)
            )));
        }
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let choices: Vec<Vec<Choice>> = (0..n)
            .map(|v| {
                inst.potential_parents(v)
                    .into_iter()
                    .map(|parents| {
                        let mask = mask_of(&parents);
                        Choice {
                            mask,
                            score: inst.local_score(v, &parents),
                            free: full & !(mask | 1 << v),
                            parents,
                        }
                    })
                    .collect()
            })
            .collect();
        let layers = choices
            .iter()
            .map(|cs| {
                cs.iter()
                    .map(|c| (0..c.parents.len()).map(|_| Layer::default()).collect())
                    .collect()
            })
            .collect();
        Ok(DpTable {
            inst,
            choices,
            layers,
            g_val: vec![UNSET; 1usize << n],
            g_pick: vec![(0, 0); 1usize << n],
        })
    }

    /// `T[v, P, S, i]` for a stored (or empty) parent set `P` of `v`.
    pub fn entry(&mut self, v: Vertex, parents: &[Vertex], s: &[Vertex], i: usize) -> Result<u64> {
        let n = self.inst.n();
        if v >= n {
            return Err(Error::InvalidKey(format!("vertex {v} out of range")));
        }
        let pmask = mask_of(parents);
        let k = self.choices[v]
            .iter()
            .position(|c| c.mask == pmask && c.parents.len() == parents.len())
            .ok_or_else(|| Error::InvalidKey(format!("{parents:?} is not a potential parent set of {v}")))?;
        if i > parents.len() {
            return Err(Error::InvalidKey(format!("i = {i} exceeds |P| = {}", parents.len())));
        }
        if s.iter().any(|&u| u >= n) {
            return Err(Error::InvalidKey("S has a vertex out of range".into()));
        }
        let smask = mask_of(s);
        if smask.count_ones() as usize != s.len() {
            return Err(Error::InvalidKey("S lists a vertex twice".into()));
        }
        let free = self.choices[v][k].free;
        if smask & !free != 0 {
            return Err(Error::InvalidKey("S must be disjoint from P and v".into()));
        }
        Ok(self.t(v, k, smask, compress(smask, free), i))
    }

    fn t(&mut self, v: Vertex, k: usize, s: u64, c: u64, i: usize) -> u64 {
        let score = self.choices[v][k].score;
        if s == 0 {
            return score;
        }
        if i == 0 {
            return score + self.g(s);
        }
        let layer = &mut self.layers[v][k][i - 1];
        if layer.val.is_empty() {
            let size = 1usize << self.choices[v][k].free.count_ones();
            layer.val = vec![UNSET; size];
            layer.pick = vec![0; size];
        }
        if layer.val[c as usize] != UNSET {
            return layer.val[c as usize];
        }
        let p_i = 1u64 << self.choices[v][k].parents[i - 1];
        let mut best = UNSET;
        let mut best_sub = 0u64;
        // walk the submasks of S and of its packed form in lockstep; both
        // sequences are decreasing and the packing is order preserving
        let (mut sub, mut csub) = (s, c);
        loop {
            let val = self.t(v, k, s ^ sub, c ^ csub, i - 1) + self.g(sub | p_i);
            if best == UNSET || val > best {
                best = val;
                best_sub = csub;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & s;
            csub = (csub - 1) & c;
        }
        let layer = &mut self.layers[v][k][i - 1];
        layer.val[c as usize] = best;
        layer.pick[c as usize] = best_sub as u32;
        best
    }

    fn g(&mut self, u: u64) -> u64 {
        if u == 0 {
            return 0;
        }
        if self.g_val[u as usize] != UNSET {
            return self.g_val[u as usize];
        }
        let mut best = UNSET;
        let mut pick = (0, 0);
        let mut rest = u;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let vbit = 1u64 << v;
            for k in 0..self.choices[v].len() {
                let (mask, free, size) = {
                    let c = &self.choices[v][k];
                    (c.mask, c.free, c.parents.len())
                };
                if mask & !(u & !vbit) != 0 {
                    continue;
                }
                let s = u & !(mask | vbit);
                let val = self.t(v, k, s, compress(s, free), size);
                if best == UNSET || val > best {
                    best = val;
                    pick = (v as u32, k as u32);
                }
            }
        }
        self.g_val[u as usize] = best;
        self.g_pick[u as usize] = pick;
        best
    }

    /// Evaluates `max_{v, P} T[v, P, N \ (P ∪ {v}), |P|]` and traces back
    /// one optimal arc set.
    pub fn solve(&mut self) -> Solution {
        let n = self.inst.n();
        let mut best: Option<(u64, Vertex, usize)> = None;
        for v in 0..n {
            for k in 0..self.choices[v].len() {
                let (free, size) = (self.choices[v][k].free, self.choices[v][k].parents.len());
                let val = self.t(v, k, free, compress(free, free), size);
                if best.is_none_or(|(b, _, _)| val > b) {
                    best = Some((val, v, k));
                }
            }
        }
        let mut arcs = ArcSet::new();
        let Some((best_score, v, k)) = best else {
            return Solution { best_score: 0, best_arcs: arcs };
        };
        let free = self.choices[v][k].free;
        let size = self.choices[v][k].parents.len();
        self.trace_t(v, k, free, compress(free, free), size, &mut arcs);
        Solution { best_score, best_arcs: arcs }
    }

    fn trace_t(&self, v: Vertex, k: usize, s: u64, c: u64, i: usize, arcs: &mut ArcSet) {
        let choice = &self.choices[v][k];
        if s == 0 || i == 0 {
            arcs.add_parent_set(v, &choice.parents);
            self.trace_g(s, arcs);
            return;
        }
        let csub = u64::from(self.layers[v][k][i - 1].pick[c as usize]);
        let sub = expand(csub, choice.free);
        self.trace_g(sub | 1 << choice.parents[i - 1], arcs);
        self.trace_t(v, k, s ^ sub, c ^ csub, i - 1, arcs);
    }

    fn trace_g(&self, u: u64, arcs: &mut ArcSet) {
        if u == 0 {
            return;
        }
        let (v, k) = self.g_pick[u as usize];
        let (v, k) = (v as usize, k as usize);
        let choice = &self.choices[v][k];
        let s = u & !(choice.mask | 1 << v);
        self.trace_t(v, k, s, compress(s, choice.free), choice.parents.len(), arcs);
    }
}

pub fn solve_dp(inst: &Instance) -> Result<Solution> {
    solve_dp_with(inst, DpOptions::default())
}

pub fn solve_dp_with(inst: &Instance, opts: DpOptions) -> Result<Solution> {
    Ok(DpTable::new(inst, opts)?.solve())
}

/// One table entry, computed on a fresh table.
pub fn dp_entry(inst: &Instance, v: Vertex, parents: &[Vertex], s: &[Vertex], i: usize) -> Result<u64> {
    DpTable::new(inst, DpOptions::default())?.entry(v, parents, s, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_instance;
    use crate::polytree::verify_solution;

    const CHAIN: &str = "3\na 0\nb 1\n1 1 a\nc 1\n1 1 b\n";
    const TRIANGLE: &str = "3\na 0\nb 1\n3 1 a\nc 1\n5 2 a b\n";

    #[test]
    fn pext_pdep_roundtrip() {
        let mask = 0b1011_0110u64;
        for s in 0..256u64 {
            let s = s & mask;
            assert_eq!(expand(compress(s, mask), mask), s);
        }
    }

    #[test]
    fn small_instances() {
        for (text, expected) in [(CHAIN, 2), (TRIANGLE, 5), ("2\na 0\nb 0\n", 0)] {
            let inst = parse_instance(text, 0).unwrap();
            let sol = solve_dp(&inst).unwrap();
            assert_eq!(sol.best_score, expected);
            let report = verify_solution(&inst, &sol.best_arcs).unwrap();
            assert!(report.polytree);
            assert_eq!(report.score, expected);
        }
        let zero = parse_instance("2\na 0\nb 0\n", 0).unwrap();
        assert!(solve_dp(&zero).unwrap().best_arcs.is_empty());
    }

    #[test]
    fn chain_entries() {
        let inst = parse_instance(CHAIN, 0).unwrap();
        // T[c, {b}, {a}, 1] = 2 and T[b, {a}, {c}, 1] = 1
        assert_eq!(dp_entry(&inst, 2, &[1], &[0], 1).unwrap(), 2);
        assert_eq!(dp_entry(&inst, 1, &[0], &[2], 1).unwrap(), 1);
        // with i = 0 the parent b may not take a parent of its own
        assert_eq!(dp_entry(&inst, 2, &[1], &[0], 0).unwrap(), 1);
    }

    #[test]
    fn initialization_entries() {
        let inst = parse_instance(TRIANGLE, 0).unwrap();
        let mut table = DpTable::new(&inst, DpOptions::default()).unwrap();
        for v in 0..inst.n() {
            for e in inst.entries(v) {
                for i in 0..=e.parents.len() {
                    assert_eq!(table.entry(v, &e.parents, &[], i).unwrap(), e.score);
                }
            }
        }
    }

    #[test]
    fn invalid_keys() {
        let inst = parse_instance(CHAIN, 0).unwrap();
        assert!(matches!(dp_entry(&inst, 2, &[0], &[], 0), Err(Error::InvalidKey(_))));
        assert!(matches!(dp_entry(&inst, 2, &[1], &[1], 0), Err(Error::InvalidKey(_))));
        assert!(matches!(dp_entry(&inst, 2, &[1], &[], 2), Err(Error::InvalidKey(_))));
        assert!(matches!(dp_entry(&inst, 9, &[], &[], 0), Err(Error::InvalidKey(_))));
    }

    #[test]
    fn budget() {
        let inst = parse_instance(CHAIN, 0).unwrap();
        assert!(matches!(solve_dp_with(&inst, DpOptions { max_n: 2 }), Err(Error::Budget(_))));
    }
}
