//! Max q-representative families.
//!
//! Members are sorted by weight (heaviest first) and each one is mapped to
//! its exterior-algebra coordinates, the `x × x` minors of its columns in
//! the matroid representation. A member is kept iff its coordinate vector is
//! linearly independent of the vectors kept before it. If a dropped member
//! `A` fits some `B`, then the wedge of `A ∪ B` is nonzero, so some earlier
//! (hence at least as heavy) kept member also fits `B`.
//!
//! Two representations are available:
//! * exact: the GF(2) incidence representation with `n` rows; coordinates
//!   are sparse and indexed by row subsets;
//! * truncated: the incidence columns multiplied by a seeded random
//!   `(x + q) × n` matrix over GF(2^64), which keeps every set of at most
//!   `x + q` arcs independent with high probability and bounds the output
//!   by `C(x + q, x)`.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gf64::Gf64;
use super::SuperMatroid;
use crate::error::{Error, Result};

/// A set of ground-set (arc) indices with a weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedSet {
    pub arcs: Vec<usize>,
    pub weight: u64,
}

impl WeightedSet {
    pub fn new(mut arcs: Vec<usize>, weight: u64) -> Self {
        arcs.sort_unstable();
        WeightedSet { arcs, weight }
    }
}

/// A family of weighted sets that all have the same cardinality `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSetFamily {
    x: usize,
    members: Vec<WeightedSet>,
}

impl WeightedSetFamily {
    pub fn new(x: usize) -> Self {
        WeightedSetFamily { x, members: Vec::new() }
    }

    /// The family `{∅}` with weight 0.
    pub fn unit() -> Self {
        WeightedSetFamily { x: 0, members: vec![WeightedSet::new(Vec::new(), 0)] }
    }

    pub fn from_members<I: IntoIterator<Item = WeightedSet>>(x: usize, members: I) -> Result<Self> {
        let mut fam = WeightedSetFamily::new(x);
        for m in members {
            fam.push(m)?;
        }
        Ok(fam)
    }

    pub fn push(&mut self, member: WeightedSet) -> Result<()> {
        if member.arcs.len() != self.x {
            return Err(Error::Precondition(format!(
                "member of size {} in a {}-family",
                member.arcs.len(),
                self.x
            )));
        }
        self.members.push(member);
        Ok(())
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[WeightedSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, WeightedSet> {
        self.members.iter()
    }

    pub fn extend(&mut self, other: WeightedSetFamily) -> Result<()> {
        if other.is_empty() {
            return Ok(());
        }
        if other.x != self.x {
            return Err(Error::Precondition(format!(
                "cannot merge a {}-family into a {}-family",
                other.x, self.x
            )));
        }
        self.members.extend(other.members);
        Ok(())
    }

    pub fn max_weight_member(&self) -> Option<&WeightedSet> {
        self.members
            .iter()
            .max_by(|a, b| a.weight.cmp(&b.weight).then_with(|| b.arcs.cmp(&a.arcs)))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RepOptions {
    pub truncate: bool,
    pub seed: u64,
    /// Upper bound on coordinates per member vector.
    pub max_coordinates: usize,
}

impl Default for RepOptions {
    fn default() -> Self {
        RepOptions { truncate: false, seed: 0, max_coordinates: 1_000_000 }
    }
}

const TRUNCATION_RETRIES: u64 = 3;

/// Computes `Â ⊆ F` that max `q`-represents `F`. Members that are dependent
/// in the matroid fit nothing and are dropped.
pub fn representative_family(
    sm: &SuperMatroid,
    family: &WeightedSetFamily,
    q: usize,
    opts: RepOptions,
) -> Result<WeightedSetFamily> {
    let x = family.x();
    if let Some(&bad) = family.iter().flat_map(|m| m.arcs.iter()).find(|&&e| e >= sm.m()) {
        return Err(Error::Precondition(format!("arc index {bad} outside the ground set")));
    }
    let ordered = heaviest_first(sm, family);
    if ordered.is_empty() {
        return Ok(WeightedSetFamily::new(x));
    }
    if q == 0 || x == 0 {
        // every independent member fits the empty set; the heaviest suffices
        return Ok(WeightedSetFamily { x, members: vec![ordered[0].clone()] });
    }
    let kept = if opts.truncate {
        let mut seed = opts.seed;
        loop {
            match truncated_greedy(sm, &ordered, x, q, seed, opts.max_coordinates)? {
                Some(kept) => break kept,
                None if seed - opts.seed < TRUNCATION_RETRIES => seed += 1,
                None => return Err(Error::TruncationFailure { seed }),
            }
        }
    } else {
        exact_greedy(sm, &ordered, opts.max_coordinates)?
    };
    Ok(WeightedSetFamily { x, members: kept.into_iter().map(|i| ordered[i].clone()).collect() })
}

/// Independent members, heaviest first, ties by arc list; duplicates removed.
fn heaviest_first(sm: &SuperMatroid, family: &WeightedSetFamily) -> Vec<WeightedSet> {
    let mut ordered: Vec<WeightedSet> = family
        .iter()
        .filter(|m| sm.is_independent(&m.arcs))
        .cloned()
        .collect();
    ordered.sort_by(|a, b| b.weight.cmp(&a.weight).then_with(|| a.arcs.cmp(&b.arcs)));
    let mut seen = HashSet::new();
    ordered.retain(|m| seen.insert(m.arcs.clone()));
    ordered
}

/// Sparse GF(2) minors: the set of `x`-row subsets (as bit masks) whose
/// minor is 1. Laplace expansion along the last column; signs vanish in
/// characteristic 2 and each column has exactly two ones.
fn gf2_wedge(sm: &SuperMatroid, arcs: &[usize], cap: usize) -> Result<Vec<u128>> {
    let mut cur: HashSet<u128> = HashSet::from([0u128]);
    for &e in arcs {
        let (u, v) = sm.arc(e);
        let mut next: HashSet<u128> = HashSet::with_capacity(cur.len() * 2);
        for &rows in &cur {
            for w in [u, v] {
                let bit = 1u128 << w;
                if rows & bit == 0 && !next.insert(rows | bit) {
                    next.remove(&(rows | bit));
                }
            }
        }
        if next.len() > cap {
            return Err(Error::Budget(format!(
                "exterior coordinates exceed {cap}; use truncation"
            )));
        }
        cur = next;
    }
    let mut out: Vec<u128> = cur.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

fn xor_sorted(a: &[u128], b: &[u128]) -> Vec<u128> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn exact_greedy(sm: &SuperMatroid, ordered: &[WeightedSet], cap: usize) -> Result<Vec<usize>> {
    if sm.n() > 128 {
        return Err(Error::Budget(format!(
            "exact representation supports at most 128 vertices (got {}); use truncation",
            sm.n()
        )));
    }
    // basis vectors keyed by their largest coordinate
    let mut basis: HashMap<u128, Vec<u128>> = HashMap::new();
    let mut kept = Vec::new();
    for (idx, member) in ordered.iter().enumerate() {
        let mut residual = gf2_wedge(sm, &member.arcs, cap)?;
        while let Some(&lead) = residual.last() {
            match basis.get(&lead) {
                Some(b) => residual = xor_sorted(&residual, b),
                None => {
                    basis.insert(lead, residual);
                    kept.push(idx);
                    break;
                }
            }
        }
    }
    Ok(kept)
}

fn binomial_table(r: usize) -> Vec<Vec<usize>> {
    let mut c = vec![vec![0usize; r + 2]; r + 2];
    for a in 0..=r + 1 {
        c[a][0] = 1;
        for b in 1..=a {
            c[a][b] = c[a - 1][b - 1].saturating_add(c[a - 1][b]);
        }
    }
    c
}

/// Colex rank of a row subset among subsets of the same size.
fn colex_rank(mut mask: u64, binom: &[Vec<usize>]) -> usize {
    let mut rank = 0;
    let mut t = 1;
    while mask != 0 {
        let pos = mask.trailing_zeros() as usize;
        rank += binom[pos][t];
        t += 1;
        mask &= mask - 1;
    }
    rank
}

/// All `j`-subsets of `r` rows in increasing numeric (= colex) order.
fn subsets_of_size(r: usize, j: usize) -> Vec<u64> {
    if j == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut s: u64 = (1u64 << j) - 1;
    let limit = 1u64 << r;
    while s < limit {
        out.push(s);
        let c = s & s.wrapping_neg();
        let rr = s + c;
        s = (((rr ^ s) >> 2) / c) | rr;
    }
    out
}

/// Dense wedge of `x` columns in GF(2^64)^r, indexed by colex rank.
/// Colex ranks of subsets, either tabulated by mask or computed on demand.
struct Ranker<'a> {
    binom: &'a [Vec<usize>],
    table: Option<Vec<u32>>,
}

impl<'a> Ranker<'a> {
    const TABLE_LIMIT: usize = 20;

    fn new(r: usize, levels: &[Vec<u64>], binom: &'a [Vec<usize>]) -> Self {
        let table = (r <= Self::TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; 1 << r];
            for level in levels {
                for (rank, &mask) in level.iter().enumerate() {
                    t[mask as usize] = rank as u32;
                }
            }
            t
        });
        Ranker { binom, table }
    }

    fn rank(&self, mask: u64) -> usize {
        match &self.table {
            Some(t) => t[mask as usize] as usize,
            None => colex_rank(mask, self.binom),
        }
    }
}

fn dense_wedge(cols: &[Vec<Gf64>], r: usize, levels: &[Vec<u64>], ranker: &Ranker) -> Vec<Gf64> {
    let mut prev = vec![Gf64::ONE];
    for (j, col) in cols.iter().enumerate() {
        let level = &levels[j + 1];
        let mut cur = vec![Gf64::ZERO; level.len()];
        for (slot, &rows) in level.iter().enumerate() {
            let mut acc = Gf64::ZERO;
            let mut rest = rows;
            while rest != 0 {
                let w = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if !col[w].is_zero() {
                    acc += col[w] * prev[ranker.rank(rows & !(1 << w))];
                }
            }
            cur[slot] = acc;
        }
        prev = cur;
    }
    debug_assert!(cols.is_empty() || prev.len() == ranker.binom[r][cols.len()]);
    prev
}

/// Greedy over the truncated representation. `None` signals that the random
/// matrix lost the independence of some member, which calls for a new seed.
fn truncated_greedy(
    sm: &SuperMatroid,
    ordered: &[WeightedSet],
    x: usize,
    q: usize,
    seed: u64,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    let r = x + q;
    if r > 63 {
        return Err(Error::Budget(format!("truncation rank {r} exceeds 63")));
    }
    let binom = binomial_table(r);
    let coords = binom[r][x];
    if coords > cap {
        return Err(Error::Budget(format!(
            "truncated representation needs C({r}, {x}) = {coords} coordinates, limit {cap}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lift: Vec<Vec<Gf64>> = (0..sm.n())
        .map(|_| (0..r).map(|_| Gf64(rng.gen())).collect())
        .collect();
    let levels: Vec<Vec<u64>> = (0..=x).map(|j| subsets_of_size(r, j)).collect();
    let ranker = Ranker::new(r, &levels, &binom);

    let mut basis: Vec<(usize, Vec<Gf64>)> = Vec::new();
    let mut kept = Vec::new();
    for (idx, member) in ordered.iter().enumerate() {
        if basis.len() == coords {
            // full rank: every later member is dependent on the kept ones
            break;
        }
        let cols: Vec<Vec<Gf64>> = member
            .arcs
            .iter()
            .map(|&e| {
                let (u, v) = sm.arc(e);
                (0..r).map(|row| lift[u][row] + lift[v][row]).collect()
            })
            .collect();
        let mut vec = dense_wedge(&cols, r, &levels, &ranker);
        if vec.iter().all(|c| c.is_zero()) {
            // independent member with a vanishing wedge
            return Ok(None);
        }
        for (pivot, b) in &basis {
            let coef = vec[*pivot];
            if !coef.is_zero() {
                for (a, &bb) in vec.iter_mut().zip(b) {
                    *a += coef * bb;
                }
            }
        }
        if let Some(pivot) = vec.iter().position(|c| !c.is_zero()) {
            let scale = vec[pivot].inv();
            vec.iter_mut().for_each(|c| *c *= scale);
            basis.push((pivot, vec));
            kept.push(idx);
        }
    }
    Ok(Some(kept))
}

/// Advances `comb` to the next `k`-combination of `0..m` in lexicographic order.
fn next_combination(comb: &mut [usize], m: usize) -> bool {
    let k = comb.len();
    for i in (0..k).rev() {
        if comb[i] < m - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn fits(sm: &SuperMatroid, a: &[usize], b: &[usize]) -> bool {
    if a.iter().any(|e| b.contains(e)) {
        return false;
    }
    let union: Vec<usize> = a.iter().chain(b).copied().collect();
    sm.is_independent(&union)
}

/// Exhaustive check that `hat` is a subfamily of `family` that max
/// `q`-represents it: for every `q`-subset `B` of the ground set, if some
/// member of `family` fits `B`, a member of `hat` at least as heavy fits too.
pub fn check_representative(
    sm: &SuperMatroid,
    family: &WeightedSetFamily,
    hat: &WeightedSetFamily,
    q: usize,
) -> bool {
    let members: HashSet<&WeightedSet> = family.iter().collect();
    if !hat.iter().all(|m| members.contains(m)) {
        return false;
    }
    let m = sm.m();
    if q > m {
        return true;
    }
    let mut b: Vec<usize> = (0..q).collect();
    loop {
        let best_f = family.iter().filter(|a| fits(sm, &a.arcs, &b)).map(|a| a.weight).max();
        if let Some(w) = best_f {
            let best_hat = hat.iter().filter(|a| fits(sm, &a.arcs, &b)).map(|a| a.weight).max();
            if best_hat.is_none_or(|h| h < w) {
                return false;
            }
        }
        if q == 0 || !next_combination(&mut b, m) {
            return true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_random;
    use crate::model::parse_instance;
    use proptest::prelude::*;

    fn path3() -> (SuperMatroid, usize, usize) {
        let inst = parse_instance("3\na 0\nb 1\n1 1 a\nc 1\n1 1 b\n", 0).unwrap();
        let s = inst.superstructure();
        (SuperMatroid::new(&s), s.arc_index(0, 1).unwrap(), s.arc_index(1, 2).unwrap())
    }

    fn star4() -> SuperMatroid {
        // centre a with arcs to and from b, c, d
        let inst = parse_instance(
            "4\na 3\n1 1 b\n1 1 c\n1 1 d\nb 1\n1 1 a\nc 1\n1 1 a\nd 1\n1 1 a\n",
            0,
        )
        .unwrap();
        SuperMatroid::new(&inst.superstructure())
    }

    #[test]
    fn q_zero_keeps_the_heaviest() {
        let (sm, ab, bc) = path3();
        let fam = WeightedSetFamily::from_members(
            1,
            [WeightedSet::new(vec![ab], 3), WeightedSet::new(vec![bc], 5)],
        )
        .unwrap();
        for truncate in [false, true] {
            let hat = representative_family(&sm, &fam, 0, RepOptions { truncate, ..Default::default() }).unwrap();
            assert_eq!(hat.members(), &[WeightedSet::new(vec![bc], 5)]);
            assert!(check_representative(&sm, &fam, &hat, 0));
        }
    }

    #[test]
    fn empty_family() {
        let (sm, _, _) = path3();
        let fam = WeightedSetFamily::new(2);
        let hat = representative_family(&sm, &fam, 1, RepOptions::default()).unwrap();
        assert!(hat.is_empty());
        assert_eq!(hat.x(), 2);
    }

    #[test]
    fn star_with_unit_weights() {
        let sm = star4();
        let fam = WeightedSetFamily::from_members(1, (0..sm.m()).map(|e| WeightedSet::new(vec![e], 1))).unwrap();
        for truncate in [false, true] {
            let hat = representative_family(&sm, &fam, 1, RepOptions { truncate, seed: 5, ..Default::default() })
                .unwrap();
            assert!(check_representative(&sm, &fam, &hat, 1), "truncate={truncate}");
            if truncate {
                assert!(hat.len() <= 2);
            }
        }
    }

    #[test]
    fn checker_basics() {
        let (sm, ab, bc) = path3();
        let fam = WeightedSetFamily::from_members(
            1,
            [WeightedSet::new(vec![ab], 3), WeightedSet::new(vec![bc], 5)],
        )
        .unwrap();
        assert!(check_representative(&sm, &fam, &fam, 1));
        assert!(check_representative(&sm, &fam, &fam, 0));
        assert!(!check_representative(&sm, &fam, &WeightedSetFamily::new(1), 0));
        // a member with an altered weight is not a subfamily member
        let forged = WeightedSetFamily::from_members(1, [WeightedSet::new(vec![bc], 9)]).unwrap();
        assert!(!check_representative(&sm, &fam, &forged, 0));
        // the light set alone loses against B = ∅
        let light = WeightedSetFamily::from_members(1, [WeightedSet::new(vec![ab], 3)]).unwrap();
        assert!(!check_representative(&sm, &fam, &light, 0));
    }

    #[test]
    fn dependent_members_are_dropped() {
        let inst = parse_instance("3\na 0\nb 1\n1 1 a\nc 1\n1 2 a b\n", 0).unwrap();
        let s = inst.superstructure();
        let sm = SuperMatroid::new(&s);
        let all: Vec<usize> = (0..3).collect();
        let fam = WeightedSetFamily::from_members(3, [WeightedSet::new(all, 10)]).unwrap();
        let hat = representative_family(&sm, &fam, 0, RepOptions::default()).unwrap();
        assert!(hat.is_empty());
    }

    #[test]
    fn wedge_of_a_tree_depends_on_its_vertices() {
        let inst = parse_instance("3\na 0\nb 2\n1 1 a\n1 1 c\nc 1\n1 1 a\n", 0).unwrap();
        let s = inst.superstructure();
        let sm = SuperMatroid::new(&s);
        let ab = s.arc_index(0, 1).unwrap();
        let cb = s.arc_index(2, 1).unwrap();
        let ac = s.arc_index(0, 2).unwrap();
        let w1 = gf2_wedge(&sm, &[ab, cb], 100).unwrap();
        let w2 = gf2_wedge(&sm, &[ab, ac], 100).unwrap();
        assert_eq!(w1, w2);
        assert_eq!(w1.len(), 3);
        assert!(gf2_wedge(&sm, &[ab, cb, ac], 100).unwrap().is_empty());
    }

    #[test]
    fn colex_ranks_are_dense() {
        let binom = binomial_table(7);
        for j in 0..=7 {
            let subsets = subsets_of_size(7, j);
            assert_eq!(subsets.len(), binom[7][j]);
            for (i, &s) in subsets.iter().enumerate() {
                assert_eq!(colex_rank(s, &binom), i);
            }
        }
    }

    #[test]
    fn truncation_size_bound() {
        let sm = star4();
        let members: Vec<WeightedSet> = (0..sm.m())
            .flat_map(|a| (a + 1..sm.m()).map(move |b| WeightedSet::new(vec![a, b], (a * 7 + b) as u64)))
            .collect();
        let fam = WeightedSetFamily::from_members(2, members).unwrap();
        let hat = representative_family(&sm, &fam, 1, RepOptions { truncate: true, seed: 1, ..Default::default() })
            .unwrap();
        assert!(hat.len() <= 3);
        assert!(check_representative(&sm, &fam, &hat, 1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn outputs_represent_their_input(
            seed in 0u64..500,
            x in 1usize..=2,
            q in 0usize..=3,
            picks in proptest::collection::vec((0usize..64, 0usize..64, 0u64..6), 1..20),
            truncate in any::<bool>(),
        ) {
            let inst = gen_random(5, 3, 1, 5, seed).unwrap();
            let sm = SuperMatroid::new(&inst.superstructure());
            let m = sm.m();
            prop_assume!((2..=10).contains(&m));
            let mut fam = WeightedSetFamily::new(x);
            let mut seen = HashSet::new();
            for (a, b, w) in picks {
                let mut arcs = vec![a % m];
                if x == 2 {
                    arcs.push(b % m);
                }
                let set = WeightedSet::new(arcs, w);
                if set.arcs.windows(2).all(|p| p[0] != p[1]) && seen.insert(set.arcs.clone()) {
                    fam.push(set).unwrap();
                }
            }
            let hat = representative_family(&sm, &fam, q, RepOptions { truncate, seed, ..Default::default() }).unwrap();
            prop_assert!(check_representative(&sm, &fam, &hat, q));
            let bound = if truncate { binomial_table(x + q)[x + q][x] } else { binomial_table(sm.n())[sm.n()][x] };
            prop_assert!(hat.len() <= bound);
        }
    }
}
