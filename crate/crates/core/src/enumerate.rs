//! Brute force over one potential parent set per dependent vertex.
//!
//! This is the reference solver every other algorithm is checked against, so
//! it stays deliberately plain: an odometer over choice vectors and a fresh
//! union-find per combination.

use crate::error::{Error, Result};
use crate::polytree::{forest_insert, DisjointSetForest};
use crate::{Instance, Solution};

pub const DEFAULT_COMBINATION_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    /// Largest number of combinations the solver agrees to visit.
    pub budget: u128,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { budget: DEFAULT_COMBINATION_BUDGET }
    }
}

/// `∏_{v dependent} |P_F(v)|`.
pub fn combination_count(inst: &Instance) -> u128 {
    inst.dependent_vertices()
        .iter()
        .map(|&v| inst.entries(v).len() as u128 + 1)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .unwrap_or(u128::MAX)
}

pub fn solve_enum(inst: &Instance) -> Result<Solution> {
    solve_enum_with(inst, EnumOptions::default())
}

/// Among maxima, the lexicographically smallest choice vector wins (index 0
/// is the empty set, then stored entries in file order).
pub fn solve_enum_with(inst: &Instance, opts: EnumOptions) -> Result<Solution> {
    let count = combination_count(inst);
    if count > opts.budget {
        return Err(Error::Budget(format!(
            "enumeration needs {count} combinations, budget is {}",
            opts.budget
        )));
    }
    let dependent = inst.dependent_vertices();
    let radix: Vec<usize> = dependent.iter().map(|&v| inst.entries(v).len() + 1).collect();
    let mut choice = vec![0usize; dependent.len()];
    let mut best: Option<(u64, Vec<usize>)> = None;

    loop {
        let mut uf = DisjointSetForest::new(inst.n());
        let mut total = 0u64;
        let mut ok = true;
        for (slot, &v) in dependent.iter().enumerate() {
            if choice[slot] == 0 {
                continue;
            }
            let entry = &inst.entries(v)[choice[slot] - 1];
            if !forest_insert(&mut uf, entry.parents.iter().map(|&u| (u, v))) {
                ok = false;
                break;
            }
            total += entry.score;
        }
        if ok && best.as_ref().is_none_or(|(s, _)| total > *s) {
            best = Some((total, choice.clone()));
        }

        // advance the odometer, last position fastest
        let mut pos = choice.len();
        loop {
            if pos == 0 {
                let (best_score, best_choice) = best.expect("the all-empty choice is a polytree");
                let mut best_arcs = crate::ArcSet::new();
                for (slot, &v) in dependent.iter().enumerate() {
                    if best_choice[slot] > 0 {
                        best_arcs.add_parent_set(v, &inst.entries(v)[best_choice[slot] - 1].parents);
                    }
                }
                return Ok(Solution { best_score, best_arcs });
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < radix[pos] {
                break;
            }
            choice[pos] = 0;
        }
    }
}

pub fn decide_enum(inst: &Instance) -> Result<bool> {
    Ok(solve_enum(inst)?.best_score >= inst.threshold())
}
