//! Exact algorithms for learning maximum-score polytrees from local
//! parent-set scores.
//!
//! An instance assigns each vertex `v` a score `f_v(P)` for a handful of
//! candidate parent sets `P`; the task is to pick an arc set whose skeleton
//! is a forest and whose total score is maximal (or at least a threshold
//! `t`). Four exact solvers are provided:
//!
//! * [`solve_enum`]: one potential parent set per dependent vertex, tried
//!   exhaustively. Used as the ground truth for everything else.
//! * [`solve_dp`]: a `3^n` dynamic program over vertex subsets.
//! * [`solve_fpt`]: iterated max representative families in the graphic
//!   matroid of the superstructure, exponential only in `d·p`.
//! * [`kernelize`]: shrinks an instance to a number of vertices bounded by
//!   a function of `d` and `p` while keeping the optimum.
//!
//! [`generators`] turns Independent Set instances into polytree instances
//! and produces seeded random instances.

pub mod dp;
pub mod enumerate;
pub mod error;
pub mod fpt;
pub mod generators;
pub mod kernel;
pub mod matroid;
pub mod model;
pub mod polytree;
pub mod solver;

pub use dp::{dp_entry, solve_dp, solve_dp_with, DpOptions, DpTable};
pub use enumerate::{combination_count, decide_enum, solve_enum, solve_enum_with, EnumOptions};
pub use error::{Error, ParseError, Result};
pub use fpt::{extend_family, solve_fpt, solve_fpt_traced, FptOptions, FptTrace};
pub use kernel::{kernelize, Kernel, KernelOptions};
pub use model::{
    build_superstructure, pad_to_uniform, parse_instance, write_instance, Instance, PaddedInstance,
    ParentSetEntry, Superstructure, Vertex,
};
pub use solver::{solve_with, Algorithm, SolveConfig};
pub use polytree::{is_polytree, score, verify_solution, ArcSet, DisjointSetForest, VerifyReport};

/// Result of an optimizing solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub best_score: u64,
    pub best_arcs: ArcSet,
}
