//! Uniform entry point over the three optimizing solvers.

use std::fmt;
use std::str::FromStr;

use crate::dp::{solve_dp_with, DpOptions, DEFAULT_MAX_N};
use crate::enumerate::solve_enum;
use crate::error::{Error, Result};
use crate::fpt::{solve_fpt, FptOptions};
use crate::{Instance, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Dp,
    Enum,
    /// The representative-family solver.
    Repsets,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Dp, Algorithm::Enum, Algorithm::Repsets];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Dp => "dp",
            Algorithm::Enum => "enum",
            Algorithm::Repsets => "repsets",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown algorithm `{s}` (expected dp, enum or repsets)")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SolveConfig {
    pub seed: u64,
    pub truncate: bool,
    pub max_n: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig { seed: 0, truncate: false, max_n: DEFAULT_MAX_N }
    }
}

pub fn solve_with(inst: &Instance, algo: Algorithm, cfg: SolveConfig) -> Result<Solution> {
    match algo {
        Algorithm::Dp => solve_dp_with(inst, DpOptions { max_n: cfg.max_n }),
        Algorithm::Enum => solve_enum(inst),
        Algorithm::Repsets => solve_fpt(
            inst,
            FptOptions { seed: cfg.seed, truncate: cfg.truncate, ..FptOptions::default() },
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_instance;

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("greedy".parse::<Algorithm>().is_err());
    }

    #[test]
    fn all_agree_on_the_chain() {
        let inst = parse_instance("3\na 0\nb 1\n1 1 a\nc 1\n1 1 b\n", 0).unwrap();
        for a in Algorithm::ALL {
            assert_eq!(solve_with(&inst, a, SolveConfig::default()).unwrap().best_score, 2);
        }
    }
}
