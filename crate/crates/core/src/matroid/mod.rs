//! The super matroid of an instance and max representative families.
//!
//! The super matroid is the graphic matroid on the superstructure arcs: an
//! arc set is independent exactly when it forms a polytree. Its GF(2)
//! representation maps arc `(u, v)` to the vector with ones in rows `u` and
//! `v`.

mod gf2;
mod gf64;
mod repsets;

pub use gf2::{gf2_rank, Gf2Matrix};
pub use gf64::Gf64;
pub use repsets::{
    check_representative, representative_family, RepOptions, WeightedSet, WeightedSetFamily,
};

use std::collections::HashMap;

use crate::polytree::{forest_insert, DisjointSetForest};
use crate::{Superstructure, Vertex};

#[derive(Debug, Clone)]
pub struct SuperMatroid {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    index: HashMap<(Vertex, Vertex), usize>,
    repr: Gf2Matrix,
}

impl SuperMatroid {
    pub fn new(s: &Superstructure) -> Self {
        let arcs = s.arcs().to_vec();
        let mut repr = Gf2Matrix::zeros(s.n(), arcs.len());
        for (e, &(u, v)) in arcs.iter().enumerate() {
            repr.set(u, e, true);
            repr.set(v, e, true);
        }
        let index = arcs.iter().enumerate().map(|(e, &a)| (a, e)).collect();
        SuperMatroid { n: s.n(), arcs, index, repr }
    }

    /// Number of vertices, i.e. rows of the representation.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the ground set.
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc(&self, e: usize) -> (Vertex, Vertex) {
        self.arcs[e]
    }

    pub fn arc_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.index.get(&(u, v)).copied()
    }

    pub fn representation(&self) -> &Gf2Matrix {
        &self.repr
    }

    /// Independence through union-find on the skeleton.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut uf = DisjointSetForest::new(self.n);
        forest_insert(&mut uf, set.iter().map(|&e| self.arcs[e]))
    }
}

/// Independence through linear independence of the representing columns.
pub fn gf2_independent(sm: &SuperMatroid, set: &[usize]) -> bool {
    gf2_rank(&sm.repr, set) == set.len()
}
