//! Kernelization for the parameter `d + p`.
//!
//! For every dependent vertex `v`, the single-vertex family
//! `{P × v : P candidate of v}` (on the padded instance) is compressed to a
//! max `(d - 1)·p`-representative subfamily. Only the compressed parent sets
//! are kept, and only vertices that are dependent or occur in a kept set
//! survive. Padding is removed again, so every reduced vertex is an original
//! one.

use crate::error::{Error, Result};
use crate::matroid::{representative_family, RepOptions, SuperMatroid, WeightedSet, WeightedSetFamily};
use crate::model::{pad_to_uniform, Instance, ParentSetEntry, Vertex};

#[derive(Debug, Clone, Copy)]
pub struct KernelOptions {
    pub seed: u64,
    pub truncate: bool,
    pub max_coordinates: usize,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions { seed: 0, truncate: true, max_coordinates: 1_000_000 }
    }
}

#[derive(Debug, Clone)]
pub struct Kernel {
    pub reduced: Instance,
    /// `vertex_map[i]` is the original vertex behind reduced vertex `i`.
    pub vertex_map: Vec<Vertex>,
    /// Parameters of the original instance.
    pub d: usize,
    pub p: usize,
}

impl Kernel {
    /// `reduced-name original-name` lines.
    pub fn map_lines(&self, original: &Instance) -> String {
        self.vertex_map
            .iter()
            .enumerate()
            .map(|(i, &v)| format!("{} {}\n", self.reduced.name(i), original.name(v)))
            .collect()
    }

    pub fn size_bound(&self) -> u128 {
        vertex_bound(self.d, self.p)
    }

    pub fn delta_bound(&self) -> u128 {
        delta_bound(self.d, self.p)
    }

    /// Largest number of nonempty parent sets stored for a reduced vertex.
    pub fn nonempty_delta(&self) -> usize {
        (0..self.reduced.n()).map(|v| self.reduced.entries(v).len()).max().unwrap_or(0)
    }

    pub fn within_bounds(&self) -> bool {
        self.reduced.n() as u128 <= self.size_bound() && self.nonempty_delta() as u128 <= self.delta_bound()
    }
}

/// `(dp)^(p+1) + d`.
pub fn vertex_bound(d: usize, p: usize) -> u128 {
    ((d * p) as u128).saturating_pow(p as u32 + 1).saturating_add(d as u128)
}

/// `(dp)^p`.
pub fn delta_bound(d: usize, p: usize) -> u128 {
    ((d * p) as u128).saturating_pow(p as u32)
}

pub fn kernelize(inst: &Instance, opts: KernelOptions) -> Result<Kernel> {
    let deps = inst.dependent_vertices();
    let d = deps.len();
    let p = inst.max_parent_size();
    if d == 0 {
        let reduced = Instance::new(Vec::new(), Vec::new(), inst.threshold())?;
        return Ok(Kernel { reduced, vertex_map: Vec::new(), d, p });
    }
    let padded = pad_to_uniform(inst, p)?;
    let sm = SuperMatroid::new(&padded.superstructure());
    let q = (d - 1) * p;

    let mut necessary = vec![false; inst.n()];
    let mut kept: Vec<Vec<ParentSetEntry>> = vec![Vec::new(); inst.n()];
    for (step, &v) in deps.iter().enumerate() {
        necessary[v] = true;
        let mut fam = WeightedSetFamily::new(p);
        for (parents, f) in padded.candidates(v) {
            let arcs = parents.iter().map(|&u| sm.arc_index(u, v).expect("candidate arc")).collect();
            fam.push(WeightedSet::new(arcs, f))?;
        }
        let rep = RepOptions {
            truncate: opts.truncate,
            seed: opts.seed.wrapping_add(step as u64),
            max_coordinates: opts.max_coordinates,
        };
        for member in representative_family(&sm, &fam, q, rep)?.iter() {
            let parents: Vec<Vertex> = padded.strip_set(&member.arcs.iter().map(|&e| sm.arc(e).0).collect::<Vec<_>>());
            if parents.is_empty() {
                continue;
            }
            for &u in &parents {
                necessary[u] = true;
            }
            kept[v].push(ParentSetEntry::new(member.weight, parents));
        }
    }

    let vertex_map: Vec<Vertex> = (0..inst.n()).filter(|&v| necessary[v]).collect();
    let mut new_index = vec![usize::MAX; inst.n()];
    for (i, &v) in vertex_map.iter().enumerate() {
        new_index[v] = i;
    }
    let names = vertex_map.iter().map(|&v| inst.name(v).to_string()).collect();
    let scores = vertex_map
        .iter()
        .map(|&v| {
            kept[v]
                .iter()
                .map(|e| ParentSetEntry::new(e.score, e.parents.iter().map(|&u| new_index[u]).collect()))
                .collect()
        })
        .collect();
    let reduced = Instance::new(names, scores, inst.threshold())
        .map_err(|e| Error::Invalid(format!("reduced instance rejected: {e}")))?;
    Ok(Kernel { reduced, vertex_map, d, p })
}
