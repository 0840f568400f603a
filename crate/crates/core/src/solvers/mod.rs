//! Exact path/cycle cover and partition numbers, independence number,
//! Hamiltonian paths, and the two greedy merge constructions.
//!
//! The exact solvers reduce every quantity to a minimum partition of the
//! vertex set into "feasible" parts over subset tables:
//!
//! * `pp`: parts inducing a graph with a Hamiltonian path;
//! * `cp`: parts spanned by a `K1`, a `K2` or a Hamiltonian cycle;
//! * `pc`/`cc`: parts contained in such a set. Any cover by `k` elements can
//!   be trimmed to a partition into `k` subsets of elements and vice versa,
//!   so the cover numbers are partition numbers over the down-closure.
//!
//! Orders are limited to [`MAX_EXACT_ORDER`].

mod exact;
mod greedy;
mod systems;

pub use exact::MAX_EXACT_ORDER;
pub use greedy::{
    designated_ends, greedy_cycle_partition, greedy_cycle_partition_from, greedy_path_partition,
    AnchoredElement,
};
pub use systems::{CycleElement, CycleSystem, PathSystem, SystemMode};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use exact::Exact;

/// `α(G)`; zero for the empty graph.
pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A maximum independent set, by branch and bound.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let mut best = VertexSet::new();
    mis_branch(g, g.vertices(), VertexSet::new(), &mut best);
    best
}

fn mis_branch(g: &Graph, cand: VertexSet, chosen: VertexSet, best: &mut VertexSet) {
    if chosen.len() + cand.len() <= best.len() {
        return;
    }
    // a vertex of degree ≤ 1 in the candidate graph is always safe to take
    let degree = |v: usize| g.neighbors(v).intersection(&cand).len();
    let Some(pivot) = cand.iter().max_by_key(|&v| (degree(v), std::cmp::Reverse(v))) else {
        *best = chosen;
        return;
    };
    if let Some(leaf) = cand.iter().find(|&v| degree(v) <= 1) {
        let mut take = chosen;
        take.insert(leaf);
        let rest = cand.difference(g.neighbors(leaf));
        let rest = rest.difference(&VertexSet::singleton(leaf));
        mis_branch(g, rest, take, best);
        return;
    }
    let mut with = chosen.clone();
    with.insert(pivot);
    let rest = cand.difference(g.neighbors(pivot));
    mis_branch(g, rest.difference(&VertexSet::singleton(pivot)), with, best);
    mis_branch(g, cand.difference(&VertexSet::singleton(pivot)), chosen, best);
}

/// Whether some path visits every vertex once. Order 0: false; order 1: true.
pub fn has_hamiltonian_path(g: &Graph) -> bool {
    hamiltonian_path(g).is_some()
}

pub fn hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    if n <= 20 {
        let ex = Exact::new(g).ok()?;
        let ends = ex.path_ends();
        return (ends[ex.full() as usize] != 0).then(|| ex.path_in(&ends, ex.full()));
    }
    if !g.is_connected() {
        return None;
    }
    let mut path = Vec::with_capacity(n);
    let mut used = VertexSet::new();
    (0..n).find_map(|s| {
        path.clear();
        path.push(s);
        used = VertexSet::singleton(s);
        extend_path(g, &mut path, &mut used).then(|| path.clone())
    })
}

fn extend_path(g: &Graph, path: &mut Vec<usize>, used: &mut VertexSet) -> bool {
    if path.len() == g.order() {
        return true;
    }
    let last = *path.last().expect("nonempty");
    for w in g.neighbors(last).difference(used).iter() {
        path.push(w);
        used.insert(w);
        if extend_path(g, path, used) {
            return true;
        }
        used.remove(w);
        path.pop();
    }
    false
}

/// `pc(G)` with a witness cover of that size.
pub fn path_cover_number(g: &Graph) -> Result<(usize, PathSystem)> {
    let ex = Exact::new(g)?;
    let ends = ex.path_ends();
    let feasible: Vec<bool> = ends.iter().map(|&e| e != 0).collect();
    let witness = ex.superset_witness(&feasible);
    let (k, parts) = ex.min_partition(|m| witness[m as usize] != u32::MAX);
    let paths = parts
        .into_iter()
        .map(|p| ex.path_in(&ends, witness[p as usize]))
        .collect();
    let system = PathSystem::new(paths, SystemMode::Cover);
    debug_assert!(system.validate(g).is_ok());
    Ok((k, system))
}

/// `pp(G)` with a witness partition of that size.
pub fn path_partition_number(g: &Graph) -> Result<(usize, PathSystem)> {
    let ex = Exact::new(g)?;
    let ends = ex.path_ends();
    let (k, parts) = ex.min_partition(|m| ends[m as usize] != 0);
    let paths = parts.into_iter().map(|p| ex.path_in(&ends, p)).collect();
    let system = PathSystem::new(paths, SystemMode::Partition);
    debug_assert!(system.validate(g).is_ok());
    Ok((k, system))
}

/// `cc(G)` with a witness cover of that size.
pub fn cycle_cover_number(g: &Graph) -> Result<(usize, CycleSystem)> {
    let ex = Exact::new(g)?;
    let rooted = ex.rooted_path_ends();
    let feasible: Vec<bool> = (0..rooted.len() as u32)
        .map(|m| ex.spans_element(&rooted, m))
        .collect();
    let witness = ex.superset_witness(&feasible);
    let (k, parts) = ex.min_partition(|m| witness[m as usize] != u32::MAX);
    let elements = parts
        .into_iter()
        .map(|p| CycleElement::from_sequence(ex.element_in(&rooted, witness[p as usize])))
        .collect();
    let system = CycleSystem::new(elements, SystemMode::Cover);
    debug_assert!(system.validate(g).is_ok());
    Ok((k, system))
}

/// `cp(G)` with a witness partition of that size.
pub fn cycle_partition_number(g: &Graph) -> Result<(usize, CycleSystem)> {
    let ex = Exact::new(g)?;
    let rooted = ex.rooted_path_ends();
    let (k, parts) = ex.min_partition(|m| ex.spans_element(&rooted, m));
    let elements = parts
        .into_iter()
        .map(|p| CycleElement::from_sequence(ex.element_in(&rooted, p)))
        .collect();
    let system = CycleSystem::new(elements, SystemMode::Partition);
    debug_assert!(system.validate(g).is_ok());
    Ok((k, system))
}
