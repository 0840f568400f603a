//! Covers of the spine together with its attached vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{greedy_path_partition, PathSystem, SystemMode};

use super::decompose::LayerDecomposition;

/// `max(3n-6, 1)`: the size guarantee of [`spine_cover`].
pub fn spine_cover_bound(n: usize) -> usize {
    (3 * n).saturating_sub(6).max(1)
}

/// Greedy path partition of `G[set]`, in original labels.
fn partition_of(g: &Graph, set: &VertexSet) -> Result<Vec<Vec<usize>>> {
    let labels = set.to_vec();
    let sub = g.induced_subgraph(set)?;
    Ok(greedy_path_partition(&sub)
        .paths
        .into_iter()
        .map(|p| p.into_iter().map(|v| labels[v]).collect())
        .collect())
}

/// Connectors for one slot side: for `t = 1..=n-2`, the `t`-th path of the
/// slot partition between `u_i` and `u_{i+step}`, or `None` when the slot
/// has fewer paths (the route then follows the spine).
fn connectors(
    g: &Graph,
    d: &LayerDecomposition,
    i: usize,
    step: usize,
    members: &VertexSet,
) -> Result<Vec<Option<Vec<usize>>>> {
    let budget = d.n - 2;
    let (left, right) = (d.u(i), d.spine.get(i + step - 1).copied());
    for y in members.iter() {
        if !g.has_edge(y, left) || right.is_none_or(|r| !g.has_edge(y, r)) {
            return Err(Error::violated(
                "slot attachment",
                format!("vertex {y} in slot {i} is not adjacent to both u_{i} and u_{}", i + step),
            ));
        }
    }
    let parts = partition_of(g, members)?;
    if parts.len() > budget {
        return Err(Error::violated(
            "slot independence",
            format!(
                "slot ({i}, {step}) needs {} paths but at most {budget} are allowed for n = {}",
                parts.len(),
                d.n
            ),
        ));
    }
    let mut out: Vec<Option<Vec<usize>>> = parts.into_iter().map(Some).collect();
    out.resize(budget, None);
    Ok(out)
}

/// A spine walk with `u_i..u_{i+step}` replaced by `u_i, connector, u_{i+step}`
/// at every slot in `starts` that has a connector.
fn route(d: &LayerDecomposition, step: usize, detours: &[(usize, &[usize])]) -> Vec<usize> {
    let mut path = Vec::with_capacity(d.m());
    let mut pos = 1;
    let mut pending = detours.iter().peekable();
    while pos <= d.m() {
        path.push(d.u(pos));
        match pending.peek() {
            Some(&&(i, inner)) if i == pos => {
                path.extend_from_slice(inner);
                pending.next();
                pos += step;
            }
            _ => pos += 1,
        }
    }
    path
}

type SlotConnectors = (usize, Vec<Option<Vec<usize>>>);

/// The `t`-th connectors of slots with the given offset parity (or all slots).
fn pick_detours(
    list: &[SlotConnectors],
    t: usize,
    lo: usize,
    hi: usize,
    parity: Option<usize>,
    step: usize,
) -> Vec<(usize, &[usize])> {
    list.iter()
        .filter(|(i, _)| parity.is_none_or(|p| (i - lo) % 2 == p) && i + step <= hi)
        .filter_map(|(i, c)| c[t].as_deref().map(|inner| (*i, inner)))
        .collect()
}

/// A path cover of `G[V(P) ∪ Y]` with at most `max(3n-6, 1)` paths.
///
/// For each `t = 1..=n-2` three routes run along the spine: one detouring
/// through the `t`-th path of every `next` slot, and two detouring through
/// the `t`-th path of every `skip` slot at odd and even offsets. Identical
/// routes are kept once. Fails with a hypothesis error if a slot does not
/// have the shape the freeness hypothesis guarantees.
pub fn spine_cover(g: &Graph, d: &LayerDecomposition) -> Result<PathSystem> {
    let target = d.spine_set().union(&d.attached);
    if d.attached.is_empty() {
        return Ok(PathSystem::new(vec![d.spine.clone()], SystemMode::Cover));
    }
    if !d.predicates.last_slot_empty {
        return Err(Error::violated("last slot empty", "the last middle slot is nonempty"));
    }
    let (lo, hi) = (d.margin + 1, d.m() - d.margin);
    let mut next_conn = Vec::new();
    let mut skip_conn = Vec::new();
    for i in lo..hi {
        let slot = d.slot(i).expect("middle slot");
        next_conn.push((i, connectors(g, d, i, 1, &slot.next)?));
        skip_conn.push((i, connectors(g, d, i, 2, &slot.skip)?));
    }

    let mut paths: Vec<Vec<usize>> = Vec::new();
    for t in 0..d.n - 2 {
        let pick = |list, parity, step| pick_detours(list, t, lo, hi, parity, step);
        let routes = [
            route(d, 1, &pick(&next_conn, None, 1)),
            route(d, 2, &pick(&skip_conn, Some(0), 2)),
            route(d, 2, &pick(&skip_conn, Some(1), 2)),
        ];
        for r in routes {
            if !paths.contains(&r) {
                paths.push(r);
            }
        }
    }
    let system = PathSystem::new(paths, SystemMode::Cover);
    system.validate_on(g, &target)?;
    debug_assert!(system.len() <= spine_cover_bound(d.n));
    Ok(system)
}

/// A Hamiltonian path of `G[V(P) ∪ Y]`: each slot is inserted, in
/// ascending label order, between `u_i` and `u_{i+1}`. Requires every
/// `{u_i, u_{i+1}} ∪ slot` to be a clique, which holds under the stronger
/// freeness hypothesis.
pub fn spine_hamiltonian(g: &Graph, d: &LayerDecomposition) -> Result<Vec<usize>> {
    if d.attached.is_empty() {
        return Ok(d.spine.clone());
    }
    if !d.predicates.last_slot_empty {
        return Err(Error::violated("last slot empty", "the last middle slot is nonempty"));
    }
    let mut path = Vec::with_capacity(d.m() + d.attached.len());
    for pos in 1..=d.m() {
        path.push(d.u(pos));
        let Some(slot) = d.slot(pos) else { continue };
        if slot.members.is_empty() {
            continue;
        }
        let mut clique = slot.members.clone();
        clique.insert(d.u(pos));
        clique.insert(d.u(pos + 1));
        if !g.is_clique(&clique) {
            return Err(Error::violated(
                "slot clique",
                format!("u_{pos}, u_{} and slot {pos} do not form a clique", pos + 1),
            ));
        }
        path.extend(slot.members.iter());
    }
    let target = d.spine_set().union(&d.attached);
    PathSystem::new(vec![path.clone()], SystemMode::Partition).validate_on(g, &target)?;
    Ok(path)
}
