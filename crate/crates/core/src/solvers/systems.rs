use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemMode {
    /// Elements may share vertices.
    Cover,
    /// Elements are pairwise vertex-disjoint.
    Partition,
}

/// A family of paths (vertex sequences) covering or partitioning a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
    pub mode: SystemMode,
}

fn invalid(kind: &'static str, detail: impl Into<String>) -> Error {
    Error::InvalidSystem {
        kind,
        detail: detail.into(),
    }
}

/// Checks that elements lie inside `target`, jointly cover it, and are
/// disjoint in partition mode.
fn check_union(
    kind: &'static str,
    mode: SystemMode,
    elements: impl Iterator<Item = VertexSet>,
    target: &VertexSet,
) -> Result<()> {
    let mut seen = VertexSet::new();
    for (i, verts) in elements.enumerate() {
        if !verts.is_subset(target) {
            return Err(invalid(kind, format!("element {i} leaves the vertex set")));
        }
        if mode == SystemMode::Partition && !seen.is_disjoint(&verts) {
            return Err(invalid(kind, format!("element {i} overlaps an earlier element")));
        }
        seen.union_with(&verts);
    }
    if &seen != target {
        let missing = target.difference(&seen);
        return Err(invalid(kind, format!("vertices {:?} are not covered", missing.to_vec())));
    }
    Ok(())
}

fn distinct_vertices(seq: &[usize]) -> Option<VertexSet> {
    let set: VertexSet = seq.iter().copied().collect();
    (set.len() == seq.len()).then_some(set)
}

impl PathSystem {
    pub fn new(paths: Vec<Vec<usize>>, mode: SystemMode) -> Self {
        Self { paths, mode }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Validate against the whole vertex set of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        self.validate_on(g, &g.vertices())
    }

    /// Validate as a path system of `G[target]`.
    pub fn validate_on(&self, g: &Graph, target: &VertexSet) -> Result<()> {
        g.check_set(target)?;
        let mut sets = Vec::with_capacity(self.paths.len());
        for (i, p) in self.paths.iter().enumerate() {
            if p.is_empty() {
                return Err(invalid("path system", format!("path {i} is empty")));
            }
            let set = distinct_vertices(p)
                .ok_or_else(|| invalid("path system", format!("path {i} repeats a vertex")))?;
            if let Some(w) = p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
                return Err(invalid(
                    "path system",
                    format!("path {i} uses non-edge {}-{}", w[0], w[1]),
                ));
            }
            sets.push(set);
        }
        check_union("path system", self.mode, sets.into_iter(), target)
    }
}

/// One element of a cycle cover: a vertex, an edge, or a cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "vertices")]
pub enum CycleElement {
    K1(usize),
    K2(usize, usize),
    /// Cyclic vertex sequence of length at least 3.
    Cycle(Vec<usize>),
}

impl CycleElement {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            CycleElement::K1(v) => vec![*v],
            CycleElement::K2(a, b) => vec![*a, *b],
            CycleElement::Cycle(c) => c.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            CycleElement::K1(_) => 1,
            CycleElement::K2(..) => 2,
            CycleElement::Cycle(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Element spanned by a Hamiltonian cycle sequence (or a 1/2-vertex
    /// sequence).
    pub(crate) fn from_sequence(seq: Vec<usize>) -> Self {
        match seq[..] {
            [v] => CycleElement::K1(v),
            [a, b] => CycleElement::K2(a, b),
            _ => CycleElement::Cycle(seq),
        }
    }

    fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        match self {
            CycleElement::K1(v) if *v < g.order() => Ok(()),
            CycleElement::K1(v) => Err(format!("vertex {v} out of range")),
            CycleElement::K2(a, b) if g.has_edge(*a, *b) => Ok(()),
            CycleElement::K2(a, b) => Err(format!("{a}-{b} is not an edge")),
            CycleElement::Cycle(c) => {
                if c.len() < 3 {
                    return Err("cycle shorter than 3".into());
                }
                if distinct_vertices(c).is_none() {
                    return Err("cycle repeats a vertex".into());
                }
                let n = c.len();
                match (0..n).find(|&i| !g.has_edge(c[i], c[(i + 1) % n])) {
                    Some(i) => Err(format!("cycle uses non-edge {}-{}", c[i], c[(i + 1) % n])),
                    None => Ok(()),
                }
            }
        }
    }
}

/// A family of `K1`/`K2`/cycle elements covering or partitioning a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSystem {
    pub elements: Vec<CycleElement>,
    pub mode: SystemMode,
}

impl CycleSystem {
    pub fn new(elements: Vec<CycleElement>, mode: SystemMode) -> Self {
        Self { elements, mode }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut sets = Vec::with_capacity(self.elements.len());
        for (i, e) in self.elements.iter().enumerate() {
            e.check(g)
                .map_err(|d| invalid("cycle system", format!("element {i}: {d}")))?;
            let set = distinct_vertices(&e.vertices())
                .ok_or_else(|| invalid("cycle system", format!("element {i} repeats a vertex")))?;
            sets.push(set);
        }
        check_union("cycle system", self.mode, sets.into_iter(), &g.vertices())
    }
}
