//! Induced-subgraph search, `H`-freeness and the family order `≤`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{Graph, VertexSet};

/// An induced copy of a pattern: `mapping[u]` is the image of pattern vertex `u`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub mapping: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and the induced condition against `g` and `h`.
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        let m = &self.mapping;
        if m.len() != h.order() || m.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let image: VertexSet = m.iter().copied().collect();
        if image.len() != m.len() {
            return false;
        }
        (0..h.order()).all(|u| (u + 1..h.order()).all(|w| h.has_edge(u, w) == g.has_edge(m[u], m[w])))
    }

    pub fn image(&self) -> Vec<usize> {
        let mut v = self.mapping.clone();
        v.sort_unstable();
        v
    }
}

/// Pattern vertices in the order they are placed: highest degree first, then
/// greedily the vertex with most already-placed neighbours. Ties go to the
/// lower label.
fn placement_order(h: &Graph) -> Vec<usize> {
    let n = h.order();
    let mut placed = VertexSet::new();
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&u| !placed.contains(u))
            .max_by_key(|&u| {
                (
                    h.neighbors(u).intersection(&placed).len(),
                    h.degree(u),
                    std::cmp::Reverse(u),
                )
            })
            .expect("unplaced vertex exists");
        placed.insert(next);
        order.push(next);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    mapping: Vec<usize>,
    used: VertexSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let u = self.order[depth];
        let mut cand = self.g.vertices().difference(&self.used);
        for &w in &self.order[..depth] {
            let image = self.mapping[w];
            if self.h.has_edge(u, w) {
                cand = cand.intersection(self.g.neighbors(image));
            } else {
                cand = cand.difference(self.g.neighbors(image));
            }
        }
        let need = self.h.degree(u);
        for c in cand.iter() {
            if self.g.degree(c) < need {
                continue;
            }
            self.mapping[u] = c;
            self.used.insert(c);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(c);
        }
        false
    }
}

/// Finds an induced copy of `h` in `g`.
///
/// Candidates are tried in ascending label order along a fixed placement
/// order of the pattern, so the witness is reproducible.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Embedding> {
    if h.order() > g.order() {
        return None;
    }
    let mut search = Search {
        g,
        h,
        order: placement_order(h),
        mapping: vec![usize::MAX; h.order()],
        used: VertexSet::new(),
    };
    search.extend(0).then_some(Embedding {
        mapping: search.mapping,
    })
}

/// Same order, same size, and one embeds in the other.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && find_induced(g, h).is_some()
}

/// True iff `g` contains no induced copy of any member of `hs`.
pub fn is_family_free(g: &Graph, hs: &[Graph]) -> bool {
    hs.iter().all(|h| find_induced(g, h).is_none())
}

/// The first member of `hs` (in list order) that occurs induced in `g`, with
/// its witness.
pub fn first_occurrence(g: &Graph, hs: &[Graph]) -> Option<(usize, Embedding)> {
    hs.iter()
        .enumerate()
        .find_map(|(i, h)| find_induced(g, h).map(|e| (i, e)))
}

/// `H₁ ≤ H₂`: every member of `h2s` contains some member of `h1s` as an
/// induced subgraph.
pub fn family_leq(h1s: &[Graph], h2s: &[Graph]) -> Result<bool> {
    if h1s.is_empty() || h2s.is_empty() {
        return Err(Error::InvalidInput("family_leq needs two nonempty families".into()));
    }
    Ok(h2s
        .iter()
        .all(|big| h1s.iter().any(|small| find_induced(big, small).is_some())))
}

/// Which characterised condition to test a family against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Characterization {
    /// Bounded path cover number: `{K_{1,n}, K*_n, F1_{n,n}, F2_{n,n}}`.
    A1,
    /// Bounded path partition number: adds `F3_{n,n}`, `F4_{n,n}`.
    A2,
    /// Bounded cycle cover/partition number: `{K_{1,n}, K*_n, P_n}`.
    Aprime,
}

/// The target family for `mode` at parameter `n` (as specs).
pub fn target_specs(mode: Characterization, n: usize) -> Vec<FamilySpec> {
    use FamilySpec::*;
    match mode {
        Characterization::A1 => vec![Star(n), KStar(n), F1(n, n), F2(n, n)],
        Characterization::A2 => vec![Star(n), KStar(n), F1(n, n), F2(n, n), F3(n, n), F4(n, n)],
        Characterization::Aprime => vec![Star(n), KStar(n), Path(n)],
    }
}

pub fn target_family(mode: Characterization, n: usize) -> Result<Vec<Graph>> {
    target_specs(mode, n).iter().map(FamilySpec::generate).collect()
}

/// Least `n` in `2..=n_max` with `hs ≤ target_family(mode, n)`.
///
/// This is only a semi-decision: `None` means no witness up to `n_max`.
pub fn matches_characterization(
    hs: &[Graph],
    mode: Characterization,
    n_max: usize,
) -> Result<Option<usize>> {
    if n_max < 2 {
        return Err(Error::InvalidInput("n_max must be at least 2".into()));
    }
    if hs.is_empty() {
        return Err(Error::InvalidInput("empty forbidden family".into()));
    }
    for n in 2..=n_max {
        if family_leq(hs, &target_family(mode, n)?)? {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
