//! Layered decomposition of a connected graph around a longest induced path.
//!
//! Spine positions are 1-based in the documentation (`u_1..u_m`) and stored
//! 0-based in `spine`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::induced_path::longest_induced_path;
use super::ramsey::spine_margin;

/// Vertices attached to the middle of the spine whose leftmost spine
/// neighbour is `u_index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AttachmentSlot {
    /// 1-based spine position.
    pub index: usize,
    pub members: VertexSet,
    /// Members also adjacent to `u_{index+1}`.
    pub next: VertexSet,
    /// The remaining members.
    pub skip: VertexSet,
}

/// The lemma predicates evaluated on a decomposition. All hold when the
/// input is free of the forbidden family; a non-free input may fail some.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predicates {
    /// Layer `2·margin` is empty.
    pub layers_terminate: bool,
    /// Spine, its neighbourhood and layers `2..2·margin-1` cover every vertex.
    pub coverage: bool,
    /// The slot at position `m - margin` is empty.
    pub last_slot_empty: bool,
}

impl Predicates {
    pub fn all(&self) -> bool {
        self.layers_terminate && self.coverage && self.last_slot_empty
    }

    /// Names of the failed predicates.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.layers_terminate {
            out.push("layers_terminate");
        }
        if !self.coverage {
            out.push("coverage");
        }
        if !self.last_slot_empty {
            out.push("last_slot_empty");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerDecomposition {
    pub n: usize,
    /// Number of spine vertices kept in the end layer at each side.
    pub margin: usize,
    /// `u_1..u_m`.
    pub spine: Vec<usize>,
    /// `X_0..X_{2·margin-1}`.
    pub layers: Vec<VertexSet>,
    /// `X_{2·margin}`, computed only to test termination.
    pub overflow: VertexSet,
    /// Vertices seen only by the middle of the spine.
    pub attached: VertexSet,
    /// Slots for positions `margin+1..=m-margin` (empty when `m ≤ 2·margin`).
    pub slots: Vec<AttachmentSlot>,
    pub predicates: Predicates,
}

impl LayerDecomposition {
    /// `u_i`, 1-based.
    pub fn u(&self, i: usize) -> usize {
        self.spine[i - 1]
    }

    pub fn m(&self) -> usize {
        self.spine.len()
    }

    pub fn spine_set(&self) -> VertexSet {
        self.spine.iter().copied().collect()
    }

    /// The slot at 1-based position `i`, if it lies in the middle range.
    pub fn slot(&self, i: usize) -> Option<&AttachmentSlot> {
        let first = self.slots.first()?.index;
        self.slots.get(i.checked_sub(first)?)
    }
}

/// Builds the decomposition and evaluates its predicates. The freeness
/// hypothesis is not checked here.
pub fn decompose(g: &Graph, n: usize) -> Result<LayerDecomposition> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n must be at least 2, got {n}")));
    }
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let margin = spine_margin(n);
    let spine = longest_induced_path(g)?;
    let m = spine.len();
    let on_spine: VertexSet = spine.iter().copied().collect();
    let end_layer: VertexSet = (1..=m)
        .filter(|&i| i <= margin || i + margin > m)
        .map(|i| spine[i - 1])
        .collect();
    let middle = on_spine.difference(&end_layer);

    let near_ends = g.neighborhood(&end_layer)?;
    let attached = g
        .neighborhood(&middle)?
        .difference(&end_layer)
        .difference(&near_ends);

    let mut layers = vec![end_layer.clone(), near_ends.difference(&on_spine)];
    let mut seen = on_spine.union(&attached).union(&layers[1]);
    while layers.len() <= 2 * margin {
        let next = g.neighborhood(layers.last().expect("nonempty"))?.difference(&seen);
        seen.union_with(&next);
        layers.push(next);
    }
    let overflow = layers.pop().expect("2·margin+1 layers");

    let mut slots: Vec<AttachmentSlot> = if m > 2 * margin {
        (margin + 1..=m - margin)
            .map(|index| AttachmentSlot {
                index,
                members: VertexSet::new(),
                next: VertexSet::new(),
                skip: VertexSet::new(),
            })
            .collect()
    } else {
        Vec::new()
    };
    for y in attached.iter() {
        let i = (margin + 1..=m - margin)
            .find(|&j| g.has_edge(y, spine[j - 1]))
            .expect("attached vertices see the middle of the spine");
        let slot = &mut slots[i - margin - 1];
        slot.members.insert(y);
        if g.has_edge(y, spine[i]) {
            slot.next.insert(y);
        } else {
            slot.skip.insert(y);
        }
    }

    let mut covered = on_spine.union(&g.neighborhood(&on_spine)?);
    for layer in layers.iter().skip(2) {
        covered.union_with(layer);
    }
    let predicates = Predicates {
        layers_terminate: overflow.is_empty(),
        coverage: covered == g.vertices(),
        last_slot_empty: slots.last().is_none_or(|s| s.members.is_empty()),
    };

    Ok(LayerDecomposition {
        n,
        margin,
        spine,
        layers,
        overflow,
        attached,
        slots,
        predicates,
    })
}
