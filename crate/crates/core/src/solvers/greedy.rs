//! Merge-until-stuck constructions for path and cycle partitions.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::systems::{CycleElement, CycleSystem, PathSystem, SystemMode};

/// Starts from singletons and joins two paths whenever an endvertex of one is
/// adjacent to an endvertex of the other. The least eligible index pair
/// `(i, j)` merges first; the merged path takes slot `i`.
///
/// When no merge applies, picking one endvertex per path gives an
/// independent set, so the result never has more than `α(G)` paths.
pub fn greedy_path_partition(g: &Graph) -> PathSystem {
    let mut paths: Vec<Vec<usize>> = (0..g.order()).map(|v| vec![v]).collect();
    'merge: loop {
        for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                if let Some(joined) = join_paths(g, &paths[i], &paths[j]) {
                    paths[i] = joined;
                    paths.remove(j);
                    continue 'merge;
                }
            }
        }
        break;
    }
    let system = PathSystem::new(paths, SystemMode::Partition);
    debug_assert!(system.validate(g).is_ok());
    system
}

fn join_paths(g: &Graph, a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    let (a0, a1) = (a[0], a[a.len() - 1]);
    let (b0, b1) = (b[0], b[b.len() - 1]);
    let concat = |x: &mut dyn Iterator<Item = usize>, y: &mut dyn Iterator<Item = usize>| {
        x.chain(y).collect::<Vec<_>>()
    };
    if g.has_edge(a1, b0) {
        Some(concat(&mut a.iter().copied(), &mut b.iter().copied()))
    } else if g.has_edge(a1, b1) {
        Some(concat(&mut a.iter().copied(), &mut b.iter().rev().copied()))
    } else if g.has_edge(a0, b1) {
        Some(concat(&mut b.iter().copied(), &mut a.iter().copied()))
    } else if g.has_edge(a0, b0) {
        Some(concat(&mut a.iter().rev().copied(), &mut b.iter().copied()))
    } else {
        None
    }
}

/// A cycle-partition element together with its anchor pair `(x, y)`:
/// `x = y` for a single vertex, otherwise `xy` is an edge of the element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredElement {
    pub element: CycleElement,
    pub x: usize,
    pub y: usize,
}

impl AnchoredElement {
    /// Anchors on the lexicographically least edge `(a, b)`, `a < b`, or on
    /// the vertex itself for `K1`.
    pub fn new(element: CycleElement) -> Self {
        let (x, y) = match &element {
            CycleElement::K1(v) => (*v, *v),
            CycleElement::K2(a, b) => (*a.min(b), *a.max(b)),
            CycleElement::Cycle(c) => {
                let n = c.len();
                (0..n)
                    .map(|i| {
                        let (p, q) = (c[i], c[(i + 1) % n]);
                        (p.min(q), p.max(q))
                    })
                    .min()
                    .expect("cycle is nonempty")
            }
        };
        Self { element, x, y }
    }

    fn anchors_ok(&self) -> bool {
        match &self.element {
            CycleElement::K1(v) => self.x == *v && self.y == *v,
            CycleElement::K2(a, b) => (self.x, self.y) == (*a, *b) || (self.x, self.y) == (*b, *a),
            CycleElement::Cycle(c) => {
                let n = c.len();
                (0..n).any(|i| {
                    let (p, q) = (c[i], c[(i + 1) % n]);
                    (p, q) == (self.x, self.y) || (q, p) == (self.x, self.y)
                })
            }
        }
    }

    /// Hamiltonian path of the element from `x` to `y`.
    fn path_x_to_y(&self) -> Vec<usize> {
        match &self.element {
            CycleElement::K1(v) => vec![*v],
            CycleElement::K2(..) => vec![self.x, self.y],
            CycleElement::Cycle(c) => {
                let n = c.len();
                let p = c.iter().position(|&v| v == self.x).expect("anchor on cycle");
                // walk away from y so the walk ends at y
                let forward = c[(p + 1) % n] != self.y;
                (0..n)
                    .map(|k| if forward { c[(p + k) % n] } else { c[(p + n - k) % n] })
                    .collect()
            }
        }
    }
}

/// Greedy cycle partition starting from all singletons.
pub fn greedy_cycle_partition(g: &Graph) -> CycleSystem {
    let start = (0..g.order())
        .map(|v| AnchoredElement::new(CycleElement::K1(v)))
        .collect();
    let merged = merge_anchored(g, start);
    let system = CycleSystem::new(
        merged.into_iter().map(|a| a.element).collect(),
        SystemMode::Partition,
    );
    debug_assert!(system.validate(g).is_ok());
    system
}

/// Greedy cycle merge from a caller-supplied partition with explicit anchors.
///
/// Elements `i < j` merge whenever `x_i x_j` and `y_i y_j` are both edges:
/// the `x_i → y_i` walk through element `i`, then `y_j → x_j` through element
/// `j`, closes into a cycle via `x_j x_i` (or is a `K2` when both were
/// singletons). The least eligible pair merges first, the result takes slot
/// `i`, and it is re-anchored on its least edge.
///
/// A stuck partition has fewer than `R(α+1, α+1)` elements: colour pair
/// `ij` by whether `x_i x_j` is an edge; a monochromatic `(α+1)`-set would give
/// an independent set of `x`'s or of `y`'s.
pub fn greedy_cycle_partition_from(
    g: &Graph,
    elements: Vec<AnchoredElement>,
) -> Result<Vec<AnchoredElement>> {
    for (i, a) in elements.iter().enumerate() {
        if !a.anchors_ok() {
            return Err(Error::InvalidInput(format!(
                "element {i}: anchors ({}, {}) are not a vertex or edge of the element",
                a.x, a.y
            )));
        }
    }
    let system = CycleSystem::new(
        elements.iter().map(|a| a.element.clone()).collect(),
        SystemMode::Partition,
    );
    system.validate(g)?;
    Ok(merge_anchored(g, elements))
}

fn merge_anchored(g: &Graph, mut elements: Vec<AnchoredElement>) -> Vec<AnchoredElement> {
    'merge: loop {
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                let (a, b) = (&elements[i], &elements[j]);
                if g.has_edge(a.x, b.x) && g.has_edge(a.y, b.y) {
                    let mut seq = a.path_x_to_y();
                    seq.extend(b.path_x_to_y().into_iter().rev());
                    elements[i] = AnchoredElement::new(CycleElement::from_sequence(seq));
                    elements.remove(j);
                    continue 'merge;
                }
            }
        }
        return elements;
    }
}

/// Path endpoints of a greedy partition, one per path.
pub fn designated_ends(system: &PathSystem) -> VertexSet {
    system.paths.iter().map(|p| p[0]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec::*;

    #[test]
    fn greedy_paths() {
        let p6 = Path(6).generate().unwrap();
        assert_eq!(greedy_path_partition(&p6).len(), 1);
        let empty = Graph::empty(4);
        assert_eq!(greedy_path_partition(&empty).len(), 4);
        let star = Star(5).generate().unwrap();
        let sys = greedy_path_partition(&star);
        assert!(sys.len() <= 5);
        assert!(star.is_independent(&designated_ends(&sys)));
    }

    #[test]
    fn c4_from_two_edges() {
        let c4 = Cycle(4).generate().unwrap();
        let start = vec![
            AnchoredElement { element: CycleElement::K2(0, 1), x: 0, y: 1 },
            AnchoredElement { element: CycleElement::K2(2, 3), x: 3, y: 2 },
        ];
        let out = greedy_cycle_partition_from(&c4, start).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].element, CycleElement::Cycle(vec![0, 1, 2, 3]));
        let sys = CycleSystem::new(vec![out[0].element.clone()], SystemMode::Partition);
        assert!(sys.validate(&c4).is_ok());
    }

    #[test]
    fn bad_anchors_rejected() {
        let c4 = Cycle(4).generate().unwrap();
        let start = vec![
            AnchoredElement { element: CycleElement::K2(0, 1), x: 0, y: 2 },
            AnchoredElement { element: CycleElement::K2(2, 3), x: 3, y: 2 },
        ];
        assert!(greedy_cycle_partition_from(&c4, start).is_err());
    }

    #[test]
    fn greedy_cycles() {
        assert_eq!(greedy_cycle_partition(&Graph::empty(3)).len(), 3);
        let k4 = Complete(4).generate().unwrap();
        let sys = greedy_cycle_partition(&k4);
        assert_eq!(sys.len(), 1);
        assert!(matches!(sys.elements[0], CycleElement::Cycle(ref c) if c.len() == 4));
    }

    #[test]
    fn cycle_walk_respects_anchor_direction() {
        let a = AnchoredElement { element: CycleElement::Cycle(vec![0, 1, 2, 3]), x: 1, y: 2 };
        assert_eq!(a.path_x_to_y(), vec![1, 0, 3, 2]);
        let b = AnchoredElement { element: CycleElement::Cycle(vec![0, 1, 2, 3]), x: 2, y: 1 };
        assert_eq!(b.path_x_to_y(), vec![2, 3, 0, 1]);
    }
}
