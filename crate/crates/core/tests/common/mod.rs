//! Brute-force oracles, written independently of the library's algorithms.
//! Everything here enumerates explicitly and is only meant for tiny graphs.

#![allow(dead_code)]

use std::collections::HashSet;

use pathcover_core::Graph;
use proptest::prelude::*;

/// Every simple path as its vertex set (single vertices included).
pub fn path_sets(g: &Graph) -> HashSet<u32> {
    fn walk(g: &Graph, last: usize, used: u32, out: &mut HashSet<u32>) {
        out.insert(used);
        for w in 0..g.order() {
            if used >> w & 1 == 0 && g.has_edge(last, w) {
                walk(g, w, used | 1 << w, out);
            }
        }
    }
    let mut out = HashSet::new();
    for s in 0..g.order() {
        walk(g, s, 1 << s, &mut out);
    }
    out
}

/// Vertex sets of every `K1`, `K2` and cycle.
pub fn cycle_sets(g: &Graph) -> HashSet<u32> {
    fn walk(g: &Graph, start: usize, last: usize, used: u32, len: usize, out: &mut HashSet<u32>) {
        if len >= 3 && g.has_edge(last, start) {
            out.insert(used);
        }
        for w in start + 1..g.order() {
            if used >> w & 1 == 0 && g.has_edge(last, w) {
                walk(g, start, w, used | 1 << w, len + 1, out);
            }
        }
    }
    let mut out = HashSet::new();
    for s in 0..g.order() {
        out.insert(1 << s);
        for t in s + 1..g.order() {
            if g.has_edge(s, t) {
                out.insert(1 << s | 1 << t);
            }
        }
        walk(g, s, s, 1 << s, 1, &mut out);
    }
    out
}

/// Fewest elements covering (or, if `disjoint`, partitioning) all vertices,
/// by breadth-first search over covered sets.
pub fn min_elements(order: usize, elements: &HashSet<u32>, disjoint: bool) -> usize {
    let full: u32 = if order == 32 { u32::MAX } else { (1 << order) - 1 };
    let mut frontier: HashSet<u32> = [0].into_iter().collect();
    for k in 0.. {
        if frontier.contains(&full) {
            return k;
        }
        let mut next = HashSet::new();
        for &covered in &frontier {
            for &e in elements {
                if disjoint && covered & e != 0 {
                    continue;
                }
                if !disjoint && covered | e == covered {
                    continue;
                }
                next.insert(covered | e);
            }
        }
        frontier = next;
    }
    unreachable!()
}

pub fn pc(g: &Graph) -> usize {
    min_elements(g.order(), &path_sets(g), false)
}

pub fn pp(g: &Graph) -> usize {
    min_elements(g.order(), &path_sets(g), true)
}

pub fn cc(g: &Graph) -> usize {
    min_elements(g.order(), &cycle_sets(g), false)
}

pub fn cp(g: &Graph) -> usize {
    min_elements(g.order(), &cycle_sets(g), true)
}

pub fn alpha(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|i| (i + 1..n).all(|j| s >> i & 1 == 0 || s >> j & 1 == 0 || !g.has_edge(i, j)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn has_ham_path(g: &Graph) -> bool {
    g.order() > 0 && path_sets(g).contains(&((1u32 << g.order()) - 1))
}

/// Whether some injective map of `h` into `g` preserves adjacency and
/// non-adjacency, trying all maps.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let k = map.len();
        if k == h.order() {
            return true;
        }
        for c in 0..g.order() {
            if map.contains(&c) {
                continue;
            }
            if (0..k).all(|u| h.has_edge(u, k) == g.has_edge(map[u], c)) {
                map.push(c);
                if extend(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, h, &mut Vec::new())
}

/// Graph from an upper-triangle bit list in graph6 column order.
pub fn from_bits(order: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(order);
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

pub fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| from_bits(n, &bits))
    })
}

pub fn arb_connected_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    arb_graph(min, max).prop_filter("connected", Graph::is_connected)
}
