//! Bit-parallel subset dynamic programs behind the exact solvers.
//!
//! All tables are indexed by vertex masks, so memory and time are `O(2^n)`
//! per table and `O(3^n)` for the partition DP. Orders above
//! [`MAX_EXACT_ORDER`] are refused.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on the order accepted by the exact solvers.
pub const MAX_EXACT_ORDER: usize = 24;

const NONE: u32 = u32::MAX;

pub(crate) struct Exact {
    pub n: usize,
    adj: Vec<u32>,
}

#[inline]
fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            b
        })
    })
}

impl Exact {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_EXACT_ORDER {
            return Err(Error::TooLarge {
                order: n,
                limit: MAX_EXACT_ORDER,
            });
        }
        let adj = g
            .masks()
            .expect("order fits in a word")
            .into_iter()
            .map(|m| m as u32)
            .collect();
        Ok(Self { n, adj })
    }

    pub fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn table_len(&self) -> usize {
        1usize << self.n
    }

    /// `ends[mask]`: set of vertices `v` such that `G[mask]` has a
    /// Hamiltonian path ending at `v`.
    pub fn path_ends(&self) -> Vec<u32> {
        let mut ends = vec![0u32; self.table_len()];
        for v in 0..self.n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1..self.table_len() as u32 {
            let e = ends[mask as usize];
            if e == 0 {
                continue;
            }
            for u in bits(!mask & self.full()) {
                if self.adj[u] & e != 0 {
                    ends[(mask | 1 << u) as usize] |= 1 << u;
                }
            }
        }
        ends
    }

    /// Walk a Hamiltonian path of `G[mask]` back from its recorded end.
    pub fn path_in(&self, ends: &[u32], mask: u32) -> Vec<usize> {
        let mut seq = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        let mut v = ends[mask as usize].trailing_zeros() as usize;
        loop {
            seq.push(v);
            rest &= !(1 << v);
            if rest == 0 {
                break;
            }
            v = (ends[rest as usize] & self.adj[v]).trailing_zeros() as usize;
        }
        seq.reverse();
        seq
    }

    /// `ends[mask]`: vertices `v` such that `G[mask]` has a Hamiltonian path
    /// from the lowest vertex of `mask` to `v`.
    pub fn rooted_path_ends(&self) -> Vec<u32> {
        let mut ends = vec![0u32; self.table_len()];
        for v in 0..self.n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1..self.table_len() as u32 {
            let e = ends[mask as usize];
            if e == 0 {
                continue;
            }
            let low = mask.trailing_zeros();
            let above = !mask & self.full() & !((2u32 << low) - 1);
            for u in bits(above) {
                if self.adj[u] & e != 0 {
                    ends[(mask | 1 << u) as usize] |= 1 << u;
                }
            }
        }
        ends
    }

    /// `G[mask]` is spanned by a single `K1`, `K2` or cycle.
    pub fn spans_element(&self, rooted: &[u32], mask: u32) -> bool {
        let low = mask.trailing_zeros() as usize;
        match mask.count_ones() {
            0 => false,
            1 => true,
            2 => self.adj[low] & mask != 0,
            _ => rooted[mask as usize] & self.adj[low] != 0,
        }
    }

    /// Vertex sequence of the spanning element of `G[mask]`; for three or
    /// more vertices this is a Hamiltonian cycle starting at the lowest vertex.
    pub fn element_in(&self, rooted: &[u32], mask: u32) -> Vec<usize> {
        let low = mask.trailing_zeros() as usize;
        if mask.count_ones() <= 2 {
            return bits(mask).collect();
        }
        let mut seq = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        let mut v = (rooted[mask as usize] & self.adj[low]).trailing_zeros() as usize;
        while v != low {
            seq.push(v);
            rest &= !(1 << v);
            v = (rooted[rest as usize] & self.adj[v]).trailing_zeros() as usize;
        }
        seq.push(low);
        seq.reverse();
        seq
    }

    /// For every mask, some feasible superset (or `NONE`). The feasible
    /// family's down-closure is `{mask : witness[mask] != NONE}`.
    pub fn superset_witness(&self, feasible: &[bool]) -> Vec<u32> {
        let mut wit = vec![NONE; self.table_len()];
        for mask in (0..self.table_len() as u32).rev() {
            if feasible[mask as usize] {
                wit[mask as usize] = mask;
                continue;
            }
            for u in bits(!mask & self.full()) {
                let w = wit[(mask | 1 << u) as usize];
                if w != NONE {
                    wit[mask as usize] = w;
                    break;
                }
            }
        }
        wit
    }

    /// Minimum number of feasible parts partitioning the full vertex set,
    /// and the parts. Branches on the lowest vertex of each remaining mask.
    pub fn min_partition(&self, feasible: impl Fn(u32) -> bool) -> (usize, Vec<u32>) {
        let len = self.table_len();
        let mut best = vec![u8::MAX; len];
        let mut choice = vec![0u32; len];
        best[0] = 0;
        for mask in 1..len as u32 {
            let low = mask & mask.wrapping_neg();
            let rest = mask ^ low;
            let mut top = u8::MAX;
            let mut pick = 0;
            let mut sub = rest;
            loop {
                let part = sub | low;
                let prev = best[(mask ^ part) as usize];
                if prev < top - 1 && feasible(part) {
                    top = prev + 1;
                    pick = part;
                    if top == 1 {
                        break;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            best[mask as usize] = top;
            choice[mask as usize] = pick;
        }

        let mut parts = Vec::new();
        let mut mask = self.full();
        while mask != 0 {
            let part = choice[mask as usize];
            parts.push(part);
            mask ^= part;
        }
        (best[self.full() as usize] as usize, parts)
    }
}
