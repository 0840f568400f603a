use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A longest induced path.
///
/// Among all longest induced paths, each written in the direction that makes
/// it lexicographically smaller than its reversal, the lexicographically
/// least sequence is returned. Exhaustive search; exponential in the worst
/// case.
pub fn longest_induced_path(g: &Graph) -> Result<Vec<usize>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut search = Search {
        g,
        path: Vec::new(),
        best: Vec::new(),
    };
    for start in 0..g.order() {
        search.path.push(start);
        search.grow(g.vertices().difference(&VertexSet::singleton(start)));
        search.path.pop();
    }
    Ok(search.best)
}

struct Search<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    /// `open`: vertices off the path with no neighbour on it other than
    /// possibly the last vertex. Every later vertex comes from `open`.
    fn grow(&mut self, open: VertexSet) {
        if self.path.len() + open.len() <= self.best.len() {
            return;
        }
        let last = *self.path.last().expect("nonempty");
        // enumeration is lexicographic, so the first canonical path of a new
        // length is the least one
        let canonical = self.path.len() == 1 || self.path[0] < last;
        if canonical && self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        let next = open.intersection(self.g.neighbors(last));
        let rest = open.difference(self.g.neighbors(last));
        for w in next.iter() {
            self.path.push(w);
            self.grow(rest.clone());
            self.path.pop();
        }
    }
}
