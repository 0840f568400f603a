//! Seeded random graphs.
//!
//! The generator is ChaCha8 seeded with `seed_from_u64`, so streams are
//! identical across platforms and builds. Vertex pairs are visited in graph6
//! column order `(0,1), (0,2), (1,2), (0,3), ...` and each becomes an edge
//! iff a fresh uniform `f64` in `[0, 1)` is below the edge probability.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;

/// How a sample is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Model {
    /// Every pair independently.
    #[default]
    Uniform,
    /// The path `0-1-...-(n-1)` plus every other pair independently. Useful
    /// for long induced paths with vertices hanging off their middle.
    PathBackbone,
}

/// Parses an edge probability written as a decimal or as `a/b`.
pub fn parse_probability(text: &str) -> Result<f64> {
    let bad = |reason: &str| Error::InvalidInput(format!("edge probability `{text}`: {reason}"));
    let p = match text.trim().split_once('/') {
        Some((a, b)) => {
            let a: u64 = a.trim().parse().map_err(|_| bad("numerator is not an integer"))?;
            let b: u64 = b.trim().parse().map_err(|_| bad("denominator is not an integer"))?;
            if b == 0 {
                return Err(bad("zero denominator"));
            }
            a as f64 / b as f64
        }
        None => text.trim().parse::<f64>().map_err(|_| bad("not a number"))?,
    };
    if !(0.0..=1.0).contains(&p) {
        return Err(bad("must lie in [0, 1]"));
    }
    Ok(p)
}

/// One graph of the given order from `rng`.
pub fn random_graph<R: Rng>(rng: &mut R, order: usize, p: f64, model: Model) -> Graph {
    let mut g = Graph::empty(order);
    for j in 1..order {
        for i in 0..j {
            let backbone = model == Model::PathBackbone && i + 1 == j;
            if backbone || rng.gen::<f64>() < p {
                g.add_edge(i, j).expect("pair in range");
            }
        }
    }
    g
}

/// A reproducible stream of random graphs.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    order: usize,
    p: f64,
    model: Model,
    connected_only: bool,
}

/// Draws allowed per requested connected graph before giving up.
const MAX_REJECTIONS: usize = 100_000;

impl Sampler {
    pub fn new(seed: u64, order: usize, p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidInput(format!("edge probability {p} is outside [0, 1]")));
        }
        Ok(Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            order,
            p,
            model: Model::Uniform,
            connected_only: false,
        })
    }

    pub fn model(mut self, model: Model) -> Self {
        self.model = model;
        self
    }

    pub fn connected_only(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    /// The next graph; with `connected_only`, disconnected draws are skipped.
    pub fn next_graph(&mut self) -> Result<Graph> {
        for _ in 0..MAX_REJECTIONS {
            let g = random_graph(&mut self.rng, self.order, self.p, self.model);
            if !self.connected_only || g.is_connected() {
                return Ok(g);
            }
        }
        Err(Error::InvalidInput(format!(
            "no connected graph of order {} after {MAX_REJECTIONS} draws at p = {}",
            self.order, self.p
        )))
    }
}

/// Collects up to `count` pairwise distinct (as labelled graphs) outputs of
/// `draw` accepted by `keep`, stopping after `max_draws` draws.
pub fn distinct_graphs(
    mut draw: impl FnMut() -> Graph,
    mut keep: impl FnMut(&Graph) -> bool,
    count: usize,
    max_draws: usize,
) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..max_draws {
        if out.len() >= count {
            break;
        }
        let g = draw();
        if seen.insert(to_graph6(&g)) && keep(&g) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probabilities() {
        assert_eq!(parse_probability("1/2").unwrap(), 0.5);
        assert_eq!(parse_probability("0.25").unwrap(), 0.25);
        assert_eq!(parse_probability("1").unwrap(), 1.0);
        assert!(parse_probability("3/2").is_err());
        assert!(parse_probability("1/0").is_err());
        assert!(parse_probability("x").is_err());
        assert!(parse_probability("-0.1").is_err());
    }

    #[test]
    fn extremes() {
        let mut full = Sampler::new(7, 5, 1.0).unwrap();
        assert_eq!(full.next_graph().unwrap().size(), 10);
        let mut none = Sampler::new(7, 4, 0.0).unwrap();
        assert_eq!(none.next_graph().unwrap().size(), 0);
        let mut stuck = Sampler::new(7, 3, 0.0).unwrap().connected_only(true);
        assert!(stuck.next_graph().is_err());
    }

    #[test]
    fn deterministic() {
        let run = |seed| {
            let mut s = Sampler::new(seed, 8, 0.4).unwrap();
            (0..5).map(|_| to_graph6(&s.next_graph().unwrap())).collect::<Vec<_>>()
        };
        assert_eq!(run(3), run(3));
        assert_ne!(run(3), run(4));
    }

    #[test]
    fn backbone_and_connectivity() {
        let mut s = Sampler::new(1, 9, 0.1).unwrap().model(Model::PathBackbone);
        let g = s.next_graph().unwrap();
        assert!((0..8).all(|i| g.has_edge(i, i + 1)));
        let mut c = Sampler::new(2, 7, 0.3).unwrap().connected_only(true);
        assert!((0..20).all(|_| c.next_graph().unwrap().is_connected()));
    }

    #[test]
    fn dedup() {
        let mut s = Sampler::new(5, 3, 0.5).unwrap();
        let graphs = distinct_graphs(|| s.next_graph().unwrap(), |_| true, 100, 2000);
        // there are only 8 labelled graphs on 3 vertices
        assert_eq!(graphs.len(), 8);
    }
}
