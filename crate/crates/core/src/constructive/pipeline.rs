//! Certified bounded path covers and partitions for forbidden-subgraph
//! classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freeness::{first_occurrence, target_family, target_specs, Characterization};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{greedy_path_partition, PathSystem, SystemMode};

use super::decompose::{decompose, LayerDecomposition};
use super::ramsey::{alpha_sequence, Bound};
use super::spine::{spine_cover, spine_cover_bound, spine_hamiltonian};

/// How a bounded cover was assembled, and the bound it is certified against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    pub n: usize,
    pub mode: SystemMode,
    /// Independence bounds for layers `0..2·margin`.
    pub alpha_bounds: Vec<Bound>,
    pub spine_part_count: usize,
    pub spine_bound: usize,
    /// Path counts for layers `1..2·margin`.
    pub layer_part_counts: Vec<usize>,
    /// `spine_bound` plus the layer bounds from index 1 on.
    pub total_bound: Bound,
    pub size: usize,
}

impl CoverCertificate {
    pub fn holds(&self) -> bool {
        self.total_bound.admits(self.size)
    }
}

fn check_free(g: &Graph, mode: Characterization, n: usize) -> Result<()> {
    let family = target_family(mode, n)?;
    match first_occurrence(g, &family) {
        None => Ok(()),
        Some((k, e)) => Err(Error::NotFree {
            member: target_specs(mode, n)[k].to_string(),
            witness: e.mapping,
        }),
    }
}

fn checked_decomposition(g: &Graph, n: usize) -> Result<LayerDecomposition> {
    let d = decompose(g, n)?;
    if let Some(&failed) = d.predicates.failures().first() {
        return Err(Error::violated(
            match failed {
                "layers_terminate" => "layer termination",
                "coverage" => "coverage",
                _ => "last slot empty",
            },
            format!("decomposition predicate {failed} is false for n = {n}"),
        ));
    }
    Ok(d)
}

/// Greedy partitions of the layers `1..2·margin`, in original labels, each
/// checked against its independence bound.
fn layer_paths(g: &Graph, d: &LayerDecomposition, bounds: &[Bound]) -> Result<Vec<Vec<Vec<usize>>>> {
    d.layers
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, layer)| {
            let labels = layer.to_vec();
            let paths: Vec<Vec<usize>> = greedy_path_partition(&g.induced_subgraph(layer)?)
                .paths
                .into_iter()
                .map(|p| p.into_iter().map(|v| labels[v]).collect())
                .collect();
            if !bounds[i].admits(paths.len()) {
                return Err(Error::violated(
                    "layer independence",
                    format!("layer {i} needs {} paths, above its bound {}", paths.len(), bounds[i]),
                ));
            }
            Ok(paths)
        })
        .collect()
}

fn assemble(
    g: &Graph,
    n: usize,
    mode: SystemMode,
    d: &LayerDecomposition,
    spine_paths: Vec<Vec<usize>>,
    spine_bound: usize,
) -> Result<(PathSystem, CoverCertificate)> {
    let alpha_bounds = alpha_sequence(n)?;
    let layers = layer_paths(g, d, &alpha_bounds)?;
    let spine_part_count = spine_paths.len();
    let layer_part_counts: Vec<usize> = layers.iter().map(Vec::len).collect();
    let mut paths = spine_paths;
    paths.extend(layers.into_iter().flatten());
    let system = PathSystem::new(paths, mode);
    system.validate(g)?;

    let spine_term = Bound::Exact(spine_bound.into());
    let total_bound = Bound::sum(std::iter::once(&spine_term).chain(&alpha_bounds[1..]));
    let certificate = CoverCertificate {
        n,
        mode,
        alpha_bounds,
        spine_part_count,
        spine_bound,
        layer_part_counts,
        total_bound,
        size: system.len(),
    };
    if !certificate.holds() {
        return Err(Error::violated("cover bound", "assembled system exceeds its certificate"));
    }
    Ok((system, certificate))
}

/// A path cover of a connected graph free of `K_{1,n}`, `K*_n`, `F1(n,n)` and
/// `F2(n,n)`, with at most `max(3n-6,1) + Σ_{i≥1} α_i` paths.
///
/// With `check_freeness` the hypothesis is tested first and a violation is
/// reported with a witness. Otherwise any failed intermediate predicate is
/// reported as a hypothesis error.
pub fn bounded_path_cover(
    g: &Graph,
    n: usize,
    check_freeness: bool,
) -> Result<(PathSystem, CoverCertificate)> {
    if check_freeness {
        check_free(g, Characterization::A1, n.max(2))?;
    }
    let d = checked_decomposition(g, n)?;
    let spine = spine_cover(g, &d)?;
    let bound = spine_cover_bound(n);
    assemble(g, n, SystemMode::Cover, &d, spine.paths, bound)
}

/// A path partition of a connected graph that is additionally free of
/// `F3(n,n)` and `F4(n,n)`, with at most `1 + Σ_{i≥1} α_i` paths.
pub fn bounded_path_partition(
    g: &Graph,
    n: usize,
    check_freeness: bool,
) -> Result<(PathSystem, CoverCertificate)> {
    if check_freeness {
        check_free(g, Characterization::A2, n.max(2))?;
    }
    let d = checked_decomposition(g, n)?;
    let spine = spine_hamiltonian(g, &d)?;
    assemble(g, n, SystemMode::Partition, &d, vec![spine], 1)
}

/// Vertices of `G[V(P) ∪ Y]`, the part handled by the spine constructions.
pub fn spine_region(d: &LayerDecomposition) -> VertexSet {
    d.spine_set().union(&d.attached)
}
