//! I.i.d. mean-one exponential edge weights.

use alloc::vec::Vec;

use rand::Rng;

use crate::graph::RegularMultigraph;
use crate::{math, Error, Result};

/// Uniform draw on the open interval `(0, 1)`: a 52-bit grid shifted by half
/// a step, so both ends are exactly representable and never reached.
#[inline]
pub fn open_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    ((rng.next_u64() >> 12) as f64 + 0.5) * (1.0 / (1u64 << 52) as f64)
}

/// One `Exp(1)` draw by inversion, `-ln U`. Always finite and strictly positive.
#[inline]
pub fn exp1<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    -math::ln(open_unit(rng))
}

/// A multigraph with one positive weight per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    graph: RegularMultigraph,
    weights: Vec<f64>,
    // weight seen from each half-edge, for a cache-friendly relaxation loop
    half_weights: Vec<f64>,
}

impl WeightedGraph {
    /// Attaches explicit weights (edge-index order). Every weight must be
    /// finite and strictly positive.
    pub fn new(graph: RegularMultigraph, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != graph.edge_count() {
            return Err(Error::Domain("weights length must equal the edge count"));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::Domain("edge weights must be finite and positive"));
        }
        let half_weights = (0..graph.pairing().len())
            .map(|h| weights[graph.edge_of(h)])
            .collect();
        Ok(WeightedGraph {
            graph,
            weights,
            half_weights,
        })
    }

    /// The underlying multigraph.
    pub fn graph(&self) -> &RegularMultigraph {
        &self.graph
    }

    /// Edge weights in edge-index order.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Weight of the edge through half-edge `h`.
    #[inline]
    pub fn half_weight(&self, h: usize) -> f64 {
        self.half_weights[h]
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Lightest edge between `u` and `v`, if any. Parallel edges act through
    /// their minimum.
    pub fn min_weight_between(&self, u: usize, v: usize) -> Option<f64> {
        let g = &self.graph;
        if u >= g.n() || v >= g.n() {
            return None;
        }
        g.half_edges(u)
            .filter(|&h| g.vertex_of(g.mate(h)) == v)
            .map(|h| self.half_weights[h])
            .min_by(f64::total_cmp)
    }

    /// Total weight of a path given as a vertex sequence. Between
    /// consecutive vertices the lightest connecting edge is used.
    pub fn path_weight(&self, path: &[usize]) -> Result<f64> {
        let mut total = 0.0;
        for step in path.windows(2) {
            total += self
                .min_weight_between(step[0], step[1])
                .ok_or(Error::MissingEdge {
                    from: step[0],
                    to: step[1],
                })?;
        }
        Ok(total)
    }

    /// Total weight of a path given as edge indices.
    pub fn edge_path_weight(&self, edges: &[usize]) -> Result<f64> {
        edges.iter().try_fold(0.0, |acc, &e| {
            self.weights
                .get(e)
                .map(|w| acc + w)
                .ok_or(Error::MissingEdge { from: e, to: e })
        })
    }
}

/// Draws an independent `Exp(1)` weight for every edge.
pub fn assign_weights<R: Rng + ?Sized>(graph: RegularMultigraph, rng: &mut R) -> WeightedGraph {
    let weights = (0..graph.edge_count()).map(|_| exp1(rng)).collect();
    WeightedGraph::new(graph, weights).expect("exponential draws are positive and finite")
}
