//! Configuration-model sampling of random `d`-regular multigraphs.
//!
//! Vertex `v` owns the half-edges `v*d .. (v+1)*d`. A graph is a perfect
//! matching of the `n*d` half-edges, stored as an involution without fixed
//! points. Self-loops and parallel edges are allowed; [`sample_simple`]
//! conditions on their absence by rejection.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Error, Result};

/// A `d`-regular multigraph given by a half-edge pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularMultigraph {
    n: usize,
    d: usize,
    pairing: Vec<usize>,
    // half-edge -> edge index; edges are numbered by their smaller half-edge
    edge_of: Vec<usize>,
    edge_count: usize,
}

impl RegularMultigraph {
    /// Builds a graph from an explicit pairing, checking every invariant.
    pub fn from_pairing(n: usize, d: usize, pairing: Vec<usize>) -> Result<Self> {
        check_params(n, d)?;
        if pairing.len() != n * d {
            return Err(Error::InvalidPairing {
                half_edge: pairing.len().min(n * d),
            });
        }
        for (h, &m) in pairing.iter().enumerate() {
            if m >= pairing.len() || m == h || pairing[m] != h {
                return Err(Error::InvalidPairing { half_edge: h });
            }
        }
        Ok(Self::from_valid_pairing(n, d, pairing))
    }

    fn from_valid_pairing(n: usize, d: usize, pairing: Vec<usize>) -> Self {
        let mut edge_of = vec![0; pairing.len()];
        let mut next = 0;
        for h in 0..pairing.len() {
            let m = pairing[h];
            if h < m {
                edge_of[h] = next;
                edge_of[m] = next;
                next += 1;
            }
        }
        RegularMultigraph {
            n,
            d,
            pairing,
            edge_of,
            edge_count: next,
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Degree of every vertex.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of edges, always `n*d/2`.
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// The raw involution on half-edges.
    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    /// The half-edge matched with `h`.
    #[inline]
    pub fn mate(&self, h: usize) -> usize {
        self.pairing[h]
    }

    /// Vertex owning half-edge `h`.
    #[inline]
    pub fn vertex_of(&self, h: usize) -> usize {
        h / self.d
    }

    /// Edge index of the edge containing half-edge `h`.
    #[inline]
    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }

    /// Half-edges of vertex `v`.
    #[inline]
    pub fn half_edges(&self, v: usize) -> core::ops::Range<usize> {
        v * self.d..(v + 1) * self.d
    }

    /// Neighbors of `v`, one entry per incident half-edge (a self-loop shows
    /// `v` twice, parallel edges repeat the neighbor).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.half_edges(v).map(move |h| self.pairing[h] / self.d)
    }

    /// Endpoints of edge `e` (smaller half-edge's vertex first).
    pub fn edge_endpoints(&self, e: usize) -> Option<(usize, usize)> {
        self.edges().nth(e)
    }

    /// All edges as `(u, v)` vertex pairs, in edge-index order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairing
            .iter()
            .enumerate()
            .filter(|&(h, &m)| h < m)
            .map(move |(h, &m)| (h / self.d, m / self.d))
    }

    /// The smaller half-edge of every edge, in edge-index order.
    pub fn edge_half_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairing
            .iter()
            .enumerate()
            .filter(|&(h, &m)| h < m)
            .map(|(h, _)| h)
    }

    /// Number of self-loops.
    pub fn self_loops(&self) -> usize {
        self.edges().filter(|(u, v)| u == v).count()
    }

    /// True iff there is no self-loop and no parallel edge.
    pub fn is_simple(&self) -> bool {
        let mut nbrs = Vec::with_capacity(self.d);
        for v in 0..self.n {
            nbrs.clear();
            for u in self.neighbors(v) {
                if u == v || nbrs.contains(&u) {
                    return false;
                }
                nbrs.push(u);
            }
        }
        true
    }

    /// Number of vertices reachable from vertex 0.
    pub fn component_size_of_zero(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count
    }

    /// True iff the graph is connected.
    pub fn is_connected(&self) -> bool {
        self.component_size_of_zero() == self.n
    }
}

fn check_params(n: usize, d: usize) -> Result<()> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d });
    }
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if (n * d) % 2 == 1 {
        return Err(Error::OddHalfEdges { n, d });
    }
    Ok(())
}

/// Draws a uniform perfect matching of the `n*d` half-edges.
///
/// The half-edge indices are shuffled and consumed in consecutive pairs.
pub fn sample_pairing<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    rng: &mut R,
) -> Result<RegularMultigraph> {
    check_params(n, d)?;
    let mut order: Vec<usize> = (0..n * d).collect();
    order.shuffle(rng);
    let mut pairing = vec![0; n * d];
    for pair in order.chunks_exact(2) {
        pairing[pair[0]] = pair[1];
        pairing[pair[1]] = pair[0];
    }
    Ok(RegularMultigraph::from_valid_pairing(n, d, pairing))
}

/// Outcome of a rejection sampler, with its bookkeeping.
#[derive(Debug, Clone)]
pub struct Sampled {
    /// The accepted graph.
    pub graph: RegularMultigraph,
    /// Pairings drawn, including the accepted one.
    pub attempts: u32,
    /// Pairings rejected only because they were disconnected.
    pub disconnected: u32,
}

/// Repeats [`sample_pairing`] until the result is simple.
///
/// Conditional on simplicity the result is uniform over simple `d`-regular
/// graphs on `n` labelled vertices. The acceptance rate is roughly
/// `exp((1 - d^2)/4)`, so this is only practical for small `d`.
pub fn sample_simple<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    rng: &mut R,
    max_attempts: u32,
) -> Result<Sampled> {
    check_params(n, d)?;
    for attempt in 1..=max_attempts {
        let g = sample_pairing(n, d, rng)?;
        if g.is_simple() {
            return Ok(Sampled {
                graph: g,
                attempts: attempt,
                disconnected: 0,
            });
        }
    }
    Err(Error::RejectionExhausted {
        attempts: max_attempts,
    })
}

/// How to treat loops and multi-edges when sampling an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SimpleMode {
    /// Resample until simple.
    #[default]
    Reject,
    /// Keep the configuration-model multigraph as drawn.
    Multigraph,
}

/// Samples a connected instance, resampling disconnected draws.
///
/// `max_attempts` bounds the total number of pairings drawn.
pub fn sample_instance<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    mode: SimpleMode,
    rng: &mut R,
    max_attempts: u32,
) -> Result<Sampled> {
    check_params(n, d)?;
    let mut attempts = 0;
    let mut disconnected = 0;
    while attempts < max_attempts {
        let (g, used) = match mode {
            SimpleMode::Reject => {
                let s = sample_simple(n, d, rng, max_attempts - attempts)?;
                (s.graph, s.attempts)
            }
            SimpleMode::Multigraph => (sample_pairing(n, d, rng)?, 1),
        };
        attempts += used;
        if g.is_connected() {
            return Ok(Sampled {
                graph: g,
                attempts,
                disconnected,
            });
        }
        disconnected += 1;
    }
    Err(Error::RejectionExhausted { attempts })
}
