//! Exact shortest-weight paths with hopcount tracking.
//!
//! Labels are compared lexicographically on `(distance, hops, parent id)`.
//! With continuous weights ties in distance have probability zero; in
//! floating point the rule makes every run deterministic. Self-loops are
//! never relaxed and parallel edges are relaxed independently.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use crate::weights::WeightedGraph;
use crate::{Error, Result};

/// Parent / hop sentinel for vertices not reached from the source.
pub const UNREACHED: usize = usize::MAX;

/// Default largest `n` for which [`hop_diameter`] runs all sources.
pub const DEFAULT_ALL_PAIRS_CAP: usize = 20_000;

/// Single-source shortest-weight tree.
///
/// Unreached vertices have `dist = +inf` and `hops = parent = UNREACHED`.
/// The source has itself as parent.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortestPathTree {
    /// Root of the tree.
    pub source: usize,
    /// Weighted distance from the source.
    pub dist: Vec<f64>,
    /// Edges on the shortest-weight path from the source.
    pub hops: Vec<usize>,
    /// Predecessor on the shortest-weight path.
    pub parent: Vec<usize>,
}

impl ShortestPathTree {
    /// True if `v` was reached.
    pub fn reached(&self, v: usize) -> bool {
        self.hops[v] != UNREACHED
    }

    /// Number of unreached vertices.
    pub fn unreached(&self) -> usize {
        self.hops.iter().filter(|&&h| h == UNREACHED).count()
    }

    /// Vertex sequence of the shortest-weight path from the source to `v`.
    pub fn path_to(&self, v: usize) -> Option<Vec<usize>> {
        if !self.reached(v) {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != self.source {
            cur = self.parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    dist: f64,
    hops: usize,
    vertex: usize,
}

impl Entry {
    fn key_cmp(&self, other: &Self) -> Ordering {
        self.dist
            .total_cmp(&other.dist)
            .then(self.hops.cmp(&other.hops))
            .then(self.vertex.cmp(&other.vertex))
    }
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.key_cmp(other) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    // reversed: BinaryHeap is a max-heap
    fn cmp(&self, other: &Self) -> Ordering {
        other.key_cmp(self)
    }
}

/// Dijkstra with lazy deletion. `visit(v, dist, hops)` is called as each
/// vertex is settled, in settling order; returning `Break` stops the search
/// and the partially built tree is returned.
pub fn dijkstra_with<F>(wg: &WeightedGraph, source: usize, mut visit: F) -> Result<ShortestPathTree>
where
    F: FnMut(usize, f64, usize) -> ControlFlow<()>,
{
    let g = wg.graph();
    let n = g.n();
    if source >= n {
        return Err(Error::InvalidVertex { vertex: source, n });
    }
    let mut dist = vec![f64::INFINITY; n];
    let mut hops = vec![UNREACHED; n];
    let mut parent = vec![UNREACHED; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::with_capacity(n);

    dist[source] = 0.0;
    hops[source] = 0;
    parent[source] = source;
    heap.push(Entry {
        dist: 0.0,
        hops: 0,
        vertex: source,
    });

    while let Some(Entry {
        dist: du,
        hops: hu,
        vertex: u,
    }) = heap.pop()
    {
        if settled[u] || du != dist[u] || hu != hops[u] {
            continue;
        }
        settled[u] = true;
        if visit(u, du, hu).is_break() {
            break;
        }
        for h in g.half_edges(u) {
            let v = g.vertex_of(g.mate(h));
            if v == u || settled[v] {
                continue;
            }
            let nd = du + wg.half_weight(h);
            let nh = hu + 1;
            let better = match nd.total_cmp(&dist[v]) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => match nh.cmp(&hops[v]) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        if u < parent[v] {
                            parent[v] = u;
                        }
                        false
                    }
                },
            };
            if better {
                dist[v] = nd;
                hops[v] = nh;
                parent[v] = u;
                heap.push(Entry {
                    dist: nd,
                    hops: nh,
                    vertex: v,
                });
            }
        }
    }

    Ok(ShortestPathTree {
        source,
        dist,
        hops,
        parent,
    })
}

/// Full single-source shortest-weight tree from `source`.
pub fn sssp(wg: &WeightedGraph, source: usize) -> Result<ShortestPathTree> {
    dijkstra_with(wg, source, |_, _, _| ControlFlow::Continue(()))
}

/// The first `count` vertices settled from `source` (source included), as
/// `(vertex, dist, hops)` in order of increasing distance.
pub fn nearest(
    wg: &WeightedGraph,
    source: usize,
    count: usize,
) -> Result<Vec<(usize, f64, usize)>> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    dijkstra_with(wg, source, |v, d, h| {
        out.push((v, d, h));
        if out.len() >= count {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

/// Hop flooding and weighted eccentricity from one source.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloodStats {
    /// `max_j |pi(s, j)|`.
    pub max_hops: usize,
    /// `max_j dist_w(s, j)`.
    pub weighted_ecc: f64,
}

/// All-pairs maxima.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiameterStats {
    /// `max_{i,j} |pi(i, j)|`.
    pub hop_diameter: usize,
    /// `max_{i,j} dist_w(i, j)`.
    pub weighted_diameter: f64,
}

/// Hopcount and weighted distance between two vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairStats {
    /// Edges on the shortest-weight path.
    pub hops: usize,
    /// Its total weight.
    pub dist: f64,
}

/// Everything measured on one instance, with provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloodDiameterStats {
    /// `max_j |pi(s, j)|`.
    pub max_hops_from_source: usize,
    /// `max_{i,j} |pi(i, j)|`.
    pub hop_diameter: usize,
    /// `max_j dist_w(s, j)`.
    pub weighted_ecc: f64,
    /// `max_{i,j} dist_w(i, j)`.
    pub weighted_diameter: f64,
    /// Hopcount between the chosen pair.
    pub pair_hops: usize,
    /// Weighted distance between the chosen pair.
    pub pair_dist: f64,
    /// Vertex count.
    pub n: usize,
    /// Degree.
    pub d: usize,
    /// Seed of the instance.
    pub seed: u64,
}

/// Maxima of a complete tree; disconnected trees are an error.
pub fn tree_maxima(tree: &ShortestPathTree) -> Result<FloodStats> {
    let unreached = tree.unreached();
    if unreached > 0 {
        return Err(Error::Disconnected { unreached });
    }
    Ok(FloodStats {
        max_hops: tree.hops.iter().copied().max().unwrap_or(0),
        weighted_ecc: tree.dist.iter().copied().fold(0.0, f64::max),
    })
}

/// Flooding statistics from `source`.
pub fn flood_stats(wg: &WeightedGraph, source: usize) -> Result<FloodStats> {
    tree_maxima(&sssp(wg, source)?)
}

/// Hop diameter and weighted diameter by running [`sssp`] from every vertex.
///
/// Costs about `n * (n + m) log n`; refuses `n > cap`.
pub fn hop_diameter(wg: &WeightedGraph, cap: usize) -> Result<DiameterStats> {
    let n = wg.n();
    if n > cap {
        return Err(Error::AllPairsCap { n, cap });
    }
    let mut out = DiameterStats {
        hop_diameter: 0,
        weighted_diameter: 0.0,
    };
    for s in 0..n {
        let f = flood_stats(wg, s)?;
        out.hop_diameter = out.hop_diameter.max(f.max_hops);
        out.weighted_diameter = out.weighted_diameter.max(f.weighted_ecc);
    }
    Ok(out)
}

/// Hopcount and distance from `u` to `v`, stopping as soon as `v` settles.
pub fn pair_stats(wg: &WeightedGraph, u: usize, v: usize) -> Result<PairStats> {
    let n = wg.n();
    if v >= n {
        return Err(Error::InvalidVertex { vertex: v, n });
    }
    if u == v {
        return Err(Error::Domain("pair endpoints must differ"));
    }
    let tree = dijkstra_with(wg, u, |x, _, _| {
        if x == v {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    if !tree.reached(v) {
        return Err(Error::Disconnected { unreached: 1 });
    }
    Ok(PairStats {
        hops: tree.hops[v],
        dist: tree.dist[v],
    })
}
