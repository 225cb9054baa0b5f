//! The continuous-time half-edge exploration process.
//!
//! The weighted ball around a source is grown while the configuration-model
//! matching is revealed on demand. The open list holds the unmatched
//! half-edges of the ball. After an `Exp(|L|)` wait a uniform open half-edge
//! is matched to a uniform half-edge outside the list, which brings in a
//! fresh vertex; that vertex's other `d - 1` half-edges are then revealed one
//! at a time, each closing back into the list with probability
//! `|L| / (unmatched - 1)`.
//!
//! A fresh vertex is uniform among the unexplored ones, so vertices get
//! abstract ids in order of arrival: the source is `0`, the `k`-th added
//! vertex is `k`.

use alloc::vec::Vec;

use rand::Rng;

use crate::weights::exp1;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
struct OpenHalfEdge {
    owner: usize,
    generation: usize,
}

/// An edge revealed between a newly added vertex and the existing ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BackEdge {
    /// Vertex owning the open half-edge that got closed.
    pub from: usize,
    /// The vertex being revealed (equal to `from` for a self-loop).
    pub to: usize,
    /// Its `Exp(1)` weight.
    pub weight: f64,
}

/// Per-step record of one exploration run. Index `k` refers to the state
/// right after the `k`-th vertex joined the ball (`k = 0` is the source).
#[derive(Debug, Clone, PartialEq)]
pub struct ExplorationTrace {
    /// Degree.
    pub d: usize,
    /// Number of vertices in the underlying graph.
    pub n: usize,
    /// Id of the source (always 0).
    pub source: usize,
    /// Hitting times `T_k`.
    pub times: Vec<f64>,
    /// Open half-edge counts `S_k`.
    pub boundary: Vec<usize>,
    /// Tree excess `X_k` of the ball.
    pub excess: Vec<usize>,
    /// Generation `H_k` of the `k`-th added vertex.
    pub hops: Vec<usize>,
    /// Id of the `k`-th added vertex.
    pub added: Vec<usize>,
    /// Non-tree edges closed inside the ball, in order of discovery.
    pub back_edges: Vec<BackEdge>,
}

impl ExplorationTrace {
    /// Number of exploration steps performed.
    pub fn steps(&self) -> usize {
        self.times.len() - 1
    }

    /// True if the process ran out of open half-edges.
    pub fn exhausted(&self) -> bool {
        self.boundary.last() == Some(&0)
    }

    /// Checks `S_k = d + (d-2) k - 2 X_k` at every recorded step.
    pub fn boundary_identity_holds(&self) -> bool {
        self.boundary
            .iter()
            .zip(&self.excess)
            .enumerate()
            .all(|(k, (&s, &x))| s + 2 * x == self.d + (self.d - 2) * k)
    }
}

/// Runs the exploration from a single source for up to `k_max` steps.
///
/// Stops early if the open list empties.
pub fn explore<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    rng: &mut R,
    k_max: usize,
) -> Result<ExplorationTrace> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d });
    }
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    if (n * d) % 2 == 1 {
        return Err(Error::OddHalfEdges { n, d });
    }
    if k_max > n - 1 {
        return Err(Error::Domain("k_max must not exceed n - 1"));
    }

    let total = n * d;
    let mut open: Vec<OpenHalfEdge> = Vec::with_capacity(d + (d - 2) * k_max);
    let mut matched = 0usize;
    let mut excess = 0usize;
    let mut trace = ExplorationTrace {
        d,
        n,
        source: 0,
        times: Vec::with_capacity(k_max + 1),
        boundary: Vec::with_capacity(k_max + 1),
        excess: Vec::with_capacity(k_max + 1),
        hops: Vec::with_capacity(k_max + 1),
        added: Vec::with_capacity(k_max + 1),
        back_edges: Vec::new(),
    };

    // The source is the k = 0 case of the general reveal step.
    reveal(
        &mut open,
        &mut matched,
        &mut excess,
        &mut trace.back_edges,
        total,
        0,
        0,
        d,
        rng,
    );
    trace.times.push(0.0);
    trace.boundary.push(open.len());
    trace.excess.push(excess);
    trace.hops.push(0);
    trace.added.push(0);

    let mut now = 0.0;
    for k in 1..=k_max {
        if open.is_empty() {
            break;
        }
        now += exp1(rng) / open.len() as f64;
        let picked = open.swap_remove(rng.random_range(0..open.len()));
        matched += 1;
        let generation = picked.generation + 1;
        reveal(
            &mut open,
            &mut matched,
            &mut excess,
            &mut trace.back_edges,
            total,
            k,
            generation,
            d - 1,
            rng,
        );
        trace.times.push(now);
        trace.boundary.push(open.len());
        trace.excess.push(excess);
        trace.hops.push(generation);
        trace.added.push(k);
    }
    Ok(trace)
}

// Reveals `count` half-edges of vertex `owner` in index order. Each closes
// into the open list with probability |L| / (unmatched - 1), else joins it.
#[allow(clippy::too_many_arguments)]
fn reveal<R: Rng + ?Sized>(
    open: &mut Vec<OpenHalfEdge>,
    matched: &mut usize,
    excess: &mut usize,
    back_edges: &mut Vec<BackEdge>,
    total: usize,
    owner: usize,
    generation: usize,
    count: usize,
    rng: &mut R,
) {
    for _ in 0..count {
        let candidates = total - 2 * *matched - 1;
        if !open.is_empty() && candidates > 0 && rng.random_range(0..candidates) < open.len() {
            let partner = open.swap_remove(rng.random_range(0..open.len()));
            *matched += 1;
            *excess += 1;
            back_edges.push(BackEdge {
                from: partner.owner,
                to: owner,
                weight: exp1(rng),
            });
        } else {
            open.push(OpenHalfEdge { owner, generation });
        }
    }
}

/// Running totals `s_k = d_1 + ... + d_k - (k - 1)` of an increasing tree:
/// the number of alive vertices after `k` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncreasingTreeSchedule {
    degrees: Vec<usize>,
    alive: Vec<usize>,
}

impl IncreasingTreeSchedule {
    /// Builds the schedule; every degree must be at least 1.
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.contains(&0) {
            return Err(Error::Domain("increasing-tree degrees must be positive"));
        }
        let mut alive = Vec::with_capacity(degrees.len());
        let mut s = 1usize;
        for &x in &degrees {
            s = s - 1 + x;
            alive.push(s);
        }
        Ok(IncreasingTreeSchedule { degrees, alive })
    }

    /// The degrees `d_1, d_2, ...`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// The running totals `s_1, s_2, ...`.
    pub fn alive(&self) -> &[usize] {
        &self.alive
    }

    /// Success probabilities `d_i / s_i` of the generation decomposition.
    pub fn probabilities(&self) -> impl Iterator<Item = f64> + '_ {
        self.degrees
            .iter()
            .zip(&self.alive)
            .map(|(&d, &s)| d as f64 / s as f64)
    }
}

/// Sum of independent Bernoulli draws.
pub fn bernoulli_sum<R, I>(probabilities: I, rng: &mut R) -> usize
where
    R: Rng + ?Sized,
    I: IntoIterator<Item = f64>,
{
    probabilities
        .into_iter()
        .filter(|&p| rng.random::<f64>() < p)
        .count()
}

/// Generation of the `k`-th chosen alive vertex of an increasing tree with
/// the given degrees (`k = degrees.len()`), sampled as `sum I_i` with
/// `P(I_i = 1) = d_i / s_i`.
pub fn increasing_tree_generation<R: Rng + ?Sized>(
    degrees: &[usize],
    rng: &mut R,
) -> Result<usize> {
    let schedule = IncreasingTreeSchedule::new(degrees.to_vec())?;
    Ok(bernoulli_sum(schedule.probabilities(), rng))
}

/// Success probabilities for the hopcount of the `k`-th added vertex given a
/// boundary trace (`boundary[i] = S_i`, `boundary[0] = S_0`).
///
/// The exploration is an increasing tree whose first step is the source
/// (`d_1 = d`, forced) and whose later steps each add `d - 1` open
/// half-edges to a list of size `S_{i-1}`. So the first entry is 1 and entry
/// `i + 1` is `(d - 1) / S_i` for `i = 1 .. k - 1`.
pub fn coupled_hop_probabilities(d: usize, k: usize, boundary: &[usize]) -> Result<Vec<f64>> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d });
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    if boundary.len() < k {
        return Err(Error::Domain("boundary trace shorter than k"));
    }
    let mut probs = Vec::with_capacity(k);
    probs.push(1.0);
    for (i, &s) in boundary.iter().enumerate().take(k).skip(1) {
        if s < d - 1 {
            return Err(Error::InvalidTrace {
                index: i,
                value: s,
                min: d - 1,
            });
        }
        probs.push((d - 1) as f64 / s as f64);
    }
    Ok(probs)
}

/// Samples `H_k` from the Bernoulli-sum representation driven by a boundary
/// trace; see [`coupled_hop_probabilities`].
pub fn coupled_hopcount_sample<R: Rng + ?Sized>(
    d: usize,
    k: usize,
    boundary: &[usize],
    rng: &mut R,
) -> Result<usize> {
    Ok(bernoulli_sum(
        coupled_hop_probabilities(d, k, boundary)?,
        rng,
    ))
}

/// Boundary sizes of an exploration that never closes a cycle:
/// `S_i = d + (d - 2) i` for `i = 0 .. len`.
pub fn tree_boundary(d: usize, len: usize) -> Vec<usize> {
    (0..len).map(|i| d + (d - 2) * i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::rng_from_seed;

    #[test]
    fn identity_and_basic_invariants() {
        let mut rng = rng_from_seed(1);
        for d in [3, 4, 5] {
            for _ in 0..50 {
                let t = explore(1000, d, &mut rng, 300).unwrap();
                assert!(t.boundary_identity_holds());
                assert!(t.excess.windows(2).all(|p| p[0] <= p[1]));
                assert!(t.times.windows(2).all(|p| p[0] < p[1]));
                for k in 1..t.hops.len() {
                    assert!(t.hops[k] >= 1 && t.hops[k] <= k);
                }
                assert_eq!(t.back_edges.len(), *t.excess.last().unwrap());
                for k in 0..t.boundary.len() {
                    if t.excess[k] == 0 {
                        assert_eq!(t.boundary[k], d + (d - 2) * k);
                    }
                }
            }
        }
    }

    #[test]
    fn small_graph_explores_everything_or_exhausts() {
        let mut rng = rng_from_seed(2);
        for _ in 0..200 {
            let t = explore(10, 3, &mut rng, 9).unwrap();
            assert!(t.boundary_identity_holds());
            // every vertex joins unless the source's component closes early
            if t.steps() < 9 {
                assert!(t.exhausted());
            }
        }
    }

    #[test]
    fn parameter_validation() {
        let mut rng = rng_from_seed(0);
        assert!(explore(10, 2, &mut rng, 3).is_err());
        assert!(explore(9, 3, &mut rng, 3).is_err());
        assert!(explore(10, 3, &mut rng, 10).is_err());
        assert!(explore(10, 3, &mut rng, 9).is_ok());
    }

    #[test]
    fn first_vertex_is_generation_one() {
        let mut rng = rng_from_seed(3);
        for _ in 0..100 {
            let t = explore(100, 3, &mut rng, 1).unwrap();
            assert_eq!(t.hops[1], 1);
        }
    }

    #[test]
    fn waiting_times_have_rate_equal_to_boundary() {
        let mut rng = rng_from_seed(4);
        let mut sums = [0.0f64; 8];
        let mut counts = [0usize; 8];
        let mut pooled = 0;
        while pooled < 100_000 {
            let t = explore(10_000, 3, &mut rng, 5).unwrap();
            for k in 0..t.steps() {
                let s = t.boundary[k];
                if s < sums.len() {
                    sums[s] += t.times[k + 1] - t.times[k];
                    counts[s] += 1;
                }
                pooled += 1;
            }
        }
        for s in [3usize, 5, 7] {
            let mean = sums[s] / counts[s] as f64;
            let expect = 1.0 / s as f64;
            assert!(
                (mean - expect).abs() <= 0.05 * expect,
                "s={s}: {mean} vs {expect}"
            );
        }
    }

    #[test]
    fn first_pick_is_uniform_over_the_open_list() {
        // with no loops at the source, the first step picks one of d open
        // half-edges; the second step then sees the source's d-1 remaining
        // half-edges (generation 1) and the new vertex's d-1 (generation 2).
        // P(H_2 = 2) = (d-1)/S_1 = 1/2 at d = 3.
        let mut rng = rng_from_seed(5);
        let mut gen2 = 0u64;
        let mut total = 0u64;
        for _ in 0..100_000 {
            let t = explore(100_000, 3, &mut rng, 2).unwrap();
            if t.excess[1] == 0 {
                total += 1;
                if t.hops[2] == 2 {
                    gen2 += 1;
                }
            }
        }
        let e = total as f64 / 2.0;
        let chi2 = (gen2 as f64 - e).powi(2) / e + ((total - gen2) as f64 - e).powi(2) / e;
        // 1 dof, 0.999 quantile 10.83
        assert!(chi2 < 10.83, "chi2 = {chi2}");
    }

    #[test]
    fn increasing_tree_forced_cases() {
        let mut rng = rng_from_seed(6);
        for _ in 0..1000 {
            assert_eq!(increasing_tree_generation(&[4], &mut rng).unwrap(), 1);
            assert_eq!(increasing_tree_generation(&[1; 7], &mut rng).unwrap(), 7);
        }
        assert!(increasing_tree_generation(&[2, 0], &mut rng).is_err());
        let sched = IncreasingTreeSchedule::new(vec![3, 2, 2, 5]).unwrap();
        assert_eq!(sched.alive(), &[3, 4, 5, 9]);
        let mut prev = 1;
        for (&s, &d) in sched.alive().iter().zip(sched.degrees()) {
            assert_eq!(s + 1, prev + d);
            prev = s;
        }
    }

    #[test]
    fn increasing_tree_binary_mean() {
        let mut rng = rng_from_seed(7);
        let draws = 100_000;
        let total: usize = (0..draws)
            .map(|_| increasing_tree_generation(&[2; 10], &mut rng).unwrap())
            .sum();
        let mean = total as f64 / draws as f64;
        let oracle: f64 = (1..=10).map(|i| 2.0 / (i as f64 + 1.0)).sum();
        assert!((mean - oracle).abs() <= 0.03 * oracle, "{mean} vs {oracle}");
    }

    #[test]
    fn coupled_sampler_basic_cases() {
        let mut rng = rng_from_seed(8);
        let s = tree_boundary(3, 200);
        assert_eq!(coupled_hopcount_sample(3, 0, &s, &mut rng).unwrap(), 0);
        for _ in 0..100 {
            assert_eq!(coupled_hopcount_sample(3, 1, &s, &mut rng).unwrap(), 1);
        }
        // k = 2: 1 + Bernoulli((d-1)/S_1) = 1 + Bernoulli(1/2)
        let draws = 100_000;
        let total: usize = (0..draws)
            .map(|_| coupled_hopcount_sample(3, 2, &s, &mut rng).unwrap())
            .sum();
        let mean = total as f64 / draws as f64;
        assert!((mean - 1.5).abs() <= 0.01, "{mean}");
    }

    #[test]
    fn coupled_sampler_mean_on_tree_trace() {
        let mut rng = rng_from_seed(9);
        let d = 3;
        let k = 100;
        let s = tree_boundary(d, k);
        let oracle = 1.0
            + (1..k)
                .map(|i| (d - 1) as f64 / (d + (d - 2) * i) as f64)
                .sum::<f64>();
        let draws = 100_000;
        let total: usize = (0..draws)
            .map(|_| coupled_hopcount_sample(d, k, &s, &mut rng).unwrap())
            .sum();
        let mean = total as f64 / draws as f64;
        assert!((mean - oracle).abs() <= 0.02 * oracle, "{mean} vs {oracle}");
    }

    #[test]
    fn coupled_sampler_rejects_bad_traces() {
        let mut rng = rng_from_seed(10);
        assert_eq!(
            coupled_hopcount_sample(3, 3, &[3, 4, 1], &mut rng).unwrap_err(),
            Error::InvalidTrace {
                index: 2,
                value: 1,
                min: 2
            }
        );
        assert!(coupled_hopcount_sample(3, 5, &[3, 4], &mut rng).is_err());
    }

    #[test]
    fn tree_excess_is_rare_in_small_balls() {
        // radius m = floor(log_2(1e5) / 5) = 3 holds at most 1 + 3 + 6 + 12
        // vertices; run the exploration that far
        let n = 100_000;
        let m = ((n as f64).ln() / 2f64.ln() / 5.0).floor() as u32;
        let ball = 1 + (1..=m).map(|r| 3 * 2usize.pow(r - 1)).sum::<usize>();
        let mut rng = rng_from_seed(11);
        let runs = 10_000;
        let bad = (0..runs)
            .filter(|_| {
                let t = explore(n, 3, &mut rng, ball - 1).unwrap();
                *t.excess.last().unwrap() >= 2
            })
            .count();
        assert!(
            (bad as f64) / (runs as f64) <= 0.01,
            "{bad} runs with excess >= 2"
        );
    }
}
