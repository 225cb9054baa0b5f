//! Galton-Watson helpers: generating functions, survival recursion and the
//! Poisson tail that gives the law of a sum of `Exp(1)` path weights.

use alloc::vec::Vec;

use rand::Rng;

use crate::{math, Error, Result};

/// Offspring law with finite support `0..=K`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProgenyDistribution {
    pmf: Vec<f64>,
}

impl ProgenyDistribution {
    /// Accepts a nonnegative pmf summing to one within `1e-12`.
    pub fn new(pmf: Vec<f64>) -> Result<Self> {
        if pmf.is_empty() {
            return Err(Error::Domain("pmf must not be empty"));
        }
        if pmf.iter().any(|p| !(p.is_finite() && *p >= 0.0)) {
            return Err(Error::Domain("pmf entries must be finite and nonnegative"));
        }
        let total: f64 = pmf.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Domain("pmf must sum to one"));
        }
        Ok(ProgenyDistribution { pmf })
    }

    /// A point mass at `k`.
    pub fn constant(k: usize) -> Self {
        let mut pmf = alloc::vec![0.0; k + 1];
        pmf[k] = 1.0;
        ProgenyDistribution { pmf }
    }

    /// Probabilities of `0, 1, ..., K` offspring.
    pub fn pmf(&self) -> &[f64] {
        &self.pmf
    }

    /// `E Z`.
    pub fn mean(&self) -> f64 {
        self.pmf.iter().enumerate().map(|(k, p)| k as f64 * p).sum()
    }

    /// `Phi_Z(s) = E s^Z` for `s` in `[0, 1]`.
    pub fn pgf(&self, s: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::Domain("pgf argument must lie in [0, 1]"));
        }
        Ok(self.pgf_unchecked(s))
    }

    fn pgf_unchecked(&self, s: f64) -> f64 {
        self.pmf.iter().rev().fold(0.0, |acc, &p| acc * s + p)
    }

    /// One offspring count by inversion.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let u: f64 = rng.random();
        let mut acc = 0.0;
        for (k, &p) in self.pmf.iter().enumerate() {
            acc += p;
            if u < acc {
                return k;
            }
        }
        // rounding left a sliver above the last cumulative sum
        self.pmf.iter().rposition(|&p| p > 0.0).unwrap_or(0)
    }
}

/// Probability of surviving at least `k` generations,
/// `P_{j+1} = 1 - Phi(1 - P_j)` from `P_0 = 1`.
pub fn survival_probability(dist: &ProgenyDistribution, k: usize) -> f64 {
    (0..k).fold(1.0, |p, _| {
        let q = 1.0 - dist.pgf_unchecked(1.0 - p);
        q.clamp(0.0, 1.0)
    })
}

/// Natural log of `P(Po(t) >= ell)`.
///
/// Below the mean the lower sum is complemented; above it the upper tail is
/// summed directly from its leading term, which stays accurate far into the
/// tail where the probability underflows.
pub fn ln_poisson_tail(ell: u64, t: f64) -> f64 {
    if ell == 0 {
        return 0.0;
    }
    if t <= 0.0 {
        return f64::NEG_INFINITY;
    }
    let l = ell as f64;
    if t >= l {
        // 1 - sum_{j<ell} e^{-t} t^j / j!, terms built from the top down
        let ln_top = -t + (l - 1.0) * math::ln(t) - math::ln_gamma(l);
        let mut term = 1.0;
        let mut acc = 1.0;
        for j in (1..ell).rev() {
            term *= j as f64 / t;
            acc += term;
            if term < acc * 1e-17 {
                break;
            }
        }
        let lower = math::exp(ln_top) * acc;
        if lower < 0.5 {
            math::ln_1p(-lower)
        } else {
            // upper tail is the smaller piece; sum it instead
            ln_upper_series(ell, t)
        }
    } else {
        ln_upper_series(ell, t)
    }
}

// ln sum_{j >= ell} e^{-t} t^j / j!
fn ln_upper_series(ell: u64, t: f64) -> f64 {
    let l = ell as f64;
    let ln_first = -t + l * math::ln(t) - math::ln_gamma(l + 1.0);
    let mut term = 1.0;
    let mut acc = 1.0;
    let mut j = l;
    loop {
        j += 1.0;
        term *= t / j;
        acc += term;
        if term < acc * 1e-17 {
            break;
        }
    }
    ln_first + math::ln(acc)
}

/// `P(Po(t) >= ell)`, which equals `P(w(path) <= t)` for a path of `ell`
/// independent `Exp(1)` edges.
pub fn poisson_tail(ell: u64, t: f64) -> f64 {
    math::exp(ln_poisson_tail(ell, t)).min(1.0)
}

/// Natural log of [`good_vertex_mean`].
pub fn ln_good_vertex_mean(d: u32, ell: u64, alpha: f64, eps: f64) -> Result<f64> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d: d as usize });
    }
    let df = f64::from(d);
    if ell == 0 {
        return Err(Error::Domain("ell must be at least 1"));
    }
    if !(alpha > (df - 1.0) / (df - 2.0) && alpha.is_finite()) {
        return Err(Error::Domain("alpha must exceed (d-1)/(d-2)"));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::Domain("eps must lie in (0, 1)"));
    }
    let l = ell as f64;
    let tau = l * (1.0 - eps) / ((df - 2.0) * alpha);
    Ok(l * math::ln(df - 1.0) + ln_poisson_tail(ell, tau))
}

/// Mean number of good descendants `ell` levels down:
/// `(d-1)^ell P(Po(tau) >= ell)` with `tau = ell (1-eps) / ((d-2) alpha)`.
pub fn good_vertex_mean(d: u32, ell: u64, alpha: f64, eps: f64) -> Result<f64> {
    ln_good_vertex_mean(d, ell, alpha, eps).map(math::exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::solve_threshold_eps;
    use crate::seed::rng_from_seed;

    // Direct sum of the Poisson pmf, only for moderate arguments.
    fn naive_tail(ell: u64, t: f64) -> f64 {
        let mut p = (-t).exp();
        let mut below = 0.0;
        for j in 0..ell {
            below += p;
            p *= t / (j + 1) as f64;
        }
        1.0 - below
    }

    fn ln_factorial(k: u64) -> f64 {
        (1..=k).map(|j| (j as f64).ln()).sum()
    }

    #[test]
    fn pgf_basics() {
        let z = ProgenyDistribution::new(vec![0.4, 0.4, 0.2]).unwrap();
        assert!((z.pgf(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(ProgenyDistribution::constant(2).pgf(0.5).unwrap(), 0.25);
        let h = 1e-6;
        let fd = (z.pgf_unchecked(1.0 + h) - z.pgf_unchecked(1.0 - h)) / (2.0 * h);
        assert!((fd - z.mean()).abs() < 1e-6);
        assert!(z.pgf(1.5).is_err());
        assert!(z.pgf(-0.1).is_err());
    }

    #[test]
    fn pmf_validation() {
        assert!(ProgenyDistribution::new(vec![]).is_err());
        assert!(ProgenyDistribution::new(vec![0.5, 0.6]).is_err());
        assert!(ProgenyDistribution::new(vec![1.5, -0.5]).is_err());
    }

    #[test]
    fn degenerate_survival() {
        let zero = ProgenyDistribution::constant(0);
        let one = ProgenyDistribution::constant(1);
        assert_eq!(survival_probability(&zero, 0), 1.0);
        for k in 1..20 {
            assert_eq!(survival_probability(&zero, k), 0.0);
            assert_eq!(survival_probability(&one, k), 1.0);
        }
    }

    #[test]
    fn subcritical_decay_rate() {
        let z = ProgenyDistribution::new(vec![0.4, 0.4, 0.2]).unwrap();
        assert!((z.mean() - 0.8).abs() < 1e-15);
        let r20 = survival_probability(&z, 20) / 0.8f64.powi(20);
        let r30 = survival_probability(&z, 30) / 0.8f64.powi(30);
        assert!(r20 > 0.0 && (r20 - r30).abs() <= 0.2 * r30, "{r20} {r30}");
    }

    #[test]
    fn survival_is_monotone_and_matches_simulation() {
        let z = ProgenyDistribution::new(vec![0.2, 0.3, 0.5]).unwrap();
        let mut prev = 1.0;
        for k in 0..50 {
            let p = survival_probability(&z, k);
            assert!((0.0..=1.0).contains(&p) && p <= prev);
            prev = p;
        }
        // simulate 5 generations
        let mut rng = rng_from_seed(3);
        let runs = 50_000;
        let alive = (0..runs)
            .filter(|_| {
                let mut pop = 1usize;
                for _ in 0..5 {
                    pop = (0..pop).map(|_| z.sample(&mut rng)).sum();
                    if pop == 0 {
                        return false;
                    }
                    pop = pop.min(10_000);
                }
                true
            })
            .count();
        let emp = alive as f64 / runs as f64;
        let exact = survival_probability(&z, 5);
        assert!((emp - exact).abs() < 0.01, "{emp} vs {exact}");
    }

    #[test]
    fn poisson_tail_small_cases() {
        for t in [0.0, 0.5, 3.0, 100.0] {
            assert_eq!(poisson_tail(0, t), 1.0);
        }
        let p = poisson_tail(1, 1.0);
        assert!((p - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert!(p > (-1.0f64).exp());
        assert_eq!(poisson_tail(3, 0.0), 0.0);
    }

    #[test]
    fn poisson_tail_matches_naive_sum() {
        for ell in [1u64, 2, 5, 10, 20, 40] {
            for t in [0.1, 1.0, 5.0, 10.0, 19.5, 20.0, 25.0, 45.0] {
                let a = poisson_tail(ell, t);
                let b = naive_tail(ell, t);
                assert!((a - b).abs() <= 1e-12, "ell={ell} t={t}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn poisson_tail_monotone_and_above_leading_term() {
        for ell in 0..60u64 {
            let mut prev = 0.0;
            for i in 0..100 {
                let t = 0.5 * i as f64;
                let p = poisson_tail(ell, t);
                assert!(p >= prev - 1e-15);
                assert!(p <= poisson_tail(ell.saturating_sub(1), t) + 1e-15);
                if t > 0.0 {
                    let ln_bound = -t + ell as f64 * t.ln() - ln_factorial(ell);
                    assert!(ln_poisson_tail(ell, t) >= ln_bound - 1e-12);
                }
                prev = p;
            }
        }
    }

    #[test]
    fn poisson_tail_matches_exponential_sums() {
        let mut rng = rng_from_seed(12);
        let runs = 1_000_000;
        let hits = (0..runs)
            .filter(|_| (0..20).map(|_| crate::weights::exp1(&mut rng)).sum::<f64>() <= 5.0)
            .count();
        let emp = hits as f64 / runs as f64;
        assert!((emp - poisson_tail(20, 5.0)).abs() <= 0.01);
        // a less degenerate point
        let hits = (0..200_000)
            .filter(|_| (0..20).map(|_| crate::weights::exp1(&mut rng)).sum::<f64>() <= 20.0)
            .count();
        let emp = hits as f64 / 200_000.0;
        assert!((emp - poisson_tail(20, 20.0)).abs() <= 0.01);
    }

    #[test]
    fn good_vertex_mean_crosses_one() {
        let eps = 0.1;
        let a_star = solve_threshold_eps(3, 0.0, eps).unwrap();
        let a_hat = solve_threshold_eps(3, 1.0, eps).unwrap();
        let above = good_vertex_mean(3, 200, a_star, eps).unwrap();
        let bound = (eps * 200.0 / a_star).exp();
        assert!(above >= bound && bound > 1.0, "{above} vs {bound}");
        assert!(good_vertex_mean(3, 200, a_hat, eps).unwrap() < 1.0);

        // ell = 500: the crossing point lies in (a_star, a_hat)
        let ln_m = |a: f64| ln_good_vertex_mean(3, 500, a, eps).unwrap();
        assert!(ln_m(a_star) > 0.0 && ln_m(a_hat) < 0.0);
        let grid: Vec<f64> = (0..=100)
            .map(|i| a_star + (a_hat - a_star) * i as f64 / 100.0)
            .collect();
        let crossings = grid
            .windows(2)
            .filter(|w| ln_m(w[0]) > 0.0 && ln_m(w[1]) <= 0.0)
            .count();
        assert_eq!(crossings, 1);
    }

    #[test]
    fn good_vertex_mean_single_level() {
        let (d, alpha, eps) = (3u32, 4.0, 0.2);
        let tau = (1.0 - eps) / ((d as f64 - 2.0) * alpha);
        let expect = (d as f64 - 1.0) * (1.0 - (-tau).exp());
        assert!((good_vertex_mean(d, 1, alpha, eps).unwrap() - expect).abs() < 1e-14);
        assert!(good_vertex_mean(3, 0, alpha, eps).is_err());
        assert!(good_vertex_mean(3, 5, 1.5, eps).is_err());
        assert!(good_vertex_mean(3, 5, alpha, 1.0).is_err());
    }
}
