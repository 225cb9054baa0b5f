//! Threshold constants for hop flooding and hop diameter.
//!
//! With `gamma = (d-1)/(d-2)`,
//!
//! ```text
//! f(a) = a ln((d-2) a / (d-1)) - a + 1/(d-2)
//! ```
//!
//! is convex on `a > 0`, equals `-1` at `gamma` and increases without bound
//! to its right. The flooding constant `alpha_star` solves `f = 0` and the
//! diameter constant `alpha_hat` solves `f = 1`, both on `(gamma, inf)`.

use crate::{math, Error, Result};

/// Absolute residual the root finder aims for.
pub const ROOT_TOLERANCE: f64 = 1e-12;

const MAX_ITERATIONS: usize = 500;

fn check_d(d: u32) -> Result<f64> {
    if d < 3 {
        return Err(Error::DegreeTooSmall { d: d as usize });
    }
    Ok(f64::from(d))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("alpha must be positive and finite"))
    }
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain("eps must lie in (0, 1)"))
    }
}

/// `(d-1)/(d-2)`, the typical hops-per-`ln n` between two vertices.
pub fn gamma(d: u32) -> Result<f64> {
    let d = check_d(d)?;
    Ok((d - 1.0) / (d - 2.0))
}

/// `f(alpha)` for degree `d`.
pub fn f(alpha: f64, d: u32) -> Result<f64> {
    let df = check_d(d)?;
    check_alpha(alpha)?;
    Ok(f_unchecked(alpha, df))
}

fn f_unchecked(alpha: f64, d: f64) -> f64 {
    alpha * math::ln((d - 2.0) * alpha / (d - 1.0)) - alpha + 1.0 / (d - 2.0)
}

fn f_prime_unchecked(alpha: f64, d: f64) -> f64 {
    math::ln((d - 2.0) * alpha / (d - 1.0))
}

/// `f'(alpha) = ln((d-2) alpha / (d-1))`.
pub fn f_prime(alpha: f64, d: u32) -> Result<f64> {
    let df = check_d(d)?;
    check_alpha(alpha)?;
    Ok(f_prime_unchecked(alpha, df))
}

/// `f_eps(alpha) = f(alpha) + alpha (eps - ln(1 - eps))`.
pub fn f_eps(alpha: f64, d: u32, eps: f64) -> Result<f64> {
    let df = check_d(d)?;
    check_alpha(alpha)?;
    check_eps(eps)?;
    Ok(f_eps_unchecked(alpha, df, eps))
}

fn f_eps_unchecked(alpha: f64, d: f64, eps: f64) -> f64 {
    f_unchecked(alpha, d) + alpha * (eps - math::ln_1p(-eps))
}

fn f_eps_prime_unchecked(alpha: f64, d: f64, eps: f64) -> f64 {
    f_prime_unchecked(alpha, d) + eps - math::ln_1p(-eps)
}

// Root of an increasing function on [left, inf) with g(left) < level:
// grow the right end geometrically, then Newton steps that fall back to
// bisection whenever they leave the bracket.
fn solve_increasing<G, D>(g: G, dg: D, left: f64, level: f64) -> f64
where
    G: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let mut lo = left;
    let mut hi = 2.0 * left;
    while g(hi) < level {
        lo = hi;
        hi *= 2.0;
    }
    let mut x = hi;
    for _ in 0..MAX_ITERATIONS {
        let r = g(x) - level;
        if r.abs() <= ROOT_TOLERANCE * 0.01 {
            return x;
        }
        if r < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let slope = dg(x);
        let newton = x - r / slope;
        x = if slope > 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    // best of the final iterate and bracket ends
    [x, lo, hi]
        .into_iter()
        .min_by(|a, b| (g(*a) - level).abs().total_cmp(&(g(*b) - level).abs()))
        .unwrap_or(x)
}

/// Unique root of `f(., d) = level` on `((d-1)/(d-2), inf)`.
///
/// `level = 0` gives `alpha_star`, `level = 1` gives `alpha_hat`.
pub fn solve_threshold(d: u32, level: f64) -> Result<f64> {
    let df = check_d(d)?;
    if !(level >= 0.0 && level.is_finite()) {
        return Err(Error::Domain("level must be finite and nonnegative"));
    }
    let left = (df - 1.0) / (df - 2.0) * (1.0 + 1e-9);
    Ok(solve_increasing(
        |a| f_unchecked(a, df),
        |a| f_prime_unchecked(a, df),
        left,
        level,
    ))
}

/// Unique root of `f_eps(., d) = level` to the right of the minimum of
/// `f_eps`.
pub fn solve_threshold_eps(d: u32, level: f64, eps: f64) -> Result<f64> {
    let df = check_d(d)?;
    check_eps(eps)?;
    if !(level >= 0.0 && level.is_finite()) {
        return Err(Error::Domain("level must be finite and nonnegative"));
    }
    // f_eps' vanishes at (d-1)(1-eps) e^{-eps} / (d-2)
    let argmin = (df - 1.0) * (1.0 - eps) * math::exp(-eps) / (df - 2.0);
    let left = argmin * (1.0 + 1e-9);
    if f_eps_unchecked(left, df, eps) >= level {
        return Err(Error::Domain(
            "f_eps does not cross the level to the right of its minimum",
        ));
    }
    Ok(solve_increasing(
        |a| f_eps_unchecked(a, df, eps),
        |a| f_eps_prime_unchecked(a, df, eps),
        left,
        level,
    ))
}

/// All the limiting constants for degree `d`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdConstants {
    /// Degree.
    pub d: u32,
    /// `(d-1)/(d-2)`: pair hopcount / `ln n`.
    pub gamma: f64,
    /// Root of `f = 0`: hop flooding / `ln n`.
    pub alpha_star: f64,
    /// Root of `f = 1`: hop diameter / `ln n`.
    pub alpha_hat: f64,
    /// `1/(d-2) + 1/d`: weighted eccentricity / `ln n`.
    pub flood_weight_const: f64,
    /// `1/(d-2) + 2/d`: weighted diameter / `ln n`.
    pub diam_weight_const: f64,
}

/// Computes every field of [`ThresholdConstants`].
pub fn theory_constants(d: u32) -> Result<ThresholdConstants> {
    let df = check_d(d)?;
    Ok(ThresholdConstants {
        d,
        gamma: gamma(d)?,
        alpha_star: solve_threshold(d, 0.0)?,
        alpha_hat: solve_threshold(d, 1.0)?,
        flood_weight_const: 1.0 / (df - 2.0) + 1.0 / df,
        diam_weight_const: 1.0 / (df - 2.0) + 2.0 / df,
    })
}

/// Leading-order weighted distance between two vertices, `1/(d-2)` per `ln n`.
pub fn pair_weight_const(d: u32) -> Result<f64> {
    let df = check_d(d)?;
    Ok(1.0 / (df - 2.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::E;

    // Plain bisection, independent of the Newton path.
    fn bisect_root(d: u32, level: f64) -> f64 {
        let g = gamma(d).unwrap();
        let (mut lo, mut hi) = (g, 100.0 * g);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid, d).unwrap() < level {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn f_at_gamma_is_minus_one() {
        for d in [3, 4, 7, 50] {
            let g = gamma(d).unwrap();
            assert!((f(g, d).unwrap() + 1.0).abs() < 1e-12);
            assert!(f_prime(g, d).unwrap().abs() < 1e-15);
        }
        assert_eq!(f(2.0, 3).unwrap(), -1.0);
    }

    #[test]
    fn closed_form_at_two_e() {
        assert!((f(2.0 * E, 3).unwrap() - 1.0).abs() < 1e-14);
        assert!((f_prime(2.0 * E, 3).unwrap() - 1.0).abs() < 1e-15);
        assert!((solve_threshold(3, 1.0).unwrap() - 2.0 * E).abs() < 1e-10);
    }

    #[test]
    fn alpha_star_d3_against_bisection() {
        let oracle = bisect_root(3, 0.0);
        assert!((oracle - 4.31107040700100).abs() < 1e-6);
        assert!((solve_threshold(3, 0.0).unwrap() - oracle).abs() < 1e-9);
    }

    #[test]
    fn solver_matches_bisection_on_grid() {
        for d in [3, 4, 5, 10, 100] {
            for level in [0.0, 1.0] {
                let fast = solve_threshold(d, level).unwrap();
                assert!(
                    (fast - bisect_root(d, level)).abs() < 1e-9,
                    "d={d} level={level}"
                );
            }
        }
    }

    #[test]
    fn residuals_and_ordering_for_all_small_degrees() {
        for d in 3..=1000 {
            let c = theory_constants(d).unwrap();
            assert!(f(c.alpha_star, d).unwrap().abs() <= ROOT_TOLERANCE, "d={d}");
            assert!(
                (f(c.alpha_hat, d).unwrap() - 1.0).abs() <= ROOT_TOLERANCE,
                "d={d}"
            );
            assert!(c.gamma < c.alpha_star && c.alpha_star < c.alpha_hat);
            assert!(c.flood_weight_const < c.diam_weight_const);
        }
    }

    #[test]
    fn decreasing_in_degree_with_large_d_limits() {
        let mut prev = theory_constants(3).unwrap();
        for d in (4..200).chain([500, 1000, 10_000]) {
            let c = theory_constants(d).unwrap();
            assert!(c.alpha_star < prev.alpha_star && c.alpha_hat < prev.alpha_hat);
            assert!(c.alpha_star > E && c.alpha_hat > 3.5911);
            prev = c;
        }
        let c = theory_constants(10_000).unwrap();
        assert!((c.alpha_star - E).abs() <= 1e-2);
        assert!((c.alpha_hat - 3.5911).abs() <= 1e-2);
    }

    #[test]
    fn closed_form_constants() {
        let c = theory_constants(3).unwrap();
        assert_eq!(c.gamma, 2.0);
        assert!((c.flood_weight_const - 4.0 / 3.0).abs() < 1e-15);
        assert!((c.diam_weight_const - 5.0 / 3.0).abs() < 1e-15);
        let c = theory_constants(4).unwrap();
        assert_eq!(
            (c.gamma, c.flood_weight_const, c.diam_weight_const),
            (1.5, 0.75, 1.0)
        );
        assert!(theory_constants(2).is_err());
    }

    #[test]
    fn derivative_matches_central_differences() {
        let h = 1e-5;
        for d in [3, 4, 10] {
            for i in 1..=60 {
                let a = 0.25 * i as f64;
                let fd = (f(a + h, d).unwrap() - f(a - h, d).unwrap()) / (2.0 * h);
                assert!((f_prime(a, d).unwrap() - fd).abs() <= 1e-6, "d={d} a={a}");
            }
        }
    }

    #[test]
    fn f_is_convex() {
        let h = 1e-3;
        for d in [3, 5, 20] {
            for i in 1..200 {
                let a = 0.05 * i as f64 + h;
                let second = f(a + h, d).unwrap() + f(a - h, d).unwrap() - 2.0 * f(a, d).unwrap();
                assert!(second >= 0.0);
            }
        }
    }

    #[test]
    fn f_eps_forms_agree_and_dominate() {
        for d in [3u32, 4, 8] {
            let df = f64::from(d);
            for &eps in &[1e-3, 0.1, 0.5, 0.9] {
                for i in 1..40 {
                    let a = 0.2 * i as f64;
                    let v = f_eps(a, d, eps).unwrap();
                    let expanded = a * ((df - 2.0) * a / ((df - 1.0) * (1.0 - eps))).ln()
                        - a * (1.0 - eps)
                        + 1.0 / (df - 2.0);
                    assert!((v - expanded).abs() <= 1e-12, "d={d} eps={eps} a={a}");
                    assert!(v >= f(a, d).unwrap());
                }
            }
            for i in 1..40 {
                let a = 0.2 * i as f64;
                assert!(f_eps(a, d, 1e-12).unwrap() - f(a, d).unwrap() <= 1e-9);
            }
        }
        assert!(f_eps(1.0, 3, 0.0).is_err());
        assert!(f_eps(1.0, 3, 1.0).is_err());
    }

    #[test]
    fn eps_roots_shrink() {
        let s = solve_threshold_eps(3, 0.0, 0.1).unwrap();
        let h = solve_threshold_eps(3, 1.0, 0.1).unwrap();
        assert!(f_eps(s, 3, 0.1).unwrap().abs() <= ROOT_TOLERANCE);
        assert!((f_eps(h, 3, 0.1).unwrap() - 1.0).abs() <= ROOT_TOLERANCE);
        assert!(s < solve_threshold(3, 0.0).unwrap());
        assert!(h < solve_threshold(3, 1.0).unwrap());
        assert!(s < h);
    }

    #[test]
    fn domain_errors() {
        assert!(f(0.0, 3).is_err());
        assert!(f(-1.0, 3).is_err());
        assert!(f_prime(0.0, 3).is_err());
        assert!(f(1.0, 2).is_err());
        assert!(solve_threshold(3, -0.5).is_err());
    }
}
