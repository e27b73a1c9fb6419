//! Brute-force reference decisions.
//!
//! Everything here answers the same question the fast paths answer, but by
//! direct minimization: scan the profile `lambda -> |x + lambda y|`, refine
//! with a golden-section loop, compare against the base norm. No
//! eigenstructure, no cone tests, no witness lifting. The point is
//! cross-validation: when a characterization-based check and this module
//! disagree on a comfortably non-marginal instance, one of them is wrong.
//!
//! To keep the route genuinely independent, this module owns its own
//! minimizer instead of sharing the one in [`crate::bj`], and its own
//! spectral-norm routine instead of the Jacobi eigensolver.

use crate::matrix::Matrix;

/// Verdict and minimizer found by [`oracle_orth`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleDecision {
    pub orthogonal: bool,
    pub lambda_star: f64,
    pub min_value: f64,
}

/// Number of coarse scan points across the bracket.
const SCAN_POINTS: usize = 4001;

const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

/// Search radius that provably contains every minimizer of
/// `lambda -> |x + lambda y|`: outside `|lambda| <= 2|x|/|y|` the profile
/// already exceeds `|x|`, which the profile attains at 0.
pub fn bracket_radius(base_norm: f64, direction_norm: f64) -> f64 {
    if direction_norm == 0.0 {
        0.0
    } else {
        2.0 * base_norm / direction_norm
    }
}

/// Decides Birkhoff-James orthogonality by direct minimization.
///
/// `profile` must evaluate `lambda -> |x + lambda y|` (any convex profile
/// works), `base_norm` is `|x|`, and `radius` a bracket containing the
/// minimizer, normally from [`bracket_radius`]. The verdict is
/// `min >= base_norm - tol`.
///
/// The scan-then-refine shape matters: the coarse scan pins the global
/// basin (convexity means any local basin is the global one), the
/// golden-section pass polishes it far below `tol`.
pub fn oracle_orth<F>(profile: F, base_norm: f64, radius: f64, tol: f64) -> OracleDecision
where
    F: Fn(f64) -> f64,
{
    let at_zero = profile(0.0);
    let mut best_lambda = 0.0;
    let mut best_value = at_zero;

    if radius > 0.0 {
        let step = 2.0 * radius / (SCAN_POINTS - 1) as f64;
        let mut scan_best_idx = 0;
        let mut scan_best = f64::INFINITY;
        for i in 0..SCAN_POINTS {
            let lambda = -radius + step * i as f64;
            let v = profile(lambda);
            if v < scan_best {
                scan_best = v;
                scan_best_idx = i;
            }
        }
        if scan_best < best_value {
            best_value = scan_best;
            best_lambda = -radius + step * scan_best_idx as f64;
        }

        // A strict dip between scan points can only hide next to the
        // scan's argmin (convexity: two scan values at the level of a
        // later dip are impossible), so this bracket contains the
        // global minimizer.
        let lo = -radius + step * scan_best_idx.saturating_sub(1) as f64;
        let hi = (-radius + step * (scan_best_idx + 1) as f64).min(radius);
        let (lambda, value) = golden_refine(&profile, lo, hi, 1e-10 * radius.max(1.0));
        if value < best_value {
            best_value = value;
            best_lambda = lambda;
        }
    }

    // The profile attains base_norm at 0; anything the search produced
    // above that is refinement noise, not a real minimum.
    if at_zero <= best_value {
        best_value = at_zero;
        best_lambda = 0.0;
    }

    OracleDecision {
        orthogonal: best_value >= base_norm - tol,
        lambda_star: best_lambda,
        min_value: best_value,
    }
}

fn golden_refine<F>(f: &F, mut a: f64, mut b: f64, width: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    let r = 2.0 - GOLDEN_RATIO;
    let mut x1 = a + r * (b - a);
    let mut x2 = b - r * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..200 {
        if b - a <= width {
            break;
        }
        if f1 < f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + r * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = b - r * (b - a);
            f2 = f(x2);
        }
    }
    if f1 < f2 { (x1, f1) } else { (x2, f2) }
}

/// Spectral norm by the power method with repeated squaring, a route
/// with no shared code with the Jacobi eigensolver the fast paths use.
///
/// `G = A^T A` is squared (with Frobenius rescaling against overflow)
/// until the eigenvalue ratios are raised to the power `2^30`-ish, which
/// crushes every subdominant direction even when the spectral gap is
/// tiny; one matvec then yields a top eigenvector to working precision,
/// and a Rayleigh quotient against the original `G` reads off
/// `sigma_max^2`. Near-degenerate top eigenvalues cost nothing: any
/// surviving mixture has the right Rayleigh quotient to within the
/// degeneracy itself.
pub fn power_sigma(a: &Matrix) -> f64 {
    let g = a.gram();
    let n = g.cols();
    let scale = g.frobenius();
    if scale == 0.0 {
        return 0.0;
    }
    let mut h = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            h.set(i, j, g.get(i, j) / scale);
        }
    }
    for _ in 0..30 {
        let hh = h.matmul(&h).expect("square");
        let f = hh.frobenius();
        if f == 0.0 {
            break;
        }
        h = hh;
        for i in 0..n {
            for j in 0..n {
                h.set(i, j, h.get(i, j) / f);
            }
        }
    }
    // Strongest column of the squared chain points along the top
    // eigenspace; fall back across columns in case one is degenerate.
    let mut best_v: Option<Vec<f64>> = None;
    let mut best_len = 0.0;
    for j in 0..n {
        let col: Vec<f64> = (0..n).map(|i| h.get(i, j)).collect();
        let len = col.iter().map(|c| c * c).sum::<f64>().sqrt();
        if len > best_len {
            best_len = len;
            best_v = Some(col);
        }
    }
    let v = match best_v {
        Some(v) => v,
        None => return 0.0,
    };
    let gv = g.matvec(&v).expect("square");
    let num: f64 = v.iter().zip(&gv).map(|(a, b)| a * b).sum();
    let den: f64 = v.iter().map(|c| c * c).sum();
    (num / den).max(0.0).sqrt()
}

/// Lower bound for `sup |f(x, y)|` over unit pairs
/// `x` on the Euclidean sphere of R^m, `y` on the sphere of R^n,
/// from `samples` quasi-random pairs.
///
/// The pairs come from one joint low-discrepancy stream, so the sampled
/// set fills the product of spheres rather than a diagonal slice of it.
pub fn sphere_sup<F>(f: F, m: usize, n: usize, samples: usize) -> f64
where
    F: Fn(&[f64], &[f64]) -> f64,
{
    let joint = unit_pair_points(m, n, samples);
    let mut sup = 0.0_f64;
    for (x, y) in &joint {
        let v = f(x, y).abs();
        if v > sup {
            sup = v;
        }
    }
    sup
}

/// Quasi-random points on the Euclidean unit sphere of `R^dim`.
///
/// A Weyl sequence on the torus (irrational shifts by square roots of
/// primes) is pushed through Box-Muller and normalized. Deterministic:
/// the same `(dim, count)` always yields the same points.
pub fn unit_sphere_points(dim: usize, count: usize) -> Vec<Vec<f64>> {
    (0..count).map(|k| weyl_unit_vector(dim, k, 0)).collect()
}

fn unit_pair_points(m: usize, n: usize, count: usize) -> Vec<(Vec<f64>, Vec<f64>)> {
    // One joint stream: the y-part uses prime offsets after the x-part.
    (0..count)
        .map(|k| (weyl_unit_vector(m, k, 0), weyl_unit_vector(n, k, m)))
        .collect()
}

const PRIMES: [u32; 32] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131,
];

fn weyl_coord(k: usize, slot: usize) -> f64 {
    assert!(slot < PRIMES.len(), "sphere sampler supports at most {} coordinates", PRIMES.len() / 2);
    let alpha = (PRIMES[slot] as f64).sqrt();
    ((k + 1) as f64 * alpha).fract()
}

fn weyl_unit_vector(dim: usize, k: usize, slot_offset: usize) -> Vec<f64> {
    let mut z = Vec::with_capacity(dim + 1);
    let mut pair = 0;
    while z.len() < dim {
        let u = weyl_coord(k, slot_offset + 2 * pair).max(1e-12);
        let v = weyl_coord(k, slot_offset + 2 * pair + 1);
        let r = (-2.0 * u.ln()).sqrt();
        z.push(r * (2.0 * std::f64::consts::PI * v).cos());
        z.push(r * (2.0 * std::f64::consts::PI * v).sin());
        pair += 1;
    }
    z.truncate(dim);
    let norm = z.iter().map(|t| t * t).sum::<f64>().sqrt();
    if norm < 1e-9 {
        let mut e = vec![0.0; dim];
        e[0] = 1.0;
        return e;
    }
    for t in &mut z {
        *t /= norm;
    }
    z
}
