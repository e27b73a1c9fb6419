//! Where norms are attained.
//!
//! For a matrix acting on Euclidean space the operator norm is the top
//! singular value, attained exactly on the corresponding right-singular
//! subspace. For a sampled function the best we can do is the set of
//! grid points whose value comes within a relative margin of the sup,
//! split into connected components of the grid.

use crate::eigen::symmetric_eigen;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::sampled::SampledFunction;

/// Top singular value with its right-singular subspace.
#[derive(Debug, Clone)]
pub struct TopSingularData {
    pub sigma_max: f64,
    /// Orthonormal right-singular vectors whose singular value is within
    /// `gap_tol * sigma_max` of the top.
    pub basis: Vec<Vec<f64>>,
    /// Distance from `sigma_max` down to the first singular value excluded
    /// from the basis; equals `sigma_max` when every direction is included.
    pub gap: f64,
}

/// Spectral decomposition of `A^T A`, filtered to the near-top group.
///
/// `gap_tol` is relative and decides how close to the top a singular
/// value must be to count as attaining; it must sit in `[0, 1)`.
pub fn top_singular(a: &Matrix, gap_tol: f64) -> Result<TopSingularData> {
    if !(gap_tol.is_finite() && (0.0..1.0).contains(&gap_tol)) {
        return Err(Error::InvalidTolerance(gap_tol));
    }
    if a.is_zero() {
        return Err(Error::ZeroInput("matrix"));
    }
    let eig = symmetric_eigen(&a.gram())?;
    let singular: Vec<f64> = eig.values.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let sigma_max = singular[0];
    let cut = sigma_max * (1.0 - gap_tol);
    let mut basis = Vec::new();
    let mut gap = sigma_max;
    for (k, &s) in singular.iter().enumerate() {
        if s >= cut {
            basis.push(eig.vector(k));
        } else {
            gap = sigma_max - s;
            break;
        }
    }
    Ok(TopSingularData { sigma_max, basis, gap })
}

/// Largest singular value; zero for the zero matrix.
pub fn spectral_norm(a: &Matrix) -> f64 {
    if a.is_zero() {
        return 0.0;
    }
    let eig = symmetric_eigen(&a.gram()).expect("finite symmetric matrix");
    eig.values[0].max(0.0).sqrt()
}

/// Grid points within a relative margin of the sup, grouped by
/// grid connectivity.
#[derive(Debug, Clone, PartialEq)]
pub struct AttainmentSet {
    pub sup_norm: f64,
    /// Attaining indices, ascending.
    pub indices: Vec<usize>,
    /// Connected components of the attaining set, each ascending,
    /// ordered by smallest member.
    pub components: Vec<Vec<usize>>,
}

/// Computes the attainment set of `f`: indices with
/// `|f(u)| >= (1 - eps_att) * sup|f|`, and their components under grid
/// adjacency. With `identify_antipodes`, a point and its antipode count
/// as the same location, which is how sphere grids should be read when
/// `f` comes from something even like `u -> |T u|`; that requires the
/// grid to carry an antipode map.
pub fn attainment(
    f: &SampledFunction,
    eps_att: f64,
    identify_antipodes: bool,
) -> Result<AttainmentSet> {
    if !(eps_att.is_finite() && (0.0..1.0).contains(&eps_att)) {
        return Err(Error::InvalidTolerance(eps_att));
    }
    let antipodes = if identify_antipodes {
        Some(f.grid().antipodes().ok_or(Error::NoAntipodeMap)?)
    } else {
        None
    };

    let n = f.len();
    let norms: Vec<f64> = (0..n).map(|i| f.space().norm_unchecked(f.value(i))).collect();
    let sup = norms.iter().fold(0.0_f64, |m, &v| m.max(v));
    let cut = sup * (1.0 - eps_att);
    let attains: Vec<bool> = norms.iter().map(|&v| v >= cut).collect();
    let indices: Vec<usize> = (0..n).filter(|&i| attains[i]).collect();

    // Flood fill restricted to attaining points; antipodal identification
    // just adds one extra edge per point.
    let mut component_of = vec![usize::MAX; n];
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut stack = Vec::new();
    for &start in &indices {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = Vec::new();
        component_of[start] = id;
        stack.push(start);
        while let Some(i) = stack.pop() {
            members.push(i);
            let linked = f
                .grid()
                .neighbors(i)
                .iter()
                .copied()
                .chain(antipodes.map(|m| m[i]));
            for j in linked {
                if attains[j] && component_of[j] == usize::MAX {
                    component_of[j] = id;
                    stack.push(j);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    Ok(AttainmentSet { sup_norm: sup, indices, components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::NormSpec;
    use crate::oracle::power_sigma;
    use crate::sampled::Grid;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn diagonal_top_subspace() {
        let a = Matrix::from_rows(&[[2.0, 0.0], [0.0, 1.0]]).unwrap();
        let t = top_singular(&a, 1e-8).unwrap();
        assert!((t.sigma_max - 2.0).abs() < 1e-12);
        assert_eq!(t.basis.len(), 1);
        assert!((t.basis[0][0].abs() - 1.0).abs() < 1e-12);
        assert!(t.basis[0][1].abs() < 1e-12);
        assert!((t.gap - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identity_attains_everywhere() {
        let t = top_singular(&Matrix::identity(3), 1e-8).unwrap();
        assert_eq!(t.basis.len(), 3);
        assert!((t.sigma_max - 1.0).abs() < 1e-14);
        // No excluded singular value: the reported gap is sigma itself.
        assert!((t.gap - 1.0).abs() < 1e-14);
    }

    #[test]
    fn top_singular_rejects_bad_input() {
        assert!(matches!(
            top_singular(&Matrix::zeros(2, 2), 1e-8),
            Err(Error::ZeroInput(_))
        ));
        let a = Matrix::identity(2);
        assert!(top_singular(&a, 1.0).is_err());
        assert!(top_singular(&a, -0.1).is_err());
        assert!(top_singular(&a, f64::NAN).is_err());
    }

    #[test]
    fn spectral_norm_closed_form() {
        let a = Matrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        // Eigenvalues of A^T A solve l^2 - 30 l + 4 = 0.
        let expected = ((30.0 + 884.0_f64.sqrt()) / 2.0).sqrt();
        assert!((spectral_norm(&a) - expected).abs() < 1e-12);
        assert_eq!(spectral_norm(&Matrix::zeros(3, 2)), 0.0);
    }

    #[test]
    fn top_subspace_matches_power_iteration() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7369676d61);
        for trial in 0..40 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let mut a = Matrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    a.set(i, j, rng.gen_range(-3.0..3.0));
                }
            }
            if a.is_zero() {
                continue;
            }
            let t = top_singular(&a, 1e-10).unwrap();
            let sigma_pi = power_sigma(&a);
            assert!(
                (t.sigma_max - sigma_pi).abs() <= 1e-10 * t.sigma_max.max(1.0),
                "trial {trial}: {} vs {}",
                t.sigma_max,
                sigma_pi
            );
            // Every basis vector is unit and attains the norm.
            for v in &t.basis {
                let len: f64 = v.iter().map(|c| c * c).sum::<f64>().sqrt();
                assert!((len - 1.0).abs() < 1e-10);
                let av = a.matvec(v).unwrap();
                let alen: f64 = av.iter().map(|c| c * c).sum::<f64>().sqrt();
                assert!((alen - t.sigma_max).abs() <= 1e-9 * t.sigma_max.max(1.0));
            }
        }
    }

    #[test]
    fn sine_arch_attainment_components() {
        let grid = Grid::interval(0.0, 2.0, 2001).unwrap();
        let f = SampledFunction::from_fn(grid, NormSpec::l2(1), |p| {
            vec![(std::f64::consts::PI * p[0]).sin()]
        })
        .unwrap();
        let att = attainment(&f, 1e-6, false).unwrap();
        assert!((att.sup_norm - 1.0).abs() < 1e-12);
        // Peaks of |sin(pi u)| on [0, 2] sit at u = 1/2 and u = 3/2,
        // which are exact grid points at this resolution; the margin is
        // tight enough that each component is that single point.
        assert_eq!(att.components.len(), 2);
        for comp in &att.components {
            assert_eq!(comp.len(), 1);
        }
        let u0 = f.grid().point(att.components[0][0])[0];
        let u1 = f.grid().point(att.components[1][0])[0];
        assert!((u0 - 0.5).abs() < 1e-3);
        assert!((u1 - 1.5).abs() < 1e-3);
    }

    #[test]
    fn constant_function_attains_everywhere_connected() {
        let grid = Grid::interval(0.0, 1.0, 101).unwrap();
        let f = SampledFunction::from_fn(grid, NormSpec::l2(2), |_| vec![3.0, 4.0]).unwrap();
        let att = attainment(&f, 1e-6, false).unwrap();
        assert!((att.sup_norm - 5.0).abs() < 1e-12);
        assert_eq!(att.indices.len(), 101);
        assert_eq!(att.components.len(), 1);
    }

    #[test]
    fn ramp_attains_at_endpoint() {
        let grid = Grid::interval(0.0, 1.0, 101).unwrap();
        let f = SampledFunction::from_fn(grid, NormSpec::l2(1), |p| vec![p[0]]).unwrap();
        let att = attainment(&f, 1e-6, false).unwrap();
        assert_eq!(att.indices, vec![100]);
    }

    #[test]
    fn antipodal_identification_merges_opposite_peaks() {
        // |T u| for T = diag(2, 1) on the circle peaks at both +-e1.
        let grid = Grid::circle(64).unwrap();
        let t = Matrix::from_rows(&[[2.0, 0.0], [0.0, 1.0]]).unwrap();
        let f = SampledFunction::from_fn(grid, NormSpec::l2(2), |p| t.matvec(p).unwrap()).unwrap();
        let plain = attainment(&f, 1e-6, false).unwrap();
        assert_eq!(plain.indices, vec![0, 32]);
        assert_eq!(plain.components.len(), 2);
        let folded = attainment(&f, 1e-6, true).unwrap();
        assert_eq!(folded.components.len(), 1);
    }

    #[test]
    fn antipodal_identification_requires_map() {
        let grid = Grid::interval(0.0, 1.0, 5).unwrap();
        let f = SampledFunction::from_fn(grid, NormSpec::l2(1), |p| vec![p[0]]).unwrap();
        assert!(matches!(attainment(&f, 1e-6, true), Err(Error::NoAntipodeMap)));
    }

    #[test]
    fn zero_function_attains_everywhere() {
        let grid = Grid::interval(0.0, 1.0, 7).unwrap();
        let f = SampledFunction::from_fn(grid, NormSpec::l2(1), |_| vec![0.0]).unwrap();
        let att = attainment(&f, 1e-6, false).unwrap();
        assert_eq!(att.sup_norm, 0.0);
        assert_eq!(att.indices.len(), 7);
        assert_eq!(att.components.len(), 1);
    }
}
