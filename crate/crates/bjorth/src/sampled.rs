//! Sampled vector-valued functions on finite grids.
//!
//! A continuous function is represented by its values on a grid, plus an
//! adjacency relation that stands in for the topology of the domain:
//! connectedness of attainment sets only makes sense relative to it.
//! Interval and product grids wire their natural neighbor relations;
//! sphere grids carry an antipode map so `u` and `-u` can optionally be
//! identified, which is the right reading for operator-norm spheres where
//! `|T(-u)| = |T u|`.

use crate::error::{Error, Result};
use crate::norm::NormSpec;
use crate::oracle::unit_sphere_points;

#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<Vec<f64>>,
    neighbors: Vec<Vec<usize>>,
    antipodes: Option<Vec<usize>>,
}

impl Grid {
    /// `n` uniformly spaced points on `[a, b]`, consecutive points
    /// adjacent.
    pub fn interval(a: f64, b: f64, n: usize) -> Result<Grid> {
        if n == 0 {
            return Err(Error::EmptyGrid);
        }
        if !(a.is_finite() && b.is_finite()) || (n > 1 && a >= b) {
            return Err(Error::InvalidArgument(format!("bad interval [{a}, {b}]")));
        }
        let points: Vec<Vec<f64>> = if n == 1 {
            vec![vec![a]]
        } else {
            let step = (b - a) / (n - 1) as f64;
            (0..n).map(|i| vec![a + step * i as f64]).collect()
        };
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Grid::from_parts(points, &edges, None)
    }

    /// Product of uniformly sampled axes; points differing by one step
    /// along a single axis are adjacent. Axis order is row-major: the
    /// last axis varies fastest.
    pub fn product(axes: &[(f64, f64, usize)]) -> Result<Grid> {
        if axes.is_empty() || axes.iter().any(|&(_, _, n)| n == 0) {
            return Err(Error::EmptyGrid);
        }
        let mut coords: Vec<Vec<f64>> = Vec::with_capacity(axes.len());
        for &(a, b, n) in axes {
            if !(a.is_finite() && b.is_finite()) || (n > 1 && a >= b) {
                return Err(Error::InvalidArgument(format!("bad axis [{a}, {b}]")));
            }
            if n == 1 {
                coords.push(vec![a]);
            } else {
                let step = (b - a) / (n - 1) as f64;
                coords.push((0..n).map(|i| a + step * i as f64).collect());
            }
        }

        let sizes: Vec<usize> = axes.iter().map(|&(_, _, n)| n).collect();
        let total: usize = sizes.iter().product();
        let mut points = Vec::with_capacity(total);
        let mut edges = Vec::new();
        let mut strides = vec![1usize; sizes.len()];
        for d in (0..sizes.len().saturating_sub(1)).rev() {
            strides[d] = strides[d + 1] * sizes[d + 1];
        }
        for flat in 0..total {
            let mut rest = flat;
            let mut p = Vec::with_capacity(sizes.len());
            for d in 0..sizes.len() {
                let idx = rest / strides[d];
                rest %= strides[d];
                p.push(coords[d][idx]);
                if idx + 1 < sizes[d] {
                    edges.push((flat, flat + strides[d]));
                }
            }
            points.push(p);
        }
        Grid::from_parts(points, &edges, None)
    }

    /// `n` points on the Euclidean unit circle with cycle adjacency;
    /// even `n` gets an antipode map.
    pub fn circle(n: usize) -> Result<Grid> {
        if n == 0 {
            return Err(Error::EmptyGrid);
        }
        let points: Vec<Vec<f64>> = (0..n)
            .map(|k| {
                let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
                vec![t.cos(), t.sin()]
            })
            .collect();
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        if n > 2 {
            edges.push((n - 1, 0));
        }
        let antipodes = if n % 2 == 0 {
            Some((0..n).map(|k| (k + n / 2) % n).collect())
        } else {
            None
        };
        Grid::from_parts(points, &edges, antipodes)
    }

    /// Builds a grid from explicit points, an edge list, and an optional
    /// antipode involution. Edges are symmetrized and deduplicated;
    /// self-loops are rejected.
    pub fn from_parts(
        points: Vec<Vec<f64>>,
        edges: &[(usize, usize)],
        antipodes: Option<Vec<usize>>,
    ) -> Result<Grid> {
        if points.is_empty() {
            return Err(Error::EmptyGrid);
        }
        let dim = points[0].len();
        if dim == 0 {
            return Err(Error::InvalidArgument("grid points need at least one coordinate".into()));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFinite);
            }
        }
        let n = points.len();
        let mut neighbors = vec![Vec::new(); n];
        for &(i, j) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::BadEdge(i, j));
            }
            neighbors[i].push(j);
            neighbors[j].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
        }
        if let Some(map) = &antipodes {
            if map.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: map.len() });
            }
            for (i, &j) in map.iter().enumerate() {
                if j >= n || j == i || map[j] != i {
                    return Err(Error::BadAntipodeMap(i));
                }
            }
        }
        Ok(Grid { points, neighbors, antipodes })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty grids
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.points[i]
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn antipodes(&self) -> Option<&[usize]> {
        self.antipodes.as_deref()
    }
}

/// Quasi-uniform points on the unit sphere of an lp norm, in antipodal
/// pairs, with near-neighbor adjacency and an exact antipode map.
///
/// The axis directions are always included (for the max and taxicab
/// norms those are where operator norms are attained), and in the plane
/// the diagonal directions too. `samples` is a floor for the point
/// count, not an exact size. Custom norms are rejected: radial
/// projection needs a formula we trust.
pub fn lp_sphere(space: &NormSpec, samples: usize) -> Result<Grid> {
    if space.lp_exponent().is_none() {
        return Err(Error::UnsupportedNorm(space.name()));
    }
    let dim = space.dim();
    match dim {
        0 => Err(Error::InvalidArgument("sphere needs dimension >= 1".into())),
        1 => Grid::from_parts(vec![vec![1.0], vec![-1.0]], &[], Some(vec![1, 0])),
        2 => planar_sphere(space, samples),
        _ => higher_sphere(space, samples),
    }
}

fn project_lp(space: &NormSpec, mut v: Vec<f64>) -> Vec<f64> {
    // Snap near-zero coordinates so axis directions come out exact.
    let top = v.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    for c in &mut v {
        if c.abs() < 1e-15 * top {
            *c = 0.0;
        }
    }
    let n = space.norm_unchecked(&v);
    for c in &mut v {
        *c /= n;
    }
    v
}

fn planar_sphere(space: &NormSpec, samples: usize) -> Result<Grid> {
    // Half-turn resolution, rounded to a multiple of 4 so the axis and
    // diagonal directions land exactly on grid angles.
    let half = (samples.div_ceil(8).max(1)) * 4;
    let mut points = Vec::with_capacity(2 * half);
    for j in 0..half {
        let theta = std::f64::consts::PI * j as f64 / half as f64;
        let u = project_lp(space, vec![theta.cos(), theta.sin()]);
        let neg: Vec<f64> = u.iter().map(|c| -c).collect();
        points.push(u);
        points.push(neg);
    }
    let mut edges = Vec::with_capacity(2 * half);
    for j in 0..half - 1 {
        edges.push((2 * j, 2 * (j + 1)));
        edges.push((2 * j + 1, 2 * (j + 1) + 1));
    }
    // Continuing past the half turn lands on the negated start.
    edges.push((2 * (half - 1), 1));
    edges.push((2 * (half - 1) + 1, 0));
    let antipodes = (0..2 * half).map(|i| i ^ 1).collect();
    Grid::from_parts(points, &edges, Some(antipodes))
}

fn higher_sphere(space: &NormSpec, samples: usize) -> Result<Grid> {
    let dim = space.dim();
    let mut points: Vec<Vec<f64>> = Vec::new();

    // Axis directions, then corner directions, then the quasi-random
    // fill; each immediately followed by its negation.
    for i in 0..dim {
        let mut e = vec![0.0; dim];
        e[i] = 1.0;
        points.push(project_lp(space, e));
        points.push(points.last().unwrap().iter().map(|c| -c).collect());
    }
    for mask in 0..(1usize << (dim - 1)) {
        let mut c = vec![1.0; dim];
        for (bit, entry) in c.iter_mut().enumerate().skip(1) {
            if mask & (1 << (bit - 1)) != 0 {
                *entry = -1.0;
            }
        }
        points.push(project_lp(space, c));
        points.push(points.last().unwrap().iter().map(|v| -v).collect());
    }
    let fill = samples.div_ceil(2);
    for dir in unit_sphere_points(dim, fill) {
        points.push(project_lp(space, dir.clone()));
        points.push(points.last().unwrap().iter().map(|v| -v).collect());
    }

    let n = points.len();
    let antipodes: Vec<usize> = (0..n).map(|i| i ^ 1).collect();

    // Near-neighbor adjacency: each point links to its 2*dim closest
    // companions. Quadratic, which is fine at these sizes.
    let k = 2 * dim;
    let mut edges = Vec::with_capacity(n * k);
    for i in 0..n {
        let mut dists: Vec<(f64, usize)> = (0..n)
            .filter(|&j| j != i)
            .map(|j| {
                let d: f64 = points[i]
                    .iter()
                    .zip(&points[j])
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                (d, j)
            })
            .collect();
        let take = k.min(dists.len());
        dists.select_nth_unstable_by(take - 1, |a, b| a.partial_cmp(b).unwrap());
        for &(_, j) in &dists[..take] {
            edges.push((i, j));
        }
    }
    Grid::from_parts(points, &edges, Some(antipodes))
}

/// A function known only through its values at grid points.
#[derive(Debug, Clone)]
pub struct SampledFunction {
    grid: Grid,
    space: NormSpec,
    values: Vec<Vec<f64>>,
}

// NormSpec carries closures for custom norms, which have no useful
// equality; sampled functions compare by grid and values.
impl PartialEq for SampledFunction {
    fn eq(&self, other: &Self) -> bool {
        self.grid == other.grid && self.values == other.values
    }
}

impl SampledFunction {
    pub fn new(grid: Grid, space: NormSpec, values: Vec<Vec<f64>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::SampleCountMismatch { points: grid.len(), values: values.len() });
        }
        for v in &values {
            if v.len() != space.dim() {
                return Err(Error::DimensionMismatch { expected: space.dim(), got: v.len() });
            }
            if v.iter().any(|c| !c.is_finite()) {
                return Err(Error::NonFinite);
            }
        }
        Ok(SampledFunction { grid, space, values })
    }

    pub fn from_fn<F>(grid: Grid, space: NormSpec, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Vec<f64>,
    {
        let values: Vec<Vec<f64>> = grid.points().iter().map(|p| f(p)).collect();
        SampledFunction::new(grid, space, values)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn space(&self) -> &NormSpec {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty grids
    }

    pub fn value(&self, i: usize) -> &[f64] {
        &self.values[i]
    }

    pub(crate) fn norm_at(&self, i: usize) -> f64 {
        self.space.norm_unchecked(&self.values[i])
    }

    /// `sup_u |f(u)|` over the grid. Total: the grid is never empty.
    pub fn sup_norm(&self) -> f64 {
        (0..self.len()).map(|i| self.norm_at(i)).fold(0.0, f64::max)
    }

    /// `sup_u |f(u) + lambda g(u)|`, the profile that line searches and
    /// oracle checks walk. Errors when the grids differ.
    pub fn sup_of_combination(&self, g: &SampledFunction, lambda: f64) -> Result<f64> {
        if self.grid != g.grid {
            return Err(Error::GridMismatch);
        }
        let mut sup = 0.0_f64;
        let mut buf = vec![0.0; self.space.dim()];
        for i in 0..self.len() {
            for ((b, a), c) in buf.iter_mut().zip(&self.values[i]).zip(&g.values[i]) {
                *b = a + lambda * c;
            }
            sup = sup.max(self.space.norm_unchecked(&buf));
        }
        Ok(sup)
    }
}
