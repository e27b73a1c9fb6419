//! Orthogonality for sampled continuous functions under the sup norm.
//!
//! In the space of continuous functions from a compact domain into a
//! normed space, orthogonality of `f` to `g` is decided entirely on the
//! set of points where `|f|` attains its sup: `f` is orthogonal to `g`
//! iff some attaining point puts `g` in the plus cone of `f` and some
//! attaining point puts it in the minus cone. The two points genuinely
//! differ in general; when the attainment set is connected, a single
//! point serves for both sides, and on every connected piece of the
//! attainment set the two-witness and one-witness conditions are
//! equivalent.
//!
//! Everything here runs on [`SampledFunction`] values: grids stand in
//! for the domain, grid adjacency for its topology, and the attainment
//! set is read with a small relative margin. Verdicts are therefore
//! approximations whose fidelity is the grid's; the randomized tests
//! double the resolution and compare to guard against aliasing.

use crate::attainment::attainment;
use crate::bj::{golden_min, is_bj_orthogonal, one_sided_derivative, ConeSide};
use crate::certificate::{GridWitness, OrthCertificate, Witness};
use crate::error::{Error, Result};
use crate::sampled::SampledFunction;
use crate::DEFAULT_EPS_ATT;

/// One-sided derivatives of `t -> |f(u) + t g(u)|` at every attaining
/// grid index, the raw material for all three checks.
struct ConeData {
    indices: Vec<usize>,
    d_plus: Vec<f64>,
    d_minus: Vec<f64>,
}

fn validate_pair(f: &SampledFunction, g: &SampledFunction, tol: f64) -> Result<()> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::InvalidTolerance(tol));
    }
    if f.grid() != g.grid() {
        return Err(Error::GridMismatch);
    }
    if f.space().dim() != g.space().dim() {
        return Err(Error::DimensionMismatch {
            expected: f.space().dim(),
            got: g.space().dim(),
        });
    }
    Ok(())
}

fn cone_data(f: &SampledFunction, g: &SampledFunction, indices: Vec<usize>) -> Result<ConeData> {
    let space = f.space();
    let mut d_plus = Vec::with_capacity(indices.len());
    let mut d_minus = Vec::with_capacity(indices.len());
    for &i in &indices {
        d_plus.push(one_sided_derivative(space, f.value(i), g.value(i), ConeSide::Plus)?);
        d_minus.push(one_sided_derivative(space, f.value(i), g.value(i), ConeSide::Minus)?);
    }
    Ok(ConeData { indices, d_plus, d_minus })
}

/// Decides `f` orthogonal to `g` in the sup norm, over a shared grid.
///
/// The verdict is the two-witness condition on the sampled attainment
/// set, with cone tests at the per-point tolerance `tol * sup |f|` so
/// the decision is invariant under scaling `f`. An orthogonal
/// certificate names one grid point per cone (the most plus-friendly
/// and most minus-friendly attaining points); a non-orthogonal one
/// carries the minimizer of `lambda -> sup |f + lambda g|` as evidence.
/// The zero function is orthogonal to everything by convention.
pub fn function_orth_check(
    f: &SampledFunction,
    g: &SampledFunction,
    tol: f64,
) -> Result<OrthCertificate> {
    validate_pair(f, g, tol)?;
    let sup = f.sup_norm();
    if sup == 0.0 {
        return Ok(OrthCertificate::degenerate_orthogonal(
            "zero base function is orthogonal to every direction",
        ));
    }
    let att = attainment(f, DEFAULT_EPS_ATT, false)?;
    let cones = cone_data(f, g, att.indices)?;
    let tol_pt = tol * sup;

    let mut plus = 0;
    let mut minus = 0;
    for k in 1..cones.indices.len() {
        if cones.d_plus[k] > cones.d_plus[plus] {
            plus = k;
        }
        if cones.d_minus[k] < cones.d_minus[minus] {
            minus = k;
        }
    }
    let max_d_plus = cones.d_plus[plus];
    let min_d_minus = cones.d_minus[minus];

    if max_d_plus >= -tol_pt && min_d_minus <= tol_pt {
        let witness_at = |k: usize| GridWitness {
            index: cones.indices[k],
            point: f.grid().point(cones.indices[k]).to_vec(),
        };
        Ok(OrthCertificate::orthogonal()
            .with_witness(Witness::GridPoints { plus: witness_at(plus), minus: witness_at(minus) })
            .with_residual("sup_norm", sup)
            .with_residual("max_d_plus", max_d_plus)
            .with_residual("min_d_minus", min_d_minus))
    } else {
        let sup_g = g.sup_norm();
        // g = 0 forces both derivatives to zero, which lands above.
        let radius = 2.0 * sup / sup_g;
        let profile = |lambda: f64| f.sup_of_combination(g, lambda).unwrap();
        let (lambda_star, min_value, _) =
            golden_min(profile, -radius, radius, 1e-9 * radius.max(1.0));
        Ok(OrthCertificate::not_orthogonal(lambda_star, min_value)
            .with_residual("sup_norm", sup)
            .with_residual("max_d_plus", max_d_plus)
            .with_residual("min_d_minus", min_d_minus))
    }
}

/// Finds a single attaining point that witnesses both cones at once.
///
/// When the attainment set is connected this must exist whenever `f` is
/// orthogonal to `g` (in exact arithmetic); the sampled analogue scans
/// the attaining points, keeps those whose one-sided derivatives pass
/// both cone tests at `tol * sup |f|`, and returns the one with the
/// smallest combined slack `|D+| + |D-|`, confirmed by an independent
/// line search over `|f(u0) + lambda g(u0)|`. Candidates are ordered,
/// so the result does not depend on traversal order. `None` means no
/// sampled point passes, which on a faithful grid means `f` is not
/// orthogonal to `g`.
///
/// A disconnected attainment set is an error: the hypothesis fails and
/// the two-witness check is the right tool.
pub fn connected_witness(
    f: &SampledFunction,
    g: &SampledFunction,
    tol: f64,
) -> Result<Option<GridWitness>> {
    validate_pair(f, g, tol)?;
    if f.sup_norm() == 0.0 {
        return Err(Error::ZeroInput("f"));
    }
    let att = attainment(f, DEFAULT_EPS_ATT, false)?;
    if att.components.len() != 1 {
        return Err(Error::DisconnectedAttainment { components: att.components.len() });
    }
    let cones = cone_data(f, g, att.indices)?;
    let tol_pt = tol * f.sup_norm();

    let mut candidates: Vec<usize> = (0..cones.indices.len())
        .filter(|&k| cones.d_plus[k] >= -tol_pt && cones.d_minus[k] <= tol_pt)
        .collect();
    candidates.sort_by(|&a, &b| {
        let sa = cones.d_plus[a].abs() + cones.d_minus[a].abs();
        let sb = cones.d_plus[b].abs() + cones.d_minus[b].abs();
        sa.partial_cmp(&sb).unwrap().then(cones.indices[a].cmp(&cones.indices[b]))
    });
    for k in candidates {
        let i = cones.indices[k];
        let cert = is_bj_orthogonal(f.space(), f.value(i), g.value(i), tol_pt)?;
        if cert.is_orthogonal() {
            return Ok(Some(GridWitness { index: i, point: f.grid().point(i).to_vec() }));
        }
    }
    Ok(None)
}

/// The two conditions of the component-level equivalence, evaluated on
/// one connected component of the attainment set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentReport {
    /// Some point passes the plus cone and some point the minus cone.
    pub two_sided_witnesses: bool,
    /// A single point passes both cones together.
    pub pointwise_witness: bool,
}

/// Evaluates both sides of the component equivalence: on a connected
/// component of the attainment set, two one-sided witnesses exist iff a
/// single two-sided witness does.
///
/// `component` must list attaining grid indices forming one connected
/// piece under the grid adjacency. Both conditions run at the per-point
/// tolerance `tol * sup |f|` widened by the largest jump of either
/// derivative field across an edge of the component; the widening is
/// what survives of the continuous statement after discretization, and
/// it makes the two booleans provably equal rather than equal only on
/// grids fine enough to resolve the zero crossing.
pub fn component_equivalence(
    f: &SampledFunction,
    g: &SampledFunction,
    component: &[usize],
    tol: f64,
) -> Result<ComponentReport> {
    validate_pair(f, g, tol)?;
    if component.is_empty() {
        return Err(Error::InvalidArgument("component has no grid indices".into()));
    }
    let sup = f.sup_norm();
    if sup == 0.0 {
        return Err(Error::ZeroInput("f"));
    }
    let att = attainment(f, DEFAULT_EPS_ATT, false)?;
    for &i in component {
        if !att.indices.contains(&i) {
            return Err(Error::ComponentOutsideAttainment(i));
        }
    }

    // Connectivity of the component itself, under adjacency restricted
    // to its members.
    let members: std::collections::BTreeSet<usize> = component.iter().copied().collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![component[0]];
    seen.insert(component[0]);
    while let Some(i) = stack.pop() {
        for &j in f.grid().neighbors(i) {
            if members.contains(&j) && seen.insert(j) {
                stack.push(j);
            }
        }
    }
    if seen.len() != members.len() {
        return Err(Error::ComponentNotConnected);
    }

    let cones = cone_data(f, g, component.to_vec())?;

    // Both conditions run at the same widened tolerance: the base
    // per-point tolerance plus the largest jump of either derivative
    // field across an edge of the component. The continuous theorem
    // finds its single witness where the fields cross zero, which on a
    // grid can fall between samples; the widening covers exactly that
    // gap. It also makes the equivalence provable as stated: walking
    // from a plus point to a minus point, the first point inside the
    // minus set has a predecessor outside it, whose plus derivative
    // exceeds the tolerance (since D+ >= D-), so its own plus
    // derivative is within one jump of passing.
    let position: std::collections::BTreeMap<usize, usize> =
        cones.indices.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let mut jump = 0.0_f64;
    for (&i, &k) in &position {
        for &j in f.grid().neighbors(i) {
            if let Some(&kj) = position.get(&j) {
                jump = jump.max((cones.d_plus[k] - cones.d_plus[kj]).abs());
                jump = jump.max((cones.d_minus[k] - cones.d_minus[kj]).abs());
            }
        }
    }
    let eps_c = tol * sup + jump;

    let has_plus = cones.d_plus.iter().any(|&d| d >= -eps_c);
    let has_minus = cones.d_minus.iter().any(|&d| d <= eps_c);
    let pointwise = (0..cones.indices.len())
        .any(|k| cones.d_plus[k] >= -eps_c && cones.d_minus[k] <= eps_c);

    Ok(ComponentReport { two_sided_witnesses: has_plus && has_minus, pointwise_witness: pointwise })
}
