//! Norm evaluation for finite-dimensional real vectors.
//!
//! Every other module routes its norm computations through [`NormSpec`], so
//! a verdict about `(space, x, y)` always means the same function was used
//! on both sides of every comparison. The supported families are the lp
//! norms (including l-infinity as its own case, not a large-p stand-in),
//! the Euclidean norm with its closed-form fast paths, and caller-supplied
//! custom norms that are spot-checked for the norm axioms at registration.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

type CustomEval = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

#[derive(Clone)]
enum Kind {
    Euclidean,
    /// Finite exponent, `1 <= p < infinity`. `p == 2` is normalized to
    /// `Euclidean` at construction so the fast paths always fire.
    Lp(f64),
    LInf,
    Custom { name: String, eval: CustomEval },
}

/// A norm together with the dimension it acts on.
///
/// # Example
///
/// ```
/// use bjorth::NormSpec;
///
/// let space = NormSpec::l2(2);
/// assert_eq!(space.norm(&[3.0, 4.0]).unwrap(), 5.0);
/// ```
#[derive(Clone)]
pub struct NormSpec {
    dim: usize,
    kind: Kind,
}

impl fmt::Debug for NormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormSpec({}, dim={})", self.name(), self.dim)
    }
}

/// Samples used for the registration spot checks of custom norms.
const CUSTOM_VALIDATION_SAMPLES: usize = 100;

/// Slack allowed in the custom-norm spot checks. Custom evaluators carry
/// their own rounding, so this is looser than the 1e-12 we hold our own
/// norms to.
const CUSTOM_VALIDATION_TOL: f64 = 1e-9;

impl NormSpec {
    /// The l1 norm on `dim` coordinates.
    pub fn l1(dim: usize) -> Self {
        Self::lp(dim, 1.0).expect("p = 1 is always valid")
    }

    /// The Euclidean norm on `dim` coordinates.
    pub fn l2(dim: usize) -> Self {
        NormSpec { dim, kind: Kind::Euclidean }
    }

    /// The maximum norm on `dim` coordinates.
    pub fn linf(dim: usize) -> Self {
        NormSpec { dim, kind: Kind::LInf }
    }

    /// The lp norm for any `p >= 1`; `f64::INFINITY` gives the maximum
    /// norm. Exponents below 1 do not satisfy the triangle inequality and
    /// are rejected.
    pub fn lp(dim: usize, p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidExponent(p));
        }
        let kind = if p == f64::INFINITY {
            Kind::LInf
        } else if p == 2.0 {
            Kind::Euclidean
        } else {
            Kind::Lp(p)
        };
        Ok(NormSpec { dim, kind })
    }

    /// Registers a caller-supplied norm.
    ///
    /// The evaluator is spot-checked on seeded random inputs for absolute
    /// homogeneity, the triangle inequality, nonnegativity, and
    /// definiteness. This catches honest mistakes (a missing `abs`, a
    /// squared result), not adversarial evaluators; the checks are
    /// deterministic, so registration never flakes.
    pub fn custom<F>(dim: usize, name: &str, eval: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        if dim == 0 {
            return Err(Error::InvalidArgument("norm dimension must be at least 1".into()));
        }
        let eval: CustomEval = Arc::new(eval);
        let mut rng = ChaCha8Rng::seed_from_u64(0x6e6f726d);
        for _ in 0..CUSTOM_VALIDATION_SAMPLES {
            let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let y: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let alpha: f64 = rng.gen_range(-3.0..3.0);

            let nx = eval(&x);
            let ny = eval(&y);
            if !nx.is_finite() || nx < 0.0 {
                return Err(Error::NormValidation {
                    name: name.into(),
                    reason: format!("returned {nx} on a finite input"),
                });
            }

            let ax: Vec<f64> = x.iter().map(|v| alpha * v).collect();
            let homo = (eval(&ax) - alpha.abs() * nx).abs();
            if homo > CUSTOM_VALIDATION_TOL * (1.0 + alpha.abs() * nx) {
                return Err(Error::NormValidation {
                    name: name.into(),
                    reason: format!("homogeneity violated by {homo:.3e}"),
                });
            }

            let xy: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
            let tri = eval(&xy) - (nx + ny);
            if tri > CUSTOM_VALIDATION_TOL * (1.0 + nx + ny) {
                return Err(Error::NormValidation {
                    name: name.into(),
                    reason: format!("triangle inequality violated by {tri:.3e}"),
                });
            }

            let e2: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if e2 > 0.5 && nx == 0.0 {
                return Err(Error::NormValidation {
                    name: name.into(),
                    reason: "vanishes on a clearly nonzero vector".into(),
                });
            }
        }
        Ok(NormSpec { dim, kind: Kind::Custom { name: name.into(), eval } })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// True for the Euclidean case, where inner-product shortcuts apply.
    pub fn is_euclidean(&self) -> bool {
        matches!(self.kind, Kind::Euclidean)
    }

    /// The lp exponent if this is an lp-family norm (`2.0` for Euclidean,
    /// `f64::INFINITY` for the maximum norm), `None` for custom norms.
    pub fn lp_exponent(&self) -> Option<f64> {
        match &self.kind {
            Kind::Euclidean => Some(2.0),
            Kind::Lp(p) => Some(*p),
            Kind::LInf => Some(f64::INFINITY),
            Kind::Custom { .. } => None,
        }
    }

    /// Short name for diagnostics: `l1`, `l2`, `linf`, `lp(2.5)`, or the
    /// registered custom name.
    pub fn name(&self) -> String {
        match &self.kind {
            Kind::Euclidean => "l2".into(),
            Kind::Lp(p) if *p == 1.0 => "l1".into(),
            Kind::Lp(p) => format!("lp({p})"),
            Kind::LInf => "linf".into(),
            Kind::Custom { name, .. } => name.clone(),
        }
    }

    /// Evaluates the norm. The only error is a length mismatch with
    /// [`NormSpec::dim`].
    pub fn norm(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.len() });
        }
        Ok(self.norm_unchecked(x))
    }

    /// Norm evaluation without the length check. Hot paths that already
    /// validated their inputs go through this.
    pub(crate) fn norm_unchecked(&self, x: &[f64]) -> f64 {
        match &self.kind {
            Kind::Euclidean => euclidean(x),
            Kind::Lp(p) if *p == 1.0 => x.iter().map(|v| v.abs()).sum(),
            Kind::Lp(p) => lp_scaled(x, *p),
            Kind::LInf => x.iter().fold(0.0_f64, |m, v| m.max(v.abs())),
            Kind::Custom { eval, .. } => eval(x),
        }
    }
}

/// The standard inner product. Errors on mismatched lengths.
pub fn inner(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch { expected: x.len(), got: y.len() });
    }
    Ok(x.iter().zip(y).map(|(a, b)| a * b).sum())
}

pub(crate) fn euclidean(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// lp norm with the largest entry factored out, so `|x_i|^p` cannot
/// overflow and absolute homogeneity survives extreme scales.
fn lp_scaled(x: &[f64], p: f64) -> f64 {
    let m = x.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if m == 0.0 {
        return 0.0;
    }
    let sum: f64 = x.iter().map(|v| (v.abs() / m).powf(p)).sum();
    m * sum.powf(1.0 / p)
}
