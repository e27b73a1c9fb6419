//! Numerical decision procedures for Birkhoff-James orthogonality.
//!
//! A vector `x` is Birkhoff-James orthogonal to `y` when no multiple of
//! `y` can shrink it: `|x + t y| >= |x|` for every scalar `t`. In inner
//! product spaces this is ordinary orthogonality; in general normed
//! spaces it is asymmetric, not additive, and still captures most of
//! what "perpendicular" is good for: distance to subspaces, norm
//! attainment, operator geometry.
//!
//! The crate decides this relation, with witnesses, at several levels:
//!
//! - finite-dimensional vectors under Euclidean, lp, max, or custom
//!   norms ([`is_bj_orthogonal`]), together with the one-sided cone
//!   membership tests refining it ([`in_cone`]);
//! - real matrices under the spectral norm ([`bhatia_semrl_check`]) and
//!   under lp operator norms via sampled unit spheres
//!   ([`sampled_operator_check`]);
//! - bilinear forms on pairs of Euclidean spaces ([`bilinear_orth_check`]);
//! - sampled continuous vector-valued functions under the sup norm
//!   ([`function_orth_check`], [`connected_witness`],
//!   [`component_equivalence`]).
//!
//! Every decision returns an [`OrthCertificate`] carrying the verdict,
//! the witness data that certifies it, and the residuals a skeptical
//! reader would recompute. Certificates serialize to a stable JSON form
//! meant for machine checking; the [`oracle`] module holds a slow,
//! structurally independent decision path that the test suite and the
//! CLI's verify mode compare against.
//!
//! Tolerances are relative wherever a natural scale exists. The
//! defaults ([`DEFAULT_TOL`], [`DEFAULT_GAP_TOL`], [`DEFAULT_EPS_ATT`])
//! suit well-scaled double precision data; all entry points take them
//! explicitly so callers with wilder scales can widen.

pub mod attainment;
pub mod bilinear;
pub mod bj;
pub mod certificate;
pub mod error;
pub mod function;
pub mod matrix;
pub mod norm;
pub mod operator;
pub mod oracle;
pub mod sampled;

mod eigen;

pub use attainment::{attainment, spectral_norm, top_singular, AttainmentSet, TopSingularData};
pub use bilinear::{bilinear_attainment, bilinear_eval, bilinear_norm, bilinear_orth_check,
    BilinearAttainment, BilinearForm};
pub use bj::{in_cone, is_bj_orthogonal, min_norm_over_line, one_sided_derivative, ConeSide,
    LineSearchResult};
pub use certificate::{GridWitness, OrthCertificate, Verdict, Witness};
pub use error::{Error, Result};
pub use function::{component_equivalence, connected_witness, function_orth_check,
    ComponentReport};
pub use matrix::{symmetric_pairing, Matrix};
pub use norm::NormSpec;
pub use operator::{bhatia_semrl_check, sampled_operator_check};
pub use sampled::{lp_sphere, Grid, SampledFunction};

/// Default relative tolerance for orthogonality decisions.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Default relative tolerance for grouping singular values with the top.
pub const DEFAULT_GAP_TOL: f64 = 1e-8;

/// Default relative margin for membership in a sampled attainment set.
pub const DEFAULT_EPS_ATT: f64 = 1e-6;
