//! Rolling-cone geometry of non-autonomous linear flows.
//!
//! The flow of `ġ = a(t) g` on SO(3) or SL(2,ℝ) is a one-parameter family of
//! isometries of the Lie algebra (Euclidean ℝ³ for so(3), Minkowski ℝ^{2,1}
//! for sl(2,ℝ)) acting by conjugation. This crate integrates the flow,
//! extracts the body and space curves traced by the normalized angular
//! velocity on the unit (pseudo)sphere, and checks the classical rolling
//! description numerically: the body curve rolls without slipping along the
//! space curve, their geodesic curvatures differ by `|a|/|ṅ|`, and the
//! adjoint flow factors as parallel transport, a rotation by the cumulative
//! angle `Φ = ∫|a|`, and inverse parallel transport.
//!
//! Two case studies come built in: Hill/Mathieu systems (timelike angular
//! velocity, curves in the hyperbolic plane, Floquet stability and Arnold
//! tongues) and the planar bicycle (spacelike angular velocity, curves on the
//! one-sheeted hyperboloid, hatchet-planimeter asymptotics).

pub mod algebra;
pub mod bicycle;
pub mod error;
pub mod flow;
pub mod hill;
pub mod rolling;
pub mod sphere;

mod numeric;

pub use algebra::{AlgebraVector, CausalType, GroupElement, Metric};
pub use error::Error;
pub use flow::{integrate_flow, CoefficientCurve, FlowTrajectory};
pub use sphere::{SphereCurve, SphereKind, TangentRotation};

/// Numerical tolerances shared across the crate.
///
/// Defaults follow double-precision accumulation over ~10⁴ integration
/// steps: one order of magnitude of headroom on each derived quantity.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct Tolerances {
    /// Absolute threshold on ⟨a,a⟩ (and on |a|) below which a vector counts
    /// as null.
    pub null: f64,
    /// Allowed defect of a group element (orthogonality / determinant).
    pub group: f64,
    /// Allowed drift of curve samples off the unit (pseudo)sphere.
    pub sphere: f64,
    /// Metric speed below which a curve node is flagged as a cusp.
    pub cusp: f64,
    /// Rolling / decomposition residual budget at step h = 10⁻³.
    pub roll: f64,
    /// Half-width of the parabolic band in the trace classification,
    /// applied to |tr M| − 2.
    pub class: f64,
    /// Pointwise budget for curvature-driven curve reconstruction.
    pub recon: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            null: 1e-10,
            group: 1e-9,
            sphere: 1e-8,
            cusp: 1e-6,
            roll: 1e-6,
            class: 1e-6,
            recon: 1e-4,
        }
    }
}
