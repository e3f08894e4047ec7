//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operands carry different metrics ({0:?} vs {1:?})")]
    MetricMismatch(crate::Metric, crate::Metric),

    #[error("group element violates its defining constraint (defect {defect:.3e})")]
    NonUnimodular { defect: f64 },

    #[error("angular velocity is null at t = {t} (|a| = {speed:.3e}); flow undefined across the null cone")]
    NullAngularVelocity { t: f64, speed: f64 },

    #[error("group reprojection correction {correction:.3e} at t = {t} exceeds 1e-3; reduce the step")]
    StepTooLarge { t: f64, correction: f64 },

    #[error("vector is not tangent at the base point (⟨v,γ⟩ = {defect:.3e})")]
    NotTangent { defect: f64 },

    #[error("initial frame violates its constraints: {0}")]
    BadFrame(String),

    #[error("every node of the curve is flagged as a cusp")]
    AllCusps,

    #[error("cusp node inside the requested range at t = {t}")]
    CuspInRange { t: f64 },

    #[error("tangent causal type changes sign at t = {t}; arc-length operations undefined")]
    NullTangent { t: f64 },

    #[error("spinor (u,v) = (0,0) has no angle")]
    ZeroSpinor,

    #[error("potential is non-positive at t = {t} (q = {q:.3e})")]
    PotentialVanishes { t: f64, q: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("front track has a flat point at t = {t} (κ = {kappa:.3e})")]
    FlatPoint { t: f64, kappa: f64 },

    #[error("monodromy is not elliptic at ℓ = {ell} (tr = {trace:.6})")]
    NotElliptic { ell: f64, trace: f64 },

    #[error("step size must be positive (got {0})")]
    BadStep(f64),

    #[error("empty grid or range: {0}")]
    EmptyGrid(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
