use thiserror::Error;

/// Errors raised by the geometry kernel.
///
/// Variants split into two families that the CLI maps to exit codes:
/// input/validation problems (exit 2) and genuine numeric/geometric
/// failures (exit 3). See [`Error::is_validation`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("ideal point passed where a finite point is required")]
    IdealPointArgument,
    #[error("point coincides with an inversion center")]
    SingularPoint,
    #[error("points coincide; no unique geodesic")]
    CoincidentPoints,
    #[error("horosphere through-point coincides with its ideal point")]
    PointAtTangency,
    #[error("surface does not meet the closed unit ball")]
    OutsideModel,
    #[error("operation not defined for kind {0}")]
    UnsupportedKind(&'static str),
    #[error("translated carrier degenerates to a plane (point conformally on the carrier's inversion locus)")]
    CarrierDegenerate,
    #[error("no real tangent from this point (signed power {0} outside (0,1))")]
    NoTangent(f64),
    #[error("geodesic does not meet the carrier")]
    NoIntersection,
    #[error("point lies within the undefined disk of the hyperbolic inversion (distance {dist:.6}, domain radius {domain:.6})")]
    OutsideDomain { dist: f64, domain: f64 },
    #[error("inversion center singularity")]
    CenterSingularity,
    #[error("point coincides with or is antipodal to the inversion pole")]
    PoleSingularity,
    #[error("point is antipodal to a point of the spherical circle")]
    AntipodalDegeneracy,
    #[error("no equal-power point found (degenerate pair)")]
    NoEqualPowerPoint,
    #[error("radical axes do not meet in a common interior point")]
    NoCommonPoint,
    #[error("a pair among the inputs is degenerate (no radical axis)")]
    DegeneratePair,
    #[error("arrangement has no objects")]
    EmptyArrangement,
    #[error("operation requires dimension {required}, got {got}")]
    UnsupportedDimension { required: usize, got: usize },
    #[error("geodesic does not pass through the query point (incidence residual {0:.3e})")]
    IncidenceViolation(f64),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

impl Error {
    /// True for errors caused by malformed input rather than geometry.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::IdealPointArgument
                | Error::CoincidentPoints
                | Error::UnsupportedKind(_)
                | Error::EmptyArrangement
                | Error::UnsupportedDimension { .. }
                | Error::InvariantViolation(_)
                | Error::DimensionMismatch(..)
        )
    }

    /// Stable machine-readable tag for error records.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::IdealPointArgument => "IdealPointArgument",
            Error::SingularPoint => "SingularPoint",
            Error::CoincidentPoints => "CoincidentPoints",
            Error::PointAtTangency => "PointAtTangency",
            Error::OutsideModel => "OutsideModel",
            Error::UnsupportedKind(_) => "UnsupportedKind",
            Error::CarrierDegenerate => "CarrierDegenerate",
            Error::NoTangent(_) => "NoTangent",
            Error::NoIntersection => "NoIntersection",
            Error::OutsideDomain { .. } => "OutsideDomain",
            Error::CenterSingularity => "CenterSingularity",
            Error::PoleSingularity => "PoleSingularity",
            Error::AntipodalDegeneracy => "AntipodalDegeneracy",
            Error::NoEqualPowerPoint => "NoEqualPowerPoint",
            Error::NoCommonPoint => "NoCommonPoint",
            Error::DegeneratePair => "DegeneratePair",
            Error::EmptyArrangement => "EmptyArrangement",
            Error::UnsupportedDimension { .. } => "UnsupportedDimension",
            Error::IncidenceViolation(_) => "IncidenceViolation",
            Error::InvariantViolation(_) => "InvariantViolation",
            Error::DimensionMismatch(..) => "DimensionMismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
