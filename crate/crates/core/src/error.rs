use thiserror::Error;

/// Failure modes of the exact constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("side lengths must be positive")]
    NonPositiveSide,
    #[error("triangle inequality violated")]
    TriangleInequality,
    #[error("scalene triangle required")]
    NotScalene,
    #[error("homogeneous triple is identically zero")]
    ZeroTriple,
    #[error("point lies on the line at infinity")]
    PointAtInfinity,
    #[error("displacement components do not sum to zero")]
    InvalidDisplacement,
    #[error("points are projectively identical")]
    IdenticalPoints,
    #[error("points are collinear")]
    CollinearInput,
    #[error("linear system is singular")]
    DegenerateSystem,
    #[error("conic is degenerate")]
    DegenerateConic,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("known point is not on both the circle and the line")]
    KnownPointNotIncident,
    #[error("a point coincides with a vertex; angle undefined")]
    DegenerateAngle,
    #[error("point lies on the circumcircle; pedal triangle is degenerate")]
    DegeneratePedal,
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("pivot is not on the circle")]
    PivotNotOnCircle,
    #[error("a pivot line is tangent to the circle")]
    TangentPivotLine,
    #[error("pivot lies on the circumcircle")]
    PivotOnCircumcircle,
    #[error("Hagge construction is degenerate")]
    DegenerateHagge,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, GeometryError>;
