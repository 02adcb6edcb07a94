use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree mismatch: cannot add forms of degree {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("inhomogeneous substitution: substituted forms have different degrees")]
    InhomogeneousSubstitution,
    #[error("gcd of two zero forms is undefined")]
    UndefinedGcd,
    #[error("cannot normalize the zero form")]
    NormalizeZero,
    #[error("operation is not applicable to a point at infinity")]
    NotApplicable,
    #[error("solution is not of the form m*h1 + n*h2 + t*h0")]
    NotInSolutionSet,
    #[error("composition into a point at infinity is undefined")]
    UndefinedComposition,
    #[error("shape violation: {0}")]
    ShapeViolation(String),
    #[error("canonical coordinate has t = {0}; the R-map is defined only for t = 0")]
    OutsideV1(u8),
    #[error("Viete step undefined: X^3 = Y^3")]
    VieteUndefined,
    #[error("specialization pole: r vanishes at the chosen point")]
    SpecializationPole,
    #[error("specialization is not rational")]
    NonRationalSpecialization,
    #[error("point is not on the curve X^3 + Y^3 = {0}")]
    NotOnCurve(String),
    #[error("the curve constant A must be nonzero")]
    ZeroCurveConstant,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
