//! Error types shared across the crate.

use core::fmt;

/// Errors arising from curve construction or evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum CurveError {
    /// The dimension must be at least 1.
    InvalidDimension(usize),
    /// The approximation level must be at least 1 and `level * dimension`
    /// may not exceed the 52 bits addressable in an `f64` mantissa.
    InvalidLevel { dimension: usize, level: u32 },
    /// The scalar argument lies outside `[0, 1]` (or is not finite).
    OutOfRange(f64),
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::InvalidDimension(n) => {
                write!(f, "curve dimension must be at least 1, got {n}")
            }
            CurveError::InvalidLevel { dimension, level } => write!(
                f,
                "approximation level {level} invalid for dimension {dimension}: \
                 need level >= 1 and level * dimension <= 52"
            ),
            CurveError::OutOfRange(x) => {
                write!(f, "curve argument {x} outside the unit interval [0, 1]")
            }
        }
    }
}

impl core::error::Error for CurveError {}

/// Errors arising from axis-aligned bound construction or use.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundsError {
    /// No axes given.
    Empty,
    /// Lower and upper lists have different lengths.
    LengthMismatch { lower: usize, upper: usize },
    /// An axis interval is empty, inverted, or not finite.
    BadInterval { axis: usize, lower: f64, upper: f64 },
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::Empty => write!(f, "bounds need at least one axis"),
            BoundsError::LengthMismatch { lower, upper } => {
                write!(f, "bounds lists differ in length: {lower} lower vs {upper} upper")
            }
            BoundsError::BadInterval { axis, lower, upper } => {
                write!(f, "axis {axis} has invalid interval [{lower}, {upper}]")
            }
        }
    }
}

impl core::error::Error for BoundsError {}

/// Errors from evaluating a constrained problem at a point.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    /// The point violates the domain bounds on the given axis.
    OutsideDomain { axis: usize, value: f64 },
    /// A function returned NaN or infinity. `index` is 1-based: constraints
    /// come first in their defining order, the objective is last.
    NonFinite { index: usize },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::OutsideDomain { axis, value } => {
                write!(f, "coordinate {value} on axis {axis} lies outside the search domain")
            }
            EvalError::NonFinite { index } => {
                write!(f, "function {index} returned a non-finite value")
            }
        }
    }
}

impl core::error::Error for EvalError {}

/// Errors from the problem registry.
#[derive(Debug, Clone, PartialEq)]
pub enum RegistryError {
    /// The requested identifier is not in the registry.
    UnknownProblem,
    /// The problem family needs an explicit dimension.
    DimensionRequired { problem: &'static str, min: usize, max: usize },
    /// The requested dimension is outside the supported range.
    DimensionUnsupported { problem: &'static str, dimension: usize },
}

impl fmt::Display for RegistryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegistryError::UnknownProblem => {
                write!(f, "unknown problem identifier (expected P1..P5)")
            }
            RegistryError::DimensionRequired { problem, min, max } => {
                write!(f, "{problem} requires a dimension between {min} and {max}")
            }
            RegistryError::DimensionUnsupported { problem, dimension } => {
                write!(f, "{problem} does not support dimension {dimension}")
            }
        }
    }
}

impl core::error::Error for RegistryError {}

/// Errors from the solver.
#[derive(Debug, Clone, PartialEq)]
pub enum SolverError {
    /// The reliability parameter must exceed 1.
    InvalidReliability(f64),
    /// The lower bound on interval estimates must be positive.
    InvalidXi(f64),
    /// The stopping tolerance must be positive.
    InvalidTolerance(f64),
    Curve(CurveError),
    Eval(EvalError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::InvalidReliability(r) => {
                write!(f, "reliability parameter must be greater than 1, got {r}")
            }
            SolverError::InvalidXi(xi) => write!(f, "xi must be positive, got {xi}"),
            SolverError::InvalidTolerance(d) => {
                write!(f, "tolerance must be positive, got {d}")
            }
            SolverError::Curve(e) => write!(f, "curve error: {e}"),
            SolverError::Eval(e) => write!(f, "evaluation error: {e}"),
        }
    }
}

impl core::error::Error for SolverError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            SolverError::Curve(e) => Some(e),
            SolverError::Eval(e) => Some(e),
            _ => None,
        }
    }
}

impl From<CurveError> for SolverError {
    fn from(e: CurveError) -> Self {
        SolverError::Curve(e)
    }
}

impl From<EvalError> for SolverError {
    fn from(e: EvalError) -> Self {
        SolverError::Eval(e)
    }
}

/// Errors from the penalty baseline.
#[derive(Debug, Clone, PartialEq)]
pub enum PenaltyError {
    /// The coefficient step must be positive and attempts at least 1.
    InvalidParams(&'static str),
    /// No feasible solution was produced within the attempt budget.
    MaxAttemptsExceeded { attempts: usize, last_coefficient: f64 },
    Solver(SolverError),
}

impl fmt::Display for PenaltyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PenaltyError::InvalidParams(msg) => write!(f, "invalid penalty parameters: {msg}"),
            PenaltyError::MaxAttemptsExceeded { attempts, last_coefficient } => write!(
                f,
                "no feasible point after {attempts} attempts (last coefficient {last_coefficient})"
            ),
            PenaltyError::Solver(e) => write!(f, "inner solver error: {e}"),
        }
    }
}

impl core::error::Error for PenaltyError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            PenaltyError::Solver(e) => Some(e),
            _ => None,
        }
    }
}

impl From<SolverError> for PenaltyError {
    fn from(e: SolverError) -> Self {
        PenaltyError::Solver(e)
    }
}
