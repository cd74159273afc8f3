use thiserror::Error;

use crate::graph::EdgeColoring;
use crate::verify::StarViolation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// The rejected output of a constructive colorer and the violation found in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedColoring {
    pub violation: StarViolation,
    pub coloring: EdgeColoring,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge id {edge} out of range for graph with {size} edges")]
    EdgeOutOfRange { edge: usize, size: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("invalid complete Halin spec: {0}")]
    InvalidSpec(String),
    #[error("invalid Halin structure: {0}")]
    InvalidHalin(String),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("coloring has {got} entries but {expected} were expected")]
    ColoringSizeMismatch { expected: usize, got: usize },
    #[error("coloring entry {0} is 0; external colorings must be total")]
    UncoloredEdge(usize),
    #[error("graph is not 3-regular")]
    NotCubic,
    #[error("necklace size h = {0} is even; use the cubic Halin colorer")]
    EvenH(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("Halin graph is not complete: leaves lie at different depths")]
    NotComplete,
    #[error("maximum degree {0} is below 6")]
    DeltaTooSmall(usize),
    #[error("graph is a wheel")]
    IsWheel,
    #[error("C_5 has no star 3-edge-coloring")]
    NIsFive,
    #[error("palettes of the two parts overlap on color {0}")]
    PalettesOverlap(u32),
    #[error("sub-coloring of the {part} part is invalid: {violation}")]
    SubcoloringInvalid {
        part: &'static str,
        violation: Box<StarViolation>,
    },
    #[error("construction failed in case `{case}`: {detail}")]
    ConstructionFailed {
        case: String,
        detail: String,
        witness: Option<Box<FailedColoring>>,
    },
    #[error("node budget exhausted; star chromatic index lies in [{lower}, {upper}]")]
    BudgetExhausted { lower: usize, upper: usize },
    #[error("no star coloring with at most {0} colors exists")]
    UpperBoundTooLow(usize),
    #[error("graph does not match the {0} family")]
    FamilyMismatch(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn construction(case: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::ConstructionFailed {
            case: case.into(),
            detail: detail.into(),
            witness: None,
        }
    }

    pub(crate) fn construction_witness(
        case: impl Into<String>,
        violation: StarViolation,
        coloring: EdgeColoring,
    ) -> Self {
        Error::ConstructionFailed {
            case: case.into(),
            detail: violation.to_string(),
            witness: Some(Box::new(FailedColoring { violation, coloring })),
        }
    }
}
