use thiserror::Error;

use crate::tuples::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tuple {index} has {found} elements, expected {expected}")]
    NonUniformTupleSize {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("tuple {index} repeats element `{token}`")]
    RepeatedElementInTuple { index: usize, token: String },
    #[error("no tuples in input")]
    EmptyInput,
    #[error("tuple size must be at least 1")]
    ZeroTupleSize,
    #[error("element {element} outside alphabet [1, {m}]")]
    ElementOutOfRange { element: Element, m: usize },
    #[error("operation requires tuples of size {expected}, got {found}")]
    WrongTupleSize { expected: usize, found: usize },
    #[error("number of colors must be at least 1")]
    ZeroColors,
    #[error("color {color} outside [0, {c})")]
    ColorOutOfRange { color: u32, c: u32 },
    #[error("coloring covers {found} tuples but the instance has {expected}")]
    ColoringLengthMismatch { expected: usize, found: usize },
    #[error("coloring is not nice")]
    NotNice,
    #[error("pinned tuple {index} is uncolored or shares its color with another pinned tuple")]
    PinnedColorClash { index: usize },
    #[error("tuple index {index} out of range for {n} tuples")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("exhaustive search needs {needed} assignments, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("instance has {n} tuples, fewer than the {s} anchors required")]
    TooFewTuples { n: usize, s: usize },
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    DegreeMismatch {
        vertex: usize,
        degree: usize,
        expected: usize,
    },
    #[error("hyperedge {edge}: {reason}")]
    InvalidEdge { edge: usize, reason: String },
    #[error("problem {problem} has degree {degree} in its group, at most 3 allowed")]
    DegreeExceeded { problem: Element, degree: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
