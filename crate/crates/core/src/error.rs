//! Library error type.

use thiserror::Error;

/// Errors reported by graph construction and the counting engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("edge index {0} out of range for a graph with {1} edges")]
    UnknownEdge(usize, usize),
    #[error("edge set is not balanced")]
    Unbalanced,
    #[error("bounds length {0} does not match vertex count {1}")]
    BoundsMismatch(usize, usize),
    #[error("flat limit exceeded: more than {0} closed balanced edge sets")]
    FlatLimitExceeded(usize),
    #[error("enumeration budget exceeded: {needed} points requested, limit {limit}")]
    PointBudgetExceeded { needed: u128, limit: u64 },
    #[error("modulus must be positive, got {0}")]
    InvalidModulus(i64),
    #[error("hyperplane ({0}, {1}) must join two distinct coordinates")]
    DegenerateHyperplane(usize, usize),
    #[error("loops have no hyperplane counterpart")]
    LoopHasNoHyperplane,
    #[error("empty gain interval: {0} > {1}")]
    EmptyInterval(i64, i64),
    #[error("Eulerian index {k} out of range 1..={n}")]
    EulerianIndexOutOfRange { n: u64, k: u64 },
    #[error("interval [{0}, {1}] is not of the form [-a, b] with 0 <= a <= b")]
    NotShiftReducible(i64, i64),
    #[error("odd-order zero check requires odd n, got {0}")]
    EvenOrder(u32),
    #[error("deletion-contraction requires a link; edge {0} is a loop")]
    LoopNotContractible(usize),
    #[error("no closed-form count is available for this family")]
    NoClosedForm,
}
