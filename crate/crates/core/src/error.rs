use thiserror::Error;

/// Violations of the graph value contract or of an operation's precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric: {0} lists {1} but not vice versa")]
    Asymmetric(usize, usize),
    #[error("the target vertex set is empty")]
    EmptySet,
    #[error("vertex {0} belongs to the set it is being compared against")]
    VertexInSet(usize),
    #[error("vertex {0} lies in both the homogeneous candidate and the scope")]
    Overlap(usize),
    #[error("({0}) is not an induced 5-cycle: {1}")]
    NotInducedCycle(String, String),
    #[error("size bound {0} is out of range (expected 1..=4)")]
    BoundOutOfRange(usize),
}

/// Failures while decoding graph6 words or appendix-style adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is not printable graph6 data")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("graph6: order {n} exceeds 64 (offset {offset})")]
    TooLarge { offset: usize, n: usize },
    #[error("graph6: expected {expected} bytes, found {found} (truncated at offset {found})")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("graph6: nonzero padding bits in byte at offset {offset}")]
    Padding { offset: usize },
    #[error("adjacency list: {message} at offset {offset}")]
    Syntax { offset: usize, message: String },
    #[error("adjacency list: record {record} lists itself")]
    SelfLoop { record: usize },
    #[error(
        "adjacency list: record {record} refers to vertex {id}, but there are only {n} records"
    )]
    OutOfRange { record: usize, id: usize, n: usize },
    #[error("adjacency list: record {record} appears more than once")]
    DuplicateRecord { record: usize },
    #[error("adjacency list: vertex {vertex} has no record")]
    MissingRecord { vertex: usize },
    #[error("adjacency list: record {record} lists {neighbor}, but record {neighbor} does not list {record}")]
    Asymmetric { record: usize, neighbor: usize },
    #[error("adjacency list: {0} records exceed the 64-vertex limit")]
    TooManyRecords(usize),
}

/// An invalid generation request.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("vertex bound {0} is out of range (expected 1..=11)")]
    OrderOutOfRange(usize),
    #[error("forbidden pattern {name} has {order} vertices; at most 9 are supported")]
    PatternTooLarge { name: String, order: usize },
}
