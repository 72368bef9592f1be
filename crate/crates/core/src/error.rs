use thiserror::Error;

/// Errors raised by the library. Domain errors name the violated
/// precondition; `Internal` signals a broken invariant that the caller
/// cannot repair (it would contradict a verified construction).
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate node {0}")]
    DuplicateNode(String),

    #[error("node set is not poised for degree {degree}: rank {rank}, need {expected} (set has {size} nodes)")]
    NotPoised {
        degree: usize,
        rank: usize,
        expected: usize,
        size: usize,
    },

    #[error("zero polynomial has no leading form")]
    ZeroPolynomial,

    #[error("linear form {0} is constant; not a line")]
    ConstantLinearForm(String),

    #[error("point {point} does not lie on the line {line}")]
    PointNotOnLine { point: String, line: String },

    #[error("line {line} passes through node {node}")]
    LineMeetsNode { line: String, node: String },

    #[error("expected {expected} {what}, got {got}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("value list does not match the node set: expected {expected} values, got {got}")]
    MissingValues { expected: usize, got: usize },

    #[error("step {step}: {source}")]
    ChainStep {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("polynomial of degree {got} exceeds the degree bound {bound}")]
    DegreeBound { bound: usize, got: usize },

    #[error("set of polynomials is not a valid basis of the degree-{0} slice of the vanishing ideal")]
    InvalidBasis(usize),

    #[error("expected {expected} independent linear syzygies, found {got}")]
    SyzygyDimension { expected: usize, got: usize },

    #[error("column index {index} out of range for {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },

    #[error("matrix does not reconstruct the reference basis: no single scalar fits all columns")]
    NoReconstructionScalar,

    #[error("syzygy matrices are not equivalent (no scalar transform maps one onto the other)")]
    NotEquivalent,

    #[error("matrix rank is {got}, need {expected}")]
    RankDeficient { expected: usize, got: usize },

    #[error("line {line} contains {got} nodes, a maximal line must contain {expected}")]
    NotMaximalLine {
        line: String,
        expected: usize,
        got: usize,
    },

    #[error("degenerate lattice: {0}")]
    DegenerateLattice(String),

    #[error("natural lattice spec carries no extension line")]
    MissingExtensionLine,

    #[error("set is not a GC set: fundamental polynomial of {node} does not split into linear factors")]
    NotGcSet { node: String },

    #[error("subset is not contained in the node set: {0}")]
    NotASubset(String),

    #[error("no admissible normalization point found near the centroid")]
    NoValidZ,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
