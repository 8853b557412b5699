use thiserror::Error;

/// Problems found while reading a Gauss or surface code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed token `{token}` at position {position}")]
    MalformedToken { token: String, position: usize },
    #[error("crossing {crossing} appears only once")]
    CrossingSeenOnce { crossing: u32 },
    #[error("crossing {crossing} has two {strand} passages (or more than two passages)")]
    CrossingSeenTwiceSameStrand { crossing: u32, strand: &'static str },
    #[error("crossing {crossing} has passages with different signs")]
    SignMismatch { crossing: u32 },
    #[error("side token x{side} out of range for genus {genus}")]
    SideOutOfRange { side: u32, genus: u32 },
    #[error("missing `name:` prefix in `{line}`")]
    MissingName { line: String },
    #[error("malformed genus header `{line}`")]
    MalformedHeader { line: String },
    #[error("side tokens are not allowed in a Gauss code")]
    SideTokenInGaussCode,
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<ParseError>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("variable set mismatch: {left} vs {right}")]
    VariableSetMismatch { left: String, right: String },
    #[error("polynomial has a variable outside the ring: {0}")]
    UnexpectedVariable(String),
    #[error("polynomial division failed: {0}")]
    DivisionFailed(&'static str),
    #[error("values live in different rings: {left} vs {right}")]
    RingMismatch { left: String, right: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move is not applicable to this diagram: {0}")]
    NotApplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("gap {gap} is out of range for a code of length {len}")]
    GapOutOfRange { gap: usize, len: usize },
}
