//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Header column does not match the schema.
    #[error("schema mismatch at column {index}: header has `{found}`, schema expects `{expected}`")]
    SchemaMismatch {
        index: usize,
        found: String,
        expected: String,
    },

    /// A data row has the wrong number of cells.
    #[error("ragged row {row}: expected {expected} cells, found {found}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    /// Input is not valid UTF-8 or otherwise unreadable as delimited text.
    #[error("parse error: {0}")]
    Parse(String),

    /// A table or split ended up with zero rows.
    #[error("empty dataset: {0}")]
    EmptyDataset(String),

    /// A cell failed numeric parsing during encoding.
    #[error("encode error at row {row}, column `{column}`: cannot parse `{value}` as a real number")]
    NumericParse {
        row: usize,
        column: String,
        value: String,
    },

    /// The label column carries fewer than two distinct values.
    #[error("degenerate label column `{column}`: only {distinct} distinct value(s)")]
    DegenerateLabel { column: String, distinct: usize },

    /// Stratified splitting cannot honor a class with too few members.
    #[error("stratification error: class `{class}` has only {count} member(s), need at least 2")]
    Stratification { class: String, count: usize },

    /// Lookup of a column that does not exist.
    #[error("unknown column `{0}`")]
    UnknownColumn(String),

    /// A selection method kept zero features.
    #[error("empty selection ({method}): no feature importance exceeded the threshold {threshold}; relax the threshold or add rounds")]
    EmptySelection { method: String, threshold: f64 },

    /// The normal-equations system is singular.
    #[error("singular system: rank deficiency detected at column {column} (pivot {pivot:.3e}); add regularization or drop collinear columns")]
    RankDeficient { column: usize, pivot: f64 },

    /// A parameter is outside its valid range.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    /// Matrix or vector dimensions do not line up.
    #[error("shape mismatch in {context}: expected {expected}, found {found}")]
    ShapeMismatch {
        context: String,
        expected: String,
        found: String,
    },

    /// Training labels contain a single class.
    #[error("label error: {0}")]
    Label(String),

    /// Feature values contain NaN or infinities.
    #[error("data error: {0}")]
    NonFinite(String),

    /// Operation not supported for this model kind.
    #[error("capability error: {operation} is not supported for {kind}")]
    Capability { operation: String, kind: String },

    /// ROC AUC cannot be computed.
    #[error("AUC undefined: {0}")]
    AucUndefined(String),

    /// Empty input where at least one element is required.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// An experiment grid cell failed; carries the inner cause.
    #[error("experiment cell (selection={selection}, classifier={classifier}) failed: {source}")]
    Cell {
        selection: String,
        classifier: String,
        #[source]
        source: Box<Error>,
    },

    /// Underlying I/O failure.
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    /// JSON (de)serialization failure.
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Classify the error for process exit codes: data-shaped problems
    /// (bad files, bad cells, degenerate tables) versus fit/runtime ones.
    pub fn is_data_error(&self) -> bool {
        match self {
            Error::SchemaMismatch { .. }
            | Error::RaggedRow { .. }
            | Error::Parse(_)
            | Error::EmptyDataset(_)
            | Error::NumericParse { .. }
            | Error::DegenerateLabel { .. }
            | Error::Stratification { .. }
            | Error::UnknownColumn(_)
            | Error::NonFinite(_)
            | Error::EmptyInput(_)
            | Error::Io(_) => true,
            Error::Cell { source, .. } => source.is_data_error(),
            _ => false,
        }
    }
}
