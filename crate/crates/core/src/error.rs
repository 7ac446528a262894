use thiserror::Error;

/// Errors returned by fallible [`ChunkList`](crate::ChunkList) operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChunkListError {
    /// An index-based operation was handed an index at or past the end of
    /// the list.
    #[error("index {index} out of range for list of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    /// A chunk size of zero was requested, either at construction or through
    /// a resize.
    #[error("chunk size must be at least 1")]
    InvalidChunkSize,

    /// The dedicated worker pool could not be started.
    #[error("failed to build worker pool: {0}")]
    WorkerPool(String),
}
