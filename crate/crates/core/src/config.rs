use std::num::NonZeroUsize;

/// How `contains` and `remove` look for a matching element inside one chunk.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub enum SearchStrategy {
    /// Scan the chunk front to back. Correct on arbitrary data; within the
    /// chunk that wins a removal, the first occurrence is the one removed.
    #[default]
    LinearScan,
    /// Binary-search each chunk. Only sound while every chunk is internally
    /// sorted — guaranteed immediately after [`sort`](crate::ChunkList::sort)
    /// and lost again on the next `add` or `set`. Opt in for that window only.
    BinaryWithinChunk,
}

/// Construction-time execution knobs for a [`ChunkList`](crate::ChunkList).
///
/// ```
/// use chunk_list::{ChunkList, ChunkListConfig};
///
/// let cfg = ChunkListConfig { parallel: false, ..ChunkListConfig::default() };
/// let list: ChunkList<u64> = ChunkList::with_config(100, cfg).unwrap();
/// assert_eq!(list.chunk_size(), 100);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChunkListConfig {
    /// Fan `contains`/`remove`/`remove_all` out across chunks on a worker
    /// pool. When false those operations run on the calling thread.
    pub parallel: bool,
    /// Worker pool size. `None` shares the process-wide pool, which is sized
    /// to the available processors.
    pub workers: Option<NonZeroUsize>,
    /// Lists with fewer chunks than this run the parallel operations
    /// sequentially; fan-out overhead dominates below it.
    pub sequential_threshold: usize,
    /// Within-chunk search used by `contains` and `remove`.
    pub search_strategy: SearchStrategy,
}

impl Default for ChunkListConfig {
    fn default() -> Self {
        ChunkListConfig {
            parallel: true,
            workers: None,
            sequential_threshold: 4,
            search_strategy: SearchStrategy::LinearScan,
        }
    }
}

impl ChunkListConfig {
    /// A fully sequential configuration; useful for deterministic debugging.
    pub fn sequential() -> Self {
        ChunkListConfig {
            parallel: false,
            ..ChunkListConfig::default()
        }
    }
}
