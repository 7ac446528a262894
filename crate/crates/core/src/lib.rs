//! A chunk list: a dynamic list of capacity-bounded chunks with internally
//! parallel search and removal.
//!
//! The collection is an outer dynamic list whose entries are inner lists
//! ("chunks") that may not grow past a shared capacity, the chunk size.
//! Keeping the data pre-partitioned makes the expensive whole-list
//! operations data-parallel: `contains`, `remove`, and `remove_all` hand
//! each chunk to a worker and stop all workers as soon as one finds what it
//! is looking for.
//!
//! ```
//! use chunk_list::{recommended_chunk_size, ChunkList};
//!
//! // Chunk size can be set explicitly, or derived from the expected
//! // element count.
//! let mut list = ChunkList::with_chunk_size(recommended_chunk_size(50))?;
//! for n in 1..=50 {
//!     list.add(n);
//! }
//! assert!(list.contains(&37));
//! assert!(!list.contains(&51));
//!
//! list.sort();
//! assert_eq!(list.get(0)?, &1);
//! # Ok::<(), chunk_list::ChunkListError>(())
//! ```
//!
//! Element types must implement [`Ord`]: equality-based operations derive
//! equality from the total order, and `sort` needs the order itself.

mod chunk;
mod config;
mod error;
mod list;

pub use chunk::Chunk;
pub use config::{ChunkListConfig, SearchStrategy};
pub use error::ChunkListError;
pub use list::{ChunkList, DEFAULT_CHUNK_SIZE};

/// The chunk size that measured fastest for a known element count: the
/// integer square root of the count, clamped to at least 1.
///
/// ```
/// use chunk_list::recommended_chunk_size;
///
/// assert_eq!(recommended_chunk_size(1_000_000), 1000);
/// assert_eq!(recommended_chunk_size(0), 1);
/// ```
pub fn recommended_chunk_size(expected_count: usize) -> usize {
    expected_count.isqrt().max(1)
}
