use std::cmp::Ordering as CmpOrdering;
use std::fmt;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use crate::chunk::Chunk;
use crate::config::{ChunkListConfig, SearchStrategy};
use crate::error::ChunkListError;

/// Chunk capacity used by [`ChunkList::new`].
pub const DEFAULT_CHUNK_SIZE: usize = 1000;

/// Elements scanned between checks of the shared stop flag. Checking per
/// element would dominate the scan itself.
const STOP_CHECK_BLOCK: usize = 1024;

/// Chunks at least this large are themselves searched in parallel.
const INNER_PARALLEL_MIN: usize = 8192;

/// A dynamic list of capacity-bounded chunks.
///
/// Elements live in an outer list of inner lists ("chunks"), all sharing one
/// capacity bound. `add` drops each element into the first chunk with spare
/// room, appending a fresh chunk when every existing one is full. Because
/// chunks are independent, membership tests and removals fan out across them
/// on a worker pool; see [`ChunkListConfig`] for the knobs.
///
/// Index-based access maps an index to `(index / chunk_size,
/// index % chunk_size)`. After removals a chunk may hold fewer items than
/// that position assumes; the index then falls forward (index + 1, index + 2,
/// ...) until it lands on an occupied slot. Chunks emptied by removals stay
/// in place and are refilled by later `add`s.
///
/// A `ChunkList` is not safe for concurrent external mutation: one writer at
/// a time, readers only while no writer is active. The parallelism is
/// internal to individual operations.
///
/// ```
/// use chunk_list::ChunkList;
///
/// let mut list = ChunkList::with_chunk_size(5)?;
/// for n in 0..=10 {
///     list.add(n);
/// }
/// assert_eq!(list.size(), 11);
/// assert_eq!(list.get(8)?, &8);
/// assert!(list.contains(&10));
/// assert!(list.remove(&3));
/// assert_eq!(list.size(), 10);
/// # Ok::<(), chunk_list::ChunkListError>(())
/// ```
#[derive(Clone)]
pub struct ChunkList<T> {
    chunks: Vec<Chunk<T>>,
    chunk_size: usize,
    config: ChunkListConfig,
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl<T: Ord> ChunkList<T> {
    /// Creates an empty list with the default chunk size of
    /// [`DEFAULT_CHUNK_SIZE`]. No chunks are allocated until the first `add`.
    pub fn new() -> Self {
        ChunkList {
            chunks: Vec::new(),
            chunk_size: DEFAULT_CHUNK_SIZE,
            config: ChunkListConfig::default(),
            pool: None,
        }
    }

    /// Creates an empty list whose chunks hold at most `chunk_size` elements.
    pub fn with_chunk_size(chunk_size: usize) -> Result<Self, ChunkListError> {
        Self::with_config(chunk_size, ChunkListConfig::default())
    }

    /// Creates an empty list with an explicit execution configuration.
    ///
    /// When `config.workers` is set, a dedicated worker pool of that size is
    /// started; otherwise parallel operations share the process-wide pool.
    pub fn with_config(chunk_size: usize, config: ChunkListConfig) -> Result<Self, ChunkListError> {
        if chunk_size == 0 {
            return Err(ChunkListError::InvalidChunkSize);
        }
        let pool = match config.workers {
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.get())
                    .build()
                    .map_err(|e| ChunkListError::WorkerPool(e.to_string()))?;
                Some(Arc::new(pool))
            }
            None => None,
        };
        Ok(ChunkList {
            chunks: Vec::new(),
            chunk_size,
            config,
            pool,
        })
    }

    /// The current chunk capacity.
    pub fn chunk_size(&self) -> usize {
        self.chunk_size
    }

    /// The execution configuration this list was built with.
    pub fn config(&self) -> &ChunkListConfig {
        &self.config
    }

    /// Number of chunks currently allocated, including empty ones.
    pub fn chunk_count(&self) -> usize {
        self.chunks.len()
    }

    /// Iterates the chunks in order.
    pub fn chunks(&self) -> impl ExactSizeIterator<Item = &Chunk<T>> {
        self.chunks.iter()
    }

    /// Total number of elements, summed over all chunks.
    pub fn size(&self) -> usize {
        self.chunks.iter().map(Chunk::len).sum()
    }

    /// True when the list holds no elements.
    pub fn is_empty(&self) -> bool {
        self.chunks.iter().all(Chunk::is_empty)
    }

    /// The chunk an index maps to: `index / chunk_size`.
    pub fn index_to_chunk(&self, index: usize) -> usize {
        index / self.chunk_size
    }

    /// The in-chunk position an index maps to: `index % chunk_size`.
    pub fn index_to_chunk_pos(&self, index: usize) -> usize {
        index % self.chunk_size
    }

    /// Appends `t` to the first chunk with spare capacity, allocating a new
    /// chunk at the end when every existing one is full.
    pub fn add(&mut self, t: T) {
        let chunk_size = self.chunk_size;
        match self.chunks.iter().position(|c| c.len() < chunk_size) {
            Some(open) => self.chunks[open].push(t),
            None => {
                let mut chunk = Chunk::new();
                chunk.push(t);
                self.chunks.push(chunk);
            }
        }
    }

    /// Returns the element `index` resolves to, falling forward past empty
    /// slots left by removals.
    pub fn get(&self, index: usize) -> Result<&T, ChunkListError> {
        let size = self.size();
        if index >= size {
            return Err(ChunkListError::IndexOutOfRange { index, size });
        }
        let (chunk, pos) = self.resolve_slot(index);
        Ok(&self.chunks[chunk].as_slice()[pos])
    }

    /// Overwrites the slot that `get(index)` would read.
    pub fn set(&mut self, index: usize, t: T) -> Result<(), ChunkListError> {
        let size = self.size();
        if index >= size {
            return Err(ChunkListError::IndexOutOfRange { index, size });
        }
        let (chunk, pos) = self.resolve_slot(index);
        self.chunks[chunk].set(pos, t);
        Ok(())
    }

    /// Deletes and returns the element that `get(index)` would read. The
    /// remaining items of that chunk shift left; no other chunk changes.
    pub fn remove_at(&mut self, index: usize) -> Result<T, ChunkListError> {
        let size = self.size();
        if index >= size {
            return Err(ChunkListError::IndexOutOfRange { index, size });
        }
        let (chunk, pos) = self.resolve_slot(index);
        Ok(self.chunks[chunk].remove(pos))
    }

    /// Deletes one occurrence of `t`, returning whether anything was removed.
    ///
    /// Chunks are searched in parallel and the first finder claims the
    /// deletion; when duplicates span chunks, which occurrence goes is
    /// unspecified. Exactly one element is removed on success regardless of
    /// scheduling.
    pub fn remove(&mut self, t: &T) -> bool
    where
        T: Send + Sync,
    {
        if self.use_sequential() {
            return self.remove_sequential(t);
        }
        let strategy = self.config.search_strategy;
        let claimed = AtomicBool::new(false);
        run_pooled(self.pool.as_deref(), || {
            let _ = self.chunks.par_iter_mut().try_for_each(|chunk| {
                if claimed.load(Ordering::Relaxed) {
                    return Err(());
                }
                if let Some(pos) = find_in_chunk(chunk.as_slice(), t, strategy) {
                    // Only the claim winner mutates; each worker owns its
                    // chunk exclusively, so the found position is still valid.
                    if claimed
                        .compare_exchange(false, true, Ordering::Relaxed, Ordering::Relaxed)
                        .is_ok()
                    {
                        chunk.remove(pos);
                    }
                    return Err(());
                }
                Ok(())
            });
        });
        claimed.into_inner()
    }

    /// Deletes every occurrence of `t`. Chunks are filtered independently in
    /// parallel; surviving elements keep their in-chunk order and emptied
    /// chunks stay allocated.
    pub fn remove_all(&mut self, t: &T)
    where
        T: Send + Sync,
    {
        if self.use_sequential() {
            for chunk in &mut self.chunks {
                chunk.retain(|x| x.cmp(t) != CmpOrdering::Equal);
            }
            return;
        }
        run_pooled(self.pool.as_deref(), || {
            self.chunks
                .par_iter_mut()
                .for_each(|chunk| chunk.retain(|x| x.cmp(t) != CmpOrdering::Equal));
        });
    }

    /// True when some element equals `t`.
    ///
    /// Chunks are searched in parallel (large chunks also fan out
    /// internally); all workers stand down once any of them finds a match.
    /// The answer does not depend on the schedule.
    pub fn contains(&self, t: &T) -> bool
    where
        T: Sync,
    {
        if self.use_sequential() {
            let strategy = self.config.search_strategy;
            return self
                .chunks
                .iter()
                .any(|chunk| find_in_chunk(chunk.as_slice(), t, strategy).is_some());
        }
        let strategy = self.config.search_strategy;
        let found = AtomicBool::new(false);
        run_pooled(self.pool.as_deref(), || {
            let _ = self.chunks.par_iter().try_for_each(|chunk| {
                scan_chunk_cooperative(chunk.as_slice(), t, &found, strategy);
                if found.load(Ordering::Relaxed) {
                    Err(())
                } else {
                    Ok(())
                }
            });
        });
        found.into_inner()
    }

    /// Drops every chunk. The chunk size setting is kept.
    pub fn clear(&mut self) {
        self.chunks.clear();
    }

    /// A flat copy of the contents: chunks in order, items in in-chunk order.
    pub fn get_list(&self) -> Vec<T>
    where
        T: Clone,
    {
        let mut items = Vec::with_capacity(self.size());
        for chunk in &self.chunks {
            items.extend_from_slice(chunk.as_slice());
        }
        items
    }

    /// Changes the chunk capacity.
    ///
    /// Growing just raises the bound — existing chunks keep their contents
    /// and later `add`s fill them up to the new capacity. Shrinking (or
    /// setting the same size) rebalances: the contents are flattened and
    /// refilled in order, leaving every chunk full except possibly the last.
    pub fn set_chunk_size(&mut self, new_chunk_size: usize) -> Result<(), ChunkListError> {
        if new_chunk_size == 0 {
            return Err(ChunkListError::InvalidChunkSize);
        }
        if new_chunk_size > self.chunk_size {
            self.chunk_size = new_chunk_size;
        } else {
            let items = self.take_all();
            self.chunk_size = new_chunk_size;
            self.reflow(items);
        }
        Ok(())
    }

    /// Sorts the contents ascending by flattening, sorting, and refilling.
    /// Afterwards every chunk is internally sorted, chunks are full except
    /// possibly the last, and each chunk's maximum is at most the next
    /// chunk's minimum. The sort is not stable.
    pub fn sort(&mut self) {
        let mut items = self.take_all();
        items.sort_unstable();
        self.reflow(items);
    }

    /// Maps `index` to the (chunk, position) it resolves to, falling forward
    /// until an occupied slot is found. Callers must have bounds-checked
    /// `index < size()`; with that guarantee the walk always terminates,
    /// since `size` occupied slots at distinct virtual indices put the
    /// highest occupied one at `size - 1` or beyond.
    fn resolve_slot(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.size());
        let mut virtual_index = index;
        loop {
            let chunk = virtual_index / self.chunk_size;
            let pos = virtual_index % self.chunk_size;
            assert!(
                chunk < self.chunks.len(),
                "index resolution ran past the last chunk"
            );
            if pos < self.chunks[chunk].len() {
                return (chunk, pos);
            }
            // Every slot from len to the end of this chunk is empty, so fall
            // forward to the next chunk boundary in one step.
            virtual_index = (chunk + 1).saturating_mul(self.chunk_size);
        }
    }

    /// Moves the whole contents out in flatten order, leaving zero chunks.
    fn take_all(&mut self) -> Vec<T> {
        let mut items = Vec::with_capacity(self.size());
        for chunk in self.chunks.drain(..) {
            items.extend(chunk.into_items());
        }
        items
    }

    /// Refills an empty list from `items` in order. The resulting layout is
    /// identical to `add`ing each item in sequence — chunks fill front to
    /// back, all full except possibly the last — without the per-item scan
    /// for an open slot.
    fn reflow(&mut self, items: Vec<T>) {
        debug_assert!(self.chunks.is_empty());
        let mut items = items.into_iter();
        loop {
            let fill: Vec<T> = items.by_ref().take(self.chunk_size).collect();
            if fill.is_empty() {
                break;
            }
            self.chunks.push(Chunk::from_items(fill));
        }
    }

    fn use_sequential(&self) -> bool {
        !self.config.parallel || self.chunks.len() < self.config.sequential_threshold
    }

    fn remove_sequential(&mut self, t: &T) -> bool {
        let strategy = self.config.search_strategy;
        for chunk in &mut self.chunks {
            if let Some(pos) = find_in_chunk(chunk.as_slice(), t, strategy) {
                chunk.remove(pos);
                return true;
            }
        }
        false
    }
}

impl<T: Ord> Default for ChunkList<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: fmt::Debug> fmt::Debug for ChunkList<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChunkList")
            .field("chunk_size", &self.chunk_size)
            .field("chunks", &self.chunks)
            .finish_non_exhaustive()
    }
}

fn run_pooled<R: Send>(pool: Option<&rayon::ThreadPool>, f: impl FnOnce() -> R + Send) -> R {
    match pool {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// Position of a match for `t` in one chunk, per the configured strategy.
/// `BinaryWithinChunk` assumes the chunk is sorted and may return any
/// matching position.
fn find_in_chunk<T: Ord>(items: &[T], t: &T, strategy: SearchStrategy) -> Option<usize> {
    match strategy {
        SearchStrategy::LinearScan => items.iter().position(|x| x.cmp(t) == CmpOrdering::Equal),
        SearchStrategy::BinaryWithinChunk => items.binary_search(t).ok(),
    }
}

/// Scans one chunk for `t`, setting `found` on a hit and bailing out early
/// once any worker has set it. Large chunks are split across workers too.
fn scan_chunk_cooperative<T: Ord + Sync>(
    items: &[T],
    t: &T,
    found: &AtomicBool,
    strategy: SearchStrategy,
) {
    match strategy {
        SearchStrategy::BinaryWithinChunk => {
            if items.binary_search(t).is_ok() {
                found.store(true, Ordering::Relaxed);
            }
        }
        SearchStrategy::LinearScan if items.len() >= INNER_PARALLEL_MIN => {
            let _ = items.par_chunks(STOP_CHECK_BLOCK).try_for_each(|block| {
                if found.load(Ordering::Relaxed) {
                    return Err(());
                }
                if block.iter().any(|x| x.cmp(t) == CmpOrdering::Equal) {
                    found.store(true, Ordering::Relaxed);
                    return Err(());
                }
                Ok(())
            });
        }
        SearchStrategy::LinearScan => {
            for block in items.chunks(STOP_CHECK_BLOCK) {
                if found.load(Ordering::Relaxed) {
                    return;
                }
                if block.iter().any(|x| x.cmp(t) == CmpOrdering::Equal) {
                    found.store(true, Ordering::Relaxed);
                    return;
                }
            }
        }
    }
}
