use std::fmt;

/// A capacity-bounded inner list: the unit of storage and of parallel work.
///
/// The capacity bound itself is the owning [`ChunkList`](crate::ChunkList)'s
/// chunk size; a `Chunk` only tracks its items. Items keep insertion order,
/// and removing one shifts the rest of that chunk left — elements never
/// migrate between chunks to fill a gap.
#[derive(Clone, Default)]
pub struct Chunk<T> {
    items: Vec<T>,
}

impl<T> Chunk<T> {
    pub(crate) fn new() -> Self {
        Chunk { items: Vec::new() }
    }

    pub(crate) fn from_items(items: Vec<T>) -> Self {
        Chunk { items }
    }

    /// Number of items currently stored.
    pub fn len(&self) -> usize {
        self.items.len()
    }

    /// True when the chunk holds no items.
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The items in insertion order.
    pub fn as_slice(&self) -> &[T] {
        &self.items
    }

    /// Iterates the items in order.
    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.items.iter()
    }

    pub(crate) fn push(&mut self, item: T) {
        self.items.push(item);
    }

    pub(crate) fn remove(&mut self, pos: usize) -> T {
        self.items.remove(pos)
    }

    pub(crate) fn set(&mut self, pos: usize, item: T) {
        self.items[pos] = item;
    }

    pub(crate) fn retain(&mut self, keep: impl FnMut(&T) -> bool) {
        self.items.retain(keep);
    }

    pub(crate) fn into_items(self) -> Vec<T> {
        self.items
    }
}

impl<T> AsRef<[T]> for Chunk<T> {
    fn as_ref(&self) -> &[T] {
        self.as_slice()
    }
}

impl<'a, T> IntoIterator for &'a Chunk<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

impl<T: fmt::Debug> fmt::Debug for Chunk<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.items).finish()
    }
}
