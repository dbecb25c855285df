//! Build-once, share-forever caches keyed by small parameters.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

type Cell<V> = Arc<OnceLock<Arc<V>>>;

/// Values are built at most once per key. Builds for different keys may run
/// concurrently; a second caller for the same key blocks until the first finishes.
pub struct Memo<K, V> {
    cells: OnceLock<Mutex<HashMap<K, Cell<V>>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub const fn new() -> Self {
        Memo {
            cells: OnceLock::new(),
        }
    }

    fn cell(&self, key: &K) -> Cell<V> {
        self.cells
            .get_or_init(Default::default)
            .lock()
            .expect("memo poisoned")
            .entry(key.clone())
            .or_default()
            .clone()
    }

    pub fn get_or_init(&self, key: &K, build: impl FnOnce() -> V) -> Arc<V> {
        self.cell(key).get_or_init(|| Arc::new(build())).clone()
    }

    pub fn get(&self, key: &K) -> Option<Arc<V>> {
        self.cell(key).get().cloned()
    }

    /// Returns false if a value was already present.
    pub fn insert(&self, key: &K, value: V) -> bool {
        self.cell(key).set(Arc::new(value)).is_ok()
    }
}

impl<K: Eq + Hash + Clone, V> Default for Memo<K, V> {
    fn default() -> Self {
        Memo::new()
    }
}
