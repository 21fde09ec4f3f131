use std::collections::HashMap;
use std::num::NonZeroUsize;
use std::sync::Mutex;

use lru::LruCache;

/// Ground sets up to this size get an unbounded memo (at most 2^16 entries).
const UNBOUNDED_MAX_N: usize = 16;
const LRU_CAPACITY: usize = 1 << 20;

/// Transparent rank memoisation keyed by subset bitmask.
pub(super) enum Memo {
    None,
    Unbounded(Mutex<HashMap<u64, usize>>),
    Lru(Mutex<LruCache<u64, usize>>),
}

impl Memo {
    pub(super) fn none() -> Self {
        Memo::None
    }

    pub(super) fn for_ground_size(n: usize) -> Self {
        if n <= UNBOUNDED_MAX_N {
            Memo::Unbounded(Mutex::new(HashMap::new()))
        } else {
            let cap = NonZeroUsize::new(LRU_CAPACITY).expect("nonzero");
            Memo::Lru(Mutex::new(LruCache::new(cap)))
        }
    }

    /// The lock is released while `compute` runs, since computing a derived
    /// matroid's rank queries its parent's memo. Two threads may then compute
    /// the same entry; both store the same value.
    pub(super) fn get_or_insert_with(&self, key: u64, compute: impl FnOnce() -> usize) -> usize {
        match self {
            Memo::None => compute(),
            Memo::Unbounded(map) => {
                if let Some(&v) = map.lock().expect("memo lock").get(&key) {
                    return v;
                }
                let v = compute();
                map.lock().expect("memo lock").insert(key, v);
                v
            }
            Memo::Lru(cache) => {
                if let Some(&v) = cache.lock().expect("memo lock").get(&key) {
                    return v;
                }
                let v = compute();
                cache.lock().expect("memo lock").put(key, v);
                v
            }
        }
    }
}
