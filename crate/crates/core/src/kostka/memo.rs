use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::Result;

/// Append-only per-key cache. Each key owns a `OnceLock`, so the first
/// finished computation is published atomically and later writers are
/// dropped; readers never see a partial value.
pub(crate) struct Memo<K, V> {
    slots: OnceLock<Mutex<HashMap<K, Arc<OnceLock<V>>>>>,
}

impl<K: Eq + Hash + Copy, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Self {
            slots: OnceLock::new(),
        }
    }

    fn slot(&self, key: K) -> Arc<OnceLock<V>> {
        let map = self.slots.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
        guard.entry(key).or_default().clone()
    }

    pub(crate) fn get_or_try_insert(
        &self,
        key: K,
        compute: impl FnOnce() -> Result<V>,
    ) -> Result<V> {
        let slot = self.slot(key);
        if let Some(v) = slot.get() {
            return Ok(v.clone());
        }
        let value = compute()?;
        let _ = slot.set(value);
        Ok(slot.get().expect("slot was just set").clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn computes_once_per_key() {
        let memo: Memo<u32, u64> = Memo::new();
        let mut calls = 0;
        for _ in 0..3 {
            let v = memo
                .get_or_try_insert(7, || {
                    calls += 1;
                    Ok(49)
                })
                .unwrap();
            assert_eq!(v, 49);
        }
        assert_eq!(calls, 1);
    }

    #[test]
    fn errors_are_not_cached() {
        let memo: Memo<u32, u64> = Memo::new();
        assert!(memo
            .get_or_try_insert(1, || Err(crate::Error::internal("boom")))
            .is_err());
        assert_eq!(memo.get_or_try_insert(1, || Ok(5)).unwrap(), 5);
    }

    #[test]
    fn concurrent_readers_agree() {
        let memo: Arc<Memo<u32, u64>> = Arc::new(Memo::new());
        let handles: Vec<_> = (0..8)
            .map(|t| {
                let memo = memo.clone();
                std::thread::spawn(move || memo.get_or_try_insert(3, || Ok(100 + t)).unwrap())
            })
            .collect();
        let values: Vec<u64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(values.windows(2).all(|w| w[0] == w[1]));
    }
}
