//! Reversible "already moved" flag stored in the ordering key.
//!
//! With `M = 1 + max - min`, every in-range key `k` maps to `k + M > max`, so
//! a key above `max` means "marked". This needs `max + M` to fit in the key
//! type; when it does not, the codec cannot be built.

use std::ops::Range;

use crate::element::{Keyed, MergeKey};
use crate::error::{MergeError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MarkerCodec<K> {
    min_key: K,
    max_key: K,
    offset: K,
}

impl<K: MergeKey> MarkerCodec<K> {
    /// Builds the codec for keys in `[min_key, max_key]`.
    pub fn new(min_key: K, max_key: K) -> Result<Self> {
        assert!(min_key <= max_key, "inverted key range");
        let overflow = || MergeError::MarkerOverflow {
            min: format!("{min_key:?}"),
            max: format!("{max_key:?}"),
        };
        let offset = max_key
            .checked_sub(&min_key)
            .and_then(|d| d.checked_add(&K::one()))
            .ok_or_else(overflow)?;
        max_key.checked_add(&offset).ok_or_else(overflow)?;
        Ok(MarkerCodec {
            min_key,
            max_key,
            offset,
        })
    }

    pub fn min_key(&self) -> K {
        self.min_key
    }

    pub fn max_key(&self) -> K {
        self.max_key
    }

    /// The marker offset `M`.
    pub fn offset(&self) -> K {
        self.offset
    }

    #[inline(always)]
    pub fn mark(&self, key: K) -> K {
        key + self.offset
    }

    #[inline(always)]
    pub fn unmark(&self, key: K) -> K {
        key - self.offset
    }

    #[inline(always)]
    pub fn is_marked(&self, key: K) -> bool {
        key > self.max_key
    }

    /// True if `key` can be marked by this codec.
    pub fn covers(&self, key: K) -> bool {
        self.min_key <= key && key <= self.max_key
    }
}

/// Scans `array[range]` for its key bounds and builds the matching codec.
pub fn derive_marker<T: Keyed>(array: &[T], range: Range<usize>) -> Result<MarkerCodec<T::Key>> {
    let slice = &array[range];
    let first = slice.first().ok_or(MergeError::EmptyRange)?.key();
    let (min, max) = slice.iter().fold((first, first), |(lo, hi), x| {
        (lo.min(x.key()), hi.max(x.key()))
    });
    MarkerCodec::new(min, max)
}
