//! Keyed elements: anything ordered by a small integer key that can be copied around.

use std::fmt;

use num_traits::PrimInt;

/// An integer ordering key.
///
/// Keys must be primitive integers so that the sOptMov marker can be encoded
/// into them arithmetically.
pub trait MergeKey: PrimInt + Send + Sync + fmt::Debug + 'static {}

impl<K> MergeKey for K where K: PrimInt + Send + Sync + fmt::Debug + 'static {}

/// An element ordered by its key only.
///
/// Elements with equal keys may carry different payloads; merging never
/// promises to keep them in input order.
pub trait Keyed: Copy + Send + Sync {
    type Key: MergeKey;

    fn key(&self) -> Self::Key;

    /// Mutable access to the key. Only the sOptMov reorder pass writes through
    /// this, and it always restores the original value.
    fn key_mut(&mut self) -> &mut Self::Key;
}

macro_rules! impl_keyed_for_int {
    ($($t:ty),*) => {
        $(
            impl Keyed for $t {
                type Key = $t;

                #[inline(always)]
                fn key(&self) -> $t {
                    *self
                }

                #[inline(always)]
                fn key_mut(&mut self) -> &mut $t {
                    self
                }
            }
        )*
    };
}

impl_keyed_for_int!(i8, i16, i32, i64, u8, u16, u32, u64, isize, usize);

/// Fixed-width record: an ordering key followed by `PAD` opaque payload bytes.
///
/// With an `i32` key the record is exactly `4 + PAD` bytes wide as long as
/// `PAD` is a multiple of four.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
#[repr(C)]
pub struct Record<K, const PAD: usize> {
    pub key: K,
    pub payload: [u8; PAD],
}

impl<K: MergeKey, const PAD: usize> Record<K, PAD> {
    pub fn new(key: K, payload: [u8; PAD]) -> Self {
        Record { key, payload }
    }

    /// A record with an all-zero payload.
    pub fn from_key(key: K) -> Self {
        Record {
            key,
            payload: [0; PAD],
        }
    }
}

impl<K: MergeKey, const PAD: usize> Keyed for Record<K, PAD> {
    type Key = K;

    #[inline(always)]
    fn key(&self) -> K {
        self.key
    }

    #[inline(always)]
    fn key_mut(&mut self) -> &mut K {
        &mut self.key
    }
}

impl<K: fmt::Debug, const PAD: usize> fmt::Debug for Record<K, PAD> {
    // Payloads can be 64 KiB; only show the first few bytes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown = &self.payload[..PAD.min(4)];
        f.debug_struct("Record")
            .field("key", &self.key)
            .field(
                "payload",
                &format_args!("{shown:?}{}", if PAD > 4 { ".." } else { "" }),
            )
            .finish()
    }
}

/// Compares two elements by key.
#[inline(always)]
pub fn key_le<T: Keyed>(a: &T, b: &T) -> bool {
    a.key() <= b.key()
}

/// True when `v` is non-decreasing by key.
pub fn is_sorted_by_key<T: Keyed>(v: &[T]) -> bool {
    v.windows(2).all(|w| key_le(&w[0], &w[1]))
}
