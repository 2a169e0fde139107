use std::fmt;
use std::str::FromStr;

use inplace_merge::{
    merge_soptmov, merge_srecpar, seq_merge_buffered, seq_merge_rotation, Keyed, ShiftKind,
};

use crate::error::BenchError;

/// A merge routine under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    SeqRotation,
    SeqBuffered,
    SOptMov,
    SRecParLs,
    SRecParCs,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::SeqRotation,
        Method::SeqBuffered,
        Method::SOptMov,
        Method::SRecParLs,
        Method::SRecParCs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::SeqRotation => "seq-rotation",
            Method::SeqBuffered => "seq-buffered",
            Method::SOptMov => "soptmov",
            Method::SRecParLs => "srecpar-ls",
            Method::SRecParCs => "srecpar-cs",
        }
    }

    pub fn is_parallel(self) -> bool {
        !matches!(self, Method::SeqRotation | Method::SeqBuffered)
    }

    /// Merges `v[..middle]` with `v[middle..]`. `threads` is ignored by the
    /// sequential methods. The buffered merge allocates its buffer here, so
    /// the allocation is part of whatever is being timed.
    pub fn run<T: Keyed>(
        self,
        v: &mut [T],
        middle: usize,
        threads: usize,
    ) -> inplace_merge::Result<()> {
        match self {
            Method::SeqRotation => {
                seq_merge_rotation(v, middle, ShiftKind::Linear);
                Ok(())
            }
            Method::SeqBuffered => seq_merge_buffered(v, middle, &mut Vec::new()),
            Method::SOptMov => merge_soptmov(v, middle, threads),
            Method::SRecParLs => merge_srecpar(v, middle, threads, ShiftKind::Linear),
            Method::SRecParCs => merge_srecpar(v, middle, threads, ShiftKind::Circular),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s.trim())
            .ok_or_else(|| BenchError::Config(format!("unknown method `{s}`")))
    }
}
