//! Gray-code walk over canonical bipartitions, split into fixed-size blocks.
//!
//! Partition index `i` in `0..2^(n-1)` maps to the mask
//! `1 | gray(i) << 1`, so vertex 0 is always in `S`. Block boundaries do not
//! depend on the thread count, which keeps every result independent of it.

use std::cmp::Ordering;
use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::HARD_MAX_N;

const BLOCK_LOG2: u32 = 12;

pub(crate) fn check_cap(n: usize, max_n: usize) -> Result<()> {
    let cap = max_n.min(HARD_MAX_N);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

pub(crate) fn partition_count(n: usize) -> u64 {
    1u64 << n.saturating_sub(1)
}

pub(crate) fn mask_at(index: u64) -> u64 {
    1 | (index ^ (index >> 1)) << 1
}

pub(crate) fn blocks(n: usize) -> Vec<Range<u64>> {
    let total = partition_count(n);
    let size = 1u64 << BLOCK_LOG2;
    (0..total.div_ceil(size))
        .map(|b| b * size..((b + 1) * size).min(total))
        .collect()
}

/// Visits every partition of `range` in Gray-code order. The callback gets the
/// current mask and, after the first call, the vertex that just changed side.
pub(crate) fn walk(range: Range<u64>, mut visit: impl FnMut(u64, Option<usize>)) {
    if range.is_empty() {
        return;
    }
    let mut mask = mask_at(range.start);
    visit(mask, None);
    for i in range.start + 1..range.end {
        let vertex = i.trailing_zeros() as usize + 1;
        mask ^= 1 << vertex;
        visit(mask, Some(vertex));
    }
}

/// Runs `work` over every block on a pool of `threads` workers and returns the
/// per-block results in block order.
pub(crate) fn run_blocks<R, F>(n: usize, threads: usize, work: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(Range<u64>) -> R + Sync,
{
    if threads == 0 {
        return Err(Error::InvalidThreads);
    }
    let blocks = blocks(n);
    if threads == 1 || blocks.len() == 1 {
        return Ok(blocks.into_iter().map(work).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::ThreadPool(e.to_string()))?;
    Ok(pool.install(|| blocks.into_par_iter().map(&work).collect()))
}

/// Compares the sorted member lists of two masks lexicographically.
pub(crate) fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let k = diff.trailing_zeros();
    let (with_k, without_k) = if a >> k & 1 == 1 { (a, b) } else { (b, a) };
    // Both lists agree below k. The list holding k is smaller unless the other
    // list ends there (it is then a proper prefix).
    let above = if k == 63 { 0 } else { u64::MAX << (k + 1) };
    let with_k_is_smaller = without_k & above != 0;
    if (with_k == a) == with_k_is_smaller {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}
