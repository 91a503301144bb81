//! Exhaustive evaluation of `ar(M, t)` over all set partitions of `E`.

use rayon::prelude::*;

use crate::coloring::Coloring;
use crate::error::{MatroidError, Result};
use crate::matroid::Matroid;
use crate::packing::{PackingSearcher, SearchOptions};
use crate::partitions::{num_blocks, SetPartitions};

/// Largest ground set accepted by the brute force (`B(10) = 115975`).
pub const MAX_BRUTE_FORCE_SIZE: usize = 10;

/// Largest `m` such that some coloring with exactly `m` colors has no `t`
/// pairwise disjoint rainbow bases, or 0 when every coloring has them.
pub fn ar_bruteforce(matroid: &Matroid, t: usize) -> Result<usize> {
    ar_bruteforce_with(matroid, t, SearchOptions::default())
}

pub fn ar_bruteforce_with(matroid: &Matroid, t: usize, options: SearchOptions) -> Result<usize> {
    let searcher = prepare(matroid, t, options)?;
    let by_blocks = partitions_by_blocks(matroid.ground_size());
    for m in (1..by_blocks.len()).rev() {
        if first_avoiding(&searcher, &by_blocks[m], t)?.is_some() {
            return Ok(m);
        }
    }
    Ok(0)
}

/// The first partition (restricted growth strings in lexicographic order)
/// with exactly `num_classes` classes whose coloring has no `t` pairwise
/// disjoint rainbow bases.
pub fn avoiding_partition(
    matroid: &Matroid,
    t: usize,
    num_classes: usize,
    options: SearchOptions,
) -> Result<Option<Coloring>> {
    let searcher = prepare(matroid, t, options)?;
    let candidates: Vec<Vec<u8>> = SetPartitions::new(matroid.ground_size())
        .filter(|rgs| num_blocks(rgs) == num_classes)
        .collect();
    first_avoiding(&searcher, &candidates, t)
}

fn prepare(matroid: &Matroid, t: usize, options: SearchOptions) -> Result<PackingSearcher<'_>> {
    let n = matroid.ground_size();
    if n > MAX_BRUTE_FORCE_SIZE {
        return Err(MatroidError::TooLargeForBruteForce(n));
    }
    if t == 0 {
        return Err(MatroidError::OutOfRange("t must be at least 1".into()));
    }
    PackingSearcher::new(matroid, options)
}

fn partitions_by_blocks(n: usize) -> Vec<Vec<Vec<u8>>> {
    let mut out = vec![Vec::new(); n + 1];
    for rgs in SetPartitions::new(n) {
        out[num_blocks(&rgs)].push(rgs);
    }
    out
}

/// Searches in parallel, then reduces in enumeration order so the result
/// (including which error surfaces) matches a sequential scan.
fn first_avoiding(searcher: &PackingSearcher<'_>, candidates: &[Vec<u8>], t: usize) -> Result<Option<Coloring>> {
    let verdicts: Vec<Result<bool>> = candidates
        .par_iter()
        .map(|rgs| {
            let c = Coloring::from_labels(rgs)?;
            Ok(searcher.rainbow_bases(&c, t)?.is_none())
        })
        .collect();
    for (rgs, verdict) in candidates.iter().zip(verdicts) {
        if verdict? {
            return Ok(Some(Coloring::from_labels(rgs)?));
        }
    }
    Ok(None)
}
