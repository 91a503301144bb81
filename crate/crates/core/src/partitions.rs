//! Set partitions as restricted growth strings.
//!
//! A restricted growth string `a` of length `n` has `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`. Each one names exactly one partition of
//! `{0, .., n-1}`, which is also the canonical form of a [`Coloring`].
//!
//! [`Coloring`]: crate::coloring::Coloring

/// Iterator over all restricted growth strings of a given length, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    current: Vec<u8>,
    /// `prefix_max[i] = max(current[..=i])`
    prefix_max: Vec<u8>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            current: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // rightmost position that can still grow
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] <= self.prefix_max[i - 1] {
                self.current[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.current[i]);
                for j in i + 1..n {
                    self.current[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                break;
            }
        }
        Some(out)
    }
}

/// Number of blocks of a restricted growth string.
pub fn num_blocks(rgs: &[u8]) -> usize {
    rgs.iter().max().map_or(0, |&m| m as usize + 1)
}

/// Bell number `B(n)`, the number of partitions of an `n`-set.
pub fn bell(n: usize) -> u64 {
    // Bell triangle
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().expect("row is nonempty"));
        for &x in &row {
            let last = *next.last().expect("next is nonempty");
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> u64 {
    let mut table = vec![vec![0u64; k + 1]; n + 1];
    table[0][0] = 1;
    for i in 1..=n {
        for j in 1..=k.min(i) {
            table[i][j] = j as u64 * table[i - 1][j] + table[i - 1][j - 1];
        }
    }
    table[n][k]
}
