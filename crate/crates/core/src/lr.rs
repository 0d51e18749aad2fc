//! Littlewood–Richardson coefficients by tableau enumeration.
//!
//! An LR tableau of shape `nu / a` and content `b` is built row by row. Row `r`
//! is weakly increasing, so it is determined by the counts `m[r][i]` of each
//! value `i`. The constraints on these counts are
//!
//! * columns strictly increase:
//!   `a[r] + sum_{j<=i} m[r][j] <= a[r-1] + sum_{j<i} m[r-1][j]`;
//! * the reverse reading word is a lattice word: once the `i`s of row `r` are
//!   read, their running total may not exceed the running total of `i-1`
//!   through row `r-1`;
//! * the total number of `i`s is `b[i]`.

use std::collections::BTreeMap;

use crate::weight::Partition;

/// Multiset of partitions with multiplicities.
pub type PartitionMultiset = BTreeMap<Partition, u64>;

/// All `c^nu_{a,b}`, i.e. the decomposition of `s_a * s_b`.
pub fn littlewood_richardson(a: &Partition, b: &Partition) -> PartitionMultiset {
    littlewood_richardson_bounded(a, b, usize::MAX)
}

/// As [`littlewood_richardson`], keeping only `nu` with at most `max_rows`
/// parts (the Schur functors that survive on a space of dimension `max_rows`).
pub fn littlewood_richardson_bounded(
    a: &Partition,
    b: &Partition,
    max_rows: usize,
) -> PartitionMultiset {
    let mut out = PartitionMultiset::new();
    if a.length() > max_rows {
        return out;
    }
    let rows = (a.length() + b.length()).min(max_rows);
    let mut search = Search {
        a: a.parts(),
        content: b.parts(),
        rows,
        remaining: b.parts().to_vec(),
        cumulative: vec![0; b.length()],
        prev_counts: Vec::new(),
        shape: Vec::new(),
        out: &mut out,
    };
    search.row(0);
    out
}

struct Search<'a> {
    a: &'a [u32],
    content: &'a [u32],
    rows: usize,
    remaining: Vec<u32>,
    // occurrences of each value in rows strictly above the current one
    cumulative: Vec<u32>,
    prev_counts: Vec<u32>,
    shape: Vec<u32>,
    out: &'a mut PartitionMultiset,
}

impl Search<'_> {
    fn a_part(&self, r: usize) -> u32 {
        self.a.get(r).copied().unwrap_or(0)
    }

    fn row(&mut self, r: usize) {
        if self.remaining.iter().all(|&x| x == 0) {
            let mut nu = self.shape.clone();
            nu.extend(self.a.iter().skip(r).copied());
            *self.out.entry(Partition::from_sorted(nu)).or_insert(0) += 1;
            return;
        }
        if r >= self.rows {
            return;
        }
        let mut counts = vec![0u32; self.content.len()];
        self.value(r, 0, 0, &mut counts);
    }

    fn value(&mut self, r: usize, i: usize, used: u32, counts: &mut Vec<u32>) {
        let top = self.content.len().min(r + 1);
        if i == top {
            let width = self.a_part(r) + used;
            let saved_prev = std::mem::replace(&mut self.prev_counts, counts.clone());
            for (c, m) in self.cumulative.iter_mut().zip(counts.iter()) {
                *c += m;
            }
            self.shape.push(width);
            self.row(r + 1);
            self.shape.pop();
            for (c, m) in self.cumulative.iter_mut().zip(counts.iter()) {
                *c -= m;
            }
            self.prev_counts = saved_prev;
            return;
        }
        let mut max = self.remaining[i];
        if r > 0 {
            let above: u32 = self.a_part(r - 1) + self.prev_counts[..i].iter().sum::<u32>();
            let here = self.a_part(r) + used;
            max = max.min(above.saturating_sub(here));
            if above < here {
                return;
            }
        }
        if i > 0 {
            // lattice: cumulative i's (including this row) <= cumulative (i-1)'s above
            let allowed = self.cumulative[i - 1].saturating_sub(self.cumulative[i]);
            max = max.min(allowed);
        }
        for m in 0..=max {
            counts[i] = m;
            self.remaining[i] -= m;
            self.value(r, i + 1, used + m, counts);
            self.remaining[i] += m;
        }
        counts[i] = 0;
    }
}
