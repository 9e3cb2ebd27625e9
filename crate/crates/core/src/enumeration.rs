//! Brute-force partition generation and counting.
//!
//! Nothing here is clever on purpose: every identity in the crate is checked
//! against these counts, so they are produced by walking every partition and
//! applying the predicates from [`crate::partition`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::EnumerationError;
use crate::parallel;
use crate::partition::{check_difference, check_modulus, decompose, Partition};
use crate::qseries::shape_exponent;

/// Every partition of `n`, lexicographically decreasing: `4`, `3,1`, `2,2`, ...
pub fn partitions_of(n: u32) -> PartitionsOf {
    PartitionsOf { current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) } }
}

#[derive(Debug, Clone)]
pub struct PartitionsOf {
    current: Option<Vec<u32>>,
}

impl PartitionsOf {
    /// Replaces `parts` by its successor in decreasing lexicographic order.
    fn advance(parts: &mut Vec<u32>) -> bool {
        let ones = parts.iter().rev().take_while(|&&p| p == 1).count();
        let mut free = ones as u32;
        parts.truncate(parts.len() - ones);
        let Some(last) = parts.last_mut() else {
            return false;
        };
        *last -= 1;
        free += 1;
        let cap = *last;
        while free > 0 {
            let next = free.min(cap);
            parts.push(next);
            free -= next;
        }
        true
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.as_mut()?;
        let out = Partition::from_sorted_unchecked(current.clone());
        if !Self::advance(current) {
            self.current = None;
        }
        Some(out)
    }
}

/// Which side of a Rogers-Ramanujan-Gordon identity to count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Difference,
    Modulus,
}

impl Side {
    pub fn accepts(self, p: &Partition, k: u32, a: u32) -> bool {
        match self {
            Side::Difference => check_difference(p, k, a),
            Side::Modulus => check_modulus(p, k, a),
        }
    }
}

/// Counts of partitions by (weight, number of parts) on one side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub k: u32,
    pub a: u32,
    pub side: Side,
    pub max_weight: u32,
    /// Keyed by `(weight, parts)`; zero counts are absent.
    pub entries: BTreeMap<(u32, u32), u64>,
}

impl CountTable {
    pub fn get(&self, weight: u32, parts: u32) -> u64 {
        self.entries.get(&(weight, parts)).copied().unwrap_or(0)
    }

    /// Count at each weight `0..=max_weight`, summed over part counts.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.max_weight as usize + 1];
        for (&(n, _), &c) in &self.entries {
            out[n as usize] += c;
        }
        out
    }

    /// `n\tm\tcount` rows sorted by `(n, m)`.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("n\tm\tcount\n");
        for (&(n, m), c) in &self.entries {
            let _ = writeln!(s, "{n}\t{m}\t{c}");
        }
        s
    }

    /// `n\tcount` rows for every weight, zeros included.
    pub fn totals_tsv(&self) -> String {
        let mut s = String::from("n\tcount\n");
        for (n, c) in self.totals().iter().enumerate() {
            let _ = writeln!(s, "{n}\t{c}");
        }
        s
    }
}

pub fn count_table(k: u32, a: u32, side: Side, max_weight: u32) -> Result<CountTable, EnumerationError> {
    count_table_with_threads(k, a, side, max_weight, parallel::default_threads())
}

/// Same as [`count_table`] with an explicit worker count; one shard per weight.
pub fn count_table_with_threads(
    k: u32,
    a: u32,
    side: Side,
    max_weight: u32,
    threads: usize,
) -> Result<CountTable, EnumerationError> {
    if k < 2 || a < 1 || a > k {
        return Err(EnumerationError::BadResidue { k, a });
    }
    // Heaviest weights first so the big shards start early.
    let jobs = max_weight as usize + 1;
    let shards = parallel::map_indexed(jobs, threads, |i| {
        let n = max_weight - i as u32;
        let mut by_len: BTreeMap<u32, u64> = BTreeMap::new();
        for p in partitions_of(n) {
            if side.accepts(&p, k, a) {
                *by_len.entry(p.len() as u32).or_default() += 1;
            }
        }
        (n, by_len)
    });
    let mut entries = BTreeMap::new();
    for (n, by_len) in shards {
        for (m, c) in by_len {
            entries.insert((n, m), c);
        }
    }
    Ok(CountTable { k, a, side, max_weight, entries })
}

/// Number of partitions of `n` satisfying `pred`.
pub fn count_where(n: u32, pred: impl Fn(&Partition) -> bool) -> u64 {
    partitions_of(n).filter(|p| pred(p)).count() as u64
}

/// Number of partitions of `n` into parts accepted by `part_ok`, no value
/// repeated more than `max_multiplicity` times.
///
/// Walks one leaf per partition without ever building the ones that use a
/// rejected part, so it reaches weights where [`partitions_of`] is too slow.
pub fn count_restricted(n: u32, part_ok: impl Fn(u32) -> bool, max_multiplicity: u32) -> u64 {
    fn walk(rem: u32, max_part: u32, ok: &dyn Fn(u32) -> bool, max_mult: u32) -> u64 {
        if rem == 0 {
            return 1;
        }
        let mut total = 0;
        for v in (1..=max_part.min(rem)).rev() {
            if !ok(v) {
                continue;
            }
            let mut used = 0;
            for _ in 0..max_mult {
                used += v;
                if used > rem {
                    break;
                }
                total += walk(rem - used, v - 1, ok, max_mult);
            }
        }
        total
    }
    walk(n, n, &part_ok, max_multiplicity)
}

/// Exhaustively finds the lightest k=3 difference-valid partition (for this
/// `a`) with exactly `pairs` pairs and `singletons` singletons.
///
/// The search never looks above the closed-form weight of the conjectured
/// minimum, so it is finite. Two distinct minima is reported as an error.
pub fn minimal_with_shape(a: u32, pairs: u32, singletons: u32) -> Result<(Partition, u64), EnumerationError> {
    if !(1..=3).contains(&a) {
        return Err(EnumerationError::BadResidue { k: 3, a });
    }
    let bound = shape_exponent(a, pairs, singletons);
    let len = (2 * pairs + singletons) as usize;
    let mut search = ShapeSearch {
        a,
        pairs: pairs as usize,
        singletons: singletons as usize,
        len,
        bound,
        best: None,
        tie: None,
        ascending: Vec::with_capacity(len),
    };
    search.extend(0);
    match (search.best, search.tie) {
        (None, _) => Err(EnumerationError::NoneWithinBound { bound }),
        (Some((first, weight)), Some(second)) => Err(EnumerationError::NotUnique { weight, first, second }),
        (Some(best), None) => Ok(best),
    }
}

struct ShapeSearch {
    a: u32,
    pairs: usize,
    singletons: usize,
    len: usize,
    bound: u64,
    best: Option<(Partition, u64)>,
    tie: Option<Partition>,
    ascending: Vec<u32>,
}

impl ShapeSearch {
    /// Smallest possible sum of `remaining` further parts under the k=3 gap rule.
    fn completion_floor(&self, remaining: usize) -> u64 {
        let (mut x, mut y) = match *self.ascending.as_slice() {
            [] => (None, None),
            [y] => (None, Some(y)),
            [.., x, y] => (Some(x), Some(y)),
        };
        let mut total = 0u64;
        for _ in 0..remaining {
            let next = match (x, y) {
                (_, None) => 1,
                (None, Some(y)) => y,
                (Some(x), Some(y)) => y.max(x + 2),
            };
            total += u64::from(next);
            x = y;
            y = Some(next);
        }
        total
    }

    fn extend(&mut self, weight: u64) {
        if self.ascending.len() == self.len {
            self.consider(weight);
            return;
        }
        let remaining = self.len - self.ascending.len();
        let low = match self.ascending.as_slice() {
            [] => 1,
            [y] => *y,
            [.., x, y] => (*y).max(x + 2),
        };
        let mut w = low;
        loop {
            self.ascending.push(w);
            let floor = self.completion_floor(remaining - 1);
            let fits = weight + u64::from(w) + floor <= self.bound;
            if fits {
                self.extend(weight + u64::from(w));
            }
            self.ascending.pop();
            if !fits {
                break;
            }
            w += 1;
        }
    }

    fn consider(&mut self, weight: u64) {
        let mut parts = self.ascending.clone();
        parts.reverse();
        let Ok(p) = Partition::new(parts) else { return };
        if !check_difference(&p, 3, self.a) {
            return;
        }
        let Ok(form) = decompose(&p) else { return };
        if form.pair_count() != self.pairs || form.singleton_count() != self.singletons {
            return;
        }
        match &self.best {
            Some((_, w)) if *w < weight => {}
            Some((_, w)) if *w == weight => {
                if self.tie.is_none() {
                    self.tie = Some(p);
                }
            }
            _ => {
                self.best = Some((p, weight));
                self.tie = None;
            }
        }
    }
}
