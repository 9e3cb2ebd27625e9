//! Partitions, the difference and modulus conditions of the
//! Rogers-Ramanujan-Gordon identities, and the pair/singleton split.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::PartitionError;

/// An integer partition stored as weakly decreasing positive parts.
///
/// Values are immutable: every move in [`crate::bijection`] builds a new
/// partition instead of editing one in place.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates ordering and positivity. Unsorted input is rejected, never sorted.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart { index: pos });
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDescending { index: i + 1 });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn multiplicity(&self, value: u32) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

/// Canonical text form: `14,14,11,10` and the empty string for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>().map_err(|_| PartitionError::Parse(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// `λ_i ≥ λ_{i+k-1} + 2` for every index, and at most `a - 1` parts equal to 1.
pub fn check_difference(p: &Partition, k: u32, a: u32) -> bool {
    debug_assert!(k >= 2 && (1..=k).contains(&a));
    let span = (k - 1) as usize;
    let spread_ok = p.parts.windows(span + 1).all(|w| w[0] >= w[span] + 2);
    spread_ok && p.multiplicity(1) < a as usize
}

/// No part congruent to 0 or ±a modulo 2k+1.
pub fn check_modulus(p: &Partition, k: u32, a: u32) -> bool {
    debug_assert!(k >= 2 && (1..=k).contains(&a));
    let modulus = 2 * k + 1;
    p.parts.iter().all(|&part| {
        let r = part % modulus;
        r != 0 && r != a && r != modulus - a
    })
}

/// Parts split by multiplicity: values seen twice and values seen once.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairSingletonForm {
    /// Strictly decreasing.
    pub pairs: Vec<u32>,
    /// Strictly decreasing.
    pub singletons: Vec<u32>,
}

impl PairSingletonForm {
    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn singleton_count(&self) -> usize {
        self.singletons.len()
    }

    /// Expands each pair twice and each singleton once, sorted descending.
    pub fn recompose(&self) -> Result<Partition, PartitionError> {
        for list in [&self.pairs, &self.singletons] {
            if let Some(i) = list.windows(2).position(|w| w[0] <= w[1]) {
                return Err(PartitionError::NotStrictlyDecreasing { index: i + 1 });
            }
            if list.contains(&0) {
                return Err(PartitionError::ZeroPart { index: 0 });
            }
        }
        if let Some(&v) = self.pairs.iter().find(|v| self.singletons.contains(v)) {
            return Err(PartitionError::Overlap(v));
        }
        let mut parts: Vec<u32> =
            self.pairs.iter().flat_map(|&v| [v, v]).chain(self.singletons.iter().copied()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition::from_sorted_unchecked(parts))
    }
}

/// Splits `p` into pairs and singletons. Fails on any value repeated three or more times.
pub fn decompose(p: &Partition) -> Result<PairSingletonForm, PartitionError> {
    let mut form = PairSingletonForm::default();
    let parts = p.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let run = parts[i..].iter().take_while(|&&x| x == v).count();
        match run {
            1 => form.singletons.push(v),
            2 => form.pairs.push(v),
            _ => return Err(PartitionError::MultiplicityTooHigh(v)),
        }
        i += run;
    }
    Ok(form)
}

pub fn recompose(form: &PairSingletonForm) -> Result<Partition, PartitionError> {
    form.recompose()
}
