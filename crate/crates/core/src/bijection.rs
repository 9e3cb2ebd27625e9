//! Base partitions and the forward/backward moves that carry a k=3
//! difference-valid partition `λ` to a triple `(β, μ, ν)` and back.
//!
//! `β` is the lightest valid partition with the same number of pairs and
//! singletons as `λ`. `μ` holds twice the number of pair moves per pair (so
//! `Σμ` is the weight those moves contribute) and `ν` the number of singleton
//! moves per singleton, both indexed by rank from the largest element.
//!
//! The orchestration order depends on where the base puts its pairs:
//!
//! * a = 1, 3: pairs sit below the singletons. Forward pushes singletons
//!   (largest first) and then pairs (largest first); a blocked pair jumps
//!   over the run of singletons directly above it.
//! * a = 2: pairs sit above the singletons. Forward pushes pairs first and
//!   then singletons; a blocked singleton jumps over the ladder of pairs
//!   above it.
//!
//! Backward runs the same moves in the opposite order, pulling each element
//! down until it reaches its slot in `β`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::enumeration::partitions_of;
use crate::error::BijectionError;
use crate::partition::{check_difference, decompose, Partition};
use crate::qseries::shape_exponent;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Pair,
    Singleton,
}

impl Direction {
    fn as_str(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Backward => "backward",
        }
    }
}

impl MoveKind {
    fn as_str(self) -> &'static str {
        match self {
            MoveKind::Pair => "pair",
            MoveKind::Singleton => "singleton",
        }
    }
}

/// One completed move and the partition it produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub partition: Partition,
    pub kind: MoveKind,
    pub dir: Direction,
    /// Value of the moved pair or singleton before the move.
    pub from: u32,
    /// Where it landed; differs from `from` by more than one for blocked moves.
    pub to: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MoveTrace {
    pub steps: Vec<TraceStep>,
}

impl MoveTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// One line per step: `backward pair 5 4 14,14,11,10,7,7,4,4,2,1`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for step in &self.steps {
            let _ = writeln!(
                s,
                "{} {} {} {} {}",
                step.dir.as_str(),
                step.kind.as_str(),
                step.from,
                step.to,
                step.partition
            );
        }
        s
    }
}

/// The image of `λ`: shape parameters of its base partition plus the move counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MoveTriple {
    pub a: u32,
    pub pairs: u32,
    pub singletons: u32,
    /// Weakly decreasing, even, length `pairs`.
    pub mu: Vec<u32>,
    /// Weakly decreasing, length `singletons`.
    pub nu: Vec<u32>,
}

impl MoveTriple {
    pub fn validate(&self) -> Result<(), BijectionError> {
        check_residue(self.a)?;
        let malformed = |msg: String| Err(BijectionError::MalformedTriple(msg));
        if self.mu.len() != self.pairs as usize {
            return malformed(format!("mu has {} entries for {} pairs", self.mu.len(), self.pairs));
        }
        if self.nu.len() != self.singletons as usize {
            return malformed(format!("nu has {} entries for {} singletons", self.nu.len(), self.singletons));
        }
        if let Some(x) = self.mu.iter().find(|&&x| x % 2 != 0) {
            return malformed(format!("mu entry {x} is odd"));
        }
        if self.mu.windows(2).any(|w| w[0] < w[1]) {
            return malformed("mu is not weakly decreasing".into());
        }
        if self.nu.windows(2).any(|w| w[0] < w[1]) {
            return malformed("nu is not weakly decreasing".into());
        }
        Ok(())
    }

    pub fn base(&self) -> Partition {
        base_partition(self.a, self.pairs, self.singletons)
    }

    /// `|β| + Σμ + Σν`.
    pub fn weight(&self) -> u64 {
        self.base().weight()
            + self.mu.iter().map(|&x| u64::from(x)).sum::<u64>()
            + self.nu.iter().map(|&x| u64::from(x)).sum::<u64>()
    }
}

fn check_residue(a: u32) -> Result<(), BijectionError> {
    if (1..=3).contains(&a) {
        Ok(())
    } else {
        Err(BijectionError::BadResidue(a))
    }
}

/// The unique lightest k=3 partition for `a` with `m` pairs and `n` singletons.
///
/// * a = 3: singletons `2m+n, …, 2m+1` over pairs `2m-1, …, 3, 1`
/// * a = 1: singletons `2m+n+1, …, 2m+2` over pairs `2m, …, 4, 2`
/// * a = 2: pairs `n+2m, …, n+2` over singletons `n, …, 1`
pub fn base_partition(a: u32, m: u32, n: u32) -> Partition {
    let (pairs, singletons): (Vec<u32>, Vec<u32>) = match a {
        3 => ((0..m).map(|j| 2 * (m - j) - 1).collect(), (0..n).map(|j| 2 * m + n - j).collect()),
        1 => ((0..m).map(|j| 2 * (m - j)).collect(), (0..n).map(|j| 2 * m + n + 1 - j).collect()),
        2 => ((0..m).map(|j| n + 2 * (m - j)).collect(), (0..n).map(|j| n - j).collect()),
        _ => panic!("base_partition is defined for a in 1..=3, got {a}"),
    };
    let mut parts: Vec<u32> = pairs.iter().flat_map(|&v| [v, v]).chain(singletons).collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_sorted_unchecked(parts)
}

/// Multiplicities indexed by part value.
struct Multiset(Vec<u8>);

impl Multiset {
    fn of(p: &Partition) -> Self {
        let top = p.parts().first().copied().unwrap_or(0) as usize;
        let mut counts = vec![0u8; top + 1];
        for &v in p.parts() {
            counts[v as usize] = counts[v as usize].saturating_add(1);
        }
        Multiset(counts)
    }

    fn get(&self, v: i64) -> u8 {
        if v < 0 {
            return 0;
        }
        self.0.get(v as usize).copied().unwrap_or(0)
    }

    fn set(&mut self, v: i64, count: u8) {
        let v = v as usize;
        if v >= self.0.len() {
            self.0.resize(v + 1, 0);
        }
        self.0[v] = count;
    }

    fn to_partition(&self) -> Option<Partition> {
        if self.get(0) != 0 {
            return None;
        }
        let mut parts = Vec::new();
        for (v, &c) in self.0.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(v as u32, c as usize));
        }
        Some(Partition::from_sorted_unchecked(parts))
    }
}

/// A move's result together with where the moved element landed.
struct Landed {
    partition: Partition,
    to: u32,
}

fn inapplicable(kind: &'static str, value: u32, p: &Partition) -> BijectionError {
    BijectionError::MoveInapplicable { kind, value, partition: p.clone() }
}

/// Accepts `candidate` only if it is valid and keeps the pair/singleton counts of `before`.
fn accept(before: &Partition, candidate: &Multiset, a: u32) -> Option<Partition> {
    let p = candidate.to_partition()?;
    if !check_difference(&p, 3, a) {
        return None;
    }
    let (old, new) = (decompose(before).ok()?, decompose(&p).ok()?);
    (old.pair_count() == new.pair_count() && old.singleton_count() == new.singleton_count()).then_some(p)
}

fn forward_pair(p: &Partition, a: u32, b: u32) -> Result<Landed, BijectionError> {
    check_residue(a)?;
    let err = || inapplicable("forward pair", b, p);
    let ms = Multiset::of(p);
    let b = i64::from(b);
    if ms.get(b) != 2 {
        return Err(err());
    }
    let mut simple = Multiset(ms.0.clone());
    simple.set(b, 0);
    if simple.get(b + 1) == 0 {
        simple.set(b + 1, 2);
        if let Some(q) = accept(p, &simple, a) {
            return Ok(Landed { partition: q, to: (b + 1) as u32 });
        }
    }
    if a == 2 || ms.get(b + 2) != 1 {
        return Err(err());
    }
    // (b+s) + … + (b+2) + [b,b]  →  [b+s,b+s] + (b+s-2) + … + (b)
    let mut s = 2;
    while ms.get(b + s + 1) == 1 {
        s += 1;
    }
    let mut next = Multiset(ms.0.clone());
    for v in b + 2..=b + s {
        next.set(v, 0);
    }
    for v in b..=b + s - 2 {
        next.set(v, 1);
    }
    next.set(b + s, 2);
    let q = accept(p, &next, a).ok_or_else(err)?;
    Ok(Landed { partition: q, to: (b + s) as u32 })
}

fn backward_pair(p: &Partition, a: u32, value: u32) -> Result<Landed, BijectionError> {
    check_residue(a)?;
    let err = || inapplicable("backward pair", value, p);
    let ms = Multiset::of(p);
    let top = i64::from(value);
    if ms.get(top) != 2 || top < 2 {
        return Err(err());
    }
    let b = top - 1;
    let mut simple = Multiset(ms.0.clone());
    simple.set(top, 0);
    if simple.get(b) == 0 {
        simple.set(b, 2);
        if let Some(q) = accept(p, &simple, a) {
            return Ok(Landed { partition: q, to: b as u32 });
        }
    }
    if a == 2 || ms.get(b - 1) != 1 {
        return Err(err());
    }
    // [b+1,b+1] + (b-1) + … + (b-s)  →  (b+1) + (b) + … + (b-s+2) + [b-s,b-s]
    let mut s = 1;
    while ms.get(b - s - 1) == 1 {
        s += 1;
    }
    if b - s < 1 {
        return Err(err());
    }
    let mut next = Multiset(ms.0.clone());
    for v in b - s..=b + 1 {
        next.set(v, 0);
    }
    for v in b - s + 2..=b + 1 {
        next.set(v, 1);
    }
    next.set(b - s, 2);
    let q = accept(p, &next, a).ok_or_else(err)?;
    Ok(Landed { partition: q, to: (b - s) as u32 })
}

fn forward_singleton(p: &Partition, a: u32, b: u32) -> Result<Landed, BijectionError> {
    check_residue(a)?;
    let err = || inapplicable("forward singleton", b, p);
    let ms = Multiset::of(p);
    let b = i64::from(b);
    if ms.get(b) != 1 {
        return Err(err());
    }
    if ms.get(b + 1) == 0 {
        let mut simple = Multiset(ms.0.clone());
        simple.set(b, 0);
        simple.set(b + 1, 1);
        if let Some(q) = accept(p, &simple, a) {
            return Ok(Landed { partition: q, to: (b + 1) as u32 });
        }
    }
    if a != 2 || ms.get(b + 2) != 2 {
        return Err(err());
    }
    // [b+2s] + … + [b+2] + (b)  →  (b+2s+1) + [b+2s-1] + … + [b+1]
    let mut s = 1;
    while ms.get(b + 2 * s + 2) == 2 {
        s += 1;
    }
    let mut next = Multiset(ms.0.clone());
    next.set(b, 0);
    for j in 1..=s {
        next.set(b + 2 * j, 0);
    }
    for j in 1..=s {
        next.set(b + 2 * j - 1, 2);
    }
    next.set(b + 2 * s + 1, 1);
    let q = accept(p, &next, a).ok_or_else(err)?;
    Ok(Landed { partition: q, to: (b + 2 * s + 1) as u32 })
}

fn backward_singleton(p: &Partition, a: u32, value: u32) -> Result<Landed, BijectionError> {
    check_residue(a)?;
    let err = || inapplicable("backward singleton", value, p);
    let ms = Multiset::of(p);
    let top = i64::from(value);
    if ms.get(top) != 1 || top < 2 {
        return Err(err());
    }
    let b = top - 1;
    if ms.get(b) == 0 {
        let mut simple = Multiset(ms.0.clone());
        simple.set(top, 0);
        simple.set(b, 1);
        if let Some(q) = accept(p, &simple, a) {
            return Ok(Landed { partition: q, to: b as u32 });
        }
    }
    if a != 2 || ms.get(b - 1) != 2 {
        return Err(err());
    }
    // (b+1) + [b-1] + … + [b-2s+1]  →  [b] + [b-2] + … + [b-2s+2] + (b-2s)
    let mut s = 1;
    while ms.get(b - 2 * s - 1) == 2 {
        s += 1;
    }
    if b - 2 * s < 1 {
        return Err(err());
    }
    let mut next = Multiset(ms.0.clone());
    next.set(top, 0);
    for j in 1..=s {
        next.set(b - 2 * j + 1, 0);
    }
    for j in 0..s {
        next.set(b - 2 * j, 2);
    }
    next.set(b - 2 * s, 1);
    let q = accept(p, &next, a).ok_or_else(err)?;
    Ok(Landed { partition: q, to: (b - 2 * s) as u32 })
}

/// Pushes the pair `[b,b]` one step: weight +2, counts and validity preserved.
pub fn forward_pair_move(p: &Partition, a: u32, b: u32) -> Result<Partition, BijectionError> {
    forward_pair(p, a, b).map(|l| l.partition)
}

/// Pulls the pair `[value,value]` one step: weight −2. Inverse of [`forward_pair_move`].
pub fn backward_pair_move(p: &Partition, a: u32, value: u32) -> Result<Partition, BijectionError> {
    backward_pair(p, a, value).map(|l| l.partition)
}

/// Pushes the singleton `(b)` one step: weight +1.
pub fn forward_singleton_move(p: &Partition, a: u32, b: u32) -> Result<Partition, BijectionError> {
    forward_singleton(p, a, b).map(|l| l.partition)
}

/// Pulls the singleton `(value)` one step: weight −1. Inverse of [`forward_singleton_move`].
pub fn backward_singleton_move(p: &Partition, a: u32, value: u32) -> Result<Partition, BijectionError> {
    backward_singleton(p, a, value).map(|l| l.partition)
}

type MoveFn = fn(&Partition, u32, u32) -> Result<Landed, BijectionError>;

struct Walk {
    a: u32,
    current: Partition,
    trace: MoveTrace,
}

impl Walk {
    fn step(&mut self, kind: MoveKind, dir: Direction, value: u32) -> Result<u32, BijectionError> {
        let f: MoveFn = match (kind, dir) {
            (MoveKind::Pair, Direction::Forward) => forward_pair,
            (MoveKind::Pair, Direction::Backward) => backward_pair,
            (MoveKind::Singleton, Direction::Forward) => forward_singleton,
            (MoveKind::Singleton, Direction::Backward) => backward_singleton,
        };
        let landed = f(&self.current, self.a, value)?;
        self.trace.steps.push(TraceStep { partition: landed.partition.clone(), kind, dir, from: value, to: landed.to });
        self.current = landed.partition;
        Ok(landed.to)
    }

    fn values(&self, kind: MoveKind) -> Vec<u32> {
        let form = decompose(&self.current).expect("walk states are always valid");
        match kind {
            MoveKind::Pair => form.pairs,
            MoveKind::Singleton => form.singletons,
        }
    }

    /// Pulls each element of `kind` down to its slot in `targets` (both
    /// descending), smallest first. Returns the move count per rank.
    fn pull_down(&mut self, kind: MoveKind, targets: &[u32]) -> Result<Vec<u32>, BijectionError> {
        let ranks = targets.len();
        let mut counts = vec![0u32; ranks];
        for rank in (0..ranks).rev() {
            let mut value = self.values(kind)[rank];
            let target = targets[rank];
            while value > target {
                value = match self.step(kind, Direction::Backward, value) {
                    Ok(v) => v,
                    Err(_) => return Err(self.stuck()),
                };
                counts[rank] += 1;
            }
            if value != target {
                return Err(self.stuck());
            }
        }
        Ok(counts)
    }

    /// Pushes the element of rank `i` (0 = largest) `moves[i]` times, largest first.
    fn push_up(&mut self, kind: MoveKind, moves: &[u32]) -> Result<(), BijectionError> {
        for (rank, &count) in moves.iter().enumerate() {
            let mut value = self.values(kind)[rank];
            for _ in 0..count {
                value = self.step(kind, Direction::Forward, value)?;
            }
        }
        Ok(())
    }

    fn stuck(&self) -> BijectionError {
        BijectionError::Stuck { snapshot: self.current.clone(), moves: self.trace.len() }
    }
}

/// Backward moves from `lam` down to its base partition.
pub fn to_triple(a: u32, lam: &Partition) -> Result<(MoveTriple, MoveTrace), BijectionError> {
    check_residue(a)?;
    if !check_difference(lam, 3, a) {
        return Err(BijectionError::InvalidPartition(lam.clone()));
    }
    let form = decompose(lam)?;
    let (m, n) = (form.pair_count() as u32, form.singleton_count() as u32);
    let base = decompose(&base_partition(a, m, n))?;
    let mut walk = Walk { a, current: lam.clone(), trace: MoveTrace::default() };
    let (pair_moves, nu) = if a == 2 {
        let nu = walk.pull_down(MoveKind::Singleton, &base.singletons)?;
        (walk.pull_down(MoveKind::Pair, &base.pairs)?, nu)
    } else {
        let pair_moves = walk.pull_down(MoveKind::Pair, &base.pairs)?;
        (pair_moves, walk.pull_down(MoveKind::Singleton, &base.singletons)?)
    };
    if walk.current != base.recompose()? {
        return Err(walk.stuck());
    }
    let mu = pair_moves.into_iter().map(|c| 2 * c).collect();
    let triple = MoveTriple { a, pairs: m, singletons: n, mu, nu };
    Ok((triple, walk.trace))
}

/// Forward moves from the base partition of `t` out to `λ`.
pub fn from_triple(t: &MoveTriple) -> Result<(Partition, MoveTrace), BijectionError> {
    t.validate()?;
    let mut walk = Walk { a: t.a, current: t.base(), trace: MoveTrace::default() };
    let pair_moves: Vec<u32> = t.mu.iter().map(|&x| x / 2).collect();
    if t.a == 2 {
        walk.push_up(MoveKind::Pair, &pair_moves)?;
        walk.push_up(MoveKind::Singleton, &t.nu)?;
    } else {
        walk.push_up(MoveKind::Singleton, &t.nu)?;
        walk.push_up(MoveKind::Pair, &pair_moves)?;
    }
    Ok((walk.current, walk.trace))
}

fn join(values: &[u32]) -> String {
    values.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Plain-text record of one run: `start`, one line per move, `end`, and the triple.
pub fn transcript(start: &Partition, trace: &MoveTrace, end: &Partition, triple: &MoveTriple) -> String {
    let mut s = format!("start {start}\n");
    s.push_str(&trace.to_text());
    let _ = writeln!(s, "end {end}");
    let _ = writeln!(
        s,
        "triple a={} pairs={} singletons={} mu={} nu={}",
        triple.a,
        triple.pairs,
        triple.singletons,
        join(&triple.mu),
        join(&triple.nu)
    );
    s
}

/// Weakly decreasing sequences of exactly `len` entries (zeros allowed) summing to `total`.
fn padded_partitions(total: u32, len: usize) -> impl Iterator<Item = Vec<u32>> {
    partitions_of(total).filter(move |p| p.len() <= len).map(move |p| {
        let mut v = p.into_parts();
        v.resize(len, 0);
        v
    })
}

/// Every well-formed triple for `a` with `|β| + Σμ + Σν ≤ max_weight`.
pub fn triples_up_to(a: u32, max_weight: u32) -> Vec<MoveTriple> {
    let max = u64::from(max_weight);
    let mut out = Vec::new();
    for m in 0u32.. {
        if shape_exponent(a, m, 0) > max {
            break;
        }
        for n in 0u32.. {
            let base = shape_exponent(a, m, n);
            if base > max {
                break;
            }
            let budget = (max - base) as u32;
            for pair_total in 0..=budget / 2 {
                for half in padded_partitions(pair_total, m as usize) {
                    let mu: Vec<u32> = half.iter().map(|x| 2 * x).collect();
                    for nu_total in 0..=budget - 2 * pair_total {
                        for nu in padded_partitions(nu_total, n as usize) {
                            out.push(MoveTriple { a, pairs: m, singletons: n, mu: mu.clone(), nu });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Serialised form of one direction of the bijection.
#[derive(Debug, Clone, Serialize)]
pub struct TripleDocument {
    pub a: u32,
    pub pairs: u32,
    pub singletons: u32,
    pub mu: Vec<u32>,
    pub nu: Vec<u32>,
    pub lambda: Partition,
    pub base: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<MoveTrace>,
}

impl TripleDocument {
    pub fn new(triple: &MoveTriple, lambda: Partition, trace: Option<MoveTrace>) -> Self {
        TripleDocument {
            a: triple.a,
            pairs: triple.pairs,
            singletons: triple.singletons,
            mu: triple.mu.clone(),
            nu: triple.nu.clone(),
            lambda,
            base: triple.base(),
            trace,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triple JSON is always serialisable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn base_examples() {
        assert_eq!(base_partition(3, 3, 4), part("10,9,8,7,5,5,3,3,1,1"));
        assert_eq!(base_partition(2, 2, 4), part("8,8,6,6,4,3,2,1"));
        assert_eq!(base_partition(1, 1, 2), part("5,4,2,2"));
        for a in 1..=3 {
            assert_eq!(base_partition(a, 0, 0), Partition::empty());
        }
    }

    #[test]
    fn base_is_valid_with_requested_shape() {
        for a in 1..=3 {
            for m in 0..8 {
                for n in 0..8 {
                    let b = base_partition(a, m, n);
                    assert!(check_difference(&b, 3, a), "a={a} m={m} n={n}: {b}");
                    let f = decompose(&b).unwrap();
                    assert_eq!((f.pair_count() as u32, f.singleton_count() as u32), (m, n));
                    assert_eq!(b.weight(), crate::qseries::shape_exponent(a, m, n));
                }
            }
        }
    }

    #[test]
    fn forward_pair_examples() {
        let p = part("13,12,10,10,6,5,3,3,1,1");
        assert_eq!(forward_pair_move(&p, 3, 10).unwrap(), part("13,13,11,10,6,5,3,3,1,1"));
        assert_eq!(forward_pair_move(&part("5,5,3,3,1,1"), 3, 5).unwrap(), part("6,6,3,3,1,1"));
        assert_eq!(forward_pair_move(&part("8,8,6,6,4,3,2,1"), 2, 8).unwrap(), part("9,9,6,6,4,3,2,1"));
    }

    #[test]
    fn forward_pair_blocked_by_pair_is_inapplicable() {
        let err = forward_pair_move(&part("5,5,3,3"), 3, 3).unwrap_err();
        assert!(matches!(err, BijectionError::MoveInapplicable { value: 3, .. }));
        assert!(forward_pair_move(&part("5,5,3"), 3, 4).is_err());
    }

    #[test]
    fn backward_pair_examples() {
        assert_eq!(
            backward_pair_move(&part("14,14,11,10,7,7,4,4,2,1"), 3, 4).unwrap(),
            part("14,14,11,10,7,7,4,3,1,1")
        );
        assert_eq!(backward_pair_move(&part("6,6,3,3,1,1"), 3, 6).unwrap(), part("5,5,3,3,1,1"));
        assert_eq!(backward_pair_move(&part("9,9,7,7,4,3,2,1"), 2, 7).unwrap(), part("9,9,6,6,4,3,2,1"));
    }

    #[test]
    fn backward_pair_single_singleton_rewrite() {
        // one singleton directly below: [b+1,b+1] + (b-1) → (b+1) + [b-1,b-1]
        assert_eq!(backward_pair_move(&part("6,6,4"), 3, 6).unwrap(), part("6,4,4"));
        assert_eq!(forward_pair_move(&part("6,4,4"), 3, 4).unwrap(), part("6,6,4"));
    }

    #[test]
    fn backward_pair_at_floor_is_inapplicable() {
        assert!(backward_pair_move(&part("1,1"), 3, 1).is_err());
        // [2,2] → [1,1] breaks the a=1 rule on ones
        assert!(backward_pair_move(&part("2,2"), 1, 2).is_err());
        // pair directly below blocks the pull
        assert!(backward_pair_move(&part("3,3,1,1"), 3, 3).is_err());
    }

    #[test]
    fn forward_singleton_examples() {
        assert_eq!(forward_singleton_move(&part("10,9,8,7,5,5,3,3,1,1"), 3, 10).unwrap(), part("11,9,8,7,5,5,3,3,1,1"));
        assert_eq!(forward_singleton_move(&part("9,9,7,7,5,3,2,1"), 2, 5).unwrap(), part("10,8,8,6,6,3,2,1"));
        assert!(forward_singleton_move(&part("5,4,2,2"), 1, 4).is_err());
        assert_eq!(forward_singleton_move(&part("5,4,2,2"), 1, 5).unwrap(), part("6,4,2,2"));
    }

    #[test]
    fn backward_singleton_examples() {
        assert_eq!(
            backward_singleton_move(&part("13,12,8,7,5,5,3,3,1,1"), 3, 12).unwrap(),
            part("13,11,8,7,5,5,3,3,1,1")
        );
        assert_eq!(backward_singleton_move(&part("17,13,8,6,6,4,4,1"), 2, 8).unwrap(), part("17,13,7,7,5,5,3,1"));
        assert_eq!(
            backward_singleton_move(&part("11,9,8,7,5,5,3,3,1,1"), 3, 11).unwrap(),
            part("10,9,8,7,5,5,3,3,1,1")
        );
    }

    #[test]
    fn moves_reject_missing_elements_and_bad_residue() {
        let p = part("10,9,8,7,5,5,3,3,1,1");
        assert!(forward_pair_move(&p, 3, 9).is_err());
        assert!(forward_singleton_move(&p, 3, 5).is_err());
        assert!(matches!(forward_pair_move(&p, 4, 5), Err(BijectionError::BadResidue(4))));
    }

    #[test]
    fn to_triple_examples() {
        let (t, trace) = to_triple(3, &part("14,14,11,10,7,7,5,5,2,1")).unwrap();
        assert_eq!((t.pairs, t.singletons), (3, 4));
        assert_eq!(t.mu, [10, 4, 4]);
        assert_eq!(t.nu, [3, 3, 0, 0]);
        assert_eq!(trace.len(), 15);

        let (t, _) = to_triple(2, &part("17,13,9,6,6,4,4,1")).unwrap();
        assert_eq!(t.mu, [2, 2]);
        assert_eq!(t.nu, [9, 6, 3, 0]);
    }

    #[test]
    fn from_triple_examples() {
        let t = MoveTriple { a: 3, pairs: 3, singletons: 4, mu: vec![10, 4, 4], nu: vec![3, 3, 0, 0] };
        assert_eq!(from_triple(&t).unwrap().0, part("14,14,11,10,7,7,5,5,2,1"));
        let t = MoveTriple { a: 2, pairs: 2, singletons: 4, mu: vec![2, 2], nu: vec![9, 6, 3, 0] };
        let (lam, trace) = from_triple(&t).unwrap();
        assert_eq!(lam, part("17,13,9,6,6,4,4,1"));
        assert_eq!(trace.len(), 20);
    }

    #[test]
    fn base_maps_to_zero_triple() {
        for a in 1..=3 {
            let (m, n) = (2, 3);
            let base = base_partition(a, m, n);
            let (t, trace) = to_triple(a, &base).unwrap();
            assert_eq!(t.mu, [0, 0]);
            assert_eq!(t.nu, [0, 0, 0]);
            assert!(trace.is_empty());
            assert_eq!(from_triple(&t).unwrap(), (base, MoveTrace::default()));
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(matches!(to_triple(3, &part("3,3,3")), Err(BijectionError::InvalidPartition(_))));
        assert!(matches!(to_triple(1, &part("1")), Err(BijectionError::InvalidPartition(_))));
        let odd = MoveTriple { a: 3, pairs: 1, singletons: 0, mu: vec![3], nu: vec![] };
        assert!(matches!(from_triple(&odd), Err(BijectionError::MalformedTriple(_))));
        let short = MoveTriple { a: 3, pairs: 2, singletons: 0, mu: vec![2], nu: vec![] };
        assert!(matches!(from_triple(&short), Err(BijectionError::MalformedTriple(_))));
        let rising = MoveTriple { a: 3, pairs: 0, singletons: 2, mu: vec![], nu: vec![0, 1] };
        assert!(matches!(from_triple(&rising), Err(BijectionError::MalformedTriple(_))));
    }

    #[test]
    fn document_json_layout() {
        let (t, trace) = to_triple(3, &part("2,2")).unwrap();
        let doc = TripleDocument::new(&t, part("2,2"), Some(trace));
        assert_eq!(
            doc.to_json(),
            r#"{"a":3,"pairs":1,"singletons":0,"mu":[2],"nu":[],"lambda":[2,2],"base":[1,1],"trace":[{"partition":[1,1],"kind":"pair","dir":"backward","from":2,"to":1}]}"#
        );
    }
}
