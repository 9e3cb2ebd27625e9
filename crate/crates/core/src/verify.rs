//! Named verification suites and the report they produce.
//!
//! Every check compares two independently computed objects (a series against
//! brute-force counts, a product against a sum, a forward pass against a
//! backward pass) and records a pass or fail with a short summary of both.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bijection::{base_partition, from_triple, to_triple, triples_up_to};
use crate::enumeration::{count_restricted, count_table_with_threads, minimal_with_shape, partitions_of, Side};
use crate::golden::CASES;
use crate::parallel::map_indexed;
use crate::partition::check_difference;
use crate::qseries::{
    andrews_sum_k3, product_side, series_from_counts, shape_exponent, t_series, QPolynomial, XQSeries,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub params: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    /// Wall time; kept out of serialised reports so they stay reproducible.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub overall: Status,
}

impl VerificationReport {
    fn new(suite: &str, records: Vec<CheckRecord>) -> Self {
        let overall = Status::from_bool(records.iter().all(|r| r.status == Status::Pass));
        VerificationReport { suite: suite.to_string(), records, overall }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report JSON is always serialisable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            let _ = writeln!(
                s,
                "{} {} [{}] expected: {} | actual: {}",
                r.status.label(),
                r.name,
                r.params,
                r.expected,
                r.actual
            );
        }
        let _ = writeln!(s, "{} suite {}", self.overall.label(), self.suite);
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem,
    Rrg,
    Andrews,
    Bijection,
    Base,
    Examples,
    Sanity,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Sanity, Suite::Examples, Suite::Base, Suite::Bijection, Suite::Theorem, Suite::Rrg, Suite::Andrews];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem => "theorem",
            Suite::Rrg => "rrg",
            Suite::Andrews => "andrews",
            Suite::Bijection => "bijection",
            Suite::Base => "base",
            Suite::Examples => "examples",
            Suite::Sanity => "sanity",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Bounds for the suites; `None` picks the suite's default.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub a: Option<u32>,
    pub qmax: Option<usize>,
    pub max_weight: Option<u32>,
    pub max_shape: Option<u32>,
    pub threads: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { a: None, qmax: None, max_weight: None, max_shape: None, threads: 1 }
    }
}

pub const DEFAULT_THEOREM_QMAX: usize = 50;
pub const DEFAULT_SERIES_QMAX: usize = 200;
pub const DEFAULT_SANITY_QMAX: usize = 100;
pub const DEFAULT_MAX_WEIGHT: u32 = 35;
pub const DEFAULT_MAX_SHAPE: u32 = 6;

impl VerifyOptions {
    fn residues(&self) -> Vec<u32> {
        match self.a {
            Some(a) => vec![a],
            None => vec![1, 2, 3],
        }
    }
}

fn timed(
    name: impl Into<String>,
    params: impl Into<String>,
    f: impl FnOnce() -> (bool, String, String),
) -> CheckRecord {
    let start = Instant::now();
    let (ok, expected, actual) = f();
    CheckRecord {
        name: name.into(),
        params: params.into(),
        status: Status::from_bool(ok),
        expected,
        actual,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn equal_counts(expected: u64, actual: u64) -> (bool, String, String) {
    (expected == actual, expected.to_string(), actual.to_string())
}

fn compare_series(left: &XQSeries, right: &XQSeries) -> (bool, String, String) {
    let diff = left.mismatches(right);
    let cells = left.nonzero_terms().count();
    let expected = format!("{cells} nonzero cells, 0 mismatching");
    let actual = match diff.first() {
        None => expected.clone(),
        Some((x, q, l, r)) => format!("{} mismatching cells, first x^{x} q^{q}: {l} vs {r}", diff.len()),
    };
    (diff.is_empty() && cells > 0, expected, actual)
}

fn compare_q(left: &QPolynomial, right: &QPolynomial) -> (bool, String, String) {
    compare_series(&XQSeries::from_q(left.clone()), &XQSeries::from_q(right.clone()))
}

/// Runs `suite`. Fails only on an out-of-range `a`.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<VerificationReport, String> {
    if let Some(a) = opts.a {
        if !(1..=3).contains(&a) {
            return Err(format!("a must be 1, 2 or 3, got {a}"));
        }
    }
    let records = match suite {
        Suite::All => Suite::ALL.iter().flat_map(|&s| records_for(s, opts)).collect(),
        s => records_for(s, opts),
    };
    Ok(VerificationReport::new(suite.name(), records))
}

fn records_for(suite: Suite, opts: &VerifyOptions) -> Vec<CheckRecord> {
    match suite {
        Suite::Theorem => theorem(opts),
        Suite::Rrg => rrg(opts),
        Suite::Andrews => andrews(opts),
        Suite::Bijection => bijection(opts),
        Suite::Base => base(opts),
        Suite::Examples => examples(opts),
        Suite::Sanity => sanity(opts),
        Suite::All => unreachable!("expanded by run"),
    }
}

fn theorem(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let qmax = opts.qmax.unwrap_or(DEFAULT_THEOREM_QMAX);
    opts.residues()
        .into_iter()
        .map(|a| {
            timed("t-series equals difference-side counts", format!("a={a} qmax={qmax}"), || {
                let table =
                    count_table_with_threads(3, a, Side::Difference, qmax as u32, opts.threads).expect("a is in range");
                compare_series(&series_from_counts(&table), &t_series(a, qmax, qmax))
            })
        })
        .collect()
}

fn rrg(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let qmax = opts.qmax.unwrap_or(DEFAULT_SERIES_QMAX);
    opts.residues()
        .into_iter()
        .map(|a| {
            timed("t-series at x=1 equals product side", format!("a={a} qmax={qmax}"), || {
                compare_q(&product_side(3, a, qmax), &t_series(a, qmax, qmax).at_x_one())
            })
        })
        .collect()
}

fn andrews(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let qmax = opts.qmax.unwrap_or(DEFAULT_SERIES_QMAX);
    let params = format!("a=3 qmax={qmax}");
    vec![
        timed("andrews sum equals product side", params.clone(), || {
            compare_q(&product_side(3, 3, qmax), &andrews_sum_k3(qmax))
        }),
        timed("andrews sum equals t-series at x=1", params, || {
            compare_q(&t_series(3, qmax, qmax).at_x_one(), &andrews_sum_k3(qmax))
        }),
    ]
}

/// First failure description, if any, for one weight shard of the roundtrip.
fn roundtrip_weight(a: u32, n: u32) -> (u64, Option<String>) {
    let mut seen = 0;
    for lam in partitions_of(n).filter(|p| check_difference(p, 3, a)) {
        seen += 1;
        let fail = |why: String| (seen, Some(format!("{lam}: {why}")));
        let (t, trace) = match to_triple(a, &lam) {
            Ok(v) => v,
            Err(e) => return fail(e.to_string()),
        };
        if !t.mu.windows(2).all(|w| w[0] >= w[1]) || !t.nu.windows(2).all(|w| w[0] >= w[1]) {
            return fail(format!("mu/nu not weakly decreasing: {:?} {:?}", t.mu, t.nu));
        }
        if t.weight() != lam.weight() {
            return fail(format!("weight ledger {} != {}", t.weight(), lam.weight()));
        }
        if let Some(step) = trace.steps.iter().find(|s| !check_difference(&s.partition, 3, a)) {
            return fail(format!("invalid snapshot {}", step.partition));
        }
        match from_triple(&t) {
            Ok((back, _)) if back == lam => {}
            Ok((back, _)) => return fail(format!("came back as {back}")),
            Err(e) => return fail(e.to_string()),
        }
    }
    (seen, None)
}

fn bijection(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let max_weight = opts.max_weight.unwrap_or(DEFAULT_MAX_WEIGHT);
    let mut out = Vec::new();
    for a in opts.residues() {
        let params = format!("a={a} max_weight={max_weight}");
        out.push(timed("backward then forward is the identity", params.clone(), || {
            let shards = map_indexed(max_weight as usize + 1, opts.threads, |i| roundtrip_weight(a, i as u32));
            let total: u64 = shards.iter().map(|s| s.0).sum();
            let failure = shards.into_iter().find_map(|s| s.1);
            let actual = failure.unwrap_or_else(|| format!("{total} partitions round-tripped"));
            let ok = actual.ends_with("round-tripped");
            (ok, format!("{total} partitions round-tripped"), actual)
        }));
        out.push(timed("forward then backward is the identity", params, || {
            let triples = triples_up_to(a, max_weight);
            let chunk = 256;
            let failures = map_indexed(triples.len().div_ceil(chunk), opts.threads, |i| {
                triples[i * chunk..((i + 1) * chunk).min(triples.len())].iter().find_map(|t| {
                    let lam = match from_triple(t) {
                        Ok((lam, _)) => lam,
                        Err(e) => return Some(format!("{t:?}: {e}")),
                    };
                    match to_triple(a, &lam) {
                        Ok((back, _)) if &back == t => None,
                        Ok((back, _)) => Some(format!("{t:?} came back as {back:?}")),
                        Err(e) => Some(format!("{t:?} via {lam}: {e}")),
                    }
                })
            });
            let expected = format!("{} triples round-tripped", triples.len());
            match failures.into_iter().flatten().next() {
                None => (true, expected.clone(), expected),
                Some(f) => (false, expected, f),
            }
        }));
    }
    out
}

fn base(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let max_shape = opts.max_shape.unwrap_or(DEFAULT_MAX_SHAPE);
    opts.residues()
        .into_iter()
        .map(|a| {
            timed("base partition is the unique minimum", format!("a={a} m,n<={max_shape}"), || {
                let shapes: Vec<(u32, u32)> =
                    (0..=max_shape).flat_map(|m| (0..=max_shape).map(move |n| (m, n))).collect();
                let results = map_indexed(shapes.len(), opts.threads, |i| {
                    let (m, n) = shapes[i];
                    let want = base_partition(a, m, n);
                    match minimal_with_shape(a, m, n) {
                        Ok((p, w)) if p == want && w == shape_exponent(a, m, n) => None,
                        Ok((p, w)) => Some(format!("m={m} n={n}: found {p} (weight {w}), base is {want}")),
                        Err(e) => Some(format!("m={m} n={n}: {e}")),
                    }
                });
                let expected = format!("{} shapes certified", shapes.len());
                match results.into_iter().flatten().next() {
                    None => (true, expected.clone(), expected),
                    Some(f) => (false, expected, f),
                }
            })
        })
        .collect()
}

fn examples(opts: &VerifyOptions) -> Vec<CheckRecord> {
    CASES
        .iter()
        .filter(|c| opts.a.is_none_or(|a| a == c.a))
        .map(|case| {
            timed(format!("golden trace {}", case.name), format!("a={}", case.a), || {
                let lines = case.expected.lines().count();
                let expected = format!("fixture ({lines} lines)");
                match case.render() {
                    Ok(text) if text == case.expected => (true, expected.clone(), expected),
                    Ok(text) => {
                        let at = text.lines().zip(case.expected.lines()).position(|(l, r)| l != r);
                        (
                            false,
                            expected,
                            format!("differs at line {}", at.map_or(lines.min(text.lines().count()), |i| i) + 1),
                        )
                    }
                    Err(e) => (false, expected, e.to_string()),
                }
            })
        })
        .collect()
}

fn sanity(opts: &VerifyOptions) -> Vec<CheckRecord> {
    let qmax = opts.qmax.unwrap_or(DEFAULT_SANITY_QMAX) as u32;
    let odd = |n| count_restricted(n, |v| v % 2 == 1, u32::MAX);
    let distinct = |n| count_restricted(n, |_| true, 1);
    let both_sides = |k: u32, a: u32, want: u64| {
        timed("difference and modulus sides at n=9", format!("k={k} a={a}"), move || {
            let diff = count_table_with_threads(k, a, Side::Difference, 9, 1).expect("valid").totals()[9];
            let modulus = count_table_with_threads(k, a, Side::Modulus, 9, 1).expect("valid").totals()[9];
            (diff == want && modulus == want, format!("{want} and {want}"), format!("{diff} and {modulus}"))
        })
    };
    vec![
        timed("p(4)", "n=4", || equal_counts(5, partitions_of(4).count() as u64)),
        timed("odd-part partitions of 5", "n=5", || equal_counts(3, odd(5))),
        timed("distinct-part partitions of 5", "n=5", || equal_counts(3, distinct(5))),
        timed("odd parts equinumerous with distinct parts", format!("n<={qmax}"), || {
            let bad = map_indexed(qmax as usize + 1, opts.threads, |n| {
                let (o, d) = (odd(n as u32), distinct(n as u32));
                (o != d).then(|| format!("n={n}: {o} vs {d}"))
            });
            match bad.into_iter().flatten().next() {
                None => (true, "equal at every n".into(), "equal at every n".into()),
                Some(f) => (false, "equal at every n".into(), f),
            }
        }),
        both_sides(2, 2, 5),
        both_sides(2, 1, 3),
        both_sides(3, 2, 10),
    ]
}
