//! Exact tools for k=3 Rogers-Ramanujan-Gordon partitions: brute-force
//! counting, truncated q-series, and the base-partition/move bijection
//! `λ ↔ (β, μ, ν)` behind the two-variable sum sides `T_1`, `T_2`, `T_3`.

pub mod bijection;
pub mod enumeration;
pub mod error;
pub mod golden;
pub mod parallel;
pub mod partition;
pub mod qseries;
pub mod verify;

pub use bijection::{
    backward_pair_move, backward_singleton_move, base_partition, forward_pair_move, forward_singleton_move,
    from_triple, to_triple, MoveTrace, MoveTriple,
};
pub use enumeration::{count_table, count_table_with_threads, minimal_with_shape, partitions_of, CountTable, Side};
pub use error::{BijectionError, EnumerationError, PartitionError, SeriesError};
pub use partition::{check_difference, check_modulus, decompose, recompose, PairSingletonForm, Partition};
pub use qseries::{
    andrews_sum_k3, inv_pochhammer, poly_mul, product_side, series_from_counts, t_series, QPolynomial, XQSeries,
};
pub use verify::{run as run_suite, Suite, VerificationReport, VerifyOptions};
