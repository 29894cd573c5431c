//! Pattern evaluation fanned out over a rayon pool.
//!
//! Results are collected in pattern order and the table is keyed by
//! `(i, pattern)`, so output does not depend on the thread count.

use hochster_core::{
    enumerate_patterns, evaluate_pattern, CohomologyTable, FieldSpec, MonomialIdeal, Result,
};
use rayon::prelude::*;

/// `threads = None` uses the global pool.
pub fn cohomology_table_par(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cap: u64,
    threads: Option<usize>,
) -> Result<CohomologyTable> {
    let patterns = enumerate_patterns(ideal, cap)?;
    let run = || {
        patterns
            .into_par_iter()
            .map(|p| {
                let c = evaluate_pattern(ideal, field, &p);
                (p, c)
            })
            .collect::<Vec<_>>()
    };
    let evals = match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    };
    Ok(CohomologyTable::from_evaluations(ideal, field, evals))
}
