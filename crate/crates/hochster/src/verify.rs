//! Cross-checks the formula path against the Čech oracle.

use std::fmt;

use hochster_core::{
    cech_cohomology_dims, classical_hochster, delta_a, CohomologyTable, FieldSpec, MonomialIdeal,
    MultiDegree,
};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// Table coefficient against the Čech piece.
    Formula {
        a: MultiDegree,
        i: usize,
        formula: u64,
        oracle: u64,
    },
    /// Shifted homology of `Δ_a` against the Čech piece.
    Complex {
        a: MultiDegree,
        i: usize,
        simplicial: u64,
        oracle: u64,
    },
    /// Square-free table differs from the classical one.
    Classical,
}

fn degree(a: &MultiDegree) -> String {
    let parts: Vec<String> = a.entries().iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Formula {
                a,
                i,
                formula,
                oracle,
            } => {
                write!(
                    f,
                    "mismatch a={} i={i} formula={formula} oracle={oracle}",
                    degree(a)
                )
            }
            Mismatch::Complex {
                a,
                i,
                simplicial,
                oracle,
            } => {
                write!(
                    f,
                    "mismatch a={} i={i} delta_a={simplicial} oracle={oracle}",
                    degree(a)
                )
            }
            Mismatch::Classical => f.write_str("classical = generalized: FAIL"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub mismatches: Vec<Mismatch>,
    /// Set for square-free input.
    pub classical_agrees: Option<bool>,
    pub degrees_checked: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Every `a` with `-window ≤ a_j ≤ ρ_j`, odometer order with the last
/// coordinate fastest.
pub fn window_degrees(ideal: &MonomialIdeal, window: u32) -> Vec<MultiDegree> {
    let lo = -i64::from(window);
    let hi: Vec<i64> = ideal.rho().iter().map(|&r| i64::from(r)).collect();
    let n = ideal.n();
    let mut cur = vec![lo; n];
    let mut out = Vec::new();
    'outer: loop {
        out.push(MultiDegree::new(cur.clone()).expect("length n"));
        for j in (0..n).rev() {
            if cur[j] < hi[j] {
                cur[j] += 1;
                continue 'outer;
            }
            cur[j] = lo;
        }
        return out;
    }
}

fn check_degree(ideal: &MonomialIdeal, table: &CohomologyTable, a: &MultiDegree) -> Vec<Mismatch> {
    let field = table.field();
    let oracle = cech_cohomology_dims(ideal, a, field);
    let h = delta_a(ideal, a).reduced_homology(field);
    let shift = a.negative_support().len() as isize + 1;
    let mut out = Vec::new();
    for (i, &c) in oracle.iter().enumerate() {
        let c = c as u64;
        let formula = table.coefficient_at(i, a);
        if formula != c {
            out.push(Mismatch::Formula {
                a: a.clone(),
                i,
                formula,
                oracle: c,
            });
        }
        let simplicial = h.get(i as isize - shift) as u64;
        if simplicial != c {
            out.push(Mismatch::Complex {
                a: a.clone(),
                i,
                simplicial,
                oracle: c,
            });
        }
    }
    out
}

/// Checks `table` (computed for `ideal`) on the window, and for square-free
/// input against the classical formula.
pub fn verify_table(ideal: &MonomialIdeal, table: &CohomologyTable, window: u32) -> VerifyReport {
    let degrees = window_degrees(ideal, window);
    let mut mismatches: Vec<Mismatch> = degrees
        .par_iter()
        .map(|a| check_degree(ideal, table, a))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let classical_agrees = ideal
        .is_squarefree()
        .then(|| classical_hochster(ideal, table.field()).is_ok_and(|c| &c == table));
    if classical_agrees == Some(false) {
        mismatches.push(Mismatch::Classical);
    }
    VerifyReport {
        mismatches,
        classical_agrees,
        degrees_checked: degrees.len(),
    }
}

/// Same checks with the table computed here.
pub fn verify_ideal(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    window: u32,
    cap: u64,
) -> hochster_core::Result<VerifyReport> {
    let table = crate::parallel::cohomology_table_par(ideal, field, cap, None)?;
    Ok(verify_table(ideal, &table, window))
}
