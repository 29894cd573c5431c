//! Numerical invariants read off a [`CohomologyTable`]: dimension, depth,
//! end degrees `a_i`, initial degrees `b_i`, generalized Cohen–Macaulayness,
//! bounds on `k`-Buchsbaumness and Castelnuovo–Mumford regularity.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::degree_complex::DegreePattern;
use crate::face::Face;
use crate::hochster::CohomologyTable;
use crate::monomial::MonomialIdeal;
use crate::simplicial::grow_faces;

/// `dim S/I = dim Δ(√I) + 1`.
pub fn krull_dim(ideal: &MonomialIdeal) -> usize {
    let n = ideal.n();
    let rho = ideal.rho();
    // variables absent from every generator are cone points of Δ
    let unused = Face::from_vertices((0..n).filter(|&j| rho[j] == 0));
    let nonfaces = ideal.radical().supports();
    let largest = grow_faces(Face::full(n).difference(unused), |f| {
        nonfaces.iter().all(|w| !w.is_subset(f))
    })
    .into_iter()
    .map(Face::len)
    .max()
    .unwrap_or(0);
    largest + unused.len()
}

/// `b_i(R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InitialDegree {
    Finite(i64),
    /// `H^i = 0`.
    PlusInfinity,
    /// Nonzero in arbitrarily negative degrees (some term has `F ≠ ∅`).
    Unbounded,
}

impl fmt::Display for InitialDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialDegree::Finite(v) => write!(f, "{v}"),
            InitialDegree::PlusInfinity => f.write_str("+inf"),
            InitialDegree::Unbounded => f.write_str("-inf-unbounded"),
        }
    }
}

/// `(a_i, b_i)`; `a_i = None` stands for `-∞` (`H^i = 0`).
pub fn ai_bi(table: &CohomologyTable, i: usize) -> (Option<i64>, InitialDegree) {
    let mut top: Option<i64> = None;
    let mut bottom = InitialDegree::PlusInfinity;
    for e in table.entries_at(i) {
        let p = e.pattern;
        top = Some(top.map_or(p.top_degree(), |t| t.max(p.top_degree())));
        bottom = match (bottom, p.face().is_empty()) {
            (InitialDegree::Unbounded, _) | (_, false) => InitialDegree::Unbounded,
            (InitialDegree::PlusInfinity, true) => InitialDegree::Finite(p.top_degree()),
            (InitialDegree::Finite(b), true) => InitialDegree::Finite(b.min(p.top_degree())),
        };
    }
    (top, bottom)
}

/// Smallest `i` with `H^i ≠ 0`.
pub fn depth(table: &CohomologyTable) -> usize {
    table
        .entries()
        .map(|e| e.index)
        .min()
        .unwrap_or(table.dim())
}

/// Every `H^i` with `i < d` has finite length, i.e. all of its terms have
/// `F = ∅`.
pub fn is_generalized_cm(table: &CohomologyTable, d: usize) -> bool {
    table
        .entries()
        .filter(|e| e.index < d)
        .all(|e| e.pattern.face().is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchsbaumBounds {
    /// `max(Σρ_j - n + 1, 1)`.
    pub global: i64,
    /// `max_{i≠d}(a_i - b_i + 1)`, or 1 when `H^i = 0` for all `i ≠ d`;
    /// `None` unless the ring is generalized Cohen–Macaulay.
    pub refined: Option<i64>,
}

pub fn buchsbaum_bounds(ideal: &MonomialIdeal, table: &CohomologyTable) -> BuchsbaumBounds {
    let rho_sum: i64 = ideal.rho().iter().map(|&r| i64::from(r)).sum();
    let global = (rho_sum - ideal.n() as i64 + 1).max(1);
    let d = table.dim();
    let refined = is_generalized_cm(table, d).then(|| {
        (0..=table.n())
            .filter(|&i| i != d)
            .filter_map(|i| match ai_bi(table, i) {
                (Some(a), InitialDegree::Finite(b)) => Some(a - b + 1),
                _ => None,
            })
            .max()
            .unwrap_or(1)
    });
    BuchsbaumBounds { global, refined }
}

/// `max{i + j : H^i_m(R)_j ≠ 0}`; `None` for an empty table.
pub fn regularity(table: &CohomologyTable) -> Option<i64> {
    table
        .entries()
        .map(|e| e.index as i64 + e.pattern.top_degree())
        .max()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "N/A",
        })
    }
}

/// One inequality evaluated against a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    /// First offending `(i, pattern)`, if any.
    pub witness: Option<(usize, DegreePattern)>,
}

impl CorollaryCheck {
    fn evaluate(
        name: &'static str,
        applicable: bool,
        mut offending: impl Iterator<Item = (usize, DegreePattern)>,
    ) -> Self {
        if !applicable {
            return CorollaryCheck {
                name,
                status: CheckStatus::NotApplicable,
                witness: None,
            };
        }
        match offending.next() {
            Some(w) => CorollaryCheck {
                name,
                status: CheckStatus::Fail,
                witness: Some(w),
            },
            None => CorollaryCheck {
                name,
                status: CheckStatus::Pass,
                witness: None,
            },
        }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

/// Evaluates every vanishing statement and bound that applies to `ideal`.
pub fn check_corollaries(ideal: &MonomialIdeal, table: &CohomologyTable) -> Vec<CorollaryCheck> {
    let n = ideal.n() as i64;
    let rho_sum: i64 = ideal.rho().iter().map(|&r| i64::from(r)).sum();
    let d = table.dim();
    let gen_cm = is_generalized_cm(table, d);
    let rows = || table.entries().map(|e| (e.index, e.pattern.clone()));
    let reg = regularity(table).unwrap_or(i64::MIN);
    let bounds = buchsbaum_bounds(ideal, table);

    let refined_ok = bounds.refined.is_none_or(|r| r <= bounds.global);
    vec![
        CorollaryCheck::evaluate(
            "top_cohomology_nonzero",
            true,
            (!table.is_nonzero_at(d))
                .then(|| {
                    (
                        d,
                        DegreePattern::new(Face::EMPTY, alloc::vec![0; ideal.n()]).unwrap(),
                    )
                })
                .into_iter(),
        ),
        CorollaryCheck::evaluate(
            "a_i <= sum(rho) - n",
            true,
            rows().filter(|(_, p)| p.top_degree() > rho_sum - n),
        ),
        CorollaryCheck::evaluate(
            "squarefree: a_i <= 0",
            ideal.is_squarefree(),
            rows().filter(|(_, p)| p.top_degree() > 0),
        ),
        CorollaryCheck::evaluate(
            "genCM: b_i >= 0 for i < d",
            gen_cm,
            rows().filter(|(i, p)| *i < d && (!p.face().is_empty() || p.top_degree() < 0)),
        ),
        CorollaryCheck::evaluate(
            "genCM: H^i = 0 for reg+1 <= i < d",
            gen_cm,
            rows().filter(|(i, _)| *i < d && *i as i64 > reg),
        ),
        CorollaryCheck::evaluate(
            "genCM: refined bound <= global bound",
            gen_cm,
            rows().filter(|(i, _)| !refined_ok && *i != d).take(1),
        ),
    ]
}

/// For a ring known to have a `q`-linear resolution (supplied by the
/// caller, not computed): `H^i = 0` for `q ≤ i < d`.
pub fn check_linear_resolution_vanishing(table: &CohomologyTable, q: usize) -> CorollaryCheck {
    let d = table.dim();
    CorollaryCheck::evaluate(
        "q-linear: H^i = 0 for q <= i < d",
        is_generalized_cm(table, d),
        table
            .entries()
            .filter(|e| e.index >= q && e.index < d)
            .map(|e| (e.index, e.pattern.clone())),
    )
}

/// Everything the `invariants` command prints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub dim: usize,
    pub depth: usize,
    /// `a_i` for `i = 0..=n`; `None` is `-∞`.
    pub ai: Vec<Option<i64>>,
    pub bi: Vec<InitialDegree>,
    pub generalized_cm: bool,
    pub buchsbaum_bound_global: i64,
    pub buchsbaum_bound_refined: Option<i64>,
    pub reg: Option<i64>,
    pub checks: Vec<CorollaryCheck>,
}

impl InvariantReport {
    pub fn new(ideal: &MonomialIdeal, table: &CohomologyTable) -> Self {
        let (ai, bi) = (0..=table.n()).map(|i| ai_bi(table, i)).unzip();
        let bounds = buchsbaum_bounds(ideal, table);
        InvariantReport {
            dim: table.dim(),
            depth: depth(table),
            ai,
            bi,
            generalized_cm: is_generalized_cm(table, table.dim()),
            buchsbaum_bound_global: bounds.global,
            buchsbaum_bound_refined: bounds.refined,
            reg: regularity(table),
            checks: check_corollaries(ideal, table),
        }
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(CorollaryCheck::passed)
    }
}
