//! Multigraded Hilbert series of `H^i_m(S/I)`.
//!
//! For every degree pattern `(F, b)` the coefficient of `H^i` is
//! `dim_K H̃_{i-|F|-1}(Δ_a; K)` at any representative `a`. The table keeps
//! the nonzero coefficients; [`SeriesExpr`] renders them as sums of
//! `t^b · Π_{j∈F} t_j^{-1}/(1 - t_j^{-1})`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::degree_complex::{delta_a, enumerate_patterns, DegreePattern};
use crate::error::Result;
use crate::invariants::krull_dim;
use crate::linalg::FieldSpec;
use crate::monomial::{MonomialIdeal, MultiDegree};
use crate::simplicial::SimplicialComplex;

/// Nonzero graded dimensions of all local cohomology modules, by pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    n: usize,
    dim: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, DegreePattern), u64>,
}

/// One `(i, pattern, coefficient)` row of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry<'a> {
    pub index: usize,
    pub pattern: &'a DegreePattern,
    pub coeff: u64,
}

impl CohomologyTable {
    /// Assembles a table from per-pattern evaluations (see
    /// [`evaluate_pattern`]). The result does not depend on the order of
    /// `evaluations`.
    pub fn from_evaluations<I>(ideal: &MonomialIdeal, field: FieldSpec, evaluations: I) -> Self
    where
        I: IntoIterator<Item = (DegreePattern, Vec<(usize, u64)>)>,
    {
        let mut entries = BTreeMap::new();
        for (p, coeffs) in evaluations {
            for (i, c) in coeffs {
                if c > 0 {
                    entries.insert((i, p.clone()), c);
                }
            }
        }
        CohomologyTable {
            n: ideal.n(),
            dim: krull_dim(ideal),
            field,
            entries,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Krull dimension of `S/I`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Rows sorted by `(i, pattern order)`.
    pub fn entries(&self) -> impl Iterator<Item = TableEntry<'_>> {
        self.entries.iter().map(|((i, p), &c)| TableEntry {
            index: *i,
            pattern: p,
            coeff: c,
        })
    }

    pub fn entries_at(&self, i: usize) -> impl Iterator<Item = TableEntry<'_>> {
        self.entries().filter(move |e| e.index == i)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Whether `H^i ≠ 0`.
    pub fn is_nonzero_at(&self, i: usize) -> bool {
        self.entries_at(i).next().is_some()
    }

    /// Stored coefficient of a pattern, zero if absent.
    pub fn coefficient(&self, i: usize, pattern: &DegreePattern) -> u64 {
        self.entries
            .get(&(i, pattern.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// `dim_K H^i_m(S/I)_a`.
    ///
    /// Degrees outside the box (`a_j ≥ ρ_j` for some `j ∉ G_a`, or
    /// `G_a ∉ Δ`) have no pattern in the table and evaluate to zero.
    pub fn coefficient_at(&self, i: usize, a: &MultiDegree) -> u64 {
        if a.n() != self.n {
            return 0;
        }
        DegreePattern::of_degree(a).map_or(0, |p| self.coefficient(i, &p))
    }

    /// Restriction to the indices `i` with `keep(i)`.
    pub fn filtered(&self, keep: impl Fn(usize) -> bool) -> CohomologyTable {
        CohomologyTable {
            entries: self
                .entries
                .iter()
                .filter(|((i, _), _)| keep(*i))
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
            ..self.clone()
        }
    }
}

/// Nonzero `(i, coefficient)` pairs of a single pattern.
pub fn evaluate_pattern(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    pattern: &DegreePattern,
) -> Vec<(usize, u64)> {
    let complex = delta_a(ideal, &pattern.representative());
    if complex.is_void() {
        return Vec::new();
    }
    let h = complex.reduced_homology(field);
    let shift = pattern.face().len() as isize + 1;
    (0..=ideal.n())
        .map(|i| (i, h.get(i as isize - shift) as u64))
        .filter(|&(_, c)| c > 0)
        .collect()
}

/// Evaluates the generalized formula over every pattern of `ideal`.
pub fn cohomology_table(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    cap: u64,
) -> Result<CohomologyTable> {
    let patterns = enumerate_patterns(ideal, cap)?;
    let evals = patterns.into_iter().map(|p| {
        let c = evaluate_pattern(ideal, field, &p);
        (p, c)
    });
    Ok(CohomologyTable::from_evaluations(ideal, field, evals))
}

/// Hochster's formula for a square-free ideal, computed from links in the
/// Stanley–Reisner complex without going through `Δ_a`.
pub fn classical_hochster(ideal: &MonomialIdeal, field: FieldSpec) -> Result<CohomologyTable> {
    let complex = SimplicialComplex::from_squarefree_ideal(ideal)?;
    let n = ideal.n();
    let evals = complex.iter().map(|f| {
        let h = complex.link(f).reduced_homology(field);
        let shift = f.len() as isize + 1;
        let coeffs = (0..=n)
            .map(|i| (i, h.get(i as isize - shift) as u64))
            .filter(|&(_, c)| c > 0)
            .collect();
        let p = DegreePattern::new(f, alloc::vec![0; n]).expect("ambient validated");
        (p, coeffs)
    });
    Ok(CohomologyTable::from_evaluations(ideal, field, evals))
}

/// `coefficient · t^b · Π_{j∈F} t_j^{-1}/(1 - t_j^{-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTerm {
    pub coeff: u64,
    pub pattern: DegreePattern,
}

impl SeriesTerm {
    /// Coefficient of `t^a` in the expansion of this term.
    pub fn coefficient_at(&self, a: &MultiDegree) -> u64 {
        let f = self.pattern.face();
        let b = self.pattern.nonneg();
        let hit = a.entries().iter().enumerate().all(|(j, &x)| {
            if f.contains(j) {
                x <= -1
            } else {
                x == i64::from(b[j])
            }
        });
        if hit {
            self.coeff
        } else {
            0
        }
    }
}

/// Closed form of `Hilb(H^i_m(S/I), t)`; terms in pattern order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SeriesExpr {
    pub terms: Vec<SeriesTerm>,
}

impl SeriesExpr {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `t^a` after expanding every geometric factor.
    pub fn coefficient_at(&self, a: &MultiDegree) -> u64 {
        self.terms.iter().map(|t| t.coefficient_at(a)).sum()
    }
}

/// `c*t1^2*t3*t2^-1/(1-t2^-1) + …`, or `0` for the zero series.
impl fmt::Display for SeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, term) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{term}")?;
        }
        Ok(())
    }
}

impl fmt::Display for SeriesTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        let face = self.pattern.face();
        for (j, &b) in self.pattern.nonneg().iter().enumerate() {
            match b {
                0 => {}
                1 => write!(f, "*t{}", j + 1)?,
                e => write!(f, "*t{}^{}", j + 1, e)?,
            }
        }
        for j in face.vertices() {
            write!(f, "*t{0}^-1/(1-t{0}^-1)", j + 1)?;
        }
        Ok(())
    }
}

/// The series of `H^i` read off the table.
pub fn hilbert_series(table: &CohomologyTable, i: usize) -> SeriesExpr {
    SeriesExpr {
        terms: table
            .entries_at(i)
            .map(|e| SeriesTerm {
                coeff: e.coeff,
                pattern: e.pattern.clone(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree_complex::DEFAULT_PATTERN_CAP;
    use crate::error::Error;
    use crate::face::Face;
    use alloc::string::ToString;
    use alloc::vec;

    const QQ: FieldSpec = FieldSpec::RATIONALS;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    fn pat(face: &[usize], b: &[u32]) -> DegreePattern {
        DegreePattern::new(Face::from_vertices(face.iter().copied()), b.to_vec()).unwrap()
    }

    fn deg(v: &[i64]) -> MultiDegree {
        MultiDegree::new(v.to_vec()).unwrap()
    }

    fn rows(t: &CohomologyTable) -> Vec<(usize, DegreePattern, u64)> {
        t.entries()
            .map(|e| (e.index, e.pattern.clone(), e.coeff))
            .collect()
    }

    fn running() -> CohomologyTable {
        cohomology_table(&ideal(2, &[&[2, 0], &[1, 1]]), QQ, DEFAULT_PATTERN_CAP).unwrap()
    }

    #[test]
    fn running_example_table() {
        let t = running();
        assert_eq!(
            rows(&t),
            vec![(0, pat(&[], &[1, 0]), 1), (1, pat(&[1], &[0, 0]), 1)]
        );
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn zero_ideal_table() {
        let t =
            cohomology_table(&MonomialIdeal::zero(3).unwrap(), QQ, DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(rows(&t), vec![(3, pat(&[0, 1, 2], &[0, 0, 0]), 1)]);
    }

    #[test]
    fn two_disjoint_edges_table() {
        let i = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        let t = cohomology_table(&i, QQ, DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(t.coefficient(1, &pat(&[], &[0, 0, 0, 0])), 1);
        assert!(!t.is_nonzero_at(0));
        assert!(t.entries_at(1).all(|e| e.pattern.face().is_empty()));
    }

    #[test]
    fn series_rendering() {
        let t = running();
        assert_eq!(hilbert_series(&t, 1).to_string(), "1*t2^-1/(1-t2^-1)");
        assert_eq!(hilbert_series(&t, 0).to_string(), "1*t1");
        assert!(hilbert_series(&t, 2).is_zero());
        assert_eq!(hilbert_series(&t, 2).to_string(), "0");

        let z =
            cohomology_table(&MonomialIdeal::zero(2).unwrap(), QQ, DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(
            hilbert_series(&z, 2).to_string(),
            "1*t1^-1/(1-t1^-1)*t2^-1/(1-t2^-1)"
        );
    }

    #[test]
    fn point_evaluation() {
        let t = running();
        assert_eq!(t.coefficient_at(1, &deg(&[0, -7])), 1);
        assert_eq!(t.coefficient_at(0, &deg(&[1, 0])), 1);
        assert_eq!(t.coefficient_at(0, &deg(&[2, 0])), 0);
        assert_eq!(t.coefficient_at(1, &deg(&[1, -1])), 0);
        assert_eq!(t.coefficient_at(1, &deg(&[-1, 0])), 0);
    }

    #[test]
    fn series_expansion_matches_table() {
        let t = running();
        for i in 0..=2 {
            let s = hilbert_series(&t, i);
            for x in -3..=3 {
                for y in -3..=3 {
                    let a = deg(&[x, y]);
                    assert_eq!(s.coefficient_at(&a), t.coefficient_at(i, &a));
                }
            }
        }
    }

    #[test]
    fn classical_examples() {
        let tri = ideal(3, &[&[1, 1, 1]]);
        let t = classical_hochster(&tri, QQ).unwrap();
        assert_eq!(t.coefficient(2, &pat(&[], &[0, 0, 0])), 1);

        let t = classical_hochster(&ideal(1, &[&[1]]), QQ).unwrap();
        assert_eq!(rows(&t), vec![(0, pat(&[], &[0]), 1)]);

        let t = classical_hochster(&MonomialIdeal::zero(3).unwrap(), QQ).unwrap();
        assert_eq!(rows(&t), vec![(3, pat(&[0, 1, 2], &[0, 0, 0]), 1)]);

        assert_eq!(
            classical_hochster(&ideal(1, &[&[2]]), QQ),
            Err(Error::NotSquareFree)
        );
    }
}
