//! The exponent substitution `x_j ↦ x_j^{e_j}` and its predicted effect on
//! local cohomology of square-free Buchsbaum rings.
//!
//! Only the action on ideals and on Hilbert series is implemented; the
//! functor on modules is not.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::degree_complex::{DegreePattern, DEFAULT_PATTERN_CAP};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::hochster::{cohomology_table, CohomologyTable, SeriesExpr, SeriesTerm};
use crate::invariants::{ai_bi, buchsbaum_bounds, is_generalized_cm, InitialDegree};
use crate::monomial::{Monomial, MonomialIdeal};

/// Exponents `e_j ≥ 1` of `x_j ↦ x_j^{e_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubstitutionMap {
    exponents: Vec<u32>,
}

impl SubstitutionMap {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() || exponents.len() > 64 {
            return Err(Error::AmbientOutOfRange(exponents.len()));
        }
        if exponents.contains(&0) {
            return Err(Error::BadSubstitution);
        }
        Ok(SubstitutionMap { exponents })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(alloc::vec![1; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    /// `Σ e_j - n + 1`.
    pub fn span_bound(&self) -> i64 {
        self.exponents.iter().map(|&e| i64::from(e)).sum::<i64>() - self.n() as i64 + 1
    }
}

/// `φ(I)`: every generator's exponents scaled coordinatewise.
pub fn phi_ideal(ideal: &MonomialIdeal, phi: &SubstitutionMap) -> Result<MonomialIdeal> {
    if ideal.n() != phi.n() {
        return Err(Error::LengthMismatch {
            expected: ideal.n(),
            found: phi.n(),
        });
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let exps = g
                .exponents()
                .iter()
                .zip(phi.exponents())
                .map(|(&a, &e)| a * e)
                .collect();
            Monomial::new(exps)
        })
        .collect::<Result<Vec<_>>>()?;
    MonomialIdeal::new(ideal.n(), gens)
}

/// Predicted series of `H^i(S/φ(I))` for `i < d`: `m_i` copies of
/// `S/(x_1^{e_1}, …, x_n^{e_n})`, i.e. coefficient `m_i` at every pattern
/// `(∅, b)` with `b_j < e_j`.
///
/// `multiplicities[i]` is `dim_K H^i(S/I)` for the square-free input;
/// zero multiplicities produce no series.
pub fn expected_phi_series(
    multiplicities: &[u64],
    phi: &SubstitutionMap,
) -> BTreeMap<usize, SeriesExpr> {
    let n = phi.n();
    let mut boxes: Vec<Vec<u32>> = alloc::vec![Vec::new()];
    for j in 0..n {
        boxes = boxes
            .into_iter()
            .flat_map(|prefix| {
                (0..phi.exponents[j]).map(move |b| {
                    let mut v = prefix.clone();
                    v.push(b);
                    v
                })
            })
            .collect();
    }
    multiplicities
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(i, &m)| {
            let terms = boxes
                .iter()
                .map(|b| SeriesTerm {
                    coeff: m,
                    pattern: DegreePattern::new(Face::EMPTY, b.clone()).expect("ambient validated"),
                })
                .collect();
            (i, SeriesExpr { terms })
        })
        .collect()
}

/// `dim_K H^i` for `i < d`, provided every such term sits at `(∅, 0)`,
/// which is what a square-free Buchsbaum table looks like.
pub fn degree_zero_multiplicities(table: &CohomologyTable) -> Result<Vec<u64>> {
    let d = table.dim();
    let mut m = alloc::vec![0u64; d];
    for e in table.entries().filter(|e| e.index < d) {
        if !e.pattern.face().is_empty() || e.pattern.nonneg().iter().any(|&b| b != 0) {
            return Err(Error::StrictnessPrecondition(
                "cohomology below the top index is not concentrated in degree 0",
            ));
        }
        m[e.index] += e.coeff;
    }
    Ok(m)
}

/// Result of comparing the degree span of `H^i(S/φ(I))` with the global
/// Buchsbaum bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictnessReport {
    /// Smallest `i < d` with `H^i(S/I) ≠ 0`.
    pub index: usize,
    /// `a_i - b_i + 1` for `S/φ(I)`.
    pub span: i64,
    /// `Σ e_j - n + 1`.
    pub span_bound: i64,
    /// Global Buchsbaum bound of `φ(I)`.
    pub global_bound: i64,
}

impl StrictnessReport {
    /// The bound is attained by the degree span.
    pub fn attained(&self) -> bool {
        self.span == self.span_bound && self.span == self.global_bound
    }
}

/// Checks at the Hilbert-series level that `φ(I)` attains the global
/// Buchsbaum bound, for a square-free generalized Cohen–Macaulay `I` whose
/// lower cohomology is concentrated in degree 0.
pub fn strictness_witness(
    ideal: &MonomialIdeal,
    phi: &SubstitutionMap,
    phi_table: &CohomologyTable,
) -> Result<StrictnessReport> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquareFree);
    }
    let base = cohomology_table(ideal, phi_table.field(), DEFAULT_PATTERN_CAP)?;
    if !is_generalized_cm(&base, base.dim()) {
        return Err(Error::StrictnessPrecondition(
            "input is not generalized Cohen-Macaulay",
        ));
    }
    let m = degree_zero_multiplicities(&base)?;
    let index = m
        .iter()
        .position(|&x| x > 0)
        .ok_or(Error::StrictnessPrecondition(
            "no nonzero cohomology below the top index",
        ))?;
    let span = match ai_bi(phi_table, index) {
        (Some(a), InitialDegree::Finite(b)) => a - b + 1,
        _ => {
            return Err(Error::StrictnessPrecondition(
                "substituted cohomology is not of finite length",
            ))
        }
    };
    let phi_ideal = phi_ideal(ideal, phi)?;
    Ok(StrictnessReport {
        index,
        span,
        span_bound: phi.span_bound(),
        global_bound: buchsbaum_bounds(&phi_ideal, phi_table).global,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::FieldSpec;
    use alloc::vec;

    #[test]
    fn phi_scales_generators() {
        let i = fixtures::two_disjoint_edges();
        let phi = SubstitutionMap::new(vec![2, 1, 1, 1]).unwrap();
        let want = MonomialIdeal::from_exponents(
            4,
            &[[2u32, 0, 1, 0], [2, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]],
        )
        .unwrap();
        assert_eq!(phi_ideal(&i, &phi).unwrap(), want);
        assert_eq!(
            phi_ideal(&i, &SubstitutionMap::identity(4).unwrap()).unwrap(),
            i
        );

        let x = MonomialIdeal::from_exponents(1, &[[1u32]]).unwrap();
        let cube = MonomialIdeal::from_exponents(1, &[[3u32]]).unwrap();
        assert_eq!(
            phi_ideal(&x, &SubstitutionMap::new(vec![3]).unwrap()).unwrap(),
            cube
        );
    }

    #[test]
    fn map_validation() {
        assert_eq!(
            SubstitutionMap::new(vec![1, 0]),
            Err(Error::BadSubstitution)
        );
        assert!(matches!(
            phi_ideal(
                &fixtures::two_disjoint_edges(),
                &SubstitutionMap::identity(3).unwrap()
            ),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn expected_series_examples() {
        let phi = SubstitutionMap::new(vec![2, 1, 1, 1]).unwrap();
        let s = expected_phi_series(&[0, 1], &phi);
        assert_eq!(s.len(), 1);
        let got: Vec<(u64, Vec<u32>)> = s[&1]
            .terms
            .iter()
            .map(|t| (t.coeff, t.pattern.nonneg().to_vec()))
            .collect();
        assert_eq!(got, vec![(1, vec![0, 0, 0, 0]), (1, vec![1, 0, 0, 0])]);

        let s = expected_phi_series(&[3], &SubstitutionMap::identity(3).unwrap());
        assert_eq!(s[&0].terms.len(), 1);
        assert_eq!(s[&0].terms[0].coeff, 3);

        let s = expected_phi_series(&[0, 2], &SubstitutionMap::new(vec![2, 2]).unwrap());
        assert_eq!(s[&1].terms.len(), 4);
        assert!(s[&1].terms.iter().all(|t| t.coeff == 2));
    }

    #[test]
    fn strictness_on_edges() {
        let i = fixtures::two_disjoint_edges();
        for (e1, span) in [(1u32, 1i64), (2, 2), (3, 3)] {
            let phi = SubstitutionMap::new(vec![e1, 1, 1, 1]).unwrap();
            let pi = phi_ideal(&i, &phi).unwrap();
            let t = cohomology_table(&pi, FieldSpec::RATIONALS, DEFAULT_PATTERN_CAP).unwrap();
            let r = strictness_witness(&i, &phi, &t).unwrap();
            assert_eq!(r.index, 1);
            assert_eq!(r.span, span);
            assert!(r.attained(), "{r:?}");
        }
    }

    #[test]
    fn strictness_rejects_bad_inputs() {
        let phi = SubstitutionMap::identity(2).unwrap();
        let sq = MonomialIdeal::from_exponents(2, &[[2u32, 0]]).unwrap();
        let t = cohomology_table(&sq, FieldSpec::RATIONALS, DEFAULT_PATTERN_CAP).unwrap();
        assert_eq!(strictness_witness(&sq, &phi, &t), Err(Error::NotSquareFree));

        // Cohen-Macaulay: nothing below the top index
        let cm = MonomialIdeal::from_exponents(2, &[[1u32, 1]]).unwrap();
        let t = cohomology_table(&cm, FieldSpec::RATIONALS, DEFAULT_PATTERN_CAP).unwrap();
        assert!(matches!(
            strictness_witness(&cm, &phi, &t),
            Err(Error::StrictnessPrecondition(_))
        ));

        // point plus edge: not generalized CM
        let mixed = MonomialIdeal::from_exponents(3, &[[1u32, 1, 0], [1, 0, 1]]).unwrap();
        let phi3 = SubstitutionMap::identity(3).unwrap();
        let t = cohomology_table(&mixed, FieldSpec::RATIONALS, DEFAULT_PATTERN_CAP).unwrap();
        assert!(matches!(
            strictness_witness(&mixed, &phi3, &t),
            Err(Error::StrictnessPrecondition(_))
        ));
    }
}
