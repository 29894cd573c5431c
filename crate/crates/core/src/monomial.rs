//! Exponent vectors, multidegrees and monomial ideals.
//!
//! Variables are zero-based throughout the library: variable `j` is the
//! text-format variable `x{j+1}`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::face::Face;

/// Largest supported ambient variable count; faces are `u64` masks.
pub const MAX_VARIABLES: usize = 64;

fn check_ambient(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARIABLES {
        Err(Error::AmbientOutOfRange(n))
    } else {
        Ok(())
    }
}

/// A monomial `X_1^{e_1} ⋯ X_n^{e_n}`, stored as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        check_ambient(exponents.len())?;
        Ok(Monomial { exponents })
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::new(alloc::vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of variable `j`.
    pub fn nu(&self, j: usize) -> Result<u32> {
        self.exponents
            .get(j)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index: j,
                n: self.n(),
            })
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> Face {
        Face::from_vertices(
            self.exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, _)| j),
        )
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.n() == other.n()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }
}

/// A point `a ∈ Z^n` of the fine grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    entries: Vec<i64>,
}

impl MultiDegree {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        check_ambient(entries.len())?;
        Ok(MultiDegree { entries })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(alloc::vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `G_a`: coordinates with `a_j < 0`.
    pub fn negative_support(&self) -> Face {
        Face::from_vertices((0..self.n()).filter(|&j| self.entries[j] < 0))
    }

    /// `H_a`: coordinates with `a_j > 0`.
    pub fn positive_support(&self) -> Face {
        Face::from_vertices((0..self.n()).filter(|&j| self.entries[j] > 0))
    }

    /// `(G_a, H_a)`.
    pub fn sign_split(&self) -> (Face, Face) {
        (self.negative_support(), self.positive_support())
    }

    pub fn total_degree(&self) -> i64 {
        self.entries.iter().sum()
    }
}

/// A monomial ideal held by its minimal generating set `G(I)`.
///
/// Generators are kept sorted and pairwise incomparable under divisibility.
/// The empty generating set is the zero ideal; the unit ideal cannot be
/// represented.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding redundant generators.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        check_ambient(n)?;
        for g in &gens {
            if g.n() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: g.n(),
                });
            }
            if g.is_one() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal {
            n,
            generators: minimize(gens),
        })
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_exponents<R: AsRef<[u32]>>(n: usize, rows: &[R]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| Monomial::new(r.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, gens)
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The minimal generators, sorted by exponent vector.
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// `ρ_j`: largest exponent of `x_j` among the minimal generators, 0 if
    /// there are none.
    pub fn rho(&self) -> Vec<u32> {
        let mut rho = alloc::vec![0u32; self.n];
        for g in &self.generators {
            for (r, &e) in rho.iter_mut().zip(g.exponents()) {
                *r = (*r).max(e);
            }
        }
        rho
    }

    /// The square-free ideal generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| Monomial {
                exponents: g.exponents.iter().map(|&e| u32::from(e > 0)).collect(),
            })
            .collect();
        MonomialIdeal {
            n: self.n,
            generators: minimize(gens),
        }
    }

    /// Supports of the generators. For a square-free ideal these are the
    /// minimal non-faces of its Stanley–Reisner complex.
    pub fn supports(&self) -> Vec<Face> {
        self.generators.iter().map(Monomial::support).collect()
    }

    /// Whether the monomial lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    // a divisor has total degree no larger than its multiple, so a scan in
    // degree order only ever compares against already kept generators
    gens.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| a.cmp(b))
    });
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ideal(n: usize, rows: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, rows).unwrap()
    }

    #[test]
    fn keeps_minimal_generators() {
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(i.generators().len(), 2);
        let i = ideal(2, &[&[1, 0], &[2, 0]]);
        assert_eq!(i.generators(), &[Monomial::new(vec![1, 0]).unwrap()]);
    }

    #[test]
    fn duplicates_collapse() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 1, 0], &[0, 0, 2]]);
        assert_eq!(i.generators().len(), 2);
    }

    #[test]
    fn unit_ideal_rejected() {
        assert_eq!(
            MonomialIdeal::from_exponents(1, &[[0u32]]),
            Err(Error::UnitIdeal)
        );
    }

    #[test]
    fn ambient_bounds() {
        assert_eq!(MonomialIdeal::zero(0), Err(Error::AmbientOutOfRange(0)));
        assert_eq!(MonomialIdeal::zero(65), Err(Error::AmbientOutOfRange(65)));
        assert!(MonomialIdeal::zero(64).is_ok());
        assert!(matches!(
            MonomialIdeal::from_exponents(2, &[[1u32, 0, 0]]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn nu_reads_exponents() {
        let u = Monomial::new(vec![2, 1]).unwrap();
        assert_eq!(u.nu(0), Ok(2));
        assert_eq!(u.nu(1), Ok(1));
        assert!(matches!(
            u.nu(2),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        ));
        let one = Monomial::one(3).unwrap();
        assert!((0..3).all(|j| one.nu(j) == Ok(0)));
    }

    #[test]
    fn support_examples() {
        assert_eq!(
            Monomial::new(vec![2, 1]).unwrap().support(),
            Face::from_vertices([0, 1])
        );
        assert_eq!(Monomial::one(2).unwrap().support(), Face::EMPTY);
        assert_eq!(
            Monomial::new(vec![0, 0, 1, 0]).unwrap().support(),
            Face::singleton(2)
        );
    }

    #[test]
    fn rho_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 1]]).rho(), vec![2, 1]);
        assert_eq!(MonomialIdeal::zero(3).unwrap().rho(), vec![0, 0, 0]);
        let edges = ideal(
            4,
            &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]],
        );
        assert_eq!(edges.rho(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn sign_split_examples() {
        let a = MultiDegree::new(vec![1, -1]).unwrap();
        assert_eq!(a.sign_split(), (Face::singleton(1), Face::singleton(0)));
        let a = MultiDegree::zero(3).unwrap();
        assert_eq!(a.sign_split(), (Face::EMPTY, Face::EMPTY));
        let a = MultiDegree::new(vec![-3, -1, 2, 0]).unwrap();
        assert_eq!(
            a.sign_split(),
            (Face::from_vertices([0, 1]), Face::singleton(2))
        );
    }

    #[test]
    fn radical_examples() {
        assert_eq!(
            ideal(2, &[&[2, 0], &[1, 1]]).radical(),
            ideal(2, &[&[1, 0]])
        );
        let sf = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(sf.radical(), sf);
        assert_eq!(ideal(1, &[&[3]]).radical(), ideal(1, &[&[1]]));
    }
}
