//! The degree complexes `Δ_a` and the finite set of degree patterns that
//! index every nonzero graded piece of local cohomology.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::face::Face;
use crate::monomial::{MonomialIdeal, MultiDegree};
use crate::simplicial::SimplicialComplex;

/// Default ceiling on the number of patterns a single ideal may produce.
pub const DEFAULT_PATTERN_CAP: u64 = 10_000_000;

/// A class of multidegrees sharing the negative support `F` and the
/// nonnegative part `b`.
///
/// The class is `{a : G_a = F, a_j = b_j for j ∉ F}`. Every member has the
/// same degree complex, so one pattern stands for infinitely many degrees.
/// `b` is stored with full length `n`; its entries on `F` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreePattern {
    face: Face,
    nonneg: Vec<u32>,
}

impl DegreePattern {
    pub fn new(face: Face, nonneg: Vec<u32>) -> Result<Self> {
        let n = nonneg.len();
        if n == 0 || n > 64 {
            return Err(Error::AmbientOutOfRange(n));
        }
        if !face.is_subset(Face::full(n)) {
            return Err(Error::IndexOutOfRange {
                index: face.max_vertex().unwrap_or(0),
                n,
            });
        }
        let mut nonneg = nonneg;
        for j in face.vertices() {
            nonneg[j] = 0;
        }
        Ok(DegreePattern { face, nonneg })
    }

    /// The pattern containing `a`, if `a` fits in `u32` off its negative
    /// support.
    pub fn of_degree(a: &MultiDegree) -> Option<Self> {
        let face = a.negative_support();
        let nonneg = a
            .entries()
            .iter()
            .map(|&x| {
                if x < 0 {
                    Some(0)
                } else {
                    u32::try_from(x).ok()
                }
            })
            .collect::<Option<Vec<u32>>>()?;
        Some(DegreePattern { face, nonneg })
    }

    pub fn n(&self) -> usize {
        self.nonneg.len()
    }

    /// `F`, the negative support.
    pub fn face(&self) -> Face {
        self.face
    }

    /// `b`, zero on `F`.
    pub fn nonneg(&self) -> &[u32] {
        &self.nonneg
    }

    /// Canonical member: `-1` on `F`, `b` elsewhere.
    pub fn representative(&self) -> MultiDegree {
        let entries = self
            .nonneg
            .iter()
            .enumerate()
            .map(|(j, &b)| {
                if self.face.contains(j) {
                    -1
                } else {
                    i64::from(b)
                }
            })
            .collect();
        MultiDegree::new(entries).expect("length already validated")
    }

    /// Largest total degree in the class, `Σb - |F|`.
    pub fn top_degree(&self) -> i64 {
        self.nonneg.iter().map(|&b| i64::from(b)).sum::<i64>() - self.face.len() as i64
    }

    /// Whether the pattern lies in the box of `ideal`: `F ∈ Δ(√I)` and
    /// `b_j ≤ ρ_j - 1` off `F`.
    pub fn in_box(&self, ideal: &MonomialIdeal) -> bool {
        if self.n() != ideal.n() {
            return false;
        }
        let rho = ideal.rho();
        let in_range = (0..self.n())
            .filter(|&j| !self.face.contains(j))
            .all(|j| self.nonneg[j] < rho[j]);
        in_range
            && ideal
                .radical()
                .supports()
                .iter()
                .all(|w| !w.is_subset(self.face))
    }
}

/// Pattern order: `|F|`, then `F` as an integer mask, then `b`
/// lexicographically.
impl Ord for DegreePattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.face
            .len()
            .cmp(&other.face.len())
            .then_with(|| self.face.cmp(&other.face))
            .then_with(|| self.nonneg.cmp(&other.nonneg))
    }
}

impl PartialOrd for DegreePattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, b=(", self.face)?;
        let mut first = true;
        for (j, b) in self.nonneg.iter().enumerate() {
            if self.face.contains(j) {
                continue;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{b}")?;
        }
        f.write_str("))")
    }
}

/// The Stanley–Reisner complex `Δ` of `√I`.
pub fn radical_complex(ideal: &MonomialIdeal) -> SimplicialComplex {
    SimplicialComplex::from_squarefree_ideal(&ideal.radical()).expect("radical is square-free")
}

/// `Δ_a = {F - G_a : F ⊇ G_a, ∀u ∈ G(I) ∃j ∉ F with ν_j(u) > a_j ≥ 0}`.
///
/// With `W_u = {j : ν_j(u) > a_j ≥ 0}` the condition reads `W_u ⊄ F`, and
/// `W_u` never meets `G_a`. So `Δ_a` is the complex on `[n] - G_a` with
/// minimal non-faces among the `W_u`, generated face by face rather than
/// by scanning every superset of `G_a`.
pub fn delta_a(ideal: &MonomialIdeal, a: &MultiDegree) -> SimplicialComplex {
    assert_eq!(ideal.n(), a.n(), "ambient mismatch");
    let n = ideal.n();
    let neg = a.negative_support();
    let witnesses: Vec<Face> = ideal
        .generators()
        .iter()
        .map(|u| {
            Face::from_vertices((0..n).filter(|&j| {
                let aj = a.entries()[j];
                aj >= 0 && i64::from(u.exponents()[j]) > aj
            }))
        })
        .collect();
    SimplicialComplex::from_minimal_nonfaces(n, Face::full(n).difference(neg), &witnesses)
        .expect("ambient already validated")
}

/// Every pattern `(F, b)` with `F ∈ Δ(√I)` and `0 ≤ b_j < ρ_j` for `j ∉ F`,
/// in pattern order.
///
/// Faces missing a variable with `ρ_j = 0` have an empty box and are
/// skipped without being visited. Fails once more than `cap` patterns have
/// been seen.
pub fn enumerate_patterns(ideal: &MonomialIdeal, cap: u64) -> Result<Vec<DegreePattern>> {
    let n = ideal.n();
    let rho = ideal.rho();
    let unused = Face::from_vertices((0..n).filter(|&j| rho[j] == 0));
    let nonfaces = ideal.radical().supports();
    let free = Face::full(n).difference(unused);

    let mut faces: Vec<Face> = Vec::new();
    let mut count: u64 = 0;
    let mut stack = alloc::vec![Face::EMPTY];
    // non-faces never involve unused variables, so faces containing them
    // are faces of the restriction to `free` joined with `unused`
    if nonfaces.iter().any(|w| w.is_empty()) {
        stack.clear();
    }
    while let Some(l) = stack.pop() {
        let f = l.union(unused);
        let size = free
            .difference(f)
            .vertices()
            .try_fold(1u64, |acc, j| acc.checked_mul(u64::from(rho[j])));
        count = size
            .and_then(|s| count.checked_add(s))
            .filter(|&c| c <= cap)
            .ok_or(Error::PatternCapExceeded { cap })?;
        faces.push(f);
        let floor = l.max_vertex().map_or(0, |m| m + 1);
        for v in free.vertices().filter(|&v| v >= floor) {
            let g = l.with(v);
            if nonfaces.iter().all(|w| !w.is_subset(g)) {
                stack.push(g);
            }
        }
    }

    faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let mut out = Vec::with_capacity(count as usize);
    for f in faces {
        let axes: Vec<usize> = (0..n).filter(|&j| !f.contains(j)).collect();
        let mut b = alloc::vec![0u32; n];
        // odometer: last axis fastest gives lexicographic order
        'boxes: loop {
            out.push(DegreePattern {
                face: f,
                nonneg: b.clone(),
            });
            let mut k = axes.len();
            loop {
                if k == 0 {
                    break 'boxes;
                }
                k -= 1;
                let j = axes[k];
                b[j] += 1;
                if b[j] < rho[j] {
                    continue 'boxes;
                }
                b[j] = 0;
            }
        }
    }
    Ok(out)
}
