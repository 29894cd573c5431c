//! Finite simplicial complexes on `{0, …, n-1}` and their reduced homology.
//!
//! A complex stores every face explicitly, grouped by cardinality and
//! sorted lexicographically by ascending vertex sequence. That order is the
//! basis order for boundary matrices, so matrices are reproducible.
//! Vertices of the ambient set need not be faces.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{FieldSpec, IntMatrix};
use crate::monomial::{MonomialIdeal, MAX_VARIABLES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// `levels[s]` holds the faces with `s` vertices; empty for the void
    /// complex, otherwise `levels[0] == [∅]`.
    levels: Vec<Vec<Face>>,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_VARIABLES {
        Err(Error::AmbientOutOfRange(n))
    } else {
        Ok(())
    }
}

/// Every face reachable from `∅` by adding vertices of `vertices` in
/// ascending order while `admits` holds. For a predicate that is closed
/// under subsets this is exactly the set of admitted faces.
pub(crate) fn grow_faces(vertices: Face, admits: impl Fn(Face) -> bool) -> Vec<Face> {
    let mut out = Vec::new();
    if !admits(Face::EMPTY) {
        return out;
    }
    let mut stack = alloc::vec![Face::EMPTY];
    while let Some(f) = stack.pop() {
        out.push(f);
        let floor = f.max_vertex().map_or(0, |m| m + 1);
        for v in vertices.vertices().filter(|&v| v >= floor) {
            let g = f.with(v);
            if admits(g) {
                stack.push(g);
            }
        }
    }
    out
}

impl SimplicialComplex {
    /// The void complex `∅` (no faces at all).
    pub fn empty(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SimplicialComplex {
            n,
            levels: Vec::new(),
        })
    }

    /// The complex `{∅}`.
    pub fn irrelevant(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SimplicialComplex {
            n,
            levels: alloc::vec![alloc::vec![Face::EMPTY]],
        })
    }

    /// All subsets of `face`.
    pub fn simplex(n: usize, face: Face) -> Result<Self> {
        Self::from_facets(n, [face])
    }

    /// Closure of the given faces under taking subsets.
    pub fn from_facets<I: IntoIterator<Item = Face>>(n: usize, facets: I) -> Result<Self> {
        check_n(n)?;
        let ground = Face::full(n);
        let mut all = Vec::new();
        for f in facets {
            if !f.is_subset(ground) {
                return Err(Error::IndexOutOfRange {
                    index: f.max_vertex().unwrap_or(0),
                    n,
                });
            }
            all.extend(f.subsets());
        }
        Ok(Self::from_family(n, all))
    }

    /// Takes the faces as given and rejects families that are not closed
    /// under subsets.
    pub fn from_faces<I: IntoIterator<Item = Face>>(n: usize, faces: I) -> Result<Self> {
        check_n(n)?;
        let ground = Face::full(n);
        let faces: Vec<Face> = faces.into_iter().collect();
        if let Some(f) = faces.iter().find(|f| !f.is_subset(ground)) {
            return Err(Error::IndexOutOfRange {
                index: f.max_vertex().unwrap_or(0),
                n,
            });
        }
        let c = Self::from_family(n, faces);
        let closed = c
            .iter()
            .all(|f| f.vertices().all(|v| c.contains(f.without(v))));
        if closed {
            Ok(c)
        } else {
            Err(Error::NotClosed)
        }
    }

    /// The complex on `vertices` whose faces contain none of `nonfaces`.
    pub fn from_minimal_nonfaces(n: usize, vertices: Face, nonfaces: &[Face]) -> Result<Self> {
        check_n(n)?;
        let faces = grow_faces(vertices.intersection(Face::full(n)), |f| {
            nonfaces.iter().all(|w| !w.is_subset(f))
        });
        Ok(Self::from_family(n, faces))
    }

    /// The Stanley–Reisner complex of a square-free monomial ideal: `F` is a
    /// face iff no generator's support lies inside `F`.
    pub fn from_squarefree_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquareFree);
        }
        Self::from_minimal_nonfaces(ideal.n(), Face::full(ideal.n()), &ideal.supports())
    }

    /// Groups and sorts; duplicates removed. The caller guarantees closure.
    pub(crate) fn from_family(n: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        let top = faces.iter().map(|f| f.len()).max();
        let mut levels: Vec<Vec<Face>> = match top {
            Some(t) => (0..=t).map(|_| Vec::new()).collect(),
            None => Vec::new(),
        };
        for f in faces {
            levels[f.len()].push(f);
        }
        for level in &mut levels {
            level.sort_unstable_by(|a, b| a.cmp_lex(*b));
        }
        SimplicialComplex { n, levels }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Δ = ∅`.
    pub fn is_void(&self) -> bool {
        self.levels.is_empty()
    }

    /// `max{|F| - 1}`; `-1` for both `∅` and `{∅}`.
    pub fn dim(&self) -> isize {
        if self.levels.is_empty() {
            -1
        } else {
            self.levels.len() as isize - 2
        }
    }

    /// Faces of dimension `k` (that is, with `k + 1` vertices).
    pub fn faces(&self, k: isize) -> &[Face] {
        usize::try_from(k + 1)
            .ok()
            .and_then(|s| self.levels.get(s))
            .map_or(&[], Vec::as_slice)
    }

    /// All faces by increasing size, lexicographic within a size.
    pub fn iter(&self) -> impl Iterator<Item = Face> + '_ {
        self.levels.iter().flatten().copied()
    }

    pub fn face_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// `f_k` for `k = -1 ..= dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.index_of(face).is_some()
    }

    fn index_of(&self, face: Face) -> Option<usize> {
        self.levels
            .get(face.len())?
            .binary_search_by(|g| g.cmp_lex(face))
            .ok()
    }

    /// Maximal faces, in face order.
    pub fn facets(&self) -> Vec<Face> {
        let ground = Face::full(self.n);
        self.iter()
            .filter(|f| {
                ground
                    .difference(*f)
                    .vertices()
                    .all(|v| !self.contains(f.with(v)))
            })
            .collect()
    }

    /// `lk F = {G | F ∪ G ∈ Δ, F ∩ G = ∅}`; void when `F ∉ Δ`.
    pub fn link(&self, face: Face) -> SimplicialComplex {
        let faces = self
            .iter()
            .filter(|h| face.is_subset(*h))
            .map(|h| h.difference(face))
            .collect();
        Self::from_family(self.n, faces)
    }

    /// `st F = {G | F ∪ G ∈ Δ}`; void when `F ∉ Δ`.
    pub fn star(&self, face: Face) -> SimplicialComplex {
        let faces = self
            .iter()
            .filter(|g| self.contains(g.union(face)))
            .collect();
        Self::from_family(self.n, faces)
    }

    /// Matrix of `∂_k : C_k → C_{k-1}` of the augmented oriented chain
    /// complex. Columns are the `k`-faces, rows the `(k-1)`-faces, both in
    /// face order; removing the vertex at position `j` carries sign `(-1)^j`.
    pub fn boundary_matrix(&self, k: isize) -> Result<IntMatrix> {
        if k < -1 || k > self.dim() {
            return Err(Error::DegreeOutOfRange { k, dim: self.dim() });
        }
        let cols = self.faces(k);
        let rows = self.faces(k - 1);
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (c, f) in cols.iter().enumerate() {
            for (j, v) in f.vertices().enumerate() {
                let r = rows
                    .binary_search_by(|g| g.cmp_lex(f.without(v)))
                    .expect("complex is closed under subsets");
                m.set(r, c, if j % 2 == 0 { 1 } else { -1 });
            }
        }
        Ok(m)
    }

    /// `dim_K H̃_k(Δ; K)` for `k = -1 ..= dim Δ`.
    ///
    /// Over a field homology and cohomology have equal dimensions, so this
    /// serves both.
    pub fn reduced_homology(&self, field: FieldSpec) -> ReducedHomology {
        let top = self.dim();
        // ranks[s] = rank of ∂ out of the faces with s vertices
        let ranks: Vec<usize> = (-1..=top)
            .map(|k| {
                self.boundary_matrix(k)
                    .expect("degree in range")
                    .rank(field)
            })
            .collect();
        let dims = (-1..=top)
            .map(|k| {
                let s = (k + 1) as usize;
                let out = ranks[s];
                let inc = ranks.get(s + 1).copied().unwrap_or(0);
                self.faces(k).len() - out - inc
            })
            .collect();
        ReducedHomology { dims }
    }

    /// `Σ_k (-1)^k f_k` over `k ≥ -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(s, l)| {
                if s % 2 == 1 {
                    l.len() as i64
                } else {
                    -(l.len() as i64)
                }
            })
            .sum()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}) ", self.n)?;
        fmt::Display::fmt(self, f)
    }
}

/// Sorted face list, e.g. `{{}, {1}, {2}, {1,2}}`.
impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, face) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{face}")?;
        }
        f.write_str("}")
    }
}

impl PartialOrd for SimplicialComplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SimplicialComplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.levels.cmp(&other.levels))
    }
}

/// Reduced homology dimensions indexed from `k = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dims()[0]` is `H̃_{-1}`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dim H̃_k`, zero outside the stored range.
    pub fn get(&self, k: isize) -> usize {
        usize::try_from(k + 1)
            .ok()
            .and_then(|s| self.dims.get(s))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(s, &d)| if s % 2 == 1 { d as i64 } else { -(d as i64) })
            .sum()
    }
}
