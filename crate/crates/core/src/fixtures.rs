//! Curated ideals with known local cohomology.

use alloc::vec::Vec;

use crate::face::Face;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::SimplicialComplex;

fn squarefree(n: usize, supports: &[&[usize]]) -> MonomialIdeal {
    let gens = supports
        .iter()
        .map(|s| {
            let mut e = alloc::vec![0u32; n];
            for &j in *s {
                e[j] = 1;
            }
            Monomial::new(e).expect("fixture ambient is valid")
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("fixture is a proper ideal")
}

/// Stanley–Reisner ideal of a complex: generated by its minimal non-faces.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n();
    let nonfaces: Vec<Face> = Face::full(n)
        .subsets()
        .filter(|f| !complex.contains(*f) && f.vertices().all(|v| complex.contains(f.without(v))))
        .collect();
    let gens = nonfaces
        .iter()
        .map(|f| {
            let e = (0..n).map(|j| u32::from(f.contains(j))).collect();
            Monomial::new(e).expect("ambient is valid")
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("a complex with ∅ gives a proper ideal")
}

/// `(x1x3, x1x4, x2x3, x2x4)`: two disjoint edges `{1,2}`, `{3,4}`.
/// Buchsbaum of dimension 2 with `H^1 = K` in degree 0.
pub fn two_disjoint_edges() -> MonomialIdeal {
    squarefree(4, &[&[0, 2], &[0, 3], &[1, 2], &[1, 3]])
}

/// Two disjoint triangles `{1,2,3}`, `{4,5,6}`. Buchsbaum of dimension 3
/// with `H^1 = K` in degree 0.
pub fn two_disjoint_triangles() -> MonomialIdeal {
    let mut gens: Vec<[usize; 2]> = Vec::new();
    for i in 0..3 {
        for j in 3..6 {
            gens.push([i, j]);
        }
    }
    let rows: Vec<&[usize]> = gens.iter().map(|g| g.as_slice()).collect();
    squarefree(6, &rows)
}

/// Facets of the six-vertex triangulation of the real projective plane.
pub const RP2_FACETS: [[usize; 3]; 10] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 4],
    [2, 3, 5],
    [1, 3, 4],
    [2, 4, 5],
    [1, 3, 5],
];

pub fn rp2_complex() -> SimplicialComplex {
    SimplicialComplex::from_facets(
        6,
        RP2_FACETS
            .iter()
            .map(|f| Face::from_vertices(f.iter().copied())),
    )
    .expect("fixture is valid")
}

/// Stanley–Reisner ideal of the six-vertex `RP^2`. Cohen–Macaulay over `Q`;
/// in characteristic 2, `H^2` is `K` in degree 0.
pub fn rp2() -> MonomialIdeal {
    stanley_reisner_ideal(&rp2_complex())
}
