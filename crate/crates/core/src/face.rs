//! Subsets of the variable set `{0, …, n-1}` packed into a `u64`.
//!
//! Variable `j` (zero-based) is bit `j`. Two orders matter downstream:
//! the numeric order of the mask (used for degree patterns) and the
//! lexicographic order on ascending vertex sequences (used for simplicial
//! bases, see [`Face::cmp_lex`]).

use core::cmp::Ordering;
use core::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All of `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        Face(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        Face(vs.into_iter().fold(0, |m, v| m | (1u64 << v)))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub const fn with(self, v: usize) -> Face {
        Face(self.0 | (1u64 << v))
    }

    pub const fn without(self, v: usize) -> Face {
        Face(self.0 & !(1u64 << v))
    }

    /// Largest vertex, if any.
    pub const fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Vertices in ascending order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// Lexicographic comparison of the ascending vertex sequences.
    ///
    /// For equal-size faces this is decided by the smallest vertex of the
    /// symmetric difference: whichever face owns it comes first. A proper
    /// prefix sorts before its extensions.
    pub fn cmp_lex(self, other: Face) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let mine = self.0 & low != 0;
        // bits below `low` are shared; if one face has nothing at or above
        // `low` it is a prefix of the other
        let above = !(low - 1);
        if mine {
            if other.0 & above == 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Position (0-based, ascending) of vertex `v` inside the face.
    pub fn position(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    /// Every subset of this face, including the empty set and itself.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

/// Displayed with one-based vertex labels, e.g. `{1,3}`.
impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Vertices {}

/// Subsets of a mask, in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Face;

    fn next(&mut self) -> Option<Face> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(Face(cur))
    }
}

/// All `t`-element subsets of `{0, …, n-1}` in increasing numeric order.
pub fn combinations(n: usize, t: usize) -> impl Iterator<Item = Face> {
    let mut state = if t > n {
        None
    } else if t == 0 {
        Some(0u64)
    } else {
        Some(Face::full(t).bits())
    };
    let limit = Face::full(n).bits();
    core::iter::from_fn(move || {
        let cur = state?;
        state = if cur == 0 {
            None
        } else {
            // Gosper's hack, guarded against overflow at n = 64
            let c = cur & cur.wrapping_neg();
            match cur.checked_add(c) {
                Some(r) if r & !limit == 0 => {
                    let next = (((r ^ cur) >> 2) / c) | r;
                    if next & !limit == 0 {
                        Some(next)
                    } else {
                        None
                    }
                }
                _ => None,
            }
        };
        Some(Face(cur))
    })
}
