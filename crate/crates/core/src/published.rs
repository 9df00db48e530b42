//! The two pairs found by the original bounded search, used as reference
//! points by the search, the generator and the acceptance checks.

use crate::param::ParamTriple;
use crate::triangle::TrianglePair;
use crate::{Integer, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedPair {
    pub label: &'static str,
    pub triple: (i64, i64, i64),
    pub roots1: [u64; 3],
    pub roots2: [u64; 3],
}

pub const FIRST: PublishedPair = PublishedPair {
    label: "first",
    triple: (14, -27, -25),
    roots1: [661, 1498, 1515],
    roots2: [921, 1310, 1553],
};

pub const SECOND: PublishedPair = PublishedPair {
    label: "second",
    triple: (46, 73, 371),
    roots1: [71297, 77895, 97154],
    roots2: [67005, 81926, 96893],
};

pub const ALL: [PublishedPair; 2] = [FIRST, SECOND];

impl PublishedPair {
    pub fn param_triple(&self) -> ParamTriple<Rational> {
        let (p, q, r) = self.triple;
        ParamTriple::new(p, q, r).map(|&v| Rational::from_integer(Integer::from(v)))
    }

    /// True when `pair` consists of exactly these two triangles, in either order.
    pub fn matches(&self, pair: &TrianglePair) -> bool {
        let a = self.roots1.map(Integer::from);
        let b = self.roots2.map(Integer::from);
        (pair.roots1() == &a && pair.roots2() == &b) || (pair.roots1() == &b && pair.roots2() == &a)
    }
}

/// Label of the published pair equal to `pair`, if any.
pub fn identify(pair: &TrianglePair) -> Option<&'static str> {
    ALL.iter().find(|known| known.matches(pair)).map(|known| known.label)
}
