//! The one-dimensional problems at the bottom of the reduction chain:
//! 3SUM, 3SUM', equal differences (EqDist) and segments containing points
//! (SegContPnt), with their solvers, verifiers and reductions.

mod reduce;
mod solve;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::IntervalSet;
use crate::rational::Rational;

pub use reduce::{
    extend_to_segcontpnt, map_prime_witness_to_3sum, map_prime_witness_to_eqdist, normalize_to_unit_interval,
    reduce_3sum_to_prime, reduce_prime_to_3sum, reduce_prime_to_eqdist,
};
pub use solve::{
    feasible_shifts, solve_3sum, solve_3sum_prime, solve_3sum_with, solve_eqdist, solve_segcontpnt,
    verify_3sum, verify_3sum_prime, verify_eqdist, verify_segcontpnt,
};

/// Does `s` contain `a, b, c` with `a + b + c = 0`?
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ThreeSumInstance {
    s: Vec<Rational>,
}

impl ThreeSumInstance {
    pub fn new(s: Vec<Rational>) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidInstance("3SUM set is empty".into()));
        }
        Ok(ThreeSumInstance { s })
    }

    pub fn values(&self) -> &[Rational] {
        &self.s
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }
}

/// Which index triples count as a 3SUM solution.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThreeSumMode {
    /// `i <= j <= k`: one element may be used more than once.
    #[default]
    AllowRepeats,
    /// `i < j < k`.
    DistinctIndices,
}

/// Are there `a in A`, `b in B`, `c in C` with `a + b = c`?
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ThreeSumPrimeInstance {
    a: Vec<Rational>,
    b: Vec<Rational>,
    c: Vec<Rational>,
}

impl ThreeSumPrimeInstance {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>, c: Vec<Rational>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() || a.len() != c.len() {
            return Err(Error::InvalidInstance(format!(
                "3SUM' sets must be non-empty and equally sized (got {}, {}, {})",
                a.len(),
                b.len(),
                c.len()
            )));
        }
        Ok(ThreeSumPrimeInstance { a, b, c })
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    pub fn c(&self) -> &[Rational] {
        &self.c
    }

    /// Common size `n` of the three sets.
    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn values(&self) -> impl Iterator<Item = &Rational> {
        self.a.iter().chain(&self.b).chain(&self.c)
    }
}

/// Is there a difference of two elements of `p` equal to a difference of
/// two elements of `q`?
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EqDistInstance {
    p: Vec<Rational>,
    q: Vec<Rational>,
    /// Size `n` of the 3SUM' instance this was reduced from, when it was
    /// produced by [`reduce_prime_to_eqdist`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    source_n: Option<usize>,
}

impl EqDistInstance {
    pub fn new(p: Vec<Rational>, q: Vec<Rational>) -> Result<Self> {
        if p.is_empty() || q.is_empty() {
            return Err(Error::InvalidInstance("EqDist sets must be non-empty".into()));
        }
        Ok(EqDistInstance { p, q, source_n: None })
    }

    pub(crate) fn with_source(p: Vec<Rational>, q: Vec<Rational>, n: usize) -> Self {
        EqDistInstance { p, q, source_n: Some(n) }
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    pub fn source_n(&self) -> Option<usize> {
        self.source_n
    }
}

/// Is there a shift `v` with `P + v` inside the union of the intervals `Q`?
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SegContPntInstance {
    p: Vec<Rational>,
    q: IntervalSet,
}

impl SegContPntInstance {
    pub fn new(p: Vec<Rational>, q: IntervalSet) -> Result<Self> {
        if p.is_empty() || q.is_empty() {
            return Err(Error::InvalidInstance("SegContPnt sets must be non-empty".into()));
        }
        Ok(SegContPntInstance { p, q })
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &IntervalSet {
        &self.q
    }

    /// All numbers appearing in the instance: points of `P` and interval
    /// endpoints of `Q`.
    pub fn numbers(&self) -> impl Iterator<Item = &Rational> {
        self.p.iter().chain(self.q.endpoints())
    }

    /// Image under `x -> scale * x + offset` applied to both sides
    /// (`scale > 0`); the answer is unchanged.
    pub fn affine(&self, scale: &Rational, offset: &Rational) -> SegContPntInstance {
        SegContPntInstance {
            p: self.p.iter().map(|x| &(x * scale) + offset).collect(),
            q: self.q.affine(scale, offset),
        }
    }
}

/// Indices `(i, j, k)` of a 3SUM or 3SUM' solution.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Triple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

/// Indices with `p[p1] - p[p2] = q[q1] - q[q2]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Quad {
    pub p1: usize,
    pub p2: usize,
    pub q1: usize,
    pub q2: usize,
}

/// A certificate for a YES answer of one of the 1-D problems.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    TripleIdx(Triple),
    QuadIdx(Quad),
    Shift { v: Rational },
}
