//! Brute-force oracles.
//!
//! Each oracle decides its problem by plain enumeration and shares no code
//! path with the solvers in [`crate::linear`]; the audit compares the two.

use crate::linear::{
    EqDistInstance, Quad, SegContPntInstance, ThreeSumInstance, ThreeSumMode, ThreeSumPrimeInstance, Triple,
};
use crate::rational::Rational;

/// Cubic triple loop; returns the lexicographically smallest triple.
pub fn brute_3sum(inst: &ThreeSumInstance, mode: ThreeSumMode) -> Option<Triple> {
    let s = inst.values();
    let n = s.len();
    let step = usize::from(mode == ThreeSumMode::DistinctIndices);
    let negated: Vec<Rational> = s.iter().map(|x| -x).collect();
    for i in 0..n {
        for j in i + step..n {
            let pair = &s[i] + &s[j];
            for k in j + step..n {
                if pair == negated[k] {
                    return Some(Triple { i, j, k });
                }
            }
        }
    }
    None
}

/// Cubic triple loop over `A x B x C`.
pub fn brute_3sum_prime(inst: &ThreeSumPrimeInstance) -> Option<Triple> {
    for (i, a) in inst.a().iter().enumerate() {
        for (j, b) in inst.b().iter().enumerate() {
            let sum = a + b;
            for (k, c) in inst.c().iter().enumerate() {
                if &sum == c {
                    return Some(Triple { i, j, k });
                }
            }
        }
    }
    None
}

/// Quartic loop over index pairs of `P` and `Q`.
pub fn brute_eqdist(inst: &EqDistInstance) -> Option<Quad> {
    let (p, q) = (inst.p(), inst.q());
    for p1 in 0..p.len() {
        for p2 in 0..p.len() {
            if p1 == p2 {
                continue;
            }
            let d = &p[p1] - &p[p2];
            for q1 in 0..q.len() {
                for q2 in 0..q.len() {
                    if q1 != q2 && &q[q1] - &q[q2] == d {
                        return Some(Quad { p1, p2, q1, q2 });
                    }
                }
            }
        }
    }
    None
}

/// Every shift that puts a point on an interval endpoint, plus the midpoints
/// between consecutive such shifts, is tested by a linear scan of `Q`.
/// Between consecutive breakpoints membership of every shifted point is
/// constant, so this decides the problem; the smallest feasible shift found
/// is returned.
pub fn brute_segcontpnt(inst: &SegContPntInstance) -> Option<Rational> {
    let mut breaks: Vec<Rational> = Vec::new();
    for iv in inst.q().iter() {
        for p in inst.p() {
            breaks.push(iv.lo() - p);
            breaks.push(iv.hi() - p);
        }
    }
    breaks.sort();
    breaks.dedup();
    let mut probes: Vec<Rational> = breaks.clone();
    probes.extend(breaks.windows(2).map(|w| w[0].midpoint(&w[1])));
    probes.sort();
    let covered = |v: &Rational| {
        inst.p().iter().all(|p| {
            let x = p + v;
            inst.q().iter().any(|iv| iv.lo() <= &x && &x <= iv.hi())
        })
    };
    probes.into_iter().find(covered)
}
