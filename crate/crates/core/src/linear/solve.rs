use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;

use num_traits::ToPrimitive;

use super::{
    EqDistInstance, Quad, SegContPntInstance, ThreeSumInstance, ThreeSumMode, ThreeSumPrimeInstance, Triple,
};
use crate::geom::Interval;
use crate::rational::{common_denominator, Rational};

trait SumValue: Ord + Hash + Clone {
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl SumValue for i128 {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl SumValue for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Clears denominators; `None` if some scaled value does not fit in an
/// `i64` (so that sums of three stay exact in `i128`).
fn scaled_integers(values: &[Rational]) -> Option<Vec<i128>> {
    let lcm = common_denominator(values);
    values
        .iter()
        .map(|x| {
            let scaled = x.numer() * (&lcm / x.denom());
            scaled.to_i64().map(i128::from)
        })
        .collect()
}

/// Quadratic two-pointer scan over sorted values.
fn has_zero_triple<T: SumValue>(sorted: &[T], mode: ThreeSumMode) -> bool {
    let n = sorted.len();
    let distinct = mode == ThreeSumMode::DistinctIndices;
    for i in 0..n {
        let target = sorted[i].negated();
        let mut j = if distinct { i + 1 } else { i };
        if j >= n {
            break;
        }
        let mut k = n - 1;
        while j < k || (!distinct && j == k) {
            match sorted[j].plus(&sorted[k]).cmp(&target) {
                Ordering::Equal => return true,
                Ordering::Less => j += 1,
                Ordering::Greater => {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                }
            }
        }
    }
    false
}

/// Lexicographically smallest witness in original index order.
fn smallest_triple<T: SumValue>(values: &[T], mode: ThreeSumMode) -> Option<Triple> {
    let mut positions: HashMap<&T, Vec<usize>> = HashMap::new();
    for (idx, v) in values.iter().enumerate() {
        positions.entry(v).or_default().push(idx);
    }
    let distinct = mode == ThreeSumMode::DistinctIndices;
    let n = values.len();
    for i in 0..n {
        let start = if distinct { i + 1 } else { i };
        for j in start..n {
            let need = values[i].plus(&values[j]).negated();
            if let Some(list) = positions.get(&need) {
                let from = if distinct { j + 1 } else { j };
                let at = list.partition_point(|&k| k < from);
                if let Some(&k) = list.get(at) {
                    return Some(Triple { i, j, k });
                }
            }
        }
    }
    None
}

fn solve_generic<T: SumValue>(values: Vec<T>, mode: ThreeSumMode) -> Option<Triple> {
    let mut sorted = values.clone();
    sorted.sort();
    if !has_zero_triple(&sorted, mode) {
        return None;
    }
    smallest_triple(&values, mode)
}

/// 3SUM with repeated use of an element allowed (`i <= j <= k`).
pub fn solve_3sum(inst: &ThreeSumInstance) -> Option<Triple> {
    solve_3sum_with(inst, ThreeSumMode::AllowRepeats)
}

/// 3SUM in the given index mode. Sorts, then decides with a quadratic
/// two-pointer scan; on YES the lexicographically smallest index triple is
/// recovered with a hash index. Integer-valued inputs (after clearing
/// denominators) run on machine integers.
pub fn solve_3sum_with(inst: &ThreeSumInstance, mode: ThreeSumMode) -> Option<Triple> {
    match scaled_integers(inst.values()) {
        Some(ints) => solve_generic(ints, mode),
        None => solve_generic(inst.values().to_vec(), mode),
    }
}

pub fn verify_3sum(inst: &ThreeSumInstance, w: &Triple, mode: ThreeSumMode) -> bool {
    let n = inst.len();
    let ordered = match mode {
        ThreeSumMode::AllowRepeats => w.i <= w.j && w.j <= w.k,
        ThreeSumMode::DistinctIndices => w.i < w.j && w.j < w.k,
    };
    if !ordered || w.k >= n {
        return false;
    }
    let s = inst.values();
    (&s[w.i] + &s[w.j] + &s[w.k]).is_zero()
}

/// Lexicographically smallest `(i, j, k)` with `a[i] + b[j] = c[k]`, via a
/// hash index on `C`: O(n^2) expected.
pub fn solve_3sum_prime(inst: &ThreeSumPrimeInstance) -> Option<Triple> {
    let mut first_c: HashMap<&Rational, usize> = HashMap::new();
    for (k, c) in inst.c().iter().enumerate() {
        first_c.entry(c).or_insert(k);
    }
    for (i, a) in inst.a().iter().enumerate() {
        for (j, b) in inst.b().iter().enumerate() {
            if let Some(&k) = first_c.get(&(a + b)) {
                return Some(Triple { i, j, k });
            }
        }
    }
    None
}

pub fn verify_3sum_prime(inst: &ThreeSumPrimeInstance, w: &Triple) -> bool {
    let n = inst.n();
    w.i < n && w.j < n && w.k < n && &inst.a()[w.i] + &inst.b()[w.j] == inst.c()[w.k]
}

/// Lexicographically smallest `(p1, p2, q1, q2)` with `p1 != p2`,
/// `q1 != q2` and `p[p1] - p[p2] = q[q1] - q[q2]`. All differences of `Q`
/// are sorted once, then each difference of `P` is binary-searched:
/// O((n^2 + m^2) log m).
pub fn solve_eqdist(inst: &EqDistInstance) -> Option<Quad> {
    let (p, q) = (inst.p(), inst.q());
    let mut diffs: Vec<(Rational, usize, usize)> = Vec::with_capacity(q.len() * q.len());
    for (q1, x) in q.iter().enumerate() {
        for (q2, y) in q.iter().enumerate() {
            if q1 != q2 {
                diffs.push((x - y, q1, q2));
            }
        }
    }
    diffs.sort();
    for (p1, x) in p.iter().enumerate() {
        for (p2, y) in p.iter().enumerate() {
            if p1 == p2 {
                continue;
            }
            let d = x - y;
            let at = diffs.partition_point(|(e, _, _)| e < &d);
            if let Some((e, q1, q2)) = diffs.get(at) {
                if e == &d {
                    return Some(Quad { p1, p2, q1: *q1, q2: *q2 });
                }
            }
        }
    }
    None
}

pub fn verify_eqdist(inst: &EqDistInstance, w: &Quad) -> bool {
    let (p, q) = (inst.p(), inst.q());
    w.p1 < p.len()
        && w.p2 < p.len()
        && w.q1 < q.len()
        && w.q2 < q.len()
        && w.p1 != w.p2
        && w.q1 != w.q2
        && &p[w.p1] - &p[w.p2] == &q[w.q1] - &q[w.q2]
}

/// Smallest shift `v` with `P + v` contained in `Q`.
///
/// If the feasible set is non-empty, its leftmost point puts some shifted
/// point on the left end of some interval, so it is one of the candidates
/// `lo(q) - p`. Candidates are tested in increasing order, each by binary
/// search per point.
pub fn solve_segcontpnt(inst: &SegContPntInstance) -> Option<Rational> {
    let mut candidates: Vec<Rational> = inst
        .q()
        .iter()
        .flat_map(|iv| inst.p().iter().map(move |p| iv.lo() - p))
        .collect();
    candidates.sort();
    candidates.dedup();
    candidates.into_iter().find(|v| verify_segcontpnt(inst, v))
}

pub fn verify_segcontpnt(inst: &SegContPntInstance, v: &Rational) -> bool {
    inst.p().iter().all(|p| inst.q().contains(&(p + v)))
}

/// The exact set of feasible shifts as sorted disjoint closed intervals:
/// the intersection over `p` of the unions `Q - p`.
pub fn feasible_shifts(inst: &SegContPntInstance) -> Vec<Interval> {
    let shifted = |p: &Rational| -> Vec<Interval> {
        let neg = -p;
        inst.q().iter().map(|iv| iv.shifted(&neg)).collect()
    };
    let mut points = inst.p().iter();
    let Some(first) = points.next() else {
        return Vec::new();
    };
    let mut acc = shifted(first);
    for p in points {
        let next = shifted(p);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < acc.len() && j < next.len() {
            let lo = acc[i].lo().clone().max(next[j].lo().clone());
            let hi = acc[i].hi().clone().min(next[j].hi().clone());
            if lo <= hi {
                out.push(Interval::new(lo, hi).expect("lo <= hi"));
            }
            if acc[i].hi() < next[j].hi() {
                i += 1;
            } else {
                j += 1;
            }
        }
        acc = out;
        if acc.is_empty() {
            break;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::IntervalSet;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn three_sum_examples() {
        let yes = ThreeSumInstance::new(ints(&[-5, 1, 4])).unwrap();
        let w = solve_3sum(&yes).unwrap();
        assert_eq!(w, Triple { i: 0, j: 1, k: 2 });
        assert!(verify_3sum(&yes, &w, ThreeSumMode::AllowRepeats));
        let no = ThreeSumInstance::new(ints(&[1, 2, 3])).unwrap();
        assert_eq!(solve_3sum(&no), None);
    }

    #[test]
    fn repeats_versus_distinct() {
        // -2 + 1 + 1 = 0 only if the single 1 may be used twice
        let inst = ThreeSumInstance::new(ints(&[-2, 1, 5])).unwrap();
        assert_eq!(solve_3sum(&inst), Some(Triple { i: 0, j: 1, k: 1 }));
        assert_eq!(solve_3sum_with(&inst, ThreeSumMode::DistinctIndices), None);
        let zero = ThreeSumInstance::new(ints(&[0])).unwrap();
        assert_eq!(solve_3sum(&zero), Some(Triple { i: 0, j: 0, k: 0 }));
    }

    #[test]
    fn rational_path_matches_integer_path() {
        let big = Rational::new(num_bigint::BigInt::from(1u128 << 100), 3).unwrap();
        let inst = ThreeSumInstance::new(vec![big.clone(), Rational::frac(1, 7), -(&big + &Rational::frac(1, 7))])
            .unwrap();
        assert_eq!(solve_3sum_with(&inst, ThreeSumMode::DistinctIndices), Some(Triple { i: 0, j: 1, k: 2 }));
    }

    #[test]
    fn three_sum_prime_examples() {
        let yes = ThreeSumPrimeInstance::new(ints(&[1]), ints(&[2]), ints(&[3])).unwrap();
        assert_eq!(solve_3sum_prime(&yes), Some(Triple { i: 0, j: 0, k: 0 }));
        let no = ThreeSumPrimeInstance::new(ints(&[1]), ints(&[2]), ints(&[4])).unwrap();
        assert_eq!(solve_3sum_prime(&no), None);
        assert!(ThreeSumPrimeInstance::new(ints(&[1]), ints(&[2, 3]), ints(&[4])).is_err());
    }

    #[test]
    fn eqdist_examples() {
        let yes = EqDistInstance::new(
            vec![Rational::zero(), Rational::frac(5, 2)],
            vec![Rational::frac(1, 4), Rational::frac(11, 4)],
        )
        .unwrap();
        let w = solve_eqdist(&yes).unwrap();
        assert!(verify_eqdist(&yes, &w));
        assert_eq!(&yes.p()[w.p1] - &yes.p()[w.p2], Rational::frac(-5, 2));

        let no = EqDistInstance::new(ints(&[0, 1]), ints(&[0, 3])).unwrap();
        assert_eq!(solve_eqdist(&no), None);

        // equal values at distinct positions give a zero difference
        let dup = EqDistInstance::new(ints(&[4, 4]), ints(&[7, 7])).unwrap();
        assert!(solve_eqdist(&dup).is_some());
        // a single repeated index never counts
        let single = EqDistInstance::new(ints(&[4]), ints(&[7])).unwrap();
        assert_eq!(solve_eqdist(&single), None);
    }

    fn points(xs: &[Rational]) -> IntervalSet {
        IntervalSet::from_points(xs)
    }

    #[test]
    fn segcontpnt_examples() {
        let yes = SegContPntInstance::new(ints(&[0, 1]), points(&ints(&[10, 11]))).unwrap();
        assert_eq!(solve_segcontpnt(&yes), Some(Rational::from_int(10)));
        assert!(verify_segcontpnt(&yes, &Rational::from_int(10)));
        assert!(!verify_segcontpnt(&yes, &(Rational::from_int(10) + Rational::frac(1, 1000))));

        let no = SegContPntInstance::new(ints(&[0, 1]), points(&ints(&[10, 12]))).unwrap();
        assert_eq!(solve_segcontpnt(&no), None);
        assert!(feasible_shifts(&no).is_empty());
    }

    #[test]
    fn feasible_set_is_exact() {
        let q = IntervalSet::new(vec![
            Interval::new(Rational::from_int(0), Rational::from_int(2)).unwrap(),
            Interval::new(Rational::from_int(5), Rational::from_int(9)).unwrap(),
        ])
        .unwrap();
        let inst = SegContPntInstance::new(ints(&[0, 5]), q).unwrap();
        // v in [0,2] needs 5+v in [5,9]: v in [0,2]; v in [5,9] needs 5+v in Q: v in [5,4] empty
        let feasible = feasible_shifts(&inst);
        assert_eq!(feasible, vec![Interval::new(Rational::from_int(0), Rational::from_int(2)).unwrap()]);
        assert_eq!(solve_segcontpnt(&inst), Some(Rational::zero()));
    }
}
