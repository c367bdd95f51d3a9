use super::{EqDistInstance, Quad, SegContPntInstance, ThreeSumInstance, ThreeSumPrimeInstance, Triple};
use crate::error::{Error, Result};
use crate::geom::{Interval, IntervalSet};
use crate::rational::Rational;

fn max_abs<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values.into_iter().map(Rational::abs).max().unwrap_or_default()
}

/// `A = S`, `B = S`, `C = -S`: `a + b = c` iff `s_i + s_j + s_k = 0`.
pub fn reduce_3sum_to_prime(inst: &ThreeSumInstance) -> ThreeSumPrimeInstance {
    let s = inst.values().to_vec();
    let c = s.iter().map(|x| -x).collect();
    ThreeSumPrimeInstance::new(s.clone(), s, c).expect("equal sizes")
}

/// Embeds `A + D`, `B + 2D` and `-(C + 3D)` into one set, with
/// `D = 10 (1 + max |x|)`. A zero-sum triple must take one element from
/// each block: any other mix of blocks sums to at least `D - 3 max |x|`
/// in absolute value.
pub fn reduce_prime_to_3sum(inst: &ThreeSumPrimeInstance) -> ThreeSumInstance {
    let delta = Rational::from_int(10) * (Rational::one() + max_abs(inst.values()));
    let two = &delta * Rational::from_int(2);
    let three = &delta * Rational::from_int(3);
    let mut s = Vec::with_capacity(3 * inst.n());
    s.extend(inst.a().iter().map(|a| a + &delta));
    s.extend(inst.b().iter().map(|b| b + &two));
    s.extend(inst.c().iter().map(|c| -(c + &three)));
    ThreeSumInstance::new(s).expect("non-empty")
}

/// Affine map into `(0, 1)`: `a -> s a + 1/4`, `b -> s b + 1/4`,
/// `c -> s c + 1/2` with `s = 1 / (8 (max |x| + 1))`. Preserves `a + b = c`
/// exactly; `A`, `B` land in `(1/8, 3/8)` and `C` in `(3/8, 5/8)`.
pub fn normalize_to_unit_interval(inst: &ThreeSumPrimeInstance) -> ThreeSumPrimeInstance {
    let scale = (Rational::from_int(8) * (max_abs(inst.values()) + Rational::one())).recip();
    let beta = Rational::frac(1, 4);
    let two_beta = Rational::frac(1, 2);
    let map = |xs: &[Rational], off: &Rational| xs.iter().map(|x| &(x * &scale) + off).collect::<Vec<_>>();
    ThreeSumPrimeInstance::new(map(inst.a(), &beta), map(inst.b(), &beta), map(inst.c(), &two_beta))
        .expect("sizes unchanged")
}

/// `P = {100 i, 100 i + 3 - c_i : i = 1..n}` (stored pairwise, `100 i`
/// first) and `Q = A ∪ {3 - b : b in B}` (`A` first). Requires every value
/// in the open unit interval.
pub fn reduce_prime_to_eqdist(inst: &ThreeSumPrimeInstance) -> Result<EqDistInstance> {
    let zero = Rational::zero();
    let one = Rational::one();
    if let Some(bad) = inst.values().find(|x| **x <= zero || **x >= one) {
        return Err(Error::PreconditionViolated(format!(
            "value {bad} outside (0, 1); normalize the instance first"
        )));
    }
    let three = Rational::from_int(3);
    let mut p = Vec::with_capacity(2 * inst.n());
    for (idx, c) in inst.c().iter().enumerate() {
        let base = Rational::from_int(100 * (idx as i64 + 1));
        p.push(base.clone());
        p.push(&(&base + &three) - c);
    }
    let mut q: Vec<Rational> = inst.a().to_vec();
    q.extend(inst.b().iter().map(|b| &three - b));
    Ok(EqDistInstance::with_source(p, q, inst.n()))
}

/// Adds the padding intervals `[-100 (n-1), -94]` and `[100, 100 (n-1) + 6]`
/// around the (point-interval) set `Q`. Only valid on images of
/// [`reduce_prime_to_eqdist`] with `n >= 2`.
pub fn extend_to_segcontpnt(eq: &EqDistInstance) -> Result<SegContPntInstance> {
    let n = eq.source_n().ok_or_else(|| {
        Error::PreconditionViolated("EqDist instance was not produced by the 3SUM' reduction".into())
    })?;
    if n < 2 {
        return Err(Error::PreconditionViolated(
            "padding intervals are empty for n = 1; answer with the EqDist solver instead".into(),
        ));
    }
    let n = n as i64;
    let left = Interval::new(Rational::from_int(-100 * (n - 1)), Rational::from_int(-94))?;
    let right = Interval::new(Rational::from_int(100), Rational::from_int(100 * (n - 1) + 6))?;
    let mut intervals = vec![left, right];
    intervals.extend(IntervalSet::from_points(eq.q()).intervals().iter().cloned());
    let q = IntervalSet::new(intervals)?;
    SegContPntInstance::new(eq.p().to_vec(), q)
}

/// Witness transfer along `3SUM' -> EqDist`.
pub fn map_prime_witness_to_eqdist(inst: &ThreeSumPrimeInstance, w: &Triple) -> Quad {
    Quad { p1: 2 * w.k + 1, p2: 2 * w.k, q1: inst.n() + w.j, q2: w.i }
}

/// Witness transfer along `3SUM -> 3SUM'`: `(i, j, k)` solves the 3SUM
/// instance exactly when it solves the reduced 3SUM' instance, up to
/// reordering.
pub fn map_prime_witness_to_3sum(w: &Triple) -> Triple {
    let mut idx = [w.i, w.j, w.k];
    idx.sort_unstable();
    Triple { i: idx[0], j: idx[1], k: idx[2] }
}
