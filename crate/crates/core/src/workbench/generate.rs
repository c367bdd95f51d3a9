use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::Config;
use super::instance::{GenMode, Instance, InstanceFile, Kind, Provenance};
use super::pipeline::reduce_file;
use crate::error::{Error, Result};
use crate::geom::{convex_hull, ConvexPolygon, Interval, IntervalSet, Point2};
use crate::linear::{
    solve_3sum, solve_3sum_prime, solve_eqdist, solve_segcontpnt, EqDistInstance, Quad, SegContPntInstance,
    ThreeSumInstance, ThreeSumPrimeInstance, Triple, Witness,
};
use crate::oracle::{brute_3sum, brute_3sum_prime, brute_eqdist, brute_segcontpnt};
use crate::rational::Rational;
use crate::translation::solve_cpct;

/// Sizes up to this use the brute-force oracle when rejection sampling.
const BRUTE_SAMPLING_N: usize = 10;

fn ints(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Rational> {
    (0..n).map(|_| Rational::from_int(rng.gen_range(-range..=range))).collect()
}

fn value_range(n: usize) -> i64 {
    (4 * (n as i64).pow(3)).max(100)
}

/// Deterministic instance generation.
///
/// `planted-yes` embeds a recorded witness; `random` draws uniformly;
/// `adversarial-no` plants near misses (off by one) and rejection-samples
/// until the instance is NO, checking with the brute-force oracle for
/// `n <= 10` and the fast solver otherwise. Kinds reached only by reduction
/// are produced from a generated SegContPnt instance.
pub fn generate(kind: Kind, n: usize, mode: GenMode, seed: u64, config: &Config) -> Result<InstanceFile> {
    if n == 0 || n > config.max_n {
        return Err(Error::BoundsExceeded(format!("n = {n} outside 1..={}", config.max_n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut prov = Provenance { seed: Some(seed), mode: Some(mode), n: Some(n), ..Default::default() };
    let instance = match kind {
        Kind::ThreeSum => {
            let (s, w) = gen_3sum(&mut rng, n, mode, config)?;
            prov.planted = w.map(Witness::TripleIdx);
            Instance::ThreeSum(s)
        }
        Kind::ThreeSumPrime => {
            let (s, w) = gen_3sum_prime(&mut rng, n, mode, config)?;
            prov.planted = w.map(Witness::TripleIdx);
            Instance::ThreeSumPrime(s)
        }
        Kind::EqDist => {
            let (e, w) = gen_eqdist(&mut rng, n, mode, config)?;
            prov.planted = w.map(Witness::QuadIdx);
            Instance::EqDist(e)
        }
        Kind::SegContPnt => {
            let (s, v) = gen_segcontpnt(&mut rng, n, mode, config)?;
            prov.planted = v.map(|v| Witness::Shift { v });
            Instance::SegContPnt(s)
        }
        Kind::Cpct => {
            let (p, q) = gen_cpct(&mut rng, n, mode, config)?;
            Instance::Cpct { p, q }
        }
        Kind::PolyCont | Kind::Rotation | Kind::Rigid | Kind::Hausdorff => {
            let source = generate(Kind::SegContPnt, n, mode, seed, config)?;
            return reduce_file(&source, kind);
        }
    };
    Ok(InstanceFile { instance, provenance: Some(prov) })
}

fn rejection<T>(config: &Config, mut draw: impl FnMut() -> T, is_no: impl Fn(&T) -> bool) -> Result<T> {
    for _ in 0..config.max_attempts {
        let candidate = draw();
        if is_no(&candidate) {
            return Ok(candidate);
        }
    }
    Err(Error::BoundsExceeded(format!("no NO instance found in {} attempts", config.max_attempts)))
}

fn gen_3sum(
    rng: &mut ChaCha8Rng,
    n: usize,
    mode: GenMode,
    config: &Config,
) -> Result<(ThreeSumInstance, Option<Triple>)> {
    let range = value_range(n);
    match mode {
        GenMode::Random => Ok((ThreeSumInstance::new(ints(rng, n, range))?, None)),
        GenMode::PlantedYes => {
            let mut s = ints(rng, n, range);
            let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            s[k] = -(&s[i] + &s[j]);
            if k == i || k == j {
                // x + x + x = 0 forces zero; keep the witness valid
                s[k] = Rational::zero();
                s[i] = Rational::zero();
                s[j] = Rational::zero();
            }
            let mut idx = [i, j, k];
            idx.sort_unstable();
            Ok((ThreeSumInstance::new(s)?, Some(Triple { i: idx[0], j: idx[1], k: idx[2] })))
        }
        GenMode::AdversarialNo => {
            let inst = rejection(
                config,
                || {
                    let mut s = ints(rng, n, range);
                    if n >= 3 {
                        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                        let k = rng.gen_range(0..n);
                        if k != i && k != j {
                            s[k] = -(&s[i] + &s[j]) + Rational::one();
                        }
                    }
                    ThreeSumInstance::new(s).expect("non-empty")
                },
                |s| {
                    if n <= BRUTE_SAMPLING_N {
                        brute_3sum(s, Default::default()).is_none()
                    } else {
                        solve_3sum(s).is_none()
                    }
                },
            )?;
            Ok((inst, None))
        }
    }
}

fn gen_3sum_prime(
    rng: &mut ChaCha8Rng,
    n: usize,
    mode: GenMode,
    config: &Config,
) -> Result<(ThreeSumPrimeInstance, Option<Triple>)> {
    let range = value_range(n);
    let draw = |rng: &mut ChaCha8Rng| (ints(rng, n, range), ints(rng, n, range), ints(rng, n, range));
    match mode {
        GenMode::Random => {
            let (a, b, c) = draw(rng);
            Ok((ThreeSumPrimeInstance::new(a, b, c)?, None))
        }
        GenMode::PlantedYes => {
            let (a, b, mut c) = draw(rng);
            let w = Triple { i: rng.gen_range(0..n), j: rng.gen_range(0..n), k: rng.gen_range(0..n) };
            c[w.k] = &a[w.i] + &b[w.j];
            Ok((ThreeSumPrimeInstance::new(a, b, c)?, Some(w)))
        }
        GenMode::AdversarialNo => {
            let inst = rejection(
                config,
                || {
                    let (a, b, mut c) = draw(rng);
                    let k = rng.gen_range(0..n);
                    let off = if rng.gen_bool(0.5) { 1 } else { -1 };
                    c[k] = &a[rng.gen_range(0..n)] + &b[rng.gen_range(0..n)] + Rational::from_int(off);
                    ThreeSumPrimeInstance::new(a, b, c).expect("equal sizes")
                },
                |s| {
                    if n <= BRUTE_SAMPLING_N {
                        brute_3sum_prime(s).is_none()
                    } else {
                        solve_3sum_prime(s).is_none()
                    }
                },
            )?;
            Ok((inst, None))
        }
    }
}

fn gen_eqdist(
    rng: &mut ChaCha8Rng,
    n: usize,
    mode: GenMode,
    config: &Config,
) -> Result<(EqDistInstance, Option<Quad>)> {
    let range = value_range(n);
    let size = n.max(2);
    match mode {
        GenMode::Random => Ok((EqDistInstance::new(ints(rng, size, range), ints(rng, size, range))?, None)),
        GenMode::PlantedYes => {
            let p = ints(rng, size, range);
            let mut q = ints(rng, size, range);
            let idx: Vec<usize> = (0..size).collect();
            let pick = |rng: &mut ChaCha8Rng| {
                let two: Vec<usize> = idx.choose_multiple(rng, 2).copied().collect();
                (two[0], two[1])
            };
            let (p1, p2) = pick(rng);
            let (q1, q2) = pick(rng);
            q[q2] = &q[q1] - &(&p[p1] - &p[p2]);
            Ok((EqDistInstance::new(p, q)?, Some(Quad { p1, p2, q1, q2 })))
        }
        GenMode::AdversarialNo => {
            let inst = rejection(
                config,
                || {
                    let p = ints(rng, size, range);
                    let mut q = ints(rng, size, range);
                    q[1] = &q[0] + &(&p[1] - &p[0]) + Rational::one();
                    EqDistInstance::new(p, q).expect("non-empty")
                },
                |e| if size <= BRUTE_SAMPLING_N { brute_eqdist(e).is_none() } else { solve_eqdist(e).is_none() },
            )?;
            Ok((inst, None))
        }
    }
}

/// Union of closed intervals as a sorted disjoint set.
fn union_intervals(mut ivs: Vec<(Rational, Rational)>) -> IntervalSet {
    ivs.sort();
    let mut merged: Vec<(Rational, Rational)> = Vec::new();
    for (lo, hi) in ivs {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    IntervalSet::new(merged.into_iter().map(|(lo, hi)| Interval::new(lo, hi).expect("ordered")).collect())
        .expect("disjoint after merging")
}

fn distinct_points(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Rational> {
    let mut pts: Vec<i64> = Vec::with_capacity(n);
    while pts.len() < n {
        let x = rng.gen_range(0..=range);
        if !pts.contains(&x) {
            pts.push(x);
        }
    }
    pts.into_iter().map(Rational::from_int).collect()
}

fn gen_segcontpnt(
    rng: &mut ChaCha8Rng,
    n: usize,
    mode: GenMode,
    config: &Config,
) -> Result<(SegContPntInstance, Option<Rational>)> {
    let range = (10 * n as i64).max(20);
    // intervals hugging the shifted points, each with a little slack
    let hugging = |rng: &mut ChaCha8Rng, p: &[Rational], u: i64, skip: Option<usize>| {
        let mut ivs: Vec<(Rational, Rational)> = Vec::new();
        for (i, x) in p.iter().enumerate() {
            if Some(i) == skip {
                continue;
            }
            let c = x + &Rational::from_int(u);
            let left = Rational::frac(rng.gen_range(0..=2), 4);
            let right = Rational::frac(rng.gen_range(0..=2), 4);
            ivs.push((&c - &left, &c + &right));
        }
        for _ in 0..rng.gen_range(0..=n) {
            let lo = rng.gen_range(-range..=2 * range);
            ivs.push((Rational::from_int(lo), Rational::from_int(lo) + Rational::frac(rng.gen_range(0..=2), 2)));
        }
        ivs
    };
    match mode {
        GenMode::Random => {
            let p = distinct_points(rng, n, range);
            let ivs = (0..n)
                .map(|_| {
                    let lo = Rational::from_int(rng.gen_range(-range..=2 * range));
                    let hi = &lo + &Rational::from_int(rng.gen_range(0..=3));
                    (lo, hi)
                })
                .collect();
            Ok((SegContPntInstance::new(p, union_intervals(ivs))?, None))
        }
        GenMode::PlantedYes => {
            let p = distinct_points(rng, n, range);
            let u = rng.gen_range(-range..=range);
            let ivs = hugging(rng, &p, u, None);
            let inst = SegContPntInstance::new(p, union_intervals(ivs))?;
            Ok((inst, Some(Rational::from_int(u))))
        }
        GenMode::AdversarialNo => {
            let inst = rejection(
                config,
                || {
                    let p = distinct_points(rng, n.max(2), range);
                    let u = rng.gen_range(-range..=range);
                    let skip = rng.gen_range(0..p.len());
                    let mut ivs = hugging(rng, &p, u, Some(skip));
                    if ivs.is_empty() {
                        ivs.push((Rational::zero(), Rational::zero()));
                    }
                    SegContPntInstance::new(p, union_intervals(ivs)).expect("non-empty")
                },
                |s| {
                    if n <= BRUTE_SAMPLING_N {
                        brute_segcontpnt(s).is_none()
                    } else {
                        solve_segcontpnt(s).is_none()
                    }
                },
            )?;
            Ok((inst, None))
        }
    }
}

fn random_convex(rng: &mut ChaCha8Rng, n: usize, radius: i64) -> ConvexPolygon {
    loop {
        let pts: Vec<Point2> = (0..n.max(3))
            .map(|_| Point2::from_ints(rng.gen_range(-radius..=radius), rng.gen_range(-radius..=radius)))
            .collect();
        if let Ok(hull) = convex_hull(&pts) {
            return hull;
        }
    }
}

/// `k (x - c) + c + shift` for every vertex `x`, with `c` the first vertex;
/// for `k <= 1` the image minus `shift` lies inside the original.
fn scaled(poly: &ConvexPolygon, k: &Rational, shift: &Point2) -> ConvexPolygon {
    let c = poly.vertices()[0].clone();
    let pts: Vec<Point2> = poly.vertices().iter().map(|v| &(&(v - &c).scale(k) + &c) + shift).collect();
    ConvexPolygon::new(pts).expect("scaling keeps convexity")
}

/// Convex pairs with at most `n` vertices each (`n >= 3`).
fn gen_cpct(rng: &mut ChaCha8Rng, n: usize, mode: GenMode, config: &Config) -> Result<(ConvexPolygon, ConvexPolygon)> {
    if n < 3 {
        return Err(Error::BoundsExceeded("convex polygons need n >= 3".into()));
    }
    let radius = 20;
    match mode {
        GenMode::Random => {
            let q = random_convex(rng, n, radius);
            let p = random_convex(rng, n, radius / 2);
            Ok((p, q))
        }
        GenMode::PlantedYes => {
            let q = random_convex(rng, n, radius);
            let shift = Point2::from_ints(rng.gen_range(-50..=50), rng.gen_range(-50..=50));
            let p = scaled(&q, &Rational::frac(rng.gen_range(1..=4), 5), &shift);
            Ok((p, q))
        }
        GenMode::AdversarialNo => rejection(
            config,
            || {
                let q = random_convex(rng, n, radius);
                let p = scaled(&random_convex(rng, n, radius), &Rational::frac(3, 4), &Point2::origin());
                (p, q)
            },
            |(p, q)| solve_cpct(p, q).is_none(),
        ),
    }
}
