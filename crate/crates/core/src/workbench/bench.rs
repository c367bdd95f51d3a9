use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linear::{solve_3sum, solve_3sum_prime, ThreeSumInstance, ThreeSumMode, ThreeSumPrimeInstance};
use crate::oracle::{brute_3sum, brute_3sum_prime};
use crate::rational::Rational;

/// Solvers that can be timed.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchSolver {
    Solve3Sum,
    Brute3Sum,
    Solve3SumPrime,
    Brute3SumPrime,
}

impl BenchSolver {
    pub fn name(self) -> &'static str {
        match self {
            BenchSolver::Solve3Sum => "solve_3sum",
            BenchSolver::Brute3Sum => "brute_3sum",
            BenchSolver::Solve3SumPrime => "solve_3sum_prime",
            BenchSolver::Brute3SumPrime => "brute_3sum_prime",
        }
    }
}

impl std::str::FromStr for BenchSolver {
    type Err = Error;

    fn from_str(s: &str) -> Result<BenchSolver> {
        [BenchSolver::Solve3Sum, BenchSolver::Brute3Sum, BenchSolver::Solve3SumPrime, BenchSolver::Brute3SumPrime]
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown solver {s:?}")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BenchRecord {
    pub solver: String,
    pub n: usize,
    pub median_ns: u128,
    pub min_ns: u128,
    pub reps: usize,
}

/// Odd integers never sum to zero in threes, so every run scans the whole
/// instance without an early exit.
fn odd_values(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let range = (n as i64).pow(2).max(1000);
    (0..n).map(|_| Rational::from_int(2 * rng.gen_range(-range..range) + 1)).collect()
}

/// Times `solver` on one NO instance per size: one warm-up run is
/// discarded, then `reps` (at least 3) timed runs give the median and
/// minimum. Sizes are sorted and deduplicated.
pub fn bench(solver: BenchSolver, sizes: &[usize], reps: usize, seed: u64) -> Vec<BenchRecord> {
    let reps = reps.max(3);
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sizes
        .into_iter()
        .map(|n| {
            let run: Box<dyn Fn() -> bool> = match solver {
                BenchSolver::Solve3Sum | BenchSolver::Brute3Sum => {
                    let inst = ThreeSumInstance::new(odd_values(&mut rng, n.max(1))).expect("non-empty");
                    if solver == BenchSolver::Solve3Sum {
                        Box::new(move || solve_3sum(&inst).is_some())
                    } else {
                        Box::new(move || brute_3sum(&inst, ThreeSumMode::AllowRepeats).is_some())
                    }
                }
                BenchSolver::Solve3SumPrime | BenchSolver::Brute3SumPrime => {
                    // odd + odd is even, so no sum lands in an all-odd C
                    let a = odd_values(&mut rng, n.max(1));
                    let b = odd_values(&mut rng, n.max(1));
                    let c = odd_values(&mut rng, n.max(1));
                    let inst = ThreeSumPrimeInstance::new(a, b, c).expect("equal sizes");
                    if solver == BenchSolver::Solve3SumPrime {
                        Box::new(move || solve_3sum_prime(&inst).is_some())
                    } else {
                        Box::new(move || brute_3sum_prime(&inst).is_some())
                    }
                }
            };
            std::hint::black_box(run());
            let mut times: Vec<u128> = (0..reps)
                .map(|_| {
                    let start = Instant::now();
                    std::hint::black_box(run());
                    start.elapsed().as_nanos()
                })
                .collect();
            times.sort_unstable();
            BenchRecord { solver: solver.name().into(), n, median_ns: times[reps / 2], min_ns: times[0], reps }
        })
        .collect()
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("solver,n,median_ns,min_ns,reps\n");
    for r in records {
        out.push_str(&format!("{},{},{},{},{}\n", r.solver, r.n, r.median_ns, r.min_ns, r.reps));
    }
    out
}

/// Ratios of consecutive medians.
pub fn doubling_ratios(records: &[BenchRecord]) -> Vec<f64> {
    records.windows(2).map(|w| w[1].median_ns as f64 / w[0].median_ns.max(1) as f64).collect()
}
