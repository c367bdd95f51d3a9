use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::Config;
use super::instance::{Instance, InstanceFile, Kind};
use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::hausdorff::{certify_threshold, compute_epsilon, gadget_search_box_for_sets, hausdorff_at, reduce_to_hausdorff};
use crate::linear::{
    extend_to_segcontpnt, normalize_to_unit_interval, reduce_3sum_to_prime, reduce_prime_to_3sum,
    reduce_prime_to_eqdist, solve_3sum, solve_3sum_prime, solve_eqdist, solve_segcontpnt, verify_3sum,
    verify_3sum_prime, verify_eqdist, verify_segcontpnt, ThreeSumMode,
};
use crate::oracle::{brute_3sum, brute_3sum_prime, brute_eqdist, brute_segcontpnt};
use crate::rotation::{contains_rotated, pad_and_normalize, solve_rigid, solve_rotation, squeeze_params, wedges_for, Answer};
use crate::translation::{
    build_comb_pair, convex_contains_at, polygon_contains_at, solve_cpct, solve_polycont, CombParams,
};

/// Applies one edge of the reduction DAG.
pub fn reduce_step(inst: &Instance, to: Kind) -> Result<Instance> {
    let out = match (inst, to) {
        (Instance::ThreeSum(s), Kind::ThreeSumPrime) => Instance::ThreeSumPrime(reduce_3sum_to_prime(s)),
        (Instance::ThreeSumPrime(s), Kind::ThreeSum) => Instance::ThreeSum(reduce_prime_to_3sum(s)),
        (Instance::ThreeSumPrime(s), Kind::EqDist) => {
            Instance::EqDist(reduce_prime_to_eqdist(&normalize_to_unit_interval(s))?)
        }
        (Instance::EqDist(e), Kind::SegContPnt) => Instance::SegContPnt(extend_to_segcontpnt(e)?),
        (Instance::SegContPnt(s), Kind::PolyCont) => {
            let (p, q) = build_comb_pair(s, &CombParams::default_for(s))?;
            Instance::PolyCont { p, q }
        }
        (Instance::SegContPnt(s), Kind::Rotation) => {
            let (a, b) = wedges_for(&pad_and_normalize(s))?;
            Instance::Rotation { a, b }
        }
        (Instance::SegContPnt(s), Kind::Rigid) => {
            let (a, b) = wedges_for(&pad_and_normalize(s))?;
            Instance::Rigid { a, b }
        }
        (Instance::SegContPnt(s), Kind::Hausdorff) => {
            let (a, b, bound) = reduce_to_hausdorff(s);
            Instance::Hausdorff { a, b, eps: bound.epsilon }
        }
        (from, to) => {
            return Err(Error::ChainInvalid(format!("no reduction from {} to {to}", from.kind())));
        }
    };
    Ok(out)
}

/// Reduces a file along one DAG edge and extends its provenance.
pub fn reduce_file(file: &InstanceFile, to: Kind) -> Result<InstanceFile> {
    let instance = reduce_step(&file.instance, to)?;
    let mut prov = file.provenance.clone().unwrap_or_default();
    prov.chain.push(file.kind());
    if let Instance::SegContPnt(s) = &file.instance {
        // parameters of the geometric step, for readers of the file
        match to {
            Kind::PolyCont => {
                prov.params.insert("tooth_width".into(), CombParams::default_for(s).tooth_width.to_string());
            }
            Kind::Rotation | Kind::Rigid => {
                let (scale, offset) = squeeze_params(s);
                prov.params.insert("squeeze_scale".into(), scale.to_string());
                prov.params.insert("squeeze_offset".into(), offset.to_string());
            }
            Kind::Hausdorff => {
                prov.params.insert("m_max".into(), compute_epsilon(s).m_max.to_string());
            }
            _ => {}
        }
    }
    Ok(InstanceFile { instance, provenance: Some(prov) })
}

/// Result of comparing a solver with its brute-force oracle.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleCheck {
    Agrees,
    Disagrees,
    /// the instance exceeds the configured brute-force cutoff
    Skipped,
    NotApplicable,
}

/// One solved instance along a chain.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct StageRecord {
    pub kind: Kind,
    pub answer: Answer,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// verdict of the independent verifier on the witness
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_verified: Option<bool>,
    pub oracle: OracleCheck,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn yes_no(found: bool) -> Answer {
    if found {
        Answer::Yes
    } else {
        Answer::No
    }
}

fn oracle_check(enabled: bool, answer: Answer, oracle: impl FnOnce() -> bool) -> OracleCheck {
    if !enabled {
        return OracleCheck::Skipped;
    }
    if yes_no(oracle()) == answer {
        OracleCheck::Agrees
    } else {
        OracleCheck::Disagrees
    }
}

fn fmt_point(t: &Point2) -> String {
    format!("({}, {})", t.x, t.y)
}

/// Solves an instance, verifies any witness and consults the brute-force
/// oracle when the size permits.
pub fn solve_instance(inst: &Instance, config: &Config) -> Result<StageRecord> {
    let record = |answer, witness, witness_verified, oracle| StageRecord {
        kind: inst.kind(),
        answer,
        witness,
        witness_verified,
        oracle,
        note: None,
    };
    let rec = match inst {
        Instance::ThreeSum(s) => {
            let w = solve_3sum(s);
            let answer = yes_no(w.is_some());
            let oracle = oracle_check(s.len() <= config.cubic_cutoff, answer, || {
                brute_3sum(s, ThreeSumMode::AllowRepeats).is_some()
            });
            record(
                answer,
                w.map(|w| format!("({}, {}, {})", w.i, w.j, w.k)),
                w.map(|w| verify_3sum(s, &w, ThreeSumMode::AllowRepeats)),
                oracle,
            )
        }
        Instance::ThreeSumPrime(s) => {
            let w = solve_3sum_prime(s);
            let answer = yes_no(w.is_some());
            let oracle = oracle_check(s.n() <= config.cubic_cutoff, answer, || brute_3sum_prime(s).is_some());
            record(
                answer,
                w.map(|w| format!("({}, {}, {})", w.i, w.j, w.k)),
                w.map(|w| verify_3sum_prime(s, &w)),
                oracle,
            )
        }
        Instance::EqDist(e) => {
            let w = solve_eqdist(e);
            let answer = yes_no(w.is_some());
            let size = e.p().len().max(e.q().len());
            let oracle = oracle_check(size <= config.quartic_cutoff, answer, || brute_eqdist(e).is_some());
            record(
                answer,
                w.map(|w| format!("({}, {}, {}, {})", w.p1, w.p2, w.q1, w.q2)),
                w.map(|w| verify_eqdist(e, &w)),
                oracle,
            )
        }
        Instance::SegContPnt(s) => {
            let v = solve_segcontpnt(s);
            let answer = yes_no(v.is_some());
            let size = s.p().len() + s.q().len();
            let oracle = oracle_check(size <= config.cubic_cutoff, answer, || brute_segcontpnt(s).is_some());
            let verified = v.as_ref().map(|v| verify_segcontpnt(s, v));
            record(answer, v.map(|v| v.to_string()), verified, oracle)
        }
        Instance::PolyCont { p, q } => {
            let w = solve_polycont(p, q);
            let verified = w.as_ref().map(|w| polygon_contains_at(p, &w.t, q));
            record(yes_no(w.is_some()), w.map(|w| fmt_point(&w.t)), verified, OracleCheck::NotApplicable)
        }
        Instance::Cpct { p, q } => {
            let w = solve_cpct(p, q);
            let answer = yes_no(w.is_some());
            let size = p.len().max(q.len());
            let oracle = oracle_check(size <= config.quartic_cutoff, answer, || {
                solve_polycont(p.as_polygon(), q.as_polygon()).is_some()
            });
            let verified = w.as_ref().map(|w| convex_contains_at(p, &w.t, q));
            record(answer, w.map(|w| fmt_point(&w.t)), verified, oracle)
        }
        Instance::Rotation { a, b } | Instance::Rigid { a, b } => {
            let verdict = if inst.kind() == Kind::Rigid {
                solve_rigid(a, b, config.rotation_tol)?
            } else {
                solve_rotation(a, b, config.rotation_tol)
            };
            let verified = verdict.witness_angle.map(|t| contains_rotated(a, b, t, 1e-12));
            let mut rec = record(
                verdict.answer,
                verdict.witness_angle.map(|t| format!("{t:e}")),
                verified,
                OracleCheck::NotApplicable,
            );
            rec.note = Some(format!("margin {:e}", verdict.margin));
            rec
        }
        Instance::Hausdorff { a, b, eps } => {
            let e = eps.to_f64();
            let search = gadget_search_box_for_sets(a, b, e)?;
            match certify_threshold(a, b, e, &search, e / 4.0, config.cell_limit) {
                Ok(bounds) => {
                    let answer = if bounds.upper < e {
                        Answer::Yes
                    } else if bounds.lower >= e {
                        Answer::No
                    } else {
                        Answer::Uncertain
                    };
                    // a YES carries the translation reaching `upper`, rechecked
                    // by a fresh evaluation there
                    let (witness, verified) = if answer == Answer::Yes {
                        let d = hausdorff_at(a, b, bounds.at);
                        (Some(format!("({:e}, {:e})", bounds.at.0, bounds.at.1)), Some(d.value + d.error < e))
                    } else {
                        (None, None)
                    };
                    let mut rec = record(answer, witness, verified, OracleCheck::NotApplicable);
                    rec.note = Some(format!("bounds [{:e}, {:e}], eps {e:e}", bounds.lower, bounds.upper));
                    rec
                }
                Err(Error::BudgetExceeded(msg)) => {
                    let mut rec = record(Answer::Uncertain, None, None, OracleCheck::NotApplicable);
                    rec.note = Some(format!("certification skipped: {msg}"));
                    rec
                }
                Err(other) => return Err(other),
            }
        }
    };
    Ok(rec)
}

/// One instance pushed through a reduction chain.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct AuditRecord {
    pub id: String,
    pub stages: Vec<StageRecord>,
    /// all decided answers equal, every oracle agrees and every witness
    /// verifies; `Uncertain` stages do not take part
    pub agreement: bool,
}

impl AuditRecord {
    fn from_stages(id: String, stages: Vec<StageRecord>) -> AuditRecord {
        let decided: Vec<Answer> =
            stages.iter().map(|s| s.answer).filter(|a| *a != Answer::Uncertain).collect();
        let agreement = decided.windows(2).all(|w| w[0] == w[1])
            && stages.iter().all(|s| s.oracle != OracleCheck::Disagrees && s.witness_verified != Some(false));
        AuditRecord { id, stages, agreement }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct AuditSummary {
    pub instances: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub oracle_checks: usize,
    pub oracle_skipped: usize,
    pub undecided_stages: usize,
}

#[derive(Clone, PartialEq, Debug, Default, Serialize, Deserialize)]
pub struct AuditReport {
    pub records: Vec<AuditRecord>,
    pub summary: AuditSummary,
}

impl AuditReport {
    fn from_records(mut records: Vec<AuditRecord>) -> AuditReport {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = AuditSummary { instances: records.len(), ..Default::default() };
        for r in &records {
            if r.agreement {
                summary.agreements += 1;
            } else {
                summary.disagreements += 1;
            }
            for s in &r.stages {
                match s.oracle {
                    OracleCheck::Agrees | OracleCheck::Disagrees => summary.oracle_checks += 1,
                    OracleCheck::Skipped => summary.oracle_skipped += 1,
                    OracleCheck::NotApplicable => {}
                }
                if s.answer == Answer::Uncertain {
                    summary.undecided_stages += 1;
                }
            }
        }
        AuditReport { records, summary }
    }

    pub fn is_clean(&self) -> bool {
        self.summary.disagreements == 0
    }
}

/// Checks that `chain` (optionally starting with the instance's own kind)
/// is a path in the reduction DAG from `start`.
pub fn validate_chain(start: Kind, chain: &[Kind]) -> Result<Vec<Kind>> {
    let steps: Vec<Kind> = match chain.first() {
        Some(&k) if k == start => chain[1..].to_vec(),
        _ => chain.to_vec(),
    };
    let mut at = start;
    for &k in &steps {
        if !at.reduces_to().contains(&k) {
            return Err(Error::ChainInvalid(format!("no reduction from {at} to {k}")));
        }
        at = k;
    }
    Ok(steps)
}

fn run_one(id: String, file: &InstanceFile, chain: &[Kind], config: &Config) -> Result<AuditRecord> {
    let steps = validate_chain(file.kind(), chain)?;
    let mut current = file.instance.clone();
    let mut stages = vec![solve_instance(&current, config)?];
    for k in steps {
        current = reduce_step(&current, k)?;
        stages.push(solve_instance(&current, config)?);
    }
    Ok(AuditRecord::from_stages(id, stages))
}

/// Applies each reduction of `chain` in turn, solving every intermediate
/// instance (and checking it against its oracle where the size permits).
pub fn run_pipeline(file: &InstanceFile, chain: &[Kind], config: &Config) -> Result<AuditReport> {
    Ok(AuditReport::from_records(vec![run_one("0".into(), file, chain, config)?]))
}

/// [`run_pipeline`] over a batch; instances run in parallel and records are
/// ordered by id.
pub fn audit(files: &[(String, InstanceFile)], chain: &[Kind], config: &Config) -> Result<AuditReport> {
    let records = files
        .par_iter()
        .map(|(id, file)| run_one(id.clone(), file, chain, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(AuditReport::from_records(records))
}

