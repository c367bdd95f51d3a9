use super::*;
use crate::error::Error;
use crate::geom::{Interval, IntervalSet};
use crate::linear::{verify_3sum_prime, verify_eqdist, verify_segcontpnt, Witness};
use crate::oracle::{brute_3sum_prime, brute_eqdist, brute_segcontpnt};
use crate::rational::Rational;
use crate::rotation::Answer;
use crate::translation::comb_of_intervals;

fn cfg() -> Config {
    Config::default()
}

#[test]
fn generation_is_deterministic() {
    for kind in Kind::ALL {
        let a = generate(kind, 4, GenMode::PlantedYes, 7, &cfg()).unwrap();
        let b = generate(kind, 4, GenMode::PlantedYes, 7, &cfg()).unwrap();
        assert_eq!(a.to_json(), b.to_json(), "{kind}");
    }
    let a = generate(Kind::ThreeSum, 6, GenMode::Random, 1, &cfg()).unwrap();
    let b = generate(Kind::ThreeSum, 6, GenMode::Random, 2, &cfg()).unwrap();
    assert_ne!(a.to_json(), b.to_json());
}

#[test]
fn planted_witnesses_verify() {
    for seed in 0..20 {
        let f = generate(Kind::ThreeSumPrime, 5, GenMode::PlantedYes, seed, &cfg()).unwrap();
        let (Instance::ThreeSumPrime(s), Some(Witness::TripleIdx(w))) =
            (&f.instance, f.provenance.as_ref().unwrap().planted.clone())
        else {
            panic!("shape")
        };
        assert!(verify_3sum_prime(s, &w));

        let f = generate(Kind::EqDist, 5, GenMode::PlantedYes, seed, &cfg()).unwrap();
        let (Instance::EqDist(e), Some(Witness::QuadIdx(w))) =
            (&f.instance, f.provenance.as_ref().unwrap().planted.clone())
        else {
            panic!("shape")
        };
        assert!(verify_eqdist(e, &w));

        let f = generate(Kind::SegContPnt, 5, GenMode::PlantedYes, seed, &cfg()).unwrap();
        let (Instance::SegContPnt(s), Some(Witness::Shift { v })) =
            (&f.instance, f.provenance.as_ref().unwrap().planted.clone())
        else {
            panic!("shape")
        };
        assert!(verify_segcontpnt(s, &v));
    }
}

#[test]
fn adversarial_instances_are_no() {
    for seed in 0..10 {
        let f = generate(Kind::ThreeSumPrime, 6, GenMode::AdversarialNo, seed, &cfg()).unwrap();
        let Instance::ThreeSumPrime(s) = &f.instance else { panic!() };
        assert_eq!(brute_3sum_prime(s), None);
        let f = generate(Kind::EqDist, 6, GenMode::AdversarialNo, seed, &cfg()).unwrap();
        let Instance::EqDist(e) = &f.instance else { panic!() };
        assert_eq!(brute_eqdist(e), None);
        let f = generate(Kind::SegContPnt, 6, GenMode::AdversarialNo, seed, &cfg()).unwrap();
        let Instance::SegContPnt(s) = &f.instance else { panic!() };
        assert_eq!(brute_segcontpnt(s), None);
    }
}

#[test]
fn json_round_trip_every_kind() {
    for kind in Kind::ALL {
        for mode in [GenMode::PlantedYes, GenMode::AdversarialNo] {
            let f = generate(kind, 3, mode, 11, &cfg()).unwrap();
            let text = f.to_json();
            let back = InstanceFile::from_json(&text).unwrap();
            assert_eq!(back.to_json(), text, "{kind}");
            assert_eq!(back.kind(), kind);
        }
    }
}

#[test]
fn bounds_and_chain_errors() {
    assert!(matches!(generate(Kind::ThreeSum, 0, GenMode::Random, 0, &cfg()), Err(Error::BoundsExceeded(_))));
    let small = Config { max_n: 5, ..cfg() };
    assert!(matches!(generate(Kind::ThreeSum, 6, GenMode::Random, 0, &small), Err(Error::BoundsExceeded(_))));
    assert!(matches!(
        validate_chain(Kind::EqDist, &[Kind::ThreeSumPrime, Kind::EqDist]),
        Err(Error::ChainInvalid(_))
    ));
    assert!(matches!(validate_chain(Kind::PolyCont, &[Kind::PolyCont, Kind::Rotation]), Err(Error::ChainInvalid(_))));
    assert!(validate_chain(Kind::ThreeSumPrime, &[Kind::ThreeSumPrime, Kind::EqDist, Kind::SegContPnt]).is_ok());
}

#[test]
fn pipeline_agrees_on_small_chain() {
    let chain = [Kind::ThreeSumPrime, Kind::EqDist, Kind::SegContPnt, Kind::PolyCont];
    let files: Vec<_> = (0..6)
        .map(|seed| {
            let mode = if seed % 2 == 0 { GenMode::PlantedYes } else { GenMode::AdversarialNo };
            (format!("i{seed}"), generate(Kind::ThreeSumPrime, 3, mode, seed, &cfg()).unwrap())
        })
        .collect();
    let report = audit(&files, &chain, &cfg()).unwrap();
    assert!(report.is_clean(), "{report:?}");
    assert_eq!(report.summary.instances, 6);
    for (rec, (_, f)) in report.records.iter().zip(&files) {
        let planted = f.provenance.as_ref().unwrap().planted.is_some();
        assert_eq!(rec.stages.len(), chain.len());
        assert!(rec.stages.iter().all(|s| s.answer == if planted { Answer::Yes } else { Answer::No }));
    }
}

#[test]
fn bench_empty_and_csv() {
    assert!(bench(BenchSolver::Solve3Sum, &[], 3, 0).is_empty());
    let recs = bench(BenchSolver::Brute3Sum, &[8, 4, 8], 1, 0);
    assert_eq!(recs.iter().map(|r| r.n).collect::<Vec<_>>(), vec![4, 8]);
    assert!(recs.iter().all(|r| r.reps == 3 && r.min_ns <= r.median_ns));
    let csv = to_csv(&recs);
    assert!(csv.starts_with("solver,n,median_ns,min_ns,reps\n"));
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn comb_svg_has_one_closed_path() {
    let iv = |a, b| Interval::new(Rational::from_int(a), Rational::from_int(b)).unwrap();
    let q = IntervalSet::new(vec![iv(0, 1), iv(2, 3)]).unwrap();
    let comb_q = comb_of_intervals(&q).unwrap();
    let svg = svg_string(&RenderObject::Comb(comb_q));
    assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<path").count(), 1);
    let d = svg.split("d=\"").nth(1).unwrap().split('"').next().unwrap();
    assert_eq!(d.matches(['M', 'L']).count(), 8);
    assert!(d.ends_with('Z'));
}

#[test]
fn gadget_svg_shows_four_lines() {
    let f = generate(Kind::Hausdorff, 2, GenMode::PlantedYes, 3, &cfg()).unwrap();
    let Instance::Hausdorff { a, b, eps } = &f.instance else { panic!() };
    let svg = svg_string(&RenderObject::HausdorffGadget { a: a.clone(), b: b.clone(), eps: eps.clone() });
    assert_eq!(svg.matches("class=\"gadget-line\"").count(), 4);
}

#[test]
fn config_file_parsing() {
    let c = Config::parse("# comment\ncubic_cutoff = 12\nrotation_tol=1e-9\n").unwrap();
    assert_eq!(c.cubic_cutoff, 12);
    assert_eq!(c.rotation_tol, 1e-9);
    assert!(Config::parse("nonsense = 1").is_err());
}
