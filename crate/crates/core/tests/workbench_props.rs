use proptest::prelude::*;
use sumhard::rotation::Answer;
use sumhard::workbench::{audit, generate, run_pipeline, Config, GenMode, InstanceFile, Kind};

fn mode() -> impl Strategy<Value = GenMode> {
    prop_oneof![Just(GenMode::PlantedYes), Just(GenMode::Random), Just(GenMode::AdversarialNo)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn files_round_trip(kind in prop::sample::select(Kind::ALL.to_vec()), n in 2usize..6, mode in mode(), seed in any::<u64>()) {
        let file = generate(kind, n, mode, seed, &Config::default()).unwrap();
        let back = InstanceFile::from_json(&file.to_json()).unwrap();
        prop_assert_eq!(&back.instance, &file.instance);
        prop_assert_eq!(back.to_json(), file.to_json());
        back.validate().unwrap();
    }

    #[test]
    fn pipeline_is_deterministic_and_sound(n in 2usize..6, mode in mode(), seed in any::<u64>()) {
        let config = Config::default();
        let file = generate(Kind::ThreeSumPrime, n, mode, seed, &config).unwrap();
        let chain = [Kind::ThreeSumPrime, Kind::EqDist, Kind::SegContPnt, Kind::PolyCont];
        let first = run_pipeline(&file, &chain, &config).unwrap();
        prop_assert_eq!(&first, &run_pipeline(&file, &chain, &config).unwrap());
        for rec in &first.records {
            let decided: Vec<Answer> = rec.stages.iter().map(|s| s.answer).filter(|a| *a != Answer::Uncertain).collect();
            let same = decided.windows(2).all(|w| w[0] == w[1]);
            prop_assert_eq!(rec.agreement, same && rec.stages.iter().all(|s| s.witness_verified != Some(false)));
            prop_assert!(rec.agreement);
        }
    }
}

#[test]
fn regression_corpus_has_no_disagreements() {
    let config = Config::default();
    let files: Vec<_> = (0..60u64)
        .map(|i| {
            let mode = [GenMode::PlantedYes, GenMode::Random, GenMode::AdversarialNo][(i % 3) as usize];
            (format!("{i:03}"), generate(Kind::SegContPnt, 2 + (i % 5) as usize, mode, 900 + i, &config).unwrap())
        })
        .collect();
    let chain = [Kind::SegContPnt, Kind::PolyCont];
    let report = audit(&files, &chain, &config).unwrap();
    assert!(report.is_clean(), "{:?}", report.summary);
    assert_eq!(report, audit(&files, &chain, &config).unwrap());
}

#[test]
fn files_and_figures_on_disk() {
    use sumhard::workbench::{render_svg, Instance, RenderObject};
    let dir = tempfile::tempdir().unwrap();
    let file = generate(Kind::Rotation, 3, GenMode::PlantedYes, 5, &Config::default()).unwrap();
    let path = dir.path().join("rot.json");
    file.write(&path).unwrap();
    assert_eq!(InstanceFile::read(&path).unwrap(), file);

    let Instance::Rotation { a, b } = &file.instance else { panic!() };
    let svg = dir.path().join("rot.svg");
    render_svg(&RenderObject::WedgePair(a.clone(), b.clone()), &svg).unwrap();
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<path").count(), 2);
    // both wedges start at the shared apex
    let starts: Vec<&str> = text.split("d=\"M").skip(1).map(|s| s.split(" L").next().unwrap()).collect();
    assert_eq!(starts[0], starts[1]);

    let missing = dir.path().join("no/such/dir/x.svg");
    assert!(matches!(
        render_svg(&RenderObject::WedgePair(a.clone(), b.clone()), &missing),
        Err(sumhard::Error::Io(_))
    ));
}
