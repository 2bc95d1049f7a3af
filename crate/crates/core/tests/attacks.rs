use robust_breakdown::breakdown::{
    empirical_fsbv, shear_attack, translation_attack, AttackSuite, ShearAttackConfig,
    TranslationAttackConfig,
};
use robust_breakdown::estimators::{CoordinatewiseMedian, Mcd, WeightedMean};
use robust_breakdown::geometry::read_csv;
use robust_breakdown::{DataSet, DataSetF32, UnitDirection};

fn data(name: &str) -> DataSet<f64> {
    read_csv(format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn every_record_replaces_exactly_m_points() {
    let x = data("mcd_demo.csv");
    for h in 1..=2 {
        for m in 1..=(x.n() - h) {
            let cfg = ShearAttackConfig {
                moved_count: Some(m),
                gamma_grid: vec![10.0, 1e4],
                ..ShearAttackConfig::new(h)
            };
            let tr = shear_attack(&WeightedMean::centroid(), &x, &cfg).unwrap();
            assert!(tr.records.iter().all(|r| r.replaced.len() == m));
            assert!(tr.records.iter().all(|r| r.replacements.len() == m));
        }
    }
    let u = UnitDirection::normalize(vec![1.0, -2.0]).unwrap();
    for m in 0..=x.n() {
        let tr = translation_attack(&Mcd::default(), &x, &TranslationAttackConfig::new(u.clone(), m))
            .unwrap();
        assert!(tr.records.iter().all(|r| r.replaced.len() == m));
    }
}

#[test]
fn median_translation_distances_are_monotone_in_radius() {
    let x = data("median_n9.csv");
    for m in 1..=5 {
        for dir in [UnitDirection::axis(1, 0), UnitDirection::axis(1, 0).negated()] {
            let tr = translation_attack(&CoordinatewiseMedian, &x, &TranslationAttackConfig::new(dir, m))
                .unwrap();
            assert!(tr.distances.windows(2).all(|w| w[0] <= w[1]), "{:?}", tr.distances);
        }
    }
}

#[test]
fn median_translation_examples() {
    let x = data("median_n5.csv");
    let diam = x.diameter();
    let up = UnitDirection::axis(1, 0);
    let three = translation_attack(&CoordinatewiseMedian, &x, &TranslationAttackConfig::new(up.clone(), 3))
        .unwrap();
    assert!(three.max_distance > 1e6 * diam);
    let two = translation_attack(&CoordinatewiseMedian, &x, &TranslationAttackConfig::new(up, 2)).unwrap();
    assert!(two.max_distance <= diam);
}

#[test]
fn certificates_serialize_identically_across_runs() {
    let x = data("mcd_demo.csv");
    let run = || {
        let mut suite = AttackSuite::new(42);
        suite.max_m = Some(2);
        serde_json::to_string(&empirical_fsbv(&Mcd::default(), &x, &suite).unwrap()).unwrap()
    };
    let a = run();
    assert_eq!(a, run());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["result"]["not_broken"]["note"], "no attack in suite succeeded");
}

#[test]
fn single_precision_shear_attack_runs() {
    let x: DataSetF32 = read_csv(format!("{}/../../data/mcd_demo.csv", env!("CARGO_MANIFEST_DIR")))
        .unwrap();
    let cfg = ShearAttackConfig {
        gamma_grid: vec![10.0, 1e3],
        ..ShearAttackConfig::new(2)
    };
    let tr = shear_attack(&WeightedMean::centroid(), &x, &cfg).unwrap();
    assert_eq!(tr.distances.len(), 2);
    assert!(tr.distances[1] > tr.distances[0]);
    assert!(tr.max_identity_residual <= 1e-5);
}
