use std::collections::BTreeSet;

use qsym::rigidity::{run_check, run_selected, MANIFEST};
use qsym::*;

#[test]
fn default_suite_passes_and_is_deterministic() {
    let cfg = SuiteConfig::default();
    let first = run_all(&cfg).unwrap();
    for r in &first.results {
        assert!(r.pass, "{} failed: {:?}", r.check_id, r.details);
    }
    let ids: Vec<&str> = first.results.iter().map(|r| r.check_id.as_str()).collect();
    assert_eq!(ids, MANIFEST.to_vec());

    let second = run_all(&cfg).unwrap();
    let a = serde_json::to_string(&first.without_timings()).unwrap();
    let b = serde_json::to_string(&second.without_timings()).unwrap();
    assert_eq!(a, b);

    let back: VerificationReport =
        serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
    assert_eq!(back, first);
}

#[test]
fn smaller_s_bound_passes() {
    let cfg = SuiteConfig::default().with_s_bound(3);
    assert_eq!(cfg.lr_weight, 3);
    let report = run_all(&cfg).unwrap();
    assert!(report.all_passed());
}

#[test]
fn empty_config_is_rejected() {
    let err = SuiteConfig::from_json("{}").unwrap_err();
    assert!(err.to_string().contains("bounds required"));
    assert!(SuiteConfig::from_json(r#"{"poset_weight": 4}"#).is_err());
}

#[test]
fn unknown_checks_are_rejected() {
    assert!(run_check("no_such_check", &SuiteConfig::default()).is_err());
    assert!(run_selected(&SuiteConfig::default(), &["golden_examples", "nope"]).is_err());
}

#[test]
fn weight_three_boundary_pairs_are_recorded() {
    let r = run_check("downset_rigidity_m", &SuiteConfig::default()).unwrap();
    assert!(r.pass);
    assert!(r.notes.iter().any(|n| n.contains("{(1,2),(2,1)}")));
}

#[test]
fn oversized_bounds_fail_validation() {
    let cfg = SuiteConfig {
        s_equals_f_weight: 40,
        ..SuiteConfig::default()
    };
    assert!(matches!(
        run_all(&cfg),
        Err(QsymError::BoundExceeded { .. })
    ));
}

#[test]
fn q_weight_four_pairs() {
    let pairs: BTreeSet<_> = equal_down_set_pairs(OrderTag::Q, 4).into_iter().collect();
    let want: BTreeSet<_> = [("1,1,2", "1,2,1")]
        .iter()
        .map(|(a, b)| {
            (
                a.parse::<Composition>().unwrap(),
                b.parse::<Composition>().unwrap(),
            )
        })
        .collect();
    assert_eq!(pairs, want);
}
