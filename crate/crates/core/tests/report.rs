use qkcheck::report::{CheckReport, Report, Verdict};
use qkcheck::suite::{run_suite, Mode, Suite, SuiteConfig};

#[test]
fn empty_report_serialization() {
    assert_eq!(Report::new(vec![], vec![]).to_json(), "{\"checks\":[]}\n");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let config = SuiteConfig::new(2, Suite::ALL.to_vec(), 7);
    let a = run_suite(&config).unwrap().to_json();
    let b = run_suite(&config).unwrap().to_json();
    assert_eq!(a, b);
    assert!(!a.contains("elapsed_ms"));
}

#[test]
fn seed_changes_only_seeded_checks() {
    let suites = vec![Suite::Symbols];
    let a = run_suite(&SuiteConfig::new(2, suites.clone(), 1)).unwrap();
    let b = run_suite(&SuiteConfig::new(2, suites, 2)).unwrap();
    for (x, y) in a.checks.iter().zip(&b.checks) {
        assert_eq!(x.id, y.id);
        if x.seed.is_none() {
            assert_eq!(x, y);
        }
    }
    assert!(a.checks.iter().zip(&b.checks).any(|(x, y)| x.note != y.note));
}

#[test]
fn timings_are_opt_in() {
    let mut config = SuiteConfig::new(1, vec![Suite::Weyl], 7);
    config.timings = true;
    let r = run_suite(&config).unwrap();
    assert!(r.checks.iter().all(|c| c.elapsed_ms.is_some()));
}

#[test]
fn observe_mode_and_small_n_gating() {
    let mut config = SuiteConfig::new(2, vec![Suite::Dims], 7);
    let r = run_suite(&config).unwrap();
    // the degree-two dimension formula is only claimed from n = 3 on
    let e2 = r.checks.iter().find(|c| c.id == "dims.dim_e2").unwrap();
    assert_eq!(e2.verdict, Verdict::Observed);
    assert_eq!(r.fail_count(), 0);
    config.mode = Mode::Observe;
    let r = run_suite(&config).unwrap();
    assert_eq!(r.count(Verdict::Observed), r.checks.len());
}

#[test]
fn bad_configs_are_rejected() {
    assert!(run_suite(&SuiteConfig::new(0, vec![Suite::Weyl], 7)).is_err());
    assert!(run_suite(&SuiteConfig::new(2, vec![], 7)).is_err());
    assert!(Suite::parse_list("weyl,nope").is_err());
    assert_eq!(Suite::parse_list("all").unwrap().len(), Suite::ALL.len());
    assert!("sideways".parse::<Mode>().is_err());
}

#[test]
fn markdown_lists_every_check() {
    let r = Report::new(
        vec![
            CheckReport::compare("b.two", "second", 2, 3),
            CheckReport::compare("a.one", "first", 1, 1),
            CheckReport::observed("a.zero", "seen", 0),
        ],
        vec![],
    );
    assert_eq!(r.checks[0].id, "a.one");
    let md = r.to_markdown();
    for id in ["a.one", "a.zero", "b.two"] {
        assert!(md.contains(id));
    }
    assert!(md.contains("Summary"));
    assert_eq!(r.fail_count(), 1);
}

#[test]
fn json_fields_are_sorted_and_optional_ones_omitted() {
    let r = Report::new(vec![CheckReport::compare("x", "claim", 1, 1)], vec![]);
    assert_eq!(
        r.to_json(),
        "{\"checks\":[{\"claimed\":\"1\",\"computed\":\"1\",\"id\":\"x\",\"paper_ref\":\"claim\",\"verdict\":\"PASS\"}]}\n"
    );
}
