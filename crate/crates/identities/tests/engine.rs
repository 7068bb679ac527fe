use std::collections::BTreeSet;

use polycauchy::int;
use polycauchy_identities::{
    catalog, find, run_cases, verify, verify_case, EngineError, IdentityCase, Mode, ParameterGrid, RunOptions,
};

#[test]
fn catalog_ids_are_unique_and_cover_every_group() {
    let ids: BTreeSet<&str> = catalog().iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), catalog().len());
    assert!(catalog().len() >= 60, "only {} cases", catalog().len());
    let groups: BTreeSet<u8> = catalog().iter().map(IdentityCase::group).collect();
    assert_eq!(groups, (1..=22).collect());
}

#[test]
fn catalog_is_in_group_order() {
    let groups: Vec<u8> = catalog().iter().map(IdentityCase::group).collect();
    let mut sorted = groups.clone();
    sorted.sort();
    assert_eq!(groups, sorted);
}

#[test]
fn integration_formula_on_eleven_points() {
    let r = verify("G04.int1", &ParameterGrid::with_max_n(10)).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.points, 11);
}

#[test]
fn empty_grid_passes_vacuously() {
    let r = verify("G04.int1", &ParameterGrid::empty()).unwrap();
    assert!(r.passed());
    assert_eq!(r.points, 0);
}

#[test]
fn corrected_derivative_identity_holds() {
    let r = verify("G09.zhao", &ParameterGrid::with_max_n(10)).unwrap();
    assert!(r.passed(), "{:?}", r.failures);
    assert!(r.points > 0);
}

#[test]
fn unknown_id_is_an_error() {
    assert_eq!(verify("G99.nothing", &ParameterGrid::default()), Err(EngineError::UnknownId("G99.nothing".into())));
}

#[test]
fn malformed_grids_are_rejected() {
    let grids = [
        ParameterGrid { k: vec![0], ..Default::default() },
        ParameterGrid { q: vec![int(0)], ..Default::default() },
        ParameterGrid { l: vec![vec![]], ..Default::default() },
        ParameterGrid { m: vec![0], ..Default::default() },
    ];
    for g in &grids {
        assert!(matches!(verify("G04.int1", g), Err(EngineError::MalformedGrid(_))));
    }
}

#[test]
fn sign_probe_reports_a_single_variant() {
    let case = find("G06.k-recurrence-sign").unwrap();
    assert!(case.is_probe());
    let r = verify_case(case, &ParameterGrid::default(), false);
    assert!(r.passed());
    let finding = r.finding.unwrap();
    assert!(finding.contains("holds at all"), "{finding}");
}

fn small_run(mode: Mode) -> String {
    let cases: Vec<&IdentityCase> = catalog().iter().collect();
    let suite = run_cases(&cases, &ParameterGrid::with_max_n(4), RunOptions { mode, timing: false }).unwrap();
    assert!(suite.all_passed(), "{}", suite.summary());
    suite.to_json()
}

#[test]
fn reports_are_deterministic_and_mode_independent() {
    let seq = small_run(Mode::Sequential);
    assert_eq!(seq, small_run(Mode::Sequential));
    assert_eq!(seq, small_run(Mode::Parallel));
    assert!(!seq.contains("millis"));
}

#[test]
fn subsets_run_in_any_order() {
    let mut cases: Vec<&IdentityCase> = catalog().iter().filter(|c| c.group() == 9 || c.group() == 3).collect();
    let grid = ParameterGrid::with_max_n(5);
    let opts = RunOptions { mode: Mode::Sequential, timing: false };
    let forward = run_cases(&cases, &grid, opts).unwrap().reports;
    cases.reverse();
    let mut backward = run_cases(&cases, &grid, opts).unwrap().reports;
    backward.reverse();
    assert_eq!(forward, backward);
}

#[test]
fn summary_lists_groups() {
    let cases: Vec<&IdentityCase> = catalog().iter().filter(|c| c.group() <= 2).collect();
    let suite = run_cases(&cases, &ParameterGrid::with_max_n(3), RunOptions::default()).unwrap();
    let s = suite.summary();
    assert!(s.contains("G01") && s.contains("G02"), "{s}");
    assert!(s.lines().last().unwrap().starts_with("total"));
}
