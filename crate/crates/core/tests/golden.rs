use std::sync::Arc;

use fourport_core::engine::{run, Journal, Options, Outcome};
use fourport_core::term::VariantMatcher;
use fourport_core::trace::{
    alpha_normalize, events_variant, render_raw, render_structured, FixtureParser, Style,
};
use fourport_core::{canonicalize, parse_program, parse_query};

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn journal(program: &str, query: &str) -> (Journal, Outcome) {
    let p = parse_program(program).unwrap();
    let q = parse_query(query).unwrap();
    run(q, Arc::new(canonicalize(&p)), Options::default())
}

fn raw_lines(j: &Journal) -> Vec<String> {
    render_raw(j, Style::default())
        .iter()
        .map(|l| l.raw())
        .collect()
}

fn expected_lines(name: &str) -> Vec<String> {
    golden(name)
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(str::to_string)
        .collect()
}

fn assert_lines(actual: &[String], expected: &[String]) {
    for (i, (a, e)) in actual.iter().zip(expected).enumerate() {
        assert_eq!(a, e, "event {i} differs");
    }
    assert_eq!(actual.len(), expected.len(), "event count");
}

#[test]
fn good_bad_trace_matches_fixture() {
    let (j, outcome) = journal(&golden("good_bad.pl"), "main");
    assert_eq!(outcome, Outcome::Failure);
    assert_lines(&raw_lines(&j), &expected_lines("good_bad.raw.txt"));
}

#[test]
fn post_fail_trace_matches_fixture() {
    let (j, outcome) = journal(&golden("post_one_two.pl"), "post(X,Y), fail");
    assert_eq!(outcome, Outcome::Failure);
    assert_lines(&raw_lines(&j), &expected_lines("post_one_two.raw.txt"));
    assert_eq!(j.len(), 46);
}

#[test]
fn fixtures_agree_up_to_renaming() {
    for (pl, query, raw) in [
        ("good_bad.pl", "main", "good_bad.raw.txt"),
        ("post_one_two.pl", "post(X,Y), fail", "post_one_two.raw.txt"),
    ] {
        let (j, _) = journal(&golden(pl), query);
        let parsed = FixtureParser::new().parse_trace(&golden(raw)).unwrap();
        assert_eq!(parsed.len(), j.len());
        let mut m = VariantMatcher::new();
        for (i, (a, b)) in j.events().iter().zip(&parsed).enumerate() {
            assert!(events_variant(&mut m, a, b), "{raw}: event {i}");
        }
        assert_eq!(
            alpha_normalize(&raw_lines(&j)),
            alpha_normalize(&expected_lines(raw))
        );
    }
}

#[test]
fn structured_traces_match_fixtures() {
    for (pl, query, jsonl) in [
        ("good_bad.pl", "main", "good_bad.jsonl"),
        ("post_one_two.pl", "post(X,Y), fail", "post_one_two.jsonl"),
    ] {
        let (j, _) = journal(&golden(pl), query);
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            let path = format!("{}/tests/golden/{jsonl}", env!("CARGO_MANIFEST_DIR"));
            let mut text = render_structured(&j, Style::default()).join("\n");
            text.push('\n');
            std::fs::write(path, text).unwrap();
        }
        assert_lines(
            &render_structured(&j, Style::default()),
            &expected_lines(jsonl),
        );
    }
}
