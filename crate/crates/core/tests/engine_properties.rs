//! Engine invariants over randomly generated programs.

use std::sync::Arc;

use fourport_core::check::{
    bracketing_violations, cases, compare_embedding, dead_ends, embedded_calls, ending_ok,
    exhaustive_journal, inverse_mismatches, rule_overlaps, selector_violations, stale_calls, Case,
    Embedding,
};
use fourport_core::engine::{enumerate_answers, Options, Outcome};
use fourport_core::oracle::{answers_equivalent, sld_solve};
use fourport_core::reader::format_program;
use fourport_core::trace::{render_raw, Style};

const STEPS: usize = 10_000;

fn describe(case: &Case) -> String {
    format!(
        "seed {}\n{}query: {:?}",
        case.seed,
        format_program(&case.source),
        case.query
    )
}

fn trace_excerpt(j: &fourport_core::engine::Journal, at: usize) -> String {
    let lines = render_raw(j, Style::default());
    let from = at.saturating_sub(3);
    lines[from..(at + 2).min(lines.len())]
        .iter()
        .map(|l| format!("{:>4} {}\n", l.index, l.raw()))
        .collect()
}

#[test]
fn journal_invariants_hold_on_random_programs() {
    let mut journals = 0;
    for case in cases(0, 340) {
        let (j, outcome) = exhaustive_journal(&case, STEPS);
        journals += 1;
        assert_ne!(outcome, Outcome::Stuck, "{}", describe(&case));
        assert!(ending_ok(&j, outcome), "{}", describe(&case));
        j.replay_check()
            .unwrap_or_else(|e| panic!("{e}\n{}", describe(&case)));
        for (name, bad) in [
            ("overlap", rule_overlaps(&j)),
            ("stale call", stale_calls(&j)),
            ("dead end", dead_ends(&j)),
            ("selector", selector_violations(&j)),
            ("bracketing", bracketing_violations(&j)),
            ("inverse", inverse_mismatches(&j).0),
        ] {
            if let Some(&i) = bad.first() {
                panic!(
                    "{name} at event {i}\n{}\n{}",
                    describe(&case),
                    trace_excerpt(&j, i)
                );
            }
        }
    }
    assert!(journals >= 1000);
}

#[test]
fn embedded_goals_run_as_standalone() {
    let mut compared = 0;
    for case in cases(1000, 200) {
        let (j, _) = exhaustive_journal(&case, STEPS);
        // A handful of calls per journal, spread over its length.
        let calls = embedded_calls(&j);
        let stride = (calls.len() / 4).max(1);
        for &i in calls.iter().step_by(stride) {
            match compare_embedding(&j, i, STEPS) {
                Embedding::Equal { .. } => compared += 1,
                Embedding::Skipped => {}
                Embedding::Differs { offset } => panic!(
                    "call {i} differs at offset {offset}\n{}\n{}",
                    describe(&case),
                    trace_excerpt(&j, i + offset)
                ),
            }
        }
    }
    assert!(compared >= 200, "only {compared} embeddings compared");
}

#[test]
fn answers_match_sld_resolution() {
    let (mut compared, mut total) = (0, 0);
    for case in cases(2000, 200) {
        total += 1;
        let Ok(expected) = sld_solve(&case.query, &case.source, STEPS, true) else {
            continue;
        };
        let got = enumerate_answers(
            case.query.clone(),
            Arc::clone(&case.program),
            Options {
                occurs_check: true,
                max_steps: STEPS * 10,
            },
        );
        if got.budget_exhausted {
            continue;
        }
        let vars = case.query.vars();
        assert!(
            answers_equivalent(&vars, &expected, &got.answers),
            "{}\nsld: {expected:?}\nengine: {:?}",
            describe(&case),
            got.answers
        );
        let canonical = sld_solve(&case.query, &case.program.to_source(), STEPS, true)
            .unwrap_or_else(|e| panic!("{e}\n{}", describe(&case)));
        assert!(
            answers_equivalent(&vars, &expected, &canonical),
            "{}",
            describe(&case)
        );
        compared += 1;
    }
    assert!(
        compared >= 500,
        "only {compared} of {total} cases terminated"
    );
    assert!(
        compared * 10 >= total * 9,
        "only {compared} of {total} cases terminated"
    );
}
