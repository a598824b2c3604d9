//! Invariant checkers over journals. Each returns the indices of offending
//! events, so an empty result means the property holds. Shared by the
//! property tests and the acceptance harness.

use std::sync::Arc;

use crate::canon::{canonicalize, CanonicalProgram};
use crate::engine::{
    apply_bets, matching_rules, sel, step_backward_inverse, AStack, Ancestor, Backward, Event,
    Journal, Machine, Options, Outcome, Port, Step, Transition,
};
use crate::oracle::{generate_program, GenConfig};
use crate::reader::SourceProgram;
use crate::stack::Stack;
use crate::term::{Goal, VarGen};

/// A generated program with one query, ready to run.
#[derive(Clone, Debug)]
pub struct Case {
    pub seed: u64,
    pub source: SourceProgram,
    pub program: Arc<CanonicalProgram>,
    pub query: Goal,
}

/// Cases from `count` consecutive seeds starting at `first_seed`, each
/// with every query the generator produced.
pub fn cases(first_seed: u64, count: u64) -> Vec<Case> {
    (first_seed..first_seed + count)
        .flat_map(|seed| {
            let g = generate_program(&GenConfig::with_seed(seed));
            let program = Arc::new(canonicalize(&g.program));
            let source = g.program;
            g.queries.into_iter().map(move |query| Case {
                seed,
                source: source.clone(),
                program: program.clone(),
                query,
            })
        })
        .collect()
}

/// Runs `query, fail`, which visits the whole search tree without leaving
/// the rules.
pub fn exhaustive_journal(case: &Case, max_steps: usize) -> (Journal, Outcome) {
    let query = Goal::conj(case.query.clone(), Goal::Fail);
    crate::engine::run(
        query,
        case.program.clone(),
        Options {
            occurs_check: true,
            max_steps,
        },
    )
}

/// Events that match more than one rule, or whose successor in the
/// journal came from a rule other than the single matching one.
pub fn rule_overlaps(j: &Journal) -> Vec<usize> {
    (0..j.len())
        .filter(|&i| {
            let rules = matching_rules(&j.events()[i]);
            match j.transition_into(i + 1) {
                Some(Transition::Rule(r)) => rules != [r],
                _ => rules.len() > 1,
            }
        })
        .collect()
}

/// Counts from checking the single-event inverse against the journal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InverseReport {
    pub inverted: usize,
    pub underdetermined: usize,
}

/// Events whose inverse step disagrees with the journal predecessor.
/// Events reached by a resume are skipped.
pub fn inverse_mismatches(j: &Journal) -> (Vec<usize>, InverseReport) {
    let machine = j.machine();
    let mut report = InverseReport::default();
    let mut bad = Vec::new();
    for i in 1..j.len() {
        let Some(Transition::Rule(rule)) = j.transition_into(i) else {
            continue;
        };
        match step_backward_inverse(&j.events()[i], &machine) {
            Backward::Predecessor { event, rule: r } => {
                report.inverted += 1;
                if r != rule || event != j.events()[i - 1] {
                    bad.push(i);
                }
            }
            Backward::Underdetermined => report.underdetermined += 1,
            Backward::NoPredecessor => bad.push(i),
        }
    }
    (bad, report)
}

/// Call events whose goal is changed by the current substitution, applied
/// unifier by unifier.
pub fn stale_calls(j: &Journal) -> Vec<usize> {
    j.events()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.port == Port::Call && apply_bets(&e.bets, &e.goal) != e.goal)
        .map(|(i, _)| i)
        .collect()
}

/// Events that have no successor although they are not final. The last
/// journal event is included only when it is not final.
pub fn dead_ends(j: &Journal) -> Vec<usize> {
    let machine = j.machine();
    let mut gen = VarGen::starting_at(u64::MAX / 2);
    j.events()
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_final() && !matches!(machine.step(e, &mut gen), Step::Next { .. }))
        .map(|(i, _)| i)
        .collect()
}

/// Exits from a disjunct whose goal is not the disjunct the parent selects.
pub fn selector_violations(j: &Journal) -> Vec<usize> {
    j.events()
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            e.port == Port::Exit
                && matches!(e.ancestors.top(), Some(a @ Ancestor::Disj(..)) if sel(a) != Some(&e.goal))
        })
        .map(|(i, _)| i)
        .collect()
}

/// Push events whose sub-derivation, up to the pop back at the same
/// A-stack, does not keep that A-stack as a proper suffix under one
/// ancestor of the same shape. Frames are checked innermost first, which
/// covers the enclosing ones by transitivity.
pub fn bracketing_violations(j: &Journal) -> Vec<usize> {
    struct Frame<'j> {
        index: usize,
        ancestors: &'j AStack,
        above: Option<&'j Ancestor>,
    }
    let mut frames: Vec<Frame<'_>> = Vec::new();
    let mut bad = Vec::new();
    for (k, e) in j.events().iter().enumerate() {
        let len = e.ancestors.len();
        if let Some(frame) = frames.last_mut() {
            let depth = frame.ancestors.len();
            if !e.port.is_push() && len == depth {
                if e.ancestors != *frame.ancestors {
                    bad.push(frame.index);
                }
                frames.pop();
            } else {
                let ok =
                    len > depth && e.ancestors.below(len - depth) == Some(frame.ancestors) && {
                        let bottom = e.ancestors.below(len - depth - 1).and_then(Stack::top);
                        let same = match (frame.above, bottom) {
                            (Some(a), Some(b)) => same_frame(a, b),
                            _ => true,
                        };
                        frame.above = bottom;
                        same
                    };
                if !ok {
                    bad.push(frame.index);
                    frames.pop();
                }
            }
        }
        if e.port.is_push() {
            frames.push(Frame {
                index: k,
                ancestors: &e.ancestors,
                above: None,
            });
        }
    }
    bad.sort_unstable();
    bad.dedup();
    bad
}

fn same_frame(a: &Ancestor, b: &Ancestor) -> bool {
    match (a, b) {
        (Ancestor::Conj(_, a1, a2), Ancestor::Conj(_, b1, b2))
        | (Ancestor::Disj(_, a1, a2), Ancestor::Disj(_, b1, b2)) => a1 == b1 && a2 == b2,
        _ => a == b,
    }
}

/// Outcome of comparing one embedded sub-derivation with its standalone run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Embedding {
    /// The interior matched event for event.
    Equal {
        events: usize,
    },
    /// The standalone run or the embedded one did not finish in budget.
    Skipped,
    Differs {
        offset: usize,
    },
}

/// Re-runs the goal of call event `i` from `call g [nil][nil]` with the
/// same fresh counter, and compares it with the journal up to the first
/// pop of that goal, after stacking the outer A- and B-stack below every
/// standalone event.
pub fn compare_embedding(j: &Journal, i: usize, max_steps: usize) -> Embedding {
    let outer = &j.events()[i];
    assert_eq!(outer.port, Port::Call, "event {i} is not a call");
    let Some(rec) = j.steps().get(i) else {
        return Embedding::Skipped;
    };
    let machine = Machine::new(j.program(), j.occurs_check());
    let mut gen = VarGen::starting_at(rec.fresh_before);
    let mut standalone = vec![Event::initial(outer.goal.clone())];
    loop {
        if standalone.len() > max_steps {
            return Embedding::Skipped;
        }
        match machine.step(standalone.last().expect("non-empty"), &mut gen) {
            Step::Next { event, .. } => standalone.push(event),
            Step::Final => break,
            Step::Impossible => {
                return Embedding::Differs {
                    offset: standalone.len() - 1,
                }
            }
        }
    }
    let embedded = &j.events()[i..];
    if embedded.len() < standalone.len() {
        return Embedding::Skipped;
    }
    for (k, (inner, whole)) in standalone.iter().zip(embedded).enumerate() {
        let same = inner.port == whole.port
            && inner.goal == whole.goal
            && stacked(&whole.ancestors, &inner.ancestors, &outer.ancestors)
            && stacked(&whole.bets, &inner.bets, &outer.bets);
        if !same {
            return Embedding::Differs { offset: k };
        }
    }
    Embedding::Equal {
        events: standalone.len(),
    }
}

/// Whether `whole` is `top` stacked on `bottom`.
fn stacked<T: PartialEq>(whole: &Stack<T>, top: &Stack<T>, bottom: &Stack<T>) -> bool {
    whole.len() == top.len() + bottom.len()
        && whole.iter().zip(top.iter()).all(|(a, b)| a == b)
        && whole.below(top.len()) == Some(bottom)
}

/// Indices of the non-initial call events of `j`.
pub fn embedded_calls(j: &Journal) -> Vec<usize> {
    j.events()
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, e)| e.port == Port::Call)
        .map(|(i, _)| i)
        .collect()
}

/// Whether a finished journal ends as the rules require: a failure with an
/// empty B-stack, or a success.
pub fn ending_ok(j: &Journal, outcome: Outcome) -> bool {
    match outcome {
        Outcome::Failure => j.last().port == Port::Fail && j.last().bets.is_empty(),
        Outcome::Success => j.last().port == Port::Exit && j.last().ancestors.is_empty(),
        Outcome::BudgetExhausted => true,
        Outcome::Stuck => false,
    }
}
