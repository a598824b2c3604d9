use std::sync::Arc;

use thiserror::Error;

use super::{current_subst, BStack, Event, Machine, Port, Rule, Step};
use crate::canon::CanonicalProgram;
use crate::stack::Stack;
use crate::term::{Goal, Substitution, VarGen, VarId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub occurs_check: bool,
    /// Upper bound on the number of transitions of one run.
    pub max_steps: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            occurs_check: true,
            max_steps: 1_000_000,
        }
    }
}

/// How one journal event was reached from the one before it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transition {
    Rule(Rule),
    /// Re-entering the query after a top-level exit to look for the next
    /// answer: `redo q [nil][Δ]`. Not one of the rules.
    Resume,
}

impl Transition {
    pub fn name(self) -> &'static str {
        match self {
            Transition::Rule(r) => r.name(),
            Transition::Resume => "resume",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub transition: Transition,
    /// Fresh-variable counter before and after the step. Only atom:1 moves it.
    pub fresh_before: VarId,
    pub fresh_after: VarId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JournalError {
    #[error("event 0 is the initial event and has no predecessor")]
    NoPredecessor,
    #[error("index {index} out of range for a journal of {len} events")]
    OutOfRange { index: usize, len: usize },
    #[error("replay diverges at step {index}")]
    ReplayMismatch { index: usize },
    #[error("the last event is not a top-level exit")]
    NotAnAnswer,
}

/// Result of asking a journal for one more event.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Advance {
    Stepped(Rule),
    /// The last event is a top-level pop; nothing was appended.
    Final,
    /// No rule applies to the last event; nothing was appended.
    Impossible,
}

/// A derivation recorded event by event, starting from `call q [nil][nil]`.
/// It only ever grows.
#[derive(Clone, Debug)]
pub struct Journal {
    program: Arc<CanonicalProgram>,
    query: Goal,
    occurs_check: bool,
    events: Vec<Event>,
    steps: Vec<StepRecord>,
    gen: VarGen,
}

impl Journal {
    pub fn new(program: Arc<CanonicalProgram>, query: Goal, occurs_check: bool) -> Self {
        let mut gen = VarGen::new();
        if let Some(max) = program.max_var_id().max(query.max_var_id()) {
            gen.reserve_above(max);
        }
        Journal {
            events: vec![Event::initial(query.clone())],
            program,
            query,
            occurs_check,
            steps: Vec::new(),
            gen,
        }
    }

    pub fn program(&self) -> &Arc<CanonicalProgram> {
        &self.program
    }

    pub fn query(&self) -> &Goal {
        &self.query
    }

    pub fn occurs_check(&self) -> bool {
        self.occurs_check
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn event(&self, i: usize) -> Option<&Event> {
        self.events.get(i)
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn last(&self) -> &Event {
        self.events
            .last()
            .expect("a journal holds at least the initial event")
    }

    /// `steps()[i]` leads from event `i` to event `i + 1`.
    pub fn steps(&self) -> &[StepRecord] {
        &self.steps
    }

    /// Number of transitions taken by rules, not counting resumes.
    pub fn rule_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s.transition, Transition::Rule(_)))
            .count()
    }

    /// How event `i` was reached; `None` for event 0.
    pub fn transition_into(&self, i: usize) -> Option<Transition> {
        i.checked_sub(1)
            .and_then(|j| self.steps.get(j))
            .map(|s| s.transition)
    }

    pub fn machine(&self) -> Machine<'_> {
        Machine::new(&self.program, self.occurs_check)
    }

    pub fn advance(&mut self) -> Advance {
        let before = self.gen.peek();
        let machine = Machine::new(&self.program, self.occurs_check);
        let last = self.events.last().expect("journal is never empty");
        match machine.step(last, &mut self.gen) {
            Step::Next { rule, event } => {
                self.steps.push(StepRecord {
                    transition: Transition::Rule(rule),
                    fresh_before: before,
                    fresh_after: self.gen.peek(),
                });
                self.events.push(event);
                Advance::Stepped(rule)
            }
            Step::Final => Advance::Final,
            Step::Impossible => Advance::Impossible,
        }
    }

    /// After a top-level exit, appends `redo q [nil][Δ]` so that the
    /// derivation continues with the next answer.
    pub fn resume(&mut self) -> Result<(), JournalError> {
        let last = self.last();
        if last.port != Port::Exit || !last.ancestors.is_empty() {
            return Err(JournalError::NotAnAnswer);
        }
        let event = Event::new(
            Port::Redo,
            self.query.clone(),
            Stack::nil(),
            last.bets.clone(),
        );
        let fresh = self.gen.peek();
        self.steps.push(StepRecord {
            transition: Transition::Resume,
            fresh_before: fresh,
            fresh_after: fresh,
        });
        self.events.push(event);
        Ok(())
    }

    /// The event before event `i`.
    pub fn step_backward(&self, i: usize) -> Result<&Event, JournalError> {
        if i >= self.events.len() {
            return Err(JournalError::OutOfRange {
                index: i,
                len: self.events.len(),
            });
        }
        if i == 0 {
            return Err(JournalError::NoPredecessor);
        }
        Ok(&self.events[i - 1])
    }

    /// Re-derives every event from its predecessor and the logged counter.
    pub fn replay_check(&self) -> Result<(), JournalError> {
        if !self.events[0].is_initial() || self.events.len() != self.steps.len() + 1 {
            return Err(JournalError::ReplayMismatch { index: 0 });
        }
        let machine = self.machine();
        for (i, rec) in self.steps.iter().enumerate() {
            let (prev, next) = (&self.events[i], &self.events[i + 1]);
            let ok = match rec.transition {
                Transition::Rule(rule) => {
                    let mut gen = VarGen::starting_at(rec.fresh_before);
                    match machine.step(prev, &mut gen) {
                        Step::Next { rule: r, event } => {
                            r == rule && &event == next && gen.peek() == rec.fresh_after
                        }
                        _ => false,
                    }
                }
                Transition::Resume => {
                    prev.port == Port::Exit
                        && prev.ancestors.is_empty()
                        && next.port == Port::Redo
                        && next.goal == self.query
                        && next.ancestors.is_empty()
                        && next.bets == prev.bets
                }
            };
            if !ok {
                return Err(JournalError::ReplayMismatch { index: i });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Ended with `exit q [nil][Δ]`.
    Success,
    /// Ended with `fail q [nil][nil]`.
    Failure,
    BudgetExhausted,
    /// No rule applied to a non-final event. Never happens for journals
    /// built by the engine; kept so that `run` is total.
    Stuck,
}

/// Steps from `call q [nil][nil]` to the first top-level pop.
pub fn run(query: Goal, program: Arc<CanonicalProgram>, options: Options) -> (Journal, Outcome) {
    let mut j = Journal::new(program, query, options.occurs_check);
    let outcome = drive(&mut j, options.max_steps);
    (j, outcome)
}

fn drive(j: &mut Journal, max_steps: usize) -> Outcome {
    loop {
        if j.steps().len() >= max_steps {
            return Outcome::BudgetExhausted;
        }
        match j.advance() {
            Advance::Stepped(_) => {}
            Advance::Final => {
                let last = j.last();
                return if last.port == Port::Exit {
                    Outcome::Success
                } else {
                    debug_assert!(last.bets.is_empty(), "failed derivation left bets behind");
                    Outcome::Failure
                };
            }
            Advance::Impossible => return Outcome::Stuck,
        }
    }
}

/// The current substitution of a final B-stack, restricted to the
/// variables of the query.
pub fn computed_answer(query: &Goal, final_bets: &BStack) -> Substitution {
    current_subst(final_bets).restrict(&query.vars())
}

#[derive(Clone, Debug)]
pub struct AnswerSet {
    pub answers: Vec<Substitution>,
    /// Whether the step budget ran out before the final failure.
    pub budget_exhausted: bool,
    pub journal: Journal,
}

/// All answers of `query` in order, resuming after each top-level exit.
pub fn enumerate_answers(
    query: Goal,
    program: Arc<CanonicalProgram>,
    options: Options,
) -> AnswerSet {
    let mut j = Journal::new(program, query.clone(), options.occurs_check);
    let mut answers = Vec::new();
    loop {
        match drive(&mut j, options.max_steps) {
            Outcome::Success => {
                answers.push(computed_answer(&query, &j.last().bets));
                j.resume().expect("last event is a top-level exit");
            }
            Outcome::Failure | Outcome::Stuck => {
                return AnswerSet {
                    answers,
                    budget_exhausted: false,
                    journal: j,
                }
            }
            Outcome::BudgetExhausted => {
                return AnswerSet {
                    answers,
                    budget_exhausted: true,
                    journal: j,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonicalize;
    use crate::reader::{parse_program, parse_query};
    use crate::term::Term;

    fn setup(program: &str, query: &str) -> (Arc<CanonicalProgram>, Goal) {
        let cp = canonicalize(&parse_program(program).unwrap());
        (Arc::new(cp), parse_query(query).unwrap())
    }

    #[test]
    fn good_bad_main_fails_in_thirteen_steps() {
        let (cp, q) = setup("main :- good, bad.\ngood.", "main");
        let (j, outcome) = run(q, cp, Options::default());
        assert_eq!(outcome, Outcome::Failure);
        assert_eq!(j.len(), 14);
        assert!(j.last().bets.is_empty());
        j.replay_check().unwrap();
        assert_eq!(j.transition_into(5), Some(Transition::Rule(Rule::Atom2)));
    }

    #[test]
    fn true_succeeds_in_one_step() {
        let (cp, q) = setup("", "true");
        let (j, outcome) = run(q, cp, Options::default());
        assert_eq!(outcome, Outcome::Success);
        assert_eq!(j.steps().len(), 1);
    }

    #[test]
    fn step_backward_bounds() {
        let (cp, q) = setup("", "true");
        let (j, _) = run(q, cp, Options::default());
        assert_eq!(j.step_backward(0), Err(JournalError::NoPredecessor));
        assert_eq!(j.step_backward(1).unwrap(), &j.events()[0]);
        assert!(matches!(
            j.step_backward(2),
            Err(JournalError::OutOfRange { .. })
        ));
    }

    #[test]
    fn enumerates_example_answers() {
        let (cp, q) = setup("q(a,b).\nq(Z,c) :- r(Z).\nr(c).", "q(X,Y)");
        let vars = q.vars();
        let set = enumerate_answers(q, cp, Options::default());
        assert!(!set.budget_exhausted);
        let shown: Vec<Vec<Term>> = set
            .answers
            .iter()
            .map(|s| {
                vars.iter()
                    .map(|v| s.apply(&Term::Var(v.clone())))
                    .collect()
            })
            .collect();
        let (a, b, c) = (
            Term::constant("a"),
            Term::constant("b"),
            Term::constant("c"),
        );
        assert_eq!(shown, vec![vec![a, b], vec![c.clone(), c]]);
        set.journal.replay_check().unwrap();
    }

    #[test]
    fn budget_is_an_outcome() {
        let (cp, q) = setup("loop :- loop.", "loop");
        let (j, outcome) = run(
            q,
            cp,
            Options {
                occurs_check: true,
                max_steps: 50,
            },
        );
        assert_eq!(outcome, Outcome::BudgetExhausted);
        assert_eq!(j.steps().len(), 50);
    }

    #[test]
    fn fresh_variables_are_logged() {
        let (cp, q) = setup("p :- X = f(Y), q(X).\nq(_).", "p");
        let (j, _) = run(q, cp, Options::default());
        let moved: Vec<&StepRecord> = j
            .steps()
            .iter()
            .filter(|s| s.fresh_after != s.fresh_before)
            .collect();
        assert_eq!(moved.len(), 1);
        assert!(moved
            .iter()
            .all(|s| s.transition == Transition::Rule(Rule::Atom1)));
    }
}
