//! Rule premises stated one by one, independently of the dispatcher in
//! `step`, plus event classification.

use super::step::{same_disjunction, selected};
use super::{Ancestor, Bet, Event, Port, Rule, Tag};
use crate::term::Goal;

/// Every rule whose left-hand side matches `e`.
pub fn matching_rules(e: &Event) -> Vec<Rule> {
    Rule::ALL
        .into_iter()
        .filter(|r| premise_holds(*r, e))
        .collect()
}

fn premise_holds(rule: Rule, e: &Event) -> bool {
    let top_a = e.ancestors.top();
    let top_b = e.bets.top();
    let port = e.port;
    let goal = &e.goal;
    match rule {
        Rule::Conj1 => port == Port::Call && matches!(goal, Goal::Conj(..)),
        Rule::Conj2 => port == Port::Exit && matches!(top_a, Some(Ancestor::Conj(Tag::First, ..))),
        Rule::Conj3 => port == Port::Fail && matches!(top_a, Some(Ancestor::Conj(Tag::First, ..))),
        Rule::Conj4 => port == Port::Exit && matches!(top_a, Some(Ancestor::Conj(Tag::Second, ..))),
        Rule::Conj5 => port == Port::Fail && matches!(top_a, Some(Ancestor::Conj(Tag::Second, ..))),
        Rule::Conj6 => port == Port::Redo && matches!(goal, Goal::Conj(..)),
        Rule::Disj1 => port == Port::Call && matches!(goal, Goal::Disj(..)),
        Rule::Disj2 => {
            port == Port::Fail
                && matches!(top_a, Some(Ancestor::Disj(Tag::First, g1, _)) if **g1 == *goal)
        }
        Rule::Disj3 => {
            port == Port::Fail
                && matches!(top_a, Some(Ancestor::Disj(Tag::Second, _, g2)) if **g2 == *goal)
        }
        Rule::Disj4 => {
            port == Port::Exit
                && matches!(top_a, Some(Ancestor::Disj(Tag::First, g1, _)) if **g1 == *goal)
        }
        Rule::Disj5 => {
            port == Port::Exit
                && matches!(top_a, Some(Ancestor::Disj(Tag::Second, _, g2)) if **g2 == *goal)
        }
        Rule::Disj6 => {
            port == Port::Redo
                && match (goal, e.bets.pop()) {
                    (Goal::Disj(g1, g2), Some((Bet::DisjMemo { left, right, .. }, below))) => {
                        same_disjunction(g1, g2, left, right, below)
                    }
                    _ => false,
                }
        }
        Rule::True1 => port == Port::Call && *goal == Goal::True,
        Rule::True2 => port == Port::Redo && *goal == Goal::True,
        Rule::Fail => port == Port::Call && *goal == Goal::Fail,
        Rule::Unif1 => port == Port::Call && matches!(goal, Goal::Unify(..)),
        Rule::Unif2 => {
            port == Port::Redo
                && matches!(goal, Goal::Unify(..))
                && matches!(top_b, Some(Bet::Mgu(_)))
        }
        Rule::Atom1 => port == Port::Call && matches!(goal, Goal::Atom(_)),
        Rule::Atom2 => port == Port::Exit && matches!(top_a, Some(Ancestor::Atom(_))),
        Rule::Atom3 => port == Port::Fail && matches!(top_a, Some(Ancestor::Atom(_))),
        Rule::Atom4 => {
            port == Port::Redo
                && matches!(goal, Goal::Atom(_))
                && matches!(top_b, Some(Bet::DefMemo { .. }))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Push,
    Pop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    /// `call q [nil][nil]`.
    Initial,
    /// A pop event with an empty A-stack.
    FinalCandidate,
    Interior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EventClass {
    pub polarity: Polarity,
    pub position: Position,
}

pub fn classify_event(e: &Event) -> EventClass {
    let polarity = if e.port.is_push() {
        Polarity::Push
    } else {
        Polarity::Pop
    };
    let position = if e.is_initial() {
        Position::Initial
    } else if e.is_final() {
        Position::FinalCandidate
    } else {
        Position::Interior
    };
    EventClass { polarity, position }
}

/// The goal a tagged ancestor selects: `Sel(1/g1,g2) = g1`.
pub fn sel(a: &Ancestor) -> Option<&Goal> {
    match a {
        Ancestor::Conj(tag, g1, g2) | Ancestor::Disj(tag, g1, g2) => Some(selected(*tag, g1, g2)),
        Ancestor::Atom(_) | Ancestor::Other(_) => None,
    }
}
