//! Backward stepping from a single event, without a journal.
//!
//! Most rules can be run in reverse because the event still shows what the
//! rule consumed: a popped ancestor is recoverable from the goal, a popped
//! bet from the memo that replaced it. Three situations cannot be inverted
//! from the event alone:
//!
//! * `fail a` for a defined predicate (rule atom:3): the failed body
//!   instance, and its fresh variables, are gone.
//! * `exit (g1,g2)` and `redo g1` after a failed second conjunct when the
//!   second conjunct is itself a conjunction (or, for the redo, a
//!   unification) that the earlier bindings instantiate: it may have left
//!   as called, instantiated, or as redone, literally.
//!
//! These return [`Backward::Underdetermined`]; the journal is the fallback.

use super::step::same_disjunction;
use super::{apply_bets, Ancestor, BStack, Bet, Event, Machine, Port, Rule, Step, Tag};
use crate::term::{mgu, Goal, VarGen, VariantMatcher};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backward {
    Predecessor {
        event: Event,
        rule: Rule,
    },
    /// A predecessor exists but is not determined by the event alone.
    Underdetermined,
    /// No rule leads to this event (initial events, or events no
    /// derivation can reach).
    NoPredecessor,
}

pub fn step_backward_inverse(e: &Event, machine: &Machine<'_>) -> Backward {
    let candidate = match e.port {
        Port::Call => before_call(e),
        Port::Exit => before_exit(e),
        Port::Fail => before_fail(e, machine),
        Port::Redo => before_redo(e),
    };
    match candidate {
        Found::Yes(event, rule) if leads_to(machine, &event, rule, e) => {
            Backward::Predecessor { event, rule }
        }
        Found::Yes(..) | Found::No => Backward::NoPredecessor,
        Found::Ambiguous => Backward::Underdetermined,
    }
}

enum Found {
    Yes(Event, Rule),
    Ambiguous,
    No,
}

fn found(rule: Rule, port: Port, goal: Goal, ancestors: super::AStack, bets: BStack) -> Found {
    Found::Yes(Event::new(port, goal, ancestors, bets), rule)
}

/// Checks the candidate by stepping it forward. For atom:1 the body is a
/// fresh renaming, so it is compared up to renaming of its new variables.
fn leads_to(machine: &Machine<'_>, pred: &Event, rule: Rule, target: &Event) -> bool {
    let mut gen = VarGen::starting_at(u64::MAX / 2);
    let Step::Next { rule: r, event } = machine.step(pred, &mut gen) else {
        return false;
    };
    if r != rule {
        return false;
    }
    if rule == Rule::Atom1 && event.port == Port::Call {
        let mut m = VariantMatcher::new();
        for v in pred.goal.vars() {
            m.fix(&v);
        }
        return event.ancestors == target.ancestors
            && event.bets == target.bets
            && m.goals(&event.goal, &target.goal);
    }
    &event == target
}

fn before_call(e: &Event) -> Found {
    let Some((top, rest)) = e.ancestors.pop() else {
        return Found::No;
    };
    let bets = e.bets.clone();
    match top {
        Ancestor::Conj(Tag::First, g1, g2) if **g1 == e.goal => found(
            Rule::Conj1,
            Port::Call,
            Goal::Conj(g1.clone(), g2.clone()),
            rest.clone(),
            bets,
        ),
        Ancestor::Conj(Tag::Second, g1, g2) => {
            let Some(g1_exit) = exit_goal_from_memo(g1, &e.bets) else {
                return Found::No;
            };
            found(
                Rule::Conj2,
                Port::Exit,
                g1_exit,
                rest.push(Ancestor::Conj(Tag::First, g1.clone(), g2.clone())),
                bets,
            )
        }
        Ancestor::Disj(Tag::First, g1, g2) if **g1 == e.goal => found(
            Rule::Disj1,
            Port::Call,
            Goal::Disj(g1.clone(), g2.clone()),
            rest.clone(),
            bets,
        ),
        Ancestor::Disj(Tag::Second, g1, g2) if **g2 == e.goal => found(
            Rule::Disj2,
            Port::Fail,
            (**g1).clone(),
            rest.push(Ancestor::Disj(Tag::First, g1.clone(), g2.clone())),
            bets,
        ),
        Ancestor::Atom(a) => found(
            Rule::Atom1,
            Port::Call,
            Goal::Atom(a.clone()),
            rest.clone(),
            bets,
        ),
        _ => Found::No,
    }
}

/// The goal with which a subgoal shaped like `g` exited, read off the memo
/// its exit pushed. Conjunctions, unifications and `true` exit as written.
fn exit_goal_from_memo(g: &Goal, bets: &BStack) -> Option<Goal> {
    match (g, bets.top()) {
        (Goal::Atom(_), Some(Bet::DefMemo { atom, .. })) => Some(Goal::Atom(atom.clone())),
        (Goal::Atom(_), _) => None,
        (Goal::Disj(..), Some(Bet::DisjMemo { left, right, .. })) => {
            Some(Goal::Disj(left.clone(), right.clone()))
        }
        (Goal::Disj(..), _) => None,
        (Goal::Fail, _) => None,
        _ => Some(g.clone()),
    }
}

/// The B-stack as it was before a subgoal shaped like `g` started, given
/// the B-stack at its exit.
fn peel(g: &Goal, bets: &BStack) -> Option<BStack> {
    match g {
        Goal::True => Some(bets.clone()),
        Goal::Fail => None,
        Goal::Unify(..) => match bets.pop() {
            Some((Bet::Mgu(_), rest)) => Some(rest.clone()),
            _ => None,
        },
        Goal::Atom(_) => match bets.pop() {
            Some((Bet::DefMemo { body, .. }, rest)) => peel(body, rest),
            _ => None,
        },
        Goal::Disj(..) => match bets.pop() {
            Some((Bet::DisjMemo { chosen, .. }, rest)) => peel(chosen, rest),
            _ => None,
        },
        Goal::Conj(k1, k2) => peel(k2, bets).and_then(|below| peel(k1, &below)),
    }
}

fn before_exit(e: &Event) -> Found {
    let a = e.ancestors.clone();
    match &e.goal {
        Goal::True => found(Rule::True1, Port::Call, Goal::True, a, e.bets.clone()),
        Goal::Fail => Found::No,
        Goal::Unify(..) => match e.bets.pop() {
            Some((Bet::Mgu(_), rest)) => {
                found(Rule::Unif1, Port::Call, e.goal.clone(), a, rest.clone())
            }
            _ => Found::No,
        },
        Goal::Conj(g1, g2) => {
            let g2_exit = match &**g2 {
                Goal::Conj(..) => {
                    // Left as called (instantiated) or as redone (literal).
                    let Some(before) = peel(g2, &e.bets) else {
                        return Found::No;
                    };
                    let called = apply_bets(&before, g2);
                    if called != **g2 {
                        return Found::Ambiguous;
                    }
                    called
                }
                Goal::Unify(..) => match e.bets.pop() {
                    Some((Bet::Mgu(_), rest)) => apply_bets(rest, g2),
                    _ => return Found::No,
                },
                other => match exit_goal_from_memo(other, &e.bets) {
                    Some(g) => g,
                    None => return Found::No,
                },
            };
            found(
                Rule::Conj4,
                Port::Exit,
                g2_exit,
                a.push(Ancestor::Conj(Tag::Second, g1.clone(), g2.clone())),
                e.bets.clone(),
            )
        }
        Goal::Disj(g1, g2) => match e.bets.pop() {
            Some((
                Bet::DisjMemo {
                    chosen,
                    tag,
                    left,
                    right,
                },
                rest,
            )) if left == g1 && right == g2 => found(
                match tag {
                    Tag::First => Rule::Disj4,
                    Tag::Second => Rule::Disj5,
                },
                Port::Exit,
                chosen.clone(),
                a.push(Ancestor::Disj(*tag, left.clone(), right.clone())),
                rest.clone(),
            ),
            _ => Found::No,
        },
        Goal::Atom(goal_atom) => match e.bets.pop() {
            Some((Bet::DefMemo { body, atom }, rest)) if atom == goal_atom => found(
                Rule::Atom2,
                Port::Exit,
                body.clone(),
                a.push(Ancestor::Atom(atom.clone())),
                rest.clone(),
            ),
            _ => Found::No,
        },
    }
}

fn before_fail(e: &Event, machine: &Machine<'_>) -> Found {
    let a = e.ancestors.clone();
    let bets = e.bets.clone();
    match &e.goal {
        Goal::True => found(Rule::True2, Port::Redo, Goal::True, a, bets),
        Goal::Fail => found(Rule::Fail, Port::Call, Goal::Fail, a, bets),
        Goal::Unify(t1, t2) => {
            // A redo may show the unification as written; the unifier was
            // computed on the instance that was called.
            let called = apply_bets(&e.bets, &e.goal);
            let (u1, u2) = match &called {
                Goal::Unify(u1, u2) => (u1, u2),
                _ => unreachable!("substitution preserves goal shape"),
            };
            let unifier = mgu(u1, u2, machine.occurs_check);
            match unifier {
                Some(s) => found(
                    Rule::Unif2,
                    Port::Redo,
                    e.goal.clone(),
                    a,
                    bets.push(Bet::Mgu(s)),
                ),
                None if called == Goal::Unify(t1.clone(), t2.clone()) => {
                    found(Rule::Unif1, Port::Call, e.goal.clone(), a, bets)
                }
                None => Found::No,
            }
        }
        Goal::Atom(atom) => {
            let defined = atom
                .indicator()
                .is_some_and(|k| machine.program.get(&k).is_some());
            if defined {
                Found::Ambiguous
            } else {
                found(Rule::Atom1, Port::Call, e.goal.clone(), a, bets)
            }
        }
        Goal::Conj(g1, g2) => {
            // After a redo, atoms and disjunctions fail as the instance they
            // were called as; everything else fails as written.
            let g1_fail = match &**g1 {
                Goal::Atom(_) | Goal::Disj(..) => apply_bets(&e.bets, g1),
                other => other.clone(),
            };
            found(
                Rule::Conj3,
                Port::Fail,
                g1_fail,
                a.push(Ancestor::Conj(Tag::First, g1.clone(), g2.clone())),
                bets,
            )
        }
        Goal::Disj(g1, g2) => found(
            Rule::Disj3,
            Port::Fail,
            (**g2).clone(),
            a.push(Ancestor::Disj(Tag::Second, g1.clone(), g2.clone())),
            bets,
        ),
    }
}

fn before_redo(e: &Event) -> Found {
    let Some((top, rest)) = e.ancestors.pop() else {
        return Found::No;
    };
    let bets = e.bets.clone();
    match top {
        Ancestor::Conj(Tag::First, g1, g2) if **g1 == e.goal => {
            let called = apply_bets(&e.bets, g2);
            let g2_fail = match &**g2 {
                Goal::Conj(..) | Goal::Unify(..) if called != **g2 => return Found::Ambiguous,
                _ => called,
            };
            found(
                Rule::Conj5,
                Port::Fail,
                g2_fail,
                rest.push(Ancestor::Conj(Tag::Second, g1.clone(), g2.clone())),
                bets,
            )
        }
        Ancestor::Conj(Tag::Second, g1, g2) if **g2 == e.goal => found(
            Rule::Conj6,
            Port::Redo,
            Goal::Conj(g1.clone(), g2.clone()),
            rest.clone(),
            bets,
        ),
        Ancestor::Disj(tag, left, right) => {
            let memo = Bet::DisjMemo {
                chosen: e.goal.clone(),
                tag: *tag,
                left: left.clone(),
                right: right.clone(),
            };
            let goal = redone_goal(rest, Goal::Disj(left.clone(), right.clone()));
            if let Goal::Disj(g1, g2) = &goal {
                if !same_disjunction(g1, g2, left, right, &e.bets) {
                    return Found::No;
                }
            }
            found(Rule::Disj6, Port::Redo, goal, rest.clone(), bets.push(memo))
        }
        Ancestor::Atom(atom) => {
            let memo = Bet::DefMemo {
                body: e.goal.clone(),
                atom: atom.clone(),
            };
            let goal = redone_goal(rest, Goal::Atom(atom.clone()));
            found(Rule::Atom4, Port::Redo, goal, rest.clone(), bets.push(memo))
        }
        _ => Found::No,
    }
}

/// The goal of a redo event whose A-stack is `ancestors`. Under a tagged
/// conjunction it is the conjunct as written; otherwise it is the instance
/// that exited, which the memo records.
fn redone_goal(ancestors: &super::AStack, exited: Goal) -> Goal {
    match ancestors.top() {
        Some(Ancestor::Conj(Tag::First, g1, _)) => (**g1).clone(),
        Some(Ancestor::Conj(Tag::Second, _, g2)) => (**g2).clone(),
        _ => exited,
    }
}
