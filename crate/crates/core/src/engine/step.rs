use std::collections::HashMap;

use super::{apply_bets, Ancestor, Bet, Event, Port, Rule, Tag};
use crate::canon::CanonicalProgram;
use crate::term::{mgu, Goal, Term, VarGen};

/// Result of one forward step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Next {
        rule: Rule,
        event: Event,
    },
    /// A pop event with an empty A-stack: the derivation is over.
    Final,
    /// No rule applies.
    Impossible,
}

/// The transition relation for one program.
#[derive(Clone, Copy, Debug)]
pub struct Machine<'p> {
    pub program: &'p CanonicalProgram,
    pub occurs_check: bool,
}

impl<'p> Machine<'p> {
    pub fn new(program: &'p CanonicalProgram, occurs_check: bool) -> Self {
        Machine {
            program,
            occurs_check,
        }
    }

    /// Applies the one rule whose premise matches `e`. Fresh variables for
    /// rule atom:1 come from `gen`; no other rule touches it.
    pub fn step(&self, e: &Event, gen: &mut VarGen) -> Step {
        match e.port {
            Port::Call => self.call(e, gen),
            Port::Exit => self.exit(e),
            Port::Fail => self.fail(e),
            Port::Redo => self.redo(e),
        }
    }

    fn call(&self, e: &Event, gen: &mut VarGen) -> Step {
        let (a, b) = (&e.ancestors, &e.bets);
        match &e.goal {
            Goal::Conj(g1, g2) => next(
                Rule::Conj1,
                Port::Call,
                (**g1).clone(),
                a.push(Ancestor::Conj(Tag::First, g1.clone(), g2.clone())),
                b.clone(),
            ),
            Goal::Disj(g1, g2) => next(
                Rule::Disj1,
                Port::Call,
                (**g1).clone(),
                a.push(Ancestor::Disj(Tag::First, g1.clone(), g2.clone())),
                b.clone(),
            ),
            Goal::True => next(Rule::True1, Port::Exit, Goal::True, a.clone(), b.clone()),
            Goal::Fail => next(Rule::Fail, Port::Fail, Goal::Fail, a.clone(), b.clone()),
            Goal::Unify(t1, t2) => match mgu(t1, t2, self.occurs_check) {
                Some(s) => next(
                    Rule::Unif1,
                    Port::Exit,
                    e.goal.clone(),
                    a.clone(),
                    b.push(Bet::Mgu(s)),
                ),
                None => next(
                    Rule::Unif1,
                    Port::Fail,
                    e.goal.clone(),
                    a.clone(),
                    b.clone(),
                ),
            },
            Goal::Atom(atom) => match self.instantiate(atom, gen) {
                Some(body) => next(
                    Rule::Atom1,
                    Port::Call,
                    body,
                    a.push(Ancestor::Atom(atom.clone())),
                    b.clone(),
                ),
                None => next(
                    Rule::Atom1,
                    Port::Fail,
                    e.goal.clone(),
                    a.clone(),
                    b.clone(),
                ),
            },
        }
    }

    /// The body of a fresh renaming of the definition of `atom`, with the
    /// head variables replaced by the arguments of `atom`. `None` when the
    /// predicate has no definition.
    pub fn instantiate(&self, atom: &Term, gen: &mut VarGen) -> Option<Goal> {
        let def = self.program.get(&atom.indicator()?)?;
        let mut map: HashMap<u64, Term> = def
            .head_vars
            .iter()
            .zip(atom.args())
            .map(|(x, t)| (x.id, t.clone()))
            .collect();
        Some(def.body.map_vars(&mut |v| {
            map.entry(v.id)
                .or_insert_with(|| Term::Var(gen.rename(v)))
                .clone()
        }))
    }

    fn exit(&self, e: &Event) -> Step {
        let Some((top, rest)) = e.ancestors.pop() else {
            return Step::Final;
        };
        let b = &e.bets;
        match top {
            Ancestor::Conj(Tag::First, g1, g2) => next(
                Rule::Conj2,
                Port::Call,
                apply_bets(b, g2),
                rest.push(Ancestor::Conj(Tag::Second, g1.clone(), g2.clone())),
                b.clone(),
            ),
            Ancestor::Conj(Tag::Second, g1, g2) => next(
                Rule::Conj4,
                Port::Exit,
                Goal::Conj(g1.clone(), g2.clone()),
                rest.clone(),
                b.clone(),
            ),
            Ancestor::Disj(tag, g1, g2) if selected(*tag, g1, g2) == &e.goal => {
                let rule = match tag {
                    Tag::First => Rule::Disj4,
                    Tag::Second => Rule::Disj5,
                };
                next(
                    rule,
                    Port::Exit,
                    Goal::Disj(g1.clone(), g2.clone()),
                    rest.clone(),
                    b.push(Bet::DisjMemo {
                        chosen: e.goal.clone(),
                        tag: *tag,
                        left: g1.clone(),
                        right: g2.clone(),
                    }),
                )
            }
            Ancestor::Atom(atom) => next(
                Rule::Atom2,
                Port::Exit,
                Goal::Atom(atom.clone()),
                rest.clone(),
                b.push(Bet::DefMemo {
                    body: e.goal.clone(),
                    atom: atom.clone(),
                }),
            ),
            Ancestor::Disj(..) | Ancestor::Other(_) => Step::Impossible,
        }
    }

    fn fail(&self, e: &Event) -> Step {
        let Some((top, rest)) = e.ancestors.pop() else {
            return Step::Final;
        };
        let b = &e.bets;
        match top {
            Ancestor::Conj(Tag::First, g1, g2) => next(
                Rule::Conj3,
                Port::Fail,
                Goal::Conj(g1.clone(), g2.clone()),
                rest.clone(),
                b.clone(),
            ),
            Ancestor::Conj(Tag::Second, g1, g2) => next(
                Rule::Conj5,
                Port::Redo,
                (**g1).clone(),
                rest.push(Ancestor::Conj(Tag::First, g1.clone(), g2.clone())),
                b.clone(),
            ),
            Ancestor::Disj(Tag::First, g1, g2) if **g1 == e.goal => next(
                Rule::Disj2,
                Port::Call,
                (**g2).clone(),
                rest.push(Ancestor::Disj(Tag::Second, g1.clone(), g2.clone())),
                b.clone(),
            ),
            Ancestor::Disj(Tag::Second, g1, g2) if **g2 == e.goal => next(
                Rule::Disj3,
                Port::Fail,
                Goal::Disj(g1.clone(), g2.clone()),
                rest.clone(),
                b.clone(),
            ),
            Ancestor::Atom(atom) => next(
                Rule::Atom3,
                Port::Fail,
                Goal::Atom(atom.clone()),
                rest.clone(),
                b.clone(),
            ),
            Ancestor::Disj(..) | Ancestor::Other(_) => Step::Impossible,
        }
    }

    fn redo(&self, e: &Event) -> Step {
        let a = &e.ancestors;
        match (&e.goal, e.bets.pop()) {
            (Goal::Conj(g1, g2), _) => next(
                Rule::Conj6,
                Port::Redo,
                (**g2).clone(),
                a.push(Ancestor::Conj(Tag::Second, g1.clone(), g2.clone())),
                e.bets.clone(),
            ),
            (
                Goal::Disj(g1, g2),
                Some((
                    Bet::DisjMemo {
                        chosen,
                        tag,
                        left,
                        right,
                    },
                    rest,
                )),
            ) if same_disjunction(g1, g2, left, right, rest) => next(
                Rule::Disj6,
                Port::Redo,
                chosen.clone(),
                a.push(Ancestor::Disj(*tag, left.clone(), right.clone())),
                rest.clone(),
            ),
            (Goal::True, _) => next(
                Rule::True2,
                Port::Fail,
                Goal::True,
                a.clone(),
                e.bets.clone(),
            ),
            (Goal::Unify(..), Some((Bet::Mgu(_), rest))) => next(
                Rule::Unif2,
                Port::Fail,
                e.goal.clone(),
                a.clone(),
                rest.clone(),
            ),
            (Goal::Atom(_), Some((Bet::DefMemo { body, atom }, rest))) => next(
                Rule::Atom4,
                Port::Redo,
                body.clone(),
                a.push(Ancestor::Atom(atom.clone())),
                rest.clone(),
            ),
            _ => Step::Impossible,
        }
    }
}

fn next(rule: Rule, port: Port, goal: Goal, ancestors: super::AStack, bets: super::BStack) -> Step {
    Step::Next {
        rule,
        event: Event::new(port, goal, ancestors, bets),
    }
}

pub(super) fn selected<'g>(tag: Tag, g1: &'g Goal, g2: &'g Goal) -> &'g Goal {
    match tag {
        Tag::First => g1,
        Tag::Second => g2,
    }
}

/// The disjunction being redone and the one memorized at its exit agree
/// once the bindings made before the exit are applied. They can differ
/// literally because rule conj:6 redoes the second conjunct as written,
/// while it was called with the bindings of the first conjunct applied.
pub(super) fn same_disjunction(
    g1: &Goal,
    g2: &Goal,
    left: &Goal,
    right: &Goal,
    below: &super::BStack,
) -> bool {
    if g1 == left && g2 == right {
        return true;
    }
    apply_bets(below, g1) == apply_bets(below, left)
        && apply_bets(below, g2) == apply_bets(below, right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonicalize;
    use crate::reader::{parse_program, parse_query};
    use crate::stack::Stack;

    fn atom(name: &str) -> Goal {
        Goal::Atom(Term::constant(name))
    }

    #[test]
    fn conj_call_pushes_first_tag() {
        let cp = canonicalize(&parse_program("main :- good, bad.\ngood.").unwrap());
        let m = Machine::new(&cp, true);
        let g = Goal::conj(atom("good"), atom("bad"));
        let e = Event::new(
            Port::Call,
            g,
            Stack::nil().push(Ancestor::Atom(Term::constant("main"))),
            Stack::nil(),
        );
        let Step::Next { rule, event } = m.step(&e, &mut VarGen::new()) else {
            panic!()
        };
        assert_eq!(rule, Rule::Conj1);
        assert_eq!(event.goal, atom("good"));
        assert!(matches!(
            event.ancestors.top(),
            Some(Ancestor::Conj(Tag::First, ..))
        ));
    }

    #[test]
    fn redo_fail_is_impossible() {
        let cp = CanonicalProgram::new();
        let m = Machine::new(&cp, true);
        let e = Event::new(Port::Redo, Goal::Fail, Stack::nil(), Stack::nil());
        assert_eq!(m.step(&e, &mut VarGen::new()), Step::Impossible);
        let e = Event::new(Port::Call, Goal::Fail, Stack::nil(), Stack::nil());
        let Step::Next { rule, event } = m.step(&e, &mut VarGen::new()) else {
            panic!()
        };
        assert_eq!((rule, event.port), (Rule::Fail, Port::Fail));
    }

    #[test]
    fn top_level_pop_is_final() {
        let cp = CanonicalProgram::new();
        let m = Machine::new(&cp, true);
        let e = Event::new(Port::Exit, Goal::True, Stack::nil(), Stack::nil());
        assert_eq!(m.step(&e, &mut VarGen::new()), Step::Final);
    }

    #[test]
    fn undefined_predicate_fails_in_place() {
        let cp = CanonicalProgram::new();
        let m = Machine::new(&cp, true);
        let e = Event::initial(atom("nope"));
        let Step::Next { rule, event } = m.step(&e, &mut VarGen::new()) else {
            panic!()
        };
        assert_eq!(rule, Rule::Atom1);
        assert_eq!(event.port, Port::Fail);
        assert_eq!(event.goal, atom("nope"));
    }

    #[test]
    fn instantiation_renames_body_locals_only() {
        let p = parse_program("q(X) :- r(X, Y), s(Y).").unwrap();
        let cp = canonicalize(&p);
        let m = Machine::new(&cp, true);
        let mut gen = VarGen::starting_at(100);
        let q = parse_query("q(f(A))").unwrap();
        let Goal::Atom(a) = &q else { panic!() };
        let body = m.instantiate(a, &mut gen).unwrap();
        let vars = body.vars();
        assert_eq!(vars[0].name.as_ref(), "A");
        assert_eq!(vars[1].id, 100);
        assert_eq!(gen.peek(), 101);
    }
}
