//! Reference semantics for differential testing: plain SLD resolution with
//! leftmost selection, depth-first search and clauses in textual order.
//! It shares unification with the engine and nothing else.

mod generate;

use std::collections::HashMap;

use indexmap::IndexMap;
use thiserror::Error;

pub use generate::{generate_program, GenConfig, Generated};

use crate::reader::{Clause, SourceProgram};
use crate::stack::Stack;
use crate::term::{mgu, Goal, PredKey, Substitution, Term, Var, VarGen, VarId, VariantMatcher};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("resolution budget of {budget} steps exhausted after {answers} answers")]
pub struct DepthExceeded {
    pub budget: usize,
    pub answers: usize,
}

enum Choice {
    Goals {
        goals: Stack<Goal>,
        trail: usize,
    },
    Clauses {
        atom: Term,
        next: usize,
        rest: Stack<Goal>,
        trail: usize,
    },
}

/// Variable bindings with a trail, undone on backtracking.
#[derive(Default)]
struct Store {
    bound: HashMap<VarId, Term>,
    trail: Vec<VarId>,
}

impl Store {
    fn resolve(&self, t: &Term) -> Term {
        match t {
            Term::Var(v) => match self.bound.get(&v.id) {
                Some(b) => self.resolve(b),
                None => t.clone(),
            },
            Term::Compound(f, args) => {
                Term::Compound(f.clone(), args.iter().map(|a| self.resolve(a)).collect())
            }
            _ => t.clone(),
        }
    }

    fn unify(&mut self, t1: &Term, t2: &Term, occurs_check: bool) -> bool {
        match mgu(&self.resolve(t1), &self.resolve(t2), occurs_check) {
            Some(s) => {
                for (v, t) in s.iter() {
                    self.bound.insert(v.id, t.clone());
                    self.trail.push(v.id);
                }
                true
            }
            None => false,
        }
    }

    fn undo(&mut self, mark: usize) {
        for id in self.trail.drain(mark..) {
            self.bound.remove(&id);
        }
    }
}

struct Solver<'p> {
    clauses: IndexMap<PredKey, Vec<&'p Clause>>,
    occurs_check: bool,
    gen: VarGen,
    store: Store,
    choices: Vec<Choice>,
}

impl Solver<'_> {
    /// Resolves `atom` against clause `index` and the following ones until
    /// one head unifies. Leaves a choice point for the remaining clauses.
    fn resolve(
        &mut self,
        atom: &Term,
        mut index: usize,
        rest: &Stack<Goal>,
    ) -> Option<Stack<Goal>> {
        let key = atom.indicator()?;
        let n = self.clauses.get(&key).map_or(0, Vec::len);
        let mark = self.store.trail.len();
        while index < n {
            let clause = self.clauses[&key][index];
            index += 1;
            let (head, body) = rename(clause, &mut self.gen);
            if self.store.unify(atom, &head, self.occurs_check) {
                if index < n {
                    self.choices.push(Choice::Clauses {
                        atom: atom.clone(),
                        next: index,
                        rest: rest.clone(),
                        trail: mark,
                    });
                }
                return Some(rest.push(body));
            }
        }
        None
    }

    fn step(&mut self, goal: &Goal, rest: &Stack<Goal>) -> Option<Stack<Goal>> {
        match goal {
            Goal::True => Some(rest.clone()),
            Goal::Fail => None,
            Goal::Conj(a, b) => Some(rest.push((**b).clone()).push((**a).clone())),
            Goal::Disj(a, b) => {
                self.choices.push(Choice::Goals {
                    goals: rest.push((**b).clone()),
                    trail: self.store.trail.len(),
                });
                Some(rest.push((**a).clone()))
            }
            Goal::Unify(t1, t2) => self
                .store
                .unify(t1, t2, self.occurs_check)
                .then(|| rest.clone()),
            Goal::Atom(a) => self.resolve(a, 0, rest),
        }
    }

    /// Pops choice points until one yields a goal list.
    fn backtrack(&mut self) -> Option<Stack<Goal>> {
        while let Some(choice) = self.choices.pop() {
            match choice {
                Choice::Goals { goals, trail } => {
                    self.store.undo(trail);
                    return Some(goals);
                }
                Choice::Clauses {
                    atom,
                    next,
                    rest,
                    trail,
                } => {
                    self.store.undo(trail);
                    if let Some(goals) = self.resolve(&atom, next, &rest) {
                        return Some(goals);
                    }
                }
            }
        }
        None
    }
}

fn rename(c: &Clause, gen: &mut VarGen) -> (Term, Goal) {
    let mut map = HashMap::new();
    let mut f = |v: &Var| {
        map.entry(v.id)
            .or_insert_with(|| Term::Var(gen.rename(v)))
            .clone()
    };
    let head = c.head.map_vars(&mut f);
    let body = c.body.as_ref().map_or(Goal::True, |b| b.map_vars(&mut f));
    (head, body)
}

/// All answers for `query`, restricted to its variables, in the order
/// depth-first search finds them. `budget` bounds the number of
/// resolution steps.
pub fn sld_solve(
    query: &Goal,
    program: &SourceProgram,
    budget: usize,
    occurs_check: bool,
) -> Result<Vec<Substitution>, DepthExceeded> {
    let mut clauses: IndexMap<PredKey, Vec<&Clause>> = IndexMap::new();
    for c in &program.clauses {
        clauses.entry(c.key()).or_default().push(c);
    }
    let mut gen = VarGen::new();
    if let Some(max) = program.max_var_id().max(query.max_var_id()) {
        gen.reserve_above(max);
    }
    let mut solver = Solver {
        clauses,
        occurs_check,
        gen,
        store: Store::default(),
        choices: Vec::new(),
    };
    let qvars = query.vars();
    let mut answers = Vec::new();
    let mut goals = Stack::nil().push(query.clone());
    for _ in 0..budget {
        let next = match goals.pop() {
            None => {
                answers.push(Substitution::from_pairs(qvars.iter().filter_map(|v| {
                    let t = solver.store.resolve(&Term::Var(v.clone()));
                    (t != Term::Var(v.clone())).then(|| (v.clone(), t))
                })));
                None
            }
            Some((g, rest)) => {
                let (g, rest) = (g.clone(), rest.clone());
                solver.step(&g, &rest)
            }
        };
        match next.or_else(|| solver.backtrack()) {
            Some(g) => goals = g,
            None => return Ok(answers),
        }
    }
    Err(DepthExceeded {
        budget,
        answers: answers.len(),
    })
}

/// Whether two answer sequences agree, answer by answer, up to renaming of
/// the variables the answers introduce. Query variables stay fixed.
pub fn answers_equivalent(query_vars: &[Var], a: &[Substitution], b: &[Substitution]) -> bool {
    a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| {
            let mut m = VariantMatcher::new();
            query_vars.iter().all(|v| {
                let t = Term::Var(v.clone());
                m.terms(&x.apply(&t), &y.apply(&t))
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reader::{parse_program, parse_query};

    fn solve(program: &str, query: &str) -> (Vec<Var>, Vec<Substitution>) {
        let p = parse_program(program).unwrap();
        let q = parse_query(query).unwrap();
        (q.vars(), sld_solve(&q, &p, 10_000, true).unwrap())
    }

    fn shown(vars: &[Var], answers: &[Substitution]) -> Vec<Vec<Term>> {
        answers
            .iter()
            .map(|s| {
                vars.iter()
                    .map(|v| s.apply(&Term::Var(v.clone())))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn example_program_answers() {
        let (vars, answers) = solve("q(a,b).\nq(Z,c) :- r(Z).\nr(c).", "q(X,Y)");
        let (a, b, c) = (
            Term::constant("a"),
            Term::constant("b"),
            Term::constant("c"),
        );
        assert_eq!(shown(&vars, &answers), vec![vec![a, b], vec![c.clone(), c]]);
    }

    #[test]
    fn main_fails() {
        let (_, answers) = solve("main :- good, bad.\ngood.", "main");
        assert!(answers.is_empty());
    }

    #[test]
    fn true_has_one_empty_answer() {
        let (_, answers) = solve("", "true");
        assert_eq!(answers, vec![Substitution::new()]);
    }

    #[test]
    fn post_program_answers() {
        let (vars, answers) = solve(
            "post(X,Y) :- one(X,Y), two(X,Y).\none(X,_) :- X=1.\ntwo(_,Y) :- Y=a; Y=b.",
            "post(X,Y)",
        );
        let one = Term::int(1);
        assert_eq!(
            shown(&vars, &answers),
            vec![
                vec![one.clone(), Term::constant("a")],
                vec![one, Term::constant("b")]
            ]
        );
    }

    #[test]
    fn budget_is_reported() {
        let p = parse_program("loop :- loop.").unwrap();
        let q = parse_query("loop").unwrap();
        assert_eq!(
            sld_solve(&q, &p, 100, true),
            Err(DepthExceeded {
                budget: 100,
                answers: 0
            })
        );
    }

    #[test]
    fn answer_comparison_ignores_fresh_names() {
        let x = Var::new(0, "X");
        let a = Substitution::from_pairs([(
            x.clone(),
            Term::compound("f", vec![Term::Var(Var::new(10, "_"))]),
        )]);
        let b = Substitution::from_pairs([(
            x.clone(),
            Term::compound("f", vec![Term::Var(Var::new(20, "Z"))]),
        )]);
        assert!(answers_equivalent(
            std::slice::from_ref(&x),
            std::slice::from_ref(&a),
            &[b]
        ));
        let c =
            Substitution::from_pairs([(x.clone(), Term::compound("f", vec![Term::constant("a")]))]);
        assert!(!answers_equivalent(&[x], &[a], &[c]));
    }
}
