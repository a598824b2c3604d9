//! Seeded generator of small pure programs and queries.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::reader::{Clause, Scope, SourceProgram};
use crate::term::{Goal, Term, VarGen};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenConfig {
    pub max_predicates: usize,
    pub max_clauses_per_pred: usize,
    pub max_body_len: usize,
    pub max_term_depth: usize,
    pub variable_pool_size: usize,
    pub seed: u64,
}

impl GenConfig {
    pub fn with_seed(seed: u64) -> Self {
        GenConfig {
            seed,
            ..GenConfig::default()
        }
    }
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_predicates: 4,
            max_clauses_per_pred: 3,
            max_body_len: 3,
            max_term_depth: 2,
            variable_pool_size: 4,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub program: SourceProgram,
    pub queries: Vec<Goal>,
}

const VAR_NAMES: [&str; 8] = ["X", "Y", "Z", "W", "U", "V", "A", "B"];
const CONSTANTS: [&str; 3] = ["a", "b", "c"];
const FUNCTORS: [(&str, usize); 3] = [("f", 1), ("g", 2), ("s", 1)];

struct Gen<'c> {
    cfg: &'c GenConfig,
    rng: ChaCha8Rng,
    /// Arity of each predicate `p0`, `p1`, ...
    arities: Vec<usize>,
}

impl Gen<'_> {
    fn pool(&self) -> usize {
        self.cfg.variable_pool_size.clamp(1, VAR_NAMES.len())
    }

    fn var(&mut self, scope: &mut Scope<'_>) -> Term {
        if self.rng.gen_bool(0.1) {
            return Term::Var(scope.var("_"));
        }
        let name = VAR_NAMES[self.rng.gen_range(0..self.pool())];
        Term::Var(scope.var(name))
    }

    fn term(&mut self, scope: &mut Scope<'_>, depth: usize) -> Term {
        let roll = self.rng.gen_range(0..10);
        if depth == 0 || roll < 6 {
            return match roll % 3 {
                0 => Term::constant(CONSTANTS.choose(&mut self.rng).expect("non-empty")),
                1 => Term::int(self.rng.gen_range(0..3)),
                _ => self.var(scope),
            };
        }
        if roll == 9 {
            let n = self.rng.gen_range(0..3);
            let items = (0..n).map(|_| self.term(scope, depth - 1)).collect();
            let tail = if self.rng.gen_bool(0.3) {
                self.var(scope)
            } else {
                Term::constant(crate::term::NIL)
            };
            return Term::list(items, tail);
        }
        let (f, arity) = *FUNCTORS.choose(&mut self.rng).expect("non-empty");
        let args = (0..arity).map(|_| self.term(scope, depth - 1)).collect();
        Term::compound(f, args)
    }

    fn call(&mut self, scope: &mut Scope<'_>, pred: usize) -> Goal {
        let args = (0..self.arities[pred])
            .map(|_| self.term(scope, self.cfg.max_term_depth.saturating_sub(1)))
            .collect();
        Goal::Atom(Term::compound(&format!("p{pred}"), args))
    }

    fn literal(&mut self, scope: &mut Scope<'_>, owner: usize) -> Goal {
        let roll = self.rng.gen_range(0..100);
        match roll {
            0..=34 => {
                let lhs = self.var(scope);
                let rhs = self.term(scope, self.cfg.max_term_depth);
                Goal::unify(lhs, rhs)
            }
            35..=39 => Goal::True,
            40..=42 => Goal::Fail,
            43..=45 if owner + 1 < self.arities.len() || owner > 0 => {
                // Occasional recursion or forward call.
                let target = self.rng.gen_range(0..self.arities.len());
                self.call(scope, target)
            }
            _ if owner > 0 => {
                let target = self.rng.gen_range(0..owner);
                self.call(scope, target)
            }
            _ => {
                let lhs = self.var(scope);
                let rhs = self.term(scope, self.cfg.max_term_depth);
                Goal::unify(lhs, rhs)
            }
        }
    }

    fn body(&mut self, scope: &mut Scope<'_>, owner: usize, nesting: usize) -> Goal {
        let len = self.rng.gen_range(1..=self.cfg.max_body_len.max(1));
        let parts = (0..len)
            .map(|_| {
                if nesting > 0 && self.rng.gen_bool(0.15) {
                    let left = self.body(scope, owner, nesting - 1);
                    let right = self.body(scope, owner, nesting - 1);
                    Goal::disj(left, right)
                } else {
                    self.literal(scope, owner)
                }
            })
            .collect();
        Goal::conj_all(parts)
    }

    fn clause(&mut self, gen: &mut VarGen, pred: usize) -> Clause {
        let mut scope = Scope::new(gen);
        let args = (0..self.arities[pred])
            .map(|_| self.term(&mut scope, self.cfg.max_term_depth.saturating_sub(1)))
            .collect();
        let head = Term::compound(&format!("p{pred}"), args);
        let body = if self.rng.gen_bool(0.3) {
            None
        } else {
            Some(self.body(&mut scope, pred, 1))
        };
        Clause { head, body }
    }

    fn query(&mut self, gen: &mut VarGen) -> Goal {
        let mut scope = Scope::new(gen);
        let n = self.arities.len();
        let first = self.rng.gen_range(0..n);
        let mut goal = self.query_atom(&mut scope, first);
        if self.rng.gen_bool(0.2) {
            let second = self.rng.gen_range(0..n);
            goal = Goal::conj(goal, self.query_atom(&mut scope, second));
        }
        goal
    }

    fn query_atom(&mut self, scope: &mut Scope<'_>, pred: usize) -> Goal {
        let args = (0..self.arities[pred])
            .map(|_| {
                if self.rng.gen_bool(0.7) {
                    let name = VAR_NAMES[self.rng.gen_range(0..self.pool())];
                    Term::Var(scope.var(name))
                } else {
                    self.term(scope, 1)
                }
            })
            .collect();
        Goal::Atom(Term::compound(&format!("p{pred}"), args))
    }
}

/// A random program over predicates `p0 .. pN` plus a few queries. Bodies
/// mostly call lower-numbered predicates, which keeps most runs finite.
pub fn generate_program(cfg: &GenConfig) -> Generated {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = rng.gen_range(1..=cfg.max_predicates.max(1));
    let arities = (0..n).map(|_| rng.gen_range(0..=2)).collect();
    let mut g = Gen { cfg, rng, arities };
    let mut gen = VarGen::new();
    let mut clauses = Vec::new();
    for pred in 0..n {
        let count = g.rng.gen_range(1..=cfg.max_clauses_per_pred.max(1));
        for _ in 0..count {
            clauses.push(g.clause(&mut gen, pred));
        }
    }
    // Interleave some clauses so that predicates are not always contiguous.
    if clauses.len() > 2 && g.rng.gen_bool(0.2) {
        let i = g.rng.gen_range(0..clauses.len() - 1);
        clauses.swap(i, i + 1);
    }
    let queries = (0..3).map(|_| g.query(&mut gen)).collect();
    Generated {
        program: SourceProgram { clauses },
        queries,
    }
}
