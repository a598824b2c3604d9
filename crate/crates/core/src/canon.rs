//! Canonical form: one clause per predicate whose head arguments are
//! distinct variables and whose body is a disjunction of the original
//! clause bodies, each prefixed with equalities for the head arguments.
//!
//! `q(a,b). q(Z,c) :- r(Z).` becomes
//! `q(X,Y) :- X=a, Y=b, true; X=Z, Y=c, r(Z).`

use std::collections::HashSet;
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::reader::{Clause, Namer, Printer, SourceProgram};
use crate::term::{Goal, PredKey, Term, Var, VarGen, VarId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDef {
    pub head_vars: Vec<Var>,
    pub body: Goal,
    /// False when the source already had a single clause with a head of
    /// distinct variables and was taken over unchanged.
    pub expanded: bool,
}

impl CanonicalDef {
    pub fn head(&self, key: &PredKey) -> Term {
        Term::compound(
            &key.name,
            self.head_vars.iter().cloned().map(Term::Var).collect(),
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CanonError {
    #[error("predicate {0} has more than one clause")]
    MultipleClauses(PredKey),
    #[error("head of {0} must consist of distinct variables")]
    NonVariableHead(PredKey),
    #[error("head variable of {0} occurs in the body")]
    HeadVarInBody(PredKey),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CanonicalProgram {
    defs: IndexMap<PredKey, CanonicalDef>,
    max_var: Option<VarId>,
}

impl CanonicalProgram {
    pub fn new() -> Self {
        CanonicalProgram::default()
    }

    pub fn insert(&mut self, key: PredKey, def: CanonicalDef) -> Result<(), CanonError> {
        if self.defs.contains_key(&key) {
            return Err(CanonError::MultipleClauses(key));
        }
        let ids = def
            .head_vars
            .iter()
            .map(|v| v.id)
            .chain(def.body.max_var_id());
        self.max_var = self.max_var.max(ids.max());
        self.defs.insert(key, def);
        Ok(())
    }

    pub fn get(&self, key: &PredKey) -> Option<&CanonicalDef> {
        self.defs.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PredKey, &CanonicalDef)> {
        self.defs.iter()
    }

    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    /// Largest variable id used anywhere in the program.
    pub fn max_var_id(&self) -> Option<VarId> {
        self.max_var
    }

    /// Loads a program that is already in canonical shape: exactly one
    /// clause per predicate, each head a tuple of distinct variables.
    pub fn from_canonical_source(p: &SourceProgram) -> Result<Self, CanonError> {
        let mut out = CanonicalProgram::new();
        for c in &p.clauses {
            let key = c.key();
            let head_vars = distinct_head_vars(&c.head)
                .ok_or_else(|| CanonError::NonVariableHead(key.clone()))?;
            out.insert(
                key,
                CanonicalDef {
                    head_vars,
                    body: c.body.clone().unwrap_or(Goal::True),
                    expanded: false,
                },
            )?;
        }
        Ok(out)
    }

    /// The program as ordinary clauses, one per predicate.
    pub fn to_source(&self) -> SourceProgram {
        SourceProgram {
            clauses: self
                .defs
                .iter()
                .map(|(k, d)| Clause {
                    head: d.head(k),
                    body: Some(d.body.clone()),
                })
                .collect(),
        }
    }

    /// Checks that no expanded definition mentions a head variable outside
    /// the left-hand sides of its argument equalities.
    pub fn check_head_freshness(&self) -> Result<(), CanonError> {
        for (key, def) in &self.defs {
            if !def.expanded {
                continue;
            }
            let ids: HashSet<VarId> = def.head_vars.iter().map(|v| v.id).collect();
            for alt in disjuncts(&def.body) {
                let mut rest = alt;
                for x in &def.head_vars {
                    let Goal::Conj(eq, tail) = rest else {
                        return Err(CanonError::HeadVarInBody(key.clone()));
                    };
                    match &**eq {
                        Goal::Unify(Term::Var(v), t) if v == x => {
                            if t.vars().iter().any(|v| ids.contains(&v.id)) {
                                return Err(CanonError::HeadVarInBody(key.clone()));
                            }
                        }
                        _ => return Err(CanonError::HeadVarInBody(key.clone())),
                    }
                    rest = tail;
                }
                if rest.vars().iter().any(|v| ids.contains(&v.id)) {
                    return Err(CanonError::HeadVarInBody(key.clone()));
                }
            }
        }
        Ok(())
    }
}

/// The alternatives of a right-nested disjunction.
fn disjuncts(g: &Goal) -> Vec<&Goal> {
    let mut out = Vec::new();
    let mut cur = g;
    while let Goal::Disj(a, b) = cur {
        out.push(&**a);
        cur = b;
    }
    out.push(cur);
    out
}

fn distinct_head_vars(head: &Term) -> Option<Vec<Var>> {
    let mut seen = HashSet::new();
    head.args()
        .iter()
        .map(|a| match a {
            Term::Var(v) if seen.insert(v.id) => Some(v.clone()),
            _ => None,
        })
        .collect()
}

const HEAD_NAMES: [&str; 6] = ["X", "Y", "Z", "W", "V", "U"];

fn head_var_names(arity: usize, avoid: &HashSet<String>) -> Vec<String> {
    let preferred = HEAD_NAMES.iter().map(|s| s.to_string());
    let numbered = (1..).map(|i| format!("X{i}"));
    preferred
        .chain(numbered)
        .filter(|n| !avoid.contains(n))
        .take(arity)
        .collect()
}

/// Rewrites `p` into canonical form. Predicates appear in order of their
/// first clause; clause order becomes disjunct order.
///
/// A predicate that already consists of one clause whose head arguments are
/// distinct variables is kept as it is (a fact gets body `true`).
pub fn canonicalize(p: &SourceProgram) -> CanonicalProgram {
    let mut groups: IndexMap<PredKey, Vec<&Clause>> = IndexMap::new();
    for c in &p.clauses {
        groups.entry(c.key()).or_default().push(c);
    }
    let mut gen = VarGen::new();
    if let Some(max) = p.max_var_id() {
        gen.reserve_above(max);
    }
    let mut out = CanonicalProgram::new();
    for (key, clauses) in groups {
        let def = match clauses.as_slice() {
            [only] if distinct_head_vars(&only.head).is_some() => CanonicalDef {
                head_vars: distinct_head_vars(&only.head).unwrap_or_default(),
                body: only.body.clone().unwrap_or(Goal::True),
                expanded: false,
            },
            _ => expand(&key, &clauses, &mut gen),
        };
        out.insert(key, def)
            .expect("groups have one entry per predicate");
    }
    out
}

fn expand(key: &PredKey, clauses: &[&Clause], gen: &mut VarGen) -> CanonicalDef {
    let mut avoid = HashSet::new();
    for c in clauses {
        for v in c.head.vars() {
            avoid.insert(v.name.to_string());
        }
        if let Some(b) = &c.body {
            for v in b.vars() {
                avoid.insert(v.name.to_string());
            }
        }
    }
    let head_vars: Vec<Var> = head_var_names(key.arity, &avoid)
        .iter()
        .map(|n| gen.fresh(n))
        .collect();
    let alternatives = clauses
        .iter()
        .map(|c| {
            let mut parts: Vec<Goal> = head_vars
                .iter()
                .zip(c.head.args())
                .map(|(x, t)| Goal::unify(Term::Var(x.clone()), t.clone()))
                .collect();
            parts.push(c.body.clone().unwrap_or(Goal::True));
            Goal::conj_all(parts)
        })
        .collect();
    CanonicalDef {
        head_vars,
        body: Goal::disj_all(alternatives),
        expanded: true,
    }
}

/// One line per definition, in the reader's syntax.
pub fn dump_canonical(cp: &CanonicalProgram) -> String {
    let mut out = String::new();
    for (key, def) in cp.iter() {
        let head = def.head(key);
        let mut namer = Namer::new();
        namer.observe_term(&head);
        namer.observe_goal(&def.body);
        let clause = Clause {
            head,
            body: Some(def.body.clone()),
        };
        out.push_str(&Printer::spaced(&namer).clause(&clause));
        out.push('\n');
    }
    out
}

impl fmt::Display for CanonicalProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&dump_canonical(self))
    }
}

/// Whether two canonical programs are equal up to renaming variables apart
/// within each definition.
pub fn alpha_equivalent(a: &CanonicalProgram, b: &CanonicalProgram) -> bool {
    a.len() == b.len()
        && a.iter().zip(b.iter()).all(|((ka, da), (kb, db))| {
            let mut m = crate::term::VariantMatcher::new();
            ka == kb
                && da.head_vars.len() == db.head_vars.len()
                && da
                    .head_vars
                    .iter()
                    .zip(&db.head_vars)
                    .all(|(x, y)| m.vars(x, y))
                && m.goals(&da.body, &db.body)
        })
}
