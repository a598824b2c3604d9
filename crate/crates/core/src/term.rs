//! Terms, goals and substitutions of the object language.
//!
//! Variables carry an integer identity; the display name is only used for
//! printing. Two variables are the same variable iff their ids are equal.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

pub type VarId = u64;

#[derive(Clone, Debug)]
pub struct Var {
    pub id: VarId,
    pub name: Arc<str>,
}

impl Var {
    pub fn new(id: VarId, name: &str) -> Self {
        Var {
            id,
            name: Arc::from(name),
        }
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Var {}

impl Hash for Var {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.id.cmp(&other.id)
    }
}

/// Monotone source of variable ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarGen {
    next: VarId,
}

impl VarGen {
    pub fn new() -> Self {
        VarGen::default()
    }

    pub fn starting_at(next: VarId) -> Self {
        VarGen { next }
    }

    /// The id the next call to [`VarGen::fresh`] will hand out.
    pub fn peek(&self) -> VarId {
        self.next
    }

    pub fn fresh(&mut self, name: &str) -> Var {
        let id = self.next;
        self.next += 1;
        Var::new(id, name)
    }

    /// A new variable carrying the display name of `v`.
    pub fn rename(&mut self, v: &Var) -> Var {
        let id = self.next;
        self.next += 1;
        Var {
            id,
            name: v.name.clone(),
        }
    }

    /// Makes sure every id handed out from now on is greater than `id`.
    pub fn reserve_above(&mut self, id: VarId) {
        if self.next <= id {
            self.next = id + 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Var),
    Const(Arc<str>),
    Int(i64),
    /// Functor and arguments; never constructed with zero arguments.
    Compound(Arc<str>, Vec<Term>),
}

pub const NIL: &str = "[]";
pub const CONS: &str = ".";

impl Term {
    pub fn var(v: Var) -> Term {
        Term::Var(v)
    }

    pub fn constant(name: &str) -> Term {
        Term::Const(Arc::from(name))
    }

    pub fn int(value: i64) -> Term {
        Term::Int(value)
    }

    /// Builds `name(args..)`; zero arguments yield a constant.
    pub fn compound(name: &str, args: Vec<Term>) -> Term {
        if args.is_empty() {
            Term::constant(name)
        } else {
            Term::Compound(Arc::from(name), args)
        }
    }

    pub fn list(items: Vec<Term>, tail: Term) -> Term {
        items
            .into_iter()
            .rev()
            .fold(tail, |acc, item| Term::compound(CONS, vec![item, acc]))
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Term::Var(_))
    }

    pub fn as_var(&self) -> Option<&Var> {
        match self {
            Term::Var(v) => Some(v),
            _ => None,
        }
    }

    /// Name and arity for constants and compounds.
    pub fn indicator(&self) -> Option<PredKey> {
        match self {
            Term::Const(name) => Some(PredKey::new(name, 0)),
            Term::Compound(name, args) => Some(PredKey::new(name, args.len())),
            _ => None,
        }
    }

    pub fn args(&self) -> &[Term] {
        match self {
            Term::Compound(_, args) => args,
            _ => &[],
        }
    }

    pub fn occurs(&self, id: VarId) -> bool {
        match self {
            Term::Var(v) => v.id == id,
            Term::Compound(_, args) => args.iter().any(|a| a.occurs(id)),
            _ => false,
        }
    }

    pub fn is_ground(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Compound(_, args) => args.iter().all(Term::is_ground),
            _ => true,
        }
    }

    /// Variables in order of first occurrence, without repetition.
    pub fn vars(&self) -> Vec<Var> {
        let mut out = Vec::new();
        self.collect_vars(&mut out, &mut HashSet::new());
        out
    }

    pub fn collect_vars(&self, out: &mut Vec<Var>, seen: &mut HashSet<VarId>) {
        match self {
            Term::Var(v) => {
                if seen.insert(v.id) {
                    out.push(v.clone());
                }
            }
            Term::Compound(_, args) => {
                for a in args {
                    a.collect_vars(out, seen);
                }
            }
            _ => {}
        }
    }

    pub fn max_var_id(&self) -> Option<VarId> {
        match self {
            Term::Var(v) => Some(v.id),
            Term::Compound(_, args) => args.iter().filter_map(Term::max_var_id).max(),
            _ => None,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Compound(_, args) => 1 + args.iter().map(Term::size).sum::<usize>(),
            _ => 1,
        }
    }

    /// Replaces every variable through `f`, leaving the rest of the term intact.
    pub fn map_vars(&self, f: &mut impl FnMut(&Var) -> Term) -> Term {
        match self {
            Term::Var(v) => f(v),
            Term::Compound(name, args) => {
                Term::Compound(name.clone(), args.iter().map(|a| a.map_vars(f)).collect())
            }
            other => other.clone(),
        }
    }
}

/// Predicate indicator `name/arity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PredKey {
    pub name: Arc<str>,
    pub arity: usize,
}

impl PredKey {
    pub fn new(name: &str, arity: usize) -> Self {
        PredKey {
            name: Arc::from(name),
            arity,
        }
    }
}

impl fmt::Display for PredKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

impl std::str::FromStr for PredKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, arity) = s
            .rsplit_once('/')
            .ok_or_else(|| format!("expected name/arity, got `{s}`"))?;
        let arity = arity.parse().map_err(|_| format!("bad arity in `{s}`"))?;
        if name.is_empty() {
            return Err(format!("empty predicate name in `{s}`"));
        }
        Ok(PredKey::new(name, arity))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GoalError {
    #[error("variable `{0}` cannot be used as a goal")]
    VarGoal(String),
    #[error("number {0} cannot be used as a goal")]
    IntGoal(i64),
    #[error("`{0}` is not callable in pure Prolog")]
    NotCallable(String),
}

/// The subject of a port: `true | fail | t1=t2 | atom | (g,g) | (g;g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Goal {
    True,
    Fail,
    Unify(Term, Term),
    /// A user predication; never wraps `true`, `fail`, `=`, `,` or `;`.
    Atom(Term),
    Conj(Arc<Goal>, Arc<Goal>),
    Disj(Arc<Goal>, Arc<Goal>),
}

impl Goal {
    pub fn conj(a: Goal, b: Goal) -> Goal {
        Goal::Conj(Arc::new(a), Arc::new(b))
    }

    pub fn disj(a: Goal, b: Goal) -> Goal {
        Goal::Disj(Arc::new(a), Arc::new(b))
    }

    pub fn unify(a: Term, b: Term) -> Goal {
        Goal::Unify(a, b)
    }

    /// Right-nested conjunction; an empty list is `true`.
    pub fn conj_all(goals: Vec<Goal>) -> Goal {
        let mut it = goals.into_iter().rev();
        match it.next() {
            None => Goal::True,
            Some(last) => it.fold(last, |acc, g| Goal::conj(g, acc)),
        }
    }

    /// Right-nested disjunction; an empty list is `fail`.
    pub fn disj_all(goals: Vec<Goal>) -> Goal {
        let mut it = goals.into_iter().rev();
        match it.next() {
            None => Goal::Fail,
            Some(last) => it.fold(last, |acc, g| Goal::disj(g, acc)),
        }
    }

    /// Reads a term as a goal.
    pub fn from_term(t: &Term) -> Result<Goal, GoalError> {
        match t {
            Term::Var(v) => Err(GoalError::VarGoal(v.name.to_string())),
            Term::Int(i) => Err(GoalError::IntGoal(*i)),
            Term::Const(name) => Ok(match &**name {
                "true" => Goal::True,
                "fail" => Goal::Fail,
                _ => Goal::Atom(t.clone()),
            }),
            Term::Compound(name, args) => match (&**name, args.as_slice()) {
                ("=", [a, b]) => Ok(Goal::Unify(a.clone(), b.clone())),
                (",", [a, b]) => Ok(Goal::conj(Goal::from_term(a)?, Goal::from_term(b)?)),
                (";", [a, b]) => Ok(Goal::disj(Goal::from_term(a)?, Goal::from_term(b)?)),
                (":-", [_, _]) | ("->", [_, _]) => Err(GoalError::NotCallable(name.to_string())),
                _ => Ok(Goal::Atom(t.clone())),
            },
        }
    }

    pub fn to_term(&self) -> Term {
        match self {
            Goal::True => Term::constant("true"),
            Goal::Fail => Term::constant("fail"),
            Goal::Unify(a, b) => Term::compound("=", vec![a.clone(), b.clone()]),
            Goal::Atom(t) => t.clone(),
            Goal::Conj(a, b) => Term::compound(",", vec![a.to_term(), b.to_term()]),
            Goal::Disj(a, b) => Term::compound(";", vec![a.to_term(), b.to_term()]),
        }
    }

    pub fn indicator(&self) -> Option<PredKey> {
        match self {
            Goal::Atom(t) => t.indicator(),
            _ => None,
        }
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut out = Vec::new();
        self.collect_vars(&mut out, &mut HashSet::new());
        out
    }

    pub fn collect_vars(&self, out: &mut Vec<Var>, seen: &mut HashSet<VarId>) {
        match self {
            Goal::True | Goal::Fail => {}
            Goal::Unify(a, b) => {
                a.collect_vars(out, seen);
                b.collect_vars(out, seen);
            }
            Goal::Atom(t) => t.collect_vars(out, seen),
            Goal::Conj(a, b) | Goal::Disj(a, b) => {
                a.collect_vars(out, seen);
                b.collect_vars(out, seen);
            }
        }
    }

    pub fn max_var_id(&self) -> Option<VarId> {
        match self {
            Goal::True | Goal::Fail => None,
            Goal::Unify(a, b) => a.max_var_id().max(b.max_var_id()),
            Goal::Atom(t) => t.max_var_id(),
            Goal::Conj(a, b) | Goal::Disj(a, b) => a.max_var_id().max(b.max_var_id()),
        }
    }

    pub fn map_vars(&self, f: &mut impl FnMut(&Var) -> Term) -> Goal {
        match self {
            Goal::True => Goal::True,
            Goal::Fail => Goal::Fail,
            Goal::Unify(a, b) => Goal::Unify(a.map_vars(f), b.map_vars(f)),
            Goal::Atom(t) => Goal::Atom(t.map_vars(f)),
            Goal::Conj(a, b) => Goal::conj(a.map_vars(f), b.map_vars(f)),
            Goal::Disj(a, b) => Goal::disj(a.map_vars(f), b.map_vars(f)),
        }
    }

    /// Same shape, ignoring the terms inside.
    pub fn same_shape(&self, other: &Goal) -> bool {
        match (self, other) {
            (Goal::True, Goal::True) | (Goal::Fail, Goal::Fail) => true,
            (Goal::Unify(..), Goal::Unify(..)) => true,
            (Goal::Atom(a), Goal::Atom(b)) => a.indicator() == b.indicator(),
            (Goal::Conj(a1, b1), Goal::Conj(a2, b2)) | (Goal::Disj(a1, b1), Goal::Disj(a2, b2)) => {
                a1.same_shape(a2) && b1.same_shape(b2)
            }
            _ => false,
        }
    }
}

/// A finite map from variables to terms. Substitutions built by [`mgu`] are
/// idempotent and never bind a variable to itself.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Substitution {
    bindings: BTreeMap<Var, Term>,
}

impl Substitution {
    pub fn new() -> Self {
        Substitution::default()
    }

    /// Builds a substitution from explicit pairs. Identity pairs are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, Term)>) -> Self {
        let mut s = Substitution::new();
        for (v, t) in pairs {
            if t.as_var() != Some(&v) {
                s.bindings.insert(v, t);
            }
        }
        s
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn get(&self, v: &Var) -> Option<&Term> {
        self.bindings.get(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Var, &Term)> {
        self.bindings.iter()
    }

    pub fn domain(&self) -> impl Iterator<Item = &Var> {
        self.bindings.keys()
    }

    pub fn apply(&self, t: &Term) -> Term {
        if self.bindings.is_empty() {
            return t.clone();
        }
        t.map_vars(&mut |v| match self.bindings.get(v) {
            Some(b) => b.clone(),
            None => Term::Var(v.clone()),
        })
    }

    pub fn apply_goal(&self, g: &Goal) -> Goal {
        if self.bindings.is_empty() {
            return g.clone();
        }
        g.map_vars(&mut |v| match self.bindings.get(v) {
            Some(b) => b.clone(),
            None => Term::Var(v.clone()),
        })
    }

    /// `self ∘ inner`: applying the result equals applying `inner`, then `self`.
    pub fn compose(&self, inner: &Substitution) -> Substitution {
        let mut out = Substitution::new();
        for (v, t) in &inner.bindings {
            let t = self.apply(t);
            if t.as_var() != Some(v) {
                out.bindings.insert(v.clone(), t);
            }
        }
        for (v, t) in &self.bindings {
            if !inner.bindings.contains_key(v) {
                out.bindings.insert(v.clone(), t.clone());
            }
        }
        out
    }

    /// Restriction to `vars`, keeping only bindings that are not identities.
    pub fn restrict(&self, vars: &[Var]) -> Substitution {
        Substitution::from_pairs(
            vars.iter()
                .filter_map(|v| self.bindings.get(v).map(|t| (v.clone(), t.clone()))),
        )
    }

    pub fn is_idempotent(&self) -> bool {
        self.bindings
            .values()
            .all(|t| self.bindings.keys().all(|v| !t.occurs(v.id)))
    }

    fn bind(&mut self, v: Var, t: Term) {
        let single = Substitution {
            bindings: BTreeMap::from([(v.clone(), t.clone())]),
        };
        for range in self.bindings.values_mut() {
            if range.occurs(v.id) {
                *range = single.apply(range);
            }
        }
        self.bindings.insert(v, t);
    }
}

/// Upper bound on decomposition steps when the occurs check is disabled;
/// cyclic bindings can otherwise make the loop diverge.
const UNCHECKED_STEP_LIMIT: usize = 1_000_000;

/// Most general unifier of `t1` and `t2`, or `None` when none exists.
///
/// Robinson-style: every new binding is resolved through the bindings found
/// so far, so the result stays idempotent. A variable met on the left is
/// bound to the right-hand side, so `mgu(X, Y) = {X/Y}`.
///
/// With `occurs_check` off a variable may be bound to a term containing it;
/// the result is then not idempotent, and unification problems that would
/// need rational trees give up (return `None`) after a fixed step budget.
pub fn mgu(t1: &Term, t2: &Term, occurs_check: bool) -> Option<Substitution> {
    let mut s = Substitution::new();
    let mut work = vec![(t1.clone(), t2.clone())];
    let mut steps = 0usize;
    while let Some((a, b)) = work.pop() {
        steps += 1;
        if !occurs_check && steps > UNCHECKED_STEP_LIMIT {
            return None;
        }
        let a = s.apply(&a);
        let b = s.apply(&b);
        match (a, b) {
            (Term::Var(x), Term::Var(y)) if x == y => {}
            (Term::Var(x), t) | (t, Term::Var(x)) => {
                if occurs_check && t.occurs(x.id) {
                    return None;
                }
                s.bind(x, t);
            }
            (Term::Const(a), Term::Const(b)) => {
                if a != b {
                    return None;
                }
            }
            (Term::Int(a), Term::Int(b)) => {
                if a != b {
                    return None;
                }
            }
            (Term::Compound(f, xs), Term::Compound(g, ys)) => {
                if f != g || xs.len() != ys.len() {
                    return None;
                }
                work.extend(xs.into_iter().zip(ys).rev());
            }
            _ => return None,
        }
    }
    Some(s)
}

/// Checks that two structures are equal up to a consistent, bijective
/// renaming of variables. The renaming persists across calls, so a whole
/// sequence of terms can be compared under one renaming.
#[derive(Debug, Default, Clone)]
pub struct VariantMatcher {
    forward: HashMap<VarId, VarId>,
    backward: HashMap<VarId, VarId>,
}

impl VariantMatcher {
    pub fn new() -> Self {
        VariantMatcher::default()
    }

    /// Pins `v` to itself on both sides.
    pub fn fix(&mut self, v: &Var) {
        self.forward.insert(v.id, v.id);
        self.backward.insert(v.id, v.id);
    }

    pub fn vars(&mut self, a: &Var, b: &Var) -> bool {
        match (self.forward.get(&a.id), self.backward.get(&b.id)) {
            (Some(&fb), Some(&ba)) => fb == b.id && ba == a.id,
            (None, None) => {
                self.forward.insert(a.id, b.id);
                self.backward.insert(b.id, a.id);
                true
            }
            _ => false,
        }
    }

    pub fn terms(&mut self, a: &Term, b: &Term) -> bool {
        match (a, b) {
            (Term::Var(x), Term::Var(y)) => self.vars(x, y),
            (Term::Const(x), Term::Const(y)) => x == y,
            (Term::Int(x), Term::Int(y)) => x == y,
            (Term::Compound(f, xs), Term::Compound(g, ys)) => {
                f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| self.terms(x, y))
            }
            _ => false,
        }
    }

    pub fn goals(&mut self, a: &Goal, b: &Goal) -> bool {
        match (a, b) {
            (Goal::True, Goal::True) | (Goal::Fail, Goal::Fail) => true,
            (Goal::Unify(a1, a2), Goal::Unify(b1, b2)) => self.terms(a1, b1) && self.terms(a2, b2),
            (Goal::Atom(x), Goal::Atom(y)) => self.terms(x, y),
            (Goal::Conj(a1, a2), Goal::Conj(b1, b2)) | (Goal::Disj(a1, a2), Goal::Disj(b1, b2)) => {
                self.goals(a1, b1) && self.goals(a2, b2)
            }
            _ => false,
        }
    }

    pub fn substs(&mut self, a: &Substitution, b: &Substitution) -> bool {
        a.len() == b.len()
            && a.iter()
                .zip(b.iter())
                .all(|((va, ta), (vb, tb))| self.vars(va, vb) && self.terms(ta, tb))
    }
}

/// `a` and `b` are equal up to renaming (one renaming for the whole slice).
pub fn is_variant(a: &[Term], b: &[Term]) -> bool {
    let mut m = VariantMatcher::new();
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| m.terms(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(id: VarId, name: &str) -> Term {
        Term::Var(Var::new(id, name))
    }

    fn c(name: &str) -> Term {
        Term::constant(name)
    }

    fn f(name: &str, args: Vec<Term>) -> Term {
        Term::compound(name, args)
    }

    #[test]
    fn mgu_binds_variable_to_int() {
        let s = mgu(&v(0, "X"), &Term::int(1), true).unwrap();
        assert_eq!(
            s,
            Substitution::from_pairs([(Var::new(0, "X"), Term::int(1))])
        );
    }

    #[test]
    fn mgu_of_identical_terms_is_empty() {
        let t = f("p", vec![c("a")]);
        assert!(mgu(&t, &t, true).unwrap().is_empty());
    }

    #[test]
    fn mgu_clash_after_binding() {
        let x = v(0, "X");
        let lhs = f("f", vec![x.clone(), x]);
        let rhs = f("f", vec![c("a"), c("b")]);
        assert_eq!(mgu(&lhs, &rhs, true), None);
    }

    #[test]
    fn occurs_check_rejects_cycle() {
        let x = v(0, "X");
        let fx = f("f", vec![x.clone()]);
        assert_eq!(mgu(&x, &fx, true), None);
        let s = mgu(&x, &fx, false).unwrap();
        assert_eq!(s.get(&Var::new(0, "X")), Some(&fx));
    }

    #[test]
    fn unchecked_cyclic_unification_gives_up() {
        let x = v(0, "X");
        let fx = f("f", vec![x.clone()]);
        let ffx = f("f", vec![f("f", vec![x.clone()])]);
        let lhs = f("p", vec![x.clone(), x]);
        let rhs = f("p", vec![fx, ffx]);
        // Needs rational trees; must terminate either way.
        let _ = mgu(&lhs, &rhs, false);
    }

    #[test]
    fn mgu_is_idempotent_through_chains() {
        // X = Y, Y = f(Z), Z = a
        let lhs = f("t", vec![v(0, "X"), v(1, "Y"), v(2, "Z")]);
        let rhs = f("t", vec![v(1, "Y"), f("f", vec![v(2, "Z")]), c("a")]);
        let s = mgu(&lhs, &rhs, true).unwrap();
        assert!(s.is_idempotent());
        assert_eq!(s.apply(&lhs), s.apply(&rhs));
        assert_eq!(s.apply(&v(0, "X")), f("f", vec![c("a")]));
    }

    #[test]
    fn apply_replaces_bound_variables_only() {
        let s = Substitution::from_pairs([(Var::new(0, "X"), Term::int(1))]);
        let t = f("two", vec![v(0, "X"), v(1, "Y")]);
        assert_eq!(s.apply(&t), f("two", vec![Term::int(1), v(1, "Y")]));
        assert_eq!(Substitution::new().apply(&t), t);
    }

    #[test]
    fn compose_applies_inner_first() {
        let inner = Substitution::from_pairs([(Var::new(1, "Y"), f("f", vec![v(0, "X")]))]);
        let outer = Substitution::from_pairs([(Var::new(0, "X"), Term::int(1))]);
        let t = f("g", vec![v(0, "X"), v(1, "Y")]);
        let composed = outer.compose(&inner);
        assert_eq!(composed.apply(&t), outer.apply(&inner.apply(&t)));
        assert_eq!(
            composed.apply(&t),
            f("g", vec![Term::int(1), f("f", vec![Term::int(1)])])
        );
    }

    #[test]
    fn goal_term_conversion() {
        let t = f(",", vec![f("post", vec![v(0, "X"), v(1, "Y")]), c("fail")]);
        let g = Goal::from_term(&t).unwrap();
        assert_eq!(
            g,
            Goal::conj(
                Goal::Atom(f("post", vec![v(0, "X"), v(1, "Y")])),
                Goal::Fail
            )
        );
        assert_eq!(g.to_term(), t);
        assert!(matches!(
            Goal::from_term(&v(3, "G")),
            Err(GoalError::VarGoal(_))
        ));
        assert!(matches!(
            Goal::from_term(&Term::int(3)),
            Err(GoalError::IntGoal(3))
        ));
    }

    #[test]
    fn variant_requires_bijection() {
        let a = [f("p", vec![v(0, "X"), v(1, "Y")])];
        let b = [f("p", vec![v(5, "A"), v(6, "B")])];
        let c_ = [f("p", vec![v(5, "A"), v(5, "A")])];
        assert!(is_variant(&a, &b));
        assert!(!is_variant(&a, &c_));
        assert!(!is_variant(&c_, &a));
    }

    #[test]
    fn pred_key_parses() {
        let k: PredKey = "two/2".parse().unwrap();
        assert_eq!(k, PredKey::new("two", 2));
        assert!("two".parse::<PredKey>().is_err());
    }
}
