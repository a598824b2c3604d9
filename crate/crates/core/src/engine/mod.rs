//! Events and the port transition rules.
//!
//! An event is `port goal [A-stack][B-stack]`. The A-stack holds the
//! ancestors that give the goal its context; the B-stack holds the bets made
//! so far: unifiers and memos of the definition body or disjunct used.

mod audit;
mod backward;
mod journal;
mod step;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::stack::Stack;
use crate::term::{Goal, Substitution, Term};

pub use audit::{classify_event, matching_rules, sel, EventClass, Polarity, Position};
pub use backward::{step_backward_inverse, Backward};
pub use journal::{
    computed_answer, enumerate_answers, run, Advance, AnswerSet, Journal, JournalError, Options,
    Outcome, StepRecord, Transition,
};
pub use step::{Machine, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Port {
    Call,
    Exit,
    Fail,
    Redo,
}

impl Port {
    pub const ALL: [Port; 4] = [Port::Call, Port::Exit, Port::Fail, Port::Redo];

    pub fn name(self) -> &'static str {
        match self {
            Port::Call => "call",
            Port::Exit => "exit",
            Port::Fail => "fail",
            Port::Redo => "redo",
        }
    }

    /// Call and redo enter a goal; exit and fail leave it.
    pub fn is_push(self) -> bool {
        matches!(self, Port::Call | Port::Redo)
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Port {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Port::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown port `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    First,
    Second,
}

impl Tag {
    pub fn number(self) -> u8 {
        match self {
            Tag::First => 1,
            Tag::Second => 2,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ancestor {
    /// The atom whose definition body is being run.
    Atom(Term),
    /// `tag/g1,g2`: working on the tagged conjunct.
    Conj(Tag, Arc<Goal>, Arc<Goal>),
    /// `tag/g1;g2`: working on the tagged disjunct.
    Disj(Tag, Arc<Goal>, Arc<Goal>),
    /// `true`, `fail` or a unification. No rule pushes one.
    Other(Goal),
}

impl Ancestor {
    pub fn is_tagged(&self) -> bool {
        matches!(self, Ancestor::Conj(..) | Ancestor::Disj(..))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bet {
    Mgu(Substitution),
    /// `body▸atom`: the body instance through which `atom` exited.
    DefMemo {
        body: Goal,
        atom: Term,
    },
    /// `chosen↣(tag/left;right)`: the disjunct through which the
    /// disjunction exited.
    DisjMemo {
        chosen: Goal,
        tag: Tag,
        left: Arc<Goal>,
        right: Arc<Goal>,
    },
}

pub type AStack = Stack<Ancestor>;
pub type BStack = Stack<Bet>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Event {
    pub port: Port,
    pub goal: Goal,
    pub ancestors: AStack,
    pub bets: BStack,
}

impl Event {
    pub fn new(port: Port, goal: Goal, ancestors: AStack, bets: BStack) -> Self {
        Event {
            port,
            goal,
            ancestors,
            bets,
        }
    }

    /// `call q [nil][nil]`.
    pub fn initial(query: Goal) -> Self {
        Event::new(Port::Call, query, Stack::nil(), Stack::nil())
    }

    pub fn is_initial(&self) -> bool {
        self.port == Port::Call && self.ancestors.is_empty() && self.bets.is_empty()
    }

    /// A pop event at the top level; no rule applies to it.
    pub fn is_final(&self) -> bool {
        !self.port.is_push() && self.ancestors.is_empty()
    }

    /// The composition of every unifier on the B-stack.
    pub fn current_subst(&self) -> Substitution {
        current_subst(&self.bets)
    }
}

/// Composition of the unifiers on `bets`, the deepest applied first.
pub fn current_subst(bets: &BStack) -> Substitution {
    let mut acc = Substitution::new();
    for s in mgus_bottom_up(bets) {
        acc = s.compose(&acc);
    }
    acc
}

/// Applies the unifiers of `bets` to `goal` one at a time, deepest first.
pub fn apply_bets(bets: &BStack, goal: &Goal) -> Goal {
    let ids = |g: &Goal| g.vars().into_iter().map(|v| v.id).collect::<HashSet<_>>();
    let mut g = goal.clone();
    let mut live = ids(&g);
    for s in mgus_bottom_up(bets) {
        // Unifiers that bind none of the goal's variables leave it as is.
        if s.domain().any(|v| live.contains(&v.id)) {
            g = s.apply_goal(&g);
            live = ids(&g);
        }
    }
    g
}

fn mgus_bottom_up(bets: &BStack) -> Vec<&Substitution> {
    let mut out: Vec<&Substitution> = bets
        .iter()
        .filter_map(|b| match b {
            Bet::Mgu(s) => Some(s),
            _ => None,
        })
        .collect();
    out.reverse();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Conj1,
    Conj2,
    Conj3,
    Conj4,
    Conj5,
    Conj6,
    Disj1,
    Disj2,
    Disj3,
    Disj4,
    Disj5,
    Disj6,
    True1,
    True2,
    Fail,
    Unif1,
    Unif2,
    Atom1,
    Atom2,
    Atom3,
    Atom4,
}

impl Rule {
    pub const ALL: [Rule; 21] = [
        Rule::Conj1,
        Rule::Conj2,
        Rule::Conj3,
        Rule::Conj4,
        Rule::Conj5,
        Rule::Conj6,
        Rule::Disj1,
        Rule::Disj2,
        Rule::Disj3,
        Rule::Disj4,
        Rule::Disj5,
        Rule::Disj6,
        Rule::True1,
        Rule::True2,
        Rule::Fail,
        Rule::Unif1,
        Rule::Unif2,
        Rule::Atom1,
        Rule::Atom2,
        Rule::Atom3,
        Rule::Atom4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Conj1 => "conj:1",
            Rule::Conj2 => "conj:2",
            Rule::Conj3 => "conj:3",
            Rule::Conj4 => "conj:4",
            Rule::Conj5 => "conj:5",
            Rule::Conj6 => "conj:6",
            Rule::Disj1 => "disj:1",
            Rule::Disj2 => "disj:2",
            Rule::Disj3 => "disj:3",
            Rule::Disj4 => "disj:4",
            Rule::Disj5 => "disj:5",
            Rule::Disj6 => "disj:6",
            Rule::True1 => "true:1",
            Rule::True2 => "true:2",
            Rule::Fail => "fail",
            Rule::Unif1 => "unif:1",
            Rule::Unif2 => "unif:2",
            Rule::Atom1 => "atom:1",
            Rule::Atom2 => "atom:2",
            Rule::Atom3 => "atom:3",
            Rule::Atom4 => "atom:4",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Rule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}
