//! Textual renderings of events and journals.
//!
//! Raw lines look like
//!
//! ```text
//! exit good [1/good,bad·main·nil][true▸good·nil]
//! ```
//!
//! Stacks are printed top first, separated by `·` and closed by `nil`.
//! Tagged conjunctions print as `1/g1,g2`, tagged disjunctions as
//! `(1/(g1);g2)`, definition memos as `body▸atom`, disjunct memos as
//! `chosen↣(1/(g1);g2)` and unifiers as `{X/1,Y/a}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{apply_bets, Ancestor, Bet, Event, Journal, Port, Tag, Transition};
use crate::reader::{parse_goal_in, parse_term_in, Namer, ParseError, Printer, Scope};
use crate::stack::Stack;
use crate::term::{Goal, Substitution, Term, VarGen, VariantMatcher};

pub const CONS_SEP: &str = "·";
pub const DEF_MEMO: &str = "▸";
pub const DISJ_MEMO: &str = "↣";
pub const DEF_MEMO_ASCII: &str = "=>";
pub const DISJ_MEMO_ASCII: &str = "~>";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    /// Print memos with `=>` and `~>` instead of `▸` and `↣`.
    pub ascii: bool,
}

impl Style {
    fn def_memo(self) -> &'static str {
        if self.ascii {
            DEF_MEMO_ASCII
        } else {
            DEF_MEMO
        }
    }

    fn disj_memo(self) -> &'static str {
        if self.ascii {
            DISJ_MEMO_ASCII
        } else {
            DISJ_MEMO
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceLine {
    pub index: usize,
    pub port: String,
    pub goal_text: String,
    pub astack_text: String,
    pub bstack_text: String,
    /// Number of ancestors.
    pub depth: usize,
}

impl TraceLine {
    /// `port goal [A][B]`.
    pub fn raw(&self) -> String {
        format!(
            "{} {} [{}][{}]",
            self.port, self.goal_text, self.astack_text, self.bstack_text
        )
    }

    /// `port goal`, indented two spaces per ancestor.
    pub fn indented(&self) -> String {
        format!(
            "{}{} {}",
            "  ".repeat(self.depth),
            self.port,
            self.goal_text
        )
    }
}

/// One event as a self-describing record; field order is fixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventRecord {
    pub index: usize,
    pub port: String,
    pub goal: String,
    /// Top first.
    pub astack: Vec<String>,
    /// Top first.
    pub bstack: Vec<String>,
    /// Rule that produced this event; `None` for event 0.
    pub rule_applied: Option<String>,
}

/// Renders events with stable variable names: each variable keeps the name
/// it got when first seen, its source name unless another variable already
/// has it.
#[derive(Clone, Debug, Default)]
pub struct Renderer {
    namer: Namer,
    style: Style,
}

impl Renderer {
    pub fn new(style: Style) -> Self {
        Renderer {
            namer: Namer::new(),
            style,
        }
    }

    /// Registers the variables of `e` in order of appearance.
    pub fn observe(&mut self, e: &Event) {
        self.namer.observe_goal(&e.goal);
        for a in e.ancestors.iter() {
            match a {
                Ancestor::Atom(t) => self.namer.observe_term(t),
                Ancestor::Conj(_, g1, g2) | Ancestor::Disj(_, g1, g2) => {
                    self.namer.observe_goal(g1);
                    self.namer.observe_goal(g2);
                }
                Ancestor::Other(g) => self.namer.observe_goal(g),
            }
        }
        for b in e.bets.iter() {
            match b {
                Bet::Mgu(s) => {
                    for (v, t) in s.iter() {
                        self.namer.observe_var(v);
                        self.namer.observe_term(t);
                    }
                }
                Bet::DefMemo { body, atom } => {
                    self.namer.observe_goal(body);
                    self.namer.observe_term(atom);
                }
                Bet::DisjMemo {
                    chosen,
                    left,
                    right,
                    ..
                } => {
                    self.namer.observe_goal(chosen);
                    self.namer.observe_goal(left);
                    self.namer.observe_goal(right);
                }
            }
        }
    }

    pub fn observe_journal(&mut self, j: &Journal) {
        for e in j.events() {
            self.observe(e);
        }
    }

    fn printer(&self) -> Printer<'_> {
        Printer::compact(&self.namer)
    }

    /// A goal as an operand: conjunctions and disjunctions in parentheses.
    pub fn goal(&self, g: &Goal) -> String {
        self.printer().goal_at(g, 999)
    }

    pub fn term(&self, t: &Term) -> String {
        self.printer().term_at(t, 999)
    }

    pub fn ancestor(&self, a: &Ancestor) -> String {
        let p = self.printer();
        match a {
            Ancestor::Atom(t) => p.term_at(t, 999),
            Ancestor::Conj(tag, g1, g2) => {
                format!("{tag}/{},{}", p.goal_at(g1, 999), p.goal_at(g2, 1000))
            }
            Ancestor::Disj(tag, g1, g2) => self.tagged_disj(*tag, g1, g2),
            Ancestor::Other(g) => p.goal_at(g, 999),
        }
    }

    fn tagged_disj(&self, tag: Tag, g1: &Goal, g2: &Goal) -> String {
        let p = self.printer();
        format!("({tag}/({});{})", p.goal_at(g1, 1200), p.goal_at(g2, 1100))
    }

    pub fn bet(&self, b: &Bet) -> String {
        let p = self.printer();
        match b {
            Bet::Mgu(s) => self.substitution(s),
            Bet::DefMemo { body, atom } => {
                format!(
                    "{}{}{}",
                    p.goal_at(body, 999),
                    self.style.def_memo(),
                    p.term_at(atom, 999)
                )
            }
            Bet::DisjMemo {
                chosen,
                tag,
                left,
                right,
            } => format!(
                "{}{}{}",
                p.goal_at(chosen, 999),
                self.style.disj_memo(),
                self.tagged_disj(*tag, left, right)
            ),
        }
    }

    pub fn substitution(&self, s: &Substitution) -> String {
        let p = self.printer();
        let parts: Vec<String> = s
            .iter()
            .map(|(v, t)| format!("{}/{}", p.term(&Term::Var(v.clone())), p.term_at(t, 999)))
            .collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn astack_items(&self, a: &Stack<Ancestor>) -> Vec<String> {
        a.iter().map(|x| self.ancestor(x)).collect()
    }

    pub fn bstack_items(&self, b: &Stack<Bet>) -> Vec<String> {
        b.iter().map(|x| self.bet(x)).collect()
    }

    fn stack_text(items: Vec<String>) -> String {
        let mut out = items;
        out.push("nil".to_string());
        out.join(CONS_SEP)
    }

    pub fn raw_line(&self, index: usize, e: &Event) -> TraceLine {
        self.line(index, e, self.goal(&e.goal))
    }

    /// As [`Renderer::raw_line`] with the current substitution applied to
    /// the goal.
    pub fn pretty_line(&self, index: usize, e: &Event) -> TraceLine {
        self.line(index, e, self.goal(&apply_bets(&e.bets, &e.goal)))
    }

    fn line(&self, index: usize, e: &Event, goal_text: String) -> TraceLine {
        TraceLine {
            index,
            port: e.port.to_string(),
            goal_text,
            astack_text: Self::stack_text(self.astack_items(&e.ancestors)),
            bstack_text: Self::stack_text(self.bstack_items(&e.bets)),
            depth: e.ancestors.len(),
        }
    }

    pub fn record(&self, index: usize, e: &Event, rule: Option<Transition>) -> EventRecord {
        EventRecord {
            index,
            port: e.port.to_string(),
            goal: self.goal(&e.goal),
            astack: self.astack_items(&e.ancestors),
            bstack: self.bstack_items(&e.bets),
            rule_applied: rule.map(|t| t.name().to_string()),
        }
    }
}

fn journal_renderer(j: &Journal, style: Style) -> Renderer {
    let mut r = Renderer::new(style);
    r.observe_journal(j);
    r
}

pub fn render_raw(j: &Journal, style: Style) -> Vec<TraceLine> {
    let r = journal_renderer(j, style);
    j.events()
        .iter()
        .enumerate()
        .map(|(i, e)| r.raw_line(i, e))
        .collect()
}

pub fn render_pretty(j: &Journal, style: Style) -> Vec<TraceLine> {
    let r = journal_renderer(j, style);
    j.events()
        .iter()
        .enumerate()
        .map(|(i, e)| r.pretty_line(i, e))
        .collect()
}

pub fn structured_records(j: &Journal, style: Style) -> Vec<EventRecord> {
    let r = journal_renderer(j, style);
    j.events()
        .iter()
        .enumerate()
        .map(|(i, e)| r.record(i, e, j.transition_into(i)))
        .collect()
}

/// One JSON object per line.
pub fn render_structured(j: &Journal, style: Style) -> Vec<String> {
    structured_records(j, style)
        .iter()
        .map(|r| serde_json::to_string(r).expect("records serialize"))
        .collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("line {line}: {message}")]
    Shape { line: usize, message: String },
    #[error("line {line}: {source}")]
    Syntax { line: usize, source: ParseError },
}

/// Reads raw trace lines back into events. Variable names are resolved in
/// one scope for the whole trace, so equal names denote equal variables.
pub struct FixtureParser {
    gen: VarGen,
    names: HashMap<String, crate::term::Var>,
}

impl Default for FixtureParser {
    fn default() -> Self {
        FixtureParser::new()
    }
}

impl FixtureParser {
    pub fn new() -> Self {
        FixtureParser {
            gen: VarGen::new(),
            names: HashMap::new(),
        }
    }

    pub fn parse_trace(&mut self, text: &str) -> Result<Vec<Event>, FixtureError> {
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| self.parse_line(l).map_err(|e| e.at(i + 1)))
            .collect()
    }

    pub fn parse_line(&mut self, line: &str) -> Result<Event, LineError> {
        let line = line.trim();
        let (port_text, rest) = line
            .split_once(' ')
            .ok_or_else(|| LineError::shape("missing goal"))?;
        let port: Port = port_text.parse().map_err(LineError::Shape)?;
        let (rest, b_text) = split_last_group(rest)?;
        let (goal_text, a_text) = split_last_group(rest)?;
        let goal = self.goal(goal_text.trim())?;
        let ancestors = self.stack(a_text, |p, s| p.ancestor(s))?;
        let bets = self.stack(b_text, |p, s| p.bet(s))?;
        Ok(Event::new(port, goal, ancestors, bets))
    }

    fn stack<T: Clone>(
        &mut self,
        text: &str,
        mut item: impl FnMut(&mut Self, &str) -> Result<T, LineError>,
    ) -> Result<Stack<T>, LineError> {
        let parts: Vec<&str> = text.split(CONS_SEP).collect();
        let (last, items) = parts.split_last().expect("split yields one part");
        if last.trim() != "nil" {
            return Err(LineError::shape("stack must end with nil"));
        }
        let items = items
            .iter()
            .map(|s| item(self, s.trim()))
            .collect::<Result<Vec<T>, _>>()?;
        Ok(Stack::from_top_first(items))
    }

    fn with_scope<T>(
        &mut self,
        f: impl FnOnce(&mut Scope<'_>) -> Result<T, ParseError>,
    ) -> Result<T, LineError> {
        let mut scope = Scope::new(&mut self.gen);
        for (name, v) in &self.names {
            scope.bind(name, v.clone());
        }
        let out = f(&mut scope).map_err(LineError::Syntax)?;
        let names = scope.into_names();
        self.names = names;
        Ok(out)
    }

    fn goal(&mut self, text: &str) -> Result<Goal, LineError> {
        self.with_scope(|s| parse_goal_in(text, s))
    }

    fn term(&mut self, text: &str) -> Result<Term, LineError> {
        self.with_scope(|s| parse_term_in(text, s))
    }

    fn tagged(&mut self, text: &str) -> Result<(Tag, Goal), LineError> {
        let (tag, rest) = text
            .split_once('/')
            .ok_or_else(|| LineError::shape("missing tag"))?;
        let tag = match tag {
            "1" => Tag::First,
            "2" => Tag::Second,
            other => return Err(LineError::Shape(format!("bad tag `{other}`"))),
        };
        Ok((tag, self.goal(rest)?))
    }

    fn ancestor(&mut self, text: &str) -> Result<Ancestor, LineError> {
        if let Some(inner) = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            if inner.starts_with("1/") || inner.starts_with("2/") {
                return match self.tagged(inner)? {
                    (tag, Goal::Disj(g1, g2)) => Ok(Ancestor::Disj(tag, g1, g2)),
                    _ => Err(LineError::shape("tagged disjunction expected")),
                };
            }
        }
        if text.starts_with("1/") || text.starts_with("2/") {
            return match self.tagged(text)? {
                (tag, Goal::Conj(g1, g2)) => Ok(Ancestor::Conj(tag, g1, g2)),
                _ => Err(LineError::shape("tagged conjunction expected")),
            };
        }
        match self.goal(text)? {
            Goal::Atom(t) => Ok(Ancestor::Atom(t)),
            other => Ok(Ancestor::Other(other)),
        }
    }

    fn bet(&mut self, text: &str) -> Result<Bet, LineError> {
        if let Some((body, atom)) = split_glyph(text, &[DEF_MEMO, DEF_MEMO_ASCII]) {
            let body = self.goal(body)?;
            let atom = self.term(atom)?;
            return Ok(Bet::DefMemo { body, atom });
        }
        if let Some((chosen, anc)) = split_glyph(text, &[DISJ_MEMO, DISJ_MEMO_ASCII]) {
            let chosen = self.goal(chosen)?;
            return match self.ancestor(anc)? {
                Ancestor::Disj(tag, left, right) => Ok(Bet::DisjMemo {
                    chosen,
                    tag,
                    left,
                    right,
                }),
                _ => Err(LineError::shape("disjunct memo needs a tagged disjunction")),
            };
        }
        let inner = text
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| LineError::Shape(format!("unrecognized bet `{text}`")))?;
        let mut pairs = Vec::new();
        for binding in split_top_level_commas(inner) {
            let (var, value) = binding
                .split_once('/')
                .ok_or_else(|| LineError::shape("binding needs `/`"))?;
            let Term::Var(v) = self.term(var.trim())? else {
                return Err(LineError::shape("binding must bind a variable"));
            };
            pairs.push((v, self.term(value.trim())?));
        }
        Ok(Bet::Mgu(Substitution::from_pairs(pairs)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineError {
    Shape(String),
    Syntax(ParseError),
}

impl LineError {
    fn shape(message: &str) -> Self {
        LineError::Shape(message.to_string())
    }

    fn at(self, line: usize) -> FixtureError {
        match self {
            LineError::Shape(message) => FixtureError::Shape { line, message },
            LineError::Syntax(source) => FixtureError::Syntax { line, source },
        }
    }
}

fn split_glyph<'t>(text: &'t str, glyphs: &[&str]) -> Option<(&'t str, &'t str)> {
    glyphs.iter().find_map(|g| text.split_once(g))
}

/// Splits `... [group]` into the text before the final bracketed group and
/// the group's contents, honoring nested brackets.
fn split_last_group(text: &str) -> Result<(&str, &str), LineError> {
    let text = text.trim_end();
    if !text.ends_with(']') {
        return Err(LineError::shape("expected `]`"));
    }
    let mut depth = 0usize;
    for (i, c) in text.char_indices().rev() {
        match c {
            ']' => depth += 1,
            '[' => {
                depth -= 1;
                if depth == 0 {
                    return Ok((&text[..i], &text[i + 1..text.len() - 1]));
                }
            }
            _ => {}
        }
    }
    Err(LineError::shape("unbalanced brackets"))
}

fn split_top_level_commas(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if !text[start..].trim().is_empty() {
        out.push(&text[start..]);
    }
    out
}

/// Whether two events are equal under the renaming accumulated in `m`.
pub fn events_variant(m: &mut VariantMatcher, a: &Event, b: &Event) -> bool {
    a.port == b.port
        && m.goals(&a.goal, &b.goal)
        && a.ancestors.len() == b.ancestors.len()
        && a.bets.len() == b.bets.len()
        && a.ancestors
            .iter()
            .zip(b.ancestors.iter())
            .all(|(x, y)| ancestors_variant(m, x, y))
        && a.bets
            .iter()
            .zip(b.bets.iter())
            .all(|(x, y)| bets_variant(m, x, y))
}

fn ancestors_variant(m: &mut VariantMatcher, a: &Ancestor, b: &Ancestor) -> bool {
    match (a, b) {
        (Ancestor::Atom(x), Ancestor::Atom(y)) => m.terms(x, y),
        (Ancestor::Conj(t1, a1, a2), Ancestor::Conj(t2, b1, b2))
        | (Ancestor::Disj(t1, a1, a2), Ancestor::Disj(t2, b1, b2)) => {
            t1 == t2 && m.goals(a1, b1) && m.goals(a2, b2)
        }
        (Ancestor::Other(x), Ancestor::Other(y)) => m.goals(x, y),
        _ => false,
    }
}

fn bets_variant(m: &mut VariantMatcher, a: &Bet, b: &Bet) -> bool {
    match (a, b) {
        (Bet::Mgu(x), Bet::Mgu(y)) => m.substs(x, y),
        (Bet::DefMemo { body: b1, atom: a1 }, Bet::DefMemo { body: b2, atom: a2 }) => {
            m.goals(b1, b2) && m.terms(a1, a2)
        }
        (
            Bet::DisjMemo {
                chosen: c1,
                tag: t1,
                left: l1,
                right: r1,
            },
            Bet::DisjMemo {
                chosen: c2,
                tag: t2,
                left: l2,
                right: r2,
            },
        ) => t1 == t2 && m.goals(c1, c2) && m.goals(l1, l2) && m.goals(r1, r2),
        _ => false,
    }
}

/// Renames variable tokens to `_V1`, `_V2`, ... in order of first
/// appearance across all lines, and collapses whitespace.
pub fn alpha_normalize(lines: &[String]) -> Vec<String> {
    let mut names: HashMap<String, String> = HashMap::new();
    lines
        .iter()
        .map(|line| {
            let mut out = String::new();
            let chars: Vec<char> = line
                .split_whitespace()
                .collect::<Vec<_>>()
                .join(" ")
                .chars()
                .collect();
            let mut i = 0;
            while i < chars.len() {
                let c = chars[i];
                let starts_word =
                    i == 0 || !(chars[i - 1].is_alphanumeric() || chars[i - 1] == '_');
                if starts_word && (c.is_uppercase() || c == '_') {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    let word: String = chars[start..i].iter().collect();
                    let next = names.len() + 1;
                    out.push_str(names.entry(word).or_insert_with(|| format!("_V{next}")));
                } else {
                    out.push(c);
                    i += 1;
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonicalize;
    use crate::engine::{run, Options};
    use crate::reader::{parse_program, parse_query};
    use std::sync::Arc;

    fn journal(program: &str, query: &str) -> Journal {
        let cp = Arc::new(canonicalize(&parse_program(program).unwrap()));
        run(parse_query(query).unwrap(), cp, Options::default()).0
    }

    #[test]
    fn raw_lines_of_good_bad() {
        let j = journal("main :- good, bad.\ngood.", "main");
        let lines: Vec<String> = render_raw(&j, Style::default())
            .iter()
            .map(TraceLine::raw)
            .collect();
        assert_eq!(lines[0], "call main [nil][nil]");
        assert_eq!(lines[1], "call (good,bad) [main·nil][nil]");
        assert_eq!(lines[5], "exit good [1/good,bad·main·nil][true▸good·nil]");
        assert_eq!(lines[13], "fail main [nil][nil]");
    }

    #[test]
    fn ascii_memos() {
        let j = journal("main :- good, bad.\ngood.", "main");
        let lines = render_raw(&j, Style { ascii: true });
        assert_eq!(lines[5].bstack_text, "true=>good·nil");
    }

    #[test]
    fn structured_record_fields() {
        let j = journal("main :- good, bad.\ngood.", "main");
        let recs = render_structured(&j, Style::default());
        assert_eq!(recs.len(), j.len());
        assert_eq!(
            recs[0],
            r#"{"index":0,"port":"call","goal":"main","astack":[],"bstack":[],"rule_applied":null}"#
        );
        assert!(recs[5].contains(r#""rule_applied":"atom:2""#));
    }

    #[test]
    fn fixture_parser_roundtrip() {
        let j = journal(
            "post(X,Y) :- one(X,Y), two(X,Y).\none(X,_) :- X=1.\ntwo(_,Y) :- Y=a; Y=b.",
            "post(X,Y),fail",
        );
        let text: Vec<String> = render_raw(&j, Style::default())
            .iter()
            .map(TraceLine::raw)
            .collect();
        let events = FixtureParser::new().parse_trace(&text.join("\n")).unwrap();
        let mut m = VariantMatcher::new();
        assert_eq!(events.len(), j.len());
        for (a, b) in events.iter().zip(j.events()) {
            assert!(events_variant(&mut m, a, b), "{a:?}\n{b:?}");
        }
    }

    #[test]
    fn alpha_normalization_is_consistent() {
        let a = alpha_normalize(&[
            "call p(X,Y_1) [nil][nil]".into(),
            "exit p(X,a) [nil][{Y_1/a}]".into(),
        ]);
        let b = alpha_normalize(&[
            "call p(A,B) [nil][nil]".into(),
            "exit  p(A,a) [nil][{B/a}]".into(),
        ]);
        assert_eq!(a, b);
        assert_eq!(a[0], "call p(_V1,_V2) [nil][nil]");
    }
}
