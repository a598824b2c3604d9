//! Reader and printer for the pure-Prolog subset.
//!
//! Operators are fixed: `:-` (1200, xfx), `;` (1100, xfy), `,` (1000, xfy)
//! and `=` (700, xfx). Atoms are lowercase identifiers, variables start with
//! an uppercase letter or `_`, integers are decimal, lists use the usual
//! `[a,b|T]` sugar and `%` starts a line comment.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::term::{Goal, GoalError, PredKey, Term, Var, VarGen, VarId, CONS, NIL};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    /// Always a constant or compound whose indicator is a user predicate.
    pub head: Term,
    /// `None` for facts.
    pub body: Option<Goal>,
}

impl Clause {
    pub fn key(&self) -> PredKey {
        self.head
            .indicator()
            .expect("clause heads are constants or compounds")
    }

    pub fn max_var_id(&self) -> Option<VarId> {
        self.head
            .max_var_id()
            .max(self.body.as_ref().and_then(Goal::max_var_id))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SourceProgram {
    pub clauses: Vec<Clause>,
}

impl SourceProgram {
    pub fn max_var_id(&self) -> Option<VarId> {
        self.clauses.iter().filter_map(Clause::max_var_id).max()
    }
}

/// Variable scope of one clause or query: repeated names co-refer, `_` is
/// always fresh.
pub struct Scope<'g> {
    gen: &'g mut VarGen,
    names: HashMap<String, Var>,
}

impl<'g> Scope<'g> {
    pub fn new(gen: &'g mut VarGen) -> Self {
        Scope {
            gen,
            names: HashMap::new(),
        }
    }

    pub fn var(&mut self, name: &str) -> Var {
        if name == "_" {
            return self.gen.fresh("_");
        }
        if let Some(v) = self.names.get(name) {
            return v.clone();
        }
        let v = self.gen.fresh(name);
        self.names.insert(name.to_string(), v.clone());
        v
    }

    pub fn clear(&mut self) {
        self.names.clear();
    }

    /// Makes `name` denote `v` from now on.
    pub fn bind(&mut self, name: &str, v: Var) {
        self.names.insert(name.to_string(), v);
    }

    pub fn into_names(self) -> HashMap<String, Var> {
        self.names
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Var(String),
    Int(i64),
    /// `(` directly after a name: the start of an argument list.
    OpenCall,
    Open,
    Close,
    OpenList,
    CloseList,
    Bar,
    Comma,
    Semi,
    Eq,
    Neck,
    End,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let err = |line, column, message: String| ParseError {
        line,
        column,
        message,
    };
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        let mut push = |tok, len: usize, i: &mut usize, col: &mut usize| {
            out.push(Spanned {
                tok,
                line: tl,
                column: tc,
            });
            *i += len;
            *col += len;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
            }
            '%' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
            }
            'a'..='z' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                col += i - start;
                out.push(Spanned {
                    tok: Tok::Name(name),
                    line: tl,
                    column: tc,
                });
                if i < chars.len() && chars[i] == '(' {
                    out.push(Spanned {
                        tok: Tok::OpenCall,
                        line,
                        column: col,
                    });
                    i += 1;
                    col += 1;
                }
            }
            'A'..='Z' | '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                col += i - start;
                out.push(Spanned {
                    tok: Tok::Var(chars[start..i].iter().collect()),
                    line: tl,
                    column: tc,
                });
            }
            '0'..='9' | '-' => {
                let start = i;
                if c == '-' {
                    if !chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
                        return Err(err(tl, tc, "unexpected `-`".into()));
                    }
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let value = digits
                    .parse::<i64>()
                    .map_err(|_| err(tl, tc, format!("integer `{digits}` out of range")))?;
                col += i - start;
                out.push(Spanned {
                    tok: Tok::Int(value),
                    line: tl,
                    column: tc,
                });
            }
            '(' => push(Tok::Open, 1, &mut i, &mut col),
            ')' => push(Tok::Close, 1, &mut i, &mut col),
            '[' => push(Tok::OpenList, 1, &mut i, &mut col),
            ']' => push(Tok::CloseList, 1, &mut i, &mut col),
            '|' => push(Tok::Bar, 1, &mut i, &mut col),
            ',' => push(Tok::Comma, 1, &mut i, &mut col),
            ';' => push(Tok::Semi, 1, &mut i, &mut col),
            '=' => push(Tok::Eq, 1, &mut i, &mut col),
            ':' if chars.get(i + 1) == Some(&'-') => push(Tok::Neck, 2, &mut i, &mut col),
            '.' => push(Tok::End, 1, &mut i, &mut col),
            other => return Err(err(tl, tc, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a, 'g> {
    toks: Vec<Spanned>,
    pos: usize,
    scope: &'a mut Scope<'g>,
    eof: (usize, usize),
}

impl<'a, 'g> Parser<'a, 'g> {
    fn new(text: &str, scope: &'a mut Scope<'g>) -> Result<Self, ParseError> {
        let toks = lex(text)?;
        let line = text.lines().count().max(1);
        let column = text.lines().last().map_or(1, |l| l.chars().count() + 1);
        Ok(Parser {
            toks,
            pos: 0,
            scope,
            eof: (line, column),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map_or(self.eof, |s| (s.line, s.column))
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let (line, column) = self.here();
        Err(ParseError {
            line,
            column,
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn infix(&self) -> Option<(&'static str, u32, bool)> {
        // (functor, priority, right-associative)
        match self.peek()? {
            Tok::Neck => Some((":-", 1200, false)),
            Tok::Semi => Some((";", 1100, true)),
            Tok::Comma => Some((",", 1000, true)),
            Tok::Eq => Some(("=", 700, false)),
            _ => None,
        }
    }

    fn term(&mut self, max: u32) -> Result<Term, ParseError> {
        let mut left = self.primary()?;
        let mut left_prec = 0;
        while let Some((name, prec, right_assoc)) = self.infix() {
            if prec > max || left_prec > prec - 1 {
                break;
            }
            self.pos += 1;
            let right = self.term(if right_assoc { prec } else { prec - 1 })?;
            left = Term::compound(name, vec![left, right]);
            left_prec = prec;
        }
        Ok(left)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.error("unexpected end of input");
        };
        match tok {
            Tok::Int(i) => {
                self.pos += 1;
                Ok(Term::int(i))
            }
            Tok::Var(name) => {
                self.pos += 1;
                Ok(Term::Var(self.scope.var(&name)))
            }
            Tok::Name(name) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::OpenCall) {
                    self.pos += 1;
                    let mut args = vec![self.term(999)?];
                    while self.peek() == Some(&Tok::Comma) {
                        self.pos += 1;
                        args.push(self.term(999)?);
                    }
                    self.expect(Tok::Close, "`,` or `)`")?;
                    Ok(Term::compound(&name, args))
                } else {
                    Ok(Term::constant(&name))
                }
            }
            Tok::Open | Tok::OpenCall => {
                self.pos += 1;
                let t = self.term(1200)?;
                self.expect(Tok::Close, "`)`")?;
                Ok(t)
            }
            Tok::OpenList => {
                self.pos += 1;
                if self.peek() == Some(&Tok::CloseList) {
                    self.pos += 1;
                    return Ok(Term::constant(NIL));
                }
                let mut items = vec![self.term(999)?];
                while self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                    items.push(self.term(999)?);
                }
                let tail = if self.peek() == Some(&Tok::Bar) {
                    self.pos += 1;
                    self.term(999)?
                } else {
                    Term::constant(NIL)
                };
                self.expect(Tok::CloseList, "`]`")?;
                Ok(Term::list(items, tail))
            }
            _ => self.error("expected a term"),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn goal(&mut self, t: &Term, at: (usize, usize)) -> Result<Goal, ParseError> {
        Goal::from_term(t).map_err(|e: GoalError| ParseError {
            line: at.0,
            column: at.1,
            message: e.to_string(),
        })
    }

    fn clause(&mut self) -> Result<Clause, ParseError> {
        let at = self.here();
        let t = self.term(1200)?;
        self.expect(Tok::End, "`.` at end of clause")?;
        let (head, body) = match &t {
            Term::Compound(f, args) if &**f == ":-" && args.len() == 2 => {
                (args[0].clone(), Some(self.goal(&args[1], at)?))
            }
            _ => (t.clone(), None),
        };
        match Goal::from_term(&head) {
            Ok(Goal::Atom(head)) => Ok(Clause { head, body }),
            Ok(_) => Err(ParseError {
                line: at.0,
                column: at.1,
                message: "clause head must be a user predicate, not true, fail, `=`, `,` or `;`"
                    .into(),
            }),
            Err(e) => Err(ParseError {
                line: at.0,
                column: at.1,
                message: format!("bad clause head: {e}"),
            }),
        }
    }
}

/// Parses a program with fresh variable ids starting at 0.
pub fn parse_program(text: &str) -> Result<SourceProgram, ParseError> {
    parse_program_with(text, &mut VarGen::new())
}

pub fn parse_program_with(text: &str, gen: &mut VarGen) -> Result<SourceProgram, ParseError> {
    let mut scope = Scope::new(gen);
    let mut p = Parser::new(text, &mut scope)?;
    let mut clauses = Vec::new();
    while !p.at_end() {
        p.scope.clear();
        clauses.push(p.clause()?);
    }
    Ok(SourceProgram { clauses })
}

/// Parses a query; a trailing `.` is optional.
pub fn parse_query(text: &str) -> Result<Goal, ParseError> {
    parse_query_with(text, &mut VarGen::new())
}

pub fn parse_query_with(text: &str, gen: &mut VarGen) -> Result<Goal, ParseError> {
    let mut scope = Scope::new(gen);
    parse_goal_in(text, &mut scope)
}

pub fn parse_goal_in(text: &str, scope: &mut Scope<'_>) -> Result<Goal, ParseError> {
    let mut p = Parser::new(text, scope)?;
    let at = p.here();
    let t = p.term(1200)?;
    if p.peek() == Some(&Tok::End) {
        p.pos += 1;
    }
    if !p.at_end() {
        return p.error("unexpected text after goal");
    }
    p.goal(&t, at)
}

pub fn parse_term_in(text: &str, scope: &mut Scope<'_>) -> Result<Term, ParseError> {
    let mut p = Parser::new(text, scope)?;
    let t = p.term(1200)?;
    if !p.at_end() {
        return p.error("unexpected text after term");
    }
    Ok(t)
}

/// How variables are shown when printing.
pub trait VarNames {
    fn name_of(&self, v: &Var) -> String;
}

/// Shows every variable under its source name.
pub struct SourceNames;

impl VarNames for SourceNames {
    fn name_of(&self, v: &Var) -> String {
        v.name.to_string()
    }
}

/// Assigns each variable id a unique display name, in order of first
/// sight: the source name when still free, else the name with a numeric
/// suffix. Anonymous variables always get a suffix.
#[derive(Clone, Debug, Default)]
pub struct Namer {
    names: HashMap<VarId, String>,
    taken: HashSet<String>,
}

impl Namer {
    pub fn new() -> Self {
        Namer::default()
    }

    pub fn observe_var(&mut self, v: &Var) {
        if self.names.contains_key(&v.id) {
            return;
        }
        let base: &str = &v.name;
        let mut candidate = if base == "_" {
            String::new()
        } else {
            base.to_string()
        };
        let mut n = 0;
        while candidate.is_empty() || self.taken.contains(&candidate) {
            n += 1;
            candidate = if base == "_" {
                format!("_{n}")
            } else {
                format!("{base}_{n}")
            };
        }
        self.taken.insert(candidate.clone());
        self.names.insert(v.id, candidate);
    }

    pub fn observe_term(&mut self, t: &Term) {
        match t {
            Term::Var(v) => self.observe_var(v),
            Term::Compound(_, args) => args.iter().for_each(|a| self.observe_term(a)),
            _ => {}
        }
    }

    pub fn observe_goal(&mut self, g: &Goal) {
        match g {
            Goal::True | Goal::Fail => {}
            Goal::Unify(a, b) => {
                self.observe_term(a);
                self.observe_term(b);
            }
            Goal::Atom(t) => self.observe_term(t),
            Goal::Conj(a, b) | Goal::Disj(a, b) => {
                self.observe_goal(a);
                self.observe_goal(b);
            }
        }
    }
}

impl VarNames for Namer {
    fn name_of(&self, v: &Var) -> String {
        self.names
            .get(&v.id)
            .cloned()
            .unwrap_or_else(|| v.name.to_string())
    }
}

/// Printer settings. `spaced` puts a blank after `,` and `;` between goals,
/// as in program listings; traces use the compact form.
#[derive(Clone, Copy)]
pub struct Printer<'n> {
    pub names: &'n dyn VarNames,
    pub spaced: bool,
}

impl<'n> Printer<'n> {
    pub fn compact(names: &'n dyn VarNames) -> Self {
        Printer {
            names,
            spaced: false,
        }
    }

    pub fn spaced(names: &'n dyn VarNames) -> Self {
        Printer {
            names,
            spaced: true,
        }
    }

    pub fn term(&self, t: &Term) -> String {
        let mut s = String::new();
        self.write_term(&mut s, t, 1200);
        s
    }

    /// Term printed as an operand with the given maximum priority.
    pub fn term_at(&self, t: &Term, max: u32) -> String {
        let mut s = String::new();
        self.write_term(&mut s, t, max);
        s
    }

    pub fn goal(&self, g: &Goal) -> String {
        self.goal_at(g, 1200)
    }

    pub fn goal_at(&self, g: &Goal, max: u32) -> String {
        let mut s = String::new();
        self.write_goal(&mut s, g, max);
        s
    }

    fn sep(&self, op: &str) -> String {
        if self.spaced && (op == "," || op == ";") {
            format!("{op} ")
        } else if op == ":-" {
            " :- ".to_string()
        } else {
            op.to_string()
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn write_infix(
        &self,
        out: &mut String,
        max: u32,
        op: &str,
        prec: u32,
        right_assoc: bool,
        left: &dyn Fn(&mut String, u32),
        right: &dyn Fn(&mut String, u32),
    ) {
        let paren = prec > max;
        if paren {
            out.push('(');
        }
        left(out, prec - 1);
        out.push_str(&self.sep(op));
        right(out, if right_assoc { prec } else { prec - 1 });
        if paren {
            out.push(')');
        }
    }

    pub fn write_term(&self, out: &mut String, t: &Term, max: u32) {
        match t {
            Term::Var(v) => out.push_str(&self.names.name_of(v)),
            Term::Const(name) => out.push_str(name),
            Term::Int(i) => {
                let _ = write!(out, "{i}");
            }
            Term::Compound(f, args) => {
                if let Some((prec, right_assoc)) = op_info(f, args.len()) {
                    self.write_infix(
                        out,
                        max,
                        f,
                        prec,
                        right_assoc,
                        &|o, m| self.write_term(o, &args[0], m),
                        &|o, m| self.write_term(o, &args[1], m),
                    );
                } else if &**f == CONS && args.len() == 2 {
                    self.write_list(out, t);
                } else {
                    out.push_str(f);
                    out.push('(');
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        self.write_term(out, a, 999);
                    }
                    out.push(')');
                }
            }
        }
    }

    fn write_list(&self, out: &mut String, mut t: &Term) {
        out.push('[');
        let mut first = true;
        loop {
            match t {
                Term::Compound(f, args) if &**f == CONS && args.len() == 2 => {
                    if !first {
                        out.push(',');
                    }
                    first = false;
                    self.write_term(out, &args[0], 999);
                    t = &args[1];
                }
                Term::Const(n) if &**n == NIL => break,
                tail => {
                    out.push('|');
                    self.write_term(out, tail, 999);
                    break;
                }
            }
        }
        out.push(']');
    }

    pub fn write_goal(&self, out: &mut String, g: &Goal, max: u32) {
        match g {
            Goal::True => out.push_str("true"),
            Goal::Fail => out.push_str("fail"),
            Goal::Atom(t) => self.write_term(out, t, max),
            Goal::Unify(a, b) => self.write_infix(
                out,
                max,
                "=",
                700,
                false,
                &|o, m| self.write_term(o, a, m),
                &|o, m| self.write_term(o, b, m),
            ),
            Goal::Conj(a, b) => self.write_infix(
                out,
                max,
                ",",
                1000,
                true,
                &|o, m| self.write_goal(o, a, m),
                &|o, m| self.write_goal(o, b, m),
            ),
            Goal::Disj(a, b) => self.write_infix(
                out,
                max,
                ";",
                1100,
                true,
                &|o, m| self.write_goal(o, a, m),
                &|o, m| self.write_goal(o, b, m),
            ),
        }
    }

    pub fn clause(&self, c: &Clause) -> String {
        let mut s = self.term_at(&c.head, 999);
        if let Some(body) = &c.body {
            s.push_str(" :- ");
            s.push_str(&self.goal_at(body, 1199));
        }
        s.push('.');
        s
    }
}

fn op_info(functor: &str, arity: usize) -> Option<(u32, bool)> {
    if arity != 2 {
        return None;
    }
    match functor {
        ":-" => Some((1200, false)),
        ";" => Some((1100, true)),
        "," => Some((1000, true)),
        "=" => Some((700, false)),
        _ => None,
    }
}

pub fn format_term(t: &Term) -> String {
    Printer::compact(&SourceNames).term(t)
}

pub fn format_goal(g: &Goal) -> String {
    Printer::compact(&SourceNames).goal(g)
}

/// Prints a program one clause per line, with variables renamed apart
/// inside each clause so that the text reads back to the same program.
pub fn format_program(p: &SourceProgram) -> String {
    let mut out = String::new();
    for c in &p.clauses {
        let mut namer = Namer::new();
        namer.observe_term(&c.head);
        if let Some(b) = &c.body {
            namer.observe_goal(b);
        }
        out.push_str(&Printer::spaced(&namer).clause(c));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(name: &str) -> Goal {
        Goal::Atom(Term::constant(name))
    }

    #[test]
    fn parses_example_program() {
        let p = parse_program("q(a,b).\nq(Z,c) :- r(Z).\nr(c).").unwrap();
        let keys: Vec<String> = p.clauses.iter().map(|c| c.key().to_string()).collect();
        assert_eq!(keys, ["q/2", "q/2", "r/1"]);
        assert!(p.clauses[0].body.is_none());
        assert_eq!(format_goal(p.clauses[1].body.as_ref().unwrap()), "r(Z)");
    }

    #[test]
    fn parses_good_bad_main() {
        let p = parse_program("main :- good, bad.\ngood.").unwrap();
        assert_eq!(p.clauses.len(), 2);
        assert_eq!(
            p.clauses[0].body,
            Some(Goal::conj(atom("good"), atom("bad")))
        );
    }

    #[test]
    fn comma_binds_tighter_than_semicolon() {
        let p = parse_program("p :- a ; b, c.").unwrap();
        assert_eq!(
            p.clauses[0].body,
            Some(Goal::disj(atom("a"), Goal::conj(atom("b"), atom("c"))))
        );
    }

    #[test]
    fn parses_queries() {
        let g = parse_query("post(X,Y),fail").unwrap();
        let Goal::Conj(a, b) = &g else { panic!() };
        assert_eq!(a.indicator(), Some(PredKey::new("post", 2)));
        assert_eq!(**b, Goal::Fail);
        assert_eq!(parse_query("true").unwrap(), Goal::True);
        let g = parse_query("X = f(Y)").unwrap();
        assert!(matches!(g, Goal::Unify(Term::Var(_), Term::Compound(..))));
    }

    #[test]
    fn query_variables_share_scope() {
        let g = parse_query("p(X), q(X, _, _)").unwrap();
        let vars = g.vars();
        assert_eq!(vars.len(), 3);
        assert_eq!(vars[0].name.as_ref(), "X");
    }

    #[test]
    fn rejects_bad_heads_with_position() {
        let e = parse_program("p.\ntrue :- p.").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        assert!(parse_program("X = a.").is_err());
        assert!(parse_program("p :- X.").is_err());
    }

    #[test]
    fn reports_syntax_errors() {
        let e = parse_program("p(a,\n  b").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(parse_program("p :- q").is_err());
        assert!(parse_query("a = b = c").is_err());
        assert!(parse_query("p(a) q").is_err());
    }

    #[test]
    fn formats_with_minimal_parentheses() {
        assert_eq!(
            format_goal(&Goal::conj(atom("good"), atom("bad"))),
            "good,bad"
        );
        let y = Term::Var(Var::new(0, "Y"));
        assert_eq!(format_goal(&Goal::unify(y, Term::constant("a"))), "Y=a");
        let g = Goal::conj(Goal::disj(atom("a"), atom("b")), atom("c"));
        assert_eq!(format_goal(&g), "(a;b),c");
        let g = Goal::conj(Goal::conj(atom("a"), atom("b")), atom("c"));
        assert_eq!(format_goal(&g), "(a,b),c");
        assert_eq!(
            format_goal(&Goal::conj(atom("a"), Goal::conj(atom("b"), atom("c")))),
            "a,b,c"
        );
    }

    #[test]
    fn lists_and_negative_numbers_roundtrip() {
        for text in ["p([1,2|T],[],[a])", "q(-3,f(-1))", "r(f((a,b)),(X=Y))"] {
            let g = parse_query(text).unwrap();
            let printed = format_goal(&g);
            let again = parse_query(&printed).unwrap();
            let mut m = crate::term::VariantMatcher::new();
            assert!(m.goals(&g, &again), "{text} -> {printed}");
        }
        assert_eq!(
            format_goal(&parse_query("p([1,2|T])").unwrap()),
            "p([1,2|T])"
        );
    }

    #[test]
    fn namer_disambiguates_same_names() {
        let mut n = Namer::new();
        let a = Var::new(1, "Z");
        let b = Var::new(7, "Z");
        let anon = Var::new(9, "_");
        n.observe_var(&a);
        n.observe_var(&b);
        n.observe_var(&anon);
        assert_eq!(n.name_of(&a), "Z");
        assert_eq!(n.name_of(&b), "Z_1");
        assert_eq!(n.name_of(&anon), "_1");
    }
}
