//! One debugging session: a journal that only grows, a cursor into it and
//! a set of breakpoints.

use std::sync::Arc;

use fourport_core::canon::{canonicalize, dump_canonical};
use fourport_core::engine::{computed_answer, Advance, BStack, Event, Journal, Port};
use fourport_core::reader::{parse_program_with, parse_query_with};
use fourport_core::term::{Goal, PredKey, Term, VarGen};
use fourport_core::trace::{render_pretty, render_raw, render_structured, Renderer, Style};
use fourport_core::ParseError;

use crate::protocol::{
    Answer, Binding, BreakpointSpec, ContinuePayload, Diff, Direction, ErrorBody, ErrorCode,
    EventView, ExportFormat, ExportPayload, Notice, Position, StackDiff, StepPayload, StopReason,
    Until, ViewPayload,
};

/// Transitions one `continue` request may take unless it says otherwise.
pub const DEFAULT_CONTINUE_BUDGET: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Breakpoint {
    pub port: Option<Port>,
    pub predicate: Option<PredKey>,
}

impl Breakpoint {
    pub fn parse(spec: &BreakpointSpec) -> Result<Self, ErrorBody> {
        let invalid = |m: String| ErrorBody::new(ErrorCode::InvalidBreakpoint, m);
        let port = spec
            .port
            .as_deref()
            .map(str::parse::<Port>)
            .transpose()
            .map_err(invalid)?;
        let predicate = spec
            .predicate
            .as_deref()
            .map(str::parse::<PredKey>)
            .transpose()
            .map_err(invalid)?;
        if port.is_none() && predicate.is_none() {
            return Err(invalid(
                "a breakpoint needs a port, a predicate or both".into(),
            ));
        }
        Ok(Breakpoint { port, predicate })
    }

    pub fn spec(&self) -> BreakpointSpec {
        BreakpointSpec {
            port: self.port.map(|p| p.to_string()),
            predicate: self.predicate.as_ref().map(|k| k.to_string()),
        }
    }

    pub fn matches(&self, e: &Event) -> bool {
        self.port.is_none_or(|p| p == e.port)
            && self
                .predicate
                .as_ref()
                .is_none_or(|k| e.goal.indicator().as_ref() == Some(k))
    }
}

pub struct Session {
    journal: Journal,
    cursor: usize,
    breakpoints: Vec<Breakpoint>,
    /// Has seen every journal event in order, so a variable's display name
    /// is fixed by its first appearance and never depends on the cursor path.
    renderer: Renderer,
    style: Style,
}

fn parse_error(field: &str, e: ParseError) -> ErrorBody {
    ErrorBody {
        code: ErrorCode::ParseError,
        message: format!("{field}: {}", e.message),
        field: Some(field.to_string()),
        position: Some(Position {
            line: e.line,
            column: e.column,
        }),
    }
}

/// Whether the event ends the derivation: a pop with an empty A-stack.
fn is_final(e: &Event) -> bool {
    !e.port.is_push() && e.ancestors.is_empty()
}

fn is_answer(e: &Event) -> bool {
    e.port == Port::Exit && e.ancestors.is_empty()
}

/// The computed answer of a top-level exit, shown with the renderer's names.
pub fn answer(query: &Goal, bets: &BStack, r: &Renderer) -> Answer {
    let subst = computed_answer(query, bets);
    let bindings: Vec<Binding> = query
        .vars()
        .iter()
        .filter(|v| !v.name.starts_with('_'))
        .filter_map(|v| {
            subst.get(v).map(|t| Binding {
                var: r.term(&Term::Var(v.clone())),
                value: r.term(t),
            })
        })
        .collect();
    let text = if bindings.is_empty() {
        "true".to_string()
    } else {
        bindings
            .iter()
            .map(|b| format!("{} = {}", b.var, b.value))
            .collect::<Vec<_>>()
            .join(", ")
    };
    Answer { bindings, text }
}

impl Session {
    /// Parses and canonicalizes the program, then sits on event 0.
    pub fn create(
        program: &str,
        query: &str,
        occurs_check: bool,
        ascii: bool,
    ) -> Result<Session, ErrorBody> {
        let mut gen = VarGen::new();
        let source =
            parse_program_with(program, &mut gen).map_err(|e| parse_error("program", e))?;
        let query = parse_query_with(query, &mut gen).map_err(|e| parse_error("query", e))?;
        let journal = Journal::new(Arc::new(canonicalize(&source)), query, occurs_check);
        let style = Style { ascii };
        let mut renderer = Renderer::new(style);
        renderer.observe(journal.last());
        Ok(Session {
            journal,
            cursor: 0,
            breakpoints: Vec::new(),
            renderer,
            style,
        })
    }

    pub fn journal(&self) -> &Journal {
        &self.journal
    }

    pub fn cursor(&self) -> usize {
        self.cursor
    }

    pub fn canonical(&self) -> String {
        dump_canonical(self.journal.program())
    }

    pub fn view(&self, i: usize) -> Option<EventView> {
        let e = self.journal.event(i)?;
        let r = &self.renderer;
        let raw = r.raw_line(i, e);
        let pretty = r.pretty_line(i, e);
        let diff = match i.checked_sub(1).and_then(|p| self.journal.event(p)) {
            None => Diff::default(),
            Some(prev) => {
                let (a_popped, a_pushed) = prev.ancestors.diverging_heights(&e.ancestors);
                let (b_popped, b_pushed) = prev.bets.diverging_heights(&e.bets);
                Diff {
                    astack: StackDiff {
                        popped: a_popped,
                        pushed: e
                            .ancestors
                            .iter()
                            .take(a_pushed)
                            .map(|a| r.ancestor(a))
                            .collect(),
                    },
                    bstack: StackDiff {
                        popped: b_popped,
                        pushed: e.bets.iter().take(b_pushed).map(|b| r.bet(b)).collect(),
                    },
                }
            }
        };
        Some(EventView {
            record: r.record(i, e, self.journal.transition_into(i)),
            raw: raw.raw(),
            pretty_goal: pretty.goal_text.clone(),
            pretty: pretty.raw(),
            depth: raw.depth,
            diff,
            is_final: is_final(e),
            answer: is_answer(e).then(|| answer(self.journal.query(), &e.bets, r)),
        })
    }

    fn current_view(&self) -> EventView {
        self.view(self.cursor).expect("cursor is in range")
    }

    /// Moves the cursor one event forward, extending the journal when the
    /// cursor is on its last event. After a top-level exit the derivation
    /// resumes to look for the next answer. Returns `Ok(false)` at the
    /// final failure.
    fn forward(&mut self) -> Result<bool, ErrorBody> {
        if self.cursor + 1 < self.journal.len() {
            self.cursor += 1;
            return Ok(true);
        }
        let last = self.journal.last();
        if is_answer(last) {
            self.journal
                .resume()
                .expect("last event is a top-level exit");
        } else {
            match self.journal.advance() {
                Advance::Stepped(_) => {}
                Advance::Final => return Ok(false),
                Advance::Impossible => {
                    return Err(ErrorBody::new(
                        ErrorCode::Stuck,
                        format!("no rule applies to event {}", self.cursor),
                    ))
                }
            }
        }
        self.renderer.observe(self.journal.last());
        self.cursor += 1;
        Ok(true)
    }

    pub fn step(&mut self, direction: Direction, count: usize) -> Result<StepPayload, ErrorBody> {
        let mut views = Vec::new();
        let mut notice = None;
        for _ in 0..count {
            let moved = match direction {
                Direction::Fwd => self.forward()?,
                Direction::Back => match self.cursor.checked_sub(1) {
                    Some(c) => {
                        self.cursor = c;
                        true
                    }
                    None => false,
                },
            };
            if !moved {
                notice = Some(match direction {
                    Direction::Fwd => Notice::AtFinal,
                    Direction::Back => Notice::AtStart,
                });
                break;
            }
            views.push(self.current_view());
        }
        Ok(StepPayload {
            views,
            cursor: self.cursor,
            explored: self.journal.len(),
            notice,
        })
    }

    fn stops(&self, until: Until) -> Option<StopReason> {
        let e = self.journal.event(self.cursor)?;
        if until == Until::Answer && is_answer(e) {
            return Some(StopReason::Answer);
        }
        if until == Until::Breakpoint && self.breakpoints.iter().any(|b| b.matches(e)) {
            return Some(StopReason::Breakpoint);
        }
        None
    }

    /// Runs forward until the stop condition holds, the derivation fails
    /// for good or `budget` transitions have been taken. Always moves at
    /// least once, so continuing from a breakpoint does not stop in place.
    pub fn continue_run(
        &mut self,
        until: Until,
        budget: usize,
    ) -> Result<ContinuePayload, ErrorBody> {
        let mut steps = 0;
        let reason = loop {
            if steps == budget {
                break StopReason::Budget;
            }
            if !self.forward()? {
                break StopReason::Final;
            }
            steps += 1;
            if let Some(reason) = self.stops(until) {
                break reason;
            }
        };
        Ok(ContinuePayload {
            view: self.current_view(),
            reason,
            cursor: self.cursor,
            explored: self.journal.len(),
            steps,
        })
    }

    pub fn set_breakpoints(
        &mut self,
        specs: &[BreakpointSpec],
    ) -> Result<Vec<BreakpointSpec>, ErrorBody> {
        let parsed = specs
            .iter()
            .map(Breakpoint::parse)
            .collect::<Result<Vec<_>, _>>()?;
        self.breakpoints = parsed;
        Ok(self.breakpoints.iter().map(Breakpoint::spec).collect())
    }

    pub fn view_at(&self, index: Option<usize>) -> Result<ViewPayload, ErrorBody> {
        let i = index.unwrap_or(self.cursor);
        let view = self.view(i).ok_or_else(|| {
            ErrorBody::new(
                ErrorCode::OutOfRange,
                format!(
                    "index {i} beyond the {} recorded events",
                    self.journal.len()
                ),
            )
        })?;
        Ok(ViewPayload {
            view,
            cursor: self.cursor,
            explored: self.journal.len(),
        })
    }

    /// Every recorded event, whatever the cursor.
    pub fn export(&self, format: ExportFormat) -> ExportPayload {
        let lines = match format {
            ExportFormat::Structured => render_structured(&self.journal, self.style),
            ExportFormat::Raw => render_raw(&self.journal, self.style)
                .iter()
                .map(|l| l.raw())
                .collect(),
            ExportFormat::Pretty => render_pretty(&self.journal, self.style)
                .iter()
                .map(|l| l.raw())
                .collect(),
        };
        ExportPayload { format, lines }
    }
}
