//! Wire messages. One JSON object per line in each direction.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use fourport_core::trace::EventRecord;

pub const PROTOCOL: &str = "fourport-debug";
pub const VERSION: u32 = 1;

/// A request object; a top-level `id` field, if any, is removed before
/// decoding and echoed in the response.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case", deny_unknown_fields)]
pub enum Request {
    Hello {
        version: u32,
    },
    Create {
        program: String,
        query: String,
        #[serde(default = "yes")]
        occurs_check: bool,
        #[serde(default)]
        ascii: bool,
    },
    Step {
        session: String,
        direction: Direction,
        #[serde(default = "one")]
        count: usize,
    },
    Continue {
        session: String,
        until: Until,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_steps: Option<usize>,
    },
    SetBreakpoints {
        session: String,
        breakpoints: Vec<BreakpointSpec>,
    },
    View {
        session: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        index: Option<usize>,
    },
    Export {
        session: String,
        #[serde(default)]
        format: ExportFormat,
    },
    Dispose {
        session: String,
    },
}

fn yes() -> bool {
    true
}

fn one() -> usize {
    1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Fwd,
    Back,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Until {
    Breakpoint,
    Final,
    Answer,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExportFormat {
    #[default]
    Structured,
    Raw,
    Pretty,
}

/// Matches events by port, by the predicate of an atomic goal, or both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BreakpointSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub port: Option<String>,
    /// `name/arity`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorCode {
    /// Not JSON, unknown op, missing or ill-typed field.
    BadRequest,
    UnsupportedVersion,
    ParseError,
    UnknownSession,
    OutOfRange,
    InvalidBreakpoint,
    /// No rule applies to a non-final event.
    Stuck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub code: ErrorCode,
    pub message: String,
    /// `program` or `query` for parse errors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub position: Option<Position>,
}

impl ErrorBody {
    pub fn new(code: ErrorCode, message: impl Into<String>) -> Self {
        ErrorBody {
            code,
            message: message.into(),
            field: None,
            position: None,
        }
    }
}

/// `{"ok":true,"payload":…}` or `{"ok":false,"err":{…}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Response {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<Value>,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub err: Option<ErrorBody>,
}

impl Response {
    pub fn success(id: Option<Value>, payload: Value) -> Self {
        Response {
            id,
            ok: true,
            payload: Some(payload),
            err: None,
        }
    }

    pub fn failure(id: Option<Value>, err: ErrorBody) -> Self {
        Response {
            id,
            ok: false,
            payload: None,
            err: Some(err),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HelloPayload {
    pub protocol: String,
    pub version: u32,
    pub server: String,
}

/// Items popped from the previous event's stack and pushed onto it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StackDiff {
    pub popped: usize,
    /// Top first.
    pub pushed: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diff {
    pub astack: StackDiff,
    pub bstack: StackDiff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub var: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Answer {
    /// Query variables in order of first occurrence; unbound ones omitted.
    pub bindings: Vec<Binding>,
    /// `X = 1, Y = a`, or `true` when nothing is bound.
    pub text: String,
}

/// Everything the debugger shows for one event.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EventView {
    pub record: EventRecord,
    /// `port goal [A][B]` as stored.
    pub raw: String,
    /// As `raw` with the current substitution applied to the goal.
    pub pretty: String,
    /// The prettied goal alone.
    pub pretty_goal: String,
    /// Number of ancestors.
    pub depth: usize,
    /// Against event `index - 1`; empty for event 0.
    pub diff: Diff,
    /// A top-level exit or fail.
    pub is_final: bool,
    /// Present on top-level exits.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub answer: Option<Answer>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Notice {
    /// Stepping back reached event 0.
    AtStart,
    /// Stepping forward reached `fail q [nil][nil]`.
    AtFinal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CreatePayload {
    pub session: String,
    pub view: EventView,
    /// The canonical form of the program.
    pub canonical: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepPayload {
    /// One view per event landed on, in order.
    pub views: Vec<EventView>,
    pub cursor: usize,
    /// Events recorded so far.
    pub explored: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notice: Option<Notice>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    Breakpoint,
    Final,
    Answer,
    /// The step budget of the request ran out.
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuePayload {
    pub view: EventView,
    pub reason: StopReason,
    pub cursor: usize,
    pub explored: usize,
    /// Transitions taken by this request.
    pub steps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreakpointsPayload {
    pub breakpoints: Vec<BreakpointSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViewPayload {
    pub view: EventView,
    pub cursor: usize,
    pub explored: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportPayload {
    pub format: ExportFormat,
    /// One line per recorded event; structured lines are JSON records.
    pub lines: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisposePayload {
    pub disposed: String,
}
