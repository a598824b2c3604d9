//! `fourport`: run pure-Prolog queries under the four-port semantics.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fourport_core::canon::{canonicalize, dump_canonical};
use fourport_core::engine::{Advance, BStack, Journal, Port};
use fourport_core::oracle::{generate_program, GenConfig};
use fourport_core::reader::{format_goal, format_program, parse_program_with, parse_query_with};
use fourport_core::term::{Goal, PredKey, VarGen};
use fourport_core::trace::{render_structured, Renderer, Style};
use fourport_core::{CanonicalProgram, ParseError};
use fourport_service::session::answer;
use fourport_service::{bind, serve, Service};

const EXIT_FALSE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;
/// No rule applied to a non-final event; an engine bug.
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser, Debug)]
#[command(
    name = "fourport",
    version,
    about = "Run pure-Prolog queries and trace them port by port"
)]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a random pure program and a few queries for it.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    max_predicates: usize,
    #[arg(long, default_value_t = 3)]
    max_clauses: usize,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Program file.
    #[arg(long, value_name = "FILE")]
    program: Option<PathBuf>,
    /// Query, e.g. "post(X,Y)". Without a program the query runs against
    /// the empty program.
    #[arg(long, conflicts_with = "serve")]
    query: Option<String>,
    #[arg(long, value_enum, default_value_t = TraceMode::Off)]
    trace: TraceMode,
    /// Write the trace here instead of standard error.
    #[arg(long, value_name = "FILE")]
    trace_out: Option<PathBuf>,
    #[arg(long, default_value_t = 1_000_000)]
    max_steps: usize,
    /// Print every answer, not just the first.
    #[arg(long)]
    all_solutions: bool,
    #[arg(long)]
    no_occurs_check: bool,
    /// Print the canonical form of the program.
    #[arg(long)]
    dump_canonical: bool,
    /// Print memos as `=>` and `~>`.
    #[arg(long)]
    ascii: bool,
    /// Serve the stepping protocol on 127.0.0.1:PORT.
    #[arg(long, value_name = "PORT")]
    serve: Option<u16>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TraceMode {
    Off,
    Raw,
    Pretty,
    Structured,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn located(path: &Path, e: ParseError) -> Failure {
    usage(format!("{}:{e}", path.display()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Some(Command::Gen(args)) => generate(&args),
        None => run(&cli.run),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("fourport: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn generate(args: &GenArgs) -> Result<u8, Failure> {
    let cfg = GenConfig {
        max_predicates: args.max_predicates,
        max_clauses_per_pred: args.max_clauses,
        ..GenConfig::with_seed(args.seed)
    };
    if cfg.max_predicates == 0 || cfg.max_clauses_per_pred == 0 {
        return Err(usage("--max-predicates and --max-clauses must be positive"));
    }
    let g = generate_program(&cfg);
    print!("{}", format_program(&g.program));
    for q in &g.queries {
        println!("% query: {}", format_goal(q));
    }
    Ok(0)
}

fn run(args: &RunArgs) -> Result<u8, Failure> {
    if let Some(port) = args.serve {
        return serve_on(port);
    }
    let mut gen = VarGen::new();
    let program = match &args.program {
        Some(path) => {
            let text =
                fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            parse_program_with(&text, &mut gen).map_err(|e| located(path, e))?
        }
        None if args.dump_canonical => return Err(usage("--dump-canonical needs --program")),
        None => Default::default(),
    };
    let program = Arc::new(canonicalize(&program));
    if args.dump_canonical {
        print!("{}", dump_canonical(&program));
    }
    let Some(text) = &args.query else {
        return if args.dump_canonical {
            Ok(0)
        } else {
            Err(usage(
                "nothing to do: give --query, --dump-canonical, --serve or a subcommand",
            ))
        };
    };
    let query = parse_query_with(text, &mut gen).map_err(|e| usage(format!("query:{e}")))?;
    solve(args, program, query)
}

enum End {
    Failure,
    Answered,
    Budget,
    Stuck,
}

fn solve(args: &RunArgs, program: Arc<CanonicalProgram>, query: Goal) -> Result<u8, Failure> {
    let mut j = Journal::new(Arc::clone(&program), query.clone(), !args.no_occurs_check);
    let mut answers: Vec<BStack> = Vec::new();
    let end = loop {
        if j.steps().len() >= args.max_steps {
            break End::Budget;
        }
        match j.advance() {
            Advance::Stepped(_) => {}
            Advance::Final if j.last().port == Port::Exit => {
                answers.push(j.last().bets.clone());
                if !args.all_solutions {
                    break End::Answered;
                }
                j.resume().expect("last event is a top-level exit");
            }
            Advance::Final => break End::Failure,
            Advance::Impossible => break End::Stuck,
        }
    };

    warn_undefined(&j, &program);
    let style = Style { ascii: args.ascii };
    write_trace(args, &j, style)?;

    let mut r = Renderer::new(style);
    r.observe_journal(&j);
    let mut out = io::stdout().lock();
    for bets in &answers {
        let _ = writeln!(out, "{}", answer_line(&query, bets, &r));
    }
    let code = match end {
        _ if !answers.is_empty() => 0,
        End::Failure => {
            let _ = writeln!(out, "false.");
            EXIT_FALSE
        }
        End::Budget => EXIT_BUDGET,
        End::Stuck => EXIT_INTERNAL,
        End::Answered => unreachable!("an answer was recorded"),
    };
    match end {
        End::Budget => eprintln!(
            "fourport: step budget of {} exhausted{}",
            args.max_steps,
            if answers.is_empty() {
                ""
            } else {
                "; there may be more answers"
            }
        ),
        End::Stuck => eprintln!("fourport: no rule applies to event {}", j.len() - 1),
        _ => {}
    }
    Ok(code)
}

fn answer_line(query: &Goal, bets: &BStack, r: &Renderer) -> String {
    let a = answer(query, bets, r);
    if a.bindings.is_empty() {
        "true.".to_string()
    } else {
        a.text
    }
}

fn warn_undefined(j: &Journal, program: &CanonicalProgram) {
    let mut seen: Vec<PredKey> = Vec::new();
    for e in j.events() {
        if e.port != Port::Call {
            continue;
        }
        if let Goal::Atom(t) = &e.goal {
            if let Some(k) = t.indicator() {
                if program.get(&k).is_none() && !seen.contains(&k) {
                    eprintln!("fourport: warning: undefined predicate {k}; calls to it fail");
                    seen.push(k);
                }
            }
        }
    }
}

fn write_trace(args: &RunArgs, j: &Journal, style: Style) -> Result<(), Failure> {
    let lines: Vec<String> = match args.trace {
        TraceMode::Off => return Ok(()),
        TraceMode::Raw => fourport_core::trace::render_raw(j, style)
            .iter()
            .map(|l| l.raw())
            .collect(),
        TraceMode::Pretty => fourport_core::trace::render_pretty(j, style)
            .iter()
            .map(|l| format!("{}{}", "  ".repeat(l.depth), l.raw()))
            .collect(),
        TraceMode::Structured => render_structured(j, style),
    };
    let mut text = lines.join("\n");
    text.push('\n');
    match &args.trace_out {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            let _ = io::stderr().lock().write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn serve_on(port: u16) -> Result<u8, Failure> {
    let (listener, addr) =
        bind(port).map_err(|e| usage(format!("cannot listen on port {port}: {e}")))?;
    eprintln!("fourport: serving on {addr}");
    serve(listener, Arc::new(Service::new())).map_err(|e| Failure {
        code: EXIT_INTERNAL,
        message: e.to_string(),
    })?;
    Ok(0)
}
