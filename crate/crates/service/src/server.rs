use std::collections::HashMap;
use std::io::{self, BufRead, BufReader, Write};
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::thread;

use serde::Serialize;
use serde_json::Value;

use crate::protocol::{
    BreakpointsPayload, CreatePayload, DisposePayload, ErrorBody, ErrorCode, HelloPayload, Request,
    Response, PROTOCOL, VERSION,
};
use crate::session::{Session, DEFAULT_CONTINUE_BUDGET};

/// Session table shared by all connections. Requests to one session are
/// serialized by its lock; distinct sessions run independently.
#[derive(Default)]
pub struct Service {
    sessions: Mutex<HashMap<String, Arc<Mutex<Session>>>>,
    next_id: AtomicU64,
}

fn to_value(payload: impl Serialize) -> Value {
    serde_json::to_value(payload).expect("payloads serialize")
}

impl Service {
    pub fn new() -> Self {
        Service::default()
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, ErrorBody> {
        self.sessions
            .lock()
            .expect("session table lock")
            .get(id)
            .cloned()
            .ok_or_else(|| ErrorBody::new(ErrorCode::UnknownSession, format!("no session `{id}`")))
    }

    fn with_session<T: Serialize>(
        &self,
        id: &str,
        f: impl FnOnce(&mut Session) -> Result<T, ErrorBody>,
    ) -> Result<Value, ErrorBody> {
        let s = self.session(id)?;
        let mut guard = s.lock().expect("session lock");
        f(&mut guard).map(to_value)
    }

    pub fn handle(&self, request: Request) -> Result<Value, ErrorBody> {
        match request {
            Request::Hello { version } => {
                if version != VERSION {
                    return Err(ErrorBody::new(
                        ErrorCode::UnsupportedVersion,
                        format!("server speaks version {VERSION}, client asked for {version}"),
                    ));
                }
                Ok(to_value(HelloPayload {
                    protocol: PROTOCOL.to_string(),
                    version: VERSION,
                    server: format!("fourport-service {}", env!("CARGO_PKG_VERSION")),
                }))
            }
            Request::Create {
                program,
                query,
                occurs_check,
                ascii,
            } => {
                let session = Session::create(&program, &query, occurs_check, ascii)?;
                let id = format!("s{}", self.next_id.fetch_add(1, Ordering::Relaxed) + 1);
                let payload = CreatePayload {
                    session: id.clone(),
                    view: session.view(0).expect("event 0 exists"),
                    canonical: session.canonical(),
                };
                self.sessions
                    .lock()
                    .expect("session table lock")
                    .insert(id, Arc::new(Mutex::new(session)));
                Ok(to_value(payload))
            }
            Request::Step {
                session,
                direction,
                count,
            } => self.with_session(&session, |s| s.step(direction, count)),
            Request::Continue {
                session,
                until,
                max_steps,
            } => self.with_session(&session, |s| {
                s.continue_run(until, max_steps.unwrap_or(DEFAULT_CONTINUE_BUDGET))
            }),
            Request::SetBreakpoints {
                session,
                breakpoints,
            } => self.with_session(&session, |s| {
                s.set_breakpoints(&breakpoints)
                    .map(|breakpoints| BreakpointsPayload { breakpoints })
            }),
            Request::View { session, index } => self.with_session(&session, |s| s.view_at(index)),
            Request::Export { session, format } => {
                self.with_session(&session, |s| Ok(s.export(format)))
            }
            Request::Dispose { session } => {
                self.sessions
                    .lock()
                    .expect("session table lock")
                    .remove(&session)
                    .ok_or_else(|| {
                        ErrorBody::new(ErrorCode::UnknownSession, format!("no session `{session}`"))
                    })?;
                Ok(to_value(DisposePayload { disposed: session }))
            }
        }
    }

    /// Decodes one request line and encodes the response line, without the
    /// trailing newline.
    pub fn handle_line(&self, line: &str) -> String {
        let response = match serde_json::from_str::<Value>(line) {
            Err(e) => Response::failure(None, ErrorBody::new(ErrorCode::BadRequest, e.to_string())),
            Ok(mut value) => {
                let id = value.as_object_mut().and_then(|o| o.remove("id"));
                match serde_json::from_value::<Request>(value) {
                    Err(e) => {
                        Response::failure(id, ErrorBody::new(ErrorCode::BadRequest, e.to_string()))
                    }
                    Ok(request) => match self.handle(request) {
                        Ok(payload) => Response::success(id, payload),
                        Err(err) => Response::failure(id, err),
                    },
                }
            }
        };
        serde_json::to_string(&response).expect("responses serialize")
    }

    /// Answers requests line by line until the reader is exhausted. Blank
    /// lines are skipped.
    pub fn serve_stream(&self, input: impl BufRead, mut output: impl Write) -> io::Result<()> {
        for line in input.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            writeln!(output, "{}", self.handle_line(&line))?;
            output.flush()?;
        }
        Ok(())
    }

    fn serve_connection(&self, stream: TcpStream) -> io::Result<()> {
        let reader = BufReader::new(stream.try_clone()?);
        self.serve_stream(reader, stream)
    }
}

/// Accepts connections forever, one thread per connection.
pub fn serve(listener: TcpListener, service: Arc<Service>) -> io::Result<()> {
    for stream in listener.incoming() {
        let stream = stream?;
        let service = Arc::clone(&service);
        thread::spawn(move || {
            // A client hanging up mid-line is not the server's problem.
            let _ = service.serve_connection(stream);
        });
    }
    Ok(())
}

/// Binds to the loopback interface. Port 0 picks a free port.
pub fn bind(port: u16) -> io::Result<(TcpListener, SocketAddr)> {
    let listener = TcpListener::bind(("127.0.0.1", port))?;
    let addr = listener.local_addr()?;
    Ok((listener, addr))
}
