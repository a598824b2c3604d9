//! Stepping service for the four-port engine.
//!
//! Clients send one JSON request per line and get one JSON response per
//! line, over TCP on the loopback interface or any other byte stream. See
//! `docs/protocol.md` for the message schema.

pub mod protocol;
pub mod server;
pub mod session;

pub use protocol::{Request, Response, PROTOCOL, VERSION};
pub use server::{bind, serve, Service};
pub use session::Session;
