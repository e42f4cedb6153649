//! Command line and HTTP front end for the `fourbar` library.
//!
//! Both front ends share the handlers in [`api`], so a CLI subcommand and
//! the matching route return the same JSON document. Wire types live in
//! [`wire`].

pub mod api;
pub mod cli;
pub mod http;
pub mod wire;
