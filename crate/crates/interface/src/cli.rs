//! `fourbar` command line.
//!
//! Data goes to stdout as JSON (or CSV for `trace --format csv`); messages
//! go to stderr. Exit status is 0 on success, 2 for unusable arguments and
//! 1 when the lengths do not form a linkage.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use fourbar::lengths::DEFAULT_CLASS_TOL;
use fourbar::proj::ProjReal;
use serde::Serialize;

use crate::api::{self, ApiError, ApiResult, Coordinate, SolveRequest, TraceRequest};
use crate::wire::{write_csv, ProjWire};

#[derive(Debug, Parser)]
#[command(name = "fourbar", version, about = "Configuration spaces of planar four-bar linkages")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CoordinateArg {
    Normalized,
    RhoX,
    S,
}

impl From<CoordinateArg> for Coordinate {
    fn from(c: CoordinateArg) -> Self {
        match c {
            CoordinateArg::Normalized => Coordinate::Normalized,
            CoordinateArg::RhoX => Coordinate::RhoX,
            CoordinateArg::S => Coordinate::S,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Linkage class and orthodiagonal flag.
    Classify {
        #[arg(long, value_parser = lengths_arg, allow_hyphen_values = true)]
        lengths: [f64; 4],
        /// Relative tolerance for the degeneracy tests.
        #[arg(long, default_value_t = DEFAULT_CLASS_TOL)]
        tol: f64,
    },
    /// Sample one branch of the configuration space.
    Trace {
        #[arg(long, value_parser = lengths_arg, allow_hyphen_values = true)]
        lengths: [f64; 4],
        #[arg(long)]
        branch: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = CoordinateArg::Normalized)]
        coordinate: CoordinateArg,
    },
    /// All configurations with a given input tangent.
    Solve {
        #[arg(long, value_parser = lengths_arg, allow_hyphen_values = true)]
        lengths: [f64; 4],
        /// A number, or `inf`.
        #[arg(long, value_parser = tangent_arg, allow_hyphen_values = true)]
        x: ProjReal,
    },
    /// Configurations with a joint folded flat.
    Infinity {
        #[arg(long, value_parser = lengths_arg, allow_hyphen_values = true)]
        lengths: [f64; 4],
    },
    /// Branches, Grashof condition, joint mobility and identity residuals.
    Report {
        #[arg(long, value_parser = lengths_arg, allow_hyphen_values = true)]
        lengths: [f64; 4],
    },
    /// Residuals of the length identities.
    Identities {
        #[arg(long, value_parser = lengths_arg, allow_hyphen_values = true)]
        lengths: [f64; 4],
    },
    /// Run the HTTP service until interrupted.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
    },
}

fn lengths_arg(s: &str) -> Result<[f64; 4], String> {
    api::parse_lengths(s).map_err(|e| e.to_string())
}

fn tangent_arg(s: &str) -> Result<ProjReal, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("{s:?} is not a number or inf"))?;
    if v.is_nan() {
        return Err("NaN is not a tangent".into());
    }
    Ok(ProjReal::from_f64(v))
}

fn json<T: Serialize>(out: &mut dyn Write, value: &T) -> ApiResult<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| ApiError::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| ApiError::Internal(e.to_string()))
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> ApiResult<()> {
    match command {
        Command::Classify { lengths, tol } => json(out, &api::classify(lengths, Some(tol))?),
        Command::Trace { lengths, branch, samples, format, coordinate } => {
            let req = TraceRequest { lengths, branch_id: branch, samples, coordinate: coordinate.into() };
            let resp = api::trace(&req)?;
            match format {
                Format::Json => json(out, &resp.records),
                Format::Csv => write_csv(out, &resp.records).map_err(|e| ApiError::Internal(e.to_string())),
            }
        }
        Command::Solve { lengths, x } => json(out, &api::solve(&SolveRequest { lengths, x: ProjWire::from(x) })?),
        Command::Infinity { lengths } => json(out, &api::infinity(lengths)?),
        Command::Report { lengths } => json(out, &api::report(lengths)?),
        Command::Identities { lengths } => json(out, &api::identities(lengths)?),
        Command::Serve { port, host } => serve(&host, port),
    }
}

fn serve(host: &str, port: u16) -> ApiResult<()> {
    let rt = tokio::runtime::Runtime::new().map_err(|e| ApiError::Internal(e.to_string()))?;
    rt.block_on(async {
        let listener = tokio::net::TcpListener::bind((host, port))
            .await
            .map_err(|e| ApiError::BadInput(format!("cannot bind {host}:{port}: {e}")))?;
        eprintln!("listening on http://{}", listener.local_addr().map_err(|e| ApiError::Internal(e.to_string()))?);
        axum::serve(listener, crate::http::router())
            .with_graceful_shutdown(async {
                let _ = tokio::signal::ctrl_c().await;
            })
            .await
            .map_err(|e| ApiError::Internal(e.to_string()))
    })
}
