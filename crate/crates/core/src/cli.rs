//! Command-line entry point. Every command prints one JSON document of the
//! form `{"command", "config", "result", "pass"}`.
//!
//! Exit status: 0 when every check passes, 1 when a check fails (the JSON is
//! still written), 2 for usage errors or when the report cannot be written.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::minimal::GraphSurface;
use crate::reference::ReferenceTables;
use crate::report::{self, num, ClassifyOptions};
use crate::scalar::{render_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Ambient metric, connection, brackets and curvature
    Tables,
    /// Case analysis, printed identities and randomized sweep
    Classify,
    /// Extrinsic and induced geometry of the slices t = const
    Slice,
    /// Minimality of the published t-dependent example
    VerifyExample,
    /// Mean curvature of the graph x = φ(t)
    GraphH,
    /// All of the above; the printed identities count toward the verdict
    CheckAll,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Tables => "tables",
            Command::Classify => "classify",
            Command::Slice => "slice",
            Command::VerifyExample => "verify-example",
            Command::GraphH => "graph-h",
            Command::CheckAll => "check-all",
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Ok(q) = s.parse::<Rational>() {
        return Ok(q);
    }
    // decimal literal such as -0.25
    let (neg, body) = s.strip_prefix('-').map_or((false, s), |b| (true, b));
    let (int, frac) = body
        .split_once('.')
        .ok_or_else(|| format!("not a rational number: {s}"))?;
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("not a rational number: {s}"));
    }
    let digits: num::BigInt = format!("{int}{frac}")
        .parse()
        .map_err(|_| format!("not a rational number: {s}"))?;
    let scale = num::pow(num::BigInt::from(10), frac.len());
    let q = Rational::new(digits, scale);
    Ok(if neg { -q } else { q })
}

#[derive(Debug, Clone, Parser)]
#[command(
    name = "nilgeo",
    about = "Exact geometry of Nil4: curvature tables, Codazzi classification, minimal hypersurfaces"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Tolerance for numeric residuals
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Random normals drawn by the classification sweep
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    /// Seed for the sweep's random streams
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = -5.0, allow_hyphen_values = true)]
    pub t_min: f64,
    #[arg(long, default_value_t = 5.0, allow_hyphen_values = true)]
    pub t_max: f64,
    /// Number of evenly spaced t samples, endpoints included
    #[arg(long, default_value_t = 100)]
    pub t_count: usize,
    /// Coefficient of φ, constant term first; repeat for each power of t.
    /// Without any, φ(t) = 2t + t³/3.
    #[arg(long = "coef", value_parser = parse_rational, allow_hyphen_values = true)]
    pub coef: Vec<Rational>,
    /// Write the report here instead of standard output
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl RunConfig {
    fn validate(&self) -> Result<(), String> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err("--tol must be a positive number".into());
        }
        if self.samples < 1 {
            return Err("--samples must be at least 1".into());
        }
        if self.t_count < 1 {
            return Err("--t-count must be at least 1".into());
        }
        if self.t_min >= self.t_max || !self.t_min.is_finite() || !self.t_max.is_finite() {
            return Err("--t-min must be less than --t-max".into());
        }
        Ok(())
    }

    fn graph(&self) -> GraphSurface {
        if self.coef.is_empty() {
            GraphSurface::example()
        } else {
            GraphSurface::new(self.coef.clone())
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "tol": num(self.tol),
            "samples": self.samples,
            "seed": self.seed,
            "t_min": num(self.t_min),
            "t_max": num(self.t_max),
            "t_count": self.t_count,
            "coef": self.graph().coeffs.iter().map(render_rational).collect::<Vec<_>>(),
            "output": self.output.as_ref().map(|p| p.display().to_string()),
        })
    }
}

/// Runs the command and assembles the full document.
pub fn execute(config: &RunConfig, reference: &ReferenceTables) -> (Value, bool) {
    let ts = report::sample_points(config.t_min, config.t_max, config.t_count);
    let opts = ClassifyOptions {
        samples: config.samples,
        seed: config.seed,
        tol: config.tol,
    };
    let outcome = match config.command {
        Command::Tables => report::tables(reference),
        Command::Classify => report::classify(reference, opts).0,
        Command::Slice => report::slice(reference),
        Command::VerifyExample => report::verify_example(&ts, config.tol),
        Command::GraphH => report::graph_h(&config.graph(), &ts, config.tol),
        Command::CheckAll => report::check_all(reference, opts, &ts, &config.graph()),
    };
    let doc = json!({
        "command": config.command.name(),
        "config": config.to_json(),
        "result": outcome.result,
        "pass": outcome.pass,
    });
    (doc, outcome.pass)
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let dir = path
        .parent()
        .filter(|d| !d.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "report".into());
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let result = std::fs::File::create(&tmp).and_then(|mut f| {
        f.write_all(bytes)?;
        f.sync_all()
    });
    match result.and_then(|()| std::fs::rename(&tmp, path)) {
        Ok(()) => Ok(()),
        Err(e) => {
            let _ = std::fs::remove_file(&tmp);
            Err(e)
        }
    }
}

/// Parses `args` (program name first), runs against `reference` and writes
/// the report to `out` or the `--output` path. Returns the exit status.
pub fn run_with<I, T>(args: I, reference: &ReferenceTables, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    if let Err(msg) = config.validate() {
        let _ = writeln!(err, "error: {msg}\n\n{}", RunConfig::command_usage());
        return 2;
    }
    let (doc, pass) = execute(&config, reference);
    let mut text = serde_json::to_string_pretty(&doc).expect("reports serialize");
    text.push('\n');
    let written = match &config.output {
        Some(path) => write_atomic(path, text.as_bytes()).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write report: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return 2;
    }
    if pass {
        0
    } else {
        1
    }
}

impl RunConfig {
    fn command_usage() -> String {
        use clap::CommandFactory;
        RunConfig::command().render_usage().to_string()
    }
}

/// Process entry point against the published reference tables.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        args,
        &ReferenceTables::published(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2, 1));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational(".").is_err());
    }

    #[test]
    fn bad_flag_is_usage_error() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(
            run_with(
                ["nilgeo", "tables", "--bogus"],
                &ReferenceTables::published(),
                &mut o,
                &mut e
            ),
            2
        );
        assert!(o.is_empty() && !e.is_empty());
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(
            run_with(
                ["nilgeo", "slice", "--tol", "-1"],
                &ReferenceTables::published(),
                &mut o,
                &mut e
            ),
            2
        );
    }
}
