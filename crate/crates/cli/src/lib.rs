//! Command-line front end: argument model, command dispatch and report
//! rendering. Every command yields a [`ReportRecord`], printed as aligned
//! text or as JSON with sorted keys.

pub mod bundle;
mod commands;
pub mod suite;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

pub use commands::run;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub rules: Vec<String>,
    pub warnings: Vec<String>,
}

impl ReportRecord {
    pub fn new(command: &str) -> Self {
        ReportRecord {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            rules: vec![],
            warnings: vec![],
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn output(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.outputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn rule(&mut self, tag: &str) -> &mut Self {
        if !self.rules.iter().any(|r| r == tag) {
            self.rules.push(tag.to_string());
        }
        self
    }

    pub fn warn(&mut self, message: impl Into<String>) -> &mut Self {
        self.warnings.push(message.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("report: {e}")))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => render_text(self),
        }
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("plain data serializes")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input: exit code 2.
    Parse(String),
    /// Outside the domain or unsupported kind: exit code 3.
    Domain(String),
    /// An identity check failed: exit code 4.
    Identity(String),
    /// Reading input files.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Identity(_) => 4,
            CliError::Io(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Domain(_) => "domain",
            CliError::Identity(_) => "identity",
            CliError::Io(_) => "io",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Domain(m) | CliError::Identity(m) | CliError::Io(m) => m,
        }
    }

    /// Structured error object for machine output.
    pub fn to_json(&self) -> String {
        let body = serde_json::json!({
            "error": { "kind": self.kind(), "message": self.message(), "exit_code": self.exit_code() }
        });
        serde_json::to_string_pretty(&body).expect("error serializes")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => format!("error ({}): {}", self.kind(), self.message()),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.kind(), self.message())
    }
}

impl std::error::Error for CliError {}

impl From<curvext::Error> for CliError {
    fn from(e: curvext::Error) -> Self {
        match e {
            curvext::Error::Parse { .. } => CliError::Parse(e.to_string()),
            curvext::Error::CatalogueMismatch(_) => CliError::Identity(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// A finished command: its report and the process exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub record: ReportRecord,
    pub code: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "curvext", version, about = "Extensions of polarized curves: exact invariants")]
pub struct Cli {
    /// Output mode.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

const BUNDLE_HELP: &str = "Bundle expression: terms `<int>*g`, `<int>*K`, `+<int>pts`, `-<int>pts`, \
optional `:aligned` suffix. Examples: \"6*g+1pts\", \"4K-3pts:aligned\", \"1*K+2*g\"";

#[derive(Debug, Subcommand)]
pub enum Command {
    /// h^0, h^1 and degree of a line bundle.
    Cohomology {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        bundle: BundleArgs,
    },
    /// Corank of the Gaussian map of (C, L), or of (C, mK) with --m.
    Corank {
        #[command(flatten)]
        curve: CurveArgs,
        #[command(flatten)]
        bundle: BundleArgs,
        /// Pluricanonical multiple.
        #[arg(long)]
        m: Option<i64>,
    },
    /// Surface extensions: verdicts and classes.
    Classify {
        #[arg(long)]
        genus: Option<i64>,
        #[arg(long)]
        degree: Option<i64>,
        /// Restrict to hyperelliptic or genus-3 polarized curves.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long, help = BUNDLE_HELP)]
        bundle: Option<String>,
        /// In genus 3 and degree 8: L = 2K.
        #[arg(long)]
        twice_canonical: bool,
    },
    /// Regenerate a classification table.
    Table {
        #[arg(value_enum)]
        which: TableArg,
        #[arg(long)]
        genus: Option<i64>,
        #[arg(long)]
        cliff: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
    },
    /// Universal extensions and weighted hypersurface invariants.
    Universal(UniversalArgs),
    /// Dimensions of families of extensions of hyperelliptic curves.
    FamilyDims {
        #[arg(long)]
        genus: Option<i64>,
        #[arg(long)]
        mu: Option<i64>,
        #[arg(long)]
        b: Option<i64>,
        /// Emit the whole (μ, b) grid, for every genus in 2..=12 unless --genus is set.
        #[arg(long)]
        sweep: bool,
    },
    /// Verify the polynomial identities of a weighted construction.
    CheckConstruction {
        #[arg(value_enum)]
        case: ConstructionArg,
        /// Polynomial file: `name = polynomial` per line, `#` comments.
        #[arg(long, conflicts_with = "klein")]
        file: Option<PathBuf>,
        /// Use the built-in Klein quartic split (genus 3 only).
        #[arg(long)]
        klein: bool,
    },
    /// Run the full acceptance suite.
    ReportAll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Hyperelliptic,
    Trigonal,
    #[value(alias = "quartic")]
    Genus3,
    PlaneQuintic,
    PlaneSextic,
    Bielliptic,
    DelPezzo,
    /// General curve of the Clifford index given by --cliff.
    General,
}

#[derive(Debug, Clone, Args)]
pub struct CurveArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub genus: Option<i64>,
    /// Maroni invariants `a,b` of a trigonal curve.
    #[arg(long)]
    pub maroni: Option<String>,
    /// Clifford index for --kind general.
    #[arg(long)]
    pub cliff: Option<i64>,
}

#[derive(Debug, Clone, Args)]
pub struct BundleArgs {
    #[arg(long, help = BUNDLE_HELP)]
    pub bundle: Option<String>,
    /// Degree of a general line bundle (hyperelliptic or genus 3).
    #[arg(long, conflicts_with = "bundle")]
    pub degree: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    Trigonal,
    PluricanCorank,
    Genus3Lemma,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    Genus3,
    Genus4,
}

#[derive(Debug, Clone, Args)]
pub struct UniversalArgs {
    /// Which family: genus3, hyperelliptic, pluricanonical, or the whole catalogue.
    #[arg(long, value_enum, default_value_t = UniversalFamily::All)]
    pub family: UniversalFamily,
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    #[arg(long)]
    pub genus: Option<i64>,
    #[arg(long)]
    pub maroni: Option<String>,
    #[arg(long)]
    pub cliff: Option<i64>,
    #[arg(long)]
    pub degree: Option<i64>,
    #[arg(long, help = BUNDLE_HELP)]
    pub bundle: Option<String>,
    #[arg(long)]
    pub m: Option<i64>,
    /// Weights of a weighted projective space, e.g. `1,1,1,3,3,3`.
    #[arg(long, requires_all = ["equation_degree", "embedding_degree"])]
    pub weights: Option<String>,
    #[arg(long)]
    pub equation_degree: Option<u64>,
    #[arg(long)]
    pub embedding_degree: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UniversalFamily {
    All,
    Genus3,
    Hyperelliptic,
    Pluricanonical,
}

/// Parse arguments (without the program name) and run.
pub fn run_args<I, S>(args: I) -> (Format, Result<Outcome, CliError>)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("curvext")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => (cli.format, run(&cli.command)),
        Err(e) => (Format::Text, Err(CliError::Parse(e.to_string()))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn is_row_list(v: &Value) -> bool {
    matches!(v, Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object))
}

fn render_rows(out: &mut String, columns: &[String], rows: &[Value]) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| columns.iter().map(|c| r.get(c).map(scalar).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |out: &mut String, fields: &[String]| {
        let padded: Vec<String> = fields.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
        let _ = writeln!(out, "  {}", padded.join("  ").trim_end());
    };
    line(out, columns);
    line(out, &widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
    for r in &cells {
        line(out, r);
    }
}

fn render_text(r: &ReportRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "command: {}", r.command);
    if !r.inputs.is_empty() {
        let pairs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
        let _ = writeln!(out, "inputs: {}", pairs.join(" "));
    }
    let columns: Option<Vec<String>> = r
        .outputs
        .get("columns")
        .and_then(|c| serde_json::from_value(c.clone()).ok());
    for (k, v) in &r.outputs {
        if k == "columns" || is_row_list(v) {
            continue;
        }
        let _ = writeln!(out, "{k}: {}", scalar(v));
    }
    for (k, v) in &r.outputs {
        if let Value::Array(rows) = v {
            if is_row_list(v) {
                let cols = columns.clone().unwrap_or_else(|| {
                    rows[0].as_object().map(|o: &Map<String, Value>| o.keys().cloned().collect()).unwrap_or_default()
                });
                let _ = writeln!(out, "{k}:");
                render_rows(&mut out, &cols, rows);
            }
        }
    }
    if !r.rules.is_empty() {
        let _ = writeln!(out, "rules: {}", r.rules.join(", "));
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_round_trip() {
        let mut r = ReportRecord::new("corank");
        r.input("genus", 5).input("kind", "hyperelliptic").output("cork", 12).rule("hyperelliptic-formula");
        r.output("ratio", "3/4").warn("upper bound only");
        let text = r.to_json();
        let back = ReportRecord::from_json(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn error_codes() {
        assert_eq!(CliError::from(curvext::Error::Domain("x".into())).exit_code(), 3);
        assert_eq!(CliError::from(curvext::Error::Kind("x".into())).exit_code(), 3);
        let parse = curvext::Error::Parse { token: "t".into(), message: "m".into() };
        assert_eq!(CliError::from(parse).exit_code(), 2);
    }
}
