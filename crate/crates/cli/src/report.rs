//! Report envelope, exit codes and the human-readable rendering.

use exactpair::algebra::AlgebraError;
use exactpair::catalog::CatalogError;
use exactpair::criterion::CriterionError;
use exactpair::ezd::EzdError;
use exactpair::factorization::FactorizationError;
use exactpair::suite::SuiteError;
use serde_json::{json, Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERDICT: i32 = 3;
pub const EXIT_BOUND: i32 = 4;

/// Failure before a verdict could be reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Bound(String),
    /// A mathematical check failed outright (no report to show).
    Verdict(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Verdict(_) => EXIT_VERDICT,
            CliError::Bound(_) => EXIT_BOUND,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Bound(m) | CliError::Verdict(m) => m,
        }
    }
}

pub fn input(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::NotArtinianWithinBound { .. } | AlgebraError::RetryLimit { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<EzdError> for CliError {
    fn from(e: EzdError) -> Self {
        match e {
            EzdError::Algebra(a) => a.into(),
            EzdError::TooManyCandidates(_) => CliError::Bound(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<FactorizationError> for CliError {
    fn from(e: FactorizationError) -> Self {
        match e {
            FactorizationError::Algebra(a) => a.into(),
            FactorizationError::Ezd(z) => z.into(),
            FactorizationError::PairNotExact { .. }
            | FactorizationError::IdentityFailed(_)
            | FactorizationError::DegreeAudit { .. } => CliError::Verdict(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CriterionError> for CliError {
    fn from(e: CriterionError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Algebra(a) => a.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        CliError::Input(e.to_string())
    }
}

/// What a command produced: its results and whether its verdict held.
pub struct Outcome {
    pub results: Value,
    pub verdict_ok: bool,
    pub paper_example: Option<String>,
    pub seed: Option<u64>,
}

impl Outcome {
    pub fn ok(results: Value) -> Self {
        Outcome { results, verdict_ok: true, paper_example: None, seed: None }
    }

    pub fn verdict(mut self, ok: bool) -> Self {
        self.verdict_ok &= ok;
        self
    }

    pub fn example(mut self, name: Option<String>) -> Self {
        self.paper_example = name;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

/// The full report. `serde_json` keeps object keys sorted, so equal inputs
/// serialize to identical bytes.
pub fn report(command: &str, inputs: Value, outcome: &Outcome) -> Value {
    let mut provenance = Map::new();
    if let Some(name) = &outcome.paper_example {
        provenance.insert("paper_example".into(), json!(name));
    }
    if let Some(seed) = outcome.seed {
        provenance.insert("seed".into(), json!(seed));
    }
    json!({
        "command": command,
        "inputs": inputs,
        "results": outcome.results,
        "provenance": provenance,
        "version": env!("CARGO_PKG_VERSION"),
    })
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(format!("({})", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_into(out: &mut Vec<String>, indent: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar(v) {
        out.push(format!("{pad}{key:<24} {s}"));
        return;
    }
    match v {
        Value::Object(map) => {
            out.push(format!("{pad}{key}:"));
            for (k, x) in map {
                render_into(out, indent + 1, k, x);
            }
        }
        Value::Array(items) => {
            out.push(format!("{pad}{key}: [{}]", items.len()));
            for (i, x) in items.iter().enumerate() {
                render_into(out, indent + 1, &format!("[{i}]"), x);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

/// Indented `key value` table of a report.
pub fn render_text(report: &Value) -> String {
    let mut out = Vec::new();
    if let Value::Object(map) = report {
        for key in ["command", "version", "inputs", "provenance", "results"] {
            if let Some(v) = map.get(key) {
                render_into(&mut out, 0, key, v);
            }
        }
    }
    out.join("\n") + "\n"
}
