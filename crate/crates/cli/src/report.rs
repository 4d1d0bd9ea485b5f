use serde::Serialize;
use serde_json::Value;

/// What the results were computed from.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fingerprint {
    Graph6(String),
    Generator { kind: String, params: Value, seed: Option<u64> },
    Parameters(Value),
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// Machine-readable record of one invocation. Everything except `timing`
/// is a function of the arguments and input files.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input: Fingerprint,
    pub results: Value,
    /// Whether the command's checks passed (the exit status is 0 iff true).
    pub ok: bool,
    pub timing: Timing,
    pub version: &'static str,
}

/// Result of running one subcommand.
pub struct Outcome {
    pub input: Fingerprint,
    pub results: Value,
    pub text: String,
    pub ok: bool,
}
