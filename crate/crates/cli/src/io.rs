use std::fs;
use std::path::{Path, PathBuf};

use isolation_core::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use isolation_core::lpweights::LpSolution;
use isolation_core::{Graph, WeightVector};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] isolation_core::Error),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },

    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: isolation_core::Error },

    #[error("{0}")]
    Other(String),
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

pub fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Edge-list files start with an `n m` header line (after comments);
/// anything else is read as graph6.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line) if !line.starts_with(">>") => {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
                GraphFormat::EdgeList
            } else {
                GraphFormat::Graph6
            }
        }
        _ => GraphFormat::Graph6,
    }
}

pub fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = read_text(path)?;
    let parsed = match detect_format(&text) {
        GraphFormat::Graph6 => parse_graph6(&text),
        GraphFormat::EdgeList => parse_edge_list(&text),
    };
    parsed.map_err(|source| CliError::Graph { path: path.to_owned(), source })
}

pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Graph6 => format!("{}\n", to_graph6(g)),
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.to_owned(), source })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    write_text(path, &text)
}

/// A weights file is either an `lp-weights` solution or a bare weight vector.
#[derive(Deserialize)]
#[serde(untagged)]
enum WeightsFile {
    Solution(LpSolution),
    Bare(WeightVector),
}

pub fn read_weights(path: &Path) -> CliResult<WeightVector> {
    match read_json::<WeightsFile>(path)? {
        WeightsFile::Bare(wv) => Ok(wv),
        WeightsFile::Solution(sol) => sol
            .witness
            .ok_or_else(|| CliError::Other(format!("{}: LP solution has no witness", path.display()))),
    }
}
