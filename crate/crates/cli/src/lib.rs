//! Command implementations behind the `lie-hasse` binary: build and export
//! diagrams, enumerate maps between two chosen diagrams, run the
//! classification, and verify it against the expected table.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or configuration
//! error, 3 structurally valid but non-dominant (or zero) weight.

pub mod output;
pub mod spec;

use std::fmt;
use std::sync::Arc;

use lie_hasse::classify::{
    classify_all, expected_table, verify_against_expected, ClassifyConfig, ExpectedTable,
    MAX_RANK_CAP, MIN_RANK_CAP,
};
use lie_hasse::dmap::{induce_map, Labeling};
use lie_hasse::{build_hasse, ExecMode, RootSystem};

use output::{MapListDoc, MapResultDoc, SystemDoc};
use spec::DiagramSpec;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    InvalidWeight(String),
    Mismatch(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::InvalidWeight(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::InvalidWeight(msg) => write!(f, "invalid weight: {msg}"),
            CliError::Mismatch(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
    Text,
}

impl Format {
    pub fn parse(token: &str) -> Result<Format, CliError> {
        match token {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(CliError::Usage(format!("unknown format {other:?}"))),
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents serialize");
    text.push('\n');
    text
}

/// Builds one diagram and renders it as DOT, JSON or text.
pub fn cmd_hasse(spec: &DiagramSpec, format: Format) -> Result<String, CliError> {
    let rs = RootSystem::build(spec.system);
    let diagram = build_hasse(&rs, &spec.weight)
        .map_err(|e| CliError::InvalidWeight(e.to_string()))?;
    Ok(match format {
        Format::Dot => diagram.export_dot(),
        Format::Json => to_json(&output::diagram_to_doc(&diagram)),
        Format::Text => output::diagram_text(&diagram),
    })
}

/// Enumerates every labeling between the two node sets and reports those
/// whose induced map between the two chosen diagrams exists, each flagged
/// surjective or not. An empty list is a success, not an error.
pub fn cmd_map(src: &DiagramSpec, tgt: &DiagramSpec, format: Format) -> Result<String, CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage("map output supports json and text".into()));
    }
    let src_rs = RootSystem::build(src.system);
    let tgt_rs = RootSystem::build(tgt.system);
    let src_diagram = Arc::new(
        build_hasse(&src_rs, &src.weight).map_err(|e| CliError::InvalidWeight(e.to_string()))?,
    );
    let tgt_diagram = Arc::new(
        build_hasse(&tgt_rs, &tgt.weight).map_err(|e| CliError::InvalidWeight(e.to_string()))?,
    );

    let src_rank = src.system.rank();
    let tgt_rank = tgt.system.rank();
    let mut results = Vec::new();
    let mut counter = vec![1usize; src_rank];
    loop {
        let f = Labeling::new(src.system, tgt.system, counter.clone()).expect("in range");
        if let Some(map) = induce_map(&f, &src_diagram, &tgt_diagram).expect("systems match") {
            results.push(MapResultDoc {
                f: counter.clone(),
                surjective: map.surjective(),
            });
        }
        // lexicographic odometer over target nodes
        let mut pos = src_rank;
        loop {
            if pos == 0 {
                let doc = MapListDoc {
                    schema: output::SCHEMA_VERSION,
                    source: output::EndpointDoc {
                        system: SystemDoc::of(src.system),
                        highest: src.weight.labels().to_vec(),
                    },
                    target: output::EndpointDoc {
                        system: SystemDoc::of(tgt.system),
                        highest: tgt.weight.labels().to_vec(),
                    },
                    labelings: results,
                };
                return Ok(match format {
                    Format::Json => to_json(&doc),
                    _ => output::map_list_text(&doc),
                });
            }
            counter[pos - 1] += 1;
            if counter[pos - 1] <= tgt_rank {
                break;
            }
            counter[pos - 1] = 1;
            pos -= 1;
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyOptions {
    pub max_rank: usize,
    pub extremal_constraint: bool,
    pub include_identity: bool,
    pub witnesses: bool,
}

fn checked_config(max_rank: usize, extremal_constraint: bool) -> Result<ClassifyConfig, CliError> {
    if !(MIN_RANK_CAP..=MAX_RANK_CAP).contains(&max_rank) {
        return Err(CliError::Usage(format!(
            "max rank {max_rank} outside the supported range {MIN_RANK_CAP}..={MAX_RANK_CAP}"
        )));
    }
    Ok(ClassifyConfig {
        max_rank,
        extremal_constraint,
        exec: ExecMode::Parallel,
    })
}

/// Runs the classification and renders the found entries.
pub fn cmd_classify(opts: ClassifyOptions, format: Format) -> Result<String, CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage(
            "classify output supports json and text".into(),
        ));
    }
    let cfg = checked_config(opts.max_rank, opts.extremal_constraint)?;
    let entries = classify_all(cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    let doc = output::classify_to_doc(
        &entries,
        opts.max_rank,
        opts.extremal_constraint,
        opts.include_identity,
        opts.witnesses,
    );
    Ok(match format {
        Format::Json => to_json(&doc),
        _ => output::classify_text(&doc),
    })
}

/// Verifies the classification against an expected table. Success is an
/// empty diff both ways; a mismatch carries the human-readable diff.
pub fn verify_with_table(max_rank: usize, table: &ExpectedTable) -> Result<String, CliError> {
    let cfg = checked_config(max_rank, true)?;
    let entries = classify_all(cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    let report = verify_against_expected(&entries, table);
    if report.is_success() {
        Ok(report.to_string())
    } else {
        Err(CliError::Mismatch(report.to_string()))
    }
}

/// Verifies against the embedded expected table.
pub fn cmd_verify(max_rank: usize) -> Result<String, CliError> {
    verify_with_table(max_rank, &expected_table(max_rank))
}
