//! Parsing of system and weight tokens.
//!
//! A diagram is addressed by a system token ("G2", "A6", "e8") and a weight
//! token: either `fund:<node>` for a fundamental weight, where `<node>` is a
//! Bourbaki index or one of the documented aliases, or an explicit label
//! vector `[k1,...,kn]`.
//!
//! Aliases (all per family, resolving to Bourbaki indices):
//! - B_n: `long`/`long-end` is node 1, `short`/`short-end` is node n;
//! - C_n: `short`/`short-end` is node 1, `long`/`long-end` is node n;
//! - F_4: `long`/`long-end` is node 1, `short`/`short-end` is node 4;
//! - G_2: `long` is node 1, `short` is node 2;
//! - D_n: `arm` is node 1, `fork` is node n (the fork pair is n−1, n);
//! - E_n: `arm` is node 1, `branch` is node 2, `end` is node n.

use lie_hasse::{fundamental_weight, is_dominant, Family, RootSystem, SystemType, Weight};

use crate::CliError;

/// A parsed (system, highest weight) pair.
#[derive(Debug, Clone)]
pub struct DiagramSpec {
    pub system: SystemType,
    pub weight: Weight,
}

const MAX_LABEL: i64 = 1_000_000;

pub fn parse_system(token: &str) -> Result<SystemType, CliError> {
    SystemType::parse(token)
        .map_err(|e| CliError::Usage(format!("bad system token {token:?}: {e}")))
}

pub fn resolve_node(system: SystemType, token: &str) -> Result<usize, CliError> {
    let rank = system.rank();
    if let Ok(node) = token.parse::<usize>() {
        if (1..=rank).contains(&node) {
            return Ok(node);
        }
        return Err(CliError::Usage(format!(
            "node {node} out of range 1..={rank} for {system}"
        )));
    }
    let alias = token.to_ascii_lowercase();
    let resolved = match (system.family(), alias.as_str()) {
        (Family::B, "long") | (Family::B, "long-end") => Some(1),
        (Family::B, "short") | (Family::B, "short-end") => Some(rank),
        (Family::C, "short") | (Family::C, "short-end") => Some(1),
        (Family::C, "long") | (Family::C, "long-end") => Some(rank),
        (Family::F, "long") | (Family::F, "long-end") => Some(1),
        (Family::F, "short") | (Family::F, "short-end") => Some(4),
        (Family::G, "long") => Some(1),
        (Family::G, "short") => Some(2),
        (Family::D, "arm") => Some(1),
        (Family::D, "fork") => Some(rank),
        (Family::E, "arm") => Some(1),
        (Family::E, "branch") => Some(2),
        (Family::E, "end") => Some(rank),
        _ => None,
    };
    resolved.ok_or_else(|| {
        CliError::Usage(format!(
            "unknown node token {token:?} for {system}; use an index 1..={rank} or a documented alias"
        ))
    })
}

pub fn parse_spec(system_token: &str, weight_token: &str) -> Result<DiagramSpec, CliError> {
    let system = parse_system(system_token)?;
    let rs = RootSystem::build(system);
    let weight = if let Some(node_token) = weight_token.strip_prefix("fund:") {
        let node = resolve_node(system, node_token)?;
        fundamental_weight(&rs, node).expect("node resolved in range")
    } else if weight_token.starts_with('[') && weight_token.ends_with(']') {
        let inner = &weight_token[1..weight_token.len() - 1];
        let mut labels = Vec::new();
        for piece in inner.split(',') {
            let label: i64 = piece.trim().parse().map_err(|_| {
                CliError::Usage(format!(
                    "bad label {piece:?} in weight token {weight_token:?}"
                ))
            })?;
            if label.abs() > MAX_LABEL {
                return Err(CliError::Usage(format!(
                    "label {label} exceeds the supported magnitude {MAX_LABEL}"
                )));
            }
            labels.push(label);
        }
        if labels.len() != system.rank() {
            return Err(CliError::Usage(format!(
                "weight {weight_token:?} has {} labels, {system} has rank {}",
                labels.len(),
                system.rank()
            )));
        }
        Weight::new(labels)
    } else {
        return Err(CliError::Usage(format!(
            "bad weight token {weight_token:?}; expected fund:<node> or [k1,...,kn]"
        )));
    };

    if !is_dominant(&rs, &weight) {
        return Err(CliError::InvalidWeight(format!(
            "weight {:?} is not dominant over {system}",
            weight.labels()
        )));
    }
    if weight.is_zero() {
        return Err(CliError::InvalidWeight(format!(
            "the zero weight spans no diagram over {system}"
        )));
    }
    Ok(DiagramSpec { system, weight })
}
