//! Versioned JSON documents and human-readable text rendering.
//!
//! JSON and DOT are the stable machine surfaces; the text format is for
//! humans and carries no stability guarantee. Every document carries
//! `"schema": 1` so certificates stay auditable across releases.

use serde::{Deserialize, Serialize};

use lie_hasse::classify::{ClassificationEntry, EntryStatus};
use lie_hasse::{build_hasse, HasseDiagram, RootSystem, SystemType, Weight};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDoc {
    pub family: String,
    pub rank: usize,
}

impl SystemDoc {
    pub fn of(t: SystemType) -> SystemDoc {
        SystemDoc {
            family: t.family().letter().to_string(),
            rank: t.rank(),
        }
    }

    pub fn to_system(&self) -> Result<SystemType, CliError> {
        SystemType::parse(&format!("{}{}", self.family, self.rank))
            .map_err(|e| CliError::Usage(format!("bad system in document: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDoc {
    pub depth: Vec<i64>,
    pub labels: Vec<i64>,
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub schema: u32,
    pub system: SystemDoc,
    pub highest: Vec<i64>,
    pub levels: usize,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<EdgeDoc>,
}

pub fn diagram_to_doc(d: &HasseDiagram) -> DiagramDoc {
    DiagramDoc {
        schema: SCHEMA_VERSION,
        system: SystemDoc::of(d.system_type()),
        highest: d.weight_set().highest().labels().to_vec(),
        levels: d.level_count(),
        vertices: (0..d.vertex_count())
            .map(|v| VertexDoc {
                depth: d.vertex(v).depth().unwrap().to_vec(),
                labels: d.vertex(v).labels().to_vec(),
                level: d.level_of(v),
            })
            .collect(),
        edges: d
            .edges()
            .iter()
            .map(|e| EdgeDoc {
                from: e.upper,
                to: e.lower,
                label: e.label,
            })
            .collect(),
    }
}

/// Rebuilds the diagram named by a document and checks the document against
/// it vertex for vertex and edge for edge.
pub fn diagram_from_doc(doc: &DiagramDoc) -> Result<HasseDiagram, CliError> {
    if doc.schema != SCHEMA_VERSION {
        return Err(CliError::Usage(format!(
            "unsupported schema {}",
            doc.schema
        )));
    }
    let system = doc.system.to_system()?;
    let rs = RootSystem::build(system);
    let diagram = build_hasse(&rs, &Weight::new(doc.highest.clone()))
        .map_err(|e| CliError::Usage(format!("bad highest weight in document: {e}")))?;
    if diagram_to_doc(&diagram) != *doc {
        return Err(CliError::Usage(
            "document does not describe a valid diagram".to_string(),
        ));
    }
    Ok(diagram)
}

pub fn diagram_text(d: &HasseDiagram) -> String {
    let mut out = format!(
        "{} highest={:?}: {} vertices, {} levels, {} edges\n",
        d.system_type(),
        d.weight_set().highest().labels(),
        d.vertex_count(),
        d.level_count(),
        d.edges().len()
    );
    for v in 0..d.vertex_count() {
        let children: Vec<String> = d
            .children_of(v)
            .iter()
            .map(|&(label, child)| format!("-{label}-> {child}"))
            .collect();
        out.push_str(&format!(
            "  [{v}] level {} depth {:?} labels {:?} {}\n",
            d.level_of(v),
            d.vertex(v).depth().unwrap(),
            d.vertex(v).labels(),
            children.join(" ")
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointDoc {
    pub system: SystemDoc,
    pub highest: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapResultDoc {
    pub f: Vec<usize>,
    pub surjective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapListDoc {
    pub schema: u32,
    pub source: EndpointDoc,
    pub target: EndpointDoc,
    pub labelings: Vec<MapResultDoc>,
}

pub fn map_list_text(doc: &MapListDoc) -> String {
    let mut out = format!(
        "{}{:?} -> {}{:?}: {} labelings with an induced map\n",
        doc.source.system.family,
        doc.source.highest,
        doc.target.system.family,
        doc.target.highest,
        doc.labelings.len()
    );
    for item in &doc.labelings {
        out.push_str(&format!(
            "  f={:?} {}\n",
            item.f,
            if item.surjective {
                "surjective"
            } else {
                "not surjective"
            }
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessMapDoc {
    pub source_node: usize,
    pub target_node: usize,
    pub vertex_map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub labeling: Vec<usize>,
    pub maps: Vec<WitnessMapDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub source: SystemDoc,
    pub target: SystemDoc,
    pub identity_pair: bool,
    pub status: String,
    pub labelings: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessDoc>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub schema: u32,
    pub max_rank: usize,
    pub extremal_constraint: bool,
    pub include_identity: bool,
    pub entries: Vec<EntryDoc>,
}

pub fn classify_to_doc(
    entries: &[ClassificationEntry],
    max_rank: usize,
    extremal_constraint: bool,
    include_identity: bool,
    with_witnesses: bool,
) -> ClassifyDoc {
    let entries = entries
        .iter()
        .filter(|e| include_identity || !e.identity_pair)
        .filter(|e| e.status == EntryStatus::Found)
        .map(|e| {
            let witnesses = with_witnesses.then(|| {
                e.labelings
                    .iter()
                    .zip(&e.witnesses)
                    .map(|(labeling, maps)| WitnessDoc {
                        labeling: labeling.map().to_vec(),
                        maps: maps
                            .iter()
                            .enumerate()
                            .map(|(i, m)| {
                                let source_node = RootSystem::build(e.source)
                                    .extremal_roots()
                                    .into_iter()
                                    .nth(i)
                                    .unwrap();
                                WitnessMapDoc {
                                    source_node,
                                    target_node: labeling.apply(source_node),
                                    vertex_map: m.vertex_map().to_vec(),
                                }
                            })
                            .collect(),
                    })
                    .collect()
            });
            EntryDoc {
                source: SystemDoc::of(e.source),
                target: SystemDoc::of(e.target),
                identity_pair: e.identity_pair,
                status: match e.status {
                    EntryStatus::Found => "found".to_string(),
                    EntryStatus::Empty => "empty".to_string(),
                },
                labelings: e.labelings.iter().map(|f| f.map().to_vec()).collect(),
                witnesses,
            }
        })
        .collect();
    ClassifyDoc {
        schema: SCHEMA_VERSION,
        max_rank,
        extremal_constraint,
        include_identity,
        entries,
    }
}

pub fn classify_text(doc: &ClassifyDoc) -> String {
    let mut out = format!(
        "classification up to rank {} ({} entries with maps)\n",
        doc.max_rank,
        doc.entries.len()
    );
    for e in &doc.entries {
        let tag = if e.identity_pair { " [identity pair]" } else { "" };
        out.push_str(&format!(
            "  {}{} -> {}{}{}: ",
            e.source.family, e.source.rank, e.target.family, e.target.rank, tag
        ));
        let labelings: Vec<String> = e.labelings.iter().map(|f| format!("{f:?}")).collect();
        out.push_str(&labelings.join(", "));
        out.push('\n');
    }
    out
}
