use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, Result};
use crate::group::{Family, GroupId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    CsvEdges,
}

impl FromStr for ExportFormat {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            "csv" | "csv-edges" => Ok(Self::CsvEdges),
            other => Err(GraphError::Parse(format!(
                "unknown export format {other:?}"
            ))),
        }
    }
}

/// JSON wire form. `vertices` lists element text in vertex order and
/// `edges` holds index pairs with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub family: Option<Family>,
    pub n: Option<usize>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            family: g.group.map(|id| id.family()),
            n: g.group.map(|id| id.n()),
            vertices: (0..g.order()).map(|v| g.vertex_name(v)).collect(),
            edges: g.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

pub fn export(g: &Graph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => {
            let name = g
                .group
                .map(|id| format!("{}{}", id.family(), id.n()))
                .unwrap_or_else(|| "G".to_string());
            let mut out = format!("graph {name} {{\n");
            for v in 0..g.order() {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", g.vertex_name(v));
            }
            for (i, j) in g.edges() {
                let _ = writeln!(out, "  {i} -- {j};");
            }
            out.push_str("}\n");
            out
        }
        ExportFormat::Json => {
            serde_json::to_string_pretty(&GraphJson::from(g)).expect("graph JSON is serializable")
        }
        ExportFormat::CsvEdges => {
            let mut out = String::new();
            for (i, j) in g.edges() {
                let _ = writeln!(out, "{i},{j}");
            }
            out
        }
    }
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let data: GraphJson =
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    let order = data.vertices.len();
    let mut g = match (data.family, data.n) {
        (Some(family), Some(n)) => {
            let id = GroupId::new(family, n).map_err(|e| GraphError::Parse(e.to_string()))?;
            let labels = data
                .vertices
                .iter()
                .map(|s| id.parse(s))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| GraphError::Parse(e.to_string()))?;
            Graph::with_labels(id, labels)
        }
        (None, None) => Graph::empty(order),
        _ => {
            return Err(GraphError::Parse(
                "family and n must appear together".into(),
            ))
        }
    };
    for [i, j] in data.edges {
        if i >= j || j >= order {
            return Err(GraphError::Parse(format!("bad edge [{i}, {j}]")));
        }
        g.add_edge(i, j);
    }
    Ok(g)
}
