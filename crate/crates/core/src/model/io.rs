//! JSON file formats for periodic codes and finite graphs.
//!
//! Code file: `{"grid": "square"|"hex"|"triangular"|"king"|{"lattice": n},
//! "period": [[..], ..], "codewords": [[..], ..]}` where each entry of
//! `period` is one period vector (a column of the period matrix).
//!
//! Graph file: `{"n": int, "edges": [[a, b], ..], "labels": [[..], ..]}`
//! with `labels` optional. Unknown fields are rejected in both.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{GridKind, Vertex};
use crate::model::code::PeriodicCode;
use crate::model::graph::FiniteGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub grid: GridKind,
    pub period: Vec<Vec<i64>>,
    pub codewords: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Vec<i64>>>,
}

/// Either kind of file, told apart by its fields.
#[derive(Clone, Debug)]
pub enum Artifact {
    Code(PeriodicCode),
    Graph(FiniteGraph),
}

impl From<&PeriodicCode> for CodeFile {
    fn from(code: &PeriodicCode) -> Self {
        CodeFile {
            grid: code.grid(),
            period: code.period().to_vec(),
            codewords: code.base().iter().map(|v| v.0.clone()).collect(),
        }
    }
}

impl CodeFile {
    pub fn into_code(self) -> Result<PeriodicCode> {
        let words: Vec<Vertex> = self.codewords.into_iter().map(Vertex).collect();
        PeriodicCode::new(self.grid, &self.period, &words)
    }
}

impl From<&FiniteGraph> for GraphFile {
    fn from(g: &FiniteGraph) -> Self {
        GraphFile {
            n: g.n(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
            labels: g.labels().map(|ls| ls.iter().map(|l| l.0.clone()).collect()),
        }
    }
}

impl GraphFile {
    pub fn into_graph(self) -> Result<FiniteGraph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = FiniteGraph::from_edges(self.n, &edges)?;
        match self.labels {
            Some(labels) => g.with_labels(labels.into_iter().map(Vertex).collect()),
            None => Ok(g),
        }
    }
}

fn format_err(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

pub fn code_to_json(code: &PeriodicCode) -> String {
    serde_json::to_string_pretty(&CodeFile::from(code)).expect("code serializes")
}

pub fn code_from_json(text: &str) -> Result<PeriodicCode> {
    serde_json::from_str::<CodeFile>(text)
        .map_err(format_err)?
        .into_code()
}

pub fn graph_to_json(g: &FiniteGraph) -> String {
    serde_json::to_string_pretty(&GraphFile::from(g)).expect("graph serializes")
}

pub fn graph_from_json(text: &str) -> Result<FiniteGraph> {
    serde_json::from_str::<GraphFile>(text)
        .map_err(format_err)?
        .into_graph()
}

pub fn artifact_from_json(text: &str) -> Result<Artifact> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(format_err)?;
    let is_code = value.get("grid").is_some();
    if is_code {
        let file: CodeFile = serde_json::from_value(value).map_err(format_err)?;
        Ok(Artifact::Code(file.into_code()?))
    } else {
        let file: GraphFile = serde_json::from_value(value).map_err(format_err)?;
        Ok(Artifact::Graph(file.into_graph()?))
    }
}

pub fn read_artifact(path: &Path) -> Result<Artifact> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    artifact_from_json(&text)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_json_shapes() {
        let f: CodeFile = serde_json::from_str(
            r#"{"grid": {"lattice": 3}, "period": [[2,0,0],[0,2,0],[0,0,2]], "codewords": [[0,0,0],[1,1,1]]}"#,
        )
        .unwrap();
        assert_eq!(f.grid, GridKind::Lattice(3));
        let s: CodeFile =
            serde_json::from_str(r#"{"grid": "hex", "period": [[2,0],[0,2]], "codewords": []}"#)
                .unwrap();
        assert_eq!(s.grid, GridKind::Hex);
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains(r#""grid":"hex""#));
    }

    #[test]
    fn unknown_fields_rejected() {
        let err = code_from_json(
            r#"{"grid": "square", "period": [[1,0],[0,1]], "codewords": [[0,0]], "extra": 1}"#,
        );
        assert!(matches!(err, Err(Error::Format(_))));
        assert!(graph_from_json(r#"{"n": 2, "edges": [], "weights": []}"#).is_err());
    }

    #[test]
    fn loader_canonicalizes_and_validates() {
        let code =
            code_from_json(r#"{"grid": "square", "period": [[4,0],[0,1]], "codewords": [[5,0]]}"#)
                .unwrap();
        assert_eq!(code.base(), &[Vertex::new(vec![1, 0])]);
        assert!(code_from_json(r#"{"grid": "hex", "period": [[3,0],[0,2]], "codewords": []}"#).is_err());
        assert!(code_from_json(r#"{"grid": {"lattice": 0}, "period": [], "codewords": []}"#).is_err());
    }

    #[test]
    fn artifact_detection() {
        let g = FiniteGraph::cycle(4);
        match artifact_from_json(&graph_to_json(&g)).unwrap() {
            Artifact::Graph(h) => assert_eq!(h, g),
            Artifact::Code(_) => panic!("expected graph"),
        }
    }
}
