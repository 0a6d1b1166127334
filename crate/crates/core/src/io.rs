//! Graph JSON and DOT export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::ktree::{BuildStep, KTreeCertificate};

/// On-disk graph format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<Vertex, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub build_order: Option<Vec<BuildStep>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph, cert: Option<&KTreeCertificate>) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().clone(),
            k: cert.map(|c| c.k),
            build_order: cert.map(|c| c.build_order.clone()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(Vertex, Vertex)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let mut g = Graph::from_edges(self.n, &edges)?;
        for (&v, tag) in &self.labels {
            if v >= self.n {
                return Err(Error::VertexOutOfRange(v));
            }
            g.set_label(v, tag.clone());
        }
        Ok(g)
    }

    /// The k-tree certificate, if both `k` and `build_order` are present. Base
    /// vertices are those never attached.
    pub fn certificate(&self) -> Option<KTreeCertificate> {
        let k = self.k?;
        let build_order = self.build_order.clone()?;
        let mut attached = vec![false; self.n];
        for s in &build_order {
            if let Some(a) = attached.get_mut(s.vertex) {
                *a = true;
            }
        }
        let base = (0..self.n).filter(|&v| !attached[v]).collect();
        Some(KTreeCertificate { k, base, build_order })
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson::from_graph(&g, None)
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(raw: GraphJson) -> Result<Graph> {
        raw.to_graph()
    }
}

pub fn to_json(g: &Graph, cert: Option<&KTreeCertificate>) -> String {
    serde_json::to_string(&GraphJson::from_graph(g, cert)).expect("graph serialises")
}

pub fn to_json_pretty(g: &Graph, cert: Option<&KTreeCertificate>) -> String {
    serde_json::to_string_pretty(&GraphJson::from_graph(g, cert)).expect("graph serialises")
}

/// Parses Graph JSON; a certificate that is present must replay to the graph.
pub fn from_json(s: &str) -> Result<(Graph, Option<KTreeCertificate>)> {
    let raw: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let g = raw.to_graph()?;
    let cert = raw.certificate();
    if let Some(c) = &cert {
        if !c.verify(&g) {
            return Err(Error::Parse("build_order does not reproduce the edge set".into()));
        }
    }
    Ok((g, cert))
}

/// Graphviz rendering; labelled vertices show `id:tag` and white ones are filled.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        match g.label(v) {
            Some(tag) => {
                let style = if tag == "white" { ", style=filled, fillcolor=white" } else { "" };
                let _ = writeln!(out, "  {v} [label=\"{v}:{}\"{style}];", tag.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
