//! File formats: edge lists, JSON for graphs, set families and reconfiguration
//! graphs, and Graphviz DOT export.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`. Blank lines and lines
//! starting with `#` are ignored. Writers emit edges in lexicographic order so
//! output is byte-stable.

use std::fmt::Write as _;

use pdrecon_core::properties::{FamilyRole, PropertyKind, SetFamily};
use pdrecon_core::recon::{ReconGraph, ReconModel};
use pdrecon_core::{Adjacency, Graph, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("unknown {what} `{value}`")]
    Unknown { what: &'static str, value: String },
    #[error(transparent)]
    Graph(#[from] pdrecon_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, text) in lines {
        let (u, v) = two_numbers(line, text)?;
        if u == v {
            return Err(pdrecon_core::Error::SelfLoop { vertex: u }.into());
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(FormatError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, &edges)?)
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), FormatError> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize, FormatError> {
        let tok = it.next().ok_or_else(|| parse_err(line, "expected two integers"))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("`{tok}` is not a non-negative integer")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(line, "expected exactly two integers"));
    }
    Ok(pair)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDto {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl From<&Graph> for GraphDto {
    fn from(g: &Graph) -> Self {
        GraphDto {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            name: g.name().map(str::to_owned),
        }
    }
}

impl TryFrom<GraphDto> for Graph {
    type Error = FormatError;

    fn try_from(dto: GraphDto) -> Result<Graph, FormatError> {
        let mut seen = std::collections::HashSet::new();
        for &[u, v] in &dto.edges {
            if u != v && !seen.insert((u.min(v), u.max(v))) {
                return Err(FormatError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        let edges: Vec<(usize, usize)> = dto.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::new(dto.n, &edges)?;
        Ok(match dto.name {
            Some(name) => g.with_name(name),
            None => g,
        })
    }
}

pub fn write_graph_json(g: &Graph) -> String {
    serde_json::to_string(&GraphDto::from(g)).expect("plain data serializes")
}

pub fn read_graph_json(text: &str) -> Result<Graph, FormatError> {
    let dto: GraphDto = serde_json::from_str(text)?;
    Graph::try_from(dto)
}

/// Reads either format; JSON is recognized by a leading `{`.
pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    if text.trim_start().starts_with('{') {
        read_graph_json(text)
    } else {
        read_edge_list(text)
    }
}

fn set_to_vec(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn set_from_vec(order: usize, members: &[usize]) -> Result<VertexSet, FormatError> {
    for &v in members {
        if v >= order {
            return Err(pdrecon_core::Error::VertexOutOfRange { vertex: v, order }.into());
        }
    }
    Ok(VertexSet::from_vertices(members.iter().copied()))
}

fn kind_name(kind: Option<PropertyKind>) -> &'static str {
    kind.map_or("vertex_cover", PropertyKind::name)
}

fn parse_kind(s: &str) -> Result<Option<PropertyKind>, FormatError> {
    if s == "vertex_cover" {
        return Ok(None);
    }
    PropertyKind::from_name(s).map(Some).ok_or_else(|| FormatError::Unknown {
        what: "property kind",
        value: s.to_owned(),
    })
}

fn role_name(role: FamilyRole) -> String {
    match role {
        FamilyRole::Minimal => "minimal".into(),
        FamilyRole::Minimum => "minimum".into(),
        FamilyRole::AllUpTo(k) => format!("up_to:{k}"),
    }
}

fn parse_role(s: &str) -> Result<FamilyRole, FormatError> {
    let unknown = || FormatError::Unknown {
        what: "family role",
        value: s.to_owned(),
    };
    match s {
        "minimal" => Ok(FamilyRole::Minimal),
        "minimum" => Ok(FamilyRole::Minimum),
        _ => {
            let k = s.strip_prefix("up_to:").ok_or_else(unknown)?;
            k.parse().map(FamilyRole::AllUpTo).map_err(|_| unknown())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetFamilyDto {
    pub kind: String,
    pub role: String,
    pub sets: Vec<Vec<usize>>,
}

pub fn write_family_json(f: &SetFamily) -> String {
    let dto = SetFamilyDto {
        kind: kind_name(f.kind).into(),
        role: role_name(f.role),
        sets: f.sets.iter().map(|&s| set_to_vec(s)).collect(),
    };
    serde_json::to_string(&dto).expect("plain data serializes")
}

/// Sets are checked against `order` and returned in ascending mask order.
pub fn read_family_json(text: &str, order: usize) -> Result<SetFamily, FormatError> {
    let dto: SetFamilyDto = serde_json::from_str(text)?;
    let mut sets = dto
        .sets
        .iter()
        .map(|s| set_from_vec(order, s))
        .collect::<Result<Vec<_>, _>>()?;
    sets.sort_unstable();
    sets.dedup();
    Ok(SetFamily {
        sets,
        role: parse_role(&dto.role)?,
        kind: parse_kind(&dto.kind)?,
    })
}

pub fn model_name(model: ReconModel) -> String {
    match model {
        ReconModel::TarFull => "tar".into(),
        ReconModel::TarK(k) => format!("tar_k:{k}"),
        ReconModel::Tj => "tj".into(),
    }
}

pub fn parse_model(s: &str) -> Result<ReconModel, FormatError> {
    let unknown = || FormatError::Unknown {
        what: "reconfiguration model",
        value: s.to_owned(),
    };
    match s {
        "tar" => Ok(ReconModel::TarFull),
        "tj" => Ok(ReconModel::Tj),
        _ => {
            let k = s.strip_prefix("tar_k:").ok_or_else(unknown)?;
            k.parse().map(ReconModel::TarK).map_err(|_| unknown())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReconDto {
    pub base: GraphDto,
    pub model: String,
    pub kind: String,
    pub verts: Vec<Vec<usize>>,
    pub edges: Vec<[usize; 2]>,
}

pub fn write_recon_json(r: &ReconGraph) -> String {
    let dto = ReconDto {
        base: GraphDto::from(r.base()),
        model: model_name(r.model()),
        kind: r.kind().name().into(),
        verts: r.verts().iter().map(|&s| set_to_vec(s)).collect(),
        edges: r.edges().into_iter().map(|(p, q)| [p, q]).collect(),
    };
    serde_json::to_string(&dto).expect("plain data serializes")
}

/// Parses and revalidates against the model's construction rule.
pub fn read_recon_json(text: &str) -> Result<ReconGraph, FormatError> {
    let dto: ReconDto = serde_json::from_str(text)?;
    let base = Graph::try_from(dto.base)?;
    let kind = parse_kind(&dto.kind)?.ok_or_else(|| FormatError::Unknown {
        what: "property kind",
        value: dto.kind.clone(),
    })?;
    let model = parse_model(&dto.model)?;
    let verts = dto
        .verts
        .iter()
        .map(|s| set_from_vec(base.order(), s))
        .collect::<Result<Vec<_>, _>>()?;
    let edges: Vec<(usize, usize)> = dto.edges.iter().map(|&[p, q]| (p, q)).collect();
    Ok(ReconGraph::from_parts(base, kind, model, verts, &edges)?)
}

fn dot_id(name: Option<&str>) -> String {
    let raw = name.unwrap_or("G");
    format!("\"{}\"", raw.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn write_graph_dot(g: &Graph) -> String {
    let mut out = format!("graph {} {{\n", dot_id(g.name()));
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Nodes are positions, labeled with their vertex sets.
pub fn write_recon_dot(r: &ReconGraph) -> String {
    let title = format!(
        "{} {} {}",
        model_name(r.model()),
        r.kind().name(),
        r.base().name().unwrap_or("G")
    );
    let mut out = format!("graph {} {{\n", dot_id(Some(&title)));
    for (p, s) in r.verts().iter().enumerate() {
        let _ = writeln!(out, "  {p} [label=\"{s}\"];");
    }
    for (p, q) in r.edges() {
        let _ = writeln!(out, "  {p} -- {q};");
    }
    out.push_str("}\n");
    out
}

/// Edge list of the reconfiguration graph on positions `0..order`.
pub fn write_recon_edge_list(r: &ReconGraph) -> String {
    let edges = r.edges();
    let mut out = format!("{} {}\n", r.order(), edges.len());
    for (p, q) in edges {
        let _ = writeln!(out, "{p} {q}");
    }
    out
}
