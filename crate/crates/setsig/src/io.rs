//! Text formats for signed graphs and valuations.
//!
//! Signed edge list: one edge per line as `u v s` with `s` either `+` or
//! `-`; an optional `vertices:` line pins vertex names (and their order)
//! before any edges, which is how isolated vertices survive a round trip;
//! lines beginning with `#` are comments. Vertex names are interned to
//! dense ids in first-appearance order.
//!
//! Valuation documents: a `ground: m` line followed by one `name: e1 e2 …`
//! line per vertex. The same document also has a JSON form, which is the
//! structured format of record. Serialization is byte-deterministic: names
//! are emitted in sorted order with fixed separators.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, VertexId};
use crate::signed::{Sign, SignedGraph};
use crate::valuation::{GroundSet, SetLabel, SetValuation, ValuationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected `u v sign`, found {fields} fields")]
    MalformedEdgeRecord { fields: usize },
    #[error("invalid sign `{0}` (expected + or -)")]
    InvalidSign(String),
    #[error("self-loop at `{0}` rejected")]
    SelfLoop(String),
    #[error("edge {{{0}, {1}}} appears with conflicting signs")]
    DuplicateEdgeConflict(String, String),
    #[error("duplicate vertex `{0}` in header")]
    DuplicateVertex(String),
    #[error("missing `ground:` line before labels")]
    MissingGround,
    #[error("invalid ground size `{0}`")]
    InvalidGround(String),
    #[error("expected `name: elements…`")]
    MalformedLabelRecord,
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("invalid element `{0}`")]
    InvalidElement(String),
    #[error("element {element} outside ground set 1..={size}")]
    ElementOutOfRange { element: u32, size: u32 },
    #[error("duplicate label line for `{0}`")]
    DuplicateLabelLine(String),
    #[error("vertices `{0}` and `{1}` carry the same label")]
    NotInjective(String, String),
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// Interning table mapping vertex names to dense ids in first-appearance
/// order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NameTable {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl NameTable {
    pub fn new() -> Self {
        NameTable::default()
    }

    /// Names `v0`, `v1`, … for graphs that were never given names.
    pub fn numbered(n: usize) -> Self {
        let mut table = NameTable::new();
        for v in 0..n {
            table.intern(&format!("v{v}"));
        }
        table
    }

    pub fn intern(&mut self, name: &str) -> VertexId {
        if let Some(&id) = self.index.get(name) {
            return id;
        }
        let id = self.names.len();
        self.names.push(name.to_string());
        self.index.insert(name.to_string(), id);
        id
    }

    pub fn get(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }
}

/// A parsed signed edge list: the graph, its name table, and how many
/// duplicate (consistently signed) edge records were dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraphDoc {
    pub signed: SignedGraph,
    pub names: NameTable,
    pub duplicate_edges: usize,
}

const VERTICES_DIRECTIVE: &str = "vertices:";

// Names must survive both formats: no whitespace (edge records are
// token-split), no ':' (label records split at the first colon, and this
// also keeps the `vertices:` directive unambiguous), no leading '#'.
fn check_name(line: usize, name: &str) -> Result<(), ParseError> {
    if name.is_empty()
        || name.starts_with('#')
        || name.contains(':')
        || name.chars().any(char::is_whitespace)
    {
        return Err(ParseError::new(
            line,
            ParseErrorKind::InvalidName(name.to_string()),
        ));
    }
    Ok(())
}

pub fn parse_signed_graph(text: &str) -> Result<SignedGraphDoc, ParseError> {
    let mut names = NameTable::new();
    let mut signature: HashMap<Edge, Sign> = HashMap::new();
    let mut order: Vec<Edge> = Vec::new();
    let mut duplicate_edges = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens[0] == VERTICES_DIRECTIVE {
            for &name in &tokens[1..] {
                check_name(line, name)?;
                if names.get(name).is_some() {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::DuplicateVertex(name.to_string()),
                    ));
                }
                names.intern(name);
            }
            continue;
        }
        if tokens.len() != 3 {
            return Err(ParseError::new(
                line,
                ParseErrorKind::MalformedEdgeRecord {
                    fields: tokens.len(),
                },
            ));
        }
        let (u_name, v_name, sign_token) = (tokens[0], tokens[1], tokens[2]);
        check_name(line, u_name)?;
        check_name(line, v_name)?;
        let sign = sign_token
            .chars()
            .next()
            .filter(|_| sign_token.len() == 1)
            .and_then(Sign::from_char)
            .ok_or_else(|| {
                ParseError::new(line, ParseErrorKind::InvalidSign(sign_token.to_string()))
            })?;
        if u_name == v_name {
            return Err(ParseError::new(
                line,
                ParseErrorKind::SelfLoop(u_name.to_string()),
            ));
        }
        let u = names.intern(u_name);
        let v = names.intern(v_name);
        let edge = Edge::new(u, v);
        match signature.get(&edge) {
            None => {
                signature.insert(edge, sign);
                order.push(edge);
            }
            Some(&existing) if existing == sign => duplicate_edges += 1,
            Some(_) => {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::DuplicateEdgeConflict(
                        u_name.to_string(),
                        v_name.to_string(),
                    ),
                ));
            }
        }
    }

    let pairs: Vec<(VertexId, VertexId)> = order.iter().map(|e| e.endpoints()).collect();
    let graph = Graph::build(names.len(), &pairs).expect("interned ids are in range and loop-free");
    let signed = SignedGraph::from_signature_map(graph, &signature)
        .expect("signature covers every parsed edge");
    Ok(SignedGraphDoc {
        signed,
        names,
        duplicate_edges,
    })
}

/// Deterministic signed edge-list text: a header naming every vertex in id
/// order, then edges in canonical order.
pub fn serialize_signed_graph(sg: &SignedGraph, names: &NameTable) -> String {
    let mut out = String::from(VERTICES_DIRECTIVE);
    for name in names.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for (e, s) in sg.edge_signs() {
        let (u, v) = e.endpoints();
        out.push_str(names.name(u));
        out.push(' ');
        out.push_str(names.name(v));
        out.push(' ');
        out.push(s.as_char());
        out.push('\n');
    }
    out
}

/// Ground-set size plus a name → sorted-elements map. This is the on-disk
/// shape shared by the text and JSON forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValuationDocument {
    pub ground: u32,
    pub labels: BTreeMap<String, Vec<u32>>,
}

impl ValuationDocument {
    /// Normalizes element lists and re-checks the invariants shared by both
    /// input syntaxes; `line_of` maps a vertex name to the line to blame.
    fn validate(&mut self, line_of: impl Fn(&str) -> usize) -> Result<(), ParseError> {
        let mut seen: HashMap<Vec<u32>, String> = HashMap::new();
        for (name, elems) in &mut self.labels {
            let line = line_of(name);
            check_name(line, name)?;
            elems.sort_unstable();
            elems.dedup();
            for &e in elems.iter() {
                if e == 0 || e > self.ground {
                    return Err(ParseError::new(
                        line,
                        ParseErrorKind::ElementOutOfRange {
                            element: e,
                            size: self.ground,
                        },
                    ));
                }
            }
            if let Some(other) = seen.get(elems.as_slice()) {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::NotInjective(other.clone(), name.clone()),
                ));
            }
            seen.insert(elems.clone(), name.clone());
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let mut doc: ValuationDocument = serde_json::from_str(text).map_err(|e| {
            ParseError::new(e.line(), ParseErrorKind::Json(e.to_string()))
        })?;
        doc.validate(|_| 0)?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serializes");
        out.push('\n');
        out
    }

    /// Builds the document for a valuation, naming vertices via the table.
    pub fn from_valuation(val: &SetValuation, names: &NameTable) -> Self {
        let labels = val
            .labels()
            .iter()
            .enumerate()
            .map(|(v, label)| (names.name(v).to_string(), label.elements().to_vec()))
            .collect();
        ValuationDocument {
            ground: val.ground().size(),
            labels,
        }
    }

    /// Binds the document to a graph's name table, producing labels in
    /// vertex-id order. Every named vertex must be labeled and vice versa.
    pub fn to_valuation(&self, names: &NameTable) -> Result<SetValuation, BindingError> {
        let ground = GroundSet::new(self.ground).map_err(BindingError::Valuation)?;
        for name in self.labels.keys() {
            if names.get(name).is_none() {
                return Err(BindingError::UnknownVertex(name.clone()));
            }
        }
        let labels: Vec<SetLabel> = names
            .names()
            .iter()
            .map(|name| {
                let elems = self
                    .labels
                    .get(name)
                    .ok_or_else(|| BindingError::MissingLabelFor(name.clone()))?;
                ground
                    .label(elems.iter().copied())
                    .map_err(BindingError::Valuation)
            })
            .collect::<Result<_, _>>()?;
        SetValuation::new(ground, labels).map_err(BindingError::Valuation)
    }
}

impl fmt::Display for ValuationDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ground: {}", self.ground)?;
        for (name, elems) in &self.labels {
            write!(f, "{name}:")?;
            for e in elems {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BindingError {
    #[error("no label for vertex `{0}`")]
    MissingLabelFor(String),
    #[error("label given for unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error(transparent)]
    Valuation(ValuationError),
}

pub fn parse_valuation(text: &str) -> Result<ValuationDocument, ParseError> {
    let mut ground: Option<u32> = None;
    let mut labels: BTreeMap<String, Vec<u32>> = BTreeMap::new();
    let mut line_numbers: HashMap<String, usize> = HashMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (head, rest) = trimmed
            .split_once(':')
            .ok_or_else(|| ParseError::new(line, ParseErrorKind::MalformedLabelRecord))?;
        let head = head.trim();
        if ground.is_none() {
            if head != "ground" {
                return Err(ParseError::new(line, ParseErrorKind::MissingGround));
            }
            let size_token = rest.trim();
            let size: u32 = size_token
                .parse()
                .map_err(|_| ParseError::new(line, ParseErrorKind::InvalidGround(size_token.to_string())))?;
            if size == 0 {
                return Err(ParseError::new(
                    line,
                    ParseErrorKind::InvalidGround(size_token.to_string()),
                ));
            }
            ground = Some(size);
            continue;
        }
        let name = head;
        if labels.contains_key(name) {
            return Err(ParseError::new(
                line,
                ParseErrorKind::DuplicateLabelLine(name.to_string()),
            ));
        }
        let mut elems = Vec::new();
        for token in rest.split_whitespace() {
            let e: u32 = token
                .parse()
                .map_err(|_| ParseError::new(line, ParseErrorKind::InvalidElement(token.to_string())))?;
            elems.push(e);
        }
        line_numbers.insert(name.to_string(), line);
        labels.insert(name.to_string(), elems);
    }

    let ground = ground.ok_or_else(|| ParseError::new(text.lines().count(), ParseErrorKind::MissingGround))?;
    let mut doc = ValuationDocument { ground, labels };
    doc.validate(|name| line_numbers.get(name).copied().unwrap_or(0))?;
    Ok(doc)
}

/// Deterministic flat text form; [`ValuationDocument::to_json`] is the
/// structured equivalent.
pub fn serialize_valuation(doc: &ValuationDocument) -> String {
    doc.to_string()
}
