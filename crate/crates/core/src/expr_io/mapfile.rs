//! Line-oriented map and system files.
//!
//! ```text
//! # comment
//! name: triangular
//! vars: x y
//! F1 = x + y^3
//! F2 = y
//! ```
//!
//! Header and metadata lines have the form `key: value`; component lines
//! `LABEL = expr`. Map files label components `F1`..`Fn` in order. System
//! files use the same layout, each expression being an equation `expr = 0`;
//! their labels are free-form and may be omitted.

use std::collections::BTreeMap;

use super::parse::{is_identifier, parse_polynomial_at};
use super::print_polynomial;
use crate::error::{Error, Result};
use crate::polyring::{var_list, PolyMap, Polynomial, Vars};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapFile {
    pub variables: Vec<String>,
    pub components: Vec<String>,
    pub metadata: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub variables: Vec<String>,
    pub equations: Vec<String>,
    pub metadata: BTreeMap<String, String>,
}

struct Entry {
    line: usize,
    label: Option<String>,
    expr: String,
    expr_col: usize,
}

struct Document {
    vars: Vars,
    entries: Vec<Entry>,
    metadata: BTreeMap<String, String>,
}

fn line_err(line: usize, message: impl Into<String>) -> Error {
    Error::MapFile { line, message: message.into() }
}

fn parse_document(text: &str, require_labels: bool) -> Result<Document> {
    let mut vars: Option<Vars> = None;
    let mut entries = Vec::new();
    let mut metadata = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let colon = content.find(':');
        let equals = content.find('=');
        match (colon, equals) {
            (Some(c), e) if e.is_none_or(|e| c < e) => {
                let key = content[..c].trim();
                let value = content[c + 1..].trim();
                if !is_identifier(key) {
                    return Err(line_err(line, format!("invalid header key `{key}`")));
                }
                if key == "vars" {
                    if vars.is_some() {
                        return Err(line_err(line, "duplicate `vars:` header"));
                    }
                    let names: Vec<&str> = value.split_ascii_whitespace().collect();
                    if names.is_empty() {
                        return Err(line_err(line, "`vars:` header lists no variables"));
                    }
                    for (i, n) in names.iter().enumerate() {
                        if !is_identifier(n) {
                            return Err(line_err(line, format!("invalid variable name `{n}`")));
                        }
                        if names[..i].contains(n) {
                            return Err(line_err(line, format!("duplicate variable `{n}`")));
                        }
                    }
                    vars = Some(var_list(&names));
                } else {
                    metadata.insert(key.to_string(), value.to_string());
                }
            }
            (_, Some(e)) => {
                if vars.is_none() {
                    return Err(line_err(line, "expression before the `vars:` header"));
                }
                let label = content[..e].trim();
                if !is_identifier(label) {
                    return Err(line_err(line, format!("invalid component label `{label}`")));
                }
                let rest = &content[e + 1..];
                if rest.contains('=') {
                    return Err(line_err(line, "more than one `=` on a line"));
                }
                entries.push(Entry { line, label: Some(label.to_string()), expr: rest.to_string(), expr_col: e + 1 });
            }
            (None, None) => {
                if require_labels {
                    return Err(line_err(line, "expected `key: value` or `Fi = expression`"));
                }
                if vars.is_none() {
                    return Err(line_err(line, "expression before the `vars:` header"));
                }
                entries.push(Entry { line, label: None, expr: content.to_string(), expr_col: 0 });
            }
            (Some(_), None) => unreachable!("covered by the first arm"),
        }
    }
    let vars = vars.ok_or_else(|| line_err(text.lines().count().max(1), "missing `vars:` header"))?;
    Ok(Document { vars, entries, metadata })
}

fn parse_entries(doc: &Document) -> Result<Vec<Polynomial>> {
    doc.entries
        .iter()
        .map(|e| parse_polynomial_at(&e.expr, &doc.vars, e.line, e.expr_col).map_err(Error::from))
        .collect()
}

impl MapFile {
    pub fn parse(text: &str) -> Result<MapFile> {
        let doc = parse_document(text, true)?;
        if doc.entries.is_empty() {
            return Err(line_err(text.lines().count().max(1), "map file has no components"));
        }
        for (i, e) in doc.entries.iter().enumerate() {
            let want = format!("F{}", i + 1);
            if e.label.as_deref() != Some(want.as_str()) {
                return Err(line_err(e.line, format!("expected component label `{want}`")));
            }
        }
        parse_entries(&doc)?;
        Ok(MapFile {
            variables: doc.vars.to_vec(),
            components: doc.entries.iter().map(|e| e.expr.trim().to_string()).collect(),
            metadata: doc.metadata,
        })
    }

    pub fn from_map(map: &PolyMap) -> MapFile {
        MapFile {
            variables: map.vars().to_vec(),
            components: map.components().iter().map(print_polynomial).collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: &str, value: &str) -> MapFile {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_map(&self) -> Result<PolyMap> {
        let vars = var_list(&self.variables);
        let comps = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| parse_polynomial_at(c, &vars, i + 1, 0).map_err(Error::from))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(comps)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("vars: {}\n", self.variables.join(" ")));
        for (i, c) in self.components.iter().enumerate() {
            out.push_str(&format!("F{} = {}\n", i + 1, c));
        }
        out
    }
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<SystemFile> {
        let doc = parse_document(text, false)?;
        if doc.entries.is_empty() {
            return Err(line_err(text.lines().count().max(1), "system file has no equations"));
        }
        parse_entries(&doc)?;
        Ok(SystemFile {
            variables: doc.vars.to_vec(),
            equations: doc.entries.iter().map(|e| e.expr.trim().to_string()).collect(),
            metadata: doc.metadata,
        })
    }

    pub fn from_polynomials(polys: &[Polynomial]) -> Result<SystemFile> {
        let first = polys.first().ok_or_else(|| Error::InvalidArgument("empty equation system".into()))?;
        if polys.iter().any(|p| p.vars() != first.vars()) {
            return Err(Error::VariableMismatch);
        }
        Ok(SystemFile {
            variables: first.vars().to_vec(),
            equations: polys.iter().map(print_polynomial).collect(),
            metadata: BTreeMap::new(),
        })
    }

    pub fn with_metadata(mut self, key: &str, value: &str) -> SystemFile {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_polynomials(&self) -> Result<Vec<Polynomial>> {
        let vars = var_list(&self.variables);
        self.equations
            .iter()
            .enumerate()
            .map(|(i, c)| parse_polynomial_at(c, &vars, i + 1, 0).map_err(Error::from))
            .collect()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("vars: {}\n", self.variables.join(" ")));
        for (i, c) in self.equations.iter().enumerate() {
            out.push_str(&format!("E{} = {}\n", i + 1, c));
        }
        out
    }
}
