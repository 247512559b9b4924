//! Text and JSON documents for structures and age catalogs.
//!
//! One structure per text document:
//!
//! ```text
//! signature: arc/2, P0/1, P1/1
//! size: 3
//! arc: (0 1), (1 2), (2 0)
//! P0: (0), (1)
//! P1: (2)
//! ```
//!
//! The JSON rendering carries the same fields and is accepted and emitted
//! interchangeably; emission is deterministic in both formats, so a parse
//! followed by an emit is byte-stable.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::catalog::AgeCatalog;
use crate::structure::{Signature, Structure};
use crate::{Error, Result};

pub const CATALOG_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct SymbolDoc {
    name: String,
    arity: usize,
}

#[derive(Serialize, Deserialize)]
struct RelationDoc {
    symbol: String,
    tuples: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct StructureDoc {
    signature: Vec<SymbolDoc>,
    size: usize,
    relations: Vec<RelationDoc>,
}

impl StructureDoc {
    fn of(s: &Structure) -> StructureDoc {
        StructureDoc {
            signature: s
                .signature()
                .symbols()
                .iter()
                .map(|sym| SymbolDoc { name: sym.name.clone(), arity: sym.arity })
                .collect(),
            size: s.size(),
            relations: s
                .signature()
                .symbols()
                .iter()
                .enumerate()
                .map(|(i, sym)| RelationDoc {
                    symbol: sym.name.clone(),
                    tuples: s.relation(i).iter().cloned().collect(),
                })
                .collect(),
        }
    }

    fn build(self) -> Result<Structure> {
        let signature =
            Signature::new(self.signature.into_iter().map(|s| (s.name, s.arity)).collect())?;
        let mut relations: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); signature.len()];
        for rel in self.relations {
            let idx = signature.index_of(&rel.symbol).ok_or_else(|| {
                Error::InvalidInput(format!("relation for unknown symbol {}", rel.symbol))
            })?;
            for t in rel.tuples {
                relations[idx].insert(t);
            }
        }
        Structure::new(signature, self.size, relations)
    }
}

/// Deterministic text rendering.
pub fn to_text(s: &Structure) -> String {
    let mut out = String::new();
    let sig_line: Vec<String> = s
        .signature()
        .symbols()
        .iter()
        .map(|sym| format!("{}/{}", sym.name, sym.arity))
        .collect();
    out.push_str(&format!("signature: {}\n", sig_line.join(", ")));
    out.push_str(&format!("size: {}\n", s.size()));
    for (i, sym) in s.signature().symbols().iter().enumerate() {
        let tuples: Vec<String> = s
            .relation(i)
            .iter()
            .map(|t| {
                let entries: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                format!("({})", entries.join(" "))
            })
            .collect();
        if tuples.is_empty() {
            out.push_str(&format!("{}:\n", sym.name));
        } else {
            out.push_str(&format!("{}: {}\n", sym.name, tuples.join(", ")));
        }
    }
    out
}

pub fn to_json(s: &Structure) -> String {
    serde_json::to_string_pretty(&StructureDoc::of(s)).expect("structure serializes")
}

pub fn to_json_value(s: &Structure) -> serde_json::Value {
    serde_json::to_value(StructureDoc::of(s)).expect("structure serializes")
}

pub fn from_json(input: &str) -> Result<Structure> {
    let doc: StructureDoc = serde_json::from_str(input)?;
    doc.build()
}

/// Parse a text document. Line numbers in errors are 1-based and relative
/// to the given `line_offset`.
fn from_text_at(input: &str, line_offset: usize) -> Result<Structure> {
    let err = |line: usize, msg: String| Error::Parse { line: line + line_offset, msg };
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.len() < 2 {
        return Err(err(1, "expected signature and size lines".into()));
    }
    let (sig_no, sig_line) = lines[0];
    let sig_body = sig_line
        .strip_prefix("signature:")
        .ok_or_else(|| err(sig_no, format!("expected `signature:`, got {sig_line:?}")))?;
    let mut symbols = Vec::new();
    let sig_body = sig_body.trim();
    if !sig_body.is_empty() {
        for part in sig_body.split(',') {
            let part = part.trim();
            let (name, arity) = part
                .split_once('/')
                .ok_or_else(|| err(sig_no, format!("expected name/arity, got {part:?}")))?;
            let arity: usize = arity
                .trim()
                .parse()
                .map_err(|e| err(sig_no, format!("bad arity in {part:?}: {e}")))?;
            symbols.push((name.trim().to_string(), arity));
        }
    }
    let signature = Signature::new(symbols)?;

    let (size_no, size_line) = lines[1];
    let size: usize = size_line
        .strip_prefix("size:")
        .ok_or_else(|| err(size_no, format!("expected `size:`, got {size_line:?}")))?
        .trim()
        .parse()
        .map_err(|e| err(size_no, format!("bad size: {e}")))?;

    let mut s = Structure::empty(signature.clone(), size);
    for &(no, line) in &lines[2..] {
        let (name, body) = line
            .split_once(':')
            .ok_or_else(|| err(no, format!("expected `symbol: tuples`, got {line:?}")))?;
        let idx = signature
            .index_of(name.trim())
            .ok_or_else(|| err(no, format!("unknown symbol {:?}", name.trim())))?;
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        for tuple_src in body.split(',') {
            let tuple_src = tuple_src.trim();
            let inner = tuple_src
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| err(no, format!("expected (v1 v2 ...), got {tuple_src:?}")))?;
            let mut tuple = Vec::new();
            for v in inner.split_whitespace() {
                tuple.push(
                    v.parse::<usize>()
                        .map_err(|e| err(no, format!("bad element {v:?}: {e}")))?,
                );
            }
            s.insert(idx, tuple)
                .map_err(|e| err(no, format!("invalid tuple: {e}")))?;
        }
    }
    Ok(s)
}

pub fn from_text(input: &str) -> Result<Structure> {
    from_text_at(input, 0)
}

/// Accept either rendering, sniffing on the first non-space character.
pub fn from_str_any(input: &str) -> Result<Structure> {
    match input.trim_start().chars().next() {
        Some('{') => from_json(input),
        _ => from_text(input),
    }
}

/// Catalog file: a header followed by the member documents in catalog
/// order, separated by blank lines.
pub fn catalog_to_text(cat: &AgeCatalog) -> String {
    let mut out = String::new();
    out.push_str(&format!("catalog-version: {CATALOG_FORMAT_VERSION}\n"));
    out.push_str(&format!("family: {}\n", cat.family_name()));
    out.push_str(&format!("bound: {}\n", cat.bound()));
    out.push_str(&format!("count: {}\n", cat.len()));
    for (_, member) in cat.members() {
        out.push('\n');
        out.push_str(&to_text(member));
    }
    out
}

pub fn catalog_from_text(input: &str) -> Result<AgeCatalog> {
    let mut blocks = input.split("\n\n");
    let header = blocks
        .next()
        .ok_or_else(|| Error::Parse { line: 1, msg: "empty catalog file".into() })?;
    let mut version = None;
    let mut family = None;
    let mut bound = None;
    let mut count = None;
    for (i, line) in header.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| Error::Parse {
            line: i + 1,
            msg: format!("expected `key: value`, got {line:?}"),
        })?;
        let value = value.trim();
        match key.trim() {
            "catalog-version" => version = Some(value.parse::<u32>().map_err(|e| Error::Parse {
                line: i + 1,
                msg: format!("bad version: {e}"),
            })?),
            "family" => family = Some(value.to_string()),
            "bound" => bound = Some(value.parse::<usize>().map_err(|e| Error::Parse {
                line: i + 1,
                msg: format!("bad bound: {e}"),
            })?),
            "count" => count = Some(value.parse::<usize>().map_err(|e| Error::Parse {
                line: i + 1,
                msg: format!("bad count: {e}"),
            })?),
            other => {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: format!("unknown header key {other:?}"),
                })
            }
        }
    }
    let version = version.ok_or_else(|| Error::Parse { line: 1, msg: "missing catalog-version".into() })?;
    if version != CATALOG_FORMAT_VERSION {
        return Err(Error::InvalidInput(format!(
            "catalog format version {version} (expected {CATALOG_FORMAT_VERSION})"
        )));
    }
    let family = family.ok_or_else(|| Error::Parse { line: 1, msg: "missing family".into() })?;
    let bound = bound.ok_or_else(|| Error::Parse { line: 1, msg: "missing bound".into() })?;

    let mut members = Vec::new();
    for block in blocks {
        if block.trim().is_empty() {
            continue;
        }
        members.push(from_text(block)?);
    }
    if let Some(count) = count {
        if members.len() != count {
            return Err(Error::Integrity(format!(
                "catalog header promises {count} members, found {}",
                members.len()
            )));
        }
    }
    AgeCatalog::from_members(family, bound, members)
}
