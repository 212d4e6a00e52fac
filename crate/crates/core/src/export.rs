//! JSON, CSV and DOT forms of the library's objects.

use std::fmt::Write;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::actions::{DiagramVector, GeneralTwoRowTableau, TabloidVector};
use crate::diagrams::{CupDiagram, Matching};
use crate::error::{Error, Result};
use crate::resolution::{ResolutionGraph, SinkMultiset};
use crate::transition::{TransitionMatrix, LINEAR_EXTENSION};
use crate::young::{StandardTableau, TableauGraph};

fn parse_int(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Parse(format!("{s:?} is not a decimal integer")))
}

#[derive(Serialize, Deserialize)]
struct TabloidTerm {
    top: Vec<usize>,
    bottom: Vec<usize>,
    coeff: String,
}

/// `[{"top": [...], "bottom": [...], "coeff": "-3"}, ...]`
pub fn tabloid_vector_to_json(v: &TabloidVector) -> Value {
    let terms: Vec<TabloidTerm> = v
        .iter()
        .map(|(k, c)| TabloidTerm {
            top: k.top(),
            bottom: k.bottom(),
            coeff: c.to_string(),
        })
        .collect();
    serde_json::to_value(terms).expect("plain data")
}

/// Inverse of [`tabloid_vector_to_json`]; non-canonical keys are folded
/// into canonical form with their sign.
pub fn tabloid_vector_from_json(value: &Value) -> Result<TabloidVector> {
    let terms: Vec<TabloidTerm> =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut v = TabloidVector::zero();
    for term in terms {
        if term.top.len() != term.bottom.len() {
            return Err(Error::Parse("rows of unequal length".into()));
        }
        let g = GeneralTwoRowTableau::new(term.top.into_iter().zip(term.bottom).collect())?;
        let (sign, key) = g.canonical();
        v.add_term(key, parse_int(&term.coeff)? * sign);
    }
    Ok(v)
}

#[derive(Serialize, Deserialize)]
struct DiagramTerm {
    arcs: Vec<(usize, usize)>,
    coeff: String,
}

/// `[{"arcs": [[1,2],[3,4]], "coeff": "1"}, ...]`
pub fn diagram_vector_to_json(v: &DiagramVector) -> Value {
    let terms: Vec<DiagramTerm> = v
        .iter()
        .map(|(m, c)| DiagramTerm {
            arcs: m.arcs(),
            coeff: c.to_string(),
        })
        .collect();
    serde_json::to_value(terms).expect("plain data")
}

pub fn diagram_vector_from_json(value: &Value) -> Result<DiagramVector> {
    let terms: Vec<DiagramTerm> =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut v = DiagramVector::zero();
    for term in terms {
        v.add_term(
            Matching::from_arcs(2 * term.arcs.len(), &term.arcs)?,
            parse_int(&term.coeff)?,
        );
    }
    Ok(v)
}

#[derive(Serialize, Deserialize)]
struct SinkEntry {
    arcs: Vec<(usize, usize)>,
    multiplicity: u64,
}

pub fn sinks_to_json(s: &SinkMultiset) -> Value {
    let entries: Vec<SinkEntry> = s
        .counts
        .iter()
        .map(|(w, &multiplicity)| SinkEntry {
            arcs: w.matching().arcs(),
            multiplicity,
        })
        .collect();
    serde_json::to_value(entries).expect("plain data")
}

pub fn sinks_from_json(value: &Value) -> Result<SinkMultiset> {
    let entries: Vec<SinkEntry> =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let mut out = SinkMultiset::default();
    for e in entries {
        if e.multiplicity == 0 {
            return Err(Error::Parse("multiplicities are positive".into()));
        }
        let w = CupDiagram::from_arcs(2 * e.arcs.len(), &e.arcs)?;
        *out.counts.entry(w).or_default() += e.multiplicity;
    }
    Ok(out)
}

fn int_value(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(small) => Value::from(small),
        Err(_) => Value::String(x.to_string()),
    }
}

fn value_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(num) => num
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Parse(format!("{num} is not an integer"))),
        Value::String(s) => parse_int(s),
        other => Err(Error::Parse(format!("{other} is not an integer"))),
    }
}

/// Square integer matrix as a JSON array of rows; entries beyond `i64` are
/// written as decimal strings.
pub fn int_matrix_to_json(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| Value::Array(r.iter().map(int_value).collect()))
            .collect(),
    )
}

pub fn int_matrix_from_json(value: &Value) -> Result<Vec<Vec<BigInt>>> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of rows".into()))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("expected a row array".into()))?
                .iter()
                .map(value_int)
                .collect()
        })
        .collect()
}

/// `{"n": .., "order": .., "index": [tableaux], "entries": [[..]]}`
pub fn matrix_to_json(m: &TransitionMatrix, entries: &[Vec<BigInt>]) -> Value {
    serde_json::json!({
        "n": m.n,
        "order": LINEAR_EXTENSION,
        "index": m.index,
        "entries": int_matrix_to_json(entries),
    })
}

pub fn matrix_from_json(value: &Value) -> Result<TransitionMatrix> {
    let n = value["n"]
        .as_u64()
        .ok_or_else(|| Error::Parse("missing n".into()))? as usize;
    let index: Vec<StandardTableau> =
        serde_json::from_value(value["index"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let entries = int_matrix_from_json(&value["entries"])?;
    if entries.len() != index.len() || entries.iter().any(|r| r.len() != index.len()) {
        return Err(Error::Parse("entries do not match the index size".into()));
    }
    Ok(TransitionMatrix { n, index, entries })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A `#` comment naming the order, a header of column tableaux, then one
/// plain row of decimal integers per row tableau in the same order.
pub fn matrix_to_csv(m: &TransitionMatrix, entries: &[Vec<BigInt>]) -> String {
    let mut out = format!("# order: {LINEAR_EXTENSION}\n");
    let header: Vec<String> = m.index.iter().map(|t| csv_field(&t.row_word())).collect();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in entries {
        let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// Whitespace-aligned grid, no labels.
pub fn matrix_to_text(entries: &[Vec<BigInt>]) -> String {
    let width = entries
        .iter()
        .flatten()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in entries {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Vertices labelled by row words, edges by `s_i`.
pub fn tableau_graph_to_dot(g: &TableauGraph) -> String {
    let mut out = format!("digraph tableaux_{} {{\n  rankdir=BT;\n", g.n());
    for (k, t) in g.vertices().iter().enumerate() {
        let _ = writeln!(out, "  t{k} [label=\"{}\"];", t.row_word());
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "  t{} -> t{} [label=\"s_{}\"];",
            e.source, e.target, e.generator
        );
    }
    out.push_str("}\n");
    out
}

/// Nodes labelled by arc lists, edges by `VV` / `V`.
pub fn resolution_graph_to_dot(g: &ResolutionGraph) -> String {
    let sinks = g.sink_indices();
    let mut out = String::from("digraph resolution {\n");
    for (k, m) in g.nodes.iter().enumerate() {
        let shape = if sinks.contains(&k) {
            ", shape=box"
        } else {
            ""
        };
        let _ = writeln!(out, "  m{k} [label=\"{m}\"{shape}];");
    }
    for (s, mv, t) in &g.edges {
        let _ = writeln!(out, "  m{s} -> m{t} [label=\"{}\"];", mv.kind);
    }
    out.push_str("}\n");
    out
}
