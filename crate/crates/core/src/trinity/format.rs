//! Line-oriented trinity files.
//!
//! ```text
//! genus 0
//! outer 1
//! vertex 0 R
//! edge 0 0 1
//! triangle 0 +0 +1 +2
//! ```
//!
//! Triangle boundaries are counter-clockwise. `#` starts a comment. A file
//! whose first non-blank character is `{` is read as the JSON form of
//! [`TrinityData`].

use std::fmt::Write;

use super::{Color, EdgeId, SignedEdge, TriangleId, Trinity, TrinityData, TrinityError, VertexId};

fn parse_err(line: usize, message: impl Into<String>) -> TrinityError {
    TrinityError::Parse { line, message: message.into() }
}

fn num(line: usize, tok: Option<&str>, what: &str) -> Result<usize, TrinityError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

/// Parse without checking any invariant.
pub fn parse_trinity_data(text: &str) -> Result<TrinityData, TrinityError> {
    if text.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    let mut data = TrinityData::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tok = content.split_whitespace();
        let Some(kw) = tok.next() else { continue };
        match kw {
            "genus" => data.genus = Some(num(line, tok.next(), "genus")? as u32),
            "outer" => data.outer = Some(TriangleId(num(line, tok.next(), "outer triangle id")?)),
            "vertex" => {
                let id = num(line, tok.next(), "vertex id")?;
                let c = tok.next().ok_or_else(|| parse_err(line, "missing vertex color"))?;
                let color =
                    Color::from_letter(c).ok_or_else(|| parse_err(line, format!("unknown color `{c}`")))?;
                data.vertices.push((VertexId(id), color));
            }
            "edge" => {
                let id = num(line, tok.next(), "edge id")?;
                let a = num(line, tok.next(), "endpoint")?;
                let b = num(line, tok.next(), "endpoint")?;
                data.edges.push((EdgeId(id), VertexId(a), VertexId(b)));
            }
            "triangle" => {
                let id = num(line, tok.next(), "triangle id")?;
                let mut bd = [SignedEdge::new(0, true); 3];
                for slot in &mut bd {
                    let t = tok.next().ok_or_else(|| parse_err(line, "triangle needs three signed edges"))?;
                    *slot = t.parse().map_err(|m: String| parse_err(line, m))?;
                }
                data.triangles.push((TriangleId(id), bd));
            }
            other => return Err(parse_err(line, format!("unknown keyword `{other}`"))),
        }
        if let Some(extra) = tok.next() {
            return Err(parse_err(line, format!("unexpected token `{extra}`")));
        }
    }
    Ok(data)
}

pub fn load_trinity(text: &str) -> Result<Trinity, TrinityError> {
    Trinity::from_data(&parse_trinity_data(text)?)
}

/// Canonical text form: header, then vertices, edges and triangles by id.
pub fn save_trinity(t: &Trinity) -> String {
    let data = t.to_data();
    let mut out = String::new();
    writeln!(out, "genus {}", t.genus()).unwrap();
    if let Some(o) = data.outer {
        writeln!(out, "outer {o}").unwrap();
    }
    for (v, c) in &data.vertices {
        writeln!(out, "vertex {v} {c}").unwrap();
    }
    for (e, a, b) in &data.edges {
        writeln!(out, "edge {e} {a} {b}").unwrap();
    }
    for (id, [x, y, z]) in &data.triangles {
        writeln!(out, "triangle {id} {x} {y} {z}").unwrap();
    }
    out
}

pub fn save_trinity_json(t: &Trinity) -> String {
    serde_json::to_string(&t.to_data()).expect("trinity data serializes")
}
