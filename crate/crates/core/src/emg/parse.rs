//! Line-oriented text format.
//!
//! ```text
//! vertex <id> <B|W>
//! edge <id> <a> <b> <blue|red>
//! rot <vid> <eid>:<0|1> <eid>:<0|1> ...
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Records may appear in
//! any order. Rendering emits vertices, edges and rotations in ascending id
//! order, so `render(parse(render(g))) == render(g)`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use super::{Dart, Edge, EdgeColor, EnhancedMultigraph, GraphError, PolygonColor, Vertex};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &line[s..i],
                    column: s + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: s + 1,
        });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> GraphError {
    GraphError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn parse_id(line: usize, tok: &Token<'_>, what: &str) -> Result<u32, GraphError> {
    tok.text
        .parse::<u32>()
        .map_err(|_| syntax(line, tok.column, format!("expected {what} id, found `{}`", tok.text)))
}

fn expect_len(line: usize, toks: &[Token<'_>], n: usize, line_len: usize) -> Result<(), GraphError> {
    if toks.len() < n {
        return Err(syntax(line, line_len + 1, "unexpected end of line"));
    }
    if toks.len() > n {
        return Err(syntax(
            line,
            toks[n].column,
            format!("unexpected token `{}`", toks[n].text),
        ));
    }
    Ok(())
}

/// Line number, vertex id and `(edge id, end)` darts of one `rot` line.
type RotLine = (usize, u32, Vec<(u32, u8)>);

/// Parses the text format. Errors carry 1-based line and column numbers.
pub fn parse_emg(text: &str) -> Result<EnhancedMultigraph, GraphError> {
    let mut vertices: BTreeMap<u32, PolygonColor> = BTreeMap::new();
    let mut edges: BTreeMap<u32, (u32, u32, EdgeColor, usize)> = BTreeMap::new();
    let mut rots: Vec<RotLine> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokenize(raw);
        let line_len = raw.trim_end().len();
        match toks[0].text {
            "vertex" => {
                expect_len(line, &toks, 3, line_len)?;
                let id = parse_id(line, &toks[1], "vertex")?;
                let color = match toks[2].text {
                    "B" => PolygonColor::Black,
                    "W" => PolygonColor::White,
                    other => {
                        return Err(syntax(
                            line,
                            toks[2].column,
                            format!("expected `B` or `W`, found `{other}`"),
                        ))
                    }
                };
                if vertices.insert(id, color).is_some() {
                    return Err(GraphError::DuplicateVertex(id));
                }
            }
            "edge" => {
                expect_len(line, &toks, 5, line_len)?;
                let id = parse_id(line, &toks[1], "edge")?;
                let a = parse_id(line, &toks[2], "vertex")?;
                let b = parse_id(line, &toks[3], "vertex")?;
                let color = match toks[4].text {
                    "blue" => EdgeColor::Blue,
                    "red" => EdgeColor::Red,
                    other => {
                        return Err(syntax(
                            line,
                            toks[4].column,
                            format!("expected `blue` or `red`, found `{other}`"),
                        ))
                    }
                };
                if edges.insert(id, (a, b, color, line)).is_some() {
                    return Err(GraphError::DuplicateEdge(id));
                }
            }
            "rot" => {
                if toks.len() < 2 {
                    return Err(syntax(line, line_len + 1, "unexpected end of line"));
                }
                let vid = parse_id(line, &toks[1], "vertex")?;
                let mut darts = Vec::with_capacity(toks.len() - 2);
                for tok in &toks[2..] {
                    let (e, end) = tok.text.split_once(':').ok_or_else(|| {
                        syntax(
                            line,
                            tok.column,
                            format!("expected `<edge>:<end>`, found `{}`", tok.text),
                        )
                    })?;
                    let e: u32 = e
                        .parse()
                        .map_err(|_| syntax(line, tok.column, format!("expected edge id, found `{e}`")))?;
                    let end: u8 = match end {
                        "0" => 0,
                        "1" => 1,
                        _ => {
                            return Err(syntax(
                                line,
                                tok.column + tok.text.find(':').unwrap_or(0) + 1,
                                format!("expected dart end `0` or `1`, found `{end}`"),
                            ))
                        }
                    };
                    darts.push((e, end));
                }
                rots.push((line, vid, darts));
            }
            other => {
                return Err(syntax(line, toks[0].column, format!("unknown record `{other}`")));
            }
        }
    }

    let vertex_ix: BTreeMap<u32, usize> = vertices.keys().enumerate().map(|(i, id)| (*id, i)).collect();
    let edge_ix: BTreeMap<u32, usize> = edges.keys().enumerate().map(|(i, id)| (*id, i)).collect();

    let vs: Vec<Vertex> = vertices
        .iter()
        .map(|(id, color)| Vertex { id: *id, color: *color })
        .collect();
    let mut es = Vec::with_capacity(edges.len());
    for (id, (a, b, color, line)) in &edges {
        let a = *vertex_ix
            .get(a)
            .ok_or(GraphError::UnknownVertex { line: *line, id: *a })?;
        let b = *vertex_ix
            .get(b)
            .ok_or(GraphError::UnknownVertex { line: *line, id: *b })?;
        es.push(Edge {
            id: *id,
            ends: [a, b],
            color: *color,
        });
    }

    let mut rotations = vec![Vec::new(); vs.len()];
    let mut given = HashSet::new();
    for (line, vid, darts) in rots {
        let v = *vertex_ix.get(&vid).ok_or(GraphError::UnknownVertex { line, id: vid })?;
        if !given.insert(v) {
            return Err(GraphError::DuplicateRotation(vid));
        }
        for (e, end) in darts {
            let ix = *edge_ix.get(&e).ok_or(GraphError::UnknownEdge { line, id: e })?;
            rotations[v].push(Dart::new(ix, end));
        }
    }

    EnhancedMultigraph::new(vs, es, rotations)
}

/// Canonical text rendering.
pub fn render_emg(g: &EnhancedMultigraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        let c = match v.color {
            PolygonColor::Black => "B",
            PolygonColor::White => "W",
        };
        writeln!(out, "vertex {} {}", v.id, c).unwrap();
    }
    for e in g.edges() {
        let c = match e.color {
            EdgeColor::Blue => "blue",
            EdgeColor::Red => "red",
        };
        writeln!(
            out,
            "edge {} {} {} {}",
            e.id,
            g.vertex(e.ends[0]).id,
            g.vertex(e.ends[1]).id,
            c
        )
        .unwrap();
    }
    for (v, vert) in g.vertices().iter().enumerate() {
        write!(out, "rot {}", vert.id).unwrap();
        for d in g.rotation(v) {
            write!(out, " {}:{}", g.edge(d.edge).id, d.end).unwrap();
        }
        out.push('\n');
    }
    out
}
