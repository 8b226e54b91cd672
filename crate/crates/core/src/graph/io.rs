//! Plain-text graph files.
//!
//! ```text
//! n m
//! u v          (m lines, 0-based; multigraphs add a third column: edge id)
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Edges are written
//! in insertion order, so neighbour order survives a write/read cycle.

use super::{Graph, Multigraph};
use crate::error::{Error, Result};
use std::fmt::Write as _;

struct Tokens<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            })
            .collect();
        Tokens { lines, pos: 0 }
    }

    /// Next record as `(line number, [(column, value)])`.
    fn record(&mut self, arity: usize, what: &str) -> Result<(usize, Vec<usize>)> {
        let Some(&(line, text)) = self.lines.get(self.pos) else {
            let line = self.lines.last().map_or(1, |l| l.0 + 1);
            return Err(Error::Parse {
                line,
                column: 1,
                message: format!("unexpected end of input, expected {what}"),
            });
        };
        self.pos += 1;
        let mut values = Vec::with_capacity(arity);
        let mut fields = 0;
        for (column, token) in fields_with_columns(text) {
            fields += 1;
            if fields > arity {
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("trailing field `{token}` in {what}"),
                });
            }
            let v = token.parse::<usize>().map_err(|_| Error::Parse {
                line,
                column,
                message: format!("`{token}` is not a non-negative integer"),
            })?;
            values.push(v);
        }
        if fields < arity {
            return Err(Error::Parse {
                line,
                column: text.len() + 1,
                message: format!("{what} needs {arity} fields, found {fields}"),
            });
        }
        Ok((line, values))
    }

    fn finish(&self) -> Result<()> {
        if let Some(&(line, _)) = self.lines.get(self.pos) {
            return Err(Error::Parse {
                line,
                column: 1,
                message: "more edge lines than the header declares".into(),
            });
        }
        Ok(())
    }
}

fn fields_with_columns(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &text[s..]));
    }
    out.into_iter()
}

fn at_line(line: usize, e: Error) -> Error {
    Error::Parse {
        line,
        column: 1,
        message: e.to_string(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut tokens = Tokens::new(text);
    let (_, header) = tokens.record(2, "header `n m`")?;
    let (n, m) = (header[0], header[1]);
    let mut g = Graph::new(n);
    for _ in 0..m {
        let (line, uv) = tokens.record(2, "edge `u v`")?;
        g.add_edge(uv[0], uv[1]).map_err(|e| at_line(line, e))?;
    }
    tokens.finish()?;
    Ok(g)
}

pub fn parse_multigraph(text: &str) -> Result<Multigraph> {
    let mut tokens = Tokens::new(text);
    let (_, header) = tokens.record(2, "header `n m`")?;
    let (n, m) = (header[0], header[1]);
    let mut slots: Vec<Option<(usize, usize)>> = vec![None; m];
    for _ in 0..m {
        let (line, rec) = tokens.record(3, "edge `u v id`")?;
        let (u, v, id) = (rec[0], rec[1], rec[2]);
        if id >= m {
            return Err(at_line(
                line,
                Error::InvalidParameter(format!("edge id {id} outside 0..{m}")),
            ));
        }
        if slots[id].is_some() {
            return Err(at_line(
                line,
                Error::InvalidParameter(format!("edge id {id} used twice")),
            ));
        }
        for w in [u, v] {
            if w >= n {
                return Err(at_line(line, Error::VertexOutOfRange { vertex: w, n }));
            }
        }
        if u == v {
            return Err(at_line(line, Error::SelfLoop(u)));
        }
        slots[id] = Some((u, v));
    }
    tokens.finish()?;
    let mut mg = Multigraph::new(n);
    for (u, v) in slots.into_iter().flatten() {
        mg.add_edge(u, v)?;
    }
    Ok(mg)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn write_multigraph(m: &Multigraph) -> String {
    let mut s = format!("{} {}\n", m.n(), m.m());
    for (id, &(u, v)) in m.edges().iter().enumerate() {
        let _ = writeln!(s, "{u} {v} {id}");
    }
    s
}
