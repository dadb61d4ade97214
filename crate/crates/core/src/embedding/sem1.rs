//! SEM1: a line-oriented text format for signed rotation systems.
//!
//! ```text
//! SEM 1
//! n <vertex-count>
//! m <edge-count>
//! e <edge_id> <u> <v> <+|->
//! r <v> <dart> <dart> ...
//! ```
//!
//! The writer emits exactly this layout with edges and vertices in increasing
//! order. The reader skips blank lines and `#` comments and accepts `e` and
//! `r` lines in any order.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Dart, Edge, EmbeddedMultigraph, EmbeddingError, Sign};

#[derive(Debug, Error)]
pub enum Sem1Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line `SEM 1`")]
    MissingHeader,
    #[error("missing `{0}` line")]
    MissingCount(&'static str),
    #[error("edge {0} is not defined")]
    MissingEdge(usize),
    #[error("rotation of vertex {0} is not defined")]
    MissingRotation(usize),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
}

pub fn write(graph: &EmbeddedMultigraph) -> String {
    let mut out = String::new();
    out.push_str("SEM 1\n");
    let _ = writeln!(out, "n {}", graph.vertex_count());
    let _ = writeln!(out, "m {}", graph.edge_count());
    for (i, e) in graph.edges().iter().enumerate() {
        let _ = writeln!(out, "e {} {} {} {}", i, e.u, e.v, e.sign.symbol());
    }
    for v in 0..graph.vertex_count() {
        out.push_str("r ");
        out.push_str(&v.to_string());
        for d in graph.rotation(v) {
            let _ = write!(out, " {}", d.0);
        }
        out.push('\n');
    }
    out
}

pub fn read(text: &str) -> Result<EmbeddedMultigraph, Sem1Error> {
    let mut header = false;
    let mut n: Option<usize> = None;
    let mut m: Option<usize> = None;
    let mut edges: Vec<Option<Edge>> = Vec::new();
    let mut rotation: Vec<Option<Vec<Dart>>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: String| Sem1Error::Syntax {
            line: line_no,
            message,
        };
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap();
        let mut int = |what: &str| -> Result<usize, Sem1Error> {
            let tok = tokens
                .next()
                .ok_or_else(|| syntax(format!("expected {what}")))?;
            tok.parse()
                .map_err(|_| syntax(format!("invalid {what} `{tok}`")))
        };
        match tag {
            "SEM" => {
                if int("version")? != 1 {
                    return Err(syntax("unsupported version".into()));
                }
                header = true;
            }
            _ if !header => return Err(Sem1Error::MissingHeader),
            "n" => {
                let count = int("vertex count")?;
                n = Some(count);
                rotation = vec![None; count];
            }
            "m" => {
                let count = int("edge count")?;
                m = Some(count);
                edges = vec![None; count];
            }
            "e" => {
                if m.is_none() {
                    return Err(Sem1Error::MissingCount("m"));
                }
                let id = int("edge id")?;
                let u = int("endpoint")?;
                let v = int("endpoint")?;
                let sign = match tokens.next() {
                    Some("+") => Sign::Plus,
                    Some("-") => Sign::Minus,
                    other => return Err(syntax(format!("invalid sign {other:?}"))),
                };
                let slot = edges
                    .get_mut(id)
                    .ok_or_else(|| syntax(format!("edge id {id} out of range")))?;
                if slot.is_some() {
                    return Err(syntax(format!("edge {id} defined twice")));
                }
                *slot = Some(Edge::new(u, v, sign));
            }
            "r" => {
                if n.is_none() {
                    return Err(Sem1Error::MissingCount("n"));
                }
                let v = int("vertex")?;
                let darts = tokens
                    .map(|t| {
                        t.parse::<usize>()
                            .map(Dart)
                            .map_err(|_| syntax(format!("invalid dart `{t}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let slot = rotation
                    .get_mut(v)
                    .ok_or_else(|| syntax(format!("vertex {v} out of range")))?;
                if slot.is_some() {
                    return Err(syntax(format!("rotation of vertex {v} defined twice")));
                }
                *slot = Some(darts);
            }
            other => return Err(syntax(format!("unknown line tag `{other}`"))),
        }
    }
    if !header {
        return Err(Sem1Error::MissingHeader);
    }
    let n = n.ok_or(Sem1Error::MissingCount("n"))?;
    m.ok_or(Sem1Error::MissingCount("m"))?;
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.ok_or(Sem1Error::MissingEdge(i)))
        .collect::<Result<Vec<_>, _>>()?;
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(Sem1Error::MissingRotation(v)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(EmbeddedMultigraph::new(n, edges, rotation)?)
}
