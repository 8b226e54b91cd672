use super::Graph;
use crate::error::{Error, Result};
use std::fmt;

/// Named graph families, parsed from short names such as `P4`, `C5`,
/// `K4`, `K33`, `K1,3`, `3K3`, `2P1+P4` or `Petersen`.
///
/// Numbering on expansion: paths left to right, cycles around the cycle,
/// `K_{s,t}` with the `s` side first, the Petersen graph as outer cycle
/// `0..5` and inner pentagram `5..10`, and the terms of a disjoint union
/// consecutively in the order written.
///
/// `K` followed by exactly two digits is read as a biclique (`K33` is
/// `K_{3,3}`, `K13` is the claw). Complete graphs on ten or more vertices
/// are written `K_13` or `K(13)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Biclique(usize, usize),
    Petersen,
    /// Disjoint union of `(copies, term)` pairs.
    Union(Vec<(usize, NamedGraph)>),
}

impl NamedGraph {
    pub fn parse(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad_name(&s, "empty name"));
        }
        let mut terms = Vec::new();
        for term in s.split('+') {
            terms.push(parse_term(term).map_err(|_| bad_name(&s, "unrecognised term"))?);
        }
        if terms.len() == 1 && terms[0].0 == 1 {
            Ok(terms.pop().unwrap().1)
        } else {
            Ok(NamedGraph::Union(terms))
        }
    }

    pub fn graph(&self) -> Graph {
        match *self {
            NamedGraph::Path(n) => {
                let mut g = Graph::new(n);
                for i in 1..n {
                    g.push_edge_unchecked(i - 1, i);
                }
                g
            }
            NamedGraph::Cycle(n) => {
                let mut g = NamedGraph::Path(n).graph();
                if n >= 3 {
                    g.push_edge_unchecked(n - 1, 0);
                }
                g
            }
            NamedGraph::Complete(n) => {
                let mut g = Graph::new(n);
                for u in 0..n {
                    for v in u + 1..n {
                        g.push_edge_unchecked(u, v);
                    }
                }
                g
            }
            NamedGraph::Biclique(s, t) => {
                let mut g = Graph::new(s + t);
                for u in 0..s {
                    for v in 0..t {
                        g.push_edge_unchecked(u, s + v);
                    }
                }
                g
            }
            NamedGraph::Petersen => {
                let mut g = Graph::new(10);
                for i in 0..5 {
                    g.push_edge_unchecked(i, (i + 1) % 5);
                }
                for i in 0..5 {
                    g.push_edge_unchecked(i, 5 + i);
                }
                for i in 0..5 {
                    g.push_edge_unchecked(5 + i, 5 + (i + 2) % 5);
                }
                g
            }
            NamedGraph::Union(ref terms) => {
                let mut g = Graph::new(0);
                for (copies, term) in terms {
                    let h = term.graph();
                    for _ in 0..*copies {
                        g = g.disjoint_union(&h);
                    }
                }
                g
            }
        }
    }
}

fn bad_name(s: &str, why: &str) -> Error {
    Error::InvalidParameter(format!("graph name `{s}`: {why}"))
}

fn parse_term(term: &str) -> std::result::Result<(usize, NamedGraph), ()> {
    let digits = term.chars().take_while(char::is_ascii_digit).count();
    let copies = if digits == 0 {
        1
    } else {
        term[..digits].parse().map_err(|_| ())?
    };
    let rest = &term[digits..];
    if copies == 0 {
        return Err(());
    }
    let base = parse_base(rest)?;
    Ok((copies, base))
}

fn parse_base(s: &str) -> std::result::Result<NamedGraph, ()> {
    let lower = s.to_ascii_lowercase();
    if lower == "petersen" {
        return Ok(NamedGraph::Petersen);
    }
    if lower == "claw" {
        return Ok(NamedGraph::Biclique(1, 3));
    }
    let (head, body) = s.split_at(1.min(s.len()));
    let number = |t: &str| t.parse::<usize>().map_err(|_| ());
    match head {
        "P" => number(body).map(NamedGraph::Path),
        "C" => {
            let n = number(body)?;
            if n < 3 {
                return Err(());
            }
            Ok(NamedGraph::Cycle(n))
        }
        "K" => {
            let body = body
                .trim_start_matches('_')
                .trim_start_matches(['{', '('])
                .trim_end_matches(['}', ')']);
            if let Some((a, b)) = body.split_once(',') {
                return Ok(NamedGraph::Biclique(number(a)?, number(b)?));
            }
            let explicit = s.len() > 1 && matches!(&s[1..2], "_" | "(" | "{");
            if !explicit && body.len() == 2 && body.chars().all(|c| c.is_ascii_digit()) {
                let s_side = number(&body[..1])?;
                let t_side = number(&body[1..])?;
                return Ok(NamedGraph::Biclique(s_side, t_side));
            }
            number(body).map(NamedGraph::Complete)
        }
        _ => Err(()),
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::Cycle(n) => write!(f, "C{n}"),
            NamedGraph::Complete(n) if *n >= 10 => write!(f, "K_{n}"),
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::Biclique(s, t) => write!(f, "K{s},{t}"),
            NamedGraph::Petersen => write!(f, "Petersen"),
            NamedGraph::Union(terms) => {
                for (i, (copies, term)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    if *copies > 1 {
                        write!(f, "{copies}")?;
                    }
                    write!(f, "{term}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::str::FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGraph::parse(s)
    }
}

/// Shorthand used throughout the tests: expands a name, panicking on typos.
pub fn named(name: &str) -> Graph {
    NamedGraph::parse(name)
        .unwrap_or_else(|e| panic!("{e}"))
        .graph()
}
