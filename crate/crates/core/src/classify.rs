//! Complexity of acyclic, star and injective colouring on H-free graphs.

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph_find, is_isomorphic, named, Graph, DEFAULT_PATTERN_BOUND};
use crate::recognize::is_linear_forest;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    Acyclic,
    Star,
    Injective,
}

impl Problem {
    pub const ALL: [Problem; 3] = [Problem::Acyclic, Problem::Star, Problem::Injective];

    pub fn name(self) -> &'static str {
        match self {
            Problem::Acyclic => "acyclic",
            Problem::Star => "star",
            Problem::Injective => "injective",
        }
    }

    fn title(self) -> &'static str {
        match self {
            Problem::Acyclic => "Acyclic",
            Problem::Star => "Star",
            Problem::Injective => "Injective",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "acyclic" => Ok(Problem::Acyclic),
            "star" => Ok(Problem::Star),
            "injective" => Ok(Problem::Injective),
            _ => Err(Error::InvalidParameter(format!(
                "unknown problem `{s}` (expected acyclic, star or injective)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    P,
    NpComplete,
    Open,
    Trivial,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::P => "P",
            Status::NpComplete => "NP-complete",
            Status::Open => "Open",
            Status::Trivial => "Trivial",
        })
    }
}

/// A classification with the statement it rests on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub citation: String,
    pub note: String,
}

impl fmt::Display for Verdict {
    /// `status (citation)`, e.g. `Open (Table 1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.status, self.citation)
    }
}

fn verdict(status: Status, citation: &str, note: impl Into<String>) -> Verdict {
    Verdict {
        status,
        citation: citation.to_string(),
        note: note.into(),
    }
}

fn contains(h: &Graph, pattern: &str) -> bool {
    find(h, &named(pattern))
}

fn find(h: &Graph, pattern: &Graph) -> bool {
    induced_subgraph_find(h, pattern)
        .expect("patterns are within the bound")
        .is_some()
}

fn within(h: &Graph, host: &str) -> bool {
    find(&named(host), h)
}

fn iso(h: &Graph, name: &str) -> bool {
    is_isomorphic(h, &named(name)).expect("patterns are within the bound")
}

fn has_induced_cycle_of_length_at_least_four(h: &Graph) -> bool {
    (4..=h.n()).any(|p| find(h, &named(&format!("C{p}"))))
}

/// Hardness for fixed `k` when `h` is not a linear forest. `k = None` asks
/// for the citation used when `k` is part of the input, which inherits the
/// fixed-`k` hardness.
fn not_linear_forest(problem: Problem, h: &Graph, k: Option<usize>) -> Verdict {
    let cyclic = !h.is_forest();
    let np = Status::NpComplete;
    match (problem, cyclic) {
        (Problem::Acyclic, true) => verdict(
            np,
            "Lemma l-girth",
            "H has a cycle; hard on 2-degenerate bipartite graphs of girth at least g",
        ),
        (Problem::Acyclic, false) => verdict(
            np,
            "Lemma l-az",
            "H contains K1,3; hard on line graphs of multigraphs, which are claw-free",
        ),
        (Problem::Star, true) if k.is_none() || k == Some(3) => verdict(
            np,
            "Lemma star-col-high-girth",
            "H has a cycle; star 3-colouring is hard on planar graphs of girth at least g and maximum degree 3",
        ),
        (Problem::Star, true) if !h.is_bipartite() => verdict(
            np,
            "Theorem 2(ii); Albertson et al.",
            "H has an odd cycle; hard on bipartite graphs",
        ),
        (Problem::Star, true) => verdict(
            np,
            "Lemma l-evencycle",
            "H has an induced even cycle of length at least 4; hard on C_p-free graphs via a dominating clique",
        ),
        (Problem::Star, false) => verdict(
            np,
            "Lemma l-linestar",
            "H contains K1,3; hard on line graphs of multigraphs, which are claw-free",
        ),
        (Problem::Injective, true) if contains(h, "C3") => verdict(
            np,
            "Lemma l-triangle",
            "H contains C3; hard on bipartite graphs",
        ),
        (Problem::Injective, true) => {
            debug_assert!(has_induced_cycle_of_length_at_least_four(h));
            verdict(
                np,
                "Theorem 3(ii); Mahdian",
                "H has an induced cycle of length at least 4; hard on line graphs of bipartite graphs of large girth",
            )
        }
        (Problem::Injective, false) => verdict(
            np,
            "Theorem 3(ii); Mahdian",
            "H contains K1,3; hard on line graphs, which are claw-free",
        ),
    }
}

fn fixed_k(problem: Problem, h: &Graph, k: usize) -> Verdict {
    let threshold = match problem {
        Problem::Injective => 4,
        _ => 3,
    };
    if k < threshold {
        let note = match problem {
            Problem::Acyclic => {
                "at most 2 colours: acyclic 2-colourable means a forest, checkable directly"
            }
            Problem::Star => {
                "at most 2 colours: star 2-colourable means a disjoint union of stars"
            }
            Problem::Injective => "at most 3 colours: injective 3-colouring is trivial for general graphs",
        };
        let citation = match problem {
            Problem::Injective => "Injective 3-Colouring is trivial",
            _ => "k <= 2 characterisation",
        };
        return verdict(Status::Trivial, citation, note);
    }
    if is_linear_forest(h) {
        let citation = match problem {
            Problem::Acyclic => "Theorem 1(ii)",
            Problem::Star => "Theorem 2(ii)",
            Problem::Injective => "Theorem 3(ii)",
        };
        return verdict(
            Status::P,
            citation,
            "H is a linear forest; H-free graphs without large bicliques have bounded treewidth",
        );
    }
    not_linear_forest(problem, h, Some(k))
}

fn k_in_input(problem: Problem, h: &Graph) -> Verdict {
    match problem {
        Problem::Acyclic | Problem::Star => {
            let part = if problem == Problem::Acyclic { "Theorem 1(i)" } else { "Theorem 2(i)" };
            if within(h, "P4") {
                return verdict(
                    Status::P,
                    &format!("{part}; Lyons"),
                    "H is an induced subgraph of P4; polynomial on P4-free graphs",
                );
            }
            if iso(h, "2P2") {
                return verdict(Status::Open, "Table 1", "H = 2P2 is the open case");
            }
            if !is_linear_forest(h) {
                return not_linear_forest(problem, h, None);
            }
            let citation = if problem == Problem::Acyclic {
                "Lemma l-3p1acyclic"
            } else {
                "Theorem 2(i); Shalu and Antony"
            };
            verdict(
                Status::NpComplete,
                citation,
                "H contains 3P1; hard on co-bipartite graphs",
            )
        }
        Problem::Injective => {
            if within(h, "2P1+P4") {
                if iso(h, "2P1+P4") {
                    return verdict(Status::Open, "Table 1", "H = 2P1+P4 is the open case");
                }
                let (citation, note) = if within(h, "P1+P4") {
                    ("Lemma l-p1p4", "H is an induced subgraph of P1+P4")
                } else if within(h, "2P1+P3") {
                    ("Lemma l-2p1p3", "H is an induced subgraph of 2P1+P3")
                } else {
                    ("Lemma l-3p1p2", "H is an induced subgraph of 3P1+P2")
                };
                return verdict(Status::P, citation, note);
            }
            if !is_linear_forest(h) {
                return not_linear_forest(problem, h, None);
            }
            if contains(h, "2P2") {
                return verdict(
                    Status::NpComplete,
                    "Theorem 3(i); Bodlaender et al.",
                    "H contains 2P2; hard on split graphs",
                );
            }
            verdict(
                Status::NpComplete,
                "Lemma l-5p1",
                "H contains 5P1; hard on 5P1-free graphs",
            )
        }
    }
}

/// Complexity of the problem on H-free graphs, with `k` fixed when given.
pub fn classify(problem: Problem, h: &Graph, k: Option<usize>) -> Result<Verdict> {
    if h.n() > DEFAULT_PATTERN_BOUND {
        return Err(Error::PatternTooLarge {
            size: h.n(),
            bound: DEFAULT_PATTERN_BOUND,
        });
    }
    if h.n() == 0 {
        return Err(Error::InvalidParameter("H must have at least one vertex".into()));
    }
    Ok(match k {
        Some(k) => fixed_k(problem, h, k),
        None => k_in_input(problem, h),
    })
}

/// Graphs naming the columns of [`table`].
pub const TABLE_COLUMNS: [&str; 8] = ["P4", "P1+P3", "2P2", "2P1+P4", "3P1", "C3", "K13", "5P1"];

fn short(s: Status) -> &'static str {
    match s {
        Status::P => "P",
        Status::NpComplete => "NPc",
        Status::Open => "Open",
        Status::Trivial => "Triv",
    }
}

/// Text table: for each problem, with `k` in the input and with `k` fixed
/// at the smallest non-trivial value, the status for each graph in
/// [`TABLE_COLUMNS`].
pub fn table() -> String {
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    for p in Problem::ALL {
        let fixed = if p == Problem::Injective { 4 } else { 3 };
        for (label, k) in [
            (format!("{} Colouring", p.title()), None),
            (format!("{} {fixed}-Colouring", p.title()), Some(fixed)),
        ] {
            let cells = TABLE_COLUMNS
                .iter()
                .map(|h| {
                    let v = classify(p, &named(h), k).expect("table graphs are small");
                    short(v.status).to_string()
                })
                .collect();
            rows.push((label, cells));
        }
    }
    let label_width = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let widths: Vec<usize> = TABLE_COLUMNS
        .iter()
        .map(|h| h.len().max(4))
        .collect();
    let mut out = format!("{:label_width$}", "H");
    for (h, w) in TABLE_COLUMNS.iter().zip(&widths) {
        out.push_str(&format!("  {h:>w$}"));
    }
    out.push('\n');
    for (label, cells) in rows {
        out.push_str(&format!("{label:label_width$}"));
        for (c, w) in cells.iter().zip(&widths) {
            out.push_str(&format!("  {c:>w$}"));
        }
        out.push('\n');
    }
    out
}
