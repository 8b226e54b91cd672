use crate::args::{BudgetArgs, Command, GadgetName, Lemma};
use crate::error::{CliError, Result};
use hfree_core::classify::{classify, table, Problem};
use hfree_core::engine::{chromatic, decide, Decision, SearchBudget};
use hfree_core::graph::{
    line_graph, named, parse_graph, parse_multigraph, write_graph, write_multigraph, Graph,
    Multigraph, NamedGraph,
};
use hfree_core::injective::injective_dispatch;
use hfree_core::random::random_instance;
use hfree_core::recognize::{clique_cover, recognize, ClassQuery, Witness};
use hfree_core::reductions::*;
use hfree_core::{verify, verify_edge, Colouring, EdgeColouring, Error, PropertyKind};
use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::Path;

fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::io("<stdin>", e))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn with_path(path: &str, e: Error) -> CliError {
    CliError::Usage(format!("{path}: {e}"))
}

/// A file, `-`, or a named graph when no such file exists.
fn load_graph(arg: &str) -> Result<Graph> {
    if arg != "-" && !Path::new(arg).exists() {
        return match NamedGraph::parse(arg) {
            Ok(h) => Ok(h.graph()),
            Err(_) => Err(CliError::Usage(format!(
                "{arg}: no such file, and not a graph name"
            ))),
        };
    }
    parse_graph(&read_text(arg)?).map_err(|e| with_path(arg, e))
}

fn load_multigraph(arg: &str) -> Result<Multigraph> {
    if arg != "-" && !Path::new(arg).exists() {
        return Ok(Multigraph::from(&load_graph(arg)?));
    }
    parse_multigraph(&read_text(arg)?).map_err(|e| with_path(arg, e))
}

fn load_colouring(path: &Path) -> Result<Colouring> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| CliError::io(&shown, e))?;
    Colouring::parse(&text).map_err(|e| with_path(&shown, e))
}

fn load_lists(path: &Path, n: usize) -> Result<Vec<Vec<usize>>> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| CliError::io(&shown, e))?;
    let mut lists = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let list = t
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| {
                    CliError::Usage(format!("{shown}: line {}: `{tok}` is not a colour", i + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        lists.push(list);
    }
    if lists.len() != n {
        return Err(CliError::Usage(format!(
            "{shown}: {} lists for a graph on {n} vertices",
            lists.len()
        )));
    }
    Ok(lists)
}

fn emit(path: Option<&Path>, text: &str, out: &mut String) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(&p.display().to_string(), e)),
        None => {
            out.push_str(text);
            Ok(())
        }
    }
}

fn budget(b: &BudgetArgs) -> SearchBudget {
    let base = match b.budget {
        Some(n) => SearchBudget::nodes(n),
        None => SearchBudget::unlimited(),
    };
    base.with_seed(b.seed)
}

fn need_k(k: Option<usize>, lemma: &str) -> Result<usize> {
    k.ok_or_else(|| CliError::Usage(format!("{lemma} needs -k")))
}

/// Runs one command and returns what it prints on stdout.
pub fn run(cmd: Command) -> Result<String> {
    let mut out = String::new();
    match cmd {
        Command::Solve { property, k, min, edges, budget: b, graph } => {
            let p = PropertyKind::from(property);
            let b = budget(&b);
            let (host, multi) = if edges {
                let m = load_multigraph(&graph)?;
                (line_graph(&m), Some(m))
            } else {
                (load_graph(&graph)?, None)
            };
            let found = if min {
                let (k, c) = chromatic(&host, p, &b)?;
                Some((k, c))
            } else {
                let k = k.expect("clap requires -k without --min");
                match decide(&host, k, p, &b)? {
                    Decision::Yes(c) => Some((k, c)),
                    Decision::No => None,
                    Decision::Exhausted => return Err(Error::BudgetExhausted.into()),
                }
            };
            let Some((k, c)) = found else {
                out.push_str("no\n");
                return Ok(out);
            };
            let check = match &multi {
                Some(m) => verify_edge(m, &EdgeColouring(c.0.clone()), p)?,
                None => verify(&host, &c, p)?,
            };
            if let Err(v) = check {
                return Err(Error::Internal(format!("solver produced an invalid colouring: {v}")).into());
            }
            let _ = writeln!(out, "k {k}");
            for x in c.as_slice() {
                let _ = writeln!(out, "{x}");
            }
        }
        Command::SolvePoly { h, graph } => {
            let h = NamedGraph::parse(&h)?;
            let g = load_graph(&graph)?;
            let (route, (k, c)) = injective_dispatch(&g, &h)?;
            if let Err(v) = verify(&g, &c, PropertyKind::Injective)? {
                return Err(Error::Internal(format!("invalid injective colouring: {v}")).into());
            }
            let _ = writeln!(out, "# route {route}");
            let _ = writeln!(out, "k {k}");
            for x in c.as_slice() {
                let _ = writeln!(out, "{x}");
            }
        }
        Command::Verify { property, edges, graph, colouring } => {
            let p = PropertyKind::from(property);
            let c = load_colouring(&colouring)?;
            let check = if edges {
                verify_edge(&load_multigraph(&graph)?, &EdgeColouring(c.0), p)?
            } else {
                verify(&load_graph(&graph)?, &c, p)?
            };
            match check {
                Ok(()) => out.push_str("valid\n"),
                Err(v) => return Err(CliError::Verification(format!("invalid: {v}"))),
            }
        }
        Command::Reduce {
            lemma,
            k,
            girth,
            lists,
            f,
            trust_f,
            output,
            emit_map,
            budget: b,
            graph,
        } => {
            let g = load_graph(&graph)?;
            let b = budget(&b);
            let r = match lemma {
                Lemma::Triangle => reduce_injective_bipartite(&g, need_k(k, "l-triangle")?)?,
                Lemma::Az => reduce_edgecol_to_acyclic_edgecol(&g, need_k(k, "l-az")?)?,
                Lemma::Linestar => reduce_edgecol_to_star_edgecol(&g, need_k(k, "l-linestar")?)?,
                Lemma::StarHighGirth => reduce_3col_to_star3(&g, girth)?,
                Lemma::Evencycle => reduce_star3_dominating_clique(&g, need_k(k, "l-evencycle")?)?,
                Lemma::Girth => {
                    let k = need_k(k, "l-girth")?;
                    let gadget = equality_gadget(f.as_deref(), k, trust_f, &b)?;
                    reduce_acyclic_vertexsplit(&g, &gadget)?
                }
                Lemma::FiveP1 => {
                    let k = need_k(k, "l-5p1")?;
                    let cover = clique_cover(&g, 3)?.ok_or_else(|| {
                        Error::Precondition("graph has no cover by three cliques".into())
                    })?;
                    reduce_colouring_to_injective_5p1(&g, &cover, k)?
                }
                Lemma::FourCol => {
                    let path = lists
                        .as_deref()
                        .ok_or_else(|| CliError::Usage("l-4col needs --lists".into()))?;
                    reduce_listcol_to_colouring(&g, &load_lists(path, g.n())?)?
                }
                Lemma::ThreeP1Acyclic => {
                    let side = g
                        .bipartition()
                        .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
                    reduce_connmatching_to_acyclic(&g, &side)?
                }
            };
            let text = match &r.target {
                Instance::Graph(t) => write_graph(t),
                Instance::Multigraph(m) => write_multigraph(m),
            };
            if let Some(path) = &emit_map {
                emit(Some(path), &r.map_text(), &mut out)?;
            }
            emit(output.as_deref(), &text, &mut out)?;
            if output.is_some() {
                let _ = writeln!(
                    out,
                    "{}: {} vertices, target {} {}-colouring",
                    r.name,
                    r.target.n(),
                    r.target_k,
                    r.target_property
                );
            }
        }
        Command::Gadget {
            kind,
            k,
            girth,
            f,
            trust_f,
            no_verify,
            output,
            budget: b,
        } => {
            let b = budget(&b);
            if kind == GadgetName::AcyclicEquality {
                let gadget = equality_gadget(f.as_deref(), k, trust_f, &b)?;
                let s = gadget.graph();
                let _ = writeln!(out, "gadget acyclic-equality-S' k={k}");
                let _ = writeln!(out, "vertices {}", s.n());
                let _ = writeln!(out, "edges {}", s.m());
                let _ = writeln!(out, "designated {} {}", gadget.x1(), gadget.x3());
                let _ = writeln!(out, "claim equality gadget: holds (checked on construction)");
                if let Some(p) = &output {
                    emit(Some(p), &write_graph(s), &mut out)?;
                }
                return Ok(out);
            }
            let gadget = match kind {
                GadgetName::AcyclicEdge => acyclic_edge_gadget(k)?,
                GadgetName::StarEdge => star_edge_gadget(k)?,
                GadgetName::StarVertex => star_vertex_gadget(girth)?,
                GadgetName::AcyclicEquality => unreachable!(),
            };
            let _ = writeln!(out, "gadget {} param={}", gadget.kind.name(), gadget.param);
            let _ = writeln!(out, "vertices {}", gadget.object.n());
            let _ = writeln!(out, "edges {}", gadget.object.m());
            let _ = writeln!(out, "designated {}", join(&gadget.designated));
            let _ = writeln!(out, "terminals {}", join(&gadget.terminals));
            if let Some(p) = &output {
                let text = match &gadget.object {
                    GadgetObject::Graph(g) => write_graph(g),
                    GadgetObject::Multigraph(m) => write_multigraph(m),
                };
                emit(Some(p), &text, &mut out)?;
            }
            if !no_verify {
                let claims = gadget.verify_claims(&b)?;
                if claims.is_empty() {
                    out.push_str("no claim is made for this parameter\n");
                }
                let mut failed = false;
                for c in claims {
                    let verdict = if c.holds { "holds" } else { "FAILS" };
                    let _ = writeln!(out, "claim {}: {verdict} ({} nodes)", c.claim, c.nodes);
                    failed |= !c.holds;
                }
                if failed {
                    return Err(CliError::Verification(out));
                }
            }
        }
        Command::Classify { problem, h, k, table: want_table, explain } => {
            if want_table {
                out.push_str(&table());
                return Ok(out);
            }
            let problem: Problem = problem.expect("clap requires --problem").parse()?;
            let h = NamedGraph::parse(&h.expect("clap requires --H"))?;
            let v = classify(problem, &h.graph(), k)?;
            let _ = writeln!(out, "{v}");
            if explain {
                let _ = writeln!(out, "{}", v.note);
            }
        }
        Command::Recognize { class, graph } => {
            let q: ClassQuery = class.parse()?;
            let g = load_graph(&graph)?;
            let r = recognize(&g, &q)?;
            let _ = writeln!(out, "{q}: {}", if r.member { "yes" } else { "no" });
            match r.witness {
                Some(Witness::Embedding(e)) => {
                    let _ = writeln!(out, "induced copy {}", join(&e));
                }
                Some(Witness::Partition(parts)) => {
                    let parts: Vec<String> = parts.iter().map(|p| join(p)).collect();
                    let _ = writeln!(out, "partition {}", parts.join(" | "));
                }
                None => {}
            }
        }
        Command::Random { class, n, seed, output } => {
            let q: ClassQuery = class.parse()?;
            let g = random_instance(&q, n, seed)?;
            emit(output.as_deref(), &write_graph(&g), &mut out)?;
        }
    }
    Ok(out)
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn equality_gadget(
    f: Option<&str>,
    k: usize,
    trust_f: bool,
    b: &SearchBudget,
) -> Result<EqualityGadget> {
    let f = match f {
        Some(arg) => load_graph(arg)?,
        None => named(&format!("K({})", 2 * k * k.saturating_sub(1) + 1)),
    };
    Ok(acyclic_equality_gadget(&f, k, trust_f, b)?)
}
