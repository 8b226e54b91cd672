use clap::{Args, Parser, Subcommand, ValueEnum};
use hfree_core::PropertyKind;
use std::path::PathBuf;

/// Acyclic, star and injective colouring workbench.
///
/// Graph arguments name a file in `n m` + edge-list format, `-` for stdin,
/// or a named graph such as `C5`, `K33` or `2P1+P4`.
#[derive(Debug, Parser)]
#[command(name = "hfree", version)]
pub struct Cli {
    /// Worker threads for internal parallelism (output does not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Proper,
    Acyclic,
    Star,
    Injective,
}

impl From<Property> for PropertyKind {
    fn from(p: Property) -> Self {
        match p {
            Property::Proper => PropertyKind::Proper,
            Property::Acyclic => PropertyKind::Acyclic,
            Property::Star => PropertyKind::Star,
            Property::Injective => PropertyKind::Injective,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Lemma {
    #[value(name = "l-triangle")]
    Triangle,
    #[value(name = "l-az")]
    Az,
    #[value(name = "l-linestar")]
    Linestar,
    #[value(name = "star-col-high-girth")]
    StarHighGirth,
    #[value(name = "l-evencycle")]
    Evencycle,
    #[value(name = "l-girth")]
    Girth,
    #[value(name = "l-5p1")]
    FiveP1,
    #[value(name = "l-4col")]
    FourCol,
    #[value(name = "l-3p1acyclic")]
    ThreeP1Acyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GadgetName {
    AcyclicEdge,
    StarEdge,
    StarVertex,
    AcyclicEquality,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Search-node budget; unlimited when absent.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Seed for the search's value ordering.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide k-colourability or find the minimum number of colours.
    Solve {
        #[arg(long, value_enum)]
        property: Property,
        /// Number of colours to decide.
        #[arg(short, long, required_unless_present = "min", conflicts_with = "min")]
        k: Option<usize>,
        /// Find the minimum number of colours.
        #[arg(long)]
        min: bool,
        /// Read a multigraph (`u v id` records) and colour its edges.
        #[arg(long)]
        edges: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        graph: String,
    },
    /// Optimal injective colouring of an H-free graph in polynomial time.
    SolvePoly {
        /// Forbidden graph; at most 2P1+P4 with an induced copy missing.
        #[arg(long = "h", alias = "H")]
        h: String,
        graph: String,
    },
    /// Check a colouring file against a discipline.
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        /// Read a multigraph and check an edge colouring by edge id.
        #[arg(long)]
        edges: bool,
        graph: String,
        colouring: PathBuf,
    },
    /// Build a hardness-reduction instance.
    Reduce {
        #[arg(long, value_enum)]
        lemma: Lemma,
        /// Colour count of the source or target problem.
        #[arg(short, long)]
        k: Option<usize>,
        /// Girth parameter for star-col-high-girth.
        #[arg(long, default_value_t = 3)]
        girth: usize,
        /// Per-vertex colour lists for l-4col, one line per vertex.
        #[arg(long)]
        lists: Option<PathBuf>,
        /// Graph F for the l-girth equality gadget; defaults to a complete graph.
        #[arg(long)]
        f: Option<String>,
        /// Skip checking that F has no proper 2k(k-1)-colouring.
        #[arg(long)]
        trust_f: bool,
        /// Write the target instance here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the forward map and back-translation recipe here.
        #[arg(long)]
        emit_map: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        graph: String,
    },
    /// Generate a gadget and check its forced-colour claims.
    Gadget {
        #[arg(value_enum)]
        kind: GadgetName,
        /// Colour count (edge and equality gadgets).
        #[arg(short, long, default_value_t = 3)]
        k: usize,
        /// Girth parameter of the star vertex gadget.
        #[arg(long, default_value_t = 3)]
        girth: usize,
        /// Graph F for the equality gadget.
        #[arg(long)]
        f: Option<String>,
        #[arg(long)]
        trust_f: bool,
        /// Skip claim verification.
        #[arg(long)]
        no_verify: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Complexity of a problem on H-free graphs.
    Classify {
        #[arg(long, required_unless_present = "table")]
        problem: Option<String>,
        #[arg(long = "H", alias = "h", required_unless_present = "table")]
        h: Option<String>,
        /// Fix the number of colours.
        #[arg(short, long)]
        k: Option<usize>,
        /// Print the summary table instead.
        #[arg(long, conflicts_with_all = ["problem", "h", "k"])]
        table: bool,
        /// Also print the justification.
        #[arg(long)]
        explain: bool,
    },
    /// Test membership in a graph class.
    Recognize {
        /// Class tag, e.g. `split`, `co-bipartite`, `clique-cover:3`, `3P1+P2-free`.
        #[arg(long)]
        class: String,
        graph: String,
    },
    /// Sample a member of a graph class.
    Random {
        #[arg(long)]
        class: String,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}
