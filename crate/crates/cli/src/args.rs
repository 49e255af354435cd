use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "mnm", version, about = "Non-deterministic matrix semantics for Ivlev-style modal logics")]
pub struct Cli {
    /// System name (Tm, T4m, T45m, Dm, D4m, D45m, Km, K4m, K45m, Tmd, T4md, T45md).
    #[arg(long, global = true, env = "MNM_SYSTEM")]
    pub system: Option<String>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every randomized operation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Use the printed tables cell for cell instead of the coherent ones.
    #[arg(long, global = true)]
    pub strict_paper: bool,
    /// Worker threads for searches and scans.
    #[arg(long, global = true, env = "MNM_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Report wall-clock time (adds `time_ms` to JSON output).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a formula and print it back.
    Parse { formula: String },
    /// Print one table of the system (neg, imp, box, dia).
    Table { connective: String },
    /// Compose the tables along a skeleton such as `~A -> B`.
    DeriveTable { skeleton: String },
    /// Decide validity of a formula.
    Valid { formula: String },
    /// Decide whether premises entail a conclusion.
    Entail(QueryArgs),
    /// Like `entail`, but print the full falsifying valuation.
    Countermodel(QueryArgs),
    /// Check every axiom schema of the system against its Nmatrix.
    Audit(AuditArgs),
    /// Check the box/diamond equivalences and entailments.
    Lemmas,
    /// Hilbert derivations.
    #[command(subcommand)]
    Proof(ProofCommand),
    /// Recovery operators.
    #[command(subcommand)]
    Dat(DatCommand),
    /// Pigeonhole formulas and deterministic matrices.
    #[command(subcommand)]
    Dugundji(DugundjiCommand),
    /// Print every built-in table, as files and as grids, with the deviation report.
    ExportTables,
}

#[derive(Args, Debug)]
pub struct QueryArgs {
    /// A premise, or a file with one premise per line.
    #[arg(short = 'p', long = "premise")]
    pub premises: Vec<String>,
    /// The conclusion.
    #[arg(short = 'c', long = "conclusion")]
    pub conclusion: String,
}

#[derive(Args, Debug)]
pub struct AuditArgs {
    /// Audit only these schemas, by name.
    #[arg(long = "schema")]
    pub schemas: Vec<String>,
    /// Use the alternative Km calculus stated with `circ` and `bullet`.
    #[arg(long)]
    pub circ: bool,
}

#[derive(Subcommand, Debug)]
pub enum ProofCommand {
    /// Check a derivation file.
    Check { file: String },
    /// Discharge a hypothesis with the deduction theorem.
    Dmt {
        file: String,
        /// The hypothesis to discharge (default: the last one).
        #[arg(long)]
        discharge: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct DatArgs {
    #[command(flatten)]
    pub query: QueryArgs,
    /// circ (Dm in Km), circt (Tm in Dm) or both (Tm in Km).
    #[arg(long, default_value = "circ")]
    pub kind: String,
}

#[derive(Subcommand, Debug)]
pub enum DatCommand {
    /// Find a smallest set of marked formulas.
    Search {
        #[command(flatten)]
        dat: DatArgs,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Widen the pool to every formula over the query's atoms with at
        /// most this many nested connectives.
        #[arg(long)]
        pool_depth: Option<usize>,
    },
    /// Check a given marking.
    Verify {
        #[command(flatten)]
        dat: DatArgs,
        /// A formula marked with `circ`.
        #[arg(long = "upsilon")]
        upsilon: Vec<String>,
        /// A formula marked with `circt`.
        #[arg(long = "upsilon-prime")]
        upsilon_prime: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DugundjiCommand {
    /// Print δ(n).
    Delta {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Print γ(n).
    Gamma {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Falsify δ(n), γ(n) or any formula over the system's Nmatrix.
    Falsify {
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long)]
        gamma: bool,
        #[arg(long, conflicts_with_all = ["n", "gamma"])]
        formula: Option<String>,
    },
    /// Enumerate deterministic matrices and check their models.
    Scan {
        #[arg(long, default_value_t = 2)]
        size: usize,
        /// Formula index (default: size + 1).
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long)]
        gamma: bool,
        /// Size-3 candidates to sample.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Compare validity with classical logic on random {¬, →} formulas.
    Conserve {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        max_depth: usize,
    },
    /// Compare the T45md Nmatrix with the four-element Łukasiewicz matrix.
    Agree {
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}
