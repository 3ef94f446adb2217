//! Command-line front end for the self-complementary graph toolkit.
//!
//! Exit codes: 0 = success / witness found, 1 = verified absence,
//! 2 = usage or input error. `SCGRAPH_MAX_N` overrides the built-in
//! size guards of the enumerator and the partition detectors.

use std::fs::File;
use std::io::{self, BufRead, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use scgraph_core::construct::DEFAULT_ENUMERATION_GUARD;
use scgraph_core::structure::StructureWitness;
use scgraph_core::{
    conjecture_check_with_guards, find_antimorphism, find_antimorphism_with_cycle_lengths,
    find_induced_c5, find_power_of_two_antimorphism, find_skew_partition_with_guard,
    find_symmetric_partition_with_guard, graph6, j_construction, p4_construction, p4_partition,
    parse_cycles, theorem_m_decompose, DetectorGuards, Error, Graph, SkewPartition,
    StructureReport, SymmetricPartition, VertexSet,
};

/// Print a payload line, exiting quietly when the pipe is gone.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let mut lock = std::io::stdout().lock();
        if writeln!(lock, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(name = "scgraph", version, about = "Self-complementary graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all sc-graphs on n vertices as sorted graph6 lines
    Enum {
        #[arg(long)]
        n: usize,
    },
    /// Print an antimorphism of the graph in cycle notation
    Antimorphism {
        /// Require all cycle lengths to be powers of two
        #[arg(long)]
        pow2: bool,
        /// graph6 string, or '-' to read one graph per stdin line
        graph: String,
    },
    /// Partition an sc-graph into induced P4s
    #[command(name = "p4-partition")]
    P4Partition {
        /// graph6 string, or '-' for stdin batch mode
        graph: String,
    },
    /// Search for one kind of structure witness
    Detect {
        #[command(flatten)]
        what: DetectWhat,
        /// graph6 string, or '-' for stdin batch mode
        graph: String,
    },
    /// Decompose along an antimorphism of type (4) x (one other cycle)
    #[command(name = "theorem-m")]
    TheoremM {
        /// Antimorphism in cycle notation, e.g. "(0)(1 2 4 3)"; found by
        /// search when omitted
        #[arg(long)]
        tau: Option<String>,
        /// graph6 string, or '-' for stdin batch mode
        graph: String,
    },
    /// Sweep all sc-graphs on n vertices and report trichotomy verdicts
    Conjecture {
        #[arg(long)]
        n: usize,
        /// Worker threads; output is byte-identical for any value
        #[arg(long, default_value_t = NonZeroUsize::new(1).unwrap())]
        jobs: NonZeroUsize,
        /// Write the JSON-lines reports here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a block construction as graph6
    Construct {
        #[command(flatten)]
        which: ConstructWhich,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DetectWhat {
    /// Induced 5-cycle
    #[arg(long)]
    c5: bool,
    /// Skew partition
    #[arg(long)]
    skew: bool,
    /// Symmetric partition
    #[arg(long)]
    symmetric: bool,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConstructWhich {
    /// P4-construction of the given graph
    #[arg(long, value_name = "G6")]
    p4: Option<String>,
    /// J-construction of two graphs
    #[arg(long, value_name = "G6", num_args = 2)]
    join: Option<Vec<String>>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let guards = guards_from_env();
    let code = match cli.command {
        Command::Enum { n } => run_enum(n, guards.enumeration),
        Command::Antimorphism { pow2, graph } => {
            per_graph(&graph, |g| run_antimorphism(g, pow2))
        }
        Command::P4Partition { graph } => per_graph(&graph, run_p4_partition),
        Command::Detect { what, graph } => per_graph(&graph, |g| run_detect(g, &what, guards.detectors)),
        Command::TheoremM { tau, graph } => {
            per_graph(&graph, |g| run_theorem_m(g, tau.as_deref()))
        }
        Command::Conjecture { n, jobs, out } => run_conjecture(n, jobs.get(), out, guards),
        Command::Construct { which } => run_construct(&which),
    };
    match code {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(classify(&err))
        }
    }
}

#[derive(Clone, Copy)]
struct Guards {
    enumeration: usize,
    detectors: DetectorGuards,
}

fn guards_from_env() -> Guards {
    let mut guards = Guards {
        enumeration: DEFAULT_ENUMERATION_GUARD,
        detectors: DetectorGuards::default(),
    };
    if let Ok(text) = std::env::var("SCGRAPH_MAX_N") {
        if let Ok(max) = text.parse::<usize>() {
            guards.enumeration = max;
            guards.detectors = DetectorGuards { skew: max, symmetric: max };
        } else {
            eprintln!("warning: ignoring unparsable SCGRAPH_MAX_N={text}");
        }
    }
    guards
}

/// Absence of a witness is a result, not an error.
fn classify(err: &Error) -> u8 {
    match err {
        Error::NotSelfComplementary | Error::NoEndVertex => 1,
        _ => 2,
    }
}

/// Run an action on one graph, or on every stdin line for '-'.
/// The overall exit code is the worst per-graph code.
fn per_graph(input: &str, action: impl Fn(&Graph) -> Result<u8, Error>) -> Result<u8, Error> {
    let run_one = |line: &str| -> u8 {
        match graph6::parse(line).and_then(|g| action(&g)) {
            Ok(code) => code,
            Err(err) => {
                eprintln!("error: {err}");
                classify(&err)
            }
        }
    };
    if input == "-" {
        let mut worst = 0;
        for line in io::stdin().lock().lines() {
            let line = line.map_err(|_| Error::Graph6 {
                reason: scgraph_core::error::Graph6Error::Empty,
            })?;
            if line.trim().is_empty() {
                continue;
            }
            worst = worst.max(run_one(line.trim()));
        }
        Ok(worst)
    } else {
        Ok(run_one(input))
    }
}

fn run_enum(n: usize, guard: usize) -> Result<u8, Error> {
    let graphs = scgraph_core::enumerate_sc_graphs_with_guard(n, guard)?;
    for g in &graphs {
        outln!("{}", graph6::write(g));
    }
    Ok(0)
}

fn run_antimorphism(g: &Graph, pow2: bool) -> Result<u8, Error> {
    let found = if pow2 {
        match find_power_of_two_antimorphism(g) {
            Ok(tau) => Some(tau),
            Err(Error::NotSelfComplementary) => None,
            Err(err) => return Err(err),
        }
    } else {
        find_antimorphism(g)
    };
    match found {
        Some(tau) => {
            outln!("{}", tau.cycle_decomposition());
            Ok(0)
        }
        None => {
            outln!("none");
            Ok(1)
        }
    }
}

fn run_p4_partition(g: &Graph) -> Result<u8, Error> {
    let partition = match p4_partition(g) {
        Ok(partition) => partition,
        Err(Error::NotSelfComplementary) => {
            outln!("none");
            eprintln!("error: {}", Error::NotSelfComplementary);
            return Ok(1);
        }
        Err(err) => return Err(err),
    };
    for quad in &partition.quads {
        outln!("{}-{}-{}-{}", quad[0], quad[1], quad[2], quad[3]);
    }
    if let Some(v) = partition.leftover {
        outln!("leftover: {v}");
    }
    outln!("{}", Value::from_iter(partition.quads.iter().map(|q| json!(q))));
    Ok(0)
}

fn run_detect(g: &Graph, what: &DetectWhat, guards: DetectorGuards) -> Result<u8, Error> {
    let witness: Option<Value> = if what.c5 {
        find_induced_c5(g).map(|cycle| json!(cycle))
    } else if what.skew {
        find_skew_partition_with_guard(g, guards.skew)?.map(|w| skew_json(&w))
    } else {
        find_symmetric_partition_with_guard(g, guards.symmetric)?.map(|w| symmetric_json(&w))
    };
    match witness {
        Some(value) => {
            outln!("{value}");
            Ok(0)
        }
        None => {
            outln!("none");
            Ok(1)
        }
    }
}

fn run_theorem_m(g: &Graph, tau_text: Option<&str>) -> Result<u8, Error> {
    let n = g.order();
    let tau = match tau_text {
        Some(text) => Some(parse_cycles(text, n)?),
        None => {
            let eligible = n == 5 || (n >= 8 && (n - 4).is_multiple_of(4));
            eligible.then(|| find_antimorphism_with_cycle_lengths(g, &[4, n - 4])).flatten()
        }
    };
    let Some(tau) = tau else {
        outln!("none");
        return Ok(1);
    };
    let outcome = theorem_m_decompose(g, &tau)?;
    if outcome.via_fallback {
        eprintln!("warning: explicit witness failed verification; used full search");
    }
    outln!(
        "{}",
        json!({
            "case": outcome.case,
            "kind": outcome.witness.kind().as_str(),
            "witness": witness_json(&outcome.witness),
        })
    );
    Ok(0)
}

fn run_conjecture(
    n: usize,
    jobs: usize,
    out: Option<PathBuf>,
    guards: Guards,
) -> Result<u8, Error> {
    let graphs = scgraph_core::enumerate_sc_graphs_with_guard(n, guards.enumeration)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let reports: Result<Vec<StructureReport>, Error> = pool.install(|| {
        use rayon::prelude::*;
        graphs
            .par_iter()
            .map(|g| conjecture_check_with_guards(g, guards.detectors))
            .collect()
    });
    let reports = reports?;
    let mut lines = String::new();
    let mut holds = 0usize;
    for report in &reports {
        lines.push_str(&report_json(report).to_string());
        lines.push('\n');
        if report.conjecture_holds {
            holds += 1;
        }
    }
    match &out {
        Some(path) => {
            File::create(path)
                .and_then(|mut f| f.write_all(lines.as_bytes()))
                .map_err(|err| {
                    eprintln!("error: cannot write {}: {err}", path.display());
                    Error::Inconsistency("output file not writable")
                })?;
        }
        None => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(lines.as_bytes()).is_err() {
                std::process::exit(0);
            }
        }
    }
    for report in &reports {
        if !report.conjecture_holds {
            outln!("counterexample: {}", report.graph6);
        }
    }
    let scope = if n % 4 == 1 { " (out of conjecture scope: n = 4k+1)" } else { "" };
    outln!("n={n}: {} graphs, witnesses for {holds}/{}{scope}", reports.len(), reports.len());
    Ok(0)
}

fn run_construct(which: &ConstructWhich) -> Result<u8, Error> {
    let result = if let Some(text) = &which.p4 {
        let (g, _) = p4_construction(&graph6::parse(text)?);
        g
    } else {
        let parts = which.join.as_ref().expect("clap enforces the group");
        j_construction(&graph6::parse(&parts[0])?, &graph6::parse(&parts[1])?)
    };
    outln!("{}", graph6::write(&result));
    Ok(0)
}

fn vertices_json(set: VertexSet) -> Value {
    json!(set.to_vec())
}

fn skew_json(w: &SkewPartition) -> Value {
    json!({
        "A": vertices_json(w.a),
        "B": vertices_json(w.b),
        "C": vertices_json(w.c),
        "D": vertices_json(w.d),
    })
}

fn symmetric_json(w: &SymmetricPartition) -> Value {
    json!({
        "A": vertices_json(w.a),
        "B": vertices_json(w.b),
        "C": vertices_json(w.c),
        "D": vertices_json(w.d),
    })
}

fn witness_json(witness: &StructureWitness) -> Value {
    match witness {
        StructureWitness::C5(cycle) => json!(cycle),
        StructureWitness::Skew(w) => skew_json(w),
        StructureWitness::Symmetric(w) => symmetric_json(w),
    }
}

fn report_json(report: &StructureReport) -> Value {
    json!({
        "graph": report.graph6,
        "n": report.n,
        "c5": report.c5.map(|cycle| json!(cycle)),
        "skew": report.skew.as_ref().map(skew_json),
        "symmetric": report.symmetric.as_ref().map(symmetric_json),
        "conjecture_holds": report.conjecture_holds,
        "theorem_m": report.theorem_m.as_ref().map(|outcome| {
            json!({ "case": outcome.case, "kind": outcome.witness.kind().as_str() })
        }),
    })
}
