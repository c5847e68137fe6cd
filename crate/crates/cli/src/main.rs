mod catalog;
mod named;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gbei::cograph::{cotree, CographError, Cotree};
use gbei::graph::{parse_graph6, Graph, GraphError};
use gbei::homology::{gbei_betti_table, homological_summary, HomologyError, Limits, OracleConfig, StrategyChoice};
use gbei::poly::{
    gbei_generators, ideal_equal, ideal_intersection, prime_generators, Field, FieldChoice, MonomialOrder, PolyError,
    PolyRing, VariableGrid,
};
use gbei::primedec::{cut_sets, minimal_primes, PrimeComponent, PrimeDecError};
use gbei::reg::{classify_reg2, construct_with_regularity, default_rows, reg, Mode, RegError};
use gbei::verify::{Suite, SuiteReport, Verifier};
use gbei::with_field;

#[derive(Parser)]
#[command(name = "gbei", version, about = "Generalized binomial edge ideals J_{K_m,G}")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Coefficient field: a prime below 2^31, or 0 for the rationals.
    #[arg(long, global = true, env = "GBEI_FIELD_CHAR", default_value_t = 32003)]
    field_char: u64,
    /// Largest number of variables m*n the oracle accepts.
    #[arg(long, global = true, env = "GBEI_MAX_VARS", default_value_t = 36)]
    max_vars: usize,
    /// Largest degree cutoff (regularity bound + 1) the oracle accepts.
    #[arg(long, global = true, env = "GBEI_MAX_DEGREE", default_value_t = 16)]
    max_degree: usize,
    /// Oracle strategy.
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Monomial order for `ideal` and `primes --check`.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Full,
    SquarefreeDegeneration,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Formula,
    Oracle,
    Both,
}

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Named graph: path:n, complete:n, star:k, cycle:n, empty:n,
    /// multipartite:t1,t2,...; ',' joins families into a disjoint union.
    #[arg(long)]
    graph: Option<String>,
    /// graph6 code.
    #[arg(long)]
    graph6: Option<String>,
    /// Join of named parts separated by '+', e.g. empty:1+empty:1,complete:2.
    #[arg(long)]
    join: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// List the generators of J_{K_m,G}.
    Ideal {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        m: usize,
    },
    /// List the cut sets C(G).
    Cutsets {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// List the minimal primes P_T(K_m, G).
    Primes {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        m: usize,
        /// Check J = intersection of the P_T with Gröbner bases.
        #[arg(long)]
        check: bool,
    },
    /// Cotree of a P4-free graph, or an induced P4.
    Cograph {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Regularity of S/J_{K_m,G}.
    Reg {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
    },
    /// Betti table, depth, dimension, Cohen-Macaulay and Gorenstein flags.
    Summary {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        m: usize,
    },
    /// Regularity-2, CM and extremal Gorenstein classification.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        m: usize,
    },
    /// A connected graph on n vertices with regularity r.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Rows; defaults to the smallest feasible value.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run a verification suite, or all of them.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Regularity records for a graph6 stream, appended as JSONL.
    Catalog {
        /// graph6 file, one code per line, or '-' for stdin.
        #[arg(long)]
        input: String,
        /// Comma-separated row counts.
        #[arg(long, value_delimiter = ',', default_value = "3")]
        m: Vec<usize>,
        #[arg(long)]
        output: PathBuf,
        /// Skip (graph6, m) keys already in the output.
        #[arg(long)]
        resume: bool,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        /// Also compute the homological summary.
        #[arg(long)]
        summary: bool,
    },
}

/// Error with an explicit exit status.
#[derive(Debug)]
struct Coded {
    code: u8,
    msg: String,
}

impl fmt::Display for Coded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.msg)
    }
}

impl std::error::Error for Coded {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Coded { code: 2, msg: msg.into() }.into()
}

fn failed(msg: impl Into<String>) -> anyhow::Error {
    Coded { code: 1, msg: msg.into() }.into()
}

/// 0 success, 1 verification failure, 2 usage error, 3 resource limit.
fn exit_code(e: &anyhow::Error) -> u8 {
    for cause in e.chain() {
        if let Some(c) = cause.downcast_ref::<Coded>() {
            return c.code;
        }
        if let Some(h) = cause.downcast_ref::<HomologyError>() {
            return match h {
                HomologyError::ResourceLimit(_) => 3,
                HomologyError::CutoffReached { .. } => 1,
                _ => 2,
            };
        }
        if let Some(r) = cause.downcast_ref::<RegError>() {
            return match r {
                RegError::Oracle(HomologyError::ResourceLimit(_)) => 3,
                RegError::Mismatch { .. } | RegError::OutOfBounds { .. } | RegError::FormulaConflict { .. } => 1,
                RegError::Oracle(HomologyError::CutoffReached { .. }) => 1,
                _ => 2,
            };
        }
        if let Some(p) = cause.downcast_ref::<PrimeDecError>() {
            return match p {
                PrimeDecError::ExhaustiveLimit { .. } => 3,
                _ => 2,
            };
        }
        if let Some(p) = cause.downcast_ref::<PolyError>() {
            return match p {
                PolyError::CoefficientGrowth { .. } => 3,
                _ => 2,
            };
        }
        if let Some(c) = cause.downcast_ref::<CographError>() {
            return match c {
                CographError::TooLarge(_) => 3,
                _ => 2,
            };
        }
        if cause.downcast_ref::<GraphError>().is_some() {
            return 2;
        }
    }
    1
}

impl GraphArgs {
    fn load(&self) -> Result<Graph> {
        let parsed = match (&self.graph, &self.graph6, &self.join) {
            (Some(expr), _, _) => named::parse_union(expr),
            (_, Some(code), _) => parse_graph6(code).map_err(Into::into),
            (_, _, Some(expr)) => named::parse_join(expr),
            _ => unreachable!("clap requires one graph source"),
        };
        parsed.map_err(|e| usage(format!("bad graph: {e:#}")))
    }
}

fn oracle_config(cli: &Cli) -> Result<OracleConfig> {
    let field = FieldChoice::from_characteristic(cli.field_char).map_err(|e| usage(e.to_string()))?;
    Ok(OracleConfig {
        field,
        max_vars: cli.max_vars,
        max_degree: cli.max_degree,
        strategy: match cli.strategy {
            StrategyArg::Auto => StrategyChoice::Auto,
            StrategyArg::Full => StrategyChoice::Full,
            StrategyArg::SquarefreeDegeneration => StrategyChoice::SquarefreeDegeneration,
        },
        limits: Limits::default(),
        ..OracleConfig::default()
    })
}

fn order(cli: &Cli) -> MonomialOrder {
    match cli.order {
        OrderArg::Degrevlex => MonomialOrder::DegRevLex,
        OrderArg::Lex => MonomialOrder::Lex,
    }
}

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Formula => Mode::Formula,
        ModeArg::Oracle => Mode::Oracle,
        ModeArg::Both => Mode::Both,
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string(value)?);
    } else {
        println!("{}", text());
    }
    Ok(())
}

fn render_cotree(t: &Cotree) -> String {
    let list = |ch: &[Cotree]| ch.iter().map(render_cotree).collect::<Vec<_>>().join(", ");
    match t {
        Cotree::Leaf(v) => v.to_string(),
        Cotree::Join(ch) => format!("join({})", list(ch)),
        Cotree::Union(ch) => format!("union({})", list(ch)),
    }
}

fn cmd_ideal(cli: &Cli, g: &Graph, m: usize) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(usage("graph has no edges: J_{K_m,G} is the zero ideal"));
    }
    let cfg = oracle_config(cli)?;
    let listing = with_field!(cfg.field, |f| {
        let ring = PolyRing::new(f, VariableGrid::new(m, g.n())?, order(cli));
        gbei_generators(&ring, g)?.listing()
    });
    emit(cli.json, &listing, || {
        let mut out = format!(
            "{} generators, m = {}, n = {}, char {}, {}",
            listing.generators.len(),
            listing.m,
            listing.n,
            listing.characteristic,
            listing.order
        );
        for p in &listing.generators {
            out.push_str("\n  ");
            out.push_str(p);
        }
        out
    })
}

fn decomposition_holds<F: Field>(
    field: F,
    g: &Graph,
    m: usize,
    order: MonomialOrder,
    primes: &[PrimeComponent],
) -> Result<bool> {
    let ring = PolyRing::new(field, VariableGrid::new(m, g.n())?, order);
    let j = gbei_generators(&ring, g)?;
    let mut acc = prime_generators(&ring, &primes[0])?;
    for p in &primes[1..] {
        acc = ideal_intersection(&acc, &prime_generators(&ring, p)?)?;
    }
    Ok(ideal_equal(&j, &acc)?)
}

fn cmd_primes(cli: &Cli, g: &Graph, m: usize, check: bool) -> Result<()> {
    let primes = minimal_primes(g, m)?;
    let cfg = oracle_config(cli)?;
    let verified = if check {
        Some(with_field!(cfg.field, |f| decomposition_holds(f, g, m, order(cli), &primes))?)
    } else {
        None
    };
    #[derive(Serialize)]
    struct Out<'a> {
        m: usize,
        primes: &'a [PrimeComponent],
        verified: Option<bool>,
    }
    emit(cli.json, &Out { m, primes: &primes, verified }, || {
        let mut out = String::new();
        for p in &primes {
            let cliques: Vec<String> = p.clique_blocks.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("T = {}: dim {}, cliques {}\n", p.t, p.dimension(), cliques.join(" ")));
        }
        match verified {
            Some(true) => out.push_str("decomposition verified"),
            Some(false) => out.push_str("decomposition FAILED"),
            None => {
                out.pop();
            }
        }
        out
    })?;
    if verified == Some(false) {
        return Err(failed("J differs from the intersection of its cut-set primes"));
    }
    Ok(())
}

fn cmd_cograph(cli: &Cli, g: &Graph) -> Result<()> {
    #[derive(Serialize)]
    struct Out {
        cograph: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        cotree: Option<Cotree>,
        #[serde(skip_serializing_if = "Option::is_none")]
        witness: Option<[usize; 4]>,
    }
    let out = match cotree(g) {
        Ok(t) => Out {
            cograph: true,
            cotree: Some(t),
            witness: None,
        },
        Err(CographError::InducedP4(p)) => Out {
            cograph: false,
            cotree: None,
            witness: Some(p),
        },
        Err(e) => return Err(e.into()),
    };
    emit(cli.json, &out, || match (&out.cotree, out.witness) {
        (Some(t), _) => format!("cotree {}", render_cotree(t)),
        (_, Some([a, b, c, d])) => format!("induced P4: {a}-{b}-{c}-{d}"),
        _ => unreachable!(),
    })
}

fn cmd_reg(cli: &Cli, g: &Graph, m: usize, how: ModeArg) -> Result<()> {
    let cfg = oracle_config(cli)?;
    let r = reg(g, m, mode(how), &cfg)?;
    emit(cli.json, &r, || {
        let value = r.value.map_or_else(|| format!("in [{}, {}]", r.lower, r.upper), |v| format!("= {v}"));
        format!("reg {value} ({}: {})", serde_json::to_value(r.provenance.tag).unwrap_or_default().as_str().unwrap_or(""), r.provenance.source)
    })
}

fn cmd_summary(cli: &Cli, g: &Graph, m: usize) -> Result<()> {
    let cfg = oracle_config(cli)?;
    let summary = homological_summary(g, m, &cfg)?;
    let betti = gbei_betti_table(g, m, &cfg)?;
    #[derive(Serialize)]
    struct Out<'a> {
        summary: gbei::homology::HomologicalSummary,
        betti: &'a gbei::homology::BettiTable,
    }
    emit(cli.json, &Out { summary, betti: &betti }, || {
        let mut out = format!(
            "reg {}, pd {}, depth {}, dim {}, CM {}, Gorenstein {}",
            summary.regularity, summary.proj_dim, summary.depth, summary.dim, summary.cohen_macaulay, summary.gorenstein
        );
        for ((i, j), v) in betti.entries() {
            out.push_str(&format!("\n  beta_{i},{j} = {v}"));
        }
        out
    })
}

fn cmd_verify(cli: &Cli, suite: &str) -> Result<()> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|e: gbei::verify::VerifyError| usage(e.to_string()))?]
    };
    let mut v = Verifier::new(oracle_config(cli)?);
    let mut reports: Vec<SuiteReport> = Vec::new();
    for s in suites {
        let r = v.run(s);
        if !cli.json {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            println!("{status} {} ({} checks, {} ms)", r.suite, r.checked, r.millis);
            for f in &r.failures {
                println!("  {}: {}", f.instance, f.detail);
            }
            for n in &r.notes {
                println!("  note: {n}");
            }
        }
        reports.push(r);
    }
    if cli.json {
        println!("{}", serde_json::to_string(&reports)?);
    }
    let failing: Vec<&SuiteReport> = reports.iter().filter(|r| !r.passed()).collect();
    if failing.is_empty() {
        return Ok(());
    }
    let names: Vec<&str> = failing.iter().map(|r| r.suite.name()).collect();
    let code = if failing.iter().all(|r| r.failures.iter().all(|f| f.resource_limit)) { 3 } else { 1 };
    Err(Coded {
        code,
        msg: format!("failing suites: {}", names.join(", ")),
    }
    .into())
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Ideal { graph, m } => cmd_ideal(cli, &graph.load()?, *m),
        Command::Cutsets { graph } => {
            let g = graph.load()?;
            let family = cut_sets(&g)?;
            emit(cli.json, &family, || {
                let sets: Vec<String> = family.sets.iter().map(|t| t.to_string()).collect();
                sets.join(" ")
            })
        }
        Command::Primes { graph, m, check } => cmd_primes(cli, &graph.load()?, *m, *check),
        Command::Cograph { graph } => cmd_cograph(cli, &graph.load()?),
        Command::Reg { graph, m, mode } => cmd_reg(cli, &graph.load()?, *m, *mode),
        Command::Summary { graph, m } => cmd_summary(cli, &graph.load()?, *m),
        Command::Classify { graph, m } => {
            let c = classify_reg2(&graph.load()?, *m)?;
            emit(cli.json, &c, || {
                format!(
                    "reg2 {}, cm_reg2 {}, extremal_gorenstein {} ({})",
                    c.reg2, c.cm_reg2, c.extremal_gorenstein, c.matched_case
                )
            })
        }
        Command::Construct { n, r, m } => {
            let m = m.unwrap_or_else(|| default_rows(*n, *r));
            let c = construct_with_regularity(*n, *r, m)?;
            emit(cli.json, &c, || format!("{} (graph6 {}), m = {m}: {}", c.description, c.graph6, c.citation))
        }
        Command::Verify { suite } => cmd_verify(cli, suite),
        Command::Catalog {
            input,
            m,
            output,
            resume,
            mode: how,
            summary,
        } => {
            if m.iter().any(|&r| r < 2) {
                bail!(usage("row counts must be at least 2"));
            }
            let opts = catalog::CatalogOptions {
                rows: m.clone(),
                mode: mode(*how),
                summary: *summary,
                resume: *resume,
                cfg: oracle_config(cli)?,
            };
            let counts = catalog::run(catalog::open_input(input)?, output, &opts)?;
            emit(cli.json, &counts, || {
                format!(
                    "{} records written, {} skipped, {} with errors",
                    counts.written, counts.skipped, counts.with_errors
                )
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
