use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use schmidt_cli::args::{parse_interval, parse_placement};
use schmidt_core::adversary::{foil, ScriptedOracle};
use schmidt_core::game::{read_trace, run_game, write_trace, GameParams, Placement, ScriptedStrategy};
use schmidt_core::region::{classify_region, join_labels, sweep, sweep_csv};
use schmidt_core::verify::{
    check_cantor, check_chain_lemma, check_omega_geometry, check_partial_vitali, check_run, Certificate,
};
use schmidt_core::vitali::{
    alice_strategy, build_target_tree_with, TargetTree, TaskKind, TreeConfig, TreeMode, DEFAULT_NODE_BUDGET,
};
use schmidt_core::{Interval, Rational};

#[derive(Parser)]
#[command(name = "schmidt", version, about = "Exact-arithmetic tools for Schmidt's (alpha, beta)-game")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the region labels of (alpha, beta).
    Classify(ParamArgs),
    /// Build a target tree and print it as JSON.
    BuildTree(TreeArgs),
    /// Play the tree strategy against a scripted Bob and print the JSON-lines trace.
    Run(RunArgs),
    /// Run Bob's pairing strategy against a scripted Alice and print the certificate.
    Foil(FoilArgs),
    /// Run finite checks and print their certificates; exit 1 if any fails.
    Verify(VerifyArgs),
    /// Classify a grid of parameters and print CSV.
    Sweep {
        #[arg(long, default_value_t = 120)]
        grid: usize,
    },
    /// Start the HTTP session service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    alpha: Rational,
    #[arg(long)]
    beta: Rational,
}

impl ParamArgs {
    fn params(&self) -> Result<GameParams> {
        Ok(GameParams::new(self.alpha.clone(), self.beta.clone())?)
    }
}

#[derive(Args)]
struct TreeArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Seed interval `lo,hi`; repeat for several seeds. Defaults to `0,1`.
    #[arg(long = "seed", value_parser = parse_interval, allow_hyphen_values = true)]
    seeds: Vec<Interval>,
    #[arg(long, default_value_t = 8)]
    depth: usize,
    #[arg(long, default_value = "single")]
    mode: TreeMode,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: usize,
}

impl TreeArgs {
    fn seeds(&self) -> Vec<Interval> {
        if self.seeds.is_empty() {
            vec![parse_interval("0,1").expect("unit interval")]
        } else {
            self.seeds.clone()
        }
    }

    fn build(&self) -> Result<TargetTree> {
        let config = TreeConfig { depth: self.depth, mode: self.mode, node_budget: self.node_budget };
        Ok(build_target_tree_with(&self.seeds(), &self.params.params()?, &config)?)
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    tree: TreeArgs,
    /// Bob's opening; the first seed by default.
    #[arg(long, value_parser = parse_interval, allow_hyphen_values = true)]
    first: Option<Interval>,
    /// Bob's placement rule: leftmost, rightmost, centered, alternating or random:<seed>.
    #[arg(long, value_parser = parse_placement, default_value = "random:0")]
    bob: Placement,
    /// Rounds to play; the tree depth plus one by default.
    #[arg(long)]
    rounds: Option<usize>,
    /// Write the trace here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FoilArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, value_parser = parse_interval, allow_hyphen_values = true, default_value = "0,1")]
    first: Interval,
    #[arg(long, default_value_t = 10)]
    depth: usize,
    /// Alice's placement rule on both boards.
    #[arg(long, value_parser = parse_placement, default_value = "leftmost")]
    oracle: Placement,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    OmegaGeometry,
    ChainLemma,
    PartialVitali,
    Run,
    Cantor,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "check", required = true)]
    checks: Vec<CheckKind>,
    #[command(flatten)]
    tree: TreeArgs,
    /// JSON-lines trace for `--check run`.
    #[arg(long)]
    trace: Option<PathBuf>,
}

fn verify(args: &VerifyArgs) -> Result<Vec<Certificate>> {
    let params = args.tree.params.params()?;
    let needs_tree = args.checks.iter().any(|c| matches!(c, CheckKind::ChainLemma | CheckKind::PartialVitali | CheckKind::Run));
    let tree = if needs_tree { Some(args.tree.build()?) } else { None };
    let mut certificates = Vec::new();
    for check in &args.checks {
        match check {
            CheckKind::OmegaGeometry => certificates.push(check_omega_geometry(&params)),
            CheckKind::Cantor => certificates.push(check_cantor(&params)),
            CheckKind::PartialVitali => certificates.push(check_partial_vitali(tree.as_ref().expect("tree built"))),
            CheckKind::ChainLemma => {
                let tree = tree.as_ref().expect("tree built");
                for task in tree.tasks() {
                    if let TaskKind::Intra { seed, level } = task.kind {
                        let omegas: Vec<Interval> =
                            tree.seeds()[seed].levels[level - 1].nodes.iter().map(|n| n.omega.clone()).collect();
                        certificates.push(check_chain_lemma(&omegas, &task.q));
                    }
                }
            }
            CheckKind::Run => {
                let path = args.trace.as_ref().ok_or_else(|| anyhow!("--check run needs --trace"))?;
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let history = read_trace(&params, &text)?;
                certificates.push(check_run(&history, tree.as_ref().expect("tree built"))?);
            }
        }
    }
    Ok(certificates)
}

/// Exit code 1 signals a failed check; errors exit 2.
fn execute(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify(p) => println!("{}", join_labels(&classify_region(&p.params()?))),
        Command::BuildTree(t) => println!("{}", serde_json::to_string(&t.build()?.dump())?),
        Command::Run(r) => {
            let tree = r.tree.build()?;
            let first = r.first.clone().unwrap_or_else(|| r.tree.seeds()[0].clone());
            let rounds = r.rounds.unwrap_or(tree.depth() + 1);
            let bob = ScriptedStrategy::bob(first, r.bob);
            let history = run_game(tree.params(), &bob, &alice_strategy(&tree), rounds)?;
            let trace = write_trace(&history);
            match &r.out {
                Some(path) => std::fs::write(path, trace).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{trace}"),
            }
            let certificate = check_run(&history, &tree)?;
            eprintln!("{}", serde_json::to_string(&certificate)?);
            if !certificate.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Foil(f) => {
            let mut oracle = ScriptedOracle { placement: f.oracle };
            let outcome = foil(&f.params.params()?, &mut oracle, f.depth, f.first)?;
            println!("{}", serde_json::to_string_pretty(&outcome.certificate)?);
            if !outcome.certificate.holds() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify(v) => {
            let certificates = verify(&v)?;
            println!("{}", serde_json::to_string_pretty(&certificates)?);
            if !certificates.iter().all(Certificate::passed) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Sweep { grid } => {
            if grid == 0 {
                bail!("--grid must be positive");
            }
            print!("{}", sweep_csv(&sweep(grid)));
        }
        Command::Serve { port } => {
            let runtime = tokio::runtime::Runtime::new()?;
            runtime.block_on(schmidt_cli::server::serve(port))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
