use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mbd::battery::{self, Status, Suite};
use mbd::formats::{
    partition_json, table_json, to_edge_list, to_graph6, to_json_graph, transcript_json, transcript_text,
};
use mbd::strategies::{parse_strategy, SpecError};
use mbd::{exit, families, resolve_graph, GraphArgError, BUDGET_ENV};
use mbd_core::game::{GameConfig, Player};
use mbd_core::graph::Graph;
use mbd_core::invariants::{domination_number, independence_number, matching_number, vertex_cover_number};
use mbd_core::local_domination::local_domination_number;
use mbd_core::solver::{solve_with, SolveError, SolverOptions, DEFAULT_BUDGET};
use mbd_core::star_partition::{lex_optimal_star_partition, star_partition_width};
use mbd_core::strategy::{play_match, MatchError, StrategyError};
use mbd_core::thresholds::{threshold, threshold_table, CellValue, CheckStatus, ThresholdError, ThresholdKind};

#[derive(Parser)]
#[command(name = "mbd", version, about = "Biased Maker-Breaker domination game toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a graph from a named family.
    Generate {
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Decide the winner of one game.
    Solve {
        graph: String,
        #[command(flatten)]
        game: GameArgs,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Compute one threshold, or the table of all four up to an index.
    Threshold {
        graph: String,
        #[arg(long, value_parser = parse_kind, requires = "index", conflicts_with = "table")]
        kind: Option<ThresholdKind>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        index: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), required_unless_present = "kind")]
        table: Option<u64>,
        /// Print the table as JSON.
        #[arg(long, requires = "table")]
        json: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Compute a graph invariant: gamma, nu, tau, alpha, ltilde:L, sigma or
    /// lexstar.
    Invariant {
        graph: String,
        #[arg(long)]
        name: String,
    },
    /// Play two strategies against each other.
    Match {
        graph: String,
        #[command(flatten)]
        game: GameArgs,
        #[arg(long)]
        dstrat: String,
        #[arg(long)]
        sstrat: String,
        /// Write the transcript here; JSON when the name ends in `.json`.
        #[arg(long)]
        transcript: Option<String>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Run the regression battery.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = SuiteArg::Quick)]
        suite: SuiteArg,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<String>,
        /// Only run these criteria.
        #[arg(long, value_delimiter = ',')]
        criterion: Vec<u8>,
        /// Leave wall times out of the report.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Args)]
struct GameArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    a: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    b: u64,
    #[arg(long, value_parser = parse_player)]
    starter: Player,
}

impl GameArgs {
    fn config(&self) -> GameConfig {
        GameConfig::new(self.a as usize, self.b as usize, self.starter).expect("biases are positive")
    }
}

#[derive(Args)]
struct BudgetArg {
    /// Solver node budget.
    #[arg(long, env = BUDGET_ENV, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

impl BudgetArg {
    fn options(&self) -> SolverOptions {
        SolverOptions::with_budget(self.budget)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Quick,
    Full,
}

fn parse_player(s: &str) -> Result<Player, String> {
    match s {
        "D" | "d" => Ok(Player::Dominator),
        "S" | "s" => Ok(Player::Staller),
        _ => Err("expected D or S".into()),
    }
}

fn parse_kind(s: &str) -> Result<ThresholdKind, String> {
    ThresholdKind::from_label(s).ok_or_else(|| "expected a, a', b or b'".into())
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

impl From<GraphArgError> for Failure {
    fn from(e: GraphArgError) -> Self {
        let code = match e {
            GraphArgError::Io { .. } => exit::OTHER,
            _ => exit::MALFORMED_GRAPH,
        };
        fail(code, e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        fail(exit::BUDGET, e.to_string())
    }
}

impl From<ThresholdError> for Failure {
    fn from(e: ThresholdError) -> Self {
        match e {
            ThresholdError::Solve(s) => s.into(),
            other => fail(exit::OTHER, other.to_string()),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        let code = match e {
            SpecError::Role { .. } => exit::INAPPLICABLE_STRATEGY,
            _ => 2,
        };
        fail(code, e.to_string())
    }
}

impl From<MatchError> for Failure {
    fn from(e: MatchError) -> Self {
        let code = match &e {
            MatchError::Strategy { error: StrategyError::Inapplicable(_), .. } => exit::INAPPLICABLE_STRATEGY,
            MatchError::Strategy { error: StrategyError::Solve(_), .. } => exit::BUDGET,
            _ => exit::OTHER,
        };
        fail(code, e.to_string())
    }
}

fn write_output(dest: &str, text: &str) -> Result<(), Failure> {
    if dest == "-" {
        print!("{text}");
        Ok(())
    } else {
        fs::write(dest, text).map_err(|e| fail(exit::OTHER, format!("{dest}: {e}")))
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Generate { family, params, format } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let g = families::generate(&family, &params).map_err(|e| fail(exit::MALFORMED_GRAPH, e.to_string()))?;
            match format {
                Format::Graph6 => println!("{}", to_graph6(&g)),
                Format::Edges => print!("{}", to_edge_list(&g)),
                Format::Json => println!("{}", to_json_graph(&g)),
            }
        }
        Command::Solve { graph, game, budget } => {
            let g = resolve_graph(&graph)?;
            println!("{}", solve_with(&g, game.config(), budget.options())?);
        }
        Command::Threshold { graph, kind, index, table, json, budget } => {
            let g = resolve_graph(&graph)?;
            if let (Some(kind), Some(index)) = (kind, index) {
                println!("{}", threshold(&g, kind, index as usize, budget.options())?);
                return Ok(exit::OK);
            }
            let max = table.expect("clap requires --kind or --table") as usize;
            let t = threshold_table(&g, max, budget.options())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&table_json(&g, &t)).expect("plain data"));
            } else {
                for c in &t.cells {
                    let v = match c.value {
                        CellValue::Value(v) => v.to_string(),
                        CellValue::Undecided => "undecided".into(),
                    };
                    println!("{}_{}={v}", c.kind.label(), c.index);
                }
                for c in &t.checks {
                    let status = match c.status {
                        CheckStatus::Pass => "pass",
                        CheckStatus::Fail => "FAIL",
                        CheckStatus::Skipped => "skipped",
                    };
                    println!("check {status}: {} {}", c.name, c.detail);
                }
            }
            if !t.all_checks_pass() {
                return Ok(exit::CHECK_FAILED);
            }
            if t.cells.iter().any(|c| c.value == CellValue::Undecided) {
                return Ok(exit::BUDGET);
            }
        }
        Command::Invariant { graph, name } => {
            let g = resolve_graph(&graph)?;
            println!("{}", invariant(&g, &name)?);
        }
        Command::Match { graph, game, dstrat, sstrat, transcript, budget } => {
            let g = resolve_graph(&graph)?;
            let cfg = game.config();
            let mut d = parse_strategy(&dstrat, Player::Dominator, budget.options())?;
            let mut s = parse_strategy(&sstrat, Player::Staller, budget.options())?;
            let record = play_match(&g, &cfg, d.as_mut(), s.as_mut())?;
            if let Some(dest) = transcript {
                let text = if dest.ends_with(".json") {
                    let v = transcript_json(&g, &cfg, &d.name(), &s.name(), &record);
                    serde_json::to_string_pretty(&v).expect("plain data") + "\n"
                } else {
                    transcript_text(&record)
                };
                write_output(&dest, &text)?;
            }
            println!("{}", record.winner);
        }
        Command::VerifyPaper { suite, json, criterion, no_timing } => {
            let suite = match suite {
                SuiteArg::Quick => Suite::Quick,
                SuiteArg::Full => Suite::Full,
            };
            let only = (!criterion.is_empty()).then_some(criterion.as_slice());
            let report = battery::run(suite, only, !no_timing);
            if let Some(dest) = &json {
                let text = serde_json::to_string_pretty(&report).expect("plain data") + "\n";
                write_output(dest, &text)?;
            }
            if json.as_deref() != Some("-") {
                for c in &report.checks {
                    println!(
                        "{:<14} [{:>2}] {} | {} | expected {} | observed {}",
                        c.status.label(),
                        c.criterion,
                        c.id,
                        c.instance,
                        c.expected,
                        c.observed
                    );
                }
                for c in &report.criteria {
                    println!(
                        "criterion {:>2}: {:<14} {} ({} checks)",
                        c.criterion,
                        c.status.label(),
                        c.title,
                        c.checks
                    );
                }
            }
            return Ok(match report.status() {
                Status::Fail => exit::CHECK_FAILED,
                Status::SkippedBudget => exit::BUDGET,
                Status::Pass | Status::NotApplicable => exit::OK,
            });
        }
    }
    Ok(exit::OK)
}

fn invariant(g: &Graph, name: &str) -> Result<String, Failure> {
    let value = match name {
        "gamma" => domination_number(g).to_string(),
        "nu" => matching_number(g).to_string(),
        "tau" => vertex_cover_number(g).to_string(),
        "alpha" => independence_number(g).to_string(),
        "sigma" => star_partition_width(g).to_string(),
        "lexstar" => {
            let p = lex_optimal_star_partition(g).map_err(|e| fail(exit::OTHER, e.to_string()))?;
            serde_json::to_string_pretty(&partition_json(g, &p)).expect("plain data")
        }
        other => {
            let ell = other.strip_prefix("ltilde:").and_then(|l| l.parse::<usize>().ok()).ok_or_else(|| {
                fail(
                    2,
                    format!("unknown invariant `{other}`; expected gamma, nu, tau, alpha, ltilde:L, sigma or lexstar"),
                )
            })?;
            local_domination_number(g, ell).map_err(|e| fail(exit::OTHER, e.to_string()))?.value.to_string()
        }
    };
    Ok(value)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    ExitCode::from(code as u8)
}
