use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nothree::extensible::{build, density_report, ConstructionConfig};
use nothree::gadgets::{parabola_points, ParabolaParams};
use nothree::greedy::{self, mod2lex_slope_property, Engine, GreedyVariant, TABLE1_SIZES};
use nothree::{plot, pointfile, verify_brute, verify_fast, GridPoint};

/// Construct, verify and measure point sets in general position.
#[derive(Parser)]
#[command(name = "nothree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a point set and write it as TSV.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Check a TSV point set for collinear triples.
    Verify {
        /// Input file, `-` for stdin.
        #[arg(default_value = "-")]
        file: PathBuf,
        /// Use the cubic reference checker.
        #[arg(long)]
        brute: bool,
    },
    /// Count points in `[1, N]^2` for each N and normalize by `N / ln^(1+eps) N`.
    Density {
        file: PathBuf,
        /// Comma-separated grid sizes; `2^k` is accepted.
        #[arg(long, value_delimiter = ',', value_parser = parse_size, required = true)]
        grids: Vec<i64>,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
    },
    /// Render a TSV point set as an SVG scatter plot.
    Plot {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare the greedy constructions against the published density table.
    Table1 {
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Output {
    /// Write the TSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write a JSON run report.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenKind {
    /// The modular parabola `y = (x - a)^2 + b mod p` on `[0, p-1]^2`.
    Parabola {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        a: u64,
        #[arg(long, default_value_t = 0)]
        b: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Greedy lexicographic construction on `[1, n]^2`.
    Greedy {
        #[arg(long, value_parser = parse_variant, default_value = "lexlt")]
        variant: GreedyVariant,
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = EngineArg::Fast)]
        engine: EngineArg,
        #[command(flatten)]
        output: Output,
    },
    /// The extensible parabola-in-squares construction.
    Extensible {
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        #[arg(long, default_value_t = 24.0)]
        c: f64,
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        #[arg(long)]
        n_min: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Fast,
    Oracle,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Fast => Engine::Fast,
            EngineArg::Oracle => Engine::Oracle,
        }
    }
}

fn parse_variant(s: &str) -> Result<GreedyVariant, String> {
    s.parse()
}

fn parse_size(s: &str) -> Result<i64, String> {
    let bad = || format!("invalid grid size {s:?}");
    match s.trim().split_once('^') {
        Some(("2", k)) => {
            let k: u32 = k.parse().map_err(|_| bad())?;
            1i64.checked_shl(k).filter(|_| k < 63).ok_or_else(bad)
        }
        Some(_) => Err(bad()),
        None => s.trim().parse().map_err(|_| bad()),
    }
}

/// Exit status contract: 0 success, 1 verification failure, 2 bad input.
enum Failure {
    Verification(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

type CmdResult = Result<(), Failure>;

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn read_points(path: &Path) -> Result<Vec<GridPoint>, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(input_err)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    pointfile::parse(&text).map_err(input_err)
}

fn write_text(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(input_err),
    }
}

fn finish_gen(output: &Output, points: &[GridPoint], report: Value) -> CmdResult {
    if let Some(w) = verify_fast(points) {
        return Err(Failure::Verification(format!("generated set has a collinear triple: {w}")));
    }
    write_text(output.out.as_deref(), &pointfile::emit(points))?;
    if let Some(path) = &output.report {
        let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        write_text(Some(path), &text)?;
    }
    Ok(())
}

fn gen(kind: GenKind) -> CmdResult {
    match kind {
        GenKind::Parabola { p, a, b, output } => {
            let params = ParabolaParams::new(p, a, b).map_err(input_err)?;
            let points = parabola_points(&params);
            let report = json!({
                "command": "gen parabola",
                "config": { "p": p, "a": a, "b": b },
                "count": points.len(),
            });
            finish_gen(&output, &points, report)
        }
        GenKind::Greedy { variant, n, engine, output } => {
            if n < 1 {
                return Err(Failure::Input(format!("n must be positive, got {n}")));
            }
            let started = Instant::now();
            let run = Engine::from(engine).run(n, variant);
            eprintln!("{variant} n={n}: {} points in {:.2?}", run.points.len(), started.elapsed());
            let checkpoints: Vec<Value> = TABLE1_SIZES
                .iter()
                .filter(|&&m| m <= n)
                .map(|&m| json!({ "n": m, "count": run.count_within(m) }))
                .collect();
            let (below_two_thirds, max_ratio) = mod2lex_slope_property(&run.points);
            let report = json!({
                "command": "gen greedy",
                "config": { "variant": variant.name(), "n": n },
                "count": run.points.len(),
                "checkpoints": checkpoints,
                "skipped_columns": run.skipped,
                "max_row_ratio": max_ratio,
                "all_below_two_thirds": below_two_thirds,
            });
            finish_gen(&output, &run.points, report)
        }
        GenKind::Extensible { eps, c, n_max, n_min, output } => {
            let mut cfg = ConstructionConfig::new(eps, c, n_max).map_err(input_err)?;
            if let Some(n_min) = n_min {
                cfg = cfg.with_n_min(n_min).map_err(input_err)?;
            }
            let started = Instant::now();
            let state = build(cfg).map_err(|e| Failure::Verification(e.to_string()))?;
            eprintln!(
                "extensible eps={eps} c={c} n={}..={}: {} points in {:.2?}",
                cfg.n_min,
                cfg.n_max,
                state.accepted.len(),
                started.elapsed()
            );
            let grids: Vec<i64> = (cfg.n_min..=cfg.n_max.max(cfg.n_min)).map(|k| 1i64 << k).collect();
            let report = json!({
                "command": "gen extensible",
                "config": cfg,
                "count": state.accepted.len(),
                "squares": state.records().collect::<Vec<_>>(),
                "density": density_report(&state.accepted, &grids, eps),
            });
            finish_gen(&output, &state.accepted, report)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Gen { kind } => gen(kind),
        Command::Verify { file, brute } => {
            let points = read_points(&file)?;
            let witness = if brute { verify_brute(&points) } else { verify_fast(&points) };
            match witness {
                None => {
                    println!("OK {} points", points.len());
                    Ok(())
                }
                Some(w) => {
                    println!("COLLINEAR {w}");
                    Err(Failure::Verification(format!("collinear triple {w}")))
                }
            }
        }
        Command::Density { file, grids, eps } => {
            let points = read_points(&file)?;
            println!("N\tcount\tratio");
            for row in density_report(&points, &grids, eps) {
                println!("{}\t{}\t{:.6}", row.n, row.count, row.ratio);
            }
            Ok(())
        }
        Command::Plot { file, out } => {
            let points = read_points(&file)?;
            write_text(Some(&out), &plot::scatter_svg(&points))
        }
        Command::Table1 { engine, report } => {
            let started = Instant::now();
            let r = greedy::table1_check(engine.into());
            eprintln!("table1 finished in {:.2?}", started.elapsed());
            for v in &r.variants {
                let counts: Vec<String> = v.checkpoints.iter().map(|c| c.count.to_string()).collect();
                eprintln!("{:>10} {} {}", v.name, if v.matches { "MATCH" } else { "differs" }, counts.join(" "));
            }
            let text = serde_json::to_string_pretty(&r).expect("report serializes") + "\n";
            write_text(report.as_deref(), &text)?;
            if r.lex_match.is_some() && r.mod2lex_match.is_some() {
                Ok(())
            } else {
                Err(Failure::Verification("no row-bound convention reproduces the table".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verification(m) | Failure::Input(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
