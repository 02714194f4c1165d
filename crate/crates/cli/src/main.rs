//! `qcohom`: verify the finite claims about the quantum cohomology rings of
//! IG(2,2n), reduce ideals from files, and count eliminant solutions.
//!
//! Exit codes: 0 when every requested claim passes, 1 when any claim fails,
//! 2 on configuration or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qcohom::ig_model::z_count;
use qcohom_cli::config::{
    parse_claims, FaultInjection, OutputFormat, QMode, VerifyConfig,
};
use qcohom_cli::ideal_io::{basis_report, parse_ideal, parse_order};
use qcohom_cli::verify;

#[derive(Parser)]
#[command(name = "qcohom", version, about = "Exact verifier for IG(2,2n) quantum cohomology presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification claims and emit a pass/fail report.
    Verify {
        /// Half-rank parameter of IG(2,2n); must be at least 2.
        #[arg(long)]
        n: usize,
        /// Quantum parameter: a nonzero rational like `-1` or `5/3`, or `generic`.
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        q: String,
        /// Seed for all randomized claims.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Claims to run: `all` or a comma-separated list like `C1,C4,C10`.
        #[arg(long, default_value = "all")]
        claims: String,
        /// Trials per randomized check.
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Report format: `json` or `text`.
        #[arg(long, default_value = "json")]
        format: String,
        /// Write the report to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow expensive runs with n >= 5.
        #[arg(long)]
        big: bool,
        /// Deliberately corrupt C1's input (failure-path testing only).
        #[arg(long, hide = true)]
        fault_inject_c1: bool,
    },
    /// Reduce an ideal read from a JSON file and print its basis.
    Gb {
        /// Path to the ideal description.
        #[arg(long)]
        input: PathBuf,
        /// Monomial order: `lex` or `grevlex`.
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Count eliminant solutions for the quantum system at q = -1.
    Zcount {
        /// Half-rank parameter of IG(2,2n); must be at least 2.
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            n,
            q,
            seed,
            claims,
            trials,
            format,
            out,
            big,
            fault_inject_c1,
        } => {
            let cfg = VerifyConfig {
                n,
                q_mode: q.parse::<QMode>()?,
                seed,
                trials,
                claims: parse_claims(&claims)?,
                format: format.parse::<OutputFormat>()?,
                big,
                fault: if fault_inject_c1 {
                    FaultInjection::PerturbC1
                } else {
                    FaultInjection::None
                },
            };
            cfg.validate()?;
            let report = verify(&cfg);
            let rendered = report.render(cfg.format);
            match &out {
                Some(path) => std::fs::write(path, &rendered)
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
                None => print!("{rendered}"),
            }
            Ok(if report.overall {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gb { input, order } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))?;
            let loaded = parse_ideal(&text)?;
            let order = parse_order(&order)?;
            print!("{}", basis_report(&loaded, &order)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Zcount { n } => {
            let count = z_count(n).map_err(|e| e.to_string())?;
            let out = serde_json::json!({
                "n": n,
                "squarefree_degree": count.squarefree_degree,
                "excluded_degree": count.excluded_degree,
                "ordered_count": count.ordered_count,
                "point_count": count.point_count,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("count serialization cannot fail")
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
