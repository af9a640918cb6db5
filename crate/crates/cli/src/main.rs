use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tldkit::cellular::{gram, CellLabel};
use tldkit::diagram::{basis_count, evaluate_word, parse_word};
use tldkit::forked::{ftl_dim, ftl_multiply, ftl_quasihereditary, ftl_semisimple, FtlElement};
use tldkit::gramdet::{det_gram, quasihereditary, semisimple, semisimple_crosscheck, DetMethod, Verdict};
use tldkit::halfdiag::{enumerate, Variant};
use tldkit::poly::RationalValue;
use tldkit::verify::{run_suite, Suite};
use tldkit::Error;

/// Exact computations in type-D Temperley-Lieb algebras.
#[derive(Parser)]
#[command(name = "tldkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the half diagrams with p pairs on n dots, in basis order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value = "all")]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = ListFormat::Json)]
        format: ListFormat,
    },
    /// Print the Gram matrix of a cell.
    Gram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cell: CellLabel,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Json)]
        format: MatrixFormat,
    },
    /// Gram determinant of a cell; `all` runs every applicable route.
    Det {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cell: CellLabel,
        #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
        method: MethodArg,
    },
    /// Multiply a word of generators (e1, e2, ..., eb1) from left to right.
    Multiply {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
    Semisimple {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: RationalValue,
        /// Decide from the Gram determinants of all cells instead.
        #[arg(long)]
        crosscheck: bool,
    },
    Quasihereditary {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: RationalValue,
    },
    /// The forked quotient.
    Forked {
        #[command(subcommand)]
        command: ForkedCommand,
    },
    /// Dimension of the algebra, from the enumerated basis.
    Dimension {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forked: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum ForkedCommand {
    Dim {
        #[arg(long)]
        n: usize,
    },
    Semisimple {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: RationalValue,
    },
    Qh {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: RationalValue,
    },
    Multiply {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Json,
    Latex,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Recurrence,
    Closed,
    All,
}

/// Why a command did not succeed.
enum Failure {
    /// Bad flags or arguments.
    Input(Error),
    /// Routes disagree or a verification case failed.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDivisible | Error::DivisionByZero => Failure::Check(e.to_string()),
            _ => Failure::Input(e),
        }
    }
}

type Outcome = Result<String, Failure>;

fn json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn verdict(v: Result<Verdict, Error>) -> Outcome {
    Ok(json(&v?))
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Enumerate { n, p, variant, format } => {
            let basis = enumerate(n, p, variant)?;
            Ok(match format {
                ListFormat::Json => json(&basis.members()),
                ListFormat::Text => basis.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n"),
            })
        }
        Command::Gram { n, cell, format } => {
            let g = gram(n, cell)?;
            Ok(match format {
                MatrixFormat::Json => json(&g),
                MatrixFormat::Latex => g.to_latex().trim_end().to_string(),
                MatrixFormat::Csv => g.to_csv().trim_end().to_string(),
            })
        }
        Command::Det { n, cell, method } => det(n, cell, method),
        Command::Multiply { n, word } => Ok(json(&evaluate_word(n, &parse_word(&word)?)?)),
        Command::Semisimple { n, delta, crosscheck } => {
            if crosscheck {
                verdict(semisimple_crosscheck(n, &delta))
            } else {
                verdict(semisimple(n, &delta))
            }
        }
        Command::Quasihereditary { n, delta } => verdict(quasihereditary(n, &delta)),
        Command::Forked { command } => forked(command),
        Command::Dimension { n, forked } => {
            let dim = if forked { ftl_dim(n)? } else { basis_count(n)?.total as u128 };
            Ok(format!(r#"{{"n":{n},"dimension":{dim}}}"#))
        }
        Command::Verify { suite, max_n } => verify(&suite, max_n),
    }
}

fn det(n: usize, cell: CellLabel, method: MethodArg) -> Outcome {
    let methods = match method {
        MethodArg::Direct => vec![DetMethod::Direct],
        MethodArg::Recurrence => vec![DetMethod::Recurrence],
        MethodArg::Closed => vec![DetMethod::Closed],
        MethodArg::All => DetMethod::ALL.to_vec(),
    };
    let several = methods.len() > 1;
    let mut results = Vec::new();
    for m in methods {
        match det_gram(n, cell, m) {
            Err(Error::MethodUnsupported { .. }) if several => {}
            r => results.push(r?),
        }
    }
    let lines: Vec<String> = results.iter().map(json).collect();
    if results.windows(2).any(|w| w[0].det != w[1].det) {
        return Err(Failure::Check(format!("determinant routes disagree\n{}", lines.join("\n"))));
    }
    Ok(lines.join("\n"))
}

fn forked(cmd: ForkedCommand) -> Outcome {
    match cmd {
        ForkedCommand::Dim { n } => Ok(format!(r#"{{"n":{n},"dimension":{}}}"#, ftl_dim(n)?)),
        ForkedCommand::Semisimple { n, delta } => verdict(ftl_semisimple(n, &delta)),
        ForkedCommand::Qh { n, delta } => verdict(ftl_quasihereditary(n, &delta)),
        ForkedCommand::Multiply { n, word } => {
            let word = parse_word(&word)?;
            let mut acc = FtlElement::project(evaluate_word(n, &[])?);
            for g in word {
                acc = ftl_multiply(&acc, &FtlElement::project(g.diagram(n)?))?;
            }
            Ok(json(&acc))
        }
    }
}

fn verify(suite: &str, max_n: usize) -> Outcome {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
    let mut out = Vec::new();
    let mut failed = false;
    for s in suites {
        let report = run_suite(s, max_n)?;
        let passed = report.cases.iter().filter(|c| c.passed).count();
        out.push(format!("{}: {passed}/{} cases passed", report.suite, report.cases.len()));
        for c in report.failures() {
            failed = true;
            out.push(format!("  FAIL {}: {}", c.key, c.detail));
        }
    }
    let text = out.join("\n");
    if failed {
        Err(Failure::Check(text))
    } else {
        Ok(text)
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("TLDKIT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| format!("TLDKIT_THREADS must be a positive integer, got {raw:?}"))?;
    if threads == 0 {
        return Err("TLDKIT_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let mut stdout = std::io::stdout().lock();
    match run(cli.command) {
        Ok(text) => {
            let _ = writeln!(stdout, "{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(text)) => {
            let _ = writeln!(stdout, "{text}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
