use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use braided_core::diagram::{eval_text, Context};
use braided_core::examples::double::{normal_order, NCWord};
use braided_core::examples::registry::{example, Example, RegistryError};
use braided_core::scalars::Field;
use braided_core::suites::{self, SuiteError};

const PASS: u8 = 0;
const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;
const INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "braided",
    version,
    about = "Exact checks for Hopf algebras in braided categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Dump a named example as canonical JSON
    Example {
        /// braided-line:N, anyonic-line:n, kZn:n, bosonization:kZ2-fermion or broken-antipode
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a check suite
    Check {
        /// hopf, crossed, dy-braiding, cross-product, radford, qbg, bosonize,
        /// transmute, ribbon, line, double, quiver or all
        suite: String,
        #[arg(long)]
        example: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate a diagram expression against the structure maps of an example
    Eval {
        #[arg(long, default_value = "anyonic-line:2")]
        context: String,
        /// Read the example from a JSON dump instead of the registry
        #[arg(long)]
        file: Option<PathBuf>,
        expr: String,
    },
    /// Normal-order a word in x, t, t^-1, y
    NormalOrder {
        /// generic, or root:n for q a primitive n-th root of unity
        #[arg(long, default_value = "generic")]
        q: String,
        word: String,
    },
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn registry_code(e: &RegistryError) -> u8 {
    match e {
        RegistryError::Unknown(_) | RegistryError::Parameter(..) => USAGE,
        _ => INPUT,
    }
}

fn load_example(name: &str, file: Option<&PathBuf>) -> Result<Example, ExitCode> {
    match file {
        Some(p) => {
            let text =
                fs::read_to_string(p).map_err(|e| fail(INPUT, format!("{}: {e}", p.display())))?;
            Example::load(&text).map_err(|e| fail(INPUT, e))
        }
        None => example(name).map_err(|e| fail(registry_code(&e), e)),
    }
}

fn parse_field(s: &str) -> Option<Field> {
    match s {
        "generic" => Some(Field::RationalFunctions),
        _ => s
            .strip_prefix("root:")?
            .parse::<u32>()
            .ok()
            .filter(|&n| n >= 2)
            .map(Field::Cyclotomic),
    }
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Example { name, out } => {
            let text = match example(&name).and_then(|e| e.dump()) {
                Ok(t) => t,
                Err(e) => return fail(registry_code(&e), e),
            };
            match out {
                Some(p) => {
                    if let Err(e) = fs::write(&p, text) {
                        return fail(INPUT, format!("{}: {e}", p.display()));
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(PASS)
        }
        Command::Check {
            suite,
            example,
            format,
        } => match suites::run(&suite, example.as_deref()) {
            Ok(r) => {
                match format {
                    Format::Text => print!("{}", r.render()),
                    Format::Json => {
                        println!("{}", serde_json::to_string_pretty(&r.to_json()).unwrap())
                    }
                }
                ExitCode::from(if r.passed() { PASS } else { CHECK_FAILED })
            }
            Err(e @ (SuiteError::UnknownSuite(_) | SuiteError::NoExample(_))) => fail(USAGE, e),
            Err(SuiteError::Registry(e)) => fail(registry_code(&e), e),
            Err(e) => fail(INPUT, e),
        },
        Command::Eval {
            context,
            file,
            expr,
        } => {
            let ex = match load_example(&context, file.as_ref()) {
                Ok(e) => e,
                Err(c) => return c,
            };
            let ctx = Context::for_hopf(ex.hopf());
            match eval_text(&expr, &ctx) {
                Ok(m) => {
                    println!("{} -> {}", m.dom().name(), m.cod().name());
                    for (i, j, v) in m.triples() {
                        println!("{i} {j} {v}");
                    }
                    ExitCode::from(PASS)
                }
                Err(e) => fail(INPUT, e),
            }
        }
        Command::NormalOrder { q, word } => {
            let Some(field) = parse_field(&q) else {
                return fail(
                    USAGE,
                    format!("--q must be `generic` or `root:n` with n ≥ 2, got `{q}`"),
                );
            };
            match NCWord::parse(field, &word) {
                Ok(w) => {
                    println!("{}", normal_order(&w));
                    ExitCode::from(PASS)
                }
                Err(e) => fail(INPUT, e),
            }
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { PASS };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}
