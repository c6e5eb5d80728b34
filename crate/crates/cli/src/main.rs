//! `epiview`: world views, foundedness checks and cross-semantics reports
//! from the command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use epiview::foundedness::is_founded;
use epiview::harness::{bundled_corpus_dir, differential_report, run_corpus, world_views_with, Semantics};
use epiview::syntax::parse_program_with;
use epiview::{parse_theory, BeliefView, Error, Program, Signature, Theory};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_NONE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "epiview", version, about = "World views of epistemic logic programs and modal theories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the world views of a program or theory.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "faeel", value_parser = parse_semantics)]
        semantics: Semantics,
        /// Annotate each view as founded or unfounded (program input only).
        #[arg(long)]
        explain: bool,
        /// Compute FAEEL views by direct enumeration even for programs.
        #[arg(long)]
        no_fast_path: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Decide whether a world view of a program is founded.
    CheckFounded {
        file: PathBuf,
        /// The view, written like `[{a},{a,b}]`.
        view: String,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run every semantics on one input and check how the results relate.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check the solvers against a corpus directory.
    Corpus {
        /// Defaults to the corpus bundled with the library.
        dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Extra atoms to add to the signature, comma separated.
    #[arg(long, value_delimiter = ',')]
    atoms: Vec<String>,
    /// Largest signature the enumerating solvers accept.
    #[arg(long, env = "EPIVIEW_MAX_ATOMS")]
    max_atoms: Option<usize>,
    /// Input syntax; inferred from the extension when absent.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Program,
    Theory,
}

fn parse_semantics(s: &str) -> Result<Semantics, String> {
    s.parse().map_err(|_| format!("expected one of g91, ael, weak, s5eq, faeel; got `{s}`"))
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CapExceeded { .. }) { EXIT_CAP } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

struct Input {
    label: String,
    theory: Theory,
    program: Option<Program>,
}

fn infer_mode(path: &Path) -> Mode {
    match path.extension().and_then(|e| e.to_str()) {
        Some("lp") => Mode::Program,
        _ => Mode::Theory,
    }
}

fn parse_with(text: &str, mode: Mode, hint: Option<&Signature>) -> Result<(Theory, Option<Program>), Error> {
    match mode {
        Mode::Program => {
            let p = parse_program_with(text, hint)?;
            Ok((p.to_theory(), Some(p)))
        }
        Mode::Theory => Ok((parse_theory(text, hint)?, None)),
    }
}

fn load(path: &Path, args: &InputArgs) -> Result<Input, Failure> {
    let label = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{label}: {e}")))?;
    let mode = args.mode.unwrap_or_else(|| infer_mode(path));
    let located = |e: Error| {
        let mut f = Failure::from(e);
        f.message = format!("{label}: {}", f.message);
        f
    };
    let (first, _) = parse_with(&text, mode, None).map_err(located)?;
    let mut hint = Signature::from_names(first.signature.names().map(str::to_string));
    for a in &args.atoms {
        let a = a.trim();
        if a.is_empty() || !a.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(usage(format!("invalid atom name `{a}` in --atoms")));
        }
        hint.intern(a);
    }
    hint.set_enumeration_cap(args.max_atoms.unwrap_or(Signature::DEFAULT_CAP));
    let (theory, program) = parse_with(&text, mode, Some(&hint)).map_err(located)?;
    Ok(Input { label, theory, program })
}

fn show_views(views: &[BeliefView], sig: &Signature) -> Vec<String> {
    views.iter().map(|v| v.display(sig).to_string()).collect()
}

fn solve(file: &Path, semantics: Semantics, explain: bool, fast_path: bool, args: &InputArgs) -> Result<u8, Failure> {
    let input = load(file, args)?;
    if explain && input.program.is_none() {
        return Err(usage("--explain needs a program input (use a .lp file or --mode program)"));
    }
    let sig = &input.theory.signature;
    let views = world_views_with(&input.theory, semantics, fast_path)?;
    let verdicts = match (&input.program, explain) {
        (Some(p), true) => Some(views.iter().map(|w| is_founded(p, w)).collect::<Result<Vec<_>, _>>()?),
        _ => None,
    };
    match args.format {
        Format::Json => {
            let mut out = json!({
                "input": input.label,
                "semantics": semantics.tag(),
                "world_views": views.iter().map(|w| w.to_names(sig)).collect::<Vec<_>>(),
            });
            if let Some(vs) = &verdicts {
                out["founded"] = json!(vs.iter().map(|v| v.founded).collect::<Vec<_>>());
                out["witnesses"] = json!(vs
                    .iter()
                    .map(|v| v.witness.as_ref().map(|u| u.to_json(sig)))
                    .collect::<Vec<_>>());
            }
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Format::Text => {
            let mut lines = show_views(&views, sig);
            if let Some(vs) = &verdicts {
                for (line, v) in lines.iter_mut().zip(vs) {
                    match &v.witness {
                        None => line.push_str(" founded"),
                        Some(u) => line.push_str(&format!(" unfounded {}", u.display(sig))),
                    }
                }
            }
            match lines.len() {
                0 => println!("no world views"),
                1 => println!("1 world view: {}", lines[0]),
                n => {
                    println!("{n} world views:");
                    for l in lines {
                        println!("{l}");
                    }
                }
            }
        }
    }
    Ok(if views.is_empty() { EXIT_NONE } else { EXIT_OK })
}

fn check_founded(file: &Path, view: &str, args: &InputArgs) -> Result<u8, Failure> {
    let input = load(file, args)?;
    let Some(p) = &input.program else {
        return Err(usage("check-founded needs a program input (use a .lp file or --mode program)"));
    };
    let sig = &p.signature;
    let w = BeliefView::parse(view, sig)?;
    let verdict = is_founded(p, &w)?;
    match args.format {
        Format::Json => {
            let out = json!({
                "input": input.label,
                "view": w.to_names(sig),
                "founded": verdict.founded,
                "witness": verdict.witness.as_ref().map(|u| u.to_json(sig)),
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Format::Text => match &verdict.witness {
            None => println!("founded"),
            Some(u) => {
                println!("unfounded {}", u.display(sig));
                println!("{}", serde_json::to_string(&u.to_json(sig)).expect("json"));
            }
        },
    }
    Ok(if verdict.founded { EXIT_OK } else { EXIT_NONE })
}

fn compare(file: &Path, args: &InputArgs) -> Result<u8, Failure> {
    let input = load(file, args)?;
    let report = differential_report(&input.theory)?;
    match args.format {
        Format::Json => {
            let mut out: Value = report.to_json();
            out["input"] = json!(input.label);
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Format::Text => print!("{}", report.render_text()),
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_NONE })
}

fn corpus(dir: Option<&Path>, format: Format) -> Result<u8, Failure> {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(bundled_corpus_dir);
    let report = run_corpus(&dir)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("json")),
        Format::Text => {
            print!("{}", report.render_text());
            let failed = report.failures().count();
            println!("{} rows, {failed} failed", report.rows.len());
        }
    }
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_NONE })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_OK });
        }
    };
    let result = match &cli.command {
        Command::Solve { file, semantics, explain, no_fast_path, input } => {
            solve(file, *semantics, *explain, !no_fast_path, input)
        }
        Command::CheckFounded { file, view, input } => check_founded(file, view, input),
        Command::Compare { file, input } => compare(file, input),
        Command::Corpus { dir, format } => corpus(dir.as_deref(), *format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
