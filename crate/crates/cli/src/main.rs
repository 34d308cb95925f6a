use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use subst_cli::render::render_report;
use subst_cli::{run, run_batch, summary_table, Command, Outcome};

/// Conjugacy, class P and palindromicity of morphisms of free monoids.
///
/// Morphisms are written `a->babba;b->bab`: rules separated by `;` or `,`,
/// one alphanumeric letter per head, the alphabet in order of appearance.
#[derive(Parser)]
#[command(name = "subst", version)]
struct Cli {
    /// Print the structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with status 1 when the command's property does not hold.
    #[arg(long, global = true)]
    assert: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classification, conjugacy, class P and palindromicity in one report.
    Analyze {
        spec: String,
        /// Also build the certified factor index up to this length.
        #[arg(long)]
        factors: Option<usize>,
    },
    /// Leftmost and rightmost conjugates, the conjugate word and markedness.
    Conjugates { spec: String },
    /// The five conditions for having a class P conjugate, with a witness.
    Classp { spec: String },
    /// Decide whether the fixed points are palindromic.
    Hks { spec: String },
    /// Prefix of the fixed point starting with a letter.
    Fixpoint {
        spec: String,
        #[arg(long)]
        letter: char,
        #[arg(long)]
        length: usize,
    },
    /// Distinct palindromes of a fixed-point prefix, counted by length band.
    Palindromes {
        spec: String,
        /// Prefix length.
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 16)]
        band_width: usize,
    },
    /// Bispecial factors generated from a finite initial set by u ↦ φ_R(u)·w.
    Bispecials {
        spec: String,
        #[arg(long)]
        max_len: usize,
        /// Length up to which bispecials are collected exhaustively.
        #[arg(long)]
        seed_bound: Option<usize>,
    },
    /// Analyze every `name: spec` line of a corpus file.
    Batch {
        file: PathBuf,
        #[arg(long)]
        factors: Option<usize>,
    },
}

const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn print_outcome(cmd: &Cmd, outcome: &Outcome, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&outcome.report).expect("report serializes"));
    } else if let (Cmd::Fixpoint { .. }, Some(fp)) = (cmd, &outcome.report.fixpoint) {
        println!("{}", fp.prefix);
    } else {
        print!("{}", render_report(&outcome.report));
    }
}

fn batch(file: &PathBuf, factors: Option<usize>, json: bool, assert: bool) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let items = run_batch(&text, &Command::Analyze { factors });
    for item in &items {
        match &item.outcome {
            Ok(o) if json => println!("{}", serde_json::to_string(&o.report).expect("report serializes")),
            Ok(o) => println!("{}", render_report(&o.report)),
            Err(e) => eprintln!("line {}: {e}", item.line),
        }
    }
    if json {
        eprint!("{}", summary_table(&items));
    } else {
        print!("{}", summary_table(&items));
    }
    if items.iter().any(|i| i.outcome.is_err()) {
        ExitCode::from(EXIT_INPUT)
    } else if assert && items.iter().any(|i| i.outcome.as_ref().is_ok_and(|o| !o.holds)) {
        ExitCode::from(EXIT_FALSE)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (spec, command) = match &cli.command {
        Cmd::Analyze { spec, factors } => (spec, Command::Analyze { factors: *factors }),
        Cmd::Conjugates { spec } => (spec, Command::Conjugates),
        Cmd::Classp { spec } => (spec, Command::ClassP),
        Cmd::Hks { spec } => (spec, Command::Hks),
        Cmd::Fixpoint { spec, letter, length } => (spec, Command::Fixpoint { letter: *letter, length: *length }),
        Cmd::Palindromes { spec, length, band_width } => {
            (spec, Command::Palindromes { length: *length, band_width: *band_width })
        }
        Cmd::Bispecials { spec, max_len, seed_bound } => {
            (spec, Command::Bispecials { max_len: *max_len, seed_bound: *seed_bound })
        }
        Cmd::Batch { file, factors } => return batch(file, *factors, cli.json, cli.assert),
    };
    match run(&command, None, spec) {
        Ok(outcome) => {
            print_outcome(&cli.command, &outcome, cli.json);
            if cli.assert && !outcome.holds {
                ExitCode::from(EXIT_FALSE)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
