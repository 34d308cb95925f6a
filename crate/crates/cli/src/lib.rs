//! Library side of the `subst` command: report construction, rendering and
//! corpus batch runs.

pub mod render;
pub mod report;

use std::fmt::Write;

use rayon::prelude::*;
use subst_core::notation::parse_morphism;
use subst_core::Result;

use report::{
    analyze, bispecial_section, class_p_section, conjugacy_section, fixpoint_section, hks_section,
    palindrome_section, AnalysisReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Analyze { factors: Option<usize> },
    Conjugates,
    ClassP,
    Hks,
    Fixpoint { letter: char, length: usize },
    Palindromes { length: usize, band_width: usize },
    Bispecials { max_len: usize, seed_bound: Option<usize> },
}

/// A report together with the truth of the command's headline property,
/// which `--assert` turns into the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: AnalysisReport,
    pub holds: bool,
}

/// Headline properties. `analyze`, `hks`: the fixed points are palindromic.
/// `conjugates`: marked. `classp`: all five conditions hold. `palindromes`:
/// every length band is nonempty. `bispecials`: the orbit reaches every
/// bispecial factor. `fixpoint`: always true.
pub fn run(command: &Command, name: Option<String>, spec: &str) -> Result<Outcome> {
    let phi = parse_morphism(spec)?;
    let mut report = AnalysisReport::bare(name, &phi);
    let holds = match command {
        Command::Analyze { factors } => {
            report = analyze(report.name.take(), &phi, *factors);
            report.hks.as_ref().is_some_and(|h| h.palindromic)
        }
        Command::Conjugates => {
            report.conjugacy = Some(conjugacy_section(&phi)?);
            report.classification.marked == Some(true)
        }
        Command::ClassP => {
            report.conjugacy = Some(conjugacy_section(&phi)?);
            let s = class_p_section(&phi)?;
            let holds = s.cond1 && s.cond2 && s.cond3 && s.cond4 && s.cond5;
            report.class_p = Some(s);
            holds
        }
        Command::Hks => {
            let s = hks_section(&phi)?;
            let holds = s.palindromic;
            report.hks = Some(s);
            holds
        }
        Command::Fixpoint { letter, length } => {
            report.fixpoint = Some(fixpoint_section(&phi, *letter, *length)?);
            true
        }
        Command::Palindromes { length, band_width } => {
            let s = palindrome_section(&phi, *length, *band_width)?;
            let holds = s.bands.iter().all(|b| b.count > 0);
            report.palindromes = Some(s);
            holds
        }
        Command::Bispecials { max_len, seed_bound } => {
            let s = bispecial_section(&phi, *max_len, *seed_bound)?;
            let holds = s.complete;
            report.bispecials = Some(s);
            holds
        }
    };
    Ok(Outcome { report, holds })
}

/// One non-comment line of a corpus file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub line: usize,
    pub name: String,
    pub spec: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

/// `name: spec` lines; `#` starts a comment, blank lines are skipped.
pub fn parse_corpus(text: &str) -> Vec<std::result::Result<CorpusEntry, LineError>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                return None;
            }
            Some(match content.split_once(':') {
                Some((name, spec)) if !name.trim().is_empty() => {
                    Ok(CorpusEntry { line, name: name.trim().to_string(), spec: spec.trim().to_string() })
                }
                _ => Err(LineError { line, message: "expected `name: spec`".to_string() }),
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchItem {
    pub line: usize,
    pub name: Option<String>,
    pub outcome: std::result::Result<Outcome, String>,
}

/// Runs `command` on every corpus entry in parallel; results keep file order.
pub fn run_batch(text: &str, command: &Command) -> Vec<BatchItem> {
    parse_corpus(text)
        .into_par_iter()
        .map(|entry| match entry {
            Ok(e) => BatchItem {
                line: e.line,
                name: Some(e.name.clone()),
                outcome: run(command, Some(e.name), &e.spec).map_err(|err| err.to_string()),
            },
            Err(e) => BatchItem { line: e.line, name: None, outcome: Err(e.message) },
        })
        .collect()
}

pub fn summary_table(items: &[BatchItem]) -> String {
    let header = ["line", "name", "primitive", "marked", "class P conj.", "palindromic", "status"];
    let mut rows: Vec<[String; 7]> = Vec::new();
    let flag = |b: Option<bool>| b.map_or("-".to_string(), |b| if b { "yes".into() } else { "no".into() });
    for item in items {
        let name = item.name.clone().unwrap_or_else(|| "-".into());
        rows.push(match &item.outcome {
            Ok(o) => {
                let r = &o.report;
                [
                    item.line.to_string(),
                    name,
                    flag(Some(r.classification.primitive)),
                    flag(r.classification.marked),
                    flag(r.class_p.as_ref().map(|c| c.cond2)),
                    r.hks.as_ref().map_or("-".into(), |h| {
                        let basis = if h.exact { "" } else { ", heuristic" };
                        if h.palindromic {
                            format!("yes (power {}{basis})", h.power)
                        } else if h.exact {
                            "no".into()
                        } else {
                            "no (heuristic)".into()
                        }
                    }),
                    if o.holds { "ok".into() } else { "ok (property false)".into() },
                ]
            }
            Err(e) => [item.line.to_string(), name, "-".into(), "-".into(), "-".into(), "-".into(), format!("error: {e}")],
        });
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        let _ = writeln!(out, "{}", padded.join("  ").trim_end());
    };
    line(&header.map(String::from));
    for row in &rows {
        line(row);
    }
    let failed = items.iter().filter(|i| i.outcome.is_err()).count();
    let _ = writeln!(out, "{} entries, {} errors", items.len(), failed);
    out
}
