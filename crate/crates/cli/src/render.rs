//! Aligned plain-text rendering of reports, with morphisms in arrow notation.

use std::fmt::Write;

use subst_core::notation::{arrow_notation, parse_morphism};

use crate::report::{AnalysisReport, Membership, MembershipModes};

fn arrows(spec: &str) -> String {
    parse_morphism(spec).map(|phi| arrow_notation(&phi)).unwrap_or_else(|_| spec.to_string())
}

fn word(w: &str) -> String {
    if w.is_empty() { "ε".to_string() } else { w.to_string() }
}

fn yes_no(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn opt_bool(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

fn member(m: &Membership) -> String {
    match &m.p {
        Some(p) if m.in_class_p => format!("yes (p = {})", word(p)),
        _ => "no".to_string(),
    }
}

/// Key/value block with keys padded to a common width.
#[derive(Default)]
struct Block {
    title: Option<&'static str>,
    rows: Vec<(String, String)>,
}

impl Block {
    fn titled(title: &'static str) -> Self {
        Block { title: Some(title), rows: Vec::new() }
    }

    fn row(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.rows.push((key.into(), value.into()));
        self
    }

    fn modes(&mut self, prefix: &str, m: &MembershipModes) -> &mut Self {
        self.row(format!("{prefix}literal"), member(&m.literal));
        self.row(format!("{prefix}strict"), member(&m.strict));
        self.row(format!("{prefix}suffix form"), member(&m.suffix_form));
        if m.discrepancy {
            self.row(format!("{prefix}discrepancy"), "readings of the definition disagree");
        }
        self
    }

    fn write_to(&self, out: &mut String) {
        if let Some(t) = self.title {
            let _ = writeln!(out, "[{t}]");
        }
        let width = self.rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &self.rows {
            let pad = width - k.chars().count();
            let _ = writeln!(out, "  {k}{}  {v}", " ".repeat(pad));
        }
    }
}

pub fn render_report(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let mut head = Block::default();
    if let Some(name) = &r.name {
        head.row("name", name.clone());
    }
    head.row("morphism", arrows(&r.morphism));
    let c = &r.classification;
    head.row("erasing", yes_no(c.erasing))
        .row("cyclic", yes_no(c.cyclic))
        .row("primitive", yes_no(c.primitive))
        .row("injective", opt_bool(c.injective))
        .row("marked", opt_bool(c.marked))
        .row("well-marked", opt_bool(c.well_marked))
        .row("well-marked power", c.well_marked_power.map_or("n/a".to_string(), |k| k.to_string()))
        .row("prolongable letters", if c.prolongable_letters.is_empty() { "none".into() } else { c.prolongable_letters.clone() });
    head.write_to(&mut out);

    if let Some(s) = &r.conjugacy {
        let mut b = Block::titled("conjugacy");
        b.row("leftmost", arrows(&s.leftmost))
            .row("rightmost", arrows(&s.rightmost))
            .row("conjugate word", word(&s.w))
            .row("left shift", word(&s.left_shift))
            .row("right shift", word(&s.right_shift))
            .row("first letters of leftmost", s.fst_of_leftmost.clone())
            .row("last letters of rightmost", s.lst_of_rightmost.clone());
        for (i, m) in s.chain.iter().enumerate() {
            b.row(format!("chain {i}"), arrows(m));
        }
        b.write_to(&mut out);
    }

    if let Some(s) = &r.class_p {
        let mut b = Block::titled("class P");
        for (i, v) in [s.cond1, s.cond2, s.cond3, s.cond4, s.cond5].iter().enumerate() {
            b.row(format!("condition {}", i + 1), yes_no(*v));
        }
        b.row("conditions agree", yes_no(s.all_agree))
            .row("conjugate word palindrome", yes_no(s.w_palindrome))
            .row("shifts from leftmost", s.k.to_string());
        for lw in &s.p_b {
            b.row(format!("p_{}", lw.letter), word(&lw.word));
        }
        match &s.witness {
            Some(w) => {
                b.row("witness", arrows(w));
                b.row("witness p", s.witness_p.as_deref().map_or("n/a".into(), word));
            }
            None => {
                b.row("witness", "none");
            }
        }
        if let Some(m) = &s.witness_membership {
            b.modes("witness ", m);
        }
        b.modes("morphism ", &s.membership);
        b.write_to(&mut out);
    }

    if let Some(s) = &r.hks {
        let mut b = Block::titled("palindromicity");
        b.row("palindromic", yes_no(s.palindromic))
            .row("verdict", if s.exact { "exact" } else { "heuristic" })
            .row("power", s.power.to_string())
            .row("well-marked power", s.well_marked_power.map_or("n/a".to_string(), |k| k.to_string()));
        if let Some(c) = &s.census {
            b.row("census basis", c.reason.clone())
                .row("census prefix", c.prefix_len.to_string())
                .row("distinct palindromes", c.distinct.to_string())
                .row("longest palindrome", format!("{} ({} in the first half)", c.longest, c.longest_in_first_half));
        }
        if let Some(p) = &s.periodic {
            b.row("periodic", format!("({})^ω, image of the period = ({})^{}", p.period, p.period, p.power));
            b.row("periodicity exact", yes_no(p.exact));
        }
        match &s.witness {
            Some(w) => {
                b.row("class P conjugate", arrows(w));
                b.row("p", s.witness_p.as_deref().map_or("n/a".into(), word));
            }
            None => {
                b.row("class P conjugate", "none");
            }
        }
        if let Some(m) = &s.witness_membership {
            b.modes("witness ", m);
        }
        b.write_to(&mut out);
    }

    if let Some(s) = &r.fixpoint {
        let mut b = Block::titled("fixed point");
        b.row("letter", s.letter.clone()).row("length", s.length.to_string()).row("prefix", s.prefix.clone());
        b.write_to(&mut out);
    }

    if let Some(s) = &r.palindromes {
        let mut b = Block::titled("palindromes");
        b.row("power read", s.power.to_string())
            .row("starting letter", s.letter.clone())
            .row("prefix length", s.prefix_len.to_string())
            .row("distinct palindromes", s.total.to_string());
        for band in &s.bands {
            b.row(format!("lengths {}-{}", band.min_len, band.max_len), band.count.to_string());
        }
        if let Some(top) = s.longest_branch.last() {
            b.row("longest branch", format!("{} steps, ends at length {}", s.longest_branch.len(), top.len()));
            b.row("branch root", s.longest_branch[0].clone());
        }
        b.write_to(&mut out);
    }

    if let Some(s) = &r.bispecials {
        let mut b = Block::titled("bispecial factors");
        b.row("conjugate word", word(&s.w))
            .row("seed bound", s.seed_bound.to_string())
            .row("max length", s.max_len.to_string())
            .row("bispecial factors", s.bispecial_count.to_string())
            .row("initial", s.initial.iter().map(|u| word(u)).collect::<Vec<_>>().join(" "))
            .row("misses", s.misses.len().to_string())
            .row("speciality violations", s.speciality_violations.len().to_string())
            .row("complete", yes_no(s.complete));
        b.write_to(&mut out);
    }

    if let Some(s) = &r.factors {
        let mut b = Block::titled("factors");
        b.row("max length", s.max_len.to_string())
            .row("certified", yes_no(s.certified))
            .row("complexity", s.complexity.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
            .row("bispecials", s.bispecials.iter().map(|u| word(u)).collect::<Vec<_>>().join(" "));
        b.write_to(&mut out);
    }

    if !r.diagnostics.is_empty() {
        let mut b = Block::titled("diagnostics");
        for d in &r.diagnostics {
            b.row("-", d.clone());
        }
        b.write_to(&mut out);
    }
    out
}
