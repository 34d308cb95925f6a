//! Structured analysis reports. Every morphism is stored in the
//! `a->ab;b->a` notation and every word as a plain string over the alphabet
//! (the empty word is `""`), so reports round-trip through JSON and their
//! morphisms can be parsed again.

use serde::{Deserialize, Serialize};

use subst_core::classp::{class_p_conjugacy_report, hks_verify, is_class_p, is_class_p_suffix_form, ClassPMembership};
use subst_core::conjugacy::{conjugacy_extremes, conjugate_chain, markedness, well_marked_power};
use subst_core::factors::{
    build_factor_index, palindrome_census, phi_orbit, special_factors, uniform_bands, PalindromeTree,
};
use subst_core::morphism::Periodicity;
use subst_core::word::Letter;
use subst_core::{Error, Morphism, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub name: Option<String>,
    pub morphism: String,
    pub alphabet: String,
    pub classification: Classification,
    pub conjugacy: Option<ConjugacySection>,
    pub class_p: Option<ClassPSection>,
    pub hks: Option<HksSection>,
    pub fixpoint: Option<FixpointSection>,
    pub palindromes: Option<PalindromeSection>,
    pub bispecials: Option<BispecialSection>,
    pub factors: Option<FactorStats>,
    /// Sections that could not be computed, with the reason.
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Classification {
    pub erasing: bool,
    pub cyclic: bool,
    pub primitive: bool,
    /// `None` for erasing morphisms.
    pub injective: Option<bool>,
    /// `None` when the conjugacy extremes do not exist.
    pub marked: Option<bool>,
    pub well_marked: Option<bool>,
    pub well_marked_power: Option<usize>,
    pub prolongable_letters: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConjugacySection {
    pub leftmost: String,
    pub rightmost: String,
    pub w: String,
    pub left_shift: String,
    pub right_shift: String,
    /// From the leftmost to the rightmost conjugate, one right shift apart.
    pub chain: Vec<String>,
    pub fst_of_leftmost: String,
    pub lst_of_rightmost: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Membership {
    pub in_class_p: bool,
    pub p: Option<String>,
}

/// Class P membership under the three readings of the definition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MembershipModes {
    /// `φ(α) = p·q_α`, `q_α` possibly empty.
    pub literal: Membership,
    /// As literal, with every `q_α` nonempty.
    pub strict: Membership,
    /// `φ(α) = q_α·p`.
    pub suffix_form: Membership,
    /// The three readings do not all agree.
    pub discrepancy: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LetterWord {
    pub letter: String,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassPSection {
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    pub cond4: bool,
    pub cond5: bool,
    pub all_agree: bool,
    pub w_palindrome: bool,
    pub k: usize,
    pub b_letters: String,
    pub p_b: Vec<LetterWord>,
    pub witness: Option<String>,
    pub witness_p: Option<String>,
    pub witness_membership: Option<MembershipModes>,
    /// Membership of the morphism itself.
    pub membership: MembershipModes,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodicSection {
    pub period: String,
    pub power: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HksSection {
    pub palindromic: bool,
    /// False when the verdict comes from a palindrome census instead of
    /// the decision procedure for primitive marked morphisms.
    pub exact: bool,
    pub power: usize,
    pub well_marked_power: Option<usize>,
    pub witness: Option<String>,
    pub witness_p: Option<String>,
    pub witness_membership: Option<MembershipModes>,
    pub periodic: Option<PeriodicSection>,
    pub census: Option<CensusEvidence>,
}

/// Empirical palindromicity: longer palindromes keep appearing in the
/// second half of a fixed-point prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusEvidence {
    /// Why the exact procedure did not apply.
    pub reason: String,
    pub prefix_len: usize,
    pub distinct: usize,
    pub longest: usize,
    pub longest_in_first_half: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixpointSection {
    pub letter: String,
    pub length: usize,
    pub prefix: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Band {
    pub min_len: usize,
    pub max_len: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PalindromeSection {
    /// Exponent `j` of the power whose fixed point was read.
    pub power: usize,
    pub letter: String,
    pub prefix_len: usize,
    pub total: usize,
    pub bands: Vec<Band>,
    pub longest_branch: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbitStep {
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BispecialSection {
    pub w: String,
    pub seed_bound: usize,
    pub max_len: usize,
    pub bispecial_count: usize,
    pub initial: Vec<String>,
    pub orbit: Vec<OrbitStep>,
    pub misses: Vec<String>,
    pub speciality_violations: Vec<String>,
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorStats {
    pub max_len: usize,
    pub certified: bool,
    /// Number of factors of each length `0..=max_len`.
    pub complexity: Vec<usize>,
    /// Bispecial factors of length `< max_len`.
    pub bispecials: Vec<String>,
}

fn render(phi: &Morphism, w: &[Letter]) -> String {
    phi.alphabet().render(w)
}

fn membership(phi: &Morphism, m: ClassPMembership) -> Membership {
    Membership { in_class_p: m.in_class_p, p: m.witness_p.map(|p| render(phi, &p)) }
}

pub fn membership_modes(phi: &Morphism) -> MembershipModes {
    let literal = membership(phi, is_class_p(phi, false));
    let strict = membership(phi, is_class_p(phi, true));
    let suffix_form = membership(phi, is_class_p_suffix_form(phi));
    let discrepancy = literal.in_class_p != strict.in_class_p || literal.in_class_p != suffix_form.in_class_p;
    MembershipModes { literal, strict, suffix_form, discrepancy }
}

pub fn classification(phi: &Morphism) -> Classification {
    let erasing = phi.is_erasing();
    let marking = markedness(phi).ok();
    Classification {
        erasing,
        cyclic: !erasing && phi.is_cyclic(),
        primitive: phi.is_primitive(),
        injective: phi.is_injective().ok(),
        marked: marking.as_ref().map(|m| m.marked),
        well_marked: marking.as_ref().map(|m| m.well_marked),
        well_marked_power: well_marked_power(phi).ok().map(|(k, _)| k),
        prolongable_letters: render(phi, &phi.prolongable_letters()),
    }
}

pub fn conjugacy_section(phi: &Morphism) -> Result<ConjugacySection> {
    let ext = conjugacy_extremes(phi)?;
    let m = markedness(phi)?;
    Ok(ConjugacySection {
        leftmost: ext.leftmost.to_string(),
        rightmost: ext.rightmost.to_string(),
        w: render(phi, &ext.w),
        left_shift: render(phi, &ext.left_shift),
        right_shift: render(phi, &ext.right_shift),
        chain: conjugate_chain(phi)?.iter().map(Morphism::to_string).collect(),
        fst_of_leftmost: render(phi, &m.fst_of_leftmost),
        lst_of_rightmost: render(phi, &m.lst_of_rightmost),
    })
}

pub fn class_p_section(phi: &Morphism) -> Result<ClassPSection> {
    let r = class_p_conjugacy_report(phi)?;
    Ok(ClassPSection {
        cond1: r.cond1,
        cond2: r.cond2,
        cond3: r.cond3,
        cond4: r.cond4,
        cond5: r.cond5,
        all_agree: r.all_agree(),
        w_palindrome: r.extremes.w.is_palindrome(),
        k: r.k,
        b_letters: render(phi, &r.b_letters),
        p_b: r
            .p_b
            .iter()
            .map(|(b, p)| LetterWord { letter: render(phi, &[*b]), word: render(phi, p) })
            .collect(),
        witness_membership: r.witness.as_ref().map(membership_modes),
        witness: r.witness.as_ref().map(Morphism::to_string),
        witness_p: r.witness_p.as_ref().map(|p| render(phi, p)),
        membership: membership_modes(phi),
    })
}

const CENSUS_PREFIX: usize = 1 << 14;

fn census_hks(phi: &Morphism, reason: Error) -> Result<HksSection> {
    let (power, psi, _) = phi.prolongable_power()?;
    // read the fixed point that uses the most letters
    let mut text = Vec::new();
    let mut letters = 0;
    for a in psi.prolongable_letters() {
        let Ok(t) = psi.fixed_point_prefix(a, CENSUS_PREFIX) else { continue };
        let n = t.letter_set().len();
        if n > letters {
            (text, letters) = (t.into_vec(), n);
        }
    }
    if text.is_empty() {
        return Err(reason);
    }
    let longest = |t: &[Letter]| PalindromeTree::new(t).count_by_length().len().saturating_sub(1);
    let tree = PalindromeTree::new(&text);
    let evidence = CensusEvidence {
        reason: reason.to_string(),
        prefix_len: text.len(),
        distinct: tree.len(),
        longest: longest(&text),
        longest_in_first_half: longest(&text[..text.len() / 2]),
    };
    let witness = class_p_conjugacy_report(phi).ok().and_then(|r| r.witness.map(|w| (w, r.witness_p)));
    Ok(HksSection {
        palindromic: evidence.longest > evidence.longest_in_first_half,
        exact: false,
        power,
        well_marked_power: well_marked_power(phi).ok().map(|(k, _)| k),
        witness_membership: witness.as_ref().map(|(w, _)| membership_modes(w)),
        witness_p: witness.as_ref().and_then(|(_, p)| p.as_ref()).map(|p| render(phi, p)),
        witness: witness.map(|(w, _)| w.to_string()),
        periodic: None,
        census: Some(evidence),
    })
}

/// The exact verdict for primitive marked morphisms; other morphisms with a
/// prolongable power fall back to a census of a fixed-point prefix.
pub fn hks_section(phi: &Morphism) -> Result<HksSection> {
    let v = match hks_verify(phi) {
        Ok(v) => v,
        Err(e @ (Error::NotPrimitive | Error::NotMarked)) => return census_hks(phi, e),
        Err(e) => return Err(e),
    };
    let periodic = v.periodic_case.and_then(|cert| match cert.kind {
        Periodicity::Periodic { period, power } => {
            Some(PeriodicSection { period: render(phi, &period), power, exact: cert.exact })
        }
        Periodicity::Aperiodic => None,
    });
    Ok(HksSection {
        palindromic: v.palindromic,
        exact: true,
        power: v.power,
        well_marked_power: Some(v.well_marked_power),
        witness_membership: v.conjugate_witness.as_ref().map(membership_modes),
        witness: v.conjugate_witness.as_ref().map(Morphism::to_string),
        witness_p: v.class_p_p.as_ref().map(|p| render(phi, p)),
        periodic,
        census: None,
    })
}

pub fn fixpoint_section(phi: &Morphism, letter: char, length: usize) -> Result<FixpointSection> {
    let a = phi
        .alphabet()
        .index_of(letter)
        .ok_or_else(|| Error::AlphabetMismatch(format!("letter `{letter}` has no rule")))?;
    let prefix = phi.fixed_point_prefix(a, length)?;
    Ok(FixpointSection { letter: letter.to_string(), length, prefix: render(phi, &prefix) })
}

pub fn palindrome_section(phi: &Morphism, length: usize, band_width: usize) -> Result<PalindromeSection> {
    let (power, psi, a) = phi.prolongable_power()?;
    let text = psi.fixed_point_prefix(a, length)?;
    let census = palindrome_census(&text, &uniform_bands(band_width, length));
    // trailing bands beyond the longest palindrome carry no information
    let longest = census.tree.count_by_length().len().saturating_sub(1);
    let bands = census
        .bands
        .iter()
        .zip(&census.counts)
        .filter(|(b, _)| *b.start() <= longest.max(1))
        .map(|(b, &count)| Band { min_len: *b.start(), max_len: *b.end(), count })
        .collect();
    Ok(PalindromeSection {
        power,
        letter: render(phi, &[a]),
        prefix_len: text.len(),
        total: census.total(),
        bands,
        longest_branch: census.tree.longest_branch().iter().map(|p| render(phi, p)).collect(),
    })
}

pub fn bispecial_section(phi: &Morphism, max_len: usize, seed_bound: Option<usize>) -> Result<BispecialSection> {
    let orbit = phi_orbit(phi, max_len, seed_bound)?;
    Ok(BispecialSection {
        w: render(phi, &orbit.w),
        seed_bound: orbit.seed_bound,
        max_len: orbit.max_len,
        bispecial_count: orbit.bispecials.len(),
        initial: orbit.initial.iter().map(|u| render(phi, u)).collect(),
        orbit: orbit
            .orbit
            .iter()
            .map(|(u, v)| OrbitStep { from: render(phi, u), to: render(phi, v) })
            .collect(),
        misses: orbit.misses.iter().map(|u| render(phi, u)).collect(),
        speciality_violations: orbit.speciality_violations.iter().map(|u| render(phi, u)).collect(),
        complete: orbit.is_complete(),
    })
}

pub fn factor_stats(phi: &Morphism, max_len: usize) -> Result<FactorStats> {
    let (_, psi, a) = phi.prolongable_power()?;
    let idx = build_factor_index(&psi, a, max_len)?;
    let bispecials = match max_len {
        0 => Vec::new(),
        n => special_factors(&idx, n - 1)?.bispecial.iter().map(|u| render(phi, u)).collect(),
    };
    Ok(FactorStats { max_len, certified: idx.is_certified(), complexity: idx.complexity(), bispecials })
}

impl AnalysisReport {
    /// Header and classification only; sections are filled by the caller.
    pub fn bare(name: Option<String>, phi: &Morphism) -> Self {
        AnalysisReport {
            name,
            morphism: phi.to_string(),
            alphabet: phi.alphabet().symbols().iter().collect(),
            classification: classification(phi),
            conjugacy: None,
            class_p: None,
            hks: None,
            fixpoint: None,
            palindromes: None,
            bispecials: None,
            factors: None,
            diagnostics: Vec::new(),
        }
    }

    /// Every morphism string embedded in the report.
    pub fn morphisms(&self) -> Vec<&str> {
        let mut out = vec![self.morphism.as_str()];
        if let Some(c) = &self.conjugacy {
            out.push(&c.leftmost);
            out.push(&c.rightmost);
            out.extend(c.chain.iter().map(String::as_str));
        }
        if let Some(w) = self.class_p.as_ref().and_then(|c| c.witness.as_deref()) {
            out.push(w);
        }
        if let Some(w) = self.hks.as_ref().and_then(|h| h.witness.as_deref()) {
            out.push(w);
        }
        out
    }

    fn note<T>(&mut self, section: &str, r: Result<T>) -> Option<T> {
        r.map_err(|e| self.diagnostics.push(format!("{section}: {e}"))).ok()
    }
}

/// Full report: classification, conjugacy, class P and palindromicity, plus
/// factor statistics up to `factors` when requested. Sections whose
/// preconditions fail are left empty and explained in `diagnostics`.
pub fn analyze(name: Option<String>, phi: &Morphism, factors: Option<usize>) -> AnalysisReport {
    let mut report = AnalysisReport::bare(name, phi);
    report.conjugacy = report.note("conjugacy", conjugacy_section(phi));
    report.class_p = report.note("class_p", class_p_section(phi));
    report.hks = report.note("hks", hks_section(phi));
    if let Some(n) = factors {
        report.factors = report.note("factors", factor_stats(phi, n));
    }
    report
}
