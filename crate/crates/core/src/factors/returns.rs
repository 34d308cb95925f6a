use std::collections::BTreeSet;

use crate::word::{longest_common_prefix, longest_common_suffix, Letter, Word};
use crate::{Error, Morphism, Result};

/// Complete return words of `w` found in a finite prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnWords {
    pub words: BTreeSet<Word>,
    pub occurrences: usize,
    /// Empirical: every return seen occurs at least twice, and the first half
    /// of the prefix already shows all of them.
    pub complete: bool,
}

fn occurrences(text: &[Letter], w: &[Letter]) -> Vec<usize> {
    if w.is_empty() {
        return (0..=text.len()).collect();
    }
    text.windows(w.len())
        .enumerate()
        .filter(|(_, s)| *s == w)
        .map(|(i, _)| i)
        .collect()
}

/// Factors `r` of `text` with `w` as prefix and suffix and no other
/// occurrence of `w` inside.
pub fn complete_return_words(text: &[Letter], w: &[Letter]) -> Result<ReturnWords> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let occ = occurrences(text, w);
    if occ.len() < 2 {
        return Err(Error::TooFewOccurrences(occ.len()));
    }
    let returns: Vec<&[Letter]> = occ.windows(2).map(|p| &text[p[0]..p[1] + w.len()]).collect();
    let words: BTreeSet<Word> = returns.iter().map(|r| Word::from_slice(r)).collect();

    let early: BTreeSet<&[Letter]> = returns[..returns.len().div_ceil(2)].iter().copied().collect();
    let complete = words.iter().all(|r| {
        early.contains(r.as_slice()) && returns.iter().filter(|s| **s == r.as_slice()).count() >= 2
    });
    Ok(ReturnWords { words, occurrences: occ.len(), complete })
}

/// Smallest period of a nonempty word.
pub fn smallest_period(text: &[Letter]) -> usize {
    // prefix function: fail[i] = longest proper border of text[..=i]
    let mut fail = vec![0usize; text.len()];
    for i in 1..text.len() {
        let mut k = fail[i - 1];
        while k > 0 && text[i] != text[k] {
            k = fail[k - 1];
        }
        if text[i] == text[k] {
            k += 1;
        }
        fail[i] = k;
    }
    text.len() - fail.last().copied().unwrap_or(0)
}

/// Flags a prefix as periodic when its smallest period fits at least three
/// times.
pub fn looks_periodic(text: &[Letter]) -> bool {
    !text.is_empty() && 3 * smallest_period(text) <= text.len()
}

/// A bispecial factor `U·w·V` grown around `w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BispecialExtension {
    pub word: Word,
    pub left: Word,
    pub right: Word,
    /// Periodicity of the source was judged from the prefix alone.
    pub heuristic: bool,
}

/// Every occurrence of `w` in an aperiodic recurrent word is preceded by the
/// same `U` and followed by the same `V`, where `w·V` is the longest common
/// prefix and `U·w` the longest common suffix of the complete return words.
///
/// `periodic` is the caller's verdict on the source word; `None` falls back
/// to [`looks_periodic`] on `text`.
pub fn bispecial_extension(text: &[Letter], w: &[Letter], periodic: Option<bool>) -> Result<BispecialExtension> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    if occurrences(text, w).is_empty() {
        return Err(Error::NotAFactor);
    }
    let heuristic = periodic.is_none();
    if periodic.unwrap_or_else(|| looks_periodic(text)) {
        return Err(Error::PeriodicSource);
    }
    let returns = complete_return_words(text, w)?;
    let prefix = longest_common_prefix(returns.words.iter().map(|r| r.as_slice()));
    let suffix = longest_common_suffix(returns.words.iter().map(|r| r.as_slice()));
    let right = Word::from_slice(&prefix[w.len()..]);
    let left = Word::from_slice(&suffix[..suffix.len() - w.len()]);
    let word = left.concat(w).concat(&right);
    Ok(BispecialExtension { word, left, right, heuristic })
}

/// [`bispecial_extension`] on a prefix of `φ^∞(a)`, with periodicity taken
/// from the morphism's certificate when that is exact.
pub fn bispecial_extension_in_fixed_point(
    phi: &Morphism,
    a: Letter,
    prefix_len: usize,
    w: &[Letter],
) -> Result<BispecialExtension> {
    let text = phi.fixed_point_prefix(a, prefix_len)?;
    let cert = phi.periodicity_certificate(a)?;
    let verdict = cert.exact.then(|| cert.is_periodic());
    bispecial_extension(&text, w, verdict)
}
