//! Conjugacy of morphisms.
//!
//! `φ` is a right conjugate of `ψ` with conjugate word `w` when
//! `w·ψ(x) = φ(x)·w` for every word `x`. One-letter shifts walk the chain of
//! conjugates of an acyclic morphism; its two ends are the leftmost conjugate
//! `φ_L` (first-letter map non-constant) and the rightmost conjugate `φ_R`
//! (last-letter map non-constant), related by `φ_R(x)·w = w·φ_L(x)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::word::{Letter, Word};
use crate::{Error, Morphism, Result};

/// True iff `w·ψ(α) = φ(α)·w` for every letter `α`.
pub fn check_right_conjugate(phi: &Morphism, psi: &Morphism, w: &[Letter]) -> Result<bool> {
    if phi.alphabet() != psi.alphabet() {
        return Err(Error::AlphabetMismatch("morphisms are defined over different alphabets".into()));
    }
    phi.alphabet().check(w)?;
    Ok(phi.alphabet().letters().all(|a| {
        let lhs = Word::from_slice(w).concat(psi.image(a));
        let rhs = phi.image(a).concat(w);
        lhs == rhs
    }))
}

/// If every image ends with the same letter `c`, moves that letter to the
/// front of each image: `ψ(α)·c = c·φ(α)`.
pub fn shift_right_once(phi: &Morphism) -> Result<Option<(Morphism, Letter)>> {
    let last = phi.last_letters()?;
    let c = last[0];
    if last.iter().any(|&l| l != c) {
        return Ok(None);
    }
    let images = phi
        .images()
        .iter()
        .map(|img| {
            let mut v = Vec::with_capacity(img.len());
            v.push(c);
            v.extend_from_slice(&img[..img.len() - 1]);
            Word(v)
        })
        .collect();
    Ok(Some((Morphism::new(phi.alphabet().clone(), images)?, c)))
}

/// If every image begins with the same letter `c`, moves that letter to the
/// end of each image: `c·ψ(α) = φ(α)·c`.
pub fn shift_left_once(phi: &Morphism) -> Result<Option<(Morphism, Letter)>> {
    let first = phi.first_letters()?;
    let c = first[0];
    if first.iter().any(|&l| l != c) {
        return Ok(None);
    }
    let images = phi
        .images()
        .iter()
        .map(|img| {
            let mut v = Vec::with_capacity(img.len());
            v.extend_from_slice(&img[1..]);
            v.push(c);
            Word(v)
        })
        .collect();
    Ok(Some((Morphism::new(phi.alphabet().clone(), images)?, c)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyExtremes {
    pub leftmost: Morphism,
    pub rightmost: Morphism,
    /// Conjugate word of the relation `φ_L ▷ φ_R`: `φ_R(x)·w = w·φ_L(x)`.
    pub w: Word,
    /// Links the input to its leftmost conjugate: `φ(x)·s = s·φ_L(x)`.
    pub left_shift: Word,
    /// Links the input to its rightmost conjugate: `φ_R(x)·s = s·φ(x)`.
    pub right_shift: Word,
}

/// Walks the shift chain in both directions. Revisiting a morphism means
/// the input is conjugate to itself with a nonempty word, i.e. cyclic.
pub fn conjugacy_extremes(phi: &Morphism) -> Result<ConjugacyExtremes> {
    phi.require_non_erasing()?;
    if phi.is_cyclic() {
        return Err(Error::Cyclic);
    }

    let mut visited = HashSet::new();
    visited.insert(phi.clone());
    let mut rightmost = phi.clone();
    let mut right_letters = Vec::new();
    while let Some((next, c)) = shift_right_once(&rightmost)? {
        if !visited.insert(next.clone()) {
            return Err(Error::Cyclic);
        }
        right_letters.push(c);
        rightmost = next;
    }
    // each right shift contributes its letter to the front
    right_letters.reverse();

    let mut leftmost = phi.clone();
    let mut left_letters = Vec::new();
    while let Some((next, c)) = shift_left_once(&leftmost)? {
        if !visited.insert(next.clone()) {
            return Err(Error::Cyclic);
        }
        left_letters.push(c);
        leftmost = next;
    }

    let right_shift = Word(right_letters);
    let left_shift = Word(left_letters);
    let w = right_shift.concat(&left_shift);
    debug_assert!(check_right_conjugate(&rightmost, &leftmost, &w).unwrap());
    Ok(ConjugacyExtremes { leftmost, rightmost, w, left_shift, right_shift })
}

/// Applies `k` right shifts starting at `phi`, returning the result and the
/// accumulated conjugate word `s` with `ψ(x)·s = s·φ(x)`.
pub fn right_conjugate_steps(phi: &Morphism, k: usize) -> Result<(Morphism, Word)> {
    let mut current = phi.clone();
    let mut letters = Vec::with_capacity(k);
    for _ in 0..k {
        let (next, c) = shift_right_once(&current)?.ok_or(Error::NoShiftChain)?;
        letters.push(c);
        current = next;
    }
    letters.reverse();
    Ok((current, Word(letters)))
}

/// Every conjugate of an acyclic non-erasing morphism, from `φ_L` to `φ_R`.
pub fn conjugate_chain(phi: &Morphism) -> Result<Vec<Morphism>> {
    let ext = conjugacy_extremes(phi)?;
    let mut chain = vec![ext.leftmost.clone()];
    let mut current = ext.leftmost;
    while let Some((next, _)) = shift_right_once(&current)? {
        chain.push(next.clone());
        current = next;
    }
    debug_assert_eq!(chain.len(), ext.w.len() + 1);
    Ok(chain)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkednessReport {
    pub marked: bool,
    pub well_marked: bool,
    /// First-letter map of the leftmost conjugate.
    pub fst_of_leftmost: Vec<Letter>,
    /// Last-letter map of the rightmost conjugate.
    pub lst_of_rightmost: Vec<Letter>,
}

fn is_injective_map(map: &[Letter]) -> bool {
    let mut seen = vec![false; map.len()];
    map.iter().all(|&l| !std::mem::replace(&mut seen[l as usize], true))
}

pub fn markedness(phi: &Morphism) -> Result<MarkednessReport> {
    let ext = conjugacy_extremes(phi)?;
    Ok(markedness_from(&ext))
}

pub(crate) fn markedness_from(ext: &ConjugacyExtremes) -> MarkednessReport {
    let fst = ext.leftmost.first_letters().expect("non-erasing");
    let lst = ext.rightmost.last_letters().expect("non-erasing");
    let marked = is_injective_map(&fst) && is_injective_map(&lst);
    MarkednessReport {
        marked,
        well_marked: marked && fst == lst,
        fst_of_leftmost: fst,
        lst_of_rightmost: lst,
    }
}

fn compose_maps(f: &[Letter], g: &[Letter]) -> Vec<Letter> {
    g.iter().map(|&l| f[l as usize]).collect()
}

/// Smallest `k ≥ 1` such that `φ^k` is well-marked, together with `φ^k`.
///
/// Uses `Fst((φ^k)_L) = Fst(φ_L)^k` and `Lst((φ^k)_R) = Lst(φ_R)^k`; the
/// search ends at the latest when both permutations reach the identity,
/// which happens by `lcm(1, ..., d)`.
pub fn well_marked_power(phi: &Morphism) -> Result<(usize, Morphism)> {
    let report = markedness(phi)?;
    if !report.marked {
        return Err(Error::NotMarked);
    }
    let f = &report.fst_of_leftmost;
    let g = &report.lst_of_rightmost;
    let (mut fk, mut gk) = (f.clone(), g.clone());
    let mut k = 1;
    while fk != gk {
        fk = compose_maps(f, &fk);
        gk = compose_maps(g, &gk);
        k += 1;
    }
    Ok((k, phi.checked_power(k)?))
}
