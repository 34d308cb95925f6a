use std::collections::{BTreeMap, BTreeSet};

use super::index::{certified_language, special_factors, FactorIndex, SpecialFactors};
use crate::conjugacy::{conjugacy_extremes, markedness_from, ConjugacyExtremes};
use crate::word::{Letter, Word};
use crate::{Error, Morphism, Result};

/// `u ↦ φ_R(u)·w` for a primitive marked morphism, where `φ_R` is its
/// rightmost conjugate and `w` the conjugate word of `φ_L ▷ φ_R`.
#[derive(Debug, Clone)]
pub struct PhiMap {
    extremes: ConjugacyExtremes,
}

impl PhiMap {
    pub fn new(phi: &Morphism) -> Result<Self> {
        phi.require_non_erasing()?;
        if !phi.is_primitive() {
            return Err(Error::NotPrimitive);
        }
        let extremes = conjugacy_extremes(phi)?;
        if !markedness_from(&extremes).marked {
            return Err(Error::NotMarked);
        }
        Ok(PhiMap { extremes })
    }

    pub fn apply(&self, u: &[Letter]) -> Word {
        self.extremes.rightmost.apply_unchecked(u).concat(&self.extremes.w)
    }

    pub fn conjugate_word(&self) -> &Word {
        &self.extremes.w
    }

    pub fn extremes(&self) -> &ConjugacyExtremes {
        &self.extremes
    }
}

pub fn phi_map(phi: &Morphism, u: &[Letter]) -> Result<Word> {
    phi.alphabet().check(u)?;
    Ok(PhiMap::new(phi)?.apply(u))
}

/// Default length below which bispecial factors are searched exhaustively:
/// `max(|w|, 2·max image length) + alphabet size`.
pub fn default_seed_bound(phi: &Morphism, w: &[Letter]) -> usize {
    w.len().max(2 * phi.max_image_len()) + phi.size()
}

/// Bispecial factors up to `max_len` generated from a finite initial set by
/// iterating `Φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BispecialOrbit {
    pub w: Word,
    pub seed_bound: usize,
    pub max_len: usize,
    /// Bispecials of length `≤ seed_bound` that are not `Φ(u′)` for a
    /// shorter bispecial `u′`.
    pub initial: BTreeSet<Word>,
    /// Recorded pairs `u ↦ Φ(u)`.
    pub orbit: BTreeMap<Word, Word>,
    /// Every bispecial factor of length `≤ max_len`.
    pub bispecials: BTreeSet<Word>,
    /// Bispecials of length `≤ max_len` not reached from the initial set.
    pub misses: Vec<Word>,
    /// Special factors `u` with `|Φ(u)| ≤ max_len` whose image lost the
    /// corresponding speciality.
    pub speciality_violations: Vec<Word>,
}

impl BispecialOrbit {
    /// Initial words and every orbit element of length `≤ max_len`.
    pub fn reached(&self) -> BTreeSet<&Word> {
        self.initial
            .iter()
            .chain(self.orbit.values().filter(|v| v.len() <= self.max_len))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.misses.is_empty() && self.speciality_violations.is_empty()
    }
}

/// Builds the certified index to `max_len + 1`, collects every bispecial
/// factor, and checks that the `Φ`-orbits of the exceptional short ones
/// reach all the others.
pub fn phi_orbit(phi: &Morphism, max_len: usize, seed_bound: Option<usize>) -> Result<BispecialOrbit> {
    let map = PhiMap::new(phi)?;
    let w = map.conjugate_word().clone();
    let seed_bound = seed_bound.unwrap_or_else(|| default_seed_bound(phi, &w)).min(max_len);

    let idx = language_index(phi, max_len + 1)?;
    let special = special_factors(&idx, max_len)?;
    let bispecials = special.bispecial.clone();

    let images: BTreeMap<&Word, Word> = bispecials.iter().map(|u| (u, map.apply(u))).collect();
    let generated: BTreeSet<&Word> = images
        .iter()
        .filter(|(u, img)| u.len() < img.len())
        .map(|(_, img)| img)
        .collect();
    let initial: BTreeSet<Word> = bispecials
        .iter()
        .filter(|u| u.len() <= seed_bound && !generated.contains(u))
        .cloned()
        .collect();

    let mut orbit = BTreeMap::new();
    for u in &initial {
        let mut cur = u.clone();
        loop {
            let next = map.apply(&cur);
            let done = next.len() > max_len || next == cur || orbit.contains_key(&next);
            orbit.insert(cur, next.clone());
            if done {
                break;
            }
            cur = next;
        }
    }

    let mut result = BispecialOrbit {
        w,
        seed_bound,
        max_len,
        initial,
        orbit,
        bispecials: BTreeSet::new(),
        misses: Vec::new(),
        speciality_violations: speciality_violations(&map, &special, max_len),
    };
    let reached = result.reached();
    result.misses = bispecials.iter().filter(|b| !reached.contains(b)).cloned().collect();
    result.bispecials = bispecials;
    Ok(result)
}

fn language_index(phi: &Morphism, n: usize) -> Result<FactorIndex> {
    let source = phi.prolongable_power().ok().map(|(_, p, a)| (p, a));
    Ok(FactorIndex::certified(source, n, certified_language(phi, n)?))
}

fn speciality_violations(map: &PhiMap, special: &SpecialFactors, max_len: usize) -> Vec<Word> {
    let mut bad = BTreeSet::new();
    for (set, kept) in [(&special.left, &special.left), (&special.right, &special.right)] {
        for u in set {
            let img = map.apply(u);
            if img.len() <= max_len && !kept.contains(&img) {
                bad.insert(u.clone());
            }
        }
    }
    bad.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_morphism;

    #[test]
    fn phi_of_examples() {
        let tm2 = parse_morphism("0->0110;1->1001").unwrap();
        assert_eq!(phi_map(&tm2, &[0, 1]).unwrap().to_vec(), vec![0, 1, 1, 0, 1, 0, 0, 1]);
        assert_eq!(phi_map(&tm2, &[]).unwrap(), Word::empty());

        let phi3 = parse_morphism("a->bbaba;b->bba").unwrap();
        let b = phi3.alphabet().word("b").unwrap();
        assert_eq!(phi_map(&phi3, &b).unwrap(), phi3.alphabet().word("babbabbab").unwrap());
    }

    #[test]
    fn preconditions() {
        let not_primitive = parse_morphism("a->aab;b->b").unwrap();
        assert_eq!(phi_map(&not_primitive, &[]).unwrap_err(), Error::NotPrimitive);
        let not_marked = parse_morphism("a->ab;b->ac;c->bc").unwrap();
        assert_eq!(phi_map(&not_marked, &[]).unwrap_err(), Error::NotMarked);
    }

    #[test]
    fn thue_morse_orbit() {
        let tm2 = parse_morphism("0->0110;1->1001").unwrap();
        let orbit = phi_orbit(&tm2, 40, None).unwrap();
        assert!(orbit.is_complete(), "{orbit:?}");
        assert!(orbit.initial.contains(&Word::empty()));
        assert!(orbit.bispecials.contains(&Word(vec![0, 1, 1, 0, 1, 0, 0, 1])));
    }
}
