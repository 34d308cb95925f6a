use std::collections::{BTreeSet, HashMap};

use crate::morphism::POWER_SIZE_LIMIT;
use crate::word::{Letter, Word};
use crate::{Error, Morphism, Result};

/// Prefix length used when the language cannot be certified: `64·(n + 1)`
/// letters, but at least this many.
const MIN_SCRAPE_LEN: usize = 1 << 14;

/// All factors of length `≤ max_len` of a fixed point (or of a finite word).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorIndex {
    source: Option<(Morphism, Letter)>,
    max_len: usize,
    /// `by_len[k]` holds the factors of length `k`.
    by_len: Vec<BTreeSet<Word>>,
    certified: bool,
}

impl FactorIndex {
    /// Factors of a finite word. Never certified.
    pub fn from_word(word: &[Letter], max_len: usize) -> Self {
        let top = max_len.min(word.len());
        let longest: BTreeSet<Word> = if top == 0 {
            BTreeSet::from([Word::empty()])
        } else {
            word.windows(top).map(Word::from_slice).collect()
        };
        let mut by_len = closure_from_longest(longest, top);
        // a finite word has no factors beyond its own length
        by_len.resize(max_len + 1, BTreeSet::new());
        FactorIndex { source: None, max_len, by_len, certified: false }
    }

    pub(crate) fn certified(source: Option<(Morphism, Letter)>, max_len: usize, by_len: Vec<BTreeSet<Word>>) -> Self {
        FactorIndex { source, max_len, by_len, certified: true }
    }

    pub fn source(&self) -> Option<&(Morphism, Letter)> {
        self.source.as_ref()
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn contains(&self, w: &[Letter]) -> bool {
        self.by_len.get(w.len()).is_some_and(|s| s.contains(w))
    }

    /// Factors of length exactly `n`, in alphabet (lexicographic) order.
    pub fn of_len(&self, n: usize) -> Result<&BTreeSet<Word>> {
        self.by_len
            .get(n)
            .ok_or(Error::LengthOverflow { requested: n, max: self.max_len })
    }

    /// Factor complexity `n ↦ #factors of length n` for `n ≤ max_len`.
    pub fn complexity(&self) -> Vec<usize> {
        self.by_len.iter().map(BTreeSet::len).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.by_len.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_len.iter().map(BTreeSet::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Letters `a` with `a·w` in the index.
    pub fn left_extensions(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        let longer = self.of_len(w.len() + 1)?;
        Ok(longer.iter().filter(|f| &f[1..] == w).map(|f| f[0]).collect())
    }

    /// Letters `a` with `w·a` in the index.
    pub fn right_extensions(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        let longer = self.of_len(w.len() + 1)?;
        Ok(longer
            .iter()
            .filter(|f| &f[..w.len()] == w)
            .map(|f| f[w.len()])
            .collect())
    }

    pub fn is_closed_under_reversal(&self) -> bool {
        self.iter().all(|f| self.contains(&f.reversed()))
    }

    pub fn palindromes(&self) -> impl Iterator<Item = &Word> {
        self.iter().filter(|f| f.is_palindrome())
    }
}

/// Builds the factors of length `≤ n` of the fixed point `φ^∞(a)`.
///
/// For primitive `φ` the set is exact: the length-2 factors are closed under
/// `xy ↦ factors of φ(xy)`, then every length-`n` factor lies inside some
/// `φ^m(xy)` once the shortest image of `φ^m` has length `≥ n`. Otherwise
/// the factors of a long prefix are scraped and the index is flagged as not
/// certified.
pub fn build_factor_index(phi: &Morphism, a: Letter, n: usize) -> Result<FactorIndex> {
    if !phi.alphabet().contains(a) {
        return Err(Error::AlphabetMismatch(format!("letter index {a} outside the alphabet")));
    }
    if !phi.prolongable_letters().contains(&a) {
        return Err(Error::NotProlongable(phi.alphabet().symbol(a)));
    }
    let source = Some((phi.clone(), a));
    if phi.is_primitive() {
        return Ok(FactorIndex::certified(source, n, certified_language(phi, n)?));
    }
    let scrape = MIN_SCRAPE_LEN.max(64 * (n + 1));
    let prefix = match phi.fixed_point_prefix(a, scrape) {
        Ok(p) => p,
        Err(Error::FiniteFixedPoint { length, .. }) => phi.fixed_point_prefix(a, length)?,
        Err(e) => return Err(e),
    };
    let mut idx = FactorIndex::from_word(&prefix, n);
    idx.source = source;
    Ok(idx)
}

/// Factor sets by length for the language of a primitive morphism.
pub(crate) fn certified_language(phi: &Morphism, n: usize) -> Result<Vec<BTreeSet<Word>>> {
    let d = phi.size();
    // length-2 factors as pairs of letters
    let mut pairs = vec![false; d * d];
    let mut todo = Vec::new();
    let add_pairs = |w: &[Letter], pairs: &mut Vec<bool>, todo: &mut Vec<(Letter, Letter)>| {
        for p in w.windows(2) {
            let slot = p[0] as usize * d + p[1] as usize;
            if !pairs[slot] {
                pairs[slot] = true;
                todo.push((p[0], p[1]));
            }
        }
    };
    for img in phi.images() {
        add_pairs(img, &mut pairs, &mut todo);
    }
    while let Some((x, y)) = todo.pop() {
        let img = phi.apply_unchecked(&[x, y]);
        add_pairs(&img, &mut pairs, &mut todo);
    }
    let blocks: Vec<[Letter; 2]> = (0..d * d)
        .filter(|&s| pairs[s])
        .map(|s| [(s / d) as Letter, (s % d) as Letter])
        .collect();

    if n <= 2 {
        let mut longest = BTreeSet::new();
        match n {
            0 => {
                longest.insert(Word::empty());
            }
            1 => longest.extend(phi.alphabet().letters().map(|l| Word(vec![l]))),
            _ => longest.extend(blocks.iter().map(|b| Word(b.to_vec()))),
        }
        return Ok(closure_from_longest(longest, n));
    }

    // smallest m with every |φ^m(c)| ≥ n
    let mut m = 1;
    while phi.power_lengths(m).into_iter().min().unwrap_or(0) < n {
        m += 1;
    }
    let total: usize = phi.power_lengths(m).iter().sum();
    if total > POWER_SIZE_LIMIT {
        return Err(Error::PowerTooLarge(total));
    }
    let mut longest = BTreeSet::new();
    let mut images: HashMap<Letter, Word> = HashMap::new();
    for c in phi.alphabet().letters() {
        let mut w = Word(vec![c]);
        for _ in 0..m {
            w = phi.apply_unchecked(&w);
        }
        images.insert(c, w);
    }
    for [x, y] in &blocks {
        let (ix, iy) = (&images[x], &images[y]);
        // only windows that touch the seam are new; those inside one image
        // are covered by the window list of any block starting with that letter
        let mut seam = Vec::with_capacity(2 * n);
        seam.extend_from_slice(&ix[ix.len() + 1 - n..]);
        seam.extend_from_slice(&iy[..n - 1]);
        for window in seam.windows(n) {
            longest.insert(Word::from_slice(window));
        }
        for window in ix.windows(n) {
            longest.insert(Word::from_slice(window));
        }
    }
    Ok(closure_from_longest(longest, n))
}

/// Given all factors of length `top` of an infinite (or long enough) word,
/// recovers the shorter ones as prefixes and suffixes.
fn closure_from_longest(longest: BTreeSet<Word>, top: usize) -> Vec<BTreeSet<Word>> {
    let mut by_len = vec![BTreeSet::new(); top + 1];
    by_len[top] = longest;
    for k in (0..top).rev() {
        let (lower, upper) = by_len.split_at_mut(k + 1);
        let shorter = &mut lower[k];
        for f in &upper[0] {
            shorter.insert(Word::from_slice(&f[..k]));
            shorter.insert(Word::from_slice(&f[1..]));
        }
    }
    by_len
}

/// Left special, right special and bispecial factors of an index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecialFactors {
    pub up_to: usize,
    pub left: BTreeSet<Word>,
    pub right: BTreeSet<Word>,
    pub bispecial: BTreeSet<Word>,
}

impl SpecialFactors {
    pub fn is_left_special(&self, w: &[Letter]) -> bool {
        self.left.contains(w)
    }

    pub fn is_right_special(&self, w: &[Letter]) -> bool {
        self.right.contains(w)
    }

    pub fn is_bispecial(&self, w: &[Letter]) -> bool {
        self.bispecial.contains(w)
    }
}

/// Classifies every factor of length `≤ up_to` by counting its one-letter
/// extensions. Needs `up_to < max_len` so that the extensions are indexed.
pub fn special_factors(idx: &FactorIndex, up_to: usize) -> Result<SpecialFactors> {
    if up_to >= idx.max_len() {
        return Err(Error::LengthOverflow { requested: up_to, max: idx.max_len().saturating_sub(1) });
    }
    let mut out = SpecialFactors { up_to, ..Default::default() };
    for k in 0..=up_to {
        let mut left: HashMap<&[Letter], usize> = HashMap::new();
        let mut right: HashMap<&[Letter], usize> = HashMap::new();
        // factors in a set are distinct, so counting them counts extension letters
        for f in &idx.by_len[k + 1] {
            *left.entry(&f[1..]).or_default() += 1;
            *right.entry(&f[..k]).or_default() += 1;
        }
        for f in &idx.by_len[k] {
            let l = left.get(f.as_slice()).copied().unwrap_or(0) > 1;
            let r = right.get(f.as_slice()).copied().unwrap_or(0) > 1;
            if l {
                out.left.insert(f.clone());
            }
            if r {
                out.right.insert(f.clone());
            }
            if l && r {
                out.bispecial.insert(f.clone());
            }
        }
    }
    Ok(out)
}
