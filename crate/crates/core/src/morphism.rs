//! Morphisms of the free monoid and their intrinsic classifications.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::word::{has_period, Alphabet, Letter, Word};
use crate::{Error, Result};

/// Largest total image length [`Morphism::checked_power`] will build.
pub const POWER_SIZE_LIMIT: usize = 1 << 24;

/// A morphism `φ: A* → A*`, given by one image per letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::AlphabetMismatch(format!(
                "{} images for an alphabet of size {}",
                images.len(),
                alphabet.len()
            )));
        }
        for img in &images {
            alphabet.check(img)?;
        }
        Ok(Self { alphabet, images })
    }

    /// Builds a morphism from image strings, one per alphabet letter.
    pub fn from_images(alphabet: Alphabet, images: &[&str]) -> Result<Self> {
        let images = images.iter().map(|s| alphabet.word(s)).collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, images)
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        let images = alphabet.letters().map(|l| Word(vec![l])).collect();
        Self { alphabet, images }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image_lengths(&self) -> Vec<usize> {
        self.images.iter().map(|w| w.len()).collect()
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(|w| w.len()).max().unwrap_or(0)
    }

    fn same_alphabet(&self, other: &Morphism) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch("morphisms are defined over different alphabets".into()));
        }
        Ok(())
    }

    pub fn apply(&self, w: &[Letter]) -> Result<Word> {
        self.alphabet.check(w)?;
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &[Letter]) -> Word {
        let len = w.iter().map(|&l| self.images[l as usize].len()).sum();
        let mut out = Vec::with_capacity(len);
        for &l in w {
            out.extend_from_slice(&self.images[l as usize]);
        }
        Word(out)
    }

    /// `self ∘ other`: the letter `a` maps to `self(other(a))`.
    pub fn compose(&self, other: &Morphism) -> Result<Morphism> {
        self.same_alphabet(other)?;
        let images = other.images.iter().map(|w| self.apply_unchecked(w)).collect();
        Ok(Morphism { alphabet: self.alphabet.clone(), images })
    }

    /// `k`-fold composition; `power(0)` is the identity.
    pub fn power(&self, k: usize) -> Morphism {
        let mut result = Morphism::identity(self.alphabet.clone());
        for _ in 0..k {
            result = self.compose(&result).expect("same alphabet");
        }
        result
    }

    /// Image lengths of `self^k`, saturating.
    pub fn power_lengths(&self, k: usize) -> Vec<usize> {
        let mut lens = vec![1usize; self.size()];
        for _ in 0..k {
            lens = self
                .images
                .iter()
                .map(|img| img.iter().fold(0usize, |acc, &l| acc.saturating_add(lens[l as usize])))
                .collect();
        }
        lens
    }

    /// Like [`power`](Self::power) but refuses to build images whose total
    /// length exceeds [`POWER_SIZE_LIMIT`].
    pub fn checked_power(&self, k: usize) -> Result<Morphism> {
        let total = self.power_lengths(k).iter().fold(0usize, |a, &b| a.saturating_add(b));
        if total > POWER_SIZE_LIMIT {
            return Err(Error::PowerTooLarge(total));
        }
        Ok(self.power(k))
    }

    /// Reverses every image.
    pub fn reversed(&self) -> Morphism {
        Morphism {
            alphabet: self.alphabet.clone(),
            images: self.images.iter().map(Word::reversed).collect(),
        }
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let d = self.size();
        let mut entries = vec![vec![0u64; d]; d];
        for (b, img) in self.images.iter().enumerate() {
            for &a in img.iter() {
                entries[a as usize][b] += 1;
            }
        }
        IncidenceMatrix { entries }
    }

    pub fn is_erasing(&self) -> bool {
        self.images.iter().any(|w| w.is_empty())
    }

    /// First letter with an empty image.
    pub fn erased_letter(&self) -> Option<Letter> {
        self.images.iter().position(|w| w.is_empty()).map(|i| i as Letter)
    }

    pub(crate) fn require_non_erasing(&self) -> Result<()> {
        match self.erased_letter() {
            Some(l) => Err(Error::Erasing(self.alphabet.symbol(l))),
            None => Ok(()),
        }
    }

    /// `Some(z)` when every image is a power of one primitive word `z`
    /// (`z = ε` when all images are empty), `None` for acyclic morphisms.
    pub fn cyclic_root(&self) -> Option<Word> {
        let mut root: Option<Word> = None;
        for img in self.images.iter().filter(|w| !w.is_empty()) {
            let (z, _) = img.primitive_root().expect("nonempty");
            match &root {
                None => root = Some(z),
                Some(r) if *r == z => {}
                Some(_) => return None,
            }
        }
        Some(root.unwrap_or_default())
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic_root().is_some()
    }

    /// Primitivity via the boolean pattern of the incidence matrix raised to
    /// the Wielandt exponent `(d-1)^2 + 1`.
    pub fn is_primitive(&self) -> bool {
        let d = self.size();
        let m = BoolMatrix::from_incidence(&self.incidence_matrix());
        let exponent = (d - 1) * (d - 1) + 1;
        m.pow(exponent).all_true()
    }

    /// Injectivity on `A*`: images nonempty and pairwise distinct, and the
    /// image set is a uniquely decodable code (Sardinas–Patterson closure).
    ///
    /// Erasing morphisms are rejected rather than decided.
    pub fn is_injective(&self) -> Result<bool> {
        self.require_non_erasing()?;
        let mut seen = HashSet::new();
        if !self.images.iter().all(|w| seen.insert(w.as_slice())) {
            return Ok(false);
        }
        Ok(is_uniquely_decodable(&self.images))
    }

    /// Letters `a` with `φ(a) = a·w`, `w` nonempty.
    pub fn prolongable_letters(&self) -> Vec<Letter> {
        self.alphabet
            .letters()
            .filter(|&a| {
                let img = self.image(a);
                img.len() >= 2 && img[0] == a
            })
            .collect()
    }

    /// Length-`n` prefix of the fixed point `φ^∞(a)`.
    pub fn fixed_point_prefix(&self, a: Letter, n: usize) -> Result<Word> {
        if !self.alphabet.contains(a) {
            return Err(Error::AlphabetMismatch(format!("letter index {a} outside the alphabet")));
        }
        if !self.prolongable_letters().contains(&a) {
            return Err(Error::NotProlongable(self.alphabet.symbol(a)));
        }
        // u = φ(u_0) φ(u_1) ... and u_0 = a, so the output can be read while
        // it is being written.
        let mut out: Vec<Letter> = self.image(a).to_vec();
        let mut next = 1;
        while out.len() < n {
            if next >= out.len() {
                return Err(Error::FiniteFixedPoint {
                    letter: self.alphabet.symbol(a),
                    length: out.len(),
                });
            }
            let l = out[next];
            out.extend_from_slice(&self.images[l as usize]);
            next += 1;
        }
        out.truncate(n);
        Ok(Word(out))
    }

    /// Smallest `j ≥ 1` such that `φ^j` is prolongable at some letter, the
    /// power itself and that letter (first in alphabet order).
    pub fn prolongable_power(&self) -> Result<(usize, Morphism, Letter)> {
        if let Some(&a) = self.prolongable_letters().first() {
            return Ok((1, self.clone(), a));
        }
        if self.is_erasing() {
            return Err(Error::NoProlongablePower);
        }
        // φ^j(a) starts with a exactly when a lies on a cycle of length
        // dividing j in the first-letter map.
        let fst: Vec<Letter> = self.images.iter().map(|w| w[0]).collect();
        let mut best: Option<(usize, Letter)> = None;
        for a in self.alphabet.letters() {
            let mut b = fst[a as usize];
            let mut cycle = 1;
            while b != a && cycle <= self.size() {
                b = fst[b as usize];
                cycle += 1;
            }
            if b != a {
                continue;
            }
            if self.power_lengths(cycle)[a as usize] >= 2 && best.is_none_or(|(j, _)| cycle < j) {
                best = Some((cycle, a));
            }
        }
        let (j, a) = best.ok_or(Error::NoProlongablePower)?;
        Ok((j, self.checked_power(j)?, a))
    }

    /// Decides whether the fixed point `φ^∞(a)` is `w^ω` with `|w| = d`,
    /// each letter once in `w`, and `φ(w) = w^k`.
    ///
    /// Complete for primitive marked morphisms; for any other morphism the
    /// answer is flagged as not exact.
    pub fn periodicity_certificate(&self, a: Letter) -> Result<PeriodicityCertificate> {
        let d = self.size();
        let prefix = self.fixed_point_prefix(a, d + 1)?;
        let exact = self.is_primitive()
            && crate::conjugacy::markedness(self).map(|m| m.marked).unwrap_or(false);
        let head = &prefix[..d];
        let mut distinct = head.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let kind = if distinct.len() == d && prefix[d] == prefix[0] {
            let period = Word::from_slice(head);
            let image = self.apply_unchecked(&period);
            if image.len().is_multiple_of(d) && has_period(&image, d) && image.starts_with(&period) {
                Periodicity::Periodic { period, power: image.len() / d }
            } else {
                Periodicity::Aperiodic
            }
        } else {
            Periodicity::Aperiodic
        };
        Ok(PeriodicityCertificate { kind, exact })
    }

    /// Letter maps `a ↦ first letter of φ(a)` and `a ↦ last letter of φ(a)`.
    pub fn first_letters(&self) -> Result<Vec<Letter>> {
        self.require_non_erasing()?;
        Ok(self.images.iter().map(|w| w[0]).collect())
    }

    pub fn last_letters(&self) -> Result<Vec<Letter>> {
        self.require_non_erasing()?;
        Ok(self.images.iter().map(|w| w[w.len() - 1]).collect())
    }

    /// Letter-count vector of `w` (Parikh vector) in alphabet order.
    pub fn parikh(&self, w: &[Letter]) -> Vec<u64> {
        let mut v = vec![0u64; self.size()];
        for &l in w {
            v[l as usize] += 1;
        }
        v
    }
}

impl fmt::Display for Morphism {
    /// Re-parseable `a->ab;b->a` notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}->{}", self.alphabet.symbol(i as Letter), self.alphabet.render(img))?;
        }
        Ok(())
    }
}

/// `entries[a][b]` counts the occurrences of `a` in `φ(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub entries: Vec<Vec<u64>>,
}

impl IncidenceMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn mul(&self, other: &IncidenceMatrix) -> IncidenceMatrix {
        let d = self.dim();
        let mut entries = vec![vec![0u64; d]; d];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..d).map(|k| self.entries[i][k] * other.entries[k][j]).sum();
            }
        }
        IncidenceMatrix { entries }
    }

    pub fn column_sums(&self) -> Vec<u64> {
        (0..self.dim()).map(|b| self.entries.iter().map(|row| row[b]).sum()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct BoolMatrix {
    d: usize,
    cells: Vec<bool>,
}

impl BoolMatrix {
    fn from_incidence(m: &IncidenceMatrix) -> Self {
        let d = m.dim();
        let cells = m.entries.iter().flat_map(|row| row.iter().map(|&x| x > 0)).collect();
        Self { d, cells }
    }

    fn identity(d: usize) -> Self {
        let mut cells = vec![false; d * d];
        for i in 0..d {
            cells[i * d + i] = true;
        }
        Self { d, cells }
    }

    fn mul(&self, other: &Self) -> Self {
        let d = self.d;
        let mut cells = vec![false; d * d];
        for i in 0..d {
            for k in 0..d {
                if self.cells[i * d + k] {
                    for j in 0..d {
                        cells[i * d + j] |= other.cells[k * d + j];
                    }
                }
            }
        }
        Self { d, cells }
    }

    fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn all_true(&self) -> bool {
        self.cells.iter().all(|&c| c)
    }
}

/// Sardinas–Patterson test on a set of distinct nonempty words.
fn is_uniquely_decodable(code: &[Word]) -> bool {
    let is_codeword = |s: &[Letter]| code.iter().any(|c| c.as_slice() == s);
    let mut seen: HashSet<Vec<Letter>> = HashSet::new();
    let mut queue: VecDeque<Vec<Letter>> = VecDeque::new();
    for c1 in code {
        for c2 in code {
            if c1.len() < c2.len() && c2.starts_with(c1) {
                let s = c2[c1.len()..].to_vec();
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
    }
    while let Some(s) = queue.pop_front() {
        if is_codeword(&s) {
            return false;
        }
        for c in code {
            let dangling = if c.len() < s.len() && s.starts_with(c) {
                s[c.len()..].to_vec()
            } else if s.len() < c.len() && c.starts_with(&s) {
                c[s.len()..].to_vec()
            } else {
                continue;
            };
            if seen.insert(dangling.clone()) {
                queue.push_back(dangling);
            }
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Periodicity {
    Aperiodic,
    /// Fixed point `period^ω` with `φ(period) = period^power`.
    Periodic { period: Word, power: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicityCertificate {
    pub kind: Periodicity,
    /// False when the morphism is not verifiably primitive and marked, in
    /// which case an "aperiodic" answer is only a heuristic.
    pub exact: bool,
}

impl PeriodicityCertificate {
    pub fn is_periodic(&self) -> bool {
        matches!(self.kind, Periodicity::Periodic { .. })
    }
}
