//! Finite words over a declared alphabet.
//!
//! Letters are stored as indices into an [`Alphabet`]; the alphabet order is
//! the canonical order used for every tie-break downstream (sorted sets,
//! report arrays, golden files).

use std::borrow::Borrow;
use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Index of a letter in its [`Alphabet`].
pub type Letter = u8;

/// Ordered set of distinct symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub const MAX_SIZE: usize = 256;

    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must contain at least one letter".into()));
        }
        if letters.len() > Self::MAX_SIZE {
            return Err(Error::InvalidAlphabet(format!(
                "{} letters exceed the maximum of {}",
                letters.len(),
                Self::MAX_SIZE
            )));
        }
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("letter `{c}` is repeated")));
            }
        }
        Ok(Self { letters })
    }

    /// Alphabet whose letters are the distinct characters of `s` in order of
    /// first appearance.
    pub fn from_chars(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for c in s.chars() {
            if !letters.contains(&c) {
                letters.push(c);
            }
        }
        Self::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn symbol(&self, letter: Letter) -> char {
        self.letters[letter as usize]
    }

    pub fn symbols(&self) -> &[char] {
        &self.letters
    }

    pub fn index_of(&self, symbol: char) -> Option<Letter> {
        self.letters.iter().position(|&c| c == symbol).map(|i| i as Letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.letters.len()).map(|i| i as Letter)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        (letter as usize) < self.letters.len()
    }

    /// Parses `text` letter by letter.
    pub fn word(&self, text: &str) -> Result<Word> {
        text.chars()
            .map(|c| {
                self.index_of(c)
                    .ok_or_else(|| Error::AlphabetMismatch(format!("symbol `{c}` is not in the alphabet")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn render(&self, w: &[Letter]) -> String {
        w.iter().map(|&l| self.symbol(l)).collect()
    }

    /// Fails unless every letter of `w` belongs to this alphabet.
    pub fn check(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|&&l| !self.contains(l)) {
            Some(l) => Err(Error::AlphabetMismatch(format!(
                "letter index {l} outside an alphabet of size {}",
                self.len()
            ))),
            None => Ok(()),
        }
    }
}

/// A finite word, possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_slice(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// The `k`-th right conjugate: the last `k mod |y|` letters move to the
    /// front, so that `x·s = s·y` where `s` is the suffix of `y` of that
    /// length.
    pub fn right_conjugate(&self, k: usize) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = self.len();
        let k = k % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[n - k..]);
        v.extend_from_slice(&self.0[..n - k]);
        Ok(Word(v))
    }

    /// Shortest `root` with `root^exponent = self`.
    pub fn primitive_root(&self) -> Result<(Word, usize)> {
        let n = self.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let d = (1..=n)
            .find(|&d| n.is_multiple_of(d) && has_period(&self.0, d))
            .expect("n is always a period of itself");
        Ok((Word::from_slice(&self.0[..d]), n / d))
    }

    pub fn is_primitive(&self) -> bool {
        matches!(self.primitive_root(), Ok((_, 1)))
    }

    /// All distinct letters occurring in the word, in alphabet order.
    pub fn letter_set(&self) -> Vec<Letter> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl Borrow<[Letter]> for Word {
    fn borrow(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    /// Letters rendered by index; use [`Alphabet::render`] for symbols.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub fn is_palindrome(w: &[Letter]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// True when `p` is a period of `w`, i.e. `w[i] = w[i + p]` wherever defined.
pub fn has_period(w: &[Letter], p: usize) -> bool {
    p > 0 && w.iter().zip(&w[p.min(w.len())..]).all(|(a, b)| a == b)
}

pub fn longest_common_prefix<'a>(words: impl IntoIterator<Item = &'a [Letter]>) -> Vec<Letter> {
    let mut iter = words.into_iter();
    let Some(first) = iter.next() else {
        return Vec::new();
    };
    let mut len = first.len();
    for w in iter {
        len = first[..len].iter().zip(w).take_while(|(a, b)| a == b).count();
    }
    first[..len].to_vec()
}

pub fn longest_common_suffix<'a>(words: impl IntoIterator<Item = &'a [Letter]>) -> Vec<Letter> {
    let mut iter = words.into_iter();
    let Some(first) = iter.next() else {
        return Vec::new();
    };
    let mut len = first.len();
    for w in iter {
        len = first[first.len() - len..]
            .iter()
            .rev()
            .zip(w.iter().rev())
            .take_while(|(a, b)| a == b)
            .count();
    }
    first[first.len() - len..].to_vec()
}

/// Solution of `xw = wy`: `x = uv`, `w = (uv)^i u`, `y = vu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapDecomposition {
    pub u: Word,
    pub v: Word,
    pub i: usize,
}

fn check_overlap(x: &Word, w: &Word, y: &Word) -> Result<()> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    if x.len() != y.len() || x.concat(w) != w.concat(y) {
        return Err(Error::NotOverlapping);
    }
    Ok(())
}

pub fn lothaire_decompose(x: &Word, w: &Word, y: &Word) -> Result<OverlapDecomposition> {
    check_overlap(x, w, y)?;
    let r = w.len() % x.len();
    let u = Word::from_slice(&x[..r]);
    let v = Word::from_slice(&x[r..]);
    let i = w.len() / x.len();
    debug_assert_eq!(u.concat(&v).pow(i).concat(&u), *w);
    debug_assert_eq!(v.concat(&u), *y);
    Ok(OverlapDecomposition { u, v, i })
}

/// Truth values of the five palindromicity conditions attached to `xw = wy`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapConditions {
    /// `x` is the reversal of `y`.
    pub i: bool,
    /// `u` and `v` are palindromes.
    pub ii: bool,
    /// `z = xw` is a palindrome.
    pub iii: bool,
    /// `xwy` is a palindrome.
    pub iv: bool,
    /// `w` is a palindrome.
    pub v: bool,
}

pub fn overlap_palindromicity(x: &Word, w: &Word, y: &Word) -> Result<OverlapConditions> {
    let d = lothaire_decompose(x, w, y)?;
    Ok(OverlapConditions {
        i: *x == y.reversed(),
        ii: d.u.is_palindrome() && d.v.is_palindrome(),
        iii: x.concat(w).is_palindrome(),
        iv: x.concat(w).concat(y).is_palindrome(),
        v: w.is_palindrome(),
    })
}
