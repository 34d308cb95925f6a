#![allow(dead_code)]

use proptest::prelude::*;
use subst_core::notation::parse_morphism;
use subst_core::word::{Alphabet, Letter, Word};
use subst_core::Morphism;

pub const LETTERS: [char; 4] = ['a', 'b', 'c', 'd'];

pub fn alphabet(d: usize) -> Alphabet {
    Alphabet::new(LETTERS[..d].iter().copied()).unwrap()
}

pub fn parse(spec: &str) -> Morphism {
    parse_morphism(spec).unwrap()
}

pub fn morphism_strategy(
    sizes: std::ops::RangeInclusive<usize>,
    lens: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Morphism> {
    sizes.prop_flat_map(move |d| {
        prop::collection::vec(prop::collection::vec(0..d as Letter, lens.clone()), d).prop_map(move |imgs| {
            Morphism::new(alphabet(d), imgs.into_iter().map(Word).collect()).unwrap()
        })
    })
}

pub fn word_over(d: usize, len: std::ops::Range<usize>) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..d as Letter, len).prop_map(Word)
}

/// Every word of length `≤ max_len` over `d` letters.
pub fn all_words(d: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| (0..d as Letter).map(move |l| w.concat(&[l])))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Distinct factors of each length `≤ n` of a finite word, by direct scan.
pub fn scraped_factors(text: &[Letter], n: usize) -> Vec<std::collections::BTreeSet<Word>> {
    (0..=n)
        .map(|k| {
            if k == 0 {
                std::collections::BTreeSet::from([Word::empty()])
            } else {
                text.windows(k).map(Word::from_slice).collect()
            }
        })
        .collect()
}

/// Named fixtures from the worked examples, as `(name, spec)`.
pub const FIXTURES: &[(&str, &str)] = &[
    ("thue_morse", "0->01;1->10"),
    ("thue_morse_squared", "0->0110;1->1001"),
    ("fibonacci", "0->01;1->0"),
    ("fibonacci_square_shifted", "0->100;1->10"),
    ("phi1", "a->babba;b->bab"),
    ("phi2", "a->abbab;b->abb"),
    ("phi3", "a->bbaba;b->bba"),
    ("phi4", "a->babab;b->bab"),
    ("phi5", "a->ababb;b->abb"),
    ("phi6", "a->babba;b->bba"),
    ("phi7", "a->abbab;b->bab"),
    ("xi", "a->aba;b->bab"),
    ("abc_periodic", "a->abcabcab;b->cabca;c->bc"),
    ("starosta", "0->000;1->10110100"),
];
