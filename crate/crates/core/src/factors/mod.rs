//! Factors of fixed points: bounded-length factor sets, special factors,
//! palindromes, return words and the bispecial generator `u ↦ φ_R(u)·w`.

mod index;
mod orbit;
mod palindromes;
mod returns;

pub use index::{build_factor_index, special_factors, FactorIndex, SpecialFactors};
pub use orbit::{default_seed_bound, phi_map, phi_orbit, BispecialOrbit, PhiMap};
pub use palindromes::{palindrome_census, uniform_bands, PalNode, PalindromeCensus, PalindromeTree};
pub use returns::{
    bispecial_extension, bispecial_extension_in_fixed_point, complete_return_words, looks_periodic,
    smallest_period, BispecialExtension, ReturnWords,
};

use std::collections::HashMap;

use crate::word::{is_palindrome, Letter, Word};

/// Splits `period` as `p·q` with both parts palindromes (`p` possibly
/// empty), choosing the shortest `p`.
pub fn two_palindrome_split(period: &[Letter]) -> Option<(Word, Word)> {
    (0..=period.len())
        .find(|&i| is_palindrome(&period[..i]) && is_palindrome(&period[i..]))
        .map(|i| (Word::from_slice(&period[..i]), Word::from_slice(&period[i..])))
}

/// Smallest `R` such that every length-`R` window of `text` contains every
/// length-`n` factor of `text`. `None` when no window shorter than the text
/// works.
pub fn recurrence_window(text: &[Letter], n: usize) -> Option<usize> {
    if n == 0 || n > text.len() {
        return None;
    }
    let mut last: HashMap<&[Letter], usize> = HashMap::new();
    let mut need = 0;
    for (i, f) in text.windows(n).enumerate() {
        let gap = match last.insert(f, i) {
            // a window must reach the first occurrence from the start
            None => i + n,
            Some(prev) => i - prev + n - 1,
        };
        need = need.max(gap);
    }
    for &i in last.values() {
        need = need.max(text.len() - i);
    }
    (need < text.len()).then_some(need)
}
