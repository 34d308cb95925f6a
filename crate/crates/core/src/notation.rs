//! The `letter->image` text notation for morphisms.
//!
//! ```text
//! a->babba;b->bab
//! 0->01, 1->10
//! a->ab;b->
//! ```
//!
//! Rules are separated by `;` or `,`. Heads are single alphanumeric symbols;
//! the alphabet is the list of heads in order of appearance. Whitespace
//! around rules and arrows is ignored.

use crate::word::{Alphabet, Word};
use crate::{Error, Morphism, Result};

pub fn parse_morphism(text: &str) -> Result<Morphism> {
    let mut rules: Vec<(char, Vec<(usize, char)>)> = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut pos = 0;

    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].1.is_whitespace() {
            *pos += 1;
        }
    };
    let offset = |pos: usize| chars.get(pos).map_or(text.len(), |&(o, _)| o);
    let syntax = |pos: usize, message: &str| Error::Syntax {
        position: offset(pos),
        message: message.to_string(),
    };

    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(syntax(pos, "expected at least one rule"));
    }
    loop {
        skip_ws(&mut pos);
        let Some(&(_, head)) = chars.get(pos) else {
            return Err(syntax(pos, "expected a rule after separator"));
        };
        if !head.is_alphanumeric() {
            return Err(syntax(pos, "expected an alphanumeric letter"));
        }
        pos += 1;
        skip_ws(&mut pos);
        if chars.get(pos).map(|c| c.1) != Some('-') || chars.get(pos + 1).map(|c| c.1) != Some('>') {
            return Err(syntax(pos, "expected `->`"));
        }
        pos += 2;
        skip_ws(&mut pos);
        let mut image = Vec::new();
        while let Some(&(_, c)) = chars.get(pos) {
            if c == ';' || c == ',' || c.is_whitespace() {
                break;
            }
            if !c.is_alphanumeric() {
                return Err(syntax(pos, "expected an alphanumeric letter"));
            }
            image.push((offset(pos), c));
            pos += 1;
        }
        if rules.iter().any(|(h, _)| *h == head) {
            return Err(Error::DuplicateHead(head));
        }
        rules.push((head, image));
        skip_ws(&mut pos);
        match chars.get(pos) {
            None => break,
            Some((_, ';' | ',')) => {
                pos += 1;
                skip_ws(&mut pos);
                // a single trailing separator is tolerated
                if pos == chars.len() {
                    break;
                }
            }
            Some(_) => return Err(syntax(pos, "expected `;` or `,` between rules")),
        }
    }

    let alphabet = Alphabet::new(rules.iter().map(|(h, _)| *h))?;
    let images = rules
        .iter()
        .map(|(head, image)| {
            image
                .iter()
                .map(|&(_, c)| {
                    alphabet
                        .index_of(c)
                        .ok_or(Error::UnknownSymbol { symbol: c, head: *head })
                })
                .collect::<Result<Vec<_>>>()
                .map(Word)
        })
        .collect::<Result<Vec<_>>>()?;
    Morphism::new(alphabet, images)
}

/// Arrow notation for human-readable output: `a ↦ babba, b ↦ bab`.
pub fn arrow_notation(phi: &Morphism) -> String {
    let alphabet = phi.alphabet();
    alphabet
        .letters()
        .map(|l| {
            let img = phi.image(l);
            let rendered = if img.is_empty() { "ε".to_string() } else { alphabet.render(img) };
            format!("{} ↦ {}", alphabet.symbol(l), rendered)
        })
        .collect::<Vec<_>>()
        .join(", ")
}
