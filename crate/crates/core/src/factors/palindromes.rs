use std::ops::RangeInclusive;

use crate::word::{Letter, Word};

/// Root of odd palindromes, of length −1.
const ODD_ROOT: usize = 0;
/// Root of even palindromes: the empty word.
const EVEN_ROOT: usize = 1;

#[derive(Debug, Clone)]
struct Node {
    len: i64,
    link: usize,
    /// Node this one was obtained from by wrapping a letter around it.
    parent: usize,
    /// End position (inclusive) of the first occurrence in the text.
    end: usize,
    /// `(letter, child)` pairs, kept sorted by letter.
    children: Vec<(Letter, u32)>,
}

/// Palindromic tree (eertree) of a word: one node per distinct nonempty
/// palindromic factor, children `a·p·a`, built with suffix links in one
/// left-to-right pass.
#[derive(Debug, Clone)]
pub struct PalindromeTree {
    text: Vec<Letter>,
    nodes: Vec<Node>,
}

/// Handle to a palindrome in a [`PalindromeTree`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PalNode(u32);

impl PalindromeTree {
    pub fn new(text: &[Letter]) -> Self {
        let mut tree = PalindromeTree {
            text: Vec::with_capacity(text.len()),
            nodes: vec![
                Node { len: -1, link: ODD_ROOT, parent: ODD_ROOT, end: 0, children: Vec::new() },
                Node { len: 0, link: ODD_ROOT, parent: EVEN_ROOT, end: 0, children: Vec::new() },
            ],
        };
        let mut last = EVEN_ROOT;
        for &c in text {
            last = tree.push(last, c);
        }
        tree
    }

    /// Appends `c` and returns the longest palindromic suffix of the new text.
    fn push(&mut self, mut cur: usize, c: Letter) -> usize {
        let pos = self.text.len();
        self.text.push(c);
        let fits = |nodes: &[Node], text: &[Letter], v: usize| {
            let start = pos as i64 - nodes[v].len - 1;
            start >= 0 && text[start as usize] == c
        };
        while !fits(&self.nodes, &self.text, cur) {
            cur = self.nodes[cur].link;
        }
        if let Some(child) = self.child(cur, c) {
            return child;
        }
        let len = self.nodes[cur].len + 2;
        let link = if len == 1 {
            EVEN_ROOT
        } else {
            let mut v = self.nodes[cur].link;
            while !fits(&self.nodes, &self.text, v) {
                v = self.nodes[v].link;
            }
            self.child(v, c).expect("suffix palindrome already present")
        };
        let id = self.nodes.len();
        self.nodes.push(Node { len, link, parent: cur, end: pos, children: Vec::new() });
        let kids = &mut self.nodes[cur].children;
        let at = kids.partition_point(|&(l, _)| l < c);
        kids.insert(at, (c, id as u32));
        id
    }

    fn child(&self, v: usize, c: Letter) -> Option<usize> {
        let kids = &self.nodes[v].children;
        kids.binary_search_by_key(&c, |&(l, _)| l).ok().map(|i| kids[i].1 as usize)
    }

    pub fn text(&self) -> &[Letter] {
        &self.text
    }

    /// Number of distinct nonempty palindromic factors.
    pub fn len(&self) -> usize {
        self.nodes.len() - 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn nodes(&self) -> impl Iterator<Item = PalNode> {
        (2..self.nodes.len() as u32).map(PalNode)
    }

    pub fn node_len(&self, node: PalNode) -> usize {
        self.nodes[node.0 as usize].len as usize
    }

    pub fn palindrome(&self, node: PalNode) -> Word {
        let n = &self.nodes[node.0 as usize];
        let len = n.len as usize;
        Word::from_slice(&self.text[n.end + 1 - len..=n.end])
    }

    /// The palindrome `p` with `node = a·p·a`; `None` for lengths 1 and 2.
    pub fn parent(&self, node: PalNode) -> Option<PalNode> {
        let p = self.nodes[node.0 as usize].parent;
        (p > EVEN_ROOT).then_some(PalNode(p as u32))
    }

    /// Letters `a` such that `a·p·a` is also a node.
    pub fn extension_letters(&self, node: PalNode) -> Vec<Letter> {
        self.nodes[node.0 as usize].children.iter().map(|&(l, _)| l).collect()
    }

    /// Longest palindromic proper suffix, `None` when it is empty.
    pub fn suffix_link(&self, node: PalNode) -> Option<PalNode> {
        let l = self.nodes[node.0 as usize].link;
        (l > EVEN_ROOT).then_some(PalNode(l as u32))
    }

    /// `counts[k]` = number of distinct palindromes of length `k`.
    pub fn count_by_length(&self) -> Vec<usize> {
        let max = self.nodes.iter().map(|n| n.len.max(0) as usize).max().unwrap_or(0);
        let mut counts = vec![0; max + 1];
        for n in &self.nodes[2..] {
            counts[n.len as usize] += 1;
        }
        counts
    }

    /// Nested chain `p₀, p₁ = a₁p₀a₁, p₂ = a₂p₁a₂, …` ending at the longest
    /// palindrome (first one found when several share the maximum length).
    /// `p₀` is a single letter or a length-2 palindrome.
    pub fn longest_branch(&self) -> Vec<Word> {
        let Some(deepest) = self.nodes().max_by_key(|&v| (self.node_len(v), std::cmp::Reverse(v))) else {
            return Vec::new();
        };
        let mut chain = vec![deepest];
        let mut v = deepest;
        while let Some(p) = self.parent(v) {
            chain.push(p);
            v = p;
        }
        chain.reverse();
        chain.into_iter().map(|v| self.palindrome(v)).collect()
    }
}

/// Distinct palindrome counts of a word grouped into length bands.
#[derive(Debug, Clone)]
pub struct PalindromeCensus {
    pub tree: PalindromeTree,
    pub bands: Vec<RangeInclusive<usize>>,
    pub counts: Vec<usize>,
}

impl PalindromeCensus {
    pub fn total(&self) -> usize {
        self.tree.len()
    }
}

pub fn palindrome_census(text: &[Letter], bands: &[RangeInclusive<usize>]) -> PalindromeCensus {
    let tree = PalindromeTree::new(text);
    let by_len = tree.count_by_length();
    let counts = bands
        .iter()
        .map(|band| {
            by_len
                .iter()
                .enumerate()
                .filter(|(k, _)| band.contains(k))
                .map(|(_, c)| c)
                .sum()
        })
        .collect();
    PalindromeCensus { tree, bands: bands.to_vec(), counts }
}

/// Bands `[1, w], [w+1, 2w], …` covering lengths up to `max`.
pub fn uniform_bands(width: usize, max: usize) -> Vec<RangeInclusive<usize>> {
    let width = width.max(1);
    (0..max.div_ceil(width)).map(|i| i * width + 1..=((i + 1) * width).min(max)).collect()
}
