//! Letters, words, phrases, and the canonical basis enumeration.
//!
//! A *word* is a nonempty sequence of letters (an elementary tensor); a
//! *phrase* is a finite sequence of words (a product of elementary tensors).
//! The empty phrase is the algebra unit. Phrases of total degree `n` over a
//! `d`-letter alphabet form the degree-`n` slice of the canonical basis;
//! there are `2^(n-1) * d^n` of them for `n >= 1`.

use std::cmp::Ordering;
use std::fmt;

/// One basis letter `x1, x2, ..` of the underlying vector space, stored as
/// its 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    /// Panics if `index == 0`; letters are numbered from 1.
    pub fn new(index: u32) -> Letter {
        assert!(index >= 1, "letters are numbered from 1");
        Letter(index)
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// A nonempty sequence of letters, the elementary tensor `xi1 ⊗ .. ⊗ xik`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Panics on an empty letter sequence; the empty tensor is not a word
    /// (it is the algebra unit, represented by the empty phrase).
    pub fn new(letters: Vec<Letter>) -> Word {
        assert!(!letters.is_empty(), "a word holds at least one letter");
        Word(letters)
    }

    /// Convenience constructor from 1-based letter indices.
    pub fn from_indices(indices: &[u32]) -> Word {
        Word::new(indices.iter().map(|&i| Letter::new(i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of letters; at least 1 by construction.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// The word split after position `j` (`0 <= j <= len`); either side may
    /// be empty and is then returned as `None`.
    pub fn split_at(&self, j: usize) -> (Option<Word>, Option<Word>) {
        let (a, b) = self.0.split_at(j);
        let side = |s: &[Letter]| {
            if s.is_empty() {
                None
            } else {
                Some(Word(s.to_vec()))
            }
        };
        (side(a), side(b))
    }

    /// Concatenation of the letter sequences.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A finite sequence of words; the empty sequence is the algebra unit.
///
/// `Ord` is the canonical basis order: total degree first, then the
/// composition type with larger leading parts first (so `x1*x1` precedes
/// `x1|x1`), then the flattened letter sequence lexicographically. Term maps
/// keyed by `Phrase` therefore iterate in canonical order for free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Phrase(Vec<Word>);

impl Phrase {
    pub fn new(words: Vec<Word>) -> Phrase {
        Phrase(words)
    }

    /// The empty phrase, i.e. the algebra unit.
    pub fn unit() -> Phrase {
        Phrase(Vec::new())
    }

    /// A phrase consisting of a single word.
    pub fn from_word(w: Word) -> Phrase {
        Phrase(vec![w])
    }

    /// Convenience constructor from 1-based letter indices, one inner slice
    /// per word.
    pub fn from_indices(words: &[Vec<u32>]) -> Phrase {
        Phrase(words.iter().map(|w| Word::from_indices(w)).collect())
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of letters.
    pub fn degree(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    /// The list of word lengths, i.e. the composition type of the phrase.
    pub fn word_lengths(&self) -> Vec<usize> {
        self.0.iter().map(Word::len).collect()
    }

    /// All letters in reading order, forgetting the word boundaries.
    pub fn flat_letters(&self) -> Vec<Letter> {
        self.0.iter().flat_map(|w| w.letters().iter().copied()).collect()
    }

    /// Largest letter index occurring in the phrase; 0 for the unit.
    pub fn max_letter(&self) -> u32 {
        self.flat_letters().iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Concatenation of the word sequences (the algebra product on basis
    /// phrases).
    pub fn concat(&self, other: &Phrase) -> Phrase {
        let mut words = self.0.clone();
        words.extend_from_slice(&other.0);
        Phrase(words)
    }

    /// The phrase with its words in reverse order.
    pub fn reversed(&self) -> Phrase {
        let mut words = self.0.clone();
        words.reverse();
        Phrase(words)
    }
}

/// Composition types in canonical order: larger parts first at the earliest
/// position where two types differ. Within one total degree this is a total
/// order on compositions; across degrees, `Phrase`'s `Ord` compares degrees
/// before ever reaching this.
fn cmp_types(a: &[usize], b: &[usize]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for Phrase {
    fn cmp(&self, other: &Phrase) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| cmp_types(&self.word_lengths(), &other.word_lengths()))
            .then_with(|| self.flat_letters().cmp(&other.flat_letters()))
    }
}

impl PartialOrd for Phrase {
    fn partial_cmp(&self, other: &Phrase) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Phrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// All compositions of `n` in canonical order (larger first parts first);
/// `compositions(0)` is the single empty composition.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n).rev() {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All length-`n` letter sequences over `x1..xd` in lexicographic order.
fn fillings(n: usize, d: u32) -> Vec<Vec<Letter>> {
    let mut out = Vec::with_capacity((d as usize).pow(n as u32));
    let mut current = vec![1u32; n];
    loop {
        out.push(current.iter().map(|&i| Letter::new(i)).collect());
        // Increment as a base-d counter, most significant digit first.
        let mut pos = n;
        while pos > 0 {
            if current[pos - 1] < d {
                current[pos - 1] += 1;
                break;
            }
            current[pos - 1] = 1;
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
    }
}

/// The canonical basis of the degree-`n` component over a `d`-letter
/// alphabet: for each composition type in canonical order, all letter
/// fillings in lexicographic order. Degree 0 yields just the unit phrase;
/// otherwise there are `2^(n-1) * d^n` phrases.
pub fn basis_phrases(n: usize, d: u32) -> Vec<Phrase> {
    assert!(d >= 1, "the alphabet holds at least one letter");
    if n == 0 {
        return vec![Phrase::unit()];
    }
    let letter_rows = fillings(n, d);
    let mut out = Vec::new();
    for ty in compositions(n) {
        for letters in &letter_rows {
            let mut words = Vec::with_capacity(ty.len());
            let mut start = 0;
            for &part in &ty {
                words.push(Word(letters[start..start + part].to_vec()));
                start += part;
            }
            out.push(Phrase(words));
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(words: &[Vec<u32>]) -> Phrase {
        Phrase::from_indices(words)
    }

    #[test]
    fn degree_zero_basis_is_the_unit() {
        assert_eq!(basis_phrases(0, 3), vec![Phrase::unit()]);
    }

    #[test]
    fn degree_two_one_letter_basis() {
        // The two-letter word precedes the two-word phrase.
        assert_eq!(
            basis_phrases(2, 1),
            vec![p(&[vec![1, 1]]), p(&[vec![1], vec![1]])]
        );
    }

    #[test]
    fn degree_three_types_enumerate_in_canonical_order() {
        let types: Vec<Vec<usize>> = basis_phrases(3, 1)
            .iter()
            .map(|ph| ph.word_lengths())
            .collect();
        assert_eq!(
            types,
            vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]
        );
    }

    #[test]
    fn basis_counts_match_closed_form() {
        for d in 1..=2u32 {
            for n in 1..=7usize {
                let expected = (1usize << (n - 1)) * (d as usize).pow(n as u32);
                assert_eq!(basis_phrases(n, d).len(), expected, "n={n} d={d}");
            }
        }
    }

    // Independent enumeration: build all phrases recursively by choosing a
    // first word of every possible length and filling, and compare as sets.
    fn brute_force(n: usize, d: u32) -> Vec<Phrase> {
        fn words_of(len: usize, d: u32) -> Vec<Vec<u32>> {
            if len == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for rest in words_of(len - 1, d) {
                for l in 1..=d {
                    let mut w = vec![l];
                    w.extend_from_slice(&rest);
                    out.push(w);
                }
            }
            out
        }
        fn go(n: usize, d: u32) -> Vec<Vec<Vec<u32>>> {
            if n == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for first_len in 1..=n {
                for first in words_of(first_len, d) {
                    for rest in go(n - first_len, d) {
                        let mut phrase = vec![first.clone()];
                        phrase.extend(rest);
                        out.push(phrase);
                    }
                }
            }
            out
        }
        go(n, d).into_iter().map(|ws| p(&ws)).collect()
    }

    #[test]
    fn basis_agrees_with_brute_force_enumeration() {
        for d in 1..=2u32 {
            for n in 0..=5usize {
                let mut expected = brute_force(n, d);
                expected.sort();
                expected.dedup();
                assert_eq!(basis_phrases(n, d), expected, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn phrase_order_is_degree_then_type_then_letters() {
        assert!(p(&[vec![1]]) < p(&[vec![1, 1]]));
        assert!(p(&[vec![1, 1]]) < p(&[vec![1], vec![1]]));
        assert!(p(&[vec![1, 2]]) < p(&[vec![2, 1]]));
        assert!(p(&[vec![2, 1]]) < p(&[vec![1], vec![1]]));
        assert!(Phrase::unit() < p(&[vec![1]]));
    }

    #[test]
    fn phrase_display_is_compact() {
        assert_eq!(Phrase::unit().to_string(), "1");
        assert_eq!(p(&[vec![1, 2], vec![3]]).to_string(), "x1*x2|x3");
    }

    #[test]
    fn compositions_count_is_two_to_the_n_minus_one() {
        for n in 1..=10usize {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }
}
