//! Linear combinations of phrases and of phrase pairs.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::error::Error;
use crate::freelin::basis::Phrase;
use crate::freelin::scalar::Rational;

/// A finite rational linear combination of basis phrases over the alphabet
/// `x1..xd`.
///
/// The term map never stores a zero coefficient and never stores a phrase
/// whose letters exceed the alphabet, so structural equality is semantic
/// equality. Iteration order of the map is the canonical basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    dim: u32,
    terms: BTreeMap<Phrase, Rational>,
}

impl Element {
    /// The zero element of the algebra over a `d`-letter alphabet.
    pub fn zero(dim: u32) -> Element {
        assert!(dim >= 1, "the alphabet holds at least one letter");
        Element { dim, terms: BTreeMap::new() }
    }

    /// The algebra unit: the empty phrase with coefficient 1.
    pub fn unit(dim: u32) -> Element {
        Element::from_phrase(dim, Phrase::unit())
    }

    /// The basis phrase `p` with coefficient 1. Panics if a letter of `p`
    /// exceeds the alphabet.
    pub fn from_phrase(dim: u32, p: Phrase) -> Element {
        Element::from_terms(dim, [(p, Rational::from_integer(1.into()))])
    }

    /// Convenience: the coefficient-1 phrase given by 1-based letter
    /// indices, one inner vector per word.
    pub fn from_indices(dim: u32, words: &[Vec<u32>]) -> Element {
        Element::from_phrase(dim, Phrase::from_indices(words))
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(dim: u32, terms: I) -> Element
    where
        I: IntoIterator<Item = (Phrase, Rational)>,
    {
        let mut e = Element::zero(dim);
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    /// Adds `c * p` in place, keeping the no-zero-term invariant.
    pub fn add_term(&mut self, p: Phrase, c: Rational) {
        assert!(
            p.max_letter() <= self.dim,
            "phrase {p} uses letters beyond a {}-letter alphabet",
            self.dim
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry(p) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis phrases in the support.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Phrase, &Rational)> {
        self.terms.iter()
    }

    /// The coefficient of `p`, zero when absent.
    pub fn coeff(&self, p: &Phrase) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sum of two combinations over the same alphabet. Panics on an
    /// alphabet mismatch: addition is total on each fixed algebra.
    pub fn add(&self, other: &Element) -> Element {
        assert_eq!(self.dim, other.dim, "cannot add over different alphabets");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    /// The scalar multiple `c * self`; scaling by zero yields zero.
    pub fn scale(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero(self.dim);
        }
        Element {
            dim: self.dim,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    /// Linear extension of a phrase-indexed family of elements:
    /// `Σ c_p f(p)`. The images must share this element's alphabet.
    pub fn linear_ext(&self, f: impl Fn(&Phrase) -> Element) -> Element {
        let mut out = Element::zero(self.dim);
        for (p, c) in &self.terms {
            let image = f(p);
            assert_eq!(image.dim, self.dim, "linear extension changed the alphabet");
            for (q, v) in image.terms {
                out.add_term(q, v * c);
            }
        }
        out
    }

    /// True when every support phrase has at most one word (a linear
    /// combination of words and possibly the unit).
    pub fn is_word_supported(&self) -> bool {
        self.terms.keys().all(|p| p.words().len() <= 1)
    }

    /// The common degree of all support phrases, if the element is
    /// homogeneous; `None` for zero or mixed-degree elements.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(Phrase::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Largest degree in the support; 0 for zero elements.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Phrase::degree).max().unwrap_or(0)
    }

    /// The part of the element of total degree `n`.
    pub fn homogeneous_part(&self, n: usize) -> Element {
        Element {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.degree() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs)
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Rational::from_integer((-1).into()))
    }
}

/// Plain-text rendering: terms in canonical order, `p/q` coefficients,
/// words joined by `*` and phrases by `|`. The output parses back to an
/// equal element.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = Rational::from_integer(1.into());
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if p.is_unit() {
                write!(f, "{abs}")?;
            } else if abs == one {
                write!(f, "{p}")?;
            } else {
                write!(f, "{abs} {p}")?;
            }
        }
        Ok(())
    }
}

/// A finite rational linear combination of ordered pairs of phrases — an
/// element of the two-fold tensor space, used for coproduct values.
///
/// Same canonical-form invariants as [`Element`]; pairs are ordered
/// lexicographically by the canonical phrase order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2 {
    dim: u32,
    terms: BTreeMap<(Phrase, Phrase), Rational>,
}

impl Tensor2 {
    pub fn zero(dim: u32) -> Tensor2 {
        assert!(dim >= 1, "the alphabet holds at least one letter");
        Tensor2 { dim, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(dim: u32, terms: I) -> Tensor2
    where
        I: IntoIterator<Item = (Phrase, Phrase, Rational)>,
    {
        let mut t = Tensor2::zero(dim);
        for (p, q, c) in terms {
            t.add_term(p, q, c);
        }
        t
    }

    /// The outer tensor `a ⊗ b` of two elements over the same alphabet.
    pub fn of(a: &Element, b: &Element) -> Tensor2 {
        assert_eq!(a.dim, b.dim, "cannot tensor over different alphabets");
        let mut t = Tensor2::zero(a.dim);
        for (p, c) in &a.terms {
            for (q, v) in &b.terms {
                t.add_term(p.clone(), q.clone(), c * v);
            }
        }
        t
    }

    pub fn add_term(&mut self, p: Phrase, q: Phrase, c: Rational) {
        assert!(
            p.max_letter() <= self.dim && q.max_letter() <= self.dim,
            "pair ({p}, {q}) uses letters beyond a {}-letter alphabet",
            self.dim
        );
        if c.is_zero() {
            return;
        }
        match self.terms.entry((p, q)) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Phrase, Phrase), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &Phrase, q: &Phrase) -> Rational {
        self.terms.get(&(p.clone(), q.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        assert_eq!(self.dim, other.dim, "cannot add over different alphabets");
        let mut out = self.clone();
        for ((p, q), c) in &other.terms {
            out.add_term(p.clone(), q.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        self.add(&other.scale(&Rational::from_integer((-1).into())))
    }

    pub fn scale(&self, c: &Rational) -> Tensor2 {
        if c.is_zero() {
            return Tensor2::zero(self.dim);
        }
        Tensor2 {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }
}

impl fmt::Display for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = Rational::from_integer(1.into());
        for (i, ((p, q), c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if abs != one {
                write!(f, "{abs} ")?;
            }
            write!(f, "({p}) (x) ({q})")?;
        }
        Ok(())
    }
}

/// The coordinate vector of `e` relative to an explicit phrase basis, in
/// the order given. Fails with [`Error::UnknownBasisPhrase`] if the support
/// of `e` is not contained in the basis.
pub fn coords(e: &Element, basis: &[Phrase]) -> Result<Vec<Rational>, Error> {
    let mut index = BTreeMap::new();
    for (i, p) in basis.iter().enumerate() {
        index.insert(p.clone(), i);
    }
    let mut out = vec![Rational::zero(); basis.len()];
    for (p, c) in &e.terms {
        match index.get(p) {
            Some(&i) => out[i] = c.clone(),
            None => return Err(Error::UnknownBasisPhrase(p.clone())),
        }
    }
    Ok(out)
}
