//! The Hopf-algebra structure maps on phrase combinations.
//!
//! The algebra product concatenates phrases; the coproduct deconcatenates
//! every word in all possible ways and extends to phrases as an algebra
//! morphism. The antipode is computed two independent ways — a direct
//! signed sum over all ways to cut each word, and the composition of the
//! word-reversing involution with the exponential of the cut operator —
//! and the two implementations are kept separate deliberately so each can
//! serve as a check on the other.

use crate::error::Error;
use crate::freelin::{inv_factorial, rat_int, Element, Phrase, Rational, Tensor2, Word};

/// The algebra product: bilinear extension of phrase concatenation.
/// The operands must share one alphabet.
pub fn product(a: &Element, b: &Element) -> Result<Element, Error> {
    if a.dim() != b.dim() {
        return Err(Error::AlphabetMismatch { left: a.dim(), right: b.dim() });
    }
    let mut out = Element::zero(a.dim());
    for (p, c) in a.terms() {
        for (q, v) in b.terms() {
            out.add_term(p.concat(q), c * v);
        }
    }
    Ok(out)
}

/// The inner (word-level) tensor product: bilinear extension of letter
/// concatenation. Defined only on elements supported on single words or
/// the unit; the unit acts as the empty letter sequence.
pub fn tensor_word(a: &Element, b: &Element) -> Result<Element, Error> {
    if a.dim() != b.dim() {
        return Err(Error::AlphabetMismatch { left: a.dim(), right: b.dim() });
    }
    for operand in [a, b] {
        if let Some((p, _)) = operand.terms().find(|(p, _)| p.words().len() > 1) {
            return Err(Error::NotWordSupported(p.clone()));
        }
    }
    let glue = |p: &Phrase, q: &Phrase| -> Phrase {
        let mut letters = p.flat_letters();
        letters.extend(q.flat_letters());
        if letters.is_empty() {
            Phrase::unit()
        } else {
            Phrase::from_word(Word::new(letters))
        }
    };
    let mut out = Element::zero(a.dim());
    for (p, c) in a.terms() {
        for (q, v) in b.terms() {
            out.add_term(glue(p, q), c * v);
        }
    }
    Ok(out)
}

/// The product on the two-fold tensor space:
/// `(p ⊗ q)(r ⊗ s) = pr ⊗ qs`, extended bilinearly.
pub fn tensor_mul(s: &Tensor2, t: &Tensor2) -> Tensor2 {
    assert_eq!(s.dim(), t.dim(), "cannot multiply over different alphabets");
    let mut out = Tensor2::zero(s.dim());
    for ((p, q), c) in s.terms() {
        for ((r, w), v) in t.terms() {
            out.add_term(p.concat(r), q.concat(w), c * v);
        }
    }
    out
}

/// Deconcatenation of one word: `Σ_{j=0..k} prefix ⊗ suffix`, with empty
/// sides becoming the unit phrase.
fn word_coproduct(dim: u32, w: &Word) -> Tensor2 {
    let mut out = Tensor2::zero(dim);
    for j in 0..=w.len() {
        let (prefix, suffix) = w.split_at(j);
        let side = |part: Option<Word>| part.map_or_else(Phrase::unit, Phrase::from_word);
        out.add_term(side(prefix), side(suffix), rat_int(1));
    }
    out
}

/// The coproduct: deconcatenation on words, extended to phrases as an
/// algebra morphism (componentwise product in the tensor square) and to
/// combinations linearly. `Δ(1) = 1 ⊗ 1`.
pub fn coproduct(a: &Element) -> Tensor2 {
    let mut out = Tensor2::zero(a.dim());
    for (p, c) in a.terms() {
        let mut acc = Tensor2::from_terms(a.dim(), [(Phrase::unit(), Phrase::unit(), rat_int(1))]);
        for w in p.words() {
            acc = tensor_mul(&acc, &word_coproduct(a.dim(), w));
        }
        for ((l, r), v) in acc.terms() {
            out.add_term(l.clone(), r.clone(), v * c);
        }
    }
    out
}

/// The counit: the coefficient of the empty phrase.
pub fn counit(a: &Element) -> Rational {
    a.coeff(&Phrase::unit())
}

/// `uε`: the composite of counit and unit, the neutral element of
/// convolution.
pub fn unit_counit(a: &Element) -> Element {
    Element::unit(a.dim()).scale(&counit(a))
}

/// The algebra antimorphism sending every word `w` to `-w`: a phrase of
/// `r` words maps to `(-1)^r` times the same words in reverse order. An
/// involution, and the antipode the algebra would have if every word were
/// primitive.
pub fn naive_antipode(a: &Element) -> Element {
    a.linear_ext(|p| {
        let sign = if p.words().len() % 2 == 0 { 1 } else { -1 };
        Element::from_phrase(a.dim(), p.reversed()).scale(&rat_int(sign))
    })
}

/// The cut operator: on a word of length `k` the sum of the `k - 1` ways
/// to cut it into two nonempty words, extended to phrases by the Leibniz
/// rule and to combinations linearly. Letters and the unit map to zero.
pub fn cut_operator(a: &Element) -> Element {
    a.linear_ext(|p| {
        let mut out = Element::zero(a.dim());
        for (i, w) in p.words().iter().enumerate() {
            for j in 1..w.len() {
                let (prefix, suffix) = w.split_at(j);
                let mut words: Vec<Word> = p.words()[..i].to_vec();
                words.push(prefix.expect("nonempty by construction"));
                words.push(suffix.expect("nonempty by construction"));
                words.extend_from_slice(&p.words()[i + 1..]);
                out.add_term(Phrase::new(words), rat_int(1));
            }
        }
        out
    })
}

/// `Σ_r (±1)^r U^r / r!` where `U` is the cut operator. The series is
/// finite on every element: each cut strictly increases the word count at
/// fixed degree, so `U` is locally nilpotent and the sum is exact.
fn cut_exponential(a: &Element, negate: bool) -> Element {
    let mut acc = Element::zero(a.dim());
    let mut power = a.clone(); // U^r(a), starting at r = 0
    let mut r = 0usize;
    while !power.is_zero() {
        let mut coeff = inv_factorial(r);
        if negate && r % 2 == 1 {
            coeff = -coeff;
        }
        acc = acc.add(&power.scale(&coeff));
        power = cut_operator(&power);
        r += 1;
    }
    acc
}

/// `exp(-U)`, the exponential of the negated cut operator. An algebra
/// automorphism; its inverse is [`exp_cut`].
pub fn exp_neg_cut(a: &Element) -> Element {
    cut_exponential(a, true)
}

/// `exp(U)`, inverse automorphism of [`exp_neg_cut`].
pub fn exp_cut(a: &Element) -> Element {
    cut_exponential(a, false)
}

/// The antipode as a direct signed sum: a word of length `k` maps to the
/// sum over all `2^(k-1)` ways to cut it into `s` consecutive nonempty
/// words of `(-1)^s` times the resulting phrase; phrases map via the
/// antimorphism property (reverse the word images and multiply).
pub fn antipode_subset(a: &Element) -> Element {
    let word_antipode = |w: &Word| -> Element {
        let k = w.len();
        let mut out = Element::zero(a.dim());
        let letters = w.letters();
        for mask in 0u64..(1u64 << (k - 1)) {
            let mut words = Vec::new();
            let mut start = 0usize;
            for j in 1..k {
                if mask & (1 << (j - 1)) != 0 {
                    words.push(Word::new(letters[start..j].to_vec()));
                    start = j;
                }
            }
            words.push(Word::new(letters[start..].to_vec()));
            let sign = if words.len() % 2 == 0 { 1 } else { -1 };
            out.add_term(Phrase::new(words), rat_int(sign));
        }
        out
    };
    a.linear_ext(|p| {
        let mut acc = Element::unit(a.dim());
        for w in p.words().iter().rev() {
            acc = product(&acc, &word_antipode(w)).expect("same alphabet");
        }
        acc
    })
}

/// The antipode as `exp(-U)` composed with the naive antipode. Must agree
/// with [`antipode_subset`] everywhere; the two are implemented
/// independently on purpose.
pub fn antipode_exp(a: &Element) -> Element {
    exp_neg_cut(&naive_antipode(a))
}

/// The convolution product of two linear endomaps:
/// `(f * g)(a) = Σ f(a') g(a'')` summed over the coproduct of `a`.
pub fn convolve(
    f: &dyn Fn(&Element) -> Element,
    g: &dyn Fn(&Element) -> Element,
    a: &Element,
) -> Element {
    let mut out = Element::zero(a.dim());
    for ((p, q), c) in coproduct(a).terms() {
        let left = f(&Element::from_phrase(a.dim(), p.clone()));
        let right = g(&Element::from_phrase(a.dim(), q.clone()));
        out = out.add(&product(&left, &right).expect("same alphabet").scale(c));
    }
    out
}

/// The `k`-fold convolution power of an endomap; `k = 0` yields `uε`.
pub fn convolution_power(f: &dyn Fn(&Element) -> Element, k: usize, a: &Element) -> Element {
    match k {
        0 => unit_counit(a),
        1 => f(a),
        _ => convolve(&|x: &Element| convolution_power(f, k - 1, x), f, a),
    }
}

/// A linear map between underlying vector spaces, tabulated by its images
/// of the source letters. Column `i` is the image of `x(i+1)`, a linear
/// combination of single letters over the target alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMapTable {
    d_in: u32,
    d_out: u32,
    columns: Vec<Element>,
}

impl LinearMapTable {
    /// Panics unless exactly `d_in` columns are given, each supported on
    /// single-letter words over a `d_out`-letter alphabet.
    pub fn new(d_in: u32, d_out: u32, columns: Vec<Element>) -> LinearMapTable {
        assert_eq!(columns.len(), d_in as usize, "one column per source letter");
        for col in &columns {
            assert_eq!(col.dim(), d_out, "column over the wrong alphabet");
            assert!(
                col.terms().all(|(p, _)| p.degree() == 1),
                "columns must be combinations of single letters"
            );
        }
        LinearMapTable { d_in, d_out, columns }
    }

    pub fn identity(d: u32) -> LinearMapTable {
        let columns = (1..=d).map(|i| Element::from_indices(d, &[vec![i]])).collect();
        LinearMapTable::new(d, d, columns)
    }

    pub fn d_in(&self) -> u32 {
        self.d_in
    }

    pub fn d_out(&self) -> u32 {
        self.d_out
    }

    /// The image of the `i`-th source letter (1-based).
    pub fn column(&self, i: u32) -> &Element {
        &self.columns[(i - 1) as usize]
    }

    /// The composite `self ∘ inner` as a table; panics unless the inner
    /// target alphabet matches this map's source alphabet.
    pub fn compose(&self, inner: &LinearMapTable) -> LinearMapTable {
        assert_eq!(self.d_in, inner.d_out, "composition alphabet mismatch");
        let columns = inner
            .columns
            .iter()
            .map(|col| {
                let mut image = Element::zero(self.d_out);
                for (p, c) in col.terms() {
                    let letter = p.flat_letters()[0];
                    image = image.add(&self.column(letter.index()).scale(c));
                }
                image
            })
            .collect();
        LinearMapTable::new(inner.d_in, self.d_out, columns)
    }
}

/// The functorial algebra morphism induced by a letter-level linear map:
/// letters map by the table, words multiplicatively in each tensor slot,
/// phrases multiplicatively, combinations linearly. Commutes with the
/// coproduct and both antipode implementations.
pub fn induced_morphism(f: &LinearMapTable, a: &Element) -> Result<Element, Error> {
    if a.dim() != f.d_in {
        return Err(Error::AlphabetMismatch { left: a.dim(), right: f.d_in });
    }
    let mut out = Element::zero(f.d_out);
    for (p, c) in a.terms() {
        let mut phrase_image = Element::unit(f.d_out);
        for w in p.words() {
            let mut word_image = Element::unit(f.d_out);
            for l in w.letters() {
                word_image =
                    tensor_word(&word_image, f.column(l.index())).expect("columns are words");
            }
            phrase_image = product(&phrase_image, &word_image).expect("same alphabet");
        }
        out = out.add(&phrase_image.scale(c));
    }
    Ok(out)
}
