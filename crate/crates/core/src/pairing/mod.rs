//! The duality pairing between phrase algebras, computed two independent
//! ways, plus the Gram/radical linear algebra built on top of it.
//!
//! The primary evaluator [`pair`] sums `1/h(φ)` over all good bijections
//! between the two cell diagrams whose letter labels match. The oracle
//! evaluator [`pair_oracle`] never enumerates bijections: it recurses on
//! the first word of the left side through all good cuts of the right
//! diagram, bottoming out in a multinomial base rule. The two must agree
//! everywhere; keeping both honest is the point.

mod diagram;
mod lemma;

pub use diagram::{
    good_bijections, good_cuts, horizontality, select_cells, type_of, Cell, CompositionType,
    GoodBijection,
};
pub use lemma::{a_nk, gf_coefficient_check, pn_integral, pn_polynomial, Polynomial};

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::freelin::{
    basis_phrases, factorial, kernel_basis, Element, Matrix, Phrase, Rational, RowSpace,
};
use crate::hopfcore::{antipode_subset, product};
use crate::primitives::{phi_u, symmetrize};
use itertools::Itertools;

/// The pairing of two basis phrases: `Σ 1/h(φ)` over good bijections `φ`
/// whose letter labels agree, zero when the degrees differ, and `⟨1,1⟩=1`
/// with the unit orthogonal to everything else.
fn pair_phrases(v: &Phrase, alpha: &Phrase) -> Rational {
    match (v.is_unit(), alpha.is_unit()) {
        (true, true) => return Rational::one(),
        (true, false) | (false, true) => return Rational::zero(),
        (false, false) => {}
    }
    if v.degree() != alpha.degree() {
        return Rational::zero();
    }
    let j = type_of(v).expect("non-unit");
    let k = type_of(alpha).expect("non-unit");
    let v_letters = v.flat_letters();
    let a_letters = alpha.flat_letters();
    let mut total = Rational::zero();
    for phi in good_bijections(&j, &k).expect("equal degrees") {
        let images = phi.images();
        let k_cells = k.cells();
        let matches = images.iter().enumerate().all(|(pos, img)| {
            let img_index = k_cells.iter().position(|c| c == img).expect("image cell");
            v_letters[pos] == a_letters[img_index]
        });
        if matches {
            total += Rational::new(BigInt::one(), horizontality(&j, &k, &phi));
        }
    }
    total
}

/// Memoized phrase-level pairing for batch computations; local to one
/// call, so there is no shared mutable state anywhere.
struct PairCache {
    map: HashMap<(Phrase, Phrase), Rational>,
}

impl PairCache {
    fn new() -> PairCache {
        PairCache { map: HashMap::new() }
    }

    fn phrases(&mut self, p: &Phrase, q: &Phrase) -> Rational {
        if let Some(v) = self.map.get(&(p.clone(), q.clone())) {
            return v.clone();
        }
        let v = pair_phrases(p, q);
        self.map.insert((p.clone(), q.clone()), v.clone());
        v
    }

    fn elements(&mut self, v: &Element, alpha: &Element) -> Rational {
        let mut total = Rational::zero();
        for (p, c) in v.terms() {
            for (q, w) in alpha.terms() {
                let val = self.phrases(p, q);
                if !val.is_zero() {
                    total += c * w * val;
                }
            }
        }
        total
    }
}

/// The duality pairing, extended bilinearly from basis phrases. The left
/// side lives in the algebra, the right side in its graded dual presented
/// on the same phrase basis; both must share one alphabet size.
pub fn pair(v: &Element, alpha: &Element) -> Result<Rational, Error> {
    if v.dim() != alpha.dim() {
        return Err(Error::AlphabetMismatch { left: v.dim(), right: alpha.dim() });
    }
    Ok(PairCache::new().elements(v, alpha))
}

/// Recursive pairing of basis phrases through good cuts, entirely
/// independent of the bijection enumeration.
fn oracle_phrases(v: &Phrase, alpha: &Phrase) -> Rational {
    if v.is_unit() {
        return if alpha.is_unit() { Rational::one() } else { Rational::zero() };
    }
    if alpha.is_unit() {
        return Rational::zero();
    }
    if v.words().len() == 1 {
        // A word pairs against a phrase as the multinomial renormalization
        // of the letterwise pairing with the flattened word: nonzero only
        // on an exact letter match, with value `1 / Π (row length)!`.
        let w = &v.words()[0];
        let flat = alpha.flat_letters();
        if flat.len() != w.len() || flat != w.letters() {
            return Rational::zero();
        }
        let mut denom = BigInt::one();
        for len in alpha.word_lengths() {
            denom *= factorial(len);
        }
        return Rational::new(BigInt::one(), denom);
    }
    let first = Phrase::from_word(v.words()[0].clone());
    let rest = Phrase::new(v.words()[1..].to_vec());
    let k = type_of(alpha).expect("non-unit");
    let mut total = Rational::zero();
    for (left_cells, right_cells) in good_cuts(&k) {
        let left = oracle_phrases(&first, &select_cells(alpha, &left_cells));
        if left.is_zero() {
            continue;
        }
        let right = oracle_phrases(&rest, &select_cells(alpha, &right_cells));
        total += left * right;
    }
    total
}

/// Independent re-computation of [`pair`] by cut recursion; used to
/// cross-check the bijection enumeration and kept deliberately separate
/// from it.
pub fn pair_oracle(v: &Element, alpha: &Element) -> Result<Rational, Error> {
    if v.dim() != alpha.dim() {
        return Err(Error::AlphabetMismatch { left: v.dim(), right: alpha.dim() });
    }
    let mut total = Rational::zero();
    for (p, c) in v.terms() {
        for (q, w) in alpha.terms() {
            let val = oracle_phrases(p, q);
            if !val.is_zero() {
                total += c * w * val;
            }
        }
    }
    Ok(total)
}

/// The degree-`n` Gram matrix: entry `(i, j)` pairs the `i`-th canonical
/// basis phrase with the `j`-th dual basis phrase.
pub fn gram_matrix(n: usize, d: u32) -> Matrix {
    let basis = basis_phrases(n, d);
    let mut cache = PairCache::new();
    let mut triplets = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            let v = cache.phrases(p, q);
            if !v.is_zero() {
                triplets.push((i, j, v));
            }
        }
    }
    Matrix::from_triplets(basis.len(), basis.len(), triplets)
}

/// A basis of the degree-`n` radical — the elements pairing to zero
/// against the whole dual component — as the left kernel of the Gram
/// matrix in canonical coordinates.
pub fn radical_basis(n: usize, d: u32) -> Vec<Element> {
    let basis = basis_phrases(n, d);
    kernel_basis(&gram_matrix(n, d).transpose())
        .into_iter()
        .map(|v| {
            Element::from_terms(
                d,
                basis.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect()
}

/// A spanning set of the degree-`n` slice of the two-sided ideal generated
/// by the constructed primitives `φ(U)(symmetrize(w))`, deg `w >= 2`.
fn ideal_spanning(n: usize, d: u32) -> Vec<Element> {
    let mut out = Vec::new();
    for k in 2..=n {
        for combo in (1..=d).combinations_with_replacement(k) {
            let w = crate::freelin::Word::from_indices(&combo);
            let generator = phi_u(symmetrize(d, &w).carrier());
            for i in 0..=(n - k) {
                let j = n - k - i;
                for a in basis_phrases(i, d) {
                    for b in basis_phrases(j, d) {
                        let left = product(&Element::from_phrase(d, a.clone()), &generator)
                            .expect("same alphabet");
                        let v = product(&left, &Element::from_phrase(d, b.clone()))
                            .expect("same alphabet");
                        out.push(v);
                    }
                }
            }
        }
    }
    out
}

/// Whether every element of the degree-`n` ideal slice pairs to zero
/// against every degree-`n` dual basis phrase.
pub fn ideal_in_kernel_check(n: usize, d: u32) -> bool {
    let duals = basis_phrases(n, d);
    let mut cache = PairCache::new();
    for v in ideal_spanning(n, d) {
        for q in &duals {
            let mut total = Rational::zero();
            for (p, c) in v.terms() {
                total += c * cache.phrases(p, q);
            }
            if !total.is_zero() {
                return false;
            }
        }
    }
    true
}

/// The dimension of the degree-`n` slice of the primitive-generated ideal.
pub fn ideal_degree_dim(n: usize, d: u32) -> usize {
    let basis = basis_phrases(n, d);
    let mut space = RowSpace::new(basis.len());
    for v in ideal_spanning(n, d) {
        let coords = crate::freelin::coords(&v, &basis).expect("degree-n element");
        space.insert(&coords);
    }
    space.dim()
}

/// Whether the antipode is self-adjoint for the pairing on the whole
/// degree-`n` component: `⟨S v, α⟩ = ⟨v, S α⟩` for all basis phrases.
pub fn adjoint_antipode_check(n: usize, d: u32) -> bool {
    let basis = basis_phrases(n, d);
    let images: Vec<Element> = basis
        .iter()
        .map(|p| antipode_subset(&Element::from_phrase(d, p.clone())))
        .collect();
    let mut cache = PairCache::new();
    for (i, p) in basis.iter().enumerate() {
        for (j, q) in basis.iter().enumerate() {
            let mut lhs = Rational::zero();
            for (r, c) in images[i].terms() {
                lhs += c * cache.phrases(r, q);
            }
            let mut rhs = Rational::zero();
            for (s, c) in images[j].terms() {
                rhs += c * cache.phrases(p, s);
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
