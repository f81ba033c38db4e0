//! Primitive elements: constructions that produce them and exact linear
//! algebra that enumerates them degree by degree.
//!
//! The central construction applies the series `φ(U) = Σ_p (-U)^p/(p+1)!`
//! of the cut operator to a symmetric tensor, which always lands in the
//! primitive part of the coalgebra. Separately, [`prim_basis`] computes the
//! full primitive subspace of a graded component as the kernel of the
//! reduced coproduct, so the constructive route can be measured against
//! the exhaustive one.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::Error;
use crate::freelin::{
    basis_phrases, coords, inv_factorial, kernel_basis, rat, rat_int, Element, Letter, Matrix,
    Phrase, Rational, RowSpace, Word,
};
use crate::hopfcore::{coproduct, cut_operator, product};

/// A homogeneous, word-supported element invariant under all permutations
/// of its tensor slots. Construction checks the invariants and panics on
/// violation; use [`symmetrize`] to produce one from any word.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricTensor {
    carrier: Element,
}

impl SymmetricTensor {
    pub fn new(carrier: Element) -> SymmetricTensor {
        assert!(!carrier.is_zero(), "a symmetric tensor is nonzero");
        assert!(carrier.is_word_supported(), "support must consist of words");
        let degree = carrier
            .homogeneous_degree()
            .expect("a symmetric tensor is homogeneous");
        assert!(degree >= 1, "degree-0 tensors have no slots to permute");
        // Adjacent transpositions generate the symmetric group, so checking
        // them checks full permutation invariance.
        for i in 0..degree - 1 {
            let swapped = carrier.linear_ext(|p| {
                let mut letters = p.flat_letters();
                letters.swap(i, i + 1);
                Element::from_phrase(carrier.dim(), Phrase::from_word(Word::new(letters)))
            });
            assert_eq!(swapped, carrier, "tensor is not permutation invariant");
        }
        SymmetricTensor { carrier }
    }

    pub fn carrier(&self) -> &Element {
        &self.carrier
    }

    pub fn degree(&self) -> usize {
        self.carrier.homogeneous_degree().expect("homogeneous by invariant")
    }
}

/// The unnormalized symmetrization of a word: the sum of its `k!` slot
/// permutations, with repeated letters merging into integer multiplicities.
pub fn symmetrize(dim: u32, w: &Word) -> SymmetricTensor {
    let letters = w.letters();
    let mut sum = Element::zero(dim);
    for perm in (0..letters.len()).permutations(letters.len()) {
        let permuted: Vec<Letter> = perm.iter().map(|&i| letters[i]).collect();
        sum.add_term(Phrase::from_word(Word::new(permuted)), rat_int(1));
    }
    SymmetricTensor::new(sum)
}

/// Whether `Δ(a) = a ⊗ 1 + 1 ⊗ a`. The zero element counts as primitive.
pub fn is_primitive(a: &Element) -> bool {
    let unit = Element::unit(a.dim());
    let expected = crate::freelin::Tensor2::of(a, &unit).add(&crate::freelin::Tensor2::of(&unit, a));
    coproduct(a) == expected
}

/// The series `φ(U) = Σ_{p≥0} (-1)^p U^p / (p+1)!` applied to `a`; exact
/// because the cut operator is locally nilpotent. Sends every symmetric
/// tensor to a primitive element.
pub fn phi_u(a: &Element) -> Element {
    let mut acc = Element::zero(a.dim());
    let mut power = a.clone();
    let mut p = 0usize;
    while !power.is_zero() {
        let mut coeff = inv_factorial(p + 1);
        if p % 2 == 1 {
            coeff = -coeff;
        }
        acc = acc.add(&power.scale(&coeff));
        power = cut_operator(&power);
        p += 1;
    }
    acc
}

/// `φ(U)` applied to a symmetric tensor, with the primitivity of the
/// result verified. The error can only fire on an implementation bug,
/// never on valid data.
pub fn primitive_from_symmetric(v0: &SymmetricTensor) -> Result<Element, Error> {
    let candidate = phi_u(v0.carrier());
    if is_primitive(&candidate) {
        Ok(candidate)
    } else {
        Err(Error::PrimitivityViolation)
    }
}

/// A polynomial in a formal variable `t` with coefficients in the algebra,
/// truncated beyond a fixed order. Supports exactly the arithmetic needed
/// to expand logarithms of grouplike series.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    dim: u32,
    coefficients: Vec<Element>, // index = power of t, length = order + 1
}

impl TruncatedSeries {
    pub fn zero(dim: u32, order: usize) -> TruncatedSeries {
        TruncatedSeries {
            dim,
            coefficients: vec![Element::zero(dim); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn coefficient(&self, k: usize) -> &Element {
        &self.coefficients[k]
    }

    pub fn set_coefficient(&mut self, k: usize, e: Element) {
        assert_eq!(e.dim(), self.dim, "coefficient over the wrong alphabet");
        self.coefficients[k] = e;
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), other.order(), "orders must agree");
        TruncatedSeries {
            dim: self.dim,
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        TruncatedSeries {
            dim: self.dim,
            coefficients: self.coefficients.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Product in the phrase algebra, dropping powers beyond the order.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), other.order(), "orders must agree");
        let mut out = TruncatedSeries::zero(self.dim, self.order());
        for i in 0..=self.order() {
            if self.coefficients[i].is_zero() {
                continue;
            }
            for j in 0..=(self.order() - i) {
                let part = product(&self.coefficients[i], &other.coefficients[j])
                    .expect("same alphabet");
                out.coefficients[i + j] = out.coefficients[i + j].add(&part);
            }
        }
        out
    }
}

/// The truncated grouplike series `g = 1 + Σ_{k=1..order} t^k x^{⊗k}`.
pub fn grouplike_series(x: Letter, dim: u32, order: usize) -> TruncatedSeries {
    let mut g = TruncatedSeries::zero(dim, order);
    g.set_coefficient(0, Element::unit(dim));
    for k in 1..=order {
        let word = Phrase::from_word(Word::new(vec![x; k]));
        g.set_coefficient(k, Element::from_phrase(dim, word));
    }
    g
}

/// The `t^n` coefficient of `log(g)` for the grouplike series of a letter,
/// computed by expanding `log(1 + h) = Σ (-1)^{m+1} h^m / m` in the
/// truncated series algebra. Always equals `φ(U)(x^{⊗n})`.
pub fn grouplike_log_coefficient(x: Letter, n: usize, dim: u32) -> Element {
    assert!(n >= 1, "the constant term of the logarithm is zero");
    let mut h = grouplike_series(x, dim, n);
    h.set_coefficient(0, Element::zero(dim)); // h = g - 1
    let mut log = TruncatedSeries::zero(dim, n);
    let mut h_power = h.clone();
    for m in 1..=n {
        let sign = if m % 2 == 1 { 1 } else { -1 };
        let coeff = rat(sign, m as i64);
        log = log.add(&h_power.scale(&coeff));
        if m < n {
            h_power = h_power.mul(&h);
        }
    }
    log.coefficient(n).clone()
}

/// Checks the polarization identity expressing the "every letter occurs"
/// part of `(x_1 + .. + x_n)^{⊗k}` by inclusion–exclusion over subsets of
/// the letters. `letters` must be distinct.
pub fn inclusion_exclusion_check(dim: u32, letters: &[Letter], k: usize) -> bool {
    let n = letters.len();
    assert!(n >= 1 && k >= 1, "need at least one letter and one slot");
    let distinct: BTreeSet<Letter> = letters.iter().copied().collect();
    assert_eq!(distinct.len(), n, "letters must be distinct");

    // Left side: all k-letter words over `letters` in which every letter
    // occurs at least once.
    let mut lhs = Element::zero(dim);
    for tuple in (0..k).map(|_| letters.iter().copied()).multi_cartesian_product() {
        let used: BTreeSet<Letter> = tuple.iter().copied().collect();
        if used.len() == n {
            lhs.add_term(Phrase::from_word(Word::new(tuple)), rat_int(1));
        }
    }

    // Right side: Σ_{S ⊆ letters} (-1)^{n-|S|} (Σ_{x∈S} x)^{⊗k}.
    let mut rhs = Element::zero(dim);
    for mask in 0u64..(1u64 << n) {
        let subset: Vec<Letter> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| letters[i]).collect();
        if subset.is_empty() {
            continue; // the zero vector contributes nothing for k >= 1
        }
        let sum_of_letters = subset
            .iter()
            .fold(Element::zero(dim), |acc, &l| {
                acc.add(&Element::from_indices(dim, &[vec![l.index()]]))
            });
        let mut power = Element::unit(dim);
        for _ in 0..k {
            power = crate::hopfcore::tensor_word(&power, &sum_of_letters).expect("words");
        }
        let sign = if (n - subset.len()).is_multiple_of(2) { 1 } else { -1 };
        rhs = rhs.add(&power.scale(&rat_int(sign)));
    }

    lhs == rhs
}

/// An exact basis of the primitive part of the degree-`n` component: the
/// kernel of the reduced coproduct in phrase coordinates, with the kernel
/// convention of [`kernel_basis`]. Degree 1 returns the letters.
pub fn prim_basis(n: usize, d: u32) -> Vec<Element> {
    assert!(n >= 1, "degree 0 holds no primitives");
    let basis = basis_phrases(n, d);
    // Rows are indexed by tensor pairs with both sides non-unit; dropping
    // the unit rows is exactly subtracting a ⊗ 1 + 1 ⊗ a from Δ(a).
    let mut row_index = std::collections::BTreeMap::new();
    let mut triplets = Vec::new();
    for (col, ph) in basis.iter().enumerate() {
        let delta = coproduct(&Element::from_phrase(d, ph.clone()));
        for ((p, q), c) in delta.terms() {
            if p.is_unit() || q.is_unit() {
                continue;
            }
            let next = row_index.len();
            let row = *row_index.entry((p.clone(), q.clone())).or_insert(next);
            triplets.push((row, col, c.clone()));
        }
    }
    let matrix = Matrix::from_triplets(row_index.len(), basis.len(), triplets);
    kernel_basis(&matrix)
        .into_iter()
        .map(|v| {
            Element::from_terms(
                d,
                basis.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()),
            )
        })
        .collect()
}

/// Per-degree dimensions (degrees `1..=n_max`) of the graded Lie algebra
/// generated under commutator brackets by the letters together with all
/// primitives `φ(U)(symmetrize(w))` of words `w` of degree `>= 2`.
pub fn lie_span_dims(n_max: usize, d: u32) -> Vec<usize> {
    assert!(n_max >= 1);
    let mut dims = Vec::with_capacity(n_max);
    let mut layers: Vec<Vec<Element>> = Vec::with_capacity(n_max); // reduced spanning sets
    for n in 1..=n_max {
        let basis = basis_phrases(n, d);
        let mut space = RowSpace::new(basis.len());
        let mut layer = Vec::new();
        let offer = |e: &Element, space: &mut RowSpace, layer: &mut Vec<Element>| {
            if e.is_zero() {
                return;
            }
            let v = coords(e, &basis).expect("degree-n element in degree-n basis");
            if space.insert(&v) {
                layer.push(e.clone());
            }
        };

        // Generators of this degree.
        if n == 1 {
            for i in 1..=d {
                offer(&Element::from_indices(d, &[vec![i]]), &mut space, &mut layer);
            }
        } else {
            // One word per letter multiset; permutations symmetrize alike.
            for combo in (1..=d).combinations_with_replacement(n) {
                let w = Word::from_indices(&combo);
                let prim = primitive_from_symmetric(&symmetrize(d, &w))
                    .expect("construction always yields a primitive");
                offer(&prim, &mut space, &mut layer);
            }
        }

        // Brackets of lower layers.
        for i in 1..n {
            let j = n - i;
            if i > j {
                break;
            }
            for a in &layers[i - 1] {
                for b in &layers[j - 1] {
                    let bracket = product(a, b)
                        .expect("same alphabet")
                        .sub(&product(b, a).expect("same alphabet"));
                    offer(&bracket, &mut space, &mut layer);
                }
            }
        }

        dims.push(space.dim());
        layers.push(layer);
    }
    dims
}

/// One degree of the observational comparison between the Lie span of the
/// constructed primitives and the full primitive subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub degree: usize,
    pub lie_dim: usize,
    pub prim_dim: usize,
}

impl ConjectureRow {
    /// True when the Lie span is strictly smaller in this degree.
    pub fn strict(&self) -> bool {
        self.lie_dim < self.prim_dim
    }
}

/// Computed dimensions per degree, nothing more: whether the Lie span
/// exhausts the primitives is left as an observation for the caller.
pub fn conjecture_report(n_max: usize, d: u32) -> Vec<ConjectureRow> {
    let lie = lie_span_dims(n_max, d);
    (1..=n_max)
        .map(|n| ConjectureRow {
            degree: n,
            lie_dim: lie[n - 1],
            prim_dim: prim_basis(n, d).len(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelin::Tensor2;

    fn e(dim: u32, words: &[Vec<u32>]) -> Element {
        Element::from_indices(dim, words)
    }

    fn w(indices: &[u32]) -> Word {
        Word::from_indices(indices)
    }

    #[test]
    fn symmetrize_small_words() {
        assert_eq!(symmetrize(1, &w(&[1])).carrier(), &e(1, &[vec![1]]));
        assert_eq!(
            symmetrize(2, &w(&[1, 2])).carrier(),
            &e(2, &[vec![1, 2]]).add(&e(2, &[vec![2, 1]]))
        );
        // Repeated letters accumulate multiplicity.
        assert_eq!(
            symmetrize(1, &w(&[1, 1])).carrier(),
            &e(1, &[vec![1, 1]]).scale(&rat_int(2))
        );
    }

    #[test]
    #[should_panic(expected = "not permutation invariant")]
    fn asymmetric_tensors_are_rejected() {
        let _ = SymmetricTensor::new(e(2, &[vec![1, 2]]));
    }

    #[test]
    #[should_panic(expected = "support must consist of words")]
    fn phrase_supported_tensors_are_rejected() {
        let _ = SymmetricTensor::new(e(2, &[vec![1], vec![2]]));
    }

    #[test]
    fn primitivity_of_letters_and_known_combination() {
        assert!(is_primitive(&e(2, &[vec![1]])));
        assert!(!is_primitive(&e(2, &[vec![1, 2]])));

        // x⊗y + y⊗x - (x•y + y•x)/2 is primitive.
        let v = e(2, &[vec![1, 2]])
            .add(&e(2, &[vec![2, 1]]))
            .sub(&e(2, &[vec![1], vec![2]]).add(&e(2, &[vec![2], vec![1]])).scale(&rat(1, 2)));
        assert!(is_primitive(&v));

        assert!(is_primitive(&Element::zero(1)));
        assert!(!is_primitive(&Element::unit(1)));
    }

    #[test]
    fn phi_u_on_short_words() {
        assert_eq!(phi_u(&e(1, &[vec![1]])), e(1, &[vec![1]]));

        let xx = e(1, &[vec![1, 1]]);
        assert_eq!(phi_u(&xx), xx.sub(&e(1, &[vec![1], vec![1]]).scale(&rat(1, 2))));

        // φ(U)(x⊗y⊗z) = xyz - (x•(yz) + (xy)•z)/2 + x•y•z/3.
        let xyz = e(3, &[vec![1, 2, 3]]);
        let expected = xyz
            .sub(&e(3, &[vec![1], vec![2, 3]]).add(&e(3, &[vec![1, 2], vec![3]])).scale(&rat(1, 2)))
            .add(&e(3, &[vec![1], vec![2], vec![3]]).scale(&rat(1, 3)));
        assert_eq!(phi_u(&xyz), expected);
    }

    #[test]
    fn constructed_primitives_pass_their_own_check() {
        let sym = symmetrize(2, &w(&[1, 2]));
        let prim = primitive_from_symmetric(&sym).unwrap();
        let expected = e(2, &[vec![1, 2]])
            .add(&e(2, &[vec![2, 1]]))
            .sub(&e(2, &[vec![1], vec![2]]).add(&e(2, &[vec![2], vec![1]])).scale(&rat(1, 2)));
        assert_eq!(prim, expected);
        assert!(is_primitive(&prim));

        for len in 2..=5usize {
            let word = w(&vec![1; len]);
            let p = primitive_from_symmetric(&symmetrize(1, &word)).unwrap();
            assert!(is_primitive(&p), "degree {len}");
        }
    }

    #[test]
    fn grouplike_log_matches_phi_u() {
        let x = Letter::new(1);
        assert_eq!(grouplike_log_coefficient(x, 1, 1), e(1, &[vec![1]]));

        let xx = e(1, &[vec![1, 1]]);
        assert_eq!(
            grouplike_log_coefficient(x, 2, 1),
            xx.sub(&e(1, &[vec![1], vec![1]]).scale(&rat(1, 2)))
        );

        // Higher orders keep matching the series construction.
        for n in 1..=6usize {
            let word = Phrase::from_word(Word::new(vec![x; n]));
            let via_phi = phi_u(&Element::from_phrase(1, word));
            assert_eq!(grouplike_log_coefficient(x, n, 1), via_phi, "order {n}");
        }
    }

    #[test]
    fn truncated_grouplike_is_grouplike_to_its_order() {
        let g = grouplike_series(Letter::new(1), 1, 5);
        for m in 0..=5usize {
            let mut expected = Tensor2::zero(1);
            for i in 0..=m {
                expected = expected.add(&Tensor2::of(g.coefficient(i), g.coefficient(m - i)));
            }
            assert_eq!(coproduct(g.coefficient(m)), expected, "t^{m}");
        }
    }

    #[test]
    fn truncated_series_multiplication_truncates() {
        let mut s = TruncatedSeries::zero(1, 2);
        s.set_coefficient(1, e(1, &[vec![1]]));
        let sq = s.mul(&s);
        assert!(sq.coefficient(0).is_zero());
        assert!(sq.coefficient(1).is_zero());
        assert_eq!(sq.coefficient(2), &e(1, &[vec![1], vec![1]]));
    }

    #[test]
    fn inclusion_exclusion_holds_on_small_cases() {
        let ls: Vec<Letter> = (1..=3).map(Letter::new).collect();
        assert!(inclusion_exclusion_check(3, &ls[..1], 3));
        assert!(inclusion_exclusion_check(3, &ls[..2], 2));
        assert!(inclusion_exclusion_check(3, &ls[..2], 3));
        // More letters than slots: both sides vanish.
        assert!(inclusion_exclusion_check(3, &ls, 2));
    }

    #[test]
    fn prim_basis_in_low_degrees() {
        // Degree 1: the letters themselves.
        let deg1 = prim_basis(1, 2);
        assert_eq!(deg1, vec![e(2, &[vec![1]]), e(2, &[vec![2]])]);

        // Degree 2 over one letter: one primitive, proportional to
        // x⊗x - x•x/2.
        let deg2 = prim_basis(2, 1);
        assert_eq!(deg2.len(), 1);
        let expected = e(1, &[vec![1, 1]]).sub(&e(1, &[vec![1], vec![1]]).scale(&rat(1, 2)));
        let found = &deg2[0];
        // Proportionality: cross-multiply coefficients on the two phrases.
        let a = found.coeff(&Phrase::from_indices(&[vec![1, 1]]));
        let b = found.coeff(&Phrase::from_indices(&[vec![1], vec![1]]));
        assert_eq!(found, &expected.scale(&a));
        assert_eq!(b, a * rat(-1, 2));

        for v in prim_basis(3, 2) {
            assert!(is_primitive(&v));
        }
    }

    #[test]
    fn lie_span_dimensions_in_low_degrees() {
        // One letter: dims 1, 1, 2 in degrees 1..3 (φ(U) primitives plus
        // the bracket [x, φ(U)(x⊗x)]).
        assert_eq!(lie_span_dims(3, 1), vec![1, 1, 2]);
        // Degree-1 spans are the whole letter space.
        assert_eq!(lie_span_dims(1, 2), vec![2]);
    }

    #[test]
    fn conjecture_report_shows_dims_side_by_side() {
        let rows = conjecture_report(3, 1);
        assert_eq!(
            rows,
            vec![
                ConjectureRow { degree: 1, lie_dim: 1, prim_dim: 1 },
                ConjectureRow { degree: 2, lie_dim: 1, prim_dim: 1 },
                ConjectureRow { degree: 3, lie_dim: 2, prim_dim: 2 },
            ]
        );
        assert!(rows.iter().all(|r| r.lie_dim <= r.prim_dim));
    }
}
