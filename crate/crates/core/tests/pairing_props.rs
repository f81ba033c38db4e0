//! Cross-checks of the duality pairing: agreement of the two independent
//! evaluators, symmetry and Hopf compatibility, the behaviour of good
//! bijection families under inversion, and the bridge identities tying
//! the pairing of power words to the counting polynomials.

use bitensor::freelin::{basis_phrases, compositions, factorial, rat_int, Word};
use bitensor::hopfcore::{antipode_subset, coproduct, cut_operator, product};
use bitensor::pairing::{
    a_nk, adjoint_antipode_check, good_bijections, good_cuts, gram_matrix, pair, pair_oracle,
    pn_integral, radical_basis, CompositionType,
};
use bitensor::primitives::{phi_u, symmetrize};
use bitensor::{Element, Phrase, Rational};

fn phrase_element(d: u32, p: &Phrase) -> Element {
    Element::from_phrase(d, p.clone())
}

#[test]
fn evaluators_agree_on_the_whole_low_degree_basis() {
    for d in 1..=2u32 {
        let top = if d == 1 { 5 } else { 4 };
        for n in 1..=top {
            for p in basis_phrases(n, d) {
                let ep = phrase_element(d, &p);
                for q in basis_phrases(n, d) {
                    let eq = phrase_element(d, &q);
                    assert_eq!(
                        pair(&ep, &eq).unwrap(),
                        pair_oracle(&ep, &eq).unwrap(),
                        "⟨{p}, {q}⟩ (d={d})"
                    );
                }
            }
        }
    }
}

#[test]
fn distinct_degrees_pair_to_zero() {
    for n in 1..=3usize {
        for m in 1..=3usize {
            if n == m {
                continue;
            }
            for p in basis_phrases(n, 2) {
                for q in basis_phrases(m, 2) {
                    assert_eq!(
                        pair(&phrase_element(2, &p), &phrase_element(2, &q)).unwrap(),
                        rat_int(0)
                    );
                }
            }
        }
    }
}

#[test]
fn pairing_is_symmetric_in_low_degrees() {
    for d in 1..=2u32 {
        let top = if d == 1 { 5 } else { 4 };
        for n in 1..=top {
            let g = gram_matrix(n, d);
            assert_eq!(g, g.transpose(), "Gram symmetry fails at n={n} d={d}");
        }
    }
}

#[test]
fn good_bijection_families_invert_onto_each_other() {
    for n in 1..=6usize {
        let types: Vec<CompositionType> = compositions(n)
            .into_iter()
            .map(CompositionType::new)
            .collect();
        for j in &types {
            for k in &types {
                let forward = good_bijections(j, k).unwrap();
                let backward = good_bijections(k, j).unwrap();
                let mut inverted: Vec<Vec<_>> =
                    forward.iter().map(|phi| phi.inverse().images()).collect();
                let mut expected: Vec<Vec<_>> =
                    backward.iter().map(|phi| phi.images()).collect();
                inverted.sort();
                expected.sort();
                assert_eq!(
                    inverted,
                    expected,
                    "inversion fails between {:?} and {:?}",
                    j.parts(),
                    k.parts()
                );
            }
        }
    }
}

#[test]
fn horizontality_is_invariant_under_inversion() {
    for n in 1..=5usize {
        let types: Vec<CompositionType> = compositions(n)
            .into_iter()
            .map(CompositionType::new)
            .collect();
        for j in &types {
            for k in &types {
                for phi in good_bijections(j, k).unwrap() {
                    assert_eq!(
                        bitensor::pairing::horizontality(j, k, &phi),
                        bitensor::pairing::horizontality(k, j, &phi.inverse())
                    );
                }
            }
        }
    }
}

#[test]
fn good_cut_count_is_the_product_of_row_choices() {
    for n in 1..=6usize {
        for parts in compositions(n) {
            let k = CompositionType::new(parts.clone());
            let expected: usize = parts.iter().map(|&p| p + 1).product();
            assert_eq!(good_cuts(&k).len(), expected, "cuts of {parts:?}");
        }
    }
}

#[test]
fn pairing_turns_the_product_into_the_coproduct() {
    // ⟨v • w, α⟩ = Σ ⟨v, α'⟩ ⟨w, α''⟩ over the expansion Δα = Σ α' ⊗ α''.
    for d in 1..=2u32 {
        let top = if d == 1 { 5 } else { 4 };
        for total in 2..=top {
            for i in 1..total {
                let j = total - i;
                for p in basis_phrases(i, d) {
                    let ep = phrase_element(d, &p);
                    for q in basis_phrases(j, d) {
                        let eq = phrase_element(d, &q);
                        let prod = product(&ep, &eq).unwrap();
                        for alpha in basis_phrases(total, d) {
                            let ea = phrase_element(d, &alpha);
                            let lhs = pair(&prod, &ea).unwrap();
                            let mut rhs = Rational::from_integer(0.into());
                            for ((a, b), c) in coproduct(&ea).terms() {
                                let left = pair(&ep, &phrase_element(d, a)).unwrap();
                                if num_traits::Zero::is_zero(&left) {
                                    continue;
                                }
                                rhs += c * left * pair(&eq, &phrase_element(d, b)).unwrap();
                            }
                            assert_eq!(lhs, rhs, "⟨{p} • {q}, {alpha}⟩ (d={d})");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn antipode_is_self_adjoint() {
    for d in 1..=2u32 {
        for n in 1..=4usize {
            assert!(adjoint_antipode_check(n, d), "n={n} d={d}");
        }
    }
}

#[test]
fn constructed_primitives_pair_to_zero_in_higher_degree() {
    // φ(U)(symmetrize(w)) lands in the radical for every word of degree
    // at least two, over one- and two-letter alphabets.
    for len in 2..=6usize {
        let w = Word::from_indices(&vec![1; len]);
        let v = phi_u(symmetrize(1, &w).carrier());
        for q in basis_phrases(len, 1) {
            assert_eq!(pair(&v, &phrase_element(1, &q)).unwrap(), rat_int(0), "{w:?}");
        }
    }
    for len in 2..=4usize {
        for code in 0..(1u32 << len) {
            let letters: Vec<u32> = (0..len).map(|i| 1 + ((code >> i) & 1)).collect();
            let w = Word::from_indices(&letters);
            let v = phi_u(symmetrize(2, &w).carrier());
            for q in basis_phrases(len, 2) {
                assert_eq!(pair(&v, &phrase_element(2, &q)).unwrap(), rat_int(0));
            }
        }
    }
}

#[test]
fn radical_is_stable_under_multiplication() {
    // Multiplying a radical element by a letter on either side keeps it
    // orthogonal to the whole dual component one degree up.
    for d in 1..=2u32 {
        for n in 2..=3usize {
            for v in radical_basis(n, d) {
                for letter in 1..=d {
                    let x = Element::from_indices(d, &[vec![letter]]);
                    for w in [product(&x, &v).unwrap(), product(&v, &x).unwrap()] {
                        for q in basis_phrases(n + 1, d) {
                            assert_eq!(
                                pair(&w, &phrase_element(d, &q)).unwrap(),
                                rat_int(0),
                                "n={n} d={d}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn cut_iterates_of_power_words_pair_to_the_chain_counts() {
    // ⟨U^k(x^(⊗n)), ξ^(⊗n)⟩ · n!/k! recovers A(n, k).
    for n in 1..=6usize {
        let power = Phrase::from_indices(&[vec![1; n]]);
        let dual = phrase_element(1, &power);
        let mut iterate = phrase_element(1, &power);
        for k in 0..n {
            let value = pair(&iterate, &dual).unwrap();
            let scale = Rational::new(factorial(n), factorial(k));
            assert_eq!(
                value * scale,
                Rational::from_integer(a_nk(n, k).unwrap()),
                "n={n} k={k}"
            );
            iterate = cut_operator(&iterate);
        }
    }
}

#[test]
fn pairing_the_corrected_power_word_collapses_to_the_integral() {
    // n! ⟨φ(U)(x^(⊗n)), ξ^(⊗n)⟩ equals ∫_{-1}^{0} P_n(t) dt: one for
    // n = 1 and zero beyond, the pairing shadow of primitivity.
    for n in 1..=6usize {
        let power = Element::from_indices(1, &[vec![1; n]]);
        let value = pair(&phi_u(&power), &power).unwrap();
        assert_eq!(
            value * Rational::from_integer(factorial(n)),
            pn_integral(n),
            "n={n}"
        );
    }
}

#[test]
fn adjointness_moves_a_square_across_the_pairing() {
    // Applying self-adjointness twice: ⟨S v, S α⟩ = ⟨S² v, α⟩. Note that
    // S² is not the identity, so this does not make S an isometry.
    for d in 1..=2u32 {
        for n in 1..=3usize {
            for p in basis_phrases(n, d) {
                let sp = antipode_subset(&phrase_element(d, &p));
                let ssp = antipode_subset(&sp);
                for q in basis_phrases(n, d) {
                    let sq = antipode_subset(&phrase_element(d, &q));
                    assert_eq!(
                        pair(&sp, &sq).unwrap(),
                        pair(&ssp, &phrase_element(d, &q)).unwrap()
                    );
                }
            }
        }
    }
}
