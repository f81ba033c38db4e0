//! Named self-check suites behind `bitensor check`. Each check runs an
//! exhaustive verification over a fixed low-degree slice of the algebra
//! and reports what it covered; the bounds are chosen so the whole `all`
//! suite stays comfortably interactive.

use bitensor::freelin::{basis_phrases, factorial, rat_int, Rational, Word};
use bitensor::hopfcore::{
    antipode_exp, antipode_subset, convolution_power, convolve, coproduct, counit, cut_operator,
    exp_cut, exp_neg_cut, naive_antipode, product, tensor_mul, unit_counit,
};
use bitensor::pairing::{
    a_nk, adjoint_antipode_check, gf_coefficient_check, gram_matrix, pair, pair_oracle,
    pn_integral, pn_polynomial, Polynomial,
};
use bitensor::primitives::{
    inclusion_exclusion_check, is_primitive, lie_span_dims, phi_u, prim_basis, symmetrize,
};
use bitensor::{Element, Phrase};
use num_traits::Zero;

pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn report(name: &'static str, passed: bool, detail: impl Into<String>) -> CheckReport {
    CheckReport { name, passed, detail: detail.into() }
}

fn phrase_element(d: u32, p: &Phrase) -> Element {
    Element::from_phrase(d, p.clone())
}

/// Whether `antipode` satisfies both convolution axioms on the whole
/// basis up to `max_degree`. Parameterized so tests can feed it a wrong
/// antipode and watch it fail.
pub fn antipode_axiom_holds(
    antipode: &dyn Fn(&Element) -> Element,
    max_degree: usize,
    d: u32,
) -> bool {
    let id = |a: &Element| a.clone();
    for n in 0..=max_degree {
        for p in basis_phrases(n, d) {
            let e = phrase_element(d, &p);
            let expected = unit_counit(&e);
            if convolve(antipode, &id, &e) != expected || convolve(&id, antipode, &e) != expected {
                return false;
            }
        }
    }
    true
}

fn coassociativity_holds(max_degree: usize, d: u32) -> bool {
    use std::collections::BTreeMap;
    for n in 0..=max_degree {
        for p in basis_phrases(n, d) {
            let mut left: BTreeMap<(Phrase, Phrase, Phrase), Rational> = BTreeMap::new();
            let mut right = left.clone();
            for ((a, b), c) in coproduct(&phrase_element(d, &p)).terms() {
                for ((u, v), w) in coproduct(&phrase_element(d, a)).terms() {
                    *left.entry((u.clone(), v.clone(), b.clone())).or_default() += c * w;
                }
                for ((u, v), w) in coproduct(&phrase_element(d, b)).terms() {
                    *right.entry((a.clone(), u.clone(), v.clone())).or_default() += c * w;
                }
            }
            left.retain(|_, c| !c.is_zero());
            right.retain(|_, c| !c.is_zero());
            if left != right {
                return false;
            }
        }
    }
    true
}

fn counit_laws_hold(max_degree: usize, d: u32) -> bool {
    for n in 0..=max_degree {
        for p in basis_phrases(n, d) {
            let e = phrase_element(d, &p);
            let mut left = Element::zero(d);
            let mut right = Element::zero(d);
            for ((a, b), c) in coproduct(&e).terms() {
                left = left.add(&phrase_element(d, b).scale(&(c * counit(&phrase_element(d, a)))));
                right = right.add(&phrase_element(d, a).scale(&(c * counit(&phrase_element(d, b)))));
            }
            if left != e || right != e {
                return false;
            }
        }
    }
    true
}

fn coproduct_multiplicative(max_total: usize, d: u32) -> bool {
    for total in 2..=max_total {
        for i in 1..total {
            for p in basis_phrases(i, d) {
                let ep = phrase_element(d, &p);
                let dp = coproduct(&ep);
                for q in basis_phrases(total - i, d) {
                    let eq = phrase_element(d, &q);
                    let prod = product(&ep, &eq).expect("same alphabet");
                    if coproduct(&prod) != tensor_mul(&dp, &coproduct(&eq)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn hopf_suite() -> Vec<CheckReport> {
    let mut out = vec![
        report(
            "coassociativity",
            (1..=2).all(|d| coassociativity_holds(4, d)),
            "basis phrases to degree 4, alphabets of 1 and 2 letters",
        ),
        report(
            "counit laws",
            (1..=2).all(|d| counit_laws_hold(4, d)),
            "basis phrases to degree 4, alphabets of 1 and 2 letters",
        ),
        report(
            "coproduct is multiplicative",
            (1..=2).all(|d| coproduct_multiplicative(4, d)),
            "products of total degree at most 4",
        ),
        report(
            "antipode convolution axiom",
            (1..=2).all(|d| antipode_axiom_holds(&antipode_subset, 4, d)),
            "basis phrases to degree 4",
        ),
    ];

    let mut agree = true;
    for d in 1..=2u32 {
        let top = if d == 1 { 5 } else { 4 };
        for n in 0..=top {
            for p in basis_phrases(n, d) {
                let e = phrase_element(d, &p);
                agree &= antipode_subset(&e) == antipode_exp(&e);
            }
        }
    }
    out.push(report(
        "antipode route agreement",
        agree,
        "subset sum vs exponential correction, degree 5/4",
    ));

    let mut involution = true;
    for d in 1..=2u32 {
        for n in 0..=4usize {
            for p in basis_phrases(n, d) {
                let e = phrase_element(d, &p);
                involution &= naive_antipode(&naive_antipode(&e)) == e;
                involution &= exp_cut(&exp_neg_cut(&e)) == e;
            }
        }
    }
    out.push(report(
        "involution and exponential inverses",
        involution,
        "naive antipode squared and exp/exp⁻¹, degree 4",
    ));

    let defect = |a: &Element| unit_counit(a).sub(a);
    let mut convpow = true;
    for d in 1..=2u32 {
        for len in 1..=4usize {
            for p in basis_phrases(len, d).into_iter().filter(|p| p.words().len() == 1) {
                let e = phrase_element(d, &p);
                for k in 2..=5usize {
                    let lhs = convolution_power(&defect, k, &e);
                    let mut rhs = e.clone();
                    for _ in 0..k - 1 {
                        rhs = cut_operator(&rhs);
                    }
                    let mut scale = bitensor::freelin::inv_factorial(k - 1);
                    if k % 2 == 1 {
                        scale = -scale;
                    }
                    convpow &= lhs == rhs.scale(&scale);
                }
            }
        }
    }
    out.push(report(
        "convolution powers of the augmentation defect",
        convpow,
        "words to length 4, powers to 5",
    ));

    out
}

pub fn pairing_suite() -> Vec<CheckReport> {
    let mut out = Vec::new();

    let mut agree = true;
    let mut count = 0usize;
    for d in 1..=2u32 {
        let top = if d == 1 { 4 } else { 3 };
        for n in 1..=top {
            for p in basis_phrases(n, d) {
                let ep = phrase_element(d, &p);
                for q in basis_phrases(n, d) {
                    let eq = phrase_element(d, &q);
                    agree &= pair(&ep, &eq).unwrap() == pair_oracle(&ep, &eq).unwrap();
                    count += 1;
                }
            }
        }
    }
    out.push(report(
        "evaluator agreement",
        agree,
        format!("{count} basis pairs, degree 4/3"),
    ));

    let mut symmetric = true;
    for d in 1..=2u32 {
        let top = if d == 1 { 4 } else { 3 };
        for n in 1..=top {
            let g = gram_matrix(n, d);
            symmetric &= g == g.transpose();
        }
    }
    out.push(report("Gram symmetry", symmetric, "degree 4/3"));

    let pinned = gram_matrix(2, 1);
    out.push(report(
        "degree-two Gram matrix",
        pinned.to_dense()
            == vec![
                vec![Rational::new(1.into(), 2.into()), rat_int(1)],
                vec![rat_int(1), rat_int(2)],
            ]
            && pinned.rank() == 1,
        "entries 1/2, 1, 1, 2 with rank 1",
    ));

    let mut orthogonal = true;
    for n in 1..=3usize {
        for m in 1..=3usize {
            if n == m {
                continue;
            }
            for p in basis_phrases(n, 2) {
                for q in basis_phrases(m, 2) {
                    orthogonal &=
                        pair(&phrase_element(2, &p), &phrase_element(2, &q)).unwrap().is_zero();
                }
            }
        }
    }
    out.push(report("degree orthogonality", orthogonal, "degrees 1-3 crossed"));

    let mut hopf_compatible = true;
    for d in 1..=2u32 {
        let top = if d == 1 { 4 } else { 3 };
        for total in 2..=top {
            for i in 1..total {
                for p in basis_phrases(i, d) {
                    let ep = phrase_element(d, &p);
                    for q in basis_phrases(total - i, d) {
                        let eq = phrase_element(d, &q);
                        let prod = product(&ep, &eq).unwrap();
                        for alpha in basis_phrases(total, d) {
                            let ea = phrase_element(d, &alpha);
                            let lhs = pair(&prod, &ea).unwrap();
                            let mut rhs = Rational::zero();
                            for ((a, b), c) in coproduct(&ea).terms() {
                                let left = pair(&ep, &phrase_element(d, a)).unwrap();
                                if left.is_zero() {
                                    continue;
                                }
                                rhs += c * left * pair(&eq, &phrase_element(d, b)).unwrap();
                            }
                            hopf_compatible &= lhs == rhs;
                        }
                    }
                }
            }
        }
    }
    out.push(report(
        "product-coproduct compatibility",
        hopf_compatible,
        "total degree 4/3",
    ));

    out.push(report(
        "antipode self-adjointness",
        (1..=2).all(|d| (1..=3).all(|n| adjoint_antipode_check(n, d))),
        "degree 3",
    ));

    out
}

pub fn primitives_suite() -> Vec<CheckReport> {
    let mut out = Vec::new();

    let mut letters_primitive = true;
    for d in 1..=2u32 {
        for i in 1..=d {
            letters_primitive &= is_primitive(&Element::from_indices(d, &[vec![i]]));
        }
    }
    out.push(report("letters are primitive", letters_primitive, "alphabets 1 and 2"));

    let mut constructed = true;
    for d in 1..=2u32 {
        let top = if d == 1 { 5 } else { 4 };
        for len in 2..=top {
            for code in 0..(d as usize).pow(len as u32) {
                let mut letters = Vec::with_capacity(len);
                let mut rem = code;
                for _ in 0..len {
                    letters.push(1 + (rem % d as usize) as u32);
                    rem /= d as usize;
                }
                let w = Word::from_indices(&letters);
                constructed &= is_primitive(&phi_u(symmetrize(d, &w).carrier()));
            }
        }
    }
    out.push(report(
        "symmetrized words corrected to primitives",
        constructed,
        "words to length 5/4",
    ));

    let mut grouplike = true;
    for n in 1..=5usize {
        let log_coeff = bitensor::primitives::grouplike_log_coefficient(
            bitensor::freelin::Letter::new(1),
            n,
            1,
        );
        let power = Element::from_indices(1, &[vec![1; n]]);
        grouplike &= log_coeff == phi_u(&power);
    }
    out.push(report(
        "grouplike logarithm matches the projector",
        grouplike,
        "orders to 5",
    ));

    let mut kernels = true;
    for d in 1..=2u32 {
        let top = if d == 1 { 4 } else { 3 };
        for n in 1..=top {
            for v in prim_basis(n, d) {
                kernels &= is_primitive(&v);
            }
        }
    }
    out.push(report(
        "primitive basis really is primitive",
        kernels,
        "degree 4/3",
    ));

    out.push(report(
        "inclusion-exclusion identity",
        {
            let letters: Vec<_> = [1u32, 2].iter().map(|&i| bitensor::freelin::Letter::new(i)).collect();
            (1..=3usize).all(|k| inclusion_exclusion_check(2, &letters, k))
        },
        "two letters, tensor powers to 3",
    ));

    let mut comparison = true;
    for d in 1..=2u32 {
        let top = if d == 1 { 4 } else { 3 };
        let lie = lie_span_dims(top, d);
        for n in 1..=top {
            comparison &= lie[n - 1] <= prim_basis(n, d).len();
        }
    }
    out.push(report(
        "Lie span within primitives",
        comparison,
        "degree 4/3",
    ));

    out
}

pub fn lemma27_suite() -> Vec<CheckReport> {
    let mut out = Vec::new();

    out.push(report(
        "chain counts",
        a_nk(2, 1).unwrap() == 2.into()
            && a_nk(3, 1).unwrap() == 6.into()
            && a_nk(3, 2).unwrap() == 6.into()
            && (1..=6).all(|n| a_nk(n, 0).unwrap() == 1.into()),
        "pinned values and the empty-chain row",
    ));

    let mut recurrence = true;
    for n in 1..=8usize {
        let p = pn_polynomial(n);
        for k in 0..n {
            recurrence &= p.coeff(k) == Rational::from_integer(a_nk(n, k).unwrap());
        }
    }
    out.push(report(
        "recurrence matches chain sums",
        recurrence,
        "polynomials to n = 8",
    ));

    out.push(report(
        "pinned polynomials",
        pn_polynomial(2) == Polynomial::from_coeffs(vec![rat_int(1), rat_int(2)])
            && pn_polynomial(3)
                == Polynomial::from_coeffs(vec![rat_int(1), rat_int(6), rat_int(6)]),
        "1 + 2t and 1 + 6t + 6t²",
    ));

    out.push(report(
        "signed integrals collapse",
        pn_integral(1) == rat_int(1) && (2..=10).all(|n| pn_integral(n).is_zero()),
        "one at n = 1, zero through n = 10",
    ));

    out.push(report(
        "generating function",
        gf_coefficient_check(8),
        "coefficients through z^8",
    ));

    let mut bridge = true;
    for n in 1..=5usize {
        let power = Element::from_indices(1, &[vec![1; n]]);
        let value = pair(&phi_u(&power), &power).unwrap();
        bridge &= value * Rational::from_integer(factorial(n)) == pn_integral(n);
    }
    out.push(report(
        "pairing bridge",
        bridge,
        "n! ⟨φ(U)(xⁿ), ξⁿ⟩ = ∫ Pₙ for n to 5",
    ));

    out
}

/// The checks for one suite name; `None` for an unknown name. Suite
/// names are part of the CLI contract.
pub fn suite(name: &str) -> Option<Vec<CheckReport>> {
    match name {
        "hopf" => Some(hopf_suite()),
        "pairing" => Some(pairing_suite()),
        "primitives" => Some(primitives_suite()),
        "lemma27" => Some(lemma27_suite()),
        "all" => {
            let mut out = hopf_suite();
            out.extend(pairing_suite());
            out.extend(primitives_suite());
            out.extend(lemma27_suite());
            Some(out)
        }
        _ => None,
    }
}
