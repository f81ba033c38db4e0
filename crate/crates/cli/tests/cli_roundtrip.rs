//! Round-trip guarantees for the textual and JSON forms, plus end-to-end
//! runs of the installed binary: output formats, exit codes, and the
//! self-check suites.

use std::process::Command;

use bitensor::freelin::{basis_phrases, Rational};
use bitensor::{Element, Phrase};
use bitensor_cli::format::{self, OutputFormat};
use bitensor_cli::parse::parse_element;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn every_basis_phrase_round_trips_through_plain_text() {
    for d in 1..=2u32 {
        let top = if d == 1 { 5 } else { 4 };
        for n in 0..=top {
            for p in basis_phrases(n, d) {
                let e = Element::from_phrase(d, p);
                let text = format::element(&e, OutputFormat::Plain);
                assert_eq!(parse_element(&text, d).unwrap(), e, "{text}");
            }
        }
    }
}

fn random_element(rng: &mut ChaCha8Rng, pool: &[Phrase], d: u32) -> Element {
    let terms = rng.random_range(1..=5);
    let mut e = Element::zero(d);
    for _ in 0..terms {
        let phrase = pool[rng.random_range(0..pool.len())].clone();
        let numer: i64 = rng.random_range(-30..=30);
        let denom: i64 = rng.random_range(1..=12);
        e.add_term(phrase, Rational::new(numer.into(), denom.into()));
    }
    e
}

#[test]
fn random_combinations_round_trip_through_plain_text() {
    // Fixed seed: the corpus is part of the test, not a source of flakes.
    let mut rng = ChaCha8Rng::seed_from_u64(0x00b17e250);
    for d in 1..=2u32 {
        let pool: Vec<Phrase> = (0..=4usize).flat_map(|n| basis_phrases(n, d)).collect();
        for _ in 0..100 {
            let e = random_element(&mut rng, &pool, d);
            let text = format::element(&e, OutputFormat::Plain);
            assert_eq!(parse_element(&text, d).unwrap(), e, "{text}");
        }
    }
}

#[test]
fn random_elements_round_trip_through_json() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x00b17e251);
    let pool: Vec<Phrase> = (0..=4usize).flat_map(|n| basis_phrases(n, 2)).collect();
    for _ in 0..20 {
        let e = random_element(&mut rng, &pool, 2);
        let text = format::element(&e, OutputFormat::Json);
        let value: serde_json::Value = serde_json::from_str(&text).expect("well-formed JSON");

        // Schema: array of {"coeff": string, "phrase": [[u64, ...], ...]},
        // terms in strictly increasing canonical order.
        let terms = value.as_array().expect("top-level array");
        assert_eq!(terms.len(), e.term_count());
        for term in terms {
            let obj = term.as_object().expect("term object");
            assert_eq!(obj.len(), 2);
            assert!(obj["coeff"].is_string());
            for word in obj["phrase"].as_array().expect("phrase array") {
                let letters = word.as_array().expect("word array");
                assert!(!letters.is_empty());
                assert!(letters.iter().all(|l| l.as_u64().is_some_and(|i| i >= 1)));
            }
        }

        assert_eq!(format::element_from_json(&value, 2).unwrap(), e);
    }
}

fn bitensor(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_bitensor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn binary_prints_operation_results() {
    let out = bitensor(&["coproduct", "x1*x1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "(1) (x) (x1*x1) + (x1) (x) (x1) + (x1*x1) (x) (1)"
    );

    let out = bitensor(&["product", "x1", "x1|x1"]);
    assert_eq!(stdout(&out).trim(), "x1|x1|x1");

    let out = bitensor(&["antipode", "--method", "both", "x1*x1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "-x1*x1 + x1|x1");

    let out = bitensor(&["pair", "x1*x1", "x1|x1"]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = bitensor(&["pair", "x1*x1", "x1*x1"]);
    assert_eq!(stdout(&out).trim(), "1/2");

    let out = bitensor(&["--dim", "2", "is-primitive", "x1*x2 + x2*x1 - 1/2 x1|x2 - 1/2 x2|x1"]);
    assert_eq!(stdout(&out).trim(), "true");

    let out = bitensor(&["is-primitive", "x1*x1"]);
    assert_eq!(stdout(&out).trim(), "false");

    let out = bitensor(&["cut", "x1*x1"]);
    assert_eq!(stdout(&out).trim(), "x1|x1");

    let out = bitensor(&["phiu", "x1*x1"]);
    assert_eq!(stdout(&out).trim(), "x1*x1 - 1/2 x1|x1");

    let out = bitensor(&["pn", "--max-degree", "3"]);
    let text = stdout(&out);
    assert!(text.contains("P_3 = 1 + 6 t + 6 t^2   integral 0"));
    assert!(text.contains("P_1 = 1   integral 1"));
}

#[test]
fn binary_honors_output_formats() {
    let out = bitensor(&["--format", "latex", "antipode", "x1*x1"]);
    assert_eq!(
        stdout(&out).trim(),
        "-x_{1} \\otimes x_{1} + x_{1} \\bullet x_{1}"
    );

    let out = bitensor(&["--format", "json", "coproduct", "x1"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 2);

    let out = bitensor(&["--format", "json", "antipode", "x1*x1"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(
        format::element_from_json(&value, 1).unwrap(),
        parse_element("-x1*x1 + x1|x1", 1).unwrap()
    );

    let out = bitensor(&["--format", "latex", "gram", "--max-degree", "2"]);
    assert!(stdout(&out).contains("\\begin{pmatrix}"));

    let out = bitensor(&["--format", "json", "radical", "--max-degree", "2"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value[1]["radical_dim"], 1);
    assert_eq!(value[1]["ideal"], "equal");
}

#[test]
fn binary_reports_reference_tables() {
    let out = bitensor(&["gram", "--max-degree", "2"]);
    let text = stdout(&out);
    assert!(text.contains("degree 2 (rank 1):"));
    assert!(text.contains("[ 1/2  1 ]"));

    let out = bitensor(&["radical", "--max-degree", "2"]);
    assert!(stdout(&out).contains("-2 x1*x1 + x1|x1"));

    let out = bitensor(&["prim-dims", "--max-degree", "3"]);
    let text = stdout(&out);
    assert!(text.contains("degree 1: 1"));
    assert!(text.contains("degree 3: 2"));

    let out = bitensor(&["conjecture", "--max-degree", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree  lie  prim"));
}

#[test]
fn binary_exit_codes_follow_the_contract() {
    assert!(bitensor(&["check", "lemma27"]).status.success());
    let out = bitensor(&["check", "lemma27"]);
    assert!(stdout(&out).contains("all 6 checks passed"));

    // Usage problems: exit 2.
    assert_eq!(bitensor(&["pair", "x1*x3", "x1"]).status.code(), Some(2));
    assert_eq!(bitensor(&["coproduct", "x1 +"]).status.code(), Some(2));
    assert_eq!(bitensor(&["--dim", "0", "coproduct", "x1"]).status.code(), Some(2));
    assert_eq!(bitensor(&["check", "bogus"]).status.code(), Some(2));
    assert_eq!(bitensor(&["no-such-command"]).status.code(), Some(2));

    let out = bitensor(&["coproduct", "x1 +"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected a term"));
}
