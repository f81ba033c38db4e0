//! Output renderers. Everything the binary prints goes through one of
//! these, in one of three formats: `plain` (re-parseable text), `latex`
//! (inline math), and `json` (stable machine-readable schema).
//!
//! The JSON schema for an element is an array of terms in canonical
//! order, each `{"coeff": "p" | "p/q", "phrase": [[letter, ...], ...]}`;
//! the zero element is the empty array.

use bitensor::freelin::Rational;
use bitensor::pairing::Polynomial;
use bitensor::{Element, Matrix, Phrase, Tensor2, Word};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Plain,
    Latex,
    Json,
}

pub fn rational(r: &Rational, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => r.to_string(),
        OutputFormat::Json => json!(r.to_string()).to_string(),
        OutputFormat::Latex => latex_rational(r),
    }
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_string()
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn latex_word(w: &Word) -> String {
    w.letters()
        .iter()
        .map(|l| format!("x_{{{}}}", l.index()))
        .collect::<Vec<_>>()
        .join(" \\otimes ")
}

fn latex_phrase(p: &Phrase) -> String {
    if p.is_unit() {
        return "1".into();
    }
    p.words().iter().map(latex_word).collect::<Vec<_>>().join(" \\bullet ")
}

pub fn element(e: &Element, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => e.to_string(),
        OutputFormat::Json => element_json(e).to_string(),
        OutputFormat::Latex => {
            if e.is_zero() {
                return "0".into();
            }
            let mut out = String::new();
            for (i, (p, c)) in e.terms().enumerate() {
                let negative = c.is_negative();
                let mag = if negative { -c.clone() } else { c.clone() };
                if i == 0 {
                    if negative {
                        out.push('-');
                    }
                } else {
                    out.push_str(if negative { " - " } else { " + " });
                }
                if p.is_unit() {
                    out.push_str(&latex_rational(&mag));
                } else {
                    if !mag.is_one() {
                        out.push_str(&latex_rational(&mag));
                        out.push_str(" \\, ");
                    }
                    out.push_str(&latex_phrase(p));
                }
            }
            out
        }
    }
}

pub fn tensor(t: &Tensor2, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => t.to_string(),
        OutputFormat::Json => {
            let terms: Vec<Value> = t
                .terms()
                .map(|((p, q), c)| {
                    json!({
                        "coeff": c.to_string(),
                        "left": phrase_json(p),
                        "right": phrase_json(q),
                    })
                })
                .collect();
            Value::Array(terms).to_string()
        }
        OutputFormat::Latex => {
            if t.is_zero() {
                return "0".into();
            }
            let mut out = String::new();
            for (i, ((p, q), c)) in t.terms().enumerate() {
                let negative = c.is_negative();
                let mag = if negative { -c.clone() } else { c.clone() };
                if i == 0 {
                    if negative {
                        out.push('-');
                    }
                } else {
                    out.push_str(if negative { " - " } else { " + " });
                }
                if !mag.is_one() {
                    out.push_str(&latex_rational(&mag));
                    out.push_str(" \\, ");
                }
                out.push_str(&format!(
                    "\\left({}\\right) \\boxtimes \\left({}\\right)",
                    latex_phrase(p),
                    latex_phrase(q)
                ));
            }
            out
        }
    }
}

pub fn matrix(m: &Matrix, format: OutputFormat) -> String {
    let dense = m.to_dense();
    match format {
        OutputFormat::Plain => {
            let cells: Vec<Vec<String>> = dense
                .iter()
                .map(|row| row.iter().map(Rational::to_string).collect())
                .collect();
            let widths: Vec<usize> = (0..m.cols())
                .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
                .collect();
            cells
                .iter()
                .map(|row| {
                    let padded: Vec<String> = row
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:>w$}"))
                        .collect();
                    format!("[ {} ]", padded.join("  "))
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = dense
                .iter()
                .map(|row| Value::Array(row.iter().map(|c| json!(c.to_string())).collect()))
                .collect();
            Value::Array(rows).to_string()
        }
        OutputFormat::Latex => {
            let body = dense
                .iter()
                .map(|row| {
                    row.iter().map(latex_rational).collect::<Vec<_>>().join(" & ")
                })
                .collect::<Vec<_>>()
                .join(" \\\\ ");
            format!("\\begin{{pmatrix}} {body} \\end{{pmatrix}}")
        }
    }
}

pub fn polynomial(p: &Polynomial, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => p.to_string(),
        OutputFormat::Json => {
            let coeffs: Vec<Value> = (0..p.degree().map_or(0, |d| d + 1))
                .map(|k| json!(p.coeff(k).to_string()))
                .collect();
            Value::Array(coeffs).to_string()
        }
        OutputFormat::Latex => {
            if p.is_zero() {
                return "0".into();
            }
            let mut out = String::new();
            let top = p.degree().expect("nonzero");
            let mut first = true;
            for k in 0..=top {
                let c = p.coeff(k);
                if c.is_zero() {
                    continue;
                }
                let negative = c.is_negative();
                let mag = if negative { -c.clone() } else { c };
                if first {
                    if negative {
                        out.push('-');
                    }
                    first = false;
                } else {
                    out.push_str(if negative { " - " } else { " + " });
                }
                let unit = mag.is_one() && k > 0;
                if !unit {
                    out.push_str(&latex_rational(&mag));
                }
                match k {
                    0 => {}
                    1 => out.push_str(if unit { "t" } else { " t" }),
                    _ => out.push_str(&format!("{}t^{{{k}}}", if unit { "" } else { " " })),
                }
            }
            out
        }
    }
}

fn phrase_json(p: &Phrase) -> Value {
    Value::Array(
        p.words()
            .iter()
            .map(|w| {
                Value::Array(w.letters().iter().map(|l| json!(l.index())).collect())
            })
            .collect(),
    )
}

/// The JSON value for an element: canonical-order term array, empty for
/// zero.
pub fn element_json(e: &Element) -> Value {
    Value::Array(
        e.terms()
            .map(|(p, c)| json!({ "coeff": c.to_string(), "phrase": phrase_json(p) }))
            .collect(),
    )
}

/// Rebuilds an element from the JSON schema emitted by [`element_json`].
/// Duplicate phrases accumulate; letters are validated against `dim`.
pub fn element_from_json(v: &Value, dim: u32) -> Result<Element, String> {
    let terms = v.as_array().ok_or("expected a JSON array of terms")?;
    let mut out = Element::zero(dim);
    for term in terms {
        let obj = term.as_object().ok_or("expected a term object")?;
        let coeff_str = obj
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or("expected a string \"coeff\" field")?;
        let coeff = parse_rational(coeff_str)?;
        let words_json = obj
            .get("phrase")
            .and_then(Value::as_array)
            .ok_or("expected an array \"phrase\" field")?;
        let mut words = Vec::with_capacity(words_json.len());
        for word_json in words_json {
            let letters_json = word_json.as_array().ok_or("expected an array of letters")?;
            if letters_json.is_empty() {
                return Err("words are nonempty".into());
            }
            let mut letters = Vec::with_capacity(letters_json.len());
            for l in letters_json {
                let index = l.as_u64().ok_or("expected a letter index")?;
                if index == 0 || index > u64::from(dim) {
                    return Err(format!("letter x{index} is outside the alphabet x1..x{dim}"));
                }
                letters.push(bitensor::freelin::Letter::new(index as u32));
            }
            words.push(Word::new(letters));
        }
        out.add_term(Phrase::new(words), coeff);
    }
    Ok(out)
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    let parse_int = |t: &str| -> Result<BigInt, String> {
        t.parse().map_err(|_| format!("malformed integer '{t}'"))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err("denominator is zero".into());
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bitensor::freelin::{rat, rat_int};
    use bitensor::hopfcore::coproduct;

    fn sample() -> Element {
        Element::from_indices(2, &[vec![1, 2]])
            .scale(&rat(-1, 2))
            .add(&Element::from_indices(2, &[vec![2], vec![1]]))
    }

    #[test]
    fn plain_format_matches_display() {
        assert_eq!(element(&sample(), OutputFormat::Plain), "-1/2 x1*x2 + x2|x1");
        assert_eq!(element(&Element::zero(1), OutputFormat::Plain), "0");
    }

    #[test]
    fn latex_format_uses_tensor_and_bullet() {
        assert_eq!(
            element(&sample(), OutputFormat::Latex),
            "-\\frac{1}{2} \\, x_{1} \\otimes x_{2} + x_{2} \\bullet x_{1}"
        );
        assert_eq!(
            element(&Element::unit(1).scale(&rat(3, 4)), OutputFormat::Latex),
            "\\frac{3}{4}"
        );
        assert_eq!(element(&Element::zero(1), OutputFormat::Latex), "0");
    }

    #[test]
    fn json_format_is_canonical_and_round_trips() {
        let text = element(&sample(), OutputFormat::Json);
        assert_eq!(
            text,
            "[{\"coeff\":\"-1/2\",\"phrase\":[[1,2]]},{\"coeff\":\"1\",\"phrase\":[[2],[1]]}]"
        );
        let value: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(element_from_json(&value, 2).unwrap(), sample());

        assert_eq!(element(&Element::zero(1), OutputFormat::Json), "[]");
        assert_eq!(
            element_from_json(&serde_json::from_str("[]").unwrap(), 1).unwrap(),
            Element::zero(1)
        );
    }

    #[test]
    fn json_ingestion_validates() {
        let bad: Value = serde_json::from_str("[{\"coeff\":\"1\",\"phrase\":[[3]]}]").unwrap();
        assert!(element_from_json(&bad, 2).unwrap_err().contains("outside the alphabet"));
        let bad: Value = serde_json::from_str("[{\"coeff\":\"1/0\",\"phrase\":[[1]]}]").unwrap();
        assert_eq!(element_from_json(&bad, 2).unwrap_err(), "denominator is zero");
        let bad: Value = serde_json::from_str("[{\"coeff\":\"1\",\"phrase\":[[]]}]").unwrap();
        assert_eq!(element_from_json(&bad, 2).unwrap_err(), "words are nonempty");
    }

    #[test]
    fn tensors_render_in_all_formats() {
        let t = coproduct(&Element::from_indices(1, &[vec![1, 1]]));
        assert_eq!(
            tensor(&t, OutputFormat::Plain),
            "(1) (x) (x1*x1) + (x1) (x) (x1) + (x1*x1) (x) (1)"
        );
        assert!(tensor(&t, OutputFormat::Latex).contains("\\boxtimes"));
        let parsed: Value =
            serde_json::from_str(&tensor(&t, OutputFormat::Json)).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 3);
        assert_eq!(parsed[1]["left"], json!([[1]]));
    }

    #[test]
    fn matrices_render_aligned_and_structured() {
        let m = bitensor::pairing::gram_matrix(2, 1);
        assert_eq!(matrix(&m, OutputFormat::Plain), "[ 1/2  1 ]\n[   1  2 ]");
        assert_eq!(
            matrix(&m, OutputFormat::Json),
            "[[\"1/2\",\"1\"],[\"1\",\"2\"]]"
        );
        assert_eq!(
            matrix(&m, OutputFormat::Latex),
            "\\begin{pmatrix} \\frac{1}{2} & 1 \\\\ 1 & 2 \\end{pmatrix}"
        );
    }

    #[test]
    fn polynomials_render_in_all_formats() {
        let p = bitensor::pairing::pn_polynomial(3);
        assert_eq!(polynomial(&p, OutputFormat::Plain), "1 + 6 t + 6 t^2");
        assert_eq!(polynomial(&p, OutputFormat::Latex), "1 + 6 t + 6 t^{2}");
        assert_eq!(polynomial(&p, OutputFormat::Json), "[\"1\",\"6\",\"6\"]");
        assert_eq!(polynomial(&Polynomial::zero(), OutputFormat::Json), "[]");
    }

    #[test]
    fn rationals_render_in_all_formats() {
        assert_eq!(rational(&rat(-1, 2), OutputFormat::Plain), "-1/2");
        assert_eq!(rational(&rat(-1, 2), OutputFormat::Latex), "-\\frac{1}{2}");
        assert_eq!(rational(&rat_int(7), OutputFormat::Latex), "7");
        assert_eq!(rational(&rat(1, 3), OutputFormat::Json), "\"1/3\"");
    }
}
