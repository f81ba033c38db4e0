//! Parser for the plain textual form of elements. The grammar is the one
//! the plain formatter emits, so formatting and parsing round-trip:
//!
//! ```text
//! element := ['-'] term { ('+' | '-') term }
//! term    := coefficient [ ['*'] phrase ] | phrase
//! coeff   := INT [ '/' INT ]
//! phrase  := word { '|' word }
//! word    := LETTER { '*' LETTER }
//! LETTER  := 'x' INT
//! ```
//!
//! A bare coefficient is a multiple of the unit phrase, so `1` is the
//! unit and `-2/3` is a scalar. Whitespace separates tokens freely.

use std::fmt;

use bitensor::freelin::Rational;
use bitensor::{Element, Phrase, Word};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Malformed input, with the byte offset of the offending token.
    Syntax { pos: usize, msg: String },
    /// A letter index outside `1..=dim`.
    LetterOutOfRange { pos: usize, index: u32, dim: u32 },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { pos, msg } => write!(f, "{msg} (at position {pos})"),
            ParseError::LetterOutOfRange { pos, index, dim } => write!(
                f,
                "letter x{index} is outside the alphabet x1..x{dim} (at position {pos})"
            ),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Letter(u32),
    Star,
    Bar,
    Plus,
    Minus,
    Slash,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '|' => {
                toks.push((i, Tok::Bar));
                i += 1;
            }
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            '/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &input[start..i];
                toks.push((start, Tok::Int(digits.parse().expect("digits"))));
            }
            'x' => {
                let start = i;
                i += 1;
                let digit_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digit_start == i {
                    return Err(ParseError::Syntax {
                        pos: start,
                        msg: "expected a letter index after 'x'".into(),
                    });
                }
                let index: u32 = input[digit_start..i].parse().map_err(|_| ParseError::Syntax {
                    pos: start,
                    msg: "letter index is too large".into(),
                })?;
                toks.push((start, Tok::Letter(index)));
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    dim: u32,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.i + 1).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].1.clone();
        self.i += 1;
        t
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax { pos: self.pos(), msg: msg.into() }
    }

    fn element(&mut self) -> Result<Element, ParseError> {
        if self.peek().is_none() {
            return Err(self.syntax("empty expression"));
        }
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = true;
        }
        let mut acc = Element::zero(self.dim);
        loop {
            let term = self.term()?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                None => return Ok(acc),
                Some(Tok::Plus) => {
                    self.bump();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    negate = true;
                }
                Some(_) => return Err(self.syntax("expected '+' or '-' between terms")),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let coeff = self.coefficient()?;
                match (self.peek(), self.peek2()) {
                    (Some(Tok::Letter(_)), _) => {
                        let p = self.phrase()?;
                        Ok(Element::from_phrase(self.dim, p).scale(&coeff))
                    }
                    (Some(Tok::Star), Some(Tok::Letter(_))) => {
                        self.bump();
                        let p = self.phrase()?;
                        Ok(Element::from_phrase(self.dim, p).scale(&coeff))
                    }
                    _ => Ok(Element::unit(self.dim).scale(&coeff)),
                }
            }
            Some(Tok::Letter(_)) => {
                let p = self.phrase()?;
                Ok(Element::from_phrase(self.dim, p))
            }
            _ => Err(self.syntax("expected a term")),
        }
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let numerator = match self.bump() {
            Tok::Int(n) => n,
            _ => unreachable!("caller checked"),
        };
        if self.peek() == Some(&Tok::Slash) {
            self.bump();
            let pos = self.pos();
            match self.peek() {
                Some(Tok::Int(_)) => {
                    let denominator = match self.bump() {
                        Tok::Int(n) => n,
                        _ => unreachable!(),
                    };
                    if denominator.is_zero() {
                        return Err(ParseError::Syntax {
                            pos,
                            msg: "denominator is zero".into(),
                        });
                    }
                    Ok(Rational::new(numerator, denominator))
                }
                _ => Err(self.syntax("expected a denominator after '/'")),
            }
        } else {
            Ok(Rational::from_integer(numerator))
        }
    }

    fn phrase(&mut self) -> Result<Phrase, ParseError> {
        let mut words = vec![self.word()?];
        while self.peek() == Some(&Tok::Bar) {
            self.bump();
            words.push(self.word()?);
        }
        Ok(Phrase::new(words))
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut letters = vec![self.letter()?];
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            letters.push(self.letter()?);
        }
        Ok(Word::new(letters))
    }

    fn letter(&mut self) -> Result<bitensor::freelin::Letter, ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Letter(index)) => {
                let index = *index;
                if index == 0 || index > self.dim {
                    return Err(ParseError::LetterOutOfRange { pos, index, dim: self.dim });
                }
                self.bump();
                Ok(bitensor::freelin::Letter::new(index))
            }
            _ => Err(self.syntax("expected a letter")),
        }
    }
}

/// Parses the plain textual form of an element over the alphabet
/// `x1..xd`.
pub fn parse_element(input: &str, dim: u32) -> Result<Element, ParseError> {
    assert!(dim >= 1, "the alphabet holds at least one letter");
    let toks = lex(input)?;
    let mut parser = Parser { toks, i: 0, dim, end: input.len() };
    parser.element()
}

#[cfg(test)]
mod tests {
    use super::*;
    use bitensor::freelin::{rat, rat_int};

    #[test]
    fn parses_canonical_forms() {
        let e = parse_element("-1/2 x1*x1 + x1|x1", 1).unwrap();
        let expected = Element::from_indices(1, &[vec![1, 1]])
            .scale(&rat(-1, 2))
            .add(&Element::from_indices(1, &[vec![1], vec![1]]));
        assert_eq!(e, expected);

        assert_eq!(parse_element("1", 1).unwrap(), Element::unit(1));
        assert_eq!(parse_element("0", 1).unwrap(), Element::zero(1));
        assert_eq!(
            parse_element("-2/3", 1).unwrap(),
            Element::unit(1).scale(&rat(-2, 3))
        );
        assert_eq!(
            parse_element("3 x1*x2|x3 - x2", 3).unwrap(),
            Element::from_indices(3, &[vec![1, 2], vec![3]])
                .scale(&rat_int(3))
                .sub(&Element::from_indices(3, &[vec![2]]))
        );
    }

    #[test]
    fn accepts_star_between_coefficient_and_phrase() {
        assert_eq!(
            parse_element("2*x1", 1).unwrap(),
            parse_element("2 x1", 1).unwrap()
        );
        assert_eq!(
            parse_element("1/2*x1|x1", 1).unwrap(),
            parse_element("1/2 x1|x1", 1).unwrap()
        );
    }

    #[test]
    fn collects_repeated_terms() {
        assert_eq!(
            parse_element("x1 + x1", 1).unwrap(),
            Element::from_indices(1, &[vec![1]]).scale(&rat_int(2))
        );
        assert_eq!(parse_element("x1 - x1", 1).unwrap(), Element::zero(1));
    }

    #[test]
    fn whitespace_is_free() {
        assert_eq!(
            parse_element("  1/2   x1 * x2  |x1 ", 2).unwrap(),
            parse_element("1/2 x1*x2|x1", 2).unwrap()
        );
    }

    #[test]
    fn reports_syntax_errors_with_positions() {
        assert_eq!(
            parse_element("", 1),
            Err(ParseError::Syntax { pos: 0, msg: "empty expression".into() })
        );
        assert_eq!(
            parse_element("x1 +", 1),
            Err(ParseError::Syntax { pos: 4, msg: "expected a term".into() })
        );
        assert_eq!(
            parse_element("x1 x2", 2),
            Err(ParseError::Syntax { pos: 3, msg: "expected '+' or '-' between terms".into() })
        );
        assert_eq!(
            parse_element("x1*", 1),
            Err(ParseError::Syntax { pos: 3, msg: "expected a letter".into() })
        );
        assert_eq!(
            parse_element("1/0 x1", 1),
            Err(ParseError::Syntax { pos: 2, msg: "denominator is zero".into() })
        );
        assert_eq!(
            parse_element("x", 1),
            Err(ParseError::Syntax { pos: 0, msg: "expected a letter index after 'x'".into() })
        );
        assert!(matches!(
            parse_element("x1 & x2", 2),
            Err(ParseError::Syntax { pos: 3, .. })
        ));
    }

    #[test]
    fn reports_letters_outside_the_alphabet() {
        assert_eq!(
            parse_element("x3", 2),
            Err(ParseError::LetterOutOfRange { pos: 0, index: 3, dim: 2 })
        );
        assert_eq!(
            parse_element("x1*x0", 2),
            Err(ParseError::LetterOutOfRange { pos: 3, index: 0, dim: 2 })
        );
    }

    #[test]
    fn display_output_parses_back() {
        let e = Element::from_indices(2, &[vec![1, 2], vec![2]])
            .scale(&rat(-3, 4))
            .add(&Element::from_indices(2, &[vec![2, 2, 1]]))
            .add(&Element::unit(2).scale(&rat_int(5)));
        assert_eq!(parse_element(&e.to_string(), 2).unwrap(), e);
    }
}
