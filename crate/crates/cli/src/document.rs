//! JSON serialisation of truncated series.
//!
//! Documents are canonical: terms sorted by (length, lexicographic), no zero
//! coefficients, rationals in lowest terms. Parsing rejects anything else,
//! so printing a parsed document reproduces it byte for byte.

use ncps_core::{parse_rational, Coefficient, PolyT, Rational, TruncatedSeries, Word};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Ring {
    Rational,
    RationalPolyT,
}

/// A coefficient as written in JSON: `"p/q"` or `[["p/q", exponent], …]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffRepr {
    Scalar(String),
    Poly(Vec<(String, u32)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermRepr {
    pub word: Vec<u32>,
    pub coeff: CoeffRepr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDocument {
    pub alphabet: usize,
    pub truncation: usize,
    pub ring: Ring,
    pub constant: CoeffRepr,
    pub terms: Vec<TermRepr>,
}

/// A parsed series over either coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnySeries {
    Rational(TruncatedSeries<Rational>),
    PolyT(TruncatedSeries<PolyT>),
}

impl AnySeries {
    pub fn ring(&self) -> Ring {
        match self {
            AnySeries::Rational(_) => Ring::Rational,
            AnySeries::PolyT(_) => Ring::RationalPolyT,
        }
    }
}

trait Repr: Coefficient {
    fn to_repr(&self) -> CoeffRepr;
    fn from_repr(r: &CoeffRepr) -> Result<Self, CliError>;
}

impl Repr for Rational {
    fn to_repr(&self) -> CoeffRepr {
        CoeffRepr::Scalar(self.to_string())
    }

    fn from_repr(r: &CoeffRepr) -> Result<Self, CliError> {
        match r {
            CoeffRepr::Scalar(s) => Ok(parse_rational(s)?),
            CoeffRepr::Poly(_) => Err(CliError::input("rational ring expects coefficient strings")),
        }
    }
}

impl Repr for PolyT {
    fn to_repr(&self) -> CoeffRepr {
        CoeffRepr::Poly(self.terms().iter().map(|(c, e)| (c.to_string(), *e)).collect())
    }

    fn from_repr(r: &CoeffRepr) -> Result<Self, CliError> {
        match r {
            CoeffRepr::Poly(pairs) => {
                let terms = pairs
                    .iter()
                    .map(|(c, e)| Ok((parse_rational(c)?, *e)))
                    .collect::<Result<Vec<_>, CliError>>()?;
                Ok(PolyT::from_normalized(terms)?)
            }
            CoeffRepr::Scalar(_) => Err(CliError::input(
                "rational_poly_t ring expects [rational, exponent] lists",
            )),
        }
    }
}

fn to_document<C: Repr>(s: &TruncatedSeries<C>, ring: Ring) -> SeriesDocument {
    SeriesDocument {
        alphabet: s.alphabet(),
        truncation: s.degree(),
        ring,
        constant: s.constant_term().to_repr(),
        terms: s
            .terms()
            .map(|(w, c)| TermRepr {
                word: w.letters().to_vec(),
                coeff: c.to_repr(),
            })
            .collect(),
    }
}

fn from_document<C: Repr>(doc: &SeriesDocument) -> Result<TruncatedSeries<C>, CliError> {
    let mut s = TruncatedSeries::<C>::zero(doc.alphabet, doc.truncation)?;
    s.set(Word::unit(), C::from_repr(&doc.constant)?)?;
    let mut previous: Option<Word> = None;
    for t in &doc.terms {
        if t.word.is_empty() {
            return Err(CliError::input(
                "the constant term belongs in \"constant\", not in \"terms\"",
            ));
        }
        let w = Word::new(t.word.clone())?;
        if previous.as_ref().is_some_and(|p| *p >= w) {
            return Err(CliError::input(format!(
                "term {:?} is out of order or repeated",
                t.word
            )));
        }
        let c = C::from_repr(&t.coeff)?;
        if c.is_zero() {
            return Err(CliError::input(format!("term {:?} has a zero coefficient", t.word)));
        }
        s.set(w.clone(), c)?;
        previous = Some(w);
    }
    Ok(s)
}

impl SeriesDocument {
    pub fn from_series(s: &AnySeries) -> Self {
        match s {
            AnySeries::Rational(s) => to_document(s, Ring::Rational),
            AnySeries::PolyT(s) => to_document(s, Ring::RationalPolyT),
        }
    }

    pub fn to_series(&self) -> Result<AnySeries, CliError> {
        match self.ring {
            Ring::Rational => Ok(AnySeries::Rational(from_document(self)?)),
            Ring::RationalPolyT => Ok(AnySeries::PolyT(from_document(self)?)),
        }
    }

    pub fn parse(text: &str) -> Result<AnySeries, CliError> {
        let doc: SeriesDocument =
            serde_json::from_str(text).map_err(|e| CliError::input(format!("malformed series document: {e}")))?;
        doc.to_series()
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn render(s: &AnySeries) -> String {
        let mut out = serde_json::to_string_pretty(&Self::from_series(s)).expect("documents always serialise");
        out.push('\n');
        out
    }
}

pub fn rational_series(s: AnySeries, role: &str) -> Result<TruncatedSeries<Rational>, CliError> {
    match s {
        AnySeries::Rational(s) => Ok(s),
        AnySeries::PolyT(_) => Err(CliError::input(format!("{role} must use the rational ring"))),
    }
}

impl From<TruncatedSeries<Rational>> for AnySeries {
    fn from(s: TruncatedSeries<Rational>) -> Self {
        AnySeries::Rational(s)
    }
}

impl From<TruncatedSeries<PolyT>> for AnySeries {
    fn from(s: TruncatedSeries<PolyT>) -> Self {
        AnySeries::PolyT(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{
  "alphabet": 2,
  "truncation": 3,
  "ring": "rational",
  "constant": "1",
  "terms": [
    {
      "word": [
        2
      ],
      "coeff": "-1/2"
    },
    {
      "word": [
        1,
        2
      ],
      "coeff": "3"
    }
  ]
}
"#;

    #[test]
    fn round_trip_is_identical() {
        let s = SeriesDocument::parse(DOC).unwrap();
        assert_eq!(SeriesDocument::render(&s), DOC);
    }

    #[test]
    fn poly_round_trip() {
        let text = r#"{"alphabet":1,"truncation":2,"ring":"rational_poly_t","constant":[["1",0]],
            "terms":[{"word":[1],"coeff":[["2",1],["1/2",2]]}]}"#;
        let s = SeriesDocument::parse(text).unwrap();
        assert_eq!(SeriesDocument::parse(&SeriesDocument::render(&s)).unwrap(), s);
    }

    #[test]
    fn rejects_non_canonical_input() {
        let bad = [
            DOC.replace("\"-1/2\"", "\"-2/4\""),
            DOC.replace("\"3\"", "\"0\""),
            DOC.replace("[\n        2\n      ]", "[\n        3\n      ]"),
            DOC.replace("\"ring\": \"rational\"", "\"ring\": \"real\""),
            DOC.replace("\"alphabet\": 2", "\"alphabet\": 0"),
            DOC.replace("\"constant\": \"1\"", "\"constant\": \"1\", \"extra\": 1"),
            DOC.replace("[\n        1,\n        2\n      ]", "[\n        1\n      ]"),
            DOC.replace("[\n        1,\n        2\n      ]", "[]"),
            "{".to_string(),
        ];
        for text in bad {
            assert!(SeriesDocument::parse(&text).is_err(), "{text}");
        }
    }
}
