//! Text and JSON forms of [`Element`].
//!
//! Text: `3 + v1^v2 - 3/2 * v1^v3`, with `w` for index 0. JSON:
//! `{"terms":[{"blade":[1,3],"coeff":"-3/2"}]}`; a JSON string holding the
//! text form is also accepted. Both parsers accept blades in any order and
//! apply the reordering sign.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{AlgebraConfig, Element};
use crate::{Error, Rational, Result};

fn write_term(f: &mut fmt::Formatter<'_>, blade: super::Blade, c: &Rational) -> fmt::Result {
    if blade.is_empty() {
        write!(f, "{c}")
    } else if c.is_one() {
        write!(f, "{blade}")
    } else {
        write!(f, "{c} * {blade}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (blade, c)) in self.terms().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            write_term(f, blade, &c.abs())?;
        }
        Ok(())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = num_bigint::BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let den = num_bigint::BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

fn parse_factor(s: &str) -> Result<u32> {
    let s = s.trim();
    if s == "w" {
        return Ok(0);
    }
    s.strip_prefix('v')
        .and_then(|d| d.parse::<u32>().ok())
        .filter(|&i| i >= 1)
        .ok_or_else(|| Error::Parse(format!("bad generator `{s}`")))
}

fn parse_term(config: AlgebraConfig, s: &str, negative: bool) -> Result<Element> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let (coeff, blade) = match s.split_once('*') {
        Some((c, b)) => (parse_rational(c)?, Some(b)),
        None if s.starts_with(['v', 'w']) => (Rational::one(), Some(s)),
        None => (parse_rational(s)?, None),
    };
    let indices = match blade {
        Some(b) => b.split('^').map(parse_factor).collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let coeff = if negative { -coeff } else { coeff };
    Element::monomial(config, &indices, coeff)
}

fn parse_text(config: AlgebraConfig, s: &str) -> Result<Element> {
    let mut acc = Element::zero(config);
    let mut negative = false;
    let mut start = 0;
    for (signs_seen, (i, ch)) in s.char_indices().filter(|(_, c)| *c == '+' || *c == '-').enumerate() {
        let chunk = &s[start..i];
        if chunk.trim().is_empty() {
            // only a single leading sign may precede the first term
            if signs_seen > 0 {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
        } else {
            acc.add_assign_unchecked(&parse_term(config, chunk, negative)?);
        }
        negative = ch == '-';
        start = i + 1;
    }
    acc.add_assign_unchecked(&parse_term(config, &s[start..], negative)?);
    Ok(acc)
}

/// JSON shape of one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub blade: Vec<u32>,
    pub coeff: String,
}

/// JSON shape of an element.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ElementJson {
    pub terms: Vec<TermJson>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawElementJson {
    Text(String),
    Terms { terms: Vec<TermJson> },
}

impl<'de> Deserialize<'de> for ElementJson {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match RawElementJson::deserialize(deserializer)? {
            RawElementJson::Terms { terms } => Ok(ElementJson { terms }),
            RawElementJson::Text(text) => {
                // widest config; the caller's config is enforced by into_element
                let widest = AlgebraConfig::f(super::blade::MAX_INDEX).expect("widest config is valid");
                parse_text(widest, text.trim())
                    .map(|e| ElementJson::from(&e))
                    .map_err(serde::de::Error::custom)
            }
        }
    }
}

impl ElementJson {
    pub fn into_element(&self, config: AlgebraConfig) -> Result<Element> {
        let mut acc = Element::zero(config);
        for t in &self.terms {
            let m = Element::monomial(config, &t.blade, parse_rational(&t.coeff)?)?;
            acc.add_assign_unchecked(&m);
        }
        Ok(acc)
    }

    /// Largest index mentioned and whether `w` appears.
    pub fn index_extent(&self) -> (u32, bool) {
        self.terms
            .iter()
            .flat_map(|t| t.blade.iter().copied())
            .fold((0, false), |(m, w), i| (m.max(i), w || i == 0))
    }
}

impl From<&Element> for ElementJson {
    fn from(e: &Element) -> Self {
        ElementJson {
            terms: e
                .terms()
                .map(|(b, c)| TermJson {
                    blade: b.indices().collect(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementJson::from(self).serialize(serializer)
    }
}

impl Element {
    /// Parses either the text form or the JSON form under `config`.
    pub fn parse(config: AlgebraConfig, s: &str) -> Result<Element> {
        let t = s.trim();
        if t.starts_with('{') {
            let json: ElementJson = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            json.into_element(config)
        } else {
            parse_text(config, t)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ElementJson::from(self)).expect("element JSON is always valid")
    }
}
