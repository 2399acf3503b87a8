//! JSON shapes for the coefficient rings. Rationals are strings (`"-1/2"`).

use std::collections::BTreeMap;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{EvenTracePoly, Monomial, OddTraceLinear, TraceSymbol};
use crate::grassmann::parse_rational;
use crate::{Error, Rational};

#[derive(Serialize, Deserialize)]
struct FactorJson {
    symbol: TraceSymbol,
    exp: u32,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    coeff: String,
    factors: Vec<FactorJson>,
}

#[derive(Serialize, Deserialize)]
struct OddTermJson {
    symbol: TraceSymbol,
    coeff: Vec<MonomialJson>,
}

fn poly_to_json(p: &EvenTracePoly) -> Vec<MonomialJson> {
    p.terms()
        .map(|(m, q)| MonomialJson {
            coeff: q.to_string(),
            factors: m.factors().map(|(symbol, exp)| FactorJson { symbol, exp }).collect(),
        })
        .collect()
}

fn poly_from_json(terms: Vec<MonomialJson>) -> Result<EvenTracePoly, Error> {
    let mut raw: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for t in terms {
        let q = parse_rational(&t.coeff)?;
        let mut factors = Vec::with_capacity(t.factors.len());
        for f in t.factors {
            factors.push((f.symbol.validate()?, f.exp));
        }
        *raw.entry(Monomial::from_factors(factors)).or_default() += q;
    }
    EvenTracePoly::from_raw(raw)
}

impl Serialize for EvenTracePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        poly_to_json(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EvenTracePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<MonomialJson>::deserialize(deserializer)?;
        poly_from_json(terms).map_err(serde::de::Error::custom)
    }
}

impl Serialize for OddTraceLinear {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.terms()
            .map(|(symbol, p)| OddTermJson {
                symbol,
                coeff: poly_to_json(p),
            })
            .collect::<Vec<_>>()
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for OddTraceLinear {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<OddTermJson>::deserialize(deserializer)?;
        let mut raw: BTreeMap<TraceSymbol, EvenTracePoly> = BTreeMap::new();
        for t in terms {
            let symbol = t.symbol.validate().map_err(serde::de::Error::custom)?;
            let p = poly_from_json(t.coeff).map_err(serde::de::Error::custom)?;
            let merged = raw.get(&symbol).map_or_else(|| p.clone(), |q| q.add(&p));
            raw.insert(symbol, merged);
        }
        OddTraceLinear::from_raw(raw).map_err(serde::de::Error::custom)
    }
}
