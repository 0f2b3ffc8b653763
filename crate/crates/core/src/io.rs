//! JSON file formats.
//!
//! Every file carries `"v": 1`. Objects keyed by element name keep the
//! lattice's element order when written, and numbers use the shortest
//! representation that round-trips.
//!
//! ```text
//! lattice / poset   {"v": 1, "elements": ["a", ...], "covers": [["a", "b"], ...]}
//! function, weights {"v": 1, "values": {"a": 0.5, ...}}
//! negation          {"v": 1, "map": {"a": "b", ...}}
//! distribution      {"v": 1, "pi": {"j": 0.5, ...}}  or  {"v": 1, "nu": {...}}
//! ```
//!
//! A negation map may list every element or only the join-irreducibles; in
//! the latter case it is extended to the whole (distributive) lattice.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::duality::{negation_from_irreducible_names, Negation};
use crate::error::{Error, Result};
use crate::evidence::SupportWeights;
use crate::lattice::{build_poset_with, lattice_from_poset, Lattice, Poset};
use crate::limits::Limits;
use crate::possibilistic::{NecessityDistribution, PossibilityDistribution};
use crate::transforms::SetFunction;

const VERSION: u64 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderFile {
    v: u64,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
}

fn parse_json(text: &str) -> Result<Map<String, Value>> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Format(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let Value::Object(obj) = value else {
        return Err(Error::Format("expected a JSON object".into()));
    };
    match obj.get("v") {
        Some(Value::Number(n)) if n.as_u64() == Some(VERSION) => Ok(obj),
        Some(other) => Err(Error::Format(format!("unsupported format version {other}"))),
        None => Err(Error::Format("missing format version field \"v\"".into())),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Map<String, Value>> {
    match obj.get(key) {
        Some(Value::Object(m)) => Ok(m),
        Some(_) => Err(Error::Format(format!("field \"{key}\" must be an object"))),
        None => Err(Error::Format(format!("missing field \"{key}\""))),
    }
}

fn numbers(map: &Map<String, Value>) -> Result<Vec<(String, f64)>> {
    map.iter()
        .map(|(k, v)| match v.as_f64() {
            Some(x) => Ok((k.clone(), x)),
            None => Err(Error::Format(format!("value for `{k}` is not a number"))),
        })
        .collect()
}

fn render(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn number(x: f64) -> Value {
    serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
}

pub fn parse_poset(text: &str, limits: &Limits) -> Result<Poset> {
    parse_json(text)?;
    let file: OrderFile = serde_json::from_str(text)
        .map_err(|e| Error::Format(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    build_poset_with(&file.elements, &file.covers, limits)
}

pub fn parse_lattice(text: &str, limits: &Limits) -> Result<Lattice> {
    lattice_from_poset(parse_poset(text, limits)?)
}

pub fn poset_to_json(p: &Poset) -> String {
    let file = OrderFile {
        v: VERSION,
        elements: p.names().to_vec(),
        covers: p
            .covers()
            .iter()
            .map(|&(x, y)| (p.name(x).to_string(), p.name(y).to_string()))
            .collect(),
    };
    render(serde_json::to_value(file).expect("serializable"))
}

pub fn lattice_to_json(l: &Lattice) -> String {
    poset_to_json(l.poset())
}

pub fn parse_function(l: &Arc<Lattice>, text: &str) -> Result<SetFunction> {
    let obj = parse_json(text)?;
    SetFunction::from_named(l, &numbers(field(&obj, "values")?)?)
}

fn named_values(l: &Lattice, values: impl Iterator<Item = (crate::Elem, f64)>) -> Map<String, Value> {
    values.map(|(x, v)| (l.name(x).to_string(), number(v))).collect()
}

pub fn function_to_json(f: &SetFunction) -> String {
    let mut obj = Map::new();
    obj.insert("v".into(), VERSION.into());
    obj.insert("values".into(), Value::Object(named_values(f.lattice(), f.iter())));
    render(Value::Object(obj))
}

/// Weights use the function format; absent elements have weight 1.
pub fn parse_weights(l: &Arc<Lattice>, text: &str) -> Result<SupportWeights> {
    let obj = parse_json(text)?;
    SupportWeights::from_named(l, &numbers(field(&obj, "values")?)?)
}

pub fn weights_to_json(w: &SupportWeights) -> String {
    let mut obj = Map::new();
    obj.insert("v".into(), VERSION.into());
    obj.insert(
        "values".into(),
        Value::Object(named_values(w.lattice(), w.entries().iter().copied())),
    );
    render(Value::Object(obj))
}

pub fn parse_negation(l: &Arc<Lattice>, text: &str) -> Result<Negation> {
    let obj = parse_json(text)?;
    let pairs = field(&obj, "map")?
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => Ok((k.clone(), s.clone())),
            _ => Err(Error::Format(format!("image of `{k}` is not a string"))),
        })
        .collect::<Result<Vec<_>>>()?;
    let on_irreducibles = pairs.len() != l.len()
        && pairs
            .iter()
            .all(|(k, _)| l.elem(k).is_ok_and(|x| l.is_joinirr(x)));
    if on_irreducibles {
        negation_from_irreducible_names(l, &pairs)
    } else {
        Negation::from_names(l, &pairs)
    }
}

pub fn negation_to_json(n: &Negation) -> String {
    let l = n.lattice();
    let map: Map<String, Value> = l
        .elements()
        .map(|x| (l.name(x).to_string(), Value::String(l.name(n.apply(x)).to_string())))
        .collect();
    let mut obj = Map::new();
    obj.insert("v".into(), VERSION.into());
    obj.insert("map".into(), Value::Object(map));
    render(Value::Object(obj))
}

#[derive(Debug, Clone)]
pub enum Distribution {
    Possibility(PossibilityDistribution),
    Necessity(NecessityDistribution),
}

pub fn parse_distribution(l: &Arc<Lattice>, text: &str) -> Result<Distribution> {
    let obj = parse_json(text)?;
    match (obj.contains_key("pi"), obj.contains_key("nu")) {
        (true, false) => Ok(Distribution::Possibility(PossibilityDistribution::from_named(
            l,
            &numbers(field(&obj, "pi")?)?,
        )?)),
        (false, true) => Ok(Distribution::Necessity(NecessityDistribution::from_named(
            l,
            &numbers(field(&obj, "nu")?)?,
        )?)),
        _ => Err(Error::Format("expected exactly one of \"pi\" and \"nu\"".into())),
    }
}

pub fn distribution_to_json(d: &Distribution) -> String {
    let (key, values) = match d {
        Distribution::Possibility(p) => ("pi", named_values(p.lattice(), p.iter())),
        Distribution::Necessity(n) => ("nu", named_values(n.lattice(), n.iter())),
    };
    let mut obj = Map::new();
    obj.insert("v".into(), VERSION.into());
    obj.insert(key.into(), Value::Object(values));
    render(Value::Object(obj))
}

/// Reads a file, prefixing errors with its path.
pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
