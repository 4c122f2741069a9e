//! JSON documents for algebras, elements, proximities and morphisms.
//!
//! ```text
//! algebra     {"atoms": ["p", "q"]}  or  {"free_generators": 2}
//! element     "0" | "1" | "[p,q]" | ["p", "q"]
//! perp        {"rep": "perp", "entries": [{"value": "2", "idem": ["p"]}, ...]}
//! flat        {"rep": "flat", "steps": [{"upto": "0", "idem": "1"}, ...]}
//! proximity   {"proximity": "leq"}  or  {"proximity": {"pairs": [["0", "0"], ...]}}
//! morphism    {"source": {algebra, "proximity"?}, "target": {...}, "map": {"0": "0", ...}}
//! ```
//!
//! Scalars are strings (`"-3"`, `"2/3"`); plain JSON integers are accepted
//! on input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::boolalg::{Algebra, IdElem};
use crate::error::{Error, Result};
use crate::flat::{alpha, alpha_inv, FlatElem};
use crate::morphisms::DVMorphism;
use crate::perp::PerpElem;
use crate::proximity::{DeVriesAlgebra, ProxRel};
use crate::scalar::Scalar;

fn malformed(what: impl Into<String>) -> Error {
    Error::Json(what.into())
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum AlgebraDoc {
    Atoms { atoms: Vec<String> },
    Free { free_generators: usize },
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    match AlgebraDoc::deserialize(v)
        .map_err(|_| malformed("expected {\"atoms\": [...]} or {\"free_generators\": n}"))?
    {
        AlgebraDoc::Atoms { atoms } => Algebra::new(&atoms),
        AlgebraDoc::Free { free_generators } => Algebra::free(free_generators),
    }
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    if alg.is_free() {
        json!({ "free_generators": alg.generators().count() })
    } else {
        json!({ "atoms": alg.atoms() })
    }
}

/// An element literal: `"0"`, `"1"`, `"[p,q]"` or an array of atom names.
pub fn idem_from_json(alg: &Algebra, v: &Value) -> Result<IdElem> {
    match v {
        Value::String(text) => alg.parse_element(text),
        Value::Array(items) => {
            let names = items
                .iter()
                .map(|x| {
                    x.as_str()
                        .ok_or_else(|| malformed("atom names must be strings"))
                })
                .collect::<Result<Vec<_>>>()?;
            alg.from_atom_names(&names)
        }
        _ => Err(malformed(format!("not an element literal: {v}"))),
    }
}

/// `"0"` and `"1"` for the bounds, an array of atom names otherwise.
pub fn idem_to_json(e: &IdElem) -> Value {
    if e.is_zero() || e.is_one() {
        Value::String(e.bare_text())
    } else {
        json!(e.atom_names())
    }
}

fn scalar_from_json<D: Scalar>(v: &Value) -> Result<D> {
    match v {
        Value::String(text) => D::parse(text),
        Value::Number(n) if n.is_i64() => Ok(D::from_i64(n.as_i64().unwrap_or_default())),
        _ => Err(malformed(format!("not a scalar: {v}"))),
    }
}

/// An element in either representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element<D: Scalar> {
    Perp(PerpElem<D>),
    Flat(FlatElem<D>),
}

impl<D: Scalar> Element<D> {
    pub fn to_perp(&self) -> PerpElem<D> {
        match self {
            Element::Perp(f) => f.clone(),
            Element::Flat(g) => alpha_inv(g),
        }
    }

    pub fn to_flat(&self) -> FlatElem<D> {
        match self {
            Element::Perp(f) => alpha(f),
            Element::Flat(g) => g.clone(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        match self {
            Element::Perp(f) => f.algebra(),
            Element::Flat(g) => g.algebra(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Element::Perp(f) => f.to_text(),
            Element::Flat(g) => g.to_text(),
        }
    }
}

pub fn perp_from_json<D: Scalar>(alg: &Algebra, v: &Value) -> Result<PerpElem<D>> {
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("perp element needs an \"entries\" array"))?;
    let cells = entries
        .iter()
        .map(|entry| {
            let value = entry
                .get("value")
                .ok_or_else(|| malformed("entry needs \"value\""))?;
            let idem = entry
                .get("idem")
                .ok_or_else(|| malformed("entry needs \"idem\""))?;
            Ok((scalar_from_json::<D>(value)?, idem_from_json(alg, idem)?))
        })
        .collect::<Result<Vec<_>>>()?;
    PerpElem::normalize(alg, cells)
}

pub fn flat_from_json<D: Scalar>(alg: &Algebra, v: &Value) -> Result<FlatElem<D>> {
    let steps = v
        .get("steps")
        .and_then(Value::as_array)
        .ok_or_else(|| malformed("flat element needs a \"steps\" array"))?;
    let steps = steps
        .iter()
        .map(|step| {
            let upto = step
                .get("upto")
                .ok_or_else(|| malformed("step needs \"upto\""))?;
            let idem = step
                .get("idem")
                .ok_or_else(|| malformed("step needs \"idem\""))?;
            Ok((scalar_from_json::<D>(upto)?, idem_from_json(alg, idem)?))
        })
        .collect::<Result<Vec<_>>>()?;
    FlatElem::from_steps(alg, steps)
}

/// Dispatches on `"rep"`.
pub fn element_from_json<D: Scalar>(alg: &Algebra, v: &Value) -> Result<Element<D>> {
    match v.get("rep").and_then(Value::as_str) {
        Some("perp") => Ok(Element::Perp(perp_from_json(alg, v)?)),
        Some("flat") => Ok(Element::Flat(flat_from_json(alg, v)?)),
        _ => Err(malformed("element needs \"rep\": \"perp\" or \"flat\"")),
    }
}

pub fn perp_to_json<D: Scalar>(f: &PerpElem<D>) -> Value {
    let entries: Vec<Value> = f
        .entries()
        .iter()
        .rev()
        .map(|(v, e)| json!({ "value": v.to_string(), "idem": idem_to_json(e) }))
        .collect();
    json!({ "rep": "perp", "entries": entries })
}

pub fn flat_to_json<D: Scalar>(g: &FlatElem<D>) -> Value {
    let steps: Vec<Value> = g
        .steps()
        .iter()
        .map(|(a, e)| json!({ "upto": a.to_string(), "idem": idem_to_json(e) }))
        .collect();
    json!({ "rep": "flat", "steps": steps })
}

pub fn element_to_json<D: Scalar>(x: &Element<D>) -> Value {
    match x {
        Element::Perp(f) => perp_to_json(f),
        Element::Flat(g) => flat_to_json(g),
    }
}

/// Reads `{"proximity": ...}`; a bare `"leq"` or `{"pairs": ...}` is also
/// accepted.
pub fn proximity_from_json(alg: &Algebra, v: &Value) -> Result<ProxRel> {
    let inner = v.get("proximity").unwrap_or(v);
    match inner {
        Value::String(s) if s == "leq" => Ok(ProxRel::leq(alg)),
        Value::Object(map) => {
            let pairs = map
                .get("pairs")
                .and_then(Value::as_array)
                .ok_or_else(|| malformed("proximity needs \"pairs\""))?;
            let pairs = pairs
                .iter()
                .map(|pair| match pair.as_array().map(Vec::as_slice) {
                    Some([e, f]) => Ok((idem_from_json(alg, e)?, idem_from_json(alg, f)?)),
                    _ => Err(malformed(format!("not a pair: {pair}"))),
                })
                .collect::<Result<Vec<_>>>()?;
            ProxRel::from_pairs(alg, pairs)
        }
        _ => Err(malformed("proximity must be \"leq\" or {\"pairs\": [...]}")),
    }
}

pub fn proximity_to_json(rel: &ProxRel) -> Result<Value> {
    if rel.is_order() {
        return Ok(json!({ "proximity": "leq" }));
    }
    let pairs: Vec<Value> = rel
        .pairs()?
        .iter()
        .map(|(e, f)| json!([e.to_string(), f.to_string()]))
        .collect();
    Ok(json!({ "proximity": { "pairs": pairs } }))
}

/// An algebra document with an optional `"proximity"` field (default `≤`).
pub fn devries_from_json(v: &Value) -> Result<DeVriesAlgebra> {
    let alg = algebra_from_json(v)?;
    match v.get("proximity") {
        None => Ok(DeVriesAlgebra::leq(&alg)),
        Some(p) => DeVriesAlgebra::new(proximity_from_json(&alg, p)?),
    }
}

pub fn devries_to_json(dv: &DeVriesAlgebra) -> Result<Value> {
    let mut doc = algebra_to_json(dv.algebra());
    doc["proximity"] = proximity_to_json(dv.rel())?["proximity"].take();
    Ok(doc)
}

pub fn morphism_from_json(v: &Value) -> Result<DVMorphism> {
    let source = devries_from_json(
        v.get("source")
            .ok_or_else(|| malformed("morphism needs \"source\""))?,
    )?;
    let target = devries_from_json(
        v.get("target")
            .ok_or_else(|| malformed("morphism needs \"target\""))?,
    )?;
    let map = v
        .get("map")
        .and_then(Value::as_object)
        .ok_or_else(|| malformed("morphism needs a \"map\" object"))?;
    let mut table: BTreeMap<u64, IdElem> = BTreeMap::new();
    for (key, value) in map {
        let e = source.algebra().parse_element(key)?;
        let image = idem_from_json(target.algebra(), value)?;
        if table.insert(e.bits(), image).is_some() {
            return Err(malformed(format!("element {e} mapped twice")));
        }
    }
    let size = 1u64 << source.algebra().atom_count().min(63);
    if let Some(missing) = (0..size).find(|b| !table.contains_key(b)) {
        return Err(Error::InvalidMorphism(format!(
            "map is not total: {} has no image",
            source.algebra().element(missing)
        )));
    }
    DVMorphism::new(source, target, table.into_values().collect())
}

pub fn morphism_to_json(m: &DVMorphism) -> Result<Value> {
    let map: serde_json::Map<String, Value> = m
        .source()
        .algebra()
        .elements()
        .map(|e| (e.to_string(), Value::String(m.apply(&e).to_string())))
        .collect();
    Ok(json!({
        "source": devries_to_json(m.source())?,
        "target": devries_to_json(m.target())?,
        "map": map,
    }))
}
