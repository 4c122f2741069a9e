//! Turning command-line arguments into algebras, elements, relations and maps.

use std::fs;
use std::path::Path;

use serde_json::{json, Value};
use specker_core::json::{
    algebra_from_json, element_from_json, morphism_from_json, proximity_from_json,
};
use specker_core::oracle::PointFn;
use specker_core::presentation::normalize_text;
use specker_core::{Algebra, DVMorphism, DeVriesAlgebra, Element, ProxRel, Scalar};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] specker_core::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// A path to a JSON file, or the JSON text itself when it starts with `{`, `[` or `"`.
pub fn read_json(arg: &str) -> CliResult<Value> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with(['{', '[', '"']) && !Path::new(arg).exists() {
        return Ok(serde_json::from_str(arg)?);
    }
    let text = fs::read_to_string(arg).map_err(|source| CliError::Io {
        path: arg.to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

pub fn algebra(arg: Option<&str>) -> CliResult<Algebra> {
    let arg = arg.ok_or_else(|| usage("--algebra is required for this command"))?;
    Ok(algebra_from_json(&read_json(arg)?)?)
}

pub fn proximity(alg: &Algebra, arg: Option<&str>) -> CliResult<ProxRel> {
    match arg {
        None | Some("leq") => Ok(ProxRel::leq(alg)),
        Some(arg) => Ok(proximity_from_json(alg, &read_json(arg)?)?),
    }
}

pub fn devries(alg: &Algebra, arg: Option<&str>) -> CliResult<DeVriesAlgebra> {
    Ok(DeVriesAlgebra::new(proximity(alg, arg)?)?)
}

pub fn morphism(arg: &str) -> CliResult<DVMorphism> {
    Ok(morphism_from_json(&read_json(arg)?)?)
}

/// An element from a JSON document (`perp`, `flat` or `point`), or a term.
pub fn element<D: Scalar>(alg: &Algebra, arg: &str) -> CliResult<Element<D>> {
    let looks_like_json =
        Path::new(arg).is_file() || arg.trim_start().starts_with('{') || arg.ends_with(".json");
    if !looks_like_json {
        return Ok(Element::Perp(normalize_text(arg, alg)?));
    }
    let doc = read_json(arg)?;
    if doc.get("rep").and_then(Value::as_str) == Some("point") {
        return Ok(Element::Perp(point_from_json::<D>(alg, &doc)?.to_perp()));
    }
    Ok(element_from_json(alg, &doc)?)
}

pub fn point_to_json<D: Scalar>(f: &PointFn<D>) -> Value {
    let alg = f.algebra();
    let values: serde_json::Map<String, Value> = f
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| (alg.atom_name(i).to_string(), Value::String(v.to_string())))
        .collect();
    json!({ "rep": "point", "values": values })
}

fn point_from_json<D: Scalar>(alg: &Algebra, doc: &Value) -> CliResult<PointFn<D>> {
    let map = doc
        .get("values")
        .and_then(Value::as_object)
        .ok_or_else(|| usage("point element needs a \"values\" object"))?;
    let values = (0..alg.atom_count())
        .map(|i| {
            let name = alg.atom_name(i);
            let v = map
                .get(name)
                .ok_or_else(|| usage(format!("point element has no value for atom {name}")))?;
            let text = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                other => return Err(usage(format!("not a scalar: {other}"))),
            };
            Ok(D::parse(&text)?)
        })
        .collect::<CliResult<Vec<D>>>()?;
    if map.len() != alg.atom_count() {
        return Err(usage("point element names an unknown atom"));
    }
    Ok(PointFn::new(alg, values)?)
}
