// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{Number, Value};

use super::Format;
use crate::error::{Error, Result};

/// Rounds every non-integer number to 12 significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64");
            let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
            Number::from_f64(rounded).map(Value::Number).unwrap_or(Value::Null)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

/// Drops every `wall_time_s` field.
pub fn strip_timing(v: Value) -> Value {
    match v {
        Value::Array(items) => Value::Array(items.into_iter().map(strip_timing).collect()),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .filter(|(k, _)| k != "wall_time_s")
                .map(|(k, v)| (k, strip_timing(v)))
                .collect(),
        ),
        other => other,
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut BTreeMap<String, String>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            out.insert(prefix.to_string(), items.iter().map(scalar).collect::<Vec<_>>().join(" "));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), item, out);
            }
        }
        other => {
            out.insert(prefix.to_string(), scalar(other));
        }
    }
}

fn to_csv(v: &Value) -> Result<String> {
    let rows: Vec<&Value> = match v.get("reports").and_then(Value::as_array) {
        Some(reports) => reports.iter().collect(),
        None => vec![v],
    };
    let flat: Vec<BTreeMap<String, String>> = rows
        .iter()
        .map(|r| {
            let mut m = BTreeMap::new();
            flatten("", r, &mut m);
            m
        })
        .collect();
    let header: BTreeSet<&String> = flat.iter().flat_map(|m| m.keys()).collect();
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Overflow(format!("csv: {e}"));
    w.write_record(header.iter().map(|h| h.as_str())).map_err(err)?;
    for m in &flat {
        w.write_record(header.iter().map(|h| m.get(*h).map(String::as_str).unwrap_or("")))
            .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Overflow(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Formats one result. Floats are rounded first so that JSON and CSV carry
/// the same digits.
pub fn render(v: &Value, format: Format) -> Result<String> {
    let v = round_floats(v.clone());
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&v).expect("values serialize") + "\n"),
        Format::Csv => to_csv(&v),
    }
}

/// Formats several results in input order: a JSON array, or CSV blocks
/// separated by blank lines.
pub fn render_batch(values: &[Value], format: Format) -> Result<String> {
    match format {
        Format::Json => render(&Value::Array(values.to_vec()), Format::Json),
        Format::Csv => Ok(values
            .iter()
            .map(|v| render(v, Format::Csv))
            .collect::<Result<Vec<_>>>()?
            .join("\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn rounding_keeps_twelve_digits() {
        let v = round_floats(json!({"x": 1.0 / 3.0, "n": 5, "list": [2.0f64.sqrt()]}));
        assert_eq!(v["x"].as_f64().unwrap(), 0.333333333333);
        assert_eq!(v["n"], 5);
        assert_eq!(v["list"][0].as_f64().unwrap(), 1.41421356237);
    }

    #[test]
    fn csv_matches_json_values() {
        let v = json!({"reports": [
            {"law": "a", "lhs": 1.0 / 7.0, "ratio": null, "params": {"k": 2.5}},
            {"law": "b", "lhs": 3.0, "ratio": 1.0, "params": {}}
        ]});
        let csv = render(&v, Format::Csv).unwrap();
        let json: Value = serde_json::from_str(&render(&v, Format::Json).unwrap()).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "law,lhs,params.k,ratio");
        let first: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(first[1], json["reports"][0]["lhs"].to_string());
        assert_eq!(first[2], json["reports"][0]["params"]["k"].to_string());
        assert_eq!(first[3], "null");
    }

    #[test]
    fn timing_is_stripped_everywhere() {
        let v = strip_timing(json!({"reports": [{"wall_time_s": 1.0, "law": "x"}], "wall_time_s": 2}));
        assert_eq!(v, json!({"reports": [{"law": "x"}]}));
    }
}
