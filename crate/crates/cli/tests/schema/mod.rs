//! Minimal JSON-schema validator covering the subset the shipped schemas
//! use: `type`, `properties`, `required`, `additionalProperties` (false),
//! `items`, `enum`, `minimum`. An empty schema accepts anything.

use serde_json::Value;

pub fn validate(schema: &Value, doc: &Value) -> Result<(), String> {
    validate_at(schema, doc, "$")
}

fn validate_at(schema: &Value, doc: &Value, path: &str) -> Result<(), String> {
    let obj = schema
        .as_object()
        .ok_or_else(|| format!("{path}: schema node must be an object"))?;

    if let Some(allowed) = obj.get("enum") {
        let list = allowed.as_array().expect("enum is an array");
        if !list.contains(doc) {
            return Err(format!("{path}: {doc} not in enum {allowed}"));
        }
        return Ok(());
    }

    if let Some(ty) = obj.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => doc.is_object(),
            "array" => doc.is_array(),
            "string" => doc.is_string(),
            "boolean" => doc.is_boolean(),
            "integer" => doc.as_i64().is_some() || doc.as_u64().is_some(),
            "number" => doc.is_number(),
            "null" => doc.is_null(),
            other => return Err(format!("{path}: unsupported type `{other}`")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {doc}"));
        }
    }

    if let Some(minimum) = obj.get("minimum").and_then(Value::as_i64) {
        let v = doc
            .as_i64()
            .or_else(|| doc.as_u64().map(|u| u as i64))
            .ok_or_else(|| format!("{path}: minimum on non-integer"))?;
        if v < minimum {
            return Err(format!("{path}: {v} below minimum {minimum}"));
        }
    }

    if let Some(props) = obj.get("properties").and_then(Value::as_object) {
        let map = doc
            .as_object()
            .ok_or_else(|| format!("{path}: properties on non-object"))?;
        for (key, sub) in props {
            if let Some(value) = map.get(key) {
                validate_at(sub, value, &format!("{path}.{key}"))?;
            }
        }
        if obj.get("additionalProperties") == Some(&Value::Bool(false)) {
            for key in map.keys() {
                if !props.contains_key(key) {
                    return Err(format!("{path}: unexpected property `{key}`"));
                }
            }
        }
    }

    if let Some(required) = obj.get("required").and_then(Value::as_array) {
        let map = doc
            .as_object()
            .ok_or_else(|| format!("{path}: required on non-object"))?;
        for key in required {
            let key = key.as_str().expect("required entries are strings");
            if !map.contains_key(key) {
                return Err(format!("{path}: missing required property `{key}`"));
            }
        }
    }

    if let Some(items) = obj.get("items") {
        if items.as_object().is_some_and(|m| !m.is_empty()) {
            let arr = doc
                .as_array()
                .ok_or_else(|| format!("{path}: items on non-array"))?;
            for (i, item) in arr.iter().enumerate() {
                validate_at(items, item, &format!("{path}[{i}]"))?;
            }
        }
    }

    Ok(())
}
