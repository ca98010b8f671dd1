use serde_json::{Map, Number, Value};

pub const SCHEMA: &str = "cuoco-report/1";

/// Significant digits kept in every reported number.
const DIGITS: usize = 12;

/// Starts a report object with the schema tag and command name.
pub fn header(command: &str) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("schema".into(), SCHEMA.into());
    map.insert("command".into(), command.into());
    map
}

/// Rounds a float to a fixed number of significant digits, folding `-0` to `0`.
/// Non-finite values become `null`.
pub fn round(v: f64) -> Value {
    if !v.is_finite() {
        return Value::Null;
    }
    let r: f64 = format!("{v:.prec$e}", prec = DIGITS - 1)
        .parse()
        .expect("formatted float parses");
    let r = if r == 0.0 { 0.0 } else { r };
    if r.fract() == 0.0 && r.abs() < 1e15 {
        Value::Number(Number::from(r as i64))
    } else {
        Number::from_f64(r).map_or(Value::Null, Value::Number)
    }
}

fn normalize(v: Value) -> Value {
    match v {
        Value::Number(n) => match n.as_f64() {
            Some(f) if !n.is_i64() && !n.is_u64() => round(f),
            _ => Value::Number(n),
        },
        Value::Array(items) => Value::Array(items.into_iter().map(normalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

pub fn to_string(v: Value) -> String {
    serde_json::to_string_pretty(&normalize(v)).expect("report serializes")
}
