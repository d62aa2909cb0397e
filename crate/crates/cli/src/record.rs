//! Flat output records and their CSV / JSON-lines serialization.

use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    /// Not applicable for this row: empty in CSV, `null` in JSON.
    Null,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record {
    fields: Vec<(&'static str, Value)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &'static str, value: Value) -> &mut Self {
        self.fields.push((key, value));
        self
    }

    pub fn num(&mut self, key: &'static str, v: f64) -> &mut Self {
        self.push(key, Value::Num(v))
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.fields.iter().map(|(k, _)| *k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Jsonl,
}

/// `x` with 12 significant digits, trailing zeros dropped; `inf`, `-inf`
/// and `nan` for non-finite values.
pub fn sig12(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim(format!(
            "{:.*}",
            decimals,
            sci.parse::<f64>().expect("round trip")
        ))
    } else {
        format!("{}e{}", trim(mantissa.to_string()), exp)
    }
}

fn trim(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn csv_field(v: &Value) -> String {
    match v {
        Value::Num(x) => sig12(*x),
        Value::Int(i) => i.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Text(t) if t.contains([',', '"', '\n']) => format!("\"{}\"", t.replace('"', "\"\"")),
        Value::Text(t) => t.clone(),
        Value::Null => String::new(),
    }
}

fn json_field(v: &Value) -> serde_json::Value {
    match v {
        Value::Num(x) => sig12(*x)
            .parse::<f64>()
            .ok()
            .and_then(serde_json::Number::from_f64)
            .map_or(serde_json::Value::Null, serde_json::Value::Number),
        Value::Int(i) => (*i).into(),
        Value::Bool(b) => (*b).into(),
        Value::Text(t) => t.as_str().into(),
        Value::Null => serde_json::Value::Null,
    }
}

/// Serializes records sharing one schema; the CSV header comes from the
/// first record.
pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            if let Some(first) = records.first() {
                out.push_str(&first.keys().collect::<Vec<_>>().join(","));
                out.push('\n');
            }
            for r in records {
                let row: Vec<String> = r.fields.iter().map(|(_, v)| csv_field(v)).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
        Format::Jsonl => {
            for r in records {
                out.push('{');
                for (i, (k, v)) in r.fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write!(out, "{}:{}", serde_json::Value::from(*k), json_field(v))
                        .expect("write to string");
                }
                out.push_str("}\n");
            }
        }
    }
    out
}
