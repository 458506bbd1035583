//! Command output. Every report is a list of keyed entries rendered either
//! as aligned text or as a JSON object, so both forms carry the same data.

use fpbetti::pipeline::{Check, Outcome};
use fpbetti::{BettiSequence, PoincarePolynomial, RankSequence};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone)]
pub enum Entry {
    Int(usize),
    Flag(bool),
    Text(String),
    Lines(Vec<String>),
    Seq(Vec<BigUint>),
    Poly(Vec<BigUint>, String),
    Checks(Vec<CheckRow>),
}

#[derive(Debug, Clone)]
pub struct CheckRow {
    pub name: String,
    pub status: &'static str,
    pub detail: String,
}

impl CheckRow {
    pub fn failed(&self) -> bool {
        self.status == "fail"
    }
}

impl From<&Check> for CheckRow {
    fn from(c: &Check) -> Self {
        let (status, detail) = match &c.outcome {
            Outcome::Pass => ("pass", String::new()),
            Outcome::Fail(d) => ("fail", d.clone()),
            Outcome::Skipped(d) => ("skipped", d.clone()),
        };
        CheckRow {
            name: c.name.to_string(),
            status,
            detail,
        }
    }
}

#[derive(Debug, Default)]
pub struct Report {
    entries: Vec<(&'static str, Entry)>,
}

impl Report {
    pub fn push(&mut self, key: &'static str, entry: Entry) {
        self.entries.push((key, entry));
    }

    pub fn int(&mut self, key: &'static str, v: usize) {
        self.push(key, Entry::Int(v));
    }

    pub fn flag(&mut self, key: &'static str, v: bool) {
        self.push(key, Entry::Flag(v));
    }

    pub fn text(&mut self, key: &'static str, v: impl Into<String>) {
        self.push(key, Entry::Text(v.into()));
    }

    pub fn lines(&mut self, key: &'static str, v: Vec<String>) {
        self.push(key, Entry::Lines(v));
    }

    pub fn betti(&mut self, key: &'static str, b: &BettiSequence) {
        self.push(key, Entry::Seq(b.values().to_vec()));
    }

    pub fn ranks(&mut self, key: &'static str, r: &RankSequence) {
        self.push(key, Entry::Seq(r.ranks().to_vec()));
    }

    pub fn poly(&mut self, key: &'static str, p: &PoincarePolynomial) {
        self.push(key, Entry::Poly(p.coeffs().to_vec(), p.to_string()));
    }

    pub fn checks(&mut self, key: &'static str, rows: Vec<CheckRow>) {
        self.push(key, Entry::Checks(rows));
    }

    pub fn render_text(&self) -> String {
        let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (key, entry) in &self.entries {
            match entry {
                Entry::Checks(rows) => {
                    out.push_str(&format!("{key}:\n"));
                    let name_width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
                    for r in rows {
                        let line =
                            format!("  {:<name_width$}  {:<7}  {}", r.name, r.status, r.detail);
                        out.push_str(line.trim_end());
                        out.push('\n');
                    }
                }
                other => out.push_str(&format!("{key:<width$}  {}\n", text_value(other))),
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut map = Map::new();
        for (key, entry) in &self.entries {
            map.insert(key.to_string(), json_value(entry));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
        s.push('\n');
        s
    }
}

fn seq_text(v: &[BigUint]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn text_value(entry: &Entry) -> String {
    match entry {
        Entry::Int(v) => v.to_string(),
        Entry::Flag(v) => v.to_string(),
        Entry::Text(s) => s.clone(),
        Entry::Lines(v) if v.is_empty() => "0".into(),
        Entry::Lines(v) => v.join("; "),
        Entry::Seq(v) => seq_text(v),
        Entry::Poly(_, shown) => shown.clone(),
        Entry::Checks(_) => unreachable!("rendered as a table"),
    }
}

fn big(v: &BigUint) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn json_value(entry: &Entry) -> Value {
    match entry {
        Entry::Int(v) => json!(v),
        Entry::Flag(v) => json!(v),
        Entry::Text(s) => json!(s),
        Entry::Lines(v) => json!(v),
        Entry::Seq(v) | Entry::Poly(v, _) => Value::Array(v.iter().map(big).collect()),
        Entry::Checks(rows) => Value::Array(
            rows.iter()
                .map(|r| json!({ "name": r.name, "status": r.status, "detail": r.detail }))
                .collect(),
        ),
    }
}
