//! Machine-readable result records and their JSON, CSV and table encodings.
//!
//! Every number is written as an exact `p/q` string.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// A record's value: one exact number or a list of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RecordValue {
    Single(Rational),
    List(Vec<Rational>),
}

impl fmt::Display for RecordValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecordValue::Single(v) => write!(f, "{v}"),
            RecordValue::List(vs) => {
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub kind: String,
    pub inputs: BTreeMap<String, Json>,
    pub value: RecordValue,
    /// Which formula or oracle produced the value.
    pub provenance: String,
}

impl OutputRecord {
    pub fn new(kind: impl Into<String>, value: Rational, provenance: impl Into<String>) -> Self {
        OutputRecord {
            kind: kind.into(),
            inputs: BTreeMap::new(),
            value: RecordValue::Single(value),
            provenance: provenance.into(),
        }
    }

    pub fn list(kind: impl Into<String>, values: Vec<Rational>, provenance: impl Into<String>) -> Self {
        OutputRecord {
            kind: kind.into(),
            inputs: BTreeMap::new(),
            value: RecordValue::List(values),
            provenance: provenance.into(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Json>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Parse {
                what: "output format",
                input: s.to_string(),
            }),
        }
    }
}

fn cell(v: &Json) -> String {
    match v {
        Json::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Input keys in order of first appearance across `records`, led by `kind`
/// when the records are of more than one kind.
fn columns(records: &[OutputRecord]) -> Vec<String> {
    let mut keys: Vec<String> = Vec::new();
    if records.windows(2).any(|w| w[0].kind != w[1].kind) {
        keys.push("kind".into());
    }
    for r in records {
        for k in r.inputs.keys() {
            if !keys.contains(k) {
                keys.push(k.clone());
            }
        }
    }
    keys
}

fn rows(records: &[OutputRecord], keys: &[String]) -> Vec<Vec<String>> {
    records
        .iter()
        .map(|r| {
            let mut row: Vec<String> = keys
                .iter()
                .map(|k| match r.inputs.get(k) {
                    Some(v) => cell(v),
                    None if k == "kind" => r.kind.clone(),
                    None => String::new(),
                })
                .collect();
            row.push(r.value.to_string());
            row
        })
        .collect()
}

/// A JSON array of records.
pub fn write_json(records: &[OutputRecord], mut w: impl Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, records)?;
    writeln!(w)
}

/// One header row of input names plus `value`, then one row per record.
pub fn write_csv(records: &[OutputRecord], w: impl Write) -> io::Result<()> {
    let keys = columns(records);
    let mut out = csv::Writer::from_writer(w);
    let mut header = keys.clone();
    header.push("value".into());
    out.write_record(&header)?;
    for row in rows(records, &keys) {
        out.write_record(&row)?;
    }
    out.flush()
}

/// Aligned columns for reading in a terminal.
pub fn write_table(records: &[OutputRecord], mut w: impl Write) -> io::Result<()> {
    let keys = columns(records);
    let mut header = keys.clone();
    header.push("value".into());
    let body = rows(records, &keys);
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            body.iter()
                .map(|r| r[i].chars().count())
                .chain([header[i].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in std::iter::once(&header).chain(&body) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &wd)| format!("{c:>wd$}"))
            .collect();
        writeln!(w, "{}", line.join("  ").trim_end())?;
    }
    Ok(())
}

pub fn write_records(records: &[OutputRecord], format: Format, w: impl Write) -> io::Result<()> {
    match format {
        Format::Table => write_table(records, w),
        Format::Json => write_json(records, w),
        Format::Csv => write_csv(records, w),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn sample() -> Vec<OutputRecord> {
        vec![
            OutputRecord::new("chi-compact", Rational::from(42), "K2 closed form")
                .input("genus", 2)
                .input("n", 2),
            OutputRecord::new("chi-compact", q(181, 6), "K2 closed form")
                .input("genus", 2)
                .input("n", 3),
        ]
    }

    #[test]
    fn json_schema_and_round_trip() {
        let mut buf = Vec::new();
        write_json(&sample(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"value\": \"181/6\""));
        let back: Vec<OutputRecord> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, sample());
        let list = OutputRecord::list("p", vec![q(-3, 1), q(1, 2)], "oracle");
        let v = serde_json::to_value(&list).unwrap();
        assert_eq!(v["value"], serde_json::json!(["-3", "1/2"]));
    }

    #[test]
    fn csv_rows() {
        let mut buf = Vec::new();
        write_csv(&sample(), &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "genus,n,value\n2,2,42\n2,3,181/6\n");
    }

    #[test]
    fn table_is_aligned() {
        let mut buf = Vec::new();
        write_table(&sample(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "genus  n  value");
        assert_eq!(lines[2], "    2  3  181/6");
    }

    #[test]
    fn mixed_kinds_get_a_kind_column() {
        let records = vec![
            OutputRecord::new("tree-count", Rational::from(26), "enumeration").input("n", 4),
            OutputRecord::new("tree-sum", Rational::from(7), "enumeration").input("n", 4),
        ];
        let mut buf = Vec::new();
        write_csv(&records, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "kind,n,value\ntree-count,4,26\ntree-sum,4,7\n");
    }
}
