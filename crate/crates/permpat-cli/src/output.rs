use std::fmt::Write as _;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    /// `n value` lines, one term per line.
    Bfile,
}

/// What a subcommand produces. Numbers are carried as decimal strings so
/// that every format prints them exactly.
#[derive(Clone, Debug)]
pub enum Output {
    /// Terms indexed from `offset`, with optional notes shown in text mode.
    Sequence {
        offset: usize,
        values: Vec<String>,
        notes: Vec<(String, String)>,
    },
    /// Ordered key/value fields.
    Record(Vec<(String, String)>),
    /// Rows under a header.
    Table {
        header: Vec<String>,
        rows: Vec<Vec<String>>,
    },
    /// Plain lines; only the text format applies.
    Lines(Vec<String>),
}

impl Output {
    pub fn sequence(offset: usize, values: impl IntoIterator<Item = impl ToString>) -> Self {
        Output::Sequence {
            offset,
            values: values.into_iter().map(|v| v.to_string()).collect(),
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, key: &str, value: impl ToString) -> Self {
        if let Output::Sequence { notes, .. } = &mut self {
            notes.push((key.to_string(), value.to_string()));
        }
        self
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let mut s = String::new();
        match (self, format) {
            (Output::Sequence { values, notes, .. }, Format::Text) => {
                for (k, v) in notes {
                    writeln!(s, "{k}: {v}")?;
                }
                writeln!(s, "{}", values.join(","))?;
            }
            (Output::Sequence { offset, values, .. }, Format::Bfile) => {
                for (i, v) in values.iter().enumerate() {
                    writeln!(s, "{} {v}", offset + i)?;
                }
            }
            (Output::Sequence { offset, values, .. }, Format::Csv) => {
                writeln!(s, "n,value")?;
                for (i, v) in values.iter().enumerate() {
                    writeln!(s, "{},{v}", offset + i)?;
                }
            }
            (
                Output::Sequence {
                    offset,
                    values,
                    notes,
                },
                Format::Json,
            ) => {
                let mut m = Map::new();
                for (k, v) in notes {
                    m.insert(k.clone(), json!(v));
                }
                m.insert("offset".into(), json!(offset));
                m.insert("values".into(), json!(values));
                writeln!(s, "{}", Value::Object(m))?;
            }
            (Output::Record(fields), Format::Text) => {
                for (k, v) in fields {
                    writeln!(s, "{k}: {v}")?;
                }
            }
            (Output::Record(fields), Format::Csv) => {
                writeln!(s, "key,value")?;
                for (k, v) in fields {
                    writeln!(s, "{k},{}", csv_field(v))?;
                }
            }
            (Output::Record(fields), Format::Json) => {
                let m: Map<String, Value> =
                    fields.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                writeln!(s, "{}", Value::Object(m))?;
            }
            (Output::Table { header, rows }, Format::Text | Format::Csv) => {
                let sep = if format == Format::Csv { "," } else { " " };
                writeln!(s, "{}", header.join(sep))?;
                for r in rows {
                    let cells: Vec<String> = r
                        .iter()
                        .map(|c| {
                            if format == Format::Csv {
                                csv_field(c)
                            } else {
                                c.clone()
                            }
                        })
                        .collect();
                    writeln!(s, "{}", cells.join(sep))?;
                }
            }
            (Output::Table { header, rows }, Format::Json) => {
                let objs: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        Value::Object(
                            header
                                .iter()
                                .cloned()
                                .zip(r.iter().map(|c| json!(c)))
                                .collect(),
                        )
                    })
                    .collect();
                writeln!(s, "{}", Value::Array(objs))?;
            }
            (Output::Lines(lines), Format::Text) => {
                for l in lines {
                    writeln!(s, "{l}")?;
                }
            }
            (Output::Lines(lines), Format::Json) => {
                writeln!(s, "{}", json!(lines))?;
            }
            (_, f) => bail!("format {f:?} does not apply to this output"),
        }
        Ok(s)
    }
}

fn csv_field(v: &str) -> String {
    if v.contains([',', '"', '\n']) {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_formats() {
        let o = Output::sequence(1, [1, 2, 4]).with_note("gf", "x");
        assert_eq!(o.render(Format::Text).unwrap(), "gf: x\n1,2,4\n");
        assert_eq!(o.render(Format::Bfile).unwrap(), "1 1\n2 2\n3 4\n");
        assert_eq!(o.render(Format::Csv).unwrap(), "n,value\n1,1\n2,2\n3,4\n");
        assert_eq!(
            o.render(Format::Json).unwrap(),
            "{\"gf\":\"x\",\"offset\":1,\"values\":[\"1\",\"2\",\"4\"]}\n"
        );
    }

    #[test]
    fn records_and_tables() {
        let r = Output::Record(vec![("a".into(), "1,2".into())]);
        assert_eq!(r.render(Format::Csv).unwrap(), "key,value\na,\"1,2\"\n");
        assert!(r.render(Format::Bfile).is_err());
        let t = Output::Table {
            header: vec!["x".into(), "y".into()],
            rows: vec![vec!["1".into(), "2".into()]],
        };
        assert_eq!(t.render(Format::Text).unwrap(), "x y\n1 2\n");
        assert_eq!(
            t.render(Format::Json).unwrap(),
            "[{\"x\":\"1\",\"y\":\"2\"}]\n"
        );
    }
}
