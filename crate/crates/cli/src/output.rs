use std::io::{self, Write};

use clap::ValueEnum;
use polar_core::PolarParams;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// One output record: `{command, params, results}`. Counts are decimal
/// strings.
#[derive(Debug, Clone)]
pub struct Record {
    pub command: &'static str,
    pub params: Option<PolarParams>,
    pub results: Map<String, Value>,
}

impl Record {
    pub fn new(command: &'static str, params: Option<PolarParams>) -> Self {
        Record {
            command,
            params,
            results: Map::new(),
        }
    }

    pub fn set(&mut self, key: impl Into<String>, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.into(), value.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let params = match &self.params {
            Some(p) => json!({ "n": p.n(), "s": p.s(), "t": p.t(), "e": p.e() }),
            None => Value::Null,
        };
        json!({ "command": self.command, "params": params, "results": self.results })
    }
}

pub fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(
        items
            .into_iter()
            .map(|x| Value::String(x.to_string()))
            .collect(),
    )
}

fn scalar(v: &Value, sep: &str) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) => items
            .iter()
            .map(|x| scalar(x, sep))
            .collect::<Vec<_>>()
            .join(sep),
        other => other.to_string(),
    }
}

/// `(field, value)` pairs with nested objects flattened to dotted keys.
fn flatten(prefix: &str, map: &Map<String, Value>, sep: &str, out: &mut Vec<(String, String)>) {
    for (k, v) in map {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match v {
            Value::Object(inner) => flatten(&key, inner, sep, out),
            other => out.push((key, scalar(other, sep))),
        }
    }
}

pub struct Emitter<W: Write> {
    format: Format,
    out: W,
    header_written: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        Emitter {
            format,
            out,
            header_written: false,
        }
    }

    pub fn emit(&mut self, r: &Record) -> io::Result<()> {
        let sep = if self.format == Format::Table {
            ", "
        } else {
            ";"
        };
        let mut fields = Vec::new();
        flatten("", &r.results, sep, &mut fields);
        match self.format {
            Format::Json => writeln!(self.out, "{}", r.to_json()),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                if !self.header_written {
                    w.write_record(["command", "n", "s", "t", "e", "field", "value"])?;
                    self.header_written = true;
                }
                let p: [String; 4] = match &r.params {
                    Some(p) => [
                        p.n().to_string(),
                        p.s().to_string(),
                        p.t().to_string(),
                        p.e().to_string(),
                    ],
                    None => Default::default(),
                };
                for (f, v) in fields {
                    w.write_record([r.command, &p[0], &p[1], &p[2], &p[3], &f, &v])?;
                }
                let buf = w.into_inner().map_err(|e| e.into_error())?;
                self.out.write_all(&buf)
            }
            Format::Table => {
                match &r.params {
                    Some(p) => writeln!(
                        self.out,
                        "{} n={} s={} t={} e={}",
                        r.command,
                        p.n(),
                        p.s(),
                        p.t(),
                        p.e()
                    )?,
                    None => writeln!(self.out, "{}", r.command)?,
                }
                let width = fields.iter().map(|(f, _)| f.len()).max().unwrap_or(0);
                for (f, v) in fields {
                    writeln!(self.out, "  {f:<width$}  {v}")?;
                }
                Ok(())
            }
        }
    }
}

impl<W: Write> Emitter<W> {
    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
