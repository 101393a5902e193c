use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
    Csv,
}

/// A rectangular report plus an optional JSON rendering that differs from
/// the row-per-object default, and free-form lines printed above a table.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub preamble: Vec<String>,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: Option<Value>,
}

impl Report {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Report { headers: headers.into_iter().map(Into::into).collect(), ..Default::default() }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Table => self.table(),
            ReportFormat::Json => {
                let v = self.json.clone().unwrap_or_else(|| self.rows_as_json());
                let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
                s.push('\n');
                s
            }
            ReportFormat::Csv => self.csv(),
        }
    }

    fn rows_as_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let obj = self
                        .headers
                        .iter()
                        .zip(r)
                        .map(|(h, c)| (h.clone(), cell_json(c)))
                        .collect::<serde_json::Map<_, _>>();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    fn table(&self) -> String {
        let mut out = String::new();
        for line in &self.preamble {
            out.push_str(line);
            out.push('\n');
        }
        if self.headers.is_empty() {
            return out;
        }
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|i| {
                self.rows
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([self.headers[i].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let mut l = String::new();
            for (i, c) in cells.iter().enumerate() {
                if i > 0 {
                    l.push_str("  ");
                }
                let pad = widths[i] - c.chars().count();
                let _ = write!(l, "{}{c}", " ".repeat(pad));
            }
            l.push('\n');
            l
        };
        out.push_str(&line(&self.headers));
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(vec![]);
        w.write_record(&self.headers).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }
}

// integers stay numbers, everything else (including p/q) stays a string
fn cell_json(c: &str) -> Value {
    match c.parse::<i64>() {
        Ok(n) => Value::from(n),
        Err(_) => match c {
            "true" => Value::Bool(true),
            "false" => Value::Bool(false),
            _ => Value::String(c.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(["d", "alpha", "ok"]);
        r.push(["8", "5/2", "true"]);
        r.push(["16", "4", "false"]);
        r
    }

    #[test]
    fn table_is_right_aligned() {
        assert_eq!(sample().render(ReportFormat::Table), " d  alpha     ok\n 8    5/2   true\n16      4  false\n");
    }

    #[test]
    fn json_keeps_rationals_as_strings() {
        let v: Value = serde_json::from_str(&sample().render(ReportFormat::Json)).unwrap();
        assert_eq!(v[0]["d"], Value::from(8));
        assert_eq!(v[0]["alpha"], Value::from("5/2"));
        assert_eq!(v[1]["ok"], Value::Bool(false));
    }

    #[test]
    fn csv_has_header() {
        assert_eq!(sample().render(ReportFormat::Csv), "d,alpha,ok\n8,5/2,true\n16,4,false\n");
    }

    #[test]
    fn rendering_is_deterministic() {
        for f in [ReportFormat::Table, ReportFormat::Json, ReportFormat::Csv] {
            assert_eq!(sample().render(f), sample().render(f));
        }
    }
}
