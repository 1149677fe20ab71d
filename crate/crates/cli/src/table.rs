//! Row/column tables and their markdown, csv and json encodings.

use serde_json::{json, Value};

use crate::Format;

/// A labelled grid of pre-rendered cells; empty strings are blank cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Md => self.to_markdown(),
            Format::Csv => self.to_csv(),
            Format::Json => serde_json::to_string_pretty(&self.to_json()).expect("table serializes"),
        }
    }

    fn to_markdown(&self) -> String {
        let mut out = format!("| {} | {} |\n", self.corner, self.columns.join(" | "));
        out.push_str(&format!("|{}\n", "---|".repeat(self.columns.len() + 1)));
        for (label, cells) in &self.rows {
            out.push_str(&format!("| {} | {} |\n", label, cells.join(" | ")));
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut lines = vec![std::iter::once(&self.corner)
            .chain(&self.columns)
            .map(|c| csv_field(c))
            .collect::<Vec<_>>()
            .join(",")];
        for (label, cells) in &self.rows {
            lines.push(
                std::iter::once(label)
                    .chain(cells)
                    .map(|c| csv_field(c))
                    .collect::<Vec<_>>()
                    .join(","),
            );
        }
        lines.join("\n") + "\n"
    }

    fn to_json(&self) -> Value {
        json!({
            "table": self.name,
            "corner": self.corner,
            "columns": self.columns,
            "rows": self.rows.iter().map(|(label, cells)| json!({"label": label, "cells": cells})).collect::<Vec<_>>(),
        })
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        Table {
            name: "demo".into(),
            corner: "n \\ k".into(),
            columns: vec!["0".into(), "1".into()],
            rows: vec![
                ("0".into(), vec!["1".into(), "".into()]),
                ("1".into(), vec!["1/2".into(), "1/2".into()]),
            ],
        }
    }

    #[test]
    fn markdown_layout() {
        let md = sample().render(Format::Md);
        assert_eq!(md.lines().nth(1).unwrap(), "|---|---|---|");
        assert_eq!(md.lines().nth(3).unwrap(), "| 1 | 1/2 | 1/2 |");
    }

    #[test]
    fn csv_and_json_carry_the_same_cells() {
        let t = sample();
        let csv = t.render(Format::Csv);
        assert_eq!(csv.lines().nth(1).unwrap(), "0,1,");
        let json: Value = serde_json::from_str(&t.render(Format::Json)).unwrap();
        assert_eq!(json["rows"][1]["cells"][0], "1/2");
        assert_eq!(csv_field("x,y"), "\"x,y\"");
    }
}
