//! Rendering of matrices and expansions as table, JSON, CSV or LaTeX.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::MultiPoly;
use crate::error::Result;
use crate::expr::parse_poly;
use crate::riordan::LowerTriMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
    Latex,
}

/// A rendered matrix or expansion together with how it was produced.
/// Entries are canonical polynomial strings, so big integers survive JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
    pub flavor: Option<String>,
    pub r: Option<String>,
    #[serde(rename = "N")]
    pub n: usize,
    pub reversed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gf: Option<String>,
    pub rows: Vec<Vec<String>>,
}

impl OutputDoc {
    pub fn matrix(m: &LowerTriMatrix<MultiPoly>) -> Self {
        OutputDoc {
            kind: "matrix".into(),
            family: None,
            which: None,
            flavor: None,
            r: None,
            n: m.size().saturating_sub(1),
            reversed: false,
            gf: None,
            rows: m.rows().iter().map(|row| row.iter().map(|c| c.to_string()).collect()).collect(),
        }
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents serialize") + "\n"
    }

    /// Parses the entries back; ragged rows are padded with zeros.
    pub fn to_matrix(&self) -> Result<LowerTriMatrix<MultiPoly>> {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| parse_poly(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LowerTriMatrix::from_partial_rows(rows)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => render_table(&self.rows),
            Format::Json => self.to_json(),
            Format::Csv => render_csv(&self.rows),
            Format::Latex => render_latex(&self.rows),
        }
    }
}

fn render_table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|k| rows.iter().filter_map(|r| r.get(k)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(rows: &[Vec<String>]) -> String {
    rows.iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|c| format!("\"{}\"", c.replace('"', "\"\""))).collect();
            cells.join(",") + "\n"
        })
        .collect()
}

/// `3*r^2 + 24*r + 16` becomes `3 r^2+24 r+16`.
pub fn latex_entry(entry: &str) -> String {
    entry.replace(" + ", "+").replace(" - ", "-").replace('*', " ")
}

/// A square array with zeros above the diagonal, as matrices are usually
/// typeset.
fn render_latex(rows: &[Vec<String>]) -> String {
    let size = rows.iter().map(Vec::len).max().unwrap_or(0).max(rows.len());
    let mut out = String::from("\\left(\n");
    let _ = writeln!(out, "\\begin{{array}}{{{}}}", "c".repeat(size));
    for row in rows {
        let cells: Vec<String> = (0..size).map(|k| row.get(k).map_or_else(|| "0".into(), |c| latex_entry(c))).collect();
        let _ = writeln!(out, " {} \\\\", cells.join(" & "));
    }
    out.push_str("\\end{array}\n\\right)\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc() -> OutputDoc {
        let rows = vec![vec![MultiPoly::int(1)], vec![MultiPoly::int(2), parse_poly("3r^2+24r+16").unwrap()]];
        OutputDoc::matrix(&LowerTriMatrix::from_rows(rows).unwrap())
    }

    #[test]
    fn table() {
        assert_eq!(doc().render(Format::Table), "1\n2  3*r^2 + 24*r + 16\n");
    }

    #[test]
    fn csv_quotes_entries() {
        assert_eq!(doc().render(Format::Csv), "\"1\"\n\"2\",\"3*r^2 + 24*r + 16\"\n");
    }

    #[test]
    fn latex() {
        let text = doc().render(Format::Latex);
        assert!(text.contains(" 1 & 0 \\\\\n 2 & 3 r^2+24 r+16 \\\\\n"), "{text}");
        assert_eq!(latex_entry("-1/2*r*y - 4"), "-1/2 r y-4");
    }

    #[test]
    fn json_round_trip() {
        let mut d = doc();
        d.rows.push(vec!["123456789012345678901234567890".into(), "0".into(), "1".into()]);
        let back = OutputDoc::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_matrix().unwrap().get(2, 0).to_string(), "123456789012345678901234567890");
        assert!(d.to_json().contains("\"N\":1"));
    }
}
