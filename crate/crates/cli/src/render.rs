//! Plain-text and TSV layout helpers.

use std::fmt::Write as _;

/// Left-aligned columns separated by two spaces; the first row is the header.
pub fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut w = vec![0; width];
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            w[i] = w[i].max(c.chars().count());
        }
    }
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r.iter().enumerate().map(|(i, c)| format!("{c:<0$}", w[i])).collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

pub fn tsv(rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(out, "{}", r.join("\t"));
    }
    out
}

/// Header row followed by one row per label.
pub fn matrix(corner: &str, cols: &[String], rows: Vec<(String, Vec<String>)>) -> Vec<Vec<String>> {
    let mut out = vec![std::iter::once(corner.to_string()).chain(cols.iter().cloned()).collect()];
    out.extend(rows.into_iter().map(|(label, cells)| std::iter::once(label).chain(cells).collect()));
    out
}
