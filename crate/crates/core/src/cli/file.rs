//! The facet-list text format.
//!
//! ```text
//! # octahedron
//! dim=2
//! 0 2 4
//! 0 2 5
//! ```
//!
//! `#` starts a comment, every other nonblank line is one facet given by
//! whitespace-separated labels, and an optional `dim=<k>` line is checked
//! against the parsed complex. A line holding only `{}` is the empty face.

use std::fmt::Write as _;

use crate::complex::{Label, SimplicialComplex};
use crate::error::{Error, Result};

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Vec<Label>> = Vec::new();
    let mut declared: Option<(usize, isize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(k) = line.strip_prefix("dim=") {
            let k: isize = k
                .trim()
                .parse()
                .map_err(|_| Error::Parse { line: i + 1, message: format!("bad dimension header '{line}'") })?;
            if declared.replace((i + 1, k)).is_some() {
                return Err(Error::Parse { line: i + 1, message: "second dim= header".into() });
            }
            continue;
        }
        if line == "{}" {
            facets.push(Vec::new());
            continue;
        }
        let face: Vec<Label> = line.split_whitespace().map(Label::parse).collect();
        let mut sorted = face.clone();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse { line: i + 1, message: format!("vertex {} repeated in a facet", w[0]) });
        }
        facets.push(face);
    }
    let complex = SimplicialComplex::from_facets(facets)?;
    if let Some((line, k)) = declared {
        if complex.dim() != Some(k) {
            let got = complex.dim().map_or("undefined".to_string(), |d| d.to_string());
            return Err(Error::Parse { line, message: format!("header says dim={k} but the facets give {got}") });
        }
    }
    Ok(complex)
}

/// Canonical text: comment lines, the `dim=` header, then facets with labels
/// ascending and facets in lexicographic label order.
pub fn write_complex(complex: &SimplicialComplex, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    if let Some(d) = complex.dim() {
        let _ = writeln!(out, "dim={d}");
    }
    let mut rows: Vec<Vec<&Label>> = complex
        .facets()
        .iter()
        .map(|f| {
            let mut r: Vec<&Label> = f.vertices().map(|v| complex.label(v)).collect();
            r.sort();
            r
        })
        .collect();
    rows.sort();
    for r in rows {
        if r.is_empty() {
            out.push_str("{}\n");
        } else {
            let words: Vec<String> = r.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", words.join(" "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_canonical() {
        let text = "# t\n 3 1 2\n\n2 4 3 # tail\n";
        let c = parse_complex(text).unwrap();
        let canon = write_complex(&c, &[]);
        assert_eq!(canon, "dim=2\n1 2 3\n2 3 4\n");
        assert_eq!(write_complex(&parse_complex(&canon).unwrap(), &[]), canon);
    }

    #[test]
    fn named_labels_and_header() {
        let c = parse_complex("dim=1\nb a\nc b\n").unwrap();
        assert_eq!(c.n(), 3);
        assert!(matches!(parse_complex("dim=2\na b\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_complex("a b\na a\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_complex("dim=x\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_face_line() {
        let c = parse_complex("{}\n").unwrap();
        assert!(c.is_empty_complex());
        assert_eq!(write_complex(&c, &[]), "dim=-1\n{}\n");
        assert!(parse_complex("# nothing\n").unwrap().is_void());
    }
}
