//! Line-oriented presentation files.
//!
//! ```text
//! # comment
//! vertices: 1 2 ... n
//! arrow <name>: <v> -> <w>
//! zero: a.b.c          (traversal order: a first, then b, then c)
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{natural_key, Path, Quiver, QuiverPresentation, ValidateError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: unknown vertex `{name}`")]
    UnknownVertex { line: usize, name: String },
    #[error("line {line}: unknown arrow `{name}`")]
    UnknownArrow { line: usize, name: String },
    #[error("line {line}: path `{path}` does not compose (`{at}` does not start where the previous arrow ends)")]
    NotComposable { line: usize, path: String, at: String },
    #[error("line {line}: forbidden path `{path}` must have length >= 2")]
    RelationTooShort { line: usize, path: String },
    #[error("line {line}: {source}")]
    Structure {
        line: usize,
        #[source]
        source: ValidateError,
    },
    #[error("missing `vertices:` line")]
    MissingVertices,
}

fn is_ident(s: &str) -> bool {
    !s.is_empty()
        && s.chars().next().unwrap().is_ascii_alphanumeric()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses a presentation file. Total over the grammar; every failure carries
/// a line number.
pub fn parse_presentation(text: &str) -> Result<QuiverPresentation, ParseError> {
    let mut vertex_labels: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relation_lines: Vec<(usize, Vec<String>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |col: usize, msg: &str| ParseError::Syntax {
            line: line_no,
            col,
            msg: msg.to_string(),
        };
        if let Some(rest) = line.strip_prefix("vertices:") {
            let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            for l in &labels {
                if !is_ident(l) {
                    return Err(syntax(raw.find(l.as_str()).unwrap_or(0) + 1, "invalid vertex label"));
                }
            }
            if vertex_labels.replace(labels).is_some() {
                return Err(syntax(1, "duplicate `vertices:` line"));
            }
        } else if let Some(rest) = line.strip_prefix("arrow") {
            let rest = rest.trim_start();
            let Some((name, decl)) = rest.split_once(':') else {
                return Err(syntax(1, "expected `arrow <name>: <v> -> <w>`"));
            };
            let name = name.trim();
            if !is_ident(name) {
                return Err(syntax(1, "invalid arrow name"));
            }
            let Some((src, tgt)) = decl.split_once("->") else {
                return Err(syntax(1, "expected `->` in arrow declaration"));
            };
            let (src, tgt) = (src.trim().to_string(), tgt.trim().to_string());
            if !is_ident(&src) || !is_ident(&tgt) {
                return Err(syntax(1, "invalid vertex label in arrow declaration"));
            }
            arrows.push((name.to_string(), src, tgt));
        } else if let Some(rest) = line.strip_prefix("zero:") {
            let lit = rest.trim();
            if lit.is_empty() {
                return Err(syntax(1, "empty path literal"));
            }
            let parts: Vec<String> = lit.split('.').map(|s| s.trim().to_string()).collect();
            for p in &parts {
                if !is_ident(p) {
                    return Err(syntax(1, "invalid arrow name in path literal"));
                }
            }
            relation_lines.push((line_no, parts));
        } else {
            return Err(syntax(1, "expected `vertices:`, `arrow`, or `zero:`"));
        }
    }

    let vertex_labels = vertex_labels.ok_or(ParseError::MissingVertices)?;
    let declared: HashMap<String, ()> = vertex_labels.iter().map(|l| (l.clone(), ())).collect();
    for (name, src, tgt) in &arrows {
        for v in [src, tgt] {
            if !declared.contains_key(v) {
                let line = 1 + text
                    .lines()
                    .position(|l| l.contains(name.as_str()) && l.trim_start().starts_with("arrow"))
                    .unwrap_or(0);
                return Err(ParseError::UnknownVertex { line, name: v.clone() });
            }
        }
    }
    let quiver = Quiver::new(vertex_labels, arrows)
        .map_err(|source| ParseError::Structure { line: 1, source })?;

    let mut relations = Vec::new();
    for (line, parts) in relation_lines {
        let lit = parts.join(".");
        if parts.len() < 2 {
            return Err(ParseError::RelationTooShort { line, path: lit });
        }
        let mut ids = Vec::with_capacity(parts.len());
        for name in &parts {
            match quiver.arrow_id(name) {
                Some(a) => ids.push(a),
                None => return Err(ParseError::UnknownArrow { line, name: name.clone() }),
            }
        }
        let start = quiver.source(ids[0]);
        let mut at = start;
        for &a in &ids {
            if quiver.source(a) != at {
                return Err(ParseError::NotComposable {
                    line,
                    path: lit.clone(),
                    at: quiver.arrow_name(a).to_string(),
                });
            }
            at = quiver.target(a);
        }
        relations.push(Path::new(&quiver, start, ids).unwrap());
    }
    relations.sort();
    relations.dedup();
    Ok(QuiverPresentation { quiver, relations })
}

/// Canonical text form; `parse_presentation(format_presentation(p)) == p`.
pub fn format_presentation(pres: &QuiverPresentation) -> String {
    let q = &pres.quiver;
    let mut out = String::new();
    let mut labels: Vec<&str> = q.vertices().map(|v| q.label(v)).collect();
    labels.sort_by_key(|l| natural_key(l));
    writeln!(out, "vertices: {}", labels.join(" ")).unwrap();
    for a in q.arrows() {
        writeln!(
            out,
            "arrow {}: {} -> {}",
            q.arrow_name(a),
            q.label(q.source(a)),
            q.label(q.target(a))
        )
        .unwrap();
    }
    for r in &pres.relations {
        writeln!(out, "zero: {}", r.display(q)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_e23_counts() {
        let pres = parse_presentation(fixtures::E23_TEXT).unwrap();
        assert_eq!(pres.quiver.vertex_count(), 2);
        assert_eq!(pres.quiver.arrow_count(), 3);
        assert_eq!(pres.relations.len(), 3);
    }

    #[test]
    fn roundtrip_is_identity() {
        for text in [
            fixtures::E4_TEXT,
            fixtures::E17_TEXT,
            fixtures::E18_TEXT,
            fixtures::E23_TEXT,
            fixtures::E24_TEXT,
        ] {
            let pres = parse_presentation(text).unwrap();
            let formatted = format_presentation(&pres);
            assert_eq!(parse_presentation(&formatted).unwrap(), pres);
        }
    }

    #[test]
    fn unknown_arrow_in_relation() {
        let text = "vertices: 1 2\narrow a: 1 -> 2\nzero: a.z\n";
        match parse_presentation(text) {
            Err(ParseError::UnknownArrow { name, line }) => {
                assert_eq!(name, "z");
                assert_eq!(line, 3);
            }
            other => panic!("expected UnknownArrow, got {other:?}"),
        }
    }

    #[test]
    fn short_relation_rejected() {
        let text = "vertices: 1 2\narrow a: 1 -> 2\nzero: a\n";
        assert!(matches!(
            parse_presentation(text),
            Err(ParseError::RelationTooShort { line: 3, .. })
        ));
    }

    #[test]
    fn malformed_line_reports_position() {
        let text = "vertices: 1\nnonsense here\n";
        assert!(matches!(parse_presentation(text), Err(ParseError::Syntax { line: 2, .. })));
    }

    #[test]
    fn trivial_algebra_parses() {
        let pres = parse_presentation("vertices: 1\n").unwrap();
        assert_eq!(pres.quiver.vertex_count(), 1);
        assert_eq!(pres.quiver.arrow_count(), 0);
        assert!(pres.relations.is_empty());
    }
}
