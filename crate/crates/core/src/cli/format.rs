//! Text formats for graphs and the JSON shape of cover certificates.
//!
//! Adjacency files (`.tour`): a line with `n`, then `n` rows of `n`
//! characters from `{0,1}`; row `u`, column `v` is `1` iff `(u, v)` is an arc.
//!
//! Colored files (`.cdg`): a line `n k`, a line of `k` single-character
//! labels separated by spaces, then `n` rows of `n` labels; the diagonal
//! holds the loop colors.

use serde::{Deserialize, Serialize};

use crate::colored::{Color, ColoredCompleteDigraph};
use crate::cover::{CoverCertificate, CoverPart, Provenance};
use crate::digraph::{Digraph, Tournament};
use crate::error::{Error, Result};

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format { line, msg: msg.into() }
}

/// Non-empty lines with trailing whitespace stripped, numbered from 1.
/// Blank lines are only tolerated at the end.
fn content_lines(text: &str) -> Result<Vec<(usize, &str)>> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end())).collect();
    let last = lines.iter().rposition(|(_, l)| !l.is_empty()).map_or(0, |i| i + 1);
    let lines = &lines[..last];
    if let Some((no, _)) = lines.iter().find(|(_, l)| l.is_empty()) {
        return Err(format_err(*no, "unexpected blank line"));
    }
    Ok(lines.to_vec())
}

fn parse_count(line: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| format_err(line, format!("expected a vertex count, found {s:?}")))
}

/// Reads an adjacency matrix; loops are allowed.
pub fn read_digraph(text: &str) -> Result<Digraph> {
    let lines = content_lines(text)?;
    let Some(&(first, header)) = lines.first() else {
        return Err(format_err(1, "empty file"));
    };
    let n = parse_count(first, header.trim())?;
    if lines.len() != n + 1 {
        return Err(format_err(first, format!("expected {n} matrix rows, found {}", lines.len() - 1)));
    }
    let mut arcs = Vec::new();
    for (u, &(no, row)) in lines[1..].iter().enumerate() {
        if row.chars().count() != n {
            return Err(format_err(no, format!("row has {} entries, expected {n}", row.chars().count())));
        }
        for (v, ch) in row.chars().enumerate() {
            match ch {
                '1' => arcs.push((u, v)),
                '0' => {}
                other => return Err(format_err(no, format!("unexpected character {other:?}"))),
            }
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Reads an adjacency matrix and checks it is a tournament.
pub fn read_tournament(text: &str) -> Result<Tournament> {
    let g = read_digraph(text)?;
    Tournament::from_digraph(g).map_err(|e| match e {
        Error::InvalidArgument(msg) => format_err(1, msg),
        other => other,
    })
}

pub fn write_digraph(g: &Digraph) -> String {
    let mut s = format!("{}\n", g.n());
    for u in 0..g.n() {
        s.extend((0..g.n()).map(|v| if g.has_arc(u, v) { '1' } else { '0' }));
        s.push('\n');
    }
    s
}

pub fn read_colored(text: &str) -> Result<ColoredCompleteDigraph> {
    let lines = content_lines(text)?;
    let Some(&(first, header)) = lines.first() else {
        return Err(format_err(1, "empty file"));
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [n, k] = fields[..] else {
        return Err(format_err(first, "expected `n k`"));
    };
    let n = parse_count(first, n)?;
    let k: usize = k.parse().map_err(|_| format_err(first, format!("bad color count {k:?}")))?;
    if !(2..=3).contains(&k) {
        return Err(format_err(first, format!("color count must be 2 or 3, got {k}")));
    }
    let Some(&(pal_no, pal_line)) = lines.get(1) else {
        return Err(format_err(first + 1, "missing palette line"));
    };
    let mut palette = Vec::with_capacity(k);
    for label in pal_line.split_whitespace() {
        let mut chars = label.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => palette.push(c),
            _ => return Err(format_err(pal_no, format!("labels are single characters, found {label:?}"))),
        }
    }
    if palette.len() != k {
        return Err(format_err(pal_no, format!("expected {k} labels, found {}", palette.len())));
    }
    let rows = &lines[2..];
    if rows.len() != n {
        return Err(format_err(pal_no, format!("expected {n} matrix rows, found {}", rows.len())));
    }
    let mut colors = Vec::with_capacity(n * n);
    for &(no, row) in rows {
        if row.chars().count() != n {
            return Err(format_err(no, format!("row has {} entries, expected {n}", row.chars().count())));
        }
        for ch in row.chars() {
            match palette.iter().position(|&p| p == ch) {
                Some(i) => colors.push(Color(i as u8)),
                None => return Err(format_err(no, format!("label {ch:?} not in palette"))),
            }
        }
    }
    ColoredCompleteDigraph::from_fn(n, palette, |u, v| colors[u * n + v]).map_err(|e| match e {
        Error::InvalidArgument(msg) => format_err(pal_no, msg),
        other => other,
    })
}

pub fn write_colored(k: &ColoredCompleteDigraph) -> String {
    let labels: Vec<String> = k.palette().iter().map(|c| c.to_string()).collect();
    let mut s = format!("{} {}\n{}\n", k.n(), labels.len(), labels.join(" "));
    for u in 0..k.n() {
        s.extend((0..k.n()).map(|v| k.label(k.color(u, v))));
        s.push('\n');
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartJson {
    pub color: String,
    pub vertices: Vec<usize>,
}

/// Serialized cover certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub d: usize,
    pub n: usize,
    pub parts: Vec<PartJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Vec<String>>,
}

impl From<&CoverCertificate> for CoverJson {
    fn from(c: &CoverCertificate) -> Self {
        let provenance = c
            .parts
            .iter()
            .map(|p| p.provenance.map(|t| t.tag().to_string()))
            .collect::<Option<Vec<_>>>()
            .filter(|tags| !tags.is_empty());
        CoverJson {
            d: c.d,
            n: c.n,
            parts: c
                .parts
                .iter()
                .map(|p| {
                    let mut vertices = p.vertices.clone();
                    vertices.sort_unstable();
                    PartJson {
                        color: p.color.to_string(),
                        vertices,
                    }
                })
                .collect(),
            provenance,
        }
    }
}

impl TryFrom<CoverJson> for CoverCertificate {
    type Error = Error;

    fn try_from(j: CoverJson) -> Result<Self> {
        if let Some(tags) = &j.provenance {
            if tags.len() != j.parts.len() {
                return Err(format_err(1, "provenance must have one tag per part"));
            }
        }
        let mut parts = Vec::with_capacity(j.parts.len());
        for (i, p) in j.parts.into_iter().enumerate() {
            let mut chars = p.color.chars();
            let color = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(format_err(1, format!("part {i}: color must be one character"))),
            };
            let provenance = match &j.provenance {
                Some(tags) => Some(
                    Provenance::from_tag(&tags[i])
                        .ok_or_else(|| format_err(1, format!("unknown provenance tag {:?}", tags[i])))?,
                ),
                None => None,
            };
            parts.push(CoverPart {
                color,
                vertices: p.vertices,
                provenance,
            });
        }
        Ok(CoverCertificate { d: j.d, n: j.n, parts })
    }
}

pub fn write_cover(c: &CoverCertificate) -> String {
    let mut s = serde_json::to_string_pretty(&CoverJson::from(c)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn read_cover(text: &str) -> Result<CoverCertificate> {
    let j: CoverJson = serde_json::from_str(text)?;
    j.try_into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paradox::paley;

    #[test]
    fn tournament_file() {
        let text = "3\n010\n001\n100\n";
        let t = read_tournament(text).unwrap();
        assert_eq!(t.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(write_digraph(&t), text);
        assert_eq!(read_tournament("3\r\n010\r\n001\r\n100\r\n\r\n").unwrap(), t);
    }

    #[test]
    fn tournament_file_errors() {
        assert!(matches!(read_tournament(""), Err(Error::Format { line: 1, .. })));
        assert!(matches!(read_tournament("x\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(read_tournament("2\n01\n"), Err(Error::Format { .. })));
        assert!(matches!(read_tournament("2\n01\n1\n"), Err(Error::Format { line: 3, .. })));
        assert!(matches!(read_tournament("2\n02\n10\n"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(read_tournament("2\n11\n10\n"), Err(Error::Format { .. })));
        assert!(matches!(read_tournament("2\n00\n00\n"), Err(Error::Format { .. })));
        assert!(matches!(read_tournament("2\n\n01\n10\n"), Err(Error::Format { line: 2, .. })));
        // loops are fine in a plain digraph
        assert!(read_digraph("2\n11\n10\n").unwrap().has_loop(0));
    }

    #[test]
    fn colored_file() {
        let text = "2 2\nR B\nRB\nBB\n";
        let k = read_colored(text).unwrap();
        assert_eq!(k.color(0, 1), Color::BLUE);
        assert_eq!(write_colored(&k), text);
        assert!(read_colored("0 2\nR B\n").unwrap().n() == 0);
        assert!(matches!(read_colored("2 2\nR B\nRX\nBB\n"), Err(Error::Format { line: 3, .. })));
        assert!(matches!(read_colored("2 4\nR B G Y\nRB\nBB\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(read_colored("2 2\nR R\nRR\nRR\n"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(read_colored("2 2\nRB\nRB\nBB\n"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(read_colored("2 2\nR B\nRB\n"), Err(Error::Format { .. })));
    }

    #[test]
    fn cover_json_shape() {
        let c = CoverCertificate {
            d: 2,
            n: 3,
            parts: vec![CoverPart {
                color: 'R',
                vertices: vec![2, 0, 1],
                provenance: Some(Provenance::WPart),
            }],
        };
        let text = write_cover(&c);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"d": 2, "n": 3, "parts": [{"color": "R", "vertices": [0, 1, 2]}], "provenance": ["W-part"]})
        );
        let back = read_cover(&text).unwrap();
        assert_eq!(back.parts[0].vertices, vec![0, 1, 2]);
        let bare = read_cover(r#"{"d":2,"n":1,"parts":[{"color":"B","vertices":[0]}]}"#).unwrap();
        assert_eq!(bare.parts[0].provenance, None);
        assert!(read_cover(r#"{"d":2,"n":1,"parts":[{"color":"BB","vertices":[0]}]}"#).is_err());
        assert!(read_cover(r#"{"d":2,"n":1,"parts":[],"provenance":["whole"]}"#).is_err());
        assert!(read_cover("{").is_err());
    }

    #[test]
    fn paley_round_trip() {
        let t = paley(19).unwrap();
        assert_eq!(read_tournament(&write_digraph(&t)).unwrap(), t);
    }
}
