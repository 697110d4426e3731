//! Text, JSON and DOT representations of posets.
//!
//! Text format:
//!
//! ```text
//! # comment
//! poset 4
//! elements c1 c2 a1 a2
//! cover c1 a1
//! cover c2 a1
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{CoverRelationList, Poset, PosetError};

/// JSON form of a poset; covers are `[lower, upper]` name pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl From<&Poset> for PosetJson {
    fn from(p: &Poset) -> Self {
        let c = p.covers();
        PosetJson {
            n: p.len(),
            elements: p.labels().to_vec(),
            covers: c
                .pairs
                .iter()
                .map(|&(a, b)| [p.label(a).to_owned(), p.label(b).to_owned()])
                .collect(),
        }
    }
}

impl PosetJson {
    pub fn to_poset(&self) -> Result<Poset, PosetError> {
        if self.n != self.elements.len() {
            return Err(PosetError::LabelCount {
                expected: self.n,
                got: self.elements.len(),
            });
        }
        let pairs: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|[a, b]| (a.as_str(), b.as_str()))
            .collect();
        let labels: Vec<&str> = self.elements.iter().map(String::as_str).collect();
        Poset::from_cover_relations(&CoverRelationList::from_named(&labels, &pairs)?)
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> PosetError {
    PosetError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_text(input: &str) -> Result<Poset, PosetError> {
    let mut n: Option<(usize, usize)> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let mut words = line.split_whitespace();
        let Some(keyword) = words.next() else {
            continue;
        };
        let rest: Vec<&str> = words.collect();
        match keyword {
            "poset" => {
                if n.is_some() {
                    return Err(parse_error(line_no, "repeated `poset` header"));
                }
                let [count] = rest[..] else {
                    return Err(parse_error(line_no, "expected `poset <n>`"));
                };
                let count = count.parse::<usize>().map_err(|_| {
                    parse_error(line_no, format!("invalid element count `{count}`"))
                })?;
                n = Some((count, line_no));
            }
            "elements" => {
                let Some((count, _)) = n else {
                    return Err(parse_error(line_no, "`elements` before `poset` header"));
                };
                if labels.is_some() {
                    return Err(parse_error(line_no, "repeated `elements` line"));
                }
                if rest.len() != count {
                    return Err(parse_error(
                        line_no,
                        format!(
                            "header declares {count} elements, line lists {}",
                            rest.len()
                        ),
                    ));
                }
                labels = Some(rest.iter().map(|s| (*s).to_owned()).collect());
            }
            "cover" => {
                let Some(names) = labels.as_ref() else {
                    return Err(parse_error(line_no, "`cover` before `elements` line"));
                };
                let [lo, hi] = rest[..] else {
                    return Err(parse_error(line_no, "expected `cover <lower> <upper>`"));
                };
                let find = |s: &str| {
                    names
                        .iter()
                        .position(|l| l == s)
                        .ok_or_else(|| parse_error(line_no, format!("unknown element `{s}`")))
                };
                pairs.push((find(lo)?, find(hi)?));
            }
            other => return Err(parse_error(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    let Some((_, header_line)) = n else {
        return Err(parse_error(1, "missing `poset <n>` header"));
    };
    let labels = labels.ok_or_else(|| parse_error(header_line, "missing `elements` line"))?;
    Poset::from_cover_relations(&CoverRelationList::with_labels(labels, pairs))
}

pub fn parse_json(input: &str) -> Result<Poset, PosetError> {
    let j: PosetJson = serde_json::from_str(input).map_err(|e| PosetError::Json(e.to_string()))?;
    j.to_poset()
}

/// Parses either format, choosing JSON when the input starts with `{`.
pub fn parse_poset(input: &str) -> Result<Poset, PosetError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn to_text(p: &Poset) -> String {
    let mut out = format!("poset {}\nelements {}\n", p.len(), p.labels().join(" "));
    for (a, b) in p.covers().pairs {
        let _ = writeln!(out, "cover {} {}", p.label(a), p.label(b));
    }
    out
}

pub fn to_json(p: &Poset) -> String {
    serde_json::to_string_pretty(&PosetJson::from(p)).expect("poset JSON is serializable")
}

fn dot_id(s: &str) -> String {
    let escaped = s.replace('\\', "\\\\").replace('"', "\\\"");
    format!("\"{escaped}\"")
}

/// Hasse diagram with edges drawn from lower to upper and one rank per level.
pub fn to_dot(p: &Poset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for level in p.levels() {
        let ids: Vec<String> = level.iter().map(|x| dot_id(p.label(x))).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", ids.join("; "));
    }
    for (a, b) in p.covers().pairs {
        let _ = writeln!(out, "  {} -> {};", dot_id(p.label(a)), dot_id(p.label(b)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FENCE: &str = "# S1 model\nposet 4\nelements c1 c2 a1 a2\ncover c1 a1\ncover c1 a2 # trailing\n\ncover c2 a1\ncover c2 a2\n";

    #[test]
    fn text_roundtrip() {
        let p = parse_text(FENCE).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.covers().pairs.len(), 4);
        assert_eq!(parse_text(&to_text(&p)).unwrap(), p);
    }

    #[test]
    fn json_roundtrip() {
        let p = parse_text(FENCE).unwrap();
        let j = to_json(&p);
        assert!(j.find("\"n\"").unwrap() < j.find("\"elements\"").unwrap());
        assert_eq!(parse_poset(&j).unwrap(), p);
    }

    #[test]
    fn dot_output() {
        let p = parse_text(FENCE).unwrap();
        let d = to_dot(&p);
        assert!(d.contains("rankdir=BT"));
        assert!(d.contains("\"c1\" -> \"a2\";"));
        assert!(d.contains("{ rank=same; \"c1\"; \"c2\"; }"));
    }

    #[test]
    fn text_errors_carry_line_numbers() {
        let e = parse_text("poset 2\nelements a b\ncover a z\n").unwrap_err();
        assert_eq!(
            e,
            PosetError::Parse {
                line: 3,
                message: "unknown element `z`".into()
            }
        );
        assert!(matches!(
            parse_text("poset 3\nelements a b\n"),
            Err(PosetError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_text("elements a\n"),
            Err(PosetError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_text("poset 2\nelements a b\ncover a b\ncover b a\n"),
            Err(PosetError::CycleDetected(_))
        ));
        assert!(matches!(parse_text(""), Err(PosetError::Parse { .. })));
    }

    #[test]
    fn json_errors() {
        assert!(matches!(parse_json("{"), Err(PosetError::Json(_))));
        let bad = r#"{"n":3,"elements":["a","b"],"covers":[]}"#;
        assert!(matches!(
            parse_json(bad),
            Err(PosetError::LabelCount { .. })
        ));
        let unknown = r#"{"n":1,"elements":["a"],"covers":[["a","q"]]}"#;
        assert!(matches!(
            parse_json(unknown),
            Err(PosetError::UnknownElement(_))
        ));
    }
}
