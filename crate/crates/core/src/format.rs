//! Line-oriented text formats for structures, maps and subsets.
//!
//! Structure file:
//!
//! ```text
//! # optional comments
//! n=3
//! cover: 0,1;1,2
//! ```
//!
//! Map file:
//!
//! ```text
//! n=3
//! m=2
//! map: 0->0,1->1,2->1
//! ```

use crate::covers::{Cover, GroundSet, Subset};
use crate::error::{Error, Result};
use crate::structures::{MerotopicStructure, SetMap};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_header(line: usize, text: &str, key: &str) -> Result<GroundSet> {
    let value = text
        .strip_prefix(key)
        .and_then(|rest| rest.trim_start().strip_prefix('='))
        .ok_or_else(|| parse_error(line, format!("expected `{key}=<int>`")))?;
    let n: usize = value
        .trim()
        .parse()
        .map_err(|_| parse_error(line, format!("`{}` is not a size", value.trim())))?;
    GroundSet::new(n).map_err(|e| parse_error(line, e.to_string()))
}

/// Parses a comma-separated element list; the empty string is `∅`.
pub fn parse_subset(ground: GroundSet, text: &str) -> Result<Subset> {
    parse_subset_at(0, ground, text)
}

fn parse_subset_at(line: usize, ground: GroundSet, text: &str) -> Result<Subset> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Subset::EMPTY);
    }
    let elements = text
        .split(',')
        .map(|e| {
            e.trim()
                .parse::<usize>()
                .map_err(|_| parse_error(line, format!("`{}` is not an element index", e.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    ground
        .subset(elements)
        .map_err(|e| parse_error(line, e.to_string()))
}

/// Reads a structure file and generates the structure from its covers.
/// Covers need not be canonical and need not be wedge-closed.
pub fn parse_structure(text: &str) -> Result<MerotopicStructure> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n=<int>` line"))?;
    let ground = parse_header(first, header, "n")?;
    let mut gens = Vec::new();
    for (line, content) in lines {
        let body = content.strip_prefix("cover:").ok_or_else(|| {
            parse_error(line, format!("expected `cover: ...`, found `{content}`"))
        })?;
        let blocks = body
            .split(';')
            .map(|b| parse_subset_at(line, ground, b))
            .collect::<Result<Vec<_>>>()?;
        gens.push(Cover::canonicalize(ground, blocks)?);
    }
    MerotopicStructure::generate(ground, &gens)
}

/// Canonical text of a structure: one `cover:` line per basis cover.
pub fn serialize_structure(mu: &MerotopicStructure) -> String {
    let mut out = format!("n={}\n", mu.ground().len());
    for cover in mu.basis() {
        out.push_str(&format!("cover: {cover}\n"));
    }
    out
}

pub fn parse_map(text: &str) -> Result<SetMap> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n=<int>` line"))?;
    let domain = parse_header(line, header, "n")?;
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_error(line + 1, "missing `m=<int>` line"))?;
    let codomain = parse_header(line, header, "m")?;
    let (line, content) = lines
        .next()
        .ok_or_else(|| parse_error(line + 1, "missing `map:` line"))?;
    let body = content
        .strip_prefix("map:")
        .ok_or_else(|| parse_error(line, format!("expected `map: ...`, found `{content}`")))?;
    let mut images = Vec::with_capacity(domain.len());
    for (expected, pair) in body.split(',').enumerate() {
        let (x, y) = pair
            .split_once("->")
            .ok_or_else(|| parse_error(line, format!("`{}` is not `x->y`", pair.trim())))?;
        let x: usize = x
            .trim()
            .parse()
            .map_err(|_| parse_error(line, format!("`{}` is not an index", x.trim())))?;
        if x != expected {
            return Err(parse_error(
                line,
                format!("expected domain index {expected}, found {x}"),
            ));
        }
        let y: usize = y
            .trim()
            .parse()
            .map_err(|_| parse_error(line, format!("`{}` is not an index", y.trim())))?;
        images.push(y);
    }
    if let Some((line, extra)) = lines.next() {
        return Err(parse_error(line, format!("unexpected `{extra}`")));
    }
    SetMap::new(domain, codomain, images).map_err(|e| parse_error(line, e.to_string()))
}

pub fn serialize_map(f: &SetMap) -> String {
    format!(
        "n={}\nm={}\nmap: {f}\n",
        f.domain().len(),
        f.codomain().len()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> GroundSet {
        GroundSet::new(n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let mu = parse_structure("n=3\ncover: 0,1;1,2").unwrap();
        let expected = Cover::canonicalize(
            g(3),
            [g(3).subset([0, 1]).unwrap(), g(3).subset([1, 2]).unwrap()],
        )
        .unwrap();
        assert_eq!(mu, MerotopicStructure::generate(g(3), &[expected]).unwrap());

        let discrete = parse_structure("n=2\ncover: 0;1\ncover: 0,1").unwrap();
        assert_eq!(discrete, MerotopicStructure::discrete(g(2)));

        assert_eq!(parse_structure("n=2\ncover: 0"), Err(Error::NotACover));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_structure("# c\nn=3\n\ncover: 0,1;5"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_structure("cover: 0"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_structure("n=0"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_structure("n=2\ncovers: 0;1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_structure("n=2\ncover: 0;x"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(parse_structure("n=2\n"), Err(Error::EmptyGenerators));
    }

    #[test]
    fn comments_and_empty_blocks() {
        let mu = parse_structure("# a comment\nn=2\n# another\ncover: 0,1;\n").unwrap();
        assert_eq!(mu, MerotopicStructure::indiscrete(g(2)));
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(
            serialize_structure(&MerotopicStructure::indiscrete(g(2))),
            "n=2\ncover: 0,1\n"
        );
        assert_eq!(
            serialize_structure(&MerotopicStructure::discrete(g(2))),
            "n=2\ncover: 0;1\n"
        );
        assert_eq!(
            serialize_structure(&parse_structure("n=3\ncover: 1,2;0,1").unwrap()),
            "n=3\ncover: 0,1;1,2\n"
        );
    }

    #[test]
    fn map_format() {
        let f = parse_map("n=3\nm=2\nmap: 0->0,1->1,2->1\n").unwrap();
        assert_eq!(f.images(), &[0, 1, 1]);
        assert_eq!(serialize_map(&f), "n=3\nm=2\nmap: 0->0,1->1,2->1\n");
        assert!(matches!(
            parse_map("n=2\nm=2\nmap: 1->0,0->1"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_map("n=2\nm=2\nmap: 0->0"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_map("n=2\nm=2\nmap: 0->0,1->2"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_map("n=2\nmap: 0->0,1->0"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn subset_parsing() {
        assert_eq!(parse_subset(g(3), "").unwrap(), Subset::EMPTY);
        assert_eq!(
            parse_subset(g(3), "2, 0").unwrap(),
            g(3).subset([0, 2]).unwrap()
        );
        assert!(parse_subset(g(3), "3").is_err());
    }
}
