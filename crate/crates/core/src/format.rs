//! The line-oriented `DESIGN` text format and colouring files.
//!
//! ```text
//! # comments run to the end of the line
//! DESIGN v 9 k 3
//! GROUPS          (optional)
//! 0 1
//! ...
//! BLOCKS
//! 0 1 2
//! ...
//! RESOLUTION      (optional)
//! CLASS 0 1 2
//! PARTIAL 3 4 5 6
//! ```
//!
//! Block indices in `RESOLUTION` refer to the order of the `BLOCKS` lines.
//! Colouring files hold one line of space-separated colours, or the compact
//! digit form where `'1'..'9'` are colours 0 to 8.

use std::fmt::Write as _;

use thiserror::Error;

use crate::design::{Colour, Colouring, Design, GroupPartition, Point, Resolution, ResolutionClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A parsed design file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DesignFile {
    pub design: Design,
    pub groups: Option<GroupPartition>,
    pub resolution: Option<Resolution>,
}

/// A whitespace-separated token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.number, column, message: message.into() }
    }

    fn numbers(&self, skip: usize, what: &str) -> Result<Vec<u32>, ParseError> {
        self.tokens[skip..]
            .iter()
            .map(|t| {
                t.text.parse::<u32>().map_err(|_| self.err(t.column, format!("expected a {what}, found `{}`", t.text)))
            })
            .collect()
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token { text: &body[s..pos], column: body[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
    })
}

#[derive(PartialEq)]
enum Section {
    Groups,
    Blocks,
    Resolution,
}

pub fn parse_design(text: &str) -> Result<DesignFile, ParseError> {
    let mut it = lines(text);
    let Some(header) = it.next() else {
        return Err(ParseError { line: 1, column: 1, message: "empty input, expected `DESIGN v <v> k <k>`".into() });
    };
    let words: Vec<&str> = header.tokens.iter().map(|t| t.text).collect();
    if words.len() != 5 || words[0] != "DESIGN" || words[1] != "v" || words[3] != "k" {
        return Err(header.err(1, "expected `DESIGN v <v> k <k>`"));
    }
    let v: usize = words[2].parse().map_err(|_| header.err(header.tokens[2].column, "bad point count"))?;
    let k: usize = words[4].parse().map_err(|_| header.err(header.tokens[4].column, "bad block size"))?;

    let mut section: Option<Section> = None;
    let mut groups: Option<Vec<Vec<Point>>> = None;
    let mut blocks: Vec<Vec<Point>> = Vec::new();
    let mut classes: Option<Vec<ResolutionClass>> = None;
    let mut seen_blocks = false;
    let mut groups_line = 0;
    for line in it {
        let head = &line.tokens[0];
        let next = match head.text {
            "GROUPS" if groups.is_none() && !seen_blocks => Some(Section::Groups),
            "BLOCKS" if !seen_blocks => Some(Section::Blocks),
            "RESOLUTION" if seen_blocks && classes.is_none() => Some(Section::Resolution),
            "GROUPS" | "BLOCKS" | "RESOLUTION" => {
                return Err(line.err(head.column, format!("unexpected `{}` section", head.text)))
            }
            _ => None,
        };
        if let Some(s) = next {
            if line.tokens.len() > 1 {
                return Err(line.err(line.tokens[1].column, "section headers take no arguments"));
            }
            match s {
                Section::Groups => {
                    groups = Some(Vec::new());
                    groups_line = line.number;
                }
                Section::Blocks => seen_blocks = true,
                Section::Resolution => classes = Some(Vec::new()),
            }
            section = Some(s);
            continue;
        }
        match section {
            None => return Err(line.err(head.column, "expected a section header")),
            Some(Section::Groups) => {
                let pts = line.numbers(0, "point")?;
                check_points(&line, &pts, 0, v, false)?;
                groups.as_mut().expect("in GROUPS").push(pts);
            }
            Some(Section::Blocks) => {
                let pts = line.numbers(0, "point")?;
                if pts.len() != k {
                    return Err(line.err(head.column, format!("block has {} points, expected {k}", pts.len())));
                }
                check_points(&line, &pts, 0, v, true)?;
                blocks.push(pts);
            }
            Some(Section::Resolution) => {
                let (missing, skip) = match head.text {
                    "CLASS" => (None, 1),
                    "PARTIAL" => {
                        let Some(g) = line.tokens.get(1) else {
                            return Err(line.err(head.column, "PARTIAL needs a group index"));
                        };
                        let g: usize = g.text.parse().map_err(|_| line.err(g.column, "bad group index"))?;
                        (Some(g), 2)
                    }
                    _ => return Err(line.err(head.column, "expected `CLASS` or `PARTIAL`")),
                };
                let idx = line.numbers(skip, "block index")?;
                for (t, &b) in line.tokens[skip..].iter().zip(&idx) {
                    if b as usize >= blocks.len() {
                        return Err(line.err(t.column, format!("block index {b} out of range (0..{})", blocks.len())));
                    }
                }
                let idx = idx.into_iter().map(|b| b as usize).collect();
                classes.as_mut().expect("in RESOLUTION").push(ResolutionClass { blocks: idx, missing_group: missing });
            }
        }
    }
    if !seen_blocks {
        return Err(ParseError {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing BLOCKS section".into(),
        });
    }
    let design = Design::new(v, k, &blocks).map_err(|e| ParseError {
        line: header.number,
        column: 1,
        message: e.to_string(),
    })?;
    let groups = groups.map(|g| GroupPartition::new(v, g)).transpose().map_err(|e| ParseError {
        line: groups_line,
        column: 1,
        message: e.to_string(),
    })?;
    Ok(DesignFile { design, groups, resolution: classes.map(Resolution::new) })
}

fn check_points(line: &Line, pts: &[u32], skip: usize, v: usize, ascending: bool) -> Result<(), ParseError> {
    for (i, &p) in pts.iter().enumerate() {
        let col = line.tokens[skip + i].column;
        if p as usize >= v {
            return Err(line.err(col, format!("point {p} out of range (0..{v})")));
        }
        if pts[..i].contains(&p) {
            return Err(line.err(col, format!("repeated point {p}")));
        }
        if ascending && i > 0 && pts[i - 1] > p {
            return Err(line.err(col, "points must be in ascending order"));
        }
    }
    Ok(())
}

/// Writes a design in the order its blocks are stored, so that block
/// indices in `resolution` stay valid.
pub fn emit_design(design: &Design, groups: Option<&GroupPartition>, resolution: Option<&Resolution>) -> String {
    let mut out = String::new();
    let join = |pts: &mut dyn Iterator<Item = String>| pts.collect::<Vec<_>>().join(" ");
    writeln!(out, "DESIGN v {} k {}", design.v(), design.k()).unwrap();
    if let Some(groups) = groups {
        out.push_str("GROUPS\n");
        for g in groups.groups() {
            writeln!(out, "{}", join(&mut g.iter().map(u32::to_string))).unwrap();
        }
    }
    out.push_str("BLOCKS\n");
    for b in design.blocks() {
        writeln!(out, "{}", join(&mut b.iter().map(u32::to_string))).unwrap();
    }
    if let Some(res) = resolution {
        out.push_str("RESOLUTION\n");
        for class in &res.classes {
            let idx = join(&mut class.blocks.iter().map(usize::to_string));
            match class.missing_group {
                None => writeln!(out, "CLASS {idx}").unwrap(),
                Some(g) => writeln!(out, "PARTIAL {g} {idx}").unwrap(),
            }
        }
    }
    out
}

/// Parses a colouring: space-separated colours, or one token of at least two
/// digits in the compact form. `v` is checked when given.
pub fn parse_colouring(text: &str, v: Option<usize>) -> Result<Colouring, ParseError> {
    let all: Vec<Line> = lines(text).collect();
    let Some(line) = all.first() else {
        return Err(ParseError { line: 1, column: 1, message: "empty colouring".into() });
    };
    if let Some(extra) = all.get(1) {
        return Err(extra.err(1, "a colouring is a single line"));
    }
    let colouring = if line.tokens.len() == 1 && line.tokens[0].text.len() > 1 {
        Colouring::from_digit_string(line.tokens[0].text).map_err(|e| line.err(line.tokens[0].column, e.to_string()))?
    } else {
        let colours: Vec<Colour> = line.numbers(0, "colour")?;
        Colouring::from_colours(colours)
    };
    if let Some(v) = v {
        if colouring.v() != v {
            return Err(line.err(1, format!("colouring has {} entries, the design has {v} points", colouring.v())));
        }
    }
    Ok(colouring)
}

/// One line of space-separated colours.
pub fn emit_colouring(colouring: &Colouring) -> String {
    let mut out = colouring.colours().iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::kts9;

    #[test]
    fn kts9_round_trip() {
        let k = kts9().kts;
        let text = emit_design(&k.design, None, Some(&k.resolution));
        assert!(text.starts_with("DESIGN v 9 k 3\nBLOCKS\n"));
        let back = parse_design(&text).unwrap();
        assert_eq!(back.design, k.design);
        assert_eq!(back.resolution.as_ref(), Some(&k.resolution));
        assert!(back.groups.is_none());
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_design("DESIGN v 3 k 3\nBLOCKS\n0 1 1\n").unwrap_err();
        assert_eq!((err.line, err.column), (3, 5));
        assert!(err.message.contains("repeated"));
        let err = parse_design("# hi\nDESIGN v 3 k 3\nBLOCKS\n0 1 x\n").unwrap_err();
        assert_eq!((err.line, err.column), (4, 5));
        let err = parse_design("DESIGN v 3 k 3\nBLOCKS\n0 1 2\nRESOLUTION\nCLASS 1\n").unwrap_err();
        assert_eq!((err.line, err.column), (5, 7));
        assert!(parse_design("DESIGN v 3\n").is_err());
        assert!(parse_design("DESIGN v 3 k 3\n0 1 2\n").is_err());
    }

    #[test]
    fn groups_and_partial_classes() {
        let text = "DESIGN v 6 k 3 # tiny\nGROUPS\n0 1\n2 3\n4 5\nBLOCKS\n0 2 4\nRESOLUTION\nPARTIAL 0 0\n";
        let f = parse_design(text).unwrap();
        assert_eq!(f.groups.unwrap().len(), 3);
        assert_eq!(f.resolution.unwrap().classes[0].missing_group, Some(0));
    }

    #[test]
    fn colouring_forms() {
        assert_eq!(parse_colouring("0 1 2 0\n", Some(4)).unwrap().colours(), &[0, 1, 2, 0]);
        assert_eq!(parse_colouring("1231", None).unwrap().colours(), &[0, 1, 2, 0]);
        assert!(parse_colouring("0 1", Some(3)).is_err());
        assert!(parse_colouring("1203", None).is_err());
        let c = Colouring::from_colours(vec![2, 0, 1]);
        assert_eq!(parse_colouring(&emit_colouring(&c), Some(3)).unwrap(), c);
    }
}
