//! Text formats for instances.
//!
//! Canonical instance file (UTF-8):
//!
//! ```text
//! # optional comment lines start with '#'
//! W N H_max          (H_max = 0 means unlimited)
//! k c1 c2 ... ck     (one line per stack: height, then containers bottom to top)
//! ```
//!
//! Tokens are whitespace-separated decimal integers and the file ends with a
//! newline.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{Bay, Container, HeightLimit, Instance};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> Result<Vec<Line<'_>>> {
    if !text.is_empty() && !text.ends_with('\n') {
        let last = text.lines().count();
        let col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
        return Err(parse_err(last, col, "missing trailing newline"));
    }
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in raw.char_indices().chain(std::iter::once((raw.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &raw[s..col],
                        column: raw[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        out.push(Line {
            number: i + 1,
            tokens,
        });
    }
    Ok(out)
}

fn int(line: &Line<'_>, tok: &Token<'_>, what: &str) -> Result<usize> {
    tok.text
        .parse::<usize>()
        .map_err(|_| parse_err(line.number, tok.column, format!("expected {what}, found `{}`", tok.text)))
}

/// Reads the stack lines shared by both formats and checks container
/// numbers as they arrive.
fn read_stacks(
    lines: &[Line<'_>],
    width: usize,
    n: usize,
    h_max: HeightLimit,
    header_line: usize,
) -> Result<Bay> {
    if lines.len() < width {
        let at = lines.last().map_or(header_line, |l| l.number);
        return Err(parse_err(
            at,
            1,
            format!("expected {width} stack lines, found {}", lines.len()),
        ));
    }
    if let Some(extra) = lines.get(width) {
        return Err(parse_err(extra.number, 1, "unexpected line after the last stack"));
    }
    let mut seen = vec![false; n];
    let mut stacks = Vec::with_capacity(width);
    for line in &lines[..width] {
        let Some((first, rest)) = line.tokens.split_first() else {
            return Err(parse_err(line.number, 1, "empty stack line"));
        };
        let k = int(line, first, "a stack height")?;
        if rest.len() != k {
            return Err(parse_err(
                line.number,
                first.column,
                format!("stack height {k} but {} containers listed", rest.len()),
            ));
        }
        if !h_max.admits(k) {
            return Err(parse_err(
                line.number,
                first.column,
                format!("height violation: {k} containers exceed H_max = {h_max}"),
            ));
        }
        let mut stack = Vec::with_capacity(k);
        for tok in rest {
            let c = int(line, tok, "a container number")?;
            if c == 0 || c > n {
                return Err(parse_err(line.number, tok.column, format!("unknown container {c}")));
            }
            if std::mem::replace(&mut seen[c - 1], true) {
                return Err(parse_err(line.number, tok.column, format!("duplicate container {c}")));
            }
            stack.push(c as Container);
        }
        stacks.push(stack);
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        let at = lines[width - 1].number;
        return Err(parse_err(at, 1, format!("missing container {}", missing + 1)));
    }
    Ok(Bay::new(stacks))
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let lines = content_lines(text)?;
    let Some((header, body)) = lines.split_first() else {
        return Err(parse_err(1, 1, "missing header `W N H_max`"));
    };
    if header.tokens.len() != 3 {
        return Err(parse_err(
            header.number,
            1,
            format!("malformed header: expected `W N H_max`, found {} fields", header.tokens.len()),
        ));
    }
    let width = int(header, &header.tokens[0], "the stack count W")?;
    let n = int(header, &header.tokens[1], "the container count N")?;
    let h_max = HeightLimit::from_file_value(int(header, &header.tokens[2], "H_max")?);
    if width == 0 {
        return Err(parse_err(header.number, header.tokens[0].column, "W must be at least 1"));
    }
    let bay = read_stacks(body, width, n, h_max, header.number)?;
    Instance::new(h_max, bay).map_err(|e| parse_err(header.number, 1, e.to_string()))
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} {}",
        inst.width(),
        inst.n_containers(),
        inst.h_max().as_file_value()
    );
    for stack in inst.bay().stacks() {
        let _ = write!(out, "{}", stack.len());
        for c in stack {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    out
}

/// Reader for the layout used by the classic small benchmark archives: a
/// `W N` header followed by one `k c1 ... ck` line per stack, bottom to top.
/// Those files carry no height limit, so the caller supplies it.
pub fn parse_caserta(text: &str, h_max: HeightLimit) -> Result<Instance> {
    let mut owned = text.to_string();
    if !owned.ends_with('\n') {
        owned.push('\n');
    }
    let lines = content_lines(&owned)?;
    let Some((header, body)) = lines.split_first() else {
        return Err(parse_err(1, 1, "missing header `W N`"));
    };
    if header.tokens.len() != 2 {
        return Err(parse_err(header.number, 1, "malformed header: expected `W N`"));
    }
    let width = int(header, &header.tokens[0], "the stack count W")?;
    let n = int(header, &header.tokens[1], "the container count N")?;
    if width == 0 {
        return Err(parse_err(header.number, header.tokens[0].column, "W must be at least 1"));
    }
    let bay = read_stacks(body, width, n, h_max, header.number)?;
    Instance::new(h_max, bay).map_err(|e| parse_err(header.number, 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::running_example_instance;

    #[test]
    fn running_example_roundtrip() {
        let inst = running_example_instance();
        let text = write_instance(&inst);
        assert_eq!(text, "3 5 3\n2 1 3\n2 2 4\n1 5\n");
        assert_eq!(&parse_instance(&text).unwrap(), inst.as_ref());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# five containers\n3 5 0\n\n2 1 3\n  # middle\n2 2 4\n1 5\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.h_max(), HeightLimit::Unlimited);
        assert_eq!(write_instance(&inst), "3 5 0\n2 1 3\n2 2 4\n1 5\n");
    }

    fn err_of(text: &str) -> (usize, usize, String) {
        match parse_instance(text) {
            Err(Error::Parse {
                line,
                column,
                message,
            }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_container() {
        let (line, col, msg) = err_of("3 5 3\n2 1 3\n2 2 7\n1 5\n");
        assert_eq!((line, col), (3, 5));
        assert_eq!(msg, "unknown container 7");
    }

    #[test]
    fn diagnostics() {
        assert!(err_of("3 5\n").2.contains("malformed header"));
        assert!(err_of("3 5 3\n2 1 3\n2 2 4\n1 5").2.contains("trailing newline"));
        assert!(err_of("3 5 3\n2 1 3\n2 2 3\n1 5\n").2.contains("duplicate container 3"));
        assert!(err_of("3 5 3\n2 1 3\n2 2 4\n2 5\n").2.contains("stack height 2 but 1"));
        assert!(err_of("3 5 3\n2 1 3\n2 2 4\n0\n").2.contains("missing container 5"));
        assert!(err_of("3 4 3\n2 1 3\n2 2 4\n1 5\n").2.contains("unknown container 5"));
        assert!(err_of("3 6 3\n2 1 3\n2 2 4\n1 5\n").2.contains("missing container 6"));
        assert!(err_of("2 5 2\n3 1 3 2\n2 4 5\n").2.contains("height violation"));
        assert!(err_of("3 5 3\n2 1 3\n2 2 4\n").2.contains("expected 3 stack lines"));
        assert!(err_of("1 1 0\n1 1\n1 2\n").2.contains("unexpected line"));
        assert!(err_of("3 x 3\n").2.contains("`x`"));
        assert!(err_of("").2.contains("missing header"));
    }

    #[test]
    fn caserta_adapter() {
        let inst = parse_caserta("3 5\n2 1 3\n2 2 4\n1 5", HeightLimit::Bounded(3)).unwrap();
        assert_eq!(&inst, running_example_instance().as_ref());
    }
}
