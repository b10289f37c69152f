//! Solution files: one move per line, `R src dst` for a relocation and
//! `V src` for a retrieval, 1-based stacks, `#` starts a comment line.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::model::{Instance, Move, Solution};

/// Parses the move list. Legality is left to [`crate::model::validate`].
pub fn parse_solution(instance: Arc<Instance>, text: &str) -> Result<Solution> {
    let mut moves = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let column = raw.len() - raw.trim_start().len() + 1;
        let err = |message: String| Error::Parse {
            line,
            column,
            message,
        };
        let stack = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("expected a stack number, found `{s}`")))
        };
        let mv = match fields.as_slice() {
            ["R", from, to] => Move::Relocate {
                from: stack(from)?,
                to: stack(to)?,
            },
            ["V", from] => Move::Retrieve { from: stack(from)? },
            _ => return Err(err(format!("expected `R src dst` or `V src`, found `{trimmed}`"))),
        };
        moves.push(mv);
    }
    Ok(Solution::new(instance, moves))
}

pub fn write_solution(sol: &Solution) -> String {
    let mut out = String::new();
    for mv in sol.moves() {
        match *mv {
            Move::Relocate { from, to } => {
                let _ = writeln!(out, "R {from} {to}");
            }
            Move::Retrieve { from } => {
                let _ = writeln!(out, "V {from}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::{running_example_instance, running_example_solution};

    #[test]
    fn roundtrip() {
        let sol = running_example_solution();
        let text = write_solution(&sol);
        assert!(text.starts_with("R 1 2\nV 1\nR 2 3\n"));
        assert_eq!(parse_solution(sol.instance().clone(), &text).unwrap(), sol);
    }

    #[test]
    fn comments_and_errors() {
        let inst = running_example_instance();
        let sol = parse_solution(inst.clone(), "# start\nR 1 3\n\nV 1\n").unwrap();
        assert_eq!(sol.moves().len(), 2);
        match parse_solution(inst.clone(), "V 1\nX 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        assert!(parse_solution(inst, "R 1\n").is_err());
    }
}
