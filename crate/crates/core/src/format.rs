//! The "mat v1" text encoding.
//!
//! Layout: optional comment lines starting with `#`, then a line holding the
//! order `n`, then `n` lines of `n` space-separated integer tokens. A comment
//! of the form `# labels: a b c ...` attaches one name per row. Writers emit
//! exactly this shape (single spaces, trailing newline); readers reject
//! ragged rows and trailing garbage.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{BinMatrix, IntMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// No non-comment content.
    Empty,
    /// The order line did not parse as a positive integer.
    BadOrder { line: usize },
    /// A row token did not parse as an integer.
    BadToken { line: usize, token: String },
    /// A row had the wrong number of tokens.
    RaggedRow { line: usize, expected: usize, got: usize },
    /// Fewer rows than the declared order.
    MissingRows { expected: usize, got: usize },
    /// Non-comment content after the last row.
    TrailingContent { line: usize },
    /// An entry outside {0,1} where a (0,1)-matrix was required.
    NotBinary { row: usize, col: usize },
    /// The label comment does not have one name per row.
    BadLabels { expected: usize, got: usize },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "no matrix content"),
            ParseError::BadOrder { line } => write!(f, "line {line}: bad order"),
            ParseError::BadToken { line, token } => {
                write!(f, "line {line}: bad token {token:?}")
            }
            ParseError::RaggedRow { line, expected, got } => {
                write!(f, "line {line}: expected {expected} tokens, got {got}")
            }
            ParseError::MissingRows { expected, got } => {
                write!(f, "expected {expected} rows, got {got}")
            }
            ParseError::TrailingContent { line } => {
                write!(f, "line {line}: content after last row")
            }
            ParseError::NotBinary { row, col } => {
                write!(f, "entry ({row},{col}) is not 0 or 1")
            }
            ParseError::BadLabels { expected, got } => {
                write!(f, "labels comment has {got} names for {expected} rows")
            }
        }
    }
}

impl core::error::Error for ParseError {}

/// Parsed matrix plus the optional row labels.
#[derive(Debug, Clone)]
pub struct ParsedMat {
    pub matrix: IntMatrix,
    pub labels: Option<Vec<String>>,
}

impl ParsedMat {
    /// Converts to a bit matrix, rejecting entries outside {0,1}.
    pub fn to_bin(&self) -> Result<BinMatrix, ParseError> {
        BinMatrix::from_int(&self.matrix).map_err(|e| match e {
            MatrixError::NotBinary { row, col } => ParseError::NotBinary { row, col },
            MatrixError::BadOrder { n } => ParseError::BadOrder { line: n },
            _ => ParseError::Empty,
        })
    }
}

/// Parses mat v1 text.
pub fn parse(text: &str) -> Result<ParsedMat, ParseError> {
    let mut labels: Option<Vec<String>> = None;
    let mut n: Option<usize> = None;
    let mut rows: Vec<Vec<i64>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(names) = comment.strip_prefix("labels:") {
                labels = Some(names.split_whitespace().map(|s| s.to_string()).collect());
            }
            continue;
        }
        match n {
            None => {
                let order: usize = line
                    .parse()
                    .map_err(|_| ParseError::BadOrder { line: line_no })?;
                if order == 0 {
                    return Err(ParseError::BadOrder { line: line_no });
                }
                n = Some(order);
            }
            Some(order) => {
                if rows.len() == order {
                    return Err(ParseError::TrailingContent { line: line_no });
                }
                let mut row = Vec::with_capacity(order);
                for token in line.split_whitespace() {
                    let v: i64 = token.parse().map_err(|_| ParseError::BadToken {
                        line: line_no,
                        token: token.to_string(),
                    })?;
                    row.push(v);
                }
                if row.len() != order {
                    return Err(ParseError::RaggedRow {
                        line: line_no,
                        expected: order,
                        got: row.len(),
                    });
                }
                rows.push(row);
            }
        }
    }

    let n = n.ok_or(ParseError::Empty)?;
    if rows.len() != n {
        return Err(ParseError::MissingRows {
            expected: n,
            got: rows.len(),
        });
    }
    if let Some(ref names) = labels {
        if names.len() != n {
            return Err(ParseError::BadLabels {
                expected: n,
                got: names.len(),
            });
        }
    }
    let matrix = IntMatrix::from_rows(&rows).expect("rows validated");
    Ok(ParsedMat { matrix, labels })
}

/// Parses mat v1 text that must be a (0,1)-matrix.
pub fn parse_bin(text: &str) -> Result<(BinMatrix, Option<Vec<String>>), ParseError> {
    let parsed = parse(text)?;
    let bin = parsed.to_bin()?;
    Ok((bin, parsed.labels))
}

/// Renders mat v1 text; `labels`, when given, is emitted as a leading
/// `# labels:` comment.
pub fn render(m: &IntMatrix, labels: Option<&[&str]>) -> String {
    let mut out = String::new();
    if let Some(names) = labels {
        out.push_str("# labels:");
        for name in names {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
    }
    out.push_str(&format!("{}\n", m.n()));
    for i in 0..m.n() {
        for j in 0..m.n() {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&m.get(i, j).to_string());
        }
        out.push('\n');
    }
    out
}

pub fn render_bin(m: &BinMatrix, labels: Option<&[&str]>) -> String {
    render(&m.to_int(), labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_labels() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let text = render(&m, Some(&["a", "b"]));
        assert_eq!(text, "# labels: a b\n2\n0 1\n1 0\n");
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed.matrix, m);
        assert_eq!(
            parsed.labels,
            Some(vec!["a".to_string(), "b".to_string()])
        );
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = parse("2\n0 1\n1\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::RaggedRow {
                line: 3,
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn rejects_trailing_content() {
        let err = parse("1\n0\n7\n").unwrap_err();
        assert_eq!(err, ParseError::TrailingContent { line: 3 });
    }

    #[test]
    fn rejects_missing_rows() {
        let err = parse("3\n0 0 0\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::MissingRows {
                expected: 3,
                got: 1
            }
        );
    }

    #[test]
    fn binary_rejects_twos() {
        let err = parse_bin("1\n2\n").unwrap_err();
        assert_eq!(err, ParseError::NotBinary { row: 0, col: 0 });
    }

    #[test]
    fn comments_are_skipped() {
        let parsed = parse("# a comment\n1\n# between\n5\n").unwrap();
        assert_eq!(parsed.matrix.get(0, 0), 5);
        assert_eq!(parsed.labels, None);
    }
}
