//! Plain-text matrix files.
//!
//! ```text
//! 2 2
//! 0 1,-0.5
//! 1e-3 2
//! ```
//!
//! The first line holds the row and column counts, then one line per row of
//! whitespace-separated tokens, each `re` or `re,im`. Blank lines and lines
//! starting with `#` are skipped.

use std::path::Path;

use specbound::{Complex, ComplexMatrix};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum InputError {
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("empty matrix file")]
    Empty,
    #[error("line {line}: expected header `rows cols`, got `{text}`")]
    Header { line: usize, text: String },
    #[error("line {line}, column {column}: bad entry `{token}`")]
    Token {
        line: usize,
        column: usize,
        token: String,
    },
    #[error("line {line}, column {column}: entry is not finite")]
    NonFinite { line: usize, column: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub fn parse_matrix_file(path: &Path) -> Result<ComplexMatrix, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_matrix_str(&text)
}

fn parse_entry(token: &str, line: usize, column: usize) -> Result<Complex, InputError> {
    let bad = || InputError::Token {
        line,
        column,
        token: token.to_string(),
    };
    let (re, im) = match token.split_once(',') {
        Some((re, im)) => (re, im),
        None => (token, "0"),
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    if !re.is_finite() || !im.is_finite() {
        return Err(InputError::NonFinite { line, column });
    }
    Ok(Complex::new(re, im))
}

/// Parses the file format; the matrix must be square.
pub fn parse_matrix_str(text: &str) -> Result<ComplexMatrix, InputError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(InputError::Empty)?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| InputError::Header {
            line: header_line,
            text: header.to_string(),
        })?;
    let [rows, cols] = dims[..] else {
        return Err(InputError::Header {
            line: header_line,
            text: header.to_string(),
        });
    };
    if rows == 0 || cols == 0 {
        return Err(InputError::Dimension(format!("{rows}x{cols} matrix is empty")));
    }
    if rows != cols {
        return Err(InputError::Dimension(format!("matrix must be square, got {rows}x{cols}")));
    }

    let mut data = Vec::with_capacity(rows * cols);
    let mut seen = 0;
    for (line, text) in lines {
        seen += 1;
        if seen > rows {
            return Err(InputError::Dimension(format!(
                "line {line}: more than {rows} rows"
            )));
        }
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != cols {
            return Err(InputError::Dimension(format!(
                "line {line}: expected {cols} entries, got {}",
                tokens.len()
            )));
        }
        for (c, token) in tokens.iter().enumerate() {
            data.push(parse_entry(token, line, c + 1)?);
        }
    }
    if seen < rows {
        return Err(InputError::Dimension(format!("expected {rows} rows, got {seen}")));
    }
    ComplexMatrix::from_row_major(rows, cols, data)
        .map_err(|e| InputError::Dimension(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nilpotent_two_by_two() {
        let a = parse_matrix_str("2 2\n0 1\n0 0\n").unwrap();
        assert_eq!(a[(0, 1)], Complex::new(1.0, 0.0));
        assert_eq!(a[(1, 0)], Complex::new(0.0, 0.0));
    }

    #[test]
    fn complex_and_scientific_tokens() {
        let a = parse_matrix_str("# comment\n2 2\n\n1e-3 0,1\n-2.5,3E2 4\n").unwrap();
        assert_eq!(a[(0, 0)], Complex::new(1e-3, 0.0));
        assert_eq!(a[(0, 1)], Complex::new(0.0, 1.0));
        assert_eq!(a[(1, 0)], Complex::new(-2.5, 300.0));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_matrix_str(""), Err(InputError::Empty));
        assert_eq!(parse_matrix_str("  \n# x\n"), Err(InputError::Empty));
        assert!(matches!(parse_matrix_str("2\n"), Err(InputError::Header { line: 1, .. })));
        assert_eq!(
            parse_matrix_str("2 2\n1 x\n0 0\n"),
            Err(InputError::Token { line: 2, column: 2, token: "x".into() })
        );
        assert_eq!(
            parse_matrix_str("2 2\n1 1\n0 1,nan\n"),
            Err(InputError::NonFinite { line: 3, column: 2 })
        );
        assert!(matches!(parse_matrix_str("2 2\n1 inf\n0 0\n"), Err(InputError::NonFinite { .. })));
        assert!(matches!(parse_matrix_str("2 3\n1 2 3\n4 5 6\n"), Err(InputError::Dimension(_))));
        assert!(matches!(parse_matrix_str("2 2\n1 2\n"), Err(InputError::Dimension(_))));
        assert!(matches!(parse_matrix_str("2 2\n1 2\n3 4\n5 6\n"), Err(InputError::Dimension(_))));
        assert!(matches!(parse_matrix_str("2 2\n1 2 3\n3 4\n"), Err(InputError::Dimension(_))));
        assert!(matches!(parse_matrix_str("2 2\n1 2,3,4\n3 4\n"), Err(InputError::Token { .. })));
    }
}
