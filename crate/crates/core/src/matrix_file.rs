//! Plain-text integer matrix files.
//!
//! ```text
//! 4
//! 0 1 1 1
//! 1 0 1 1
//! 1 1 0 1
//! 1 1 1 0
//! ```
//!
//! The first line holds the order `n`, followed by `n` rows of `n`
//! whitespace-separated signed decimal integers of any size. LF and CRLF line
//! endings are both accepted, as are trailing blank lines.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;
use crate::ring::{Ring, RingValue};

/// A parsed matrix file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixFile {
    pub matrix: SymmetricMatrix,
    /// Rows whose nonzero diagonal entry was replaced by zero.
    pub zeroed_diagonal: Vec<usize>,
}

fn parse_int(token: &str, line: usize) -> Result<BigInt> {
    token
        .parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("line {line}: `{token}` is not a decimal integer")))
}

pub fn parse(text: &str) -> Result<MatrixFile> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("line {first_no}: expected the matrix order, got `{first}`")))?;

    let mut rows = Vec::with_capacity(n);
    let mut zeroed_diagonal = Vec::new();
    for (line_no, line) in lines.by_ref() {
        if rows.len() == n {
            if line.is_empty() {
                continue;
            }
            return Err(Error::Parse(format!(
                "line {line_no}: unexpected content after {n} rows"
            )));
        }
        let row = line
            .split_whitespace()
            .map(|t| parse_int(t, line_no))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Parse(format!(
                "line {line_no}: expected {n} entries, found {}",
                row.len()
            )));
        }
        let i = rows.len();
        if row[i] != BigInt::ZERO {
            zeroed_diagonal.push(i);
        }
        rows.push(row.into_iter().map(RingValue::Integer).collect());
    }
    if rows.len() != n {
        return Err(Error::Parse(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    let matrix = SymmetricMatrix::new(Ring::Integer, rows)?;
    Ok(MatrixFile {
        matrix,
        zeroed_diagonal,
    })
}

/// Renders an integer matrix in the file format, LF line endings.
///
/// # Panics
///
/// If the matrix is not over the integers.
pub fn render(matrix: &SymmetricMatrix) -> String {
    assert_eq!(matrix.ring(), &Ring::Integer, "only integer matrices have a file form");
    let mut out = format!("{}\n", matrix.order());
    out.push_str(&matrix.to_string());
    out
}
