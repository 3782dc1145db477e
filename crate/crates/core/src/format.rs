//! Text formats for matrices and certificates.
//!
//! Matrix file:
//!
//! ```text
//! t0matrix <k> <m> <n>
//! <n tokens>        (m lines)
//! ```
//!
//! A token is `*` for zero or a nonnegative decimal exponent `e` for
//! `ζ_k^e` (reduced mod `k`). Blank lines are skipped and `#` starts a comment
//! running to the end of the line. A matrix with `n = 0` has no row lines.
//!
//! Certificate file:
//!
//! ```text
//! t0certificate <k> <m> <n>
//! perm: p0 … p(m-1)
//! diag: e0 … e(m-1)
//! perm: q0 … q(n-1)
//! diag: f0 … f(n-1)
//! ```
//!
//! The first pair is the left factor `M1`, the second the right factor
//! `M2`. For each factor, column `i` holds its single nonzero entry
//! `ζ^diag[i]` in row `perm[i]`: row `i` of the input moves to row
//! `perm[i]` under `M1`, and column `perm[i]` of the input becomes column
//! `i` under `M2`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::group::{Entry, GroupSpec};
use crate::matrix::{MonomialMatrix, T0Matrix};
use crate::standardize::Certificate;

pub const MATRIX_MAGIC: &str = "t0matrix";
pub const CERTIFICATE_MAGIC: &str = "t0certificate";

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, each split into tokens carrying
/// their 1-based positions.
fn content_lines(text: &str) -> Vec<(usize, Vec<Token<'_>>)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut offset = 0;
        for piece in content.split_whitespace() {
            let start = content[offset..].find(piece).unwrap() + offset;
            offset = start + piece.len();
            tokens.push(Token {
                text: piece,
                line: idx + 1,
                column: content[..start].chars().count() + 1,
            });
        }
        if !tokens.is_empty() {
            out.push((idx + 1, tokens));
        }
    }
    out
}

fn parse_number<T: std::str::FromStr>(token: &Token<'_>, what: &str) -> Result<T> {
    if !token.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_error(token.line, token.column, format!("{what}: expected a nonnegative integer, found {:?}", token.text)));
    }
    token
        .text
        .parse()
        .map_err(|_| parse_error(token.line, token.column, format!("{what}: {:?} is out of range", token.text)))
}

fn parse_header(
    lines: &[(usize, Vec<Token<'_>>)],
    magic: &str,
) -> Result<(u32, usize, usize)> {
    let Some((line, tokens)) = lines.first() else {
        return Err(parse_error(1, 1, format!("missing \"{magic} k m n\" header")));
    };
    if tokens[0].text != magic {
        return Err(parse_error(*line, tokens[0].column, format!("expected header \"{magic} k m n\"")));
    }
    if tokens.len() != 4 {
        let col = tokens.last().map_or(1, |t| t.column);
        return Err(parse_error(*line, col, format!("header needs 3 numbers after {magic}, found {}", tokens.len() - 1)));
    }
    let k: u32 = parse_number(&tokens[1], "group order")?;
    if k == 0 {
        return Err(parse_error(*line, tokens[1].column, "group order must be at least 1"));
    }
    let m = parse_number(&tokens[2], "row count")?;
    let n = parse_number(&tokens[3], "column count")?;
    Ok((k, m, n))
}

fn last_position(text: &str) -> (usize, usize) {
    let lines: Vec<&str> = text.lines().collect();
    let line = lines.len().max(1);
    let column = lines.last().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

pub fn parse_matrix(text: &str) -> Result<T0Matrix> {
    let lines = content_lines(text);
    let (k, m, n) = parse_header(&lines, MATRIX_MAGIC)?;
    let group = GroupSpec::new(k)?;
    let body = &lines[1..];
    let expected_lines = if n == 0 { 0 } else { m };
    if body.len() < expected_lines {
        let (line, column) = last_position(text);
        return Err(parse_error(line, column, format!("expected {m} rows, found {}", body.len())));
    }
    if let Some((line, tokens)) = body.get(expected_lines) {
        return Err(parse_error(*line, tokens[0].column, format!("unexpected content after {m} rows")));
    }
    let mut entries = Vec::with_capacity(m * n);
    for (line, tokens) in body {
        if tokens.len() != n {
            let col = tokens.get(n).map_or_else(|| tokens.last().unwrap().column, |t| t.column);
            return Err(parse_error(*line, col, format!("expected {n} entries, found {}", tokens.len())));
        }
        for token in tokens {
            if token.text == "*" {
                entries.push(Entry::Zero);
            } else {
                let e: u64 = parse_number(token, "entry")?;
                entries.push(group.unit(e));
            }
        }
    }
    T0Matrix::new(k, m, n, entries)
}

pub fn format_matrix(a: &T0Matrix) -> String {
    let mut out = format!("{MATRIX_MAGIC} {} {} {}\n", a.order(), a.rows(), a.cols());
    if a.cols() > 0 {
        out.push_str(&a.to_string());
    }
    out
}

fn parse_labelled<'a>(
    entry: Option<&(usize, Vec<Token<'a>>)>,
    label: &str,
    len: usize,
    fallback: (usize, usize),
) -> Result<Vec<u64>> {
    let Some((line, tokens)) = entry else {
        return Err(parse_error(fallback.0, fallback.1, format!("missing \"{label}\" line")));
    };
    if tokens[0].text != label {
        return Err(parse_error(*line, tokens[0].column, format!("expected \"{label}\"")));
    }
    let values = &tokens[1..];
    if values.len() != len {
        return Err(parse_error(*line, tokens[0].column, format!("{label} expects {len} values, found {}", values.len())));
    }
    values.iter().map(|t| parse_number(t, label)).collect()
}

fn parse_factor(
    lines: &[(usize, Vec<Token<'_>>)],
    at: usize,
    k: u32,
    size: usize,
    fallback: (usize, usize),
) -> Result<MonomialMatrix> {
    let perm = parse_labelled(lines.get(at), "perm:", size, fallback)?;
    let diag = parse_labelled(lines.get(at + 1), "diag:", size, fallback)?;
    let (line, tokens) = &lines[at];
    let perm: Vec<usize> = perm.into_iter().map(|p| p as usize).collect();
    let diag = diag
        .into_iter()
        .map(|d| u32::try_from(d).ok().filter(|&d| d < k))
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| parse_error(lines[at + 1].0, 1, format!("diagonal exponents must be below {k}")))?;
    MonomialMatrix::new(k, perm, diag).map_err(|e| parse_error(*line, tokens[0].column, e.to_string()))
}

pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let lines = content_lines(text);
    let (k, m, n) = parse_header(&lines, CERTIFICATE_MAGIC)?;
    let fallback = last_position(text);
    let left = parse_factor(&lines, 1, k, m, fallback)?;
    let right = parse_factor(&lines, 3, k, n, fallback)?;
    if let Some((line, tokens)) = lines.get(5) {
        return Err(parse_error(*line, tokens[0].column, "unexpected content after certificate"));
    }
    Ok(Certificate { left, right })
}

fn write_factor(out: &mut String, m: &MonomialMatrix) {
    out.push_str("perm:");
    for p in m.perm() {
        write!(out, " {p}").unwrap();
    }
    out.push_str("\ndiag:");
    for d in m.diag() {
        write!(out, " {d}").unwrap();
    }
    out.push('\n');
}

pub fn format_certificate(cert: &Certificate) -> String {
    let mut out = format!(
        "{CERTIFICATE_MAGIC} {} {} {}\n",
        cert.left.order(),
        cert.left.size(),
        cert.right.size()
    );
    write_factor(&mut out, &cert.left);
    write_factor(&mut out, &cert.right);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err(text: &str) -> (usize, usize) {
        match parse_matrix(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_with_comments_and_reduction() {
        let text = "# header follows\nt0matrix 4 2 3\n\n0 5 *  # second entry reduces to 1\n* 3 2\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(a.shape(), (2, 3));
        assert_eq!(a.row(0), &[Entry::Unit(0), Entry::Unit(1), Entry::Zero]);
        assert_eq!(format_matrix(&a), "t0matrix 4 2 3\n0 1 *\n* 3 2\n");
    }

    #[test]
    fn empty_shapes() {
        for (m, n) in [(0, 0), (3, 0), (0, 2)] {
            let a = T0Matrix::zeros(5, m, n).unwrap();
            let text = format_matrix(&a);
            assert_eq!(parse_matrix(&text).unwrap(), a);
        }
        assert_eq!(format_matrix(&T0Matrix::zeros(1, 0, 0).unwrap()), "t0matrix 1 0 0\n");
    }

    #[test]
    fn error_positions() {
        assert_eq!(parse_err(""), (1, 1));
        assert_eq!(parse_err("matrix 2 1 1\n0\n"), (1, 1));
        assert_eq!(parse_err("t0matrix 0 1 1\n0\n"), (1, 10));
        assert_eq!(parse_err("t0matrix 2 1\n"), (1, 12));
        assert_eq!(parse_err("t0matrix 2 2 2\n0 1\n"), (2, 4));
        assert_eq!(parse_err("t0matrix 2 1 2\n0 x\n"), (2, 3));
        assert_eq!(parse_err("t0matrix 2 1 2\n0 -1\n"), (2, 3));
        assert_eq!(parse_err("t0matrix 2 1 2\n0 1 1\n"), (2, 5));
        assert_eq!(parse_err("t0matrix 2 1 2\n0\n"), (2, 1));
        assert_eq!(parse_err("t0matrix 2 1 2\n0 1\n1 1\n"), (3, 1));
        assert_eq!(parse_err("t0matrix 2 1 1\n99999999999999999999999\n"), (2, 1));
    }

    #[test]
    fn certificate_roundtrip() {
        let cert = Certificate {
            left: MonomialMatrix::new(4, vec![2, 0, 1], vec![1, 0, 3]).unwrap(),
            right: MonomialMatrix::new(4, vec![1, 0], vec![2, 2]).unwrap(),
        };
        let text = format_certificate(&cert);
        assert_eq!(text, "t0certificate 4 3 2\nperm: 2 0 1\ndiag: 1 0 3\nperm: 1 0\ndiag: 2 2\n");
        assert_eq!(parse_certificate(&text).unwrap(), cert);
        let empty = Certificate::identity(3, 0, 0);
        assert_eq!(parse_certificate(&format_certificate(&empty)).unwrap(), empty);
    }

    #[test]
    fn certificate_errors() {
        assert!(matches!(
            parse_certificate("t0certificate 4 2 1\nperm: 0 0\ndiag: 0 0\nperm: 0\ndiag: 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_certificate("t0certificate 4 1 1\nperm: 0\ndiag: 4\nperm: 0\ndiag: 0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_certificate("t0certificate 4 1 1\nperm: 0\ndiag: 0\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_certificate("t0certificate 4 1 1\ndiag: 0\nperm: 0\nperm: 0\ndiag: 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
