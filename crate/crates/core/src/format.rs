//! Plain-text file formats.
//!
//! ```text
//! tournament 3        hadamard 4
//! 010                 ++++
//! 001                 -+-+
//! 100                 --++
//!                     -+-+
//! ```
//!
//! A header line, then exactly `n` rows of `n` characters. A single final
//! newline is optional; anything else after the last row is rejected.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hadamard::SkewHadamard;
use crate::tournament::{Tournament, MAX_VERTICES};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Splits `text` into header size and body rows, validating the row shape.
fn split_body<'a>(text: &'a str, keyword: &str) -> Result<(usize, Vec<&'a [u8]>)> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = text.split('\n');
    let header = lines.next().unwrap_or("");
    let size = header
        .strip_prefix(keyword)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| parse_err(1, format!("expected header `{keyword} <n>`")))?;
    if size.is_empty()
        || !size.bytes().all(|b| b.is_ascii_digit())
        || (size.len() > 1 && size.starts_with('0'))
    {
        return Err(parse_err(1, format!("bad size `{size}`")));
    }
    let n: usize = size
        .parse()
        .map_err(|_| parse_err(1, format!("bad size `{size}`")))?;
    if n > MAX_VERTICES {
        return Err(parse_err(
            1,
            format!("size {n} exceeds the cap of {MAX_VERTICES}"),
        ));
    }
    let rows: Vec<&[u8]> = lines.map(str::as_bytes).collect();
    if rows.len() < n {
        return Err(parse_err(
            rows.len() + 2,
            format!("expected {n} rows, found {}", rows.len()),
        ));
    }
    if rows.len() > n {
        return Err(parse_err(n + 2, "trailing content after the last row"));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(parse_err(
                i + 2,
                format!("expected {n} characters, found {}", row.len()),
            ));
        }
    }
    Ok((n, rows))
}

impl FromStr for Tournament {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (_, rows) = split_body(text, "tournament")?;
        let mut grid = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let bits = row
                .iter()
                .map(|&c| match c {
                    b'0' => Ok(0u8),
                    b'1' => Ok(1u8),
                    other => Err(parse_err(
                        i + 2,
                        format!("unexpected character {:?}", other as char),
                    )),
                })
                .collect::<Result<Vec<u8>>>()?;
            grid.push(bits);
        }
        Tournament::from_adjacency(&grid)
    }
}

impl fmt::Display for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tournament {}", self.size())?;
        for x in 0..self.size() {
            let row: String = (0..self.size())
                .map(|y| if self.beats(x, y) { '1' } else { '0' })
                .collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

impl FromStr for SkewHadamard {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (_, rows) = split_body(text, "hadamard")?;
        let mut grid = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let signs = row
                .iter()
                .map(|&c| match c {
                    b'+' => Ok(1i8),
                    b'-' => Ok(-1i8),
                    other => Err(parse_err(
                        i + 2,
                        format!("unexpected character {:?}", other as char),
                    )),
                })
                .collect::<Result<Vec<i8>>>()?;
            grid.push(signs);
        }
        SkewHadamard::from_rows(&grid)
    }
}

impl fmt::Display for SkewHadamard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hadamard {}", self.size())?;
        for row in self.to_rows() {
            let line: String = row.iter().map(|&e| if e > 0 { '+' } else { '-' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
