//! Plain-text matrix files.
//!
//! Format: a header line `rows cols` (base-10 integers), then `rows`
//! lines of `cols` decimal numbers separated by single spaces. Fixed
//! and scientific notation are both accepted on input; the writer emits
//! 17 significant digits so values round-trip exactly. Lines starting
//! with `#` are comments and are skipped wherever they appear.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::mat::Mat;

/// Parse a matrix from text. Line numbers in errors are 1-based and
/// count every physical line, comments included.
pub fn parse_matrix(text: &str) -> Result<Mat> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_no, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "empty file, expected a 'rows cols' header".into(),
    })?;
    let mut it = header.split_whitespace();
    let rows: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            line: header_no,
            msg: format!("bad header {header:?}, expected 'rows cols'"),
        })?;
    let cols: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            line: header_no,
            msg: format!("bad header {header:?}, expected 'rows cols'"),
        })?;
    if it.next().is_some() {
        return Err(Error::Parse {
            line: header_no,
            msg: "trailing tokens after 'rows cols' header".into(),
        });
    }

    let mut data = Vec::with_capacity(rows * cols);
    for want_row in 0..rows {
        let (line_no, line) = lines.next().ok_or(Error::Parse {
            line: header_no,
            msg: format!("expected {rows} data rows, found {want_row}"),
        })?;
        let mut count = 0;
        for tok in line.split_whitespace() {
            let v: f64 = tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad number {tok:?}"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("non-finite entry {tok:?}"),
                });
            }
            data.push(v);
            count += 1;
        }
        if count != cols {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected {cols} entries, found {count}"),
            });
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse {
            line: line_no,
            msg: "trailing data after the last expected row".into(),
        });
    }
    Ok(Mat::from_vec(rows, cols, data))
}

pub fn read_matrix(path: &Path) -> Result<Mat> {
    let text = fs::read_to_string(path)?;
    parse_matrix(&text)
}

/// Render with 17 significant digits (scientific notation), enough for
/// an exact f64 round trip.
pub fn format_matrix(m: &Mat) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|v| format!("{v:.16e}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_matrix(path: &Path, m: &Mat) -> Result<()> {
    let mut f = fs::File::create(path)?;
    f.write_all(format_matrix(m).as_bytes())?;
    Ok(())
}
