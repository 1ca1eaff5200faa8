//! OEIS b-file reader.
//!
//! One `index value` pair per line, separated by whitespace. Blank lines and
//! lines starting with `#` are skipped. Values are decimal integers of any
//! magnitude; indices must be strictly increasing.

use std::path::Path;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BFileError {
    #[error("{source_name}:{line}: {message}")]
    Malformed { source_name: String, line: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub source_name: String,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn parse(source_name: &str, text: &str) -> Result<Self, BFileError> {
        let malformed = |line: usize, message: String| BFileError::Malformed {
            source_name: source_name.to_string(),
            line,
            message,
        };
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut fields = line.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(malformed(line_no, format!("expected `index value`, got {line:?}")));
            };
            let index: i64 = index
                .parse()
                .map_err(|_| malformed(line_no, format!("bad index {index:?}")))?;
            let value: BigInt = value
                .parse()
                .map_err(|_| malformed(line_no, format!("bad value {value:?}")))?;
            if let Some(&(prev, _)) = entries.last() {
                if index <= prev {
                    return Err(malformed(
                        line_no,
                        format!("index {index} does not follow {prev}"),
                    ));
                }
            }
            entries.push((index, value));
        }
        Ok(Self { source_name: source_name.to_string(), entries })
    }

    pub fn read(path: &Path) -> Result<Self, BFileError> {
        let text = std::fs::read_to_string(path).map_err(|e| BFileError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&path.display().to_string(), &text)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
