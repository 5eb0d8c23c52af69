//! Group specification files.
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "generators": [[["0", "-1"], ["1", "-1"]]],
//!   "closure_cap": 10000
//! }
//! ```
//!
//! Entries are integers or strings holding an integer or `p/q`. Floats are
//! rejected so no rounding can creep in.

use serde::{Deserialize, Serialize};

use crate::matrix::RationalMatrix;
use crate::rational::{parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpecFile {
    pub dimension: usize,
    pub generators: Vec<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure_cap: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GroupFileError {
    #[error("invalid group file: {0}")]
    Json(String),
    #[error("generator {generator}: {message}")]
    Shape { generator: usize, message: String },
    #[error(
        "generator {generator}, row {row}, column {column}: '{text}' is not an exact rational"
    )]
    Entry {
        generator: usize,
        row: usize,
        column: usize,
        text: String,
    },
}

impl GroupSpecFile {
    pub fn from_json(text: &str) -> Result<Self, GroupFileError> {
        serde_json::from_str(text).map_err(|e| GroupFileError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_matrices(generators: &[RationalMatrix], closure_cap: Option<usize>) -> Self {
        let dimension = generators.first().map_or(0, RationalMatrix::dim);
        let generators = generators
            .iter()
            .map(|m| {
                m.rows()
                    .map(|row| row.iter().map(|v| Entry::Text(v.to_string())).collect())
                    .collect()
            })
            .collect();
        GroupSpecFile {
            dimension,
            generators,
            closure_cap,
        }
    }

    /// Generator matrices; generator, row and column numbers in errors are
    /// one-based.
    pub fn matrices(&self) -> Result<Vec<RationalMatrix>, GroupFileError> {
        let n = self.dimension;
        let mut out = Vec::with_capacity(self.generators.len());
        for (g, rows) in self.generators.iter().enumerate() {
            let generator = g + 1;
            if rows.len() != n {
                return Err(GroupFileError::Shape {
                    generator,
                    message: format!("has {} rows, expected {}", rows.len(), n),
                });
            }
            let mut parsed: Vec<Vec<Rational>> = Vec::with_capacity(n);
            for (r, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(GroupFileError::Shape {
                        generator,
                        message: format!("row {} has {} entries, expected {}", r + 1, row.len(), n),
                    });
                }
                let mut values = Vec::with_capacity(n);
                for (c, entry) in row.iter().enumerate() {
                    let value = match entry {
                        Entry::Int(v) => Some(Rational::from_integer((*v).into())),
                        Entry::Text(s) => parse_rational(s),
                    };
                    match value {
                        Some(v) => values.push(v),
                        None => {
                            return Err(GroupFileError::Entry {
                                generator,
                                row: r + 1,
                                column: c + 1,
                                text: match entry {
                                    Entry::Int(v) => v.to_string(),
                                    Entry::Text(s) => s.clone(),
                                },
                            })
                        }
                    }
                }
                parsed.push(values);
            }
            out.push(RationalMatrix::new(parsed).expect("shape checked above"));
        }
        Ok(out)
    }
}
