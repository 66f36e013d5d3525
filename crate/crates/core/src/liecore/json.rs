//! The JSON interchange format for algebras:
//! `{"dim": n, "labels": [...], "brackets": [[i, j, [[k, "p/q"], ...]], ...]}`,
//! listing only pairs `i < j` with a nonzero bracket.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::rational::{format_rational, parse_rational};

use super::algebra::{LieAlgebra, SparseVec};

/// `(i, j, [b_i, b_j])` with rational coefficients as strings.
type BracketEntry = (usize, usize, Vec<(usize, String)>);

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    labels: Vec<String>,
    brackets: Vec<BracketEntry>,
}

impl LieAlgebra {
    pub fn to_json(&self) -> String {
        let n = self.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let s = self.structure(i, j);
                if !s.is_empty() {
                    brackets.push((i, j, s.iter().map(|(k, c)| (*k, format_rational(c))).collect()));
                }
            }
        }
        serde_json::to_string(&AlgebraJson {
            dim: n,
            labels: self.labels().to_vec(),
            brackets,
        })
        .expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if raw.labels.len() != raw.dim {
            return Err(Error::Parse(format!("dim {} but {} labels", raw.dim, raw.labels.len())));
        }
        let brackets = raw
            .brackets
            .into_iter()
            .map(|(i, j, terms)| {
                let v = terms
                    .into_iter()
                    .map(|(k, q)| Ok((k, parse_rational(&q)?)))
                    .collect::<Result<SparseVec>>()?;
                Ok((i, j, v))
            })
            .collect::<Result<Vec<_>>>()?;
        LieAlgebra::from_brackets(raw.labels, brackets)
    }
}
