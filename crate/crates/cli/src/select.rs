//! Algebra selectors: `--type D4`, or `--type D --rank 4`, plus the realization.

use std::fmt;

use kirillov::construct::{CartanType, SimpleAlgebra};
use serde::Serialize;

use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Realization {
    Matrix,
    Chevalley,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSpec {
    pub ty: CartanType,
    pub realization: Realization,
}

impl AlgebraSpec {
    pub fn new(ty: CartanType, realization: Realization) -> CliResult<Self> {
        if realization == Realization::Matrix && ty.classical().is_none() {
            return Err(CliError::Usage(format!(
                "{ty} has no matrix realization; use --basis chevalley"
            )));
        }
        Ok(AlgebraSpec { ty, realization })
    }

    /// Matrix realization for classical types, Chevalley basis otherwise.
    pub fn natural(ty: CartanType) -> Self {
        let realization = if ty.classical().is_some() {
            Realization::Matrix
        } else {
            Realization::Chevalley
        };
        AlgebraSpec { ty, realization }
    }

    pub fn matrix(ty: &str) -> Self {
        Self::new(ty.parse().expect("static type label"), Realization::Matrix).expect("classical")
    }

    pub fn chevalley(ty: &str) -> Self {
        AlgebraSpec {
            ty: ty.parse().expect("static type label"),
            realization: Realization::Chevalley,
        }
    }

    pub fn build(&self) -> kirillov::Result<SimpleAlgebra> {
        match self.realization {
            Realization::Matrix => SimpleAlgebra::matrix(self.ty.classical().expect("checked at construction")),
            Realization::Chevalley => SimpleAlgebra::chevalley(self.ty),
        }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = match self.realization {
            Realization::Matrix => "matrix",
            Realization::Chevalley => "chevalley",
        };
        write!(f, "{}/{r}", self.ty)
    }
}

/// Accepts `"D4"` alone, or a family letter together with a rank.
pub fn parse_type(ty: &str, rank: Option<usize>) -> CliResult<CartanType> {
    let ty = ty.trim();
    let label = match (ty.chars().any(|c| c.is_ascii_digit()), rank) {
        (true, None) => ty.to_string(),
        (true, Some(_)) => return Err(CliError::Usage(format!("--rank given twice for type {ty}"))),
        (false, Some(r)) => format!("{ty}{r}"),
        (false, None) => return Err(CliError::Usage(format!("type {ty} needs --rank"))),
    };
    label
        .parse()
        .map_err(|e: kirillov::Error| CliError::Usage(e.to_string()))
}

pub fn spec_for(ty: CartanType, basis: Option<Realization>) -> CliResult<AlgebraSpec> {
    match basis {
        Some(r) => AlgebraSpec::new(ty, r),
        None => Ok(AlgebraSpec::natural(ty)),
    }
}
