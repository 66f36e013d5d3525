//! Exact-arithmetic index computations for Lie algebras.
//!
//! The crate builds semisimple Lie algebras over the rationals (classical matrix
//! realizations and Chevalley bases), their nilpotent elements and sl2-triples, and
//! computes indices of Lie algebras and representations as `dim − generic rank` of the
//! Kirillov pencil. The `nilanalysis` layer assembles per-orbit reports on centralisers,
//! double centralisers and normalisers of nilpotent elements.

#![allow(clippy::needless_range_loop)]

pub mod construct;
pub mod error;
pub mod exactla;
pub mod index;
pub mod liecore;
pub mod nilanalysis;
pub mod par;
pub mod rng;

pub use error::{Error, Result};
pub use rng::RandomCfg;
