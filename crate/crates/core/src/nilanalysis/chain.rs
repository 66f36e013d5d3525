//! Centraliser, double centraliser and normaliser of a nilpotent element.

use serde::Serialize;

use crate::construct::Sl2Triple;
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::liecore::LieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// `z(e)`
    pub z: Subspace,
    /// `d(e) = z(z(e))`
    pub d: Subspace,
    /// `n(e)`, the normaliser of `z(e)`
    pub n: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainDims {
    pub dim_z: usize,
    pub dim_d: usize,
    pub dim_n: usize,
}

impl Chain {
    pub fn dims(&self) -> ChainDims {
        ChainDims {
            dim_z: self.z.dim(),
            dim_d: self.d.dim(),
            dim_n: self.n.dim(),
        }
    }
}

fn agree(what: &str, a: &Subspace, b: &Subspace) -> Result<()> {
    if a != b {
        return Err(Error::CrossCheckFailed(format!(
            "{what}: dimensions {} and {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(())
}

/// Computes `z`, `d` and `n`, each by independent routes that must coincide:
/// `d` as `z(z(e))` and as the centre of `z(e)`; `n` as the normaliser of `z(e)`,
/// as `{s : [s, e] ∈ d}` and as `z(e) ⊕ [f, d]`.
pub fn centralizer_chain(l: &LieAlgebra, t: &Sl2Triple) -> Result<Chain> {
    let z = l.centralizer(std::slice::from_ref(&t.e))?;
    let d = l.centralizer_of(&z)?;
    agree("double centraliser vs centre", &d, &l.centre_of_subspace(&z)?)?;
    let n = l.normalizer(&z)?;
    agree("normaliser vs preimage of d", &n, &d.preimage_under(&l.ad(&t.e)?)?)?;
    let fd = l.bracket_with(&t.f, &d)?;
    if !z.is_direct(&fd)? {
        return Err(Error::CrossCheckFailed("z(e) meets [f, d]".into()));
    }
    agree("normaliser vs z ⊕ [f, d]", &n, &z.sum(&fd)?)?;
    if n.dim() != z.dim() + d.dim() {
        return Err(Error::CrossCheckFailed("dim n ≠ dim z + dim d".into()));
    }
    Ok(Chain { z, d, n })
}
