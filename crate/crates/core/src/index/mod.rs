//! Index of a Lie algebra or of a representation, read off the generic rank of a
//! pencil of linear forms.

mod checks;
mod trace;

use num_traits::Zero;
use serde::Serialize;

pub use checks::{
    check_ideal_inequality, check_rais, check_stabilizer_index, check_vinberg, find_abelian_stabilizer, IdealReport,
    RaisReport, StabilizerReport, StabilizerSample, VinbergReport,
};
pub use trace::TraceRep;

use crate::error::{Error, Result};
use crate::exactla::certify::{symbolic_rank, CertifyRoute};
use crate::exactla::{MatrixPencil, QMatrix, RankEstimate, Rational, Subspace};
use crate::liecore::{LieAlgebra, Representation};
use crate::rng::RandomCfg;

/// Largest pencil side for which certify mode attempts symbolic elimination.
pub const CERTIFY_MAX_DIM: usize = 64;
/// Term budget for symbolic elimination inside the index engine.
pub const SYMBOLIC_TERM_BUDGET: usize = 250_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Randomized,
    Certified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexResult {
    pub dim: usize,
    pub generic_rank: usize,
    pub index: usize,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<CertifyRoute>,
    pub trials: usize,
    pub seed: u64,
    /// Why certification was not reached, when it was requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// A sample point attaining the generic rank.
    #[serde(skip)]
    pub witness: Vec<Rational>,
}

impl IndexResult {
    /// `dim − index` is even; meaningful for algebra indices.
    pub fn parity_ok(&self) -> bool {
        (self.dim - self.index).is_multiple_of(2)
    }
}

/// Kirillov pencil: entry `(i, j)` is `[b_i, b_j]` read as a linear form on `L*`.
pub fn kirillov_pencil(l: &LieAlgebra) -> MatrixPencil {
    let n = l.dim();
    let mut p = MatrixPencil::zeros(n, n, n);
    for i in 0..n {
        for j in 0..n {
            let s = l.structure(i, j);
            if !s.is_empty() {
                p.set_entry(i, j, s.to_vec()).expect("indices in range");
            }
        }
    }
    p
}

/// Pencil of `ρ`: entry `(i, j)` is `ρ(b_i) v_j` read as a linear form on `V*`.
pub fn rep_pencil(rho: &Representation) -> MatrixPencil {
    let (k, m) = (rho.acting_dim(), rho.module_dim());
    let mut p = MatrixPencil::zeros(k, m, m);
    for i in 0..k {
        let a = rho.action(i);
        for j in 0..m {
            let form: Vec<(usize, Rational)> = (0..m)
                .filter(|&r| !a.get(r, j).is_zero())
                .map(|r| (r, a.get(r, j).clone()))
                .collect();
            if !form.is_empty() {
                p.set_entry(i, j, form).expect("indices in range");
            }
        }
    }
    p
}

/// Pencil of the orbit map on vectors: entry `(i, j)` is the `j`-th coordinate of
/// `ρ(b_i) v` as a linear form in `v`; its rank at `v` is `dim q·v`.
pub fn orbit_pencil(rho: &Representation) -> MatrixPencil {
    let (k, m) = (rho.acting_dim(), rho.module_dim());
    let mut p = MatrixPencil::zeros(k, m, m);
    for i in 0..k {
        let a = rho.action(i);
        for j in 0..m {
            let form: Vec<(usize, Rational)> = (0..m)
                .filter(|&c| !a.get(j, c).is_zero())
                .map(|c| (c, a.get(j, c).clone()))
                .collect();
            if !form.is_empty() {
                p.set_entry(i, j, form).expect("indices in range");
            }
        }
    }
    p
}

fn resolve(p: &MatrixPencil, cfg: &RandomCfg, trace: Option<&TraceRep>) -> Result<IndexResult> {
    let cfg = cfg.normalized();
    let est: RankEstimate = p.estimate_rank(&cfg);
    let mut out = IndexResult {
        dim: p.cols(),
        generic_rank: est.rank,
        index: p.cols() - est.rank,
        method: Method::Randomized,
        route: None,
        trials: cfg.trials,
        seed: cfg.seed,
        note: None,
        witness: est.witness.clone(),
    };
    if !cfg.certify {
        return Ok(out);
    }
    let certified = |out: &mut IndexResult, rank: usize, route| {
        out.generic_rank = rank;
        out.index = p.cols() - rank;
        out.method = Method::Certified;
        out.route = Some(route);
    };
    if est.rank == p.rows().min(p.cols()) {
        certified(&mut out, est.rank, CertifyRoute::FullRank);
        return Ok(out);
    }
    if let Some(t) = trace {
        let needed = p.cols() - est.rank;
        let found = t.kernel_rank(p, &est.witness, needed)?;
        if found == needed {
            certified(&mut out, est.rank, CertifyRoute::TraceInvariants);
            return Ok(out);
        }
    }
    if p.rows().max(p.cols()) > CERTIFY_MAX_DIM {
        out.note = Some(format!("pencil larger than {CERTIFY_MAX_DIM}; randomized only"));
        return Ok(out);
    }
    match symbolic_rank(p, SYMBOLIC_TERM_BUDGET) {
        Ok(r) if r < est.rank => Err(Error::CrossCheckFailed(format!(
            "symbolic rank {r} below sampled rank {}",
            est.rank
        ))),
        Ok(r) => {
            certified(&mut out, r, CertifyRoute::SymbolicElimination);
            Ok(out)
        }
        Err(Error::CertifyBudgetExceeded(msg)) => {
            out.note = Some(msg);
            Ok(out)
        }
        Err(e) => Err(e),
    }
}

/// `ind L = dim L − rank K(L)`. In certify mode a nondegenerate Killing form enables
/// the trace-invariant certificate through the adjoint representation.
pub fn index_of(l: &LieAlgebra, cfg: &RandomCfg) -> Result<IndexResult> {
    let p = kirillov_pencil(l);
    let trace = if cfg.certify { TraceRep::adjoint(l).ok() } else { None };
    resolve(&p, cfg, trace.as_ref())
}

/// As [`index_of`], certifying through the trace form of the given matrices
/// (images of the basis under a representation).
pub fn index_of_with_trace_rep(l: &LieAlgebra, mats: &[QMatrix], cfg: &RandomCfg) -> Result<IndexResult> {
    let p = kirillov_pencil(l);
    let trace = if cfg.certify {
        Some(TraceRep::new(l, mats.to_vec())?)
    } else {
        None
    };
    resolve(&p, cfg, trace.as_ref())
}

/// Index of the subalgebra `q ⊆ L`, as a standalone algebra.
pub fn index_of_subalgebra(l: &LieAlgebra, q: &Subspace, cfg: &RandomCfg) -> Result<IndexResult> {
    let (sub, _) = l.induced_subalgebra(q)?;
    index_of(&sub, cfg)
}

/// `ind(q, V) = dim V − rank K(q, V)`.
pub fn index_of_rep(rho: &Representation, cfg: &RandomCfg) -> Result<IndexResult> {
    resolve(&rep_pencil(rho), cfg, None)
}

/// `max_v dim q·v` over vectors of the module.
pub fn max_orbit_dim(rho: &Representation, cfg: &RandomCfg) -> usize {
    orbit_pencil(rho).generic_rank(cfg)
}

/// Stabilizer `q_ξ` of `ξ ∈ V*`, as a subspace of the acting algebra.
pub fn stabilizer_at(rho: &Representation, xi: &[Rational]) -> Result<Subspace> {
    Ok(rep_pencil(rho).evaluate(xi)?.transpose().kernel())
}

/// Stabilizer of `ξ ∈ L*` under the coadjoint action.
pub fn coadjoint_stabilizer(l: &LieAlgebra, xi: &[Rational]) -> Result<Subspace> {
    Ok(kirillov_pencil(l).evaluate(xi)?.kernel())
}
