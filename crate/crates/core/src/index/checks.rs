//! Checkers for the index identities and inequalities of representations.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{
    coadjoint_stabilizer, index_of, index_of_rep, index_of_subalgebra, kirillov_pencil, max_orbit_dim, rep_pencil,
};
use crate::error::{Error, Result};
use crate::exactla::{rat, QMatrix, Rational, Subspace};
use crate::liecore::{semidirect, LieAlgebra, Representation};
use crate::rng::{random_point, RandomCfg};

/// `ind(V ⋊ q) = ind(q, V) + ind q_ξ` at a sampled regular `ξ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaisReport {
    pub dim_v: usize,
    pub dim_q: usize,
    pub ind_semidirect: usize,
    pub ind_rep: usize,
    pub stabilizer_dim: usize,
    pub ind_stabilizer: usize,
    pub holds: bool,
    /// Joint samples drawn before one met both regularity conditions.
    pub attempts: usize,
    pub parity_ok: bool,
}

/// Samples `(ξ, η)` until `ξ` is `q`-regular and `ξ + η` is regular for the semidirect
/// product, then evaluates both sides independently.
pub fn check_rais(rho: &Representation, cfg: &RandomCfg) -> Result<RaisReport> {
    let cfg = cfg.normalized();
    let q = rho.algebra();
    let s = semidirect(q, rho)?;
    let ind_s = index_of(&s, &cfg.derive("semidirect"))?;
    let ind_rep = index_of_rep(rho, &cfg.derive("rep"))?;
    let (m, k) = (rho.module_dim(), q.dim());
    let rp = rep_pencil(rho);
    let kp = kirillov_pencil(&s);
    let mut rng = cfg.derive("regular").rng();
    let attempts = 4 * cfg.trials;
    for attempt in 1..=attempts {
        let point = random_point(&mut rng, m + k, cfg.coeff_bound);
        let xi = &point[..m];
        if rp.evaluate(xi)?.rank() != ind_rep.generic_rank {
            continue;
        }
        if kp.evaluate(&point)?.rank() != ind_s.generic_rank {
            continue;
        }
        let stab = super::stabilizer_at(rho, xi)?;
        let ind_stab = index_of_subalgebra(q, &stab, &cfg.derive("stabilizer"))?;
        return Ok(RaisReport {
            dim_v: m,
            dim_q: k,
            ind_semidirect: ind_s.index,
            ind_rep: ind_rep.index,
            stabilizer_dim: stab.dim(),
            ind_stabilizer: ind_stab.index,
            holds: ind_s.index == ind_rep.index + ind_stab.index,
            attempts: attempt,
            parity_ok: ind_s.parity_ok() && ind_stab.parity_ok(),
        });
    }
    Err(Error::RegularElementNotFound(attempts))
}

/// `ind q + ind q̃ ≤ dim(q̃/q) + 2 ind(q̃, q)` for an ideal `q` of `q̃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealReport {
    pub dim_big: usize,
    pub dim_ideal: usize,
    pub ind_big: usize,
    pub ind_ideal: usize,
    pub ind_rep: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub slack: i64,
    pub holds: bool,
    pub parity_ok: bool,
}

pub fn check_ideal_inequality(
    l: &LieAlgebra,
    big: &Subspace,
    ideal: &Subspace,
    cfg: &RandomCfg,
) -> Result<IdealReport> {
    if !l.is_subalgebra(big)? {
        return Err(Error::NotASubalgebra);
    }
    if !ideal.is_subspace_of(big)? || !l.bracket_spaces(big, ideal)?.is_subspace_of(ideal)? {
        return Err(Error::NotAnIdeal);
    }
    let ind_big = index_of_subalgebra(l, big, &cfg.derive("big"))?;
    let ind_ideal = index_of_subalgebra(l, ideal, &cfg.derive("ideal"))?;
    let ind_rep = index_of_rep(&l.induced_rep(big, ideal)?, &cfg.derive("rep"))?;
    let lhs = ind_big.index + ind_ideal.index;
    let rhs = big.dim() - ideal.dim() + 2 * ind_rep.index;
    Ok(IdealReport {
        dim_big: big.dim(),
        dim_ideal: ideal.dim(),
        ind_big: ind_big.index,
        ind_ideal: ind_ideal.index,
        ind_rep: ind_rep.index,
        lhs,
        rhs,
        slack: rhs as i64 - lhs as i64,
        holds: lhs <= rhs,
        parity_ok: ind_big.parity_ok() && ind_ideal.parity_ok(),
    })
}

/// `max_v dim q·v ≥ max_η dim q_w·η + dim q·w`, with `η` in `V / q·w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VinbergReport {
    pub stabilizer_dim: usize,
    pub orbit_dim_w: usize,
    pub max_orbit: usize,
    pub max_orbit_quotient: usize,
    pub lhs: usize,
    pub rhs: usize,
    pub slack: i64,
    pub holds: bool,
}

pub fn check_vinberg(rho: &Representation, w: &[Rational], cfg: &RandomCfg) -> Result<VinbergReport> {
    let (m, k) = (rho.module_dim(), rho.acting_dim());
    if w.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            got: w.len(),
        });
    }
    // columns ρ(b_i)w
    let images: Vec<Vec<Rational>> = (0..k).map(|i| rho.action(i).mul_vec(w)).collect::<Result<_>>()?;
    let orbit_map = QMatrix::from_rows(
        k,
        (0..m).map(|r| images.iter().map(|c| c[r].clone()).collect()).collect(),
    )?;
    let stab = orbit_map.kernel();
    let qw = Subspace::from_vectors(m, images)?;
    let (sub, emb) = rho.algebra().induced_subalgebra(&stab)?;
    let proj = qw.quotient_matrix();
    let free: Vec<usize> = (0..m).filter(|c| !qw.pivots().contains(c)).collect();
    let lift = QMatrix::from_fn(m, free.len(), |r, c| {
        if free[c] == r {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let action = (0..sub.dim())
        .map(|a| proj.mul(&rho.matrix_of(emb.row(a))?)?.mul(&lift))
        .collect::<Result<Vec<_>>>()?;
    let quotient = Representation::new(Arc::new(sub), free.len(), action)?;
    let max_orbit = max_orbit_dim(rho, &cfg.derive("module"));
    let max_orbit_quotient = max_orbit_dim(&quotient, &cfg.derive("quotient"));
    let rhs = max_orbit_quotient + qw.dim();
    Ok(VinbergReport {
        stabilizer_dim: stab.dim(),
        orbit_dim_w: qw.dim(),
        max_orbit,
        max_orbit_quotient,
        lhs: max_orbit,
        rhs,
        slack: max_orbit as i64 - rhs as i64,
        holds: max_orbit >= rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerSample {
    pub label: String,
    pub dim: usize,
    pub index: usize,
    pub abelian: bool,
    pub regular: bool,
}

/// `ind q_ξ ≥ ind q` at each sample, and `q_ξ` abelian at regular samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    pub index: usize,
    pub samples: Vec<StabilizerSample>,
    pub inequality_holds: bool,
    pub regular_abelian: bool,
    pub parity_ok: bool,
}

/// Samples `ξ = 0`, `cfg.trials` random points and the given extra points.
pub fn check_stabilizer_index(l: &LieAlgebra, extra: &[Vec<Rational>], cfg: &RandomCfg) -> Result<StabilizerReport> {
    let cfg = cfg.normalized();
    let ind = index_of(l, &cfg)?;
    let mut rng = cfg.derive("samples").rng();
    let mut points: Vec<(String, Vec<Rational>)> = vec![("zero".into(), l.zero_element())];
    points.extend((0..cfg.trials).map(|t| (format!("random{t}"), random_point(&mut rng, l.dim(), cfg.coeff_bound))));
    points.extend(extra.iter().enumerate().map(|(t, p)| (format!("extra{t}"), p.clone())));
    let mut samples = Vec::new();
    let mut parity_ok = ind.parity_ok();
    for (label, xi) in points {
        let stab = coadjoint_stabilizer(l, &xi)?;
        let (sub, _) = l.induced_subalgebra(&stab)?;
        let si = index_of(&sub, &cfg.derive(&label))?;
        parity_ok &= si.parity_ok();
        samples.push(StabilizerSample {
            label,
            dim: stab.dim(),
            index: si.index,
            abelian: sub.is_abelian(),
            regular: stab.dim() == ind.index,
        });
    }
    Ok(StabilizerReport {
        index: ind.index,
        inequality_holds: samples.iter().all(|s| s.index >= ind.index),
        regular_abelian: samples.iter().filter(|s| s.regular).all(|s| s.abelian),
        samples,
        parity_ok,
    })
}

/// Searches functionals with entries in `{−1, 0, 1}`, by support size, for one whose
/// stabilizer has dimension `dim` and is abelian.
pub fn find_abelian_stabilizer(l: &LieAlgebra, dim: usize, budget: usize) -> Result<Option<Vec<Rational>>> {
    let n = l.dim();
    let mut tried = 0;
    for size in 1..=n {
        let mut support: Vec<usize> = (0..size).collect();
        loop {
            for signs in 0u64..(1u64 << size) {
                if tried >= budget {
                    return Ok(None);
                }
                tried += 1;
                let mut xi = l.zero_element();
                for (b, &i) in support.iter().enumerate() {
                    xi[i] = rat(if signs >> b & 1 == 1 { -1 } else { 1 });
                }
                let stab = coadjoint_stabilizer(l, &xi)?;
                if stab.dim() == dim && l.induced_subalgebra(&stab)?.0.is_abelian() {
                    return Ok(Some(xi));
                }
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && support[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            support[i - 1] += 1;
            for j in i..size {
                support[j] = support[j - 1] + 1;
            }
        }
    }
    Ok(None)
}
