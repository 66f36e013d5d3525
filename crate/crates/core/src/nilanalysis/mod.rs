//! Per-orbit analysis of nilpotent elements: gradings, the chain
//! `z(e) ⊇ d(e)`, `n(e) = N(z(e))`, and the index relations between them.

pub mod chain;
pub mod grading;
pub mod heart;
pub mod regular;
pub mod structure;

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

pub use chain::{centralizer_chain, Chain, ChainDims};
pub use grading::{grading, height, is_bracket_compatible, GradedPieces};
pub use heart::{
    centralizer_index_check, heart_conditions, normaliser_index_checks, CentralizerIndexReport, HeartBasis,
    HeartReport, IndexPrediction, NormaliserIndexReport, Powers,
};
pub use regular::{d_matrix_checks, principal_triple, regular_suite, DMatrixReport, Rechoice, RegularSuiteReport};
pub use structure::{
    check_degree_two, check_double_centralizer_complement, check_graded_decomposition, check_positive_even,
    check_steinberg, springer_checks, ComplementReport, DecompositionReport, DegreeTwoReport, PositiveEvenReport,
    SpringerReport, SteinbergReport,
};

use crate::construct::{nilpotent_from_partition, sl2_complete, weighted_dynkin, Partition, SimpleAlgebra};
use crate::error::{Error, Result};
use crate::exactla::matrix::is_zero_vec;
use crate::exactla::{rat, QMatrix, Rational, Subspace};
use crate::index::{index_of, IndexResult};
use crate::liecore::LieAlgebra;
use crate::rng::RandomCfg;

/// Some `v ∈ space` with `[x, v] = target`, if one exists.
pub fn solve_bracket(
    l: &LieAlgebra,
    x: &[Rational],
    space: &Subspace,
    target: &[Rational],
) -> Result<Option<Vec<Rational>>> {
    if space.is_zero() {
        return Ok(is_zero_vec(target).then(|| l.zero_element()));
    }
    let cols = space
        .vectors()
        .iter()
        .map(|v| l.bracket(x, v))
        .collect::<Result<Vec<_>>>()?;
    let a = QMatrix::from_rows(l.dim(), cols)?.transpose();
    match a.solve(target)? {
        Some(c) => Ok(Some(space.combine(&c)?)),
        None => Ok(None),
    }
}

/// `a` with `v = a·base`, if `v` is a multiple of the nonzero vector `base`.
pub(crate) fn multiple_of(v: &[Rational], base: &[Rational]) -> Option<Rational> {
    let p = base.iter().position(|x| !x.is_zero())?;
    let a = &v[p] / &base[p];
    v.iter().zip(base).all(|(x, b)| *x == &a * b).then_some(a)
}

/// Evidence that `c` is regular semisimple: `dim z(c) = rk`, `z(c)` abelian and the
/// Killing form nondegenerate on it. The last condition rules out a nilpotent part,
/// which would lie in the radical of the form restricted to `z(c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimpleCertificate {
    pub dim_centralizer: usize,
    pub abelian: bool,
    pub killing_nondegenerate: bool,
    pub holds: bool,
}

pub fn regular_semisimple(l: &LieAlgebra, c: &[Rational], rank: usize) -> Result<SemisimpleCertificate> {
    let z = l.centralizer(&[c.to_vec()])?;
    let abelian = l.bracket_spaces(&z, &z)?.is_zero();
    let killing_nondegenerate = l.killing().is_nondegenerate_on(&z)?;
    Ok(SemisimpleCertificate {
        dim_centralizer: z.dim(),
        abelian,
        killing_nondegenerate,
        holds: z.dim() == rank && abelian && killing_nondegenerate,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// Evaluated, but not asserted.
    Reported,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub status: Status,
    pub detail: serde_json::Value,
}

impl Check {
    fn of<T: Serialize>(holds: bool, detail: &T) -> Self {
        Check {
            status: if holds { Status::Pass } else { Status::Fail },
            detail: serde_json::to_value(detail).expect("reports serialize"),
        }
    }

    fn with_status<T: Serialize>(status: Status, detail: &T) -> Self {
        Check {
            status,
            detail: serde_json::to_value(detail).expect("reports serialize"),
        }
    }

    fn skipped(reason: &str) -> Self {
        Check {
            status: Status::Skipped,
            detail: serde_json::Value::String(reason.to_string()),
        }
    }
}

/// Seed policy actually used for an orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub seed: u64,
    pub orbit_seed: u64,
    pub trials: usize,
    pub coeff_bound: u64,
    pub certify: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Indices {
    pub z: IndexResult,
    pub n: IndexResult,
    pub n_on_z: IndexResult,
    pub n_on_d: IndexResult,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitReport {
    #[serde(rename = "type")]
    pub ty: String,
    pub realization: &'static str,
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dynkin_labels: Option<Vec<i64>>,
    pub dim_g: usize,
    pub rk_g: usize,
    pub dim_z: usize,
    pub dim_d: usize,
    pub dim_n: usize,
    pub height: usize,
    pub is_even: bool,
    pub is_distinguished: bool,
    pub grading: BTreeMap<i64, usize>,
    pub m: Vec<i64>,
    pub ind_z: usize,
    pub ind_n: usize,
    pub ind_n_on_z: usize,
    pub ind_n_on_d: usize,
    pub heart1: bool,
    pub heart2: bool,
    pub elashvili_ok: bool,
    pub conj61_ok: bool,
    pub conj62_ok: bool,
    pub parity_ok: bool,
    pub indices: Option<Indices>,
    pub checks: BTreeMap<&'static str, Check>,
    pub random: Provenance,
}

impl OrbitReport {
    /// No check failed.
    pub fn all_pass(&self) -> bool {
        self.checks.values().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|(_, c)| c.status == Status::Fail)
            .map(|(k, _)| *k)
            .collect()
    }
}

/// How an orbit is named in reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitLabel {
    Partition(Partition),
    /// Element found by search, with a free-form description.
    Named(String),
}

impl OrbitLabel {
    fn text(&self) -> String {
        match self {
            OrbitLabel::Partition(p) => p.to_string(),
            OrbitLabel::Named(s) => s.clone(),
        }
    }
}

/// Report for the orbit of the partition `p` in a matrix realization.
pub fn partition_report(alg: &SimpleAlgebra, p: &Partition, cfg: &RandomCfg) -> Result<OrbitReport> {
    let SimpleAlgebra::Matrix(m) = alg else {
        return Err(Error::InvalidSpec("partitions need a matrix realization".into()));
    };
    let e = nilpotent_from_partition(m, p)?;
    orbit_report(alg, &e, OrbitLabel::Partition(p.clone()), cfg)
}

/// `e^k` for the powers lying in the algebra, in a matrix realization.
fn matrix_powers(alg: &SimpleAlgebra, e: &[Rational]) -> Result<Option<Powers>> {
    let SimpleAlgebra::Matrix(m) = alg else {
        return Ok(None);
    };
    let base = m.matrix_of(e)?;
    let mut power = base.clone();
    let mut out = Vec::new();
    let mut k = 1;
    while !power.is_zero() {
        if let Ok(v) = m.element_of(&power) {
            out.push((k, v));
        }
        power = power.mul(&base)?;
        k += 1;
    }
    Ok(Some(out))
}

fn zero_orbit_report(
    alg: &SimpleAlgebra,
    label: &OrbitLabel,
    cfg: &RandomCfg,
    random: Provenance,
) -> Result<OrbitReport> {
    let l = alg.algebra();
    let rank = alg.rank();
    let ind = index_of(l, cfg)?;
    let n = l.dim();
    let mut checks = BTreeMap::new();
    for key in CHECK_KEYS {
        checks.insert(key, Check::skipped("zero orbit"));
    }
    let equal = ind.index == rank;
    checks.insert(
        "elashvili",
        Check::of(equal, &serde_json::json!({ "ind_z": ind.index, "rank": rank })),
    );
    Ok(OrbitReport {
        ty: alg.type_label(),
        realization: alg.realization(),
        label: label.text(),
        partition: match label {
            OrbitLabel::Partition(p) => Some(p.to_string()),
            OrbitLabel::Named(_) => None,
        },
        dynkin_labels: None,
        dim_g: n,
        rk_g: rank,
        dim_z: n,
        dim_d: 0,
        dim_n: n,
        height: 0,
        is_even: true,
        is_distinguished: rank == 0,
        grading: BTreeMap::from([(0, n)]),
        m: Vec::new(),
        ind_z: ind.index,
        ind_n: ind.index,
        ind_n_on_z: ind.index,
        ind_n_on_d: 0,
        heart1: true,
        heart2: true,
        elashvili_ok: equal,
        conj61_ok: equal,
        conj62_ok: equal,
        parity_ok: ind.parity_ok(),
        indices: None,
        checks,
        random,
    })
}

const CHECK_KEYS: [&str; 13] = [
    "grading",
    "prop21",
    "thm23",
    "thm24",
    "prop26",
    "steinberg",
    "springer",
    "elashvili",
    "heart",
    "thm44",
    "dim_d_bound",
    "regular_suite",
    "dmatrix",
];

/// Full pipeline for one orbit: triple, grading, chain and every applicable check.
/// The orbit's seed is derived from `cfg.seed` and the orbit label.
pub fn orbit_report(alg: &SimpleAlgebra, e: &[Rational], label: OrbitLabel, cfg: &RandomCfg) -> Result<OrbitReport> {
    let l = alg.algebra();
    let rank = alg.rank();
    let n = l.dim();
    let base = cfg.normalized();
    let cfg = base.derive(&format!("{}/{}/{}", alg.type_label(), alg.realization(), label.text()));
    let random = Provenance {
        seed: base.seed,
        orbit_seed: cfg.seed,
        trials: cfg.trials,
        coeff_bound: cfg.coeff_bound,
        certify: cfg.certify,
    };
    if is_zero_vec(e) {
        return zero_orbit_report(alg, &label, &cfg, random);
    }

    let t = sl2_complete(l, e)?;
    let g = grading(l, &t.h)?;
    let ht = height(l, &t, &g)?;
    let chain = centralizer_chain(l, &t)?;
    let z_f = l.centralizer(std::slice::from_ref(&t.f))?;
    let d_f = l.centralizer_of(&z_f)?;
    let z0 = chain.z.intersect(&g.piece(0))?;
    let is_distinguished = z0.is_zero();
    let is_even = g.pieces().keys().all(|i| i % 2 == 0);
    let regular = chain.z.dim() == rank;

    let mut checks: BTreeMap<&'static str, Check> = BTreeMap::new();

    let z_graded = g.degrees_of(&chain.z)?;
    let zf_graded = g.degrees_of(&z_f)?;
    let compatible = is_bracket_compatible(l, &g)?;
    let grading_detail = serde_json::json!({
        "bracket_compatible": compatible,
        "z_nonnegative": z_graded.iter().all(|&i| i >= 0),
        "z_f_nonpositive": zf_graded.iter().all(|&i| i <= 0),
        "distinguished_implies_even": !is_distinguished || is_even,
        "height": ht,
    });
    let grading_ok = compatible
        && z_graded.iter().all(|&i| i >= 0)
        && zf_graded.iter().all(|&i| i <= 0)
        && (!is_distinguished || is_even);
    checks.insert("grading", Check::of(grading_ok, &grading_detail));

    let r = check_graded_decomposition(l, &t, &g, &chain.z, &z_f)?;
    checks.insert("prop21", Check::of(r.holds, &r));
    let r = check_degree_two(l, &t, &g, &chain.d, &d_f)?;
    checks.insert("thm23", Check::of(r.holds, &r));
    let r = check_double_centralizer_complement(l, &chain.d, &z_f, &d_f)?;
    checks.insert("thm24", Check::of(r.holds, &r));
    let r = check_positive_even(&g, &chain.d)?;
    checks.insert("prop26", Check::of(r.holds, &r));
    let r = check_steinberg(l, &chain.z, rank)?;
    checks.insert("steinberg", Check::of(r.holds, &r));

    // Springer's condition: e distinguished with dim g(2) − dim g(4) = 1.
    let lowest = g.piece(-(ht as i64));
    let step = g.piece(2).dim() as i64 - g.piece(4).dim() as i64;
    let mut springer_applies = false;
    let springer = if !is_distinguished {
        Check::skipped("not distinguished")
    } else if step != 1 {
        Check::with_status(
            Status::Skipped,
            &serde_json::json!({ "dim_g2": g.piece(2).dim(), "dim_g4": g.piece(4).dim() }),
        )
    } else {
        let q = if lowest.dim() == 1 {
            lowest.vector(0).to_vec()
        } else {
            let mut rng = cfg.derive("springer").rng();
            let b = cfg.coeff_bound as i64;
            loop {
                let coeffs: Vec<Rational> = (0..lowest.dim()).map(|_| rat(rng.random_range(-b..=b))).collect();
                if coeffs.iter().any(|c| !c.is_zero()) {
                    break lowest.combine(&coeffs)?;
                }
            }
        };
        let r = springer_checks(l, &t, &g, &chain.z, &q, rank)?;
        springer_applies = r.holds;
        Check::of(r.holds, &r)
    };
    checks.insert("springer", springer);

    let nrep = normaliser_index_checks(l, &chain, rank, &cfg)?;
    let er = centralizer_index_check(&nrep.ind_z, rank, chain.z.dim(), ht, springer_applies);
    let status = if er.equal {
        Status::Pass
    } else if er.prediction == IndexPrediction::Open && er.at_least_rank {
        Status::Reported
    } else {
        Status::Fail
    };
    checks.insert("elashvili", Check::with_status(status, &er));

    let powers = matrix_powers(alg, &t.e)?;
    let basis = match powers
        .map(|p| HeartBasis::from_powers(&g, &chain.d, p))
        .transpose()?
        .flatten()
    {
        Some(b) => b,
        None => HeartBasis::echelon(&t, &g, &chain.d)?,
    };
    let hr = heart_conditions(l, &t, &basis)?;
    let consequences = !hr.heart1 || (nrep.ind_n_on_d.index == 0 && nrep.open_orbit_equalities == Some(true));
    let heart_ok = consequences
        && hr.power_formula != Some(false)
        && hr.normalized_formula != Some(false)
        && hr.progression != Some(false);
    checks.insert(
        "heart",
        Check::of(
            heart_ok,
            &serde_json::json!({ "conditions": hr, "consequences_hold": consequences }),
        ),
    );
    checks.insert("thm44", Check::of(nrep.holds, &nrep));

    let dim_d = chain.d.dim();
    let g2_subregular = alg.type_label() == "G2" && chain.z.dim() == rank + 2;
    let bound_ok = dim_d <= rank && (dim_d < rank || regular || g2_subregular);
    checks.insert(
        "dim_d_bound",
        Check::of(
            bound_ok,
            &serde_json::json!({ "dim_d": dim_d, "rank": rank, "regular": regular, "g2_subregular": g2_subregular }),
        ),
    );

    match (alg, regular) {
        (SimpleAlgebra::Chevalley(c), true) => {
            let r = regular_suite(c, &cfg)?;
            checks.insert("regular_suite", Check::of(r.holds, &r));
            let r = d_matrix_checks(c, &cfg)?;
            let status = match (r.holds, r.identification_question) {
                (true, false) => Status::Pass,
                (true, true) => Status::Reported,
                (false, _) => Status::Fail,
            };
            checks.insert("dmatrix", Check::with_status(status, &r));
        }
        (_, true) => {
            checks.insert("regular_suite", Check::skipped("needs a Chevalley basis"));
            checks.insert("dmatrix", Check::skipped("needs a Chevalley basis"));
        }
        _ => {
            checks.insert("regular_suite", Check::skipped("not regular"));
            checks.insert("dmatrix", Check::skipped("not regular"));
        }
    }

    let partition = match &label {
        OrbitLabel::Partition(p) => Some(p.clone()),
        OrbitLabel::Named(_) => None,
    };
    let dynkin_labels = match (alg, &partition) {
        (SimpleAlgebra::Matrix(m), Some(p)) => weighted_dynkin(m.ty(), p).ok(),
        _ => None,
    };
    Ok(OrbitReport {
        ty: alg.type_label(),
        realization: alg.realization(),
        label: label.text(),
        partition: partition.map(|p| p.to_string()),
        dynkin_labels,
        dim_g: n,
        rk_g: rank,
        dim_z: chain.z.dim(),
        dim_d,
        dim_n: chain.n.dim(),
        height: ht,
        is_even,
        is_distinguished,
        grading: g.dims(),
        m: hr.m.clone(),
        ind_z: nrep.ind_z.index,
        ind_n: nrep.ind_n.index,
        ind_n_on_z: nrep.ind_n_on_z.index,
        ind_n_on_d: nrep.ind_n_on_d.index,
        heart1: hr.heart1,
        heart2: hr.heart2,
        elashvili_ok: er.equal,
        conj61_ok: nrep.conj_n,
        conj62_ok: nrep.conj_n_on_z,
        parity_ok: nrep.parity_ok,
        indices: Some(Indices {
            z: nrep.ind_z.clone(),
            n: nrep.ind_n.clone(),
            n_on_z: nrep.ind_n_on_z.clone(),
            n_on_d: nrep.ind_n_on_d.clone(),
        }),
        checks,
        random,
    })
}
