//! Verification suites.
//!
//! A suite expands into units of work (an orbit report, an algebra index, one
//! parabolic, ...). Units are computed once per run, in parallel, and cached; each
//! suite then judges the units it asked for. Item order is fixed by the unit lists, so
//! output does not depend on the worker count.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use kirillov::construct::{
    admissible_partitions, nilpotent_from_partition, nilpotent_search, CartanType, MatrixAlgebra, Partition,
    SimpleAlgebra,
};
use kirillov::exactla::Rational;
use kirillov::index::{
    check_ideal_inequality, check_rais, check_stabilizer_index, check_vinberg, find_abelian_stabilizer, index_of_rep,
    index_of_subalgebra, index_of_with_trace_rep, CERTIFY_MAX_DIM,
};
use kirillov::liecore::{LieAlgebra, Representation};
use kirillov::nilanalysis::{orbit_report, partition_report, OrbitLabel, Status};
use kirillov::rng::random_point;
use kirillov::{par, Error, RandomCfg};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::select::{AlgebraSpec, Realization};
use crate::{CliError, CliResult};

/// Candidate budget for the centraliser-dimension search.
pub const SEARCH_BUDGET: usize = 20_000;
/// Random module vectors per algebra in the orbit-dimension inequality.
pub const VINBERG_SAMPLES: usize = 5;
/// Candidate budget for the abelian-stabilizer witness search.
pub const WITNESS_BUDGET: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ReductiveIndex,
    Elashvili,
    Structure,
    Normaliser,
    Frobenius,
    Parabolic,
    Rais,
    All,
}

pub const ALL_SUITES: [Suite; 7] = [
    Suite::ReductiveIndex,
    Suite::Elashvili,
    Suite::Structure,
    Suite::Normaliser,
    Suite::Frobenius,
    Suite::Parabolic,
    Suite::Rais,
];

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::ReductiveIndex => "reductive-index",
            Suite::Elashvili => "elashvili",
            Suite::Structure => "structure",
            Suite::Normaliser => "normaliser",
            Suite::Frobenius => "frobenius",
            Suite::Parabolic => "parabolic",
            Suite::Rais => "rais",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Restricts the run to one algebra.
    pub selector: Option<AlgebraSpec>,
    pub max_rank: Option<usize>,
    pub random: RandomCfg,
}

impl SuiteConfig {
    pub fn new(suite: Suite, random: RandomCfg) -> Self {
        SuiteConfig {
            suite,
            selector: None,
            max_rank: None,
            random,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrbitTarget {
    Partition(Partition),
    Regular,
    /// Found by searching the positive part for `dim z(e)` equal to the target.
    Search(usize),
}

impl OrbitTarget {
    fn label(&self) -> String {
        match self {
            OrbitTarget::Partition(p) => p.to_string(),
            OrbitTarget::Regular => "regular".into(),
            OrbitTarget::Search(t) => format!("dim z = {t}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RaisCase {
    TrivialA1,
    AdjointA1,
    NaturalA1,
    NaturalA2,
    NaturalC2,
    BorelA2OnNilradical,
    BorelC2OnNilradical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VinbergCase {
    AdjointA1,
    AdjointA2,
    BorelC2Adjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilizerCase {
    A2,
    C2,
    BorelC2,
}

const RAIS_CASES: [RaisCase; 7] = [
    RaisCase::TrivialA1,
    RaisCase::AdjointA1,
    RaisCase::NaturalA1,
    RaisCase::NaturalA2,
    RaisCase::NaturalC2,
    RaisCase::BorelA2OnNilradical,
    RaisCase::BorelC2OnNilradical,
];
const VINBERG_CASES: [VinbergCase; 3] = [
    VinbergCase::AdjointA1,
    VinbergCase::AdjointA2,
    VinbergCase::BorelC2Adjoint,
];
const STABILIZER_CASES: [StabilizerCase; 3] = [StabilizerCase::A2, StabilizerCase::C2, StabilizerCase::BorelC2];

impl RaisCase {
    fn name(&self) -> &'static str {
        match self {
            RaisCase::TrivialA1 => "A1-trivial-2",
            RaisCase::AdjointA1 => "A1-adjoint",
            RaisCase::NaturalA1 => "A1-natural",
            RaisCase::NaturalA2 => "A2-natural",
            RaisCase::NaturalC2 => "C2-natural",
            RaisCase::BorelA2OnNilradical => "A2-borel-on-nilradical",
            RaisCase::BorelC2OnNilradical => "C2-borel-on-nilradical",
        }
    }

    fn algebra(&self) -> AlgebraSpec {
        AlgebraSpec::matrix(&self.name()[..2])
    }
}

impl VinbergCase {
    fn name(&self) -> &'static str {
        match self {
            VinbergCase::AdjointA1 => "A1-adjoint",
            VinbergCase::AdjointA2 => "A2-adjoint",
            VinbergCase::BorelC2Adjoint => "C2-borel-adjoint",
        }
    }

    fn algebra(&self) -> AlgebraSpec {
        AlgebraSpec::matrix(&self.name()[..2])
    }
}

impl StabilizerCase {
    fn name(&self) -> &'static str {
        match self {
            StabilizerCase::A2 => "A2",
            StabilizerCase::C2 => "C2",
            StabilizerCase::BorelC2 => "C2-borel",
        }
    }

    fn algebra(&self) -> AlgebraSpec {
        AlgebraSpec::matrix(&self.name()[..2])
    }
}

/// One cacheable piece of work.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    Index(AlgebraSpec),
    Orbit(AlgebraSpec, OrbitTarget),
    Parabolic(AlgebraSpec, String),
    Borel(AlgebraSpec),
    NormaliserPair(AlgebraSpec, Partition),
    Rais(RaisCase),
    Vinberg(VinbergCase),
    Stabilizer(StabilizerCase),
}

impl Unit {
    pub fn key(&self) -> String {
        match self {
            Unit::Index(a) => format!("index/{a}"),
            Unit::Orbit(a, t) => format!("orbit/{a}/{}", t.label()),
            Unit::Parabolic(a, label) => format!("parabolic/{a}/{label}"),
            Unit::Borel(a) => format!("borel/{a}"),
            Unit::NormaliserPair(a, p) => format!("normaliser-pair/{a}/{p}"),
            Unit::Rais(c) => format!("rais/{}", c.name()),
            Unit::Vinberg(c) => format!("vinberg/{}", c.name()),
            Unit::Stabilizer(c) => format!("stabilizer/{}", c.name()),
        }
    }

    pub fn algebra(&self) -> AlgebraSpec {
        match self {
            Unit::Index(a)
            | Unit::Orbit(a, _)
            | Unit::Parabolic(a, _)
            | Unit::Borel(a)
            | Unit::NormaliserPair(a, _) => *a,
            Unit::Rais(c) => c.algebra(),
            Unit::Vinberg(c) => c.algebra(),
            Unit::Stabilizer(c) => c.algebra(),
        }
    }
}

fn matrix_list(labels: &[&str]) -> Vec<AlgebraSpec> {
    labels.iter().map(|l| AlgebraSpec::matrix(l)).collect()
}

fn chevalley_list(labels: &[&str]) -> Vec<AlgebraSpec> {
    labels.iter().map(|l| AlgebraSpec::chevalley(l)).collect()
}

/// Algebras whose orbits the per-orbit suites sweep by default.
pub fn default_orbit_algebras() -> Vec<AlgebraSpec> {
    let mut v = matrix_list(&["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "D4"]);
    v.extend(chevalley_list(&["G2"]));
    v
}

pub fn default_index_algebras() -> Vec<AlgebraSpec> {
    let mut v = matrix_list(&["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "D4"]);
    v.extend(chevalley_list(&["A2", "B2", "G2"]));
    v
}

pub fn default_frobenius_algebras() -> Vec<AlgebraSpec> {
    chevalley_list(&["A2", "A3", "A4", "B2", "C3", "D4", "G2"])
}

/// Orbits of one algebra: every admissible partition in a matrix realization; for a
/// Chevalley basis, the nonzero orbits of G2, or the regular and subregular ones.
fn orbit_targets(a: AlgebraSpec) -> Vec<OrbitTarget> {
    match (a.realization, a.ty) {
        (Realization::Matrix, ty) => admissible_partitions(ty.classical().expect("matrix types are classical"))
            .into_iter()
            .map(OrbitTarget::Partition)
            .collect(),
        (Realization::Chevalley, CartanType::G2) => [8, 6, 4, 2].into_iter().map(OrbitTarget::Search).collect(),
        (Realization::Chevalley, ty) => vec![OrbitTarget::Search(ty.rank() + 2), OrbitTarget::Regular],
    }
}

fn standard_parabolic_labels(a: AlgebraSpec) -> kirillov::Result<Vec<String>> {
    Ok(a.build()?.standard_parabolics()?.into_iter().map(|(l, _)| l).collect())
}

/// Units requested by one suite, in output order.
pub fn units(suite: Suite, cfg: &SuiteConfig) -> CliResult<Vec<Unit>> {
    let keep_rank = |a: &AlgebraSpec| cfg.max_rank.is_none_or(|k| a.rank() <= k);
    let pick = |defaults: Vec<AlgebraSpec>| -> Vec<AlgebraSpec> {
        match cfg.selector {
            Some(s) => vec![s],
            None => defaults,
        }
        .into_iter()
        .filter(keep_rank)
        .collect()
    };
    let fixed = |u: &Unit| keep_rank(&u.algebra()) && cfg.selector.is_none_or(|s| s.ty == u.algebra().ty);
    let out = match suite {
        Suite::All => {
            let mut all = Vec::new();
            for s in ALL_SUITES {
                all.extend(units(s, cfg)?);
            }
            return Ok(all);
        }
        Suite::ReductiveIndex => pick(default_index_algebras()).into_iter().map(Unit::Index).collect(),
        Suite::Elashvili | Suite::Structure | Suite::Normaliser => pick(default_orbit_algebras())
            .into_iter()
            .flat_map(|a| orbit_targets(a).into_iter().map(move |t| Unit::Orbit(a, t)))
            .collect(),
        Suite::Frobenius => {
            let algebras = match cfg.selector {
                Some(s) => vec![AlgebraSpec::chevalley(&s.ty.to_string())],
                None => default_frobenius_algebras(),
            };
            algebras
                .into_iter()
                .filter(keep_rank)
                .map(|a| Unit::Orbit(a, OrbitTarget::Regular))
                .collect()
        }
        Suite::Parabolic => {
            let (parabolic, borel, pairs) = match cfg.selector {
                Some(s) => (vec![s], vec![s], vec![s]),
                None => (
                    matrix_list(&["A3", "C2"]),
                    matrix_list(&["A2", "A3", "A4", "B2", "C2"]),
                    matrix_list(&["A3", "C2"]),
                ),
            };
            let mut out = Vec::new();
            for a in parabolic.into_iter().filter(keep_rank) {
                let labels = standard_parabolic_labels(a).map_err(|e| CliError::internal(a.to_string(), e))?;
                out.extend(labels.into_iter().map(|l| Unit::Parabolic(a, l)));
            }
            out.extend(borel.into_iter().filter(keep_rank).map(Unit::Borel));
            for a in pairs.into_iter().filter(keep_rank) {
                if let (Realization::Matrix, Some(t)) = (a.realization, a.ty.classical()) {
                    out.extend(
                        admissible_partitions(t)
                            .into_iter()
                            .filter(|p| !p.is_trivial())
                            .map(|p| Unit::NormaliserPair(a, p)),
                    );
                }
            }
            out
        }
        Suite::Rais => {
            let mut out: Vec<Unit> = RAIS_CASES.into_iter().map(Unit::Rais).collect();
            out.extend(VINBERG_CASES.into_iter().map(Unit::Vinberg));
            out.extend(STABILIZER_CASES.into_iter().map(Unit::Stabilizer));
            out.retain(fixed);
            out
        }
    };
    Ok(out)
}

// ---------------------------------------------------------------- computation

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn matrix_of(alg: &SimpleAlgebra) -> &MatrixAlgebra {
    match alg {
        SimpleAlgebra::Matrix(m) => m,
        SimpleAlgebra::Chevalley(_) => unreachable!("fixed cases use matrix realizations"),
    }
}

fn natural_rep(alg: &SimpleAlgebra) -> kirillov::Result<Representation> {
    let m = matrix_of(alg);
    Representation::new(m.algebra().clone(), m.matrix_size(), m.basis_matrices())
}

fn borel_algebra(alg: &SimpleAlgebra) -> kirillov::Result<Arc<LieAlgebra>> {
    let b = alg.borel()?;
    Ok(Arc::new(alg.algebra().induced_subalgebra(&b.p)?.0))
}

fn index_value(alg: &SimpleAlgebra, cfg: &RandomCfg) -> kirillov::Result<Value> {
    let l = alg.algebra();
    let cfg = RandomCfg {
        certify: cfg.certify && l.dim() <= CERTIFY_MAX_DIM,
        ..cfg.clone()
    };
    let ind = index_of_with_trace_rep(l, &alg.faithful_rep(), &cfg)?;
    // second route through the adjoint module; sampled only, since this pencil has no
    // trace certificate and symbolic elimination of it is slow
    let adjoint_cfg = RandomCfg {
        certify: false,
        ..cfg.derive("adjoint")
    };
    let adjoint = index_of_rep(&l.adjoint_rep(), &adjoint_cfg)?;
    Ok(json!({
        "type": alg.type_label(),
        "realization": alg.realization(),
        "dim": l.dim(),
        "rank": alg.rank(),
        "killing_nondegenerate": l.killing().is_nondegenerate(),
        "index": ind,
        "parity_ok": ind.parity_ok(),
        "adjoint_rep_index": adjoint.index,
    }))
}

fn orbit_value(alg: &SimpleAlgebra, target: &OrbitTarget, cfg: &RandomCfg) -> kirillov::Result<Value> {
    let report = match target {
        OrbitTarget::Partition(p) => partition_report(alg, p, cfg)?,
        OrbitTarget::Regular => orbit_report(alg, &alg.regular_nilpotent()?, OrbitLabel::Named(target.label()), cfg)?,
        OrbitTarget::Search(t) => {
            let e = nilpotent_search(
                alg.algebra(),
                &alg.positive_part()?,
                *t,
                SEARCH_BUDGET,
                &cfg.derive(&format!("search/{t}")),
            )
            .ok_or_else(|| Error::InvalidSpec(format!("no nilpotent with dim z = {t} within the search budget")))?;
            orbit_report(alg, &e, OrbitLabel::Named(target.label()), cfg)?
        }
    };
    Ok(to_value(&report))
}

fn parabolic_value(alg: &SimpleAlgebra, label: &str, cfg: &RandomCfg) -> kirillov::Result<Value> {
    let l = alg.algebra();
    let (_, p) = alg
        .standard_parabolics()?
        .into_iter()
        .find(|(l, _)| l == label)
        .ok_or_else(|| Error::InvalidSpec(format!("no standard parabolic {label}")))?;
    let b = alg.borel()?;
    let ideal = check_ideal_inequality(l, &p.p, &p.p_u, &cfg.derive("pair"))?;
    let ind_b = index_of_subalgebra(l, &b.p, &cfg.derive("borel"))?;
    let ind_b_on_pu = index_of_rep(&l.induced_rep(&b.p, &p.p_u)?, &cfg.derive("borel-on-nilradical"))?;
    let (ind_p, ind_pu) = (ideal.ind_big, ideal.ind_ideal);
    Ok(json!({
        "dim_p": p.p.dim(),
        "dim_p_u": p.p_u.dim(),
        "dim_levi": p.l.dim(),
        "dim_b": b.p.dim(),
        "rank": alg.rank(),
        "ind_p": ind_p,
        "ind_p_u": ind_pu,
        "ind_b": ind_b.index,
        "ind_b_on_p_u": ind_b_on_pu.index,
        "ideal_inequality": ideal,
        "levi_bound": ind_p + ind_pu <= p.l.dim(),
        "borel_bound": ind_b.index + ind_pu <= b.p.dim() - p.p_u.dim(),
        "rank_lower_bound": ind_p + ind_pu >= alg.rank(),
        "parity_ok": ideal.parity_ok && ind_b.parity_ok(),
    }))
}

fn borel_value(alg: &SimpleAlgebra, cfg: &RandomCfg) -> kirillov::Result<Value> {
    let l = alg.algebra();
    let b = alg.borel()?;
    let ind_b = index_of_subalgebra(l, &b.p, &cfg.derive("borel"))?;
    let ind_bu = index_of_subalgebra(l, &b.p_u, &cfg.derive("nilradical"))?;
    Ok(json!({
        "dim_b": b.p.dim(),
        "dim_b_u": b.p_u.dim(),
        "rank": alg.rank(),
        "ind_b": ind_b,
        "ind_b_u": ind_bu,
        "sum": ind_b.index + ind_bu.index,
        "parity_ok": ind_b.parity_ok() && ind_bu.parity_ok(),
    }))
}

fn pair_value(alg: &SimpleAlgebra, p: &Partition, cfg: &RandomCfg) -> kirillov::Result<Value> {
    let l = alg.algebra();
    let e = nilpotent_from_partition(matrix_of(alg), p)?;
    let z = l.centralizer(&[e])?;
    let n = l.normalizer(&z)?;
    Ok(to_value(&check_ideal_inequality(l, &n, &z, cfg)?))
}

fn rais_value(alg: &SimpleAlgebra, case: RaisCase, cfg: &RandomCfg) -> kirillov::Result<Value> {
    let rho = match case {
        RaisCase::TrivialA1 => Representation::trivial(alg.algebra().clone(), 2),
        RaisCase::AdjointA1 => alg.algebra().adjoint_rep(),
        RaisCase::NaturalA1 | RaisCase::NaturalA2 | RaisCase::NaturalC2 => natural_rep(alg)?,
        RaisCase::BorelA2OnNilradical | RaisCase::BorelC2OnNilradical => {
            let b = alg.borel()?;
            alg.algebra().induced_rep(&b.p, &b.p_u)?
        }
    };
    // an unlucky sample is retried once with a wider coefficient range
    let report = match check_rais(&rho, cfg) {
        Err(Error::RegularElementNotFound(_)) => check_rais(
            &rho,
            &RandomCfg {
                coeff_bound: cfg.coeff_bound * 10,
                ..cfg.derive("retry")
            },
        )?,
        r => r?,
    };
    Ok(to_value(&report))
}

fn vinberg_value(alg: &SimpleAlgebra, case: VinbergCase, cfg: &RandomCfg) -> kirillov::Result<Value> {
    let q = match case {
        VinbergCase::AdjointA1 | VinbergCase::AdjointA2 => alg.algebra().clone(),
        VinbergCase::BorelC2Adjoint => borel_algebra(alg)?,
    };
    let rho = q.adjoint_rep();
    let mut rng = cfg.derive("vectors").rng();
    // small entries land on non-generic vectors more often than the full bound would
    let mut vectors: Vec<Vec<Rational>> = vec![q.zero_element()];
    vectors.extend((0..VINBERG_SAMPLES).map(|_| random_point(&mut rng, q.dim(), 2)));
    let reports = vectors
        .iter()
        .enumerate()
        .map(|(i, w)| check_vinberg(&rho, w, &cfg.derive(&format!("w{i}"))))
        .collect::<kirillov::Result<Vec<_>>>()?;
    Ok(json!({ "samples": reports }))
}

fn stabilizer_value(alg: &SimpleAlgebra, case: StabilizerCase, cfg: &RandomCfg) -> kirillov::Result<Value> {
    match case {
        StabilizerCase::A2 | StabilizerCase::C2 => Ok(to_value(&check_stabilizer_index(alg.algebra(), &[], cfg)?)),
        StabilizerCase::BorelC2 => {
            let b = borel_algebra(alg)?;
            let witness = find_abelian_stabilizer(&b, 2, WITNESS_BUDGET)?;
            let extra: Vec<Vec<Rational>> = witness.iter().cloned().collect();
            let report = check_stabilizer_index(&b, &extra, cfg)?;
            let witness_sample = report.samples.iter().find(|s| s.label == "extra0").cloned();
            Ok(json!({
                "report": report,
                "witness": witness.map(|w| w.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                "witness_sample": witness_sample,
            }))
        }
    }
}

pub fn compute(unit: &Unit, alg: &SimpleAlgebra, cfg: &RandomCfg) -> kirillov::Result<Value> {
    let derived = cfg.derive(&unit.key());
    match unit {
        Unit::Index(_) => index_value(alg, &derived),
        // orbit reports derive their own seed from the orbit label
        Unit::Orbit(_, t) => orbit_value(alg, t, cfg),
        Unit::Parabolic(_, label) => parabolic_value(alg, label, &derived),
        Unit::Borel(_) => borel_value(alg, &derived),
        Unit::NormaliserPair(_, p) => pair_value(alg, p, &derived),
        Unit::Rais(c) => rais_value(alg, *c, &derived),
        Unit::Vinberg(c) => vinberg_value(alg, *c, &derived),
        Unit::Stabilizer(c) => stabilizer_value(alg, *c, &derived),
    }
}

// ---------------------------------------------------------------- judging

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Item {
    pub suite: Suite,
    pub key: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    /// Whether every algebra index computed for the item had `dim − ind` even; absent
    /// when the item computes no algebra index.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity_ok: Option<bool>,
    pub detail: Value,
}

#[derive(Default)]
struct Verdict {
    failures: Vec<String>,
    reported: bool,
    skipped: bool,
    parity_ok: Option<bool>,
}

impl Verdict {
    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn parity(&mut self, ok: bool) {
        self.parity_ok = Some(self.parity_ok.unwrap_or(true) && ok);
        self.require(ok, "parity");
    }

    /// Folds the status of an orbit-report check into the verdict.
    fn check(&mut self, report: &Value, key: &str) {
        match status_of(report, key) {
            "pass" => {}
            "reported" => self.reported = true,
            "skipped" => {}
            other => self.failures.push(format!("{key}: {other}")),
        }
    }

    fn status(&self) -> Status {
        if !self.failures.is_empty() {
            Status::Fail
        } else if self.skipped {
            Status::Skipped
        } else if self.reported {
            Status::Reported
        } else {
            Status::Pass
        }
    }
}

fn status_of<'a>(report: &'a Value, key: &str) -> &'a str {
    report["checks"][key]["status"].as_str().unwrap_or("missing")
}

fn uint(v: &Value) -> u64 {
    v.as_u64().unwrap_or(u64::MAX)
}

fn flag(v: &Value) -> bool {
    v.as_bool().unwrap_or(false)
}

fn pick(v: &Value, keys: &[&str]) -> Value {
    Value::Object(keys.iter().map(|k| (k.to_string(), v[*k].clone())).collect())
}

const STRUCTURE_CHECKS: [&str; 8] = [
    "grading",
    "prop21",
    "thm23",
    "thm24",
    "prop26",
    "steinberg",
    "springer",
    "dim_d_bound",
];

/// The double-centraliser bracket condition is expected for every orbit in types A, B,
/// C, and in type D when the partition has at least three parts.
pub fn heart1_expected(ty: &str, partition: Option<&str>) -> bool {
    let Some(p) = partition else { return false };
    match ty.chars().next() {
        Some('A' | 'B' | 'C') => true,
        Some('D') => p.split(',').count() >= 3,
        _ => false,
    }
}

fn judge_orbit(suite: Suite, unit: &Unit, v: &Value) -> (Verdict, Value) {
    let mut verdict = Verdict::default();
    verdict.parity(flag(&v["parity_ok"]));
    let zero = v["dim_z"] == v["dim_g"];
    let detail = match suite {
        Suite::Elashvili => {
            verdict.check(v, "elashvili");
            let mut d = pick(v, &["dim_z", "rk_g", "ind_z"]);
            d["prediction"] = v["checks"]["elashvili"]["detail"]["prediction"].clone();
            d
        }
        Suite::Structure => {
            for key in STRUCTURE_CHECKS {
                verdict.check(v, key);
            }
            verdict.skipped = zero;
            if let Unit::Orbit(a, OrbitTarget::Search(4)) = unit {
                if a.ty == CartanType::G2 {
                    let g = &v["grading"];
                    verdict.require(
                        uint(&g["2"]) == 4 && uint(&g["4"]) == 1,
                        "G2 subregular: dim g(2), g(4)",
                    );
                    verdict.require(
                        uint(&v["dim_d"]) == 2 && uint(&v["rk_g"]) == 2,
                        "G2 subregular: dim d = rk",
                    );
                    verdict.require(
                        status_of(v, "springer") == "skipped",
                        "G2 subregular: springer not applicable",
                    );
                }
            }
            let mut d = pick(
                v,
                &["dim_z", "dim_d", "height", "is_even", "is_distinguished", "grading"],
            );
            d["checks"] = Value::Object(
                STRUCTURE_CHECKS
                    .iter()
                    .map(|k| (k.to_string(), Value::from(status_of(v, k))))
                    .collect(),
            );
            d
        }
        Suite::Normaliser => {
            verdict.check(v, "heart");
            verdict.check(v, "thm44");
            let heart = &v["checks"]["heart"]["detail"]["conditions"];
            let ty = v["type"].as_str().unwrap_or("");
            let partition = v["partition"].as_str();
            if !zero && heart1_expected(ty, partition) {
                verdict.require(flag(&v["heart1"]), "heart1 expected");
                if flag(&v["heart1"]) {
                    let (ind_z, dim_d) = (uint(&v["ind_z"]), uint(&v["dim_d"]));
                    let equal =
                        ind_z >= dim_d && uint(&v["ind_n"]) == ind_z - dim_d && uint(&v["ind_n_on_z"]) == ind_z - dim_d;
                    verdict.require(equal, "ind n = ind(n, z) = ind z - dim d");
                    verdict.require(heart["normalized_formula"] != json!(false), "alpha table up to scaling");
                }
            }
            if ty == "D4" && partition == Some("5,3") {
                verdict.require(!flag(&v["heart2"]), "D4 5,3: heart2 should fail");
                verdict.require(
                    heart["heart2_failure"] == json!([2, 2]),
                    "D4 5,3: heart2 failure at (2, 2)",
                );
                verdict.require(v["m"] == json!([1, 3, 3]), "D4 5,3: m = (1, 3, 3)");
                verdict.require(uint(&v["ind_n"]) >= 1, "D4 5,3: ind n >= 1");
            }
            if !flag(&v["conj61_ok"]) || !flag(&v["conj62_ok"]) {
                verdict.reported = true;
            }
            verdict.skipped = zero;
            let mut d = pick(
                v,
                &[
                    "m",
                    "heart1",
                    "heart2",
                    "dim_z",
                    "dim_d",
                    "dim_n",
                    "ind_z",
                    "ind_n",
                    "ind_n_on_z",
                    "ind_n_on_d",
                    "conj61_ok",
                    "conj62_ok",
                ],
            );
            d["basis"] = heart["basis"].clone();
            d["heart2_failure"] = heart["heart2_failure"].clone();
            d["normalized_formula"] = heart["normalized_formula"].clone();
            d["alpha"] = heart["alpha"].clone();
            d
        }
        Suite::Frobenius => {
            verdict.check(v, "regular_suite");
            verdict.check(v, "dmatrix");
            verdict.require(uint(&v["ind_n"]) == 0, "ind n = 0");
            let dm = &v["checks"]["dmatrix"]["detail"];
            verdict.require(uint(&dm["law_points"]) >= 5, "determinant law at >= 5 points");
            let mut d = pick(v, &["dim_n", "ind_n"]);
            d["regular_suite"] = v["checks"]["regular_suite"]["detail"].clone();
            d["dmatrix"] = dm.clone();
            d
        }
        _ => unreachable!("orbit units belong to orbit suites"),
    };
    (verdict, detail)
}

fn judge(suite: Suite, unit: &Unit, v: &Value) -> Item {
    let (verdict, detail) = match unit {
        Unit::Orbit(..) => judge_orbit(suite, unit, v),
        Unit::Index(_) => {
            let mut verdict = Verdict::default();
            let index = uint(&v["index"]["index"]);
            verdict.require(index == uint(&v["rank"]), "ind = rk");
            verdict.require(uint(&v["adjoint_rep_index"]) == index, "adjoint module index");
            verdict.require(flag(&v["killing_nondegenerate"]), "Killing form nondegenerate");
            verdict.parity(flag(&v["parity_ok"]));
            (verdict, v.clone())
        }
        Unit::Parabolic(..) => {
            let mut verdict = Verdict::default();
            verdict.require(flag(&v["ideal_inequality"]["holds"]), "ideal inequality");
            verdict.require(flag(&v["levi_bound"]), "ind p + ind p_u <= dim levi");
            verdict.require(flag(&v["borel_bound"]), "ind b + ind p_u <= dim b/p_u");
            verdict.require(uint(&v["ind_b_on_p_u"]) == 0, "ind(b, p_u) = 0");
            verdict.parity(flag(&v["parity_ok"]));
            verdict.reported = !flag(&v["rank_lower_bound"]);
            (verdict, v.clone())
        }
        Unit::Borel(_) => {
            let mut verdict = Verdict::default();
            verdict.require(uint(&v["sum"]) == uint(&v["rank"]), "ind b + ind b_u = rk");
            verdict.parity(flag(&v["parity_ok"]));
            (verdict, v.clone())
        }
        Unit::NormaliserPair(..) | Unit::Rais(_) => {
            let mut verdict = Verdict::default();
            verdict.require(flag(&v["holds"]), "equality or inequality");
            verdict.parity(flag(&v["parity_ok"]));
            (verdict, v.clone())
        }
        Unit::Vinberg(_) => {
            let mut verdict = Verdict::default();
            let samples = v["samples"].as_array().cloned().unwrap_or_default();
            verdict.require(samples.len() > VINBERG_SAMPLES, "sample count");
            verdict.require(samples.iter().all(|s| flag(&s["holds"])), "orbit-dimension inequality");
            verdict.require(
                samples.first().is_some_and(|s| s["slack"] == json!(0)),
                "equality at w = 0",
            );
            (verdict, v.clone())
        }
        Unit::Stabilizer(c) => {
            let mut verdict = Verdict::default();
            let report = if *c == StabilizerCase::BorelC2 { &v["report"] } else { v };
            verdict.require(flag(&report["inequality_holds"]), "ind q_xi >= ind q");
            verdict.require(flag(&report["regular_abelian"]), "regular stabilizers abelian");
            verdict.parity(flag(&report["parity_ok"]));
            if *c == StabilizerCase::BorelC2 {
                let w = &v["witness_sample"];
                verdict.require(uint(&report["index"]) == 0, "ind b = 0");
                verdict.require(
                    uint(&w["dim"]) == 2 && uint(&w["index"]) == 2 && flag(&w["abelian"]),
                    "two-dimensional abelian stabilizer witness",
                );
            }
            (verdict, v.clone())
        }
    };
    Item {
        suite,
        key: unit.key(),
        status: verdict.status(),
        failures: verdict.failures.clone(),
        parity_ok: verdict.parity_ok,
        detail,
    }
}

// ---------------------------------------------------------------- driver

/// Reproducibility header.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Header {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub coeff_bound: u64,
    pub certify: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub selector: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rank: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub items: usize,
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
    pub skipped: usize,
    /// Items that computed algebra indices, and how many of them broke parity.
    pub parity_checked: usize,
    pub parity_violations: usize,
}

impl Summary {
    pub fn of(items: &[Item]) -> Self {
        let count = |s: Status| items.iter().filter(|i| i.status == s).count();
        Summary {
            items: items.len(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            reported: count(Status::Reported),
            skipped: count(Status::Skipped),
            parity_checked: items.iter().filter(|i| i.parity_ok.is_some()).count(),
            parity_violations: items.iter().filter(|i| i.parity_ok == Some(false)).count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub header: Header,
    pub items: Vec<Item>,
    pub summary: Summary,
}

impl SuiteResult {
    /// 1 when an asserted check failed; reported values never count.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary.fail > 0)
    }

    pub fn failing(&self) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(|i| i.status == Status::Fail)
    }
}

pub fn run(cfg: &SuiteConfig, cache: &Cache) -> CliResult<SuiteResult> {
    let random = cfg.random.normalized();
    let suites: Vec<Suite> = if cfg.suite == Suite::All {
        ALL_SUITES.to_vec()
    } else {
        vec![cfg.suite]
    };
    let mut tasks: Vec<(Suite, Unit)> = Vec::new();
    for s in suites {
        tasks.extend(units(s, cfg)?.into_iter().map(|u| (s, u)));
    }

    let mut distinct: Vec<Unit> = Vec::new();
    let mut seen = HashSet::new();
    for (_, u) in &tasks {
        if seen.insert(u.key()) {
            distinct.push(u.clone());
        }
    }
    let mut specs: Vec<AlgebraSpec> = distinct.iter().map(Unit::algebra).collect();
    specs.sort();
    specs.dedup();
    let algebras: BTreeMap<AlgebraSpec, SimpleAlgebra> = specs
        .into_iter()
        .map(|a| {
            a.build()
                .map(|b| (a, b))
                .map_err(|e| CliError::internal(a.to_string(), e))
        })
        .collect::<CliResult<_>>()?;

    let values = par::map(&distinct, |u| {
        let key = u.key();
        let alg = &algebras[&u.algebra()];
        cache.get_or_compute(&key, &random, || compute(u, alg, &random))
    });
    let mut by_key: HashMap<String, Value> = HashMap::new();
    for (u, v) in distinct.iter().zip(values) {
        by_key.insert(u.key(), v?);
    }
    let items: Vec<Item> = tasks.iter().map(|(s, u)| judge(*s, u, &by_key[&u.key()])).collect();
    Ok(SuiteResult {
        header: Header {
            suite: cfg.suite,
            seed: random.seed,
            trials: random.trials,
            coeff_bound: random.coeff_bound,
            certify: random.certify,
            selector: cfg.selector.map(|s| s.to_string()),
            max_rank: cfg.max_rank,
        },
        summary: Summary::of(&items),
        items,
    })
}
