//! Structural checks on a single nilpotent orbit: graded decompositions, the double
//! centraliser, Steinberg's criterion and Springer's regular semisimple element.

use serde::Serialize;

use super::grading::GradedPieces;
use super::{regular_semisimple, solve_bracket, SemisimpleCertificate};
use crate::construct::Sl2Triple;
use crate::error::Result;
use crate::exactla::matrix::is_zero_vec;
use crate::exactla::{Rational, Subspace};
use crate::liecore::LieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub degrees: Vec<i64>,
    pub failures: Vec<String>,
    pub holds: bool,
}

/// `g(i) = z(e)(i) ⊕ [f, g(i+2)] = z(f)(i) ⊕ [e, g(i−2)]` for every degree, and
/// `ad e : g(i−2) → g(i)` injective for `i ≤ 1`, surjective for `i ≥ 1`.
pub fn check_graded_decomposition(
    l: &LieAlgebra,
    t: &Sl2Triple,
    g: &GradedPieces,
    z_e: &Subspace,
    z_f: &Subspace,
) -> Result<DecompositionReport> {
    let top = g.max_degree();
    let degrees: Vec<i64> = (-top - 2..=top + 2).collect();
    let mut failures = Vec::new();
    for &i in &degrees {
        let gi = g.piece(i);
        let ze = z_e.intersect(&gi)?;
        let zf = z_f.intersect(&gi)?;
        let up = l.bracket_with(&t.f, &g.piece(i + 2))?;
        let down = l.bracket_with(&t.e, &g.piece(i - 2))?;
        if !(ze.is_direct(&up)? && ze.sum(&up)? == gi) {
            failures.push(format!("g({i}) ≠ z(e)({i}) ⊕ [f, g({})]", i + 2));
        }
        if !(zf.is_direct(&down)? && zf.sum(&down)? == gi) {
            failures.push(format!("g({i}) ≠ z(f)({i}) ⊕ [e, g({})]", i - 2));
        }
        if i <= 1 && down.dim() != g.piece(i - 2).dim() {
            failures.push(format!("ad e not injective on g({})", i - 2));
        }
        if i >= 1 && down != gi {
            failures.push(format!("ad e not onto g({i})"));
        }
    }
    Ok(DecompositionReport {
        degrees,
        holds: failures.is_empty(),
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeTwoReport {
    pub dim_d2: usize,
    pub e_spans_d2: bool,
    pub dim_r: usize,
    pub r_is_subalgebra: bool,
    pub r_contains_triple: bool,
    pub killing_nondegenerate_on_r: bool,
    pub holds: bool,
}

/// `d(e)(2)` is the line through `e`, and `r = d(f)(−2) ⊕ [f, d(e)(2)] ⊕ d(e)(2)` is a
/// three-dimensional simple subalgebra containing the triple.
pub fn check_degree_two(
    l: &LieAlgebra,
    t: &Sl2Triple,
    g: &GradedPieces,
    d_e: &Subspace,
    d_f: &Subspace,
) -> Result<DegreeTwoReport> {
    let n = l.dim();
    let d2 = d_e.intersect(&g.piece(2))?;
    let e_line = Subspace::from_vectors(n, vec![t.e.clone()])?;
    let r = d_f
        .intersect(&g.piece(-2))?
        .sum(&l.bracket_with(&t.f, &d2)?)?
        .sum(&d2)?;
    let r_is_subalgebra = l.is_subalgebra(&r)?;
    let r_contains_triple = r.contains(&t.e)? && r.contains(&t.h)? && r.contains(&t.f)?;
    let killing_nondegenerate_on_r = l.killing().is_nondegenerate_on(&r)?;
    let holds = d2.dim() == 1
        && d2 == e_line
        && r.dim() == 3
        && r_is_subalgebra
        && r_contains_triple
        && killing_nondegenerate_on_r;
    Ok(DegreeTwoReport {
        dim_d2: d2.dim(),
        e_spans_d2: d2 == e_line,
        dim_r: r.dim(),
        r_is_subalgebra,
        r_contains_triple,
        killing_nondegenerate_on_r,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplementReport {
    pub dim_d: usize,
    pub dim_g_zf: usize,
    pub direct_sum_is_g: bool,
    pub killing_nondegenerate: bool,
    pub gram_size: usize,
    pub perp_is_d_f: bool,
    pub holds: bool,
}

/// `d(e) ⊕ [g, z(f)] = g`, Killing nondegenerate on `d(e) ⊕ d(f)` and
/// `[g, z(f)]^⊥ = d(f)`.
pub fn check_double_centralizer_complement(
    l: &LieAlgebra,
    d_e: &Subspace,
    z_f: &Subspace,
    d_f: &Subspace,
) -> Result<ComplementReport> {
    let n = l.dim();
    let gzf = l.bracket_spaces(&Subspace::full(n), z_f)?;
    let direct_sum_is_g = d_e.is_direct(&gzf)? && d_e.sum(&gzf)?.is_full();
    let both = d_e.sum(d_f)?;
    let killing = l.killing();
    let killing_nondegenerate =
        d_e.is_direct(d_f)? && killing.restricted_gram(&both)?.determinant()? != Rational::from_integer(0.into());
    let perp_is_d_f = l.orthogonal_complement(&gzf, &killing)? == *d_f;
    Ok(ComplementReport {
        dim_d: d_e.dim(),
        dim_g_zf: gzf.dim(),
        direct_sum_is_g,
        killing_nondegenerate,
        gram_size: both.dim(),
        perp_is_d_f,
        holds: direct_sum_is_g && killing_nondegenerate && perp_is_d_f,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositiveEvenReport {
    pub degrees: Vec<i64>,
    pub holds: bool,
}

/// `d` lives in strictly positive even degrees.
pub fn check_positive_even(g: &GradedPieces, d: &Subspace) -> Result<PositiveEvenReport> {
    let degrees = g.degrees_of(d)?;
    let holds = degrees.iter().all(|&i| i >= 2 && i % 2 == 0);
    Ok(PositiveEvenReport { degrees, holds })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinbergReport {
    pub dim_z: usize,
    pub rank: usize,
    pub abelian: bool,
    pub regular: bool,
    pub holds: bool,
}

/// `z(e)` abelian exactly when `dim z(e) = rk`.
pub fn check_steinberg(l: &LieAlgebra, z: &Subspace, rank: usize) -> Result<SteinbergReport> {
    let abelian = l.bracket_spaces(z, z)?.is_zero();
    let regular = z.dim() == rank;
    Ok(SteinbergReport {
        dim_z: z.dim(),
        rank,
        abelian,
        regular,
        holds: abelian == regular,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpringerReport {
    pub dim_g2_minus_dim_g4: i64,
    pub certificate: SemisimpleCertificate,
    pub lifts_solved: usize,
    pub lifts_unique: bool,
    pub lifts_span_z_c: bool,
    pub holds: bool,
}

/// For `q` in the lowest piece: `c = e + q` is regular semisimple, `dim g(2) − dim g(4) = 1`,
/// and each `x ∈ z(e)` lifts uniquely to `x + z ∈ z(c)` with `z` in negative degrees.
/// A basis vector without a lift stops the count in `lifts_solved`.
pub fn springer_checks(
    l: &LieAlgebra,
    t: &Sl2Triple,
    g: &GradedPieces,
    z_e: &Subspace,
    q: &[Rational],
    rank: usize,
) -> Result<SpringerReport> {
    let n = l.dim();
    let c: Vec<Rational> = t.e.iter().zip(q).map(|(a, b)| a + b).collect();
    let certificate = regular_semisimple(l, &c, rank)?;
    let negative = g.sum_where(|i| i < 0)?;
    let lifts_unique = l.bracket_with(&t.e, &negative)?.dim() == negative.dim();
    let z_c = l.centralizer(std::slice::from_ref(&c))?;
    let mut lifted = Vec::new();
    for x in z_e.vectors() {
        // [z, e] = −[x, q]  ⟺  [e, z] = [x, q]
        let Some(z) = solve_bracket(l, &t.e, &negative, &l.bracket(&x, q)?)? else {
            break;
        };
        let y: Vec<Rational> = x.iter().zip(&z).map(|(a, b)| a + b).collect();
        if !is_zero_vec(&l.bracket(&y, &c)?) {
            break;
        }
        lifted.push(y);
    }
    let lifts_span_z_c = Subspace::from_vectors(n, lifted.clone())? == z_c;
    let diff = g.piece(2).dim() as i64 - g.piece(4).dim() as i64;
    Ok(SpringerReport {
        dim_g2_minus_dim_g4: diff,
        holds: diff == 1 && certificate.holds && lifts_unique && lifts_span_z_c && lifted.len() == z_e.dim(),
        certificate,
        lifts_solved: lifted.len(),
        lifts_unique,
        lifts_span_z_c,
    })
}
