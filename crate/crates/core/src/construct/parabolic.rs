//! Standard parabolic subalgebras `p = l ⊕ p_u`.

use super::chevalley::ChevalleyAlgebra;
use super::classical::MatrixAlgebra;
use super::types::Family;
use crate::error::{Error, Result};
use crate::exactla::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ParabolicSpec {
    /// Block sizes along the diagonal of the matrix realization.
    Composition(Vec<usize>),
    /// Simple roots (0-based) belonging to the Levi factor.
    LeviSubset(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    pub p: Subspace,
    pub p_u: Subspace,
    pub l: Subspace,
}

fn block_index(composition: &[usize]) -> Vec<usize> {
    composition
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
        .collect()
}

/// Compositions of `n` giving the standard parabolics of the realization: all of them
/// for `A`, palindromic ones for `B`/`C`/`D` (for `D`, a middle block of size 2 is
/// split, since it gives the same subalgebra).
pub fn standard_compositions(alg: &MatrixAlgebra) -> Vec<Vec<usize>> {
    let n = alg.matrix_size();
    let mut all = Vec::new();
    // compositions of n as bitmasks of cut points
    for mask in 0u64..(1u64 << (n - 1)) {
        let mut comp = Vec::new();
        let mut len = 1;
        for i in 0..n - 1 {
            if mask & (1 << i) != 0 {
                comp.push(len);
                len = 1;
            } else {
                len += 1;
            }
        }
        comp.push(len);
        all.push(comp);
    }
    let family = alg.ty().family();
    all.retain(|c| {
        if family == Family::A {
            return true;
        }
        let palindrome = c.iter().eq(c.iter().rev());
        let middle_two = c.len() % 2 == 1 && c[c.len() / 2] == 2;
        palindrome && !(family == Family::D && middle_two)
    });
    all.sort_by(|a, b| b.cmp(a));
    all.sort_by_key(|c| c.len());
    all
}

pub fn matrix_parabolic(alg: &MatrixAlgebra, composition: &[usize]) -> Result<Parabolic> {
    let n = alg.matrix_size();
    if composition.is_empty() || composition.contains(&0) || composition.iter().sum::<usize>() != n {
        return Err(Error::InvalidSpec(format!(
            "{composition:?} is not a composition of {n}"
        )));
    }
    if alg.ty().family() != Family::A && !composition.iter().eq(composition.iter().rev()) {
        return Err(Error::InvalidSpec(format!(
            "{composition:?} must be palindromic for {}",
            alg.ty()
        )));
    }
    let blk = block_index(composition);
    let p = alg.pattern_subspace(|a, b| blk[a] <= blk[b])?;
    let p_u = alg.pattern_subspace(|a, b| blk[a] < blk[b])?;
    let l = alg.pattern_subspace(|a, b| blk[a] == blk[b])?;
    Ok(Parabolic { p, p_u, l })
}

pub fn chevalley_parabolic(alg: &ChevalleyAlgebra, levi: &[usize]) -> Result<Parabolic> {
    let r = alg.rank();
    if levi.iter().any(|&i| i >= r) {
        return Err(Error::InvalidSpec(format!("Levi subset {levi:?} exceeds rank {r}")));
    }
    let dim = alg.algebra().dim();
    let in_levi = |w: &[i64]| w.iter().enumerate().all(|(i, &c)| c == 0 || levi.contains(&i));
    let weights = alg.basis_weights();
    let pick = |keep: &dyn Fn(&[i64]) -> bool| {
        Subspace::from_vectors(
            dim,
            (0..dim)
                .filter(|&k| keep(&weights[k]))
                .map(|k| alg.algebra().basis_vector(k))
                .collect(),
        )
    };
    let positive = |w: &[i64]| w.iter().any(|&c| c > 0);
    let p = pick(&|w| positive(w) || in_levi(w))?;
    let p_u = pick(&|w| positive(w) && !in_levi(w))?;
    let l = pick(&|w| in_levi(w))?;
    Ok(Parabolic { p, p_u, l })
}
