//! Constructors: classical matrix algebras, Chevalley bases, nilpotents, sl2-triples,
//! parabolic subalgebras and weighted Dynkin labels.

pub mod chevalley;
pub mod classical;
pub mod dynkin;
pub mod nilpotent;
pub mod parabolic;
pub mod search;
pub mod triple;
pub mod types;

use std::sync::Arc;

pub use chevalley::{cartan_matrix, chevalley, ChevalleyAlgebra, RootDatum};
pub use classical::{classical, MatrixAlgebra};
pub use dynkin::weighted_dynkin;
pub use nilpotent::{jordan_type, nilpotent_from_partition, nilpotent_matrix};
pub use parabolic::{chevalley_parabolic, matrix_parabolic, standard_compositions, Parabolic, ParabolicSpec};
pub use search::nilpotent_search;
pub use triple::{sl2_complete, Sl2Triple};
pub use types::{admissible_partitions, CartanType, ClassicalType, Family, Partition};

use crate::error::{Error, Result};
use crate::exactla::{QMatrix, Rational};
use crate::liecore::LieAlgebra;

/// A simple Lie algebra in one of the two realizations.
#[derive(Clone, Debug)]
pub enum SimpleAlgebra {
    Matrix(MatrixAlgebra),
    Chevalley(ChevalleyAlgebra),
}

impl SimpleAlgebra {
    pub fn matrix(t: ClassicalType) -> Result<Self> {
        Ok(SimpleAlgebra::Matrix(MatrixAlgebra::new(t)?))
    }

    pub fn chevalley(t: CartanType) -> Result<Self> {
        Ok(SimpleAlgebra::Chevalley(ChevalleyAlgebra::from_type(t)?))
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        match self {
            SimpleAlgebra::Matrix(m) => m.algebra(),
            SimpleAlgebra::Chevalley(c) => c.algebra(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            SimpleAlgebra::Matrix(m) => m.ty().rank(),
            SimpleAlgebra::Chevalley(c) => c.rank(),
        }
    }

    /// Type label such as `"D4"`.
    pub fn type_label(&self) -> String {
        match self {
            SimpleAlgebra::Matrix(m) => m.ty().to_string(),
            SimpleAlgebra::Chevalley(c) => c.datum().label().to_string(),
        }
    }

    pub fn realization(&self) -> &'static str {
        match self {
            SimpleAlgebra::Matrix(_) => "matrix",
            SimpleAlgebra::Chevalley(_) => "chevalley",
        }
    }

    /// Matrices of the basis in a faithful representation whose trace form is
    /// nondegenerate: the defining module, or the adjoint module for Chevalley bases.
    pub fn faithful_rep(&self) -> Vec<QMatrix> {
        match self {
            SimpleAlgebra::Matrix(m) => m.basis_matrices(),
            SimpleAlgebra::Chevalley(c) => (0..c.algebra().dim()).map(|i| c.algebra().ad_basis(i)).collect(),
        }
    }

    /// A regular nilpotent element.
    pub fn regular_nilpotent(&self) -> Result<Vec<Rational>> {
        match self {
            SimpleAlgebra::Matrix(m) => nilpotent_from_partition(m, &regular_partition(m.ty())),
            SimpleAlgebra::Chevalley(c) => Ok(c.regular_nilpotent()),
        }
    }

    /// Basis of a maximal nilpotent subalgebra normalised by the standard Borel.
    pub fn positive_part(&self) -> Result<Vec<Vec<Rational>>> {
        match self {
            SimpleAlgebra::Matrix(m) => Ok(m.pattern_subspace(|a, b| a < b)?.vectors()),
            SimpleAlgebra::Chevalley(c) => Ok(c.positive_root_vectors()),
        }
    }

    /// All standard parabolics of the realization, labelled.
    pub fn standard_parabolics(&self) -> Result<Vec<(String, Parabolic)>> {
        match self {
            SimpleAlgebra::Matrix(m) => standard_compositions(m)
                .into_iter()
                .map(|c| {
                    let label = c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                    Ok((format!("({label})"), matrix_parabolic(m, &c)?))
                })
                .collect(),
            SimpleAlgebra::Chevalley(c) => (0u64..(1 << c.rank()))
                .map(|mask| {
                    let levi: Vec<usize> = (0..c.rank()).filter(|i| mask & (1 << i) != 0).collect();
                    Ok((format!("levi{levi:?}"), chevalley_parabolic(c, &levi)?))
                })
                .collect(),
        }
    }

    pub fn parabolic(&self, spec: &ParabolicSpec) -> Result<Parabolic> {
        match (self, spec) {
            (SimpleAlgebra::Matrix(m), ParabolicSpec::Composition(c)) => matrix_parabolic(m, c),
            (SimpleAlgebra::Chevalley(c), ParabolicSpec::LeviSubset(s)) => chevalley_parabolic(c, s),
            _ => Err(Error::InvalidSpec("spec does not match the realization".into())),
        }
    }

    /// Standard Borel subalgebra.
    pub fn borel(&self) -> Result<Parabolic> {
        match self {
            SimpleAlgebra::Matrix(m) => matrix_parabolic(m, &vec![1; m.matrix_size()]),
            SimpleAlgebra::Chevalley(c) => chevalley_parabolic(c, &[]),
        }
    }
}

/// Partition of the regular nilpotent orbit.
pub fn regular_partition(t: ClassicalType) -> Partition {
    let n = t.matrix_size();
    let parts = match t.family() {
        Family::D => vec![n - 1, 1],
        _ => vec![n],
    };
    Partition::new(parts).expect("decreasing")
}

/// `parabolic(L, spec)` for a realization.
pub fn parabolic(l: &SimpleAlgebra, spec: &ParabolicSpec) -> Result<Parabolic> {
    l.parabolic(spec)
}
