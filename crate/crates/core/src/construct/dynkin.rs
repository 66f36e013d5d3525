//! Weighted Dynkin labels of classical nilpotent orbits.

use super::types::{is_admissible, ClassicalType, Family, Partition};
use crate::error::{Error, Result};

/// Eigenvalues of `h` on the defining module, in decreasing order.
pub fn defining_eigenvalues(p: &Partition) -> Vec<i64> {
    let mut v: Vec<i64> = p
        .parts()
        .iter()
        .flat_map(|&m| (0..m).map(move |k| m as i64 - 1 - 2 * k as i64))
        .collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Labels `α_i(h_+)` from the dominant eigenvalue sequence of the defining module.
pub fn weighted_dynkin(t: ClassicalType, p: &Partition) -> Result<Vec<i64>> {
    if !is_admissible(t, p) {
        return Err(Error::InadmissiblePartition {
            ty: t.to_string(),
            partition: p.to_string(),
        });
    }
    let v = defining_eigenvalues(p);
    let r = t.rank();
    let diffs = |k: usize| (0..k).map(|i| v[i] - v[i + 1]).collect::<Vec<_>>();
    let labels = match t.family() {
        Family::A => diffs(r),
        Family::B => {
            let mut l = diffs(r - 1);
            l.push(v[r - 1]);
            l
        }
        Family::C => {
            let mut l = diffs(r - 1);
            l.push(2 * v[r - 1]);
            l
        }
        Family::D => {
            let mut l = diffs(r - 1);
            l.push(v[r - 2] + v[r - 1]);
            l
        }
    };
    debug_assert!(labels.iter().all(|x| (0..=2).contains(x)));
    Ok(labels)
}
