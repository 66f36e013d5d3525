//! Type labels, partitions and their text forms.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
}

/// A classical type `A_r` (r ≥ 1), `B_r`, `C_r` (r ≥ 2) or `D_r` (r ≥ 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassicalType {
    family: Family,
    rank: usize,
}

impl ClassicalType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        };
        if rank < min {
            return Err(Error::InvalidType(format!(
                "{family:?}{rank}: rank must be at least {min}"
            )));
        }
        Ok(ClassicalType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
        }
    }

    pub fn dim(&self) -> usize {
        let (n, r) = (self.matrix_size(), self.rank);
        match self.family {
            Family::A => n * n - 1,
            Family::B | Family::C => r * (2 * r + 1),
            Family::D => r * (2 * r - 1),
        }
    }

    /// Invariant form on the defining module: `None` for `A`, symmetric for `B`/`D`,
    /// skew for `C`.
    pub fn form_is_symmetric(&self) -> Option<bool> {
        match self.family {
            Family::A => None,
            Family::B | Family::D => Some(true),
            Family::C => Some(false),
        }
    }
}

impl fmt::Display for ClassicalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Any finite Cartan type, for the Chevalley constructor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    Classical(ClassicalType),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(&self) -> usize {
        match self {
            CartanType::Classical(t) => t.rank(),
            CartanType::E(r) => *r,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    pub fn classical(&self) -> Option<ClassicalType> {
        match self {
            CartanType::Classical(t) => Some(*t),
            _ => None,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::Classical(t) => write!(f, "{t}"),
            CartanType::E(r) => write!(f, "E{r}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `"D4"`, `"g2"`, `"A10"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match letter {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' if (6..=8).contains(&rank) => return Ok(CartanType::E(rank)),
            'F' if rank == 4 => return Ok(CartanType::F4),
            'G' if rank == 2 => return Ok(CartanType::G2),
            _ => return Err(bad()),
        };
        Ok(CartanType::Classical(ClassicalType::new(family, rank)?))
    }
}

impl FromStr for ClassicalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<CartanType>()? {
            CartanType::Classical(t) => Ok(t),
            _ => Err(Error::InvalidType(format!("{s} is not classical"))),
        }
    }
}

impl Serialize for CartanType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition {parts:?} is not weakly decreasing")));
        }
        parts.shrink_to_fit();
        Ok(Partition(parts))
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.0.iter().filter(|&&p| p == part).count()
    }

    /// All parts equal to one: the zero orbit.
    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&p| p == 1)
    }

    /// All parts even with even multiplicities (type D labels two orbits).
    pub fn is_very_even(&self) -> bool {
        !self.0.is_empty()
            && self
                .0
                .iter()
                .all(|&p| p % 2 == 0 && self.multiplicity(p).is_multiple_of(2))
    }

    /// All partitions of `n` in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated descending parts such as `"5,3"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Partitions labelling nilpotent orbits of `t`, decreasing lexicographic order.
pub fn admissible_partitions(t: ClassicalType) -> Vec<Partition> {
    Partition::all_of(t.matrix_size())
        .into_iter()
        .filter(|p| is_admissible(t, p))
        .collect()
}

pub fn is_admissible(t: ClassicalType, p: &Partition) -> bool {
    if p.size() != t.matrix_size() {
        return false;
    }
    let bad_parity = match t.family() {
        Family::A => return true,
        // odd parts come in pairs
        Family::C => 1,
        // even parts come in pairs
        Family::B | Family::D => 0,
    };
    p.parts()
        .iter()
        .filter(|&&m| m % 2 == bad_parity)
        .all(|&m| p.multiplicity(m).is_multiple_of(2))
}
