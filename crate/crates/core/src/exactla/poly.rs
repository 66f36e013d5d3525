//! Sparse multivariate polynomials with checked `i128` coefficients.
//!
//! Only what certification needs: ring operations, exact division and evaluation.
//! Every arithmetic step is overflow-checked; overflow surfaces as
//! [`Error::CertifyBudgetExceeded`] rather than a wrong answer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

/// A monomial as its multiset of variables. Ordered by degree first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    degree: usize,
    vars: Vec<u16>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            degree: 0,
            vars: Vec::new(),
        }
    }

    pub fn var(v: usize) -> Self {
        Monomial {
            degree: 1,
            vars: vec![v as u16],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut vars = Vec::with_capacity(self.degree + other.degree);
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() && j < other.vars.len() {
            if self.vars[i] <= other.vars[j] {
                vars.push(self.vars[i]);
                i += 1;
            } else {
                vars.push(other.vars[j]);
                j += 1;
            }
        }
        vars.extend_from_slice(&self.vars[i..]);
        vars.extend_from_slice(&other.vars[j..]);
        Monomial {
            degree: vars.len(),
            vars,
        }
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut vars = Vec::with_capacity(self.degree);
        let mut j = 0;
        for &v in &self.vars {
            if j < other.vars.len() && other.vars[j] == v {
                j += 1;
            } else if j < other.vars.len() && other.vars[j] < v {
                return None;
            } else {
                vars.push(v);
            }
        }
        (j == other.vars.len()).then_some(Monomial {
            degree: vars.len(),
            vars,
        })
    }
}

fn overflow() -> Error {
    Error::CertifyBudgetExceeded("i128 coefficient overflow".into())
}

fn cadd(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or_else(overflow)
}

fn cmul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(overflow)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, i128>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: i128) -> Self {
        let mut p = Poly::zero();
        if c != 0 {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(v: usize) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(Monomial::var(v), 1);
        p
    }

    /// Integer linear form `Σ c_v ξ_v`.
    pub fn linear(form: &[(usize, i128)]) -> Result<Self> {
        let mut p = Poly::zero();
        for &(v, c) in form {
            p.add_term(Monomial::var(v), c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i128)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, c: i128) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = cadd(*e.get(), c)?;
                if s == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
        Ok(())
    }

    /// `self += c · m · other`.
    pub fn add_scaled(&mut self, other: &Poly, c: i128, m: &Monomial) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        for (mo, co) in &other.terms {
            self.add_term(mo.mul(m), cmul(*co, c)?)?;
        }
        Ok(())
    }

    pub fn add_assign(&mut self, other: &Poly) -> Result<()> {
        self.add_scaled(other, 1, &Monomial::one())
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        let mut r = self.clone();
        r.add_scaled(other, -1, &Monomial::one())?;
        Ok(r)
    }

    pub fn scale(&self, c: i128) -> Result<Poly> {
        let mut r = Poly::zero();
        r.add_scaled(self, c, &Monomial::one())?;
        Ok(r)
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        let (small, big) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut r = Poly::zero();
        for (m, c) in &small.terms {
            r.add_scaled(big, *c, m)?;
        }
        Ok(r)
    }

    fn leading(&self) -> Option<(&Monomial, &i128)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`, `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Result<Option<Poly>> {
        let Some((dm, dc)) = d.leading() else {
            return Err(Error::SolveFailed("division by the zero polynomial".into()));
        };
        let (dm, dc) = (dm.clone(), *dc);
        let mut rem = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let Some(tm) = rm.div(&dm) else {
                return Ok(None);
            };
            if rc % dc != 0 {
                return Ok(None);
            }
            let tc = rc / dc;
            rem.add_scaled(d, -tc, &tm)?;
            q.add_term(tm, tc)?;
        }
        Ok(Some(q))
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = Rational::from_integer(BigInt::from(*c));
            for &v in &m.vars {
                t *= &point[v as usize];
            }
            s += t;
        }
        s
    }
}
