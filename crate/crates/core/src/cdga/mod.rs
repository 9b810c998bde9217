//! Standard-form presentations of torus-equivariant derived affine schemes.
//!
//! A presentation has a polynomial ring in homological degree 0, free
//! generators in degree 1 whose differentials are ring elements, and free
//! generators in degree 2 whose differentials are ring-linear combinations of
//! the degree-1 generators. Every generator carries a weight for a rank-`k`
//! torus.

mod darboux;
mod excluded;
mod fixed;
mod validate;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Ideal, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::linalg;

pub use darboux::from_invariant_function;
pub use excluded::Excluded;
pub use fixed::{fixed_locus, weight_split};
pub use validate::{validate_presentation, ValidationReport, Violation};

/// A character of the torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(k: usize) -> Self {
        Weight(vec![0; k])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, n: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * n).collect())
    }

    pub fn dot(&self, h: &[i64]) -> i64 {
        self.0.iter().zip(h).map(|(a, b)| a * b).sum()
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedVariable {
    pub name: String,
    pub degree: u8,
    pub weight: Weight,
}

impl GradedVariable {
    pub fn new(name: impl Into<String>, degree: u8, weight: Weight) -> Self {
        GradedVariable {
            name: name.into(),
            degree,
            weight,
        }
    }
}

/// Degree-1 generator `w` with `d(w)` in the degree-0 ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Gen1 {
    pub var: GradedVariable,
    pub differential: Polynomial,
}

/// Degree-2 generator `e` with `d(e) = Σ c_w · w`, keyed by degree-1 name.
#[derive(Clone, Debug, PartialEq)]
pub struct Gen2 {
    pub var: GradedVariable,
    pub differential: BTreeMap<String, Polynomial>,
}

/// A standard-form presentation with amplitude at most two.
#[derive(Clone, Debug)]
pub struct GradedCdga {
    torus_rank: usize,
    ring: Ring,
    ring_vars: Vec<GradedVariable>,
    gens1: Vec<Gen1>,
    gens2: Vec<Gen2>,
    excluded: Excluded,
}

impl GradedCdga {
    /// Builds a presentation without validating it. Differentials must live in
    /// the ring spanned by `ring_vars` (see [`GradedCdga::ring_of`]).
    pub fn new(torus_rank: usize, ring_vars: Vec<GradedVariable>, gens1: Vec<Gen1>, gens2: Vec<Gen2>) -> Self {
        let ring = Self::ring_of(&ring_vars);
        for g in &gens1 {
            assert_eq!(g.differential.ring(), &ring, "gens1 differential outside the ring");
        }
        for g in &gens2 {
            for c in g.differential.values() {
                assert_eq!(c.ring(), &ring, "gens2 coefficient outside the ring");
            }
        }
        GradedCdga {
            torus_rank,
            ring,
            ring_vars,
            gens1,
            gens2,
            excluded: Excluded::Nothing,
        }
    }

    pub fn ring_of(ring_vars: &[GradedVariable]) -> Ring {
        let names: Vec<&str> = ring_vars.iter().map(|v| v.name.as_str()).collect();
        Ring::new(&names)
    }

    pub fn with_excluded(mut self, excluded: Excluded) -> Self {
        if let Excluded::Locus(i) = &excluded {
            assert_eq!(i.ring(), &self.ring, "excluded ideal outside the ring");
        }
        self.excluded = excluded;
        self
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ring_vars(&self) -> &[GradedVariable] {
        &self.ring_vars
    }

    pub fn gens1(&self) -> &[Gen1] {
        &self.gens1
    }

    pub fn gens2(&self) -> &[Gen2] {
        &self.gens2
    }

    pub fn excluded(&self) -> &Excluded {
        &self.excluded
    }

    /// The excluded locus as an ideal: `(0)` when nothing is excluded, `(1)`
    /// when the whole chart is unstable, the defining ideal otherwise.
    pub fn excluded_ideal(&self) -> Ideal {
        self.excluded.as_ideal(&self.ring)
    }

    pub fn ring_weights(&self) -> Vec<Weight> {
        self.ring_vars.iter().map(|v| v.weight.clone()).collect()
    }

    pub fn monomial_weight(&self, m: &Monomial) -> Weight {
        let mut w = Weight::zero(self.torus_rank);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                w = w.add(&self.ring_vars[i].weight.scale(e as i64));
            }
        }
        w
    }

    pub fn gen1(&self, name: &str) -> Option<&Gen1> {
        self.gens1.iter().find(|g| g.var.name == name)
    }

    /// Same presentation without degree-2 generators.
    pub fn without_gens2(&self) -> GradedCdga {
        GradedCdga {
            gens2: Vec::new(),
            ..self.clone()
        }
    }

    pub fn with_gens2(&self, gens2: Vec<Gen2>) -> GradedCdga {
        GradedCdga { gens2, ..self.clone() }
    }

    /// Copy with every generator list sorted by name (canonical form for
    /// isomorphism checks).
    pub fn canonical(&self) -> GradedCdga {
        let mut order: Vec<usize> = (0..self.ring_vars.len()).collect();
        order.sort_by(|&a, &b| self.ring_vars[a].name.cmp(&self.ring_vars[b].name));
        let ring_vars: Vec<GradedVariable> = order.iter().map(|&i| self.ring_vars[i].clone()).collect();
        let ring = Self::ring_of(&ring_vars);
        let mut map = vec![None; self.ring_vars.len()];
        for (j, &i) in order.iter().enumerate() {
            map[i] = Some(j);
        }
        let mv = |p: &Polynomial| p.embed(&ring, &map);
        let mut gens1: Vec<Gen1> = self
            .gens1
            .iter()
            .map(|g| Gen1 {
                var: g.var.clone(),
                differential: mv(&g.differential),
            })
            .collect();
        gens1.sort_by(|a, b| a.var.name.cmp(&b.var.name));
        let mut gens2: Vec<Gen2> = self
            .gens2
            .iter()
            .map(|g| Gen2 {
                var: g.var.clone(),
                differential: g.differential.iter().map(|(k, c)| (k.clone(), mv(c))).collect(),
            })
            .collect();
        gens2.sort_by(|a, b| a.var.name.cmp(&b.var.name));
        let excluded = self.excluded.map(&ring, &mv);
        GradedCdga {
            torus_rank: self.torus_rank,
            ring,
            ring_vars,
            gens1,
            gens2,
            excluded,
        }
    }

    /// Structural equality after canonical ordering; excluded loci compared as
    /// ideals.
    pub fn is_isomorphic_to(&self, other: &GradedCdga) -> bool {
        let a = self.canonical();
        let b = other.canonical();
        a.torus_rank == b.torus_rank
            && a.ring_vars == b.ring_vars
            && a.gens1 == b.gens1
            && a.gens2 == b.gens2
            && a.excluded.same_locus(&b.excluded)
    }
}

/// Basis of a subtorus, as cocharacters: integer vectors of length `k`,
/// linearly independent over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SubtorusBasis {
    basis: Vec<Vec<i64>>,
}

impl SubtorusBasis {
    pub fn new(k: usize, basis: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(bad) = basis.iter().find(|v| v.len() != k) {
            return Err(Error::Schema(format!("subtorus vector {bad:?} does not have length {k}")));
        }
        if linalg::integer_rank(&basis) != basis.len() {
            return Err(Error::Schema("subtorus basis vectors are linearly dependent".into()));
        }
        Ok(SubtorusBasis { basis })
    }

    /// The whole torus of rank `k`.
    pub fn full(k: usize) -> Self {
        SubtorusBasis {
            basis: (0..k)
                .map(|i| {
                    let mut v = vec![0; k];
                    v[i] = 1;
                    v
                })
                .collect(),
        }
    }

    pub fn trivial() -> Self {
        SubtorusBasis { basis: Vec::new() }
    }

    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Pairings of `w` with each basis vector.
    pub fn pairing(&self, w: &Weight) -> Vec<i64> {
        self.basis.iter().map(|h| w.dot(h)).collect()
    }

    pub fn fixes(&self, w: &Weight) -> bool {
        self.basis.iter().all(|h| w.dot(h) == 0)
    }

    /// Canonical basis of the same subtorus.
    pub fn canonical(&self) -> SubtorusBasis {
        SubtorusBasis {
            basis: linalg::canonical_integer_span(&self.basis),
        }
    }
}

pub fn classical_truncation(x: &GradedCdga) -> Ideal {
    Ideal::new(x.ring(), x.gens1().iter().map(|g| g.differential.clone()).collect())
}

/// Rank data of the tangent complex `[t ⊗ O -> T_V -> W1 -> W2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TangentRanks {
    pub torus_rank: usize,
    pub dim_v: usize,
    pub r1: usize,
    pub r2: usize,
    pub vdim: i64,
}

pub fn tangent_complex_ranks(x: &GradedCdga) -> TangentRanks {
    let (k, n, r1, r2) = (x.torus_rank(), x.ring_vars().len(), x.gens1().len(), x.gens2().len());
    TangentRanks {
        torus_rank: k,
        dim_v: n,
        r1,
        r2,
        vdim: n as i64 - r1 as i64 + r2 as i64 - k as i64,
    }
}
