use std::sync::OnceLock;

use super::groebner::{groebner_basis, normal_form};
use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// An ideal given by generators, with a lazily computed reduced Gröbner basis
/// under graded reverse lex in declared variable order.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    basis: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            basis,
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_tuple("Ideal").field(&self.generators).finish()
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Self {
        for g in &generators {
            assert_eq!(g.ring(), ring, "generator outside the ideal's ring");
        }
        Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)])
    }

    /// Ideal generated by the listed variables.
    pub fn of_vars(ring: &Ring, vars: &[usize]) -> Self {
        Self::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i)).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn default_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.ring.len())
    }

    /// Reduced grevlex Gröbner basis (cached).
    pub fn basis(&self) -> &[Polynomial] {
        self.basis
            .get_or_init(|| groebner_basis(&self.generators, &self.default_order()))
    }

    pub fn basis_in(&self, order: &MonomialOrder) -> Vec<Polynomial> {
        if *order == self.default_order() {
            return self.basis().to_vec();
        }
        groebner_basis(&self.generators, order)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self.basis(), &self.default_order())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        assert_eq!(f.ring(), &self.ring, "ring mismatch");
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    /// Mutual containment.
    pub fn equals(&self, other: &Ideal) -> bool {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        self.basis().iter().any(Polynomial::is_constant)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                g.push(a * b);
            }
        }
        Ideal::new(&self.ring, g)
    }

    pub fn add_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut g = self.generators.clone();
        g.extend(extra);
        Ideal::new(&self.ring, g)
    }

    /// Applies a ring map to every generator.
    pub fn map(&self, target: &Ring, f: impl Fn(&Polynomial) -> Polynomial) -> Ideal {
        Ideal::new(target, self.generators.iter().map(f).collect())
    }

    /// `I ∩ Q[remaining variables]`, returned as an ideal of the subring on the
    /// remaining variables (in their declared order).
    pub fn eliminate(&self, vars: &[usize]) -> Ideal {
        let (_, kept) = self.eliminate_in_place(vars);
        let remaining: Vec<usize> = (0..self.ring.len()).filter(|i| !vars.contains(i)).collect();
        let names: Vec<&str> = remaining.iter().map(|&i| self.ring.name(i)).collect();
        let target = Ring::new(&names);
        let mut map = vec![None; self.ring.len()];
        for (j, &i) in remaining.iter().enumerate() {
            map[i] = Some(j);
        }
        Ideal::new(&target, kept.iter().map(|g| g.embed(&target, &map)).collect())
    }

    /// Elimination ideal kept inside the ambient ring.
    pub fn eliminate_in_place(&self, vars: &[usize]) -> (Ideal, Vec<Polynomial>) {
        if vars.is_empty() {
            return (self.clone(), self.basis().to_vec());
        }
        let order = MonomialOrder::elimination(self.ring.len(), vars);
        let gb = groebner_basis(&self.generators, &order);
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|g| vars.iter().all(|&v| !g.involves(v)))
            .collect();
        (Ideal::new(&self.ring, kept.clone()), kept)
    }

    /// Eliminates variables by name.
    pub fn eliminate_named(&self, names: &[&str]) -> Result<Ideal> {
        let idx = names
            .iter()
            .map(|n| self.ring.index_of(n).ok_or_else(|| Error::UnknownVariable(n.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.eliminate(&idx))
    }

    /// `(I : f^∞)` via an auxiliary variable `s`: eliminate `s` from
    /// `I + (s f - 1)`.
    pub fn saturate(&self, f: &Polynomial) -> Ideal {
        assert!(!f.is_zero(), "saturation by zero");
        assert_eq!(f.ring(), &self.ring, "ring mismatch");
        if f.is_constant() || self.is_zero() {
            return Ideal::new(&self.ring, self.generators.clone());
        }
        let aux = self.ring.fresh_name("s", &[]);
        let ext = self.ring.with_front(&[aux]);
        let shift: Vec<Option<usize>> = (0..self.ring.len()).map(|i| Some(i + 1)).collect();
        let s = Polynomial::var(&ext, 0);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.embed(&ext, &shift)).collect();
        gens.push(&(&s * &f.embed(&ext, &shift)) - &Polynomial::one(&ext));
        let (_, kept) = Ideal::new(&ext, gens).eliminate_in_place(&[0]);
        let mut back = vec![None; ext.len()];
        for i in 0..self.ring.len() {
            back[i + 1] = Some(i);
        }
        Ideal::new(&self.ring, kept.iter().map(|g| g.embed(&self.ring, &back)).collect())
    }

    /// `I ∩ J` via `t I + (1 - t) J` with `t` eliminated.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(&self.ring);
        }
        let aux = self.ring.fresh_name("t", &[]);
        let ext = self.ring.with_front(&[aux]);
        let shift: Vec<Option<usize>> = (0..self.ring.len()).map(|i| Some(i + 1)).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| &t * &g.embed(&ext, &shift)).collect();
        gens.extend(other.generators.iter().map(|g| &one_minus_t * &g.embed(&ext, &shift)));
        let (_, kept) = Ideal::new(&ext, gens).eliminate_in_place(&[0]);
        let mut back = vec![None; ext.len()];
        for i in 0..self.ring.len() {
            back[i + 1] = Some(i);
        }
        Ideal::new(&self.ring, kept.iter().map(|g| g.embed(&self.ring, &back)).collect())
    }
}
