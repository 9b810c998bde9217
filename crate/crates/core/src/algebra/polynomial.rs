use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::ring::Ring;
use super::Rational;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.len()), c);
        }
        p
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.len(), i), Rational::one())
    }

    pub fn var_named(ring: &Ring, name: &str) -> Option<Self> {
        ring.index_of(name).map(|i| Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ring.len());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(ring: &Ring, terms: I) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Does variable `i` occur in some term?
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponents()[i] > 0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (order.key(m), m, c)).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        v.into_iter().map(|(_, m, c)| (m, c)).collect()
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Makes the leading coefficient positive (keeps integer content).
    pub fn normalize_sign(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Ring homomorphism sending variable `i` to `images[i]`; all images must
    /// live in the same target ring.
    pub fn substitute(&self, images: &[Polynomial], target: &Ring) -> Polynomial {
        assert_eq!(images.len(), self.ring.len(), "one image per variable");
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &cache[1];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
                if t.is_zero() {
                    break;
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Re-indexes variables into `target`: variable `i` of this ring becomes
    /// variable `map[i]` of the target. Panics if a used variable maps to
    /// `None`.
    pub fn embed(&self, target: &Ring, map: &[Option<usize>]) -> Polynomial {
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &k) in m.exponents().iter().enumerate() {
                if k > 0 {
                    let j = map[i].expect("variable dropped by embedding but still in use");
                    e[j] += k;
                }
            }
            out.add_term(Monomial::from_exponents(e), c.clone());
        }
        out
    }

    /// Moves into `target` by variable name.
    pub fn embed_by_name(&self, target: &Ring) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = self.ring.names().iter().map(|n| target.index_of(n)).collect();
        for (i, slot) in map.iter().enumerate() {
            if slot.is_none() && self.involves(i) {
                return Err(Error::UnknownVariable(self.ring.name(i).to_string()));
            }
        }
        Ok(self.embed(target, &map))
    }

    /// Drops every term that involves one of `vars`, i.e. sets them to zero.
    pub fn kill_vars(&self, vars: &[usize]) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&i| m.exponents()[i] == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[i] -= 1;
            out.add_term(Monomial::from_exponents(ex), c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact quotient by a monomial divisor (a single variable or a monomial
    /// term with nonzero coefficient).
    pub fn exact_divide(&self, g: &Polynomial) -> Result<Polynomial> {
        if g.num_terms() != 1 {
            return Err(Error::NotDivisible(format!("divisor has {} terms; expected a monomial", g.num_terms())));
        }
        let (gm, gc) = g.terms.iter().next().expect("one term");
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            match gm.quotient_of(m) {
                Some(q) => out.add_term(q, c / gc),
                None => return Err(Error::NotDivisible("a term is not a multiple of the divisor".into())),
            }
        }
        Ok(out)
    }

    /// Multivariate division of `self` by the ordered list `divisors`. Returns
    /// quotients `q` and remainder `r` with `self = sum q_i d_i + r`; no term
    /// of `r` is divisible by any leading monomial.
    pub fn divide_by_list(&self, divisors: &[Polynomial], order: &MonomialOrder) -> (Vec<Polynomial>, Polynomial) {
        let leads: Vec<Option<(Monomial, Rational)>> = divisors
            .iter()
            .map(|d| d.leading_term(order).map(|(m, c)| (m.clone(), c.clone())))
            .collect();
        let mut quotients = vec![Polynomial::zero(&self.ring); divisors.len()];
        let mut remainder = Polynomial::zero(&self.ring);
        let mut p = self.clone();
        while let Some((lm, lc)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            let hit = leads.iter().enumerate().find_map(|(i, l)| {
                l.as_ref().and_then(|(dm, dc)| dm.quotient_of(&lm).map(|q| (i, q, &lc / dc)))
            });
            match hit {
                Some((i, q, c)) => {
                    quotients[i].add_term(q.clone(), c.clone());
                    p = &p - &divisors[i].mul_monomial(&q, &c);
                }
                None => {
                    remainder.add_term(lm.clone(), lc.clone());
                    p.terms.remove(&lm);
                }
            }
        }
        (quotients, remainder)
    }

    /// Integer content-free form: clears denominators and divides out the gcd
    /// of the numerators.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = num_bigint::BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            let n = (c * Rational::from_integer(lcm.clone())).to_integer();
            g = g.gcd(&n);
        }
        self.scale(&Rational::new(lcm, g))
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::io::printer::format_polynomial(self, &MonomialOrder::grevlex(self.ring.len())))
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", crate::io::printer::format_polynomial(self, &MonomialOrder::grevlex(self.ring.len())))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = Polynomial::zero(&self.ring);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn xy() -> (Ring, Polynomial, Polynomial) {
        let r = Ring::new(&["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        (r, x, y)
    }

    #[test]
    fn exact_divide_examples() {
        let r = Ring::new(&["xi", "v"]);
        let xi = Polynomial::var(&r, 0);
        let v = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        let f = &xi.pow(3) * &v;
        assert_eq!(f.exact_divide(&xi).unwrap(), &xi.pow(2) * &v);
        let f = &(&xi.pow(2) * &v) + &xi;
        assert_eq!(f.exact_divide(&xi).unwrap(), &(&xi * &v) + &one);
        let f = &(&xi * &v) + &one;
        assert!(matches!(f.exact_divide(&xi), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn division_by_list_matches_hand_computation() {
        let (r, x, y) = xy();
        let lex = MonomialOrder::lex(2);
        let f = &x * &y.pow(2);
        let (qs, rem) = f.divide_by_list(&[x.clone(), y.clone()], &lex);
        assert!(rem.is_zero());
        assert_eq!(qs[0], y.pow(2));
        assert!(qs[1].is_zero());
        let f = &x + &Polynomial::one(&r);
        let (_, rem) = f.divide_by_list(&[x.clone(), y.clone()], &lex);
        assert_eq!(rem, Polynomial::one(&r));
    }

    #[test]
    fn substitute_and_derivative() {
        let (r, x, y) = xy();
        let f = &x.pow(2) * &y.pow(2);
        // d/dx x^2 y^2 = 2 x y^2
        assert_eq!(f.derivative(0), (&x * &y.pow(2)).scale(&q(2)));
        // x -> y, y -> x swaps
        let g = f.substitute(&[y.clone(), x.clone()], &r);
        assert_eq!(g, f);
        let h = (&x - &y).substitute(&[x.clone(), x.clone()], &r);
        assert!(h.is_zero());
    }

    #[test]
    fn primitive_clears_content() {
        let (_, x, y) = xy();
        let f = (&x.scale(&Rational::new(2.into(), 3.into()))) + &y.scale(&Rational::new(4.into(), 9.into()));
        let p = f.primitive();
        assert_eq!(p, &x.scale(&q(3)) + &y.scale(&q(2)));
    }
}
