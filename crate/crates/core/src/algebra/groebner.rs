//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller installation of the coprime and chain criteria.
//!
//! Polynomials are converted into an order-specific working form in which
//! every monomial carries its order key; since keys are additive, shifting a
//! basis element by a monomial never needs to recompute them.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::ring::Ring;
use super::Rational;

type Key = Vec<i64>;
type TermMap = BTreeMap<Key, (Monomial, Rational)>;

#[derive(Clone, Debug)]
struct Term {
    key: Key,
    mono: Monomial,
    coef: Rational,
}

/// Monic basis element, terms sorted descending.
#[derive(Clone, Debug)]
struct Elem {
    terms: Vec<Term>,
}

impl Elem {
    fn lead(&self) -> &Term {
        &self.terms[0]
    }

    fn from_map(map: TermMap) -> Option<Elem> {
        let mut terms: Vec<Term> = map
            .into_iter()
            .rev()
            .map(|(key, (mono, coef))| Term { key, mono, coef })
            .collect();
        let lc = terms.first()?.coef.clone();
        if !lc.is_one() {
            for t in &mut terms {
                t.coef = &t.coef / &lc;
            }
        }
        Some(Elem { terms })
    }

    fn to_polynomial(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|t| (t.mono.clone(), t.coef.clone())))
    }
}

fn to_map(p: &Polynomial, order: &MonomialOrder) -> TermMap {
    p.terms()
        .map(|(m, c)| (order.key(m), (m.clone(), c.clone())))
        .collect()
}

fn add_key(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `acc -= c * q * g` where `g` is monic and its leading term is skipped
/// (the caller has already removed the cancelled term).
fn sub_shifted_tail(acc: &mut TermMap, g: &Elem, q: &Monomial, qkey: &[i64], c: &Rational) {
    for t in &g.terms[1..] {
        let key = add_key(&t.key, qkey);
        let delta = c * &t.coef;
        match acc.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert((t.mono.mul(q), -delta));
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().1 -= delta;
                if o.get().1.is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// Full reduction of `p` by the elements indexed by `active`.
fn reduce(mut p: TermMap, elems: &[Elem], active: &[usize], order: &MonomialOrder) -> TermMap {
    let mut rem = TermMap::new();
    while let Some((key, (mono, coef))) = p.pop_last() {
        let hit = active
            .iter()
            .map(|&i| &elems[i])
            .find(|g| g.lead().mono.divides(&mono));
        match hit {
            Some(g) => {
                let q = g.lead().mono.quotient_of(&mono).expect("divides");
                let qkey = order.key(&q);
                sub_shifted_tail(&mut p, g, &q, &qkey, &coef);
            }
            None => {
                rem.insert(key, (mono, coef));
            }
        }
    }
    rem
}

fn s_polynomial(f: &Elem, g: &Elem, order: &MonomialOrder) -> TermMap {
    let l = f.lead().mono.lcm(&g.lead().mono);
    let qf = f.lead().mono.quotient_of(&l).expect("lcm");
    let qg = g.lead().mono.quotient_of(&l).expect("lcm");
    let mut acc = TermMap::new();
    let kf = order.key(&qf);
    for t in &f.terms[1..] {
        acc.insert(add_key(&t.key, &kf), (t.mono.mul(&qf), t.coef.clone()));
    }
    let kg = order.key(&qg);
    sub_shifted_tail(&mut acc, g, &qg, &kg, &Rational::one());
    acc
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: Key,
}

struct Buchberger<'a> {
    order: &'a MonomialOrder,
    elems: Vec<Elem>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<'a> Buchberger<'a> {
    fn new(order: &'a MonomialOrder) -> Self {
        Buchberger {
            order,
            elems: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.elems[i].lead().mono.lcm(&self.elems[j].lead().mono);
        let key = self.order.key(&lcm);
        Pair { i, j, lcm, key }
    }

    /// Gebauer–Möller update with the new element `h`.
    fn update(&mut self, h: Elem) {
        let hi = self.elems.len();
        self.elems.push(h);
        let lh = self.elems[hi].lead().mono.clone();

        let mut candidates: Vec<Pair> = self.active.iter().map(|&g| self.make_pair(hi, g)).collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let coprime = lh.is_coprime(&self.elems[p.j].lead().mono);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|o| o.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|p| !lh.is_coprime(&self.elems[p.j].lead().mono))
            .collect();

        let elems = &self.elems;
        self.pairs.retain(|p| {
            let lhi = lh.lcm(&elems[p.i].lead().mono);
            let lhj = lh.lcm(&elems[p.j].lead().mono);
            !(lh.divides(&p.lcm) && lhi != p.lcm && lhj != p.lcm)
        });
        self.pairs.extend(new_pairs);

        self.active.retain(|&g| !lh.divides(&elems[g].lead().mono));
        self.active.push(hi);
    }

    fn select(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.key.cmp(&b.key).then((a.i, a.j).cmp(&(b.i, b.j))))
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }

    fn run(&mut self) {
        while let Some(pair) = self.select() {
            let s = s_polynomial(&self.elems[pair.i], &self.elems[pair.j], self.order);
            let r = reduce(s, &self.elems, &self.active, self.order);
            if let Some(h) = Elem::from_map(r) {
                self.update(h);
            }
        }
    }

    /// Interreduces the active set into the reduced basis, sorted by
    /// descending leading monomial.
    fn reduced(&self) -> Vec<Elem> {
        let mut out: Vec<Elem> = Vec::with_capacity(self.active.len());
        for (pos, &i) in self.active.iter().enumerate() {
            let g = &self.elems[i];
            let others: Vec<usize> = self
                .active
                .iter()
                .enumerate()
                .filter(|(p, _)| *p != pos)
                .map(|(_, &k)| k)
                .collect();
            let tail: TermMap = g.terms[1..]
                .iter()
                .map(|t| (t.key.clone(), (t.mono.clone(), t.coef.clone())))
                .collect();
            let mut rem = reduce(tail, &self.elems, &others, self.order);
            let lead = g.lead();
            rem.insert(lead.key.clone(), (lead.mono.clone(), lead.coef.clone()));
            out.push(Elem::from_map(rem).expect("nonzero"));
        }
        out.sort_by(|a, b| b.lead().key.cmp(&a.lead().key));
        out
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, monic and sorted by
/// descending leading monomial. The empty list generates the zero ideal.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let Some(ring) = gens.first().map(|g| g.ring().clone()) else {
        return Vec::new();
    };
    assert_eq!(order.nvars(), ring.len(), "order/ring size mismatch");
    if gens.iter().any(|g| !g.is_zero() && g.is_constant()) {
        return vec![Polynomial::one(&ring)];
    }
    let mut bb = Buchberger::new(order);
    for g in gens {
        assert_eq!(g.ring(), &ring, "generators over different rings");
        let r = reduce(to_map(g, order), &bb.elems, &bb.active, order);
        if let Some(h) = Elem::from_map(r) {
            bb.update(h);
        }
    }
    bb.run();
    bb.reduced().iter().map(|e| e.to_polynomial(&ring)).collect()
}

/// Remainder of `f` on division by a Gröbner basis; zero iff `f` lies in the
/// ideal the basis generates.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let elems: Vec<Elem> = basis
        .iter()
        .filter_map(|b| Elem::from_map(to_map(b, order)))
        .collect();
    let active: Vec<usize> = (0..elems.len()).collect();
    let rem = reduce(to_map(f, order), &elems, &active, order);
    Polynomial::from_terms(f.ring(), rem.into_values())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    fn xy() -> (Ring, Polynomial, Polynomial) {
        let r = Ring::new(&["x", "y"]);
        (r.clone(), Polynomial::var(&r, 0), Polynomial::var(&r, 1))
    }

    #[test]
    fn hand_buchberger_example() {
        // {x^2 - 1, xy - 1}, lex x > y  ->  {x - y, y^2 - 1}
        let (r, x, y) = xy();
        let one = Polynomial::one(&r);
        let gens = vec![&x.pow(2) - &one, &(&x * &y) - &one];
        let gb = groebner_basis(&gens, &MonomialOrder::lex(2));
        assert_eq!(gb, vec![&x - &y, &y.pow(2) - &one]);
    }

    #[test]
    fn trivial_inputs() {
        let (_, x, _) = xy();
        assert_eq!(groebner_basis(&[x.clone()], &MonomialOrder::lex(2)), vec![x.clone()]);
        assert!(groebner_basis(&[], &MonomialOrder::lex(2)).is_empty());
        let (r, _, _) = xy();
        assert!(groebner_basis(&[Polynomial::zero(&r)], &MonomialOrder::lex(2)).is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let (r, x, y) = xy();
        let lex = MonomialOrder::lex(2);
        let basis = vec![x.clone(), y.clone()];
        assert!(normal_form(&(&x.pow(2) * &y), &basis, &lex).is_zero());
        assert_eq!(normal_form(&(&x + &Polynomial::one(&r)), &basis, &lex), Polynomial::one(&r));
        // x^2 mod (x - y) = y^2
        let gb = groebner_basis(&[&x - &y], &lex);
        assert_eq!(normal_form(&x.pow(2), &gb, &lex), y.pow(2));
    }

    #[test]
    fn basis_is_monic() {
        let (_, x, y) = xy();
        let gb = groebner_basis(&[(&x * &y).scale(&q(3)) - y.scale(&q(6))], &MonomialOrder::grevlex(2));
        assert_eq!(gb.len(), 1);
        let (_, c) = gb[0].leading_term(&MonomialOrder::grevlex(2)).unwrap();
        assert!(c.is_one());
    }
}
