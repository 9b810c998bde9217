#![allow(dead_code)]

use std::collections::BTreeMap;

use kirwan_core::algebra::{q, Monomial, Polynomial, Rational, Ring};
use kirwan_core::cdga::{Gen1, Gen2, GradedCdga, GradedVariable, SubtorusBasis, Weight};
use kirwan_core::linalg;
use kirwan_core::reduction::dagger_check;
use kirwan_core::cdga::validate_presentation;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    if n == 0 {
        return if d == 0 { vec![Monomial::from_exponents(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|e| monomials_of_degree(n, e)).collect()
}

/// Is `target` in the rational span of `vectors`? Plain Gaussian elimination
/// on coefficient vectors.
pub fn in_span(vectors: &[Polynomial], target: &Polynomial) -> bool {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in vectors.iter().chain(std::iter::once(target)) {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let row = |p: &Polynomial| {
        let mut r = vec![Rational::zero(); index.len()];
        for (m, c) in p.terms() {
            r[index[m]] = c.clone();
        }
        r
    };
    let rows: Vec<Vec<Rational>> = vectors.iter().map(row).collect();
    let before = linalg::rank(&rows);
    let mut with = rows;
    with.push(row(target));
    linalg::rank(&with) == before
}

/// Membership of `f` in `(gens)` with cofactors of total degree at most
/// `bound - deg(g_i)`.
pub fn bounded_member(f: &Polynomial, gens: &[Polynomial], bound: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    let ring = f.ring();
    let mut products = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let dg = g.total_degree().unwrap();
        if dg > bound {
            continue;
        }
        for m in monomials_up_to(ring.len(), bound - dg) {
            products.push(g.mul_monomial(&m, &q(1)));
        }
    }
    in_span(&products, f)
}

fn homogeneous_parts(f: &Polynomial) -> BTreeMap<u32, Polynomial> {
    let mut parts: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        parts.entry(m.degree()).or_default().push((m.clone(), c.clone()));
    }
    parts
        .into_iter()
        .map(|(d, ts)| (d, Polynomial::from_terms(f.ring(), ts)))
        .collect()
}

/// Exact membership for an ideal with homogeneous generators: each
/// homogeneous component of `f` must be a combination of `m * g` in its
/// degree.
pub fn homogeneous_member(f: &Polynomial, gens: &[Polynomial]) -> bool {
    let ring = f.ring();
    homogeneous_parts(f).into_iter().all(|(d, part)| {
        let mut products = Vec::new();
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let dg = g.total_degree().unwrap();
            if dg <= d {
                for m in monomials_of_degree(ring.len(), d - dg) {
                    products.push(g.mul_monomial(&m, &q(1)));
                }
            }
        }
        in_span(&products, &part)
    })
}

pub fn is_homogeneous(p: &Polynomial) -> bool {
    homogeneous_parts(p).len() <= 1
}

pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Ring, max_deg: u32, max_terms: usize) -> Polynomial {
    let pool = monomials_up_to(ring.len(), max_deg);
    let n = rng.gen_range(1..=max_terms);
    Polynomial::from_terms(
        ring,
        (0..n).map(|_| (pool.choose(rng).unwrap().clone(), q(nonzero(rng, 3)))),
    )
}

pub fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let v = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

fn weight_of(m: &Monomial, weights: &[i64]) -> i64 {
    m.exponents().iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
}

/// Random valid rank-one presentation: at most three ring variables, at most
/// three degree-1 generators with weight-homogeneous differentials of degree
/// at most four, and possibly a Koszul-type degree-2 generator satisfying (†).
pub fn random_scene(rng: &mut ChaCha8Rng) -> GradedCdga {
    let n = rng.gen_range(1..=3);
    let names = ["a", "b", "c"];
    let mut weights: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
    if weights.iter().all(|&w| w == 0) {
        weights[0] = 1;
    }
    let vars: Vec<GradedVariable> = (0..n)
        .map(|i| GradedVariable::new(names[i], 0, Weight(vec![weights[i]])))
        .collect();
    let ring = GradedCdga::ring_of(&vars);
    let pool: Vec<Monomial> = monomials_up_to(n, 4).into_iter().filter(|m| m.degree() > 0).collect();

    let mut gens1 = Vec::new();
    for j in 0..rng.gen_range(0..=3) {
        let target = weight_of(pool.choose(rng).unwrap(), &weights);
        let same: Vec<&Monomial> = pool.iter().filter(|m| weight_of(m, &weights) == target).collect();
        let terms = rng.gen_range(1..=3);
        let f = Polynomial::from_terms(
            &ring,
            (0..terms).map(|_| ((*same.choose(rng).unwrap()).clone(), q(nonzero(rng, 3)))),
        );
        gens1.push(Gen1 {
            var: GradedVariable::new(format!("w{}", j + 1), 1, Weight(vec![target])),
            differential: f,
        });
    }

    let mut gens2 = Vec::new();
    if gens1.len() >= 2 && rng.gen_bool(0.5) {
        let mut idx: Vec<usize> = (0..gens1.len()).collect();
        idx.shuffle(rng);
        let (a, b) = (&gens1[idx[0]], &gens1[idx[1]]);
        let mut d = BTreeMap::new();
        if !b.differential.is_zero() {
            d.insert(a.var.name.clone(), b.differential.clone());
        }
        if !a.differential.is_zero() {
            d.insert(b.var.name.clone(), -&a.differential);
        }
        if !d.is_empty() {
            let w = a.var.weight.add(&b.var.weight);
            gens2.push(Gen2 { var: GradedVariable::new("e1", 2, w), differential: d });
        }
    }
    let x = GradedCdga::new(1, vars.clone(), gens1.clone(), gens2);
    let x = if dagger_check(&x, &SubtorusBasis::full(1)) { x } else { GradedCdga::new(1, vars, gens1, vec![]) };
    assert!(validate_presentation(&x).passed(), "generator produced an invalid scene");
    x
}

pub fn scene_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("scenes").join(name)
}

/// Row-echelon span of `m * g` over every generator `g` and monomial `m`
/// with `deg(m * g) <= bound`. Independent of any Gröbner machinery.
pub struct MacaulaySpan {
    pub bound: u32,
    nvars: usize,
    pivots: BTreeMap<Monomial, BTreeMap<Monomial, Rational>>,
}

fn dense(p: &Polynomial) -> BTreeMap<Monomial, Rational> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

impl MacaulaySpan {
    pub fn new(gens: &[Polynomial], nvars: usize, bound: u32) -> MacaulaySpan {
        let mut span = MacaulaySpan { bound, nvars, pivots: BTreeMap::new() };
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let dg = g.total_degree().unwrap();
            if dg > bound {
                continue;
            }
            for m in monomials_up_to(nvars, bound - dg) {
                let row = span.reduce(dense(&g.mul_monomial(&m, &q(1))));
                if let Some((lead, _)) = row.last_key_value() {
                    span.pivots.insert(lead.clone(), row);
                }
            }
        }
        span
    }

    fn reduce(&self, mut v: BTreeMap<Monomial, Rational>) -> BTreeMap<Monomial, Rational> {
        loop {
            let hit = v.iter().rev().find(|(m, _)| self.pivots.contains_key(*m)).map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = hit else { return v };
            let row = &self.pivots[&m];
            let factor = &c / &row[&m];
            for (k, a) in row {
                let e = v.entry(k.clone()).or_insert_with(Rational::zero);
                *e -= &factor * a;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
    }

    /// Certificate of membership with every product of degree at most `bound`.
    pub fn contains(&self, f: &Polynomial) -> bool {
        f.total_degree().is_none_or(|d| d <= self.bound) && self.reduce(dense(f)).is_empty()
    }

    /// Some `x_var^n * f` with `deg <= bound` lies in the span.
    pub fn saturation_contains(&self, f: &Polynomial, var: usize) -> bool {
        if f.is_zero() {
            return true;
        }
        let x = Polynomial::var(f.ring(), var);
        let d = f.total_degree().unwrap();
        (0..=self.bound.saturating_sub(d)).any(|n| self.contains(&(&x.pow(n) * f)))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }
}
