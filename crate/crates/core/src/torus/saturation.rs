use crate::algebra::{Ideal, Monomial, Polynomial, Rational};
use crate::cdga::{GradedCdga, SubtorusBasis};
use crate::error::{Error, Result};
use crate::linalg;

use super::moving_indices;

pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// Generators of the saturation of the fixed locus, with a flag telling
/// whether the generator list is known to be complete.
#[derive(Clone, Debug)]
pub struct SaturationIdeal {
    pub ideal: Ideal,
    pub certified: bool,
}

/// Ideal `J` whose zero set is the set of points whose orbit closure meets
/// the fixed locus of `h` (radical-level).
pub fn saturation_ideal(x: &GradedCdga, h: &SubtorusBasis, degree_cap: u32) -> Result<Ideal> {
    let s = saturation_ideal_partial(x, h, degree_cap)?;
    if s.certified {
        Ok(s.ideal)
    } else {
        Err(Error::DegreeCapReached {
            cap: degree_cap,
            bound: completeness_bound(x, h),
        })
    }
}

/// Like [`saturation_ideal`] but returns possibly incomplete generators
/// instead of failing at the degree cap.
pub fn saturation_ideal_partial(x: &GradedCdga, h: &SubtorusBasis, degree_cap: u32) -> Result<SaturationIdeal> {
    let ring = x.ring();
    let moving = moving_indices(x, h);
    if h.dim() == 1 {
        let pairing = |i: usize| x.ring_vars()[i].weight.dot(&h.vectors()[0]);
        let pos: Vec<usize> = moving.iter().copied().filter(|&i| pairing(i) > 0).collect();
        let neg: Vec<usize> = moving.iter().copied().filter(|&i| pairing(i) < 0).collect();
        let ideal = Ideal::of_vars(ring, &pos).intersect(&Ideal::of_vars(ring, &neg));
        return Ok(SaturationIdeal { ideal, certified: true });
    }

    let bound = completeness_bound(x, h);
    let limit = if bound <= degree_cap as u64 { bound as u32 } else { degree_cap };
    let pairings: Vec<Vec<i64>> = moving.iter().map(|&i| h.pairing(&x.ring_vars()[i].weight)).collect();
    let mut minimal: Vec<Vec<u32>> = Vec::new();
    for degree in 1..=limit {
        for e in compositions(moving.len(), degree) {
            let invariant = (0..h.dim()).all(|j| e.iter().zip(&pairings).map(|(&a, p)| a as i64 * p[j]).sum::<i64>() == 0);
            if !invariant {
                continue;
            }
            let reducible = minimal
                .iter()
                .any(|m| m.iter().zip(&e).all(|(a, b)| a <= b));
            if !reducible {
                minimal.push(e);
            }
        }
    }
    let generators = minimal
        .iter()
        .map(|e| {
            let mut full = vec![0u32; ring.len()];
            for (&i, &a) in moving.iter().zip(e) {
                full[i] = a;
            }
            Polynomial::monomial(ring, Monomial::from_exponents(full), Rational::from_integer(1.into()))
        })
        .collect();
    Ok(SaturationIdeal {
        ideal: Ideal::new(ring, generators),
        certified: bound <= degree_cap as u64,
    })
}

/// Degree bound for the minimal invariant monomials: each lies in the half-open
/// parallelepiped of at most `m - r` extreme rays, and every extreme ray is a
/// circuit whose entries are bounded by the largest `r × r` minor.
fn completeness_bound(x: &GradedCdga, h: &SubtorusBasis) -> u64 {
    let moving = moving_indices(x, h);
    let m = moving.len();
    // rows indexed by subtorus vectors, columns by moving variables
    let a: Vec<Vec<i64>> = (0..h.dim())
        .map(|j| moving.iter().map(|&i| x.ring_vars()[i].weight.dot(&h.vectors()[j])).collect())
        .collect();
    let r = linalg::integer_rank(&a);
    if r == 0 || m <= r {
        return 1;
    }
    let mut delta: u64 = 0;
    for rows in subsets(a.len(), r) {
        for cols in subsets(m, r) {
            let minor: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| a[i][j]).collect()).collect();
            delta = delta.max(abs_det(&minor));
        }
    }
    (m - r) as u64 * (r as u64 + 1) * delta
}

fn abs_det(m: &[Vec<i64>]) -> u64 {
    use num_traits::{Signed, ToPrimitive, Zero};
    let mut rows = linalg::to_rational(m);
    let n = rows.len();
    let mut det = Rational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !rows[i][c].is_zero()) else {
            return 0;
        };
        if p != c {
            rows.swap(p, c);
            det = -det;
        }
        det *= rows[c][c].clone();
        for i in c + 1..n {
            let f = &rows[i][c] / &rows[c][c];
            for j in c..n {
                let delta = &f * &rows[c][j];
                rows[i][j] -= delta;
            }
        }
    }
    det.abs().to_integer().to_u64().expect("minor fits in u64")
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors of `n` variables with total degree `d`.
fn compositions(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{GradedVariable, Weight};

    fn cdga(weights: &[(&str, Vec<i64>)]) -> GradedCdga {
        let k = weights[0].1.len();
        let vs = weights.iter().map(|(n, w)| GradedVariable::new(*n, 0, Weight(w.clone()))).collect();
        GradedCdga::new(k, vs, vec![], vec![])
    }

    fn prod(x: &GradedCdga, names: &[&str]) -> Polynomial {
        names
            .iter()
            .fold(Polynomial::one(x.ring()), |acc, n| &acc * &Polynomial::var_named(x.ring(), n).unwrap())
    }

    #[test]
    fn opposite_weights_give_the_axes() {
        let x = cdga(&[("x", vec![1]), ("y", vec![-1])]);
        let j = saturation_ideal(&x, &SubtorusBasis::full(1), DEFAULT_DEGREE_CAP).unwrap();
        assert!(j.equals(&Ideal::new(x.ring(), vec![prod(&x, &["x", "y"])])));
    }

    #[test]
    fn same_sign_weights_give_zero() {
        let x = cdga(&[("x", vec![1]), ("y", vec![1])]);
        let j = saturation_ideal(&x, &SubtorusBasis::full(1), DEFAULT_DEGREE_CAP).unwrap();
        assert!(j.is_zero());
    }

    #[test]
    fn weight_zero_variable_is_ignored() {
        let x = cdga(&[("x", vec![1]), ("y", vec![-1]), ("z", vec![0])]);
        let j = saturation_ideal(&x, &SubtorusBasis::full(1), DEFAULT_DEGREE_CAP).unwrap();
        assert!(j.equals(&Ideal::new(x.ring(), vec![prod(&x, &["x", "y"])])));
    }

    #[test]
    fn rank_two_invariant_monomials() {
        // weights (1,0), (-1,1), (0,-1): the only invariant is x*y*z
        let x = cdga(&[("x", vec![1, 0]), ("y", vec![-1, 1]), ("z", vec![0, -1])]);
        let j = saturation_ideal(&x, &SubtorusBasis::full(2), DEFAULT_DEGREE_CAP).unwrap();
        assert!(j.equals(&Ideal::new(x.ring(), vec![prod(&x, &["x", "y", "z"])])));
    }

    #[test]
    fn degree_cap_is_reported() {
        let x = cdga(&[("a", vec![5, 0]), ("b", vec![-7, 0]), ("c", vec![0, 1]), ("d", vec![0, -1])]);
        let err = saturation_ideal(&x, &SubtorusBasis::full(2), 4).unwrap_err();
        assert!(matches!(err, Error::DegreeCapReached { cap: 4, .. }));
        let partial = saturation_ideal_partial(&x, &SubtorusBasis::full(2), 4).unwrap();
        assert!(!partial.certified);
        // c*d is found, a^7 b^5 is not
        assert_eq!(partial.ideal.generators().len(), 1);
        let full = saturation_ideal(&x, &SubtorusBasis::full(2), 200).unwrap();
        assert_eq!(full.generators().len(), 2);
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(compositions(0, 0).len(), 1);
    }
}
