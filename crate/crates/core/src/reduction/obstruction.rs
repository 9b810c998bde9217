use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Rational;
use crate::cdga::{tangent_complex_ranks, GradedCdga, SubtorusBasis};
use crate::error::{Error, Result};
use crate::linalg;
use crate::torus::{stabilizer_stratification, DEFAULT_VARIABLE_CAP};

use super::checks::{dagger_check, quasi_smooth_check};

const RANK_TRIALS: usize = 3;
const POINT_ATTEMPTS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub vdim: i64,
    /// `(rank T_{V/G}, rank F)`; absent when (†) fails.
    pub e_ranks: Option<(i64, i64)>,
    pub quasi_smooth: bool,
    pub dagger: bool,
    pub dm: bool,
    pub fully_unstable: bool,
}

/// Report for a chart, computing the DM flag from its stratification.
pub fn obstruction_report(leaf: &GradedCdga, seed: u64) -> Result<ObstructionReport> {
    let dm = stabilizer_stratification(leaf, DEFAULT_VARIABLE_CAP)?.max_dim == 0;
    leaf_report(leaf, dm, seed)
}

pub(crate) fn leaf_report(leaf: &GradedCdga, dm: bool, seed: u64) -> Result<ObstructionReport> {
    let ranks = tangent_complex_ranks(leaf);
    let dagger = dagger_check(leaf, &SubtorusBasis::full(leaf.torus_rank()));
    let fully_unstable = leaf.excluded().is_everything();
    let e_ranks = if dagger && !fully_unstable {
        let delta = generic_delta_rank(leaf, seed)?;
        Some((
            ranks.dim_v as i64 - ranks.torus_rank as i64,
            ranks.r1 as i64 - delta as i64,
        ))
    } else {
        None
    };
    Ok(ObstructionReport {
        vdim: ranks.vdim,
        e_ranks,
        quasi_smooth: quasi_smooth_check(leaf),
        dagger,
        dm,
        fully_unstable,
    })
}

/// Rank of the coefficient matrix of `d` on degree-2 generators at a generic
/// point: three random rational points off the excluded locus, majority vote.
pub fn generic_delta_rank(x: &GradedCdga, seed: u64) -> Result<usize> {
    if x.gens2().is_empty() || x.gens1().is_empty() {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks = Vec::with_capacity(RANK_TRIALS);
    for _ in 0..RANK_TRIALS {
        let point = random_point(x, &mut rng)?;
        let rows: Vec<Vec<Rational>> = x
            .gens2()
            .iter()
            .map(|e| {
                x.gens1()
                    .iter()
                    .map(|w| e.differential.get(&w.var.name).map_or_else(|| Rational::from_integer(0.into()), |c| c.evaluate(&point)))
                    .collect()
            })
            .collect();
        ranks.push(linalg::rank(&rows));
    }
    for &r in &ranks {
        if ranks.iter().filter(|&&s| s == r).count() * 2 > RANK_TRIALS {
            return Ok(r);
        }
    }
    Err(Error::RankUndetermined(ranks))
}

fn random_point(x: &GradedCdga, rng: &mut ChaCha8Rng) -> Result<Vec<Rational>> {
    let n = x.ring_vars().len();
    for _ in 0..POINT_ATTEMPTS {
        let point: Vec<Rational> = (0..n)
            .map(|_| {
                let mut num: i64 = rng.gen_range(1..=97);
                if rng.gen_bool(0.5) {
                    num = -num;
                }
                Rational::new(BigInt::from(num), BigInt::from(rng.gen_range(1..=11)))
            })
            .collect();
        if x.excluded().avoids(&point) {
            return Ok(point);
        }
    }
    Err(Error::RankUndetermined(Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Ideal, Polynomial};
    use crate::blowup::blowup_charts;
    use crate::cdga::{from_invariant_function, Excluded, GradedVariable, Weight};

    #[test]
    fn darboux_chart_has_vdim_zero() {
        let vars = vec![
            GradedVariable::new("x", 0, Weight(vec![1])),
            GradedVariable::new("y", 0, Weight(vec![-1])),
        ];
        let r = GradedCdga::ring_of(&vars);
        let f = &Polynomial::var(&r, 0).pow(2) * &Polynomial::var(&r, 1).pow(2);
        let x = from_invariant_function(&vars, &f).unwrap();
        let charts = blowup_charts(&x, &SubtorusBasis::full(1)).unwrap();
        let chart_x = charts.iter().find(|c| c.center == "x").unwrap();
        let rep = leaf_report(&chart_x.cdga, true, 7).unwrap();
        assert_eq!(rep.vdim, 0);
        assert_eq!(rep.e_ranks, Some((1, 1)));
        assert!(rep.dagger);
        assert!(!rep.quasi_smooth);
    }

    #[test]
    fn smooth_surface_chart() {
        let vars = vec![
            GradedVariable::new("xi", 0, Weight(vec![1])),
            GradedVariable::new("v", 0, Weight(vec![-2])),
        ];
        let r = GradedCdga::ring_of(&vars);
        let x = GradedCdga::new(1, vars, vec![], vec![]).with_excluded(Excluded::vanishing_of(Ideal::of_vars(&r, &[1])));
        let rep = obstruction_report(&x, 1).unwrap();
        assert_eq!(rep.vdim, 1);
        assert!(rep.quasi_smooth && rep.dm);
        assert_eq!(rep.e_ranks, Some((1, 0)));
    }
}
