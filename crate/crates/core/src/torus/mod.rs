//! Stabilizer-dimension stratification, the maximal-stabilizer locus and GIT
//! saturation ideals for diagonal torus actions.
//!
//! For a diagonal action the identity component of the stabilizer of a point
//! only depends on which coordinates are nonzero there: it is the common
//! kernel of the weights of those coordinates. Strata are therefore indexed by
//! supports.

mod saturation;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Ideal, Polynomial};
use crate::cdga::{classical_truncation, fixed_locus, Excluded, GradedCdga, SubtorusBasis};
use crate::error::{Error, Result};
use crate::linalg;

pub use saturation::{saturation_ideal, saturation_ideal_partial, SaturationIdeal, DEFAULT_DEGREE_CAP};

pub const DEFAULT_VARIABLE_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    /// Ring variables allowed to be nonzero.
    pub support: Vec<String>,
    pub stabilizer_dim: usize,
    pub nonempty: bool,
    /// Identity component of the stabilizer along the stratum.
    pub stabilizer: SubtorusBasis,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    pub strata: Vec<Stratum>,
    pub max_dim: usize,
    pub maximal_subtorus: SubtorusBasis,
    /// Every distinct subtorus realizing `max_dim`, canonical and sorted.
    pub maximal_subtori: Vec<SubtorusBasis>,
}

/// Does the locus `V(ideal)` meet the torus-orbit stratum where exactly the
/// variables in `support` are nonzero, off the excluded locus?
fn stratum_meets(ideal: &Ideal, support_product: &Polynomial, excluded: &Excluded) -> bool {
    match excluded {
        Excluded::Everything => false,
        Excluded::Nothing => ideal.saturate(support_product).is_proper(),
        Excluded::Locus(e) => e
            .generators()
            .iter()
            .any(|g| ideal.saturate(&(support_product * g)).is_proper()),
    }
}

pub fn stabilizer_stratification(x: &GradedCdga, variable_cap: usize) -> Result<StabilizerReport> {
    let n = x.ring_vars().len();
    if n > variable_cap {
        return Err(Error::TooManyVariables { count: n, cap: variable_cap });
    }
    let k = x.torus_rank();
    let ring = x.ring();
    let truncation = classical_truncation(x);
    let weights = x.ring_weights();

    let strata: Vec<Stratum> = (0u32..(1u32 << n))
        .into_par_iter()
        .map(|mask| {
            let support: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let outside: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
            let rows: Vec<Vec<i64>> = support.iter().map(|&i| weights[i].0.clone()).collect();
            let rank = linalg::integer_rank(&rows);
            let stabilizer = SubtorusBasis::new(k, linalg::integer_kernel(&rows, k)).expect("kernel basis is independent");
            let ideal = truncation.sum(&Ideal::of_vars(ring, &outside));
            let product = support
                .iter()
                .fold(Polynomial::one(ring), |acc, &i| &acc * &Polynomial::var(ring, i));
            Stratum {
                support: support.iter().map(|&i| ring.name(i).to_string()).collect(),
                stabilizer_dim: k - rank,
                nonempty: stratum_meets(&ideal, &product, x.excluded()),
                stabilizer,
            }
        })
        .collect();

    let max_dim = strata
        .iter()
        .filter(|s| s.nonempty)
        .map(|s| s.stabilizer_dim)
        .max()
        .unwrap_or(0);
    let mut maximal_subtori: Vec<SubtorusBasis> = if max_dim == 0 {
        Vec::new()
    } else {
        strata
            .iter()
            .filter(|s| s.nonempty && s.stabilizer_dim == max_dim)
            .map(|s| s.stabilizer.canonical())
            .collect()
    };
    maximal_subtori.sort_by(|a, b| a.vectors().cmp(b.vectors()));
    maximal_subtori.dedup();
    let maximal_subtorus = maximal_subtori.first().cloned().unwrap_or_else(SubtorusBasis::trivial);
    Ok(StabilizerReport {
        strata,
        max_dim,
        maximal_subtorus,
        maximal_subtori,
    })
}

/// The maximal-stabilizer locus: the derived fixed locus of the maximal
/// stabilizing subtorus (the first one when several exist), with that
/// subtorus.
pub fn xmax(x: &GradedCdga, variable_cap: usize) -> Result<(GradedCdga, SubtorusBasis)> {
    let report = stabilizer_stratification(x, variable_cap)?;
    if report.max_dim == 0 {
        return Err(Error::NoPositiveDimensionalStabilizer);
    }
    let h = report.maximal_subtorus;
    Ok((fixed_locus(x, &h)?, h))
}

/// Ring indices of the variables moved by `h`.
pub fn moving_indices(x: &GradedCdga, h: &SubtorusBasis) -> Vec<usize> {
    (0..x.ring_vars().len())
        .filter(|&i| !h.fixes(&x.ring_vars()[i].weight))
        .collect()
}
