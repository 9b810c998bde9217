use crate::cdga::{GradedCdga, SubtorusBasis};
use crate::torus::moving_indices;

/// Presentation-level quasi-smoothness: no degree-2 generators.
pub fn quasi_smooth_check(x: &GradedCdga) -> bool {
    x.gens2().is_empty()
}

/// Property (†) at the presentation level: every degree-2 generator moved by
/// `h` has a differential vanishing once the `h`-moving ring variables are set
/// to zero.
pub fn dagger_check(x: &GradedCdga, h: &SubtorusBasis) -> bool {
    let moving = moving_indices(x, h);
    x.gens2()
        .iter()
        .filter(|e| !h.fixes(&e.var.weight))
        .all(|e| e.differential.values().all(|c| c.kill_vars(&moving).is_zero()))
}
